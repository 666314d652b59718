from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from depbits.config import Encoding


@dataclass(frozen=True)
class CoverageReport:
    """Encode-then-decode measurements for one (treebank, encoding) pair.

    Reports built from disjoint parts of a treebank combine with
    :meth:`merge`, which sums counters and unions label sets.
    """

    treebank: str
    encoding: Encoding
    labels: frozenset[str] = frozenset()
    combined: frozenset[tuple[str, str]] = frozenset()
    sentences: int = 0
    words: int = 0
    skipped: int = 0
    recovered_words: int = 0
    recovered_trees: int = 0
    repaired_sentences: int = 0
    repaired_words: int = 0
    repair_counts: Mapping[str, int] = field(default_factory=dict)

    @property
    def label_inventory(self) -> int:
        return len(self.labels)

    @property
    def combined_inventory(self) -> int:
        return len(self.combined)

    @property
    def arc_coverage(self) -> float:
        return self.recovered_words / self.words if self.words else 1.0

    @property
    def tree_coverage(self) -> float:
        return self.recovered_trees / self.sentences if self.sentences else 1.0

    @property
    def dropped_arcs(self) -> int:
        return self.repair_counts.get("dropped_arc", 0)

    def merge(self, other: CoverageReport) -> CoverageReport:
        counts = Counter(self.repair_counts)
        counts.update(other.repair_counts)
        return CoverageReport(
            treebank=self.treebank or other.treebank,
            encoding=self.encoding,
            labels=self.labels | other.labels,
            combined=self.combined | other.combined,
            sentences=self.sentences + other.sentences,
            words=self.words + other.words,
            skipped=self.skipped + other.skipped,
            recovered_words=self.recovered_words + other.recovered_words,
            recovered_trees=self.recovered_trees + other.recovered_trees,
            repaired_sentences=self.repaired_sentences + other.repaired_sentences,
            repaired_words=self.repaired_words + other.repaired_words,
            repair_counts=dict(sorted(counts.items())),
        )


@dataclass(frozen=True)
class TreebankProfile:
    """Structural statistics of a treebank (projectivity, planarity, arc shape)."""

    treebank: str
    sentences: int = 0
    words: int = 0
    projective: int = 0
    planar: int = 0
    right_arcs: int = 0
    dependency_distance: int = 0
    non_root_arcs: int = 0

    @property
    def projective_ratio(self) -> float:
        return self.projective / self.sentences if self.sentences else 0.0

    @property
    def planar_ratio(self) -> float:
        return self.planar / self.sentences if self.sentences else 0.0

    @property
    def right_arc_ratio(self) -> float:
        return self.right_arcs / self.words if self.words else 0.0

    @property
    def mean_distance(self) -> float:
        return self.dependency_distance / self.non_root_arcs if self.non_root_arcs else 0.0

from __future__ import annotations

from dataclasses import dataclass, field

from depbits.encoding.labels import Label
from depbits.tree.models import DepTree


class ConlluFormatError(ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


class LabelFileError(ValueError):
    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
        self.message = message


@dataclass(frozen=True)
class Sentence:
    tree: DepTree
    comments: tuple[str, ...] = ()
    sent_id: str | None = None

    @property
    def n(self) -> int:
        return self.tree.n


@dataclass(frozen=True)
class SkippedSentence:
    line_no: int
    reason: str


@dataclass(frozen=True)
class Treebank:
    sentences: tuple[Sentence, ...] = ()
    skipped: tuple[SkippedSentence, ...] = ()
    name: str = ""

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    @property
    def trees(self) -> list[DepTree]:
        return [s.tree for s in self.sentences]

    @classmethod
    def from_trees(cls, trees: list[DepTree], name: str = "") -> Treebank:
        return cls(sentences=tuple(Sentence(t) for t in trees), name=name)


@dataclass(frozen=True)
class LabeledSentence:
    """One sentence of a label file: forms, syntactic labels and deprels."""

    forms: tuple[str, ...]
    labels: tuple[Label, ...]
    deprels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.deprels:
            object.__setattr__(self, "deprels", ("",) * len(self.labels))
        if not len(self.forms) == len(self.labels) == len(self.deprels):
            raise ValueError(
                f"ragged labeled sentence: {len(self.forms)} forms, "
                f"{len(self.labels)} labels, {len(self.deprels)} deprels"
            )

    def __len__(self) -> int:
        return len(self.labels)

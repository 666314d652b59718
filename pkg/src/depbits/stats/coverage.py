from __future__ import annotations

import logging
from functools import reduce

from depbits.config import Encoding, OutermostScope
from depbits.encoding.codec import decode_raw, encode
from depbits.repair.heuristics import repair
from depbits.stats.models import CoverageReport
from depbits.tree.models import DepTree, InvalidForestError, InvalidTreeError
from depbits.treebank.models import Treebank

log = logging.getLogger("depbits")


def measure_tree(
    tree: DepTree,
    encoding: Encoding,
    outermost: OutermostScope = "plane",
    treebank: str = "",
) -> CoverageReport:
    """Round-trip one gold tree and count what survives.

    A word is recovered when the raw decode gives it its gold head and
    repair leaves that head alone; headless and repaired words are misses.
    """
    labels, enc_log = encode(tree, encoding, outermost)
    raw = decode_raw(labels, encoding, outermost)
    final, fixes = repair(raw.heads, raw.n)
    recovered = sum(
        1
        for i, gold in enumerate(tree.heads, start=1)
        if raw.heads.get(i) == gold and final.head_of(i) == gold
    )
    decode_log = raw.log + fixes
    texts = [label.to_bits() for label in labels]
    return CoverageReport(
        treebank=treebank,
        encoding=encoding,
        labels=frozenset(texts),
        combined=frozenset(zip(texts, tree.deprels)),
        sentences=1,
        words=tree.n,
        recovered_words=recovered,
        recovered_trees=int(recovered == tree.n),
        repaired_sentences=int(bool(decode_log)),
        repaired_words=len(fixes.words_changed()),
        repair_counts=dict((enc_log + decode_log).counts()),
    )


def measure(
    tb: Treebank,
    encoding: Encoding,
    outermost: OutermostScope = "plane",
) -> CoverageReport:
    """Coverage of one encoding over a treebank.

    Sentences that are not single-root trees are skipped and counted,
    on top of those the reader already skipped.
    """
    empty = CoverageReport(treebank=tb.name, encoding=encoding, skipped=len(tb.skipped))
    parts: list[CoverageReport] = []
    for sent in tb.sentences:
        try:
            sent.tree.validate_tree()
        except (InvalidForestError, InvalidTreeError) as exc:
            log.warning("Skipping sentence %s: %s", sent.sent_id or "?", exc)
            parts.append(CoverageReport(treebank=tb.name, encoding=encoding, skipped=1))
            continue
        parts.append(measure_tree(sent.tree, encoding, outermost, tb.name))
    report = reduce(CoverageReport.merge, parts, empty)
    log.info(
        "%s %s: L=%d, arc coverage %.4f, tree coverage %.4f over %d sentences",
        tb.name or "<treebank>", encoding, report.label_inventory,
        report.arc_coverage, report.tree_coverage, report.sentences,
    )
    return report

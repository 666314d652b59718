from __future__ import annotations

import logging
from typing import Sequence

from depbits.config import RepairOptions
from depbits.encoding.labels import Label4
from depbits.encoding.passes import PassResult, RawDecode, stack_scan
from depbits.repair.heuristics import repair
from depbits.repair.models import RepairLog
from depbits.tree.models import DepTree
from depbits.tree.structure import dependents

log = logging.getLogger("depbits")


def encode4(tree: DepTree) -> list[Label4]:
    """Label every word of a forest with its 4 bits.

    Total on valid forests; projective trees (and, more generally, forests
    whose same-direction arcs do not cross) decode back exactly.
    """
    tree.validate_forest()
    deps = dependents(tree)
    labels: list[Label4] = []
    for i, h in enumerate(tree.heads, start=1):
        siblings = deps[h]
        right = h < i
        # deps[h] is in word order: the outermost right dependent is the last
        # one, the outermost left dependent the first.
        outermost = siblings[-1] == i if right else siblings[0] == i
        own = deps[i]
        labels.append(
            Label4(
                b0=right,
                b1=outermost,
                b2=bool(own) and own[0] < i,
                b3=bool(own) and own[-1] > i,
            )
        )
    return labels


def decode_right_arcs(labels: Sequence[Label4]) -> PassResult:
    """Left-to-right scan; the stack starts with the dummy root."""
    return stack_scan(
        range(1, len(labels) + 1),
        incoming=lambda i: 0 if labels[i - 1].b0 else None,
        closes=lambda i: labels[i - 1].b1,
        pushes=lambda i: (0,) if labels[i - 1].b3 else (),
        initial={0: [0]},
        name="right pass",
    )


def decode_left_arcs(labels: Sequence[Label4]) -> PassResult:
    """Mirror of :func:`decode_right_arcs`: right-to-left, empty initial stack."""
    return stack_scan(
        range(len(labels), 0, -1),
        incoming=lambda i: None if labels[i - 1].b0 else 0,
        closes=lambda i: labels[i - 1].b1,
        pushes=lambda i: (0,) if labels[i - 1].b2 else (),
        initial={0: []},
        name="left pass",
    )


def decode4_raw(labels: Sequence[Label4]) -> RawDecode:
    """Both passes, unioned; no repair.

    A ``>`` word is only linked by the right pass and a ``<`` word only by
    the left one, so every word gets at most one head.
    """
    right = decode_right_arcs(labels)
    left = decode_left_arcs(labels)
    return RawDecode(
        n=len(labels),
        heads={**right.heads, **left.heads},
        log=RepairLog(right.events + left.events),
        stack_ops=right.pushes + right.pops + left.pushes + left.pops,
    )


def decode4(
    labels: Sequence[Label4],
    options: RepairOptions | None = None,
    *,
    deprels: Sequence[str] = (),
    forms: Sequence[str] = (),
) -> tuple[DepTree, RepairLog]:
    """Decode a 4-bit label sequence into a valid forest.

    Never fails: skipped links, leftover stack nodes and every repair step
    are reported in the returned log.
    """
    raw = decode4_raw(labels)
    tree, fixes = repair(raw.heads, raw.n, options, deprels=deprels, forms=forms)
    return tree, raw.log + fixes

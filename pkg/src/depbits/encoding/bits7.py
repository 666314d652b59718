from __future__ import annotations

import logging
from collections import defaultdict
from typing import Sequence

from depbits.config import OutermostScope, RepairOptions
from depbits.encoding.labels import Label7
from depbits.encoding.passes import RawDecode, stack_scan
from depbits.encoding.planes import assign_planes
from depbits.repair.heuristics import repair
from depbits.repair.models import RepairEvent, RepairLog
from depbits.tree.models import Arc, DepTree

log = logging.getLogger("depbits")

# Bits given to a word whose incoming arc could not be put on either plane.
_DROPPED = dict(b0=True, b1=False, b2=False)


def encode7_with_log(
    tree: DepTree, outermost: OutermostScope = "plane"
) -> tuple[list[Label7], RepairLog]:
    """Label every word with its 7 bits; also report arcs left without a plane.

    ``outermost="plane"`` marks ``*`` on the outermost same-side dependent
    among the parent's dependents on the same plane, ``"side"`` among all
    of them regardless of plane.  Only arcs that received a plane count.
    """
    assignment = assign_planes(tree)
    planes: dict[int, int | None] = {
        i: assignment.plane[Arc(h, i)] for i, h in enumerate(tree.heads, start=1)
    }

    groups: dict[tuple, list[int]] = defaultdict(list)
    children: dict[int, set[tuple[bool, int]]] = defaultdict(set)
    for i, h in enumerate(tree.heads, start=1):
        p = planes[i]
        if p is None:
            continue
        right = h < i
        key = (h, right, p) if outermost == "plane" else (h, right)
        groups[key].append(i)
        children[h].add((right, p))

    labels: list[Label7] = []
    events: list[RepairEvent] = []
    for i, h in enumerate(tree.heads, start=1):
        own = children[i]
        child_bits = dict(
            b3=(False, 0) in own,
            b4=(True, 0) in own,
            b5=(False, 1) in own,
            b6=(True, 1) in own,
        )
        p = planes[i]
        if p is None:
            events.append(RepairEvent("dropped_arc", i, f"arc {h}->{i} has no plane"))
            labels.append(Label7(**_DROPPED, **child_bits))
            continue
        right = h < i
        siblings = groups[(h, right, p) if outermost == "plane" else (h, right)]
        is_outer = siblings[-1] == i if right else siblings[0] == i
        labels.append(Label7(b0=right, b1=p == 1, b2=is_outer, **child_bits))

    if events:
        log.debug("Dropped %d arc(s) that fit on neither plane", len(events))
    return labels, RepairLog(tuple(events))


def encode7(tree: DepTree, outermost: OutermostScope = "plane") -> list[Label7]:
    """7-bit labels of a forest; arcs without a plane are dropped (see :func:`encode7_with_log`)."""
    labels, _ = encode7_with_log(tree, outermost)
    return labels


def decode7_raw(labels: Sequence[Label7], outermost: OutermostScope = "plane") -> RawDecode:
    """The four stack passes (two planes x two directions), unioned; no repair.

    Both planes of one direction share a scan, each plane with its own
    stack.  Both right stacks start with the dummy root.
    """
    n = len(labels)
    shared = outermost == "side"
    right = stack_scan(
        range(1, n + 1),
        incoming=lambda i: labels[i - 1].plane if labels[i - 1].b0 else None,
        closes=lambda i: labels[i - 1].b2,
        pushes=lambda i: [q for q in (0, 1) if labels[i - 1].has_right(q)],
        initial={0: [0], 1: [0]},
        name="right passes",
        shared_close=shared,
    )
    left = stack_scan(
        range(n, 0, -1),
        incoming=lambda i: None if labels[i - 1].b0 else labels[i - 1].plane,
        closes=lambda i: labels[i - 1].b2,
        pushes=lambda i: [q for q in (0, 1) if labels[i - 1].has_left(q)],
        initial={0: [], 1: []},
        name="left passes",
        shared_close=shared,
    )
    return RawDecode(
        n=n,
        heads={**right.heads, **left.heads},
        log=RepairLog(right.events + left.events),
        stack_ops=right.pushes + right.pops + left.pushes + left.pops,
    )


def decode7(
    labels: Sequence[Label7],
    options: RepairOptions | None = None,
    *,
    outermost: OutermostScope = "plane",
    deprels: Sequence[str] = (),
    forms: Sequence[str] = (),
) -> tuple[DepTree, RepairLog]:
    """Decode a 7-bit label sequence into a valid forest; never fails."""
    raw = decode7_raw(labels, outermost)
    tree, fixes = repair(raw.heads, raw.n, options, deprels=deprels, forms=forms)
    return tree, raw.log + fixes

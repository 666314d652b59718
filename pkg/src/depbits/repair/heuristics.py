from __future__ import annotations

import logging
from typing import Mapping, Sequence

from depbits.config import RepairOptions
from depbits.repair.models import RepairEvent, RepairLog
from depbits.tree.models import DepTree, find_cycle

log = logging.getLogger("depbits")


def repair(
    raw_heads: Mapping[int, int],
    n: int,
    options: RepairOptions | None = None,
    *,
    deprels: Sequence[str] = (),
    forms: Sequence[str] = (),
) -> tuple[DepTree, RepairLog]:
    """Turn a partial head map into a valid forest (or single-root tree).

    Steps, in this order:

    1. Headless words, in index order, attach to 0 while no root exists,
       otherwise to their left neighbour.
    2. While the head relation has a cycle, its smallest word is moved to 0
       if no root exists, otherwise to its left neighbour.
    3. With ``enforce_single_root``, every root after the first is attached
       to the first.

    Words whose raw head is out of range or a self-loop count as headless.
    """
    options = options or RepairOptions()
    events: list[RepairEvent] = []
    heads = [-1] * n
    discarded: dict[int, int] = {}

    for i in range(1, n + 1):
        h = raw_heads.get(i)
        if h is None:
            continue
        if not 0 <= h <= n or h == i:
            discarded[i] = h
            continue
        heads[i - 1] = h

    has_root = 0 in heads
    for i in range(1, n + 1):
        if heads[i - 1] != -1:
            continue
        target = i - 1 if has_root else 0
        heads[i - 1] = target
        has_root = has_root or target == 0
        detail = f"attached to {target}"
        if i in discarded:
            detail = f"invalid head {discarded[i]} discarded; {detail}"
        events.append(RepairEvent("attach_headless", i, detail))

    while (cycle := find_cycle(heads)) is not None:
        victim = min(cycle)
        has_root = 0 in heads
        target = victim - 1 if has_root else 0
        heads[victim - 1] = target
        events.append(
            RepairEvent("cycle_break", victim, f"cycle {list(cycle)}; reattached to {target}")
        )

    if options.enforce_single_root:
        roots = [i for i, h in enumerate(heads, start=1) if h == 0]
        for r in roots[1:]:
            heads[r - 1] = roots[0]
            events.append(RepairEvent("extra_root_reattach", r, f"attached to root {roots[0]}"))

    if events:
        log.debug("Repaired sentence of %d words: %d interventions", n, len(events))
    tree = DepTree.from_heads(heads, deprels=deprels, forms=forms)
    return tree, RepairLog(tuple(events))


def repair_tree(tree: DepTree, options: RepairOptions | None = None) -> tuple[DepTree, RepairLog]:
    """Run :func:`repair` on a complete tree (idempotence checks, re-validation)."""
    raw = {i: h for i, h in enumerate(tree.heads, start=1)}
    return repair(raw, tree.n, options, deprels=tree.deprels, forms=tree.forms)

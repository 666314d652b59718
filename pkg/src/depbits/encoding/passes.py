from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from depbits.repair.models import RepairEvent, RepairLog
from depbits.tree.models import Arc


@dataclass(frozen=True)
class PassResult:
    """Arcs found by one decoding scan, plus its anomalies.

    ``heads`` maps dependent -> head; ``pushes``/``pops`` count stack
    operations.
    """

    heads: Mapping[int, int]
    events: tuple[RepairEvent, ...] = ()
    pushes: int = 0
    pops: int = 0

    @property
    def arcs(self) -> frozenset[Arc]:
        return frozenset(Arc(h, d) for d, h in self.heads.items())


@dataclass(frozen=True)
class RawDecode:
    """Union of the passes of one codec, before any repair."""

    n: int
    heads: Mapping[int, int]
    log: RepairLog = field(default_factory=RepairLog)
    stack_ops: int = 0


def stack_scan(
    order: Iterable[int],
    incoming: Callable[[int], int | None],
    closes: Callable[[int], bool],
    pushes: Callable[[int], Iterable[int]],
    initial: Mapping[int, Sequence[int]],
    *,
    name: str,
    shared_close: bool = False,
) -> PassResult:
    """Run one direction of the stack decoder over one or more planes.

    For each word *i* in *order*: if ``incoming(i)`` names a plane *p*,
    the top of stack *p* becomes the head of *i*, and is popped when
    ``closes(i)``; then *i* is pushed on every plane in ``pushes(i)``.
    The arc step precedes the push step, as in the right-arc algorithm.

    With *shared_close*, a popped head is closed on all planes of this
    direction and dropped from the other stacks once it surfaces.
    """
    stacks = {p: list(s) for p, s in initial.items()}
    heads: dict[int, int] = {}
    events: list[RepairEvent] = []
    closed: set[int] = set()
    n_push = n_pop = 0

    for i in order:
        p = incoming(i)
        if p is not None:
            stack = stacks[p]
            while shared_close and stack and stack[-1] in closed:
                stack.pop()
                n_pop += 1
            if not stack:
                events.append(RepairEvent("empty_stack_skip", i, f"{name}: plane {p} stack empty"))
            else:
                top = stack[-1]
                heads[i] = top
                if closes(i):
                    stack.pop()
                    n_pop += 1
                    if shared_close:
                        closed.add(top)
        for q in pushes(i):
            stacks[q].append(i)
            n_push += 1

    for p, stack in stacks.items():
        for node in stack:
            if node != 0 and node not in closed:
                events.append(
                    RepairEvent("leftover_stack", node, f"{name}: left on plane {p} stack")
                )

    return PassResult(heads=heads, events=tuple(events), pushes=n_push, pops=n_pop)

from __future__ import annotations

import logging
from bisect import bisect_left, bisect_right
from collections import deque
from dataclasses import dataclass
from typing import Mapping

import networkx as nx

from depbits.tree.models import Arc, DepTree
from depbits.tree.structure import arcs_of

log = logging.getLogger("depbits")

# Nodes are the arcs of a tree (dummy-root arcs included), edges join crossing arcs.
CrossingsGraph = nx.Graph

PLANES = (0, 1)


@dataclass(frozen=True)
class PlaneAssignment:
    """Plane (0, 1 or None for unassigned) per arc, plus the final restriction state."""

    plane: Mapping[Arc, int | None]
    allowed: Mapping[Arc, frozenset[int]]

    def plane_of(self, arc: Arc) -> int | None:
        return self.plane[arc]

    @property
    def unassigned(self) -> list[Arc]:
        return [a for a, p in self.plane.items() if p is None]

    @property
    def is_complete(self) -> bool:
        return all(p is not None for p in self.plane.values())


def crossings_graph(tree: DepTree) -> CrossingsGraph:
    """Graph over the arcs of *tree* with an edge per crossing pair.

    Arcs are swept by left endpoint; only arcs starting strictly inside a
    span are compared with it, so short-arc trees stay near linear.
    """
    tree.validate_forest()
    g = nx.Graph()
    g.add_nodes_from(arcs_of(tree))
    arcs = sorted(g.nodes, key=lambda a: a.span)
    starts = [a.span[0] for a in arcs]
    for k, a in enumerate(arcs):
        lo, hi = a.span
        for b in arcs[bisect_right(starts, lo, k) : bisect_left(starts, hi)]:
            if b.span[1] > hi:
                g.add_edge(a, b)
    return g


def assign_planes(tree: DepTree) -> PlaneAssignment:
    """Second-plane-averse assignment by restriction propagation.

    Arcs are visited by right endpoint, shorter first on ties.  Each takes
    plane 0 if still allowed, else plane 1, else stays unassigned.  After
    assigning *a* to *p*, the arcs crossing *a* lose *p*, the arcs crossing
    those lose the other plane, and so on until no new (arc, plane) pair is
    reached.  Restrictions reaching an already assigned arc are recorded
    but do not move it.
    """
    graph = crossings_graph(tree)
    allowed: dict[Arc, set[int]] = {a: set(PLANES) for a in graph.nodes}
    plane: dict[Arc, int | None] = {}

    for arc in sorted(graph.nodes, key=lambda a: (a.span[1], a.length)):
        choice = next((p for p in PLANES if p in allowed[arc]), None)
        plane[arc] = choice
        if choice is None:
            log.debug("Arc %s: both planes forbidden, left unassigned", arc)
            continue
        _propagate(graph, arc, choice, allowed)

    return PlaneAssignment(
        plane={a: plane[a] for a in arcs_of(tree)},
        allowed={a: frozenset(s) for a, s in allowed.items()},
    )


def _propagate(graph: CrossingsGraph, arc: Arc, p: int, allowed: dict[Arc, set[int]]) -> None:
    queue: deque[tuple[Arc, int]] = deque((nb, p) for nb in graph.neighbors(arc))
    seen: set[tuple[Arc, int]] = set(queue)
    while queue:
        node, forbidden = queue.popleft()
        allowed[node].discard(forbidden)
        for nb in graph.neighbors(node):
            state = (nb, 1 - forbidden)
            if state not in seen:
                seen.add(state)
                queue.append(state)

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product

from depbits.encoding.planes import assign_planes
from depbits.tree.models import DepTree
from depbits.tree.structure import arcs_of, cross

log = logging.getLogger("depbits")


def brute_two_plane(tree: DepTree) -> bool:
    """Exhaustive search for a two-plane split where same-direction,
    same-plane arcs never cross (dummy-root arcs included).

    Only arcs involved in a same-direction crossing are enumerated; the
    rest can sit on either plane.
    """
    tree.validate_forest()
    arcs = arcs_of(tree)
    conflicts = [
        (a, b) for a, b in combinations(arcs, 2) if a.is_right == b.is_right and cross(a, b)
    ]
    if not conflicts:
        return True
    involved = sorted({a for pair in conflicts for a in pair})
    for planes in product((0, 1), repeat=len(involved)):
        chosen = dict(zip(involved, planes))
        if all(chosen[a] != chosen[b] for a, b in conflicts):
            return True
    return False


def planes_assigned(tree: DepTree) -> bool:
    """True iff the greedy plane assignment puts every arc on a plane."""
    return assign_planes(tree).is_complete


@dataclass(frozen=True)
class PlaneGap:
    """Trees a brute-force split can encode but the greedy assignment cannot."""

    n: int
    two_plane: int
    greedy_complete: int
    instances: tuple[tuple[int, ...], ...]

    @property
    def rate(self) -> float:
        return len(self.instances) / self.two_plane if self.two_plane else 0.0


def plane_gap(trees) -> PlaneGap:
    """Compare :func:`brute_two_plane` with the greedy assignment on *trees*."""
    n = 0
    two_plane = complete = 0
    gaps: list[tuple[int, ...]] = []
    for tree in trees:
        n = max(n, tree.n)
        greedy = planes_assigned(tree)
        complete += greedy
        if brute_two_plane(tree):
            two_plane += 1
            if not greedy:
                gaps.append(tree.heads)
                log.info("Greedy plane assignment incomplete on heads=%s", list(tree.heads))
    return PlaneGap(n=n, two_plane=two_plane, greedy_complete=complete, instances=tuple(gaps))

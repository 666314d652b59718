from __future__ import annotations

from itertools import combinations

from depbits.tree.models import Arc, DepTree


def arcs_of(tree: DepTree) -> list[Arc]:
    """All arcs of *tree* in dependent order, root arcs as ``(0, r)``."""
    return [Arc(h, i) for i, h in enumerate(tree.heads, start=1)]


def cross(a: Arc, b: Arc) -> bool:
    """True iff the endpoint spans of *a* and *b* strictly interleave.

    Arcs sharing an endpoint never cross.
    """
    a_lo, a_hi = a.span
    b_lo, b_hi = b.span
    return a_lo < b_lo < a_hi < b_hi or b_lo < a_lo < b_hi < a_hi


def _any_crossing(arcs: list[Arc]) -> bool:
    return any(cross(a, b) for a, b in combinations(arcs, 2))


def is_projective(tree: DepTree) -> bool:
    """No two arcs cross, counting the dummy-root arc.

    A root covered by some arc is therefore non-projective.
    """
    tree.validate_tree()
    return not _any_crossing(arcs_of(tree))


def is_planar(tree: DepTree) -> bool:
    """No two arcs cross once the dummy-root arcs are left out (1-planarity)."""
    tree.validate_forest()
    return not _any_crossing([a for a in arcs_of(tree) if a.head != 0])


def covered_by_4bit(tree: DepTree) -> bool:
    """Same-direction arcs never cross (dummy-root arcs count as rightward).

    This is the class the 4-bit encoding reproduces without loss.
    """
    tree.validate_forest()
    arcs = arcs_of(tree)
    right = [a for a in arcs if a.is_right]
    left = [a for a in arcs if not a.is_right]
    return not _any_crossing(right) and not _any_crossing(left)


def dependents(tree: DepTree) -> list[list[int]]:
    """``dependents(t)[h]`` lists the dependents of node *h* (0..n) in word order."""
    deps: list[list[int]] = [[] for _ in range(tree.n + 1)]
    for i, h in enumerate(tree.heads, start=1):
        deps[h].append(i)
    return deps

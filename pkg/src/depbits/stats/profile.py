from __future__ import annotations

from depbits.stats.models import TreebankProfile
from depbits.tree.structure import arcs_of, is_planar, is_projective
from depbits.treebank.models import Treebank


def profile(tb: Treebank) -> TreebankProfile:
    """Projective and 1-planar tree shares, rightward arc share, mean arc length.

    Only single-root trees are profiled.  Root arcs count as rightward
    but are left out of the distance average.
    """
    sentences = words = projective = planar = right = distance = non_root = 0
    for tree in tb.trees:
        if not tree.is_tree():
            continue
        arcs = arcs_of(tree)
        sentences += 1
        words += tree.n
        projective += is_projective(tree)
        planar += is_planar(tree)
        right += sum(a.is_right for a in arcs)
        inner = [a for a in arcs if a.head != 0]
        distance += sum(a.length for a in inner)
        non_root += len(inner)
    return TreebankProfile(
        treebank=tb.name,
        sentences=sentences,
        words=words,
        projective=projective,
        planar=planar,
        right_arcs=right,
        dependency_distance=distance,
        non_root_arcs=non_root,
    )

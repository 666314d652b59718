from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Literal

from depbits.testkit.oracles import brute_two_plane, planes_assigned
from depbits.tree.models import DepTree, find_cycle
from depbits.tree.structure import covered_by_4bit, is_projective

Constraint = Literal[
    "all_single_root_trees",
    "projective",
    "covered_4bit",
    "covered_7bit",
    "planes_assigned",
]

DEFAULT_BOUND = 7

_FILTERS: dict[str, Callable[[DepTree], bool]] = {
    "all_single_root_trees": lambda t: True,
    "projective": is_projective,
    "covered_4bit": covered_by_4bit,
    "covered_7bit": brute_two_plane,
    "planes_assigned": planes_assigned,
}


class BoundExceededError(ValueError):
    pass


def enumerate_trees(
    n: int,
    constraint: Constraint = "all_single_root_trees",
    bound: int = DEFAULT_BOUND,
) -> Iterator[DepTree]:
    """Every single-root tree over *n* words satisfying *constraint*, lazily.

    Head vectors come out in lexicographic order, each exactly once.
    """
    if n > bound:
        raise BoundExceededError(f"n={n} exceeds the enumeration bound {bound}")
    return _trees(n, _FILTERS[constraint])


def _trees(n: int, keep: Callable[[DepTree], bool]) -> Iterator[DepTree]:
    if n < 1:
        return
    choices = [[h for h in range(n + 1) if h != i] for i in range(1, n + 1)]
    for heads in product(*choices):
        if heads.count(0) != 1 or find_cycle(heads) is not None:
            continue
        tree = DepTree(heads)
        if keep(tree):
            yield tree


@dataclass(frozen=True)
class TreeUniverse:
    n: int
    constraint: Constraint = "all_single_root_trees"
    bound: int = DEFAULT_BOUND

    def __iter__(self) -> Iterator[DepTree]:
        return enumerate_trees(self.n, self.constraint, self.bound)

    def head_vectors(self) -> set[tuple[int, ...]]:
        return {t.heads for t in self}

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence


class InvalidForestError(ValueError):
    """Head structure is not an acyclic forest over words 1..n."""


class InvalidTreeError(ValueError):
    """Head structure is a forest but not a single-root tree."""


def find_cycle(heads: Sequence[int]) -> tuple[int, ...] | None:
    """Return the words of one cycle in a head vector, or None.

    ``heads[i - 1]`` is the head of word *i*; a head of 0 ends a chain.
    """
    n = len(heads)
    state = [0] * (n + 1)  # 0 unseen, 1 on current path, 2 done
    for start in range(1, n + 1):
        path: list[int] = []
        node = start
        while node != 0 and state[node] == 0:
            state[node] = 1
            path.append(node)
            node = heads[node - 1]
        if node != 0 and state[node] == 1:
            return tuple(path[path.index(node):])
        for p in path:
            state[p] = 2
    return None


class Arc(NamedTuple):
    """A dependency ``head -> dep``; node 0 is the dummy root on the left."""

    head: int
    dep: int

    @property
    def is_right(self) -> bool:
        # Arcs from the dummy root are rightward as well.
        return self.head < self.dep

    @property
    def span(self) -> tuple[int, int]:
        return (min(self.head, self.dep), max(self.head, self.dep))

    @property
    def length(self) -> int:
        return abs(self.head - self.dep)


@dataclass(frozen=True)
class DepTree:
    """Dependency structure of one sentence.

    ``heads[i - 1]`` is the head of word *i* (words are 1-based, 0 is the
    dummy root).  ``deprels`` and ``forms`` default to empty strings and
    ride along untouched by the codecs.
    """

    heads: tuple[int, ...]
    deprels: tuple[str, ...] = field(default=())
    forms: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        n = len(self.heads)
        object.__setattr__(self, "heads", tuple(int(h) for h in self.heads))
        object.__setattr__(self, "deprels", tuple(self.deprels) or ("",) * n)
        object.__setattr__(self, "forms", tuple(self.forms) or ("",) * n)
        if len(self.deprels) != n or len(self.forms) != n:
            raise InvalidForestError(
                f"ragged sentence: {n} heads, {len(self.deprels)} deprels, {len(self.forms)} forms"
            )
        for i, h in enumerate(self.heads, start=1):
            if not 0 <= h <= n:
                raise InvalidForestError(f"word {i}: head {h} out of range 0..{n}")
            if h == i:
                raise InvalidForestError(f"word {i}: self-loop")

    @classmethod
    def from_heads(
        cls,
        heads: Sequence[int],
        deprels: Sequence[str] = (),
        forms: Sequence[str] = (),
    ) -> DepTree:
        return cls(tuple(heads), tuple(deprels), tuple(forms))

    @property
    def n(self) -> int:
        return len(self.heads)

    def head_of(self, i: int) -> int:
        return self.heads[i - 1]

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(i for i, h in enumerate(self.heads, start=1) if h == 0)

    def find_cycle(self) -> tuple[int, ...] | None:
        return find_cycle(self.heads)

    def validate_forest(self) -> DepTree:
        cycle = self.find_cycle()
        if cycle is not None:
            raise InvalidForestError(f"cycle through words {list(cycle)}")
        return self

    def validate_tree(self) -> DepTree:
        self.validate_forest()
        if self.n == 0:
            raise InvalidTreeError("empty sentence")
        roots = self.roots
        if len(roots) != 1:
            raise InvalidTreeError(f"expected exactly one root, found {len(roots)}: {list(roots)}")
        return self

    def is_forest(self) -> bool:
        return self.find_cycle() is None

    def is_tree(self) -> bool:
        return self.n > 0 and self.is_forest() and len(self.roots) == 1

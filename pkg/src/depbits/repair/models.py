from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

RepairKind = Literal[
    "empty_stack_skip",
    "leftover_stack",
    "dropped_arc",
    "attach_headless",
    "cycle_break",
    "extra_root_reattach",
]

REPAIR_KINDS: tuple[RepairKind, ...] = (
    "empty_stack_skip",
    "leftover_stack",
    "dropped_arc",
    "attach_headless",
    "cycle_break",
    "extra_root_reattach",
)

# Kinds that change a head in the repaired tree (the others only report).
HEAD_CHANGING_KINDS: frozenset[str] = frozenset(
    {"attach_headless", "cycle_break", "extra_root_reattach"}
)


@dataclass(frozen=True)
class RepairEvent:
    kind: RepairKind
    word: int
    detail: str = ""


@dataclass(frozen=True)
class RepairLog:
    events: tuple[RepairEvent, ...] = field(default=())

    def __bool__(self) -> bool:
        return bool(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def counts(self) -> Counter[str]:
        return Counter(e.kind for e in self.events)

    def count(self, kind: RepairKind) -> int:
        return sum(1 for e in self.events if e.kind == kind)

    def words_changed(self) -> frozenset[int]:
        """Words whose head was set by repair rather than by decoding."""
        return frozenset(e.word for e in self.events if e.kind in HEAD_CHANGING_KINDS)

    def __add__(self, other: RepairLog) -> RepairLog:
        return RepairLog(self.events + other.events)

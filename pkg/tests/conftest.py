"""Shared trees, label helpers and treebank builders for the test suite."""
from __future__ import annotations

import random
from typing import Sequence

import pytest

from depbits.encoding.labels import Label4, Label7
from depbits.tree.models import DepTree


# ---------------------------------------------------------------------------
# Reference sentences
# ---------------------------------------------------------------------------

# "A hearing is on the issue today": projective, single root.
HEARING_HEADS = (3, 3, 0, 6, 6, 3, 3)
HEARING_FORMS = ("A", "hearing", "is", "on", "the", "issue", "today")
HEARING_DEPRELS = ("det", "nsubj", "root", "case", "det", "obl", "obl:tmod")
HEARING_BITS4 = "0100 0000 1111 0100 0000 1010 1100"
HEARING_BITS7 = "0010000 0000000 1011100 0010000 0000000 1001000 1010000"

# Non-projective; the arc 2 -> 6 needs the second plane.
CROSSING_HEADS = (2, 5, 5, 5, 0, 2, 5)
CROSSING_BITS7 = "0010000 0011001 0000000 0000000 1011100 1110000 1010000"

# Same-direction crossing between 0 -> 3 and 1 -> 4; 1 -> 4 goes to plane 1.
SPLIT_PLANE_HEADS = (3, 1, 0, 1)
SPLIT_PLANE_BITS7 = "0010101 1010000 1011000 1110000"

# Arcs 0 -> 3, 1 -> 4 and 2 -> 5 cross pairwise: no two-plane split exists.
ODD_CYCLE_HEADS = (3, 3, 0, 1, 2)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def tree(*heads: int) -> DepTree:
    return DepTree(tuple(heads))


def labels4(text: str) -> list[Label4]:
    return [Label4.from_bits(b) for b in text.split()]


def labels7(text: str) -> list[Label7]:
    return [Label7.from_bits(b) for b in text.split()]


def bits(labels: Sequence[Label4 | Label7]) -> str:
    return " ".join(label.to_bits() for label in labels)


def random_tree(rng: random.Random, n: int) -> DepTree:
    """Uniform-ish random single-root tree: each word attaches to an earlier word of a shuffled order."""
    order = list(range(1, n + 1))
    rng.shuffle(order)
    heads = [0] * n
    for k, word in enumerate(order[1:], start=1):
        heads[word - 1] = rng.choice(order[:k])
    return DepTree(tuple(heads))


def conllu_sentence(
    heads: Sequence[int],
    forms: Sequence[str] | None = None,
    deprels: Sequence[str] | None = None,
    sent_id: str | None = None,
) -> str:
    """One CoNLL-U sentence block (with trailing blank line)."""
    forms = forms or [f"w{i}" for i in range(1, len(heads) + 1)]
    deprels = deprels or ["dep"] * len(heads)
    lines = [f"# sent_id = {sent_id}"] if sent_id else []
    for i, (h, form, rel) in enumerate(zip(heads, forms, deprels), start=1):
        lines.append("\t".join([str(i), form, "_", "_", "_", "_", str(h), rel, "_", "_"]))
    return "\n".join(lines) + "\n\n"


HEARING_CONLLU = conllu_sentence(HEARING_HEADS, HEARING_FORMS, HEARING_DEPRELS, sent_id="fig1")
CROSSING_CONLLU = conllu_sentence(CROSSING_HEADS, sent_id="fig2")


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def hearing() -> DepTree:
    return DepTree(HEARING_HEADS, HEARING_DEPRELS, HEARING_FORMS)


@pytest.fixture
def crossing() -> DepTree:
    return DepTree(CROSSING_HEADS)

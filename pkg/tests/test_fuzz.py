"""Random label sequences: decoding is total and its output survives CoNLL-U."""
import random

import pytest

from depbits.config import RepairOptions
from depbits.encoding.bits4 import decode4
from depbits.encoding.bits7 import decode7
from depbits.encoding.labels import all_labels4, all_labels7
from depbits.repair.heuristics import repair_tree
from depbits.treebank.conllu import parse_conllu, write_conllu

SINGLE_ROOT = RepairOptions(enforce_single_root=True)
SEQUENCES = 10_000


def _random_sequences(alphabet, seed):
    rng = random.Random(seed)
    for _ in range(SEQUENCES):
        yield [rng.choice(alphabet) for _ in range(rng.randint(1, 50))]


@pytest.mark.parametrize(
    "decoder,alphabet,seed",
    [
        (decode4, all_labels4(), 42),
        (decode7, all_labels7(), 43),
    ],
    ids=["4bit", "7bit"],
)
def test_random_sequences_decode_to_trees(decoder, alphabet, seed):
    trees = []
    for labels in _random_sequences(alphabet, seed):
        t, _ = decoder(labels, SINGLE_ROOT)
        assert t.n == len(labels)
        assert t.is_tree(), t.heads
        again, log = repair_tree(t, SINGLE_ROOT)
        assert again == t
        assert not log
        trees.append(t)

    tb = parse_conllu(write_conllu(trees), strict=True)
    assert [s.tree.heads for s in tb] == [t.heads for t in trees]


def test_seven_bit_side_scope_is_total():
    for labels in _random_sequences(all_labels7(), 44):
        t, _ = decode7(labels, SINGLE_ROOT, outermost="side")
        assert t.is_tree()

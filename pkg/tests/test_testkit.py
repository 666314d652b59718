import logging

import pytest

from conftest import CROSSING_HEADS, ODD_CYCLE_HEADS, SPLIT_PLANE_HEADS, tree
from depbits.testkit.oracles import brute_two_plane, plane_gap, planes_assigned
from depbits.testkit.universe import BoundExceededError, TreeUniverse, enumerate_trees


class TestEnumerate:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 9), (4, 64), (5, 625)])
    def test_counts_single_root_trees(self, n, count):
        trees = list(enumerate_trees(n))
        assert len(trees) == count
        assert len({t.heads for t in trees}) == count
        assert all(t.is_tree() for t in trees)

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7), (4, 30), (5, 143)])
    def test_counts_projective_trees(self, n, count):
        assert len(list(enumerate_trees(n, "projective"))) == count

    def test_lexicographic_order(self):
        heads = [t.heads for t in enumerate_trees(3)]
        assert heads == sorted(heads)

    def test_zero_words(self):
        assert list(enumerate_trees(0)) == []

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            enumerate_trees(8)
        with pytest.raises(BoundExceededError):
            list(TreeUniverse(4, bound=3))

    def test_universe(self):
        assert len(TreeUniverse(3, "covered_4bit").head_vectors()) == 8


class TestOracles:
    def test_brute_two_plane(self):
        assert brute_two_plane(tree(*CROSSING_HEADS))
        assert brute_two_plane(tree(*SPLIT_PLANE_HEADS))
        assert not brute_two_plane(tree(*ODD_CYCLE_HEADS))

    def test_opposite_direction_crossings_do_not_count(self):
        t = tree(0, 4, 1, 1)
        assert brute_two_plane(t)
        assert planes_assigned(t)

    def test_greedy_complete_implies_two_plane(self):
        for t in enumerate_trees(5):
            if planes_assigned(t):
                assert brute_two_plane(t), t.heads

    def test_plane_gap(self, caplog):
        with caplog.at_level(logging.INFO, logger="depbits"):
            gap = plane_gap(enumerate_trees(5))
        assert gap.n == 5
        assert gap.greedy_complete <= gap.two_plane <= 625
        assert 0.0 <= gap.rate <= 1.0
        for heads in gap.instances:
            t = tree(*heads)
            assert brute_two_plane(t)
            assert not planes_assigned(t)
        assert sum("Greedy plane assignment incomplete" in r.message for r in caplog.records) == len(gap.instances)


class TestConstraints:
    def test_small_projective_universes(self):
        assert TreeUniverse(1, "projective").head_vectors() == {(0,)}
        assert TreeUniverse(2, "projective").head_vectors() == {(0, 1), (2, 0)}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_classes_are_nested(self, n):
        projective = TreeUniverse(n, "projective").head_vectors()
        covered4 = TreeUniverse(n, "covered_4bit").head_vectors()
        covered7 = TreeUniverse(n, "covered_7bit").head_vectors()
        assigned = TreeUniverse(n, "planes_assigned").head_vectors()
        assert projective <= covered4 <= covered7
        assert projective <= assigned <= covered7

    def test_crossing_chain_is_two_plane(self):
        assert brute_two_plane(tree(0, 4, 1, 1, 3))

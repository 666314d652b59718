import json

import pytest

from conftest import HEARING_CONLLU, CROSSING_CONLLU, conllu_sentence, tree
from depbits.stats.coverage import measure, measure_tree
from depbits.stats.models import CoverageReport
from depbits.stats.profile import profile
from depbits.stats.report import MACRO_AVERAGE, format_coverage, report, report_profiles
from depbits.testkit.universe import enumerate_trees
from depbits.treebank.conllu import parse_conllu
from depbits.treebank.models import Treebank

MALFORMED = "1\tx\t_\n\n"


@pytest.fixture
def samples():
    text = HEARING_CONLLU + CROSSING_CONLLU + conllu_sentence([0, 0]) + MALFORMED
    return parse_conllu(text, name="samples")


class TestMeasure:
    def test_projective_tree_is_fully_covered(self, hearing):
        r = measure_tree(hearing, "4bit")
        assert r.recovered_words == 7
        assert r.recovered_trees == 1
        assert r.label_inventory == 5
        assert r.combined_inventory == 7
        assert r.repaired_sentences == 0

    def test_four_bit_on_the_samples(self, samples):
        r = measure(samples, "4bit")
        assert r.treebank == "samples"
        assert r.sentences == 2
        assert r.words == 14
        assert r.skipped == 2  # one malformed, one forest
        # The crossing tree keeps only words 3 and 4; repair breaks the 2 <-> 5 cycle.
        assert r.recovered_words == 9
        assert r.recovered_trees == 1
        assert r.arc_coverage == pytest.approx(9 / 14)
        assert r.tree_coverage == 0.5
        assert r.label_inventory == 6
        assert r.repaired_sentences == 1
        assert r.repaired_words == 2
        assert dict(r.repair_counts) == {"cycle_break": 2}

    def test_seven_bit_on_the_samples(self, samples):
        r = measure(samples, "7bit")
        assert r.arc_coverage == 1.0
        assert r.tree_coverage == 1.0
        assert r.dropped_arcs == 0

    def test_dropped_arcs_are_counted(self):
        r = measure_tree(tree(3, 3, 0, 1, 2), "7bit")
        assert r.dropped_arcs == 3
        assert r.recovered_words == 3
        assert r.recovered_trees == 0

    def test_merge_unions_labels(self):
        a = CoverageReport("t", "4bit", labels=frozenset({"1100"}), words=1, recovered_words=1)
        b = CoverageReport("", "4bit", labels=frozenset({"1100", "0100"}), words=2, recovered_words=1)
        m = a.merge(b)
        assert m.treebank == "t"
        assert m.label_inventory == 2
        assert m.arc_coverage == pytest.approx(2 / 3)

    def test_empty_treebank(self):
        r = measure(parse_conllu(""), "4bit")
        assert r.sentences == 0
        assert r.arc_coverage == 1.0


class TestProfile:
    def test_samples(self, samples):
        p = profile(samples)
        assert p.sentences == 2
        assert p.words == 14
        assert p.projective == 1
        assert p.planar == 1
        assert p.right_arc_ratio == pytest.approx(6 / 14)
        assert p.mean_distance == pytest.approx(26 / 12)

    def test_empty(self):
        p = profile(parse_conllu(""))
        assert p.projective_ratio == 0.0
        assert p.mean_distance == 0.0


class TestFormatCoverage:
    @pytest.mark.parametrize(
        "value,text",
        [(1.0, "100"), (0.99999, ">99.99"), (0.9975, "99.75"), (9 / 14, "64.29"), (0.0, "0.00")],
    )
    def test_convention(self, value, text):
        assert format_coverage(value) == text


class TestReport:
    def test_text_table(self, samples):
        rows = [measure(samples, "4bit"), measure(samples, "7bit")]
        lines = report(rows).splitlines()
        assert lines[0].split()[:5] == ["Treebank", "Encoding", "L", "C", "TreeC"]
        assert set(lines[1]) == {"-"}
        assert lines[2].split()[:4] == ["samples", "4bit", "6", "64.29"]
        seven = lines[3].split()
        assert seven[:2] == ["samples", "7bit"]
        assert seven[3] == "100"
        assert len(lines) == 4  # a single treebank gets no average row

    def test_tsv(self, samples):
        text = report([measure(samples, "4bit")], "tsv")
        header, row = text.splitlines()
        assert header.split("\t")[0] == "Treebank"
        assert row.split("\t")[:4] == ["samples", "4bit", "6", "64.29"]

    def test_json_carries_repair_counts(self, samples):
        [row] = json.loads(report([measure(samples, "4bit")], "json"))
        assert row["label_inventory"] == 6
        assert row["repair_counts"]["cycle_break"] == 2
        assert row["repair_counts"]["attach_headless"] == 0

    def test_macro_average_per_encoding(self, hearing):
        a = measure_tree(hearing, "4bit", treebank="a")
        b = measure_tree(tree(2, 5, 5, 5, 0, 2, 5), "4bit", treebank="b")
        rows = json.loads(report([a, b], "json"))
        assert [r["treebank"] for r in rows] == ["a", "b", MACRO_AVERAGE]
        avg = rows[-1]
        assert avg["encoding"] == "4bit"
        assert avg["arc_coverage"] == pytest.approx((1.0 + 2 / 7) / 2)
        assert set(avg["repair_counts"]) == set(rows[0]["repair_counts"])
        assert avg["repair_counts"]["cycle_break"] == pytest.approx(1.0)
        assert avg["repair_counts"]["attach_headless"] == 0.0

    def test_profiles(self, samples):
        lines = report_profiles([profile(samples)]).splitlines()
        assert lines[0].split()[:3] == ["Treebank", "Sents", "Words"]
        assert lines[2].split()[:5] == ["samples", "2", "14", "50.00", "50.00"]


class TestCoverageProperties:
    def test_seven_bit_never_covers_less_when_planes_are_assigned(self):
        for t in enumerate_trees(5, "planes_assigned"):
            four = measure_tree(t, "4bit")
            seven = measure_tree(t, "7bit")
            assert seven.recovered_words == t.n
            assert seven.recovered_words >= four.recovered_words

    def test_inventory_grows_monotonically(self):
        tb = parse_conllu(HEARING_CONLLU + CROSSING_CONLLU)
        sizes = []
        total = CoverageReport("", "7bit")
        for sent in tb:
            total = total.merge(measure_tree(sent.tree, "7bit"))
            sizes.append(total.label_inventory)
        assert sizes == sorted(sizes)

    def test_projective_treebank_needs_no_repair(self):
        trees = list(enumerate_trees(4, "projective"))
        r = measure(Treebank.from_trees(trees), "4bit")
        assert r.arc_coverage == 1.0
        assert r.tree_coverage == 1.0
        assert not r.repair_counts

"""End-to-end CLI tests: every command, every exit code, and byte-identical
determinism across repeated runs."""

import io
import os

import pytest

from covmatroid.cli import main

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def fx(name):
    return os.path.join(FIX, name)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestCommands:
    def test_axioms_partition(self):
        code, text = run("axioms", fx("pairs.txt"))
        assert code == 0
        assert text == "matroid\n"

    def test_axioms_counterexample(self):
        code, text = run("axioms", fx("example1.txt"))
        assert code == 0
        assert text == "violates I3: I1={b}, I2={a,c}\n"

    def test_independents(self):
        code, text = run("independents", fx("example1.txt"))
        assert code == 0
        assert text.splitlines() == [
            "∅", "{a}", "{b}", "{c}", "{a,b}", "{a,c}", "{b,c}",
        ]

    def test_circuits(self):
        code, text = run("circuits", fx("example1.txt"))
        assert code == 0
        assert text == "{a,b,c}\n"

    def test_bases(self):
        code, text = run("bases", fx("example1.txt"))
        assert code == 0
        assert text.splitlines() == ["{a,b}", "{a,c}", "{b,c}"]

    def test_rank(self):
        code, text = run("rank", fx("example1.txt"), "--set", "a,b,c")
        assert code == 0
        assert text == "rank({a,b,c}) = 2\n"

    def test_rank_empty_set(self):
        code, text = run("rank", fx("example1.txt"), "--set", "")
        assert code == 0
        assert text == "rank(∅) = 0\n"

    def test_closure(self):
        code, text = run("closure", fx("example1.txt"), "--set", "a,b")
        assert code == 0
        assert text == "closure({a,b}) = {a,b,c}\n"

    def test_dual(self):
        code, text = run("dual", fx("example1.txt"))
        assert code == 0
        assert text.splitlines() == ["{a}", "{b}", "{c}"]

    def test_approx_direct(self):
        code, text = run("approx", fx("example1.txt"), "--set", "a,b")
        assert code == 0
        assert text == "SL={a,b} SH={a,b,c}\n"

    def test_neighborhood(self):
        code, text = run("neighborhood", fx("example1.txt"), "--element", "b")
        assert code == 0
        assert text == "N(b) = {b}\n"

    def test_neighborhood_matroidal_agree(self):
        code, text = run(
            "neighborhood", fx("partition_abc.txt"), "--element", "a",
            "--matroidal",
        )
        assert code == 0
        assert text.splitlines() == [
            "N(a) = {a,b,c}",
            "matroidal N(a) = {a,b,c} AGREE",
        ]

    def test_approx_matroidal_agree(self):
        code, text = run(
            "approx", fx("free_abc.txt"), "--set", "a,b", "--matroidal"
        )
        assert code == 0
        assert "AGREE" in text and "finding" not in text

    def test_approx_matroidal_disagree_reports_findings(self):
        code, text = run(
            "approx", fx("example1.txt"), "--set", "a", "--matroidal"
        )
        assert code == 4
        lines = text.splitlines()
        assert lines[0].endswith("DISAGREE")
        assert any(line.startswith("finding: lower mismatch") for line in lines[1:])

    def test_classify_pairs(self):
        code, text = run("classify", fx("pairs.txt"))
        assert code == 0
        assert text.splitlines() == [
            "matroid: true",
            "2-circuit: true",
            "partition-circuit: true (witness: {a,b} {c,d})",
            "double-circuit: true",
            "identically-self-dual: true",
            "circuit sizes: [2, 2]",
        ]

    def test_classify_example1(self):
        code, text = run("classify", fx("example1.txt"))
        assert code == 0
        assert "matroid: true" in text
        assert "2-circuit: false" in text
        assert "double-circuit: false" in text

    def test_convert_family_to_covering(self):
        code, text = run("convert", fx("family3.txt"))
        assert code == 0
        assert text.splitlines() == [
            "format: 1",
            "kind: covering",
            "universe: a b c d e f",
            "block: a b c k=1",
            "block: a d e k=1",
            "block: b e f k=1",
        ]

    def test_convert_covering_to_family(self):
        code, text = run("convert", fx("pairs.txt"))
        assert code == 0
        assert text.splitlines() == [
            "format: 1",
            "kind: indexed_family",
            "universe: a b c d",
            "block: a b",
            "block: c d",
        ]

    def test_verify_modes_pass(self):
        for argv in (
            ["independents", fx("example1.txt"), "--verify"],
            ["circuits", fx("example1.txt"), "--verify"],
            ["bases", fx("family3.txt"), "--verify"],
            ["rank", fx("example1.txt"), "--set", "a,b", "--verify"],
            ["closure", fx("pairs.txt"), "--set", "a", "--verify"],
            ["dual", fx("example1.txt"), "--verify"],
        ):
            code, text = run(*argv)
            assert code == 0, argv
            assert "verify: OK" in text, argv


class TestExitCodes:
    def test_parse_error_is_1(self):
        code, _ = run("axioms", fx("bad_syntax.txt"))
        assert code == 1

    def test_missing_file_is_1(self):
        code, _ = run("axioms", fx("no_such_file.txt"))
        assert code == 1

    def test_size_limit_is_2(self):
        code, _ = run("independents", fx("big_universe.txt"))
        assert code == 2

    def test_precondition_is_3_for_convert(self):
        code, _ = run("convert", fx("partition_abc.txt"))
        assert code == 3

    def test_precondition_is_3_for_zero_capacity_matroidal(self):
        code, _ = run(
            "approx", fx("zero_cap.txt"), "--set", "a", "--matroidal"
        )
        assert code == 3

    def test_verify_mismatch_is_4(self):
        code, _ = run("approx", fx("example1.txt"), "--set", "a", "--matroidal")
        assert code == 4


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["independents", fx("family3.txt")],
            ["circuits", fx("family3.txt")],
            ["bases", fx("family3.txt")],
            ["dual", fx("family3.txt")],
            ["classify", fx("family3.txt")],
            ["convert", fx("family3.txt")],
            ["approx", fx("example1.txt"), "--set", "a", "--matroidal"],
        ],
    )
    def test_byte_identical_across_runs(self, argv):
        first = run(*argv)
        second = run(*argv)
        assert first == second

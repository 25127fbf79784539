import json
import re
import subprocess
import sys

import pytest

from partition_lab.cli import main, parse_partition
from partition_lab.errors import LiteralSyntaxError
from partition_lab.partition import Partition


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    lines = out.splitlines()
    assert len(lines) == 1
    data = json.loads(lines[0])
    assert data["schema"] == "partition-lab/1"
    return code, data


class TestLiteral:
    def test_exponent_expands(self):
        assert parse_partition("2^3,1^2") == parse_partition("2,2,2,1,1") == Partition((2, 2, 2, 1, 1))

    def test_brackets_and_spaces(self):
        assert parse_partition("[5, 5, 3]") == Partition((5, 5, 3))

    def test_empty(self):
        assert parse_partition("") == Partition()

    @pytest.mark.parametrize("text, fragment", [("3,x", "'x'"), ("3,5", "'5'"), ("0", "'0'"), ("2^0", "'2^0'"), ("2^", "'2^'")])
    def test_diagnostic_names_term(self, text, fragment):
        with pytest.raises(LiteralSyntaxError, match=re.escape(fragment)):
            parse_partition(text)


class TestCheck:
    def test_self_conjugate_ledger(self, capsys):
        code, out, _ = run(capsys, "check", "5^2,3,2^2", "--method", "both")
        assert code == 0
        assert out == (
            "partition: [5,5,3,2,2]\n"
            "multiplicities: x_0=2, x_1=1, x_2=2\n"
            "  5 = 2+1+2\n"
            "  3 = 2+1\n"
            "  2 = 2\n"
            "conjugate: [5,5,3,2,2]\n"
            "theorem and oracle agree\n"
            "verdict: self-conjugate\n"
        )

    def test_ledger_stops_at_first_failure(self, capsys):
        code, out, _ = run(capsys, "check", "20,7^5,6^2,5^4,4^2,2^2,1^4")
        assert code == 1
        assert out.splitlines()[-2:] == ["  7 != 1+5+2+4+2+2 = 16", "verdict: not self-conjugate"]

    def test_single_cell(self, capsys):
        assert run(capsys, "check", "1")[0] == 0

    def test_oracle_only(self, capsys):
        code, out, _ = run(capsys, "check", "6,5^4", "--method", "oracle")
        assert code == 1 and "conjugate: [5,5,5,5,5,1]" in out

    def test_json(self, capsys):
        code, data = run_json(capsys, "check", "9^2,7^2,4^3,2^2")
        assert code == 0 and data["self_conjugate"] is True and data["command"] == "check"
        assert [c["sum"] for c in data["ledger"]] == [9, 7, 4, 2]

    def test_parse_error_exit_2(self, capsys):
        code, out, err = run(capsys, "check", "3,5")
        assert code == 2 and out == "" and "'5'" in err


class TestDiagram:
    def test_young(self, capsys):
        assert run(capsys, "diagram", "4,3,2,2,1", "--style", "young")[1] == "####\n###\n##\n##\n#\n"

    def test_conjugate(self, capsys):
        assert run(capsys, "diagram", "4,3,2,2,1", "--conjugate")[1] == "#####\n####\n##\n#\n"

    def test_ferrers(self, capsys):
        assert run(capsys, "diagram", "1", "--style", "ferrers")[1] == "*\n"

    def test_json_flag_after_subcommand(self, capsys):
        code, out, _ = run(capsys, "diagram", "2,1", "--json")
        assert json.loads(out)["diagram"] == "##\n#\n"


class TestDecompose:
    def test_wide_l_around_square(self, capsys):
        code, out, _ = run(capsys, "decompose", "7^2,6,4,3^2,2")
        assert code == 0
        assert out == (
            "partition: [7,7,6,4,3,3,2]\n"
            "unit frames (arm lengths): 7 6 4\n"
            "nest (L widths, outermost first): 2 1\n"
            "egg: PureDurfeeSquare(1)\n"
        )

    def test_triangle(self, capsys):
        code, data = run_json(capsys, "decompose", "5,4,3,2,1")
        assert code == 0
        assert data["frames"] == [] and data["egg"] == {"kind": "FancyTriangle", "dim": 5}
        assert data["residual"] is None

    @pytest.mark.parametrize("literal, residual", [("6,5^4", [6, 5, 5, 5, 5]), ("7^2,6,4,3^2,1", [6, 5, 3, 2, 2])])
    def test_residual(self, capsys, literal, residual):
        code, data = run_json(capsys, "decompose", literal)
        assert code == 1 and data["residual"] == residual and data["egg"] is None


class TestCountSc:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "count-sc", "4")
        assert code == 0
        assert out == "d  count  2^(d-1)  match\n1  1  1  yes\n2  2  2  yes\n3  4  4  yes\n4  8  8  yes\n"

    def test_row_8(self, capsys):
        code, data = run_json(capsys, "count-sc", "8")
        assert data["rows"][-1] == {"d": 8, "count": 128, "formula": 128, "match": True}

    def test_guard(self, capsys):
        code, _, err = run(capsys, "count-sc", "11")
        assert code == 2 and "d_max" in err


class TestPfn:
    TRACE = (
        "k=1  +3,972,998,993,185.896\n"
        "k=2             +36,282.978\n"
        "k=3                 -87.584\n"
        "k=4                  +5.147\n"
        "k=5                  +1.424\n"
        "k=6                  +0.071\n"
        "k=7                  +0.000\n"
        "k=8                  +0.044\n"
        "      ----------------------\n"
        "      +3,972,999,029,387.976\n"
        "p(200) = 3972999029388\n"
    )

    def test_trace(self, capsys):
        code, out, _ = run(capsys, "pfn", "200", "--method", "rademacher", "--trace", "--kmax", "8")
        assert code == 0 and out == self.TRACE

    @pytest.mark.parametrize("method", ["series", "recurrence", "enumerate"])
    def test_zero(self, capsys, method):
        assert run(capsys, "pfn", "0", "--method", method)[1] == "p(0) = 1\n"

    def test_fifty(self, capsys):
        assert run(capsys, "pfn", "50", "--method", "series")[1] == "p(50) = 204226\n"

    def test_json_has_no_grouping(self, capsys):
        code, data = run_json(capsys, "pfn", "200", "--method", "rademacher", "--kmax", "8")
        assert data["value"] == 3972999029388
        assert len(data["terms"]) == 8
        assert "," not in data["partial_sum"] and data["partial_sum"].startswith("3972999029387.97")

    def test_enumerate_guard(self, capsys):
        code, _, err = run(capsys, "pfn", "61", "--method", "enumerate")
        assert code == 2 and "60" in err

    def test_precision_advice(self, capsys):
        code, _, err = run(capsys, "pfn", "200", "--method", "rademacher", "--digits", "15")
        assert code == 2 and "--digits" in err

    def test_rademacher_zero_is_usage_error(self, capsys):
        assert run(capsys, "pfn", "0", "--method", "rademacher")[0] == 2


class TestCongruences:
    def test_chowla(self, capsys):
        code, out, _ = run(capsys, "congruences", "chowla")
        assert code == 0
        assert out == "chowla    p(243) mod 343 = 245  ok (nonzero expected)\n1/1 checks passed\n"

    def test_ramanujan_limit(self, capsys):
        code, data = run_json(capsys, "congruences", "ramanujan", "--limit", "200")
        assert code == 0 and data["ok"]
        assert max(r["n"] for r in data["rows"]) <= 200
        assert all(r["residue"] == 0 for r in data["rows"])

    def test_lists(self, capsys):
        code, data = run_json(capsys, "congruences", "lists")
        assert code == 0 and len(data["rows"]) == 31

    def test_all(self, capsys):
        code, data = run_json(capsys, "congruences")
        assert code == 0 and data["suites"] == ["lists", "ramanujan", "atkin", "chowla"]


class TestEuler:
    def test_seven(self, capsys):
        code, out, _ = run(capsys, "euler", "7")
        assert code == 0 and out.splitlines()[-1] == "7  5  5  yes"

    def test_one(self, capsys):
        assert run(capsys, "euler", "1")[1].splitlines()[1] == "1  1  1  yes"

    def test_three_hundred(self, capsys):
        code, data = run_json(capsys, "euler", "300")
        assert code == 0 and len(data["rows"]) == 300 and all(r["match"] for r in data["rows"])

    def test_guard(self, capsys):
        assert run(capsys, "euler", "301")[0] == 2


class TestArea:
    def test_converse_counterexample(self, capsys):
        code, out, _ = run(capsys, "area", "3^2,1^2")
        assert code == 0
        assert out == "partition: [3,3,1,1]\nbelow diagonal: 4\nabove diagonal: 4\nbalanced\n"

    def test_single_cell(self, capsys):
        assert "below diagonal: 1/2\nabove diagonal: 1/2\nbalanced\n" in run(capsys, "area", "1")[1]

    def test_unbalanced(self, capsys):
        code, data = run_json(capsys, "area", "6,5^4")
        assert code == 1 and (data["below"], data["above"]) == ("25/2", "27/2")

    def test_empty_rejected(self, capsys):
        assert run(capsys, "area", "")[0] == 2


class TestEnumerate:
    def test_size(self, capsys):
        assert run(capsys, "enumerate", "4")[1] == "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\ncount: 5\n"

    def test_dimension_self_conjugate(self, capsys):
        code, data = run_json(capsys, "enumerate", "--dimension", "3", "--self-conjugate")
        assert data["partitions"] == [[3, 3, 3], [3, 3, 2], [3, 2, 1], [3, 1, 1]]

    def test_needs_target(self, capsys):
        assert run(capsys, "enumerate")[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["pfn", "abc"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2


def test_output_is_byte_identical(capsys):
    first = run(capsys, "--json", "congruences", "atkin")[1]
    second = run(capsys, "--json", "congruences", "atkin")[1]
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "partition_lab", "check", "4,3,2,1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.endswith("verdict: self-conjugate\n")

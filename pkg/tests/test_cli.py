import json

import pytest

from pretzelsurgery.cli import run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAlexander:
    def test_normalized_output(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "-1,-2,3,3", "--normalize")
        assert code == 0
        assert "1 - 4t + 5t^2 - 4t^3 + t^4" in out

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "-1,-2,3,3", "--normalize", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["coefficients"]["2"] == -4  # s-exponent 2 is t^1
        assert doc["engine"] == "skein"

    def test_trace_output(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "-2,3,7", "--trace")
        assert code == 0
        assert "@ region" in out

    def test_fox_fallback(self, capsys):
        code, out, _ = run_cli(capsys, "alexander", "-1,-1,4,3,3", "--json")
        assert code == 0
        assert json.loads(out)["engine"] == "fox"

    def test_bad_params_exit_1(self, capsys):
        code, _, err = run_cli(capsys, "alexander", "3,x")
        assert code == 1
        assert "error" in err


class TestOracleCompare:
    def test_match(self, capsys):
        code, out, _ = run_cli(capsys, "oracle-compare", "-2,3,9", "--json")
        assert code == 0
        assert json.loads(out)["match"] is True

    def test_unsupported(self, capsys):
        code, out, _ = run_cli(capsys, "oracle-compare", "-1,-1,4,3,3")
        assert code == 1


class TestObstruct:
    def test_os_form(self, capsys):
        code, out, _ = run_cli(capsys, "obstruct", "-2,3,7", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["pm1_coefficients"] is True
        assert doc["os_form"]["exponents"] == [1, 2, 4, 5]

    def test_fiberedness_block(self, capsys):
        code, out, _ = run_cli(capsys, "obstruct", "-1,-1,4,3,3", "--json")
        doc = json.loads(out)
        assert doc["monic"] is False
        assert doc["fiberedness"]["verdict"] == "not-fibered"


class TestClassify:
    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "-2,3,9", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["final"]["verdicts"] == ["FINITE_SLOPES"]
        assert doc["final"]["finite_slopes"] == [22, 23]

    def test_any_verdict_exits_zero(self, capsys):
        for inp in ("-2,3,5", "3,5,7", "2/3;1/3;-1/2"):
            code, _, _ = run_cli(capsys, "classify", inp)
            assert code == 0, inp


class TestGrids:
    def test_claim5_suite(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify-claims", "--suite", "claim5", "--pmax", "13", "--json"
        )
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        summary = lines[-1]
        assert summary["ok"] is True and summary["cells"] == 15
        assert all(cell["ok"] for cell in lines[:-1])

    def test_sorted_output(self, capsys):
        _, out, _ = run_cli(
            capsys, "verify-claims", "--suite", "claim5", "--json"
        )
        lines = out.strip().splitlines()[:-1]
        assert lines == sorted(lines)

    def test_classify_sweep(self, capsys):
        code, _, _ = run_cli(capsys, "verify-claims", "--suite", "classify-sweep")
        assert code == 0

    def test_oracle_suite_threads(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify-claims", "--suite", "oracle",
            "--nmax", "2", "--qmax", "3", "--threads", "0", "--json",
        )
        assert code == 0
        assert json.loads(out.strip().splitlines()[-1])["ok"] is True

    def test_claim2_grid(self, capsys):
        code, out, _ = run_cli(capsys, "verify-claim2")
        assert code == 0
        assert "0 failures" in out


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "bogus")[0] == 1

    def test_missing_suite(self, capsys):
        assert run_cli(capsys, "verify-claims")[0] == 1

    def test_unknown_flag(self, capsys):
        assert run_cli(capsys, "alexander", "-2,3,7", "--bogus")[0] == 1

"""Command-line interface: grammar, formats, exit codes, idempotence."""

import io
import json
import math
from fractions import Fraction

import pytest

from agmbounds import cli, verify
from agmbounds.coefficients import CoefficientTable

A_TABLE_STR = [
    "1/4", "7/48", "5/48", "313/3840", "43/640", "12317/215040",
    "10751/215040", "183349/4128768", "206329/5160960", "66087019/1816657920",
]


def run_cli(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


class TestMean:
    def test_agm_text(self):
        code, out = run_cli(
            "mean", "--kind", "agm", "--a", "1.4142135623730951", "--b", "1"
        )
        assert code == 0
        assert float(out.strip()) == pytest.approx(1.198140234735592, rel=1e-14)

    def test_log_json(self):
        code, out = run_cli(
            "mean", "--kind", "log", "--a", "2", "--b", "8", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["kind"] == "log"
        assert data["value"] == pytest.approx(6.0 / math.log(4.0), rel=1e-14)

    def test_genlog_csv(self):
        code, out = run_cli(
            "mean", "--kind", "genlog", "--p", "1", "--a", "3", "--b", "5",
            "--format", "csv",
        )
        assert code == 0
        header, row = out.strip().split("\n")
        assert header == "kind,p,a,b,value"
        assert row.split(",")[0] == "genlog"
        assert float(row.split(",")[-1]) == pytest.approx(4.0, rel=1e-13)

    def test_genlog_requires_p(self):
        code, _ = run_cli("mean", "--kind", "genlog", "--a", "3", "--b", "5")
        assert code == 2

    def test_p_rejected_elsewhere(self):
        code, _ = run_cli("mean", "--kind", "log", "--p", "1", "--a", "3", "--b", "5")
        assert code == 2

    def test_domain_error(self, capsys):
        code, _ = run_cli("mean", "--kind", "log", "--a", "-1", "--b", "5")
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_digits_control(self):
        _, out15 = run_cli("mean", "--kind", "log", "--a", "2", "--b", "8")
        _, out5 = run_cli("mean", "--kind", "log", "--a", "2", "--b", "8",
                          "--digits", "5")
        assert len(out5.strip()) < len(out15.strip())
        code, _ = run_cli("mean", "--kind", "log", "--a", "2", "--b", "8",
                          "--digits", "30")
        assert code == 2


class TestElliptic:
    def test_modulus_series(self):
        code, out = run_cli("elliptic", "--method", "series", "--t", "0.5",
                            "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["method"] == "series"
        assert data["value"] == pytest.approx(1.6857503548125963, rel=1e-13)

    def test_pair_agm_homogeneity(self):
        code, out = run_cli("elliptic", "--method", "agm", "--a", "2", "--b", "2",
                            "--format", "json")
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(math.pi / 4.0, rel=1e-14)

    def test_quadrature_with_modulus(self):
        code, out = run_cli("elliptic", "--method", "quadrature", "--t", "0",
                            "--format", "json")
        assert code == 0
        assert json.loads(out)["value"] == pytest.approx(math.pi / 2.0, rel=1e-14)

    def test_text_fields(self):
        code, out = run_cli("elliptic", "--method", "agm", "--t", "0.5")
        assert code == 0
        keys = [line.split(":")[0] for line in out.strip().split("\n")]
        assert keys == ["value", "method", "terms_or_iterations", "error_estimate"]

    def test_conflicting_inputs(self):
        code, _ = run_cli("elliptic", "--method", "agm", "--t", "0.5", "--a", "1",
                          "--b", "2")
        assert code == 2
        code, _ = run_cli("elliptic", "--method", "agm", "--a", "1")
        assert code == 2

    def test_series_refusal_is_domain_error(self, capsys):
        code, _ = run_cli("elliptic", "--method", "series", "--t", "0.99")
        assert code == 2
        assert "k_agm" in capsys.readouterr().err

    def test_invalid_modulus(self):
        code, _ = run_cli("elliptic", "--method", "agm", "--t", "1.0")
        assert code == 2


class TestCoeffs:
    def test_csv_matches_exact_table(self):
        code, out = run_cli("coeffs", "--kmax", "10", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "k,a,b,h,g,s"
        a_cells = [line.split(",")[1] for line in lines[2:]]
        assert a_cells == A_TABLE_STR

    def test_text_lists_a_column(self):
        code, out = run_cli("coeffs", "--kmax", "3")
        assert code == 0
        assert out.strip().split("\n") == [
            "a_1 = 1/4", "a_2 = 7/48", "a_3 = 5/48",
        ]

    def test_json_round_trip(self):
        code, out = run_cli("coeffs", "--kmax", "6", "--format", "json")
        assert code == 0
        table = CoefficientTable.from_json_dict(json.loads(out))
        assert table.k_max == 6
        assert table.a_at(1) == Fraction(1, 4)

    def test_kmax_too_small(self):
        code, _ = run_cli("coeffs", "--kmax", "1")
        assert code == 2


class TestScan:
    def test_csv_columns(self):
        code, out = run_cli("scan", "--points", "5", "--tmin", "0.01",
                            "--tmax", "0.9")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "t,ratio,lower_bound,upper_bound"
        assert len(lines) == 6
        first = lines[1].split(",")
        assert float(first[0]) == pytest.approx(0.01)
        assert 1.0 < float(first[1]) < math.pi / 2.0
        assert first[2] == "1"
        assert float(first[3]) == pytest.approx(math.pi / 2.0, rel=1e-14)

    def test_json_fields(self):
        code, out = run_cli("scan", "--points", "4", "--tmin", "0.1",
                            "--tmax", "0.5", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["monotone_decreasing"] is True
        assert data["lower_bound"] == 1.0
        assert len(data["grid"]) == len(data["ratio"]) == 4

    def test_invalid_window(self):
        code, _ = run_cli("scan", "--points", "5", "--tmin", "0.9", "--tmax", "0.1")
        assert code == 2


class TestVerify:
    def test_quick_json_all_pass(self):
        code, out = run_cli("verify", "--profile", "quick", "--seed", "42",
                            "--format", "json")
        assert code == 0
        reports = json.loads(out)
        assert len(reports) == 10
        assert all(r["status"] == "pass" for r in reports)
        parsed = verify.reports_from_json(out)
        assert verify.all_passed(parsed)

    def test_idempotent_output(self):
        first = run_cli("verify", "--profile", "quick", "--seed", "9",
                        "--format", "json")
        second = run_cli("verify", "--profile", "quick", "--seed", "9",
                         "--format", "json")
        assert first == second

    def test_text_format(self):
        code, out = run_cli("verify", "--profile", "quick")
        assert code == 0
        assert out.count("PASS") == 10
        assert "10/10 claims passed" in out

    def test_csv_format(self):
        code, out = run_cli("verify", "--format", "csv")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "claim_id,status,checked_points,witness"
        assert len(lines) == 11

    def test_failure_exit_code(self, monkeypatch):
        failing = verify.VerificationReport(
            claim_id="x", statement="s", status="fail", checked_points=1,
            tolerances={}, witness="w",
        )
        monkeypatch.setattr(verify, "run_all", lambda profile, seed: [failing])
        code, out = run_cli("verify")
        assert code == 1
        assert "FAIL" in out


class TestUsage:
    def test_no_command(self):
        assert cli.run([]) == 2

    def test_unknown_command(self):
        assert cli.run(["frobnicate"]) == 2

    def test_help_exits_zero(self, capsys):
        assert cli.run(["--help"]) == 0
        assert "mean" in capsys.readouterr().out

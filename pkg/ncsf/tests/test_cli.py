"""
Tests for the command-line verbs, driven through ``main(argv)``.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from ncsf.backend import checks
from ncsf.backend.reports import CheckReport
from ncsf.frontend.main import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main

FIXTURES = Path(__file__).parent / "fixtures" / "appendix"


def run(capsys: pytest.CaptureFixture, *argv: str) -> tuple:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_convert_complete_to_immaculate(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "convert", "3,1,2,3", "--from", "H", "--to", "S")
    assert code == EXIT_OK
    assert "5*S[4,2,3]" in out


def test_convert_expression_to_schur(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "convert", "--expr", "S[1,3]", "--to", "s")
    assert code == EXIT_OK
    assert out.strip() == "-s[2,2]"


def test_convert_json(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "convert", "1,1", "--from", "H", "--to", "S", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["basis"] == "S"
    assert payload["terms"] == [{"index": [1, 1], "coef": "1"}, {"index": [2], "coef": "1"}]


def test_product(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "product", "--basis", "H", "--alpha", "1", "--beta", "1,3", "--to", "S")
    assert code == EXIT_OK
    assert out.strip() == "S[1,1,3] - S[2,2,1] - S[3,2]"


def test_pieri_with_specialised_q(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "pieri", "--basis", "Qp", "--alpha", "2,3", "--s", "3", "--q-at", "1")
    assert code == EXIT_OK
    assert out.strip() == "Qp[2,3,3]"


def test_tableaux(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "tableaux", "--alpha", "4,2,3", "--beta", "3,1,2,3")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == "5 tableaux"
    assert len(lines) == 6
    assert all("n=" in line for line in lines[1:])


def test_matrix_matches_fixture(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "matrix", "--n", "4", "--from", "H", "--to", "S")
    assert code == EXIT_OK
    assert out == (FIXTURES / "M_H_S.txt").read_text()


def test_golden_matrices_are_written(capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
    code, out, _ = run(capsys, "matrix", "--golden", "--out", str(tmp_path))
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == 11
    assert (tmp_path / "M_s_Sd.txt").exists()


def test_skew_with_paths(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "skew", "--alpha", "1,3,2", "--beta", "1,1", "--paths")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 7
    assert lines[0].startswith("[1,3,2] -2-> [1,2,2]")
    assert lines[-1] == "F[1,2,1] + F[1,3] + 2*F[2,2] + F[3,1] + F[4]"


def test_chi_and_straighten(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "chi", "1,3")[1].strip() == "-s[2,2]"
    assert run(capsys, "chi", "1,2", "--straighten")[1].strip() == "0"
    assert run(capsys, "chi", "2,1", "--from", "H", "--to", "h")[1].strip() == "h[2,1]"


def test_check_passes(capsys: pytest.CaptureFixture) -> None:
    code, out, _ = run(capsys, "check", "projection", "--max-n", "3", "--workers", "1")
    assert code == EXIT_OK
    assert "PASS" in out


def test_check_failure_exit_status(capsys: pytest.CaptureFixture, monkeypatch: pytest.MonkeyPatch) -> None:
    def failing(n: int) -> CheckReport:
        report = CheckReport("left-pieri", {"n": n})
        report.record("left", False, f"n={n}", "S[1]", "S[2]")
        return report

    monkeypatch.setitem(checks.CHECKS, "left-pieri", failing)
    code, out, _ = run(capsys, "check", "left-pieri", "--max-n", "2", "--workers", "1", "--json")
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)["passed"] is False


@pytest.mark.parametrize("argv", [
    ["convert", "1,0", "--from", "H", "--to", "S"],
    ["convert", "--to", "S"],
    ["convert", "--expr", "S[1]", "--to", "M"],
    ["product", "--basis", "M", "--alpha", "1", "--beta", "1"],
    ["pieri", "--basis", "Qp", "--alpha", "1", "--s", "1", "--elementary"],
    ["matrix", "--n", "2", "--from", "H"],
    ["chi", "x"],
])
def test_malformed_input_exits_with_usage_status(capsys: pytest.CaptureFixture, argv: list) -> None:
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_argument_errors(capsys: pytest.CaptureFixture) -> None:
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "check", "no-such-check")[0] == EXIT_USAGE
    assert run(capsys, "--log-level", "chatty", "chi", "1")[0] == EXIT_USAGE

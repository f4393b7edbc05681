import json
import subprocess
import sys

import pytest

from folcremona import BirationalMap, MultiPoly
from folcremona.cli import EXIT_FAIL, EXIT_MATH, EXIT_OK, EXIT_PARSE, main, run_command


def run(*argv):
    status, report, text = run_command(list(argv))
    return status, report, text


def test_parse_verb():
    status, report, _ = run("parse", "(x + j*y)^2", "--format", "json")
    assert status == EXIT_OK
    assert MultiPoly.parse(report["value"]) == MultiPoly.parse("(x + j*y)^2")


def test_parse_error_exit_code():
    status, report, text = run("parse", "x +* y")
    assert status == EXIT_PARSE and report is None and "parse error" in text


def test_conductor_error_exit_code():
    assert run("parse", "zeta(7)*x")[0] == EXIT_PARSE
    assert run("parse", "zeta(7)*x", "--conductor", "84")[0] == EXIT_OK


def test_missing_source():
    assert run("flex")[0] == EXIT_PARSE


def test_flex_json():
    status, report, _ = run("flex", "--builtin", "jouanolou2", "--format", "json")
    assert status == EXIT_OK
    H = MultiPoly.parse(report["H"])
    assert H.monic() == MultiPoly.parse("3*x^2*y^2*z^2 - x*y^5 - x^5*z - y*z^5").monic()


def test_involution_round_trips():
    status, report, _ = run("involution", "--field", "x*(y^2 + x), y^3", "--format", "json")
    assert status == EXIT_OK and report["period_2"]
    I = BirationalMap.parse(report["map"])
    assert I == BirationalMap.parse("(-x^2 : x*y : x*z + 2*y^2)")
    assert BirationalMap.parse(report["affine"]) == I


def test_trivolution_square_and_not_square():
    status, report, _ = run("trivolution", "--builtin", "cubic-rational", "--format", "json")
    assert status == EXIT_OK and report["square"] and report["period_3"] and report["T_T2_identity"]
    assert BirationalMap.parse(report["T"]) in (BirationalMap.parse("(j*x, y + (j - 1)/x^2)"),
                                               BirationalMap.parse("(j^2*x, y + (2*j + 1)/(j^2*x^2))"))
    status, report, _ = run("trivolution", "--builtin", "jouanolou3", "--format", "json")
    assert status == EXIT_OK and report["square"] is False


def test_trivolution_precondition():
    assert run("trivolution", "--builtin", "jouanolou2")[0] == EXIT_MATH
    assert run("trivolution", "--field", "x^3 + y, 1 - x^3/4*y")[0] in (EXIT_OK, EXIT_MATH)


def test_seven_points_degenerate():
    assert run("seven-points", "--points", "1/2,3/4; 1/2,3/4; 4/3,2/3")[0] == EXIT_MATH
    assert run("seven-points", "--points", "1/2,3/4; 4/3,2/3")[0] == EXIT_PARSE


def test_family_and_scan():
    status, report, _ = run("family", "--alpha", "-1", "--lambda", "1", "--mu", "1", "--nu", "1", "--format", "json")
    assert status == EXIT_OK and report["r"] == ["12", "0", "24", "0", "12"] and report["square"]
    assert run("family", "--alpha", "1", "--lambda", "1", "--mu", "1", "--nu", "1")[0] == EXIT_MATH
    status, report, _ = run("scan", "--alpha", "-1", "--grid=-2,-1,-1/2,1/2,1,2", "--format", "json")
    assert status == EXIT_OK and report["consistent"] and ["-1", "1", "1", "1"] in report["square_points"]


def test_web_check():
    status, report, _ = run("web-check", "--f0", "y + 1/(2*x^2)", "--map", "(j*x, y + (j - 1)/x^2)", "--format", "json")
    assert status == EXIT_OK and report["residual_zero"]
    assert report["relation"][0] == "1"


def test_output_is_deterministic():
    a = run("involution", "--builtin", "omega4", "--format", "json")[2]
    b = run("involution", "--builtin", "omega4", "--format", "json")[2]
    assert a == b
    json.loads(a)


def test_verify_against_shipped_golden_files():
    status, report, text = run("verify", "--only", "cubic-rational", "webs", "omega1")
    assert status == EXIT_OK, text
    assert all(item["ok"] for item in report["items"])


def test_verify_detects_golden_mismatch(tmp_path, monkeypatch):
    (tmp_path / "webs.txt").write_text("something else\n")
    monkeypatch.setenv("FOLCREMONA_GOLDEN_DIR", str(tmp_path))
    status, report, _ = run("verify", "--only", "webs")
    assert status == EXIT_FAIL and report["items"][0]["failed"] == ["golden file"]


def test_write_golden_then_verify(tmp_path):
    assert run("verify", "--write-golden", "--golden", str(tmp_path))[0] == EXIT_OK
    assert (tmp_path / "jouanolou2.txt").exists()
    assert run("verify", "--golden", str(tmp_path), "--only", "jouanolou2")[0] == EXIT_OK


def test_main_and_console_entry(capsys):
    assert main(["list"]) == EXIT_OK
    assert "jouanolou2" in capsys.readouterr().out
    out = subprocess.run([sys.executable, "-m", "folcremona.cli", "parse", "x^"], capture_output=True, text=True)
    assert out.returncode == EXIT_PARSE and "parse error" in out.stderr

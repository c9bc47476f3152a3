import csv
import io
import json
import subprocess
import sys

import pytest

from lerchphi import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def record(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def value(rec):
    return complex(rec["value"]["re"], rec["value"]["im"])


@pytest.mark.parametrize("text,expected", [("2", 2), ("-1.5", -1.5), ("1+2I", 1 + 2j), ("-1-0.5i", -1 - 0.5j),
                                           ("3j", 3j), ("2e-3+1e2I", 0.002 + 100j)])
def test_parse_number(text, expected):
    assert cli.parse_number(text) == expected


def test_parse_number_rejects():
    with pytest.raises(Exception):
        cli.parse_number("abc")


def test_polylog(capsys):
    rec = record(capsys, "polylog", "-k", "2", "-m", "-1")
    assert value(rec).real == pytest.approx(0.4087542873488963, rel=1e-9)
    assert rec["error_estimate"] < 1e-12 and rec["is_continuation"] is False


def test_hurwitz_and_hp(capsys):
    assert value(record(capsys, "hurwitz-neg", "-k", "0", "-b", "0.25")).real == pytest.approx(0.25, abs=1e-15)
    rec = record(capsys, "hp-const", "-b", "0.5")
    assert value(rec).real == pytest.approx(-0.6137056388801094, abs=1e-12)
    assert rec["regime"] == "half-integer"


def test_partial_complex_args(capsys):
    rec = record(capsys, "partial", "--kind", "exp", "-m", "-1+2I", "-k", "2", "-n", "17", "-b", "0.3-0.1i")
    assert rec["error_estimate"] < 1e-12
    rec = record(capsys, "partial", "--kind", "sin-odd", "-a", "2", "-m", "3", "-k", "1", "-n", "9", "-b", "0.2")
    assert rec["error_estimate"] < 1e-12


def test_series_and_lerch(capsys):
    rec = record(capsys, "series", "--trig", "cos", "-k", "1", "-m", "2", "-b", "1")
    assert rec["error_estimate"] < 1e-6 and rec["regime"] == "integer"
    rec = record(capsys, "lerch", "-m", "-1", "-k", "2", "-b", "1")
    assert value(rec).real == pytest.approx(1.1111093516052317, rel=1e-9)
    rec = record(capsys, "lerch", "-m", "0.5", "-k", "2", "-b", "0.3", "--e-sum")
    assert rec["is_continuation"] is True and rec["error_estimate"] is None


def test_domain_exit(capsys):
    code, out, err = run(capsys, "lerch", "-m", "0", "-k", "2", "-b", "1")
    assert code == cli.EXIT_DOMAIN and not out and "ImproperAtZero" in err
    code, _, err = run(capsys, "series", "--trig", "cos", "-k", "1", "-m", "1")
    assert code == cli.EXIT_DOMAIN and "DivergentSeries" in err


def test_convergence_exit(capsys):
    code, _, err = run(capsys, "polylog", "-k", "2", "-m", "-0.5+6I", "--max-evals", "15", "--rel-tol", "1e-14",
                       "--abs-tol", "1e-16")
    assert code == cli.EXIT_CONVERGENCE and "BudgetExhausted" in err


def test_usage_exit(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["polylog", "-k", "x", "-m", "1"])
    assert info.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        cli.main([])
    assert info.value.code == cli.EXIT_USAGE


def test_verify_json(capsys):
    code, out, err = run(capsys, "verify", "hurwitz", "--grid", "small")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and lines and all(x["pass"] for x in lines)
    n = len(lines)
    assert f"hurwitz: {n}/{n} passed" in err


def test_verify_csv_and_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"grid": "small", "output_format": "csv", "seed": 11}))
    code, out, err = run(capsys, "verify", "oracle", "--config", str(cfg))
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows and rows[0]["identity_id"].startswith("oracle-")


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"rel_tol": -1}))
    code, _, err = run(capsys, "verify", "oracle", "--config", str(cfg))
    assert code == cli.EXIT_USAGE
    code, _, _ = run(capsys, "verify", "oracle", "--config", str(tmp_path / "missing.json"))
    assert code == cli.EXIT_USAGE


def test_verify_failure_exit(capsys, monkeypatch):
    from lerchphi import verify

    monkeypatch.setitem(verify.SUITES, "oracle", lambda cfg: [verify.compare("x", {}, 2.0, 1.0, 1e-8)])
    code, out, err = run(capsys, "verify", "oracle")
    assert code == cli.EXIT_FAIL and "FAIL x" in err and "0/1" in err


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "lerchphi.cli", "hurwitz-neg", "-k", "1", "-b", "1"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["value"]["re"] == pytest.approx(-1 / 12, abs=1e-15)

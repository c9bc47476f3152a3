import json
import math

import pytest

from lerchphi import verify
from lerchphi.verify import RunConfig, compare


def test_compare_rule():
    assert compare("x", {}, 1.0 + 1e-9, 1.0, 1e-8).passed
    assert not compare("x", {}, 1.1, 1.0, 1e-8).passed
    assert compare("x", {}, 1e-13, 0.0, 0.0, 1e-12).passed
    r = compare("x", {}, 0.0, 0.0, 0.0)
    assert r.passed and r.rel_err == 0


def test_report_schema():
    d = compare("partial-cos-even", {"m": 2 + 1j}, 1 + 2j, 1 + 2j, 1e-8).to_dict()
    for key in ("identity_id", "params", "formula_value", "oracle_value", "abs_err", "rel_err", "pass"):
        assert key in d
    assert d["formula_value"] == {"re": 1.0, "im": 2.0}
    assert d["params"]["m"] == {"re": 2.0, "im": 1.0}
    json.dumps(d)


def test_csv_row_flattens():
    row = verify.csv_row(compare("x", {"b": 0.5}, 1 + 2j, 1 + 2j, 1e-8))
    assert set(row) == set(verify.CSV_FIELDS)
    assert row["formula_re"] == "1.0" and row["formula_im"] == "2.0" and row["pass"] == "true"


def test_config():
    cfg = RunConfig.from_dict({"rel_tol": 1e-9, "seed": 3})
    assert cfg.quad.rel_tol == 1e-9 and cfg.seed == 3
    with pytest.raises(ValueError):
        RunConfig.from_dict({"bogus": 1})
    with pytest.raises(ValueError):
        RunConfig(abs_tol=0)
    with pytest.raises(ValueError):
        RunConfig(output_format="xml")


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run("nope")


@pytest.mark.parametrize("suite", list(verify.SUITES))
def test_small_grid_suites_pass(suite):
    reports = verify.run(suite, RunConfig(grid="small"))
    bad = [r.to_dict() for r in reports if not r.passed]
    assert reports and not bad, bad[:3]


def test_exceptions_reported_as_skips():
    reports = verify.series_checks(RunConfig(), ms=(1.0,), bs=(0.0,), orders=(1,))
    skips = {r.identity_id: r.skipped_reason for r in reports if r.skipped_reason}
    assert "DivergentSeries" in skips["series-cos-odd"]
    assert "FormulaBreakdown" in skips["series-sin-odd"]
    assert all(r.passed for r in reports)


def test_seeded_grids_reproducible():
    assert verify.partial_sum_tuples(7) == verify.partial_sum_tuples(7)
    assert verify.partial_sum_tuples(7) != verify.partial_sum_tuples(8)
    assert verify.hp_grid(7) == verify.hp_grid(7)


def test_failed_report_not_passing():
    r = verify.failed("x", {}, ValueError("boom"))
    assert not r.passed and math.isinf(r.rel_err) and "boom" in r.skipped_reason

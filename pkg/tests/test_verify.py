"""Tests for the exhaustive per-prime checkers and the suite runner."""

import copy
import json

import pytest

from serrewt.errors import UnsupportedPrimeError
from serrewt.verify import (
    check_bm_equals_bdj,
    check_kmin_formula,
    check_main_theorem,
    check_recursion_lemma,
    expected_param_count,
    run_suite,
)


def test_check_main_theorem_counts():
    r3 = check_main_theorem(3)
    assert r3.passed and r3.params_checked == 21  # 3 irreducible + 18 reducible
    r5 = check_main_theorem(5)
    assert r5.passed and r5.params_checked == 78


def test_check_main_theorem_p7():
    assert check_main_theorem(7).passed


def test_check_bm_equals_bdj():
    for p in (3, 5, 7):
        r = check_bm_equals_bdj(p)
        assert r.passed
        assert r.params_checked == expected_param_count(p)


def test_check_kmin_formula_counts():
    assert check_kmin_formula(3).params_checked == 6
    assert check_kmin_formula(5).params_checked == 20
    r = check_kmin_formula(11)
    assert r.passed and r.params_checked == 110


def test_check_recursion_lemma():
    assert check_recursion_lemma(3, 10).passed
    assert check_recursion_lemma(7, 20).passed


def test_coverage_formula():
    for p in (3, 5, 7, 11):
        assert check_main_theorem(p).params_checked == expected_param_count(p)
        assert expected_param_count(p) == p * (p - 1) // 2 + (p - 1) * ((p - 1) * 4 + 1)


def test_report_json_shape():
    obj = check_main_theorem(3).to_json_obj()
    assert set(obj) == {"p", "check", "params_checked", "failures", "ms"}
    json.dumps(obj)  # serializable


# ---------------------------------------------------------------------------
# run_suite


def _strip_ms(aggregate):
    out = copy.deepcopy(aggregate)
    for run in out["runs"]:
        run["ms"] = 0
    return out


def test_run_suite_rejects_p2():
    with pytest.raises(UnsupportedPrimeError):
        run_suite([2], "all")
    with pytest.raises(UnsupportedPrimeError):
        run_suite([5, 2], "main")
    with pytest.raises(UnsupportedPrimeError):
        run_suite([9], "main")


def test_run_suite_rejects_unknown_check():
    with pytest.raises(ValueError):
        run_suite([5], ["mian"])
    with pytest.raises(ValueError):
        run_suite([5], "all", jobs=0)


def test_run_suite_all_checks_small():
    agg = run_suite([3, 5], "all")
    assert agg["pass"]
    assert [r["check"] for r in agg["runs"]] == ["main", "bm", "kmin", "recursion"] * 2
    assert all(r["failures"] == [] for r in agg["runs"])


def test_run_suite_deterministic_across_jobs():
    one = run_suite([5], "all", jobs=1)
    eight = run_suite([5], "all", jobs=8)
    assert json.dumps(_strip_ms(one)) == json.dumps(_strip_ms(eight))


def test_run_suite_brauer_explicit():
    agg = run_suite([3], ["brauer"], brauer_n_max=20)
    assert agg["pass"]
    assert agg["runs"][0]["params_checked"] == 21  # N = 0..20


def test_run_suite_brauer_respects_oracle_cap():
    with pytest.raises(ValueError):
        run_suite([37], ["brauer"])
    # raising the cap is allowed (not run here; validation only)
    with pytest.raises(ValueError):
        run_suite([37], ["brauer"], oracle_max_p=31)

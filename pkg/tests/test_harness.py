"""Verification harness: statuses, scoping, and report structure."""

import pytest

from catpark.harness import CHECKS, run_verification


def test_full_run_is_green():
    report = run_verification("all")
    assert report.ok
    assert report.exit_code == 0
    statuses = {}
    for entry in report.entries:
        statuses.setdefault(entry.status, []).append(entry.identity)
    assert "fail" not in statuses
    assert set(statuses["erratum"]) == {
        "multi-stat-product-order1",
        "stated-count-erratum",
        "q-luck-exponent-erratum",
        "joint-series-arguments-erratum",
    }


def test_scope_selection():
    report = run_verification("funceq")
    assert {e.identity for e in report.entries} == {"functional-equation"}
    assert len(report.entries) == 4  # one per regularity


def test_scope_with_m_restriction():
    report = run_verification("involution", m=2, max_n=4)
    assert len(report.entries) == 1
    assert report.entries[0].params == {"m": 2, "max_n": 4}


def test_unknown_scope():
    with pytest.raises(ValueError):
        run_verification("bogus")


def test_all_scopes_registered():
    assert set(CHECKS) == {
        "counting", "funceq", "hseries", "recurrence", "involution",
        "gamma", "qluck", "hbasis", "eta", "theta", "parking", "lattice",
        "multistat", "tensor", "convolution", "errata",
    }


def test_report_serialization():
    report = run_verification("errata")
    data = report.to_dict()
    assert data["ok"] is True
    for entry in data["checks"]:
        assert entry["status"] in ("pass", "fail", "erratum")
        assert isinstance(entry["millis"], int)

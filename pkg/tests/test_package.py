from __future__ import annotations

import pkgutil

import hommodels
from hommodels.models import FAIL, PASS, SKIPPED, VerificationReport, combine_status
from hommodels.reports import overall_status


def test_public_names_resolve():
    submodules = {m.name for m in pkgutil.iter_modules(hommodels.__path__)}
    assert len(hommodels.__all__) == len(set(hommodels.__all__))
    for name in hommodels.__all__:
        assert hasattr(hommodels, name), name
        assert name not in submodules


def test_combine_status():
    assert combine_status([]) == SKIPPED
    assert combine_status([PASS, PASS]) == PASS
    assert combine_status([PASS, SKIPPED]) == SKIPPED
    assert combine_status([SKIPPED, FAIL, PASS]) == FAIL


def test_overall_status_agrees_with_a_single_report():
    report = VerificationReport("demo", {})
    assert overall_status([report]) == report.status == SKIPPED
    report.check("ok", True)
    assert overall_status([report]) == report.status == PASS
    report.skip("later", "budget")
    assert overall_status([report]) == report.status == SKIPPED
    report.check("broken", False, witness="x")
    assert overall_status([report]) == report.status == FAIL
    assert overall_status([]) == SKIPPED

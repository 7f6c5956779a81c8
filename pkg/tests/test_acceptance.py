"""Acceptance criteria 1-8, each printed as one PASS/FAIL line.

Criterion 2 is expected to fail: the reconstructed quartic polynomial is
3x^9+2x, the negative of the stored constant 2x^9+3x (see the ledger).
It is left failing on purpose rather than marked xfail.
"""

import subprocess
import sys

import pytest

from wittorsion import acceptance
from wittorsion.ec import rat_point, rat_point_order_up_to


def report(capsys, check):
    line = f"[criterion {check.id}] {'PASS' if check.passed else 'FAIL'}  {check.name}"
    with capsys.disabled():
        print("\n" + line)
        if not check.passed:
            print(f"    details: {check.details}")
    return check


@pytest.mark.parametrize("cid", ["1", "2", "3", "4", "5", "6", "7"])
def test_criterion(capsys, cid):
    check = report(capsys, acceptance.run_criterion(cid))
    assert check.passed, check.details


def test_criterion_1_details():
    d = acceptance.run_criterion("1").details
    assert d["polynomial"] == "4x^10+x^7+2x^4+5x"
    assert d["degree"] <= 10
    assert d["x1_at"] == {"-1": "0", "-2": "0", "-4": "0"}
    assert (d["sample_ext"], d["validate_ext"]) == (2, 3)


def test_criterion_3_details():
    d = acceptance.run_criterion("3").details
    assert d["unit_scalar"] == "5" and d["stable"]
    assert d["zero_sets_agree"] == {"1": True, "2": True, "3": True}


def test_criterion_6_rational_order():
    assert rat_point_order_up_to(0, 1, rat_point(0, 1)) == 3


def test_criterion_7_details():
    d = acceptance.run_criterion("7").details
    assert d["ec_E7"]["points"] == 84 and d["ec_E7"]["base_points"] == 12


def test_criterion_8(capsys):
    cmd = [sys.executable, "-m", "wittorsion", "selftest", "--json"]
    a = subprocess.run(cmd, capture_output=True, timeout=600)
    b = subprocess.run(cmd, capture_output=True, timeout=600)
    same = a.stdout == b.stdout and len(a.stdout) > 0
    check = acceptance.Check("8", "two selftest --json runs are byte-identical", same,
                             {"bytes": len(a.stdout), "exit_codes": [a.returncode, b.returncode]})
    report(capsys, check)
    in_process = acceptance.run_criterion("8")
    assert same and in_process.passed
    # selftest exits 0 iff every criterion passes
    all_pass = all(c.passed for c in acceptance.run_all())
    assert a.returncode == (0 if all_pass else 1)

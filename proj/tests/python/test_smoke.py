from fractions import Fraction
import json
import math

import pytest

import polya_verify as pv


def test_equilateral_triangle():
    r = pv.spectral_triangle(0.5, math.sqrt(3) / 2, level=6)
    assert r.F == pytest.approx(math.pi**2 / 15, rel=1e-3)
    assert json.loads(r.to_json())["max_level"] == 6


def test_rectangle_series():
    assert pv.rect_lambda1(1, 1) == pytest.approx(math.pi**2 / 2)
    assert pv.rect_F(1, 1).value == pytest.approx(0.69372, rel=1e-5)
    s = math.sqrt(2) / 2
    assert 2 * pv.rect_center_torsion(s, s).value == pytest.approx(0.294685, abs=1e-5)


def test_exact_case_function():
    assert pv.case_function_exact("g", "1/2", "29/10") == "501126/495785"
    with pytest.raises(pv.PolyaError):
        pv.case_function("g", 0.5, 3.5)


def test_certify():
    ok, text = pv.certify(["-1/2", "1"], "1/2")
    assert ok
    assert json.loads(text)["status"] == "Certified"
    ok, _ = pv.certify(["1", "-1"], "2", depth=5)
    assert not ok


def test_replay():
    assert len(pv.case_ids()) == 10
    report = pv.replay("obtuse-2")
    assert report["verdict"] == "Verified"
    with pytest.raises(pv.PolyaError):
        pv.replay("nope")


def test_constants():
    lo, hi = pv.enclose("zeta5")
    assert Fraction(lo) <= Fraction(1.0369277551433699) <= Fraction(hi)


def test_small_sweep():
    csv = pv.sweep_csv(3, 3, b_min=0.2, level=4)
    lines = csv.strip().splitlines()
    assert lines[0] == "a,b,class,lambda1,T,torsion_max,F,margin_low,margin_high"
    for line in lines[1:]:
        F = float(line.split(",")[6])
        assert math.pi**2 / 24 < F < math.pi**2 / 12

import math
from fractions import Fraction

import pytest

import ptc


def test_cubic_ground_state():
    p = ptc.eigenpair("cubic", 0.05, 0)
    assert abs(p["energy"] - (0.5 + 11 / 8 * 0.05**2)) < 1e-4
    assert abs(p["im_energy"]) < 1e-10
    assert abs(p["pt_norm"] - 1) < 1e-6


def test_eigenfunction_is_pt_symmetric():
    v = ptc.eigenfunction("cubic", 0.05, 1, [-0.7, 0.7])
    assert abs(v[0] - v[1].conjugate()) < 1e-9


def test_exact_energy_and_kernel():
    e = [Fraction(t) for t in ptc.perturbative_energy("cubic", 0)]
    assert e == [Fraction(1, 2), 0, Fraction(11, 8), 0]
    text = ptc.c_kernel_text(1)
    assert "plus" in text


def test_cpt_norm_exact():
    orders = ptc.cpt_norm("cubic", ["3", "0", "4i"])
    assert Fraction(orders[0].strip("()")) == 25
    assert all(o == "0" for o in orders[1:])


def test_nonperturbative_correction():
    s, tail = ptc.nonpert_c_sum(0.5, -0.3, 0.2, 60)
    i, _ = ptc.nonpert_c_integral(0.5, -0.3, 0.2)
    assert abs(s - i) <= 1e-6 * abs(s)
    assert tail < 1e-6 * abs(s)


def test_special_functions_and_greens():
    d0 = ptc.parabolic_d_half(0.0)
    assert math.isclose(d0, math.sqrt(math.pi) / (2**0.25 * math.gamma(0.75)), rel_tol=1e-12)
    assert ptc.greens(0, 0.3, -0.2) > 0
    assert ptc.c_second_solution(1, 0.0) != 0


def test_verify_report_and_mutation():
    rep = ptc.verify("quick", 42)
    ids = {c["id"]: c for c in rep["checks"]}
    assert len(ids) >= 40
    assert ids["perturbation.cubic_pt_norm_n0"]["status"] == "pass"
    bad = ptc.verify("quick", 42, mutate=True)
    assert {c["id"]: c for c in bad["checks"]}["perturbation.cubic_pt_norm_n0"]["status"] == "fail"


def test_errors():
    with pytest.raises(ValueError):
        ptc.eigenpair("sextic", 0.1, 0)

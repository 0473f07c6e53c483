import cmath
import math

import pytest

import slecft


def test_level_two_gram():
    basis, entries = slecft.gram(2)
    assert basis == ["[2]", "[0,1]"]
    assert entries[0][1] == entries[1][0]
    assert "c" in entries[1][1]


def test_kac_lambda_at_kappa_three():
    assert slecft.kac_lambda(1, 2, "3") == "1/2"
    assert slecft.kac_lambda(2, 1, "3") == "1/16"
    assert slecft.central_charge("3") == "1/2"


def test_highest_weight_state():
    level, poly = slecft.apply("L", 0, "1", 0)
    assert (level, poly) == (0, "1/1*lambda")
    assert slecft.apply("L", 1, "1", 0)[1] == "0"
    level, poly = slecft.apply("L", -2, "1", 0)
    assert level == 2 and "a2" in poly


def test_commutator_and_gram_checks():
    r = slecft.commutator_check(2, -2, 3)
    assert r["ok"], r["witness"]
    assert slecft.gram_consistency(3)["ok"]
    assert slecft.singular_vector_identity()["ok"]


def test_reflection():
    assert abs(slecft.reflection_R(0, 8 / 3) - 1) < 1e-12
    assert abs(slecft.smallest_real_pole(3.0) - 0.5 * (1 - 3 / 8)) < 1e-9
    with pytest.raises(ArithmeticError):
        slecft.reflection_R(0.5 * (1 - 3 / 8), 3.0)


def test_annulus():
    m = slecft.mobius_annulus(0.0, 0.25)
    assert m.alpha == 0 and abs(m.q - 0.25) < 1e-15
    assert abs(slecft.bubble_mass(m, 1.0) - slecft.U_of_q(0.25)) < 1e-14
    off = slecft.mobius_annulus(0.3, 0.2)
    est = slecft.bubble_limit_estimate(off, 0.7, 1e-3)
    assert abs(est - slecft.bubble_mass(off, 0.7)) < 1e-4 * slecft.bubble_mass(off, 0.7)


def test_spectral_rhs_level_one():
    lam = -0.3
    v = slecft.spectral_rhs(lam, 3.0, [1], [1])
    assert abs(v - slecft.reflection_R(lam, 3.0) * 2 * lam) < 1e-12
    assert slecft.spectral_rhs(lam, 3.0, [1], [2]) == 0
    assert slecft.gram_inverse_check(2, "1/2", "3")["singular"]


def test_loewner():
    dt = 1e-3
    w = [0.0] * 1001
    g = slecft.forward_map(w, dt, 3j, 1.0)
    assert abs(g - cmath.sqrt((3j) ** 2 + 4)) < 1e-6
    tip = slecft.trace(w, dt)[-1]
    assert abs(tip - 2j) < 1e-3
    a = slecft.sample_sle_driving(3.0, 1.0, 0.01, 7)
    b = slecft.sample_sle_driving(3.0, 1.0, 0.01, 7)
    assert a == b and a[0] == 0.0 and len(a) == 101


def test_run_report():
    rep = slecft.run("kac", level=2, kappa="3")
    assert rep["schema_version"] == 1
    assert rep["status"] == "pass"
    assert sorted(rep["results"]["roots"]) == sorted(["0", "1/2", "1/16"])
    with pytest.raises(ValueError):
        slecft.run("no-such-command")
    with pytest.raises(ValueError):
        slecft.run("kac", not_a_key=1)
    assert "report-all" in slecft.commands
    assert math.isfinite(slecft.U_of_q(0.5))

"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import thetabounds as tb


def frac(s):
    return Fraction(s)


def test_krawtchouk_coefficients():
    # K^4_2(t) = 2t^2 - 8t + 6, ascending
    assert tb.krawtchouk(4, 2) == ["6", "-8", "2"]


def test_jacobi_low_degree():
    assert tb.jacobi(5, 1) == ["0", "1"]
    assert tb.jacobi(4, 2) == ["-1/3", "0", "4/3"]


def test_poly_eval_exact():
    assert tb.poly_eval(["-1", "0", "1"], "2") == "3"


def test_sturm():
    assert tb.sturm_nonpositive(["-1", "0", "1"], "-1", "1")
    assert not tb.sturm_nonpositive(["0", "1"], "-1", "1")


def test_solve_linear():
    x = tb.solve_linear([["1", "0"], ["0", "2"]], ["3", "4"])
    assert x == ["3", "2"]


def test_delsarte():
    assert tb.delsarte_lp_bound(4, 5) == "1"
    assert tb.delsarte_lp_bound(7, 3) == "16"
    assert frac(tb.delsarte_lp_bound(5, 3)) >= 4


def test_walsh_roundtrip_shape():
    out = tb.walsh_transform(["1", "1", "1", "1"])
    assert out == ["1", "0", "0", "0"]


def test_harm_dim():
    assert tb.harm_dim(3, 2) == 5


def test_cross_polytope_certificate():
    cert = tb.dgs_lp_bound(4, "0", 2)
    assert cert["bound"] == "8"
    assert cert["coeffs"] == ["0", "4", "3"]
    valid, reason = tb.verify_certificate(cert)
    assert valid and reason == "Valid"


def test_verify_rejects_corruption():
    cert = tb.dgs_lp_bound(3, "0", 2)
    cert["coeffs"][1] = "-3"
    valid, reason = tb.verify_certificate(cert)
    assert not valid
    assert reason == "NegativeCoefficient"


def test_theta_and_alpha_pentagon():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    rot = [(i + 1) % 5 for i in range(5)]
    refl = [(5 - i) % 5 for i in range(5)]
    theta = tb.theta_prime_reduced(5, edges, [rot, refl])
    assert abs(theta - 5**0.5) < 1e-6
    assert tb.stable_set_bruteforce(5, edges) == 2


def test_domain_error_maps_to_value_error():
    with pytest.raises(ValueError):
        tb.delsarte_lp_bound(4, 0)

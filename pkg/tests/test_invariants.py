"""Index invariants: element values, refinement searches, witnesses."""

import math
import random

import pytest

from indexlab.arith import gcd_all, primes_upto, valuation, vp_factorial
from indexlab.errors import RefinementCapExceeded
from indexlab.intpoly import IntPoly, parse_poly
from indexlab.invariants import (
    full_report,
    good_element,
    i_theta,
    maccluer_support,
    vp_IK,
    vp_iK,
)
from indexlab.numberfield import (
    build_field,
    char_poly,
    index_of,
    is_primitive,
)

DEDEKIND = "x^3 - x^2 - 2*x - 8"


def i_theta_oracle(field, t):
    """gcd of raw char-poly values over a window of integers."""
    f = char_poly(field, t)
    return gcd_all(f(x) for x in range(-100, 101))


def test_i_theta_examples():
    K = build_field(DEDEKIND)
    assert i_theta(K, K.generator()) == 2  # gcd(-8, -10, -8, 4)
    K17 = build_field("x^2 - x - 4")  # Q(sqrt 17) via its good generator
    assert i_theta(K17, K17.generator()) == 2
    K3 = build_field("x^3 - x + 3")
    assert i_theta(K3, K3.generator()) == 3  # gcd(3, 3, 9, 27)


def test_i_theta_matches_windowed_oracle():
    rng = random.Random(101)
    for poly in (DEDEKIND, "x^2 - 17", "x^3 - x + 3", "x^4 - x^3 - 6*x^2 + x + 1"):
        K = build_field(poly)
        for _ in range(50):
            t = K.element([rng.randint(-6, 6) for _ in range(K.degree)])
            assert i_theta(K, t) == i_theta_oracle(K, t)


def test_vp_iK_examples():
    # i((1+sqrt17)/2) = gcd(-4,-4,-2) = 2 certifies v_2 >= 1 and the
    # factorial bound v_2(2!) = 1 caps it
    K17 = build_field("x^2 - 17")
    assert vp_iK(K17, 2) == 1
    K3 = build_field("x^3 - x + 3")
    assert vp_iK(K3, 3) == 1
    assert vp_iK(K3, 5) == 0  # p > n
    assert vp_iK(K3, 7) == 0


def test_vp_IK_examples():
    K = build_field(DEDEKIND)
    assert vp_IK(K, 2) == 1
    K3 = build_field("x^3 - x + 3")
    assert vp_IK(K3, 3) == 0
    K17 = build_field("x^2 - 17")
    assert vp_IK(K17, 2) == 0
    assert vp_IK(K17, 3) == 0  # p > n


def test_maccluer_support_examples():
    assert maccluer_support(build_field(DEDEKIND)) == {2}
    assert maccluer_support(build_field("x^2 - 2")) == frozenset()
    assert maccluer_support(build_field("x^3 - x + 3")) == {3}


def test_full_report_examples():
    r = full_report(build_field(DEDEKIND))
    assert (r.i_K, r.I_K) == (2, 2)
    r = full_report(build_field("x^3 - 13*x + 4"))
    assert (r.i_K, r.I_K) == (2, 2)
    r = full_report(build_field("x^3 - x + 3"))
    assert (r.i_K, r.I_K) == (3, 1)
    assert r.support_i() == r.maccluer == {3}


def test_element_invariants_divide_field_invariants():
    rng = random.Random(211)
    for poly in (DEDEKIND, "x^2 - 17", "x^3 - 13*x + 4",
                 "x^4 - x^3 - 6*x^2 + x + 1", "x^3 - x + 3"):
        K = build_field(poly)
        r = full_report(K)
        sampled = 0
        while sampled < 150:
            t = K.element([rng.randint(-8, 8) for _ in range(K.degree)])
            if not is_primitive(K, t):
                continue
            sampled += 1
            assert r.i_K % i_theta(K, t) == 0  # i(t) | i(K)
            assert index_of(K, t) % r.I_K == 0  # I(K) | I(t)


def test_lcm_bound_factorial():
    for poly in (DEDEKIND, "x^4 - x^3 - 6*x^2 + x + 1",
                 "x^6 - 16*x^5 - 55*x^4 - 20*x^3 + 40*x^2 + 22*x + 1"):
        K = build_field(poly)
        r = full_report(K)
        for p, (vi, _) in r.valuations.items():
            assert vi <= vp_factorial(K.degree, p)


def test_divisor_direction_and_failed_converse():
    # v_p(I) > 0 forces v_p(i) > 0; the converse fails at Q(sqrt 17)
    for poly in (DEDEKIND, "x^2 - 17", "x^3 - 13*x + 4", "x^3 - x + 3"):
        r = full_report(build_field(poly))
        assert r.support_I() <= r.support_i()
    r17 = full_report(build_field("x^2 - 17"))
    assert r17.valuations[2] == (1, 0)


def test_cyclic_prime_degree_equivalence():
    # cyclic of prime degree l: for p != l, p | I(K) iff p | i(K)
    cases = [
        (parse_poly("x^3 - 39*x^2 - 42*x - 1"), 3),  # simplest cubic m = 39
        (parse_poly("x^3 - 2*x^2 - 5*x - 1"), 3),  # simplest cubic m = 2
        (IntPoly([1, 54, 135, -70, 4, 1]), 5),  # quintic family at m = 2
    ]
    for poly, ell in cases:
        K = build_field(poly)
        r = full_report(K)
        for p, (vi, vI) in r.valuations.items():
            if p != ell:
                assert (vi > 0) == (vI > 0)


def test_good_element_examples_and_properties():
    K17 = build_field("x^2 - 17")
    w = good_element(K17)
    assert char_poly(K17, w) == parse_poly("x^2 - x - 4")
    K3 = build_field("x^3 - x + 3")
    w3 = good_element(K3)
    assert is_primitive(K3, w3) and i_theta(K3, w3) == 3
    for poly in (DEDEKIND, "x^3 - 13*x + 4", "x^4 - x^3 - 6*x^2 + x + 1"):
        K = build_field(poly)
        r = full_report(K)
        w = r.witness
        assert is_primitive(K, w)
        assert i_theta(K, w) == r.i_K


def test_good_element_trivial_invariant_returns_generator():
    K = build_field("x^2 - 5")
    assert good_element(K) == K.generator()


def test_refinement_cap_exceeded():
    K = build_field("x^2 - 17")
    with pytest.raises(RefinementCapExceeded):
        vp_iK(K, 2, cap=0)
    Kq = build_field("x^4 - x^3 - 6*x^2 + x + 1")  # equation order not 2-maximal
    with pytest.raises(RefinementCapExceeded):
        vp_IK(Kq, 2, cap=0)


def test_env_cap_override(monkeypatch):
    monkeypatch.setenv("INDEXLAB_CAP", "0")
    K = build_field("x^2 - 17")
    with pytest.raises(RefinementCapExceeded):
        vp_iK(K, 2)
    monkeypatch.setenv("INDEXLAB_CAP", "9")
    assert vp_iK(K, 2) == 1


def test_report_is_cached():
    K = build_field(DEDEKIND)
    assert full_report(K) is full_report(K)

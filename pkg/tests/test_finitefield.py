"""Factorization over F_p, checked against exhaustive enumeration."""

import random

import pytest

from indexlab.errors import InvalidDegree, ZeroModP
from indexlab.intpoly import IntPoly, parse_poly
from indexlab.modpoly import (
    ModPoly,
    count_monic_irreducibles,
    factor_mod_p,
    is_squarefree_mod_p,
    monic_irreducibles,
)


def all_monic(p, degree):
    """Every monic polynomial of the given degree over F_p."""
    out = []
    for code in range(p**degree):
        cs = []
        c = code
        for _ in range(degree):
            cs.append(c % p)
            c //= p
        out.append(ModPoly(p, cs + [1]))
    return out


def is_irreducible_bruteforce(f):
    """Oracle: no monic divisor of degree 1 .. deg-1."""
    for d in range(1, f.degree):
        for g in all_monic(f.p, d):
            if (f % g).is_zero:
                return False
    return True


def test_factor_examples():
    fac = factor_mod_p(parse_poly("x^3 - x^2 - 2*x - 8"), 2)
    assert [(list(g.coeffs), e) for g, e in fac.factors] == [([0, 1], 2), ([1, 1], 1)]
    fac = factor_mod_p(parse_poly("x^2 + 1"), 2)
    assert [(list(g.coeffs), e) for g, e in fac.factors] == [([1, 1], 2)]
    fac = factor_mod_p(parse_poly("x^3 - x + 3"), 3)
    assert [(list(g.coeffs), e) for g, e in fac.factors] == [
        ([0, 1], 1),
        ([1, 1], 1),
        ([2, 1], 1),
    ]


def test_factor_rejects_zero_mod_p():
    with pytest.raises(ZeroModP):
        factor_mod_p(parse_poly("3*x^2 + 6"), 3)


def test_factor_roundtrip_and_irreducibility_exhaustive():
    rng = random.Random(13)
    for p in (2, 3, 5):
        for _ in range(60):
            deg = rng.randint(1, 4)
            coeffs = [rng.randint(0, p - 1) for _ in range(deg)] + [rng.randint(1, p - 1)]
            f = ModPoly(p, coeffs)
            fac = factor_mod_p(f, p)
            assert fac.product() == f
            assert sum(g.degree * e for g, e in fac.factors) == f.degree
            for g, _ in fac.factors:
                assert g.lc == 1
                assert is_irreducible_bruteforce(g)
            # factors pairwise distinct
            assert len({g.coeffs for g, _ in fac.factors}) == len(fac.factors)


def test_factor_high_multiplicity_char_p_cases():
    # (x+1)^4 mod 2 and x^9 + 2 = (x^3 + 2)^3 ... mod 3 exercise the p-power branch
    f = ModPoly(2, [1, 1])
    g = f * f * f * f
    fac = factor_mod_p(g, 2)
    assert [(list(h.coeffs), e) for h, e in fac.factors] == [([1, 1], 4)]
    h = ModPoly(3, [2, 0, 0, 1])  # x^3 + 2, irreducible? x^3+2 = (x+2)^3 mod 3
    cube = h * h * h
    fac = factor_mod_p(cube, 3)
    assert fac.product() == cube


def test_factor_large_prime_path():
    # p > 7 goes through distinct-degree/equal-degree splitting
    for p in (11, 17, 101):
        f = parse_poly("x^4 + 1")
        fac = factor_mod_p(f, p)
        assert fac.product() == ModPoly.from_intpoly(f, p)
        assert sum(g.degree * e for g, e in fac.factors) == 4
        for g, _ in fac.factors:
            assert g.degree in (1, 2)  # x^4+1 never stays irreducible mod p


def test_is_squarefree_examples():
    assert is_squarefree_mod_p(parse_poly("x^2 - 17"), 2) is False
    assert is_squarefree_mod_p(parse_poly("x^3 - x + 3"), 3) is True
    assert is_squarefree_mod_p(parse_poly("x^2 + x + 1"), 2) is True


def test_count_monic_irreducibles_examples():
    assert count_monic_irreducibles(2, 1) == 2
    assert count_monic_irreducibles(2, 2) == 1
    assert count_monic_irreducibles(3, 1) == 3
    with pytest.raises(InvalidDegree):
        count_monic_irreducibles(2, 0)


def test_count_matches_enumeration():
    for p in (2, 3, 5):
        for d in range(1, 5):
            enumerated = [f for f in all_monic(p, d) if is_irreducible_bruteforce(f)]
            assert count_monic_irreducibles(p, d) == len(enumerated)
            assert list(monic_irreducibles(p, d)) == sorted(
                enumerated, key=ModPoly.sort_key
            )


def test_factor_output_deterministic():
    f = parse_poly("x^6 - x")
    a = factor_mod_p(f, 5)
    b = factor_mod_p(f, 5)
    assert a == b
    degrees = [g.degree for g, _ in a.factors]
    assert degrees == sorted(degrees)

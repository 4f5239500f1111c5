"""The two index invariants of a number field and their witnesses.

For a primitive integer t with characteristic polynomial F, the element
invariants are

  index(t)   = [A : Z[t]],              combined over the field by gcd,
  value_gcd  = gcd over x in Z of F(x), combined over the field by lcm.

The gcd of F over all integers equals gcd(F(0), ..., F(n)): a monic
degree-n polynomial is an integer combination of binomial coefficients
binomial(x, k), k <= n, so its values on n+1 consecutive integers generate
all of its values.  Both invariants are supported on primes p <= n and are
computed exactly by the residue-refinement searches in `refinement`; the
support of the lcm invariant is also computable directly from splitting
data (a prime p <= n divides it iff p has at least p distinct prime ideal
factors), which full_report records separately so the two routes can be
cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import check_prime, gcd_all, primes_upto
from .errors import IndexLabError
from .intpoly import IntPoly
from .numberfield import (
    AlgebraicInt,
    NumberField,
    SplittingType,
    char_poly,
    is_primitive,
    split_prime,
)
from .refinement import env_cap_override, max_i_valuation, min_index_valuation


def i_theta(field: NumberField, t: AlgebraicInt) -> int:
    """gcd over all integers x of F_t(x), via the values at x = 0..n."""
    f = char_poly(field, t)
    return gcd_all(f(x) for x in range(field.degree + 1))


def _vp_i_cached(field: NumberField, p: int, cap=None):
    # an explicit cap is a diagnostic mode and bypasses the cache
    if cap is not None:
        return max_i_valuation(field, p, cap=cap)
    cache = field.invariant_cache.setdefault("vp_i", {})
    if p not in cache:
        cache[p] = max_i_valuation(field, p, cap=env_cap_override())
    return cache[p]


def vp_iK(field: NumberField, p: int, cap=None) -> int:
    """Exact max over primitive t of v_p(i(t)); 0 immediately for p > degree."""
    check_prime(p)
    return _vp_i_cached(field, p, cap)[0]


def vp_IK(field: NumberField, p: int, cap=None) -> int:
    """Exact min over primitive t of v_p(index of t); 0 for p > degree."""
    check_prime(p)
    if cap is not None:
        return min_index_valuation(field, p, cap=cap)
    cache = field.invariant_cache.setdefault("vp_I", {})
    if p not in cache:
        cache[p] = min_index_valuation(field, p, cap=env_cap_override())
    return cache[p]


def maccluer_support(field: NumberField) -> frozenset[int]:
    """Primes p <= n with at least p distinct prime ideal factors."""
    return frozenset(
        p
        for p in primes_upto(field.degree)
        if split_prime(field, p).num_primes >= p
    )


def _small_vectors(n: int, box: int):
    if n == 0:
        yield ()
        return
    for rest in _small_vectors(n - 1, box):
        for c in range(box):
            yield (c,) + rest


def good_element(field: NumberField, cap=None) -> AlgebraicInt:
    """A primitive t whose value-gcd i(t) attains the field invariant i(K).

    Certified refinement classes attaining each v_p are combined by CRT
    (they are stable under lifting, so a simultaneous representative
    exists); the representative is then nudged by multiples of the combined
    modulus until primitive.
    """
    n = field.degree
    witnesses = []
    for p in primes_upto(n):
        val, wit = _vp_i_cached(field, p, cap)
        if val > 0:
            witnesses.append((p, wit))
    if not witnesses:
        return field.generator()
    modulus = 1
    coords = [0] * n
    for p, (level, wcoords) in witnesses:
        q = p**level
        if modulus == 1:
            modulus = q
            coords = list(wcoords)
            continue
        inv_m = pow(modulus, -1, q)
        new = []
        for c_old, c_new in zip(coords, wcoords):
            t = ((c_new - c_old) * inv_m) % q
            new.append(c_old + modulus * t)
        coords = new
        modulus *= q
    for box in (1, 2, 3, 5):
        for bump in _small_vectors(n, box):
            cand = field.element(
                [c + modulus * b for c, b in zip(coords, bump)]
            )
            if is_primitive(field, cand):
                expected = _i_K_value(field, cap)
                got = i_theta(field, cand)
                assert got == expected, "witness does not attain the invariant"
                return cand
    raise IndexLabError("could not find a primitive representative")


def _i_K_value(field: NumberField, cap=None) -> int:
    out = 1
    for p in primes_upto(field.degree):
        out *= p ** vp_iK(field, p, cap)
    return out


def _I_K_value(field: NumberField, cap=None) -> int:
    out = 1
    for p in primes_upto(field.degree):
        out *= p ** vp_IK(field, p, cap)
    return out


@dataclass
class InvariantReport:
    """Everything the engine knows about one field's index invariants."""

    poly: IntPoly
    degree: int
    field_disc: int
    splittings: dict[int, SplittingType]
    i_K: int
    I_K: int
    valuations: dict[int, tuple[int, int]]  # p -> (v_p(i(K)), v_p(I(K)))
    witness: AlgebraicInt
    witness_char_poly: IntPoly
    maccluer: frozenset[int]

    def support_i(self) -> frozenset[int]:
        return frozenset(p for p, (vi, _) in self.valuations.items() if vi > 0)

    def support_I(self) -> frozenset[int]:
        return frozenset(p for p, (_, vI) in self.valuations.items() if vI > 0)


def full_report(field: NumberField, cap=None) -> InvariantReport:
    """Assemble splittings, i(K), I(K), valuations, and a good element.

    i(K) and I(K) are products over all primes p <= n of the refinement
    valuations; the report also carries the splitting-based support so the
    two characterizations can be compared independently.
    """
    cached = field.invariant_cache.get("report")
    if cached is not None and cap is None:
        return cached
    n = field.degree
    primes = primes_upto(n)
    splittings = {p: split_prime(field, p) for p in primes}
    valuations = {p: (vp_iK(field, p, cap), vp_IK(field, p, cap)) for p in primes}
    i_k = 1
    big_i_k = 1
    for p, (vi, v_idx) in valuations.items():
        i_k *= p**vi
        big_i_k *= p**v_idx
    witness = good_element(field, cap)
    report = InvariantReport(
        poly=field.poly,
        degree=n,
        field_disc=field.disc,
        splittings=splittings,
        i_K=i_k,
        I_K=big_i_k,
        valuations=valuations,
        witness=witness,
        witness_char_poly=char_poly(field, witness),
        maccluer=maccluer_support(field),
    )
    if cap is None:
        field.invariant_cache.setdefault("report", report)
    return report

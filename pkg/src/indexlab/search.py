"""Constructive search for degree-n fields whose lcm invariant a given
prime divides.

The targeted construction picks at least p distinct monic irreducibles over
F_p with degrees summing to n, multiplies them, and lifts the product to a
monic integer polynomial.  Any irreducible lift works: the product is
squarefree mod p, so the equation order is p-maximal, p then has >= p
distinct prime factors, and p divides i(K).  A seeded random coefficient
box is kept as a fallback; every hit is re-verified through the exact
engine before being returned.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .arith import check_prime
from .errors import ReduciblePolynomial, SearchBudgetExhausted
from .intpoly import IntPoly
from .invariants import InvariantReport, full_report
from .modpoly import monic_irreducibles
from .numberfield import build_field, is_irreducible

DEFAULT_BUDGET = 20_000


@dataclass(frozen=True)
class SearchResult:
    poly: IntPoly
    report: InvariantReport
    candidates_tried: int


def _target_product(n: int, p: int) -> IntPoly:
    """Lift of a product of >= p distinct irreducibles mod p, total degree n."""
    if n == p:
        parts = list(monic_irreducibles(p, 1))
    else:
        parts = list(monic_irreducibles(p, 1))[: p - 1]
        parts.append(monic_irreducibles(p, n - p + 1)[0])
    out = IntPoly([1])
    for g in parts:
        out = out * IntPoly(g.coeffs)
    assert out.degree == n
    return out


def _targeted_candidates(n: int, p: int):
    base = _target_product(n, p)
    # perturb below the leading term by p * g, keeping the reduction mod p
    for radius in (1, 2, 3):
        for bump in itertools.product(range(-radius, radius + 1), repeat=min(n, 4)):
            g = [p * c for c in bump] + [0] * (n - len(bump))
            yield base + IntPoly(g)


def _random_candidates(n: int, p: int, seed: int):
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(n)] + [1]
        yield IntPoly(coeffs)


def search_prime_divisor_field(
    n: int, p: int, seed: int = 0, budget: int = DEFAULT_BUDGET, cap: int | None = None
) -> SearchResult:
    """First monic degree-n f (targeted order, then seeded random) whose
    field satisfies p | i(K), verified by the exact engine."""
    check_prime(p)
    if not 2 <= n <= 7 or p > n:
        raise ValueError("need a prime p <= n and 2 <= n <= 7")
    tried = 0
    for f in itertools.chain(_targeted_candidates(n, p), _random_candidates(n, p, seed)):
        if tried >= budget:
            raise SearchBudgetExhausted(
                f"no degree-{n} field with {p} | i(K) within {budget} candidates"
            )
        tried += 1
        if not is_irreducible(f):
            continue
        try:
            field = build_field(f)
        except ReduciblePolynomial:
            continue
        report = full_report(field, cap)
        if report.i_K % p == 0:
            return SearchResult(poly=f, report=report, candidates_tried=tried)
    raise AssertionError("unreachable")

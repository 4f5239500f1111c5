"""Number fields of degree <= 7 from defining polynomials.

A field is built by maximalizing the equation order Z[theta] at every prime
whose square divides disc(f): the radical of pO is computed as a Frobenius
kernel, its ring of multipliers enlarges the order, and the loop repeats
until stable.  The integral basis is stored as a lower-triangular HNF matrix
over the power basis with one common denominator, so basis vector i only
involves 1, theta, ..., theta^i and the first basis vector is always 1.

Elements carry integer coordinates over the integral basis.  The index of a
primitive element t is |det| of the matrix expressing 1, t, ..., t^(n-1)
over the integral basis; its square times the field discriminant equals the
discriminant of the characteristic polynomial of t.

Prime splitting: when the equation order is p-maximal the splitting type is
read off the factorization of f mod p; otherwise the finite algebra A/pA is
decomposed into local components by lifting the idempotents of its
semisimple quotient.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .arith import INFINITY, check_prime, divisors, square_divisor_primes
from .errors import (
    DegreeOutOfScope,
    InvalidDegree,
    InvalidInput,
    ReduciblePolynomial,
)
from .intmatrix import (
    IntMatrix,
    det_rows,
    hnf_basis,
    hnf_lower,
    mat_mul,
    solve_lower_triangular,
    solve_upper_triangular,
)
from .intpoly import IntPoly, as_poly, poly_discriminant
from .modpoly import ModPoly, factor_mod_p, gcd_mod, is_squarefree_mod_p

MAX_DEGREE = 7


# -- linear algebra over F_p (tiny dimensions) ------------------------------


def _rref_mod_p(rows, p):
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _rank_mod_p(rows, p):
    return len(_rref_mod_p(rows, p)[0])


def _left_nullspace_mod_p(rows, p):
    """Basis of {v : v * M = 0 mod p} for the row-list M."""
    nrows = len(rows)
    transposed = [[rows[i][j] % p for i in range(nrows)] for j in range(len(rows[0]))]
    rref, pivots = _rref_mod_p(transposed, p)
    free = [c for c in range(nrows) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * nrows
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-rref[r][fc]) % p
        basis.append(v)
    return basis


def _solve_mod_p(rows, target, p):
    """Coefficients c with sum_i c_i * rows_i = target mod p, rows independent."""
    k = len(rows)
    aug = [[rows[i][j] % p for i in range(k)] + [target[j] % p] for j in range(len(target))]
    sol = [0] * k
    pivots = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [(x * inv) % p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for rr, pc in enumerate(pivots):
        sol[pc] = aug[rr][k]
    return sol


def _matpow_mod_p(m, e, p):
    n = len(m)
    out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    base = [row[:] for row in m]
    while e:
        if e & 1:
            out = [[sum(a * b for a, b in zip(row, col)) % p for col in zip(*base)] for row in out]
        base = [[sum(a * b for a, b in zip(row, col)) % p for col in zip(*base)] for row in base]
        e >>= 1
    return out


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return v


def _eval_mod(coeffs, x, p):
    v = 0
    for c in reversed(coeffs):
        v = (v * x + c) % p
    return v


# -- characteristic polynomial (exact, Faddeev-LeVerrier) -------------------


def _charpoly_rows(m):
    """Monic char poly of an integer matrix, descending coefficients."""
    n = len(m)
    coeffs = [1]
    a = [row[:] for row in m]
    for k in range(1, n + 1):
        tr = sum(a[i][i] for i in range(n))
        assert tr % k == 0, "trace recurrence must divide exactly"
        c = -(tr // k)
        coeffs.append(c)
        if k < n:
            for i in range(n):
                a[i][i] += c
            a = mat_mul(m, a)
    return coeffs


# -- irreducibility over Q ---------------------------------------------------


def _subset_degree_sums(degs, n):
    bits = 1
    for d in degs:
        bits |= bits << d
    return {k for k in range(1, n) if (bits >> k) & 1}


def is_irreducible(f) -> bool:
    """Exact irreducibility over Q for monic integer polynomials.

    Rational-root test, then modular degree-pattern certificates; the rare
    inconclusive cases fall back to sympy's exact factorization.
    """
    f = as_poly(f)
    n = f.degree
    if n < 1:
        return False
    if not f.is_monic:
        raise InvalidInput("irreducibility test expects a monic polynomial")
    if n == 1:
        return True
    c0 = f(0)
    if c0 == 0:
        return False
    if poly_discriminant(f) == 0:
        return False
    for d in divisors(c0):
        if f(d) == 0 or f(-d) == 0:
            return False
    if n <= 3:
        return True
    from .arith import primes_upto

    candidates = set(range(1, n))
    for p in primes_upto(200):
        if not is_squarefree_mod_p(f, p):
            continue
        fac = factor_mod_p(f, p)
        degs = [g.degree for g, e in fac.factors for _ in range(e)]
        candidates &= _subset_degree_sums(degs, n)
        if not candidates:
            return True
    from sympy import Poly, symbols

    return bool(Poly(list(reversed(f.coeffs)), symbols("x")).is_irreducible)


def _check_defining_poly(f) -> IntPoly:
    f = as_poly(f)
    if f.degree < 1:
        raise InvalidDegree("defining polynomial must have degree >= 1")
    if f.degree > MAX_DEGREE:
        raise DegreeOutOfScope(f"degree {f.degree} > {MAX_DEGREE}")
    if not f.is_monic:
        raise InvalidInput("defining polynomial must be monic")
    if not is_irreducible(f):
        raise ReduciblePolynomial(f"{f} is reducible over Q")
    return f


# -- orders ------------------------------------------------------------------


class _Order:
    """Order in Q[x]/(f): lower-triangular HNF basis over the power basis."""

    __slots__ = ("poly", "n", "den", "w", "table")

    def __init__(self, poly, w_rows, den):
        self.poly = poly
        self.n = poly.degree
        g = den
        for row in w_rows:
            for x in row:
                if x:
                    g = math.gcd(g, x)
        w_rows = [[x // g for x in row] for row in w_rows]
        self.den = den // g
        self.w = hnf_lower(w_rows)
        assert self.w[0][0] == self.den, "order must contain 1"
        self.table = self._times_table()

    def _power_table(self):
        """Coordinates of x^k mod f over the power basis, k = 0 .. 2n-2."""
        n = self.n
        f = self.poly
        powers = [_unit(n, k) for k in range(n)]
        if n >= 2:
            vn = [-f[i] for i in range(n)]
            cur = vn
            powers.append(cur)
            for _ in range(n + 1, 2 * n - 1):
                top = cur[n - 1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [a + top * b for a, b in zip(cur, vn)]
                powers.append(cur)
        return powers

    def _times_table(self):
        n = self.n
        powers = self._power_table()
        den = self.den
        table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                conv = [0] * (2 * n - 1)
                for a, ca in enumerate(self.w[i]):
                    if ca:
                        for b, cb in enumerate(self.w[j]):
                            if cb:
                                conv[a + b] += ca * cb
                u = [0] * n
                for k, c in enumerate(conv):
                    if c:
                        pk = powers[k]
                        for t in range(n):
                            u[t] += c * pk[t]
                assert all(x % den == 0 for x in u), "product left the order lattice"
                u = [x // den for x in u]
                coords = solve_lower_triangular(self.w, u)
                assert coords is not None, "order is not multiplicatively closed"
                table[i][j] = tuple(coords)
                table[j][i] = tuple(coords)
        return tuple(tuple(row) for row in table)

    def mul_coords(self, u, v):
        n = self.n
        out = [0] * n
        for i, ui in enumerate(u):
            if ui:
                ti = self.table[i]
                for j, vj in enumerate(v):
                    if vj:
                        c = ui * vj
                        tij = ti[j]
                        for k in range(n):
                            out[k] += c * tij[k]
        return out

    def basis_index(self):
        """Index of the power-basis lattice Z[theta] in this order."""
        det = 1
        for i in range(self.n):
            det *= self.w[i][i]
        num = self.den**self.n
        assert num % det == 0
        return num // det


def _equation_order(f) -> _Order:
    n = f.degree
    return _Order(f, [_unit(n, i) for i in range(n)], 1)


def _mod_table(order, p):
    return [
        [[c % p for c in order.table[i][j]] for j in range(order.n)]
        for i in range(order.n)
    ]


def _alg_mul_mod_p(u, v, table, p):
    n = len(u)
    out = [0] * n
    for i, ui in enumerate(u):
        if ui:
            ti = table[i]
            for j, vj in enumerate(v):
                if vj:
                    c = ui * vj
                    tij = ti[j]
                    for k in range(n):
                        out[k] += c * tij[k]
    return [x % p for x in out]


def _frobenius_matrix(table, p, n):
    """Matrix (rows) of x -> x^p on the algebra with this times table."""
    rows = []
    for i in range(n):
        acc = _unit(n, 0)
        base = _unit(n, i)
        e = p
        while e:
            if e & 1:
                acc = _alg_mul_mod_p(acc, base, table, p)
            base = _alg_mul_mod_p(base, base, table, p)
            e >>= 1
        rows.append(acc)
    return rows


def _radical_rows(order, p):
    """HNF basis of the radical of p*O inside O (Frobenius kernel pullback)."""
    n = order.n
    table = _mod_table(order, p)
    phi = _frobenius_matrix(table, p, n)
    k = 1
    q = p
    while q < n:
        q *= p
        k += 1
    phik = _matpow_mod_p(phi, k, p)
    kernel = _left_nullspace_mod_p(phik, p)
    rows = [[p if i == j else 0 for j in range(n)] for i in range(n)]
    rows.extend([x % p for x in v] for v in kernel)
    basis = hnf_basis(rows)
    assert len(basis) == n
    return basis


def _enlarge_at_p(order, p):
    """One multiplier-ring step; returns (possibly new order, v_p index gained)."""
    n = order.n
    rad = _radical_rows(order, p)
    big = []
    for i in range(n):
        flat = []
        e = _unit(n, i)
        for j in range(n):
            u = order.mul_coords(e, rad[j])
            z = solve_upper_triangular(rad, u)
            assert z is not None, "radical is not an ideal"
            flat.extend(z)
        big.append([x % p for x in flat])
    kernel = _left_nullspace_mod_p(big, p)
    if not kernel:
        return order, 0
    rows = [[p if i == j else 0 for j in range(n)] for i in range(n)]
    rows.extend([x % p for x in v] for v in kernel)
    rel = hnf_basis(rows)
    det_v = 1
    for i in range(n):
        det_v *= rel[i][i]
    gain = n
    while det_v > 1:
        assert det_v % p == 0
        det_v //= p
        gain -= 1
    if gain == 0:
        return order, 0
    new_w = mat_mul(rel, order.w)
    return _Order(order.poly, new_w, order.den * p), gain


def _p_maximalize(order, p):
    total = 0
    while True:
        order, gain = _enlarge_at_p(order, p)
        if gain == 0:
            return order, total
        total += gain


# -- public operations on defining polynomials ------------------------------


def dedekind_test(f, p: int) -> bool:
    """True iff the equation order Z[x]/(f) is p-maximal (Dedekind criterion)."""
    f = as_poly(f)
    check_prime(p)
    fac = factor_mod_p(f, p)
    g_star = IntPoly([1])
    h_star = IntPoly([1])
    for g, e in fac.factors:
        lift = IntPoly(g.coeffs)
        g_star = g_star * lift
        h_star = h_star * lift ** (e - 1)
    diff = g_star * h_star - f
    assert all(c % p == 0 for c in diff.coeffs)
    t_bar = ModPoly(p, [c // p for c in diff.coeffs])
    g_bar = ModPoly(p, g_star.coeffs)
    h_bar = ModPoly(p, h_star.coeffs)
    return gcd_mod(gcd_mod(t_bar, g_bar), h_bar).degree == 0


@dataclass(frozen=True)
class PMaximalOrder:
    """p-maximal overorder of an equation order: basis/den over the power basis."""

    basis: IntMatrix
    den: int
    vp_index: int


def p_maximal_order(f, p: int) -> PMaximalOrder:
    """Round-2 loop at p starting from the equation order of f.

    Returns the p-maximal order's basis (lower-triangular HNF over the power
    basis, common denominator `den`) and v_p of its index over Z[theta].
    """
    f = _check_defining_poly(f)
    check_prime(p)
    order, total = _p_maximalize(_equation_order(f), p)
    return PMaximalOrder(basis=IntMatrix(order.w), den=order.den, vp_index=total)


# -- splitting types ---------------------------------------------------------


class SplittingType:
    """Multiset of (ramification index e, residue degree f) pairs for a prime."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        ps = tuple(sorted((int(e), int(f)) for e, f in pairs))
        if any(e < 1 or f < 1 for e, f in ps):
            raise InvalidInput("splitting pairs must be >= 1")
        object.__setattr__(self, "pairs", ps)

    def __setattr__(self, *a):
        raise AttributeError("SplittingType is immutable")

    @property
    def residue_sum(self) -> int:
        return sum(e * f for e, f in self.pairs)

    @property
    def num_primes(self) -> int:
        return len(self.pairs)

    def is_ramified(self) -> bool:
        return any(e > 1 for e, _ in self.pairs)

    def __eq__(self, other):
        return isinstance(other, SplittingType) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        return "".join(f"({e},{f})" for e, f in self.pairs)

    def __repr__(self):
        return f"SplittingType({list(self.pairs)!r})"


# -- number fields and elements ----------------------------------------------


class AlgebraicInt:
    """Algebraic integer: coordinates over the field's integral basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        cs = tuple(int(c) for c in coords)
        if len(cs) != field.degree:
            raise InvalidInput("coordinate length must match field degree")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, *a):
        raise AttributeError("AlgebraicInt is immutable")

    def _check(self, other):
        if not isinstance(other, AlgebraicInt) or other.field is not self.field:
            raise InvalidInput("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return AlgebraicInt(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return AlgebraicInt(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraicInt(self.field, [other * c for c in self.coords])
        self._check(other)
        return AlgebraicInt(
            self.field, self.field._order.mul_coords(self.coords, other.coords)
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraicInt)
            and other.field is self.field
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.field), self.coords))

    def __repr__(self):
        return f"AlgebraicInt({list(self.coords)!r})"


class NumberField:
    """Number field with exact integral basis, discriminant, and splitting cache."""

    def __init__(self, order: _Order, index_valuations: dict[int, int]):
        self._order = order
        self.poly = order.poly
        self.degree = order.n
        self.den = order.den
        self.basis_rows = tuple(tuple(r) for r in order.w)
        self.poly_disc = poly_discriminant(order.poly)
        self.index = order.basis_index()
        self.index_valuations = dict(index_valuations)
        assert self.poly_disc % (self.index * self.index) == 0
        self.disc = self.poly_disc // (self.index * self.index)
        assert self.disc % 4 in (0, 1), "field discriminant must be 0 or 1 mod 4"
        self._split_cache: dict[int, SplittingType] = {}
        self._cache_lock = threading.Lock()
        self.invariant_cache: dict = {}

    @property
    def basis(self) -> IntMatrix:
        return IntMatrix(self.basis_rows)

    @property
    def times_table(self):
        return self._order.table

    def element(self, coords) -> AlgebraicInt:
        return AlgebraicInt(self, coords)

    def rational(self, c: int) -> AlgebraicInt:
        return AlgebraicInt(self, [c] + [0] * (self.degree - 1))

    def generator(self) -> AlgebraicInt:
        """theta itself, written over the integral basis."""
        if self.degree == 1:
            return self.rational(-self.poly[0])
        target = [0] * self.degree
        target[1] = self.den
        coords = solve_lower_triangular(self.basis_rows, target)
        assert coords is not None
        return AlgebraicInt(self, coords)

    def to_power_coords(self, t: AlgebraicInt):
        """Power-basis coordinates of t as (integer vector, denominator)."""
        n = self.degree
        num = [0] * n
        for i, c in enumerate(t.coords):
            if c:
                for j in range(n):
                    num[j] += c * self.basis_rows[i][j]
        return num, self.den

    def mult_matrix(self, t: AlgebraicInt):
        """Matrix (rows) of multiplication by t over the integral basis."""
        n = self.degree
        table = self._order.table
        rows = []
        for j in range(n):
            acc = [0] * n
            for i, ti in enumerate(t.coords):
                if ti:
                    tij = table[i][j]
                    for k in range(n):
                        acc[k] += ti * tij[k]
            rows.append(acc)
        return rows

    def powers_matrix(self, t: AlgebraicInt):
        """Rows: coordinates of 1, t, ..., t^(n-1) over the integral basis."""
        n = self.degree
        rows = [_unit(n, 0)]
        if n > 1:
            cur = list(t.coords)
            rows.append(cur)
            for _ in range(n - 2):
                cur = self._order.mul_coords(cur, t.coords)
                rows.append(cur)
        return rows

    def split_prime(self, p: int, *, force_general: bool = False) -> SplittingType:
        return split_prime(self, p, force_general=force_general)

    def __repr__(self):
        return f"NumberField({self.poly}, disc={self.disc})"


def build_field(f) -> NumberField:
    """Construct the number field defined by the monic irreducible f (deg <= 7).

    The resulting order is p-maximal at every prime with p^2 | disc(f), so it
    is the full ring of integers; .disc is the exact field discriminant.
    """
    f = _check_defining_poly(f)
    disc_f = poly_discriminant(f)
    order = _equation_order(f)
    index_valuations: dict[int, int] = {}
    for p in square_divisor_primes(disc_f):
        if dedekind_test(f, p):
            continue
        order, gain = _p_maximalize(order, p)
        if gain:
            index_valuations[p] = gain
    return NumberField(order, index_valuations)


# -- characteristic polynomial, index, primitivity ----------------------------


def char_poly(field: NumberField, t: AlgebraicInt) -> IntPoly:
    """Monic degree-n characteristic polynomial of multiplication by t."""
    coeffs = _charpoly_rows(field.mult_matrix(t))
    return IntPoly(list(reversed(coeffs)))


def index_of(field: NumberField, t: AlgebraicInt):
    """Index [A : Z[t]] for primitive t; INFINITY when t is not primitive."""
    d = det_rows(field.powers_matrix(t))
    if d == 0:
        return INFINITY
    return abs(d)


def is_primitive(field: NumberField, t: AlgebraicInt) -> bool:
    """True iff t generates the field (its power-basis matrix is nonsingular)."""
    return det_rows(field.powers_matrix(t)) != 0


# -- prime splitting -----------------------------------------------------------


def _split_via_poly(field: NumberField, p: int) -> SplittingType:
    fac = factor_mod_p(field.poly, p)
    return SplittingType((e, g.degree) for g, e in fac.factors)


def _minpoly_in_subalgebra(u, unit, table, p):
    """Min poly (ascending, monic) of u in the subalgebra with unity `unit`."""
    vecs = [unit]
    x = u
    while True:
        if _rank_mod_p(vecs + [x], p) == len(vecs):
            sol = _solve_mod_p(vecs, x, p)
            return [(-c) % p for c in sol] + [1]
        vecs.append(x)
        x = _alg_mul_mod_p(x, u, table, p)


def _split_via_algebra(field: NumberField, p: int) -> SplittingType:
    """Decompose A/pA into local components via idempotent lifting."""
    n = field.degree
    table = _mod_table(field._order, p)

    def mul(u, v):
        return _alg_mul_mod_p(u, v, table, p)

    one = _unit(n, 0)
    phi = _frobenius_matrix(table, p, n)
    k = 1
    q = p
    while q < n:
        q *= p
        k += 1
    phik = _matpow_mod_p(phi, k, p)
    radical = _left_nullspace_mod_p(phik, p)
    rad_rref, rad_pivots = _rref_mod_p(radical, p)
    comp_coords = [c for c in range(n) if c not in rad_pivots]
    s = len(comp_coords)
    assert s >= 1, "A/pA cannot be nilpotent"

    def project(v):
        rem = [c % p for c in v]
        for r, pc in enumerate(rad_pivots):
            f = rem[pc]
            if f:
                rem = [(a - f * b) % p for a, b in zip(rem, rad_rref[r])]
        return [rem[c] for c in comp_coords]

    def lift(y):
        v = [0] * n
        for c, val in zip(comp_coords, y):
            v[c] = val % p
        return v

    s_table = [
        [project(mul(lift(_unit(s, a)), lift(_unit(s, b)))) for b in range(s)]
        for a in range(s)
    ]

    def s_mul(u, v):
        return _alg_mul_mod_p(u, v, s_table, p)

    one_s = project(one)

    def s_pow(v, e):
        acc = one_s
        base = v
        while e:
            if e & 1:
                acc = s_mul(acc, base)
            base = s_mul(base, base)
            e >>= 1
        return acc

    # the Frobenius-fixed subspace of the semisimple quotient is spanned by
    # its primitive idempotents; splitting along a basis of it separates all
    # the residue fields
    phi_s = [s_pow(_unit(s, a), p) for a in range(s)]
    fix = [[(phi_s[a][b] - (1 if a == b else 0)) % p for b in range(s)] for a in range(s)]
    v_basis = _left_nullspace_mod_p(fix, p)

    idempotents = [one_s]
    for v in v_basis:
        new = []
        for e in idempotents:
            u = s_mul(v, e)
            mp = _minpoly_in_subalgebra(u, e, s_table, p)
            roots = [c for c in range(p) if _eval_mod(mp, c, p) == 0]
            if len(roots) <= 1:
                new.append(e)
                continue
            for c in roots:
                ec = e
                for c2 in roots:
                    if c2 == c:
                        continue
                    inv = pow((c - c2) % p, -1, p)
                    factor = [((a - c2 * b) * inv) % p for a, b in zip(u, e)]
                    ec = s_mul(ec, factor)
                new.append(ec)
        idempotents = new

    pairs = []
    for e_s in idempotents:
        f_deg = _rank_mod_p([s_mul(e_s, _unit(s, a)) for a in range(s)], p)
        e_full = lift(e_s)
        for _ in range(10):
            sq = mul(e_full, e_full)
            if sq == e_full:
                break
            cube = mul(sq, e_full)
            e_full = [(3 * a - 2 * b) % p for a, b in zip(sq, cube)]
        else:
            raise AssertionError("idempotent lifting did not converge")
        dim = _rank_mod_p([mul(e_full, _unit(n, a)) for a in range(n)], p)
        assert dim % f_deg == 0
        pairs.append((dim // f_deg, f_deg))
    st = SplittingType(pairs)
    assert st.residue_sum == n
    return st


def split_prime(field: NumberField, p: int, *, force_general: bool = False) -> SplittingType:
    """Exact splitting type {(e_i, f_i)} of p in the field.

    Fast path reads the factorization of the defining polynomial mod p when
    the equation order is p-maximal; otherwise (or when forced) the quotient
    algebra A/pA is decomposed into local components.  Results are cached
    per field: concurrent readers are safe and the first writer wins.
    """
    check_prime(p)
    if force_general:
        st = _split_via_algebra(field, p)
        assert st.residue_sum == field.degree
        return st
    with field._cache_lock:
        cached = field._split_cache.get(p)
    if cached is not None:
        return cached
    if field.index_valuations.get(p, 0) == 0:
        st = _split_via_poly(field, p)
    else:
        st = _split_via_algebra(field, p)
    assert st.residue_sum == field.degree
    with field._cache_lock:
        st = field._split_cache.setdefault(p, st)
    return st

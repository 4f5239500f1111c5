"""Exact integer matrices: Hermite normal form and fraction-free determinants.

The public hnf() is row-style: H = U*M with U unimodular, H in echelon form
with positive pivots and the entries above each pivot reduced into
[0, pivot).  Order lattices elsewhere in the package are stored through the
lower-triangular variant (ascending power-basis columns) built on the same
core routine.
"""

from __future__ import annotations

from .errors import InvalidInput, RankDeficient


class IntMatrix:
    """Immutable rectangular integer matrix (row-major)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(int(x) for x in row) for row in rows)
        if not rs or not rs[0]:
            raise InvalidInput("matrix dimensions must be >= 1")
        width = len(rs[0])
        if any(len(r) != width for r in rs):
            raise InvalidInput("matrix rows must have equal length")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, *a):
        raise AttributeError("IntMatrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(mat_mul(self.rows, other.rows))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.rows]!r})"


def mat_mul(a, b):
    """Product of two row-lists of integers."""
    n, k = len(a), len(a[0])
    if len(b) != k:
        raise InvalidInput("matrix shape mismatch")
    m = len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    oi[j] += c * bt[j]
    return out


def det_rows(rows) -> int:
    """Determinant of a square row-list via fraction-free (Bareiss) elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise InvalidInput("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row = m[i]
            mk = m[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * pk - mik * mk[j]) // prev
            row[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _hnf_rows(rows, want_transform: bool):
    """Echelon HNF of a row-list; returns (H rows incl. zero rows, U rows, rank)."""
    h = [list(r) for r in rows]
    nr = len(h)
    nc = len(h[0])
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)] if want_transform else None
    row = 0
    for col in range(nc):
        # gather a single nonzero entry at (row, col) by Euclidean steps
        pivot = None
        while True:
            live = [i for i in range(row, nr) if h[i][col]]
            if not live:
                break
            i0 = min(live, key=lambda i: abs(h[i][col]))
            if i0 != row:
                h[row], h[i0] = h[i0], h[row]
                if u is not None:
                    u[row], u[i0] = u[i0], u[row]
            done = True
            for i in range(row + 1, nr):
                if h[i][col]:
                    q = h[i][col] // h[row][col]
                    if q:
                        h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                        if u is not None:
                            u[i] = [a - q * b for a, b in zip(u[i], u[row])]
                    if h[i][col]:
                        done = False
            if done:
                pivot = h[row][col]
                break
        if pivot is None:
            continue
        if pivot < 0:
            h[row] = [-a for a in h[row]]
            if u is not None:
                u[row] = [-a for a in u[row]]
            pivot = -pivot
        for i in range(row):
            q = h[i][col] // pivot
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[row])]
                if u is not None:
                    u[i] = [a - q * b for a, b in zip(u[i], u[row])]
        row += 1
        if row == nr:
            break
    return h, u, row


def hnf(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form: (H, U) with H = U*M and U unimodular.

    Requires full row rank; raises RankDeficient otherwise.
    """
    h, u, rank = _hnf_rows(m.rows, want_transform=True)
    if rank < m.nrows:
        raise RankDeficient(f"rank {rank} < {m.nrows} rows")
    return IntMatrix(h), IntMatrix(u)


def hnf_basis(rows) -> list[list[int]]:
    """HNF basis (nonzero rows only) of the lattice generated by `rows`."""
    h, _, rank = _hnf_rows(rows, want_transform=False)
    return h[:rank]


def hnf_lower(rows) -> list[list[int]]:
    """Lower-triangular HNF (ascending-column pivots) of a full-rank square lattice.

    Used for order bases over the power basis: row i then involves only
    powers x^0..x^i, pivots positive, entries below each pivot reduced.
    """
    flipped = [list(reversed(r)) for r in rows]
    h = hnf_basis(flipped)
    if len(h) != len(rows[0]):
        raise RankDeficient("lattice basis is not full rank")
    return [list(reversed(r)) for r in reversed(h)]


def solve_upper_triangular(rows, y):
    """Solve x*R = y exactly for upper-triangular R; None if no integer solution."""
    n = len(rows)
    x = [0] * n
    for j in range(n):
        acc = y[j]
        for i in range(j):
            acc -= x[i] * rows[i][j]
        piv = rows[j][j]
        if acc % piv:
            return None
        x[j] = acc // piv
    return x


def solve_lower_triangular(rows, y):
    """Solve x*W = y exactly for lower-triangular W; None if no integer solution."""
    n = len(rows)
    x = [0] * n
    for j in range(n - 1, -1, -1):
        acc = y[j]
        for i in range(j + 1, n):
            acc -= x[i] * rows[i][j]
        piv = rows[j][j]
        if acc % piv:
            return None
        x[j] = acc // piv
    return x

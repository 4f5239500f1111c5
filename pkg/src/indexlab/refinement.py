"""Residue-class refinement searches for the field invariants.

Both searches walk residue classes of the maximal order modulo p^m, level by
level.  The key fact: the characteristic polynomial's coefficients and the
power-basis index determinant are integer polynomials in an element's
coordinates, so their values mod p^m agree across every lift of a class mod
p^m.  A class whose tracked valuation w satisfies w < m therefore has that
exact value on all of its lifts ("certified"); classes with w >= m are
subdivided into their p^n children one level deeper.

max_i_valuation tracks w = v_p(gcd of the char poly's values at 0..n), whose
max over classes is v_p of the lcm invariant.  Because that gcd always
divides n!, any class still undecided at level v_p(n!) sits exactly at the
bound, so the search never subdivides past that level.

min_index_valuation tracks w = v_p(det of the power-basis matrix).  The
generator's class certifies at level v_p([A : Z[theta]]) + 1 at the latest,
and once a certified minimum c exists every undecided class at level m >= c
is discarded (its lifts all have valuation >= m), so the search terminates
by level c + 1.  Certified classes have nonzero determinant, hence consist
of primitive elements; undecided classes never contribute a value, so the
result is the exact minimum over primitive elements.

Each level is evaluated as one vectorized batch (a data-parallel work pool
with a max/min reduction at the level barrier); batches are chunked to bound
memory.  Arithmetic runs in int64 with explicit reduction mod p^m and falls
back to exact Python integers if the modulus ever outgrows the safe range.
"""

from __future__ import annotations

import os

import numpy as np

from .arith import check_prime, valuation, vp_factorial
from .errors import RefinementCapExceeded

_INT64_SAFE_MOD = 1 << 25
_CHUNK = 1 << 16


def env_cap_override() -> int | None:
    """Refinement level cap from INDEXLAB_CAP, if set."""
    raw = os.environ.get("INDEXLAB_CAP")
    if raw is None:
        return None
    return int(raw)


def _np_table(field, mod: int):
    cache = field.invariant_cache.setdefault("np_tables", {})
    t = cache.get(mod)
    if t is None:
        t = np.array(field.times_table, dtype=np.int64) % mod
        cache[mod] = t
    return t


def _all_classes(p: int, n: int):
    grid = np.indices((p,) * n, dtype=np.int64)
    return grid.reshape(n, -1).T.copy()


def _children(survivors, p: int, m: int):
    n = survivors.shape[1]
    offsets = _all_classes(p, n) * (p**m)
    kids = survivors[:, None, :] + offsets[None, :, :]
    return kids.reshape(-1, n)


def _charpoly_batch(mats, mod: int):
    """Berkowitz char polys (descending coeffs) of a (B,n,n) batch mod `mod`."""
    b, n, _ = mats.shape
    poly = np.zeros((b, 2), dtype=np.int64)
    poly[:, 0] = 1
    poly[:, 1] = (-mats[:, 0, 0]) % mod
    for i in range(1, n):
        row = mats[:, i, :i]
        col = mats[:, :i, i]
        sub = mats[:, :i, :i]
        q = np.zeros((b, i + 2), dtype=np.int64)
        q[:, 0] = 1
        q[:, 1] = (-mats[:, i, i]) % mod
        v = col % mod
        for j in range(i):
            q[:, 2 + j] = (-np.einsum("bi,bi->b", row, v)) % mod
            if j < i - 1:
                v = np.einsum("bij,bj->bi", sub, v) % mod
        out = np.zeros((b, i + 2), dtype=np.int64)
        for c in range(i + 1):
            out[:, c:] = (out[:, c:] + poly[:, c : c + 1] * q[:, : i + 2 - c]) % mod
        poly = out
    return poly


def _min_vp_rows(values, p: int, m: int):
    """Per-row min p-valuation of residues in [0, p^m); m stands for 'all zero'."""
    v = np.full(values.shape, m, dtype=np.int64)
    acc = values.copy()
    for k in range(m):
        fresh = (acc % p != 0) & (v == m)
        v[fresh] = k
        acc //= p
    return v.min(axis=1)


def _i_profile(field, p: int, m: int, classes):
    """Min valuation over x=0..n of charpoly values, per class (m = undecided)."""
    mod = p**m
    n = field.degree
    if mod > _INT64_SAFE_MOD:
        return _i_profile_exact(field, p, m, classes)
    out = np.empty(len(classes), dtype=np.int64)
    table = _np_table(field, mod)
    xs = np.arange(n + 1, dtype=np.int64)
    for lo in range(0, len(classes), _CHUNK):
        chunk = classes[lo : lo + _CHUNK] % mod
        mats = np.tensordot(chunk, table, axes=([1], [0])) % mod
        cp = _charpoly_batch(mats, mod)
        vals = np.zeros((len(chunk), n + 1), dtype=np.int64)
        for k in range(n + 1):
            vals = (vals * xs[None, :] + cp[:, k : k + 1]) % mod
        out[lo : lo + len(chunk)] = _min_vp_rows(vals, p, m)
    return out


def _index_profile(field, p: int, m: int, classes):
    """Valuation of the power-basis determinant, per class (m = undecided)."""
    mod = p**m
    n = field.degree
    if mod > _INT64_SAFE_MOD:
        return _index_profile_exact(field, p, m, classes)
    out = np.empty(len(classes), dtype=np.int64)
    table = _np_table(field, mod)
    for lo in range(0, len(classes), _CHUNK):
        chunk = classes[lo : lo + _CHUNK] % mod
        b = len(chunk)
        pw = np.zeros((b, n, n), dtype=np.int64)
        pw[:, 0, 0] = 1
        if n > 1:
            cur = chunk.copy()
            pw[:, 1, :] = cur
            for k in range(2, n):
                mid = np.einsum("bi,ijk->bjk", cur, table) % mod
                cur = np.einsum("bjk,bj->bk", mid, chunk) % mod
                pw[:, k, :] = cur
        cp = _charpoly_batch(pw, mod)
        dets = cp[:, n][:, None]  # +- det; sign is irrelevant to the valuation
        out[lo : lo + b] = _min_vp_rows(dets, p, m)
    return out


# exact (object-integer) fallbacks for moduli beyond the int64-safe range


def _i_profile_exact(field, p, m, classes):
    from .numberfield import _charpoly_rows

    mod = p**m
    n = field.degree
    out = []
    for row in classes:
        coords = [int(c) % mod for c in row]
        mat = field.mult_matrix(field.element(coords))
        cp = _charpoly_rows(mat)
        w = m
        for x in range(n + 1):
            val = 0
            for c in cp:
                val = (val * x + c) % mod
            if val:
                w = min(w, valuation(val, p))
        out.append(w)
    return np.array(out, dtype=np.int64)


def _index_profile_exact(field, p, m, classes):
    from .intmatrix import det_rows

    mod = p**m
    out = []
    for row in classes:
        coords = [int(c) % mod for c in row]
        d = det_rows(field.powers_matrix(field.element(coords))) % mod
        out.append(m if d == 0 else min(m, valuation(d, p)))
    return np.array(out, dtype=np.int64)


# -- public searches -----------------------------------------------------------


def max_i_valuation(field, p: int, cap: int | None = None):
    """(max over primitive t of v_p(gcd of char-poly values), witness class).

    The witness is (level m, coordinate tuple mod p^m): every lift of that
    class attains the maximum.  Returns (0, None) for p > degree.
    """
    check_prime(p)
    n = field.degree
    if p > n:
        return 0, None
    bound = vp_factorial(n, p)
    level_cap = cap if cap is not None else bound + 1
    best = 0
    witness = None
    classes = _all_classes(p, n)
    m = 1
    while len(classes):
        if m > level_cap:
            raise RefinementCapExceeded(
                f"value-gcd refinement passed level {level_cap} at p={p} "
                f"({len(classes)} classes undecided)"
            )
        profile = _i_profile(field, p, m, classes)
        certified = profile < m
        if certified.any():
            w = int(profile[certified].max())
            if w > best:
                best = w
                idx = int(np.nonzero(certified & (profile == w))[0][0])
                witness = (m, tuple(int(x) for x in classes[idx]))
        survivors = classes[~certified]
        if not len(survivors):
            break
        if m >= bound:
            # undecided at the factorial bound means exactly the bound
            if bound > best:
                best = bound
                witness = (m, tuple(int(x) for x in survivors[0]))
            break
        classes = _children(survivors, p, m)
        m += 1
    return best, witness


def min_index_valuation(field, p: int, cap: int | None = None) -> int:
    """Min over primitive t of v_p([A : Z[t]]); 0 for p > degree."""
    check_prime(p)
    n = field.degree
    if p > n:
        return 0
    best = field.index_valuations.get(p, 0)  # attained by the generator
    if best == 0:
        return 0
    if cap is not None:
        level_cap = cap
    else:
        level_cap = max(
            2 * vp_factorial(n, p) + valuation(field.disc, p) + 2, best + 2
        )
    classes = _all_classes(p, n)
    m = 1
    while len(classes):
        if m > level_cap:
            raise RefinementCapExceeded(
                f"index refinement passed level {level_cap} at p={p} "
                f"({len(classes)} classes undecided, best so far {best})"
            )
        profile = _index_profile(field, p, m, classes)
        certified = profile < m
        if certified.any():
            best = min(best, int(profile[certified].min()))
        if best == 0:
            break
        survivors = classes[profile >= m]
        if not len(survivors) or m >= best:
            # survivors carry valuation >= m and cannot beat the minimum
            break
        classes = _children(survivors, p, m)
        m += 1
    return best

"""Dense univariate polynomials with arbitrary-precision integer coefficients.

A polynomial c0 + c1*x + ... + cn*x^n is stored as the ascending coefficient
tuple (c0, c1, ..., cn) with no trailing zeros; the zero polynomial has an
empty tuple.  Resultants use the subresultant pseudo-remainder sequence, so
all arithmetic stays in the integers.

Text input accepted everywhere in the package comes in two shapes: an
ascending coefficient list such as "[4, -13, 0, 1]" and a symbolic form such
as "x^3 - 13*x + 4" (x**3 and implicit '*' also accepted).
"""

from __future__ import annotations

import re

from .errors import InvalidDegree, InvalidInput, ParseError


class IntPoly:
    """Immutable integer polynomial, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("IntPoly is immutable")

    # -- basic structure -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        out = IntPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "IntPoly") -> "IntPoly":
        """self(inner(x)) by Horner."""
        out = IntPoly()
        for c in reversed(self.coeffs):
            out = out * inner + IntPoly([c])
        return out

    def divmod_exact(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder for a monic (or +-1-lc) divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if abs(divisor.lc) != 1:
            raise InvalidInput("divmod_exact needs a divisor with unit leading coefficient")
        rem = list(self.coeffs)
        d = divisor.degree
        lc = divisor.lc
        quot = [0] * max(0, len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] * lc  # lc is +-1
            if q:
                quot[k - d] = q
                for j, c in enumerate(divisor.coeffs):
                    rem[k - d + j] -= q * c
        return IntPoly(quot), IntPoly(rem)

    def mod(self, divisor: "IntPoly") -> "IntPoly":
        return self.divmod_exact(divisor)[1]

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"


_TERM_RE = re.compile(
    r"""^
    (?P<coeff>\d+)?
    (?:\*?
       (?P<var>x)
       (?:(?:\^|\*\*)(?P<exp>\d+))?
    )?
    $""",
    re.VERBOSE,
)


def parse_poly(text: str) -> IntPoly:
    """Parse "[c0,c1,...]" or "x^3 - 13*x + 4" into an IntPoly."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError(f"unterminated coefficient list: {text!r}")
        body = s[1:-1].strip()
        if not body:
            return IntPoly()
        try:
            return IntPoly([int(tok.strip()) for tok in body.split(",")])
        except ValueError as exc:
            raise ParseError(f"bad coefficient list: {text!r}") from exc
    s = s.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial text")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"cannot tokenize polynomial: {text!r}")
    coeffs: dict[int, int] = {}
    for term in terms:
        sign = 1
        body = term
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM_RE.match(body)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ParseError(f"bad term {term!r} in {text!r}")
        c = int(m.group("coeff")) if m.group("coeff") is not None else 1
        if m.group("var") is None:
            k = 0
        elif m.group("exp") is None:
            k = 1
        else:
            k = int(m.group("exp"))
        coeffs[k] = coeffs.get(k, 0) + sign * c
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPoly(out)


def as_poly(f) -> IntPoly:
    """Coerce an IntPoly, text, or coefficient sequence to IntPoly."""
    if isinstance(f, IntPoly):
        return f
    if isinstance(f, str):
        return parse_poly(f)
    return IntPoly(f)


# -- resultant and discriminant -------------------------------------------


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    da, db = a.degree, b.degree
    lc = b.lc
    rem = list(a.coeffs)
    steps = 0
    for k in range(da, db - 1, -1):
        head = rem[k]
        rem = [c * lc for c in rem]
        if head:
            for j, c in enumerate(b.coeffs):
                rem[k - db + j] -= head * c
        rem[k] = 0
        steps += 1
    scale = lc ** (da - db + 1 - steps)
    return IntPoly([c * scale for c in rem])


def poly_resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant with res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the
    roots alpha_i of f.

    Computed by the subresultant pseudo-remainder sequence; no rational
    arithmetic.  Raises InvalidInput on a zero polynomial.
    """
    f, g = as_poly(f), as_poly(g)
    if f.is_zero or g.is_zero:
        raise InvalidInput("resultant of the zero polynomial is undefined")
    if f.degree == 0:
        return f.lc**g.degree
    if g.degree == 0:
        return g.lc**f.degree
    sign = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree & 1) and (b.degree & 1):
            sign = -sign
        a, b = b, a
    gg, hh = 1, 1
    while True:
        da, db = a.degree, b.degree
        if (da & 1) and (db & 1):
            sign = -sign
        d = da - db
        r = _pseudo_rem(a, b)
        if r.is_zero:
            return 0
        a = b
        denom = gg * hh**d
        b = IntPoly([c // denom for c in r.coeffs])
        assert all(c % denom == 0 for c in r.coeffs), "subresultant division not exact"
        gg = a.lc
        if d > 0:
            num = gg**d
            den = hh ** (d - 1)
            assert num % den == 0
            hh = num // den
        if b.degree == 0:
            num = b.lc ** a.degree
            den = hh ** (a.degree - 1)
            assert num % den == 0
            return sign * (num // den)


def poly_discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) * res(f, f') / lc(f), n = deg f >= 1.

    With this sign convention disc(x^3 - a*x + b) = 4a^3 - 27b^2.
    """
    f = as_poly(f)
    n = f.degree
    if n < 1:
        raise InvalidDegree("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = poly_resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    assert r % f.lc == 0
    return sign * (r // f.lc)

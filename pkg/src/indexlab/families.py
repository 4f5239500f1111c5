"""Closed-form predictors for the parametric field families, plus a
differential verifier that sweeps parameters and compares each prediction
against the exact engine.

Every predictor is a pure function of the parameter: it returns the
predicted pair (I, i) together with applicability; the verifier builds the
actual field, runs the exact invariant computation, and records one row per
parameter.  A nonempty discrepancy list means the sweep failed.  Reports
serialize to TSV (columns: family, m, applicable, I_pred, I_exact,
i_pred_set, i_exact, pass) and JSON; rows are sorted by parameter so output
is reproducible byte for byte.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import factorint, is_squarefree, valuation
from .errors import (
    NotAField,
    NotApplicable,
    NotReduced,
    ReduciblePolynomial,
    UnknownFamily,
)
from .intpoly import IntPoly

FAMILY_NAMES = (
    "quadratic",
    "pure_cubic",
    "simplest_cubic",
    "simplest_quartic",
    "lehmer_quintic",
    "simplest_sextic",
)


@dataclass(frozen=True)
class FamilyPrediction:
    """Predicted invariants for one family member.

    I_pred is None when the formula does not constrain I; i_pred is a set
    (a singleton everywhere except the sextic family's two-valued branch).
    """

    family: str
    param: int | tuple[int, int]
    I_pred: int | None
    i_pred: frozenset[int]
    applicable: bool = True
    reason: str = ""


@dataclass(frozen=True)
class CubicForm:
    """Reduced cubic x^3 - a*x + b with its 2- and 3-adic discriminant data."""

    a: int
    b: int
    delta: int
    s2: int
    delta2: int
    s3: int
    delta3: int

    @classmethod
    def from_pair(cls, a: int, b: int) -> "CubicForm":
        if not _cubic_is_irreducible(a, b):
            raise NotAField(f"x^3 - {a}x + {b} is reducible")
        if not _cubic_is_reduced(a, b):
            raise NotReduced(f"(a, b) = ({a}, {b}) is not reduced")
        delta = 4 * a**3 - 27 * b**2
        s2 = valuation(delta, 2)
        s3 = valuation(delta, 3)
        return cls(
            a=a,
            b=b,
            delta=delta,
            s2=s2,
            delta2=delta // 2**s2,
            s3=s3,
            delta3=delta // 3**s3,
        )


def _cubic_is_irreducible(a: int, b: int) -> bool:
    # monic cubic: reducible iff it has an integer root dividing b
    if b == 0:
        return False
    from .arith import divisors

    for d in divisors(b):
        for r in (d, -d):
            if r**3 - a * r + b == 0:
                return False
    return True


def _cubic_is_reduced(a: int, b: int) -> bool:
    if b == 0:
        return False
    for p, e in factorint(b).items():
        if e >= 3 and (a == 0 or a % p**2 == 0):
            return False
    return True


def cubic_reduce(a: int, b: int) -> tuple[int, int]:
    """Divide (a, b) by (p^2, p^3) while some prime allows it."""
    if not _cubic_is_irreducible(a, b):
        raise NotAField(f"x^3 - {a}x + {b} is reducible")
    while True:
        hit = None
        for p, e in factorint(b).items():
            if e >= 3 and (a == 0 or a % p**2 == 0):
                hit = p
                break
        if hit is None:
            return a, b
        a //= hit**2
        b //= hit**3


def cubic_predict(a: int, b: int) -> FamilyPrediction:
    """Invariants of the cubic field of x^3 - a*x + b from congruences.

    i = 2^alpha * 3^beta with
      alpha = 1  iff  1 = v2(a) < v2(b)  or  a != b mod 2,
      beta  = 1  iff  (a = 3 mod 9, b^2 = a+1 mod 27, s3 > 6 even,
                       delta3 = 1 mod 3)  or  (a = 1 mod 3 and 3 | b);
    I = 2 iff a odd, b even, s2 even and delta2 = 1 mod 8, else 1.
    """
    form = CubicForm.from_pair(a, b)
    v2a = valuation(a, 2) if a else None
    alpha = 1 if (v2a == 1 and valuation(b, 2) > 1) or (a - b) % 2 == 1 else 0
    beta = (
        1
        if (
            a % 9 == 3
            and (b * b - a - 1) % 27 == 0
            and form.s3 > 6
            and form.s3 % 2 == 0
            and form.delta3 % 3 == 1
        )
        or (a % 3 == 1 and b % 3 == 0)
        else 0
    )
    big_i = (
        2
        if a % 2 == 1 and b % 2 == 0 and form.s2 % 2 == 0 and form.delta2 % 8 == 1
        else 1
    )
    return FamilyPrediction(
        family="cubic",
        param=(a, b),
        I_pred=big_i,
        i_pred=frozenset({2**alpha * 3**beta}),
    )


def pure_cubic_predict(d: int) -> FamilyPrediction:
    """i of the pure cubic field of x^3 - d: 2 for odd d, 1 for even d."""
    if d in (-1, 0, 1):
        raise NotAField(f"x^3 - {d} does not define a cubic field")
    fac = factorint(d)
    if all(e % 3 == 0 for e in fac.values()):
        raise NotAField(f"{d} is a perfect cube")
    if any(e >= 3 for e in fac.values()):
        raise NotApplicable(f"{d} is not cube-free")
    return FamilyPrediction(
        family="pure_cubic",
        param=d,
        I_pred=None,
        i_pred=frozenset({2 if d % 2 else 1}),
    )


def simplest_cubic_predict(m: int) -> FamilyPrediction:
    """Cyclic cubic of x^3 - m*x^2 - (m+3)*x - 1: I = 1, i = 3 on three
    residue classes mod 243."""
    i = 3 if m % 243 in (39, 120, 201) else 1
    return FamilyPrediction(
        family="simplest_cubic", param=m, I_pred=1, i_pred=frozenset({i})
    )


def simplest_quartic_predict(m: int) -> FamilyPrediction:
    """Cyclic quartic of x^4 - m*x^3 - 6*x^2 + m*x + 1 (m and -m give the
    same field, so negative m are folded to |m|)."""
    m0 = abs(m)
    if m0 == 0 or m0 == 3:
        raise NotApplicable(f"m = {m} does not define a quartic field")
    for p, e in factorint(m0 * m0 + 16).items():
        if p != 2 and e >= 2:
            raise NotApplicable(f"m^2 + 16 divisible by the odd square {p}^2")
    v2 = valuation(m0, 2)
    return FamilyPrediction(
        family="simplest_quartic",
        param=m,
        I_pred=2 if m0 % 2 else 1,
        i_pred=frozenset({1 if 1 <= v2 <= 3 else 4}),
    )


def _lehmer_condition_value(m: int) -> int:
    return m**4 + 5 * m**3 + 15 * m**2 + 25 * m + 25


def lehmer_quintic_predict(m: int) -> FamilyPrediction:
    """Quintic family: I = 1 and i = 5 exactly when m = 2 mod 5, provided no
    prime other than 5 divides the conductor value to a square."""
    c = _lehmer_condition_value(m)
    for p, e in factorint(c).items():
        if p != 5 and e >= 2:
            raise NotApplicable(f"conductor value divisible by {p}^2")
    return FamilyPrediction(
        family="lehmer_quintic",
        param=m,
        I_pred=1,
        i_pred=frozenset({5 if m % 5 == 2 else 1}),
    )


def simplest_sextic_predict(m: int) -> FamilyPrediction:
    """Cyclic sextic family: i = 2^alpha * 3^beta, alpha in {3,4} on the
    stated residue classes (the formula does not separate 3 from 4, so the
    prediction is a set), beta = 2 on three classes mod 243; I = 1."""
    if m in (-8, -5, -3, 0):
        raise NotApplicable(f"m = {m} is excluded")
    if ((m % 8 in (0, 5)) and m % 3 != 0) or (m % 24 in (0, 21)):
        alphas = (3, 4)
    else:
        alphas = (0,)
    beta = 2 if m % 243 in (39, 120, 201) else 0
    return FamilyPrediction(
        family="simplest_sextic",
        param=m,
        I_pred=1,
        i_pred=frozenset(2**a * 3**beta for a in alphas),
    )


def quadratic_predict(m: int) -> FamilyPrediction:
    """i of Q(sqrt(m)) for squarefree m: 2 iff m = 1 mod 8; I is always 1
    (a common index divisor in degree n needs p < n)."""
    if m in (0, 1):
        raise NotAField(f"x^2 - {m} does not define a quadratic field")
    if not is_squarefree(m):
        raise NotApplicable(f"{m} is not squarefree")
    return FamilyPrediction(
        family="quadratic",
        param=m,
        I_pred=1,
        i_pred=frozenset({2 if m % 8 == 1 else 1}),
    )


_PREDICTORS = {
    "quadratic": quadratic_predict,
    "pure_cubic": pure_cubic_predict,
    "simplest_cubic": simplest_cubic_predict,
    "simplest_quartic": simplest_quartic_predict,
    "lehmer_quintic": lehmer_quintic_predict,
    "simplest_sextic": simplest_sextic_predict,
}


def family_polynomial(family: str, m: int) -> IntPoly:
    """Defining polynomial of the family member at parameter m."""
    if family == "quadratic":
        return IntPoly([-m, 0, 1])
    if family == "pure_cubic":
        return IntPoly([-m, 0, 0, 1])
    if family == "simplest_cubic":
        return IntPoly([-1, -(m + 3), -m, 1])
    if family == "simplest_quartic":
        return IntPoly([1, m, -6, -m, 1])
    if family == "lehmer_quintic":
        return IntPoly(
            [
                1,
                m**3 + 4 * m**2 + 10 * m + 10,
                m**4 + 5 * m**3 + 11 * m**2 + 15 * m + 5,
                -(2 * m**3 + 6 * m**2 + 10 * m + 10),
                m**2,
                1,
            ]
        )
    if family == "simplest_sextic":
        return IntPoly([1, 2 * m + 6, 5 * m, -20, -(5 * m + 15), -2 * m, 1])
    raise UnknownFamily(f"unknown family {family!r}")


def predict(family: str, m: int) -> FamilyPrediction:
    """Dispatch to the family's predictor."""
    try:
        predictor = _PREDICTORS[family]
    except KeyError:
        raise UnknownFamily(f"unknown family {family!r}") from None
    return predictor(m)


# -- differential verification --------------------------------------------------


def verify_one(family: str, m: int, cap: int | None = None) -> dict:
    """Predict, build, measure, and compare for a single parameter."""
    row = {
        "family": family,
        "m": m,
        "applicable": True,
        "reason": "",
        "I_pred": None,
        "I_exact": None,
        "i_pred": [],
        "i_exact": None,
        "pass": None,
        "support_i": [],
        "maccluer": [],
    }
    try:
        pred = predict(family, m)
    except (NotApplicable, NotAField) as exc:
        row["applicable"] = False
        row["reason"] = str(exc)
        return row
    row["I_pred"] = pred.I_pred
    row["i_pred"] = sorted(pred.i_pred)
    from .invariants import full_report
    from .numberfield import build_field

    try:
        field = build_field(family_polynomial(family, m))
    except ReduciblePolynomial:
        row["applicable"] = False
        row["reason"] = "reducible defining polynomial"
        return row
    report = full_report(field, cap)
    row["I_exact"] = report.I_K
    row["i_exact"] = report.i_K
    row["pass"] = (pred.I_pred is None or pred.I_pred == report.I_K) and (
        report.i_K in pred.i_pred
    )
    row["support_i"] = sorted(report.support_i())
    row["maccluer"] = sorted(report.maccluer)
    if family == "simplest_sextic":
        row["alpha_measured"] = valuation(report.i_K, 2)
        row["beta_measured"] = valuation(report.i_K, 3)
    return row


def _verify_star(args):
    return verify_one(*args)


@dataclass
class VerificationReport:
    """Outcome of one family sweep; discrepancies are data, not exceptions."""

    family: str
    rows: list[dict] = field(default_factory=list)

    @property
    def discrepancies(self) -> list[dict]:
        return [r for r in self.rows if r["applicable"] and not r["pass"]]

    @property
    def checked(self) -> int:
        return sum(1 for r in self.rows if r["applicable"])

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.rows if not r["applicable"])

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def alpha_table(self) -> list[tuple[int, int]]:
        """Measured v2(i) per parameter (the sextic formula's open 3-vs-4)."""
        return [
            (r["m"], r["alpha_measured"])
            for r in self.rows
            if r["applicable"] and "alpha_measured" in r
        ]

    def to_tsv(self) -> str:
        lines = ["family\tm\tapplicable\tI_pred\tI_exact\ti_pred_set\ti_exact\tpass"]
        for r in self.rows:
            pred_set = "{" + ",".join(str(v) for v in r["i_pred"]) + "}" if r["i_pred"] else "-"
            lines.append(
                "\t".join(
                    [
                        r["family"],
                        str(r["m"]),
                        "1" if r["applicable"] else "0",
                        "-" if r["I_pred"] is None else str(r["I_pred"]),
                        "-" if r["I_exact"] is None else str(r["I_exact"]),
                        pred_set,
                        "-" if r["i_exact"] is None else str(r["i_exact"]),
                        "-" if r["pass"] is None else ("1" if r["pass"] else "0"),
                    ]
                )
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        out = {
            "family": self.family,
            "checked": self.checked,
            "skipped": self.skipped,
            "discrepancies": len(self.discrepancies),
            "rows": self.rows,
        }
        alpha = self.alpha_table()
        if alpha:
            out["alpha_table"] = [[m, a] for m, a in alpha]
        return out


def verify_family(family: str, params, jobs: int = 1, cap: int | None = None) -> VerificationReport:
    """Sweep the parameters, comparing predictions against the exact engine.

    Parameter points are distributed over a process pool when jobs > 1; rows
    are merged in parameter order either way.
    """
    if family not in _PREDICTORS:
        raise UnknownFamily(f"unknown family {family!r}")
    ms = sorted(set(int(m) for m in params))
    if jobs > 1 and len(ms) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_verify_star, [(family, m, cap) for m in ms], chunksize=4))
    else:
        rows = [verify_one(family, m, cap) for m in ms]
    rows.sort(key=lambda r: r["m"])
    return VerificationReport(family=family, rows=rows)

"""Family predictors and the differential verifier."""

import json
import random

import pytest

from indexlab.arith import valuation
from indexlab.errors import NotAField, NotApplicable, NotReduced, UnknownFamily
from indexlab.families import (
    CubicForm,
    cubic_predict,
    cubic_reduce,
    family_polynomial,
    lehmer_quintic_predict,
    pure_cubic_predict,
    quadratic_predict,
    simplest_cubic_predict,
    simplest_quartic_predict,
    simplest_sextic_predict,
    verify_family,
    verify_one,
)
from indexlab.intpoly import IntPoly, parse_poly
from indexlab.invariants import full_report
from indexlab.numberfield import build_field


def test_cubic_reduce_examples():
    assert cubic_reduce(36, 216) == (1, 1)
    assert cubic_reduce(13, 4) == (13, 4)
    assert cubic_reduce(50, 250) == (2, 2)
    with pytest.raises(NotAField):
        cubic_reduce(0, 8)  # x^3 + 8 has the root -2


def test_cubic_reduce_preserves_field():
    rng = random.Random(71)
    checked = 0
    while checked < 15:
        a = rng.randint(-20, 20) * 4
        b = rng.randint(-15, 15) * 8
        try:
            a2, b2 = cubic_reduce(a, b)
        except NotAField:
            continue
        k1 = build_field(IntPoly([b, -a, 0, 1]))
        k2 = build_field(IntPoly([b2, -a2, 0, 1]))
        assert k1.disc == k2.disc
        checked += 1


def test_cubic_predict_examples():
    p = cubic_predict(13, 4)
    assert p.I_pred == 2 and p.i_pred == {2}
    p = cubic_predict(1, 3)
    assert p.I_pred == 1 and p.i_pred == {3}
    p = cubic_predict(1, 1)
    assert p.I_pred == 1 and p.i_pred == {1}


def test_cubic_predict_requires_reduced():
    with pytest.raises(NotReduced):
        cubic_predict(36, 216)
    with pytest.raises(NotAField):
        cubic_predict(0, 8)


def test_cubic_form_fields():
    form = CubicForm.from_pair(13, 4)
    assert form.delta == 8356
    assert form.s2 == 2 and form.delta2 == 2089
    assert form.delta2 % 8 == 1


def test_cubic_beta_first_branch_witnesses():
    # rare branch: a = 3 mod 9, b^2 = a+1 mod 27, s3 > 6 even, delta3 = 1 mod 3
    p = cubic_predict(-393, -178)
    assert p.i_pred == {6}
    r = full_report(build_field(IntPoly([-178, 393, 0, 1])))
    assert r.i_K == 6 and r.I_K == 1
    p = cubic_predict(-384, 142)
    assert p.i_pred == {3}
    r = full_report(build_field(IntPoly([142, 384, 0, 1])))
    assert r.i_K == 3 and r.I_K == 1


def test_cubic_predict_consistency_common_divisor():
    # whenever I_pred = 2, the parity branch must also give 2 | i_pred
    rng = random.Random(83)
    for _ in range(400):
        a, b = rng.randint(-60, 60), rng.randint(-60, 60)
        try:
            p = cubic_predict(a, b)
        except (NotAField, NotReduced):
            continue
        if p.I_pred == 2:
            assert all(v % 2 == 0 for v in p.i_pred)


def test_pure_cubic_examples():
    assert pure_cubic_predict(7).i_pred == {2}
    assert pure_cubic_predict(2).i_pred == {1}
    assert pure_cubic_predict(10).i_pred == {1}
    assert pure_cubic_predict(7).I_pred is None
    with pytest.raises(NotAField):
        pure_cubic_predict(8)
    with pytest.raises(NotAField):
        pure_cubic_predict(1)
    with pytest.raises(NotApplicable):
        pure_cubic_predict(24)


def test_simplest_cubic_examples():
    assert simplest_cubic_predict(39).i_pred == {3}
    assert simplest_cubic_predict(0).i_pred == {1}
    assert simplest_cubic_predict(363).i_pred == {3}
    assert simplest_cubic_predict(39).I_pred == 1


def test_simplest_quartic_examples():
    p = simplest_quartic_predict(1)
    assert (p.I_pred, p.i_pred) == (2, frozenset({4}))
    p = simplest_quartic_predict(2)
    assert (p.I_pred, p.i_pred) == (1, frozenset({1}))
    p = simplest_quartic_predict(16)
    assert (p.I_pred, p.i_pred) == (1, frozenset({4}))
    # negative parameters describe the same field
    assert simplest_quartic_predict(-2).i_pred == simplest_quartic_predict(2).i_pred
    with pytest.raises(NotApplicable):
        simplest_quartic_predict(3)
    with pytest.raises(NotApplicable):
        simplest_quartic_predict(22)  # 22^2 + 16 = 500 is divisible by 5^2


def test_lehmer_quintic_examples():
    assert lehmer_quintic_predict(2).i_pred == {5}
    assert lehmer_quintic_predict(0).i_pred == {1}
    assert lehmer_quintic_predict(7).i_pred == {5}
    for m in (-16, 14):  # conductor value divisible by an odd square
        with pytest.raises(NotApplicable):
            lehmer_quintic_predict(m)


def test_simplest_sextic_examples():
    assert simplest_sextic_predict(1).i_pred == {1}
    assert simplest_sextic_predict(5).i_pred == {8, 16}
    assert simplest_sextic_predict(120).i_pred == {72, 144}
    assert simplest_sextic_predict(444).i_pred == {9}
    for m in (-8, -5, -3, 0):
        with pytest.raises(NotApplicable):
            simplest_sextic_predict(m)


def test_quadratic_examples():
    assert quadratic_predict(17).i_pred == {2}
    assert quadratic_predict(5).i_pred == {1}
    assert quadratic_predict(-7).i_pred == {2}
    assert quadratic_predict(17).I_pred == 1
    with pytest.raises(NotApplicable):
        quadratic_predict(12)
    with pytest.raises(NotAField):
        quadratic_predict(1)


def test_family_polynomial_examples():
    assert family_polynomial("simplest_cubic", 39) == parse_poly(
        "x^3 - 39*x^2 - 42*x - 1"
    )
    assert family_polynomial("lehmer_quintic", 0) == parse_poly(
        "x^5 - 10*x^3 + 5*x^2 + 10*x + 1"
    )
    assert family_polynomial("simplest_quartic", 2) == parse_poly(
        "x^4 - 2*x^3 - 6*x^2 + 2*x + 1"
    )
    assert family_polynomial("quadratic", -7) == parse_poly("x^2 + 7")
    assert family_polynomial("pure_cubic", 5) == parse_poly("x^3 - 5")
    with pytest.raises(UnknownFamily):
        family_polynomial("octic", 1)


def test_verify_family_smoke():
    rep = verify_family("simplest_cubic", range(0, 11))
    assert rep.checked == 11 and not rep.discrepancies
    rep = verify_family("quadratic", range(-50, 51))
    assert not rep.discrepancies and rep.checked > 50
    rep = verify_family("simplest_quartic", [1, 2, 16])
    assert rep.checked == 3 and not rep.discrepancies


def test_verify_family_parallel_matches_serial():
    serial = verify_family("simplest_cubic", range(0, 21))
    parallel = verify_family("simplest_cubic", range(0, 21), jobs=2)
    assert serial.rows == parallel.rows


def test_verify_marks_reducible_parameters_inapplicable():
    row = verify_one("simplest_sextic", 5)
    assert row["applicable"] is False
    assert "reducible" in row["reason"]


def test_report_serialization():
    rep = verify_family("simplest_quartic", [1, 2, 3, 16])
    tsv = rep.to_tsv()
    lines = tsv.strip().split("\n")
    assert lines[0] == "family\tm\tapplicable\tI_pred\tI_exact\ti_pred_set\ti_exact\tpass"
    assert len(lines) == 5
    skip_line = [l for l in lines if l.split("\t")[1] == "3"][0]
    assert skip_line.split("\t")[2] == "0"
    payload = json.loads(json.dumps(rep.to_json_dict()))
    assert payload["family"] == "simplest_quartic"
    assert payload["checked"] == 3 and payload["skipped"] == 1
    # serialization is deterministic
    assert rep.to_tsv() == verify_family("simplest_quartic", [1, 2, 3, 16]).to_tsv()


def test_family_support_stays_in_allowed_primes():
    allowed = {
        "simplest_cubic": {3},
        "simplest_quartic": {2},
        "lehmer_quintic": {5},
        "simplest_sextic": {2, 3},
    }
    params = {
        "simplest_cubic": range(0, 45),
        "simplest_quartic": range(1, 25),
        "lehmer_quintic": range(-6, 7),
        "simplest_sextic": (1, 8, 13, 39),
    }
    for family, ms in params.items():
        rep = verify_family(family, ms)
        assert not rep.discrepancies
        for row in rep.rows:
            if row["applicable"]:
                assert set(row["maccluer"]) <= allowed[family]


def test_sextic_alpha_table_recorded():
    rep = verify_family("simplest_sextic", [1, 8, 120])
    table = dict(rep.alpha_table())
    assert table == {1: 0, 8: 3, 120: 3}
    assert [r for r in rep.rows if r["m"] == 120][0]["beta_measured"] == 2

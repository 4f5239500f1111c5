"""Exact index invariants i(K) and I(K) of number fields of degree <= 7."""

from .arith import INFINITY, gcd_all, valuation
from .errors import (
    DegreeOutOfScope,
    IndexLabError,
    InvalidDegree,
    InvalidInput,
    InvalidPrime,
    NotAField,
    NotApplicable,
    NotReduced,
    ParseError,
    RankDeficient,
    ReduciblePolynomial,
    RefinementCapExceeded,
    SearchBudgetExhausted,
    UnknownFamily,
    ZeroModP,
)
from .families import (
    CubicForm,
    FamilyPrediction,
    FAMILY_NAMES,
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
)
from .intmatrix import IntMatrix, hnf
from .intpoly import IntPoly, parse_poly, poly_discriminant, poly_resultant
from .invariants import (
    InvariantReport,
    full_report,
    good_element,
    i_theta,
    maccluer_support,
    vp_IK,
    vp_iK,
)
from .modpoly import (
    FactorizationModP,
    ModPoly,
    count_monic_irreducibles,
    factor_mod_p,
    is_squarefree_mod_p,
)
from .numberfield import (
    AlgebraicInt,
    NumberField,
    PMaximalOrder,
    SplittingType,
    build_field,
    char_poly,
    dedekind_test,
    index_of,
    is_irreducible,
    is_primitive,
    p_maximal_order,
    split_prime,
)
from .search import SearchResult, search_prime_divisor_field

__all__ = [
    "AlgebraicInt",
    "CubicForm",
    "DegreeOutOfScope",
    "FAMILY_NAMES",
    "FactorizationModP",
    "FamilyPrediction",
    "INFINITY",
    "IndexLabError",
    "IntMatrix",
    "IntPoly",
    "InvalidDegree",
    "InvalidInput",
    "InvalidPrime",
    "InvariantReport",
    "ModPoly",
    "NotAField",
    "NotApplicable",
    "NotReduced",
    "NumberField",
    "PMaximalOrder",
    "ParseError",
    "RankDeficient",
    "ReduciblePolynomial",
    "RefinementCapExceeded",
    "SearchBudgetExhausted",
    "SearchResult",
    "SplittingType",
    "UnknownFamily",
    "ZeroModP",
    "build_field",
    "char_poly",
    "count_monic_irreducibles",
    "cubic_predict",
    "cubic_reduce",
    "dedekind_test",
    "factor_mod_p",
    "family_polynomial",
    "full_report",
    "gcd_all",
    "good_element",
    "hnf",
    "i_theta",
    "index_of",
    "is_irreducible",
    "is_primitive",
    "is_squarefree_mod_p",
    "lehmer_quintic_predict",
    "maccluer_support",
    "p_maximal_order",
    "parse_poly",
    "poly_discriminant",
    "poly_resultant",
    "pure_cubic_predict",
    "quadratic_predict",
    "search_prime_divisor_field",
    "simplest_cubic_predict",
    "simplest_quartic_predict",
    "simplest_sextic_predict",
    "split_prime",
    "valuation",
    "verify_family",
    "vp_IK",
    "vp_iK",
]

"""Exact symbolic calculus for free Lie algebras, shuffle algebras,
iterated path integrals, and Melnikov functions.

Everything is computed over exact scalars (rationals, multivariate
rational-coefficient polynomials, and rational functions of the
distinguished variable t); no floats anywhere.
"""

from .ncalg import (
    Alphabet,
    MPoly,
    NcPoly,
    RatFunc,
    concat_mul,
    default_letters,
    homogeneous_part,
    inner,
    scalar_str,
    shuffle,
    var,
    word_str,
)
from .liealg import (
    HallBasis,
    LieTree,
    decompose,
    expand,
    hall_basis,
    hall_rank,
    is_lie,
    witt_number,
)
from .chenint import (
    IntegralModel,
    PairingTable,
    TruncSeries,
    canonical_model,
    evaluate,
    is_grouplike,
    pair_graded,
    ts_exp,
    ts_inv,
    ts_log,
    ts_mul,
)
from .freegrp import (
    GroupWord,
    commutator,
    gw_inv,
    gw_mul,
    lcs_degree,
    magnus,
    phi_inverse,
)
from .melnikov import (
    Connection,
    WeightPair,
    apply_operator,
    ck,
    ck_closed_form,
    derive,
    example_ex_m5,
    melnikov_integrand,
    picard_lefschetz,
    pk_closed_form,
    pl_grade2,
    reduce_to_alpha,
)
from .parser import ParseError, parse_gw, parse_lie, parse_poly, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "MPoly", "NcPoly", "RatFunc", "concat_mul", "default_letters",
    "homogeneous_part", "inner", "scalar_str", "shuffle", "var", "word_str",
    "HallBasis", "LieTree", "decompose", "expand", "hall_basis", "hall_rank",
    "is_lie", "witt_number",
    "IntegralModel", "PairingTable", "TruncSeries", "canonical_model",
    "evaluate", "is_grouplike", "pair_graded", "ts_exp", "ts_inv", "ts_log",
    "ts_mul",
    "GroupWord", "commutator", "gw_inv", "gw_mul", "lcs_degree", "magnus",
    "phi_inverse",
    "Connection", "WeightPair", "apply_operator", "ck", "ck_closed_form",
    "derive", "example_ex_m5", "melnikov_integrand", "picard_lefschetz",
    "pk_closed_form", "pl_grade2", "reduce_to_alpha",
    "ParseError", "parse_gw", "parse_lie", "parse_poly", "parse_scalar",
    "__version__",
]

"""Parity reduction and high-precision verification for multiple zeta values.

Exact symbolic layer: compositions, the stuffle product, star expansion,
stuffle regularization, shifted-value expansion, and parity reductions to
lower depth with coefficients in Q[pi^2].  Numeric layer: arbitrary
precision evaluation of multiple zeta values, Hurwitz multiple zeta values,
monotangent and multitangent functions, plus a verification harness that
turns every identity into a residual computation.
"""

from .errors import DomainError, MzvError, NonAdmissibleError, ParityError
from .harmonic import (
    Composition,
    WordCombo,
    as_composition,
    compositions_of,
    compositions_up_to,
    depth,
    is_admissible,
    shift_expand,
    star_expand,
    stuffle,
    weight,
)
from .hurwitz import (
    eval_hurwitz_direct,
    eval_hurwitz_star,
    eval_hurwitz_taylor,
    eval_shifted,
    shifted_tpoly,
    tau_series,
    tau_value,
)
from .multitangent import (
    eval_monotangent,
    eval_multitangent_direct,
    eval_multitangent_regularized,
    monotangent_symmetric_oracle,
    multitangent_regularized_series,
)
from .mzv import (
    eval_admissible_mzv,
    eval_pigraded,
    eval_piterm,
    eval_tpoly,
    eval_word_combo,
    mzv_em_oracle,
    mzv_truncation_oracle,
)
from .precision import Approx, PrecisionContext
from .reduction import (
    DisplayTerm,
    PiGradedExpr,
    ReductionResult,
    build_main2_identity,
    expand_depth_certificate,
    reduce_main,
    reduce_main3,
)
from .regularization import TPoly, antipode_combo, regularize
from .special import PiTerm, bernoulli, delta, even_zeta
from .verify import (
    IDENTITIES,
    ResidualReport,
    VerificationFailure,
    sweep,
    verify_bouillot,
    verify_fund_eq2,
    verify_main,
    verify_main2,
    verify_main3,
)

__version__ = "0.1.0"

__all__ = [
    "Approx",
    "Composition",
    "DisplayTerm",
    "DomainError",
    "IDENTITIES",
    "MzvError",
    "NonAdmissibleError",
    "ParityError",
    "PiGradedExpr",
    "PiTerm",
    "PrecisionContext",
    "ReductionResult",
    "ResidualReport",
    "TPoly",
    "VerificationFailure",
    "WordCombo",
    "antipode_combo",
    "as_composition",
    "bernoulli",
    "build_main2_identity",
    "compositions_of",
    "compositions_up_to",
    "delta",
    "depth",
    "eval_admissible_mzv",
    "eval_hurwitz_direct",
    "eval_hurwitz_star",
    "eval_hurwitz_taylor",
    "eval_monotangent",
    "eval_multitangent_direct",
    "eval_multitangent_regularized",
    "eval_pigraded",
    "eval_piterm",
    "eval_shifted",
    "eval_tpoly",
    "eval_word_combo",
    "even_zeta",
    "expand_depth_certificate",
    "is_admissible",
    "monotangent_symmetric_oracle",
    "multitangent_regularized_series",
    "mzv_em_oracle",
    "mzv_truncation_oracle",
    "reduce_main",
    "reduce_main3",
    "regularize",
    "shift_expand",
    "shifted_tpoly",
    "star_expand",
    "stuffle",
    "sweep",
    "tau_series",
    "tau_value",
    "verify_bouillot",
    "verify_fund_eq2",
    "verify_main",
    "verify_main2",
    "verify_main3",
    "weight",
]

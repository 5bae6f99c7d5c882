"""Exact evaluation, vanishing criteria and factorizations of classical group
characters at root-of-unity twisted points, with the asymmetric t-core
bijections that go with them."""

from .algebra import Cyclotomic, EvalPoint, NonGenericPoint, determinant, random_eval_point
from .asymmetric import (
    AsymmetricSpec,
    Classification,
    LengthBoundError,
    build_asymmetric,
    classify_even,
    classify_odd,
    classify_schur,
    classify_symp,
    converse_sym_index,
    detect_asymmetric,
    enumerate_asymmetric_tcores,
    enumerate_t_cores,
)
from .characters import (
    Factorization,
    binomial_limit_at_one,
    evaluate_factorization,
    factorize,
    generalized_schur,
    oe_half_shifted,
    specialize_points,
    specialized_character,
    weyl_character_direct,
)
from .genfun import (
    LatticeLabel,
    family_cores,
    gf_coefficients,
    infinitude_witness,
    psi,
    psi_inverse,
    size_formula,
    staircase_image,
    staircase_preimage,
)
from .partitions import (
    PaddingTooShort,
    beta_set,
    conjugate,
    frobenius,
    partition,
    residue_profile,
    sigma_permutation,
    t_core,
    t_quotient,
)
from .verify import sweep

__version__ = "0.1.0"

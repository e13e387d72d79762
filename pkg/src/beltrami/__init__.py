"""Conformal dilatation and Beltrami forms over quadratic extensions of Q, in exact arithmetic."""

from .conformal import (
    ConformalClass,
    Tag,
    beltrami_expansion,
    canonical_structure,
    conformal_class,
    dd,
    dilatation,
    dilatation_via_beltrami,
    hom_to_m,
    m_to_hom,
    pullback,
    scalar_mul_M,
)
from .errors import (
    BeltramiError,
    DegenerateDenominator,
    ExceptionalClass,
    NotABasis,
    NotAntiNormLike,
    NotPOrthogonal,
    NotSymmetric,
    ParseError,
    SquareDiscriminant,
    VanishingLinearPart,
    VectorMismatch,
    ZeroDiscriminant,
    ZeroForm,
    ZeroMap,
)
from .field_ext import (
    ExtScalar,
    QuadExtField,
    Rational,
    conj,
    is_in_kperp,
    make_field,
    norm,
    pairing,
    trace_half,
)
from .quadforms import (
    EndoMatrix,
    QuadraticForm,
    congruent,
    decompose,
    det_form,
    divide,
    evaluate,
    is_anti_norm_like,
    is_norm_like,
    is_orthogonal,
    left_product,
    norm_like,
    orthogonal_by_basis,
    polarize,
    scalar_mul_A,
)
from .semilinear import (
    AntiLinearMap,
    SemiLinearMap,
    beltrami,
    compose_anti,
    dcal,
    decompose_matrix,
    from_pair,
    mult_map,
    pairing_hom,
    scalar_mul_hom,
)

__version__ = "0.1.0"

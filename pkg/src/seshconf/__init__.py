"""Exact computations with curve arrangements on algebraic surfaces:
combinatorial invariants, configurational Seshadri constants and
certificates or bounds for multi-point Seshadri constants."""
from .arrangement import (
    Arrangement,
    Curve,
    Diagnostic,
    InvariantSummary,
    Point,
    invariants,
    is_star,
    satisfies_equal_class_assumption,
    validate,
    verify_count_identity,
)
from .document import dumps, loads, parse_line_bundle
from .errors import (
    HypothesisError,
    InvalidArrangement,
    MissingData,
    SeshconfError,
    SurfaceMismatch,
    UnsupportedSurface,
    VacuousBound,
)
from .exact import CyclotomicNumber, Ordering, Rational, parse_rational, rat_cmp_sqrt
from .lattice import (
    DivisorClass,
    SurfaceKind,
    SurfaceModel,
    abstract_lattice,
    adjunction_genus,
    is_ample,
    is_nef,
    k3_double_plane,
    pair,
    projective_plane,
    ruled_surface,
)
from .seshadri import (
    Certificate,
    Check,
    ResultKind,
    SeshadriResult,
    SqrtBound,
    certify_main_theorem,
    certify_star_corollary,
    configurational_epsilon,
    equal_class_bounds,
    lower_bound_kodaira,
    lower_bound_ruled,
    min_curve_ratio,
    sqrt_upper_bound,
    verify_hirzebruch_type_inequality,
    verify_kodaira_inequality,
)
from .transforms import double_cover_k3, pullback_to_ruled

__version__ = "0.1.0"

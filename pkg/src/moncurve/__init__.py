"""Regularity and reduction number of smooth monomial curves via sumsets."""

from .bitpoly import BitPoly, Gap, ZeroPolynomial, gaps, h, is_full, lambda_max
from .curve import (
    BadAlpha,
    CurveError,
    CurveInvariants,
    GeneratorSet,
    Hole,
    InternalInconsistency,
    NotSmooth,
    OutOfRange,
    cohomology_dims,
    epsilon,
    holes,
    invariants,
    new_generator_set,
    power_support,
    reduction_number,
    regularity,
)
from .properties import check_bounds, check_p1, check_p2, classify_families, q_holds
from .search import enumerate_smooth, scan, verify_suite

__version__ = "0.1.0"

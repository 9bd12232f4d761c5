"""Exact Donaldson invariants of four-manifolds from Seiberg-Witten data.

Computes polynomial Donaldson invariants through the PU(2) monopole
reduction formulas (top-level reducibles only) and, independently, by
expanding the Kronheimer-Mrowka / Witten Donaldson series.
"""
from .arith import binomial, format_rational, parse_rational
from .errors import (
    AdmissibilityError,
    CongruenceError,
    ConsistencyError,
    DegreeError,
    DimensionError,
    InputError,
    LiftMismatchError,
    MRKError,
    NonIntegralReductionError,
    NotSimpleTypeError,
    SetupError,
    UnsupportedLevelError,
    ValidationFailed,
)
from .index import DimensionReport, compute_p1, dim_asd, dim_dirac, dim_sw, dimension_report, n_lambda_s
from .lattice import (
    IntersectionLattice,
    LatticeVector,
    diagonal,
    direct_sum,
    e8,
    hyperbolic,
    half_difference,
    is_characteristic,
    pair,
    square,
)
from .manifold import (
    FourManifold,
    GaugeSetup,
    SWDatum,
    blow_up,
    catalog_elliptic,
    derive_F,
    elliptic_setup,
    f_square_window,
    flat_connection_obstructed,
)
from .pairing import (
    InvariantMonomial,
    PairingResult,
    c_constant,
    jacobi,
    link_pairing,
    link_sum,
    reduction_donaldson,
    simple_type_donaldson,
)
from .reducibles import ReducibleDatum, enumerate_reducibles, partition_reducibles, top_level_only
from .series import (
    SeriesSpec,
    km_series,
    orientation_sign,
    reduce_point_powers,
    series_invariant,
    witten_coefficients,
    witten_constant,
    witten_series,
)
from .validation import ValidationReport, validate_setup

__version__ = "0.1.0"

"""Exact counting, enumeration and piercing-witness construction for
non-crossing perfect matchings of planar point sets."""

from .classify import (
    CONVEX,
    EXCEPTIONAL_SIX,
    GENERIC,
    TheoremReport,
    classify,
    is_exceptional_six,
    verify_main_theorem,
)
from .errors import (
    CoordinateRangeError,
    DegenerateInputError,
    DuplicatePointError,
    GenerationExhaustedError,
    InternalInconsistencyError,
    InvalidMatchingError,
    NotGeneralPositionError,
    NotOnHullError,
    OddSizeError,
    ParseError,
    PlanematchError,
    PreconditionError,
    SizeLimitError,
)
from .experiment import ExperimentSummary, TrialFailure, run_experiment
from .generators import EXCEPTIONAL_COORDS, KINDS, GeneratorSpec, generate
from .geometry import (
    COORD_BOUND,
    HullLabeling,
    Orientation,
    Point,
    PointSet,
    convex_hull,
    halving_vertex,
    is_convex_position,
    orient,
    pierces,
    point_in_triangle,
    polar_order,
    segments_cross,
    side_counts,
)
from .matchings import (
    Matching,
    catalan,
    catalan_table,
    count_matchings,
    enumerate_matchings,
    exists_piercing_matching,
    find_piercing_pair,
    gnt_lower_bound,
    has_piercing_property,
)
from .pointset_io import (
    parse_point_set,
    point_set_to_text,
    read_point_set,
    report_to_dict,
    summary_to_dict,
    write_point_set,
    write_report,
)
from .svg import render_svg
from .witness import (
    WitnessResult,
    WitnessTrace,
    build_witness,
    build_witness_many_interior,
    build_witness_one_interior,
    fallback_counts,
    reset_fallback_counts,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

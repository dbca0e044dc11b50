"""Exact incidence analysis of red/blue point configurations.

The package measures, with exact rational arithmetic, how many lines a
balanced two-colored point set induces, how many of those lines see both
colors, and how the count compares to n(2n - r) where r is the maximum
number of collinear points.  Around that core: dyadic richness classes
with incidence-bound comparators, a three-way case classifier, seeded
configuration generators, an annealing search for extremal colorings,
and a CLI producing deterministic point files and JSON reports.
"""

from .analysis import (
    DEFAULT_K1,
    DEFAULT_K2,
    BeckReport,
    Case,
    CaseVerdict,
    DyadicClassRow,
    PairClassCounts,
    analyze_config,
    beck_ratio,
    classify_pairs,
    cross_line_count,
    dyadic_classes,
    feasible_k1,
    main_inequality_check,
    main_inequality_region,
    st_bound_ratio,
    two_extremes_classify,
)
from .engine import (
    ColoredConfig,
    LineRecord,
    RichnessSpectrum,
    bichromatic_lines,
    induced_lines,
    k_rich_count,
    max_richness,
    points_on_line,
    richness_spectrum,
)
from .errors import (
    BecklineError,
    DomainError,
    DuplicatePointsError,
    IdenticalPointsError,
    InconclusiveCaseError,
    InvalidConstantsError,
    InvalidLineError,
    InvalidSpecError,
    MoveInapplicableError,
    PointFileError,
    SamplingExhaustedError,
    SubsetSizeError,
    TooFewPointsError,
    UnequalColorCountsError,
)
from .generators import Family, GenSpec, enumerate_suite, generate
from .geometry import CanonicalLine, Color, ExactPoint, collinear, incident, line_through
from .pointfile import config_digest, parse_points, serialize_points
from .report import format_rational, render_json, report_doc
from .search import Move, SearchResult, SearchSpec, search

__version__ = "0.1.0"

"""Quantitative analysis of bichromatic configurations.

Implements the measurable pieces of the bichromatic induced-lines bound:
dyadic richness classes with their raw Szemeredi-Trotter comparators, the
low/mid/high partition of the n^2 red-blue point pairs, the two-extremes
case classifier, the bichromatic ratio |B| / (n(2n-r)), and the numeric
inequality used in the final counting step.

Boundary conventions (fixed once, used everywhere):

* dyadic class j >= 1 holds the bichromatic lines with richness in the
  half-open interval (2^(j-1), 2^j], so richness 2 lands in class 1 and
  the classes partition the bichromatic lines exactly;
* a red-blue pair is `low` when its line's richness is < 1/k1, `mid` when
  it is in [1/k1, k1*n], and `high` otherwise, evaluated in that order so
  the three classes partition the pairs for every k1 > 0.

The constants k1 and k2 are runtime parameters (defaults 1/4 and 1/96);
the point of the module is to measure which values work empirically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, inf

from .engine import (
    ColoredConfig,
    LineRecord,
    bichromatic_lines,
    induced_lines,
    max_richness,
    k_rich_count,
)
from .errors import (
    DomainError,
    InconclusiveCaseError,
    InvalidConstantsError,
    InvalidLineError,
    SubsetSizeError,
    UnequalColorCountsError,
)
from .geometry import CanonicalLine, Color, incident

DEFAULT_K1 = Fraction(1, 4)
DEFAULT_K2 = Fraction(1, 96)


class Case(Enum):
    CASE_I_ALT_A = "CaseI_AltA"
    CASE_II_ALT_B = "CaseII_AltB"
    CASE_III_ALT_A = "CaseIII_AltA"


@dataclass(frozen=True)
class DyadicClassRow:
    """Line and pair counts of one dyadic richness class, next to the raw
    (constant-free) Szemeredi-Trotter comparator columns."""

    j: int
    line_count: int
    pair_count: int
    st_line_bound: Fraction  # n^2 / 2^(3j) + n / 2^j
    st_pair_bound: Fraction  # n^2 / 2^j + n * 2^j


@dataclass(frozen=True)
class PairClassCounts:
    """The n^2 red-blue pairs split by their line's richness."""

    low: int
    mid: int
    high: int
    k1: Fraction

    @property
    def total(self) -> int:
        return self.low + self.mid + self.high


@dataclass(frozen=True)
class CaseVerdict:
    """Outcome of the two-extremes classification.

    Case II carries the rich color-balanced line in ``witness``; Case III
    carries the blue-heavy line in ``witness`` and the red-heavy line in
    ``witness2``.  Case I has no witness.
    """

    case: Case
    witness: CanonicalLine | None
    witness2: CanonicalLine | None
    k1: Fraction
    k2: Fraction


@dataclass(frozen=True)
class BeckReport:
    """Per-configuration analysis record."""

    n: int
    total_points: int
    r: int
    num_induced: int
    num_bichromatic: int
    beck_ratio: Fraction | float  # exact rational, or inf when r = 2n
    dyadic: tuple[DyadicClassRow, ...]
    pair_classes: PairClassCounts
    verdict: CaseVerdict


def _require_balanced(config: ColoredConfig) -> int:
    if config.n_red != config.n_blue:
        raise UnequalColorCountsError(
            f"need |red| = |blue|, got {config.n_red} red and {config.n_blue} blue"
        )
    if config.n_red < 1:
        raise UnequalColorCountsError("need at least one point per color")
    return config.n_red


def _as_positive_fraction(value, name: str) -> Fraction:
    k = Fraction(value)
    if k <= 0:
        raise InvalidConstantsError(f"{name} must be positive, got {k}")
    return k


def dyadic_class_index(richness: int) -> int:
    """The j >= 1 with richness in (2^(j-1), 2^j]."""
    return (richness - 1).bit_length()


def dyadic_classes(config: ColoredConfig) -> list[DyadicClassRow]:
    """Partition the bichromatic lines into dyadic richness classes.

    Returns rows for j = 1 .. ceil(log2(max bichromatic richness)),
    including empty classes.  pair_count sums red_count * blue_count over
    the lines of the class, so the pair counts over all rows add up to
    n^2 and the line counts to |B|.
    """
    n = _require_balanced(config)
    bi = bichromatic_lines(config)
    j_max = max(dyadic_class_index(rec.richness) for rec in bi)
    lines = [0] * (j_max + 1)
    pairs = [0] * (j_max + 1)
    for rec in bi:
        j = dyadic_class_index(rec.richness)
        lines[j] += 1
        pairs[j] += rec.red_count * rec.blue_count
    rows = []
    for j in range(1, j_max + 1):
        rows.append(
            DyadicClassRow(
                j=j,
                line_count=lines[j],
                pair_count=pairs[j],
                st_line_bound=Fraction(n * n, 2 ** (3 * j)) + Fraction(n, 2**j),
                st_pair_bound=Fraction(n * n, 2**j) + n * 2**j,
            )
        )
    return rows


def _pair_class(richness: int, k1: Fraction, n: int) -> str:
    if richness < 1 / k1:
        return "low"
    if richness <= k1 * n:
        return "mid"
    return "high"


def classify_pairs(config: ColoredConfig, k1) -> PairClassCounts:
    """Assign each of the n^2 red-blue pairs to low/mid/high by the
    richness of the line the pair induces."""
    n = _require_balanced(config)
    k1 = _as_positive_fraction(k1, "k1")
    counts = {"low": 0, "mid": 0, "high": 0}
    for rec in bichromatic_lines(config):
        counts[_pair_class(rec.richness, k1, n)] += rec.red_count * rec.blue_count
    return PairClassCounts(low=counts["low"], mid=counts["mid"], high=counts["high"], k1=k1)


def feasible_k1(config: ColoredConfig, grid) -> Fraction | None:
    """The largest k1 in the grid for which low + high >= n^2 / 2.

    The grid must be a nonempty ascending list of positive rationals.
    Returns None when no grid value qualifies.
    """
    n = _require_balanced(config)
    values = [_as_positive_fraction(v, "grid value") for v in grid]
    if not values:
        raise InvalidConstantsError("grid must be nonempty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidConstantsError("grid must be strictly ascending")
    threshold = Fraction(n * n, 2)
    for k1 in reversed(values):
        counts = classify_pairs(config, k1)
        if counts.low + counts.high >= threshold:
            return k1
    return None


def two_extremes_classify(config: ColoredConfig, k1, k2) -> CaseVerdict:
    """Run the two-extremes case analysis at constants (k1, k2).

    Case I when at least n^2/4 pairs are low.  Otherwise Case II when
    some line carries >= k2*n points of each color; the witness is such a
    line of maximum richness (ties broken by canonical triple).
    Otherwise Case III: among the lines of the high pair class, witness
    is the one with the most blue points and witness2 the one with the
    most red points among the remaining lines (so the two are distinct;
    ties again break by canonical triple).  Raises InconclusiveCaseError
    when Case III is reached but fewer than two high-class lines exist.
    """
    n = _require_balanced(config)
    k1 = _as_positive_fraction(k1, "k1")
    k2 = _as_positive_fraction(k2, "k2")
    if k2 > k1 / 6:
        raise InvalidConstantsError(f"need k2 <= k1/6, got k2={k2}, k1/6={k1 / 6}")

    counts = classify_pairs(config, k1)
    if counts.low >= Fraction(n * n, 4):
        return CaseVerdict(Case.CASE_I_ALT_A, None, None, k1, k2)

    bi = bichromatic_lines(config)
    threshold = k2 * n
    balanced = [
        rec for rec in bi if rec.red_count >= threshold and rec.blue_count >= threshold
    ]
    if balanced:
        witness = min(balanced, key=lambda rec: (-rec.richness, rec.line))
        return CaseVerdict(Case.CASE_II_ALT_B, witness.line, None, k1, k2)

    high = [rec for rec in bi if _pair_class(rec.richness, k1, n) == "high"]
    if not high:
        raise InconclusiveCaseError(
            f"no high-class lines at k1={k1}; cannot produce Case III witnesses"
        )
    l1 = min(high, key=lambda rec: (-rec.blue_count, rec.line))
    rest = [rec for rec in high if rec.line != l1.line]
    if not rest:
        raise InconclusiveCaseError(
            f"only one high-class line at k1={k1}; Case III needs two distinct witnesses"
        )
    l2 = min(rest, key=lambda rec: (-rec.red_count, rec.line))
    return CaseVerdict(Case.CASE_III_ALT_A, l1.line, l2.line, k1, k2)


def beck_ratio(config: ColoredConfig) -> Fraction | float:
    """|B| / (n(2n - r)), the quantity whose lower bound is under test.

    Returns inf when r = 2n (all points collinear), where the bound's
    right side vanishes.
    """
    n = _require_balanced(config)
    r = max_richness(config)
    if r == 2 * n:
        return inf
    return Fraction(len(bichromatic_lines(config)), n * (2 * n - r))


def st_bound_ratio(config: ColoredConfig, k: int) -> Fraction:
    """k-rich line count divided by the raw bound N^2/k^3 + N/k.

    An empirical estimate of the constant in the k-rich-lines bound.
    """
    count = k_rich_count(config, k)
    big_n = config.total
    return count / (Fraction(big_n * big_n, k**3) + Fraction(big_n, k))


def cross_line_count(
    config: ColoredConfig, ell: CanonicalLine, x_size: int
) -> tuple[int, int]:
    """Count bichromatic lines joining a fixed line to a subset X off it.

    X is the first x_size points not on ell, in canonical input order
    (reds then blues, each in input order).  Returns (actual, predictor):
    actual is the exact number of distinct bichromatic lines containing a
    point of X and a point of ell; predictor is the lower-bound estimate
    ceil(x_size * m / 2) - C(x_size, 2) clamped at 0, where m is the
    minimum over x in X of the number of opposite-color points on ell.
    The predictor never exceeds actual: the lines through one x and the
    distinct points of ell are distinct, and each line absorbing several
    X points costs at least one of the C(x_size, 2) deducted pairs.
    """
    records = induced_lines(config)
    if all(rec.line != ell for rec in records):
        raise InvalidLineError(f"{ell} is not induced by the configuration")
    points = config.points()
    on_ell = [p for p in points if incident(ell, p)]
    off_ell = [p for p in points if not incident(ell, p)]
    if x_size < 0 or x_size > len(off_ell):
        raise SubsetSizeError(
            f"x_size must be in [0, {len(off_ell)}], got {x_size}"
        )
    subset = off_ell[:x_size]

    actual = 0
    for rec in records:
        if not rec.is_bichromatic:
            continue
        if any(incident(rec.line, x) for x in subset) and any(
            incident(rec.line, e) for e in on_ell
        ):
            actual += 1

    if x_size == 0:
        return (actual, 0)
    red_on_ell = sum(1 for p in on_ell if p.color is Color.RED)
    blue_on_ell = len(on_ell) - red_on_ell
    m = min(
        blue_on_ell if x.color is Color.RED else red_on_ell for x in subset
    )
    raw = -(-(x_size * m) // 2) - x_size * (x_size - 1) // 2
    return (actual, max(0, raw))


def main_inequality_check(n: int, r: int, k2) -> tuple[Fraction, Fraction, bool]:
    """Evaluate both sides of the final counting inequality
    (1/2) k2^2 n (2n-r) - C(k2(2n-r), 2) >= (1/2) k2^3 n (2n-r)
    with the binomial generalized to real arguments via x(x-1)/2.

    Requires 0 < k2 < 1 and 2*k2*n <= r <= 2n.  Returns (left side,
    right side, whether the inequality holds).
    """
    k2 = Fraction(k2)
    if not (0 < k2 < 1):
        raise DomainError(f"need 0 < k2 < 1, got {k2}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not (2 * k2 * n <= r <= 2 * n):
        raise DomainError(f"need 2*k2*n <= r <= 2n, got r={r} with n={n}, k2={k2}")
    slack = 2 * n - r
    x = k2 * slack
    left = Fraction(1, 2) * k2**2 * n * slack - x * (x - 1) / 2
    right = Fraction(1, 2) * k2**3 * n * slack
    return (left, right, left >= right)


def main_inequality_region(
    n: int, k2_values, r_values=None
) -> list[tuple[int, Fraction, bool | None]]:
    """Map where the final counting inequality holds over an (r, k2) grid.

    Rows are (r, k2, holds) ordered by r then k2; holds is None for cells
    outside the domain r >= 2*k2*n.
    """
    if r_values is None:
        r_values = range(0, 2 * n + 1)
    rows: list[tuple[int, Fraction, bool | None]] = []
    for r in r_values:
        for k2 in k2_values:
            k2 = Fraction(k2)
            if not (0 < k2 < 1) or not (2 * k2 * n <= r <= 2 * n):
                rows.append((r, k2, None))
                continue
            _, _, holds = main_inequality_check(n, r, k2)
            rows.append((r, k2, holds))
    return rows


def analyze_config(config: ColoredConfig, k1=DEFAULT_K1, k2=DEFAULT_K2) -> BeckReport:
    """Full per-configuration analysis at constants (k1, k2)."""
    n = _require_balanced(config)
    records = induced_lines(config)
    r = max(rec.richness for rec in records)
    num_bi = sum(1 for rec in records if rec.is_bichromatic)
    return BeckReport(
        n=n,
        total_points=config.total,
        r=r,
        num_induced=len(records),
        num_bichromatic=num_bi,
        beck_ratio=beck_ratio(config),
        dyadic=tuple(dyadic_classes(config)),
        pair_classes=classify_pairs(config, k1),
        verdict=two_extremes_classify(config, k1, k2),
    )

"""Machine-readable JSON reports for analysis runs.

All numeric content is exact: rationals render as canonical strings
("a" when the denominator is 1, else "a/b"), the degenerate ratio as
"inf".  Key order is fixed and dicts render with indent=2, so equal
inputs produce byte-identical reports.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import inf

from .analysis import (
    CaseVerdict,
    beck_ratio,
    classify_pairs,
    dyadic_classes,
    two_extremes_classify,
)
from .engine import (
    ColoredConfig,
    bichromatic_lines,
    induced_lines,
    richness_spectrum,
)
from .errors import InconclusiveCaseError
from .geometry import CanonicalLine
from .pointfile import config_digest

REPORT_VERSION = 1


def format_rational(value) -> str:
    """Canonical string for an exact rational, or "inf"."""
    if value == inf:
        return "inf"
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def _line_coeffs(line: CanonicalLine | None):
    if line is None:
        return None
    return [line.a, line.b, line.c]


def _verdict_doc(verdict: CaseVerdict) -> dict:
    return {
        "case": verdict.case.value,
        "witness": _line_coeffs(verdict.witness),
        "witness2": _line_coeffs(verdict.witness2),
    }


def report_doc(config: ColoredConfig, k1, k2, seed: int | None = None) -> dict:
    """Analyze the configuration and assemble the report dictionary.

    An inconclusive case split is a reportable outcome, not a failure:
    the verdict field then carries {"case": "Inconclusive", "reason"}.
    """
    k1 = Fraction(k1)
    k2 = Fraction(k2)
    records = induced_lines(config)
    try:
        verdict = _verdict_doc(two_extremes_classify(config, k1, k2))
    except InconclusiveCaseError as exc:
        verdict = {"case": "Inconclusive", "reason": str(exc)}
    spectrum = richness_spectrum(config)
    pair_classes = classify_pairs(config, k1)
    return {
        "version": REPORT_VERSION,
        "config_digest": config_digest(config),
        "n": config.n_red,
        "r": max(rec.richness for rec in records),
        "num_induced": len(records),
        "num_bichromatic": len(bichromatic_lines(config)),
        "beck_ratio": format_rational(beck_ratio(config)),
        "spectrum": {str(k): v for k, v in sorted(spectrum.counts.items())},
        "dyadic": [
            {
                "j": row.j,
                "line_count": row.line_count,
                "pair_count": row.pair_count,
                "st_line_bound": format_rational(row.st_line_bound),
                "st_pair_bound": format_rational(row.st_pair_bound),
            }
            for row in dyadic_classes(config)
        ],
        "pair_classes": {
            "low": pair_classes.low,
            "mid": pair_classes.mid,
            "high": pair_classes.high,
        },
        "verdict": verdict,
        "parameters": {
            "k1": format_rational(k1),
            "k2": format_rational(k2),
            "seed": seed,
        },
    }


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"

"""Acceptance gate: eleven end-to-end criteria, one test each.

Each test prints a single ``acceptance NN <name>: PASS|FAIL`` line (visible
with ``pytest -s``).  Expected values marked as regression bounds below
were derived by running the oracles/suite once and freezing the result:

* the suite-wide finite minimum of |B|/(n(2n-r)) was 2487/7424 (~0.335),
  so the 1/20 guard of criterion 4 holds with a wide margin;
* the grid Szemeredi-Trotter constant of criterion 6 was exactly 6/5.
"""

import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import ceil, comb, inf

import pytest

from beckline.analysis import (
    Case,
    beck_ratio,
    classify_pairs,
    cross_line_count,
    feasible_k1,
    main_inequality_check,
    main_inequality_region,
    st_bound_ratio,
    two_extremes_classify,
)
from beckline.cli import main
from beckline.engine import (
    ColoredConfig,
    bichromatic_lines,
    induced_lines,
    max_richness,
    points_on_line,
    richness_spectrum,
)
from beckline.errors import InconclusiveCaseError
from beckline.generators import Family, GenSpec, enumerate_suite, generate
from beckline.geometry import Color
from beckline.search import Move, SearchSpec, search

from oracles import (
    exhaustive_color_minimum,
    naive_cross_line_count,
    naive_line_records,
)

K1_DEFAULT = Fraction(1, 4)
K2_DEFAULT = Fraction(1, 96)
SUITE_MIN_GUARD = Fraction(1, 20)  # regression guard, confirmed at first run
ST_CONSTANT_FROZEN = Fraction(6, 5)  # observed grid maximum, frozen


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"acceptance {num:02d} {name}: FAIL", flush=True)
        raise
    print(f"acceptance {num:02d} {name}: PASS", flush=True)


def as_rows(records):
    return sorted(
        (r.line.a, r.line.b, r.line.c, r.red_count, r.blue_count) for r in records
    )


@pytest.fixture(scope="module")
def suite200():
    """Mixed-family oracle suite: 5 families x n in {2,4,8,12,20} x 8 seeds."""
    return enumerate_suite([2, 4, 8, 12, 20], 8)


@pytest.fixture(scope="module")
def suite100():
    """Desk-scale suite: 5 families x n in {8,16,32,64} x 5 seeds."""
    return enumerate_suite([8, 16, 32, 64], 5)


def test_criterion_01_oracle_equivalence(suite200):
    with criterion(1, "oracle-equivalence"):
        start = time.time()
        assert len(suite200) == 200
        for spec, cfg in suite200:
            assert cfg.total <= 40
            assert as_rows(induced_lines(cfg)) == naive_line_records(cfg)
        assert time.time() - start < 60


def test_criterion_02_closed_form_spectra():
    with criterion(2, "closed-form-spectra"):
        for n, seed in ((2, 0), (4, 1), (8, 2)):
            cfg = generate(GenSpec(Family.GENERAL_POSITION, n, seed=seed))
            assert len(induced_lines(cfg)) == comb(2 * n, 2)
            assert len(bichromatic_lines(cfg)) == n * n
        for n in (2, 4, 10):
            cfg = generate(GenSpec(Family.ALL_COLLINEAR, n, seed=3))
            assert len(induced_lines(cfg)) == 1
            assert max_richness(cfg) == 2 * n
            assert beck_ratio(cfg) == inf
        grid = ColoredConfig.from_coords(
            [(0, 0), (0, 2), (1, 1), (2, 0), (2, 2)],
            [(0, 1), (1, 0), (1, 2), (2, 1)],
        )
        assert len(induced_lines(grid)) == 20
        assert richness_spectrum(grid).counts == {2: 12, 3: 8}
        assert max_richness(grid) == 3


def test_criterion_03_conservation(suite200, suite100):
    with criterion(3, "conservation-invariants"):
        for _, cfg in suite200 + suite100:
            spectrum = richness_spectrum(cfg)
            assert spectrum.pair_mass() == comb(cfg.total, 2)
            bi = bichromatic_lines(cfg)
            assert sum(r.red_count * r.blue_count for r in bi) == cfg.n_red * cfg.n_blue


def test_criterion_04_beck_ratio_guard(suite100):
    with criterion(4, "beck-ratio-desk-scale"):
        mins = {}
        for spec, cfg in suite100:
            ratio = beck_ratio(cfg)
            if ratio != inf:
                assert ratio >= SUITE_MIN_GUARD, (
                    f"guard violated by {spec.family.value} n={spec.n} "
                    f"seed={spec.seed}: ratio {ratio}"
                )
            key = (spec.family, spec.n)
            if key not in mins or ratio < mins[key]:
                mins[key] = ratio
        for family in Family:
            m32, m64 = mins[(family, 32)], mins[(family, 64)]
            if m32 == inf or m64 == inf:
                assert m32 == m64 == inf  # the fully collinear family
                continue
            assert Fraction(1, 2) < m64 / m32 < 2


def test_criterion_05_feasible_k1(suite100):
    with criterion(5, "pair-partition-feasibility"):
        grid = [Fraction(i, 64) for i in range(1, 65)]
        for spec, cfg in suite100:
            got = feasible_k1(cfg, grid)
            assert got is not None
            counts = classify_pairs(cfg, got)
            n = spec.n
            assert counts.low + counts.high >= Fraction(n * n, 2)


def test_criterion_06_st_comparator():
    with criterion(6, "st-comparator"):
        worst = Fraction(0)
        for m in (5, 10, 15, 20):
            cells = [(x, y) for x in range(m) for y in range(m)]
            cfg = ColoredConfig.from_coords(cells[0::2], cells[1::2])
            for k in range(3, m + 1):
                worst = max(worst, st_bound_ratio(cfg, k))
        assert worst <= ST_CONSTANT_FROZEN <= 8


def test_criterion_07_classifier_soundness(suite100):
    with criterion(7, "classifier-soundness"):
        seen = {case: 0 for case in Case}
        inconclusive = 0

        def check(cfg, n, k1, k2):
            nonlocal inconclusive
            try:
                verdict = two_extremes_classify(cfg, k1, k2)
            except InconclusiveCaseError:
                inconclusive += 1
                return
            seen[verdict.case] += 1
            if verdict.case is Case.CASE_I_ALT_A:
                assert verdict.witness is None and verdict.witness2 is None
            elif verdict.case is Case.CASE_II_ALT_B:
                members = points_on_line(cfg, verdict.witness)
                reds = sum(1 for p in members if p.color is Color.RED)
                need = ceil(k2 * n)
                assert reds >= need and len(members) - reds >= need
            else:
                assert verdict.witness != verdict.witness2
                assert verdict.witness is not None and verdict.witness2 is not None

        for spec, cfg in suite100:
            check(cfg, spec.n, K1_DEFAULT, K2_DEFAULT)
        # drive the two-witness branch explicitly: crossing rich lines at
        # constants where no single line is color-balanced
        for n in (32, 64):
            cfg = generate(GenSpec(Family.TWO_LINES, n, seed=1))
            verdict = two_extremes_classify(cfg, Fraction(1, 2), Fraction(1, 12))
            assert verdict.case is Case.CASE_III_ALT_A
            assert verdict.witness != verdict.witness2
            seen[Case.CASE_III_ALT_A] += 1
        assert seen[Case.CASE_I_ALT_A] > 0
        assert seen[Case.CASE_II_ALT_B] > 0
        assert seen[Case.CASE_III_ALT_A] >= 2


def test_criterion_08_cross_line_lower_bound():
    with criterion(8, "cross-line-lower-bound"):
        rng = random.Random(20240817)
        families = [f for f in Family]
        checked = 0
        while checked < 100:
            family = families[rng.randrange(len(families))]
            n = rng.choice([3, 5, 8, 12, 15])
            cfg = generate(GenSpec(family, n, seed=rng.getrandbits(32)))
            assert cfg.total <= 30
            records = induced_lines(cfg)
            ell = records[rng.randrange(len(records))].line
            off = cfg.total - len(points_on_line(cfg, ell))
            x_size = rng.randint(0, min(off, 8))
            actual, predictor = cross_line_count(cfg, ell, x_size)
            assert actual >= predictor
            assert actual == naive_cross_line_count(cfg, ell, x_size)
            checked += 1


def test_criterion_09_main_inequality():
    with criterion(9, "main-inequality-map"):
        assert main_inequality_check(10, 20, Fraction(1, 2)) == (0, 0, True)
        assert main_inequality_check(10, 10, Fraction(1, 2)) == (
            Fraction(5, 2),
            Fraction(25, 4),
            False,
        )
        assert main_inequality_check(100, 190, Fraction(1, 2)) == (
            115,
            Fraction(125, 2),
            True,
        )
        k2_grid = [Fraction(1, 96), Fraction(1, 24), Fraction(1, 8), Fraction(1, 2)]
        rows = main_inequality_region(20, k2_grid)
        assert rows == main_inequality_region(20, k2_grid)
        for r, k2, holds in rows:
            if holds is not None:
                assert holds == main_inequality_check(20, r, k2)[2]


def test_criterion_10_exhaustive_search_oracle():
    with criterion(10, "exhaustive-search-oracle"):
        start = time.time()
        cases = [
            (family, n, seed)
            for family in Family
            for n, seed in ((4, 0), (5, 1), (6, 2))
        ]
        for family, n, seed in cases:
            base = generate(GenSpec(family, n, seed=seed))
            want, _ = exhaustive_color_minimum(base.points())
            result = search(
                SearchSpec(
                    base=base,
                    moves=frozenset({Move.COLOR_SWAP}),
                    iterations=1500,
                    restarts=4,
                    seed=2,
                )
            )
            assert result.best_ratio == want, (family, n, seed)
        assert time.time() - start < 120


def test_criterion_11_cli_determinism(tmp_path):
    with criterion(11, "cli-determinism"):
        runs = {
            "generate": lambda d: main(
                ["generate", "--family", "collinear-plus-random", "--n", "6",
                 "--seed", "9", "--out", str(d / "c.pts")]
            ),
            "st-check": lambda d: main(
                ["st-check", "--in", str(d / "c.pts"), "--k", "2,3,4",
                 "--out", str(d / "st.json")]
            ),
            "analyze": lambda d: main(
                ["analyze", "--in", str(d / "c.pts"), "--out", str(d / "c.json")]
            ),
            "search": lambda d: main(
                ["search", "--in", str(d / "c.pts"), "--iterations", "300",
                 "--restarts", "2", "--seed", "4", "--out-dir", str(d / "sr")]
            ),
            "suite": lambda d: main(
                ["suite", "--n-list", "4", "--seeds", "2", "--out-dir", str(d / "su")]
            ),
        }
        a, b = tmp_path / "a", tmp_path / "b"
        for d in (a, b):
            d.mkdir()
            for name, run in runs.items():
                assert run(d) == 0, name
        artifacts = sorted(
            p.relative_to(a) for p in a.rglob("*") if p.is_file()
        )
        assert artifacts == sorted(p.relative_to(b) for p in b.rglob("*") if p.is_file())
        for rel in artifacts:
            assert (a / rel).read_bytes() == (b / rel).read_bytes(), rel

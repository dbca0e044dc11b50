"""Point-file parsing, serialization, and the content digest."""

from fractions import Fraction

import pytest

from beckline.engine import ColoredConfig
from beckline.errors import PointFileError
from beckline.generators import Family, GenSpec, generate
from beckline.pointfile import HEADER, config_digest, parse_points, serialize_points


class TestParse:
    def test_basic(self):
        cfg = parse_points(
            "beckline-points v1\n"
            "# a comment\n"
            "0 0 R\n"
            "\n"
            "1/2 -3 B  # trailing comment\n"
        )
        assert cfg.n_red == 1 and cfg.n_blue == 1
        assert cfg.blue[0].x == Fraction(1, 2)
        assert cfg.blue[0].y == -3

    def test_header_required(self):
        with pytest.raises(PointFileError):
            parse_points("0 0 R\n")
        with pytest.raises(PointFileError):
            parse_points("")
        with pytest.raises(PointFileError):
            parse_points("beckline-points v2\n0 0 R\n")

    def test_bad_lines(self):
        for body in ("0 0", "0 0 R extra", "x 0 R", "0 0 G", "1/0 0 R", "1/-2 0 R"):
            with pytest.raises(PointFileError):
                parse_points(f"{HEADER}\n{body}\n")

    def test_negative_denominator_rejected_even_when_reducible(self):
        with pytest.raises(PointFileError):
            parse_points(f"{HEADER}\n2/-4 0 R\n")

    def test_duplicates_rejected(self):
        with pytest.raises(PointFileError):
            parse_points(f"{HEADER}\n0 0 R\n0 0 B\n")
        with pytest.raises(PointFileError):
            parse_points(f"{HEADER}\n1/2 0 R\n2/4 0 R\n")


class TestRoundTrip:
    @pytest.mark.parametrize("family", list(Family))
    def test_config_round_trip(self, family):
        cfg = generate(GenSpec(family, 5, seed=21))
        assert parse_points(serialize_points(cfg)) == cfg

    def test_fraction_coords_round_trip(self):
        cfg = ColoredConfig.from_coords(
            [(Fraction(1, 3), Fraction(-7, 2))], [(0, Fraction(22, 7))]
        )
        text = serialize_points(cfg)
        assert "1/3 -7/2 R" in text
        assert parse_points(text) == cfg

    def test_serialize_then_parse_is_textual_identity(self):
        cfg = generate(GenSpec(Family.GRID, 4, seed=0))
        text = serialize_points(cfg)
        assert serialize_points(parse_points(text)) == text


class TestDigest:
    def test_independent_of_input_order(self):
        a = ColoredConfig.from_coords([(0, 0), (5, 1)], [(1, 1), (2, 3)])
        b = ColoredConfig.from_coords([(5, 1), (0, 0)], [(2, 3), (1, 1)])
        assert config_digest(a) == config_digest(b)

    def test_sensitive_to_color(self):
        a = ColoredConfig.from_coords([(0, 0)], [(1, 1)])
        b = ColoredConfig.from_coords([(1, 1)], [(0, 0)])
        assert config_digest(a) != config_digest(b)

    def test_sensitive_to_geometry(self):
        a = ColoredConfig.from_coords([(0, 0)], [(1, 1)])
        b = ColoredConfig.from_coords([(0, 0)], [(1, 2)])
        assert config_digest(a) != config_digest(b)

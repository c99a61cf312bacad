"""Catalog data: exponents, series, expected presentations, bounds."""

import pytest

from loopalg.catalog import (
    DEFAULT_CHECKED_RANKS,
    catalog_entry,
    default_max_degree,
    expected_integral_presentation,
    expected_rational_presentation,
    exponents,
    splitting_series,
    weyl_order,
)
from loopalg.enveloping import graded_dimensions, pbw_series, relation_string, series_equal
from loopalg.families import LieFamily
from loopalg.pipeline import pipeline_for


def loop_degrees(family, rank):
    return sorted(2 * k - 2 for k in exponents(family, rank))


def test_loop_generator_degrees():
    assert loop_degrees(LieFamily.SU, 2) == [2, 4]
    assert loop_degrees(LieFamily.SP, 3) == [2, 6, 10]
    assert loop_degrees(LieFamily.SO_EVEN, 3) == [2, 4, 6]
    assert loop_degrees(LieFamily.G2, 2) == [2, 10]
    assert loop_degrees(LieFamily.E6, 6) == [2, 8, 10, 14, 16, 22]


def test_so_even_duplicate_exponent():
    # two degree-6 loop classes for rank 4
    assert sorted(exponents(LieFamily.SO_EVEN, 4)) == [2, 4, 4, 6]


def test_splitting_series_values():
    assert list(splitting_series(LieFamily.SU, 2, 5)) == [1, 2, 2, 2, 3, 4]
    assert list(splitting_series(LieFamily.G2, 2, 4)) == [1, 2, 2, 2, 2]
    assert list(splitting_series(LieFamily.F4, 4, 0)) == [1]


def test_weyl_orders():
    assert weyl_order(LieFamily.SU, 3) == 24
    assert weyl_order(LieFamily.SP, 2) == 8
    assert weyl_order(LieFamily.SO_ODD, 3) == 48
    assert weyl_order(LieFamily.SO_EVEN, 3) == 24
    assert weyl_order(LieFamily.G2, 2) == 12
    assert weyl_order(LieFamily.F4, 4) == 1152
    assert weyl_order(LieFamily.E6, 6) == 51840


def test_rank_bounds():
    with pytest.raises(ValueError):
        catalog_entry(LieFamily.SO_EVEN, 2)
    with pytest.raises(ValueError):
        catalog_entry(LieFamily.SU, 0)
    with pytest.raises(ValueError):
        catalog_entry(LieFamily.G2, 3)


def test_g2_default_truncation_reaches_top_generator():
    assert default_max_degree(LieFamily.G2) == 12
    assert default_max_degree(LieFamily.SU) == 10


def test_expected_rational_shapes():
    g2 = expected_rational_presentation(LieFamily.G2, 2)
    rendered = {relation_string(r) for r in g2.relations}
    assert "1*a1.a1 - 1*a2.a2" in rendered
    assert "1*a1.a1 - 1*a1.a2 - 1*a2.a1" in rendered
    e6 = expected_rational_presentation(LieFamily.E6, 6)
    rendered = {relation_string(r) for r in e6.relations}
    assert "1*a.a1 + 1*a1.a" in rendered  # the sixth class anticommutes
    sp = expected_rational_presentation(LieFamily.SP, 3)
    assert ("b2", 6) in sp.generators and ("b3", 10) in sp.generators


def test_expected_integral_shapes():
    su = expected_integral_presentation(LieFamily.SU, 3)
    rendered = {relation_string(r) for r in su.relations}
    assert "1*x1.x1 - 2*y1" in rendered
    assert "1*x1.x2 + 1*x2.x1 - 2*y1" in rendered
    g2 = expected_integral_presentation(LieFamily.G2, 2)
    rendered = {relation_string(r) for r in g2.relations}
    assert "1*x1.x1.x1.x1 - 2*y2" in rendered
    f4 = expected_integral_presentation(LieFamily.F4, 4)
    rendered = {relation_string(r) for r in f4.relations}
    assert "1*x1.x1 - 3*y1" in rendered
    assert "1*x1.x2 - 1*x2.x1" in rendered  # default variant commutes
    anti = expected_integral_presentation(LieFamily.F4, 4, anticommute=True)
    rendered_anti = {relation_string(r) for r in anti.relations}
    assert "1*x1.x2 + 1*x2.x1" in rendered_anti
    e6 = expected_integral_presentation(LieFamily.E6, 6)
    rendered = {relation_string(r) for r in e6.relations}
    assert "1*x1.x1 - 12*y1" in rendered


def test_variant_switch_restricted_to_f4():
    with pytest.raises(ValueError):
        expected_integral_presentation(LieFamily.SU, 2, anticommute=True)


def test_so_odd_uniform_relations():
    p = expected_integral_presentation(LieFamily.SO_ODD, 3)
    rendered = {relation_string(r) for r in p.relations}
    assert "1*y1.y1 - 2*y2" in rendered
    # y2^2 - y1 y3 + y4 = 0, canonicalized with positive leading word
    assert "1*y1.y3 - 1*y2.y2 - 1*y4" in rendered


def test_so_even_doubled_generators():
    p = expected_integral_presentation(LieFamily.SO_EVEN, 3)
    degrees = dict(p.generators)
    assert degrees["wp"] == 4 and degrees["wm"] == 4
    assert degrees["Y3"] == 6 and degrees["Y4"] == 8
    rendered = {relation_string(r) for r in p.relations}
    # y1^2 = wp + wm and wp wm - y1 Y3 + Y4 = 0, canonicalized
    assert "1*wm + 1*wp - 1*y1.y1" in rendered
    assert "1*Y4 + 1*wp.wm - 1*y1.Y3" in rendered


def test_loop_group_presentations_recorded():
    g2 = catalog_entry(LieFamily.G2, 2)
    rendered = {relation_string(r) for r in g2.loop_group_relations}
    assert "2*y2 - 1*y1.y1" in rendered or "1*y1.y1 - 2*y2" in rendered
    e6 = catalog_entry(LieFamily.E6, 6)
    rendered = {relation_string(r) for r in e6.loop_group_relations}
    assert "1*y1.y1 - 2*y2" in rendered
    assert "1*y1.y2 - 3*y3" in rendered


def test_pbw_equals_splitting_for_all_default_entries():
    for family, ranks in DEFAULT_CHECKED_RANKS.items():
        for rank in ranks:
            n = default_max_degree(family)
            result = pipeline_for(family, rank)
            assert series_equal(
                pbw_series(result.lie_algebra, n),
                splitting_series(family, rank, n),
                n,
            ), (family, rank)


def test_expected_rational_matches_pipeline_dimensions():
    for family, rank in [(LieFamily.SU, 2), (LieFamily.SO_EVEN, 3), (LieFamily.G2, 2)]:
        n = default_max_degree(family)
        entry = catalog_entry(family, rank)
        result = pipeline_for(family, rank)
        assert series_equal(
            graded_dimensions(result.presentation, n),
            graded_dimensions(entry.expected_rational, n),
            n,
        )

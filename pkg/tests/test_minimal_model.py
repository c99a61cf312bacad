"""Minimal models, quadratic parts, and the commutative quotient counts."""

import pytest

from loopalg.catalog import catalog_entry
from loopalg.families import LieFamily
from loopalg.gca import GradedAlgebra
from loopalg.minimal_model import (
    CohomologyPresentation,
    build_minimal_model,
    derivation_square_check,
    quadratic_part,
    quotient_dimensions,
    regular_sequence_check,
)
from loopalg.series import complete_intersection_coefficients


def presentation(family, rank):
    return catalog_entry(family, rank).cohomology


def test_su3_model_degrees():
    model = build_minimal_model(presentation(LieFamily.SU, 2))
    degrees = dict(model.algebra.generators)
    assert degrees["v1"] == 3 and degrees["v2"] == 5


def test_so5_model_degrees():
    model = build_minimal_model(presentation(LieFamily.SO_ODD, 2))
    degrees = dict(model.algebra.generators)
    assert degrees["v1"] == 3 and degrees["v2"] == 7


def test_so6_model_degrees():
    model = build_minimal_model(presentation(LieFamily.SO_EVEN, 3))
    degrees = dict(model.algebra.generators)
    assert (degrees["v1"], degrees["v2"], degrees["v3"]) == (3, 7, 5)


def test_quadratic_part_su3():
    model = build_minimal_model(presentation(LieFamily.SU, 2))
    d1 = quadratic_part(model)
    alg = model.algebra
    u1, u2 = alg.gen("u1"), alg.gen("u2")
    assert d1.image_of("v1") == 2 * u1**2 + 2 * u2**2 + 2 * (u1 * u2)
    assert d1.image_of("v2").is_zero()


def test_quadratic_part_so_odd():
    model = build_minimal_model(presentation(LieFamily.SO_ODD, 2))
    d1 = quadratic_part(model)
    alg = model.algebra
    assert d1.image_of("v1") == alg.gen("u1") ** 2 + alg.gen("u2") ** 2
    assert d1.image_of("v2").is_zero()


def test_quadratic_part_f4():
    entry = catalog_entry(LieFamily.F4, 4)
    model = build_minimal_model(
        entry.cohomology, odd_names=list(entry.odd_names), check_regular=False
    )
    d1 = quadratic_part(model)
    alg = model.algebra
    expected = alg.zero()
    for i in range(1, 5):
        expected = expected + 3 * alg.gen(f"u{i}") ** 2
    assert d1.image_of("v2") == expected
    for name in ("v6", "v8", "v12"):
        assert d1.image_of(name).is_zero()


def test_catalog_models_have_square_zero_differential():
    for family, rank in [
        (LieFamily.SU, 3),
        (LieFamily.SP, 2),
        (LieFamily.SO_EVEN, 3),
        (LieFamily.G2, 2),
    ]:
        model = build_minimal_model(presentation(family, rank))
        assert derivation_square_check(model)


def test_quotient_dimensions_su3():
    dims = quotient_dimensions(presentation(LieFamily.SU, 2), 6)
    assert list(dims) == [1, 0, 2, 0, 2, 0, 1]
    assert dims.total() == 6
    # independent cross-check: (1-t^4)(1-t^6)/(1-t^2)^2
    assert list(dims) == complete_intersection_coefficients([4, 6], 2, 6)


def test_quotient_dimensions_su2():
    dims = quotient_dimensions(presentation(LieFamily.SU, 1), 2)
    assert list(dims) == [1, 0, 1]


def test_quotient_dimensions_g2_total():
    coh = presentation(LieFamily.G2, 2)
    dims = quotient_dimensions(coh, coh.socle_degree())
    assert dims.total() == 12
    assert list(dims) == complete_intersection_coefficients(
        [4, 12], 2, coh.socle_degree()
    )


def test_regular_sequence_on_catalog_families():
    for family, rank in [
        (LieFamily.SU, 2),
        (LieFamily.SP, 2),
        (LieFamily.SO_EVEN, 3),
        (LieFamily.G2, 2),
    ]:
        assert regular_sequence_check(presentation(family, rank))


def test_regular_sequence_counterexample():
    alg = GradedAlgebra([("u1", 2), ("u2", 2)])
    u1, u2 = alg.gen("u1"), alg.gen("u2")
    bad = CohomologyPresentation(alg, [u1 * u1, u1 * u2])
    assert not regular_sequence_check(bad)


def test_regular_sequence_single_variable_power():
    alg = GradedAlgebra([("u", 2)])
    good = CohomologyPresentation(alg, [alg.gen("u") ** 4])
    assert regular_sequence_check(good)


def test_regular_sequence_count_mismatch():
    alg = GradedAlgebra([("u1", 2), ("u2", 2)])
    single = CohomologyPresentation(alg, [alg.gen("u1") ** 2])
    with pytest.raises(ValueError):
        regular_sequence_check(single)


def test_build_rejects_non_regular_by_default():
    alg = GradedAlgebra([("u1", 2), ("u2", 2)])
    u1, u2 = alg.gen("u1"), alg.gen("u2")
    bad = CohomologyPresentation(alg, [u1 * u1, u1 * u2])
    with pytest.raises(ValueError):
        build_minimal_model(bad)
    model = build_minimal_model(bad, check_regular=False)
    assert dict(model.algebra.generators)["v1"] == 3


def test_presentation_validation():
    alg = GradedAlgebra([("u1", 2)])
    with pytest.raises(ValueError):
        CohomologyPresentation(alg, [alg.gen("u1")])  # degree 2 < 4
    odd_alg = GradedAlgebra([("w", 3)])
    with pytest.raises(ValueError):
        CohomologyPresentation(odd_alg, [])


def test_complete_intersection_series_matches_types_a_bc_g2():
    for family, rank in [(LieFamily.SU, 3), (LieFamily.SP, 2), (LieFamily.G2, 2)]:
        coh = presentation(family, rank)
        n = coh.socle_degree()
        assert list(quotient_dimensions(coh, n)) == complete_intersection_coefficients(
            list(coh.relation_degrees), len(coh.algebra), n
        )

import pytest

from deltavec import (
    BadParams,
    Family,
    FamilySpec,
    NoClosedForm,
    build_simplex,
    ceiling_histogram,
    closed_form_delta,
    delta_vector,
    interior_count,
    is_log_concave,
    nonunimodal_bounds,
    observed_properties,
    predicted_properties,
    three_route_check,
)


def test_spec_validation():
    with pytest.raises(BadParams):
        FamilySpec(Family.NONUNIMODAL_ODD, l=1, m=1)
    with pytest.raises(BadParams):
        FamilySpec(Family.UNIMODAL_ONLY, d=6, m=1)  # even d
    with pytest.raises(BadParams):
        FamilySpec(Family.UNIMODAL_ONLY, d=3, m=1)
    with pytest.raises(BadParams):
        FamilySpec(Family.AI_NOT_LC, d=4, m=0)
    with pytest.raises(BadParams):
        FamilySpec(Family.SEXTIC_A, m=1)
    with pytest.raises(BadParams):
        FamilySpec(Family.NONUNIMODAL_ODD, l=2, d=5, m=1)


def test_build_vertices():
    s = build_simplex(FamilySpec(Family.NONUNIMODAL_ODD, l=2, m=1))
    assert s.vertices[-1] == (12, 17, 17, 17, 18)
    assert s.vertices[0] == (0, 0, 0, 0, 0)
    assert s.vertices[2] == (0, 1, 0, 0, 0)
    sa = build_simplex(FamilySpec(Family.SEXTIC_A))
    assert sa.vertices[-2] == (2, 2, 2, 2, 3, 0)
    assert sa.vertices[-1] == (16, 16, 16, 16, 3, 30)
    tetra = build_simplex(FamilySpec(Family.TETRAHEDRON))
    assert set(tetra.vertices) == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 2, 2)}


def test_closed_forms():
    assert closed_form_delta(FamilySpec(Family.UNIMODAL_ONLY, d=5, m=1)).delta == (1, 1, 3, 2, 2, 1)
    assert closed_form_delta(FamilySpec(Family.UNIMODAL_ONLY, d=7, m=2)).delta == (1, 2, 4, 5, 4, 4, 4, 2)
    assert closed_form_delta(FamilySpec(Family.AI_NOT_LC, d=5, m=1)).delta == (1, 2, 3, 7, 2, 1)
    assert closed_form_delta(FamilySpec(Family.AI_NOT_LC, d=4, m=1)).delta == (1, 2, 6, 2, 1)
    assert closed_form_delta(FamilySpec(Family.SEXTIC_B)).delta == (1, 7, 28, 31, 32, 23, 4)
    assert closed_form_delta(FamilySpec(Family.TETRAHEDRON)).delta == (1, 1, 2, 1)
    with pytest.raises(NoClosedForm):
        closed_form_delta(FamilySpec(Family.NONUNIMODAL_ODD, l=2, m=1))


def test_ceiling_histograms():
    assert ceiling_histogram(FamilySpec(Family.NONUNIMODAL_ODD, l=2, m=1)).delta == (1, 2, 6, 3, 5, 1)
    assert ceiling_histogram(FamilySpec(Family.NONUNIMODAL_EVEN, l=2, m=1)).delta == (1, 2, 7, 4, 7, 2, 1)
    assert ceiling_histogram(FamilySpec(Family.AI_NOT_LC, d=5, m=1)).delta == (1, 2, 3, 7, 2, 1)
    assert ceiling_histogram(FamilySpec(Family.UNIMODAL_ONLY, d=5, m=1)).delta == (1, 1, 3, 2, 2, 1)
    with pytest.raises(BadParams):
        ceiling_histogram(FamilySpec(Family.SEXTIC_A))


def test_modulus_is_volume(family_grid_specs, fixture_deltas):
    for spec in family_grid_specs:
        assert fixture_deltas[spec].total == spec.modulus


def test_three_route_agreement(family_grid_specs):
    for spec in family_grid_specs:
        check = three_route_check(spec)
        assert check.agree, (spec, check.enumerated.delta, check.first_mismatch())


def test_nonunimodal_dip_bounds(family_grid_specs, fixture_deltas):
    for spec in family_grid_specs:
        if spec.family not in (Family.NONUNIMODAL_ODD, Family.NONUNIMODAL_EVEN):
            continue
        bounds = nonunimodal_bounds(spec, fixture_deltas[spec])
        assert all(bounds.values()), (spec, bounds, fixture_deltas[spec].delta)


def test_interior_point_counts(family_grid_specs, fixture_deltas):
    for spec in family_grid_specs:
        if spec.m is None:
            continue
        delta = fixture_deltas[spec]
        assert delta.delta[spec.dimension] == spec.m
        assert interior_count(delta.delta, 1) == spec.m


def test_predictions_hold(family_grid_specs, fixture_deltas):
    for spec in family_grid_specs:
        observed = observed_properties(fixture_deltas[spec])
        for key, expected in predicted_properties(spec).items():
            assert observed[key] is expected, (spec, key, fixture_deltas[spec].delta)


def test_ai_not_lc_failure_triple(family_grid_specs, fixture_deltas):
    # the log-concavity failure is witnessed by the triple around the spike
    for spec in family_grid_specs:
        if spec.family is not Family.AI_NOT_LC:
            continue
        values = fixture_deltas[spec].delta
        dp = (spec.d + 1) // 2 if spec.d % 2 else spec.d // 2
        assert values[dp] * values[dp + 2] > values[dp + 1] ** 2
        assert not is_log_concave(values).holds


def test_tetrahedron_counterexample_shape():
    values = delta_vector(build_simplex(FamilySpec(Family.TETRAHEDRON))).delta
    assert values == (1, 1, 2, 1)
    assert values[2] > values[1] ** 2  # the non-log-concave witness

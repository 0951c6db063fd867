import random
from fractions import Fraction

import pytest

from deltavec import (
    AffinelyDependent,
    LatticeSimplex,
    MixedDimensions,
    NonPositiveDilation,
    VolumeCapExceeded,
    basic_facts_check,
    brute_count,
    check_hibi,
    check_stanley,
    delta_vector,
    dilate,
    dilate_h,
    ehrhart_eval,
    enumerate_box_points,
    interior_count,
    min_interior_dilation,
    new_simplex,
    normalized_volume,
)
from conftest import (
    TETRAHEDRON,
    SEXTIC_A,
    SEXTIC_B,
    frame_simplex,
    random_unimodular,
    unit_simplex,
)


def test_new_simplex_validation():
    s = new_simplex([[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert s.d == 3 and s.ambient_dim == 3
    with pytest.raises(AffinelyDependent):
        new_simplex([[0], [1], [2]])
    with pytest.raises(MixedDimensions):
        new_simplex([[0, 0], [1]])
    with pytest.raises(TypeError):
        new_simplex([[0.5, 0], [1, 0]])
    assert SEXTIC_A.d == 6


def test_unit_simplices_have_single_box_point():
    for d in range(1, 5):
        pts = enumerate_box_points(unit_simplex(d))
        assert len(pts) == 1
        assert pts[0].degree == 0
        assert pts[0].alpha == tuple([0] * (d + 1))
        assert delta_vector(unit_simplex(d)).delta == (1,) + (0,) * d


def test_tetrahedron_box_points():
    pts = enumerate_box_points(TETRAHEDRON)
    assert len(pts) == 5
    assert delta_vector(TETRAHEDRON).delta == (1, 1, 2, 1)
    assert sum(1 for p in pts if p.degree == 0) == 1


def test_box_point_invariants():
    for simplex in (TETRAHEDRON, frame_simplex(5, (12, 17, 17, 17, 18)), SEXTIC_A):
        w = simplex.homogeneous_matrix()
        for p in enumerate_box_points(simplex):
            assert all(0 <= ri < 1 for ri in p.r)
            recombined = [
                sum(ri * wij for ri, wij in zip(p.r, col))
                for col in zip(*w)
            ]
            assert all(x == Fraction(a) for x, a in zip(recombined, p.alpha))
            assert p.degree == p.alpha[-1] == sum(p.r)


def test_enumeration_is_deterministic():
    a = enumerate_box_points(SEXTIC_A)
    b = enumerate_box_points(SEXTIC_A)
    assert a == b


def test_nonunimodal_instance():
    s = frame_simplex(5, (12, 17, 17, 17, 18))
    pts = enumerate_box_points(s)
    assert len(pts) == 18
    assert delta_vector(s).delta == (1, 2, 6, 3, 5, 1)


def test_sextic_deltas():
    assert delta_vector(SEXTIC_A).delta == (1, 6, 20, 22, 23, 15, 3)
    assert delta_vector(SEXTIC_B).delta == (1, 7, 28, 31, 32, 23, 4)


def test_volume_cap():
    with pytest.raises(VolumeCapExceeded):
        enumerate_box_points(TETRAHEDRON, cap=4)


def test_ehrhart_eval():
    for d in range(1, 5):
        h = (1,) + (0,) * d
        for m in range(0, 5):
            assert ehrhart_eval(h, m) == brute_count(unit_simplex(d), m)
    assert ehrhart_eval((1, 1, 2, 1), 1) == 5
    assert ehrhart_eval((1, 6, 20, 22, 23, 15, 3), 0) == 1


def test_interior_count():
    assert interior_count((1, 6, 20, 22, 23, 15, 3), 1) == 3
    assert interior_count((1, 0, 0, 0, 0), 5) == 1  # first interior point of 5 * unit 4-simplex
    assert interior_count((1, 1, 2, 1), 1) == 1
    with pytest.raises(NonPositiveDilation):
        interior_count((1, 0), 0)


def test_min_interior_dilation():
    assert min_interior_dilation((1, 6, 20, 22, 23, 15, 3)) == 1
    assert min_interior_dilation((1, 0, 0, 0)) == 4
    assert min_interior_dilation((1, 2, 6, 3, 5, 1)) == 1


def test_dilate():
    s = unit_simplex(2)
    assert dilate(s, 1) == s
    assert delta_vector(dilate(s, 2)).delta == dilate_h((1, 0, 0), 2).coeffs == (1, 3, 0)
    with pytest.raises(NonPositiveDilation):
        dilate(s, 0)


def test_dilate_volume_scaling():
    for d in range(1, 4):
        s = unit_simplex(d)
        for n in (1, 2, 3):
            assert normalized_volume(dilate(s, n)) == n**d
    assert normalized_volume(dilate(TETRAHEDRON, 2)) == 2**3 * 5


def test_geometric_vs_operator_dilation():
    cases = [unit_simplex(d) for d in range(1, 5)] + [TETRAHEDRON]
    for s in cases:
        base = delta_vector(s).delta
        for n in range(1, 5):
            assert delta_vector(dilate(s, n)).delta == dilate_h(base, n).coeffs


def test_lower_dimensional_simplices():
    # segment of lattice length 2 inside the plane
    seg = LatticeSimplex(((0, 0), (2, 0)))
    assert normalized_volume(seg) == 2
    assert delta_vector(seg).delta == (1, 1)
    # the same segment, skew
    skew = LatticeSimplex(((1, 1, 1), (3, 5, 7)))
    assert normalized_volume(skew) == 2
    assert delta_vector(skew).delta == (1, 1)
    # a triangle inside a hyperplane of Z^3: delta w.r.t. the span lattice
    tri = LatticeSimplex(((0, 0, 0), (1, 0, 1), (0, 1, 1)))
    assert delta_vector(tri).delta == delta_vector(unit_simplex(2)).delta


def test_unimodular_invariance():
    rng = random.Random(2024)
    cases = [TETRAHEDRON, unit_simplex(3), frame_simplex(4, (2, 3, 4, 5))]
    for s in cases:
        base = delta_vector(s).delta
        n = s.ambient_dim
        for _ in range(4):
            t = random_unimodular(n, rng)
            shift = [rng.randint(-4, 4) for _ in range(n)]
            moved = LatticeSimplex(
                tuple(
                    tuple(
                        sum(v[i] * t[i][j] for i in range(n)) + shift[j]
                        for j in range(n)
                    )
                    for v in s.vertices
                )
            )
            assert delta_vector(moved).delta == base


def test_enumeration_count_matches_volume(dim_le4_fixtures):
    for s in dim_le4_fixtures:
        pts = enumerate_box_points(s)
        assert len(pts) == normalized_volume(s) == delta_vector(s).total
        assert sum(1 for p in pts if p.degree == 0) == 1


def test_stanley_hibi_hold_on_enumerated_deltas(dim_le4_fixtures, fixture_deltas):
    deltas = [delta_vector(s).delta for s in dim_le4_fixtures]
    deltas += [dv.delta for dv in fixture_deltas.values()]
    for values in deltas:
        assert check_stanley(values).holds
        assert check_hibi(values).holds


def test_basic_facts():
    report = basic_facts_check(
        TETRAHEDRON,
        delta_vector(TETRAHEDRON),
        point_count=brute_count(TETRAHEDRON, 1),
        interior_point_count=brute_count(TETRAHEDRON, 1, interior=True),
    )
    assert report.ok, report.failures()
    u = unit_simplex(3)
    assert basic_facts_check(u, delta_vector(u), point_count=4, interior_point_count=0).ok


def test_basic_facts_on_bigger_fixtures():
    podd = frame_simplex(5, (12, 17, 17, 17, 18))
    report = basic_facts_check(
        podd,
        delta_vector(podd),
        point_count=brute_count(podd, 1),
        interior_point_count=brute_count(podd, 1, interior=True),
    )
    assert report.ok, report.failures()
    report = basic_facts_check(
        SEXTIC_A,
        delta_vector(SEXTIC_A),
        point_count=brute_count(SEXTIC_A, 1),
        interior_point_count=brute_count(SEXTIC_A, 1, interior=True),
    )
    assert report.ok, report.failures()

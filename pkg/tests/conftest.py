"""Shared fixtures: the canonical simplices and delta vectors the suite
cross-checks from multiple directions."""

from __future__ import annotations

import random

import pytest

from deltavec import (
    Family,
    FamilySpec,
    LatticeSimplex,
    build_simplex,
    delta_vector,
)


def unit_simplex(d: int) -> LatticeSimplex:
    verts = [tuple(0 for _ in range(d))]
    verts += [tuple(1 if i == j else 0 for i in range(d)) for j in range(d)]
    return LatticeSimplex(tuple(verts))


def frame_simplex(d: int, last: tuple[int, ...]) -> LatticeSimplex:
    verts = [tuple(0 for _ in range(d))]
    verts += [tuple(1 if i == j else 0 for i in range(d)) for j in range(d - 1)]
    verts.append(tuple(last))
    return LatticeSimplex(tuple(verts))


TETRAHEDRON = LatticeSimplex(((1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 2, 2)))

SEXTIC_A = build_simplex(FamilySpec(Family.SEXTIC_A))
SEXTIC_B = build_simplex(FamilySpec(Family.SEXTIC_B))


def random_small_simplices(count: int, seed: int = 99) -> list[LatticeSimplex]:
    """Random dimension <= 3 simplices with small coordinates."""
    rng = random.Random(seed)
    out: list[LatticeSimplex] = []
    while len(out) < count:
        d = rng.randint(1, 3)
        n = rng.randint(d, d + 1)
        verts = tuple(
            tuple(rng.randint(-2, 3) for _ in range(n)) for _ in range(d + 1)
        )
        try:
            out.append(LatticeSimplex(verts))
        except Exception:
            continue
    return out


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> list[list[int]]:
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and i != j:
            q = rng.randint(-2, 2)
            mat[i] = [x + q * y for x, y in zip(mat[i], mat[j])]
        elif kind == 1 and i != j:
            mat[i], mat[j] = mat[j], mat[i]
        else:
            mat[i] = [-x for x in mat[i]]
    return mat


@pytest.fixture(scope="session")
def dim_le4_fixtures() -> list[LatticeSimplex]:
    """The small-dimension fixture set used for oracle cross-checks.

    Kept to small coordinates so brute-force boxes at m <= 4 stay tiny.
    """
    from deltavec import dilate

    fixtures = [unit_simplex(d) for d in range(1, 5)]
    fixtures.append(TETRAHEDRON)
    fixtures.append(dilate(TETRAHEDRON, 2))
    fixtures.append(build_simplex(FamilySpec(Family.AI_NOT_LC, d=4, m=1)))
    fixtures.append(frame_simplex(4, (2, 3, 4, 5)))
    fixtures.extend(random_small_simplices(4))
    return fixtures


@pytest.fixture(scope="session")
def family_grid_specs() -> list[FamilySpec]:
    specs: list[FamilySpec] = []
    for l in (2, 3, 4):
        for m in (1, 2, 3):
            specs.append(FamilySpec(Family.NONUNIMODAL_ODD, l=l, m=m))
            specs.append(FamilySpec(Family.NONUNIMODAL_EVEN, l=l, m=m))
    for d in (5, 7, 9):
        for m in (1, 2, 3):
            specs.append(FamilySpec(Family.UNIMODAL_ONLY, d=d, m=m))
    for d in range(4, 9):
        for m in (1, 2, 3):
            specs.append(FamilySpec(Family.AI_NOT_LC, d=d, m=m))
    specs.extend(
        [FamilySpec(Family.SEXTIC_A), FamilySpec(Family.SEXTIC_B), FamilySpec(Family.TETRAHEDRON)]
    )
    return specs


@pytest.fixture(scope="session")
def fixture_deltas(family_grid_specs) -> dict:
    """Enumerated delta vectors for every family-grid member (cached)."""
    return {
        spec: delta_vector(build_simplex(spec)) for spec in family_grid_specs
    }

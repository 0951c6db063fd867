"""Lattice simplices and their delta vectors via box-point enumeration.

The homogenized vertices ``(v_i, 1)`` of a lattice simplex span a half-open
parallelepiped; the integer points inside it, graded by their last
coordinate, histogram to the delta vector (h*-vector) of the simplex.  The
points are listed through the Smith normal form of the homogenized vertex
matrix ``W``: with ``U W V = S`` and diagonal ``s_1, ..., s_{d+1}``, the
mixed-radix tuples ``a_k in [0, s_k)`` run over the cosets of the row
lattice of ``W``, and ``r = frac((a / s) U)`` recovers the coefficient
vector of the unique representative inside the parallelepiped.  Everything
stays in exact integer or rational arithmetic.

Simplices that are not full-dimensional are first re-expressed in a lattice
basis of their affine span, so the delta vector is taken with respect to the
induced lattice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    AffinelyDependent,
    MixedDimensions,
    NonPositiveDilation,
    VolumeCapExceeded,
)
from .sequences import as_int_tuple, delta_degree
from .series import coefficients, g_eval
from .snf import mat_det, smith_normal_form

__all__ = [
    "DEFAULT_BOX_POINT_CAP",
    "LatticeSimplex",
    "BoxPoint",
    "DeltaVector",
    "new_simplex",
    "dilate",
    "normalized_volume",
    "enumerate_box_points",
    "delta_vector",
    "ehrhart_eval",
    "interior_count",
    "min_interior_dilation",
    "basic_facts_check",
    "BasicFactsReport",
]

DEFAULT_BOX_POINT_CAP = 10**7


@dataclass(frozen=True)
class LatticeSimplex:
    """d+1 affinely independent integer vertices in some ambient Z^N."""

    vertices: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise AffinelyDependent("a simplex needs at least one vertex")
        frozen = tuple(as_int_tuple(v) for v in self.vertices)
        object.__setattr__(self, "vertices", frozen)
        n = len(frozen[0])
        if any(len(v) != n for v in frozen):
            raise MixedDimensions("vertex vectors must all have the same length")
        diffs = [_sub(v, frozen[0]) for v in frozen[1:]]
        if _rank(diffs) != len(diffs):
            raise AffinelyDependent("vertices are affinely dependent")

    @property
    def d(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def homogeneous_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Rows (v_i, 1), shape (d+1) x (N+1)."""
        return tuple(v + (1,) for v in self.vertices)


def new_simplex(vertices: Sequence[Sequence[int]]) -> LatticeSimplex:
    """Build and validate a simplex from raw vertex vectors."""
    return LatticeSimplex(tuple(tuple(v) for v in vertices))


def dilate(simplex: LatticeSimplex, n: int) -> LatticeSimplex:
    if n < 1:
        raise NonPositiveDilation("dilation factor must be >= 1")
    return LatticeSimplex(tuple(tuple(n * x for x in v) for v in simplex.vertices))


@dataclass(frozen=True)
class BoxPoint:
    """Integer point alpha = sum r_i (v_i, 1) with all r_i in [0, 1)."""

    r: tuple[Fraction, ...]
    alpha: tuple[int, ...]
    degree: int


@dataclass(frozen=True)
class DeltaVector:
    delta: tuple[int, ...]

    def __post_init__(self) -> None:
        delta = as_int_tuple(self.delta)
        object.__setattr__(self, "delta", delta)
        if delta[0] != 1:
            raise ValueError("delta_0 must be 1")
        if any(v < 0 for v in delta):
            raise ValueError("delta entries must be nonnegative")

    @property
    def d(self) -> int:
        return len(self.delta) - 1

    @property
    def s(self) -> int:
        return delta_degree(self.delta)

    @property
    def total(self) -> int:
        """Sum of the entries; the normalized volume when enumerated."""
        return sum(self.delta)


def _sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def _rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q, by exact elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _span_lattice_coords(simplex: LatticeSimplex) -> list[tuple[int, ...]]:
    """Vertices re-expressed in a basis of (affine span) ∩ Z^N.

    Full-dimensional simplices are returned as-is.  Otherwise the difference
    vectors u_i = v_i - v_0 are transformed by the right Smith factor of
    their matrix; the first d coordinates of u_i V are the coordinates in
    the saturated lattice of the span (the trailing ones vanish).
    """
    d, n = simplex.d, simplex.ambient_dim
    if d == n:
        return [tuple(v) for v in simplex.vertices]
    diffs = [_sub(v, simplex.vertices[0]) for v in simplex.vertices[1:]]
    dec = smith_normal_form(diffs)
    coords: list[tuple[int, ...]] = [tuple([0] * d)]
    for u in diffs:
        image = [sum(u[j] * dec.V[j][c] for j in range(n)) for c in range(n)]
        if any(image[d:]):
            raise AffinelyDependent("span projection failed")  # cannot happen
        coords.append(tuple(image[:d]))
    return coords


def normalized_volume(simplex: LatticeSimplex) -> int:
    """d! times the Euclidean volume w.r.t. the lattice of the affine span."""
    coords = _span_lattice_coords(simplex)
    w = [list(c) + [1] for c in coords]
    return abs(mat_det(w))


def enumerate_box_points(
    simplex: LatticeSimplex, cap: int | None = None
) -> tuple[BoxPoint, ...]:
    """All integer points of the half-open parallelepiped, in a fixed order.

    The order is lexicographic in the Smith coordinates, so the output is
    reproducible bit-for-bit.  Raises :class:`VolumeCapExceeded` when the
    normalized volume (== number of points) exceeds ``cap``.
    """
    cap = DEFAULT_BOX_POINT_CAP if cap is None else cap
    d = simplex.d
    coords = _span_lattice_coords(simplex)
    w = [list(c) + [1] for c in coords]
    volume = abs(mat_det(w))
    if volume > cap:
        raise VolumeCapExceeded(f"{volume} box points exceed the cap of {cap}")
    dec = smith_normal_form(w)
    assert dec.verify(w)
    diag = dec.diagonal
    big = diag[-1]  # lcm of the diagonal, by the divisibility chain
    scaled_u = [
        [x * (big // diag[k]) for x in dec.U[k]] for k in range(d + 1)
    ]
    w_full = simplex.homogeneous_matrix()
    n_amb = simplex.ambient_dim

    points: list[BoxPoint] = []
    for a in itertools.product(*(range(sk) for sk in diag)):
        num = [0] * (d + 1)
        for k, ak in enumerate(a):
            if ak:
                row = scaled_u[k]
                for i in range(d + 1):
                    num[i] += ak * row[i]
        num = [x % big for x in num]  # r_i = num_i / big lies in [0, 1)
        alpha = []
        for j in range(n_amb + 1):
            acc = sum(num[i] * w_full[i][j] for i in range(d + 1))
            q, rem = divmod(acc, big)
            if rem:
                raise AssertionError("box point is not integral; transform bug")
            alpha.append(q)
        points.append(
            BoxPoint(tuple(Fraction(x, big) for x in num), tuple(alpha), alpha[-1])
        )
    if len(points) != volume:
        raise AssertionError("coset enumeration does not match the volume")
    return tuple(points)


def delta_vector(simplex: LatticeSimplex, cap: int | None = None) -> DeltaVector:
    """Histogram of box-point degrees."""
    hist = [0] * (simplex.d + 1)
    for p in enumerate_box_points(simplex, cap):
        hist[p.degree] += 1
    return DeltaVector(tuple(hist))


def ehrhart_eval(delta, m: int) -> int:
    """Lattice-point count of the m-th dilate, as a polynomial in m.

    Negative ``m`` evaluates the same polynomial, which is what reciprocity
    needs.
    """
    return g_eval(delta, m)


def interior_count(delta, m: int) -> int:
    """Interior lattice points of the m-th dilate, via reciprocity."""
    if m < 1:
        raise NonPositiveDilation("interior counts need m >= 1")
    c = coefficients(delta)
    d = len(c) - 1
    return (-1) ** d * ehrhart_eval(c, -m)


def min_interior_dilation(delta) -> int:
    """Smallest dilation whose interior contains a lattice point: d + 1 - s."""
    c = coefficients(delta)
    return len(c) - delta_degree(c)


@dataclass(frozen=True)
class BasicFactsReport:
    """Pass/fail record for the standard structural facts of a delta vector.

    The two counting facts are only checked when independent counts are
    supplied (they are tautologies when derived from the delta vector
    itself).
    """

    checks: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    def failures(self) -> tuple[str, ...]:
        return tuple(name for name, ok in self.checks if not ok)


def basic_facts_check(
    simplex: LatticeSimplex,
    delta: DeltaVector,
    point_count: int | None = None,
    interior_point_count: int | None = None,
) -> BasicFactsReport:
    """Verify delta_0 = 1, nonnegativity, sum = normalized volume,
    delta_1 >= delta_d, the interior lower bound delta_1 <= delta_i when
    delta_d > 0, and (against supplied independent counts) the point-count
    identities delta_1 = |P ∩ Z^N| - (d+1) and delta_d = |P° ∩ Z^N|."""
    values = delta.delta
    d = delta.d
    checks: list[tuple[str, bool]] = [
        ("leading_one", values[0] == 1),
        ("nonnegative", all(v >= 0 for v in values)),
        ("volume_sum", sum(values) == normalized_volume(simplex)),
    ]
    if d >= 1:
        checks.append(("first_dominates_last", values[1] >= values[d]))
        if values[d] > 0:
            checks.append(
                (
                    "interior_lower_bound",
                    all(values[1] <= values[i] for i in range(1, d)),
                )
            )
    if point_count is not None and d >= 1:
        checks.append(("point_count", values[1] == point_count - (d + 1)))
    if interior_point_count is not None:
        checks.append(("interior_point_count", values[d] == interior_point_count))
    return BasicFactsReport(tuple(checks))

"""Brute-force lattice-point counting, used as independent ground truth.

Membership of an integer point in a dilate ``m * P`` is decided from its
exact barycentric coordinates: solve ``r W = (x, m)`` for the homogenized
vertex matrix ``W`` and test signs.  The solve is precomputed as integer
affine forms (an adjugate, so no rationals survive), and the scan walks the
bounding box of the dilate with the widest coordinate handled as a closed
interval instead of one point at a time.  Nothing here touches the Smith
normal form machinery, so these counts genuinely cross-check the
parallelepiped enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import BoxCapExceeded, InconsistentCounts
from .series import invert_counting_series
from .simplex import DeltaVector, LatticeSimplex, interior_count
from .snf import mat_det

__all__ = [
    "DEFAULT_BOX_SCAN_CAP",
    "CountTable",
    "ReciprocityReport",
    "brute_count",
    "count_table",
    "delta_from_counts",
    "reciprocity_check",
]

DEFAULT_BOX_SCAN_CAP = 10**8


def _scaled_inverse(m: Sequence[Sequence[int]], det: int) -> list[list[int]]:
    """det * m^{-1} as an integer matrix (the adjugate up to sign)."""
    n = len(m)
    aug = [
        [Fraction(m[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for c in range(n):
        p = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = aug[i][n + j] * det
            if v.denominator != 1:
                raise AssertionError("adjugate is not integral")
            row.append(v.numerator)
        out.append(row)
    return out


def _affine_constraints(simplex: LatticeSimplex, m: int):
    """Integer affine forms over the ambient coordinates x deciding x in mP.

    Returns (ineqs, eqs): each entry is (const, coefs) representing
    const + sum coefs[j] x_j.  Membership needs every inequality form >= 0
    (> 0 for the relative interior) and every equality form == 0; the
    equality forms pin x to the affine span when the simplex is not
    full-dimensional.
    """
    w = simplex.homogeneous_matrix()
    nrows = simplex.d + 1
    ncols = simplex.ambient_dim + 1
    n_amb = simplex.ambient_dim

    # Pivot columns of W over Q; the rows are independent, so there are d+1.
    mat = [[Fraction(v) for v in row] for row in w]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        row = next((i for i in range(r, nrows) if mat[i][c]), None)
        if row is None:
            continue
        mat[r], mat[row] = mat[row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    assert r == nrows

    sub = [[w[i][c] for c in pivots] for i in range(nrows)]
    det = mat_det(sub)
    adj = _scaled_inverse(sub, det)
    if det < 0:
        det = -det
        adj = [[-x for x in row] for row in adj]

    # det * r_i as an affine form in x (the coordinate y_N is the fixed m).
    ineqs: list[tuple[int, list[int]]] = []
    for i in range(nrows):
        const = 0
        coefs = [0] * n_amb
        for t, c in enumerate(pivots):
            a = adj[t][i]
            if c == n_amb:
                const += m * a
            else:
                coefs[c] += a
        ineqs.append((const, coefs))
    # Consistency on non-pivot columns: r W must reproduce (x, m) there too.
    eqs: list[tuple[int, list[int]]] = []
    for c in range(ncols):
        if c in pivots:
            continue
        const = 0
        coefs = [0] * n_amb
        for i in range(nrows):
            wic = w[i][c]
            if wic:
                const += ineqs[i][0] * wic
                for j in range(n_amb):
                    coefs[j] += ineqs[i][1][j] * wic
        if c == n_amb:
            const -= det * m
        else:
            coefs[c] -= det
        eqs.append((const, coefs))
    return ineqs, eqs


def brute_count(
    simplex: LatticeSimplex, m: int, interior: bool = False, cap: int | None = None
) -> int:
    """|mP ∩ Z^N| (or the relative-interior count) by exact box scan."""
    cap = DEFAULT_BOX_SCAN_CAP if cap is None else cap
    if m < 0 or (interior and m < 1):
        raise ValueError("dilation m must be >= 1 for interior counts, >= 0 otherwise")
    n_amb = simplex.ambient_dim
    lows = [m * min(v[j] for v in simplex.vertices) for j in range(n_amb)]
    highs = [m * max(v[j] for v in simplex.vertices) for j in range(n_amb)]
    size = 1
    for lo, hi in zip(lows, highs):
        size *= hi - lo + 1
    if size > cap:
        raise BoxCapExceeded(f"bounding box holds {size} points, cap is {cap}")

    ineqs, eqs = _affine_constraints(simplex, m)
    threshold = 1 if interior else 0
    consts = [c for c, _ in ineqs] + [c for c, _ in eqs]
    coef_rows = [cf for _, cf in ineqs] + [cf for _, cf in eqs]
    kinds = [False] * len(ineqs) + [True] * len(eqs)  # True = equality
    n_constraints = len(consts)

    # Widest coordinate becomes the inner interval; the rest are scanned.
    order = sorted(range(n_amb), key=lambda j: highs[j] - lows[j])
    inner = order[-1]
    outer = order[:-1]
    inner_coefs = [coef_rows[k][inner] for k in range(n_constraints)]
    lo_in, hi_in = lows[inner], highs[inner]

    def count_inner(bases: list[int]) -> int:
        lo, hi = lo_in, hi_in
        for k in range(n_constraints):
            cf = inner_coefs[k]
            b = bases[k]
            if kinds[k]:
                if cf == 0:
                    if b != 0:
                        return 0
                else:
                    q, rem = divmod(-b, cf)
                    if rem:
                        return 0
                    if q < lo:
                        return 0
                    if q > hi:
                        return 0
                    lo = hi = q
            else:
                need = threshold - b  # want cf * x >= need
                if cf == 0:
                    if need > 0:
                        return 0
                elif cf > 0:
                    x = -((-need) // cf)
                    if x > lo:
                        lo = x
                else:
                    x = need // cf
                    if x < hi:
                        hi = x
            if lo > hi:
                return 0
        return hi - lo + 1

    def scan(level: int, bases: list[int]) -> int:
        if level == len(outer):
            return count_inner(bases)
        j = outer[level]
        steps = [coef_rows[k][j] for k in range(n_constraints)]
        cur = [b + s * lows[j] for b, s in zip(bases, steps)]
        total = 0
        for _ in range(lows[j], highs[j] + 1):
            total += scan(level + 1, cur)
            cur = [b + s for b, s in zip(cur, steps)]
        return total

    return scan(0, consts)


@dataclass(frozen=True)
class CountTable:
    simplex: LatticeSimplex
    counts: tuple[int, ...]  # i(P, m) for m = 0..m_max
    interior_counts: tuple[int, ...]  # |mP° ∩ Z^N| for m = 1..m_max


def count_table(simplex: LatticeSimplex, m_max: int, cap: int | None = None) -> CountTable:
    counts = tuple(brute_count(simplex, m, cap=cap) for m in range(m_max + 1))
    interior = tuple(
        brute_count(simplex, m, interior=True, cap=cap) for m in range(1, m_max + 1)
    )
    return CountTable(simplex, counts, interior)


def delta_from_counts(counts, d: int) -> DeltaVector:
    """Recover the delta vector from counts at m = 0..d.

    Forward substitution of the triangular binomial system; the result must
    be a genuine delta vector (leading 1, nonnegative), anything else means
    the counts do not come from a lattice polytope of dimension d.
    """
    values = counts.counts if isinstance(counts, CountTable) else tuple(counts)
    if len(values) < d + 1:
        raise ValueError(f"need counts for m = 0..{d}")
    sol = invert_counting_series(values, d)
    if sol[0] != 1 or any(v < 0 for v in sol):
        raise InconsistentCounts(f"recovered coefficients {sol} are not a delta vector")
    return DeltaVector(sol)


@dataclass(frozen=True)
class ReciprocityReport:
    delta: DeltaVector
    rows: tuple[tuple[int, int, int], ...]  # (m, brute interior, polynomial value)

    @property
    def ok(self) -> bool:
        return all(brute == predicted for _, brute, predicted in self.rows)


def reciprocity_check(
    simplex: LatticeSimplex, m_max: int, cap: int | None = None
) -> ReciprocityReport:
    """Brute interior counts vs (-1)^d i(P, -m) for 1 <= m <= m_max."""
    d = simplex.d
    counts = tuple(brute_count(simplex, m, cap=cap) for m in range(d + 1))
    delta = delta_from_counts(counts, d)
    rows = []
    for m in range(1, m_max + 1):
        brute = brute_count(simplex, m, interior=True, cap=cap)
        rows.append((m, brute, interior_count(delta, m)))
    return ReciprocityReport(delta, tuple(rows))

"""Constructors for the explicit simplex families and their predicted shapes.

Each family pins a last vertex onto the frame 0, e_1, ..., e_{d-1}; the
remaining data (a modulus M and one or two integer parameters) determines a
ceiling/fractional-part formula whose histogram over j = 0..M-1 predicts the
delta vector.  Enumeration of the actual simplex is the ground truth; the
formulas and closed forms are treated as predictions under test, and where a
formula admits two readings (a floor where only a fractional part can be
meant), both are evaluated and the reading consistent with the closed form
is selected, with a log note on the discrepancy.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BadParams, NoClosedForm
from .sequences import (
    is_alternatingly_increasing,
    is_log_concave,
    is_unimodal,
)
from .simplex import DeltaVector, LatticeSimplex, delta_vector

__all__ = [
    "Family",
    "FamilySpec",
    "RouteCheck",
    "build_simplex",
    "closed_form_delta",
    "ceiling_histogram",
    "predicted_properties",
    "observed_properties",
    "nonunimodal_bounds",
    "three_route_check",
]

logger = logging.getLogger(__name__)


class Family(Enum):
    """The named families, keyed by the shape of their delta vectors."""

    NONUNIMODAL_ODD = "nonunimodal-odd"
    NONUNIMODAL_EVEN = "nonunimodal-even"
    UNIMODAL_ONLY = "unimodal-only"
    AI_NOT_LC = "ai-not-lc"
    SEXTIC_A = "sextic-a"
    SEXTIC_B = "sextic-b"
    TETRAHEDRON = "tetrahedron"


_PARAMETRIC = {
    Family.NONUNIMODAL_ODD,
    Family.NONUNIMODAL_EVEN,
    Family.UNIMODAL_ONLY,
    Family.AI_NOT_LC,
}

_SEXTIC_LAST = {Family.SEXTIC_A: (16, 30), Family.SEXTIC_B: (22, 42)}
_SEXTIC_DELTA = {
    Family.SEXTIC_A: (1, 6, 20, 22, 23, 15, 3),
    Family.SEXTIC_B: (1, 7, 28, 31, 32, 23, 4),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    l: int | None = None
    d: int | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        f = self.family
        if f in (Family.NONUNIMODAL_ODD, Family.NONUNIMODAL_EVEN):
            if self.l is None or self.m is None or self.d is not None:
                raise BadParams(f"{f.value} takes parameters l and m")
            if self.l < 2 or self.m < 1:
                raise BadParams(f"{f.value} needs l >= 2 and m >= 1")
        elif f is Family.UNIMODAL_ONLY:
            if self.d is None or self.m is None or self.l is not None:
                raise BadParams("unimodal-only takes parameters d and m")
            if self.d < 5 or self.d % 2 == 0 or self.m < 1:
                raise BadParams("unimodal-only needs odd d >= 5 and m >= 1")
        elif f is Family.AI_NOT_LC:
            if self.d is None or self.m is None or self.l is not None:
                raise BadParams("ai-not-lc takes parameters d and m")
            if self.d < 4 or self.m < 1:
                raise BadParams("ai-not-lc needs d >= 4 and m >= 1")
        else:
            if self.l is not None or self.d is not None or self.m is not None:
                raise BadParams(f"{f.value} takes no parameters")

    @property
    def dimension(self) -> int:
        f = self.family
        if f is Family.NONUNIMODAL_ODD:
            return 2 * self.l + 1
        if f is Family.NONUNIMODAL_EVEN:
            return 2 * self.l + 2
        if f in (Family.UNIMODAL_ONLY, Family.AI_NOT_LC):
            return self.d
        if f is Family.TETRAHEDRON:
            return 3
        return 6

    @property
    def modulus(self) -> int:
        """Normalized volume of the family member (the histogram range)."""
        f, m = self.family, self.m
        if f is Family.NONUNIMODAL_ODD:
            return 2 * (2 * m + 1) * (self.l + 1)
        if f is Family.NONUNIMODAL_EVEN:
            return 2 * (3 * m + 1) * (self.l + 1)
        if f is Family.UNIMODAL_ONLY:
            return 2 * (self.d - 1) * m + 2
        if f is Family.AI_NOT_LC:
            d = self.d
            return (math.ceil((d + 1) / 2) * m + 1) * math.ceil((d + 2) / 2)
        if f is Family.TETRAHEDRON:
            return 5
        return sum(_SEXTIC_DELTA[f])


def _frame(d: int, last_vertex: list[int]) -> LatticeSimplex:
    verts = [tuple(0 for _ in range(d))]
    verts += [tuple(1 if i == j else 0 for i in range(d)) for j in range(d - 1)]
    verts.append(tuple(last_vertex))
    return LatticeSimplex(tuple(verts))


def build_simplex(spec: FamilySpec) -> LatticeSimplex:
    f, big_m = spec.family, spec.modulus
    d, m = spec.dimension, spec.m
    if f is Family.NONUNIMODAL_ODD:
        last = [big_m - 2 * (spec.l + 1) * m] + [big_m - 1] * (d - 2) + [big_m]
        return _frame(d, last)
    if f is Family.NONUNIMODAL_EVEN:
        last = [big_m - 2 * (spec.l + 1) * m] * 2 + [big_m - 1] * (d - 3) + [big_m]
        return _frame(d, last)
    if f is Family.UNIMODAL_ONLY:
        last = [big_m - d + 1] + [big_m - 1] * (d - 2) + [big_m]
        return _frame(d, last)
    if f is Family.AI_NOT_LC:
        k = d // 2
        last = [big_m - math.ceil((d + 2) / 2) * m] * k + [big_m - 1] * (d - 1 - k) + [big_m]
        return _frame(d, last)
    if f is Family.TETRAHEDRON:
        return LatticeSimplex(((1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 2, 2)))
    a, b = _SEXTIC_LAST[f]
    return LatticeSimplex(
        (
            (0, 0, 0, 0, 0, 0),
            (1, 0, 0, 0, 0, 0),
            (0, 1, 0, 0, 0, 0),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (2, 2, 2, 2, 3, 0),
            (a, a, a, a, 3, b),
        )
    )


def closed_form_delta(spec: FamilySpec) -> DeltaVector:
    """The predicted delta vector, written out entry by entry."""
    f, d, m = spec.family, spec.dimension, spec.m
    if f is Family.UNIMODAL_ONLY:
        # (1, m, 2m, ..., 2m, 2m+1 at index (d-1)/2, 2m, ..., 2m, m)
        out = [1, m] + [2 * m] * (d - 2) + [m]
        out[(d - 1) // 2] = 2 * m + 1
        return DeltaVector(tuple(out))
    if f is Family.AI_NOT_LC:
        if d % 2:
            dp = (d + 1) // 2
            out = [1] + [i * m + 1 for i in range(1, dp)] + [2 * dp * m + 1]
            out += [(dp - i) * m for i in range(1, dp)]
        else:
            dp = d // 2
            out = [1] + [i * m + 1 for i in range(1, dp)] + [(2 * dp + 1) * m + 1]
            out += [(dp + 1 - i) * m for i in range(1, dp + 1)]
        return DeltaVector(tuple(out))
    if f is Family.TETRAHEDRON:
        return DeltaVector((1, 1, 2, 1))
    if f in _SEXTIC_DELTA:
        return DeltaVector(_SEXTIC_DELTA[f])
    raise NoClosedForm(f"{f.value} has no closed-form delta vector; use ceiling_histogram")


def _frac(q: Fraction) -> Fraction:
    return q - math.floor(q)


def _histogram(values: list[int], d: int) -> tuple[int, ...] | None:
    """Histogram of formula values, or None when a value falls outside 0..d
    (which brands the formula reading as wrong)."""
    hist = [0] * (d + 1)
    for v in values:
        if not 0 <= v <= d:
            return None
        hist[v] += 1
    return tuple(hist)


def _require_histogram(values: list[int], d: int) -> tuple[int, ...]:
    hist = _histogram(values, d)
    if hist is None:
        raise BadParams("degree formula produced a value outside 0..d")
    return hist


def ceiling_histogram(spec: FamilySpec) -> DeltaVector:
    """Evaluate the family's degree formula over j = 0..M-1 and histogram it.

    All arithmetic is exact rational.  For the two families whose formula
    admits a floor/fractional-part double reading, both variants are
    computed and the one matching the closed form wins.
    """
    f, d, m, big_m = spec.family, spec.dimension, spec.m, spec.modulus
    if f is Family.NONUNIMODAL_ODD:
        l = spec.l
        values = [
            math.ceil(Fraction(2 * l * j, big_m) + _frac(Fraction(2 * (l + 1) * m * j, big_m)))
            for j in range(big_m)
        ]
        return DeltaVector(_require_histogram(values, d))
    if f is Family.NONUNIMODAL_EVEN:
        l = spec.l
        values = [
            math.ceil(Fraction(2 * l * j, big_m) + 2 * _frac(Fraction(2 * (l + 1) * m * j, big_m)))
            for j in range(big_m)
        ]
        return DeltaVector(_require_histogram(values, d))
    if f is Family.UNIMODAL_ONLY:
        def floor_reading(j: int) -> int:
            x = Fraction((d - 1) * j, big_m)
            return math.ceil(x + math.floor(x))

        def frac_reading(j: int) -> int:
            x = Fraction((d - 1) * j, big_m)
            return math.ceil(x + _frac(x))

        return _select_reading(spec, floor_reading, frac_reading)
    if f is Family.AI_NOT_LC and d % 2 == 1:
        dp = (d + 1) // 2

        def floor_reading(j: int) -> int:
            return math.ceil(
                Fraction(dp * j, big_m) + math.floor(Fraction(m * j, dp * m + 1)) * (dp - 1)
            )

        def frac_reading(j: int) -> int:
            return math.ceil(
                Fraction(dp * j, big_m) + _frac(Fraction(m * j, dp * m + 1)) * (dp - 1)
            )

        return _select_reading(spec, floor_reading, frac_reading)
    if f is Family.AI_NOT_LC:
        dp = d // 2
        values = [
            math.ceil(
                Fraction(dp * j, big_m)
                + _frac(Fraction(m * j, (dp + 1) * m + 1)) * dp
            )
            for j in range(big_m)
        ]
        return DeltaVector(_require_histogram(values, d))
    raise BadParams(f"{f.value} has no degree formula; use closed_form_delta")


def _select_reading(spec: FamilySpec, floor_reading, frac_reading) -> DeltaVector:
    d, big_m = spec.dimension, spec.modulus
    expected = closed_form_delta(spec).delta
    floor_hist = _histogram([floor_reading(j) for j in range(big_m)], d)
    if floor_hist == expected:
        return DeltaVector(floor_hist)
    frac_hist = _histogram([frac_reading(j) for j in range(big_m)], d)
    logger.info(
        "%s%s: floor reading of the degree formula gives %s; "
        "using the fractional-part reading",
        spec.family.value,
        (spec.l, spec.d, spec.m),
        floor_hist if floor_hist is not None else "out-of-range values",
    )
    if frac_hist is None:
        raise BadParams("neither formula reading yields a valid histogram")
    return DeltaVector(frac_hist)


def predicted_properties(spec: FamilySpec) -> dict[str, bool]:
    """The asserted (non-strict) verdicts for the family's delta vector."""
    f = spec.family
    if f in (Family.NONUNIMODAL_ODD, Family.NONUNIMODAL_EVEN):
        return {"unimodal": False}
    if f is Family.UNIMODAL_ONLY:
        return {"unimodal": True, "log_concave": False, "alternatingly_increasing": False}
    if f is Family.AI_NOT_LC:
        return {"alternatingly_increasing": True, "log_concave": False}
    if f is Family.TETRAHEDRON:
        return {"alternatingly_increasing": True, "log_concave": False}
    return {"log_concave": True, "alternatingly_increasing": False}


def observed_properties(delta: DeltaVector) -> dict[str, bool]:
    values = delta.delta
    return {
        "unimodal": is_unimodal(values).holds,
        "log_concave": is_log_concave(values).holds,
        "alternatingly_increasing": is_alternatingly_increasing(values).holds,
    }


def nonunimodal_bounds(spec: FamilySpec, delta: DeltaVector) -> dict[str, bool]:
    """The proved dip bounds for the non-unimodal families.

    delta_1 stays small, delta_l spikes, delta_{l+1} dips, and a later entry
    spikes again; together these force non-unimodality.  The spike floor is
    2m+2 for odd dimension and 3m+2 for even.
    """
    if spec.family not in (Family.NONUNIMODAL_ODD, Family.NONUNIMODAL_EVEN):
        raise BadParams("dip bounds only apply to the non-unimodal families")
    l, m = spec.l, spec.m
    step = 2 * m + 1 if spec.family is Family.NONUNIMODAL_ODD else 3 * m + 1
    values = delta.delta
    late_max = max(values[l + 2 : 2 * l + 1])
    return {
        "delta_1_small": values[1] <= m + 1,
        "delta_l_spikes": values[l] >= step + 1,
        "delta_l1_dips": values[l + 1] <= step,
        "late_spike": late_max >= step + 1,
        "dip_chain": values[1] < values[l] > values[l + 1] < late_max,
        "interior_points": values[spec.dimension] == m,
    }


@dataclass(frozen=True)
class RouteCheck:
    spec: FamilySpec
    enumerated: DeltaVector
    ceiling: DeltaVector | None
    closed_form: DeltaVector | None

    @property
    def agree(self) -> bool:
        return self.first_mismatch() is None

    def first_mismatch(self) -> tuple[str, int] | None:
        """(route name, first differing index) against enumeration, if any."""
        for name, other in (("ceiling", self.ceiling), ("closed_form", self.closed_form)):
            if other is None:
                continue
            if other.delta != self.enumerated.delta:
                idx = next(
                    i
                    for i, (a, b) in enumerate(zip(self.enumerated.delta, other.delta))
                    if a != b
                )
                return (name, idx)
        return None


def three_route_check(spec: FamilySpec, cap: int | None = None) -> RouteCheck:
    """Enumeration vs formula vs closed form, with enumeration as arbiter."""
    enumerated = delta_vector(build_simplex(spec), cap)
    try:
        ceiling = ceiling_histogram(spec)
    except BadParams:
        ceiling = None
    try:
        closed = closed_form_delta(spec)
    except NoClosedForm:
        closed = None
    return RouteCheck(spec, enumerated, ceiling, closed)

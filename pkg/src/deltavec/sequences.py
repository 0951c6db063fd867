"""Shape predicates for integer sequences, with exact failure witnesses.

Everything here works on plain Python integers, so all comparisons are
exact.  A predicate returns a :class:`PropertyVerdict`; when the property
fails, the verdict carries a witness, a small tuple of indices at which the
defining inequality can be re-evaluated and seen to fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .errors import AllZeroSequence, PreconditionViolated

__all__ = [
    "Property",
    "PropertyVerdict",
    "as_int_tuple",
    "delta_degree",
    "is_unimodal",
    "is_log_concave",
    "is_alternatingly_increasing",
    "check_stanley",
    "check_hibi",
    "spread_product_holds",
]


class Property(Enum):
    UNIMODAL = "unimodal"
    LOG_CONCAVE = "log_concave"
    ALTERNATINGLY_INCREASING = "alternatingly_increasing"
    STANLEY = "stanley"
    HIBI = "hibi"
    STANLEY_HALF = "stanley_half"
    HIBI_HALF = "hibi_half"


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of one predicate evaluation.

    ``witness`` is ``None`` exactly when ``holds`` is true.  For unimodality
    it is a valley triple ``(p, q, r)`` with ``a_p > a_q < a_r`` (or an equal
    adjacent pair in strict mode); for log-concavity a triple
    ``(i-1, i, i+1)``; for the alternating chain a pair ``(p, q)`` where
    ``a_p <= a_q`` fails; for the partial-sum inequalities the failing index
    ``(i,)``.
    """

    property: Property
    strict: bool
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def as_int_tuple(seq: Sequence[int]) -> tuple[int, ...]:
    """Validate and freeze a sequence of exact integers (floats rejected)."""
    values = tuple(seq)
    if not values:
        raise ValueError("sequence must have length >= 1")
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"expected exact integers, got {v!r}")
    return values


def delta_degree(seq: Sequence[int]) -> int:
    """Largest index with a nonzero entry."""
    values = as_int_tuple(seq)
    for i in range(len(values) - 1, -1, -1):
        if values[i] != 0:
            return i
    raise AllZeroSequence("degree of the all-zero sequence is undefined")


def is_unimodal(seq: Sequence[int], strict: bool = False) -> PropertyVerdict:
    """Does the sequence rise to some peak and then fall?

    Non-strict mode allows plateaus; strict mode requires every step of the
    rise and fall to be strict, so a constant stretch already disqualifies.
    """
    a = as_int_tuple(seq)
    d = len(a) - 1
    if strict:
        for k in range(d):
            if a[k] == a[k + 1]:
                return PropertyVerdict(Property.UNIMODAL, True, False, (k, k + 1))
    peak = 0
    while peak < d and a[peak] <= a[peak + 1]:
        peak += 1
    for j in range(peak, d):
        if a[j] < a[j + 1]:
            # a[peak] > a[peak+1] >= ... >= a[j] < a[j+1]: a valley.
            return PropertyVerdict(Property.UNIMODAL, strict, False, (peak, j, j + 1))
    return PropertyVerdict(Property.UNIMODAL, strict, True)


def is_log_concave(seq: Sequence[int], strict: bool = False) -> PropertyVerdict:
    """Check a_i^2 >= a_{i-1} a_{i+1} for every interior index (strict: >)."""
    a = as_int_tuple(seq)
    for i in range(1, len(a) - 1):
        lhs = a[i] * a[i]
        rhs = a[i - 1] * a[i + 1]
        if lhs < rhs or (strict and lhs == rhs):
            return PropertyVerdict(Property.LOG_CONCAVE, strict, False, (i - 1, i, i + 1))
    return PropertyVerdict(Property.LOG_CONCAVE, strict, True)


def _alternating_pairs(d: int) -> Iterator[tuple[int, int]]:
    # Pairs of the chain a_0 <= a_d <= a_1 <= a_{d-1} <= ..., in chain order.
    for i in range((d - 1) // 2 + 1):
        yield (i, d - i)
        if i + 1 <= d // 2:
            yield (d - i, i + 1)


def is_alternatingly_increasing(seq: Sequence[int], strict: bool = False) -> PropertyVerdict:
    """Check a_i <= a_{d-i} and a_{d+1-i} <= a_i along the interleaved chain."""
    a = as_int_tuple(seq)
    d = len(a) - 1
    for p, q in _alternating_pairs(d):
        if a[p] > a[q] or (strict and a[p] == a[q]):
            return PropertyVerdict(
                Property.ALTERNATINGLY_INCREASING, strict, False, (p, q)
            )
    return PropertyVerdict(Property.ALTERNATINGLY_INCREASING, strict, True)


def _require_nonnegative(a: tuple[int, ...]) -> None:
    if any(v < 0 for v in a):
        raise PreconditionViolated("entries must be nonnegative")


def check_stanley(seq: Sequence[int]) -> PropertyVerdict:
    """Partial sums from the bottom are dominated by partial sums from the
    top nonzero coefficient: sum(a_0..a_i) <= sum(a_{s-i}..a_s) for i <= s."""
    a = as_int_tuple(seq)
    _require_nonnegative(a)
    s = delta_degree(a)
    for i in range(s + 1):
        if sum(a[: i + 1]) > sum(a[s - i : s + 1]):
            return PropertyVerdict(Property.STANLEY, False, False, (i,))
    return PropertyVerdict(Property.STANLEY, False, True)


def check_hibi(seq: Sequence[int]) -> PropertyVerdict:
    """Tail partial sums are dominated by early ones:
    sum(a_{d-i}..a_d) <= sum(a_1..a_{i+1}) for 0 <= i <= d-1."""
    a = as_int_tuple(seq)
    _require_nonnegative(a)
    d = len(a) - 1
    for i in range(d):
        if sum(a[d - i :]) > sum(a[1 : i + 2]):
            return PropertyVerdict(Property.HIBI, False, False, (i,))
    return PropertyVerdict(Property.HIBI, False, True)


def spread_product_holds(seq: Sequence[int], strict: bool = False) -> bool:
    """Verify that spreading an index pair apart never increases the product:
    a_i a_j >= a_{i-m} a_{j+m} for all i <= j and m >= 1 within bounds.

    Preconditions: entries nonnegative, zeros only in a trailing block, and
    the sequence is (strictly, if ``strict``) log-concave.  Under those
    premises the inequality is a theorem, so a ``False`` return signals a bug
    in the caller or here.
    """
    a = as_int_tuple(seq)
    _require_nonnegative(a)
    seen_zero = False
    for v in a:
        if seen_zero and v != 0:
            raise PreconditionViolated("zeros must form a trailing block")
        if v == 0:
            seen_zero = True
    if not is_log_concave(a, strict=strict).holds:
        kind = "strictly log-concave" if strict else "log-concave"
        raise PreconditionViolated(f"sequence is not {kind}")
    d = len(a) - 1
    for i in range(d + 1):
        for j in range(i, d + 1):
            for m in range(1, min(i, d - j) + 1):
                lhs = a[i] * a[j]
                rhs = a[i - m] * a[j + m]
                if lhs < rhs or (strict and lhs == rhs):
                    return False
    return True

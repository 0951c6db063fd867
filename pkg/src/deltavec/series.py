"""Numerator polynomials of Ehrhart-style series and their dilation.

A coefficient vector ``(h_0, ..., h_d)`` with ``h_0 = 1`` and nonnegative
entries determines the counting polynomial

    g(m) = sum_i h_i * C(m + d - i, d),

where the binomial is evaluated as a degree-d polynomial in its top argument
so that negative ``m`` makes sense.  Dilating by ``n`` replaces ``g(m)`` by
``g(n m)``; on the coefficient side this picks out every n-th coefficient of
the product of ``h(t)`` with ``(1 + t + ... + t^(n-1))**(d+1)``.  Both the
convolution route and an independent interpolation route are provided, so
each can be cross-checked against the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NonPositiveDilation
from .sequences import as_int_tuple, delta_degree

__all__ = [
    "HPolynomial",
    "RepunitPower",
    "binom_poly",
    "coefficients",
    "convolve",
    "g_eval",
    "repunit_power",
    "dilate_h",
    "dilate_h_interpolated",
    "invert_counting_series",
]


def binom_poly(x: int, d: int) -> int:
    """C(x, d) as the polynomial x(x-1)...(x-d+1)/d!, exact for any integer x."""
    if d < 0:
        raise ValueError("d must be >= 0")
    num = 1
    for k in range(d):
        num *= x - k
    return num // math.factorial(d)


@dataclass(frozen=True)
class HPolynomial:
    """Series numerator h_0 + h_1 t + ... + h_d t^d with h_0 = 1, h_i >= 0.

    The tuple length fixes the ambient degree bound d; the actual degree s
    (largest nonzero index) may be smaller.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = as_int_tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if coeffs[0] != 1:
            raise ValueError("constant coefficient must be 1")
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @property
    def s(self) -> int:
        return delta_degree(self.coeffs)


def coefficients(h) -> tuple[int, ...]:
    """Coefficient tuple of an HPolynomial, a DeltaVector, or a plain sequence."""
    if isinstance(h, HPolynomial):
        return h.coeffs
    delta = getattr(h, "delta", None)
    if delta is not None:
        return tuple(delta)
    return as_int_tuple(h)


def convolve(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def g_eval(h, m: int) -> int:
    """Exact value of the counting polynomial at any integer m."""
    c = coefficients(h)
    d = len(c) - 1
    return sum(ci * binom_poly(m + d - i, d) for i, ci in enumerate(c) if ci)


@dataclass(frozen=True)
class RepunitPower:
    """Coefficients of (1 + t + ... + t^(n-1)) ** power."""

    n: int
    power: int
    coeffs: tuple[int, ...]


def repunit_power(n: int, d: int) -> RepunitPower:
    """Expand (1 + t + ... + t^(n-1))**(d+1) and check its shape properties.

    For n >= 2 the coefficient list is symmetric, strictly log-concave on its
    interior, and strictly increasing up to the middle; those facts carry the
    dilation arguments, so they are asserted here on every construction.
    """
    if n < 1:
        raise NonPositiveDilation("repunit base needs n >= 1")
    if d < 0:
        raise ValueError("d must be >= 0")
    base = (1,) * n
    out = (1,)
    for _ in range(d + 1):
        out = convolve(out, base)
    if n >= 2:
        top = len(out) - 1  # == (d+1)(n-1)
        assert all(out[i] == out[top - i] for i in range(top + 1))
        assert all(out[i] ** 2 > out[i - 1] * out[i + 1] for i in range(1, top))
        assert all(out[i] > out[i - 1] for i in range(1, top // 2 + 1))
    return RepunitPower(n, d + 1, out)


def dilate_h(h, n: int) -> HPolynomial:
    """Dilation by convolution: every n-th coefficient of h(t) * repunit^(d+1)."""
    c = coefficients(h)
    d = len(c) - 1
    if n < 1:
        raise NonPositiveDilation("dilation factor must be >= 1")
    if n == 1:
        return HPolynomial(c)
    prod = convolve(c, repunit_power(n, d).coeffs)
    return HPolynomial(
        tuple(prod[n * i] if n * i < len(prod) else 0 for i in range(d + 1))
    )


def invert_counting_series(values: Sequence[int], d: int) -> tuple[int, ...]:
    """Solve sum_i c_i C(m+d-i, d) = values[m] for m = 0..d.

    The system is triangular because C(d, d) = 1 carries the new unknown at
    each step; forward substitution stays in exact integers.
    """
    if len(values) < d + 1:
        raise ValueError(f"need values for m = 0..{d}")
    out: list[int] = []
    for m in range(d + 1):
        acc = values[m]
        for i, ci in enumerate(out):
            acc -= ci * binom_poly(m + d - i, d)
        out.append(acc)
    return tuple(out)


def dilate_h_interpolated(h, n: int) -> HPolynomial:
    """Dilation recovered from the counting values g(0), g(n), ..., g(nd).

    Independent of :func:`dilate_h`; the two must agree exactly.
    """
    c = coefficients(h)
    d = len(c) - 1
    if n < 1:
        raise NonPositiveDilation("dilation factor must be >= 1")
    values = [g_eval(c, n * m) for m in range(d + 1)]
    return HPolynomial(invert_counting_series(values, d))

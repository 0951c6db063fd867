"""Executable verification of the dilation bounds.

For a numerator vector h of ambient degree d and actual degree s, dilating
by n makes the coefficient vector strictly log-concave once n >= s, and
alternatingly increasing (with the two half-chains split out) once
n >= max(s, d+1-s), provided h satisfies the two partial-sum dominance
systems that every genuine delta vector satisfies.  ``sweep`` records the
observed behaviour for each n and hard-fails if a proved implication is
violated; ``certify_chain_a`` / ``certify_chain_b`` rebuild the two chain
inequalities as exact integer decompositions with nonnegative summands, so
a single run certifies one inequality end to end.

Index conventions for the certificates
--------------------------------------
Write a_k for the coefficients of (1 + t + ... + t^(n-1))**(d+1), extended
by zero outside its support, and k_0 < ... < k_ell for the support of h.
With S_low(j) = h_{k_0} + ... + h_{k_j} and S_high(p) = h_{k_p} + ... +
h_{k_ell}:

* chain a (delta_{d-i} - delta_i >= 0): match(j) = max{p : S_high(p) >=
  S_low(j)} for j < ell, pivot t = max{j : j <= match(j)}.  The difference
  equals A(0, ell) + f_1 + ... + f_{match(t)}, where A(p, q) pairs the four
  coefficients a_{n(d-i)-k_p}, a_{ni-k_q} symmetrically, and the last
  summand (index match(t), which is t or t+1) carries a halved diagonal
  term A(j, j)/2.
* chain b (delta_i - delta_{d+1-i} > 0): with T_low(q) = h_{k_1} + ... +
  h_{k_q}, match(j) = min{q >= 1 : T_low(q) >= S_high(j)}, pivot
  t' = min{j : j >= match(j)}.  The difference equals B(0,0)/2 + g_{n(t')} +
  ... + g_{ell} with the analogous B pairs, the summation now running down
  to index match(t') (which is t' or t'-1).

Ranges that the piecewise definitions leave ambiguous are fixed by
the requirement that the decomposition identity holds exactly; the identity
is re-checked on every call.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificateMismatch, DilationBoundViolated, PreconditionViolated
from .sequences import (
    Property,
    PropertyVerdict,
    as_int_tuple,
    delta_degree,
    is_alternatingly_increasing,
    is_log_concave,
)
from .series import coefficients, dilate_h, repunit_power

__all__ = [
    "DilationHypotheses",
    "SweepRow",
    "SweepReport",
    "ChainCertificate",
    "check_dilation_hypotheses",
    "dilation_bounds",
    "sweep",
    "certify_chain_a",
    "certify_chain_b",
]


@dataclass(frozen=True)
class DilationHypotheses:
    """The entry conditions of the dilation guarantees, each reported
    separately so callers can see exactly what failed."""

    coeffs: tuple[int, ...]
    nonnegative: bool
    leading_one: bool
    dimension_ok: bool  # d >= 5
    stanley_half: PropertyVerdict
    hibi_half: PropertyVerdict

    @property
    def satisfied(self) -> bool:
        return (
            self.nonnegative
            and self.leading_one
            and self.dimension_ok
            and self.stanley_half.holds
            and self.hibi_half.holds
        )


def _stanley_half(a: tuple[int, ...]) -> PropertyVerdict:
    # sum(a_0..a_i) <= sum(a_{s-i}..a_s) for 0 <= i <= floor(s/2)
    if not any(a):
        return PropertyVerdict(Property.STANLEY_HALF, False, True)
    s = delta_degree(a)
    for i in range(s // 2 + 1):
        if sum(a[: i + 1]) > sum(a[s - i : s + 1]):
            return PropertyVerdict(Property.STANLEY_HALF, False, False, (i,))
    return PropertyVerdict(Property.STANLEY_HALF, False, True)


def _hibi_half(a: tuple[int, ...]) -> PropertyVerdict:
    # sum(a_{d-i}..a_d) <= sum(a_1..a_{i+1}) for 0 <= i <= floor((d+1)/2)
    d = len(a) - 1
    for i in range((d + 1) // 2 + 1):
        if sum(a[d - i :]) > sum(a[1 : i + 2]):
            return PropertyVerdict(Property.HIBI_HALF, False, False, (i,))
    return PropertyVerdict(Property.HIBI_HALF, False, True)


def check_dilation_hypotheses(h) -> DilationHypotheses:
    """Evaluate all entry conditions; never raises, the verdicts tell."""
    a = as_int_tuple(coefficients(h) if not isinstance(h, (list, tuple)) else h)
    d = len(a) - 1
    return DilationHypotheses(
        coeffs=a,
        nonnegative=all(v >= 0 for v in a),
        leading_one=a[0] == 1,
        dimension_ok=d >= 5,
        stanley_half=_stanley_half(a),
        hibi_half=_hibi_half(a),
    )


def dilation_bounds(s: int, d: int) -> tuple[int, int]:
    """(bound for strict log-concavity, bound for the alternating chains)."""
    if not 0 <= s <= d:
        raise ValueError("need 0 <= s <= d")
    return s, max(s, d + 1 - s)


def _chain_a_holds(delta: tuple[int, ...]) -> bool:
    d = len(delta) - 1
    return all(delta[i] <= delta[d - i] for i in range(1, (d - 1) // 2 + 1))


def _chain_b_holds(delta: tuple[int, ...]) -> bool:
    d = len(delta) - 1
    return all(delta[d + 1 - i] < delta[i] for i in range(1, d // 2 + 1))


@dataclass(frozen=True)
class SweepRow:
    n: int
    delta: tuple[int, ...]
    strictly_log_concave: bool
    chain_a: bool
    chain_b: bool
    alternatingly_increasing: bool
    strictly_alternatingly_increasing: bool
    at_or_above_bound: bool


@dataclass(frozen=True)
class SweepReport:
    h: tuple[int, ...]
    d: int
    s: int
    hypotheses: DilationHypotheses
    bound_lc: int
    bound_ai: int
    rows: tuple[SweepRow, ...]

    def _min_n(self, attr: str) -> int | None:
        return next((row.n for row in self.rows if getattr(row, attr)), None)

    @property
    def min_n_lc(self) -> int | None:
        return self._min_n("strictly_log_concave")

    @property
    def min_n_ai(self) -> int | None:
        return self._min_n("strictly_alternatingly_increasing")


def sweep(h, n_max: int) -> SweepReport:
    """Dilate by every n up to n_max and record the shape verdicts.

    When the hypotheses hold (in particular d >= 5), the proved implications
    are enforced: strict log-concavity from n = s on, both chains from
    n = max(s, d+1-s) on, strict alternating increase beyond that bound, and
    already at the bound when h_s > 1.  Violations raise
    :class:`DilationBoundViolated`, which would mean a bug, not new math.

    One wrinkle: below n = (d+1-s)/2 the dilated vector still ends in two or
    more zeros, and a zero pair makes the literal strict log-concavity test
    fail (0 > 0).  Strictness genuinely starts once the support reaches
    index d-1, so the log-concavity implication is enforced for
    n >= max(s, (d+1-s)/2); every n at or above the alternating bound is in
    that range.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    a = as_int_tuple(coefficients(h) if not isinstance(h, (list, tuple)) else h)
    d = len(a) - 1
    s = delta_degree(a)
    hyp = check_dilation_hypotheses(a)
    bound_lc, bound_ai = dilation_bounds(s, d)
    enforce = hyp.satisfied
    top_coefficient = a[s]
    rows = []
    for n in range(1, n_max + 1):
        delta = dilate_h(a, n).coeffs
        row = SweepRow(
            n=n,
            delta=delta,
            strictly_log_concave=is_log_concave(delta, strict=True).holds,
            chain_a=_chain_a_holds(delta),
            chain_b=_chain_b_holds(delta),
            alternatingly_increasing=is_alternatingly_increasing(delta).holds,
            strictly_alternatingly_increasing=is_alternatingly_increasing(
                delta, strict=True
            ).holds,
            at_or_above_bound=n >= bound_ai,
        )
        if enforce:
            if n >= bound_lc and 2 * n >= d + 1 - s and not row.strictly_log_concave:
                raise DilationBoundViolated(
                    f"n={n} >= s={s} but U_n h is not strictly log-concave: {delta}"
                )
            if n >= bound_ai and not (row.chain_a and row.chain_b):
                raise DilationBoundViolated(
                    f"n={n} >= {bound_ai} but a chain fails: {delta}"
                )
            if n > bound_ai and not row.strictly_alternatingly_increasing:
                raise DilationBoundViolated(
                    f"n={n} > {bound_ai} but not strictly alternatingly increasing: {delta}"
                )
            if (
                n == bound_ai
                and top_coefficient > 1
                and not row.strictly_alternatingly_increasing
            ):
                raise DilationBoundViolated(
                    f"n={n} at the bound with top coefficient {top_coefficient} > 1 "
                    f"but not strictly alternatingly increasing: {delta}"
                )
        rows.append(row)
    return SweepReport(a, d, s, hyp, bound_lc, bound_ai, tuple(rows))


@dataclass(frozen=True)
class ChainCertificate:
    """Exact decomposition of one chain inequality into nonnegative parts.

    ``pairs`` lists every symmetric pair value checked nonnegative, as
    (j, r, value); ``summands`` the weighted aggregates (j, value); ``head``
    the leading term.  ``difference`` is the directly computed coefficient
    difference and always equals ``head + sum of summand values``.
    """

    chain: str  # "a" or "b"
    h: tuple[int, ...]
    d: int
    n: int
    i: int
    supports: tuple[int, ...]
    matches: tuple[int, ...]
    pivot: int | None
    head: int
    pairs: tuple[tuple[int, int, int], ...]
    summands: tuple[tuple[int, int], ...]
    difference: int
    total: int


def _certificate_setup(h, n: int, i: int, chain: str):
    a = as_int_tuple(coefficients(h) if not isinstance(h, (list, tuple)) else h)
    d = len(a) - 1
    s = delta_degree(a)
    hyp = check_dilation_hypotheses(a)
    if not hyp.satisfied:
        raise PreconditionViolated("certificates need the dilation hypotheses to hold")
    _, bound_ai = dilation_bounds(s, d)
    if n < bound_ai:
        raise PreconditionViolated(f"certificates need n >= {bound_ai}")
    top = (d - 1) // 2 if chain == "a" else d // 2
    if not 1 <= i <= top:
        raise PreconditionViolated(f"need 1 <= i <= {top}")
    rep = repunit_power(n, d).coeffs

    def av(k: int) -> int:
        return rep[k] if 0 <= k < len(rep) else 0

    delta = dilate_h(a, n).coeffs
    ks = tuple(j for j, v in enumerate(a) if v)
    hk = tuple(a[k] for k in ks)
    return a, d, s, av, delta, ks, hk


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise CertificateMismatch(message)


def certify_chain_a(h, n: int, i: int) -> ChainCertificate:
    """Certify delta_{d-i} - delta_i >= 0 (strictly when h_s > 1)."""
    a, d, s, av, delta, ks, hk = _certificate_setup(h, n, i, "a")
    ell = len(ks) - 1

    def pair(p: int, q: int) -> int:
        return (av(n * (d - i) - ks[p]) - av(n * i - ks[q])) + (
            av(n * (d - i) - ks[q]) - av(n * i - ks[p])
        )

    difference = delta[d - i] - delta[i]
    if ell == 0:
        head = pair(0, 0) // 2
        cert = ChainCertificate(
            "a", a, d, n, i, ks, (), None, head, ((0, 0, pair(0, 0)),), (), difference, head
        )
        _check(pair(0, 0) >= 0, "head pair is negative")
        _check(head == difference, "decomposition identity fails")
        return cert

    s_low = [sum(hk[: j + 1]) for j in range(ell + 1)]
    s_high = [sum(hk[p:]) for p in range(ell + 1)] + [0]
    match = tuple(
        max(p for p in range(ell + 1) if s_high[p] >= s_low[j]) for j in range(ell)
    )
    for j in range(ell):
        _check(ks[j] + ks[match[j]] >= s, "support matching misses the degree bound")
    pivot = max(j for j in range(ell) if j <= match[j])
    m_t = match[pivot]
    _check(m_t in (pivot, pivot + 1), "pivot match must be the pivot or its successor")

    pairs: list[tuple[int, int, int]] = [(0, ell, pair(0, ell))]
    summands: list[tuple[int, int]] = []
    for j in range(1, m_t + 1):
        if j < m_t:
            mj, mprev = match[j], match[j - 1]
            if mj < mprev:
                value = (s_high[mprev] - s_low[j - 1]) * pair(j, mprev)
                value += sum(hk[r] * pair(j, r) for r in range(mj + 1, mprev))
                value += (s_low[j] - s_high[mj + 1]) * pair(j, mj)
                pairs.extend((j, r, pair(j, r)) for r in range(mj, mprev + 1))
            else:
                value = hk[j] * pair(j, mj)
                pairs.append((j, mj, pair(j, mj)))
        elif m_t == pivot:
            t = pivot
            mprev = match[t - 1]
            diag = pair(t, t)
            _check(diag % 2 == 0, "diagonal pair must be even")
            if m_t < mprev:
                value = (s_high[mprev] - s_low[t - 1]) * pair(t, mprev)
                value += sum(hk[r] * pair(t, r) for r in range(m_t + 1, mprev))
                value += (s_low[t] - s_high[m_t + 1]) * (diag // 2)
                pairs.extend((t, r, pair(t, r)) for r in range(m_t, mprev + 1))
            else:
                value = (s_high[mprev] - s_low[t - 1]) * (diag // 2)
                pairs.append((t, t, diag))
        else:  # m_t == pivot + 1: halved diagonal one step past the pivot
            t = pivot
            diag = pair(t + 1, t + 1)
            _check(diag % 2 == 0, "diagonal pair must be even")
            value = (s_high[m_t] - s_low[t]) * (diag // 2)
            pairs.append((t + 1, t + 1, diag))
        summands.append((j, value))

    head = pair(0, ell)
    total = head + sum(v for _, v in summands)
    for j, r, value in pairs:
        _check(value >= 0, f"pair A({j},{r}) = {value} is negative")
    for j, value in summands:
        _check(value >= 0, f"summand f_{j} = {value} is negative")
    _check(total == difference, f"decomposition {total} != difference {difference}")
    _check(difference >= 0, "chain a difference is negative")
    if a[s] > 1:
        _check(difference > 0, "top coefficient > 1 must force a strict difference")
    return ChainCertificate(
        "a", a, d, n, i, ks, match, pivot, head, tuple(pairs), tuple(summands), difference, total
    )


def certify_chain_b(h, n: int, i: int) -> ChainCertificate:
    """Certify delta_i - delta_{d+1-i} > 0."""
    a, d, s, av, delta, ks, hk = _certificate_setup(h, n, i, "b")
    ell = len(ks) - 1

    def pair(p: int, q: int) -> int:
        return (av(n * i - ks[p]) - av(n * (d + 1 - i) - ks[q])) + (
            av(n * i - ks[q]) - av(n * (d + 1 - i) - ks[p])
        )

    difference = delta[i] - delta[d + 1 - i]
    head_pair = pair(0, 0)
    _check(head_pair % 2 == 0, "diagonal pair must be even")
    head = head_pair // 2
    if ell == 0:
        _check(head > 0, "head pair must be strictly positive")
        _check(head == difference, "decomposition identity fails")
        return ChainCertificate(
            "b", a, d, n, i, ks, (), None, head, ((0, 0, head_pair),), (), difference, head
        )

    t_low = [sum(hk[1 : q + 1]) for q in range(ell + 1)]  # t_low[0] = 0
    s_high = [sum(hk[p:]) for p in range(ell + 1)] + [0]
    match = {
        j: min(q for q in range(1, ell + 1) if t_low[q] >= s_high[j])
        for j in range(1, ell + 1)
    }
    for j in range(1, ell + 1):
        _check(ks[j] + ks[match[j]] <= d + 1, "support matching exceeds d + 1")
    pivot = min(j for j in range(1, ell + 1) if j >= match[j])
    n_t = match[pivot]
    _check(n_t in (pivot, pivot - 1), "pivot match must be the pivot or its predecessor")

    def match_ext(j: int) -> int:
        return match[j] if j <= ell else 0

    pairs: list[tuple[int, int, int]] = [(0, 0, head_pair)]
    summands: list[tuple[int, int]] = []
    for j in range(n_t, ell + 1):
        if j > n_t:
            nj, nnext = match[j], match_ext(j + 1)
            if nnext < nj:
                value = (t_low[nnext] - s_high[j + 1]) * pair(j, nnext)
                value += sum(hk[r] * pair(j, r) for r in range(nnext + 1, nj))
                value += (s_high[j] - t_low[nj - 1]) * pair(j, nj)
                pairs.extend((j, r, pair(j, r)) for r in range(nnext, nj + 1))
            else:
                value = hk[j] * pair(j, nj)
                pairs.append((j, nj, pair(j, nj)))
        elif n_t == pivot:
            t = pivot
            nnext = match_ext(t + 1)
            diag = pair(t, t)
            _check(diag % 2 == 0, "diagonal pair must be even")
            if nnext < n_t:
                value = (t_low[nnext] - s_high[t + 1]) * pair(t, nnext)
                value += sum(hk[r] * pair(t, r) for r in range(nnext + 1, n_t))
                value += (s_high[t] - t_low[n_t - 1]) * (diag // 2)
                pairs.extend((t, r, pair(t, r)) for r in range(nnext, n_t + 1))
            else:
                value = (t_low[n_t] - s_high[t + 1]) * (diag // 2)
                pairs.append((t, t, diag))
        else:  # n_t == pivot - 1: halved diagonal one step below the pivot
            t = pivot
            diag = pair(t - 1, t - 1)
            _check(diag % 2 == 0, "diagonal pair must be even")
            value = (t_low[n_t] - s_high[t]) * (diag // 2)
            pairs.append((t - 1, t - 1, diag))
        summands.append((j, value))

    total = head + sum(v for _, v in summands)
    _check(head > 0, "head pair must be strictly positive")
    for j, r, value in pairs:
        _check(value >= 0, f"pair B({j},{r}) = {value} is negative")
    for j, value in summands:
        _check(value >= 0, f"summand g_{j} = {value} is negative")
    _check(total == difference, f"decomposition {total} != difference {difference}")
    _check(difference > 0, "chain b difference must be strictly positive")
    return ChainCertificate(
        "b",
        a,
        d,
        n,
        i,
        ks,
        tuple(match[j] for j in range(1, ell + 1)),
        pivot,
        head,
        tuple(pairs),
        tuple(summands),
        difference,
        total,
    )

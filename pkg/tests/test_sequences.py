import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltavec import (
    AllZeroSequence,
    PreconditionViolated,
    check_hibi,
    check_stanley,
    delta_degree,
    is_alternatingly_increasing,
    is_log_concave,
    is_unimodal,
    spread_product_holds,
)

int_sequences = st.lists(st.integers(-50, 50), min_size=1, max_size=12)
nonneg_sequences = st.lists(st.integers(0, 30), min_size=1, max_size=12)


@pytest.mark.parametrize(
    "seq, strict, holds, witness",
    [
        ((1, 2, 6, 3, 5, 1), False, False, (2, 3, 4)),
        ((1, 1, 3, 2, 2, 1), False, True, None),
        ((5,), True, True, None),
        ((3, 3), False, True, None),
        ((3, 3), True, False, (0, 1)),
        ((1, 2, 3), True, True, None),
        ((3, 2, 1), True, True, None),
    ],
)
def test_unimodal_cases(seq, strict, holds, witness):
    verdict = is_unimodal(seq, strict)
    assert verdict.holds is holds
    assert verdict.witness == witness


def test_unimodal_witness_is_a_valley():
    verdict = is_unimodal((1, 2, 6, 3, 5, 1))
    p, q, r = verdict.witness
    a = (1, 2, 6, 3, 5, 1)
    assert a[p] > a[q] < a[r]


@pytest.mark.parametrize(
    "seq, strict, holds, witness",
    [
        ((1, 6, 20, 22, 23, 15, 3), False, True, None),
        ((1, 2, 3, 7, 2, 1), False, False, (1, 2, 3)),
        ((1, 1), False, True, None),
        ((1, 1), True, True, None),
        ((1, 2, 4), True, False, (0, 1, 2)),
        ((1, 2, 4), False, True, None),
    ],
)
def test_log_concave_cases(seq, strict, holds, witness):
    verdict = is_log_concave(seq, strict)
    assert verdict.holds is holds
    assert verdict.witness == witness


@pytest.mark.parametrize(
    "seq, strict, holds",
    [
        ((1, 6, 20, 22, 23, 15, 3), False, False),
        ((1, 2, 3, 7, 2, 1), False, True),
        ((1,), True, True),
        ((1, 1, 2, 1), False, True),
        ((1, 2, 2), False, True),
        ((1, 2, 2), True, False),
    ],
)
def test_alternatingly_increasing_cases(seq, strict, holds):
    assert is_alternatingly_increasing(seq, strict).holds is holds


@pytest.mark.parametrize(
    "seq, holds, witness",
    [
        ((1, 2, 6, 3, 5, 1), True, None),
        ((1, 0, 0), True, None),
        ((1, 3, 1, 0), True, None),  # top-anchored sums: s = 2, all three hold
        ((1, 3, 0, 1), False, (1,)),  # 1 + 3 = 4 > 1 + 0
    ],
)
def test_stanley_cases(seq, holds, witness):
    verdict = check_stanley(seq)
    assert verdict.holds is holds
    assert verdict.witness == witness


def test_stanley_all_zero():
    with pytest.raises(AllZeroSequence):
        check_stanley((0, 0, 0))


def test_stanley_rejects_negative():
    with pytest.raises(PreconditionViolated):
        check_stanley((1, -1, 2))


@pytest.mark.parametrize(
    "seq, holds, witness",
    [
        ((1, 6, 20, 22, 23, 15, 3), True, None),
        ((1, 0, 0, 0), True, None),
        ((1, 1, 0, 2), False, (0,)),
    ],
)
def test_hibi_cases(seq, holds, witness):
    verdict = check_hibi(seq)
    assert verdict.holds is holds
    assert verdict.witness == witness


def test_spread_product_examples():
    assert spread_product_holds((1, 3, 6, 6, 3, 1))
    assert spread_product_holds((1, 0, 0))
    with pytest.raises(PreconditionViolated):
        spread_product_holds((1, 2, 1, 2))
    with pytest.raises(PreconditionViolated):
        spread_product_holds((1, 0, 1))  # zero not in a trailing block


def test_spread_product_strict():
    assert spread_product_holds((1, 3, 4, 3, 1), strict=True)
    with pytest.raises(PreconditionViolated):
        spread_product_holds((1, 3, 9), strict=True)  # only weakly log-concave


def test_delta_degree():
    assert delta_degree((1, 0, 0)) == 0
    assert delta_degree((1, 6, 20, 22, 23, 15, 3)) == 6
    assert delta_degree((1, 2, 6, 3, 5, 1)) == 5
    with pytest.raises(AllZeroSequence):
        delta_degree((0,))


@given(int_sequences)
def test_strict_implies_nonstrict(seq):
    for predicate in (is_unimodal, is_log_concave, is_alternatingly_increasing):
        if predicate(seq, strict=True).holds:
            assert predicate(seq, strict=False).holds


@given(int_sequences)
def test_reversal_symmetry(seq):
    rev = list(reversed(seq))
    assert is_unimodal(seq).holds == is_unimodal(rev).holds
    assert is_log_concave(seq).holds == is_log_concave(rev).holds


@given(int_sequences)
def test_failed_verdicts_carry_checkable_witnesses(seq):
    v = is_unimodal(seq)
    if not v.holds:
        if len(v.witness) == 3:
            p, q, r = v.witness
            assert seq[p] > seq[q] < seq[r]
        else:
            p, q = v.witness
            assert seq[p] == seq[q]
    v = is_log_concave(seq)
    if not v.holds:
        p, q, r = v.witness
        assert seq[q] ** 2 < seq[p] * seq[r]
    v = is_alternatingly_increasing(seq)
    if not v.holds:
        p, q = v.witness
        assert seq[p] > seq[q]


@given(nonneg_sequences)
@settings(max_examples=300)
def test_alternatingly_increasing_implies_unimodal(seq):
    if is_alternatingly_increasing(seq).holds:
        assert is_unimodal(seq).holds


def _random_zero_tail_sequence(rng):
    length = rng.randint(1, 10)
    positive = [rng.randint(1, 25) for _ in range(length)]
    tail = [0] * rng.randint(0, 3)
    return positive + tail


def test_implications_on_random_zero_tail_suite():
    # 10_000 random nonnegative sequences with a trailing-zero block:
    # log-concave implies unimodal, alternatingly increasing implies unimodal.
    rng = random.Random(424242)
    checked_lc = 0
    checked_ai = 0
    for _ in range(10_000):
        seq = _random_zero_tail_sequence(rng)
        if is_log_concave(seq).holds:
            checked_lc += 1
            assert is_unimodal(seq).holds, seq
        if is_alternatingly_increasing(seq).holds:
            checked_ai += 1
            assert is_unimodal(seq).holds, seq
    assert checked_lc > 100 and checked_ai > 100


def test_spread_product_on_random_log_concave_suite():
    rng = random.Random(31337)
    done = 0
    while done < 200:
        seq = _random_zero_tail_sequence(rng)
        if not is_log_concave(seq).holds:
            continue
        assert spread_product_holds(seq)
        done += 1


def test_rejects_floats_and_empty():
    with pytest.raises(TypeError):
        is_unimodal((1.0, 2.0))
    with pytest.raises(ValueError):
        is_unimodal(())

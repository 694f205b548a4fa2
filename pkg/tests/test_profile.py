import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import ABC, ANB, ANCB, sum_measure, vec_measure, w
from prefixnorm import (
    Alphabet,
    MonoidValue,
    OutOfRange,
    Word,
    is_prefix_normal,
    normality_conditions,
    subset_measure,
    weight_profile,
)
from prefixnorm.monoid import MonoidKind
from prefixnorm.oracle import classic_max_ones, is_prefix_normal_classic

MU = sum_measure(ANB, 1, 2, 3)


def payloads(values):
    return [v.payload for v in values]


def test_profile_table_fixtures():
    nanaba = weight_profile(MU, w(ANB, "nanaba"))
    assert payloads(nanaba.prefix) == [0, 2, 3, 5, 6, 9, 10]
    assert payloads(nanaba.factor_max) == [0, 3, 4, 6, 7, 9, 10]
    banana = weight_profile(MU, w(ANB, "banana"))
    assert payloads(banana.prefix) == payloads(banana.factor_max)
    assert payloads(banana.prefix) == [0, 3, 4, 6, 7, 9, 10]


def test_profile_of_gapful_example():
    measure = sum_measure(ABC, 1, 2, 4)
    profile = weight_profile(measure, w(ABC, "ccabccb"))
    assert payloads(profile.factor_max) == [0, 4, 8, 10, 12, 15, 19, 21]


def test_factor_witnesses_are_leftmost_maximisers():
    profile = weight_profile(MU, w(ANB, "nanaba"))
    witnesses = [str(profile.factor_witness(i)) for i in range(1, 7)]
    assert witnesses == ["b", "ab", "nab", "anab", "nanab", "nanaba"]
    for size in range(7):
        witness = profile.factor_witness(size)
        assert len(witness) == size
        assert MU.weight(witness) == profile.factor_max[size]


def test_is_prefix_normal_fixtures():
    assert is_prefix_normal(MU, w(ANB, "banana"))
    assert not is_prefix_normal(MU, w(ANB, "nanaba"))
    assert is_prefix_normal(MU, w(ANB, ""))


def test_empty_word_profile():
    profile = weight_profile(MU, w(ANB, ""))
    assert payloads(profile.prefix) == [0]
    assert payloads(profile.factor_max) == [0]


def value(payload):
    return MonoidValue(MonoidKind.NAT_SUM, payload)


def test_last_at_most_on_banana():
    profile = weight_profile(MU, w(ANB, "banana"))
    assert profile.last_at_most(value(6)) == 3
    assert profile.last_at_most(value(5)) == 2
    assert profile.last_at_most(value(0)) == 0
    assert profile.last_at_most(value(99)) == 6


def test_first_at_least_on_banana():
    profile = weight_profile(MU, w(ANB, "banana"))
    assert profile.first_at_least(value(6)) == 3
    assert profile.first_at_least(value(5)) == 3
    assert profile.first_at_least(value(0)) == 0
    with pytest.raises(OutOfRange):
        profile.first_at_least(value(11))


def test_position_queries_reject_foreign_kinds():
    profile = weight_profile(MU, w(ANB, "banana"))
    with pytest.raises(ValueError, match="nat-sum"):
        profile.last_at_most(MonoidValue(MonoidKind.NAT_PRODUCT, 5))


def test_normality_conditions_fixtures():
    assert normality_conditions(MU, w(ANB, "banana")) == (True, True, True, True)
    assert normality_conditions(MU, w(ANB, "nanaba")) == (False, False, False, False)
    assert normality_conditions(MU, w(ANB, "")) == (True, True, True, True)


def test_binary_reduction_small():
    measure = subset_measure(Alphabet(("0", "1")), {"1"})
    for n in range(0, 9):
        for bits in itertools.product((0, 1), repeat=n):
            word = Word(measure.alphabet, bits)
            profile = weight_profile(measure, word)
            classic = classic_max_ones(bits)
            assert [v.payload - i for i, v in enumerate(profile.factor_max)] == classic
            assert is_prefix_normal(measure, word) == is_prefix_normal_classic(bits)


# --- randomized invariants ----------------------------------------------------


def _measures():
    sums = st.lists(st.integers(1, 9), min_size=2, max_size=4).map(
        lambda ws: sum_measure(Alphabet(tuple("abcd"[: len(ws)])), *ws)
    )
    vec_component = st.integers(0, 3)
    vecs = st.lists(
        st.tuples(vec_component, vec_component).filter(lambda p: p != (0, 0)),
        min_size=2,
        max_size=3,
    ).map(lambda ws: vec_measure(Alphabet(tuple("abc"[: len(ws)])), *ws))
    return st.one_of(sums, vecs)


measure_and_word = _measures().flatmap(
    lambda m: st.tuples(
        st.just(m),
        st.lists(st.integers(0, len(m.alphabet) - 1), max_size=6).map(
            lambda idx: Word(m.alphabet, tuple(idx))
        ),
    )
)


@given(measure_and_word)
def test_profiles_strictly_increase_and_prefix_below_factor_max(case):
    measure, word = case
    profile = weight_profile(measure, word)
    for i in range(len(word)):
        assert profile.factor_max[i] < profile.factor_max[i + 1]
        assert profile.prefix[i] < profile.prefix[i + 1]
    for i in range(len(word) + 1):
        assert profile.prefix[i] <= profile.factor_max[i]


@given(measure_and_word)
def test_factor_max_subadditive(case):
    measure, word = case
    from prefixnorm.monoid import combine

    profile = weight_profile(measure, word)
    f = profile.factor_max
    for j in range(1, len(word) + 1):
        for i in range(j):
            assert f[j] <= combine(f[i], f[j - i])


@given(measure_and_word)
def test_reversal_preserves_factor_profile(case):
    measure, word = case
    forward = weight_profile(measure, word)
    backward = weight_profile(measure, word.reversed())
    assert forward.factor_max == backward.factor_max


@given(measure_and_word)
def test_four_conditions_agree(case):
    measure, word = case
    verdicts = normality_conditions(measure, word)
    assert len(set(verdicts)) == 1
    assert verdicts[0] == is_prefix_normal(measure, word)


def test_prefix_normal_iff_profile_equality_on_exhaustive_small_words():
    measure = sum_measure(ANCB, 1, 2, 2, 3)
    for n in range(0, 4):
        for combo in itertools.product(range(4), repeat=n):
            word = Word(ANCB, combo)
            profile = weight_profile(measure, word)
            assert is_prefix_normal(measure, word) == (profile.prefix == profile.factor_max)

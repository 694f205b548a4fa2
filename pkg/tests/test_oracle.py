import itertools
import random

import pytest

from helpers import ABC, ANB, ANCB, ANX, sum_measure, w, words
from prefixnorm import (
    Alphabet,
    CapacityExceeded,
    Word,
    brute_gap_search,
    brute_prefix_normal_set,
    corpus_measures,
    count_binary_prefix_normal,
    count_prefix_normal,
    find_gap,
    gap_indexes,
    prefix_normal_set,
    run_suite,
    standard_measure,
    suite_names,
    verify_trichotomy,
)
from prefixnorm.oracle import classic_max_ones, classic_prefix_ones, is_prefix_normal_classic


def test_brute_gap_search_returns_first_gap_in_scan_order():
    # (1,3,4) has its documented gap over bcac at index 3, but the scan order
    # (length, lexicographic, index) reaches bbac first: f = (4,6,8,11) and no
    # letter weighs 6-4 = 2.
    measure = sum_measure(ABC, 1, 3, 4)
    gap = brute_gap_search(measure, 4)
    assert (str(gap.word), gap.index) == ("bbac", 2)
    assert gap_indexes(measure, w(ABC, "bcac")) == [3]


def test_brute_gap_search_on_powers_of_two_weights():
    measure = sum_measure(ABC, 1, 2, 4)
    gap = brute_gap_search(measure, 4)
    assert (str(gap.word), gap.index) == ("bcac", 3)


def test_brute_gap_search_standard_measure_finds_nothing():
    assert brute_gap_search(standard_measure(ABC), 5) is None


def test_brute_and_fast_gap_decisions_agree_on_fixtures():
    for payloads in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 4, 6), (3, 5, 7)):
        measure = sum_measure(ABC, *payloads)
        assert (find_gap(measure) is None) == (brute_gap_search(measure, 6) is None)


def test_brute_prefix_normal_set_fixtures():
    assert words(brute_prefix_normal_set(sum_measure(ANCB, 1, 2, 2, 3), w(ANCB, "nanaba"))) == [
        "bacaca",
        "bacana",
        "banaca",
        "banana",
    ]
    assert brute_prefix_normal_set(sum_measure(ANX, 1, 2, 4), w(ANX, "xaxn")) == set()
    assert words(brute_prefix_normal_set(sum_measure(ANB, 1, 2, 3), Word(ANB, ()))) == [""]


def test_brute_set_agrees_with_fast_path_on_random_words():
    rng = random.Random(11)
    measures = [
        sum_measure(ANCB, 1, 2, 2, 3),
        sum_measure(ABC, 1, 2, 4),
        standard_measure(ABC),
    ]
    for _ in range(60):
        measure = rng.choice(measures)
        size = len(measure.alphabet)
        word = Word(measure.alphabet, tuple(rng.randrange(size) for _ in range(rng.randint(0, 5))))
        brute = brute_prefix_normal_set(measure, word)
        assert prefix_normal_set(measure, word) == brute
        assert count_prefix_normal(measure, word) == len(brute)


@pytest.mark.parametrize(
    "payloads",
    [(1, 2, 3), (1, 2, 4), (1, 2, 2, 3)],
)
def test_verify_trichotomy_fixtures(payloads):
    alphabet = Alphabet(tuple("abcd"[: len(payloads)]))
    report = verify_trichotomy(sum_measure(alphabet, *payloads), max_len=4)
    assert report.passed, report.violations


def test_count_binary_prefix_normal_small_values():
    assert [count_binary_prefix_normal(n) for n in range(0, 4)] == [1, 2, 3, 5]


def test_count_binary_prefix_normal_matches_classic_oracle():
    for n in range(0, 9):
        classic = sum(
            is_prefix_normal_classic(bits) for bits in itertools.product((0, 1), repeat=n)
        )
        assert count_binary_prefix_normal(n) == classic


def test_count_binary_prefix_normal_bound():
    with pytest.raises(CapacityExceeded):
        count_binary_prefix_normal(17)
    with pytest.raises(ValueError):
        count_binary_prefix_normal(-1)


def test_classic_oracle_direct_examples():
    bits = (1, 1, 0, 1, 0, 0, 1)
    assert classic_prefix_ones(bits) == [0, 1, 2, 2, 3, 3, 3, 4]
    assert classic_max_ones(bits) == [0, 1, 2, 2, 3, 3, 3, 4]
    assert is_prefix_normal_classic(bits)
    assert not is_prefix_normal_classic((1, 0, 0, 1, 1, 0, 1))


def test_corpus_is_deterministic_and_sized():
    first = corpus_measures(99, 50)
    second = corpus_measures(99, 50)
    assert first == second
    assert len(first) == 50
    assert corpus_measures(100, 50) != first


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("no-such-suite")


def test_suite_registry_contents():
    names = suite_names()
    for expected in (
        "position-functions",
        "subadditivity",
        "pn-equivalences",
        "exchange",
        "prime-gapful",
        "projection",
        "vector-gapfree",
        "stepped-gapfree",
        "trichotomy",
        "gap-decision",
        "equivalence",
        "binary-reduction",
    ):
        assert expected in names


@pytest.mark.parametrize(
    "suite,params",
    [
        ("position-functions", {"cases": 400}),
        ("subadditivity", {"cases": 400}),
        ("pn-equivalences", {"cases": 400}),
        ("exchange", {"cases": 400}),
        ("prime-gapful", {}),
        ("projection", {"cases": 400}),
        ("vector-gapfree", {"max_len": 5}),
        ("stepped-gapfree", {"cases": 300}),
        ("trichotomy", {"corpus_size": 30, "max_len": 4}),
        ("gap-decision", {"corpus_size": 30, "max_len": 5}),
        ("equivalence", {"corpus_size": 40, "pnf_len": 3, "pair_sample": 20}),
        ("binary-reduction", {"max_len": 6}),
    ],
)
def test_suites_pass_at_reduced_scale(suite, params):
    report = run_suite(suite, seed=5, **params)
    assert report.passed, report.violations[:3]
    assert report.cases > 0


def test_report_rendering_formats():
    report = run_suite("prime-gapful", seed=1)
    lines = report.render("lines").splitlines()
    assert lines[0] == f"SUITE prime-gapful CASES {report.cases} VIOLATIONS 0"
    text = report.render("text")
    assert text.startswith("prime-gapful: pass")


def test_reports_are_replayable_on_forced_failure():
    # A deliberately wrong expectation exercises the counterexample format.
    report = verify_trichotomy(sum_measure(ABC, 1, 2, 4), max_len=4)
    assert report.passed
    assert report.params["measure"].startswith("measure[nat-sum")

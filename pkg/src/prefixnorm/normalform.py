"""Prefix-normal forms, their counts, and factor-weight equivalence classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .errors import CapacityExceeded
from .measure import Word, WeightMeasure
from .profile import factor_max_payloads

DEFAULT_LIMIT = 100_000


@dataclass(frozen=True)
class NoNormalForm:
    """No prefix-normal word shares the input's factor-weight profile."""

    gap_word: Word
    gap_index: int


@dataclass(frozen=True)
class UniqueNormalForm:
    word: Word


@dataclass(frozen=True)
class MultipleNormalForms:
    """Compressed form over the projected alphabet, plus the expansion count.

    Reading the projected word as independent per-position letter choices
    yields every prefix-normal member of the class, so ``count`` is the
    product of the class sizes along it.
    """

    projected: Word
    count: int


NormalFormResult = NoNormalForm | UniqueNormalForm | MultipleNormalForms


def prefix_normal_form(measure: WeightMeasure, word: Word) -> NormalFormResult:
    """Walk the factor-weight profile, picking the letter class for each step.

    A step no class weight realises means the class of the word holds no
    prefix-normal member at all; otherwise injective measures give one word
    and non-injective measures a projected word with a count.
    """
    measure.check_word(word)
    if not word.indices:
        return UniqueNormalForm(word)
    projected = measure.projected
    f, _ = factor_max_payloads(
        measure.payloads, word.indices, measure.identity_payload, measure.combine
    )
    comb = measure.combine
    class_weights = projected.measure.payloads
    picks = []
    for i in range(1, len(word.indices) + 1):
        prev, target = f[i - 1], f[i]
        for class_index, class_weight in enumerate(class_weights):
            if comb(prev, class_weight) == target:
                picks.append(class_index)
                break
        else:
            return NoNormalForm(gap_word=word, gap_index=i)
    if all(len(group) == 1 for group in projected.classes):
        letters = tuple(projected.classes[c][0] for c in picks)
        return UniqueNormalForm(Word(measure.alphabet, letters))
    return MultipleNormalForms(
        projected=Word(projected.measure.alphabet, tuple(picks)),
        count=prod(len(projected.classes[c]) for c in picks),
    )


def count_prefix_normal(measure: WeightMeasure, word: Word) -> int:
    """Number of prefix-normal words in the word's class, never materialised."""
    result = prefix_normal_form(measure, word)
    if isinstance(result, NoNormalForm):
        return 0
    if isinstance(result, UniqueNormalForm):
        return 1
    return result.count


def prefix_normal_set(measure: WeightMeasure, word: Word, limit: int = DEFAULT_LIMIT) -> set[Word]:
    """Expand the projected normal form into all concrete prefix-normal words."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    result = prefix_normal_form(measure, word)
    if isinstance(result, NoNormalForm):
        return set()
    if isinstance(result, UniqueNormalForm):
        return {result.word}
    if result.count > limit:
        raise CapacityExceeded(
            f"{result.count} prefix-normal words exceed the limit of {limit}",
            count=result.count,
        )
    choices = [measure.projected.classes[c] for c in result.projected.indices]
    return {Word(measure.alphabet, combo) for combo in itertools.product(*choices)}


def equivalence_class(measure: WeightMeasure, word: Word, limit: int = DEFAULT_LIMIT) -> set[Word]:
    """All same-length words with the same factor-weight profile, by full scan.

    Exponential by design; refuses alphabets/lengths whose enumeration would
    exceed the cap.  The result always contains the word and its reverse.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    measure.check_word(word)
    size = len(measure.alphabet)
    length = len(word.indices)
    total = size ** length
    if total > limit:
        raise CapacityExceeded(
            f"{size}^{length} = {total} candidate words exceed the limit of {limit}",
            count=total,
        )
    ws, ident, comb = measure.payloads, measure.identity_payload, measure.combine
    target, _ = factor_max_payloads(ws, word.indices, ident, comb)
    members = set()
    for combo in itertools.product(range(size), repeat=length):
        candidate, _ = factor_max_payloads(ws, combo, ident, comb)
        if candidate == target:
            members.add(Word(measure.alphabet, combo))
    return members

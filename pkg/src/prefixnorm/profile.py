"""Factor-weight and prefix-weight profiles and the prefix-normal predicate.

The raw helpers at the top operate on bare payloads and are shared by the
brute-force oracles; the public API wraps results into MonoidValue.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, replace
from functools import cached_property
from typing import TYPE_CHECKING, Sequence

from .errors import OutOfRange
from .monoid import MonoidValue

if TYPE_CHECKING:
    from .measure import Word, WeightMeasure


def factor_max_payloads(letter_weights: Sequence, indices: Sequence[int], ident, comb):
    """Per-length maximum factor weight, via running combines from every start.

    Combine-only: no inverse operation is assumed, so the same loop serves
    sums, products, and vector carriers alike.  O(n^2) combines.  Returns
    the profile list (index 0 holds the identity) and, for each length,
    the leftmost start offset realising the maximum.
    """
    n = len(indices)
    best = [None] * (n + 1)
    best[0] = ident
    starts = [0] * (n + 1)
    for start in range(n):
        acc = ident
        for end in range(start + 1, n + 1):
            acc = comb(acc, letter_weights[indices[end - 1]])
            size = end - start
            cur = best[size]
            if cur is None or cur < acc:
                best[size] = acc
                starts[size] = start
    return best, starts


def prefix_payloads(letter_weights: Sequence, indices: Sequence[int], ident, comb):
    out = [ident]
    acc = ident
    for i in indices:
        acc = comb(acc, letter_weights[i])
        out.append(acc)
    return out


def gap_indexes(measure: "WeightMeasure", word: "Word") -> list[int]:
    """Indexes whose factor-weight step no single letter can realise.

    This is the definition-level check; an empty list means the word
    exhibits no gap under the measure.
    """
    measure.check_word(word)
    comb = measure.combine
    f, _ = factor_max_payloads(measure.payloads, word.indices, measure.identity_payload, comb)
    base = sorted(set(measure.payloads))
    out = []
    for i in range(1, len(word.indices) + 1):
        prev, target = f[i - 1], f[i]
        if not any(comb(prev, b) == target for b in base):
            out.append(i)
    return out


@dataclass(frozen=True)
class WeightProfile:
    """Arrays of prefix and maximum-factor weights for one (measure, word) pair.

    ``factor_max[i]`` is the largest weight among the word's length-``i``
    factors, ``prefix[i]`` the weight of its length-``i`` prefix, and
    ``factor_starts[i]`` the leftmost offset where the maximum is attained.
    Index 0 always holds the identity.
    """

    word: "Word"
    measure: "WeightMeasure"
    factor_max: tuple[MonoidValue, ...]
    prefix: tuple[MonoidValue, ...]
    factor_starts: tuple[int, ...]

    def __len__(self):
        return len(self.word.indices)

    @cached_property
    def _prefix_payloads(self) -> list:
        return [value.payload for value in self.prefix]

    def _check_kind(self, bound: MonoidValue) -> None:
        if bound.kind is not self.measure.kind:
            raise ValueError(
                f"cannot query a {self.measure.kind.value} profile with a {bound.kind.value} value"
            )

    def last_at_most(self, bound: MonoidValue) -> int:
        """Largest prefix length whose weight does not exceed ``bound``.

        Always defined: the empty prefix weighs the identity, the minimum
        of every supported carrier.
        """
        self._check_kind(bound)
        return bisect_right(self._prefix_payloads, bound.payload) - 1

    def first_at_least(self, bound: MonoidValue) -> int:
        """Smallest prefix length whose weight reaches ``bound``."""
        self._check_kind(bound)
        payloads = self._prefix_payloads
        if bound.payload > payloads[-1]:
            raise OutOfRange(f"no prefix of {self.word} weighs {bound} or more")
        return bisect_left(payloads, bound.payload)

    def factor_witness(self, size: int) -> "Word":
        """The leftmost factor of the given length realising the maximum."""
        start = self.factor_starts[size]
        return replace(self.word, indices=self.word.indices[start:start + size])


def weight_profile(measure: "WeightMeasure", word: "Word") -> WeightProfile:
    measure.check_word(word)
    f, starts = factor_max_payloads(
        measure.payloads, word.indices, measure.identity_payload, measure.combine
    )
    p = prefix_payloads(measure.payloads, word.indices, measure.identity_payload, measure.combine)
    kind = measure.kind
    return WeightProfile(
        word=word,
        measure=measure,
        factor_max=tuple(MonoidValue(kind, v) for v in f),
        prefix=tuple(MonoidValue(kind, v) for v in p),
        factor_starts=tuple(starts),
    )


def is_prefix_normal(measure: "WeightMeasure", word: "Word") -> bool:
    """True iff every prefix attains the maximum weight of its length class."""
    measure.check_word(word)
    ws, ident, comb = measure.payloads, measure.identity_payload, measure.combine
    f, _ = factor_max_payloads(ws, word.indices, ident, comb)
    return prefix_payloads(ws, word.indices, ident, comb) == f


def normality_conditions(measure: "WeightMeasure", word: "Word") -> tuple[bool, bool, bool, bool]:
    """Evaluate four equivalent prefix-normality conditions independently.

    1. prefix weights equal the factor maxima;
    2. every prefix weight is bounded by the combine of the two prefix
       weights splitting it;
    3. every factor's weight is reached by a prefix no longer than it;
    4. position bound: last_at_most(a) + first_at_least(b) never exceeds
       first_at_least(a . b).

    Condition 4 is quantified over the finite set of factor weights of the
    word (plus the identity); the carrier itself is infinite.
    """
    measure.check_word(word)
    ws, ident, comb = measure.payloads, measure.identity_payload, measure.combine
    idx = word.indices
    n = len(idx)
    f, _ = factor_max_payloads(ws, idx, ident, comb)
    p = prefix_payloads(ws, idx, ident, comb)

    direct = p == f

    split = True
    for j in range(1, n + 1):
        pj = p[j]
        if any(pj > comb(p[i], p[j - i]) for i in range(j)):
            split = False
            break

    # Shortest factor length per weight; checking the shortest occurrence
    # suffices because longer factors only weaken the inequality.
    shortest: dict = {}
    for start in range(n):
        acc = ident
        for end in range(start + 1, n + 1):
            acc = comb(acc, ws[idx[end - 1]])
            size = end - start
            known = shortest.get(acc)
            if known is None or size < known:
                shortest[acc] = size
    reach = all(bisect_left(p, weight) <= size for weight, size in shortest.items())

    total = p[n]
    values = sorted(set(shortest) | {ident})
    positions = True
    for a in values:
        last_a = bisect_right(p, a) - 1
        for b in values:
            ab = comb(a, b)
            if ab > total:
                continue
            if last_a + bisect_left(p, b) > bisect_left(p, ab):
                positions = False
                break
        if not positions:
            break

    return (direct, split, reach, positions)

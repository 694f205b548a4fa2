"""Alphabets, words, and weight measures.

A weight measure assigns every letter a base weight strictly above the
monoid identity; the weight of a word is the combine-fold of its letters.
This module classifies measures (injective, alphabetically ordered,
binary, prime, stepped), decides gapfreeness, projects non-injective
measures onto letter classes, and compares measures for bounded
equivalence.  It also owns the plain-text measure spec format used by the
CLI and the test fixtures.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

from .errors import IncreasingPropertyViolation, MeasureSpecError
from .monoid import (
    MonoidKind,
    MonoidValue,
    format_payload,
    parse_payload,
    payload_combine,
    payload_identity,
)
from .profile import gap_indexes


@dataclass(frozen=True)
class Alphabet:
    """An ordered tuple of distinct letter tokens; tuple order is the letter order."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("alphabet must not be empty")
        seen = set()
        for token in self.letters:
            if not token or any(ch.isspace() for ch in token):
                raise ValueError(
                    f"bad letter token {token!r}: tokens are non-empty and contain no whitespace"
                )
            if token in seen:
                raise ValueError(f"duplicate letter {token!r}")
            seen.add(token)

    @classmethod
    def of(cls, *letters: str) -> "Alphabet":
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def index_of(self, token: str) -> int:
        try:
            return self.letters.index(token)
        except ValueError:
            raise ValueError(
                f"letter {token!r} is not in alphabet {' '.join(self.letters)}"
            ) from None

    @cached_property
    def single_char(self) -> bool:
        return all(len(token) == 1 for token in self.letters)

    @cached_property
    def self_delimiting(self) -> bool:
        # Brace-wrapped class tokens read unambiguously when concatenated.
        return all(t.startswith("{") and t.endswith("}") for t in self.letters)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letter indices over a fixed alphabet."""

    alphabet: Alphabet
    indices: tuple[int, ...]

    def __post_init__(self):
        size = len(self.alphabet)
        for i in self.indices:
            if not 0 <= i < size:
                raise ValueError(f"letter index {i} out of range for a {size}-letter alphabet")

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> "Word":
        """Parse concatenated single-character letters, or comma-separated tokens."""
        if text == "":
            return cls(alphabet, ())
        if alphabet.single_char:
            try:
                return cls(alphabet, tuple(alphabet.index_of(ch) for ch in text))
            except ValueError:
                pass  # fall through to the delimited forms
        if text in alphabet.letters:
            return cls.from_tokens(alphabet, [text])
        if "," in text:
            return cls.from_tokens(alphabet, text.split(","))
        return cls.from_tokens(alphabet, [text])

    @classmethod
    def from_tokens(cls, alphabet: Alphabet, tokens) -> "Word":
        return cls(alphabet, tuple(alphabet.index_of(t) for t in tokens))

    def tokens(self) -> tuple[str, ...]:
        return tuple(self.alphabet.letters[i] for i in self.indices)

    def reversed(self) -> "Word":
        return Word(self.alphabet, self.indices[::-1])

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        if self.alphabet.single_char or self.alphabet.self_delimiting:
            return "".join(self.tokens())
        return ",".join(self.tokens())


def parikh(word: Word) -> tuple[int, ...]:
    """Letter-occurrence counts in alphabet order."""
    counts = [0] * len(word.alphabet)
    for i in word.indices:
        counts[i] += 1
    return tuple(counts)


@dataclass(frozen=True)
class WeightMeasure:
    """Base weights for every letter of an alphabet, over one monoid kind.

    Every base weight must strictly exceed the identity, so the weight of a
    word strictly grows under every extension.  For nat-product measures
    this forces all weights to be at least 2.
    """

    alphabet: Alphabet
    kind: MonoidKind
    weights: tuple[MonoidValue, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.alphabet):
            raise ValueError(
                f"expected {len(self.alphabet)} base weights, got {len(self.weights)}"
            )
        ident = payload_identity(self.kind)
        for letter, value in zip(self.alphabet.letters, self.weights):
            if value.kind is not self.kind:
                raise ValueError(
                    f"weight of {letter!r} has kind {value.kind.value}, measure is {self.kind.value}"
                )
            if not value.payload > ident:
                raise IncreasingPropertyViolation(
                    f"base weight of {letter!r} is {value}; every base weight must exceed "
                    f"the identity {format_payload(self.kind, ident)}"
                )

    @classmethod
    def from_payloads(cls, alphabet: Alphabet, kind: MonoidKind, payloads) -> "WeightMeasure":
        return cls(alphabet, kind, tuple(MonoidValue(kind, p) for p in payloads))

    @cached_property
    def payloads(self) -> tuple:
        return tuple(value.payload for value in self.weights)

    @cached_property
    def combine(self):
        return payload_combine(self.kind)

    @cached_property
    def identity_payload(self):
        return payload_identity(self.kind)

    @cached_property
    def projected(self) -> "ProjectedMeasure":
        return project(self)

    def identity(self) -> MonoidValue:
        return MonoidValue(self.kind, self.identity_payload)

    def check_word(self, word: Word) -> None:
        if word.alphabet != self.alphabet:
            raise ValueError("word is over a different alphabet than the measure")

    def weight_payload(self, word: Word):
        comb = self.combine
        ws = self.payloads
        acc = self.identity_payload
        for i in word.indices:
            acc = comb(acc, ws[i])
        return acc

    def weight(self, word: Word) -> MonoidValue:
        self.check_word(word)
        return MonoidValue(self.kind, self.weight_payload(word))


def new_measure(alphabet: Alphabet, kind: MonoidKind, weights) -> WeightMeasure:
    """Validated constructor; rejects arity mismatches and identity weights."""
    return WeightMeasure(alphabet, kind, tuple(weights))


@dataclass(frozen=True)
class Gap:
    """A word and an index where no letter fills the factor-weight step."""

    word: Word
    index: int


@dataclass(frozen=True)
class MeasureClassification:
    injective: bool
    alphabetically_ordered: bool
    binary: bool
    unary: bool
    prime: bool
    stepped: MonoidValue | None
    gapfree: bool
    gap_witness: Gap | None

    def __post_init__(self):
        if self.gapfree != (self.gap_witness is None):
            raise ValueError("gapfree flag must match the absence of a witness")
        if self.stepped is not None and not self.gapfree:
            raise ValueError("stepped base weights imply gapfreeness")


def find_gap(measure: WeightMeasure) -> Gap | None:
    """Decide gapfreeness; O(k^4) in the number of distinct base weights.

    The distinct base weights, sorted ascending, stand in for the projected
    and weight-relabelled measure.  With at most two of them every measure
    is gapfree.  Otherwise each sorted triple (low, mid, high) must admit a
    letter x with mid . x == low . high; the first failing triple yields a
    four-letter witness word shaped high-low-high-mid (letters of weights
    w_high, w_low, w_high, w_mid), whose gap sits at index 3.

    Triples are scanned in lexicographic index order, so the witness is
    deterministic.
    """
    payloads = measure.payloads
    distinct = sorted(set(payloads))
    if len(distinct) <= 2:
        return None
    representative = {}
    for position, payload in enumerate(payloads):
        representative.setdefault(payload, position)
    comb = measure.combine
    for i, j, k in itertools.combinations(range(len(distinct)), 3):
        target = comb(distinct[i], distinct[k])
        mid = distinct[j]
        if any(comb(mid, x) == target for x in distinct):
            continue
        low, high = distinct[i], distinct[k]
        witness = Word(
            measure.alphabet,
            (
                representative[high],
                representative[low],
                representative[high],
                representative[mid],
            ),
        )
        return Gap(word=witness, index=3)
    return None


def is_gapfree(measure: WeightMeasure) -> bool:
    return find_gap(measure) is None


def stepped_step(measure: WeightMeasure) -> MonoidValue | None:
    """The single step whose repeated action generates the distinct weights.

    Sorted ascending, consecutive distinct weights must each differ by one
    fixed carrier element: a difference for sums, an exact quotient for
    products, a componentwise-nonnegative difference for vector weights.
    A single distinct weight is trivially stepped (by the identity).
    """
    distinct = sorted(set(measure.payloads))
    kind = measure.kind
    if len(distinct) == 1:
        return MonoidValue(kind, payload_identity(kind))
    steps = set()
    for a, b in zip(distinct, distinct[1:]):
        if kind is MonoidKind.NAT_SUM:
            steps.add(b - a)
        elif kind is MonoidKind.NAT_PRODUCT:
            if b % a:
                return None
            steps.add(b // a)
        else:
            delta = (b[0] - a[0], b[1] - a[1])
            if delta[0] < 0 or delta[1] < 0:
                return None
            steps.add(delta)
    if len(steps) != 1:
        return None
    return MonoidValue(kind, steps.pop())


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def classify(measure: WeightMeasure, oracle_max_len: int = 6) -> MeasureClassification:
    """Compute all classification flags.

    ``oracle_max_len`` bounds the definitional re-verification of a gap
    witness (witnesses have length 4, so the minimum is 4); full brute-force
    cross-validation lives in the oracle module's sweeps.
    """
    if oracle_max_len < 4:
        raise ValueError("oracle_max_len must be at least 4: gap witnesses have length 4")
    payloads = measure.payloads
    distinct = set(payloads)
    gap = find_gap(measure)
    if gap is not None and len(gap.word) <= oracle_max_len:
        if gap.index not in gap_indexes(measure, gap.word):
            raise AssertionError("internal error: gap witness fails the definitional check")
    return MeasureClassification(
        injective=len(distinct) == len(payloads),
        alphabetically_ordered=all(a <= b for a, b in zip(payloads, payloads[1:])),
        binary=len(distinct) == 2,
        unary=len(distinct) == 1,
        prime=measure.kind is MonoidKind.NAT_PRODUCT and all(_is_prime(p) for p in distinct),
        stepped=stepped_step(measure),
        gapfree=gap is None,
        gap_witness=gap,
    )


@dataclass(frozen=True)
class ProjectedMeasure:
    """Equal-weight letters merged into classes, giving an injective measure.

    Classes are ordered by first occurrence in the source alphabet and named
    by brace-joined member tokens, e.g. ``{n,c}``.
    """

    source: WeightMeasure
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    measure: WeightMeasure

    def project_word(self, word: Word) -> Word:
        self.source.check_word(word)
        return Word(self.measure.alphabet, tuple(self.class_of[i] for i in word.indices))

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(group) for group in self.classes)


def project(measure: WeightMeasure) -> ProjectedMeasure:
    groups: dict = {}
    for position, payload in enumerate(measure.payloads):
        groups.setdefault(payload, []).append(position)
    classes = tuple(tuple(group) for group in groups.values())
    tokens = tuple(
        "{" + ",".join(measure.alphabet.letters[i] for i in group) + "}" for group in classes
    )
    projected_measure = WeightMeasure(
        Alphabet(tokens),
        measure.kind,
        tuple(measure.weights[group[0]] for group in classes),
    )
    class_of = [0] * len(measure.alphabet)
    for class_index, group in enumerate(classes):
        for i in group:
            class_of[i] = class_index
    return ProjectedMeasure(
        source=measure,
        classes=classes,
        class_of=tuple(class_of),
        measure=projected_measure,
    )


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the bounded equivalence semi-decision.

    ``equivalent`` only certifies agreement for word lengths up to
    ``max_len``; the bound always travels with the verdict.
    """

    equivalent: bool
    max_len: int
    witness: tuple[Word, Word] | None

    def describe(self) -> str:
        if self.equivalent:
            return f"equivalent for all word lengths up to {self.max_len}"
        u, v = self.witness
        return (
            f"inequivalent: same-length words {u} and {v} compare differently "
            f"(found within length bound {self.max_len})"
        )


def _word_at(alphabet: Alphabet, length: int, index: int) -> Word:
    digits = []
    size = len(alphabet)
    for _ in range(length):
        index, digit = divmod(index, size)
        digits.append(digit)
    return Word(alphabet, tuple(reversed(digits)))


def bounded_equivalence(first: WeightMeasure, second: WeightMeasure, max_len: int) -> EquivalenceReport:
    """Check that both measures order all same-length words identically, up to max_len.

    For each length the full word set is sorted by the first measure and the
    second measure's comparisons are replayed along consecutive pairs.  A
    semi-decision: disagreement yields a concrete witness pair, agreement
    only certifies lengths up to the bound.
    """
    if first.alphabet != second.alphabet:
        raise ValueError("measures must share an alphabet to be compared")
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    comb1, comb2 = first.combine, second.combine
    ws1, ws2 = first.payloads, second.payloads
    level1 = [first.identity_payload]
    level2 = [second.identity_payload]
    for length in range(1, max_len + 1):
        level1 = [comb1(acc, w) for acc in level1 for w in ws1]
        level2 = [comb2(acc, w) for acc in level2 for w in ws2]
        order = sorted(range(len(level1)), key=level1.__getitem__)
        for a, b in zip(order, order[1:]):
            tie1 = level1[a] == level1[b]
            tie2 = level2[a] == level2[b]
            if tie1 != tie2 or (not tie1 and level2[b] < level2[a]):
                return EquivalenceReport(
                    equivalent=False,
                    max_len=max_len,
                    witness=(
                        _word_at(first.alphabet, length, a),
                        _word_at(first.alphabet, length, b),
                    ),
                )
    return EquivalenceReport(equivalent=True, max_len=max_len, witness=None)


def standard_measure(alphabet: Alphabet) -> WeightMeasure:
    """The nat-sum measure weighting the i-th letter i: gapfree, injective, ordered."""
    return WeightMeasure.from_payloads(
        alphabet, MonoidKind.NAT_SUM, range(1, len(alphabet) + 1)
    )


def subset_measure(alphabet: Alphabet, members) -> WeightMeasure:
    """Weight 2 on the given letters and 1 elsewhere.

    A word is prefix normal under this measure exactly when its prefixes
    contain at least as many member letters as any factor of equal length.
    """
    member_set = set(members)
    for token in member_set:
        alphabet.index_of(token)
    return WeightMeasure.from_payloads(
        alphabet,
        MonoidKind.NAT_SUM,
        (2 if token in member_set else 1 for token in alphabet.letters),
    )


_COMMENT_RE = re.compile(r"(?:^|(?<=\s))#")
_SPEC_KEYS = ("monoid", "letters", "weights")


def _strip_comment(line: str) -> str:
    match = _COMMENT_RE.search(line)
    return line[: match.start()] if match else line


def parse_measure_text(text: str) -> WeightMeasure:
    """Parse the measure spec format.

    Line-oriented ``key = value`` entries with ``#`` comments; keys may come
    in any order::

        monoid = nat-sum | nat-product | vec2-lex
        letters = <token> <token> ...   # list order defines the letter order
        weights = <value> <value> ...   # one per letter; vec2-lex as (a,b)

    Syntax errors raise MeasureSpecError carrying the offending line number.
    """
    entries: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if "=" not in line:
            raise MeasureSpecError("expected 'key = value'", line=lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _SPEC_KEYS:
            raise MeasureSpecError(
                f"unknown key {key!r} (expected monoid, letters, or weights)", line=lineno
            )
        if key in entries:
            raise MeasureSpecError(f"duplicate key {key!r}", line=lineno)
        if not value:
            raise MeasureSpecError(f"empty value for {key!r}", line=lineno)
        entries[key] = (lineno, value)
    for key in _SPEC_KEYS:
        if key not in entries:
            raise MeasureSpecError(f"missing {key!r} line")

    kind_line, kind_name = entries["monoid"]
    try:
        kind = MonoidKind.from_name(kind_name)
    except ValueError as err:
        raise MeasureSpecError(str(err), line=kind_line) from None

    letters_line, letters_value = entries["letters"]
    try:
        alphabet = Alphabet(tuple(letters_value.split()))
    except ValueError as err:
        raise MeasureSpecError(str(err), line=letters_line) from None

    weights_line, weights_value = entries["weights"]
    values = []
    for token in weights_value.split():
        try:
            values.append(MonoidValue(kind, parse_payload(kind, token)))
        except ValueError as err:
            raise MeasureSpecError(str(err), line=weights_line) from None
    if len(values) != len(alphabet):
        raise MeasureSpecError(
            f"{len(alphabet)} letters but {len(values)} weights", line=weights_line
        )
    return WeightMeasure(alphabet, kind, tuple(values))


def load_measure(path) -> WeightMeasure:
    with open(path, encoding="utf-8") as handle:
        return parse_measure_text(handle.read())


def measure_text(measure: WeightMeasure) -> str:
    """Render a measure back into the measure-file format."""
    weights = " ".join(str(value) for value in measure.weights)
    return (
        f"monoid = {measure.kind.value}\n"
        f"letters = {' '.join(measure.alphabet.letters)}\n"
        f"weights = {weights}\n"
    )


def measure_line(measure: WeightMeasure) -> str:
    """One-line rendering used in sweep counterexample replays."""
    weights = " ".join(str(value) for value in measure.weights)
    return (
        f"measure[{measure.kind.value}; "
        f"letters {' '.join(measure.alphabet.letters)}; weights {weights}]"
    )

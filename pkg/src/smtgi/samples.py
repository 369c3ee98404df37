"""Labeled-string samples and input/output trace samples.

Both have a line-oriented text format with integer symbols::

    <count> <alphabet_size>                  # labeled strings (Abbadingo style)
    <label> <len> <sym> ...

    <kind> <input_size> <output_size>        # traces
    <len> <in_1> <out_1> ...                 # mealy
    <out_0> <len> <in_1> <out_1> ...         # moore
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .alphabet import Alphabet, Kind, Word
from .errors import ConflictError, InputError, ParseError


def _canon(word) -> Word:
    return tuple(int(s) for s in word)


def _sort_key(word):
    return (len(word), word)


def _check_symbols(word, size, what="symbol"):
    for pos, s in enumerate(word):
        if not 0 <= s < size:
            raise InputError(f"{what} {s} at position {pos} of {word} outside alphabet of size {size}")


@dataclass(frozen=True)
class DfaSample:
    alphabet: Alphabet
    positives: frozenset
    negatives: frozenset

    def __post_init__(self):
        pos = frozenset(_canon(w) for w in self.positives)
        neg = frozenset(_canon(w) for w in self.negatives)
        object.__setattr__(self, "positives", pos)
        object.__setattr__(self, "negatives", neg)
        for w in pos | neg:
            _check_symbols(w, len(self.alphabet))
        both = pos & neg
        if both:
            w = min(both, key=_sort_key)
            raise ConflictError(f"string {_fmt(w)} is both accepted and rejected", w)

    kind = Kind.DFA

    @classmethod
    def from_words(cls, alphabet: Alphabet, positives: Iterable, negatives: Iterable) -> DfaSample:
        """Build from words given by symbol names or indices, e.g. ``["a", ""]``."""
        return cls(alphabet,
                   frozenset(alphabet.encode(w) for w in positives),
                   frozenset(alphabet.encode(w) for w in negatives))

    def labeled(self) -> list[tuple[Word, bool]]:
        """All strings with their labels in (length, lexicographic) order."""
        items = [(w, True) for w in self.positives] + [(w, False) for w in self.negatives]
        return sorted(items, key=lambda item: _sort_key(item[0]))

    def __len__(self):
        return len(self.positives) + len(self.negatives)


@dataclass(frozen=True)
class TraceSample:
    """Input/output traces of a Moore or Mealy machine.

    Traces are stored deduplicated and sorted so two samples holding the same
    traces compare equal regardless of insertion order.
    """

    kind: Kind
    input_alphabet: Alphabet
    output_alphabet: Alphabet
    traces: tuple

    def __post_init__(self):
        kind = Kind(self.kind)
        if kind is Kind.DFA:
            raise InputError("trace samples are for moore or mealy machines")
        object.__setattr__(self, "kind", kind)
        offset = 1 if kind is Kind.MOORE else 0
        seen: dict[Word, Word] = {}
        for x, y in self.traces:
            x, y = _canon(x), _canon(y)
            if len(y) != len(x) + offset:
                raise InputError(
                    f"{kind} trace {_fmt(x)} needs {len(x) + offset} outputs, got {len(y)}")
            _check_symbols(x, len(self.input_alphabet), "input symbol")
            _check_symbols(y, len(self.output_alphabet), "output symbol")
            if seen.setdefault(x, y) != y:
                raise ConflictError(f"input {_fmt(x)} has two different output sequences", x)
        if kind is Kind.MOORE and len({y[0] for y in seen.values()}) > 1:
            raise ConflictError("moore traces disagree on the initial output")
        traces = tuple(sorted(seen.items(), key=lambda t: _sort_key(t[0])))
        object.__setattr__(self, "traces", traces)

    @property
    def initial_output(self) -> int | None:
        if self.kind is Kind.MOORE and self.traces:
            return self.traces[0][1][0]
        return None

    def __len__(self):
        return len(self.traces)


Sample = Union[DfaSample, TraceSample]


@dataclass(frozen=True)
class SampleMetrics:
    count: int
    total_length: int


def metrics(sample: Sample) -> SampleMetrics:
    if isinstance(sample, DfaSample):
        words = list(sample.positives) + list(sample.negatives)
    else:
        words = [x for x, _ in sample.traces]
    return SampleMetrics(len(words), sum(len(w) for w in words))


def _fmt(word) -> str:
    return '"' + "".join(str(s) for s in word) + '"' if word else "ε"


def _ints(tokens, lineno):
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None
    if any(v < 0 for v in values):
        raise ParseError("negative integer", lineno)
    return values


def _data_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            yield lineno, line.split()


def parse_dfa_sample(text: str) -> DfaSample:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    if len(header) != 2:
        raise ParseError("header must be '<count> <alphabet_size>'", lineno)
    count, size = _ints(header, lineno)
    body = lines[1:]
    if len(body) != count:
        raise ParseError(f"header announces {count} strings, found {len(body)}", lineno)
    positives, negatives = set(), set()
    for lineno, tokens in body:
        values = _ints(tokens, lineno)
        if len(values) < 2:
            raise ParseError("expected '<label> <len> <sym> ...'", lineno)
        label, length, word = values[0], values[1], tuple(values[2:])
        if label not in (0, 1):
            raise ParseError(f"label must be 0 or 1, got {label}", lineno)
        if len(word) != length:
            raise ParseError(f"length {length} but {len(word)} symbols", lineno)
        if any(s >= size for s in word):
            raise ParseError(f"symbol index outside alphabet of size {size}", lineno)
        (positives if label else negatives).add(word)
    return DfaSample(Alphabet.of_size(size), frozenset(positives), frozenset(negatives))


def serialize_dfa_sample(sample: DfaSample) -> str:
    out = [f"{len(sample)} {len(sample.alphabet)}"]
    for word, label in sample.labeled():
        out.append(" ".join(str(v) for v in (int(label), len(word), *word)))
    return "\n".join(out) + "\n"


def parse_trace_sample(text: str) -> TraceSample:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    if len(header) != 3 or header[0] not in ("moore", "mealy"):
        raise ParseError("header must be '<moore|mealy> <input_size> <output_size>'", lineno)
    kind = Kind(header[0])
    n_in, n_out = _ints(header[1:], lineno)
    traces = []
    for lineno, tokens in lines[1:]:
        values = _ints(tokens, lineno)
        y0 = []
        if kind is Kind.MOORE:
            if not values:
                raise ParseError("missing initial output", lineno)
            y0, values = values[:1], values[1:]
        if not values or len(values) != 1 + 2 * values[0]:
            raise ParseError("trace length does not match the number of symbols", lineno)
        x, y = tuple(values[1::2]), tuple(y0 + values[2::2])
        if any(s >= n_in for s in x):
            raise ParseError(f"input symbol outside alphabet of size {n_in}", lineno)
        if any(s >= n_out for s in y):
            raise ParseError(f"output symbol outside alphabet of size {n_out}", lineno)
        traces.append((x, y))
    return TraceSample(kind, Alphabet.of_size(n_in), Alphabet.of_size(n_out), tuple(traces))


def serialize_trace_sample(sample: TraceSample) -> str:
    out = [f"{sample.kind} {len(sample.input_alphabet)} {len(sample.output_alphabet)}"]
    for x, y in sample.traces:
        tokens = [y[0]] if sample.kind is Kind.MOORE else []
        tokens.append(len(x))
        tail = y[1:] if sample.kind is Kind.MOORE else y
        for a, b in zip(x, tail):
            tokens += [a, b]
        out.append(" ".join(map(str, tokens)))
    return "\n".join(out) + "\n"


def parse_sample(text: str) -> Sample:
    """Parse either format, dispatching on the header's first token."""
    first = text.lstrip().split(None, 1)[:1]
    if first and first[0] in ("moore", "mealy"):
        return parse_trace_sample(text)
    return parse_dfa_sample(text)


def serialize_sample(sample: Sample) -> str:
    if isinstance(sample, DfaSample):
        return serialize_dfa_sample(sample)
    return serialize_trace_sample(sample)

"""Complete deterministic machines over indexed alphabets.

States are the integers ``0 .. n-1`` and the initial state is always 0.
Words are tuples of symbol indices; the public entry points also accept
symbol names (see :meth:`Alphabet.encode`).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .alphabet import Alphabet, Kind, Word
from .errors import InputError, ParseError
from .samples import DfaSample, Sample


def _table(rows, n, width, what):
    rows = tuple(tuple(int(v) for v in row) for row in rows)
    if len(rows) != n or any(len(row) != width for row in rows):
        raise InputError(f"{what} must be a {n}x{width} table")
    return rows


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    n: int
    delta: tuple
    accepting: frozenset

    kind = Kind.DFA
    initial = 0

    def __post_init__(self):
        if self.n < 1:
            raise InputError("a machine needs at least one state")
        object.__setattr__(self, "delta", _table(self.delta, self.n, len(self.alphabet), "delta"))
        object.__setattr__(self, "accepting", frozenset(int(q) for q in self.accepting))
        _check_targets(self.delta, self.n)
        if not self.accepting <= set(range(self.n)):
            raise InputError(f"accepting states {sorted(self.accepting)} outside [0, {self.n})")

    def run(self, word: Sequence) -> int:
        return _run(self, self.alphabet.encode(word))

    def accepts(self, word: Sequence) -> bool:
        return self.run(word) in self.accepting


@dataclass(frozen=True)
class MooreMachine:
    alphabet: Alphabet
    output_alphabet: Alphabet
    n: int
    delta: tuple
    outputs: tuple

    kind = Kind.MOORE
    initial = 0

    def __post_init__(self):
        if self.n < 1:
            raise InputError("a machine needs at least one state")
        object.__setattr__(self, "delta", _table(self.delta, self.n, len(self.alphabet), "delta"))
        object.__setattr__(self, "outputs", tuple(int(o) for o in self.outputs))
        _check_targets(self.delta, self.n)
        if len(self.outputs) != self.n:
            raise InputError("moore outputs must be defined for every state")
        if any(not 0 <= o < len(self.output_alphabet) for o in self.outputs):
            raise InputError("moore output outside the output alphabet")

    def transduce(self, word: Sequence) -> Word:
        q = 0
        out = [self.outputs[0]]
        for a in self.alphabet.encode(word):
            q = self.delta[q][a]
            out.append(self.outputs[q])
        return tuple(out)


@dataclass(frozen=True)
class MealyMachine:
    alphabet: Alphabet
    output_alphabet: Alphabet
    n: int
    delta: tuple
    outputs: tuple

    kind = Kind.MEALY
    initial = 0

    def __post_init__(self):
        if self.n < 1:
            raise InputError("a machine needs at least one state")
        width = len(self.alphabet)
        object.__setattr__(self, "delta", _table(self.delta, self.n, width, "delta"))
        object.__setattr__(self, "outputs", _table(self.outputs, self.n, width, "outputs"))
        _check_targets(self.delta, self.n)
        if any(not 0 <= o < len(self.output_alphabet) for row in self.outputs for o in row):
            raise InputError("mealy output outside the output alphabet")

    def transduce(self, word: Sequence) -> Word:
        q = 0
        out = []
        for a in self.alphabet.encode(word):
            out.append(self.outputs[q][a])
            q = self.delta[q][a]
        return tuple(out)


Machine = Union[Dfa, MooreMachine, MealyMachine]


def _check_targets(delta, n):
    for q, row in enumerate(delta):
        for a, t in enumerate(row):
            if not 0 <= t < n:
                raise InputError(f"delta({q}, {a}) = {t} outside [0, {n})")


def _run(machine: Machine, word: Word) -> int:
    q = 0
    for a in word:
        q = machine.delta[q][a]
    return q


def dfa_accepts(dfa: Dfa, word: Sequence) -> bool:
    return dfa.accepts(word)


def transduce(machine: MooreMachine | MealyMachine, word: Sequence) -> Word:
    """Output indices: ``y_0 .. y_|x|`` for Moore, ``y_1 .. y_|x|`` for Mealy."""
    return machine.transduce(word)


def reachable_states(machine: Machine) -> list[int]:
    seen = [0]
    todo = deque([0])
    while todo:
        q = todo.popleft()
        for t in machine.delta[q]:
            if t not in seen:
                seen.append(t)
                todo.append(t)
    return seen


# -- consistency ---------------------------------------------------------------

@dataclass(frozen=True)
class ConsistencyReport:
    ok: bool
    word: Optional[Word] = None
    expected: object = None
    actual: object = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "consistent"
        return f"inconsistent on {self.word}: expected {self.expected}, got {self.actual}"


def is_consistent(machine: Machine, sample: Sample) -> ConsistencyReport:
    if machine.kind is not sample.kind:
        raise InputError(f"cannot check a {machine.kind} machine against a {sample.kind} sample")
    in_alpha = sample.alphabet if isinstance(sample, DfaSample) else sample.input_alphabet
    if len(in_alpha) != len(machine.alphabet):
        raise InputError("machine and sample input alphabets differ in size")
    if isinstance(sample, DfaSample):
        for word, label in sample.labeled():
            got = _run(machine, word) in machine.accepting
            if got != label:
                return ConsistencyReport(False, word, label, got)
        return ConsistencyReport(True)
    if len(sample.output_alphabet) > len(machine.output_alphabet):
        raise InputError("sample uses outputs the machine cannot produce")
    for x, y in sample.traces:
        got = machine.transduce(x)
        if got != y:
            return ConsistencyReport(False, x, y, got)
    return ConsistencyReport(True)


# -- equivalence ---------------------------------------------------------------

def equivalent(m1: Machine, m2: Machine) -> tuple[bool, Optional[Word]]:
    """Breadth-first search of the reachable pair graph.

    Returns ``(True, None)`` or ``(False, word)`` where ``word`` is a
    shortest input on which the machines disagree.  Outputs of transducers
    are compared by index.
    """
    if m1.kind is not m2.kind:
        raise InputError(f"cannot compare a {m1.kind} machine with a {m2.kind} machine")
    if len(m1.alphabet) != len(m2.alphabet):
        raise InputError("machines have different input alphabets")

    def state_differs(p, q):
        if m1.kind is Kind.DFA:
            return (p in m1.accepting) != (q in m2.accepting)
        if m1.kind is Kind.MOORE:
            return m1.outputs[p] != m2.outputs[q]
        return False

    if state_differs(0, 0):
        return False, ()
    parent = {(0, 0): None}
    todo = deque([(0, 0)])
    while todo:
        pair = todo.popleft()
        p, q = pair
        for a in range(len(m1.alphabet)):
            nxt = (m1.delta[p][a], m2.delta[q][a])
            edge_differs = m1.kind is Kind.MEALY and m1.outputs[p][a] != m2.outputs[q][a]
            if edge_differs or (nxt not in parent and state_differs(*nxt)):
                return False, _path(parent, pair) + (a,)
            if nxt not in parent:
                parent[nxt] = (pair, a)
                todo.append(nxt)
    return True, None


def _path(parent, pair) -> Word:
    word = []
    while parent[pair] is not None:
        pair, a = parent[pair]
        word.append(a)
    return tuple(reversed(word))


# -- text format ---------------------------------------------------------------

def format_machine(machine: Machine) -> str:
    lines = [f"kind {machine.kind}", "inputs " + " ".join(machine.alphabet)]
    if machine.kind.is_transducer:
        lines.append("outputs " + " ".join(machine.output_alphabet))
    lines += [f"states {machine.n}", "initial 0"]
    sym = machine.alphabet.name
    if machine.kind is Kind.DFA:
        lines.append(" ".join(["accepting", *map(str, sorted(machine.accepting))]))
    elif machine.kind is Kind.MOORE:
        lines += [f"output {q} {machine.output_alphabet.name(o)}"
                  for q, o in enumerate(machine.outputs)]
    for q, row in enumerate(machine.delta):
        for a, t in enumerate(row):
            line = f"trans {q} {sym(a)} {t}"
            if machine.kind is Kind.MEALY:
                line += " " + machine.output_alphabet.name(machine.outputs[q][a])
            lines.append(line)
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> Machine:
    fields: dict[str, tuple[int, list[str]]] = {}
    trans, outs = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        key, args = tokens[0], tokens[1:]
        if key == "trans":
            trans.setdefault("lines", []).append((lineno, args))
        elif key == "output":
            outs.setdefault("lines", []).append((lineno, args))
        elif key in ("kind", "inputs", "outputs", "states", "initial", "accepting"):
            if key in fields:
                raise ParseError(f"duplicate '{key}' line", lineno)
            fields[key] = (lineno, args)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)

    def need(key):
        if key not in fields:
            raise ParseError(f"missing '{key}' line")
        return fields[key]

    def number(token, lineno, what):
        try:
            return int(token)
        except ValueError:
            raise ParseError(f"{what} must be an integer, got {token!r}", lineno) from None

    lineno, args = need("kind")
    if len(args) != 1 or args[0] not in ("dfa", "moore", "mealy"):
        raise ParseError("kind must be dfa, moore or mealy", lineno)
    kind = Kind(args[0])
    try:
        alphabet = Alphabet(tuple(need("inputs")[1]))
        out_alpha = Alphabet(tuple(need("outputs")[1])) if kind.is_transducer else None
    except InputError as exc:
        raise ParseError(str(exc)) from None
    lineno, args = need("states")
    if len(args) != 1:
        raise ParseError("expected 'states <n>'", lineno)
    n = number(args[0], lineno, "state count")
    if n < 1:
        raise ParseError("state count must be positive", lineno)
    lineno, args = need("initial")
    if args != ["0"]:
        raise ParseError("initial state must be 0", lineno)

    def state(token, lineno):
        q = number(token, lineno, "state")
        if not 0 <= q < n:
            raise ParseError(f"state {q} outside [0, {n})", lineno)
        return q

    def symbol(alpha, token, lineno):
        if token not in alpha.symbols:
            raise ParseError(f"unknown symbol {token!r}", lineno)
        return alpha.index(token)

    width = 4 if kind is Kind.MEALY else 3
    delta = [[None] * len(alphabet) for _ in range(n)]
    mealy_out = [[None] * len(alphabet) for _ in range(n)]
    for lineno, args in trans.get("lines", []):
        if len(args) != width:
            raise ParseError(f"trans line needs {width} fields", lineno)
        q, a = state(args[0], lineno), symbol(alphabet, args[1], lineno)
        if delta[q][a] is not None:
            raise ParseError(f"duplicate transition for ({args[0]}, {args[1]})", lineno)
        delta[q][a] = state(args[2], lineno)
        if kind is Kind.MEALY:
            mealy_out[q][a] = symbol(out_alpha, args[3], lineno)
    for q, row in enumerate(delta):
        for a, t in enumerate(row):
            if t is None:
                raise ParseError(f"missing transition for ({q}, {alphabet.name(a)})")

    if kind is not Kind.MOORE and outs:
        raise ParseError("'output' lines are only valid for moore machines", outs["lines"][0][0])
    if kind is Kind.DFA:
        if "outputs" in fields:
            raise ParseError("'outputs' line is not valid for a dfa", fields["outputs"][0])
        lineno, args = need("accepting")
        return Dfa(alphabet, n, delta, frozenset(state(t, lineno) for t in args))
    if "accepting" in fields:
        raise ParseError("'accepting' line is only valid for a dfa", fields["accepting"][0])
    if kind is Kind.MEALY:
        return MealyMachine(alphabet, out_alpha, n, delta, mealy_out)
    moore_out = [None] * n
    for lineno, args in outs.get("lines", []):
        if len(args) != 2:
            raise ParseError("output line needs '<state> <sym>'", lineno)
        q = state(args[0], lineno)
        if moore_out[q] is not None:
            raise ParseError(f"duplicate output for state {q}", lineno)
        moore_out[q] = symbol(out_alpha, args[1], lineno)
    if None in moore_out:
        raise ParseError(f"missing output for state {moore_out.index(None)}")
    return MooreMachine(alphabet, out_alpha, n, delta, moore_out)


def to_dot(machine: Machine) -> str:
    lines = ["digraph machine {", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in range(machine.n):
        if machine.kind is Kind.DFA:
            shape = "doublecircle" if q in machine.accepting else "circle"
            lines.append(f'  {q} [shape={shape}, label="{q}"];')
        elif machine.kind is Kind.MOORE:
            out = machine.output_alphabet.name(machine.outputs[q])
            lines.append(f'  {q} [shape=circle, label="{q}/{out}"];')
        else:
            lines.append(f'  {q} [shape=circle, label="{q}"];')
    lines.append("  __start -> 0;")
    for q, row in enumerate(machine.delta):
        for a, t in enumerate(row):
            label = machine.alphabet.name(a)
            if machine.kind is Kind.MEALY:
                label += "/" + machine.output_alphabet.name(machine.outputs[q][a])
            lines.append(f'  {q} -> {t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

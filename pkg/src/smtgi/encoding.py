"""Ground first-order formulas for "is there a consistent machine with at most n states".

Terms are plain Python values: ``int`` and ``bool`` literals, and
:class:`App` nodes for function applications, constants and the connectives
``= < >= and or not``.  Quantifiers over finite domains are expanded here, so
every assertion is ground.

Function symbols used by every encoding:

``delta``   transition function, ``(Int Int) Int`` (state, input index)
``output``  ``(Int) Bool`` for DFAs, ``(Int) Int`` for Moore machines and
            ``(Int Int) Int`` for Mealy machines
``pi_<q>``  one integer constant per prefix-tree node: the state that node
            is mapped to (expressive and transducer encodings only)
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .alphabet import Kind
from .apt import Apt
from .errors import InputError
from .samples import DfaSample

CONNECTIVES = frozenset({"=", "<", ">=", "and", "or", "not"})
DEFAULT_LOGIC = "QF_UFLIA"

TRANSITION = "delta"
OUTPUT = "output"


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.fn
        return "(" + " ".join([self.fn, *map(term_text, self.args)]) + ")"


Term = Union[App, int, bool]


def term_text(term: Term) -> str:
    """SMT-LIB2 rendering of a term."""
    if isinstance(term, bool):
        return "true" if term else "false"
    if isinstance(term, int):
        return str(term) if term >= 0 else f"(- {-term})"
    return str(term)


def eq(a, b):
    return App("=", (a, b))


def or_(*args):
    return args[0] if len(args) == 1 else App("or", args)


def and_(*args):
    return args[0] if len(args) == 1 else App("and", args)


@dataclass(frozen=True)
class Declaration:
    name: str
    arg_sorts: tuple
    sort: str

    def __call__(self, *args) -> App:
        if len(args) != len(self.arg_sorts):
            raise InputError(f"{self.name} takes {len(self.arg_sorts)} arguments")
        return App(self.name, tuple(args))


@dataclass(frozen=True)
class Formula:
    declarations: tuple = ()
    assertions: tuple = ()
    logic_hint: str = DEFAULT_LOGIC

    def __post_init__(self):
        object.__setattr__(self, "declarations", tuple(self.declarations))
        object.__setattr__(self, "assertions", tuple(self.assertions))
        arity = {}
        for d in self.declarations:
            if d.name in arity or d.name in CONNECTIVES:
                raise InputError(f"function {d.name!r} declared twice")
            arity[d.name] = len(d.arg_sorts)
        stack = list(self.assertions)
        while stack:
            t = stack.pop()
            if isinstance(t, App):
                if t.fn not in CONNECTIVES and arity.get(t.fn) != len(t.args):
                    raise InputError(f"undeclared function {t.fn!r}/{len(t.args)}")
                stack.extend(t.args)


class AxiomStyle(str, Enum):
    """How "value lies in [0, n)" is spelled out."""

    BOOL = "bool"   # a disjunction of equalities
    INEQ = "ineq"   # two linear inequalities

    def __str__(self):
        return self.value


def in_range(term: Term, n: int, style: AxiomStyle) -> Term:
    if AxiomStyle(style) is AxiomStyle.BOOL:
        return or_(*(eq(term, j) for j in range(n)))
    return and_(App(">=", (term, 0)), App("<", (term, n)))


@dataclass(frozen=True)
class EncodingStats:
    n: int
    assertion_count: int
    declaration_count: int


def encoding_stats(formula: Formula, n: int) -> EncodingStats:
    return EncodingStats(n, len(formula.assertions), len(formula.declarations))


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise InputError(f"size bound must be a positive integer, got {n!r}")


def encode_natural(sample: DfaSample, n: int, style: AxiomStyle) -> Formula:
    """Nested encoding: every sampled string becomes one term ``output(delta(...delta(0, x1)...))``."""
    _check_n(n)
    if not isinstance(sample, DfaSample):
        raise InputError("the natural encoding needs a labeled-string sample")
    delta = Declaration(TRANSITION, ("Int", "Int"), "Int")
    output = Declaration(OUTPUT, ("Int",), "Bool")
    assertions = [in_range(delta(i, a), n, style)
                  for i in range(n) for a in range(len(sample.alphabet))]
    for word, label in sample.labeled():
        state = 0
        for a in word:
            state = delta(state, a)
        assertions.append(eq(output(state), label))
    return Formula((delta, output), assertions)


def _node_constants(apt: Apt):
    return [Declaration(f"pi_{q}", (), "Int") for q in range(apt.size)]


def encode_expressive(apt: Apt, n: int, style: AxiomStyle) -> Formula:
    """Prefix-tree encoding for DFAs.

    Assertion order: tree edges, node labels, node ranges, root pin.
    """
    _check_n(n)
    if apt.kind is not Kind.DFA:
        raise InputError(f"expected a dfa prefix tree, got {apt.kind}")
    delta = Declaration(TRANSITION, ("Int", "Int"), "Int")
    output = Declaration(OUTPUT, ("Int",), "Bool")
    pi = _node_constants(apt)
    assertions = [eq(delta(pi[p](), a), pi[q]()) for p, a, q in apt.edges()]
    assertions += [eq(output(pi[q]()), label) for q, label in sorted(apt.labels.items())]
    assertions += [in_range(c(), n, style) for c in pi]
    assertions.append(eq(pi[0](), 0))
    return Formula((delta, output, *pi), assertions)


def encode_transducer(apt: Apt, n: int, style: AxiomStyle) -> Formula:
    """Prefix-tree encoding for Moore and Mealy machines.

    Assertion order: tree edges, outputs (root output first for Moore),
    node ranges, root pin, output ranges over the whole ``[0, n) x inputs``
    grid.
    """
    _check_n(n)
    if not apt.kind.is_transducer:
        raise InputError(f"expected a moore or mealy prefix tree, got {apt.kind}")
    width, n_out = len(apt.input_alphabet), len(apt.output_alphabet)
    moore = apt.kind is Kind.MOORE
    delta = Declaration(TRANSITION, ("Int", "Int"), "Int")
    output = Declaration(OUTPUT, ("Int",) if moore else ("Int", "Int"), "Int")
    pi = _node_constants(apt)
    assertions = [eq(delta(pi[p](), a), pi[q]()) for p, a, q in apt.edges()]
    if moore:
        if apt.moore_root_output is not None:
            assertions.append(eq(output(pi[0]()), apt.moore_root_output))
        assertions += [eq(output(pi[q]()), label) for q, label in sorted(apt.labels.items())]
    else:
        assertions += [eq(output(pi[p](), a), apt.labels[q]) for p, a, q in apt.edges()]
    assertions += [in_range(c(), n, style) for c in pi]
    assertions.append(eq(pi[0](), 0))
    if moore:
        assertions += [in_range(output(i), n_out, style) for i in range(n)]
    else:
        assertions += [in_range(output(i, a), n_out, style)
                       for i in range(n) for a in range(width)]
    return Formula((delta, output, *pi), assertions)


def encode_apt(apt: Apt, n: int, style: AxiomStyle) -> Formula:
    if apt.kind is Kind.DFA:
        return encode_expressive(apt, n, style)
    return encode_transducer(apt, n, style)

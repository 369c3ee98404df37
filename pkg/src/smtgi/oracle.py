"""Exhaustive search for the smallest consistent machine on toy instances.

Shares no code with the encoders or the prefix tree: every candidate
transition table is simulated directly on the sample's strings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .alphabet import Kind
from .automata import Dfa, MealyMachine, MooreMachine
from .errors import BudgetExceeded, InputError
from .samples import DfaSample, TraceSample


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 4
    max_machines: int = 2_000_000

    def __post_init__(self):
        if self.max_n < 1 or self.max_machines < 1:
            raise InputError("oracle budget must be positive")


def _dfa_labels(delta, sample):
    forced = {}
    for word, label in sample.labeled():
        q = 0
        for a in word:
            q = delta[q][a]
        if forced.setdefault(q, label) != label:
            return None
    return forced


def _mealy_outputs(delta, sample):
    forced = {}
    for x, y in sample.traces:
        q = 0
        for a, o in zip(x, y):
            if forced.setdefault((q, a), o) != o:
                return None
            q = delta[q][a]
    return forced


def _moore_outputs(delta, sample):
    forced = {}
    for x, y in sample.traces:
        q = 0
        if forced.setdefault(0, y[0]) != y[0]:
            return None
        for a, o in zip(x, y[1:]):
            q = delta[q][a]
            if forced.setdefault(q, o) != o:
                return None
    return forced


def brute_force_minimal(sample, kind: Optional[Kind] = None,
                        budget: OracleBudget = OracleBudget()):
    """Return ``(machine, n)`` for the smallest consistent machine, or None
    if none exists with at most ``budget.max_n`` states.

    Labels/outputs that no sampled string pins down are set to false / 0.
    Raises BudgetExceeded once more than ``budget.max_machines`` transition
    tables would have to be examined.
    """
    kind = Kind(kind) if kind is not None else sample.kind
    if kind is not sample.kind:
        raise InputError(f"{sample.kind} sample cannot be learned as a {kind} machine")
    alphabet = sample.alphabet if isinstance(sample, DfaSample) else sample.input_alphabet
    width = len(alphabet)
    seen = 0
    for n in range(1, budget.max_n + 1):
        for flat in itertools.product(range(n), repeat=n * width):
            seen += 1
            if seen > budget.max_machines:
                raise BudgetExceeded(f"more than {budget.max_machines} candidates at n={n}")
            delta = [flat[q * width:(q + 1) * width] for q in range(n)]
            if kind is Kind.DFA:
                forced = _dfa_labels(delta, sample)
                if forced is not None:
                    acc = frozenset(q for q, v in forced.items() if v)
                    return Dfa(alphabet, n, delta, acc), n
            elif kind is Kind.MEALY:
                forced = _mealy_outputs(delta, sample)
                if forced is not None:
                    outs = [[forced.get((q, a), 0) for a in range(width)] for q in range(n)]
                    return MealyMachine(alphabet, sample.output_alphabet, n, delta, outs), n
            else:
                forced = _moore_outputs(delta, sample)
                if forced is not None:
                    outs = [forced.get(q, 0) for q in range(n)]
                    return MooreMachine(alphabet, sample.output_alphabet, n, delta, outs), n
    return None


def oracle_minimal_n(sample: DfaSample | TraceSample, budget: OracleBudget = OracleBudget()):
    found = brute_force_minimal(sample, budget=budget)
    return None if found is None else found[1]

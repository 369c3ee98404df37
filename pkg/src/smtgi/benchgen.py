"""Benchmark instances: the mod-k unary DFAs and random minimal Mealy machines
with W-method characterizing samples.

Random machines are drawn from ``random.Random(seed)`` (Mersenne Twister):
transition targets row by row with ``randrange(states)``, then outputs row
by row with ``randrange(outputs)``.  Candidates that are not minimal or have
unreachable states are discarded and the next candidate is drawn from the
same stream.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .alphabet import Alphabet, Kind, Word
from .automata import Dfa, MealyMachine, reachable_states
from .errors import GenerationError, InputError
from .samples import DfaSample, TraceSample

MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class ModBenchSpec:
    k: int
    max_len: int = 100

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"k must be at least 1, got {self.k}")
        if self.max_len < 0:
            raise InputError("max_len must be non-negative")


@dataclass(frozen=True)
class RandomMachineSpec:
    states: int
    inputs: int
    outputs: int
    seed: int = 0

    def __post_init__(self):
        if min(self.states, self.inputs, self.outputs) < 1:
            raise InputError("states, inputs and outputs must all be positive")


UNARY = Alphabet(("a",))


def gen_mod_dfa(k: int) -> Dfa:
    """Unary DFA accepting exactly the words whose length is a multiple of k."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    return Dfa(UNARY, k, [[(i + 1) % k] for i in range(k)], frozenset({0}))


def gen_mod_sample(spec: ModBenchSpec) -> DfaSample:
    words = [(0,) * i for i in range(spec.max_len + 1)]
    return DfaSample(UNARY,
                     frozenset(w for w in words if len(w) % spec.k == 0),
                     frozenset(w for w in words if len(w) % spec.k))


def distinguishing_words(machine: MealyMachine) -> dict:
    """Shortest separating input for every pair of inequivalent states.

    Pairs are refined level by level: a pair is split at level 1 if some
    input yields different outputs, and at level k+1 if some input leads
    to a pair split at level k.  Keys are ``(p, q)`` with ``p < q``.
    """
    width = len(machine.alphabet)
    split = {}
    for p, q in itertools.combinations(range(machine.n), 2):
        for a in range(width):
            if machine.outputs[p][a] != machine.outputs[q][a]:
                split[(p, q)] = (a,)
                break
    frontier = dict(split)
    while frontier:
        new = {}
        for p, q in itertools.combinations(range(machine.n), 2):
            if (p, q) in split:
                continue
            for a in range(width):
                s, t = sorted((machine.delta[p][a], machine.delta[q][a]))
                if (s, t) in frontier:
                    new[(p, q)] = (a,) + frontier[(s, t)]
                    break
        split.update(new)
        frontier = new
    return split


def is_minimal(machine: MealyMachine) -> bool:
    pairs = machine.n * (machine.n - 1) // 2
    return (len(reachable_states(machine)) == machine.n
            and len(distinguishing_words(machine)) == pairs)


def gen_random_mealy(spec: RandomMachineSpec) -> MealyMachine:
    rng = random.Random(spec.seed)
    inputs, outputs = Alphabet.of_size(spec.inputs), Alphabet.of_size(spec.outputs)
    for _ in range(MAX_ATTEMPTS):
        delta = [[rng.randrange(spec.states) for _ in range(spec.inputs)]
                 for _ in range(spec.states)]
        outs = [[rng.randrange(spec.outputs) for _ in range(spec.inputs)]
                for _ in range(spec.states)]
        machine = MealyMachine(inputs, outputs, spec.states, delta, outs)
        if is_minimal(machine):
            return machine
    raise GenerationError(f"no minimal reachable machine for {spec} in {MAX_ATTEMPTS} attempts")


def state_cover(machine) -> list[Word]:
    """Shortest access word of every state, found breadth-first in symbol order."""
    access = {0: ()}
    frontier = [0]
    while frontier:
        nxt = []
        for q in frontier:
            for a, t in enumerate(machine.delta[q]):
                if t not in access:
                    access[t] = access[q] + (a,)
                    nxt.append(t)
        frontier = nxt
    return [access[q] for q in sorted(access)]


def characterization_set(machine: MealyMachine) -> list[Word]:
    words = set(distinguishing_words(machine).values())
    if not words:
        words = {(0,)}
    return sorted(words, key=lambda w: (len(w), w))


def w_method_suite(machine: MealyMachine, extra_depth: int = 0) -> list[Word]:
    """Access words x every word of length <= extra_depth + 1 x W.

    Inputs that are proper prefixes of other suite inputs are dropped.
    """
    if extra_depth < 0:
        raise InputError("extra_depth must be non-negative")
    if len(reachable_states(machine)) != machine.n:
        raise InputError("machine has unreachable states")
    if not is_minimal(machine):
        raise InputError("machine is not minimal")
    width = len(machine.alphabet)
    middle = [w for length in range(extra_depth + 2)
              for w in itertools.product(range(width), repeat=length)]
    suite = {p + m + w for p in state_cover(machine) for m in middle
             for w in characterization_set(machine)}
    prefixes = {w[:i] for w in suite for i in range(len(w))}
    return sorted(suite - prefixes, key=lambda w: (len(w), w))


def characterizing_sample(machine: MealyMachine, extra_depth: int = 0) -> TraceSample:
    if machine.kind is not Kind.MEALY:
        raise InputError("characterizing samples are generated for mealy machines")
    suite = w_method_suite(machine, extra_depth)
    traces = tuple((x, machine.transduce(x)) for x in suite)
    return TraceSample(Kind.MEALY, machine.alphabet, machine.output_alphabet, traces)

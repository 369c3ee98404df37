"""Acceptance criteria 1-8; each test records one PASS/FAIL line for the run summary."""
import random
import time
from pathlib import Path

import pytest

from smtgi import (AxiomStyle, Kind, LearnOptions, TraceSample, build_apt_dfa, build_apt_traces,
                   emit_smtlib, encode_expressive, encode_natural, encode_transducer, equivalent,
                   is_consistent, learn_at_size, learn_minimal)
from smtgi.alphabet import Alphabet
from smtgi.benchgen import (ModBenchSpec, RandomMachineSpec, characterizing_sample, gen_mod_dfa,
                            gen_mod_sample, gen_random_mealy)
from smtgi.oracle import OracleBudget, brute_force_minimal
from smtgi.search import Encoding

import test_properties
from helpers import FLIPFLOP_SAMPLE, UNARY, mealy_as_moore_sample, random_dfa_sample

pytestmark = pytest.mark.slow

CONFIGS = [(e, s) for e in Encoding for s in AxiomStyle]
GOLDEN = Path(__file__).parent / "golden"


def _opts(solver, encoding, style, **kw):
    return LearnOptions(solver, encoding=encoding, style=style, **kw)


@pytest.fixture(scope="module")
def corpus():
    """100 seeded binary samples whose brute-force minimum is at most 3."""
    rng = random.Random(2024)
    out = []
    while len(out) < 100:
        sample = random_dfa_sample(rng, max_strings=12, max_len=6)
        found = brute_force_minimal(sample, budget=OracleBudget(max_n=3))
        if found is not None:
            out.append((sample, found[1]))
    return out


def test_criterion_1_mod_k_minimality(solver, criterion):
    start = time.perf_counter()
    bad = []
    for k in range(1, 7):
        sample = gen_mod_sample(ModBenchSpec(k, 30))
        for enc, style in CONFIGS:
            res = learn_minimal(sample, _opts(solver, enc, style))
            if res.minimal_n != k or not equivalent(res.machine, gen_mod_dfa(k))[0]:
                bad.append((k, enc.value, style.value, res.minimal_n))
    elapsed = time.perf_counter() - start
    ok = criterion(1, not bad, f"k=1..6 x 4 configs, {elapsed:.1f}s, failures={bad}")
    assert ok


def test_criterion_2_unsat_below_k(solver, criterion):
    bad = []
    for k in range(2, 7):
        sample = gen_mod_sample(ModBenchSpec(k, 30))
        for enc, style in CONFIGS:
            verdict = learn_at_size(sample, k - 1, _opts(solver, enc, style)).verdict
            if verdict != "unsat":
                bad.append((k, enc.value, style.value, verdict))
    assert criterion(2, not bad, f"k=2..6 x 4 configs at n=k-1, failures={bad}")


def test_criterion_3_oracle_agreement(solver, criterion, corpus):
    bad = []
    for i, (sample, expected) in enumerate(corpus):
        for enc, style in CONFIGS:
            res = learn_minimal(sample, _opts(solver, enc, style))
            if res.minimal_n != expected or not is_consistent(res.machine, sample):
                bad.append((i, enc.value, style.value, res.minimal_n, expected))
    sizes = sorted({n for _, n in corpus})
    assert criterion(3, not bad, f"{len(corpus)} samples (oracle sizes {sizes}), failures={bad}")


def test_criterion_4_configurations_agree(solver, criterion, corpus):
    bad = []
    for i, (sample, expected) in enumerate(corpus):
        for n in range(1, expected + 2):
            verdicts = {learn_at_size(sample, n, _opts(solver, enc, style)).verdict
                        for enc, style in CONFIGS}
            if len(verdicts) != 1:
                bad.append((i, n, verdicts))
    assert criterion(4, not bad, f"{len(corpus)} samples, n <= oracle+1, disagreements={bad}")


def _random_specs():
    return [RandomMachineSpec(2 + i % 4, 2 + i % 2, 2 + (i // 2) % 2, seed=i) for i in range(20)]


def test_criterion_5_mealy_roundtrip(solver, criterion):
    start = time.perf_counter()
    bad = []
    for spec in _random_specs():
        source = gen_random_mealy(spec)
        res = learn_minimal(characterizing_sample(source), LearnOptions(solver, kind=Kind.MEALY))
        if res.minimal_n != source.n or not equivalent(res.machine, source)[0]:
            bad.append((spec, res.minimal_n))
    elapsed = time.perf_counter() - start
    assert criterion(5, not bad, f"20 machines, |Q|<=5, {elapsed:.1f}s, failures={bad}")


def test_criterion_6_moore_parity(solver, criterion):
    bad = []
    for spec in _random_specs():
        source = gen_random_mealy(spec)
        sample = mealy_as_moore_sample(characterizing_sample(source), y0=0)
        res = learn_minimal(sample, LearnOptions(solver, kind=Kind.MOORE))
        for x, y in sample.traces:
            if res.machine.transduce(x) != (0,) + source.transduce(x):
                bad.append((spec, x))
                break
    assert criterion(6, not bad, f"20 machines as Moore traces, mismatches={bad}")


def test_criterion_7_property_suites(criterion):
    before = sum(test_properties.CASES.values())
    for prop in (test_properties.test_apt_invariants, test_properties.test_dfa_sample_roundtrip,
                 test_properties.test_trace_sample_roundtrip, test_properties.test_assertion_counts,
                 test_properties.test_verdict_antichain):
        prop()
    cases = sum(test_properties.CASES.values()) - before
    assert criterion(7, cases >= 1000, f"{cases} generated cases")


def test_criterion_8_golden_scripts(criterion):
    traces = TraceSample(Kind.MEALY, UNARY, Alphabet(("x", "y")),
                         [((0,), (0,)), ((0, 0), (0, 1))])
    cases = {
        "expressive_flipflop_n2_bool.smt2":
            encode_expressive(build_apt_dfa(FLIPFLOP_SAMPLE), 2, AxiomStyle.BOOL),
        "natural_flipflop_n2_bool.smt2": encode_natural(FLIPFLOP_SAMPLE, 2, AxiomStyle.BOOL),
        "mealy_xy_n2_ineq.smt2": encode_transducer(build_apt_traces(traces), 2, AxiomStyle.INEQ),
    }
    bad = [name for name, f in cases.items() if emit_smtlib(f) != (GOLDEN / name).read_text()]
    nine = emit_smtlib(cases["expressive_flipflop_n2_bool.smt2"]).count("(assert ") == 9
    assert criterion(8, not bad and nine, f"3 golden scripts, mismatches={bad}")

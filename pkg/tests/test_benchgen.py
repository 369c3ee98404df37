import itertools

import pytest

from smtgi import (Alphabet, GenerationError, InputError, Kind, LearnOptions, MealyMachine,
                   equivalent, format_machine, is_consistent, learn_minimal)
from smtgi.automata import reachable_states
from smtgi.benchgen import (ModBenchSpec, RandomMachineSpec, characterization_set,
                            characterizing_sample, gen_mod_dfa, gen_mod_sample, gen_random_mealy,
                            is_minimal, state_cover, w_method_suite)

from helpers import UNARY, alternating_mealy


def test_mod_dfa_examples():
    d1 = gen_mod_dfa(1)
    assert d1.n == 1 and d1.delta == ((0,),) and d1.accepting == {0}
    d2 = gen_mod_dfa(2)
    assert d2.delta == ((1,), (0,)) and d2.accepting == {0}
    assert gen_mod_dfa(3).delta == ((1,), (2,), (0,))
    with pytest.raises(InputError):
        gen_mod_dfa(0)


def test_mod_sample_examples():
    s = gen_mod_sample(ModBenchSpec(2, 3))
    assert s.positives == {(), (0, 0)} and s.negatives == {(0,), (0, 0, 0)}
    s = gen_mod_sample(ModBenchSpec(1, 2))
    assert len(s.positives) == 3 and not s.negatives
    s = gen_mod_sample(ModBenchSpec(5, 100))
    assert (len(s.positives), len(s.negatives)) == (21, 80)
    with pytest.raises(InputError):
        ModBenchSpec(0)


def test_mod_sample_consistent_with_mod_dfa():
    for k in range(1, 13):
        for max_len in (0, 7, 100):
            assert is_consistent(gen_mod_dfa(k), gen_mod_sample(ModBenchSpec(k, max_len)))


def test_single_state_machine():
    m = gen_random_mealy(RandomMachineSpec(1, 1, 1, seed=123))
    assert m == MealyMachine(Alphabet.of_size(1), Alphabet.of_size(1), 1, [[0]], [[0]])
    assert characterization_set(m) == [(0,)]
    assert w_method_suite(m) == [(0, 0)]


def test_unary_single_output_two_states_impossible():
    # every 2-state unary machine with one output collapses to one state
    for targets in itertools.product(range(2), repeat=2):
        m = MealyMachine(UNARY, UNARY, 2, [[t] for t in targets], [[0], [0]])
        assert not is_minimal(m)
    with pytest.raises(GenerationError):
        gen_random_mealy(RandomMachineSpec(2, 1, 1))


def test_random_mealy_is_deterministic_and_minimal():
    for seed in range(30):
        spec = RandomMachineSpec(2 + seed % 4, 1 + seed % 3, 2 + seed % 2, seed)
        m = gen_random_mealy(spec)
        assert format_machine(m) == format_machine(gen_random_mealy(spec))
        assert is_minimal(m)
        assert sorted(reachable_states(m)) == list(range(m.n))
    a = gen_random_mealy(RandomMachineSpec(4, 2, 2, seed=1))
    b = gen_random_mealy(RandomMachineSpec(4, 2, 2, seed=2))
    assert format_machine(a) != format_machine(b)


def test_alternating_characterizing_sample():
    alt = alternating_mealy()
    assert characterization_set(alt) == [(0,)]
    assert state_cover(alt) == [(), (0,)]
    sample = characterizing_sample(alt)
    traces = {alt.alphabet.decode(x): alt.output_alphabet.decode(y) for x, y in sample.traces}
    assert traces[("a", "a", "a")] == ("p", "q", "p")
    assert is_consistent(alt, sample)


def test_suite_has_no_proper_prefixes():
    m = gen_random_mealy(RandomMachineSpec(4, 2, 2, seed=7))
    suite = w_method_suite(m, extra_depth=1)
    for w in suite:
        assert not any(v != w and v == w[:len(v)] for v in suite)
    assert len(w_method_suite(m, 1)) > len(w_method_suite(m, 0))


def test_charsample_rejects_bad_machines():
    collapsible = MealyMachine(UNARY, UNARY, 2, [[1], [0]], [[0], [0]])
    with pytest.raises(InputError):
        characterizing_sample(collapsible)
    unreachable = MealyMachine(UNARY, Alphabet.of_size(2), 2, [[0], [0]], [[0], [1]])
    with pytest.raises(InputError):
        characterizing_sample(unreachable)
    with pytest.raises(InputError):
        w_method_suite(alternating_mealy(), extra_depth=-1)


def test_learning_from_charsample_recovers_source(solver):
    for seed in range(6):
        source = gen_random_mealy(RandomMachineSpec(3, 2, 2, seed))
        res = learn_minimal(characterizing_sample(source), LearnOptions(solver, kind=Kind.MEALY))
        assert res.minimal_n == 3
        assert equivalent(res.machine, source)[0]

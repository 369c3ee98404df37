import random

from smtgi import Alphabet, Dfa, DfaSample, Kind, MealyMachine, MooreMachine, TraceSample

UNARY = Alphabet(("a",))
BINARY = Alphabet.of_size(2)

# accepts "a", rejects ε and "aa": needs two states
FLIPFLOP_SAMPLE = DfaSample.from_words(UNARY, ["a"], ["", "aa"])
FLIPFLOP = Dfa(UNARY, 2, [[1], [0]], {1})


def alternating_mealy():
    """Unary Mealy machine printing p, q, p, q, ..."""
    return MealyMachine(UNARY, Alphabet(("p", "q")), 2, [[1], [0]], [[0], [1]])


def random_dfa_sample(rng: random.Random, max_strings=12, max_len=6) -> DfaSample:
    words = {tuple(rng.randrange(2) for _ in range(rng.randint(0, max_len)))
             for _ in range(rng.randint(1, max_strings))}
    pos = {w for w in words if rng.random() < 0.5}
    return DfaSample(BINARY, pos, words - pos)


def random_dfa(rng: random.Random, n, width=2) -> Dfa:
    alpha = Alphabet.of_size(width)
    delta = [[rng.randrange(n) for _ in range(width)] for _ in range(n)]
    return Dfa(alpha, n, delta, {q for q in range(n) if rng.random() < 0.5})


def random_mealy(rng: random.Random, n, width=2, outs=2) -> MealyMachine:
    delta = [[rng.randrange(n) for _ in range(width)] for _ in range(n)]
    out = [[rng.randrange(outs) for _ in range(width)] for _ in range(n)]
    return MealyMachine(Alphabet.of_size(width), Alphabet.of_size(outs), n, delta, out)


def random_moore(rng: random.Random, n, width=2, outs=2) -> MooreMachine:
    delta = [[rng.randrange(n) for _ in range(width)] for _ in range(n)]
    return MooreMachine(Alphabet.of_size(width), Alphabet.of_size(outs), n, delta,
                        [rng.randrange(outs) for _ in range(n)])


def mealy_as_moore_sample(sample: TraceSample, y0=0) -> TraceSample:
    """Prepend a shared initial output to every Mealy trace."""
    traces = [(x, (y0,) + y) for x, y in sample.traces]
    return TraceSample(Kind.MOORE, sample.input_alphabet, sample.output_alphabet, traces)

"""Minimal DFA / Moore / Mealy identification with an SMT solver."""
from .alphabet import Alphabet, Kind
from .apt import Apt, build_apt, build_apt_dfa, build_apt_traces
from .automata import (ConsistencyReport, Dfa, MealyMachine, MooreMachine, dfa_accepts,
                       equivalent, format_machine, is_consistent, parse_machine, to_dot, transduce)
from .encoding import (AxiomStyle, Formula, encode_expressive, encode_natural,
                       encode_transducer, encoding_stats)
from .errors import (BoundExceeded, BudgetExceeded, ConflictError, GenerationError, InputError,
                     ParseError, SmtgiError, SolverError, UnknownVerdict)
from .benchgen import (ModBenchSpec, RandomMachineSpec, characterizing_sample, gen_mod_dfa,
                       gen_mod_sample, gen_random_mealy)
from .oracle import OracleBudget, brute_force_minimal, oracle_minimal_n
from .samples import (DfaSample, TraceSample, metrics, parse_dfa_sample, parse_sample,
                      parse_trace_sample, serialize_dfa_sample, serialize_sample,
                      serialize_trace_sample)
from .search import Encoding, LearnOptions, LearnResult, learn_at_size, learn_minimal
from .solver import SolverConfig, Verdict, check, decode_machine, emit_smtlib

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Apt",
    "AxiomStyle",
    "BoundExceeded",
    "BudgetExceeded",
    "ConflictError",
    "ConsistencyReport",
    "Dfa",
    "DfaSample",
    "Encoding",
    "Formula",
    "GenerationError",
    "InputError",
    "Kind",
    "LearnOptions",
    "LearnResult",
    "MealyMachine",
    "ModBenchSpec",
    "MooreMachine",
    "OracleBudget",
    "ParseError",
    "RandomMachineSpec",
    "SmtgiError",
    "SolverConfig",
    "SolverError",
    "TraceSample",
    "UnknownVerdict",
    "Verdict",
    "brute_force_minimal",
    "build_apt",
    "build_apt_dfa",
    "build_apt_traces",
    "characterizing_sample",
    "check",
    "decode_machine",
    "dfa_accepts",
    "emit_smtlib",
    "encode_expressive",
    "encode_natural",
    "encode_transducer",
    "encoding_stats",
    "equivalent",
    "format_machine",
    "gen_mod_dfa",
    "gen_mod_sample",
    "gen_random_mealy",
    "is_consistent",
    "learn_at_size",
    "learn_minimal",
    "metrics",
    "oracle_minimal_n",
    "parse_dfa_sample",
    "parse_machine",
    "parse_sample",
    "parse_trace_sample",
    "serialize_dfa_sample",
    "serialize_sample",
    "serialize_trace_sample",
    "to_dot",
    "transduce",
]

"""Find the smallest consistent machine by growing the state bound one at a time."""
from __future__ import annotations

import csv
import io
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from .alphabet import Kind
from .apt import Apt, apt_consistent, build_apt
from .automata import is_consistent
from .encoding import AxiomStyle, Formula, encode_apt, encode_natural
from .errors import BoundExceeded, InputError, SolverError, UnknownVerdict
from .samples import DfaSample, TraceSample
from .solver import SolverConfig, check, decode_machine, emit_smtlib

log = logging.getLogger(__name__)


class Encoding(str, Enum):
    NATURAL = "natural"
    EXPRESSIVE = "expressive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class LearnOptions:
    solver: SolverConfig
    kind: Kind = Kind.DFA
    encoding: Encoding = Encoding.EXPRESSIVE
    style: AxiomStyle = AxiomStyle.BOOL
    start_n: int = 1
    max_n: Optional[int] = None
    emit_dir: Optional[Path] = None     # dump each script as <name>-n<k>.smt2
    name: str = "sample"

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "encoding", Encoding(self.encoding))
        object.__setattr__(self, "style", AxiomStyle(self.style))
        if self.start_n < 1:
            raise InputError("start_n must be at least 1")
        if self.max_n is not None and self.max_n < self.start_n:
            raise InputError("max_n must not be below start_n")
        if self.encoding is Encoding.NATURAL and self.kind is not Kind.DFA:
            raise InputError("the natural encoding only learns DFAs")


@dataclass(frozen=True)
class SizeStat:
    n: int
    verdict: str
    time_s: float
    assertions: int


@dataclass
class SizeResult:
    verdict: str
    machine: object = None
    stat: Optional[SizeStat] = None


@dataclass
class LearnResult:
    machine: object
    minimal_n: int
    stats: list = field(default_factory=list)

    @property
    def total_time(self) -> float:
        return sum(s.time_s for s in self.stats)


class _Problem:
    """A sample (or bare prefix tree) prepared once for repeated encoding."""

    def __init__(self, data: Union[DfaSample, TraceSample, Apt], opts: LearnOptions):
        if data.kind is not opts.kind:
            raise InputError(f"{data.kind} input does not match requested kind {opts.kind}")
        if isinstance(data, Apt):
            if opts.encoding is Encoding.NATURAL:
                raise InputError("the natural encoding needs the sample, not a prefix tree")
            self.sample, self.apt = None, data
        else:
            self.sample = data
            self.apt = None if opts.encoding is Encoding.NATURAL else build_apt(data)
        self.opts = opts

    @property
    def alphabets(self):
        src = self.apt if self.apt is not None else self.sample
        if isinstance(src, DfaSample):
            return src.alphabet, None
        return src.input_alphabet, src.output_alphabet

    def encode(self, n: int) -> Formula:
        if self.opts.encoding is Encoding.NATURAL:
            return encode_natural(self.sample, n, self.opts.style)
        return encode_apt(self.apt, n, self.opts.style)

    def verify(self, machine):
        if self.sample is not None:
            report = is_consistent(machine, self.sample)
            bad = None if report.ok else report.word
        else:
            bad = apt_consistent(machine, self.apt)
        if bad is not None:
            raise SolverError(f"decoded machine contradicts the sample on {list(bad)}")

    def solve(self, n: int) -> SizeResult:
        start = time.perf_counter()
        formula = self.encode(n)
        if self.opts.emit_dir is not None:
            out = Path(self.opts.emit_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{self.opts.name}-n{n}.smt2").write_text(
                emit_smtlib(formula, self.opts.solver.logic_override))
        verdict = check(formula, self.opts.solver)
        machine = None
        try:
            if verdict.sat:
                alphabet, outputs = self.alphabets
                machine = decode_machine(verdict.model, self.opts.kind, n, alphabet, outputs)
        finally:
            verdict.close()
        elapsed = time.perf_counter() - start
        status = verdict.status if verdict.reason != "timeout" else "timeout"
        stat = SizeStat(n, status, elapsed, len(formula.assertions))
        log.debug("n=%d %s %.3fs", n, status, elapsed)
        if machine is not None:
            self.verify(machine)
        return SizeResult(verdict.status, machine, stat)


def learn_at_size(data, n: int, opts: LearnOptions) -> SizeResult:
    """One check: is there a consistent machine with at most ``n`` states?"""
    return _Problem(data, opts).solve(n)


def learn_minimal(data, opts: LearnOptions) -> LearnResult:
    """Try ``n = start_n, start_n + 1, ...`` until the encoding is satisfiable.

    If the very first bound tried is already satisfiable and above 1, smaller
    bounds are tried downwards until one is unsatisfiable, so the result is
    minimal regardless of ``start_n``.
    """
    problem = _Problem(data, opts)
    stats = []

    def step(n):
        res = problem.solve(n)
        stats.append(res.stat)
        if res.verdict == "unknown":
            raise UnknownVerdict(f"solver gave no answer at n={n} ({res.stat.verdict})", stats)
        return res

    n = opts.start_n
    while True:
        if opts.max_n is not None and n > opts.max_n:
            raise BoundExceeded(f"no consistent machine with at most {opts.max_n} states", stats)
        res = step(n)
        if res.verdict == "sat":
            break
        n += 1
    best, best_n = res.machine, n
    if n == opts.start_n:
        while best_n > 1:
            lower = step(best_n - 1)
            if lower.verdict != "sat":
                break
            best, best_n = lower.machine, best_n - 1
    stats.sort(key=lambda s: s.n)
    return LearnResult(best, best_n, stats)


def stats_csv(stats) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "verdict", "time_ms", "assertions"])
    for s in stats:
        writer.writerow([s.n, s.verdict, round(s.time_s * 1000, 3), s.assertions])
    return buf.getvalue()

"""Talk to an external SMT solver over SMT-LIB2 on its standard streams."""
from __future__ import annotations

import logging
import os
import selectors
import shlex
import subprocess
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .alphabet import Alphabet, Kind
from .automata import Dfa, MealyMachine, MooreMachine
from .encoding import OUTPUT, TRANSITION, App, Formula, Term, term_text
from .errors import SolverError

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 600.0


@dataclass(frozen=True)
class SolverConfig:
    command: tuple
    timeout: float = DEFAULT_TIMEOUT
    logic_override: Optional[str] = None

    def __post_init__(self):
        cmd = self.command
        if isinstance(cmd, str):
            cmd = shlex.split(cmd)
        object.__setattr__(self, "command", tuple(cmd))
        if not self.command:
            raise SolverError("empty solver command")
        if not self.timeout > 0:
            raise SolverError("solver timeout must be positive")


def emit_smtlib(formula: Formula, logic: Optional[str] = None) -> str:
    lines = [f"(set-logic {logic or formula.logic_hint})"]
    for d in formula.declarations:
        lines.append(f"(declare-fun {d.name} ({' '.join(d.arg_sorts)}) {d.sort})")
    lines += [f"(assert {term_text(t)})" for t in formula.assertions]
    lines.append("(check-sat)")
    return "\n".join(lines) + "\n"


# -- s-expressions ---------------------------------------------------------------

def _split_sexpr(buf: str) -> Optional[tuple[str, str]]:
    """Cut the first complete s-expression off ``buf``; None if more input is needed."""
    i = 0
    while i < len(buf) and buf[i].isspace():
        i += 1
    if i == len(buf):
        return None
    if buf[i] != "(":
        j = i
        while j < len(buf) and not buf[j].isspace() and buf[j] not in "()":
            j += 1
        if j == len(buf):
            return None
        return buf[i:j], buf[j:]
    depth, j = 0, i
    while j < len(buf):
        c = buf[j]
        if c == '"':
            j = buf.find('"', j + 1)
            if j < 0:
                return None
        elif c == "|":
            j = buf.find("|", j + 1)
            if j < 0:
                return None
        elif c == "(":
            depth += 1
        elif c == ")":
            depth -= 1
            if depth == 0:
                return buf[i:j + 1], buf[j + 1:]
        j += 1
    return None


def parse_sexpr(text: str):
    """Nested lists of atom strings."""
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append(c)
            i += 1
        elif c in '"|':
            j = text.index(c, i + 1)
            tokens.append(text[i:j + 1])
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append(text[i:j])
            i = j
    stack = [[]]
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok == ")":
            if len(stack) == 1:
                raise SolverError(f"unbalanced solver response: {text[:200]!r}")
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    if len(stack) != 1 or len(stack[0]) != 1:
        raise SolverError(f"malformed solver response: {text[:200]!r}")
    return stack[0][0]


def _value(sexpr):
    if sexpr == "true":
        return True
    if sexpr == "false":
        return False
    if isinstance(sexpr, str) and sexpr.isdigit():
        return int(sexpr)
    if isinstance(sexpr, list) and len(sexpr) == 2 and sexpr[0] == "-" and str(sexpr[1]).isdigit():
        return -int(sexpr[1])
    raise SolverError(f"cannot interpret solver value {sexpr!r}")


# -- processes -------------------------------------------------------------------

class SolverTimeout(Exception):
    pass


class _Process:
    def __init__(self, config: SolverConfig):
        self.config = config
        self.transcript: list[str] = []
        try:
            self.proc = subprocess.Popen(
                list(config.command), stdin=subprocess.PIPE, stdout=subprocess.PIPE,
                stderr=subprocess.DEVNULL)
        except OSError as exc:
            raise SolverError(f"cannot start solver {' '.join(config.command)!r}: {exc}") from exc
        self._buf = ""
        self._sel = selectors.DefaultSelector()
        self._sel.register(self.proc.stdout, selectors.EVENT_READ)

    def send(self, text: str):
        try:
            self.proc.stdin.write(text.encode())
            self.proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise SolverError(f"solver closed its input: {self._excerpt()}") from exc

    def response(self, deadline: float) -> str:
        while True:
            cut = _split_sexpr(self._buf)
            if cut is not None:
                text, self._buf = cut
                self.transcript.append(text)
                return text
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise SolverTimeout
            if not self._sel.select(remaining):
                raise SolverTimeout
            chunk = os.read(self.proc.stdout.fileno(), 65536)
            if not chunk:
                if self._buf.strip():
                    # final atom without a trailing newline
                    text, self._buf = self._buf.strip(), ""
                    self.transcript.append(text)
                    return text
                raise SolverError(f"solver exited unexpectedly: {self._excerpt()}")
            self._buf += chunk.decode(errors="replace")

    def _excerpt(self):
        return " ".join(self.transcript[-5:])[-500:] or "<no output>"

    def close(self):
        if self.proc.poll() is None:
            try:
                self.send("(exit)\n")
                self.proc.stdin.close()
                self.proc.wait(timeout=1)
            except (SolverError, OSError, subprocess.TimeoutExpired):
                self.proc.kill()
                self.proc.wait()
        self._sel.close()
        self.proc.stdout.close()

    def kill(self):
        self.proc.kill()
        self.proc.wait()
        self._sel.close()
        self.proc.stdout.close()


class Model:
    """A satisfying assignment, queried lazily through ``get-value``."""

    def __init__(self, process: _Process):
        self._process = process

    def evaluate(self, terms: Sequence[Term]) -> list:
        if not terms:
            return []
        if self._process is None:
            raise SolverError("model already closed")
        proc = self._process
        proc.send("(get-value (" + " ".join(term_text(t) for t in terms) + "))\n")
        try:
            text = proc.response(time.monotonic() + proc.config.timeout)
        except SolverTimeout:
            self.close()
            raise SolverError("solver timed out answering get-value") from None
        reply = parse_sexpr(text)
        if not isinstance(reply, list) or (reply and reply[0] == "error"):
            raise SolverError(f"get-value failed: {text[:500]}")
        if len(reply) != len(terms) or any(not isinstance(p, list) or len(p) != 2 for p in reply):
            raise SolverError(f"unexpected get-value reply: {text[:500]}")
        return [_value(p[1]) for p in reply]

    def close(self):
        if self._process is not None:
            self._process.close()
            self._process = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


@dataclass
class Verdict:
    status: str                      # "sat", "unsat" or "unknown"
    model: Optional[Model] = None
    reason: Optional[str] = None

    @property
    def sat(self) -> bool:
        return self.status == "sat"

    def close(self):
        if self.model is not None:
            self.model.close()


def check(formula: Formula, config: SolverConfig) -> Verdict:
    """Run ``check-sat`` on a fresh solver process.

    On ``sat`` the process is kept alive behind the returned model; close the
    verdict when done with it.
    """
    script = emit_smtlib(formula, config.logic_override)
    proc = _Process(config)
    deadline = time.monotonic() + config.timeout
    try:
        proc.send(script)
        text = proc.response(deadline)
    except SolverTimeout:
        proc.kill()
        return Verdict("unknown", reason="timeout")
    except BaseException:
        proc.kill()
        raise
    if text == "sat":
        return Verdict("sat", Model(proc))
    proc.close()
    if text == "unsat":
        return Verdict("unsat")
    if text == "unknown":
        return Verdict("unknown", reason="solver answered unknown")
    raise SolverError(f"unexpected solver response: {text[:500]}")


def decode_machine(model: Model, kind: Kind, n: int, alphabet: Alphabet,
                   output_alphabet: Optional[Alphabet] = None):
    """Read ``delta`` and ``output`` on the grid ``[0, n) x inputs`` into a machine.

    Transition targets outside ``[0, n)`` (left free by the prefix-tree
    encodings) are redirected to state 0.
    """
    kind = Kind(kind)
    width = len(alphabet)
    grid = [(i, a) for i in range(n) for a in range(width)]
    terms = [App(TRANSITION, (i, a)) for i, a in grid]
    if kind is Kind.MEALY:
        terms += [App(OUTPUT, (i, a)) for i, a in grid]
    else:
        terms += [App(OUTPUT, (i,)) for i in range(n)]
    values = model.evaluate(terms)
    targets, outs = values[:len(grid)], values[len(grid):]
    delta = [[0] * width for _ in range(n)]
    for (i, a), t in zip(grid, targets):
        if isinstance(t, bool):
            raise SolverError(f"delta({i}, {a}) evaluated to a boolean")
        delta[i][a] = t if 0 <= t < n else 0
    if kind is Kind.DFA:
        return Dfa(alphabet, n, delta, frozenset(i for i, v in enumerate(outs) if v is True))

    def clamp(v):
        if isinstance(v, bool):
            raise SolverError("output evaluated to a boolean")
        return v if 0 <= v < len(output_alphabet) else 0

    if kind is Kind.MOORE:
        return MooreMachine(alphabet, output_alphabet, n, delta, [clamp(v) for v in outs])
    rows = [[clamp(outs[i * width + a]) for a in range(width)] for i in range(n)]
    return MealyMachine(alphabet, output_alphabet, n, delta, rows)

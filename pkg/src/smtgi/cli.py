"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 size bound exhausted or
solver gave no answer, 3 machines are not equivalent.
"""
from __future__ import annotations

import csv
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import click

from .alphabet import Kind
from .automata import equivalent, format_machine, parse_machine, to_dot
from .benchgen import (ModBenchSpec, RandomMachineSpec, characterizing_sample, gen_mod_sample,
                       gen_random_mealy)
from .encoding import AxiomStyle
from .errors import BoundExceeded, SmtgiError, UnknownVerdict
from .oracle import OracleBudget, brute_force_minimal
from .samples import parse_dfa_sample, parse_trace_sample, serialize_sample
from .search import Encoding, LearnOptions, learn_minimal, stats_csv
from .solver import DEFAULT_TIMEOUT, SolverConfig

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_INEQUIVALENT = 0, 1, 2, 3
BENCH_HEADER = ["instance", "encoding", "axioms", "n", "repeat", "time_ms", "verdict"]
ALL_CONFIGS = "natural-bool,natural-ineq,expressive-bool,expressive-ineq"


def _solver(command, timeout_s) -> SolverConfig:
    command = command or os.environ.get("SMT_SOLVER_CMD")
    if not command:
        raise click.UsageError("no solver: pass --solver or set SMT_SOLVER_CMD")
    return SolverConfig(command, timeout=timeout_s)


def _write(path, text):
    if path is None or str(path) == "-":
        click.echo(text, nl=False)
    else:
        Path(path).write_text(text)


def _read_sample(path, kind: Kind):
    text = Path(path).read_text()
    if kind is Kind.DFA:
        return parse_dfa_sample(text)
    sample = parse_trace_sample(text)
    if sample.kind is not kind:
        raise click.UsageError(f"{path} holds {sample.kind} traces, not {kind}")
    return sample


solver_option = click.option("--solver", "solver_cmd", metavar="CMD",
                             help="solver command line speaking SMT-LIB2 on stdin, e.g. 'z3 -in' "
                                  "(default: $SMT_SOLVER_CMD)")
timeout_option = click.option("--timeout-s", type=click.FloatRange(min=0, min_open=True),
                              default=DEFAULT_TIMEOUT, show_default=True,
                              help="per-check solver timeout in seconds")


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="log every size bound tried")
def cli(verbose):
    """Learn minimal DFAs, Moore and Mealy machines with an SMT solver."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.option("--kind", type=click.Choice([k.value for k in Kind]), default="dfa", show_default=True)
@click.option("--encoding", type=click.Choice([e.value for e in Encoding]), default="expressive",
              show_default=True)
@click.option("--axioms", type=click.Choice([s.value for s in AxiomStyle]), default="bool",
              show_default=True)
@click.option("--in", "in_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="machine file (default stdout)")
@solver_option
@timeout_option
@click.option("--max-n", type=click.IntRange(min=1))
@click.option("--emit-smt", type=click.Path(file_okay=False), help="dump <basename>-n<k>.smt2 per bound")
@click.option("--stats", "stats_path", type=click.Path(dir_okay=False), help="per-bound CSV")
def learn(kind, encoding, axioms, in_path, out_path, solver_cmd, timeout_s, max_n, emit_smt,
          stats_path):
    """Learn a minimal machine consistent with a sample file."""
    kind = Kind(kind)
    sample = _read_sample(in_path, kind)
    opts = LearnOptions(_solver(solver_cmd, timeout_s), kind, Encoding(encoding),
                        AxiomStyle(axioms), max_n=max_n,
                        emit_dir=Path(emit_smt) if emit_smt else None,
                        name=Path(in_path).stem)
    start = time.perf_counter()
    try:
        result = learn_minimal(sample, opts)
    except (BoundExceeded, UnknownVerdict) as exc:
        if stats_path:
            Path(stats_path).write_text(stats_csv(exc.stats))
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_BOUND
    if stats_path:
        Path(stats_path).write_text(stats_csv(result.stats))
    if out_path:
        Path(out_path).write_text(format_machine(result.machine))
    else:
        click.echo(format_machine(result.machine), nl=False)
    click.echo(f"minimal_n {result.minimal_n}")
    click.echo(f"time_s {time.perf_counter() - start:.3f}")
    return EXIT_OK


@cli.group()
def gen():
    """Generate benchmark samples and machines."""


@gen.command("mod")
@click.option("--k", type=int, required=True)
@click.option("--max-len", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False))
def gen_mod(k, max_len, out_path):
    """Exhaustive unary sample labeled by |x| mod k == 0."""
    _write(out_path, serialize_sample(gen_mod_sample(ModBenchSpec(k, max_len))))
    return EXIT_OK


@gen.command("random-mealy")
@click.option("--states", type=int, required=True)
@click.option("--inputs", type=int, required=True)
@click.option("--outputs", type=int, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False))
def gen_random(states, inputs, outputs, seed, out_path):
    """Seeded random minimal Mealy machine."""
    _write(out_path, format_machine(gen_random_mealy(RandomMachineSpec(states, inputs, outputs, seed))))
    return EXIT_OK


@gen.command("charsample")
@click.option("--machine", "machine_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--extra-depth", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False))
def gen_charsample(machine_path, extra_depth, out_path):
    """W-method trace sample of a minimal Mealy machine."""
    machine = parse_machine(Path(machine_path).read_text())
    _write(out_path, serialize_sample(characterizing_sample(machine, extra_depth)))
    return EXIT_OK


def _bench_cell(k, max_len, encoding, style, repeat, solver):
    sample = gen_mod_sample(ModBenchSpec(k, max_len))
    opts = LearnOptions(solver, Kind.DFA, encoding, style)
    start = time.perf_counter()
    try:
        result = learn_minimal(sample, opts)
        n, verdict = result.minimal_n, "sat"
    except UnknownVerdict as exc:
        n = ""
        verdict = "timeout" if exc.stats and exc.stats[-1].verdict == "timeout" else "unknown"
    elapsed = (time.perf_counter() - start) * 1000
    return [f"mod{k}", encoding.value, style.value, n, repeat, f"{elapsed:.1f}", verdict]


def _configs(text):
    out = []
    for item in text.split(","):
        enc, _, style = item.strip().partition("-")
        try:
            out.append((Encoding(enc), AxiomStyle(style)))
        except ValueError:
            raise click.BadParameter(f"unknown configuration {item!r}", param_hint="--configs")
    return out


@cli.command()
@click.option("--suite", type=click.Choice(["mod"]), default="mod", show_default=True)
@click.option("--k-min", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--k-max", type=click.IntRange(min=1), default=12, show_default=True)
@click.option("--max-len", type=click.IntRange(min=0), default=100, show_default=True)
@click.option("--repeats", type=click.IntRange(min=1), default=5, show_default=True)
@click.option("--configs", default=ALL_CONFIGS, show_default=True,
              help="comma-separated <natural|expressive>-<bool|ineq>")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="CSV file (default stdout)")
@solver_option
@timeout_option
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
def bench(suite, k_min, k_max, max_len, repeats, configs, out_path, solver_cmd, timeout_s, jobs):
    """Time every configuration on the mod-k family; one CSV row per run."""
    solver = _solver(solver_cmd, timeout_s)
    cells = [(k, max_len, enc, style, r, solver)
             for k in range(k_min, k_max + 1)
             for enc, style in _configs(configs)
             for r in range(1, repeats + 1)]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        rows = list(pool.map(lambda cell: _bench_cell(*cell), cells))
    handle = open(out_path, "w", newline="") if out_path else sys.stdout
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(BENCH_HEADER)
        writer.writerows(rows)
    finally:
        if out_path:
            handle.close()
    return EXIT_OK


@cli.command("check-equiv")
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
def check_equiv(first, second):
    """Exit 0 if two machine files are equivalent, 3 with a counterexample if not."""
    m1 = parse_machine(Path(first).read_text())
    m2 = parse_machine(Path(second).read_text())
    same, word = equivalent(m1, m2)
    if same:
        click.echo("equivalent")
        return EXIT_OK
    click.echo("counterexample: " + (" ".join(m1.alphabet.decode(word)) or "ε"))
    return EXIT_INEQUIVALENT


@cli.command()
@click.option("--kind", type=click.Choice([k.value for k in Kind]), default="dfa", show_default=True)
@click.option("--in", "in_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--max-n", type=click.IntRange(min=1), default=4, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False))
def oracle(kind, in_path, max_n, out_path):
    """Brute-force the minimal machine of a tiny sample (for spot checks)."""
    sample = _read_sample(in_path, Kind(kind))
    found = brute_force_minimal(sample, budget=OracleBudget(max_n=max_n))
    if found is None:
        click.echo(f"error: no consistent machine with at most {max_n} states", err=True)
        return EXIT_BOUND
    machine, n = found
    if out_path:
        Path(out_path).write_text(format_machine(machine))
    click.echo(f"minimal_n {n}")
    return EXIT_OK


@cli.command()
@click.argument("machine_path", type=click.Path(exists=True, dir_okay=False))
def dot(machine_path):
    """Print a machine file as Graphviz DOT."""
    click.echo(to_dot(parse_machine(Path(machine_path).read_text())), nl=False)
    return EXIT_OK


def run(argv=None) -> int:
    try:
        code = cli.main(args=argv, prog_name="smtgi", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_INPUT
    except click.Abort:
        return EXIT_INPUT
    except (SmtgiError, OSError) as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_INPUT
    return code if isinstance(code, int) else EXIT_OK


def main():
    sys.exit(run())

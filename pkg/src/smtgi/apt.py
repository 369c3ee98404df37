"""Augmented prefix tree: the tree-shaped partial machine spelled out by a sample.

Nodes are numbered breadth-first (shorter prefixes first, siblings by symbol
index), so the same sample always yields the same tree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabet import Alphabet, Kind, Word
from .errors import ConflictError, InputError
from .samples import DfaSample, TraceSample


@dataclass(frozen=True)
class Apt:
    kind: Kind
    input_alphabet: Alphabet
    output_alphabet: Optional[Alphabet]
    prefixes: tuple          # node -> the word leading to it; node 0 is the root
    children: tuple          # node -> {symbol: child}
    parents: tuple           # node -> parent node (-1 for the root)
    labels: dict             # node -> bool (dfa) or output index (transducers)
    moore_root_output: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.prefixes)

    def edges(self):
        """Yield ``(parent, symbol, child)`` in child order."""
        for child in range(1, self.size):
            yield self.parents[child], self.prefixes[child][-1], child

    def node(self, word) -> int:
        q = 0
        for a in word:
            q = self.children[q][a]
        return q

    def to_dot(self) -> str:
        lines = ["digraph apt {"]
        for q, word in enumerate(self.prefixes):
            text = " ".join(self.input_alphabet.decode(word)) or "ε"
            label = self.labels.get(q)
            if self.kind is Kind.DFA:
                color = {True: "green", False: "red", None: "gray"}[label]
            else:
                if label is not None:
                    text += "/" + self.output_alphabet.name(label)
                color = "black"
            lines.append(f'  {q} [label="{text}", color={color}];')
        for p, a, q in self.edges():
            lines.append(f'  {p} -> {q} [label="{self.input_alphabet.name(a)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _tree(words) -> tuple[tuple, tuple, tuple, dict]:
    prefixes = {()}
    for w in words:
        prefixes.update(w[:i] for i in range(1, len(w) + 1))
    ordered = tuple(sorted(prefixes, key=lambda w: (len(w), w)))
    index = {w: q for q, w in enumerate(ordered)}
    children = [dict() for _ in ordered]
    parents = [-1] * len(ordered)
    for w in ordered[1:]:
        parents[index[w]] = index[w[:-1]]
        children[index[w[:-1]]][w[-1]] = index[w]
    return ordered, tuple(children), tuple(parents), index


def build_apt_dfa(sample: DfaSample) -> Apt:
    prefixes, children, parents, index = _tree(sample.positives | sample.negatives)
    labels = {index[w]: label for w, label in sample.labeled()}
    return Apt(Kind.DFA, sample.alphabet, None, prefixes, children, parents, labels)


def build_apt_traces(sample: TraceSample) -> Apt:
    prefixes, children, parents, index = _tree(x for x, _ in sample.traces)
    moore = sample.kind is Kind.MOORE
    labels: dict[int, int] = {}
    for x, y in sample.traces:
        tail = y[1:] if moore else y
        for i in range(1, len(x) + 1):
            q = index[x[:i]]
            if labels.setdefault(q, tail[i - 1]) != tail[i - 1]:
                raise ConflictError(
                    f"prefix {list(x[:i])} gets outputs {labels[q]} and {tail[i - 1]}", x[:i])
    return Apt(sample.kind, sample.input_alphabet, sample.output_alphabet,
               prefixes, children, parents, labels, sample.initial_output)


def build_apt(sample) -> Apt:
    if isinstance(sample, DfaSample):
        return build_apt_dfa(sample)
    if isinstance(sample, TraceSample):
        return build_apt_traces(sample)
    raise InputError(f"cannot build a prefix tree from {type(sample).__name__}")


def apt_consistent(machine, apt: Apt) -> Optional[Word]:
    """Return the first tree prefix whose label the machine contradicts, or None."""
    if machine.kind is not apt.kind:
        raise InputError(f"cannot check a {machine.kind} machine against a {apt.kind} tree")
    if apt.moore_root_output is not None and machine.outputs[0] != apt.moore_root_output:
        return ()
    states = [0] * apt.size
    for p, a, q in apt.edges():
        states[q] = machine.delta[states[p]][a]
        label = apt.labels.get(q)
        if apt.kind is Kind.MEALY:
            got = machine.outputs[states[p]][a]
        elif apt.kind is Kind.MOORE:
            got = machine.outputs[states[q]]
        else:
            continue
        if got != label:
            return apt.prefixes[q]
    if apt.kind is Kind.DFA:
        for q, label in sorted(apt.labels.items()):
            if (states[q] in machine.accepting) != label:
                return apt.prefixes[q]
    return None

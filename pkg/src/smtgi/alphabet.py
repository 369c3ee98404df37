from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import InputError

Word = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of symbol names; a symbol's position is its index."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(str(s) for s in self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            raise InputError(f"duplicate symbols in alphabet {self.symbols}")
        for s in self.symbols:
            if not s or any(c.isspace() for c in s) or "#" in s:
                raise InputError(f"invalid symbol name {s!r}")

    @classmethod
    def of_size(cls, size: int) -> Alphabet:
        """Alphabet ``0 .. size-1`` as used by the integer sample formats."""
        return cls(tuple(str(i) for i in range(size)))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def index(self, name: str) -> int:
        try:
            return self.symbols.index(name)
        except ValueError:
            raise InputError(f"unknown symbol {name!r}") from None

    def name(self, index: int) -> str:
        return self.symbols[index]

    def encode(self, word: Iterable[int | str]) -> Word:
        """Turn a sequence of names and/or indices into an index tuple.

        Strings are looked up by name (so ``"ab"`` works for one-letter
        alphabets), integers are range-checked.
        """
        out = []
        for pos, sym in enumerate(word):
            if isinstance(sym, str):
                if sym not in self.symbols:
                    raise InputError(f"unknown symbol {sym!r} at position {pos}")
                out.append(self.symbols.index(sym))
            elif isinstance(sym, int) and not isinstance(sym, bool) and 0 <= sym < len(self):
                out.append(sym)
            else:
                raise InputError(f"unknown symbol {sym!r} at position {pos}")
        return tuple(out)

    def decode(self, word: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.symbols[i] for i in word)


class Kind(str, Enum):
    DFA = "dfa"
    MOORE = "moore"
    MEALY = "mealy"

    def __str__(self):
        return self.value

    @property
    def is_transducer(self) -> bool:
        return self is not Kind.DFA

"""Alphabets and substitution/gap scoring for local alignment."""

from __future__ import annotations

from dataclasses import dataclass

SUB_MIN = -127
SUB_MAX = 127


class SymbolOutOfAlphabet(ValueError):
    """A residue or symbol index falls outside the configured alphabet."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered residue alphabet with dense indices and an optional wildcard.

    The wildcard, when present, is an ordinary member of the alphabet whose
    substitution row is built to score the mismatch value against everything
    (it never matches positively).
    """

    symbols: str
    wildcard: str | None = None

    def __post_init__(self) -> None:
        if not self.symbols:
            raise ValueError("alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be unique")
        if self.wildcard is not None and self.wildcard not in self.symbols:
            raise ValueError("wildcard must be one of the alphabet symbols")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index_of(self, ch: str) -> int:
        i = self.symbols.find(ch)
        if i < 0:
            raise SymbolOutOfAlphabet(f"symbol {ch!r} not in alphabet {self.symbols!r}")
        return i

    def encode(self, seq: str) -> list[int]:
        return [self.index_of(ch) for ch in seq]

    def decode(self, indices) -> str:
        return "".join(self.symbols[i] for i in indices)

    @classmethod
    def dna(cls) -> "Alphabet":
        return cls("ACGTN", wildcard="N")


@dataclass(frozen=True)
class ScoringScheme:
    """Substitution matrix plus affine gap penalties.

    A gap of length L costs gap_open + (L-1)*gap_extend. The derived bias is
    the smallest constant making every substitution score non-negative, so
    biased profile entries fit unsigned arithmetic.
    """

    matrix: tuple[tuple[int, ...], ...]
    gap_open: int
    gap_extend: int

    def __post_init__(self) -> None:
        n = len(self.matrix)
        if n == 0:
            raise ValueError("substitution matrix must be non-empty")
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        for row in mat:
            if len(row) != n:
                raise ValueError("substitution matrix must be square")
            for x in row:
                if not SUB_MIN <= x <= SUB_MAX:
                    raise ValueError(
                        f"substitution score {x} outside [{SUB_MIN}, {SUB_MAX}]"
                    )
        if not (self.gap_open >= self.gap_extend >= 1):
            raise ValueError("require gap_open >= gap_extend >= 1")

    @property
    def n_symbols(self) -> int:
        return len(self.matrix)

    @property
    def bias(self) -> int:
        return max(0, -min(min(row) for row in self.matrix))

    def substitution(self, a: int, b: int) -> int:
        n = self.n_symbols
        if not (0 <= a < n and 0 <= b < n):
            raise SymbolOutOfAlphabet(f"symbol index pair ({a}, {b}) outside 0..{n - 1}")
        return self.matrix[a][b]

    @classmethod
    def match_mismatch(
        cls,
        alphabet: Alphabet,
        match: int,
        mismatch: int,
        gap_open: int,
        gap_extend: int,
    ) -> "ScoringScheme":
        """Uniform match/mismatch matrix; wildcard rows score mismatch everywhere."""
        wc = alphabet.symbols.index(alphabet.wildcard) if alphabet.wildcard else -1
        n = alphabet.size
        rows = []
        for a in range(n):
            row = []
            for b in range(n):
                if a == wc or b == wc:
                    row.append(mismatch)
                else:
                    row.append(match if a == b else mismatch)
            rows.append(tuple(row))
        return cls(tuple(rows), gap_open, gap_extend)

"""Shared helpers for the test suite."""

from __future__ import annotations

from swscan.scoring import Alphabet, ScoringScheme
from swscan.vectors import ScoreVector

DNA4 = Alphabet("ACGT")
DNA_N = Alphabet.dna()


def mm(match=2, mismatch=-1, gap_open=3, gap_extend=1, alphabet=DNA4) -> ScoringScheme:
    return ScoringScheme.match_mismatch(alphabet, match, mismatch, gap_open, gap_extend)


def enc(seq: str, alphabet: Alphabet = DNA4) -> list[int]:
    return alphabet.encode(seq)


def sv(*vals: int) -> ScoreVector:
    return ScoreVector(tuple(vals))

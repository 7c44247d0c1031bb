"""Striped query profile construction and the stripe index mapping.

Query position q lives in segment j = q mod seg_len, lane l = q div seg_len,
so consecutive positions within one lane are seg_len apart. The profile holds,
for each alphabet symbol, one vector per segment of biased substitution
scores; padded positions past the query end store 0, the most punitive value
once the bias is removed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scoring import ScoringScheme, SymbolOutOfAlphabet
from .vectors import ScoreVector, VectorSpec


class EmptyQuery(ValueError):
    """Profile construction requires at least one query residue."""


class PositionOutOfRange(ValueError):
    """Query position outside the padded striped range [0, seg_len*lanes)."""


@dataclass(frozen=True)
class QueryProfile:
    """Immutable striped substitution-score vectors, one row per symbol."""

    seg_len: int
    query_len: int
    spec: VectorSpec
    bias: int
    vectors: tuple[tuple[ScoreVector, ...], ...]


def build_profile(query, scheme: ScoringScheme, spec: VectorSpec) -> QueryProfile:
    """Build the striped profile for an encoded query.

    vectors[a][j].lane[l] = bias + substitution(a, query[l*seg_len + j]) for
    in-range positions, else 0.
    """
    query = list(query)
    if len(query) == 0:
        raise EmptyQuery("query must contain at least one residue")
    n = scheme.n_symbols
    for q in query:
        if not 0 <= q < n:
            raise SymbolOutOfAlphabet(f"query index {q} outside 0..{n - 1}")
    p = spec.lanes
    seg_len = (len(query) + p - 1) // p
    bias = scheme.bias
    rows = []
    for a in range(n):
        segs = []
        for j in range(seg_len):
            lanes = []
            for l in range(p):
                q = l * seg_len + j
                if q < len(query):
                    lanes.append(bias + scheme.matrix[a][query[q]])
                else:
                    lanes.append(0)
            segs.append(ScoreVector(tuple(lanes)))
        rows.append(tuple(segs))
    return QueryProfile(
        seg_len=seg_len,
        query_len=len(query),
        spec=spec,
        bias=bias,
        vectors=tuple(rows),
    )


def stripe_index(q: int, seg_len: int, p: int) -> tuple[int, int]:
    """Map query position q to its (segment, lane) pair; inverse of l*seg_len+j."""
    if seg_len < 1 or p < 1:
        raise ValueError("seg_len and lane count must be positive")
    if not 0 <= q < seg_len * p:
        raise PositionOutOfRange(f"position {q} outside [0, {seg_len * p})")
    return q % seg_len, q // seg_len

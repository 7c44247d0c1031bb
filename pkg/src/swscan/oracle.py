"""Ground-truth references: scalar affine-gap local alignment and the exact
full-propagation correction/scan loops every vector kernel is tested against.

Everything here is a pure function over plain integers; no saturation tricks
hide in the scalar DP, so overflow questions have an unambiguous answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scoring import ScoringScheme, SymbolOutOfAlphabet
from .vectors import SCORE_MAX, ScoreVector, VectorSpec


@dataclass
class DpMatrices:
    """Full (ref_len+1) x (query_len+1) DP state with exact integer entries."""

    h: list[list[int]]
    e: list[list[int]]
    f: list[list[int]]
    best: int

    @property
    def overflow(self) -> bool:
        """True when the exact best score exceeds the saturating score range."""
        return self.best > SCORE_MAX


def sw_scalar(query, ref, scheme: ScoringScheme) -> tuple[int, DpMatrices]:
    """Exact scalar Smith-Waterman with affine gaps.

    Row i tracks the reference, column q the query. E holds gaps along the
    reference (consuming reference residues), F gaps along the query. Either
    sequence may be empty, giving score 0.
    """
    query = list(query)
    ref = list(ref)
    n_sym = scheme.n_symbols
    for s in query + ref:
        if not 0 <= s < n_sym:
            raise SymbolOutOfAlphabet(f"symbol index {s} outside 0..{n_sym - 1}")

    m = len(query)
    n = len(ref)
    go = scheme.gap_open
    ge = scheme.gap_extend
    mat = scheme.matrix

    h = [[0] * (m + 1) for _ in range(n + 1)]
    e = [[0] * (m + 1) for _ in range(n + 1)]
    f = [[0] * (m + 1) for _ in range(n + 1)]
    best = 0
    for i in range(1, n + 1):
        row = mat[ref[i - 1]]
        hi = h[i]
        hp = h[i - 1]
        ei = e[i]
        ep = e[i - 1]
        fi = f[i]
        for q in range(1, m + 1):
            ev = max(ep[q] - ge, hp[q] - go, 0)
            fv = max(fi[q - 1] - ge, hi[q - 1] - go, 0)
            hv = max(0, hp[q - 1] + row[query[q - 1]], ev, fv)
            ei[q] = ev
            fi[q] = fv
            hi[q] = hv
            if hv > best:
                best = hv
    return best, DpMatrices(h=h, e=e, f=f, best=best)


def _sat_sub_lanes(lanes: tuple[int, ...], c: int) -> tuple[int, ...]:
    c = min(c, SCORE_MAX)
    return tuple(x - c if x > c else 0 for x in lanes)


def _shift_up(lanes: tuple[int, ...], k: int) -> tuple[int, ...]:
    return (0,) * k + lanes[: len(lanes) - k]


def _vmax_lanes(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def correct_lazyf_full(
    f: ScoreVector, h_store, gap_extend: int, spec: VectorSpec
) -> list[ScoreVector]:
    """Full propagation of the pending vertical-gap vector into stored H.

    Runs every one of the p passes with no early exit: each pass shifts F up
    one lane, then sweeps the segments applying max and decaying F by
    gap_extend per segment. Returns a new corrected array.
    """
    p = spec.lanes
    cur = f.lanes
    out = [v.lanes for v in h_store]
    for _ in range(p):
        cur = _shift_up(cur, 1)
        for j in range(len(out)):
            out[j] = _vmax_lanes(out[j], cur)
            cur = _sat_sub_lanes(cur, gap_extend)
    return [ScoreVector(lanes) for lanes in out]


def scan_sequential(f: ScoreVector, d: int, spec: VectorSpec) -> ScoreVector:
    """Sequential weighted max-scan: the p-step definition the log-step scan
    must reproduce bit for bit.

    Result lane l is the max over k in 1..l of f[l-k] - (k-1)*d, clamped at 0;
    lane 0 is always 0.
    """
    if d < 0:
        raise ValueError("decay must be non-negative")
    p = spec.lanes
    cur = f.lanes
    acc = (0,) * p
    for _ in range(p):
        cur = _shift_up(cur, 1)
        acc = _vmax_lanes(acc, cur)
        cur = _sat_sub_lanes(cur, d)
    return ScoreVector(acc)

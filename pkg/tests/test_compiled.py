"""The JIT-accelerated mirrors must be bit-identical to the pure kernels,
including every operation counter, so TSV output and acceptance measurements
do not depend on which implementation ran."""

from __future__ import annotations

import random

import numpy as np
import pytest

from helpers import mm, sv
from swscan import _compiled as C
from swscan.kernels import (
    align_lazyf,
    align_scan,
    correct_inverted,
    correct_scan,
    correct_separated,
    weighted_max_scan,
)
from swscan.oracle import correct_lazyf_full, scan_sequential, sw_scalar
from swscan.profile import build_profile
from swscan.vectors import SCORE_MAX, VectorSpec

pytestmark = pytest.mark.usefixtures("warmed")

KERNELS = ("lazyf", "lazyf-noexit", "scan")


def _pure_align(kernel, prof, r, scheme):
    if kernel == "scan":
        return align_scan(prof, r, scheme)
    return align_lazyf(prof, r, scheme, early_exit=(kernel == "lazyf"))


def test_alignment_parity_scores_counters_and_passes():
    rng = np.random.default_rng(424242)
    for _ in range(25):
        q = rng.integers(0, 4, int(rng.integers(1, 70))).astype(np.int16)
        r = rng.integers(0, 4, int(rng.integers(1, 70))).astype(np.int16)
        gap_open = int(rng.integers(1, 9))
        scheme = mm(
            match=int(rng.integers(1, 5)),
            mismatch=-int(rng.integers(1, 5)),
            gap_open=gap_open,
            gap_extend=int(rng.integers(1, gap_open + 1)),
        )
        for p in (2, 4, 8, 16):
            prof = build_profile([int(x) for x in q], scheme, VectorSpec(p))
            for kernel in KERNELS:
                pure = _pure_align(kernel, prof, [int(x) for x in r], scheme)
                comp = C.align_pair(kernel, p, q, r, scheme)
                assert comp.score == pure.score
                assert comp.overflow == pure.overflow
                assert comp.counters == pure.counters
                assert comp.correction_passes == pure.correction_passes
                assert comp.column_passes == pure.column_passes


def test_profile_arrays_match_pure_profile():
    scheme = mm(match=3, mismatch=-2)
    q = np.array([0, 1, 2, 3, 2, 1, 0], dtype=np.int16)
    for p in (2, 4, 8):
        prof, bias = C.build_profile_arrays(q, scheme, p)
        pure = build_profile([int(x) for x in q], scheme, VectorSpec(p))
        assert int(bias) == pure.bias == scheme.bias
        assert prof.shape == (scheme.n_symbols, pure.seg_len, p)
        for a in range(scheme.n_symbols):
            for j in range(pure.seg_len):
                assert tuple(int(x) for x in prof[a, j]) == pure.vectors[a][j].lanes


def test_prebuilt_profile_alignment_equals_one_shot():
    scheme = mm()
    rng = np.random.default_rng(7)
    q = rng.integers(0, 4, 33).astype(np.int16)
    r = rng.integers(0, 4, 50).astype(np.int16)
    prof, bias = C.build_profile_arrays(q, scheme, 8)
    for kernel in KERNELS:
        assert C.align_prebuilt(kernel, prof, bias, r, scheme) == C.align_pair(
            kernel, 8, q, r, scheme
        )


def test_scalar_score_parity_with_pure_oracle():
    rng = np.random.default_rng(11)
    for _ in range(30):
        q = rng.integers(0, 4, int(rng.integers(0, 60))).astype(np.int16)
        r = rng.integers(0, 4, int(rng.integers(0, 60))).astype(np.int16)
        scheme = mm(match=int(rng.integers(1, 5)), mismatch=-int(rng.integers(1, 5)))
        want = sw_scalar([int(x) for x in q], [int(x) for x in r], scheme)[0]
        assert C.scalar_score(q, r, scheme) == want


def test_correction_mirrors_bit_equal_including_huge_decay():
    rnd = random.Random(99)
    routines = {
        "full": correct_lazyf_full,
        "separated": correct_separated,
        "inverted": correct_inverted,
        "scan": correct_scan,
    }
    for _ in range(40):
        p = rnd.choice((2, 4, 8, 16, 32, 64))
        seg_len = rnd.randint(1, 6)
        spec = VectorSpec(p)
        f = sv(*(rnd.randrange(SCORE_MAX + 1) for _ in range(p)))
        h = [
            sv(*(rnd.randrange(SCORE_MAX + 1) for _ in range(p)))
            for _ in range(seg_len)
        ]
        ge = rnd.choice((rnd.randint(1, 50), rnd.randint(1, 70000)))
        for name, pure_fn in routines.items():
            want = pure_fn(f, h, ge, spec)
            got = C.correct_compiled(name, f, h, ge, p)
            assert [v.lanes for v in got] == [v.lanes for v in want], name


def test_scan_mirrors_bit_equal_including_huge_decay():
    rnd = random.Random(101)
    for _ in range(60):
        p = rnd.choice((2, 4, 8, 16, 32, 64))
        spec = VectorSpec(p)
        f = sv(*(rnd.randrange(SCORE_MAX + 1) for _ in range(p)))
        d = rnd.choice((0, rnd.randint(0, 100), rnd.randint(0, 70000)))
        want_seq = scan_sequential(f, d, spec)
        want_log = weighted_max_scan(f, d, spec)
        assert C.scan_compiled("sequential", f, d, p).lanes == want_seq.lanes
        assert C.scan_compiled("weighted", f, d, p).lanes == want_log.lanes


def test_batch_align_matches_single_pair_calls():
    rng = np.random.default_rng(3)
    n = 12
    lq = rng.integers(1, 40, n)
    lr = rng.integers(1, 40, n)
    match = rng.integers(1, 5, n)
    mis = -rng.integers(1, 5, n)
    go = rng.integers(1, 9, n)
    ge = np.array([int(rng.integers(1, g + 1)) for g in go], dtype=np.int64)
    qo = np.zeros(n + 1, dtype=np.int64)
    qo[1:] = np.cumsum(lq)
    ro = np.zeros(n + 1, dtype=np.int64)
    ro[1:] = np.cumsum(lr)
    fq = rng.integers(0, 4, qo[-1]).astype(np.int16)
    fr = rng.integers(0, 4, ro[-1]).astype(np.int16)
    for kid, kernel in enumerate(KERNELS):
        scores, over, counters = C.batch_align(
            kid, 8, fq, qo, fr, ro, match, mis, go, ge
        )
        for t in range(n):
            scheme = mm(int(match[t]), int(mis[t]), int(go[t]), int(ge[t]))
            single = C.align_pair(
                kernel, 8, fq[qo[t] : qo[t + 1]], fr[ro[t] : ro[t + 1]], scheme
            )
            assert int(scores[t]) == single.score
            assert bool(over[t]) == single.overflow
            got = tuple(int(x) for x in counters[t])
            want = (
                single.counters.shifts,
                single.counters.sat_adds,
                single.counters.sat_subs,
                single.counters.maxes,
                single.counters.loads,
                single.counters.stores,
                single.counters.correction_passes,
            )
            assert got == want


def test_batch_oracle_matches_pure_oracle():
    rng = np.random.default_rng(5)
    n = 20
    lq = rng.integers(1, 50, n)
    lr = rng.integers(1, 50, n)
    match = rng.integers(1, 5, n)
    mis = -rng.integers(1, 5, n)
    go = rng.integers(1, 9, n)
    ge = np.array([int(rng.integers(1, g + 1)) for g in go], dtype=np.int64)
    qo = np.zeros(n + 1, dtype=np.int64)
    qo[1:] = np.cumsum(lq)
    ro = np.zeros(n + 1, dtype=np.int64)
    ro[1:] = np.cumsum(lr)
    fq = rng.integers(0, 4, qo[-1]).astype(np.int16)
    fr = rng.integers(0, 4, ro[-1]).astype(np.int16)
    scores = C.batch_oracle_scores(fq, qo, fr, ro, match, mis, go, ge)
    for t in range(n):
        scheme = mm(int(match[t]), int(mis[t]), int(go[t]), int(ge[t]))
        q = [int(x) for x in fq[qo[t] : qo[t + 1]]]
        r = [int(x) for x in fr[ro[t] : ro[t + 1]]]
        assert int(scores[t]) == sw_scalar(q, r, scheme)[0]


def test_compiled_kernels_flag_overflow_and_clamp():
    scheme = mm(match=127, mismatch=-1, gap_open=3, gap_extend=1)
    n = SCORE_MAX // 127 + 2
    q = np.zeros(n, dtype=np.int16)
    exact = C.scalar_score(q, q, scheme)
    assert exact == 127 * n > SCORE_MAX
    for kernel in KERNELS:
        res = C.align_pair(kernel, 8, q, q, scheme)
        assert res.overflow
        assert res.score <= SCORE_MAX

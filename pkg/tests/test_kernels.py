"""Striped kernels, the correction-routine chain, and the log-step scan."""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import enc, mm, sv
from swscan.kernels import (
    KernelState,
    ProfileMismatch,
    align_lazyf,
    align_scan,
    correct_inverted,
    correct_scan,
    correct_separated,
    weighted_max_scan,
)
from swscan.oracle import correct_lazyf_full, scan_sequential, sw_scalar
from swscan.profile import build_profile
from swscan.scoring import SymbolOutOfAlphabet
from swscan.vectors import (
    SCORE_MAX,
    NumpyBackend,
    ReferenceBackend,
    VectorSpec,
)

CHAIN = (correct_separated, correct_inverted, correct_scan)


def scan_steps(p: int) -> int:
    return max(1, math.ceil(math.log2(p)))


# --- correction-routine chain ---


def test_chain_routines_match_hand_worked_example():
    h = [sv(0, 0, 0, 0), sv(0, 0, 0, 0)]
    want = [(0, 10, 8, 6), (0, 9, 7, 5)]
    for routine in CHAIN:
        out = routine(sv(10, 0, 0, 0), h, 1, VectorSpec(4))
        assert [v.lanes for v in out] == want, routine.__name__


def test_chain_routines_keep_zero_f_inert():
    h = [sv(7, 1, 0, 3), sv(2, 2, 2, 2)]
    for routine in CHAIN:
        out = routine(sv(0, 0, 0, 0), h, 2, VectorSpec(4))
        assert [v.lanes for v in out] == [v.lanes for v in h], routine.__name__


@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_chain_routines_bit_equal_full_propagation(data):
    p = data.draw(st.sampled_from((2, 4, 8, 16)))
    seg_len = data.draw(st.integers(1, 6))
    lane = st.integers(0, SCORE_MAX)
    f = sv(*data.draw(st.lists(lane, min_size=p, max_size=p)))
    h = [
        sv(*data.draw(st.lists(lane, min_size=p, max_size=p)))
        for _ in range(seg_len)
    ]
    ge = data.draw(st.one_of(st.integers(1, 40), st.integers(1, 2 * SCORE_MAX)))
    spec = VectorSpec(p)
    want = [v.lanes for v in correct_lazyf_full(f, h, ge, spec)]
    for routine in CHAIN:
        got = [v.lanes for v in routine(f, h, ge, spec)]
        assert got == want, routine.__name__


def test_chain_routines_run_on_numpy_backend_identically():
    rnd = random.Random(5)
    for _ in range(20):
        p = rnd.choice((2, 4, 8))
        seg_len = rnd.randint(1, 4)
        spec = VectorSpec(p)
        f = sv(*(rnd.randrange(SCORE_MAX) for _ in range(p)))
        h = [sv(*(rnd.randrange(SCORE_MAX) for _ in range(p))) for _ in range(seg_len)]
        ge = rnd.randint(1, 9)
        for routine in CHAIN:
            ref = routine(f, h, ge, spec, backend=ReferenceBackend(spec))
            nmp = routine(f, h, ge, spec, backend=NumpyBackend(spec))
            assert [v.lanes for v in ref] == [v.lanes for v in nmp]


# --- weighted max-scan ---


def test_weighted_scan_examples():
    spec = VectorSpec(4)
    assert weighted_max_scan(sv(10, 0, 0, 0), 2, spec).lanes == (0, 10, 8, 6)
    assert weighted_max_scan(sv(5, 9, 1, 7), 3, spec).lanes == (0, 5, 9, 6)
    assert weighted_max_scan(sv(1, 2, 3, 4), 0, spec).lanes == (0, 1, 2, 3)


@settings(max_examples=150)
@given(data=st.data())
def test_weighted_scan_bit_equals_sequential_scan(data):
    p = data.draw(st.sampled_from((2, 4, 8, 16, 32, 64)))
    spec = VectorSpec(p)
    f = sv(*data.draw(st.lists(st.integers(0, SCORE_MAX), min_size=p, max_size=p)))
    d = data.draw(st.one_of(st.integers(0, 200), st.integers(0, 2 * SCORE_MAX)))
    assert weighted_max_scan(f, d, spec).lanes == scan_sequential(f, d, spec).lanes


def test_weighted_scan_uses_log_step_schedule():
    for p in (2, 4, 8, 16, 32, 64):
        spec = VectorSpec(p)
        bk = ReferenceBackend(spec)
        weighted_max_scan(bk.from_lanes(tuple(range(p))), 3, spec, backend=bk)
        s = scan_steps(p)
        c = bk.counters
        assert c.shifts == s + 1  # the init shift plus one per step
        assert c.maxes == s
        assert c.sat_subs == s
        assert c.correction_passes == s


def test_weighted_scan_rejects_negative_decay():
    with pytest.raises(ValueError):
        weighted_max_scan(sv(1, 2, 3, 4), -1, VectorSpec(4))


# --- kernel state ---


def test_kernel_state_starts_all_zero():
    bk = ReferenceBackend(VectorSpec(4))
    st_ = KernelState.zeros(bk, 3)
    zero = (0, 0, 0, 0)
    assert st_.f.lanes == zero and st_.fj.lanes == zero and st_.max_acc.lanes == zero
    for arr in (st_.e, st_.h_load, st_.h_store):
        assert len(arr) == 3
        assert all(v.lanes == zero for v in arr)


def test_kernel_state_swap_exchanges_h_buffers():
    bk = ReferenceBackend(VectorSpec(2))
    st_ = KernelState.zeros(bk, 1)
    a, b = st_.h_load, st_.h_store
    st_.swap_h()
    assert st_.h_load is b and st_.h_store is a


# --- alignment kernels vs the scalar oracle ---


def test_lazyf_trivial_and_gapped_examples():
    scheme = mm()
    prof = build_profile(enc("AAA"), scheme, VectorSpec(4))
    assert align_lazyf(prof, enc("AA"), scheme).score == 4
    prof = build_profile(enc("ACGT"), scheme, VectorSpec(4))
    assert align_lazyf(prof, enc("AGT"), scheme).score == 4


def test_scan_trivial_and_gapped_examples():
    scheme = mm()
    prof = build_profile(enc("AAA"), scheme, VectorSpec(4))
    assert align_scan(prof, enc("AA"), scheme).score == 4
    for p in (2, 4, 8):
        prof = build_profile(enc("ACGT"), scheme, VectorSpec(p))
        assert align_scan(prof, enc("AGT"), scheme).score == 4


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_kernels_equal_scalar_oracle(data):
    gap_open = data.draw(st.integers(1, 8))
    scheme = mm(
        match=data.draw(st.integers(1, 4)),
        mismatch=data.draw(st.integers(-4, -1)),
        gap_open=gap_open,
        gap_extend=data.draw(st.integers(1, gap_open)),
    )
    q = data.draw(st.lists(st.integers(0, 3), min_size=1, max_size=40))
    r = data.draw(st.lists(st.integers(0, 3), min_size=1, max_size=40))
    want = sw_scalar(q, r, scheme)[0]
    for p in (2, 4, 8, 16):
        prof = build_profile(q, scheme, VectorSpec(p))
        noexit = align_lazyf(prof, r, scheme, early_exit=False)
        exit_ = align_lazyf(prof, r, scheme, early_exit=True)
        scan = align_scan(prof, r, scheme)
        assert noexit.score == want and not noexit.overflow
        assert exit_.score == want and not exit_.overflow
        assert scan.score == want and not scan.overflow
        # the early exit may only skip work, never add or change columns
        assert exit_.correction_passes <= noexit.correction_passes
        assert all(
            a <= b for a, b in zip(exit_.column_passes, noexit.column_passes)
        )
        assert len(scan.column_passes) == len(r)
        assert set(scan.column_passes) == {scan_steps(p)}


def test_kernels_lane_width_independent():
    rnd = random.Random(23)
    scheme = mm(3, -2, 5, 2)
    for _ in range(10):
        q = [rnd.randrange(4) for _ in range(rnd.randint(1, 50))]
        r = [rnd.randrange(4) for _ in range(rnd.randint(1, 50))]
        scores = set()
        for p in (2, 4, 8, 16, 32, 64):
            prof = build_profile(q, scheme, VectorSpec(p))
            scores.add(align_scan(prof, r, scheme).score)
            scores.add(align_lazyf(prof, r, scheme).score)
        assert len(scores) == 1


def test_kernels_on_numpy_backend_bit_identical():
    rnd = random.Random(29)
    scheme = mm()
    for _ in range(8):
        q = [rnd.randrange(4) for _ in range(rnd.randint(1, 30))]
        r = [rnd.randrange(4) for _ in range(rnd.randint(1, 30))]
        for p in (2, 8):
            spec = VectorSpec(p)
            prof = build_profile(q, scheme, spec)
            for fn, kwargs in (
                (align_lazyf, {"early_exit": True}),
                (align_lazyf, {"early_exit": False}),
                (align_scan, {}),
            ):
                a = fn(prof, r, scheme, backend=ReferenceBackend(spec), **kwargs)
                b = fn(prof, r, scheme, backend=NumpyBackend(spec), **kwargs)
                assert (a.score, a.overflow, a.counters, a.column_passes) == (
                    b.score,
                    b.overflow,
                    b.counters,
                    b.column_passes,
                )


def test_kernel_input_validation():
    scheme = mm()
    prof = build_profile(enc("ACG"), scheme, VectorSpec(4))
    with pytest.raises(ProfileMismatch):
        align_lazyf(prof, enc("AC"), scheme, backend=ReferenceBackend(VectorSpec(8)))
    other = mm(match=4, mismatch=-4)  # different bias
    with pytest.raises(ProfileMismatch):
        align_scan(prof, enc("AC"), other)
    with pytest.raises(ValueError):
        align_scan(prof, [], scheme)
    with pytest.raises(SymbolOutOfAlphabet):
        align_scan(prof, [0, 7], scheme)


# --- exact operation accounting ---


def test_lazyf_noexit_operation_count_closed_form():
    scheme = mm()
    for q, r, p in (
        ("AAA", "AA", 4),
        ("ACGTACG", "TTACG", 2),
        ("ACGTACGTACGT", "ACGT", 8),
    ):
        prof = build_profile(enc(q), scheme, VectorSpec(p))
        res = align_lazyf(prof, enc(r), scheme, early_exit=False)
        L, n = prof.seg_len, len(r)
        c = res.counters
        assert c.loads == n * (3 * L + p * L + 1)
        assert c.stores == n * (2 * L + p * L)
        assert c.sat_adds == n * L
        assert c.sat_subs == n * (4 * L + p * L)
        assert c.maxes == n * (5 * L + p * L)
        assert c.shifts == n * (1 + p)
        assert c.vec_ops_total == n * (15 * L + 4 * p * L + p + 2)
        assert c.correction_passes == n * p


def test_scan_operation_count_closed_form():
    scheme = mm()
    for q, r, p in (
        ("AAA", "AA", 4),
        ("ACGTACG", "TTACG", 2),
        ("ACGTACGTACGT", "ACGT", 8),
        ("ACGT", "ACGTACGT", 16),
    ):
        prof = build_profile(enc(q), scheme, VectorSpec(p))
        res = align_scan(prof, enc(r), scheme)
        L, n, s = prof.seg_len, len(r), scan_steps(p)
        c = res.counters
        assert c.loads == n * (3 * L + 1)
        assert c.stores == n * 2 * L
        assert c.sat_adds == n * L
        assert c.sat_subs == n * (5 * L + 1 + s)
        assert c.maxes == n * (6 * L + 1 + s)
        assert c.shifts == n * (s + 2)
        assert c.vec_ops_total == n * (17 * L + 3 * s + 5)
        assert c.correction_passes == n * s


def test_scan_does_less_total_work_than_full_propagation():
    rnd = random.Random(31)
    scheme = mm()
    for _ in range(12):
        q = [rnd.randrange(4) for _ in range(rnd.randint(1, 60))]
        r = [rnd.randrange(4) for _ in range(rnd.randint(1, 60))]
        for p in (4, 8, 16):
            prof = build_profile(q, scheme, VectorSpec(p))
            scan = align_scan(prof, r, scheme)
            noexit = align_lazyf(prof, r, scheme, early_exit=False)
            assert scan.counters.vec_ops_total < noexit.counters.vec_ops_total


def test_repeated_matches_make_lazyf_passes_grow_with_lanes():
    # A uniform high-match input forces real cross-lane propagation: the
    # full loop always runs p passes per column, the early exit's recorded
    # passes still grow with p, while the scan stays at its log schedule.
    scheme = mm(match=10, mismatch=-3, gap_open=2, gap_extend=1)
    q = [0] * 64
    r = [0] * 64
    exit_totals = {}
    for p in (8, 16):
        prof = build_profile(q, scheme, VectorSpec(p))
        noexit = align_lazyf(prof, r, scheme, early_exit=False)
        assert set(noexit.column_passes) == {p}
        exit_ = align_lazyf(prof, r, scheme, early_exit=True)
        exit_totals[p] = exit_.correction_passes
        scan = align_scan(prof, r, scheme)
        assert set(scan.column_passes) == {scan_steps(p)}
        assert scan.correction_passes < exit_.correction_passes
    assert exit_totals[16] > exit_totals[8]

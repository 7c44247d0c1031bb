"""Striped local-alignment kernels and the correction-loop transformation chain.

Two full kernels are provided. ``align_lazyf`` is the classic striped kernel:
a main segment loop per reference column followed by a propagation loop that
pushes the pending vertical-gap vector F across lane boundaries, worst case p
passes. ``align_scan`` replaces that data-dependent loop with a log-step
weighted max-scan whose result is carried into the next column and applied on
read, so per-column correction work is exactly ceil(log2 p) steps regardless
of input.

The intermediate routines ``correct_separated``, ``correct_inverted`` and
``correct_scan`` are the stepwise rewrites connecting the two: each is
bit-equivalent to the full propagation loop (see oracle.correct_lazyf_full)
and each is independently testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .profile import QueryProfile
from .scoring import ScoringScheme, SymbolOutOfAlphabet
from .vectors import SCORE_MAX, OpCounters, ReferenceBackend, ScoreVector, VectorSpec


class ProfileMismatch(ValueError):
    """Profile was built for a different scheme or vector shape."""


@dataclass
class KernelState:
    """Per-alignment working set; exclusively owned by one kernel invocation.

    h_load and h_store are double-buffered column H arrays swapped each
    column. f is the running vertical-gap vector, fj the scan-produced
    correction carry, max_acc the per-lane running maximum.
    """

    e: list
    h_load: list
    h_store: list
    f: object
    fj: object
    max_acc: object

    @classmethod
    def zeros(cls, backend, seg_len: int) -> "KernelState":
        return cls(
            e=backend.new_array(seg_len),
            h_load=backend.new_array(seg_len),
            h_store=backend.new_array(seg_len),
            f=backend.zeros(),
            fj=backend.zeros(),
            max_acc=backend.zeros(),
        )

    def swap_h(self) -> None:
        self.h_load, self.h_store = self.h_store, self.h_load


@dataclass
class AlignmentResult:
    """Score plus the instrumentation needed to reason about kernel work.

    overflow=False guarantees the score is the exact local-alignment score;
    overflow=True means saturation was observed and the score is a clamped
    lower bound. column_passes records completed correction passes (or scan
    steps) per reference column.
    """

    score: int
    overflow: bool
    counters: OpCounters
    correction_passes: int
    column_passes: tuple[int, ...]


def _scan_steps(p: int) -> int:
    return max(1, math.ceil(math.log2(p)))


def _clamp(c: int) -> int:
    return c if c < SCORE_MAX else SCORE_MAX


def _check_inputs(profile: QueryProfile, ref, scheme: ScoringScheme, backend):
    if backend.spec.lanes != profile.spec.lanes:
        raise ProfileMismatch(
            f"backend has {backend.spec.lanes} lanes, profile {profile.spec.lanes}"
        )
    if profile.bias != scheme.bias or len(profile.vectors) != scheme.n_symbols:
        raise ProfileMismatch("profile was built for a different scoring scheme")
    ref = list(ref)
    if len(ref) == 0:
        raise ValueError("reference must contain at least one residue")
    n = len(profile.vectors)
    for a in ref:
        if not 0 <= a < n:
            raise SymbolOutOfAlphabet(f"reference index {a} outside 0..{n - 1}")
    return ref


def _native_profile(profile: QueryProfile, backend):
    return [
        [backend.from_lanes(v.lanes) for v in row] for row in profile.vectors
    ]


def align_lazyf(
    profile: QueryProfile,
    ref,
    scheme: ScoringScheme,
    early_exit: bool = True,
    backend=None,
) -> AlignmentResult:
    """Striped kernel with the post-column F propagation loop.

    With early_exit=False every column runs all p propagation passes. With
    early_exit=True a pass whose shifted F has no nonzero lane is skipped and
    the whole correction is abandoned for that column: a zero F can never
    raise any stored H, and F only decays from there.
    """
    bk = backend if backend is not None else ReferenceBackend(profile.spec)
    ref = _check_inputs(profile, ref, scheme, bk)
    bk.reset()
    prof = _native_profile(profile, bk)
    seg_len = profile.seg_len
    p = profile.spec.lanes
    bias = profile.bias
    go = _clamp(scheme.gap_open)
    ge = _clamp(scheme.gap_extend)
    st = KernelState.zeros(bk, seg_len)
    column_passes = []

    for a in ref:
        row = prof[a]
        vh = bk.shift_lanes_up(bk.load(st.h_store, seg_len - 1), 1)
        st.swap_h()
        st.f = bk.splat(0)
        for j in range(seg_len):
            vh = bk.sat_add(vh, bk.load(row, j))
            vh = bk.sat_sub(vh, bias)
            st.max_acc = bk.vmax(st.max_acc, vh)
            ve = bk.load(st.e, j)
            vh = bk.vmax(vh, ve)
            vh = bk.vmax(vh, st.f)
            bk.store(st.h_store, j, vh)
            vh_go = bk.sat_sub(vh, go)
            bk.store(st.e, j, bk.vmax(bk.sat_sub(ve, ge), vh_go))
            st.f = bk.vmax(bk.sat_sub(st.f, ge), vh_go)
            vh = bk.load(st.h_load, j)

        passes = 0
        vf = st.f
        for _ in range(p):
            vf = bk.shift_lanes_up(vf, 1)
            if early_exit and bk.lane_max(vf) == 0:
                break
            for j in range(seg_len):
                bk.store(st.h_store, j, bk.vmax(bk.load(st.h_store, j), vf))
                vf = bk.sat_sub(vf, ge)
            passes += 1
            bk.counters.correction_passes += 1
        st.f = vf
        column_passes.append(passes)

    return AlignmentResult(
        score=bk.lane_max(st.max_acc),
        overflow=bk.saturated,
        counters=bk.counters.snapshot(),
        correction_passes=bk.counters.correction_passes,
        column_passes=tuple(column_passes),
    )


def _weighted_scan_on(bk, f, d: int, p: int):
    """Log-step weighted max-scan on backend vectors; counts each step as a
    correction pass."""
    acc = bk.shift_lanes_up(f, 1)
    for s in range(_scan_steps(p)):
        k = 1 << s
        acc = bk.vmax(acc, bk.sat_sub(bk.shift_lanes_up(acc, k), _clamp(k * d)))
        bk.counters.correction_passes += 1
    return acc


def weighted_max_scan(
    f: ScoreVector, d: int, spec: VectorSpec, backend=None
) -> ScoreVector:
    """Weighted max-scan in ceil(log2 p) steps.

    Bit-identical to oracle.scan_sequential: lane l of the result is the max
    over k in 1..l of f[l-k] - (k-1)*d clamped at 0. Step s combines the
    accumulator with itself shifted up 2^s lanes and decayed by 2^s*d.
    """
    if d < 0:
        raise ValueError("decay must be non-negative")
    bk = backend if backend is not None else ReferenceBackend(spec)
    out = _weighted_scan_on(bk, bk.from_lanes(f.lanes), d, spec.lanes)
    return ScoreVector(bk.lanes_of(out))


def align_scan(
    profile: QueryProfile, ref, scheme: ScoringScheme, backend=None
) -> AlignmentResult:
    """Striped kernel with deferred correction and log-step scan.

    Column i computes its correction carry with one weighted max-scan of its
    final F; the carry is applied in column i+1, on each read of the previous
    column's H (decaying gap_extend per segment) and once at column start for
    the wrap-around read of the last segment. The per-lane maximum observes H
    immediately after the substitution add, so it never needs correcting: a
    gap-terminated cell is strictly dominated by its gap-free prefix when
    both gap penalties are at least 1.
    """
    bk = backend if backend is not None else ReferenceBackend(profile.spec)
    ref = _check_inputs(profile, ref, scheme, bk)
    bk.reset()
    prof = _native_profile(profile, bk)
    seg_len = profile.seg_len
    p = profile.spec.lanes
    steps = _scan_steps(p)
    bias = profile.bias
    go = _clamp(scheme.gap_open)
    ge = _clamp(scheme.gap_extend)
    d_scan = _clamp(seg_len * scheme.gap_extend)
    d_wrap = _clamp((seg_len - 1) * scheme.gap_extend)
    st = KernelState.zeros(bk, seg_len)
    column_passes = []

    for a in ref:
        row = prof[a]
        vh = bk.load(st.h_store, seg_len - 1)
        vh = bk.vmax(vh, bk.sat_sub(st.fj, d_wrap))
        vh = bk.shift_lanes_up(vh, 1)
        st.swap_h()
        st.f = bk.splat(0)
        vfj = st.fj
        for j in range(seg_len):
            vh = bk.sat_add(vh, bk.load(row, j))
            vh = bk.sat_sub(vh, bias)
            st.max_acc = bk.vmax(st.max_acc, vh)
            ve = bk.load(st.e, j)
            vh = bk.vmax(vh, ve)
            vh = bk.vmax(vh, st.f)
            bk.store(st.h_store, j, vh)
            vh_go = bk.sat_sub(vh, go)
            bk.store(st.e, j, bk.vmax(bk.sat_sub(ve, ge), vh_go))
            st.f = bk.vmax(bk.sat_sub(st.f, ge), vh_go)
            vh = bk.load(st.h_load, j)
            vh = bk.vmax(vh, vfj)
            vfj = bk.sat_sub(vfj, ge)

        st.fj = _weighted_scan_on(bk, st.f, d_scan, p)
        column_passes.append(steps)

    return AlignmentResult(
        score=bk.lane_max(st.max_acc),
        overflow=bk.saturated,
        counters=bk.counters.snapshot(),
        correction_passes=bk.counters.correction_passes,
        column_passes=tuple(column_passes),
    )


def _correct_boundary(f, h_store, backend):
    fv = backend.from_lanes(f.lanes)
    hv = [backend.from_lanes(v.lanes) for v in h_store]
    return fv, hv


def correct_separated(
    f: ScoreVector, h_store, gap_extend: int, spec: VectorSpec, backend=None
) -> list[ScoreVector]:
    """Propagation with the F and H loops split: accumulate the fully decayed
    F per segment into FStore, then apply FStore to H in one final pass."""
    bk = backend if backend is not None else ReferenceBackend(spec)
    ge = _clamp(gap_extend)
    cur, hv = _correct_boundary(f, h_store, bk)
    seg_len = len(hv)
    fstore = bk.new_array(seg_len)
    for _ in range(spec.lanes):
        cur = bk.shift_lanes_up(cur, 1)
        for j in range(seg_len):
            bk.store(fstore, j, bk.vmax(bk.load(fstore, j), cur))
            cur = bk.sat_sub(cur, ge)
    out = bk.new_array(seg_len)
    for j in range(seg_len):
        bk.store(out, j, bk.vmax(bk.load(hv, j), bk.load(fstore, j)))
    return [ScoreVector(bk.lanes_of(v)) for v in out]


def correct_inverted(
    f: ScoreVector, h_store, gap_extend: int, spec: VectorSpec, backend=None
) -> list[ScoreVector]:
    """Propagation with the k and j loops swapped: per segment, one inner loop
    over shift counts decaying seg_len*gap_extend per step, while the outer F
    decays gap_extend per segment."""
    bk = backend if backend is not None else ReferenceBackend(spec)
    ge = _clamp(gap_extend)
    cur, hv = _correct_boundary(f, h_store, bk)
    seg_len = len(hv)
    d = _clamp(seg_len * gap_extend)
    fstore = bk.new_array(seg_len)
    for j in range(seg_len):
        fk = cur
        for _ in range(spec.lanes):
            fk = bk.shift_lanes_up(fk, 1)
            bk.store(fstore, j, bk.vmax(bk.load(fstore, j), fk))
            fk = bk.sat_sub(fk, d)
        cur = bk.sat_sub(cur, ge)
    out = bk.new_array(seg_len)
    for j in range(seg_len):
        bk.store(out, j, bk.vmax(bk.load(hv, j), bk.load(fstore, j)))
    return [ScoreVector(bk.lanes_of(v)) for v in out]


def correct_scan(
    f: ScoreVector, h_store, gap_extend: int, spec: VectorSpec, backend=None
) -> list[ScoreVector]:
    """Propagation via one sequential weighted scan with decay
    seg_len*gap_extend, applied to H decaying gap_extend per segment."""
    bk = backend if backend is not None else ReferenceBackend(spec)
    ge = _clamp(gap_extend)
    cur, hv = _correct_boundary(f, h_store, bk)
    seg_len = len(hv)
    d = _clamp(seg_len * gap_extend)
    fj = bk.splat(0)
    for _ in range(spec.lanes):
        cur = bk.shift_lanes_up(cur, 1)
        fj = bk.vmax(fj, cur)
        cur = bk.sat_sub(cur, d)
    out = bk.new_array(seg_len)
    for j in range(seg_len):
        bk.store(out, j, bk.vmax(bk.load(hv, j), fj))
        fj = bk.sat_sub(fj, ge)
    return [ScoreVector(bk.lanes_of(v)) for v in out]

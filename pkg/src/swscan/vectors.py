"""Lane-parameterized saturating vector arithmetic with operation counting.

All kernel math happens on small fixed-width vectors of unsigned 16-bit
saturating scores. Two interchangeable backends implement the same operation
set: a plain-integer reference backend that defines the semantics, and a
numpy-based backend used to cross-check bit-identity. Every arithmetic
operation increments a counter on the owning backend so tests can reason
about the exact amount of vector work a kernel performs.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

SCORE_MAX = 0xFFFF
_ALLOWED_LANES = (2, 4, 8, 16, 32, 64)


@dataclass(frozen=True)
class VectorSpec:
    """Shape of the vector unit: lane count and score width."""

    lanes: int
    score_bits: int = 16

    def __post_init__(self) -> None:
        if self.lanes not in _ALLOWED_LANES:
            raise ValueError(f"lanes must be one of {_ALLOWED_LANES}, got {self.lanes}")
        if self.score_bits != 16:
            raise ValueError("only 16-bit scores are supported")

    @property
    def score_max(self) -> int:
        return (1 << self.score_bits) - 1


@dataclass(frozen=True)
class ScoreVector:
    """Immutable vector of unsigned scores, one per lane."""

    lanes: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lanes", tuple(int(x) for x in self.lanes))
        for x in self.lanes:
            if not 0 <= x <= SCORE_MAX:
                raise ValueError(f"lane value {x} outside [0, {SCORE_MAX}]")

    def __len__(self) -> int:
        return len(self.lanes)

    def __getitem__(self, i: int) -> int:
        return self.lanes[i]

    def __iter__(self):
        return iter(self.lanes)


@dataclass
class OpCounters:
    """Tally of vector operations by class, plus correction-pass count."""

    shifts: int = 0
    sat_adds: int = 0
    sat_subs: int = 0
    maxes: int = 0
    loads: int = 0
    stores: int = 0
    correction_passes: int = 0

    @property
    def vec_ops_total(self) -> int:
        """Total arithmetic/memory vector ops (correction_passes excluded)."""
        return (
            self.shifts
            + self.sat_adds
            + self.sat_subs
            + self.maxes
            + self.loads
            + self.stores
        )

    def reset(self) -> None:
        self.shifts = 0
        self.sat_adds = 0
        self.sat_subs = 0
        self.maxes = 0
        self.loads = 0
        self.stores = 0
        self.correction_passes = 0

    def snapshot(self) -> "OpCounters":
        return replace(self)


class ReferenceBackend:
    """Plain-integer vector backend; the semantics definition.

    A backend instance owns an OpCounters and a sticky ``saturated`` flag,
    and is confined to one alignment at a time. Vectors are ScoreVector
    values and are never mutated.
    """

    vector_type = ScoreVector

    def __init__(self, spec: VectorSpec):
        self.spec = spec
        self.counters = OpCounters()
        self.saturated = False

    def reset(self) -> None:
        self.counters.reset()
        self.saturated = False

    # construction / extraction (setup, not counted)

    def splat(self, c: int) -> ScoreVector:
        if not 0 <= c <= SCORE_MAX:
            raise ValueError(f"splat value {c} outside [0, {SCORE_MAX}]")
        return ScoreVector((c,) * self.spec.lanes)

    def zeros(self) -> ScoreVector:
        return self.splat(0)

    def from_lanes(self, lanes) -> ScoreVector:
        v = ScoreVector(tuple(lanes))
        if len(v) != self.spec.lanes:
            raise ValueError(f"expected {self.spec.lanes} lanes, got {len(v)}")
        return v

    def lanes_of(self, v: ScoreVector) -> tuple[int, ...]:
        return v.lanes

    def new_array(self, n: int) -> list:
        return [self.zeros() for _ in range(n)]

    # counted operations

    def vmax(self, a: ScoreVector, b: ScoreVector) -> ScoreVector:
        self.counters.maxes += 1
        return ScoreVector(tuple(max(x, y) for x, y in zip(a.lanes, b.lanes)))

    def sat_add(self, a: ScoreVector, b: ScoreVector) -> ScoreVector:
        self.counters.sat_adds += 1
        out = []
        for x, y in zip(a.lanes, b.lanes):
            s = x + y
            if s > SCORE_MAX:
                s = SCORE_MAX
                self.saturated = True
            out.append(s)
        return ScoreVector(tuple(out))

    def sat_sub(self, a: ScoreVector, c: int) -> ScoreVector:
        # scalar subtrahend only; clamps at zero, never flags
        if not 0 <= c <= SCORE_MAX:
            raise ValueError(f"subtrahend {c} outside [0, {SCORE_MAX}]")
        self.counters.sat_subs += 1
        return ScoreVector(tuple(x - c if x > c else 0 for x in a.lanes))

    def shift_lanes_up(self, a: ScoreVector, k: int = 1) -> ScoreVector:
        p = self.spec.lanes
        if not 0 <= k <= p:
            raise ValueError(f"shift count {k} outside [0, {p}]")
        self.counters.shifts += 1
        return ScoreVector((0,) * k + a.lanes[: p - k])

    def lane_max(self, a: ScoreVector) -> int:
        # reduction used for the final score and exit predicates; not counted
        return max(a.lanes)

    def load(self, arr: list, j: int) -> ScoreVector:
        self.counters.loads += 1
        return arr[j]

    def store(self, arr: list, j: int, v: ScoreVector) -> None:
        self.counters.stores += 1
        arr[j] = v


class NumpyBackend:
    """uint16 ndarray backend; must match ReferenceBackend bit for bit."""

    vector_type = np.ndarray

    def __init__(self, spec: VectorSpec):
        self.spec = spec
        self.counters = OpCounters()
        self.saturated = False

    def reset(self) -> None:
        self.counters.reset()
        self.saturated = False

    def splat(self, c: int) -> np.ndarray:
        if not 0 <= c <= SCORE_MAX:
            raise ValueError(f"splat value {c} outside [0, {SCORE_MAX}]")
        return np.full(self.spec.lanes, c, dtype=np.uint16)

    def zeros(self) -> np.ndarray:
        return np.zeros(self.spec.lanes, dtype=np.uint16)

    def from_lanes(self, lanes) -> np.ndarray:
        a = np.asarray(tuple(lanes), dtype=np.uint16)
        if a.shape != (self.spec.lanes,):
            raise ValueError(f"expected {self.spec.lanes} lanes")
        return a

    def lanes_of(self, v: np.ndarray) -> tuple[int, ...]:
        return tuple(int(x) for x in v)

    def new_array(self, n: int) -> list:
        return [self.zeros() for _ in range(n)]

    def vmax(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.counters.maxes += 1
        return np.maximum(a, b)

    def sat_add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        self.counters.sat_adds += 1
        s = a.astype(np.uint32) + b.astype(np.uint32)
        if bool((s > SCORE_MAX).any()):
            self.saturated = True
        return np.minimum(s, SCORE_MAX).astype(np.uint16)

    def sat_sub(self, a: np.ndarray, c: int) -> np.ndarray:
        if not 0 <= c <= SCORE_MAX:
            raise ValueError(f"subtrahend {c} outside [0, {SCORE_MAX}]")
        self.counters.sat_subs += 1
        d = a.astype(np.int32) - c
        return np.maximum(d, 0).astype(np.uint16)

    def shift_lanes_up(self, a: np.ndarray, k: int = 1) -> np.ndarray:
        p = self.spec.lanes
        if not 0 <= k <= p:
            raise ValueError(f"shift count {k} outside [0, {p}]")
        self.counters.shifts += 1
        out = np.zeros(p, dtype=np.uint16)
        if k < p:
            out[k:] = a[: p - k]
        return out

    def lane_max(self, a: np.ndarray) -> int:
        return int(a.max())

    def load(self, arr: list, j: int) -> np.ndarray:
        self.counters.loads += 1
        return arr[j]

    def store(self, arr: list, j: int, v: np.ndarray) -> None:
        self.counters.stores += 1
        arr[j] = v

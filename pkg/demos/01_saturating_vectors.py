#!/usr/bin/env python3
"""Tour of the saturating vector unit every kernel is written against.

All kernel arithmetic happens on small vectors of unsigned 16-bit scores.
Addition clamps at 65535 and raises a sticky flag the owning alignment later
reports as overflow; subtraction takes a scalar and clamps at zero, which is
what makes gap-penalty decay branch-free. Every arithmetic op is counted, so
"how much work did this kernel do" is an exact integer, not an estimate.
"""

from swscan import ReferenceBackend, ScoreVector, VectorSpec, SCORE_MAX

bk = ReferenceBackend(VectorSpec(lanes=4))

a = ScoreVector((5, 1, 40, 0))
b = ScoreVector((3, 9, 2, 2))

print("a          =", a.lanes)
print("b          =", b.lanes)
print("max(a, b)  =", bk.vmax(a, b).lanes)
print("a + b      =", bk.sat_add(a, b).lanes)
print("a - 3      =", bk.sat_sub(a, 3).lanes, "(lanes below 3 clamp to 0)")
print("a <<1 lane =", bk.shift_lanes_up(a, 1).lanes, "(zero fills lane 0)")
print()

big = ScoreVector((SCORE_MAX, 10, 0, 0))
bk.sat_add(big, ScoreVector((1, 1, 1, 1)))
print(f"adding 1 to a lane already at {SCORE_MAX} clamps and sets the sticky")
print("saturation flag:", bk.saturated)
bk.sat_sub(big, 5)
print("the flag stays set through later clean ops:", bk.saturated)
print()

c = bk.counters
print("every op was tallied:")
print(f"  maxes={c.maxes} sat_adds={c.sat_adds} sat_subs={c.sat_subs} "
      f"shifts={c.shifts} -> vec_ops_total={c.vec_ops_total}")
print()

print("two laws the scan kernel leans on:")
v = ScoreVector((9, 7, 0, 3))
lhs = bk.shift_lanes_up(bk.sat_sub(v, 2), 1)
rhs = bk.sat_sub(bk.shift_lanes_up(v, 1), 2)
print(f"  shift(v - 2) == shift(v) - 2: {lhs.lanes} == {rhs.lanes}")
lhs = bk.sat_sub(bk.vmax(a, b), 2)
rhs = bk.vmax(bk.sat_sub(a, 2), bk.sat_sub(b, 2))
print(f"  max(a,b) - 2 == max(a-2, b-2): {lhs.lanes} == {rhs.lanes}")

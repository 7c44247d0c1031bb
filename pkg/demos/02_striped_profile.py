#!/usr/bin/env python3
"""How the striped query profile lays residues across vector lanes.

Query position q is stored at segment j = q mod seg_len, lane l = q div
seg_len, with seg_len = ceil(query_len / lanes). Lane l therefore holds a
contiguous run of seg_len positions, and one vector touches p positions
spaced seg_len apart — that spacing is why a vertical gap crossing a lane
boundary needs the correction machinery the kernels implement.

The profile itself stores bias + substitution(symbol, query[q]) so every
entry is non-negative; padded slots past the query end store 0, the most
punitive value once the bias is subtracted back out.
"""

from swscan import Alphabet, ScoringScheme, VectorSpec, build_profile, stripe_index

alphabet = Alphabet.dna()
scheme = ScoringScheme.match_mismatch(alphabet, match=2, mismatch=-1,
                                      gap_open=3, gap_extend=1)
query = "ACGTTGA"
spec = VectorSpec(lanes=4)
prof = build_profile(alphabet.encode(query), scheme, spec)

print(f"query {query!r}, {spec.lanes} lanes -> seg_len = {prof.seg_len}, "
      f"bias = {prof.bias}")
print()
print("position -> (segment, lane):")
for q in range(prof.seg_len * spec.lanes):
    j, l = stripe_index(q, prof.seg_len, spec.lanes)
    res = query[q] if q < len(query) else "(pad)"
    print(f"  q={q}  ->  segment {j}, lane {l}   {res}")
print()

print("profile row for symbol 'A' (bias 1, so match=3, mismatch=0, pad=0):")
for j, vec in enumerate(prof.vectors[alphabet.index_of("A")]):
    print(f"  segment {j}: {vec.lanes}")
print()

print("lane boundary arithmetic: the predecessor of lane l's first position")
print("is lane l-1's last position, which is what shifting the final H")
print("vector up one lane exposes at the start of each column:")
for l in range(1, spec.lanes):
    before = stripe_index(l * prof.seg_len - 1, prof.seg_len, spec.lanes)
    first = stripe_index(l * prof.seg_len, prof.seg_len, spec.lanes)
    print(f"  lane {l}: predecessor of {first} is {before}")

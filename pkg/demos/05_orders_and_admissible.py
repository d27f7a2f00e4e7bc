"""
The spacing omega = ord_{ms}(B) drives the size of the output; this
tabulates it along the admissible targets s for a few progressions.
"""

from itertools import islice

import numpy as np

from simniven import ConstructionParams, admissible_stream, spacing
from simniven.construction import crt_seed, predicted_bits

for params in (ConstructionParams(10, 1, 7, 3), ConstructionParams(2, 2, 9, 4), ConstructionParams(3, 3, 10, 7)):
    q, s_star, mq = crt_seed(params)
    print(f"b={params.b} k={params.k} m={params.m} r={params.r}: rad(b) = {q}, CRT seed s* = {s_star} (mod {mq})")
    rows = []
    for a in islice(admissible_stream(params), 12):
        w = spacing(params, a)
        rows.append((a.s, w, predicted_bits(params.B, w, a.s), a.in_crt_family))
    table = np.array([r[:3] for r in rows])
    print("   s  omega   bits  crt-family")
    for s, w, bits, fam in rows:
        print(f"{s:>4} {w:>6} {bits:>6}  {'yes' if fam else ''}")
    print(f"   median bits: {np.median(table[:, 2]):.0f}\n")

"""
Compare the explicit construction with an exhaustive scan.

The construction is far from the smallest witness; the scan shows how
common simultaneous Niven numbers really are in a short range.
"""

import time

from simniven import ConstructionParams, construct, scan_simultaneous

params = ConstructionParams(b=2, k=3, m=5, r=3)

t = time.perf_counter()
report = scan_simultaneous(params, 10**6, shards=4)
print(f"scan: {report.count} hits <= {report.limit} in {time.perf_counter() - t:.2f}s")
print("first hits:", report.hits[:12])

res = construct(params, 3)
print("constructed:", res.value, "(past the scan range)" if res.value > report.limit else "")

big = scan_simultaneous(params, 2 * 10**7)
print("constructed value found by a longer scan:", res.value in big.hits)
print("rank among hits:", big.hits.index(res.value) + 1, "of", big.count)

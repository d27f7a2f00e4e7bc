"""
Which intermediate bases b**l come for free?

For l dividing k the construction is automatically b**l-Niven.  For other
l it may happen by accident (16781313 in base 4) or fail (299593 in base 4).
"""

from simniven import ConstructionParams, construct, digit_sum, is_niven, render, to_base

cases = [
    ("worked example", ConstructionParams(2, 3, 5, 3), 3),
    ("m = 1, s = 7", ConstructionParams(2, 3, 1, 0), 7),
]

for label, params, s in cases:
    res = construct(params, s)
    print(f"{label}: n = {res.value}, omega = {res.omega}")
    print("  certified bases:", res.certificate.bases)
    for g in (2, 4, 8):
        ds = digit_sum(res.value, g)
        print(f"  base {g}: {render(to_base(res.value, g)):>26}  s_{g} = {ds:<3} Niven: {is_niven(res.value, g)}")
    print()

# k = 6 has divisors 1, 2, 3, 6: bases 2, 4, 8, 64 all certified
res = construct(ConstructionParams(2, 6, 7, 3), 3)
print("k = 6 certified bases:", res.certificate.bases, "passed:", res.certificate.passed)

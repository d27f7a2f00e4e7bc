"""
Build the smallest sparse-repunit witness for bases 2 and 8 in the
progression 3 (mod 5), then look at it digit by digit.
"""

from simniven import ConstructionParams, admissible_stream, construct, render, to_base
from simniven.numtheory import mod_pow

params = ConstructionParams(b=2, k=3, m=5, r=3)
print("B =", params.B)

# Digit-sum targets: s = 3 (mod 5) and s odd
targets = admissible_stream(params)
s = next(targets).s
print("first admissible s:", s)

# Spacing: first w with 8**w = 1 (mod 15)
for w in range(1, 6):
    print(f"  8^{w} mod 15 = {mod_pow(8, w, 15)}")

res = construct(params, s)
print("omega =", res.omega)
print("n_s   =", res.value)

for g in (8, 2):
    e = to_base(res.value, g)
    print(f"base {g}: ({render(e)})_{g}   digit sum {e.digit_sum}")

print("n_s mod 5 =", res.value % 5, "  n_s mod 3 =", res.value % 3)
print()
for claim in res.certificate.claims:
    print(f"{claim.name:<24} expected {claim.expected:<3} actual {claim.actual:<3} {'ok' if claim.passed else 'FAILED'}")

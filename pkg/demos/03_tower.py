"""
Tower construction: replace k by K = lcm(1..k) so that every base
b, b**2, ..., b**k sees the same sparse repunit.
"""

from itertools import islice

from simniven import ConstructionParams, admissible_stream, construct, construct_tower, digit_sum

params = ConstructionParams(b=3, k=4, m=5, r=2)

for a in islice(admissible_stream(params), 3):
    plain = construct(params, a)
    tower = construct_tower(params, a)
    print(f"s = {a.s}")
    print(f"  plain: omega = {plain.omega:<4} bits = {plain.value.bit_length():<6} bases {plain.certificate.bases}")
    print(f"  tower: K = {tower.tower_K}, Omega = {tower.omega:<3} bits = {tower.value.bit_length():<6} bases {tower.certificate.bases}")
    sums = [digit_sum(tower.value, 3**l) for l in range(1, 5)]
    print("  tower digit sums in bases 3, 9, 27, 81:", sums)
    print("  plain digit sum in base 27:", digit_sum(plain.value, 27), "(27 = 3**3, 3 does not divide 4)")

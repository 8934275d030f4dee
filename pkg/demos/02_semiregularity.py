"""
Semi-regularity through Koszul homology
=======================================

H_1 of the Koszul complex, the three d-regularity tests, Pardue's
definition and the first fall degree.
"""

from semigb import PolyRing, PolySequence
from semigb.koszul import (
    check_crypto_semiregular, check_d_regular, check_pardue_semiregular,
    fall_consistency, first_fall_degree, h1_dimension, koszul_report,
)

R = PolyRing(73, 3)
top = PolySequence(tuple(R.parse(s) for s in [
    "x1^2 + 3*x1*x2 - 2*x1*x3 + x2^2 - 2*x2*x3 + x3^2",
    "4*x1^2 + 3*x1*x2 + 4*x1*x3 + x3^2",
    "3*x1^2 + 9*x2^2 - 6*x2*x3 + x3^2",
    "x1^2 - 6*x1*x2 + 2*x1*x3 + 9*x2^2 - 6*x2*x3 + 2*x3^2",
]))

# H_1 is zero below D = 3, then non-trivial syzygies appear
print("dim H_1 by degree:", [h1_dimension(top, d) for d in range(6)])

# the three characterizations agree
for d in (3, 4):
    print(f"{d}-regular:", {m: check_d_regular(top, d, m) for m in ("direct", "series", "homology")})
print("cryptographic semi-regular, D:", check_crypto_semiregular(top))
print("semi-regular in Pardue's sense:", check_pardue_semiregular(top))

# a repeated generator is caught by every test
R2 = PolyRing(73, 2)
double = PolySequence((R2.parse("x1^2"), R2.parse("x1^2")))
print("(x1^2, x1^2):", h1_dimension(double, 2), check_d_regular(double, 3, "homology"))

# over a small field, syzygies of B = F_q[x]/<x_i^q> fall at the same degree
R7 = PolyRing(7, 2)
small = PolySequence(tuple(R7.parse(s) for s in
                           ["x1^2 + 2*x1*x2", "x2^2 + 3*x1*x2", "x1^2 + x2^2 + x1*x2"]))
print("first fall degree over F_7:", first_fall_degree(small, 7))
print("consistency with H_1:", fall_consistency(small, 7))

print(koszul_report(top, dmax=5).to_dict())

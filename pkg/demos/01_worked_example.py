"""
Four quadrics over F_73
=======================

An affine system, its top part and its homogenization, side by side.
"""

from semigb import PolyRing, PolySequence, buchberger, dehomogenize_gb
from semigb.series import degree_of_regularity, hf_from_staircase, semiregular_series

R = PolyRing(73, 3)
F = PolySequence(tuple(R.parse(s) for s in [
    "x1^2 + 3*x1*x2 - 2*x1*x3 - x1 + x2^2 - 2*x2*x3 - 2*x2 + x3^2 + x3",
    "4*x1^2 + 3*x1*x2 + 4*x1*x3 - 2*x1 - x2 + x3^2 + 2*x3",
    "3*x1^2 - x1 + 9*x2^2 - 6*x2*x3 + x2 + x3^2 - x3",
    "x1^2 - 6*x1*x2 + 2*x1*x3 - 2*x1 + 9*x2^2 - 6*x2*x3 + x2 + 2*x3^2",
]))

# the affine ideal is generated by the variables
G = buchberger(F)
print("GB(F)     :", [str(g) for g in G])

# top parts: a generic-looking quadratic system with D = 3
G_top = buchberger(F.top())
print("GB(F^top) :", [str(g) for g in G_top])
print("series    :", semiregular_series(3, F.degrees).coeffs,
      " D =", degree_of_regularity(3, F.degrees))

# homogenized system, one extra variable y
G_hom = buchberger(F.homogenize())
for g in G_hom:
    print("   ", g)
print("HF(F^h)   :", [hf_from_staircase(G_hom.lms(), 4, d) for d in range(6)])

# below D the homogenized and top LMs agree; y appears only from degree D on
print("low LMs   :", sorted(g.LM for g in G_hom if g.degree < 3))
print("y-LMs     :", sorted(g.LM for g in G_hom if g.LM[-1]))

# setting y = 1 and inter-reducing recovers GB(F)
print("dehomog.  :", [str(g) for g in dehomogenize_gb(G_hom)])

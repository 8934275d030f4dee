"""
Three engines and their solving degrees
=======================================

Buchberger, the signature engine and Macaulay matrices return the same
reduced basis; they differ in how far they have to go.
"""

from semigb import PolyRing, PolySequence, buchberger, f5_gb, macaulay_gb
from semigb.macaulay import build_macaulay, complexity_estimate
from semigb.linalg import rank
from semigb.series import degree_of_regularity, macaulay_bound

R = PolyRing(73, 3)
F = PolySequence(tuple(R.parse(s) for s in [
    "x1^2 + 3*x1*x2 - 2*x1*x3 - x1 + x2^2 - 2*x2*x3 - 2*x2 + x3^2 + x3",
    "4*x1^2 + 3*x1*x2 + 4*x1*x3 - 2*x1 - x2 + x3^2 + 2*x3",
    "3*x1^2 - x1 + 9*x2^2 - 6*x2*x3 + x2 + x3^2 - x3",
    "x1^2 - 6*x1*x2 + 2*x1*x3 - 2*x1 + 9*x2^2 - 6*x2*x3 + x2 + 2*x3^2",
]))
Fh = F.homogenize()

Gb = buchberger(Fh)
Gs = f5_gb(Fh)
Gm, sd_mac = macaulay_gb(Fh)
print("engines agree:", Gb == Gs == Gm, " basis size:", len(Gb))

# the signature engine never reduces to zero below D
for d, rec in sorted(Gs.log.records.items()):
    print(f"  step degree {d}: pairs {rec.pairs}, zero reductions {rec.zero_reductions}")

# the degree-2 slice of M(F^top) has rank 6 - HF(2) = 4
M = build_macaulay(F.top(), 2, cumulative=False)
print("slice shape", M.shape, "rank", rank(M.body))

# bounds and the cost of eliminating at each of them
D = degree_of_regularity(3, F.degrees)
print("sd_mac:", sd_mac, " D:", D, " 2D-2:", 2 * D - 2,
      " Macaulay bound:", macaulay_bound(3, F.degrees))
for d in (D, 2 * D - 2, macaulay_bound(3, F.degrees)):
    print(f"  d={d}: omega=2 -> {complexity_estimate(3, d, 2)}, "
          f"omega=2.81 -> {complexity_estimate(3, d, 2.81)}")

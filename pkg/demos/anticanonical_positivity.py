"""
Anticanonical degrees on invariant curves
=========================================

Divisor classes are exact rational combinations of H and the boundary
divisors.  Pairing the canonical class with the tabulated intersection
numbers of each torus-invariant curve gives its degree; positivity of
those degrees decides ampleness.
"""

from kausz.combinatorics import Params
from kausz.curves import anticanonical_degrees, catalog, intersect, positivity_verdict
from kausz.picard import basis, m_named_divisor, named_divisor

P = Params(3, 2, 5)
print("basis on T:", basis(P, "T"))
K = named_divisor(P, "K")
print("K =", K)
print("K_M =", m_named_divisor(P, "KM"))

antiK = -K
for c in catalog(P)[:6]:
    print(f"  {str(c.id):22s} -K.C = {intersect(antiK, c)}")

###############################################################################
# Each curve also carries the closed form listed alongside its table.  One
# family disagrees with the pairing: for zeta^0_j the table gives
# 2 + delta(r,j) while the listed value is 3 - delta(r,j).

for row in anticanonical_degrees(P):
    if row.match is False:
        print("disagreement:", row.id, "derived", row.derived, "listed", row.reference)

###############################################################################
# Rank decides ampleness: zero degrees appear exactly on gamma_1..gamma_{r-2}.

for q in [Params(4, 2, 7), Params(5, 3, 9), Params(6, 4, 12)]:
    v = positivity_verdict(q)
    print(q, "r =", v["r"], v["T_verdict"], v["T_zero_curves"], "M:", v["M_verdict"])

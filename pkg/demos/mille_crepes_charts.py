"""
Mille Crêpes charts
===================

The main chart at level l parametrizes an open piece of T_{s,p,n} by a
polynomial matrix.  Its distinguished minors factor as monomials, which is
what the blow-up structure predicts.
"""

from kausz.combinatorics import Params
from kausz.grassmann import chart_variables, main_chart, mille_crepes_matrix, verify_te

P = Params(3, 2, 5)
tau = main_chart(P, 0)
print("rows", tau.rows, "columns", tau.cols)

M = mille_crepes_matrix(P, tau)
for row in M.rows:
    print("  ", " | ".join(str(e) for e in row))

# one coordinate per dimension of G(2,5)
print(len(chart_variables(P, tau)), "variables, dim", P.dim)

###############################################################################
# The minors on the pivot columns are monomials in the b and a variables.

for l in range(P.r + 1):
    rep = verify_te(P, l)
    print("l =", l, "ok" if rep["ok"] else "MISMATCH")
    for e in rep["entries"]:
        print("    k =", e["k"], e["computed"], "sign", e["sign"])

###############################################################################
# The same check over every main chart up to n = 8.

from kausz.combinatorics import all_params

total = sum(P.r + 1 for P in all_params(8))
good = sum(verify_te(P, l)["ok"] for P in all_params(8) for l in range(P.r + 1))
print(good, "of", total, "charts factor as expected")

"""
Effective cones and automorphism groups
=======================================

Extremal rays come from an exact simplex with a certificate for every
answer.  The automorphism groups depend only on the normalized triple.
"""

from kausz.classifier import aut_M, aut_T, normalize
from kausz.combinatorics import Params
from kausz.curves import extremal_rays
from kausz.picard import named_divisor, pullback_auto

for P, space in [(Params(4, 2, 7), "T"), (Params(3, 2, 5), "T"), (Params(4, 2, 7), "M")]:
    rep = extremal_rays(P, space)
    print(P, space, rep.extremal, "matches list:", rep.match)

###############################################################################
# With r = 1 and p = n-s there are only two rays.  B_1 equals H, which is
# B_0 + Dplus_1, so the third listed generator is interior.

rep = extremal_rays(Params(3, 1, 4), "T")
print(rep.extremal, "listed", rep.printed_dedup)
print("certificate for B_1:", rep.certificates["B_1"].multipliers)

###############################################################################
# Swapping the two sides when n = 2s fixes the canonical class.

P = Params(3, 2, 6)
f = pullback_auto(P, "USDstar")
K = named_divisor(P, "K")
print("USD* K == K:", f(K) == K)

###############################################################################
# Classification.  Non-normalized input is first moved into 2p <= n <= 2s.

for key in [(1, 1, 2), (3, 1, 4), (1, 3, 4), (2, 1, 4), (3, 3, 6), (2, 3, 5)]:
    P = Params(*key)
    q, trace = normalize(P)
    t, m = aut_T(P), aut_M(P)
    print(key, "->", (q.s, q.p, q.n), trace)
    print("    T:", t.connected, t.discrete, t.model or "")
    print("    M:", m.connected, m.discrete, m.model or "")

"""
Plücker coordinates, duality and column reversal
================================================

A point of G(2,4) given by a 2x4 matrix, its maximal minors, the one
quadratic relation they satisfy, and what the two involutions do to it.
"""

from fractions import Fraction

from kausz.grassmann import (
    dual_point,
    dual_sign_check,
    pluecker_relations_check,
    pluecker_vector,
    usd_point,
    usd_sign_check,
)

m = [[1, 0, 2, 3], [0, 1, 4, 5]]
v = pluecker_vector(m)
for I, val in sorted(v.entries.items()):
    print("P", I, "=", val)

# G(2,4) has a single relation P12 P34 - P13 P24 + P14 P23 = 0
print("relations hold:", pluecker_relations_check(v).ok)

# nudging one coordinate leaves the Grassmannian
entries = dict(v.entries)
entries[(4, 3)] += 1
bad = type(v)(2, 4, entries)
print("after a nudge:", pluecker_relations_check(bad).violations[:1])

###############################################################################
# The dual point is the kernel, written in the chart form (-A^T | I).

ms = dual_point(m)
print("dual:", [[str(x) for x in row] for row in ms])
print("dual minors agree up to", dual_sign_check(m))

# rational entries work the same way
print([[str(x) for x in row] for row in dual_point([[1, Fraction(1, 2), Fraction(-2, 3)]])])

###############################################################################
# Reversing the columns is an involution; it permutes the minors with a
# sign that only depends on p.

print("usd:", [[str(x) for x in row] for row in usd_point(m)])
print("usd twice is the identity:", usd_point(usd_point(m)) == m)
print(usd_sign_check(m))

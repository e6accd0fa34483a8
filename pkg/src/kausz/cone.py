"""Exact rational cone membership with certificates.

``in_cone`` runs a phase-one simplex (Bland's rule, Fractions throughout) and
returns either nonnegative multipliers or a Farkas vector ``y`` with
``y . v <= 0`` for every generator and ``y . target > 0``.  The certificate is
re-checked independently of the simplex bookkeeping before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations


@dataclass
class ConeCertificate:
    member: bool
    multipliers: list | None = None  # when member
    farkas: list | None = None  # when not


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def in_cone(gens, target) -> ConeCertificate:
    gens = [[Fraction(x) for x in g] for g in gens]
    target = [Fraction(x) for x in target]
    m, k = len(target), len(gens)
    sign = [(-1 if t < 0 else 1) for t in target]
    # rows: sum_j V[i][j] lam_j + a_i = g_i, sign-flipped so rhs >= 0
    T = []
    for i in range(m):
        row = [sign[i] * gens[j][i] for j in range(k)]
        row += [Fraction(int(i == t)) for t in range(m)]
        row.append(sign[i] * target[i])
        T.append(row)
    basis = [k + i for i in range(m)]
    ncol = k + m
    cost = [Fraction(0)] * k + [Fraction(1)] * m

    def reduced(j):
        return cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))

    while True:
        entering = next((j for j in range(ncol) if reduced(j) < 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = T[i][-1] / T[i][entering]
                if best is None or (ratio, basis[i]) < (best[0], basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen: phase one is bounded below by 0
            raise AssertionError("unbounded phase-one problem")
        i = best[1]
        piv = T[i][entering]
        T[i] = [x / piv for x in T[i]]
        for r in range(m):
            if r != i and T[r][entering] != 0:
                f = T[r][entering]
                T[r] = [a - f * b for a, b in zip(T[r], T[i])]
        basis[i] = entering

    infeasibility = sum(cost[basis[i]] * T[i][-1] for i in range(m))
    if infeasibility == 0:
        lam = [Fraction(0)] * k
        for i, b in enumerate(basis):
            if b < k:
                lam[b] = T[i][-1]
        combo = [sum(lam[j] * gens[j][i] for j in range(k)) for i in range(m)]
        if combo != target or any(x < 0 for x in lam):
            raise AssertionError("simplex returned an invalid combination")
        return ConeCertificate(True, multipliers=lam)
    # simplex multipliers of the flipped system: y_i = 1 - reduced cost of a_i
    y = [sign[i] * (1 - reduced(k + i)) for i in range(m)]
    if any(_dot(y, g) > 0 for g in gens) or _dot(y, target) <= 0:
        raise AssertionError("simplex returned an invalid Farkas vector")
    return ConeCertificate(False, farkas=y)


def _solve(cols, target):
    """Exact solution of ``sum x_j cols[j] = target`` for independent cols, or None."""
    m, k = len(target), len(cols)
    A = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    row = 0
    pivots = []
    for c in range(k):
        pr = next((i for i in range(row, m) if A[i][c] != 0), None)
        if pr is None:
            return None  # dependent columns
        A[row], A[pr] = A[pr], A[row]
        A[row] = [x / A[row][c] for x in A[row]]
        for i in range(m):
            if i != row and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[row])]
        pivots.append(c)
        row += 1
    if any(A[i][-1] != 0 for i in range(row, m)):
        return None
    return [A[i][-1] for i in range(k)]


def in_cone_bruteforce(gens, target) -> bool:
    """Carathéodory enumeration: target lies in the cone spanned by some
    linearly independent subset with nonnegative coefficients."""
    gens = [[Fraction(x) for x in g] for g in gens]
    target = [Fraction(x) for x in target]
    if all(t == 0 for t in target):
        return True
    for size in range(1, min(len(gens), len(target)) + 1):
        for sub in combinations(gens, size):
            x = _solve(list(sub), target)
            if x is not None and all(v >= 0 for v in x):
                return True
    return False


def primitive_ray(v):
    """Scale a nonzero rational vector so its entries are coprime integers."""
    from math import gcd, lcm

    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def extremal_generators(named):
    """Extremal members of a list of ``(name, vector)`` generators.

    Zero vectors are dropped and generators on a common ray are merged (the
    first name is kept).  Returns ``(extremal_names, aliases, certificates)``.
    """
    rays = {}
    order = []
    aliases = {}
    for name, vec in named:
        if all(Fraction(x) == 0 for x in vec):
            aliases[name] = None
            continue
        key = primitive_ray(vec)
        if key in rays:
            aliases[name] = rays[key][0]
            continue
        rays[key] = (name, [Fraction(x) for x in vec])
        order.append(key)
        aliases[name] = name
    extremal = []
    certs = {}
    for key in order:
        name, vec = rays[key]
        others = [rays[o][1] for o in order if o != key]
        cert = in_cone(others, vec)
        certs[name] = cert
        if not cert.member:
            extremal.append(name)
    return extremal, aliases, certs

"""Parameters, Plücker index sets and the two index involutions.

Index tuples are stored exactly as written in the literature on these spaces:
strictly decreasing, ``(i_1, ..., i_p)`` with ``i_1 > ... > i_p``.
Enumerations are returned sorted in the canonical order of the *increasing*
column lists, which is also the order Plücker vectors use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

INF = math.inf


@dataclass(frozen=True, order=True)
class Params:
    s: int
    p: int
    n: int

    def __post_init__(self):
        for name in ("s", "p", "n"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an int")
        if not 0 < self.p < self.n:
            raise ValueError(f"need 0 < p < n, got p={self.p}, n={self.n}")
        if not 0 < self.s < self.n:
            raise ValueError(f"need 0 < s < n, got s={self.s}, n={self.n}")

    @property
    def r(self) -> int:
        return min(self.s, self.n - self.s, self.p, self.n - self.p)

    @property
    def normalized(self) -> bool:
        return 2 * self.p <= self.n <= 2 * self.s

    @property
    def dim(self) -> int:
        return self.p * (self.n - self.p)

    def __str__(self):
        return f"({self.s},{self.p},{self.n})"


def rank(params: Params) -> int:
    return params.r


def all_params(n_max: int, normalized_only: bool = True, n_min: int = 2):
    """All valid triples with ``n_min <= n <= n_max``, sorted by (n, s, p)."""
    out = []
    for n in range(n_min, n_max + 1):
        for s in range(1, n):
            for p in range(1, n):
                prm = Params(s, p, n)
                if normalized_only and not prm.normalized:
                    continue
                out.append(prm)
    out.sort(key=lambda q: (q.n, q.s, q.p))
    return out


def check_index(I, p: int, n: int) -> tuple[int, ...]:
    I = tuple(int(i) for i in I)
    if len(I) != p:
        raise ValueError(f"index {I} should have length {p}")
    if any(not 1 <= i <= n for i in I):
        raise ValueError(f"index {I} has entries outside 1..{n}")
    if any(I[t] <= I[t + 1] for t in range(p - 1)):
        raise ValueError(f"index {I} is not strictly decreasing")
    return I


def index_set(p: int, n: int) -> list[tuple[int, ...]]:
    """The full index set of decreasing p-tuples in 1..n."""
    return [tuple(reversed(c)) for c in combinations(range(1, n + 1), p)]


def k_type(I, s: int) -> int:
    return sum(1 for i in I if i > s)


def restricted_index_set(params: Params, k: int) -> list[tuple[int, ...]]:
    """Tuples with exactly ``k`` entries in ``s+1..n`` and ``p-k`` in ``1..s``."""
    if not 0 <= k <= params.r:
        raise ValueError(f"k={k} outside 0..{params.r}")
    s, p, n = params.s, params.p, params.n
    out = []
    for low in combinations(range(1, s + 1), p - k):
        for high in combinations(range(s + 1, n + 1), k):
            out.append(tuple(reversed(low + high)))
    out.sort(key=lambda I: tuple(reversed(I)))
    return out


def permutation_sign(seq) -> int:
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    seq = list(seq)
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def dual_index(I, params: Params) -> tuple[tuple[int, ...], int]:
    """Complement of ``I`` in 1..n together with ``(-1)^sigma(I)``.

    ``sigma(I)`` is the signature of ``(i_1 .. i_p, i*_1 .. i*_{n-p}) -> (1 .. n)``
    with both halves written decreasingly.
    """
    n = params.n
    I = check_index(I, len(I), n)
    rest = set(I)
    Istar = tuple(j for j in range(n, 0, -1) if j not in rest)
    return Istar, permutation_sign(I + Istar)


def usd_index(I, params: Params) -> tuple[int, ...]:
    n = params.n
    I = check_index(I, len(I), n)
    return tuple(n + 1 - i for i in reversed(I))


@dataclass(frozen=True)
class OrbitSignature:
    plus: frozenset
    minus: frozenset

    def to_json(self):
        return {"I+": sorted(self.plus), "I-": sorted(self.minus)}


def _min(S) -> float:
    # min of the empty set is +infinity, never a large integer
    return min(S) if S else INF


def _subsets(r: int):
    for size in range(r + 1):
        for c in combinations(range(1, r + 1), size):
            yield frozenset(c)


def orbit_closures(params: Params) -> list[OrbitSignature]:
    """Pairs (I+, I-) of subsets of 1..r with min(I+) + min(I-) >= r + 2."""
    r = params.r
    out = [
        OrbitSignature(a, b)
        for a in _subsets(r)
        for b in _subsets(r)
        if _min(a) + _min(b) >= r + 2
    ]
    out.sort(key=lambda o: (sorted(o.plus), sorted(o.minus)))
    return out


def fibration_report(params: Params) -> dict:
    """Which case of the fibration structure over sub-Grassmannians applies."""
    s, p, n = params.s, params.p, params.n
    m = n - s

    def fib(base, fiber):
        return {
            "base": {"grassmannian": list(base)},
            "fiber_T": list(fiber),
            "fiber_M": list(fiber),
        }

    if p < m and p < s:
        case = "A"
        fibrations = [fib((p, s), (p, p, m + p)), fib((p, m), (p, p, s + p))]
    elif m < p < s:
        case = "B"
        fibrations = [fib((p, s), (m, m, m + p)), fib((s + p - n, s), (m, m, 2 * n - s - p))]
    elif p == m < s:
        case = "C"
        fibrations = [fib((p, s), (p, p, 2 * p))]
    else:
        case = "none of (A)-(C)"
        fibrations = []
    return {"params": [s, p, n], "case": case, "fibrations": fibrations}

"""Torus-invariant curves on T_{s,p,n}: intersection tables and positivity.

Every curve is a coordinate line in one of the main charts.  Its intersection
numbers with H and the boundary divisors are the primitive data here; each
closed-form -K degree that accompanies a family is kept only as a reference
value and compared against the pairing with the canonical class.

Kronecker deltas with an index outside 1..r contribute 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import Params
from .cone import extremal_generators
from .picard import (
    H,
    DivisorClass,
    Dm,
    Dp,
    basis,
    case_label,
    m_named_divisor,
    named_divisor,
    spanning_symbols,
)

FAMILIES = ("gamma", "zeta", "zetaUV", "delta", "Delta")


def kd(a: int, b: int) -> int:
    return 1 if a == b else 0


@dataclass(frozen=True, order=True)
class CurveId:
    family: str
    l: int
    data: tuple = ()

    def __str__(self):
        if self.family == "gamma":
            return f"gamma_{self.l}"
        if self.family == "zeta":
            return f"zeta^{self.l}_{self.data[0]}"
        if self.family == "zetaUV":
            k, u, v = self.data
            return f"zeta^{{{self.l},{k}}}_{{{u},{v}}}"
        m1, m2 = self.data
        return f"{self.family}^{self.l}_{{{m1},{m2}}}"


@dataclass
class CurveRecord:
    id: CurveId
    ivec: dict  # spanning symbol -> int
    ref_antiK: int | None = None
    ref_source: str = ""

    def vector(self, params: Params) -> list[int]:
        return [self.ivec.get(sym, 0) for sym in spanning_symbols(params, "T")]


def _vec(params: Params, h: int, minus, plus) -> dict:
    """Build an intersection vector from callables i -> value on 1..r."""
    r = params.r
    out = {H: h}
    for i in range(1, r + 1):
        out[Dm(i)] = minus(i)
        out[Dp(i)] = plus(i)
    return out


def _zero(i):
    return 0


# -- closed-form -K references, one per family ---------------------------------


def _ref_gamma(params, l):
    r = params.r
    return 2 if r == 1 else kd(0, l) + kd(r - 1, l)


def _ref_zeta(params, l, j):
    r = params.r
    if l == 0:
        return 3 - kd(r, j), "zeta0_closed_form"
    return 2 + kd(r - l, j) + kd(r, j), "zeta_closed_form"


def _ref_zeta_uv_low(params, l, k, u, v):
    """Reference for the families with 1 <= k <= r-l."""
    s, p, n, r = params.s, params.p, params.n, params.r
    if u == l + k:
        if s + l + k + 1 <= v <= r + s - 1:
            return 2 * (v - s - l - k)
        if v == r + s and k <= r - l - 1:
            return 2 * (r - l - k) + 1
        if r + s + 1 <= v <= n and k <= r - l - 1:
            return n - s + p - 2 * (l + k) + 1
        if r + s + 1 <= v <= n and k == r - l:
            return n - s + p - 2 * r
        return None
    if l + k + 1 <= u <= r - 1:
        return 2 * (u - l - k)
    if u == r and k <= r - l - 1:
        return 2 * (r - l - k) + 1
    if r + 1 <= u <= p and k <= r - l - 1:
        return n - s + p - 2 * (l + k) + 1
    if r + 1 <= u <= p and k == r - l:
        return n - s + p - 2 * r
    return None


def _ref_zeta_uv_high(params, l, k, u, v):
    """Reference for the families with r-l+1 <= k <= r."""
    s, p, r = params.s, params.p, params.r
    if u == r - k + 1:
        if s - p + 2 <= v <= s - p + r - k:
            return 2 * (s - p + r - k + 1 - v)
        if v == s - p + 1 and k <= r - 1:
            return 2 * (r - k) + 1
        if 1 <= v <= s - p and k <= r - 1:
            return 2 * (r - k) + s - p + 1
        if 1 <= v <= s - p and k == r:
            return s - p
        return None
    if 2 <= u <= r - k:
        return 2 * (r - k + 1 - u)
    if u == 1 and k <= r - 1:
        return 2 * (r - k) + 1
    return None


def _ref_delta(params, l, m1, m2):
    s, p, n, r = params.s, params.p, params.n, params.r
    lo, mid = 1 <= m1 <= r - l - 1, m1 == r - l
    if lo or mid:
        if 1 <= m2 <= l - 1:
            return 2 * m1 + 2 * m2 - 2 if lo else 2 * (r - l + m2) - 1
        if m2 == l:
            return 2 * m1 + 2 * l - 1 if lo else 2 * r
        return 2 * m1 + 2 * l - 1 + s - p if lo else 2 * r + s - p
    if 1 <= m2 <= l - 1:
        return 2 * (r - l + m2) - 1 + s + p - n
    if m2 == l:
        return n - s + p
    return n


def _ref_Delta(params, l, m1, m2):
    s, p, n, r = params.s, params.p, params.n, params.r
    if 1 <= m1 <= r - l - 1:
        if 1 <= m2 <= l - 1:
            return 2 * m1 + 2 * m2 - 2
        if m2 == l:
            return 2 * m1 + 2 * l - 1
        return None
    if m1 == r - l:
        if 1 <= m2 <= l - 1:
            return 2 * (r - l + m2) - 1
        if m2 == l:
            return 2 * r
        return None
    if 1 <= m2 <= l - 1:
        return 2 * (r - l + m2) - 1 + n - s - p
    if m2 == l:
        return n - s + p
    return None


# -- the catalog ---------------------------------------------------------------


def _zeta_uv_ids(params: Params, l: int):
    s, p, n, r = params.s, params.p, params.n, params.r
    out = []
    for k in range(1, r - l + 1):
        for v in range(s + l + k + 1, n + 1):
            out.append((k, l + k, v))
        for u in range(l + k + 1, p + 1):
            out.append((k, u, s + l + k))
    for k in range(r - l + 1, r + 1):
        for v in range(1, s - p + r - k + 1):
            out.append((k, r - k + 1, v))
        for u in range(1, r - k + 1):
            out.append((k, u, s - p + r - k + 1))
    return out


def _zeta_uv_vector(params: Params, l: int, k: int, u: int, v: int) -> dict:
    s, p, r = params.s, params.p, params.r
    if k <= r - l:
        a = l + k
        if (u == a and v == s + a + 1) or (v == s + a and u == a + 1):
            minus = lambda i: -kd(i, a) + 2 * kd(i, a + 1) - kd(i, a + 2)  # noqa: E731
        elif u == a:
            minus = lambda i: -kd(i, a) + kd(i, a + 1) + kd(i, v - s) - kd(i, v - s + 1)  # noqa: E731
        else:
            minus = lambda i: -kd(i, a) + kd(i, a + 1) + kd(i, u) - kd(i, u + 1)  # noqa: E731
        return _vec(params, 0, minus, _zero)
    c = s - p + r - k  # last free column left of the pivot
    if (u == r - k + 1 and v == c) or (v == c + 1 and u == r - k):
        plus = lambda i: -kd(i, k) + 2 * kd(i, k + 1) - kd(i, k + 2)  # noqa: E731
    elif u == r - k + 1:
        plus = lambda i: (  # noqa: E731
            -kd(i, k) + kd(i, k + 1) + kd(i, s - p + r + 1 - v) - kd(i, s - p + r + 2 - v)
        )
    else:
        plus = lambda i: -kd(i, k) + kd(i, k + 1) + kd(i, r + 1 - u) - kd(i, r + 2 - u)  # noqa: E731
    return _vec(params, 0, _zero, plus)


def catalog(params: Params) -> list[CurveRecord]:
    if not params.normalized:
        raise ValueError(f"{params} is not normalized; normalize first")
    s, p, n, r = params.s, params.p, params.n, params.r
    out = []
    for l in range(r):
        vec = _vec(
            params,
            1,
            lambda i: kd(i, l + 1) - kd(i, l + 2),
            lambda i: kd(i, r - l) - kd(i, r - l + 1),
        )
        out.append(CurveRecord(CurveId("gamma", l), vec, _ref_gamma(params, l), "gamma_closed_form"))
    for l in range(r + 1):
        for j in range(2, r + 1):
            if j <= r - l:
                a = l + j
                vec = _vec(params, 0, lambda i: -kd(i, a - 1) + 2 * kd(i, a) - kd(i, a + 1), _zero)
            elif j >= r - l + 2:
                vec = _vec(params, 0, _zero, lambda i: -kd(i, j - 1) + 2 * kd(i, j) - kd(i, j + 1))
            else:
                continue
            ref, src = _ref_zeta(params, l, j)
            out.append(CurveRecord(CurveId("zeta", l, (j,)), vec, ref, src))
        for k, u, v in _zeta_uv_ids(params, l):
            vec = _zeta_uv_vector(params, l, k, u, v)
            if k <= r - l:
                ref, src = _ref_zeta_uv_low(params, l, k, u, v), "zetaUV_low_closed_form"
            else:
                ref, src = _ref_zeta_uv_high(params, l, k, u, v), "zetaUV_high_closed_form"
            out.append(CurveRecord(CurveId("zetaUV", l, (k, u, v)), vec, ref, src))
        if l < r or n - s < p:
            for m1 in range(1, p - l + 1):
                for m2 in range(1, s - p + l + 1):
                    vec = _vec(
                        params,
                        1,
                        lambda i: kd(i, l + m1) - kd(i, l + m1 + 1),
                        lambda i: kd(i, r - l + m2) - kd(i, r - l + m2 + 1),
                    )
                    ref = _ref_delta(params, l, m1, m2)
                    out.append(CurveRecord(CurveId("delta", l, (m1, m2)), vec, ref, "delta_closed_form"))
        if 1 <= l and (l < r or p < n - s):
            for m1 in range(1, n - s - l + 1):
                for m2 in range(1, l + 1):
                    vec = _vec(
                        params,
                        1,
                        lambda i: kd(i, l + m1) - kd(i, l + m1 + 1),
                        lambda i: kd(i, r - l + m2) - kd(i, r - l + m2 + 1),
                    )
                    ref = _ref_Delta(params, l, m1, m2)
                    out.append(CurveRecord(CurveId("Delta", l, (m1, m2)), vec, ref, "Delta_closed_form"))
    return out


def intersect(cls: DivisorClass, c: CurveRecord) -> Fraction:
    if cls.space != "T":
        raise ValueError("curve pairing is defined on T only")
    return sum((coef * c.ivec.get(sym, 0) for sym, coef in cls.coeffs.items()), Fraction(0))


def is_l0_curve(c: CurveRecord) -> bool:
    """Curves of the families lying in the preimage of the closed stratum."""
    return c.id.l == 0 and c.id.family in ("zeta", "zetaUV", "delta")


@dataclass
class DegreeRow:
    id: CurveId
    derived: Fraction
    reference: int | None
    match: bool | None
    source: str = ""


def anticanonical_degrees(params: Params, space: str = "T") -> list[DegreeRow]:
    """Derived -K degree of every catalog curve with its reference value.

    On M only the l = 0 families are used, paired against -K_T - Dminus_1.
    No closed form is tabulated there, so ``reference`` is None.
    """
    antiK = named_divisor(params, "antiK")
    rows = []
    if space == "T":
        for c in catalog(params):
            d = intersect(antiK, c)
            match = None if c.ref_antiK is None else d == c.ref_antiK
            rows.append(DegreeRow(c.id, d, c.ref_antiK, match, c.ref_source))
    elif space == "M":
        cls = antiK - named_divisor(params, "Dminus", 1)
        for c in catalog(params):
            if is_l0_curve(c):
                rows.append(DegreeRow(c.id, intersect(cls, c), None, None, ""))
    else:
        raise ValueError(f"unknown space {space!r}")
    return rows


class PositivityError(AssertionError):
    pass


def positivity_verdict(params: Params) -> dict:
    r = params.r
    T_rows = anticanonical_degrees(params, "T")
    negative = [str(x.id) for x in T_rows if x.derived < 0]
    if negative:
        raise PositivityError(f"negative -K degree on {negative} at {params}")
    zeros = sorted((x.id for x in T_rows if x.derived == 0), key=str)
    expected_zeros = [CurveId("gamma", l) for l in range(1, r - 1)]
    zero_set_ok = sorted(zeros) == sorted(expected_zeros)
    ample = not zeros
    M_rows = anticanonical_degrees(params, "M")
    m_min = min((x.derived for x in M_rows), default=None)
    m_ok = all(x.derived >= 1 for x in M_rows)
    return {
        "params": [params.s, params.p, params.n],
        "r": r,
        "T_min_degree": str(min(x.derived for x in T_rows)),
        "T_zero_curves": [str(z) for z in zeros],
        "T_zero_set_as_expected": zero_set_ok,
        "T_verdict": "ample" if ample else "nef-not-ample",
        "T_verdict_as_expected": ample == (r <= 2),
        "M_min_degree": None if m_min is None else str(m_min),
        "M_curves_checked": len(M_rows),
        "M_verdict": "ample" if m_ok else "not-ample",
    }


def is_nef_on_catalog(cls: DivisorClass) -> bool:
    return all(intersect(cls, c) >= 0 for c in catalog(cls.params))


def relation_consistency(params: Params) -> list[dict]:
    """Tabulated numbers of an eliminated divisor vs. pairing its expansion.

    Returns one entry per mismatch (empty when consistent).
    """
    bad = []
    r = params.r
    checks = []
    if params.p == params.n - params.s:
        checks.append((Dm(r), named_divisor(params, "B", r).reduce()))
    if params.p == params.s:
        checks.append((Dp(r), named_divisor(params, "B", 0).reduce()))
    for sym, expansion in checks:
        for c in catalog(params):
            tab = c.ivec.get(sym, 0)
            paired = intersect(expansion, c)
            if tab != paired:
                bad.append({"symbol": sym, "curve": str(c.id), "table": tab, "pairing": str(paired)})
    return bad


# -- effective cone ------------------------------------------------------------


def eff_generators(params: Params, space: str = "T") -> list[tuple[str, DivisorClass]]:
    r = params.r
    if space == "T":
        gens = [(f"B_{k}", named_divisor(params, "B", k)) for k in range(r + 1)]
        gens += [(f"Dplus_{i}", named_divisor(params, "Dplus", i)) for i in range(1, r + 1)]
        gens += [(f"Dminus_{i}", named_divisor(params, "Dminus", i)) for i in range(1, r + 1)]
        return gens
    gens = [(f"Dcheck_{i}", m_named_divisor(params, "Dcheck", i)) for i in range(2, r + 1)]
    gens += [(f"Bcheck_{k}", m_named_divisor(params, "Bcheck", k)) for k in range(r + 1)]
    return gens


def printed_extremal_rays(params: Params, space: str = "T") -> list[str] | None:
    """The case lists of extremal rays as stated, before deduplication.

    Returns None on M when p = s, where no list is stated.
    """
    r = params.r
    label = case_label(params)
    if space == "T":
        plus = r if label != "n-s=p=s" else r - 1
        minus = r if label == "p<s, n-s!=p" else r - 1
        return (
            ["B_0", f"B_{r}"]
            + [f"Dplus_{i}" for i in range(1, plus + 1)]
            + [f"Dminus_{i}" for i in range(1, minus + 1)]
        )
    if label == "n-s=p=s":
        return None
    top = r if label == "p<s, n-s!=p" else r - 1
    return [f"Dcheck_{i}" for i in range(2, top + 1)] + ["Bcheck_0", f"Bcheck_{r}"]


@dataclass
class ConeReport:
    params: Params
    space: str
    extremal: list
    aliases: dict
    printed: list | None
    printed_dedup: list | None
    match: bool | None
    certificates: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "params": [self.params.s, self.params.p, self.params.n],
            "space": self.space,
            "extremal": self.extremal,
            "aliases": {k: v for k, v in self.aliases.items() if k != v},
            "printed": self.printed,
            "printed_dedup": self.printed_dedup,
            "match": self.match,
        }


def extremal_rays(params: Params, space: str = "T") -> ConeReport:
    gens = eff_generators(params, space)
    named = [(name, cls.vector()) for name, cls in gens]
    extremal, aliases, certs = extremal_generators(named)
    printed = printed_extremal_rays(params, space)
    printed_dedup = None
    match = None
    if printed is not None:
        seen = []
        for name in printed:
            canon = aliases.get(name)
            if canon is not None and canon not in seen:
                seen.append(canon)
        printed_dedup = seen
        match = sorted(seen) == sorted(extremal)
    return ConeReport(params, space, extremal, aliases, printed, printed_dedup, match, certs)

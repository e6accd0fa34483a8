"""Divisor classes on T_{s,p,n} and M_{s,p,n} with exact rational coefficients.

Classes live over the spanning symbols

    T:  H, Dminus_1 .. Dminus_r, Dplus_1 .. Dplus_r
    M:  Hcheck, Dcheck_1 .. Dcheck_r

and are reduced on demand to a free basis.  In the degenerate cases one or two
symbols are dependent:

    p = n-s:  Dminus_r = H - sum_{i<r} (r+1-i) Dminus_i
    p = s:    Dplus_r  = H - sum_{i<r} (r+1-i) Dplus_i

and on M the restrictions of these, i.e. Dcheck_r is eliminated when p = n-s
and Hcheck = 0 when p = s.  All formulas assume normalized parameters
2p <= n <= 2s; use :func:`kausz.classifier.normalize` first.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .combinatorics import Params

H = "H"
HC = "Hcheck"


def Dm(i: int) -> str:
    return f"Dminus_{i}"


def Dp(i: int) -> str:
    return f"Dplus_{i}"


def Dc(i: int) -> str:
    return f"Dcheck_{i}"


def _need_normalized(params: Params):
    if not params.normalized:
        raise ValueError(f"{params} is not normalized (need 2p <= n <= 2s); normalize first")


def spanning_symbols(params: Params, space: str = "T") -> list[str]:
    r = params.r
    if space == "T":
        return [H] + [Dm(i) for i in range(1, r + 1)] + [Dp(i) for i in range(1, r + 1)]
    if space == "M":
        return [HC] + [Dc(i) for i in range(1, r + 1)]
    raise ValueError(f"unknown space {space!r}")


def case_label(params: Params) -> str:
    """Which of the three Picard cases applies (normalized params)."""
    _need_normalized(params)
    s, p, n = params.s, params.p, params.n
    if p < s and n - s != p:
        return "p<s, n-s!=p"
    if p < s:
        return "n-s=p<s"
    return "n-s=p=s"


def basis(params: Params, space: str = "T") -> list[str]:
    """Ordered free generators of the Picard group."""
    label = case_label(params)
    r = params.r
    if space == "T":
        plus = r if label != "n-s=p=s" else r - 1
        minus = r if label == "p<s, n-s!=p" else r - 1
        return [H] + [Dp(i) for i in range(1, plus + 1)] + [Dm(i) for i in range(1, minus + 1)]
    if space == "M":
        top = r if label == "p<s, n-s!=p" else r - 1
        head = [HC] if label != "n-s=p=s" else []
        return head + [Dc(i) for i in range(1, top + 1)]
    raise ValueError(f"unknown space {space!r}")


def _relations(params: Params, space: str) -> list[tuple[str, dict]]:
    """Eliminations ``symbol -> expansion`` in the order they must be applied."""
    s, p, n, r = params.s, params.p, params.n, params.r
    out = []
    if space == "T":
        if p == n - s:
            out.append((Dm(r), {H: 1, **{Dm(i): -(r + 1 - i) for i in range(1, r)}}))
        if p == s:
            out.append((Dp(r), {H: 1, **{Dp(i): -(r + 1 - i) for i in range(1, r)}}))
    else:
        if p == n - s:
            out.append((Dc(r), {HC: 1, **{Dc(i): -(r + 1 - i) for i in range(1, r)}}))
        if p == s:
            out.append((HC, {}))
    return out


class DivisorClass:
    """A rational combination of spanning symbols on ``space`` in {"T", "M"}."""

    __slots__ = ("space", "params", "coeffs", "note")

    def __init__(self, space: str, params: Params, coeffs=None, note: str = ""):
        _need_normalized(params)
        allowed = set(spanning_symbols(params, space))
        clean = {}
        for sym, c in (coeffs or {}).items():
            if sym not in allowed:
                raise ValueError(f"{sym} is not a spanning symbol of {space} at {params}")
            c = Fraction(c)
            if c:
                clean[sym] = clean.get(sym, 0) + c
        self.space = space
        self.params = params
        self.coeffs = {k: v for k, v in clean.items() if v}
        self.note = note

    def _check(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if (self.space, self.params) != (other.space, other.params):
            raise ValueError("classes live on different spaces")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return DivisorClass(self.space, self.params, out)

    def __neg__(self):
        return DivisorClass(self.space, self.params, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, c):
        c = Fraction(c)
        return DivisorClass(self.space, self.params, {k: c * v for k, v in self.coeffs.items()})

    def __getitem__(self, sym) -> Fraction:
        return self.coeffs.get(sym, Fraction(0))

    def reduce(self) -> "DivisorClass":
        coeffs = dict(self.coeffs)
        for sym, expansion in _relations(self.params, self.space):
            c = coeffs.pop(sym, 0)
            for k, v in expansion.items():
                coeffs[k] = coeffs.get(k, 0) + c * v
        return DivisorClass(self.space, self.params, coeffs, self.note)

    def vector(self) -> list[Fraction]:
        """Coordinates in :func:`basis` order (after reduction)."""
        red = self.reduce()
        return [red[sym] for sym in basis(self.params, self.space)]

    def spanning_vector(self) -> list[Fraction]:
        return [self[sym] for sym in spanning_symbols(self.params, self.space)]

    def is_zero(self) -> bool:
        return not self.reduce().coeffs

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if (self.space, self.params) != (other.space, other.params):
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.space, self.params, tuple(self.vector())))

    def to_json(self):
        return {sym: f"{c.numerator}/{c.denominator}" for sym, c in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for sym in spanning_symbols(self.params, self.space):
            if sym in self.coeffs:
                c = self.coeffs[sym]
                parts.append(f"{c}*{sym}" if c != 1 else sym)
        return " + ".join(parts).replace("+ -", "- ")


def _T(params, coeffs, note=""):
    return DivisorClass("T", params, coeffs, note)


def _M(params, coeffs, note=""):
    return DivisorClass("M", params, coeffs, note)


def _hline(params: Params, j: int) -> dict:
    r = params.r
    out = {H: 1}
    for i in range(1, r - j + 1):
        out[Dp(i)] = -(r - j + 1 - i)
    for i in range(1, j + 1):
        out[Dm(i)] = -(j + 1 - i)
    return out


def canonical_coefficients(params: Params) -> tuple[list[int], list[int]]:
    """``(a^-, a^+)`` with ``K = -n H + sum a^-_i Dminus_i + sum a^+_i Dplus_i``."""
    s, p, n, r = params.s, params.p, params.n, params.r
    minus = [(p - i + 1) * (n - s - i + 1) - 1 for i in range(1, r + 1)]
    if r == p:
        plus = [(p - i + 1) * (s - i + 1) - 1 for i in range(1, r + 1)]
    else:
        plus = [(n - p - i + 1) * (n - s - i + 1) - 1 for i in range(1, r + 1)]
    return minus, plus


def named_divisor(params: Params, name: str, index: int | None = None) -> DivisorClass:
    """Named classes on T: Dplus(i), Dminus(i), B(k), Hline(j), E, K, antiK."""
    _need_normalized(params)
    s, p, n, r = params.s, params.p, params.n, params.r
    if name in ("Dplus", "Dminus"):
        if index is None or not 1 <= index <= r:
            raise ValueError(f"{name} index must be in 1..{r}")
        return _T(params, {(Dp if name == "Dplus" else Dm)(index): 1})
    if name in ("B", "Hline"):
        if index is None or not 0 <= index <= r:
            raise ValueError(f"{name} index must be in 0..{r}")
        if name == "B" and index == 0 and p == s:
            return _T(params, {Dp(r): 1})
        if name == "B" and index == r and p == n - s:
            return _T(params, {Dm(r): 1})
        return _T(params, _hline(params, index))
    if name == "E":
        label = case_label(params)
        top_plus = r - 1 if label == "n-s=p=s" else r
        top_minus = r if label == "p<s, n-s!=p" else r - 1
        coeffs = {Dp(i): 1 for i in range(1, top_plus + 1)}
        coeffs.update({Dm(i): 1 for i in range(1, top_minus + 1)})
        return _T(params, coeffs)
    if name in ("K", "antiK"):
        minus, plus = canonical_coefficients(params)
        coeffs = {H: -n}
        coeffs.update({Dm(i): minus[i - 1] for i in range(1, r + 1)})
        coeffs.update({Dp(i): plus[i - 1] for i in range(1, r + 1)})
        K = _T(params, coeffs)
        return K if name == "K" else -K
    raise ValueError(f"unknown divisor name {name!r}")


def m_named_divisor(params: Params, name: str, index: int | None = None) -> DivisorClass:
    """Named classes on M: Dcheck(i), Bcheck(k), Hcheck, KM, antiKM."""
    _need_normalized(params)
    s, p, n, r = params.s, params.p, params.n, params.r
    if name == "Dcheck":
        if index is None or not 1 <= index <= r:
            raise ValueError(f"Dcheck index must be in 1..{r}")
        return _M(params, {Dc(index): 1})
    if name == "Hcheck":
        return _M(params, {HC: 1})
    if name == "Bcheck":
        if index is None or not 0 <= index <= r:
            raise ValueError(f"Bcheck index must be in 0..{r}")
        if index == r and p == n - s:
            return _M(params, {Dc(r): 1})
        coeffs = {HC: 1}
        if index >= 1:
            coeffs[Dc(1)] = -index
        for k in range(2, index + 1):
            coeffs[Dc(k)] = -(index + 1 - k)
        note = "empty divisor" if index == 0 and p == s else ""
        return _M(params, coeffs, note)
    if name in ("KM", "antiKM"):
        minus, _ = canonical_coefficients(params)
        coeffs = {HC: -n, Dc(1): p * (n - s)}
        coeffs.update({Dc(i): minus[i - 1] for i in range(2, r + 1)})
        K = _M(params, coeffs)
        return K if name == "KM" else -K
    raise ValueError(f"unknown divisor name {name!r}")


def restrict_to_M(cls: DivisorClass) -> DivisorClass:
    """Restriction along M = Dminus_1: H -> Hcheck, Dminus_i -> Dcheck_i, Dplus_i -> 0."""
    if cls.space != "T":
        raise ValueError("restriction starts on T")
    out = {}
    for sym, c in cls.coeffs.items():
        if sym == H:
            out[HC] = c
        elif sym.startswith("Dminus_"):
            out[Dc(int(sym.split("_")[1]))] = c
    return _M(cls.params, out)


class LatticeMap:
    """A linear map on a Picard lattice given by images of spanning symbols."""

    def __init__(self, name: str, params: Params, space: str, images: dict):
        self.name = name
        self.params = params
        self.space = space
        self.images = images

    def __call__(self, cls: DivisorClass) -> DivisorClass:
        if (cls.space, cls.params) != (self.space, self.params):
            raise ValueError("class does not live on this lattice")
        out = DivisorClass(self.space, self.params)
        for sym, c in cls.coeffs.items():
            out = out + c * self.images[sym]
        return out.reduce()

    def matrix(self) -> list[list[Fraction]]:
        """Columns are the images of the free basis, in reduced coordinates."""
        cols = [
            self(DivisorClass(self.space, self.params, {b: 1})).vector()
            for b in basis(self.params, self.space)
        ]
        return [list(row) for row in zip(*cols)] if cols else []

    def spanning_matrix(self) -> list[list[Fraction]]:
        """Columns are the printed images of every spanning symbol."""
        syms = spanning_symbols(self.params, self.space)
        cols = [self.images[s].spanning_vector() for s in syms]
        return [list(row) for row in zip(*cols)]

    def respects_relations(self) -> bool:
        """Each eliminated symbol and its expansion have the same image."""
        for sym, expansion in _relations(self.params, self.space):
            lhs = DivisorClass(self.space, self.params, {sym: 1})
            rhs = DivisorClass(self.space, self.params, expansion)
            if self(lhs) != self(rhs):
                return False
        return True


def pullback_auto(params: Params, which: str) -> LatticeMap:
    """USDstar, DUALstar on T; Usdstar, Dualstar on M."""
    _need_normalized(params)
    s, p, n, r = params.s, params.p, params.n, params.r
    need_usd = which in ("USDstar", "Usdstar")
    if which not in ("USDstar", "DUALstar", "Usdstar", "Dualstar"):
        raise ValueError(f"unknown automorphism {which!r}")
    if need_usd and n != 2 * s:
        raise ValueError(f"{which} needs n = 2s, got {params}")
    if not need_usd and n != 2 * p:
        raise ValueError(f"{which} needs n = 2p, got {params}")
    if which in ("USDstar", "DUALstar"):
        images = {H: _T(params, {H: 1})}
        for i in range(1, r + 1):
            images[Dp(i)] = _T(params, {Dm(i): 1})
            images[Dm(i)] = _T(params, {Dp(i): 1})
        return LatticeMap(which, params, "T", images)
    images = {HC: _M(params, {HC: 1, **{Dc(i): -(r + 1 - i) for i in range(1, r + 1)}})}
    for i in range(2, r + 1):
        images[Dc(i)] = _M(params, {Dc(r + 2 - i): 1})
    if p == s:
        images[Dc(1)] = _M(params, {Dc(i): Fraction(-(i - 1), r) for i in range(2, r + 1)})
    else:
        images[Dc(1)] = _M(params, {Dc(i): -1 for i in range(1, r + 1)})
    return LatticeMap(which, params, "M", images)


def linear_series_dim(params: Params, j: int) -> int:
    """h^0 of H_j: the number of Plücker indices with exactly j entries above s."""
    if not 0 <= j <= params.r:
        raise ValueError(f"j={j} outside 0..{params.r}")
    return comb(params.s, params.p - j) * comb(params.n - params.s, j)

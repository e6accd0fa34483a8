"""Sparse multivariate polynomials with integer coefficients.

Just enough ring arithmetic for symbolic minors of chart matrices: sums,
products, determinants, evaluation at rational points.  Python ints give
arbitrary precision for free.

A monomial is a sorted tuple of ``(Var, exponent)`` pairs; a polynomial is a
dict from monomials to nonzero ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

TAGS = ("a", "b", "x", "y", "z", "w", "xi")
_TAG_RANK = {t: i for i, t in enumerate(TAGS)}

DET_BOUND = 8


@total_ordering
@dataclass(frozen=True)
class Var:
    """A chart variable such as ``b_{1,4}`` or ``xi^{(2)}_{3,5}``.

    Ordered by tag (in ``TAGS`` order), then by subscripts lexicographically.
    """

    tag: str
    subs: tuple = ()

    def __post_init__(self):
        if self.tag not in _TAG_RANK:
            raise ValueError(f"unknown tag {self.tag!r}")
        if len(self.subs) > 3:
            raise ValueError("at most three subscripts")

    def _key(self):
        return (_TAG_RANK[self.tag], self.subs)

    def __lt__(self, other):
        return self._key() < other._key()

    def __str__(self):
        if self.tag == "xi":
            k, i, j = self.subs
            return f"xi{k}_{i},{j}"
        return self.tag + "_" + ",".join(str(v) for v in self.subs)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {m: c for m, c in terms.items() if c != 0}

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls({(): int(c)}) if c else cls()

    @classmethod
    def var(cls, v: Var) -> "Polynomial":
        return cls({((v, 1),): 1})

    @classmethod
    def monomial(cls, exps: dict, coeff: int = 1) -> "Polynomial":
        mono = tuple(sorted((v, e) for v, e in exps.items() if e))
        return cls({mono: coeff})

    @staticmethod
    def _coerce(x):
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, int):
            return Polynomial.const(x)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        for _ in range(e):
            out = out * self
        return out

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_monomial(self):
        """``(coeff, {var: exp})`` for a single-term polynomial."""
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        (m, c), = self.terms.items()
        return c, dict(m)

    def evaluate(self, assignment: dict) -> Fraction:
        missing = self.variables() - set(assignment)
        if missing:
            raise KeyError(f"no value for {sorted(str(v) for v in missing)}")
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in m:
                t *= Fraction(assignment[v]) ** e
            total += t
        return total

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            body = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Polynomial()
ONE = Polynomial.const(1)


def poly_arith(op: str, a: Polynomial, b: Polynomial | None = None) -> Polynomial:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


class PolyMatrix:
    def __init__(self, rows):
        rows = [[Polynomial._coerce(x) for x in row] for row in rows]
        if rows and any(len(row) != len(rows[0]) for row in rows):
            raise ValueError("ragged matrix")
        self.rows = rows

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def columns(self, cols) -> "PolyMatrix":
        return PolyMatrix([[row[c] for c in cols] for row in self.rows])

    def evaluate(self, assignment: dict) -> list[list[Fraction]]:
        return [[x.evaluate(assignment) for x in row] for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)


def determinant(m: PolyMatrix, bound: int = DET_BOUND) -> Polynomial:
    """Laplace expansion along rows, memoized on the set of unused columns."""
    nr, nc = m.shape
    if nr != nc:
        raise ValueError(f"non-square matrix {nr}x{nc}")
    if nr > bound:
        raise ValueError(f"size {nr} exceeds determinant bound {bound}")
    if nr == 0:
        return ONE
    memo = {}

    def minor(row: int, cols: tuple) -> Polynomial:
        # determinant of rows row.. on the given columns
        if row == nr:
            return ONE
        key = cols
        if key in memo:
            return memo[key]
        total = ZERO
        for pos, c in enumerate(cols):
            entry = m.rows[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, tuple(range(nc)))


def evaluate(poly: Polynomial, assignment: dict) -> Fraction:
    return poly.evaluate(assignment)

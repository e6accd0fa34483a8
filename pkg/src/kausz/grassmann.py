"""Plücker coordinates, dual and upside-down point maps, Mille Crêpes charts.

Minor convention: ``P_I`` is the determinant of the columns named by ``I``
taken in *increasing* column order.  With that choice the identity block
``[I_p | 0]`` has ``P = +1`` at ``(p, ..., 1)``.  Every sign-sensitive check in
this module is stated relative to this convention and reports the signs it
observes instead of assuming them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .combinatorics import Params, dual_index, index_set, permutation_sign, usd_index
from .polyring import ONE, ZERO, PolyMatrix, Polynomial, Var, determinant


def parse_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def as_matrix(rows) -> list[list[Fraction]]:
    rows = [[parse_rational(x) for x in row] for row in rows]
    if not rows or any(len(row) != len(rows[0]) for row in rows):
        raise ValueError("matrix must be a non-empty rectangular 2-D array")
    return rows


def bareiss_det(M) -> Fraction:
    """Fraction-free (Bareiss) determinant; exact for int or Fraction entries."""
    A = [list(row) for row in M]
    k = len(A)
    if any(len(row) != k for row in A):
        raise ValueError("non-square matrix")
    if k == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for c in range(k - 1):
        if A[c][c] == 0:
            swap = next((r for r in range(c + 1, k) if A[r][c] != 0), None)
            if swap is None:
                return Fraction(0)
            A[c], A[swap] = A[swap], A[c]
            sign = -sign
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                A[i][j] = (A[i][j] * A[c][c] - A[i][c] * A[c][j]) / prev
        prev = A[c][c]
    return sign * Fraction(A[k - 1][k - 1])


def rref(M):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    A = [list(map(Fraction, row)) for row in M]
    nr, nc = len(A), len(A[0])
    pivots = []
    row = 0
    for c in range(nc):
        pr = next((i for i in range(row, nr) if A[i][c] != 0), None)
        if pr is None:
            continue
        A[row], A[pr] = A[pr], A[row]
        piv = A[row][c]
        A[row] = [x / piv for x in A[row]]
        for i in range(nr):
            if i != row and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[row])]
        pivots.append(c)
        row += 1
        if row == nr:
            break
    return A, pivots


def matrix_rank(M) -> int:
    return len(rref(M)[1])


def _increasing_cols(I):
    return [i - 1 for i in sorted(I)]


def minor(m, I):
    """``P_I(m)`` for a numeric (list of lists) or symbolic (PolyMatrix) matrix."""
    cols = _increasing_cols(I)
    if isinstance(m, PolyMatrix):
        return determinant(m.columns(cols))
    return bareiss_det([[row[c] for c in cols] for row in m])


@dataclass
class PlueckerVector:
    p: int
    n: int
    entries: dict
    degenerate: bool = False

    def __getitem__(self, I):
        return self.entries[tuple(I)]

    def value(self, cols) -> Fraction:
        """Alternating extension: ``P`` on an arbitrary ordered column list."""
        cols = list(cols)
        if len(set(cols)) < len(cols):
            return 0
        return permutation_sign(cols) * self.entries[tuple(sorted(cols, reverse=True))]

    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "degenerate": self.degenerate,
            "entries": {",".join(map(str, I)): _fmt(v) for I, v in self.entries.items()},
        }


def _fmt(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def pluecker_vector(m) -> PlueckerVector:
    if isinstance(m, PolyMatrix):
        p, n = m.shape
    else:
        m = as_matrix(m)
        p, n = len(m), len(m[0])
    if not 0 < p <= n:
        raise ValueError(f"need 0 < p <= n, got {p}x{n}")
    entries = {I: minor(m, I) for I in index_set(p, n)}
    degenerate = all(v == 0 for v in entries.values())
    return PlueckerVector(p, n, entries, degenerate)


@dataclass
class RelationReport:
    ok: bool
    checked: int
    violations: list = field(default_factory=list)


def pluecker_relations_check(v: PlueckerVector) -> RelationReport:
    """Evaluate every three-or-more-term quadratic exchange relation.

    For each increasing (p-1)-subset ``A`` and (p+1)-subset ``B = (b_0..b_p)``:
    ``sum_k (-1)^k P[A, b_k] * P[B minus b_k] = 0`` where ``P[A, b_k]`` is the
    alternating extension on the column list ``A + (b_k,)``.
    """
    p, n = v.p, v.n
    if set(v.entries) != set(index_set(p, n)):
        raise ValueError("Plücker vector does not cover the full index set")
    cols = range(1, n + 1)
    violations = []
    checked = 0
    for A in combinations(cols, p - 1):
        for B in combinations(cols, p + 1):
            total = 0
            for k, b in enumerate(B):
                total += (-1) ** k * v.value(A + (b,)) * v.value(B[:k] + B[k + 1:])
            checked += 1
            if total != 0:
                violations.append({"A": list(A), "B": list(B), "value": _fmt(Fraction(total))})
    return RelationReport(not violations, checked, violations)


def dual_point(m) -> list[list[Fraction]]:
    """A representative of the dual point: rows span the kernel of ``m``.

    The kernel basis is read off the reduced row echelon form, so on the chart
    ``(I | A)`` the result is exactly ``(-A^T | I)``.
    """
    m = as_matrix(m)
    p, n = len(m), len(m[0])
    R, pivots = rref(m)
    if len(pivots) != p:
        raise ValueError("rank-deficient matrix has no dual point")
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -R[row][f]
        out.append(vec)
    return out


def usd_point(m) -> list[list[Fraction]]:
    """Right multiplication by the anti-diagonal matrix: reverse the columns."""
    m = as_matrix(m)
    return [list(reversed(row)) for row in m]


def dual_sign_check(m, params: Params | None = None) -> dict:
    """Fit one scalar with ``P_{I*}(m*) = (-1)^sigma(I) * lam * P_I(m)`` for all I."""
    m = as_matrix(m)
    p, n = len(m), len(m[0])
    prm = params or Params(1, p, n)
    P = pluecker_vector(m)
    Q = pluecker_vector(dual_point(m))
    pairs = []
    for I, val in P.entries.items():
        Istar, sgn = dual_index(I, prm)
        pairs.append((Q.entries[Istar], sgn * val))
    lam = next((lhs / rhs for lhs, rhs in pairs if rhs != 0), None)
    ok = lam is not None and all(lhs == lam * rhs for lhs, rhs in pairs)
    return {"ok": ok, "lambda": lam}


def usd_sign_check(m) -> dict:
    """``P_{usd(I)}(m E) = (-1)^{p(p-1)/2} P_I(m)`` for every I."""
    m = as_matrix(m)
    p, n = len(m), len(m[0])
    prm = Params(1, p, n)
    P = pluecker_vector(m)
    Q = pluecker_vector(usd_point(m))
    sign = -1 if (p * (p - 1) // 2) % 2 else 1
    ok = all(Q.entries[usd_index(I, prm)] == sign * v for I, v in P.entries.items())
    return {"ok": ok, "sign": sign}


# ---------------------------------------------------------------------------
# Mille Crêpes charts


@dataclass(frozen=True)
class ChartIndex:
    """A chart label: integer ``l`` and a 2 x r array of pivot rows / columns."""

    l: int
    rows: tuple
    cols: tuple

    def validate(self, params: Params):
        s, p, n, r, l = params.s, params.p, params.n, params.r, self.l
        if not params.normalized:
            raise ValueError("Mille Crêpes charts need normalized params 2p <= n <= 2s")
        if not 0 <= l <= r:
            raise ValueError(f"l={l} outside 0..{r}")
        if len(self.rows) != r or len(self.cols) != r:
            raise ValueError(f"chart arrays must have length r={r}")
        head_rows, tail_rows = self.rows[: r - l], self.rows[r - l:]
        head_cols, tail_cols = self.cols[: r - l], self.cols[r - l:]
        checks = [
            (head_rows, range(l + 1, p + 1)),
            (tail_rows, range(1, l + 1)),
            (head_cols, range(s + l + 1, n + 1)),
            (tail_cols, range(1, s - p + l + 1)),
        ]
        for seq, allowed in checks:
            if len(set(seq)) != len(seq) or any(x not in allowed for x in seq):
                raise ValueError(f"chart {self} violates the index rules for l={l}")
        return self


def main_chart(params: Params, l: int) -> ChartIndex:
    s, p, r = params.s, params.p, params.r
    rows = tuple(range(l + 1, r + 1)) + tuple(range(l, 0, -1))
    cols = tuple(range(s + l + 1, s + r + 1)) + tuple(range(s - p + l, s - p, -1))
    return ChartIndex(l, rows, cols).validate(params)


def _v(tag, *subs):
    return Polynomial.var(Var(tag, tuple(subs)))


def chart_variables(params: Params, chart: ChartIndex) -> list[Var]:
    m = mille_crepes_matrix(params, chart)
    found = set()
    for row in m.rows:
        for e in row:
            found |= e.variables()
    return sorted(found)


def _telescope(block, pivots, coeff_tag, row_range, col_range):
    """Add ``sum_k (prod_{t<=k} c_t) Xi_k^T Omega_k`` into ``block`` (1-indexed dict)."""
    coeff = ONE
    used_rows, used_cols = [], []
    for kk, (ik, jk) in pivots:
        coeff = coeff * _v(coeff_tag, ik, jk)
        xi = {}
        for t in row_range:
            if t == ik:
                xi[t] = ONE
            elif t in used_rows:
                xi[t] = ZERO
            else:
                xi[t] = _v("xi", kk, t, jk)
        om = {}
        for t in col_range:
            if t == jk:
                om[t] = ONE
            elif t in used_cols:
                om[t] = ZERO
            else:
                om[t] = _v("xi", kk, ik, t)
        for t in row_range:
            if xi[t].is_zero():
                continue
            for u in col_range:
                if om[u].is_zero():
                    continue
                block[t, u] = block.get((t, u), ZERO) + coeff * xi[t] * om[u]
        used_rows.append(ik)
        used_cols.append(jk)


def mille_crepes_matrix(params: Params, chart: ChartIndex, symbolic: bool = True, values=None):
    """The p x n matrix of the chart map, entries as polynomials.

    With ``symbolic=False`` the matrix is evaluated at ``values`` (a dict from
    :class:`Var` to rationals) and returned as a list of Fraction rows.
    """
    chart.validate(params)
    s, p, n, r, l = params.s, params.p, params.n, params.r, chart.l
    E = {}
    # Z block: a-telescope over rows 1..l, columns 1..s-p+l
    a_piv = [(k + 1, (chart.rows[k], chart.cols[k])) for k in range(r - l, r)]
    _telescope(E, a_piv, "a", range(1, l + 1), range(1, s - p + l + 1))
    # W block: b-telescope over rows l+1..p, columns s+l+1..n
    b_piv = [(k + 1, (chart.rows[k], chart.cols[k])) for k in range(0, r - l)]
    _telescope(E, b_piv, "b", range(l + 1, p + 1), range(s + l + 1, n + 1))
    for i in range(1, l + 1):
        E[i, s + i] = ONE
        for j in range(s + l + 1, n + 1):
            E[i, j] = _v("x", i, j)
    for i in range(l + 1, p + 1):
        E[i, s - p + i] = ONE
        for j in range(1, s - p + l + 1):
            E[i, j] = _v("y", i, j)
    rows = [[E.get((i, j), ZERO) for j in range(1, n + 1)] for i in range(1, p + 1)]
    M = PolyMatrix(rows)
    if symbolic:
        return M
    if values is None:
        raise ValueError("numeric chart evaluation needs values for every variable")
    return M.evaluate(values)


def I_k(params: Params, k: int) -> tuple[int, ...]:
    s, p = params.s, params.p
    return tuple(range(s + k, s - p + k, -1))


def te_expected(params: Params, l: int, k: int) -> Polynomial:
    """Monomial the pullback of ``P_{I_k}`` should equal in the l-th main chart."""
    s, p = params.s, params.p
    out = {}
    if k < l:
        for t in range(k + 1, l + 1):
            out[Var("a", (t, s - p + t))] = t - k
    elif k > l:
        for t in range(l + 1, k + 1):
            out[Var("b", (t, s + t))] = k + 1 - t
    return Polynomial.monomial(out)


def verify_te(params: Params, l: int) -> dict:
    """Compare ``P_{I_k} / P_{I_l}`` on the l-th main chart with the monomials.

    Equality is tested up to sign; the observed sign of every entry is
    reported.
    """
    chart = main_chart(params, l)
    M = mille_crepes_matrix(params, chart)
    base = minor(M, I_k(params, l))
    if base not in (ONE, -ONE):
        raise AssertionError(f"P_(I_l) should be a unit on the main chart, got {base}")
    entries = []
    ok = True
    for k in range(params.r + 1):
        got = minor(M, I_k(params, k)) * base  # base is +-1, so this divides
        want = te_expected(params, l, k)
        if got == want:
            sign = 1
        elif got == -want:
            sign = -1
        else:
            sign = 0
            ok = False
        entries.append({"k": k, "expected": str(want), "computed": str(got), "sign": sign})
    return {
        "params": [params.s, params.p, params.n],
        "l": l,
        "unit_sign": 1 if base == ONE else -1,
        "ok": ok,
        "entries": entries,
    }

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from kausz.grassmann import bareiss_det
from kausz.polyring import ONE, ZERO, PolyMatrix, Polynomial, Var, determinant, evaluate, poly_arith

x, y, z = (Polynomial.var(Var("x", (i, 1))) for i in (1, 2, 3))
a, b, c, d = (Polynomial.var(Var("a", (i, i))) for i in (1, 2, 3, 4))


def test_arith_examples():
    assert poly_arith("add", x, poly_arith("neg", x)) == ZERO
    assert poly_arith("mul", x + 1, x - 1) == x * x - 1
    assert poly_arith("mul", ZERO, x * y + 3) == ZERO


def test_determinant_examples():
    eye = PolyMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert determinant(eye) == ONE
    assert determinant(PolyMatrix([[a, b], [c, d]])) == a * d - b * c
    assert determinant(PolyMatrix([[x, y, 1], [z, x, 2], [x, y, 1]])) == ZERO


def test_determinant_errors():
    with pytest.raises(ValueError):
        determinant(PolyMatrix([[1, 2, 3], [4, 5, 6]]))
    big = PolyMatrix([[int(i == j) for j in range(9)] for i in range(9)])
    with pytest.raises(ValueError):
        determinant(big)
    assert determinant(big, bound=9) == ONE


def test_evaluate_examples():
    v = Var("x", (1, 1))
    assert evaluate(x * x - 1, {v: 3}) == 8
    assert evaluate(ZERO, {}) == 0
    vals = {Var("a", (1, 1)): 1, Var("a", (2, 2)): 0, Var("a", (3, 3)): 2, Var("a", (4, 4)): 5}
    assert evaluate(a * d - b * c, vals) == 5
    with pytest.raises(KeyError):
        evaluate(x + y, {v: 1})


def test_variable_order_is_tag_then_subscripts():
    assert Var("a", (9, 9)) < Var("b", (1, 1)) < Var("xi", (1, 1, 1))
    assert Var("x", (1, 2)) < Var("x", (2, 1))
    assert str(Var("xi", (2, 1, 3))) == "xi2_1,3"


VARS = [Var("x", (i, 1)) for i in range(1, 4)]

monomials = st.dictionaries(st.sampled_from(VARS), st.integers(1, 3), max_size=3)
polys = st.lists(st.tuples(monomials, st.integers(-4, 4)), max_size=4).map(
    lambda terms: sum((Polynomial.monomial(m, co) for m, co in terms), ZERO)
)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == ZERO
    assert all(co != 0 for co in (p * q).terms.values())


small = st.integers(-6, 6)


@settings(max_examples=60)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=4, max_size=4), st.data())
def test_determinant_commutes_with_evaluation(rows, data):
    # entries x_ij + c_ij, then evaluate at a random point
    syms = {(i, j): Var("y", (i + 1, j + 1)) for i in range(4) for j in range(4)}
    M = PolyMatrix([[Polynomial.var(syms[i, j]) + rows[i][j] for j in range(4)] for i in range(4)])
    point = {v: Fraction(data.draw(small), data.draw(st.integers(1, 3))) for v in syms.values()}
    numeric = [[rows[i][j] + point[syms[i, j]] for j in range(4)] for i in range(4)]
    assert determinant(M).evaluate(point) == bareiss_det(numeric)
    assert bareiss_det(numeric) == Fraction(str(sympy.Matrix(numeric).det()))


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_is_alternating(rows):
    M = PolyMatrix([[x * v + w for v, w in zip(row, reversed(row))] for row in rows])
    swapped = PolyMatrix([M.rows[1], M.rows[0], M.rows[2]])
    assert determinant(swapped) == -determinant(M)


def test_symbolic_determinant_matches_sympy():
    X = sympy.Matrix(4, 4, lambda i, j: sympy.Symbol(f"x_{i + 1}{j + 1}"))
    mine = PolyMatrix([[Polynomial.var(Var("x", (i + 1, j + 1))) for j in range(4)] for i in range(4)])
    expected = sympy.Poly(X.det(), *X)
    got = determinant(mine)
    assert len(got.terms) == len(expected.terms()) == 24
    for mono, coeff in got.terms.items():
        exps = {(v.subs[0] - 1, v.subs[1] - 1): e for v, e in mono}
        key = tuple(exps.get((i, j), 0) for i in range(4) for j in range(4))
        assert expected.coeff_monomial(key) == coeff

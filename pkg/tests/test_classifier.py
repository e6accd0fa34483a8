import pytest

from kausz.classifier import aut_M, aut_T, normalize
from kausz.combinatorics import Params, all_params
from kausz.picard import named_divisor, pullback_auto

# written out by hand from the case lists, every normalized triple with n <= 7
# (s, p, n): (T connected, T discrete, M connected, M discrete, M model)
TABLE = {
    (1, 1, 2): ("PGL_2", (), "trivial", (), "point"),
    (2, 1, 3): ("Parabolic(3)", (), "PGL_2", (), "P^1"),
    (2, 1, 4): ("(GL_2×GL_2)/Z_4", ("USD",), "PGL_2×PGL_2", ("Usd",), "P^1×P^1"),
    (2, 2, 4): ("(GL_2×GL_2)/Z_4", ("USD", "DUAL"), "PGL_4", (), "P^3"),
    (3, 1, 4): ("Parabolic(4)", (), "PGL_3", (), "P^2"),
    (3, 2, 4): ("(GL_3×GL_1)/Z_4", ("DUAL",), "PGL_3×PGL_1", ("Dual",), None),
    (3, 1, 5): ("(GL_3×GL_2)/Z_5", (), "PGL_3×PGL_2", (), "P^2×P^1"),
    (3, 2, 5): ("(GL_3×GL_2)/Z_5", (), "PGL_3×PGL_2", (), None),
    (4, 1, 5): ("Parabolic(5)", (), "PGL_4", (), "P^3"),
    (4, 2, 5): ("(GL_4×GL_1)/Z_5", (), "PGL_4×PGL_1", (), None),
    (3, 1, 6): ("(GL_3×GL_3)/Z_6", ("USD",), "PGL_3×PGL_3", ("Usd",), "P^2×P^2"),
    (3, 2, 6): ("(GL_3×GL_3)/Z_6", ("USD",), "PGL_3×PGL_3", ("Usd",), None),
    (3, 3, 6): ("(GL_3×GL_3)/Z_6", ("USD", "DUAL"), "PGL_3×PGL_3", ("Usd", "Dual"), None),
    (4, 1, 6): ("(GL_4×GL_2)/Z_6", (), "PGL_4×PGL_2", (), "P^3×P^1"),
    (4, 2, 6): ("(GL_4×GL_2)/Z_6", (), "PGL_4×PGL_2", (), None),
    (4, 3, 6): ("(GL_4×GL_2)/Z_6", ("DUAL",), "PGL_4×PGL_2", ("Dual",), None),
    (5, 1, 6): ("Parabolic(6)", (), "PGL_5", (), "P^4"),
    (5, 2, 6): ("(GL_5×GL_1)/Z_6", (), "PGL_5×PGL_1", (), None),
    (5, 3, 6): ("(GL_5×GL_1)/Z_6", ("DUAL",), "PGL_5×PGL_1", ("Dual",), None),
    (4, 1, 7): ("(GL_4×GL_3)/Z_7", (), "PGL_4×PGL_3", (), "P^3×P^2"),
    (4, 2, 7): ("(GL_4×GL_3)/Z_7", (), "PGL_4×PGL_3", (), None),
    (4, 3, 7): ("(GL_4×GL_3)/Z_7", (), "PGL_4×PGL_3", (), None),
    (5, 1, 7): ("(GL_5×GL_2)/Z_7", (), "PGL_5×PGL_2", (), "P^4×P^1"),
    (5, 2, 7): ("(GL_5×GL_2)/Z_7", (), "PGL_5×PGL_2", (), None),
    (5, 3, 7): ("(GL_5×GL_2)/Z_7", (), "PGL_5×PGL_2", (), None),
    (6, 1, 7): ("Parabolic(7)", (), "PGL_6", (), "P^5"),
    (6, 2, 7): ("(GL_6×GL_1)/Z_7", (), "PGL_6×PGL_1", (), None),
    (6, 3, 7): ("(GL_6×GL_1)/Z_7", (), "PGL_6×PGL_1", (), None),
}


def test_table_covers_every_normalized_triple():
    assert sorted(TABLE) == sorted((P.s, P.p, P.n) for P in all_params(7))


@pytest.mark.parametrize("key", sorted(TABLE))
def test_hand_table(key):
    P = Params(*key)
    t_conn, t_disc, m_conn, m_disc, m_model = TABLE[key]
    t, m = aut_T(P), aut_M(P)
    assert (t.connected, t.discrete) == (t_conn, t_disc)
    assert (m.connected, m.discrete, m.model) == (m_conn, m_disc, m_model)


def test_normalize_examples():
    # DUAL alone gives (2,2,5), which still has n > 2s
    assert normalize(Params(2, 3, 5)) == (Params(3, 2, 5), ["DUAL", "USD"])
    assert normalize(Params(3, 3, 5)) == (Params(3, 2, 5), ["DUAL"])
    assert normalize(Params(2, 1, 5)) == (Params(3, 1, 5), ["USD"])
    assert normalize(Params(3, 2, 5)) == (Params(3, 2, 5), [])
    assert normalize(Params(1, 3, 4)) == (Params(3, 1, 4), ["DUAL", "USD"])


def test_spot_examples():
    assert aut_T(Params(1, 1, 2)).model == "P^1"
    assert aut_T(Params(2, 1, 4)).case == "USD"
    assert aut_T(Params(3, 1, 4)).connected == "Parabolic(4)"
    # the three isomorphic variants of T_{m,1,m+1}
    for key in [(3, 3, 4), (1, 1, 4), (1, 3, 4)]:
        assert aut_T(Params(*key)).connected == "Parabolic(4)"
    assert aut_M(Params(2, 2, 4)).connected == "PGL_4"
    assert aut_M(Params(4, 2, 8)).case == "Usd"


def test_p1_rows_are_marked():
    assert aut_M(Params(4, 1, 5)).from_proof
    assert aut_M(Params(4, 1, 6)).from_proof
    assert not aut_M(Params(4, 2, 7)).from_proof
    assert not aut_T(Params(4, 1, 5)).from_proof


@pytest.mark.parametrize("P", all_params(12, normalized_only=False))
def test_invariant_under_normalization(P):
    q, _ = normalize(P)
    assert aut_T(P).signature() == aut_T(q).signature()
    assert aut_M(P).signature() == aut_M(q).signature()


@pytest.mark.parametrize("P", all_params(12))
def test_discrete_factors_agree_with_lattice_maps(P):
    disc = aut_T(P).discrete
    for name, which in (("USD", "USDstar"), ("DUAL", "DUALstar")):
        if name in disc:
            K = named_divisor(P, "K")
            assert pullback_auto(P, which)(K) == K

import pytest
from hypothesis import given, settings, strategies as st

from oracles import disc_quartic_oracle, fraction_det, sylvester
from quadrindex.polyring import (
    IntPoly,
    NotIntegral,
    Quadrinomial,
    bareiss_det,
    charpoly_from_power_sums,
    discriminant,
    eisenstein_at,
    eval_mod,
    minpoly_scaled_power,
    phi_expand,
    power_sums,
    resultant,
    sylvester_matrix,
)

small = st.integers(min_value=-50, max_value=50)
big = st.integers(min_value=-(10**40), max_value=10**40)
polys = st.lists(small, min_size=0, max_size=6).map(IntPoly)
monics = st.lists(small, min_size=0, max_size=4).map(lambda c: IntPoly(c + [1]))
quads = st.tuples(big, big, big)


def test_basic_shape():
    F = Quadrinomial(2, 3, 5).poly
    assert F.coeffs == (5, 3, 0, 2, 1)
    assert F.degree == 4 and F.is_monic()
    assert IntPoly().degree == -1
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert str(IntPoly.x_minus(3)) == "x - 3"


@given(polys, polys, small)
def test_ring_operations_commute_with_evaluation(F, G, x0):
    assert (F * G)(x0) == F(x0) * G(x0)
    assert (F + G)(x0) == F(x0) + G(x0)
    assert (F - G)(x0) == F(x0) - G(x0)
    assert (F * 3)(x0) == 3 * F(x0)


@given(polys, monics)
def test_divmod_monic_reconstructs(F, G):
    if G.degree < 1:
        return
    q, r = F.divmod_monic(G)
    assert q * G + r == F
    assert r.degree < G.degree


@given(st.lists(big, min_size=1, max_size=7).map(lambda c: IntPoly(c + [1])), monics)
def test_phi_expansion_round_trip(F, phi):
    if phi.degree < 1:
        return
    exp = phi_expand(F, phi)
    assert exp.recompose() == F
    assert all(a.degree < phi.degree for a in exp.coeffs)


@given(big, big, big, big)
def test_development_at_x_minus_s(a, b, c, s):
    # Taylor coefficients of x^4 + a x^3 + b x + c at s
    F = Quadrinomial(a, b, c).poly
    exp = phi_expand(F, IntPoly.x_minus(s))
    got = [e[0] for e in exp.coeffs]
    want = [s**4 + a * s**3 + b * s + c, 4 * s**3 + 3 * a * s**2 + b, 3 * s * (2 * s + a), 4 * s + a, 1]
    assert got == want


def test_phi_expand_rejects_bad_phi():
    F = Quadrinomial(1, 1, 1).poly
    with pytest.raises(ValueError):
        phi_expand(F, IntPoly((1,)))
    with pytest.raises(ValueError):
        phi_expand(F, IntPoly((1, 2)))


def test_small_discriminants():
    assert discriminant(IntPoly((-1, 0, 1))) == 4
    assert discriminant(IntPoly((5, 3, 0, 0, 1))) == 256 * 125 - 27 * 81
    with pytest.raises(ValueError):
        discriminant(IntPoly((1, 1)))


@given(big, big)
def test_discriminant_without_cubic_term(b, c):
    assert discriminant(Quadrinomial(0, b, c)) == 256 * c**3 - 27 * b**4


@given(big, big)
def test_discriminant_without_linear_term(a, c):
    assert discriminant(Quadrinomial(a, 0, c)) == c**2 * (256 * c - 27 * a**4)


@settings(max_examples=60)
@given(small, small, small, small)
def test_discriminant_against_fraction_oracle(c0, c1, c2, c3):
    F = IntPoly((c0, c1, c2, c3, 1))
    assert discriminant(F) == disc_quartic_oracle(c0, c1, c2, c3)


@given(st.lists(st.lists(small, min_size=5, max_size=5), min_size=5, max_size=5))
def test_bareiss_matches_fraction_elimination(rows):
    assert bareiss_det(rows) == fraction_det(rows)


@given(polys, polys)
def test_sylvester_layout(F, G):
    if F.degree < 1 or G.degree < 1:
        return
    ours = sylvester_matrix(F, G)
    theirs = sylvester(list(reversed(F.coeffs)), list(reversed(G.coeffs)))
    assert ours == theirs


def test_resultant_of_linear_factors():
    # Res(x - r, G) = G(r)
    G = IntPoly((7, -2, 0, 1))
    for r in range(-5, 6):
        assert resultant(IntPoly.x_minus(r), G) == G(r)


def test_eisenstein():
    assert eisenstein_at(Quadrinomial(4913, 867, 119), 17)
    assert not eisenstein_at(Quadrinomial(4913, 867, 119), 7)
    assert not eisenstein_at(Quadrinomial(0, 0, 4), 2)
    assert not eisenstein_at(IntPoly((2, 2)) * 1 + IntPoly((0, 0, 2)), 2)


@given(monics)
def test_power_sums_round_trip(F):
    if F.degree < 1:
        return
    P = power_sums(F, F.degree)
    assert charpoly_from_power_sums(P, F.degree) == F


@settings(max_examples=60)
@given(st.tuples(small, small, small), st.integers(min_value=1, max_value=3), small)
def test_charpoly_of_power_equals_resultant(abc, s, z):
    """chi(z) = prod (z - alpha_i^s) = Res_y(F(y), z - y^s)."""
    F = Quadrinomial(*abc).poly
    chi = minpoly_scaled_power(F, s, 0, 2)
    G = IntPoly([z] + [0] * (s - 1) + [-1])
    assert chi(z) == resultant(F, G)


def test_scaled_power_is_eisenstein():
    M = minpoly_scaled_power(Quadrinomial(0, 16, 8), 3, 2, 2)
    assert M.coeffs == (2, 64, 48, 12, 1)
    assert eisenstein_at(M, 2)


def test_scaled_power_not_integral():
    with pytest.raises(NotIntegral):
        minpoly_scaled_power(Quadrinomial(1, 1, 1), 1, 1, 2)


@given(polys, small, st.integers(min_value=2, max_value=1000))
def test_eval_mod(F, x0, m):
    assert eval_mod(F, x0, m) == F(x0) % m

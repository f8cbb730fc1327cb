import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import brute_factor, irreducibles
from quadrindex.finitefield import (
    GFPoly,
    ResidueField,
    UnsupportedPrime,
    factor_gfpoly,
    factor_mod_p,
    fpoly,
    fpoly_factor,
    fpoly_is_squarefree,
    fpoly_mul,
    gf_gcd,
    is_irreducible_mod_p,
    monic_polys,
)
from quadrindex.polyring import IntPoly


def _as_pairs(fac):
    return [(g.coeffs, k) for g, k in fac.factors]


@pytest.mark.parametrize("p", [2, 3])
def test_all_monic_quartics_against_brute_force(p):
    count = 0
    for f in monic_polys(p, 4):
        assert _as_pairs(factor_gfpoly(f)) == brute_factor(f.coeffs, p), f
        count += 1
    assert count == p**4


@pytest.mark.parametrize("p,d", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_irreducibility_counts(p, d):
    ours = [f.coeffs for f in monic_polys(p, d) if is_irreducible_mod_p(f)]
    assert ours == list(irreducibles(p, d))


@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(-20, 20), min_size=2, max_size=7))
def test_factorization_multiplies_back(p, coeffs):
    f = GFPoly(p, coeffs)
    if f.degree < 1:
        return
    fac = factor_gfpoly(f)
    assert fac.product() == f
    assert all(is_irreducible_mod_p(g) and g.lc == 1 for g, _ in fac.factors)


def test_factor_mod_p_of_integer_poly():
    # x^4 + 4913 x^3 + 867 x + 119 = (x + 1)^2 (x^2 + x + 1) mod 2
    fac = factor_mod_p(IntPoly((119, 867, 0, 4913, 1)), 2)
    assert [(g.coeffs, k) for g, k in fac.factors] == [((1, 1), 2), ((1, 1, 1), 1)]
    assert fac.degree_pattern() == (1, 1, 2)


def test_large_prime_rejected():
    with pytest.raises(UnsupportedPrime):
        factor_gfpoly(GFPoly(37, (1, 0, 1)))


@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 10), max_size=5), st.lists(st.integers(0, 10), max_size=5))
def test_divmod_and_gcd(p, a, b):
    f, g = GFPoly(p, a), GFPoly(p, b)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree
    h = gf_gcd(f, g)
    assert (f % h).is_zero() and (g % h).is_zero()


FIELDS = [ResidueField(GFPoly(2, (1, 1, 1))), ResidueField(GFPoly(3, (1, 0, 1)))]


@pytest.mark.parametrize("K", FIELDS, ids=["F4", "F9"])
def test_field_axioms(K):
    els = list(K.elements())
    assert len(els) == K.order
    zero, one = K.zero(), K.one()
    for x, y in itertools.product(els, repeat=2):
        assert x + y == y + x and x * y == y * x
        assert (x - y) + y == x
    for x, y, z in itertools.product(els, repeat=3):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    for x in els:
        assert x + zero == x and x * one == x
        if x:
            assert x * x.inv() == one
            assert x / x == one
    with pytest.raises(ZeroDivisionError):
        zero.inv()


def test_checked_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ResidueField.checked(GFPoly(2, (1, 0, 1)))


@pytest.mark.parametrize("K", FIELDS, ids=["F4", "F9"])
def test_fpoly_factor_over_extension(K):
    els = list(K.elements())
    for coeffs in itertools.product(els, repeat=3):
        f = fpoly(K, list(coeffs) + [K.one()])
        facs = fpoly_factor(f)
        prod = fpoly(K, [K.one()])
        for g, k in facs:
            for _ in range(k):
                prod = fpoly_mul(prod, g)
            # irreducible of degree <= 3 over a field means no root
            assert len(g) - 1 == 1 or not any(_eval(g, y) == K.zero() for y in els)
        assert prod == f
        assert fpoly_is_squarefree(f) == all(k == 1 for _, k in facs)


def _eval(g, y):
    acc = y.field.zero()
    for c in reversed(g):
        acc = acc * y + c
    return acc


def test_residual_style_factorization_over_f3():
    K = ResidueField(GFPoly(3, (0, 1)))
    # 2y^2 + 1 = 2 (y - 1)(y + 1) over F_3
    f = fpoly(K, [K(1), K(0), K(2)])
    roots = sorted(tuple(g[0].value) for g, k in fpoly_factor(f))
    assert roots == [(1,), (2,)]

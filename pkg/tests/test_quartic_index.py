import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from padic_oracle import local_shape
from quadrindex.cases import _t1c16_17_pre, get_case, tau_sigma
from quadrindex.exactint import Squarefree, squarefree_check
from quadrindex.ore import SplittingShape, dedekind_p_maximal
from quadrindex.polyring import IntPoly, Quadrinomial, eisenstein_at
from quadrindex.quartic_index import (
    ENGSTROM_TABLE,
    AnalyzeOptions,
    CertifiedEisenstein,
    CertifiedFactorSearch,
    CertifiedModP,
    FieldMonogenicPolyNot,
    Inconclusive,
    NotMonogenic,
    Reducible,
    analyze,
    certify_irreducible,
    check_theorem3,
    engstrom_nu,
    match_theorem1,
    match_theorem2,
    probe_case,
    verify_family,
)

S = SplittingShape.parse


# engstrom_nu


@pytest.mark.parametrize(
    "shape,p,nu",
    [
        ("[1^1, 1^1, 1^1, 1^1]", 2, 2),
        ("[1^1, 1^1, 1^1, 1^1]", 3, 1),
        ("[1^1, 1^1, 1^2]", 2, 1),
        ("[1^1, 1^1, 1^2]", 3, 0),
        ("[2^1, 2^1]", 2, 1),
        ("[2^1, 2^1]", 3, 0),
        ("[1^4]", 2, 0),
        ("[4^1]", 3, 0),
        ("[1^1, 1^1, 1^1, 1^1]", 5, 0),
    ],
)
def test_engstrom_rows(shape, p, nu):
    assert engstrom_nu(S(shape), p) == nu


def test_engstrom_rejects_wrong_degree():
    with pytest.raises(ValueError):
        engstrom_nu(S("[1^1, 1^1]"), 2)


@st.composite
def quartic_shapes(draw):
    parts, left = [], 4
    while left:
        e = draw(st.integers(1, left))
        f = draw(st.integers(1, left // e))
        parts.append((e, f))
        left -= e * f
    return SplittingShape(parts)


@given(quartic_shapes(), st.sampled_from([2, 3]))
def test_engstrom_bounds(shape, p):
    nu = engstrom_nu(shape, p)
    assert 0 <= nu <= (2 if p == 2 else 1)
    listed = [row.shape for row in ENGSTROM_TABLE if row.shape is not None]
    if shape not in listed:
        assert nu == 0


# matchers


def _labels(ms):
    return {(m.theorem, m.case, m.prime, m.nu) for m in ms}


def test_matchers_on_worked_examples():
    assert (1, 1, 2, 1) in _labels(match_theorem1(4913, 867, 119))
    assert (1, 6, 2, 2) in _labels(match_theorem1(6, 42, 975))
    assert any(m.nu == 1 for m in match_theorem1(21156911906816, 448, 287))
    assert (2, 1, 3, 1) in _labels(match_theorem2(25, 1125, 405))
    assert any(m.nu == 1 for m in match_theorem2(21156911906816, 448, 287))
    assert match_theorem1(1, 1, 1) == [] and match_theorem2(1, 1, 1) == []


def test_match_label_format():
    (m,) = match_theorem2(25, 1125, 405)
    assert m.label() == "T2(1)"


def test_unknown_case():
    with pytest.raises(KeyError):
        get_case(1, 18)
    with pytest.raises(KeyError):
        get_case(9, 1)


coeff = st.integers(min_value=-(10**5), max_value=10**5)


@settings(max_examples=200, deadline=None)
@given(coeff, coeff, coeff)
def test_matcher_and_engine_agree(a, b, c):
    assume(c != 0)
    rep = analyze(a, b, c)
    assume(not rep.reducible)
    assert not rep.inconsistent, rep.caveats
    for m in rep.matches:
        if m.theorem == 3:
            continue
        r = rep.primes[m.prime]
        if r.nu_engine is not None:
            assert r.nu_engine == m.nu


# irreducibility


@pytest.mark.parametrize(
    "abc,expected",
    [
        ((4913, 867, 119), CertifiedEisenstein(17)),
        ((25, 1125, 405), CertifiedEisenstein(5)),
    ],
)
def test_eisenstein_certificates(abc, expected):
    assert certify_irreducible(*abc) == expected


def test_reducible_inputs():
    st_ = certify_irreducible(0, 0, -4)
    assert isinstance(st_, Reducible)
    assert {f.coeffs for f in st_.factors} == {(-2, 0, 1), (2, 0, 1)}
    assert isinstance(certify_irreducible(1, 1, 0), Reducible)
    # x = 1 is a root of x^4 + x - 2
    assert isinstance(certify_irreducible(0, 1, -2), Reducible)


def test_mod_p_certificate():
    st_ = certify_irreducible(0, 1, 1)
    assert isinstance(st_, (CertifiedModP, CertifiedFactorSearch))


small = st.integers(-30, 30)


@settings(max_examples=200, deadline=None)
@given(small, small, small, small)
def test_products_are_reported_reducible(r, u, v, w):
    # (x - r)(x^3 + u x^2 + v x + w) has no x^2 term when v = r u
    v = r * u
    a, x2, b, c = u - r, v - r * u, w - r * v, -r * w
    assert x2 == 0
    assume(c != 0)
    assert isinstance(certify_irreducible(a, b, c), Reducible)


@settings(max_examples=200, deadline=None)
@given(small, small, small, small)
def test_quadratic_products_are_reported_reducible(p1, q1, q2, _):
    # (x^2 + p1 x + q1)(x^2 - p1 x + q2): x^3 term vanishes; force x^2 term to vanish
    q2 = p1 * p1 - q1
    G = IntPoly((q1, p1, 1)) * IntPoly((q2, -p1, 1))
    c0, c1, c2, c3, _one = G.coeffs
    assert c2 == 0 and c3 == 0
    assume(c0 != 0)
    assert isinstance(certify_irreducible(c3, c1, c0), Reducible)


# Theorem 3 certificate


def _odd(rng, bound=10**4):
    return 2 * rng.randrange(-bound, bound) + 1


def test_generator_family_without_cubic_term():
    rng = random.Random(3)
    hits = 0
    while hits < 20:
        b2, c2 = _odd(rng), _odd(rng)
        b, c = 8 * b2, 8 * c2
        D2 = 32 * c2**3 - 27 * b2**4
        if not isinstance(squarefree_check(abs(D2)), Squarefree):
            continue
        v = check_theorem3(0, b, c, 2)
        assert isinstance(v, FieldMonogenicPolyNot), v
        assert v.theta == (3, 2, 2)
        assert v.index_alpha_val == 3
        assert eisenstein_at(v.charpoly, 2)
        hits += 1


def test_generator_family_without_linear_term():
    # D = c^2 (256 c - 27 a^4) = 2^10 (128 - 27 a_2^4) when c = 8 and a = 2 a_2
    found = {}
    for a2 in range(-401, 402, 2):
        D2 = 128 - 27 * a2**4
        ok = isinstance(squarefree_check(abs(D2)), Squarefree)
        v = check_theorem3(2 * a2, 0, 8, 2)
        assert isinstance(v, FieldMonogenicPolyNot) == ok
        found[a2] = ok
    assert sum(found.values()) > 50


def test_theorem3_hypothesis_failures():
    assert isinstance(check_theorem3(0, 0, 4, 2), Inconclusive)
    assert isinstance(check_theorem3(0, 0, 16, 2), Inconclusive)  # even valuation
    assert isinstance(check_theorem3(1, 0, 8, 2), Inconclusive)  # 4 v(a) = 0
    assert isinstance(check_theorem3(0, 4, 8, 2), Inconclusive)  # 4 v(b) = 8 <= 9
    assert isinstance(check_theorem3(0, 0, 0, 2), Inconclusive)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.sampled_from([3, 5, 7, 9]), st.integers(1, 50), st.integers(0, 50), st.integers(0, 50))
def test_theorem3_success_implies_invariants(p, vc, cu, au, bu):
    cu = cu if cu % p else cu + 1
    va = vc // 4 + 1
    vb = (3 * vc) // 4 + 1
    a, b, c = p**va * au, p**vb * bu, p**vc * cu
    v = check_theorem3(a, b, c, p)
    if isinstance(v, FieldMonogenicPolyNot):
        s, t, _ = v.theta
        assert vc * s - 4 * t == 1
        assert eisenstein_at(v.charpoly, p)
        assert v.index_alpha_val == 3 * (vc - 1) // 2


# analyze


@pytest.mark.parametrize(
    "abc,iK,nu2,nu3",
    [
        ((4913, 867, 119), 2, 1, 0),
        ((25, 1125, 405), 3, 0, 1),
        ((6, 42, 975), 4, 2, 0),
        ((21156911906816, 448, 287), 6, 1, 1),
    ],
)
def test_analyze_worked_examples(abc, iK, nu2, nu3):
    rep = analyze(*abc)
    assert (rep.i_K, rep.nu2, rep.nu3) == (iK, nu2, nu3)
    assert isinstance(rep.monogenicity, NotMonogenic)
    assert not rep.inconsistent


def test_analyze_shapes_of_worked_examples():
    assert analyze(25, 1125, 405).shapes()[2] == S("[1^2, 2^1]")
    assert analyze(6, 42, 975).shapes()[3] == S("[1^4]")


def test_analyze_reducible():
    rep = analyze(0, 0, -4)
    assert rep.reducible and rep.i_K is None


def test_analyze_finds_generator_certificate():
    rep = analyze(2, 0, 8)  # 128 - 27 = 101
    assert rep.i_K == 1
    assert isinstance(rep.monogenicity, FieldMonogenicPolyNot)
    assert any(m.theorem == 3 for m in rep.matches)


def test_analyze_only_one_prime():
    rep = analyze(4913, 867, 119, AnalyzeOptions(primes=(2,)))
    assert set(rep.primes) == {2} and rep.nu2 == 1 and rep.nu3 == 0


@settings(max_examples=150, deadline=None)
@given(coeff, coeff, coeff)
def test_positive_index_implies_dedekind_failure(a, b, c):
    assume(c != 0)
    rep = analyze(a, b, c)
    assume(not rep.reducible)
    for p, nu in ((2, rep.nu2), (3, rep.nu3)):
        if nu:
            assert not dedekind_p_maximal(Quadrinomial(a, b, c).poly, p)
        assert nu is None or nu <= (2 if p == 2 else 1)


# family verification


def test_verify_is_deterministic_and_worker_independent():
    r1 = verify_family(1, 1, lifts_per_class=5, seed=4, keep_instances=True)
    r2 = verify_family(1, 1, lifts_per_class=5, seed=4, keep_instances=True, workers=2)
    assert r1.instances == r2.instances and r1.passed and r2.passed
    r3 = verify_family(1, 1, lifts_per_class=5, seed=5, keep_instances=True)
    assert r3.instances != r1.instances


def test_verify_counts():
    rep = verify_family(1, 1, lifts_per_class=7, seed=0)
    assert rep.classes == 8 and rep.checked == 56
    assert rep.shapes_seen == {"[2^1, 2^1]": 56}


@pytest.mark.parametrize("variant", ["statement", "proof"])
def test_literal_tau_readings_fail_and_the_oracle_agrees(variant):
    refuted = 0
    for number in (16, 17):
        rep = verify_family(1, number, lifts_per_class=5, seed=1, tau_variant=variant)
        assert rep.counterexamples
        for cx in rep.counterexamples[:5]:
            want = local_shape(cx.a, cx.b, cx.c, 2)
            if want is not None:
                assert want != get_case(1, number, tau_variant=variant).shape
                refuted += 1
    assert refuted > 0


@pytest.mark.parametrize("variant", ["shifted", "development"])
def test_shifted_tau_readings_pass(variant):
    for number in (16, 17):
        assert verify_family(1, number, lifts_per_class=5, seed=1, tau_variant=variant).passed


@settings(max_examples=300, deadline=None)
@given(st.integers(-(10**4), 10**4), st.integers(-(10**4), 10**4), st.integers(-(10**4), 10**4), st.integers(2, 6))
def test_shifted_tau_equals_the_development_valuation(ka, b2, c2, l):
    b2, c2 = 2 * b2 + 1, 2 * c2 + 1
    # a b_2 + 1 = 2 mod 4 with a = 1 mod 4 times b_2^-1
    a = (1 if b2 % 4 == 1 else 3) + 4 * ka
    b, c = 4 * b2, 2 ** (3 + l) * c2
    assume(_t1c16_17_pre(a, b, c, "shifted"))
    assert tau_sigma(a, b, c, "shifted") == tau_sigma(a, b, c, "development")


def test_probe_reports_the_missing_triple():
    others = [get_case(1, n) for n in range(1, 18) if n != 2]
    rep = probe_case(get_case(1, 2), seed=0, others=others)
    assert (19, 31, 29) in rep.hits


@pytest.mark.parametrize("modulus", [27, 243])
def test_t2_case3_under_both_moduli(modulus):
    rep = verify_family(2, 3, lifts_per_class=3, seed=2, case3_modulus=modulus)
    assert rep.passed
    assert rep.classes == 9


def test_synthesized_cases_match_their_own_predicates():
    rng = random.Random(0)
    for number in (7, 8, 16, 17):
        case = get_case(1, number)
        for cls in case.classes():
            a, b, c = case.sample(cls, rng)
            assert case.matches(a, b, c)

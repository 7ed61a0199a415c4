import pytest
from hypothesis import given, settings, strategies as st

from oracles import (bipyramid_primes, bipyramidal_graph_primes, brute_minimal_transversals,
                     explicit_power, monomials_of_degree)
from srw import (DomainError, Monomial, MonomialIdeal, VariablePrime,
                 contains_monomial, divides, intersect, minimalize, monomial_in_power,
                 parse_ideal, parse_monomial, power, primary_decomposition,
                 SimplicialComplex, stanley_reisner_ideal)
from srw.monomial_algebra import intersect_all, intersect_prime_power, product

from conftest import family_ideal


def mono(text, n=6):
    return parse_monomial(text, n)


def ideal(text, n=6):
    return parse_ideal(text, n)


def gen_strings(I):
    return [str(g) for g in I.generators]


def test_b4_ideal(b4):
    assert gen_strings(b4) == ["x0*x5", "x1*x3", "x2*x4"]


def test_full_simplex_ideal_is_zero():
    assert stanley_reisner_ideal(SimplicialComplex(3, ((0, 1, 2),))).is_zero()


def test_monomial_format_round_trip():
    m = Monomial((2, 0, 0, 1))
    assert str(m) == "x0^2*x3"
    assert parse_monomial("x0^2*x3", 4) == m
    assert str(Monomial((0, 0))) == "1"
    assert parse_monomial("x1*x1", 2) == Monomial((0, 2))
    with pytest.raises(DomainError):
        parse_monomial("y1", 2)
    with pytest.raises(DomainError):
        parse_monomial("x4", 2)


def test_divides():
    assert divides(mono("x1*x2"), mono("x1*x2*x3"))
    assert not divides(mono("x1^2"), mono("x1"))
    assert divides(mono("x2*x3"), mono("x1*x2*x3*x4"))
    with pytest.raises(DomainError):
        divides(Monomial((1,)), Monomial((1, 0)))


def test_minimalize():
    assert gen_strings(minimalize([mono("x1"), mono("x1*x2")])) == ["x1"]
    assert minimalize([], 3).is_zero()
    dupes = [mono("x1^2"), mono("x1*x2"), mono("x2^2"), mono("x1*x2"), mono("x1^2")]
    assert gen_strings(minimalize(dupes)) == ["x1^2", "x1*x2", "x2^2"]


def test_canonical_order():
    I = ideal("x2*x4, x1^3, x0*x5, x1*x3")
    assert gen_strings(I) == ["x0*x5", "x1*x3", "x2*x4", "x1^3"]


def test_intersect_examples(b4, d4):
    assert gen_strings(intersect(ideal("x0"), ideal("x1"))) == ["x0*x1"]
    primes = [VariablePrime(tuple(P), 6).ideal() for P in bipyramid_primes(4)]
    assert intersect_all(primes, 6) == b4
    primes = [VariablePrime(tuple(P), 6).ideal() for P in bipyramidal_graph_primes(4)]
    assert len(primes) == 13
    assert intersect_all(primes, 6) == d4


def test_intersect_unit_and_mismatch(b4):
    assert intersect(MonomialIdeal.unit(6), b4) == b4
    with pytest.raises(DomainError):
        intersect(b4, ideal("x0", 3))


def test_power_examples(b4):
    assert power(b4, 1) == b4
    assert power(b4, 0) == MonomialIdeal.unit(6)
    apex = ideal("x0*x4", 5)
    assert gen_strings(power(apex, 2)) == ["x0^2*x4^2"]
    assert gen_strings(power(apex, 5)) == ["x0^5*x4^5"]
    assert gen_strings(family_ideal("B", 3)) == ["x0*x4", "x1*x2*x3"]
    sq = power(b4, 2)
    assert len(sq.generators) == 6 and {g.degree for g in sq.generators} == {4}
    assert set(g.exponents for g in sq.generators) == explicit_power(
        [g.exponents for g in b4.generators], 2, 6)
    assert power(MonomialIdeal.zero(3), 2).is_zero()


def test_contains_monomial(b4):
    assert contains_monomial(b4, mono("x1*x3*x5"))
    assert not contains_monomial(b4, mono("x1*x2"))
    assert not contains_monomial(MonomialIdeal.zero(6), mono("x1"))
    assert contains_monomial(MonomialIdeal.unit(6), mono("x1"))


def test_monomial_in_power(b4):
    assert monomial_in_power(b4, mono("x1*x2*x3*x4"), 2)
    assert not monomial_in_power(b4, mono("x1*x3"), 2)
    assert monomial_in_power(b4, mono("x0*x1*x2*x3*x4*x5"), 3)
    assert not monomial_in_power(b4, mono("x0*x1*x2*x3*x4*x5"), 4)
    with pytest.raises(DomainError):
        monomial_in_power(b4, mono("x1"), 0)


def test_primary_decomposition_b4(b4):
    primes = primary_decomposition(b4)
    assert [P.support for P in primes] == [
        (0, 1, 2), (0, 1, 4), (0, 2, 3), (0, 3, 4), (1, 2, 5), (1, 4, 5), (2, 3, 5), (3, 4, 5)]


def test_primary_decomposition_simple():
    assert [P.support for P in primary_decomposition(ideal("x0*x1", 2))] == [(0,), (1,)]
    with pytest.raises(DomainError, match="squarefree"):
        primary_decomposition(ideal("x0^2", 2))
    with pytest.raises(DomainError, match="zero ideal"):
        primary_decomposition(MonomialIdeal.zero(2))
    assert primary_decomposition(MonomialIdeal.unit(2)) == []


@pytest.mark.parametrize("n", range(4, 10))
def test_bipyramid_decomposition_formula(n):
    got = {frozenset(P.support) for P in primary_decomposition(family_ideal("B", n))}
    assert got == bipyramid_primes(n)


@pytest.mark.parametrize("n", range(3, 10))
def test_bigraph_decomposition_formula(n):
    got = {frozenset(P.support) for P in primary_decomposition(family_ideal("D", n))}
    assert got == bipyramidal_graph_primes(n)
    assert len(got) == 3 * n + 1


def test_variable_prime_power():
    P = VariablePrime((2, 1), 3)
    assert P.support == (1, 2)
    assert gen_strings(P.power(2)) == ["x1^2", "x1*x2", "x2^2"]
    with pytest.raises(DomainError):
        VariablePrime((), 3)


def test_round_trip_text(d4):
    assert parse_ideal("\n".join(gen_strings(d4)), 6) == d4


# random small ideals ---------------------------------------------------------

N_VARS = 4


@st.composite
def monomial_ideals(draw, squarefree=False, max_exp=2):
    top = 1 if squarefree else max_exp
    gens = draw(st.lists(st.tuples(*[st.integers(0, top)] * N_VARS), min_size=1, max_size=4))
    gens = [g for g in gens if any(g)] or [(1,) + (0,) * (N_VARS - 1)]
    return minimalize([Monomial(g) for g in gens], N_VARS)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(), monomial_ideals(), monomial_ideals())
def test_intersect_laws(I, J, K):
    assert intersect(I, J) == intersect(J, I)
    assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))
    assert intersect(I, I) == I


@settings(max_examples=40, deadline=None)
@given(monomial_ideals(), st.integers(0, 2), st.integers(0, 2))
def test_power_additive(I, a, b):
    assert power(I, a + b) == product(power(I, a), power(I, b))
    expected = explicit_power([g.exponents for g in I.generators], a + b, N_VARS)
    assert {g.exponents for g in power(I, a + b).generators} == expected


@settings(max_examples=40, deadline=None)
@given(monomial_ideals(), st.integers(1, 3))
def test_monomial_in_power_matches_expansion(I, r):
    expanded = power(I, r)
    for d in range(0, 7):
        for exps in monomials_of_degree(N_VARS, d):
            m = Monomial(exps)
            assert contains_monomial(expanded, m) == monomial_in_power(I, m, r)


def test_monomial_in_power_six_variables(b4):
    # degree ≤ 8 on six variables against the explicit power
    for r in (1, 2, 3):
        expanded = power(b4, r)
        for d in range(0, 9):
            for exps in monomials_of_degree(6, d):
                m = Monomial(exps)
                assert contains_monomial(expanded, m) == monomial_in_power(b4, m, r)


@settings(max_examples=60, deadline=None)
@given(monomial_ideals(squarefree=True))
def test_decomposition_properties(I):
    primes = primary_decomposition(I)
    supports = [set(P.support) for P in primes]
    assert [tuple(sorted(s)) for s in supports] == brute_minimal_transversals(
        [g.support for g in I.generators], N_VARS)
    assert not any(a < b for a in supports for b in supports)
    for g in I.generators:
        assert all(set(g.support) & s for s in supports)
    assert intersect_all([P.ideal() for P in primes], N_VARS) == I


@settings(max_examples=40, deadline=None)
@given(monomial_ideals(), st.sets(st.integers(0, N_VARS - 1), min_size=1), st.integers(1, 3))
def test_intersect_prime_power_matches_intersect(I, support, m):
    P = VariablePrime(tuple(support), N_VARS)
    assert intersect_prime_power(I, P, m) == intersect(I, P.power(m))


def test_listed_d4_generators_disagree_with_listed_primes(d4):
    listed = ideal("x1*x3, x2*x4, x0*x1*x2, x0*x2*x3, x0*x3*x4, x0*x4*x1, "
                   "x1*x2*x5, x2*x3*x5, x3*x4*x5, x4*x1*x5")
    primes = [VariablePrime(tuple(P), 6).ideal() for P in bipyramidal_graph_primes(4)]
    from_primes = intersect_all(primes, 6)
    assert from_primes == d4 and len(d4.generators) == 14
    assert set(listed.generators) < set(from_primes.generators)
    # the ten-generator ideal has a different set of minimal primes
    assert len(primary_decomposition(listed)) == 8

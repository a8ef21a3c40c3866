import pytest
from hypothesis import given, strategies as st

from edgedepth.monomials import (DimensionError, Monomial, MonomialIdeal, colon, contains,
                                 equals, ideal_sum, intersect, minimalize, power, product)

from conftest import monomials_up_to


def ideal(n, *gens):
    return MonomialIdeal(n, gens)


def members(I, degree):
    return {m for m in monomials_up_to(I.n, degree) if contains(I, m)}


def test_minimalize_drops_multiples():
    I = minimalize([(1, 1, 0), (1, 1, 1), (0, 0, 2)], 3)
    assert I.gens == ((1, 1, 0), (0, 0, 2))


def test_minimalize_empty_is_zero_ideal():
    I = minimalize([], 2)
    assert I.is_zero and str(I) == "(0)"


def test_minimalize_chain():
    assert minimalize([(1,), (2,), (3,)], 1).gens == ((1,),)


def test_minimalize_dimension_mismatch():
    with pytest.raises(DimensionError):
        minimalize([(1, 0), (1, 0, 0)], 2)


def test_sum_examples():
    assert ideal_sum(ideal(3, (1, 1, 0)), ideal(3, (0, 1, 1))) == ideal(3, (1, 1, 0), (0, 1, 1))
    I = ideal(3, (1, 1, 0))
    assert ideal_sum(I, MonomialIdeal.zero(3)) == I
    assert ideal_sum(ideal(2, (1, 0)), ideal(2, (1, 1))) == ideal(2, (1, 0))


def test_power_examples():
    assert power(ideal(2, (1, 0), (0, 1)), 2).gens == ((2, 0), (1, 1), (0, 2))
    I = ideal(3, (1, 1, 0), (0, 1, 1))
    assert power(I, 1) == I
    with pytest.raises(ValueError):
        power(I, 0)


def test_square_of_p3_edge_ideal_against_enumeration():
    I = ideal(3, (1, 1, 0), (0, 1, 1))
    sq = power(I, 2)
    assert sq.gens == ((2, 2, 0), (1, 2, 1), (0, 2, 2))
    # membership in I^2 up to degree 6: m is divisible by a product of two generators
    prods = [(a, b) for a in I.gens for b in I.gens]
    expected = {m for m in monomials_up_to(3, 6)
                if any(all(x + y <= z for x, y, z in zip(a, b, m)) for a, b in prods)}
    assert members(sq, 6) == expected


def test_intersect_examples():
    I = intersect(ideal(3, (0, 2, 0)), ideal(3, (2, 0, 0), (1, 0, 1), (0, 0, 2)))
    assert I.gens == ((2, 2, 0), (1, 2, 1), (0, 2, 2))
    assert members(I, 4) == members(ideal(3, (0, 2, 0)), 4) & members(
        ideal(3, (2, 0, 0), (1, 0, 1), (0, 0, 2)), 4)
    assert intersect(ideal(2, (1, 0)), ideal(2, (0, 1))).gens == ((1, 1),)
    J = ideal(3, (1, 1, 0), (0, 0, 3))
    assert intersect(J, J) == J


def test_colon_examples():
    I = ideal(3, (1, 1, 0), (0, 1, 1))
    Q = colon(I, (0, 1, 0))
    assert Q.gens == ((1, 0, 0), (0, 0, 1))
    for m in monomials_up_to(3, 2):
        assert contains(Q, m) == contains(I, tuple(a + b for a, b in zip(m, (0, 1, 0))))
    assert colon(I, (0, 0, 0)) == I
    assert colon(ideal(3, (1, 1, 0)), (0, 0, 1)).gens == ((1, 1, 0),)


def test_contains_and_equals():
    I = power(ideal(3, (1, 1, 0), (0, 1, 1)), 2)
    assert contains(I, (2, 2, 1))
    assert not contains(ideal(3, (1, 1, 0)), (0, 0, 0))
    m = ideal(2, (1, 0), (0, 1))
    assert equals(intersect(m, m), m)


def test_unit_and_zero():
    U = MonomialIdeal.unit(3)
    assert U.is_unit and str(U) == "(1)"
    assert contains(U, (0, 0, 0))
    assert intersect(U, ideal(3, (1, 0, 0))) == ideal(3, (1, 0, 0))
    assert product(MonomialIdeal.zero(3), U).is_zero


def test_text_forms():
    assert str(Monomial((0, 0, 2, 0, 1))) == "x3^2*x5"
    assert str(Monomial((0, 0))) == "1"
    I = MonomialIdeal.parse("(x2^2*x3^2, x1*x2^2*x3, x1^2*x2^2)", 3)
    assert str(I) == "(x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2)"
    assert MonomialIdeal.parse(str(I), 3) == I
    with pytest.raises(DimensionError):
        MonomialIdeal.parse("(x4)", 3)


def test_monomial_helpers():
    u, v = Monomial((2, 0, 1)), Monomial((1, 1, 3))
    assert u.lcm(v).exponents == (2, 1, 3)
    assert u.gcd(v).exponents == (1, 0, 1)
    assert (u * v).degree == 8
    assert not u.divides(v) and Monomial((1, 0, 1)).divides(v)
    with pytest.raises(ValueError):
        Monomial((1, -1))


# --- properties -----------------------------------------------------------

N = 3
exps = st.tuples(*[st.integers(0, 3)] * N)
ideals = st.lists(exps, min_size=0, max_size=5).map(lambda g: MonomialIdeal(N, g))
small = st.tuples(*[st.integers(0, 2)] * N)


def is_antichain(I):
    return not any(a != b and all(x <= y for x, y in zip(a, b)) for a in I.gens for b in I.gens)


@given(ideals, ideals)
def test_operations_return_antichains(I, J):
    for K in (ideal_sum(I, J), product(I, J), intersect(I, J), colon(I, J.gens[0] if J.gens else (0,) * N)):
        assert is_antichain(K)


@given(ideals, ideals, st.tuples(*[st.integers(0, 4)] * N))
def test_membership_coherence(I, J, m):
    assert contains(intersect(I, J), m) == (contains(I, m) and contains(J, m))
    assert contains(ideal_sum(I, J), m) == (contains(I, m) or contains(J, m))


@given(ideals, small, st.tuples(*[st.integers(0, 4)] * N))
def test_colon_adjunction(I, u, m):
    assert contains(colon(I, u), m) == contains(I, tuple(a + b for a, b in zip(m, u)))


@given(ideals, st.integers(1, 2), st.integers(1, 2))
def test_power_multiplicativity(I, s, t):
    assert power(I, s + t) == product(power(I, s), power(I, t))


@given(ideals)
def test_minimalize_idempotent(I):
    assert minimalize(I.gens, N) == I


@given(ideals, ideals)
def test_equals_decides_equality(I, J):
    # equal canonical generators iff equal membership on a box containing all generators
    same = all(contains(I, m) == contains(J, m) for m in monomials_up_to(N, 9))
    assert equals(I, J) == same

import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ctx, ideal
from oracles import brute_packing, direct_matching_power, random_ideal
from matchpow import (
    ComplexityError,
    MonomialIdeal,
    bounding_multidegree,
    equals,
    ideal_sum,
    indeg,
    matching_power,
    matching_product,
    minimalize,
    monomial_grade,
    ordinary_product,
    polarize_ideal,
    to_monomial,
)

X4 = ctx(4)


def test_minimalize():
    C = ctx("x", "y", "z")
    gens = [to_monomial(C, e) for e in [(1, 1, 0), (1, 1, 1), (2, 1, 0)]]
    assert minimalize(gens).generators == (to_monomial(C, (1, 1, 0)),)
    assert minimalize([], C).is_zero()
    path = [to_monomial(X4, e) for e in [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)]]
    assert set(minimalize(path).generators) == set(path)
    with pytest.raises(ValueError):
        minimalize([to_monomial(C, (1, 0, 0)), to_monomial(X4, (1, 0, 0, 0))])


def test_unit_absorbs_everything():
    I = MonomialIdeal(X4, [X4.one(), to_monomial(X4, (1, 0, 0, 0))])
    assert I.is_unit() and str(I) == "(1)"
    assert str(MonomialIdeal.zero(X4)) == "(0)"


def test_sum_product_equality():
    C = ctx("x1", "x2", "y")
    x1, x2, y = (to_monomial(C, e) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    P = ordinary_product(MonomialIdeal(C, [x1, x2]), MonomialIdeal(C, [y]))
    assert str(P) == "(x1*y, x2*y)"
    assert ideal_sum(ideal(X4, (1, 0, 0, 0)), ideal(X4, (1, 1, 0, 0))) == ideal(X4, (1, 0, 0, 0))
    assert equals(ideal(X4, (1, 0, 0, 0), (0, 1, 0, 0)), ideal(X4, (0, 1, 0, 0), (1, 0, 0, 0)))
    with pytest.raises(ValueError):
        equals(ideal(X4, (1, 0, 0, 0)), ideal(C, (1, 0, 0)))


def test_canonical_order_is_decreasing_lex():
    I = ideal(X4, (0, 0, 1, 1), (1, 1, 0, 0), (0, 1, 1, 0))
    assert str(I) == "(x1*x2, x2*x3, x3*x4)"


def test_indeg(d3):
    assert indeg(ideal(ctx(5), (1, 1, 0, 0, 0), (0, 0, 1, 1, 1))) == 2
    assert indeg(d3) == 4
    assert indeg(MonomialIdeal.unit(X4)) == 0
    with pytest.raises(ValueError):
        indeg(MonomialIdeal.zero(X4))


def test_d3_generators_by_enumeration(d3):
    # the 14 edges x_i -> w with w in {a, b, c} of weight 3, plus b -> c
    C = d3.context
    expect = set()
    for names, w in [(range(1, 6), "a"), (range(5, 10), "b"), (range(10, 13), "c")]:
        for i in names:
            e = [0] * 15
            e[C.index(f"x{i}")] = 1
            e[C.index(w)] = 3
            expect.add(tuple(e))
    e = [0] * 15
    e[C.index("b")] = 1
    e[C.index("c")] = 3
    expect.add(tuple(e))
    assert {u.exponents for u in d3.generators} == expect
    assert min(sum(v) for v in expect) == indeg(d3) == 4


def test_bounding_multidegree(d3):
    C = ctx("x", "y", "z")
    assert bounding_multidegree(ideal(C, (2, 1, 0), (0, 3, 1))) == (2, 3, 1)
    assert bounding_multidegree(ideal(C, (2, 0, 5))) == (2, 0, 5)
    brute = tuple(max(u.exponents[i] for u in d3.generators) for i in range(15))
    assert bounding_multidegree(d3) == brute == (1,) * 12 + (3, 3, 3)
    assert sum(bounding_multidegree(d3)) == 21
    with pytest.raises(ValueError):
        bounding_multidegree(MonomialIdeal.zero(C))


def test_matching_product():
    A = ideal(X4, (1, 1, 0, 0), (0, 1, 1, 0))
    B = ideal(X4, (0, 0, 1, 1))
    assert matching_product(A, B) == ideal(X4, (1, 1, 1, 1))
    assert matching_product(A, MonomialIdeal.unit(X4)) == A
    x1 = ideal(X4, (1, 0, 0, 0))
    assert matching_product(x1, x1).is_zero()


def test_matching_power_examples(d3):
    path = ideal(X4, (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1))
    assert matching_power(path, 2) == ideal(X4, (1, 1, 1, 1))
    assert matching_power(d3, 1) == d3
    assert matching_power(d3, monomial_grade(d3) + 1).is_zero()
    with pytest.raises(ValueError):
        matching_power(path, 0)


def test_monomial_grade(d3):
    assert monomial_grade(d3) == 3
    assert monomial_grade(ideal(X4, (1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1))) == 2
    assert monomial_grade(ideal(X4, (3, 0, 1, 0))) == 1
    with pytest.raises(ValueError):
        monomial_grade(MonomialIdeal.unit(X4))
    with pytest.raises(ValueError):
        monomial_grade(MonomialIdeal.zero(X4))


def test_monomial_grade_cap():
    I = ideal(ctx(6), *[tuple(int(i == j or i == j + 1) for i in range(6)) for j in range(5)])
    with pytest.raises(ComplexityError):
        monomial_grade(I, max_generators=3)


def test_monomial_grade_matches_brute_force_on_larger_sets():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(6, 14)
        C = ctx(n)
        gens = set()
        for _ in range(rng.randint(5, 16)):
            e = [0] * n
            for i in rng.sample(range(n), rng.randint(1, 3)):
                e[i] = 1
            gens.add(tuple(e))
        I = MonomialIdeal.from_exponents(C, gens)
        assert monomial_grade(I) == brute_packing([u.exponents for u in I.generators])


def test_polarize_ideal(d3):
    C = ctx("x", "y")
    P = polarize_ideal(ideal(C, (2, 0), (1, 1)))
    assert P.context.variables == ("x_1", "x_2", "y_1")
    assert str(P) == "(x_1*x_2, x_1*y_1)"
    sq = polarize_ideal(ideal(X4, (1, 1, 0, 0), (0, 0, 1, 1)))
    assert str(sq) == "(x1_1*x2_1, x3_1*x4_1)"
    Pd = polarize_ideal(d3)
    assert Pd.context.n == 21 and Pd.is_squarefree() and len(Pd) == 14
    with pytest.raises(ValueError):
        polarize_ideal(MonomialIdeal.zero(C))


ideals = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 3), min_size=n, max_size=n).filter(any),
        min_size=1,
        max_size=7,
    ).map(lambda vs: MonomialIdeal.from_exponents(ctx(n), vs))
)


@given(ideals, ideals)
def test_matching_product_commutes(I, J):
    if I.context == J.context:
        assert equals(matching_product(I, J), matching_product(J, I))


@settings(max_examples=150)
@given(ideals)
def test_power_properties(I):
    gens = [u.exponents for u in I.generators]
    nu = monomial_grade(I)
    assert nu == brute_packing(gens)
    assert matching_power(I, 1) == I
    for k in range(1, len(gens) + 2):
        P = matching_power(I, k)
        assert {u.exponents for u in P.generators} == direct_matching_power(gens, k)
        assert (not P.is_zero()) == (k <= nu)
        assert len(P) <= math.comb(len(gens), k)
        if not P.is_zero():
            assert all(u.degree >= k * I.indeg for u in P.generators)


def test_polarization_commutes_with_powers_random():
    rng = random.Random(11)
    for _ in range(60):
        I = random_ideal(rng)
        bound = I.bounding_multidegree
        P = polarize_ideal(I)
        assert monomial_grade(P) == monomial_grade(I)
        for k in range(1, monomial_grade(I) + 1):
            assert polarize_ideal(matching_power(I, k), bound) == matching_power(P, k)

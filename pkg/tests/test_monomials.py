import pytest
from hypothesis import given, strategies as st

from conftest import ctx
from matchpow import (
    Monomial,
    PolynomialContext,
    degree,
    divides,
    lcm,
    multiply,
    polarize_monomial,
    support,
    to_monomial,
    to_multidegree,
)
from matchpow.monomials import parse_field

XYZ = ctx("x", "y", "z")


def test_to_monomial():
    assert str(to_monomial(XYZ, (2, 0, 1))) == "x^2*z"
    u = to_monomial(XYZ, (0, 0, 0))
    assert u.is_unit() and str(u) == "1"


def test_to_monomial_rejects_bad_vectors():
    with pytest.raises(ValueError, match="negative entry"):
        to_monomial(ctx("x", "y"), (1, -1))
    with pytest.raises(ValueError, match="length"):
        to_monomial(XYZ, (1, 2))


def test_to_multidegree(d3):
    assert to_multidegree(to_monomial(XYZ, (2, 0, 1))) == (2, 0, 1)
    assert to_multidegree(XYZ.one()) == (0, 0, 0)
    a3 = to_monomial(d3.context, [0] * 12 + [3, 0, 0])
    assert str(a3) == "a^3"
    assert to_multidegree(a3)[d3.context.index("a")] == 3
    assert sum(to_multidegree(a3)) == 3


def test_support_is_one_based():
    assert support(to_monomial(XYZ, (2, 0, 1))) == {1, 3}
    assert support(XYZ.one()) == set()
    assert support(to_monomial(XYZ, (1, 1, 1))) == {1, 2, 3}


def test_arithmetic():
    u = to_monomial(XYZ, (2, 1, 0))
    v = to_monomial(XYZ, (0, 3, 1))
    assert lcm(u, v) == to_monomial(XYZ, (2, 3, 1))
    assert divides(to_monomial(XYZ, (1, 1, 0)), to_monomial(XYZ, (2, 1, 1)))
    assert not divides(u, v)
    assert degree(to_monomial(XYZ, (2, 0, 1))) == 3
    assert multiply(u, v) == to_monomial(XYZ, (2, 4, 1))


def test_context_mismatch():
    u = to_monomial(XYZ, (1, 0, 0))
    w = to_monomial(ctx("x", "y", "w"), (1, 0, 0))
    for op in (lcm, divides, multiply):
        with pytest.raises(ValueError, match="different contexts"):
            op(u, w)


def test_context_validation():
    with pytest.raises(ValueError):
        PolynomialContext(())
    with pytest.raises(ValueError, match="duplicate"):
        PolynomialContext(("x1", "x_1"))
    assert XYZ.index("z") == 2
    assert ctx("x_1", "x_2").index("x2") == 1


def test_fields():
    assert parse_field("QQ") == 0
    assert parse_field("F7") == parse_field("GF(7)") == parse_field("ZZ/7") == 7
    with pytest.raises(ValueError):
        parse_field("F6")
    with pytest.raises(ValueError):
        parse_field("RR")
    assert ctx("x", p=5).field == "F5"


def test_polarize_monomial():
    xy = ctx("x", "y")
    p = polarize_monomial(to_monomial(xy, (2, 1)), (2, 1))
    assert p.context.variables == ("x_1", "x_2", "y_1")
    assert str(p) == "x_1*x_2*y_1"
    sq = polarize_monomial(to_monomial(XYZ, (1, 0, 1)), (1, 0, 1))
    assert str(sq) == "x_1*z_1"
    with pytest.raises(ValueError, match="below"):
        polarize_monomial(to_monomial(xy, (2, 1)), (1, 1))


def test_polarize_d3_power(d3):
    bound = [0] * 15
    bound[12] = 3
    a3 = to_monomial(d3.context, bound)
    assert str(polarize_monomial(a3, bound)) == "a_1*a_2*a_3"


vectors = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.integers(0, 40), min_size=n, max_size=n),
        st.lists(st.integers(0, 40), min_size=n, max_size=n),
        st.lists(st.integers(0, 40), min_size=n, max_size=n),
    )
)


@given(vectors)
def test_monomial_laws(vs):
    a, b, c = vs
    C = ctx(len(a))
    u, v, w = (Monomial(C, tuple(x)) for x in (a, b, c))
    assert to_monomial(C, to_multidegree(u)) == u
    assert degree(u * v) == degree(u) + degree(v)
    assert (u * v).support == u.support | v.support
    m = lcm(u, v)
    assert divides(u, m) and divides(v, m)
    assert lcm(u, v) == lcm(v, u)
    assert lcm(lcm(u, v), w) == lcm(u, lcm(v, w))
    assert lcm(u, u) == u
    assert (not (u.support & v.support)) == (lcm(u, v) == u * v)
    bound = [max(x, y) for x, y in zip(a, b)]
    if any(bound):
        p = polarize_monomial(u, bound)
        assert p.is_squarefree()
        assert p.degree == u.degree


def test_huge_exponents():
    u = to_monomial(ctx("x"), (10**30,))
    assert degree(u * u) == 2 * 10**30

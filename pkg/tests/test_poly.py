import pytest
from hypothesis import given, strategies as st

from qpencil.errors import PrecondError
from qpencil.fields import QQ, PrimeField
from qpencil.poly import Poly

F5 = PrimeField(5)
VARS = ("x", "y", "z")


def _poly5(terms):
    return Poly(F5, VARS, {tuple(e): c % 5 for e, c in terms})


small_terms = st.lists(
    st.tuples(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
        st.integers(1, 4),
    ),
    max_size=5,
)


@given(small_terms, small_terms)
def test_add_commutes(ta, tb):
    a, b = _poly5(ta), _poly5(tb)
    assert a + b == b + a


@given(small_terms, small_terms, small_terms)
def test_mul_associates_and_distributes(ta, tb, tc):
    a, b, c = _poly5(ta), _poly5(tb), _poly5(tc)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_terms, small_terms)
def test_derivative_product_rule(ta, tb):
    a, b = _poly5(ta), _poly5(tb)
    lhs = (a * b).derivative("y")
    rhs = a.derivative("y") * b + a * b.derivative("y")
    assert lhs == rhs


def test_zero_and_equality():
    z = Poly.zero(F5, VARS)
    assert z.is_zero
    assert not z
    assert z == Poly(F5, VARS, {(0, 0, 0): 0})
    one = Poly.const(F5, VARS, 1)
    assert one + z == one


def test_evaluate_matches_subs():
    x = Poly.variable(QQ, VARS, "x")
    y = Poly.variable(QQ, VARS, "y")
    f = x * x + 2 * y - 1
    from fractions import Fraction

    vals = [Fraction(3), Fraction(-2), Fraction(7)]
    assert f.evaluate(vals) == 9 - 4 - 1
    g = f.subs({"x": Poly.const(QQ, VARS, Fraction(3))})
    assert g.evaluate(vals) == f.evaluate(vals)


def test_bihomogeneous_zero_poly():
    z = Poly.zero(QQ, ("a", "b", "c", "d"))
    ok, bideg = z.is_bihomogeneous(("a", "b"), ("c", "d"))
    assert ok and bideg is None


def test_bihomogeneous_detects_mixed():
    a, b, c, d = (Poly.variable(QQ, ("a", "b", "c", "d"), v) for v in "abcd")
    ok, bideg = (a * c + b * d).is_bihomogeneous(("a", "b"), ("c", "d"))
    assert ok and bideg == (1, 1)
    ok, _ = (a * c + b).is_bihomogeneous(("a", "b"), ("c", "d"))
    assert not ok


def test_univariate_extraction():
    x = Poly.variable(F5, VARS, "x")
    f = x * x * 3 + x * 2 + 1
    assert f.univariate_in("x") == [1, 2, 3]
    y = Poly.variable(F5, VARS, "y")
    with pytest.raises(PrecondError):
        (f + y).univariate_in("x")


def test_total_degree_and_homogeneous():
    x = Poly.variable(QQ, VARS, "x")
    y = Poly.variable(QQ, VARS, "y")
    f = x * x * y - y * y * y
    assert f.total_degree() == 3
    assert f.is_homogeneous()
    assert f.is_homogeneous(3)
    assert not (f + x).is_homogeneous()


def test_variable_name_checked():
    with pytest.raises(PrecondError):
        Poly.variable(QQ, VARS, "w")

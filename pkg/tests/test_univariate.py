"""Dense univariate arithmetic; coefficients ascending."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import qpencil.univariate as uv
from qpencil.errors import PrecondError
from qpencil.fields import QQ, PrimeField

F5 = PrimeField(5)

coeffs5 = st.lists(st.integers(0, 4), min_size=0, max_size=7)


@given(coeffs5, coeffs5)
def test_divmod_identity(a, b):
    if uv.is_zero_poly(F5, b):
        with pytest.raises(PrecondError):
            uv.divmod_poly(F5, a, b)
        return
    q, r = uv.divmod_poly(F5, a, b)
    back = uv.add(F5, uv.mul(F5, q, b), r)
    assert uv.trim(F5, back) == uv.trim(F5, a)
    assert uv.degree(F5, r) < uv.degree(F5, b) or uv.is_zero_poly(F5, r)


@given(coeffs5, coeffs5)
def test_gcd_divides_both(a, b):
    g = uv.gcd_poly(F5, a, b)
    if uv.is_zero_poly(F5, a) and uv.is_zero_poly(F5, b):
        assert g == [F5.zero] or uv.is_zero_poly(F5, g)
        return
    for c in (a, b):
        if uv.is_zero_poly(F5, c):
            continue
        _, r = uv.divmod_poly(F5, c, g)
        assert uv.is_zero_poly(F5, r)
    # monic normalization
    assert g[-1] == F5.one


@given(coeffs5, coeffs5, coeffs5)
def test_mul_distributes(a, b, c):
    lhs = uv.mul(F5, a, uv.add(F5, b, c))
    rhs = uv.add(F5, uv.mul(F5, a, b), uv.mul(F5, a, c))
    assert uv.trim(F5, lhs) == uv.trim(F5, rhs)


def _from_roots(roots):
    f = [Fraction(1)]
    for r in roots:
        f = uv.mul(QQ, f, [-Fraction(r), Fraction(1)])
    return f


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=5))
def test_squarefree_iff_resultant_with_derivative(roots):
    f = _from_roots(roots)
    res = uv.resultant(QQ, f, uv.derivative(QQ, f))
    assert uv.is_squarefree(QQ, f) == (len(set(roots)) == len(roots))
    assert (res != 0) == uv.is_squarefree(QQ, f)


def test_squarefree_prime_field_spot():
    # (t+1)^2 (t+2) over F_5
    f = uv.mul(F5, uv.mul(F5, [1, 1], [1, 1]), [2, 1])
    assert not uv.is_squarefree(F5, f)
    assert uv.is_squarefree(F5, [2, 1, 1, 3])


@given(st.lists(st.builds(Fraction, st.integers(-48, 48), st.integers(1, 6)), min_size=1, max_size=4))
@settings(max_examples=60)
def test_sturm_counts_match_known_roots(roots):
    """Sturm count on (a, b] equals the number of planted roots.

    Chains are built from squarefree input (multiplicities are stripped
    before the chain everywhere in the library), so plant each root once.
    """
    distinct = sorted(set(roots))
    f = _from_roots(distinct)
    chain = uv.sturm_chain(f)
    lo = min(distinct) - 1
    hi = max(distinct) + 1
    assert uv.count_roots_in(chain, lo, hi) == len(distinct)
    # half-open convention: (a, b] includes b, excludes a
    for r in distinct:
        assert uv.count_roots_in(chain, lo, r) == sum(1 for x in distinct if lo < x <= r)
        assert uv.count_roots_in(chain, r, hi) == sum(1 for x in distinct if r < x <= hi)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
@settings(max_examples=60)
def test_isolation_brackets_every_root_once(roots):
    f = _from_roots(roots)
    intervals = uv.isolate_real_roots(f)
    distinct = sorted(set(roots))
    assert len(intervals) == len(distinct)
    for (a, b), r in zip(intervals, distinct):
        # exact hits come back as singletons, otherwise the root is interior
        if a == b:
            assert a == Fraction(r)
        else:
            assert a < Fraction(r) < b
    # disjoint interiors, increasing order
    for (a1, b1), (a2, b2) in zip(intervals, intervals[1:]):
        assert b1 <= a2


def test_isolation_irrational_roots():
    # t^2 - 2: two irrational roots, must be isolated with rational endpoints
    intervals = uv.isolate_real_roots([Fraction(-2), Fraction(0), Fraction(1)])
    assert len(intervals) == 2
    (a1, b1), (a2, b2) = intervals
    assert a1 < -Fraction(141421, 100000) < b1 or a1 < b1 < 0
    assert float(a2) < 2 ** 0.5 < float(b2) + 1e-12


def test_cauchy_bound_contains_roots():
    f = _from_roots([3, -7, 2])
    bound = uv.cauchy_bound(f)
    assert bound >= 7


def test_sample_points_between():
    f = _from_roots([0, 4])
    roots = uv.isolate_real_roots(f)
    samples = uv.sample_points_between(roots)
    # one sample in every gap: before, between, after
    assert len(samples) == 3
    assert samples[0] < 0 < samples[1] < 4 < samples[2]


def test_evaluate_and_derivative():
    f = [Fraction(1), Fraction(-3), Fraction(2)]  # 1 - 3t + 2t^2
    assert uv.evaluate(QQ, f, Fraction(2)) == 1 - 6 + 8
    assert uv.derivative(QQ, f) == [Fraction(-3), Fraction(4)]


def test_resultant_of_common_root():
    f = _from_roots([2, 5])
    g = _from_roots([2, -1])
    assert uv.resultant(QQ, f, g) == 0
    h = _from_roots([3])
    assert uv.resultant(QQ, f, h) != 0

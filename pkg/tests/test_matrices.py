"""Symmetric matrices: inertia, congruence invariance, polynomial determinants."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpencil.errors import PrecondError
from qpencil.fields import QQ, PrimeField
from qpencil.linalg import det, identity, is_invertible, mat_mul
from qpencil.matrices import SymMatrix, congruent, det_field, det_poly, inertia, signature_pair
from qpencil.poly import Poly


def test_symmetry_enforced():
    with pytest.raises(PrecondError):
        SymMatrix.from_rows([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]])
    with pytest.raises(PrecondError):
        SymMatrix.from_rows([[Fraction(1), Fraction(2)]])


def test_inertia_of_diagonal():
    g = SymMatrix.diagonal(QQ, [Fraction(2), Fraction(-3), Fraction(0), Fraction(5)])
    assert inertia(g) == (2, 1, 1)
    # signature pairs are only defined for nondegenerate forms
    with pytest.raises(PrecondError):
        signature_pair(g)
    assert signature_pair(SymMatrix.diagonal(QQ, [Fraction(2), Fraction(-3), Fraction(5)])) == (2, 1)


def test_inertia_total_is_size():
    g = SymMatrix.from_rows(
        [
            [Fraction(0), Fraction(1), Fraction(2)],
            [Fraction(1), Fraction(0), Fraction(3)],
            [Fraction(2), Fraction(3), Fraction(0)],
        ]
    )
    pos, neg, zero = inertia(g)
    assert pos + neg + zero == 3


def _random_invertible(rng, size):
    """Random rational invertible matrix, by rejection."""
    while True:
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(size)] for _ in range(size)]
        if is_invertible(QQ, m):
            return m


@given(st.integers(0, 10_000))
@settings(max_examples=40, deadline=None)
def test_inertia_congruence_invariant(seed):
    """Sylvester: inertia is unchanged by G -> M^T G M with M invertible."""
    rng = random.Random(seed)
    size = rng.randint(2, 5)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(-5, 5))
    g = SymMatrix.from_rows(rows)
    m = _random_invertible(rng, size)
    assert inertia(congruent(QQ, g, m)) == inertia(g)


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_congruence_determinant_square_factor(seed):
    rng = random.Random(seed)
    size = rng.randint(2, 4)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(-5, 5))
    g = SymMatrix.from_rows(rows)
    m = _random_invertible(rng, size)
    dm = det(QQ, m)
    assert det_field(QQ, congruent(QQ, g, m)) == dm * dm * det_field(QQ, g)


def test_det_block_multiplicative():
    # det of a block-diagonal symmetric matrix is the product of block dets
    a = SymMatrix.from_rows([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]])
    b = SymMatrix.from_rows([[Fraction(-1), Fraction(4)], [Fraction(4), Fraction(0)]])
    rows = [[Fraction(0)] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[i][j] = a[i, j]
            rows[2 + i][2 + j] = b[i, j]
    big = SymMatrix.from_rows(rows)
    assert det_field(QQ, big) == det_field(QQ, a) * det_field(QQ, b)


def test_det_poly_matches_pointwise_evaluation():
    f5 = PrimeField(5)
    vars_ = ("s", "t")
    s = Poly.variable(f5, vars_, "s")
    t = Poly.variable(f5, vars_, "t")
    one = Poly.const(f5, vars_, 1)
    g = SymMatrix.from_rows([[s, t, one], [t, s + one, t], [one, t, s * s]])
    d = det_poly(g)
    for sv in range(5):
        for tv in range(5):
            rows = [[g[i, j].evaluate([sv, tv]) for j in range(3)] for i in range(3)]
            assert d.evaluate([sv, tv]) == det(f5, rows)


def test_map_and_indexing():
    g = SymMatrix.diagonal(QQ, [Fraction(1), Fraction(-2)])
    h = g.map(lambda e: 2 * e)
    assert h[0, 0] == 2 and h[1, 1] == -4
    assert g.to_lists() == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-2)]]


def test_congruent_identity_is_noop():
    g = SymMatrix.diagonal(QQ, [Fraction(3), Fraction(7), Fraction(-1)])
    assert congruent(QQ, g, identity(QQ, 3)) == g


def test_mat_mul_associative_spot():
    f5 = PrimeField(5)
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 1]]
    c = [[2, 0], [0, 3]]
    assert mat_mul(f5, mat_mul(f5, a, b), c) == mat_mul(f5, a, mat_mul(f5, b, c))

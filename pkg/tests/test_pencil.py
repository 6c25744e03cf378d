"""Pencil construction, discriminants, smoothness, and reductions."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpencil.errors import PrecondError
from qpencil.fields import QQ, PrimeField
from qpencil.matrices import SymMatrix
from qpencil.pencil import (
    BinaryForm,
    Pencil,
    diagonal_pencil,
    discriminant_cover,
    expected_dim,
    is_smooth,
    max_linear_subspace_dim,
    pencil_congruent,
    pencil_recombined,
    reduce_pencil,
    singular_at,
    smoothness,
    toric_pencil,
)

F3 = PrimeField(3)
F5 = PrimeField(5)


# -- construction -------------------------------------------------------


def test_quadric_terms_halve_off_diagonal():
    p = Pencil.from_quadric_terms(QQ, 2, [(0, 1, 1)], [(2, 2, 1)])
    assert p.g0[0, 1] == Fraction(1, 2)
    assert p.g0[1, 0] == Fraction(1, 2)
    assert p.g1[2, 2] == Fraction(1)


def test_quadric_terms_halve_mod_3():
    # over F_3 the inverse of 2 is 2, so the Gram entry of x0*x1 is 2
    p = Pencil.from_quadric_terms(F3, 2, [(0, 1, 1)], [(2, 2, 1)])
    assert p.g0[0, 1] == 2


def test_quadric_terms_reject_duplicates():
    with pytest.raises(PrecondError, match="duplicate"):
        Pencil.from_quadric_terms(QQ, 2, [(0, 1, 1), (0, 1, 2)], [(0, 0, 1)])


def test_quadric_terms_reject_bad_index():
    with pytest.raises(PrecondError, match="out of range"):
        Pencil.from_quadric_terms(QQ, 2, [(0, 3, 1)], [(0, 0, 1)])
    with pytest.raises(PrecondError):
        Pencil.from_quadric_terms(QQ, 2, [(1, 0, 1)], [(0, 0, 1)])


def test_rejects_small_n_and_char_2():
    with pytest.raises(PrecondError, match="n >= 2"):
        diagonal_pencil(QQ, 1)
    with pytest.raises(PrecondError, match="characteristic 2"):
        diagonal_pencil(PrimeField(2), 3)


def test_member_recovers_the_spanning_forms():
    p = diagonal_pencil(QQ, 3)
    assert p.member(QQ.one, QQ.zero) == p.g0
    assert p.member(QQ.zero, QQ.one) == p.g1


def test_form_matches_eval_form():
    p = toric_pencil(QQ)
    x = [Fraction(k) for k in (1, 2, 3, 4, 5, 6)]
    for which in (0, 1):
        assert p.form(which).evaluate(x) == p.eval_form(which, x)


@given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
def test_polarization_identity_mod_5(xs):
    p = diagonal_pencil(F5, 3)
    y = [3, 1, 4, 2]
    qx = p.eval_form(0, xs)
    qy = p.eval_form(0, y)
    qxy = p.eval_form(0, [F5.add(a, b) for a, b in zip(xs, y)])
    b = p.eval_bilinear(0, xs, y)
    assert qxy == F5.add(F5.add(qx, qy), F5.mul(2, b))


# -- discriminant forms -------------------------------------------------


def test_diagonal_discriminant_factors():
    # prod_i (s0 + i*s1) for i in 0..3: roots at s0/s1 = 0, -1, -2, -3
    p = diagonal_pencil(QQ, 3)
    disc = p.discriminant_form()
    assert disc.degree == 4
    for i in range(4):
        assert disc.evaluate(Fraction(-i), Fraction(1)) == 0
    assert disc.evaluate(Fraction(1), Fraction(0)) == 1  # det(G0)
    assert disc.evaluate(Fraction(1), Fraction(1)) == 24


def test_toric_discriminant_shape():
    """The pencil x0x1 - x2x3, x2x3 - x4x5 degenerates doubly at three members."""
    disc = toric_pencil(QQ).discriminant_form()
    reference = BinaryForm(
        QQ, tuple(Fraction(c) for c in (0, 0, -1, 2, -1, 0, 0))
    )  # -s0^2 (s1 - s0)^2 s1^2
    assert disc.proportional_to(reference)
    assert not disc.is_squarefree()


def test_degenerate_pencil_rejected():
    g = SymMatrix.diagonal(QQ, [Fraction(1), Fraction(1), Fraction(0), Fraction(0)])
    p = Pencil(QQ, 3, g, g)
    with pytest.raises(PrecondError, match="degenerate"):
        p.discriminant_form()


def test_congruence_scales_discriminant_by_square():
    p = diagonal_pencil(QQ, 4)
    m = [
        [1, 2, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 1, 3, 0, 0],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 2],
    ]
    q = pencil_congruent(p, m)
    d0 = p.discriminant_form()
    d1 = q.discriminant_form()
    det_m = Fraction(1 * 1 * 3 * 1 * 2)
    assert d1.coeffs == tuple(det_m**2 * c for c in d0.coeffs)


def test_recombination_keeps_discriminant_class():
    p = diagonal_pencil(F5, 3)
    q = pencil_recombined(p, 1, 2, 1, 3)
    # same degenerate members, so the discriminants share their roots
    d0, d1 = p.discriminant_form(), q.discriminant_form()
    for s0 in range(5):
        for s1 in range(5):
            if (s0, s1) == (0, 0):
                continue
            a0, a1 = F5.add(F5.mul(1, s0), F5.mul(1, s1)), F5.add(F5.mul(2, s0), F5.mul(3, s1))
            assert F5.is_zero(d1.evaluate(s0, s1)) == F5.is_zero(d0.evaluate(a0, a1))


def test_recombination_rejects_singular_matrix():
    with pytest.raises(PrecondError, match="singular"):
        pencil_recombined(diagonal_pencil(QQ, 3), 1, 2, 2, 4)


# -- the signed cover form ----------------------------------------------


def test_cover_form_is_negated_determinant_for_threefolds():
    p = diagonal_pencil(QQ, 5)
    disc = p.discriminant_form()
    cover = discriminant_cover(p)
    assert cover.coeffs == tuple(-c for c in disc.coeffs)


def test_cover_form_sign_depends_on_variable_count():
    # m = n+1 = 5 gives m(m-1)/2 = 10, an even power of -1
    p = diagonal_pencil(QQ, 4)
    assert discriminant_cover(p).coeffs == p.discriminant_form().coeffs


# -- smoothness ---------------------------------------------------------


def test_diagonal_pencils_are_smooth():
    for n in (2, 3, 4, 5):
        rep = smoothness(diagonal_pencil(QQ, n))
        assert rep.smooth
        assert rep.degree == n + 1
        assert not rep.degenerate
        assert rep.certificate["gcd_deg_chart_main"] == 0


def test_toric_pencil_is_not_smooth():
    rep = smoothness(toric_pencil(QQ))
    assert not rep.smooth
    assert rep.degree == 6
    assert not rep.degenerate
    assert not is_smooth(toric_pencil(F5))


def test_smoothness_of_degenerate_pencil():
    g = SymMatrix.diagonal(QQ, [Fraction(1)] * 3 + [Fraction(0)])
    rep = smoothness(Pencil(QQ, 3, g, g))
    assert rep.degenerate and not rep.smooth and rep.degree == -1


# -- singular points ----------------------------------------------------


def test_singular_at_toric_vertex():
    p = toric_pencil(QQ)
    e0 = [Fraction(1)] + [Fraction(0)] * 5
    assert singular_at(p, e0)


def test_singular_at_smooth_point():
    p = toric_pencil(QQ)
    assert not singular_at(p, [Fraction(1)] * 6)


def test_singular_at_guards():
    p = toric_pencil(QQ)
    with pytest.raises(PrecondError, match="projective"):
        singular_at(p, [Fraction(0)] * 6)
    with pytest.raises(PrecondError, match="base locus"):
        singular_at(p, [Fraction(1), Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)])


# -- reduction ----------------------------------------------------------


def test_reduce_rational_pencil():
    p = toric_pencil(QQ)
    r = reduce_pencil(p, 3)
    assert isinstance(r.field, PrimeField) and r.field.p == 3
    # 1/2 becomes 2 mod 3
    assert r.g0[0, 1] == 2
    assert r.n == p.n


def test_reduce_prime_pencil_must_match():
    p = toric_pencil(F3)
    assert reduce_pencil(p, 3) is p
    with pytest.raises(PrecondError, match="F_3"):
        reduce_pencil(p, 5)


def test_reduce_rejects_denominator_clash():
    p = Pencil.from_quadric_terms(QQ, 2, [(0, 0, "1/3"), (1, 1, 1)], [(2, 2, 1)])
    with pytest.raises(PrecondError):
        reduce_pencil(p, 3)


# -- dimension bookkeeping ----------------------------------------------


@pytest.mark.parametrize("n, dim, lin", [(2, 0, 0), (3, 1, 1), (4, 2, 1), (5, 3, 2)])
def test_dimension_formulas(n, dim, lin):
    assert expected_dim(n) == dim
    assert max_linear_subspace_dim(n) == lin

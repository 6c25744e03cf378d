"""Birational constructions on the base locus: projection away from a line,
the residual line of a 3-plane section, and the double projection from a
point onto a pencil of quadric surfaces.

All maps are returned as explicit tuples of polynomials over the pencil's
field, together with enough auxiliary data to verify them pointwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import InternalCheckError, PrecondError
from .fields import Field, PrimeField
from .linalg import complete_basis, det, mat_mul, mat_vec, nullspace, rank, rref, solve, transpose
from .matrices import SymMatrix, congruent, det_poly
from .pencil import BinaryForm, Pencil, pencil_congruent
from .poly import Poly


@dataclass(frozen=True)
class RationalMap:
    """Components of a rational map between projective spaces, all living in
    a polynomial ring over ``source_vars``."""

    source_vars: tuple[str, ...]
    components: tuple[Poly, ...]

    def __post_init__(self) -> None:
        for c in self.components:
            if c.vars != self.source_vars:
                raise PrecondError("component in the wrong ring")
        degs = {c.total_degree() for c in self.components if not c.is_zero}
        if len(degs) > 1:
            raise PrecondError("components have mixed degrees")

    def evaluate(self, point: Sequence[Any]) -> tuple[Any, ...] | None:
        """Value at a projective point, or None on the indeterminacy locus."""
        field = self.components[0].field
        vals = tuple(c.evaluate(list(point)) for c in self.components)
        if all(field.is_zero(v) for v in vals):
            return None
        return vals


def proportional(field: Field, u: Sequence[Any], v: Sequence[Any]) -> bool:
    """Projective equality of two nonzero coordinate tuples."""
    iu = next((i for i, c in enumerate(u) if not field.is_zero(c)), None)
    iv = next((i for i, c in enumerate(v) if not field.is_zero(c)), None)
    if iu is None or iv is None or iu != iv:
        return False
    r = field.div(v[iu], u[iu])
    return all(field.eq(field.mul(r, a), b) for a, b in zip(u, v))


# ----------------------------------------------------------------------
# projection from a line on the base locus
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class LineProjection:
    """Projection of the base locus away from one of its lines.

    ``pencil`` is rewritten in coordinates where the line is
    {x2 = ... = xn = 0}; ``transform`` holds the change-of-basis matrix M
    (columns = new basis vectors), so new Grams are M^T G M.  The map beta
    forgets (x0, x1); its inverse is (m1 : m2 : x2*D : ... : xn*D) with
    D = L00*L11 - L01*L10 the 2x2 determinant of the linear system that
    recovers (x0, x1), and the restriction of the projection blows down onto
    the quintic base curve V(D, m1, m2)."""

    pencil: Pencil
    transform: tuple[tuple[Any, ...], ...]
    linear_forms: tuple[tuple[Poly, Poly], tuple[Poly, Poly]]
    tails: tuple[Poly, Poly]
    beta: RationalMap
    beta_inverse: RationalMap
    curve_equations: tuple[Poly, Poly, Poly]


def line_to_front(pencil: Pencil, line_rows: Sequence[Sequence[Any]]) -> tuple[Pencil, list[list[Any]]]:
    """Change coordinates so the given line becomes span(e0, e1).

    Returns the new pencil and the matrix M whose columns are the new basis
    vectors (first two spanning the line)."""
    fld = pencil.field
    if len(line_rows) != 2 or any(len(r) != pencil.n + 1 for r in line_rows):
        raise PrecondError("a line needs two spanning rows of length n+1")
    if rank(fld, [list(r) for r in line_rows]) != 2:
        raise PrecondError("the rows do not span a line")
    basis_rows = complete_basis(fld, [list(r) for r in line_rows])
    m = transpose(basis_rows)  # columns are the basis vectors
    return pencil_congruent(pencil, m), m


def project_from_line(pencil: Pencil, line_rows: Sequence[Sequence[Any]]) -> LineProjection:
    """Project the base locus away from a line it contains.

    The line must lie on both quadrics; this is checked on the normalized
    Gram matrices (their upper-left 2x2 blocks must vanish).
    """
    fld = pencil.field
    norm, m = line_to_front(pencil, line_rows)
    for g in (norm.g0, norm.g1):
        for i in (0, 1):
            for j in (0, 1):
                if not fld.is_zero(g[i, j]):
                    raise PrecondError("the line does not lie on the base locus")

    n = norm.n
    ambient_vars = norm.variables()
    target_vars = ambient_vars[2:]

    def linear_form(g: SymMatrix, row: int) -> Poly:
        # L = 2 * sum_{j >= 2} G[row][j] x_j, in the target ring
        terms = {}
        for j in range(2, n + 1):
            c = fld.mul(fld.from_int(2), g[row, j])
            if not fld.is_zero(c):
                exp = tuple(1 if k + 2 == j else 0 for k in range(n - 1))
                terms[exp] = c
        return Poly(fld, target_vars, terms)

    def tail_form(g: SymMatrix) -> Poly:
        terms = {}
        for i in range(2, n + 1):
            for j in range(i, n + 1):
                c = g[i, j] if i == j else fld.mul(fld.from_int(2), g[i, j])
                if fld.is_zero(c):
                    continue
                exp = tuple(
                    (2 if k + 2 == i else 0) if i == j else (1 if k + 2 in (i, j) else 0)
                    for k in range(n - 1)
                )
                terms[exp] = c
        return Poly(fld, target_vars, terms)

    l00 = linear_form(norm.g0, 0)
    l01 = linear_form(norm.g0, 1)
    l10 = linear_form(norm.g1, 0)
    l11 = linear_form(norm.g1, 1)
    t0 = tail_form(norm.g0)
    t1 = tail_form(norm.g1)

    d = l00 * l11 - l01 * l10
    m1 = l01 * t1 - l11 * t0
    m2 = l10 * t0 - l00 * t1

    beta = RationalMap(
        ambient_vars,
        tuple(Poly.variable(fld, ambient_vars, v) for v in target_vars),
    )
    inv_components = [m1, m2] + [
        Poly.variable(fld, target_vars, v) * d for v in target_vars
    ]
    beta_inv = RationalMap(target_vars, tuple(inv_components))

    return LineProjection(
        pencil=norm,
        transform=tuple(tuple(row) for row in m),
        linear_forms=((l00, l01), (l10, l11)),
        tails=(t0, t1),
        beta=beta,
        beta_inverse=beta_inv,
        curve_equations=(d, m1, m2),
    )


def to_projection_coordinates(proj: LineProjection, point: Sequence[Any]) -> list[Any]:
    """Rewrite a point of the original base locus in the normalized
    coordinates used by the projection (x_new = M^{-1} x_old)."""
    from .linalg import invert

    fld = proj.pencil.field
    minv = invert(fld, [list(r) for r in proj.transform])
    return mat_vec(fld, minv, list(point))


def round_trip(proj: LineProjection, point: Sequence[Any]) -> bool | None:
    """Check beta then its inverse on a point of the normalized base locus.

    Returns None when the point hits an indeterminacy locus, otherwise
    whether the composite returns to the same projective point.
    """
    fld = proj.pencil.field
    down = proj.beta.evaluate(list(point))
    if down is None:
        return None
    up = proj.beta_inverse.evaluate(list(down))
    if up is None:
        return None
    return proportional(fld, list(point), list(up))


# ----------------------------------------------------------------------
# residual line of a 3-plane section
# ----------------------------------------------------------------------


def residual_line(pencil: Pencil, plane_rows: Sequence[Sequence[Any]]):
    """The unique line in the intersection of the base locus with a 3-plane.

    The plane is given by four independent spanning rows.  The intersection
    must be a curve (the restricted forms must stay linearly independent);
    when it is, say, a twisted cubic plus its chord, the chord is returned.
    Errors: no line at all, more than one line, or a degenerate section.
    """
    fld = pencil.field
    if not isinstance(fld, PrimeField):
        raise PrecondError("residual-line search runs over a prime field")
    rows = [list(r) for r in plane_rows]
    if len(rows) != 4 or rank(fld, rows) != 4:
        raise PrecondError("need four independent rows spanning a 3-plane")
    basis_cols = transpose(rows)
    r0 = congruent(fld, pencil.g0, basis_cols)
    r1 = congruent(fld, pencil.g1, basis_cols)
    flat = [[x for row in r.entries for x in row] for r in (r0, r1)]
    if rank(fld, flat) != 2:
        raise PrecondError(
            "the 3-plane section is not a curve: the restricted pencil is degenerate"
        )
    from .fqgeom import ProjLine, enumerate_lines_of_quadrics

    inner = enumerate_lines_of_quadrics(fld.p, 4, [r0, r1])
    if len(inner) == 0:
        raise PrecondError("the 3-plane section contains no line")
    if len(inner) > 1:
        raise PrecondError(
            f"the 3-plane section contains {len(inner)} lines; expected exactly one"
        )
    ambient = mat_mul(fld, [list(r) for r in inner[0].rows], rows)
    return ProjLine.from_span(fld.p, ambient[0], ambient[1])


# ----------------------------------------------------------------------
# double projection from a point
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleProjection:
    """Double projection of a threefold base locus from a smooth point.

    In adapted coordinates the two forms read F = 2 x0 x4 + f(x1..x5) and
    G = 2 x0 x5 + g(x1..x5); eliminating x0 along the pencil of hyperplanes
    x5 = t x4 exhibits the base locus as birational to a bundle of quadric
    surfaces over the t-line, with a symmetric 4x4 matrix A(t) whose entries
    have degrees (1 | 2 / 2 | 3) by block.  Its determinant satisfies the
    exact identity

        det A(t) = -det(M)^2 * F(t, -1),

    where M is the adapted basis and F the discriminant form: the degeneracy
    sextic is the discriminant sextic re-read along t |-> (t : -1), times
    minus a square.  Over a prime field the identity is double-checked by
    point counts of the two hyperelliptic curves y^2 = det A(t) and
    y^2 = -F(t, -1)."""

    pencil: Pencil
    transform: tuple[tuple[Any, ...], ...]
    bundle_matrix: SymMatrix
    degeneracy: BinaryForm
    discriminant: BinaryForm
    twist_factor: Any  # -det(M)^2
    identity_checked: bool
    counts_checked: bool
    curve_counts: tuple[int, int] | None


def double_projection(pencil: Pencil, point: Sequence[Any]) -> DoubleProjection:
    if pencil.n != 5:
        raise PrecondError("the double projection is implemented for n = 5")
    fld = pencil.field
    x = [fld.parse(c) if isinstance(c, (int, str)) else c for c in point]
    if len(x) != 6 or all(fld.is_zero(c) for c in x):
        raise PrecondError("need a projective point with 6 coordinates")
    if not fld.is_zero(pencil.eval_form(0, x)) or not fld.is_zero(pencil.eval_form(1, x)):
        raise PrecondError("the point does not lie on the base locus")
    a = mat_vec(fld, pencil.g0.to_lists(), x)
    b = mat_vec(fld, pencil.g1.to_lists(), x)
    if rank(fld, [a, b]) != 2:
        raise PrecondError("the point is singular on the base locus")

    # basis: x, three more kernel vectors of (a, b), then duals v4, v5
    kernel = nullspace(fld, [a, b])
    basis = [list(x)]
    for v in kernel:
        if len(basis) == 4:
            break
        if rank(fld, basis + [v]) == len(basis) + 1:
            basis.append(v)
    if len(basis) != 4:
        raise InternalCheckError("kernel of the gradient pair is too small")
    v4 = solve(fld, [a, b], [fld.one, fld.zero])
    v5 = solve(fld, [a, b], [fld.zero, fld.one])
    basis += [v4, v5]
    if rank(fld, basis) != 6:
        raise InternalCheckError("adapted basis is degenerate")
    m = transpose(basis)
    norm = pencil_congruent(pencil, m)
    for g, dual in ((norm.g0, 4), (norm.g1, 5)):
        expect_row = [fld.one if j == dual else fld.zero for j in range(6)]
        if [g[0, j] for j in range(6)] != expect_row:
            raise InternalCheckError("adapted Gram does not have the expected first row")

    # tails on (x1..x5), then substitute x5 = t x4 and form A(t) = t*S0 - S1
    tvars = ("t",)

    def tpoly(coeffs: list[Any]) -> Poly:
        return Poly(fld, tvars, {(i,): c for i, c in enumerate(coeffs)})

    def bundle_entry(i: int, j: int) -> Poly:
        # S[i][j](t) for the tail Gram T = norm.g (indices 1..5), local 0..3
        def s_of(g: SymMatrix) -> list[Any]:
            gi, gj = i + 1, j + 1
            if i < 3 and j < 3:
                return [g[gi, gj]]
            if i < 3 and j == 3:
                return [g[gi, 4], g[gi, 5]]
            if i == 3 and j < 3:
                return [g[4, gj], g[5, gj]]
            return [g[4, 4], fld.mul(fld.from_int(2), g[4, 5]), g[5, 5]]

        s0 = s_of(norm.g0)
        s1 = s_of(norm.g1)
        # t * s0(t) - s1(t)
        coeffs = [fld.neg(c) for c in s1] + [fld.zero]
        for k, c in enumerate(s0):
            coeffs[k + 1] = fld.add(coeffs[k + 1], c)
        return tpoly(coeffs)

    rows = [[bundle_entry(i, j) for j in range(4)] for i in range(4)]
    bundle = SymMatrix.from_rows(rows)
    for i in range(4):
        for j in range(4):
            limit = 1 + (i == 3) + (j == 3)
            if rows[i][j].total_degree() > limit:
                raise InternalCheckError("bundle matrix entry exceeds its degree bound")

    dpoly = det_poly(bundle)
    coeffs = [fld.zero] * 7
    for exp, c in dpoly.terms.items():
        if exp[0] > 6:
            raise InternalCheckError("degeneracy determinant has degree > 6")
        coeffs[exp[0]] = c
    sextic = BinaryForm(fld, tuple(coeffs))
    if sextic.is_zero:
        raise PrecondError("the elimination degenerated; choose a more general point")
    if not sextic.is_squarefree():
        raise PrecondError(
            "the degeneracy sextic is not squarefree; choose a more general point"
        )

    disc = pencil.discriminant_form()
    mdet = det(fld, m)
    twist = fld.neg(fld.mul(mdet, mdet))
    # exact identity: det A(t) == -det(M)^2 * F(t, -1), coefficient by coefficient
    cs = disc.coeffs
    for k in range(7):
        target = fld.mul(twist, cs[6 - k] if k % 2 == 0 else fld.neg(cs[6 - k]))
        if coeffs[k] != target:
            raise InternalCheckError(
                "degeneracy determinant is not -det(M)^2 times the discriminant"
                f" along (t : -1); coefficient of t^{k} is {coeffs[k]}, expected {target}"
            )

    counts: tuple[int, int] | None = None
    checked = False
    if isinstance(fld, PrimeField):
        from .curvecounts import curve_counts

        # second route: the curves y^2 = det A(t) and y^2 = -F(t, -1) differ by
        # the square factor det(M)^2, so their point counts over F_q and F_{q^2}
        # must agree even though the models fed to the counter differ.
        q = fld.p
        sx = [int(c) for c in sextic.chart_main()]
        mx = [int(c) if k % 2 == 1 else (-int(c)) % q for k, c in enumerate(reversed(disc.coeffs))]
        counts = curve_counts(sx, q)
        disc_counts = curve_counts(mx, q)
        if counts != disc_counts:
            raise InternalCheckError(
                f"degeneracy curve counts {counts} differ from matched discriminant counts {disc_counts}"
            )
        checked = True

    return DoubleProjection(
        pencil=pencil,
        transform=tuple(tuple(row) for row in m),
        bundle_matrix=bundle,
        degeneracy=sextic,
        discriminant=disc,
        twist_factor=twist,
        identity_checked=True,
        counts_checked=checked,
        curve_counts=counts,
    )

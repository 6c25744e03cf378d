"""Pencils of two quadratic forms and their discriminant binary form.

A pencil is a pair of symmetric Gram matrices (G0, G1) of size (n+1) over an
exact field of characteristic != 2.  The discriminant form is

    F(s0, s1) = det(s0*G0 + s1*G1),

a binary form of degree n+1 in (s0, s1).  The base locus of the pencil is a
smooth complete intersection of dimension n-2 exactly when F is nonzero and
squarefree; `is_smooth` certifies this with the gcd computations on both
affine charts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from . import univariate as uv
from .errors import PrecondError
from .fields import QQ, Field, PrimeField
from .matrices import SymMatrix, congruent, det_poly
from .poly import Poly


@dataclass(frozen=True)
class BinaryForm:
    """A binary form sum_i c_i s0^(d-i) s1^i, stored as coeffs (c_0..c_d)."""

    field: Field
    coeffs: tuple[Any, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise PrecondError("binary form needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs)

    def evaluate(self, s0: Any, s1: Any) -> Any:
        fld = self.field
        total = fld.zero
        d = self.degree
        for i, c in enumerate(self.coeffs):
            term = c
            for _ in range(d - i):
                term = fld.mul(term, s0)
            for _ in range(i):
                term = fld.mul(term, s1)
            total = fld.add(total, term)
        return total

    def chart_main(self) -> list:
        """Dehomogenization F(1, t) as an ascending coefficient list."""
        return uv.trim(self.field, list(self.coeffs))

    def chart_other(self) -> list:
        """Dehomogenization F(t, 1) as an ascending coefficient list."""
        return uv.trim(self.field, list(reversed(self.coeffs)))

    def is_squarefree(self) -> bool:
        """Squarefree as a *binary* form: both charts squarefree and the
        multiplicity of each of (0:1), (1:0) at most one."""
        if self.is_zero:
            raise PrecondError("zero form")
        a = self.chart_main()
        b = self.chart_other()
        return uv.is_squarefree(self.field, a) and uv.is_squarefree(self.field, b)

    def scaled(self, c: Any) -> "BinaryForm":
        return BinaryForm(self.field, tuple(self.field.mul(c, x) for x in self.coeffs))

    def proportional_to(self, other: "BinaryForm") -> bool:
        """True when self = c * other for some nonzero scalar c."""
        if self.degree != other.degree or self.field != other.field:
            return False
        fld = self.field
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        i = next(k for k, c in enumerate(other.coeffs) if not fld.is_zero(c))
        if fld.is_zero(self.coeffs[i]):
            return False
        ratio = fld.div(self.coeffs[i], other.coeffs[i])
        return all(
            fld.eq(a, fld.mul(ratio, b)) for a, b in zip(self.coeffs, other.coeffs)
        )


@dataclass(frozen=True)
class Pencil:
    """Two quadratic forms in n+1 variables given by symmetric Gram matrices."""

    field: Field
    n: int
    g0: SymMatrix
    g1: SymMatrix

    def __post_init__(self) -> None:
        if self.n < 2:
            raise PrecondError("need at least 3 variables (n >= 2)")
        if self.field.characteristic == 2:
            raise PrecondError("characteristic 2 is not supported")
        if self.g0.size != self.n + 1 or self.g1.size != self.n + 1:
            raise PrecondError(f"Gram matrices must be {self.n + 1}x{self.n + 1}")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_gram(cls, field: Field, g0: Sequence[Sequence[Any]], g1: Sequence[Sequence[Any]]) -> "Pencil":
        m0 = SymMatrix.from_rows(g0)
        return cls(field, m0.size - 1, m0, SymMatrix.from_rows(g1))

    @classmethod
    def from_quadric_terms(
        cls,
        field: Field,
        n: int,
        terms0: Iterable[tuple[int, int, Any]],
        terms1: Iterable[tuple[int, int, Any]],
    ) -> "Pencil":
        """Build from monomial coefficients: a term (i, j, c) with i <= j is
        the coefficient c of x_i x_j.  Off-diagonal Gram entries are c/2."""
        return cls(
            field,
            n,
            _gram_from_terms(field, n, terms0),
            _gram_from_terms(field, n, terms1),
        )

    # -- the two forms as polynomials ------------------------------------

    def variables(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in range(self.n + 1))

    def form(self, which: int) -> Poly:
        g = (self.g0, self.g1)[which]
        vars_ = self.variables()
        fld = self.field
        acc: dict[tuple, Any] = {}
        m = self.n + 1
        for i in range(m):
            for j in range(i, m):
                c = g[i, j] if i == j else fld.mul(fld.from_int(2), g[i, j])
                if fld.is_zero(c):
                    continue
                exp = tuple(
                    (2 if k == i else 0) if i == j else (1 if k in (i, j) else 0)
                    for k in range(m)
                )
                acc[exp] = c
        return Poly(fld, vars_, acc)

    def eval_form(self, which: int, x: Sequence[Any]) -> Any:
        """Q(x) = x^T G x."""
        g = (self.g0, self.g1)[which]
        fld = self.field
        total = fld.zero
        for i, row in enumerate(g.entries):
            for j, e in enumerate(row):
                total = fld.add(total, fld.mul(fld.mul(x[i], e), x[j]))
        return total

    def eval_bilinear(self, which: int, x: Sequence[Any], y: Sequence[Any]) -> Any:
        """The polarization B(x, y) = x^T G y (so Q(x+y) = Q(x)+2B(x,y)+Q(y))."""
        g = (self.g0, self.g1)[which]
        fld = self.field
        total = fld.zero
        for i, row in enumerate(g.entries):
            for j, e in enumerate(row):
                total = fld.add(total, fld.mul(fld.mul(x[i], e), y[j]))
        return total

    def member(self, s0: Any, s1: Any) -> SymMatrix:
        """The Gram matrix of s0*Q0 + s1*Q1."""
        fld = self.field
        return SymMatrix.from_rows(
            [
                [
                    fld.add(fld.mul(s0, a), fld.mul(s1, b))
                    for a, b in zip(r0, r1)
                ]
                for r0, r1 in zip(self.g0.entries, self.g1.entries)
            ]
        )

    # -- invariants -------------------------------------------------------

    def discriminant_form(self) -> BinaryForm:
        """det(s0 G0 + s1 G1) as a binary form of degree n+1.

        Raises if the determinant vanishes identically (degenerate pencil).
        """
        fld = self.field
        vars_ = ("s0", "s1")
        s0 = Poly.variable(fld, vars_, "s0")
        s1 = Poly.variable(fld, vars_, "s1")
        m = self.n + 1
        rows = []
        for i in range(m):
            row = []
            for j in range(m):
                row.append(s0 * self.g0[i, j] + s1 * self.g1[i, j])
            rows.append(row)
        d = det_poly(SymMatrix.from_rows(rows))
        if d.is_zero:
            raise PrecondError("degenerate pencil: det(s0*G0 + s1*G1) is identically zero")
        coeffs = [fld.zero] * (m + 1)
        for exp, c in d.terms.items():
            coeffs[exp[1]] = c  # exponent of s1
        return BinaryForm(fld, tuple(coeffs))


def _gram_from_terms(field: Field, n: int, terms: Iterable[tuple[int, int, Any]]) -> SymMatrix:
    m = n + 1
    g = [[field.zero] * m for _ in range(m)]
    seen: set[tuple[int, int]] = set()
    half = field.inv(field.from_int(2))
    for i, j, raw in terms:
        if not (0 <= i <= j <= m - 1):
            raise PrecondError(f"monomial index ({i},{j}) out of range for n={n}")
        if (i, j) in seen:
            raise PrecondError(f"duplicate monomial ({i},{j})")
        seen.add((i, j))
        c = field.parse(raw) if isinstance(raw, (int, str)) else raw
        if i == j:
            g[i][i] = c
        else:
            g[i][j] = g[j][i] = field.mul(c, half)
    return SymMatrix.from_rows(g)


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    degree: int
    degenerate: bool
    # gcd of each chart polynomial with its derivative (monic coeff tuples)
    chart_main_gcd: tuple
    chart_other_gcd: tuple

    @property
    def certificate(self) -> dict:
        return {
            "degree": self.degree,
            "degenerate": self.degenerate,
            "gcd_deg_chart_main": len(self.chart_main_gcd) - 1,
            "gcd_deg_chart_other": len(self.chart_other_gcd) - 1,
        }


def smoothness(p: Pencil) -> SmoothnessReport:
    """Decide smoothness of the base locus via the discriminant form.

    The base locus is smooth of dimension n-2 iff the discriminant form is
    nonzero of degree n+1 with no repeated projective root, i.e. both chart
    dehomogenizations have gcd 1 with their derivatives.
    """
    try:
        disc = p.discriminant_form()
    except PrecondError:
        return SmoothnessReport(False, -1, True, (p.field.one,), (p.field.one,))
    fld = p.field
    a = disc.chart_main()
    b = disc.chart_other()
    ga = uv.gcd_poly(fld, a, uv.derivative(fld, a)) if len(a) > 1 else [fld.one]
    gb = uv.gcd_poly(fld, b, uv.derivative(fld, b)) if len(b) > 1 else [fld.one]
    smooth = len(ga) == 1 and len(gb) == 1
    return SmoothnessReport(smooth, disc.degree, False, tuple(ga), tuple(gb))


def singular_at(p: Pencil, x: Sequence[Any]) -> bool:
    """Whether the point x of the base locus is a singular point of it.

    Singularity means the two gradients G0 x and G1 x are linearly dependent
    (all 2x2 minors of the Jacobian vanish).  Requires x on both quadrics.
    """
    fld = p.field
    if all(fld.is_zero(c) for c in x):
        raise PrecondError("not a projective point")
    if not (fld.is_zero(p.eval_form(0, x)) and fld.is_zero(p.eval_form(1, x))):
        raise PrecondError("point is not on the base locus")
    m = p.n + 1

    def grad(g: SymMatrix) -> list[Any]:
        return [
            _dot(fld, g.entries[i], x)
            for i in range(m)
        ]

    u = grad(p.g0)
    v = grad(p.g1)
    for i in range(m):
        for j in range(i + 1, m):
            minor = fld.sub(fld.mul(u[i], v[j]), fld.mul(u[j], v[i]))
            if not fld.is_zero(minor):
                return False
    return True


def _dot(field: Field, row: Sequence[Any], x: Sequence[Any]) -> Any:
    total = field.zero
    for a, b in zip(row, x):
        total = field.add(total, field.mul(a, b))
    return total


def discriminant_cover(p: Pencil) -> BinaryForm:
    """The binary form under the hyperelliptic double cover y² = (this form).

    This is the *signed* discriminant (-1)^(m(m-1)/2) · det(s0 G0 + s1 G1)
    with m = n+1 variables, so for threefolds (m = 6) it is minus the plain
    determinant form.  The sign matters: it fixes the quadratic twist of the
    cover, and with the unsigned determinant the F_q point counts disagree
    with the line geometry whenever -1 is a non-square (q ≡ 3 mod 4).
    """
    form = p.discriminant_form()
    m = p.n + 1
    if (m * (m - 1) // 2) % 2 == 0:
        return form
    fld = p.field
    return BinaryForm(fld, tuple(fld.neg(c) for c in form.coeffs))


def is_smooth(p: Pencil) -> bool:
    return smoothness(p).smooth


def expected_dim(n: int) -> int:
    """Dimension of the base locus of a nondegenerate pencil in P^n."""
    return n - 2


def max_linear_subspace_dim(n: int) -> int:
    """Largest dimension of a linear space contained in a smooth base locus."""
    return (n - 1) // 2


# -- transforms --------------------------------------------------------


def pencil_congruent(p: Pencil, m_rows: Sequence[Sequence[Any]]) -> Pencil:
    """Change coordinates on P^n: Gram matrices become M^T G M."""
    return Pencil(
        p.field,
        p.n,
        congruent(p.field, p.g0, m_rows),
        congruent(p.field, p.g1, m_rows),
    )


def pencil_recombined(p: Pencil, a: Any, b: Any, c: Any, d: Any) -> Pencil:
    """Replace the spanning forms by (a Q0 + b Q1, c Q0 + d Q1); requires
    ad - bc != 0 so the pencil itself is unchanged."""
    fld = p.field
    if fld.is_zero(fld.sub(fld.mul(a, d), fld.mul(b, c))):
        raise PrecondError("recombination matrix is singular")
    g0 = p.member(a, b)
    g1 = p.member(c, d)
    return Pencil(fld, p.n, g0, g1)


def reduce_pencil(p: Pencil, q: int) -> Pencil:
    """The same pencil with coefficients reduced into F_q.

    Over a prime field the modulus must already match; over the rationals
    every Gram entry must have denominator prime to q.
    """
    if isinstance(p.field, PrimeField):
        if p.field.p != q:
            raise PrecondError(f"pencil lives over F_{p.field.p}, not F_{q}")
        return p
    fld = PrimeField(q)
    return Pencil(
        fld,
        p.n,
        SymMatrix.from_rows([[fld.parse(e) for e in row] for row in p.g0.entries]),
        SymMatrix.from_rows([[fld.parse(e) for e in row] for row in p.g1.entries]),
    )


# -- stock examples -----------------------------------------------------


def toric_pencil(field: Field = QQ) -> Pencil:
    """x0 x1 - x2 x3 = x2 x3 - x4 x5 = 0 in P^5."""
    one = field.one
    neg = field.neg(one)
    return Pencil.from_quadric_terms(
        field,
        5,
        [(0, 1, one), (2, 3, neg)],
        [(2, 3, one), (4, 5, neg)],
    )


def diagonal_pencil(field: Field, n: int) -> Pencil:
    """Q0 = sum x_i^2, Q1 = sum i * x_i^2; discriminant prod_i (s0 + i s1)."""
    g0 = SymMatrix.diagonal(field, [field.one] * (n + 1))
    g1 = SymMatrix.diagonal(field, [field.from_int(i) for i in range(n + 1)])
    return Pencil(field, n, g0, g1)

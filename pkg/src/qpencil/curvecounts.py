"""Point counts and L-polynomials of genus-2 hyperelliptic curves y^2 = f(t).

For squarefree f of degree 5 or 6 over F_q (q an odd prime here), the counts
N1 = #C(F_q) and N2 = #C(F_{q^2}) of the smooth projective model determine
the numerator L(T) of the zeta function:

    L(T) = 1 + c1 T + c2 T^2 + q*c1 T^3 + q^2 T^4,

with c1 = -(q + 1 - N1) ... in elementary-symmetric terms: if p1 = q+1-N1 and
p2 = q^2+1-N2 are the root power sums, then e1 = p1, e2 = (p1^2 - p2)/2, and
L(T) = 1 - e1 T + e2 T^2 - q e1 T^3 + q^2 T^4.  The order of the Jacobian
over F_q is L(1); an independent brute-force order via Mumford pairs is
provided for calibration on degree-5 models.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from . import univariate as uv
from .errors import InternalCheckError, PrecondError
from .fields import Field, PrimeField, QuadraticExtension


@dataclass(frozen=True)
class CurveData:
    """Counting data of y^2 = f(t) over F_q."""

    q: int
    f: tuple[int, ...]
    n1: int
    n2: int
    lpoly: tuple[int, int, int, int, int]  # ascending coefficients of L(T)

    @property
    def jacobian_order(self) -> int:
        return sum(self.lpoly)

    def lpoly_at(self, t: int) -> int:
        return sum(c * t**i for i, c in enumerate(self.lpoly))


def _validate_model(field: PrimeField, f: Sequence[int]) -> list[int]:
    coeffs = uv.trim(field, [field.from_int(c) for c in f])
    deg = len(coeffs) - 1
    if deg not in (5, 6):
        raise PrecondError(f"need deg f in (5, 6), got {deg}")
    if not uv.is_squarefree(field, coeffs):
        raise PrecondError("f must be squarefree")
    return coeffs


def affine_count(field: Field, f: Sequence[Any]) -> int:
    """#{(t, y) : y^2 = f(t)} over the given finite field, via the quadratic
    character: each t contributes 1 + chi(f(t))."""
    total = 0
    for t in field.elements():
        total += 1 + field.chi(uv.evaluate(field, f, t))
    return total


def _points_at_infinity(field: Field, deg: int, lead: Any) -> int:
    """Points over the smooth model lying above t = infinity."""
    if deg == 5:
        return 1
    return 1 + field.chi(lead)


def curve_counts(f: Sequence[int], q: int) -> tuple[int, int]:
    """(N1, N2) for y^2 = f(t): point counts over F_q and F_{q^2}."""
    field = PrimeField(q)
    coeffs = _validate_model(field, f)
    deg = len(coeffs) - 1
    n1 = affine_count(field, coeffs) + _points_at_infinity(field, deg, coeffs[-1])
    ext = QuadraticExtension.of(field)
    lifted = [ext.embed(c) for c in coeffs]
    if deg == 6 and ext.chi(lifted[-1]) != 1:
        raise InternalCheckError("a base-field scalar must be a square in F_{q^2}")
    n2 = affine_count(ext, lifted) + _points_at_infinity(ext, deg, lifted[-1])
    return n1, n2


def lpolynomial(n1: int, n2: int, q: int) -> tuple[int, int, int, int, int]:
    """L(T) of a genus-2 curve from its first two point counts."""
    p1 = q + 1 - n1
    p2 = q * q + 1 - n2
    if (p1 * p1 - p2) % 2:
        raise InternalCheckError("power sums have impossible parity")
    e1 = p1
    e2 = (p1 * p1 - p2) // 2
    return (1, -e1, e2, -q * e1, q * q)


def weil_check(lpoly: Sequence[int], q: int) -> None:
    """Exact integer sanity checks on L: functional-equation symmetry and the
    Weil bound |L(1) - (q+1)^2| <= 4 sqrt(q) (q+1), squared to stay in Z."""
    one, c1, c2, c3, c4 = lpoly
    if one != 1 or c3 != q * c1 or c4 != q * q:
        raise InternalCheckError("L fails the functional-equation symmetry")
    l1 = sum(lpoly)
    if l1 <= 0:
        raise InternalCheckError("Jacobian order must be positive")
    gap = l1 - (q + 1) ** 2
    if gap * gap > 16 * q * (q + 1) ** 2:
        raise InternalCheckError("L(1) violates the Weil bound")
    # per-coefficient Weil bounds: |c1| <= 4 sqrt(q), |c2| <= 6q ... the c2
    # bound below is the crude |e2| <= C(4,2) q
    if c1 * c1 > 16 * q or abs(c2) > 6 * q:
        raise InternalCheckError("an L-coefficient violates its Weil bound")


def curve_data(f: Sequence[int], q: int) -> CurveData:
    n1, n2 = curve_counts(f, q)
    lp = lpolynomial(n1, n2, q)
    weil_check(lp, q)
    return CurveData(q, tuple(c % q for c in f), n1, n2, lp)


def mumford_order(f: Sequence[int], field: Field) -> int:
    """Order of Jac(y^2 = f) by listing Mumford pairs, for deg f = 5.

    Counts the identity, plus pairs (u, v) with u monic of degree 1 or 2,
    deg v < deg u, and u | v^2 - f.  Works over any implemented finite field
    (used over both F_q and F_{q^2} to calibrate the L-polynomial).
    """
    coeffs = uv.trim(field, [field.from_int(c) if isinstance(c, int) else c for c in f])
    if len(coeffs) - 1 != 5:
        raise PrecondError("the Mumford enumeration needs a degree-5 model")
    if not uv.is_squarefree(field, coeffs):
        raise PrecondError("f must be squarefree")
    total = 1  # identity
    elements = list(field.elements())
    # degree-1 u = t - a, v = b: condition b^2 = f(a)
    for a in elements:
        fa = uv.evaluate(field, coeffs, a)
        total += 1 + field.chi(fa)
    # degree-2 u = t^2 + u1 t + u0, v = v1 t + v0: u | v^2 - f
    diffs = []
    for v1 in elements:
        for v0 in elements:
            v = uv.trim(field, [v0, v1])
            diffs.append(uv.sub(field, uv.mul(field, v, v), coeffs))
    for u1 in elements:
        for u0 in elements:
            u = [u0, u1, field.one]
            for diff in diffs:
                _, r = uv.divmod_poly(field, diff, u)
                if not r:
                    total += 1
    return total


def jacobian_order_two_ways(f: Sequence[int], q: int) -> tuple[int, int]:
    """(L(1) from counts, brute-force Mumford order) — they must agree; both
    are returned so callers can assert the agreement explicitly."""
    data = curve_data(f, q)
    brute = mumford_order(f, PrimeField(q))
    return data.jacobian_order, brute

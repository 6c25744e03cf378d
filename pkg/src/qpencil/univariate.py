"""Dense univariate polynomial helpers over an exact field.

Polynomials are plain ascending coefficient lists ``[c0, c1, ...]``; the zero
polynomial is ``[]`` (or any all-zero list).  The first half is field-generic
(works over the rationals, prime fields, and quadratic extensions); the Sturm
machinery at the bottom needs an ordered field and is rationals-only.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .errors import InternalCheckError, PrecondError
from .fields import QQ, Field


def trim(field: Field, c: Sequence[Any]) -> list:
    out = list(c)
    while out and field.is_zero(out[-1]):
        out.pop()
    return out


def degree(field: Field, c: Sequence[Any]) -> int:
    t = trim(field, c)
    return len(t) - 1


def is_zero_poly(field: Field, c: Sequence[Any]) -> bool:
    return all(field.is_zero(x) for x in c)


def add(field: Field, a: Sequence[Any], b: Sequence[Any]) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(field.add(x, y))
    return trim(field, out)


def neg(field: Field, a: Sequence[Any]) -> list:
    return [field.neg(x) for x in a]


def sub(field: Field, a: Sequence[Any], b: Sequence[Any]) -> list:
    return add(field, a, neg(field, b))


def scale(field: Field, k: Any, a: Sequence[Any]) -> list:
    return trim(field, [field.mul(k, x) for x in a])


def mul(field: Field, a: Sequence[Any], b: Sequence[Any]) -> list:
    a = trim(field, a)
    b = trim(field, b)
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return trim(field, out)


def evaluate(field: Field, c: Sequence[Any], x: Any) -> Any:
    acc = field.zero
    for coeff in reversed(list(c)):
        acc = field.add(field.mul(acc, x), coeff)
    return acc


def derivative(field: Field, c: Sequence[Any]) -> list:
    out = [field.mul(field.from_int(i), c[i]) for i in range(1, len(c))]
    return trim(field, out)


def divmod_poly(field: Field, a: Sequence[Any], b: Sequence[Any]) -> tuple[list, list]:
    b = trim(field, b)
    if not b:
        raise PrecondError("polynomial division by zero")
    rem = trim(field, a)
    db = len(b) - 1
    lead_inv = field.inv(b[-1])
    quo = [field.zero] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = field.mul(rem[-1], lead_inv)
        quo[shift] = factor
        for i in range(db + 1):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(factor, b[i]))
        rem = trim(field, rem)
    return trim(field, quo), rem


def monic(field: Field, a: Sequence[Any]) -> list:
    a = trim(field, a)
    if not a:
        return []
    return scale(field, field.inv(a[-1]), a)


def gcd_poly(field: Field, a: Sequence[Any], b: Sequence[Any]) -> list:
    """Monic gcd by the Euclidean algorithm."""
    a = trim(field, a)
    b = trim(field, b)
    while b:
        _, r = divmod_poly(field, a, b)
        a, b = b, r
    return monic(field, a)


def is_squarefree(field: Field, a: Sequence[Any]) -> bool:
    a = trim(field, a)
    if not a:
        raise PrecondError("squarefreeness of the zero polynomial is undefined")
    if len(a) == 1:
        return True
    g = gcd_poly(field, a, derivative(field, a))
    return len(g) == 1


def sylvester_matrix(field: Field, a: Sequence[Any], b: Sequence[Any]) -> list[list]:
    a = trim(field, a)
    b = trim(field, b)
    da, db = len(a) - 1, len(b) - 1
    if da < 0 or db < 0:
        raise PrecondError("resultant with a zero polynomial")
    m = da + db
    rows = []
    for i in range(db):
        row = [field.zero] * m
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [field.zero] * m
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(field: Field, a: Sequence[Any], b: Sequence[Any]) -> Any:
    from .linalg import det

    return det(field, sylvester_matrix(field, a, b))


# ----------------------------------------------------------------------
# Sturm machinery (rationals only: needs an ordering)
# ----------------------------------------------------------------------


def _require_rationals(field: Field) -> None:
    if field != QQ:
        raise PrecondError("real-root counting requires rational coefficients")


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sturm_chain(c: Sequence[Fraction]) -> list[list[Fraction]]:
    """Sturm chain p0, p1, -rem(p0,p1), ... of a nonzero rational polynomial."""
    p0 = trim(QQ, list(c))
    if not p0:
        raise PrecondError("Sturm chain of the zero polynomial")
    chain = [p0]
    p1 = derivative(QQ, p0)
    if p1:
        chain.append(p1)
        while True:
            _, r = divmod_poly(QQ, chain[-2], chain[-1])
            if not r:
                break
            chain.append(neg(QQ, r))
    return chain


def sign_variations(chain: Sequence[Sequence[Fraction]], x: Fraction) -> int:
    signs = [sign(evaluate(QQ, p, x)) for p in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(chain: Sequence[Sequence[Fraction]], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    if a >= b:
        raise PrecondError("need a < b")
    return sign_variations(chain, a) - sign_variations(chain, b)


def cauchy_bound(c: Sequence[Fraction]) -> Fraction:
    c = trim(QQ, list(c))
    if len(c) < 2:
        return Fraction(1)
    lead = abs(c[-1])
    bound = 1 + max(abs(x) for x in c[:-1]) / lead
    return bound


def isolate_real_roots(c: Sequence[Fraction]) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots, in increasing order.

    Each root is a pair (lo, hi) with f nonzero at both endpoints and exactly
    one root in the open interval — except rational roots stumbled on during
    bisection, which come back as exact singletons (r, r).  Intervals of
    distinct roots have disjoint interiors (they may share a non-root
    endpoint).
    """
    f = trim(QQ, list(c))
    if not f:
        raise PrecondError("cannot isolate roots of the zero polynomial")
    if len(f) == 1:
        return []
    # work with the squarefree part so the Sturm count is the root count
    g = gcd_poly(QQ, f, derivative(QQ, f))
    if len(g) > 1:
        f, _ = divmod_poly(QQ, f, g)
    chain = sturm_chain(f)

    def count(a: Fraction, b: Fraction) -> int:
        return count_roots_in(chain, a, b)

    def fval(x: Fraction) -> Fraction:
        return evaluate(QQ, f, x)

    bound = cauchy_bound(f)
    lo0, hi0 = -bound - 1, bound + 1  # f is nonzero at both
    total = count(lo0, hi0)
    if total == 0:
        return []

    out: list[tuple[Fraction, Fraction]] = []

    def nonroot_below(r: Fraction, floor: Fraction) -> Fraction:
        """A point m in (floor, r) with f(m) != 0 and no root in (m, r)."""
        m = (floor + r) / 2
        while fval(m) == 0 or count(m, r) > 1:
            m = (m + r) / 2
        return m

    def nonroot_above(r: Fraction, ceil: Fraction) -> Fraction:
        """A point m in (r, ceil) with f(m) != 0 and no root in (r, m]."""
        m = (r + ceil) / 2
        while fval(m) == 0 or count(r, m) > 0:
            m = (r + m) / 2
        return m

    def split(lo: Fraction, hi: Fraction) -> None:
        # invariant: f(lo) != 0 and f(hi) != 0
        n = count(lo, hi)
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if fval(mid) == 0:
            ml = nonroot_below(mid, lo)
            mr = nonroot_above(mid, hi)
            split(lo, ml)
            out.append((mid, mid))
            split(mr, hi)
        else:
            split(lo, mid)
            split(mid, hi)

    split(lo0, hi0)

    if len(out) != total:
        raise InternalCheckError("root isolation lost a root")
    for (_, b1), (a2, _) in zip(out, out[1:]):
        if b1 > a2:
            raise InternalCheckError("root isolation produced overlapping intervals")
    return out


def sample_points_between(roots: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Rational non-root samples interleaving isolated roots: one below all
    roots, one between each consecutive pair, one above all roots."""
    if not roots:
        return [Fraction(0)]
    samples = [roots[0][0] - 1]
    for (_, hi), (lo2, _) in zip(roots, roots[1:]):
        samples.append((hi + lo2) / 2)
    samples.append(roots[-1][1] + 1)
    return samples

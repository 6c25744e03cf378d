"""Symmetric matrices: exact inertia over the rationals and determinants of
matrices whose entries are polynomials.

The inertia routine is classical symmetric reduction: split off one square at
a time at a nonzero diagonal entry, or a hyperbolic pair when the whole
remaining diagonal vanishes.  No eigenvalues, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import PrecondError
from .fields import Field
from .poly import Poly


@dataclass(frozen=True)
class SymMatrix:
    """An immutable symmetric matrix; entries are field elements or Polys."""

    entries: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        m = len(self.entries)
        for row in self.entries:
            if len(row) != m:
                raise PrecondError("symmetric matrix must be square")
        for i in range(m):
            for j in range(i):
                if not _entries_equal(self.entries[i][j], self.entries[j][i]):
                    raise PrecondError(f"matrix not symmetric at ({i},{j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "SymMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def diagonal(cls, field: Field, diag: Sequence[Any]) -> "SymMatrix":
        m = len(diag)
        return cls.from_rows(
            [[diag[i] if i == j else field.zero for j in range(m)] for i in range(m)]
        )

    @property
    def size(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        return self.entries[ij[0]][ij[1]]

    def map(self, fn) -> "SymMatrix":
        return SymMatrix.from_rows([[fn(x) for x in row] for row in self.entries])

    def submatrix(self, idx: Sequence[int]) -> "SymMatrix":
        return SymMatrix.from_rows(
            [[self.entries[i][j] for j in idx] for i in idx]
        )

    def to_lists(self) -> list[list[Any]]:
        return [list(r) for r in self.entries]


def _entries_equal(a: Any, b: Any) -> bool:
    if isinstance(a, Poly) or isinstance(b, Poly):
        return a == b
    return a == b


def congruent(field: Field, g: SymMatrix, m_rows: Sequence[Sequence[Any]]) -> SymMatrix:
    """M^T G M for a (column-acting) change of coordinates given by rows of M."""
    from .linalg import mat_mul, transpose

    mt = transpose(m_rows)
    prod = mat_mul(field, mat_mul(field, mt, g.to_lists()), [list(r) for r in m_rows])
    return SymMatrix.from_rows(prod)


def inertia(g: SymMatrix) -> tuple[int, int, int]:
    """Exact (positive, negative, zero) inertia of a rational symmetric matrix.

    Entries may be ints or Fractions.  Uses symmetric elimination; when the
    remaining diagonal is identically zero a nonzero off-diagonal entry a at
    (i, j) contributes a hyperbolic pair (+1, -1), and the complement is
    updated by  A'[k][l] = A[k][l] - (A[k][i]*A[l][j] + A[k][j]*A[l][i]) / a.
    """
    n = g.size
    a = [[Fraction(x) for x in row] for row in g.entries]
    pos = neg = zero = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in active if i != piv]
            col = {i: a[i][piv] for i in rest}
            for i in rest:
                if col[i] == 0:
                    continue
                f = col[i] / d
                for j in rest:
                    a[i][j] -= f * a[piv][j]
            active = rest
            continue
        pair = None
        for u, i in enumerate(active):
            for j in active[u + 1:]:
                if a[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            zero += len(active)
            break
        i, j = pair
        d = a[i][j]
        pos += 1
        neg += 1
        rest = [k for k in active if k not in (i, j)]
        ci = {k: a[k][i] for k in rest}
        cj = {k: a[k][j] for k in rest}
        for k in rest:
            for l in rest:
                a[k][l] -= (ci[k] * cj[l] + cj[k] * ci[l]) / d
        active = rest
    return pos, neg, zero


def signature_pair(g: SymMatrix) -> tuple[int, int]:
    """(positive, negative) inertia; degenerate input is rejected."""
    pos, negv, zero = inertia(g)
    if zero:
        raise PrecondError("form is degenerate")
    return pos, negv


def det_field(field: Field, g: SymMatrix) -> Any:
    from .linalg import det

    return det(field, g.to_lists())


_DET_POLY_MAX = 8


def det_poly(g: SymMatrix) -> Poly:
    """Determinant of a matrix of Polys by memoized Laplace expansion.

    Expansion is along rows; the memo key is the frozenset of remaining
    column indices (the row is determined by how many columns are gone),
    which turns the naive n! tree into 2^n subproblems.  Sizes above 8 are
    rejected; everything in this package is 8x8 or smaller.
    """
    m = g.size
    if m == 0:
        raise PrecondError("empty matrix")
    if m > _DET_POLY_MAX:
        raise PrecondError(f"det_poly limited to size {_DET_POLY_MAX}")
    probe = g.entries[0][0]
    if not isinstance(probe, Poly):
        raise PrecondError("det_poly expects Poly entries")
    field = probe.field
    vars_ = probe.vars
    zero = Poly.zero(field, vars_)
    one = Poly.const(field, vars_, field.one)
    memo: dict[frozenset, Poly] = {}

    def expand(cols: frozenset) -> Poly:
        if not cols:
            return one
        key = cols
        cached = memo.get(key)
        if cached is not None:
            return cached
        row = m - len(cols)
        total = zero
        sign_flip = False
        for c in sorted(cols):
            entry = g.entries[row][c]
            if not entry.is_zero:
                sub = expand(cols - {c})
                term = entry * sub
                total = total - term if sign_flip else total + term
            sign_flip = not sign_flip
        memo[key] = total
        return total

    return expand(frozenset(range(m)))

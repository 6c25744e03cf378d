"""The split-torus example  x0 x1 = x2 x3 = x4 x5  in P^5.

Its base locus is singular exactly at the six coordinate points, contains the
eight planes {x_a = x_b = x_c = 0} with one index from each of the blocks
{0,1}, {2,3}, {4,5}, and over F_q carries exactly 12 q^2 lines: the ones in
those planes plus 4 (q-1)^2 lines through pairs of "opposite" singular
points.  Everything is checked here twice — by exhaustive scan and by closed
formula — and the degree bookkeeping 8*1 + 4*6 = 32 = deg of the line scheme
is exposed for the n = 5 story.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InternalCheckError, PrecondError
from .fields import QQ, Field, PrimeField
from .fqgeom import ProjLine, enumerate_lines, projective_point_count, singular_points
from .pencil import Pencil, toric_pencil
from .poly import Poly

BLOCKS = ((0, 1), (2, 3), (4, 5))

# index triples of the eight planes {x_a = x_b = x_c = 0}
PLANE_TRIPLES: tuple[tuple[int, int, int], ...] = tuple(
    itertools.product(*BLOCKS)
)


def coordinate_points(field: Field) -> list[tuple]:
    out = []
    for i in range(6):
        out.append(tuple(field.one if j == i else field.zero for j in range(6)))
    return out


def toric_singular_points(field: Field) -> list[tuple]:
    """The singular locus of the base locus: the six coordinate points.

    Over a prime field this is an exhaustive Jacobian-rank scan.  Over the
    rationals the scan is impossible, so we argue by monomial support: each
    2x2 minor of the Jacobian is (up to sign and a factor of 4) a product of
    one variable from each of two blocks, so on a singular point at most one
    block can have a nonzero coordinate — and the equations then kill all
    but one coordinate of that block.
    """
    p = toric_pencil(field)
    if isinstance(field, PrimeField):
        found = singular_points(p)
        expected = sorted(
            tuple(int(c) for c in pt) for pt in coordinate_points(field)
        )
        if sorted(found) != expected:
            raise InternalCheckError("toric singular scan differs from the six coordinate points")
        return [tuple(field.from_int(c) for c in pt) for pt in sorted(found)]
    if field != QQ:
        raise PrecondError("unsupported field for the singular-locus computation")
    q0 = p.form(0)
    q1 = p.form(1)
    vars_ = p.variables()
    minors: list[Poly] = []
    grads0 = [q0.derivative(v) for v in vars_]
    grads1 = [q1.derivative(v) for v in vars_]
    for a in range(6):
        for b in range(a + 1, 6):
            minors.append(grads0[a] * grads1[b] - grads0[b] * grads1[a])
    # support argument: every nonzero minor is a single monomial x_c x_d with
    # c, d in two different blocks
    for m in minors:
        if m.is_zero:
            continue
        if len(m.terms) != 1:
            raise InternalCheckError("a Jacobian minor is not a monomial")
        (exp,) = m.terms
        support = [i for i, e in enumerate(exp) if e]
        blocks_hit = {_block_of(i) for i in support}
        if len(blocks_hit) != len(support):
            raise InternalCheckError("a Jacobian minor has two variables in one block")
    # hence: vanishing of all minors forces the support of the point into a
    # single block, and x_a x_b = 0 within that block leaves one coordinate
    return coordinate_points(field)


def _block_of(i: int) -> int:
    return i // 2


@dataclass(frozen=True)
class ToricLineCensus:
    q: int
    total: int
    planar: int
    nonplanar: int
    per_plane: dict[tuple[int, int, int], int]
    # closed-form predictions, kept separate from the scan results
    predicted_total: int
    predicted_planar: int
    predicted_nonplanar: int
    predicted_per_plane: int

    @property
    def consistent(self) -> bool:
        return (
            self.total == self.predicted_total
            and self.planar == self.predicted_planar
            and self.nonplanar == self.predicted_nonplanar
            and all(v == self.predicted_per_plane for v in self.per_plane.values())
        )


def classify_line(line: ProjLine) -> list[tuple[int, int, int]]:
    """The planes (by index triple) containing the line; empty if nonplanar."""
    zeros = line.zero_coordinates()
    return [t for t in PLANE_TRIPLES if set(t) <= zeros]


def toric_line_census(q: int) -> ToricLineCensus:
    """Count the F_q lines on the toric base locus, split by the planes.

    The scan side enumerates all lines on the two quadrics; the predicted
    side is combinatorial: each of the 8 planes is a P^2 with q^2+q+1 lines;
    a line lies in two planes iff it joins two coordinate vertices of a
    common edge, and there are 12 such shared lines; the lines in no plane
    come in 4 (q-1)^2 torus translates.  Total: 12 q^2.
    """
    p = PrimeField(q)
    lines = enumerate_lines(toric_pencil(p))
    per_plane = {t: 0 for t in PLANE_TRIPLES}
    planar_set = 0
    nonplanar = 0
    multiplicity_sum = 0
    for line in lines:
        homes = classify_line(line)
        multiplicity_sum += len(homes)
        if homes:
            planar_set += 1
            for t in homes:
                per_plane[t] += 1
        else:
            nonplanar += 1
    pred_per_plane = q * q + q + 1
    pred_planar = 8 * pred_per_plane - 12
    pred_nonplanar = 4 * (q - 1) ** 2
    pred_total = 12 * q * q
    if multiplicity_sum != 8 * pred_per_plane:
        raise InternalCheckError("per-plane multiplicities do not sum to 8(q^2+q+1)")
    return ToricLineCensus(
        q=q,
        total=len(lines),
        planar=planar_set,
        nonplanar=nonplanar,
        per_plane=per_plane,
        predicted_total=pred_total,
        predicted_planar=pred_planar,
        predicted_nonplanar=pred_nonplanar,
        predicted_per_plane=pred_per_plane,
    )


def plane_union_point_count(q: int) -> tuple[int, int]:
    """Points of the union of the eight planes over F_q, both by direct scan
    and by inclusion-exclusion; returns (scan, formula)."""
    from .fqgeom import projective_points
    import numpy as np

    pts = projective_points(q, 6)
    arr = np.asarray(pts)
    in_union = np.zeros(arr.shape[0], dtype=bool)
    for t in PLANE_TRIPLES:
        in_union |= (arr[:, list(t)] == 0).all(axis=1)
    scan = int(in_union.sum())

    formula = 0
    for r in range(1, 9):
        for combo in itertools.combinations(PLANE_TRIPLES, r):
            union_idx = set().union(*[set(t) for t in combo])
            dim_plus = 6 - len(union_idx)  # ambient coordinates left free
            npts = (q**dim_plus - 1) // (q - 1) if dim_plus else 0
            formula += (-1) ** (r + 1) * npts
    return scan, formula


def dp6_point_count(q: int) -> int:
    """Points of a split sextic del Pezzo surface over F_q (a P^2 blown up in
    three rational points in general position): q^2 + 4q + 1."""
    return q * q + 4 * q + 1


@dataclass(frozen=True)
class ComponentBookkeeping:
    """The twelve components of the scheme of lines on the toric base locus:
    eight (dual) planes of degree 1 and four sextic del Pezzo surfaces of
    degree 6, glued along 24 edge lines and 12 vertex points."""

    plane_components: int
    plane_degree: int
    dp6_components: int
    dp6_degree: int

    @property
    def total_degree(self) -> int:
        return (
            self.plane_components * self.plane_degree
            + self.dp6_components * self.dp6_degree
        )


def line_scheme_components() -> ComponentBookkeeping:
    return ComponentBookkeeping(8, 1, 4, 6)


def component_count_identity(q: int) -> tuple[int, int]:
    """Count F_q points of the line scheme with multiplicity, two ways.

    Summing the components: 8 planes of q^2+q+1 points and 4 del Pezzo
    sextics of q^2+4q+1 points.  Stratifying instead: 12 open interiors of
    (q-1)^2 points at multiplicity 1, 24 edge interiors of q-1 points at
    multiplicity 2, and 12 vertices at multiplicity 4.  Returns both sums
    (equal for every q; each equals 12q^2 + 24q + 12)."""
    by_components = 8 * (q * q + q + 1) + 4 * dp6_point_count(q)
    by_strata = 12 * (q - 1) ** 2 + 2 * 24 * (q - 1) + 4 * 12
    return by_components, by_strata

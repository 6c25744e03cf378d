"""Command-line front end.

One subcommand per analysis; every run emits a Report (JSON with ``--json``,
indented text otherwise).  Exit codes: 0 success, 2 bad input or violated
precondition, 3 internal consistency failure (an identity the library
re-derives came out wrong — treat as a regression, not a usage error).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Callable, Sequence, TextIO

from . import io
from .bundlecalc import hpt_check, poly_from_grid
from .circle import enumerate_classes, pencil_decomposition, real_line_exists, real_verdict
from .curvecounts import curve_data
from .errors import InternalCheckError, PrecondError
from .fields import PrimeField
from .fqgeom import (
    count_points,
    enumerate_lines,
    points_on_pencil,
    singular_points,
    torsor_check,
)
from .isotropy import amer_harness
from .latticegroups import torus_rationality
from .pencil import (
    Pencil,
    discriminant_cover,
    is_smooth,
    reduce_pencil,
    singular_at,
    smoothness,
)
from .projections import double_projection, project_from_line, round_trip


def _field_doc(pencil: Pencil) -> dict:
    if isinstance(pencil.field, PrimeField):
        return {"kind": "prime", "p": pencil.field.p}
    return {"kind": "rationals"}


def _over_q(pencil: Pencil, q: int | None) -> Pencil:
    if q is None:
        if isinstance(pencil.field, PrimeField):
            return pencil
        raise PrecondError("--q is required for a pencil over the rationals")
    return reduce_pencil(pencil, q)


def _parse_inline(text: str, flag: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PrecondError(f"--{flag}: not valid JSON: {exc.msg}") from exc


def _parse_vector(pencil: Pencil, raw: Any, flag: str) -> list[Any]:
    m = pencil.n + 1
    if not isinstance(raw, list) or len(raw) != m:
        raise PrecondError(f"--{flag}: expected a list of {m} coordinates")
    fld = pencil.field
    out = []
    for k, c in enumerate(raw):
        if isinstance(c, float):
            raise PrecondError(f"--{flag}[{k}]: coordinates must be exact")
        out.append(fld.parse(c))
    return out


# -- subcommand handlers --------------------------------------------------
# each returns (payload, input-file sha256 or None)


def _cmd_analyze(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    rep = smoothness(pencil)
    payload: dict[str, Any] = {
        "field": _field_doc(pencil),
        "n": pencil.n,
        "smooth": rep.smooth,
        "smoothness_certificate": rep.certificate,
    }
    if rep.degenerate:
        payload["discriminant"] = None
    else:
        disc = pencil.discriminant_form()
        payload["discriminant"] = {
            "degree": disc.degree,
            "coefficients": list(disc.coeffs),
            "convention": "coefficient i multiplies s0^(degree-i) s1^i",
        }
    payload["singular_points"] = _singular_scan(pencil)
    if pencil.field.characteristic == 0 and rep.smooth:
        dec = pencil_decomposition(pencil)
        payload["isotopy_class"] = {"parts": list(dec.parts), "label": dec.label()}
        if pencil.n == 5:
            v = real_verdict(dec, 5)
            payload["real_verdict"] = {
                "has_points": v.has_points,
                "has_line": v.has_line,
                "rational": v.rational,
                "reason": v.reason,
                "topology": v.topology,
                "walk": list(v.walk),
            }
    return payload, digest


def _singular_scan(pencil: Pencil) -> dict:
    if isinstance(pencil.field, PrimeField):
        pts = singular_points(pencil)
        return {"exhaustive": True, "count": len(pts), "points": [list(p) for p in pts]}
    fld = pencil.field
    m = pencil.n + 1
    found = []
    for i in range(m):
        x = [fld.one if j == i else fld.zero for j in range(m)]
        if fld.is_zero(pencil.eval_form(0, x)) and fld.is_zero(pencil.eval_form(1, x)):
            if singular_at(pencil, x):
                found.append([fld.fmt(c) for c in x])
    return {
        "exhaustive": False,
        "count": len(found),
        "points": found,
        "note": "coordinate points only; exhaustive scans need a finite field",
    }


def _cmd_lines(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    pencil = _over_q(pencil, args.q)
    lines = enumerate_lines(pencil)
    payload: dict[str, Any] = {
        "q": pencil.field.p,
        "count": len(lines),
        "points_on_base_locus": count_points(pencil),
    }
    if len(lines) <= 64:
        payload["lines"] = sorted([list(r) for r in ln.rows] for ln in lines)
    else:
        payload["lines"] = None
    return payload, digest


def _cmd_zeta(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    pencil = _over_q(pencil, args.q)
    if pencil.n != 5:
        raise PrecondError("the zeta report needs a threefold pencil (n = 5)")
    if not is_smooth(pencil):
        raise PrecondError("the zeta report needs a smooth base locus")
    cover = discriminant_cover(pencil)
    f = [int(c) for c in cover.chart_main()]
    data = curve_data(f, pencil.field.p)
    return {
        "q": data.q,
        "curve": "y^2 = c(t), the double cover branched over the degenerate members",
        "model_note": "c is the signed determinant -det(G0 + t G1); the sign is the rank-6 discriminant normalization",
        "cover_coefficients_ascending": f,
        "n1": data.n1,
        "n2": data.n2,
        "lpoly_ascending": list(data.lpoly),
        "jacobian_order": data.jacobian_order,
    }, digest


def _cmd_torsor(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    pencil = _over_q(pencil, args.q)
    rep = torsor_check(pencil)
    return {
        "q": rep.q,
        "line_count": rep.line_count,
        "jacobian_order": rep.jacobian_order,
        "curve_counts": list(rep.curve_counts),
        "lpoly_ascending": list(rep.lpoly),
        "consistent": rep.consistent,
    }, digest


def _cmd_project_line(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    raw = _parse_inline(args.line, "line")
    if not isinstance(raw, list) or len(raw) != 2:
        raise PrecondError("--line: expected two spanning points [[...], [...]]")
    rows = [_parse_vector(pencil, r, "line") for r in raw]
    proj = project_from_line(pencil, rows)
    fld = pencil.field
    payload: dict[str, Any] = {
        "field": _field_doc(pencil),
        "n": pencil.n,
        "line": [[fld.fmt(c) for c in r] for r in rows],
        "curve_equations": [str(eq) for eq in proj.curve_equations],
        "beta": [str(c) for c in proj.beta.components],
        "beta_inverse": [str(c) for c in proj.beta_inverse.components],
    }
    if isinstance(fld, PrimeField):
        checked = good = 0
        for pt in points_on_pencil(pencil):
            ok = round_trip(proj, [int(c) for c in pt])
            if ok is None:
                continue
            checked += 1
            good += ok
            if checked == 20:
                break
        payload["round_trip"] = {"checked": checked, "identity": checked == good}
    return payload, digest


def _cmd_double_project(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    point = _parse_vector(pencil, _parse_inline(args.point, "point"), "point")
    dp = double_projection(pencil, point)
    fld = pencil.field
    return {
        "field": _field_doc(pencil),
        "point": [fld.fmt(c) for c in point],
        "degeneracy_coefficients_ascending": [fld.fmt(c) for c in dp.degeneracy.chart_main()],
        "twist_factor": fld.fmt(dp.twist_factor),
        "identity": "det A(t) = -det(M)^2 * F(t, -1)",
        "identity_checked": dp.identity_checked,
        "counts_checked": dp.counts_checked,
        "curve_counts": list(dp.curve_counts) if dp.curve_counts else None,
    }, digest


def _cmd_toric(args: argparse.Namespace) -> tuple[dict, str | None]:
    from .fields import PrimeField as PF
    from .toric import (
        component_count_identity,
        dp6_point_count,
        line_scheme_components,
        toric_line_census,
        toric_singular_points,
    )

    q = args.q
    census = toric_line_census(q)
    sing = toric_singular_points(PF(q))
    comp = line_scheme_components()
    by_components, by_strata = component_count_identity(q)
    return {
        "q": q,
        "singular_points": len(sing),
        "line_total": census.total,
        "planar_lines": census.planar,
        "nonplanar_lines": census.nonplanar,
        "per_plane": {"x" + "x".join(map(str, k)): v for k, v in sorted(census.per_plane.items())},
        "predicted": {
            "total": census.predicted_total,
            "planar": census.predicted_planar,
            "nonplanar": census.predicted_nonplanar,
            "per_plane": census.predicted_per_plane,
        },
        "census_consistent": census.consistent,
        "dp6_points": dp6_point_count(q),
        "line_scheme_point_identity": {
            "by_components": by_components,
            "by_strata": by_strata,
            "equal": by_components == by_strata,
        },
        "component_degrees": {
            "planes": [comp.plane_components, comp.plane_degree],
            "dp6": [comp.dp6_components, comp.dp6_degree],
            "total_degree": comp.total_degree,
        },
    }, None


def _cmd_torus(args: argparse.Namespace) -> tuple[dict, str | None]:
    doc, digest = io.load_json(args.generators)
    if not isinstance(doc, list) or not doc:
        raise PrecondError("generators: expected a nonempty JSON list of 3x3 integer matrices")
    gens = []
    for k, mat in enumerate(doc):
        spot = f"generators[{k}]"
        if not isinstance(mat, list) or len(mat) != 3:
            raise PrecondError(f"{spot}: expected 3 rows")
        for row in mat:
            if not isinstance(row, list) or len(row) != 3:
                raise PrecondError(f"{spot}: rows must have 3 entries")
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise PrecondError(f"{spot}: entries must be integers, got {e!r}")
        gens.append(tuple(tuple(row) for row in mat))
    v = torus_rationality(gens)
    payload: dict[str, Any] = {
        "order": v.order,
        "structure": v.tag,
        "rational": v.rational,
        "klein_subgroup_count": v.klein_count,
        "unmatched_klein": v.unmatched_klein,
    }
    if v.witness_subgroup is None:
        payload["witness"] = None
    else:
        payload["witness"] = {
            "subgroup": [[list(r) for r in m] for m in v.witness_subgroup],
            "conjugator": [list(r) for r in v.conjugator],
        }
    return payload, digest


def _cmd_amer(args: argparse.Namespace) -> tuple[dict, str | None]:
    pencil, digest = io.load_pencil(args.file)
    pencil = _over_q(pencil, args.q)
    rep = amer_harness(pencil.g0, pencil.g1, args.deg, pencil.field)
    return {
        "q": rep.q,
        "nvars": rep.nvars,
        "degree_bound": rep.degree_bound,
        "common_zero": list(rep.common_zero) if rep.common_zero else None,
        "common_zero_count": rep.common_zero_count,
        "solution": [list(row) for row in rep.solution] if rep.solution else None,
        "candidates": rep.candidates,
        "consistent": rep.consistent,
    }, digest


def _cmd_hpt(args: argparse.Namespace) -> tuple[dict, str | None]:
    doc, digest = io.load_json(args.g)
    if not isinstance(doc, list) or len(doc) != 3 or any(
        not isinstance(row, list) or len(row) != 3 for row in doc
    ):
        raise PrecondError("--g file: expected a 3x3 coefficient grid [[a00, a01, a02], ...]")
    for i, row in enumerate(doc):
        for j, e in enumerate(row):
            if isinstance(e, float):
                raise PrecondError(f"--g file: grid[{i}][{j}] must be exact (integer or 'num/den')")
    g = poly_from_grid(doc)
    rep = hpt_check(g)
    return {
        "g": str(g),
        "det_bidegree": list(rep.det_bidegree),
        "factors": [[name, list(b), e] for name, b, e in rep.factors],
        "factored_class_sum": list(rep.factored_class_sum),
        "configuration_class_sum": list(rep.configuration_class_sum),
        "fibers": [
            {
                "fiber": f.fiber,
                "restriction": list(f.restriction),
                "discriminant": f.discriminant,
                "restriction_zero": f.restriction_zero,
                "tangent": f.tangent,
            }
            for f in rep.fibers
        ],
        "all_tangent": rep.all_tangent,
    }, digest


def _cmd_classes(args: argparse.Namespace) -> tuple[dict, str | None]:
    n = args.n
    decs = enumerate_classes(n)
    rows = []
    for dec in decs:
        row: dict[str, Any] = {
            "parts": list(dec.parts),
            "label": dec.label(),
            "k": dec.k,
            "real_line": real_line_exists(dec, n),
        }
        if n == 5:
            v = real_verdict(dec, 5)
            row["has_points"] = v.has_points
            row["rational"] = v.rational
            row["topology"] = v.topology
        rows.append(row)
    return {"n": n, "count": len(rows), "classes": rows}, None


_HANDLERS: dict[str, Callable[[argparse.Namespace], tuple[dict, str | None]]] = {
    "analyze": _cmd_analyze,
    "lines": _cmd_lines,
    "zeta": _cmd_zeta,
    "torsor": _cmd_torsor,
    "project-line": _cmd_project_line,
    "double-project": _cmd_double_project,
    "toric": _cmd_toric,
    "torus": _cmd_torus,
    "amer": _cmd_amer,
    "hpt": _cmd_hpt,
    "classes": _cmd_classes,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qpencil",
        description="Exact analysis of pencils of quadrics and their base loci.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True, metavar="SUBCOMMAND")

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit the report as JSON")
        return p

    p = add("analyze", "discriminant, smoothness, singular points; over Q also the isotopy class")
    p.add_argument("file", help="pencil file (JSON)")

    p = add("lines", "enumerate the lines on the base locus over F_q")
    p.add_argument("file", help="pencil file (JSON)")
    p.add_argument("--q", type=int, help="prime modulus (required for a rational pencil)")

    p = add("zeta", "point counts and L-polynomial of the double cover of the pencil line")
    p.add_argument("file", help="pencil file (JSON)")
    p.add_argument("--q", type=int, help="prime modulus (required for a rational pencil)")

    p = add("torsor", "compare the line count with the Jacobian order of the cover")
    p.add_argument("file", help="pencil file (JSON)")
    p.add_argument("--q", type=int, help="prime modulus (required for a rational pencil)")

    p = add("project-line", "projection away from a line on the base locus")
    p.add_argument("file", help="pencil file (JSON)")
    p.add_argument("--line", required=True, help="JSON: two spanning points, e.g. '[[1,0,...],[0,1,...]]'")

    p = add("double-project", "double projection from a point; degeneracy sextic and its twist identity")
    p.add_argument("file", help="pencil file (JSON)")
    p.add_argument("--point", required=True, help="JSON: one point on the base locus")

    p = add("toric", "census of the torus-invariant example over F_q")
    p.add_argument("--q", type=int, required=True, help="prime modulus")

    p = add("torus", "rationality of the 3-torus with the given integral symmetry group")
    p.add_argument("--generators", required=True, help="JSON file: list of 3x3 integer matrices")

    p = add("amer", "polynomial-solution harness for the pencil's two forms over F_q")
    p.add_argument("file", help="pencil file (JSON)")
    p.add_argument("--q", type=int, help="prime modulus (required for a rational pencil)")
    p.add_argument("--deg", type=int, required=True, help="degree bound D for x(t)")

    p = add("hpt", "specialization-matrix determinant and fiber tangency for a (2,2) curve")
    p.add_argument("--g", required=True, help="JSON file: 3x3 coefficient grid of the (2,2) form")

    p = add("classes", "enumerate the isotopy classes of smooth pencils in P^n(R)")
    p.add_argument("--n", type=int, required=True, help="projective dimension n >= 2")

    return ap


def run(argv: Sequence[str], out: TextIO | None = None, err: TextIO | None = None) -> tuple[int, io.Report | None]:
    """Parse argv, run the subcommand, emit its report.  Returns (exit code, report)."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(list(argv))
    started = time.perf_counter()
    try:
        payload, digest = _HANDLERS[args.cmd](args)
    except PrecondError as exc:
        print(f"error: {exc}", file=err)
        return 2, None
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=err)
        return 3, None
    report = io.Report(
        command=("qpencil", *argv),
        input_sha256=digest,
        status="ok",
        payload=payload,
        timing=None if args.json else time.perf_counter() - started,
    )
    if args.json:
        out.write(report.to_json())
    else:
        _print_human(report, out)
    return 0, report


def _print_human(report: io.Report, out: TextIO) -> None:
    print(f"qpencil {report.command[1]}: {report.status}", file=out)
    if report.input_sha256:
        print(f"input sha256: {report.input_sha256}", file=out)
    _print_block(report.payload, out, 0)
    if report.timing is not None:
        print(f"elapsed: {report.timing:.3f}s", file=out)


def _print_block(value: Any, out: TextIO, indent: int) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list, tuple)) and any(
                isinstance(x, (dict, list, tuple)) for x in (v.values() if isinstance(v, dict) else v)
            ):
                print(f"{pad}{k}:", file=out)
                _print_block(v, out, indent + 1)
            else:
                print(f"{pad}{k}: {_scalar(v)}", file=out)
    else:
        for v in value:
            if isinstance(v, (dict, list, tuple)):
                print(f"{pad}-", file=out)
                _print_block(v, out, indent + 1)
            else:
                print(f"{pad}- {_scalar(v)}", file=out)


def _scalar(v: Any) -> str:
    return json.dumps(io.jsonable(v))


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())

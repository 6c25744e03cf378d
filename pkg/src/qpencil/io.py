"""Pencil input files and the report envelope.

Input files are UTF-8 JSON of the shape

    {"field": {"kind": "rationals"},
     "n": 5,
     "q0": [[0, 1, 1], [2, 3, "-1"], ...],
     "q1": [[2, 3, 1], [4, 5, "-1/2"], ...]}

where ``field`` is either ``{"kind": "rationals"}`` or
``{"kind": "prime", "p": 11}``, and each term ``[i, j, c]`` with ``i <= j``
gives the coefficient of ``x_i x_j``.  Coefficients are integers or exact
``"num/den"`` strings; floats are rejected.  Parse diagnostics name the
offending field (and the line for malformed JSON).

Reports are serialized with sorted keys and no timestamps, so a fixed input
produces byte-identical output across runs.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import PrecondError
from .fields import QQ, Field, PrimeField
from .pencil import Pencil


def parse_field_spec(spec: Any, where: str = "field") -> Field:
    if not isinstance(spec, dict):
        raise PrecondError(f"{where}: expected an object, got {type(spec).__name__}")
    kind = spec.get("kind")
    if kind == "rationals":
        if set(spec) != {"kind"}:
            raise PrecondError(f"{where}: unexpected keys {sorted(set(spec) - {'kind'})}")
        return QQ
    if kind == "prime":
        if set(spec) != {"kind", "p"}:
            raise PrecondError(f"{where}: expected exactly the keys 'kind' and 'p'")
        p = spec["p"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise PrecondError(f"{where}.p: expected an integer, got {p!r}")
        return PrimeField(p)
    raise PrecondError(f"{where}.kind: expected 'rationals' or 'prime', got {kind!r}")


def _parse_terms(field: Field, n: int, raw: Any, where: str) -> list[tuple[int, int, Any]]:
    if not isinstance(raw, list):
        raise PrecondError(f"{where}: expected a list of [i, j, coefficient] terms")
    out = []
    seen: set[tuple[int, int]] = set()
    for k, term in enumerate(raw):
        spot = f"{where}[{k}]"
        if not isinstance(term, list) or len(term) != 3:
            raise PrecondError(f"{spot}: expected [i, j, coefficient]")
        i, j, c = term
        for name, idx in (("i", i), ("j", j)):
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise PrecondError(f"{spot}: index {name} must be an integer, got {idx!r}")
        if not 0 <= i <= j <= n:
            raise PrecondError(f"{spot}: need 0 <= i <= j <= {n}, got ({i}, {j})")
        if (i, j) in seen:
            raise PrecondError(f"{spot}: duplicate term ({i}, {j})")
        seen.add((i, j))
        if isinstance(c, float):
            raise PrecondError(f"{spot}: coefficients must be exact (integer or 'num/den' string)")
        try:
            val = field.parse(c)
        except PrecondError as exc:
            raise PrecondError(f"{spot}: {exc}") from exc
        out.append((i, j, val))
    return out


def parse_pencil(doc: Any) -> Pencil:
    """Build a pencil from a decoded input document."""
    if not isinstance(doc, dict):
        raise PrecondError(f"top level: expected an object, got {type(doc).__name__}")
    missing = [k for k in ("field", "n", "q0", "q1") if k not in doc]
    if missing:
        raise PrecondError(f"top level: missing keys {missing}")
    extra = sorted(set(doc) - {"field", "n", "q0", "q1"})
    if extra:
        raise PrecondError(f"top level: unexpected keys {extra}")
    field = parse_field_spec(doc["field"])
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise PrecondError(f"n: expected an integer, got {n!r}")
    if n < 2:
        raise PrecondError(f"n: need n >= 2, got {n}")
    terms0 = _parse_terms(field, n, doc["q0"], "q0")
    terms1 = _parse_terms(field, n, doc["q1"], "q1")
    return Pencil.from_quadric_terms(field, n, terms0, terms1)


def load_pencil(path: str) -> tuple[Pencil, str]:
    """Read a pencil file; returns the pencil and the sha256 of the raw bytes."""
    data = _read_input(path)
    return parse_pencil(_decode(data, path)), hashlib.sha256(data).hexdigest()


def load_json(path: str) -> tuple[Any, str]:
    """Read any JSON input file; returns the document and its sha256."""
    data = _read_input(path)
    return _decode(data, path), hashlib.sha256(data).hexdigest()


def _read_input(path: str) -> bytes:
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise PrecondError(f"cannot read {path}: {exc}") from exc


def _decode(data: bytes, path: str) -> Any:
    try:
        return json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise PrecondError(f"{path}: not UTF-8: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise PrecondError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


# -- report envelope -----------------------------------------------------


def jsonable(value: Any) -> Any:
    """Recursively convert a payload to JSON-safe values (Fractions to strings)."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(jsonable(v) for v in value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    raise PrecondError(f"cannot serialize {type(value).__name__} into a report")


@dataclass(frozen=True)
class Report:
    """Envelope for one CLI invocation: command echo, input hash, payload.

    ``timing`` is filled only in human-readable output; JSON reports keep it
    null so identical inputs give byte-identical bytes.
    """

    command: tuple[str, ...]
    input_sha256: str | None
    status: str
    payload: dict
    timing: float | None = None

    def to_json(self) -> str:
        doc = {
            "command": list(self.command),
            "input_sha256": self.input_sha256,
            "status": self.status,
            "payload": jsonable(self.payload),
            "timing": None,
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

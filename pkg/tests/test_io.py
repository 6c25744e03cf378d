"""Input parsing diagnostics and the report envelope."""

import json
from fractions import Fraction

import pytest

from qpencil.errors import PrecondError
from qpencil.fields import QQ, PrimeField
from qpencil.io import Report, jsonable, load_json, load_pencil, parse_field_spec, parse_pencil

GOOD_DOC = {
    "field": {"kind": "rationals"},
    "n": 2,
    "q0": [[0, 0, 1], [1, 1, "-1/2"]],
    "q1": [[0, 1, 1], [2, 2, 3]],
}


def test_parse_field_spec():
    assert parse_field_spec({"kind": "rationals"}) is QQ
    assert parse_field_spec({"kind": "prime", "p": 11}) == PrimeField(11)
    with pytest.raises(PrecondError, match="kind"):
        parse_field_spec({"kind": "complex"})
    with pytest.raises(PrecondError, match="unexpected keys"):
        parse_field_spec({"kind": "rationals", "p": 5})
    with pytest.raises(PrecondError, match="field.p"):
        parse_field_spec({"kind": "prime", "p": "11"})
    with pytest.raises(PrecondError, match="field.p"):
        parse_field_spec({"kind": "prime", "p": True})


def test_parse_pencil_happy_path():
    p = parse_pencil(GOOD_DOC)
    assert p.field is QQ
    assert p.n == 2
    assert p.g0[1, 1] == Fraction(-1, 2)
    assert p.g0[0, 1] == 0
    assert p.g1[0, 1] == Fraction(1, 2)  # cross term halved into the Gram matrix


def test_parse_pencil_diagnostics_name_the_spot():
    doc = dict(GOOD_DOC, q0=[[0, 0, 1], [0, 0, 2]])
    with pytest.raises(PrecondError, match=r"q0\[1\]: duplicate term \(0, 0\)"):
        parse_pencil(doc)
    doc = dict(GOOD_DOC, q1=[[0, 5, 1]])
    with pytest.raises(PrecondError, match=r"q1\[0\]"):
        parse_pencil(doc)
    doc = dict(GOOD_DOC, q0=[[0, 0, 0.5]])
    with pytest.raises(PrecondError, match="exact"):
        parse_pencil(doc)
    doc = dict(GOOD_DOC, q0=[[0, 0]])
    with pytest.raises(PrecondError, match="coefficient"):
        parse_pencil(doc)
    doc = dict(GOOD_DOC, q0=[[True, 0, 1]])
    with pytest.raises(PrecondError, match="index i"):
        parse_pencil(doc)


def test_parse_pencil_top_level_shape():
    with pytest.raises(PrecondError, match="missing keys"):
        parse_pencil({"field": {"kind": "rationals"}})
    with pytest.raises(PrecondError, match="unexpected keys"):
        parse_pencil(dict(GOOD_DOC, comment="hi"))
    with pytest.raises(PrecondError, match="expected an object"):
        parse_pencil([1, 2, 3])
    with pytest.raises(PrecondError, match="n >= 2"):
        parse_pencil(dict(GOOD_DOC, n=1))
    with pytest.raises(PrecondError, match="n:"):
        parse_pencil(dict(GOOD_DOC, n="2"))


def test_parse_pencil_rejects_bad_prime_coefficient():
    doc = {
        "field": {"kind": "prime", "p": 3},
        "n": 2,
        "q0": [[0, 0, "1/3"]],
        "q1": [[1, 1, 1]],
    }
    with pytest.raises(PrecondError, match=r"q0\[0\]"):
        parse_pencil(doc)


def test_load_pencil_hashes_the_input(tmp_path):
    path = tmp_path / "pencil.json"
    path.write_text(json.dumps(GOOD_DOC))
    p, digest = load_pencil(str(path))
    assert p.n == 2
    assert len(digest) == 64
    # same bytes, same digest
    _, digest2 = load_pencil(str(path))
    assert digest == digest2


def test_load_pencil_diagnostics(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"field":\n!')
    with pytest.raises(PrecondError, match="line 2, column 1"):
        load_pencil(str(path))
    with pytest.raises(PrecondError, match="cannot read"):
        load_pencil(str(tmp_path / "missing.json"))


def test_load_json(tmp_path):
    path = tmp_path / "doc.json"
    path.write_text("[1, 2, 3]")
    doc, digest = load_json(str(path))
    assert doc == [1, 2, 3]
    assert len(digest) == 64


def test_jsonable():
    assert jsonable(Fraction(1, 2)) == "1/2"
    assert jsonable({"a": (1, Fraction(3))}) == {"a": [1, "3"]}
    assert jsonable(frozenset([3, 1, 2])) == [1, 2, 3]
    assert jsonable(None) is None
    assert jsonable(True) is True
    with pytest.raises(PrecondError, match="serialize"):
        jsonable(object())


def test_report_json_is_deterministic():
    rep = Report(
        command=("qpencil", "analyze", "x.json"),
        input_sha256="ab" * 32,
        status="ok",
        payload={"z": 1, "a": Fraction(1, 3)},
        timing=1.25,
    )
    out = rep.to_json()
    assert out == rep.to_json()
    doc = json.loads(out)
    assert doc["timing"] is None  # timing never reaches the JSON output
    assert doc["payload"] == {"z": 1, "a": "1/3"}
    assert list(doc) == sorted(doc)
    assert out.endswith("\n")

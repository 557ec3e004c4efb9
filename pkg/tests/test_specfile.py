import json
import os

import pytest

from conftest import GOLDEN
from superhopf import corpus, specfile
from superhopf.comodule import regular_bundle
from superhopf.hopf import exterior_hopf, verify
from superhopf.specfile import SpecError, emit, parse, parse_text

SPEC_FILES = sorted(f for f in os.listdir(GOLDEN) if f.endswith(".json") and "report" not in f and f != "manifest.json")


@pytest.mark.parametrize("name", SPEC_FILES)
def test_golden_roundtrip(name):
    path = os.path.join(GOLDEN, name)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    doc = parse(path)
    assert emit(doc) == text
    assert emit(doc.obj) == text
    assert parse_text(emit(doc)) == doc


def test_exterior2_document():
    doc = parse(os.path.join(GOLDEN, "exterior2.json"))
    assert doc.kind == "algebra" and doc.obj.dim == 4
    assert verify(doc.obj).ok


def test_builtins_match_golden():
    with open(os.path.join(GOLDEN, "osp12.json"), encoding="utf-8") as fh:
        assert emit(corpus.osp12()) == fh.read()


def _alg(text_obj):
    return json.dumps(text_obj, indent=2)


def test_duplicate_name_error():
    d = specfile.to_dict(exterior_hopf(1))
    d["basis"][1]["name"] = "1"
    with pytest.raises(SpecError, match="duplicate basis name '1'") as e:
        parse_text(_alg(d), "dup.json")
    assert e.value.line is not None


def test_parity_out_of_range():
    d = specfile.to_dict(exterior_hopf(1))
    d["basis"][1]["parity"] = 2
    with pytest.raises(SpecError, match="parity"):
        parse_text(_alg(d))


def test_non_prime_field():
    d = specfile.to_dict(exterior_hopf(1))
    d["field"] = {"kind": "Fp", "p": 6}
    with pytest.raises(SpecError, match="not prime"):
        parse_text(_alg(d))


def test_unknown_name():
    d = specfile.to_dict(exterior_hopf(1))
    d["mult"][0]["out"] = "zz"
    with pytest.raises(SpecError, match="unknown basis name 'zz'"):
        parse_text(_alg(d))


def test_syntax_error_has_position():
    with pytest.raises(SpecError) as e:
        parse_text('{"kind": "algebra",\n  "basis": [,]}', "bad.json")
    assert (e.value.line, e.value.col) == (2, 13)


def test_missing_field():
    with pytest.raises(SpecError, match="missing field"):
        parse_text('{"kind": "algebra", "field": {"kind": "Q"}, "basis": [{"name": "a", "parity": 0}], '
                   '"mult": [{"left": "a"}]}')


def test_action_with_file_references(tmp_path):
    A = exterior_hopf(2)
    (tmp_path / "ext2.json").write_text(emit(A), encoding="utf-8")
    d = specfile.to_dict(regular_bundle(A))
    d["A"] = "ext2.json"
    d["B"] = "ext2.json"
    path = tmp_path / "regular.json"
    path.write_text(json.dumps(d), encoding="utf-8")
    doc = parse(str(path))
    assert doc.kind == "action"
    assert emit(doc) == emit(regular_bundle(A))


def test_action_missing_reference(tmp_path):
    d = specfile.to_dict(regular_bundle(exterior_hopf(1)))
    d["A"] = "nowhere.json"
    path = tmp_path / "a.json"
    path.write_text(json.dumps(d, indent=2), encoding="utf-8")
    with pytest.raises(SpecError, match="cannot resolve A file"):
        parse(str(path))


def test_unreadable_file(tmp_path):
    with pytest.raises(SpecError, match="cannot read"):
        parse(str(tmp_path / "none.json"))


def test_lie_basis_order_enforced():
    d = specfile.to_dict(corpus.borel())
    d["basis"].reverse()
    with pytest.raises(SpecError, match="even elements before odd"):
        parse_text(json.dumps(d))

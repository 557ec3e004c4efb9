"""JSON spec files for algebras, actions, Lie super-algebras and Laurent carriers.

Emission is canonical: sorted keys, two-space indent, entries listed in
basis order and coefficients written as exact strings ("3", "-1/2", or a
residue mod p).  ``parse(emit(doc))`` reproduces ``doc`` and emitting a
parsed canonical file reproduces it byte for byte.
"""

import json
import os
from dataclasses import dataclass

from .comodule import CoactionBundle
from .hopf import MODES, HopfSuperAlgebra, SuperAlgebra
from .laurent import GrouplikeGradedHopf
from .lie import LieSuperAlgebra
from .scalars import Field
from .spaces import SuperSpace

KINDS = ("algebra", "action", "lie", "laurent")


class SpecError(ValueError):
    def __init__(self, msg, path=None, line=None, col=None):
        self.msg, self.path, self.line, self.col = msg, path, line, col
        where = path or "<spec>"
        if line is not None:
            where += f":{line}:{col}"
        super().__init__(f"{where}: {msg}")


@dataclass
class SpecDocument:
    kind: str
    data: dict
    obj: object
    path: str = None

    def __eq__(self, other):
        return isinstance(other, SpecDocument) and self.kind == other.kind and self.data == other.data


def _locate(text, needle, occurrence=1):
    if text is None:
        return None, None
    pos = -1
    for _ in range(occurrence):
        pos = text.find(needle, pos + 1)
        if pos < 0:
            return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Ctx:
    def __init__(self, text, path):
        self.text, self.path = text, path

    def fail(self, msg, needle=None, occurrence=1):
        line, col = _locate(self.text, needle, occurrence) if needle else (None, None)
        if line is None and needle and ": " in needle:
            line, col = _locate(self.text, needle.replace(": ", ":"), occurrence)
        raise SpecError(msg, self.path, line, col)


def _field(d, ctx):
    if not isinstance(d, dict):
        ctx.fail("field must be an object", '"field"')
    try:
        return Field.from_spec(d)
    except (ValueError, KeyError) as e:
        ctx.fail(f"bad field: {e}", '"field"')


def _coeff(F, x, ctx):
    try:
        return F.parse(x)
    except (ValueError, ZeroDivisionError) as e:
        ctx.fail(f"bad coefficient {x!r}: {e}", json.dumps(x) if isinstance(x, str) else str(x))


def _basis(items, ctx):
    if not isinstance(items, list):
        ctx.fail("basis must be a list", '"basis"')
    out, seen = [], set()
    for it in items:
        name, par = it.get("name"), it.get("parity")
        if not isinstance(name, str):
            ctx.fail("basis entry needs a string name", '"basis"')
        if name in seen:
            ctx.fail(f"duplicate basis name {name!r}", f'"name": "{name}"', 2)
        if par not in (0, 1):
            ctx.fail(f"parity of {name!r} out of range: {par!r}", f'"name": "{name}"')
        seen.add(name)
        out.append((name, par))
    return out


def _ix(space, name, ctx, what):
    try:
        return space.index(name)
    except KeyError:
        ctx.fail(f"unknown basis name {name!r} in {what}", f'"{name}"')


def _build_algebra(d, ctx):
    F = _field(d.get("field"), ctx)
    space = SuperSpace(F, tuple(_basis(d.get("basis"), ctx)))
    mode = d.get("mode", "supercommutative")
    if mode not in MODES:
        ctx.fail(f"unknown mode {mode!r}", '"mode"')
    mult = {}
    for e in d.get("mult", []):
        key = (_ix(space, e["left"], ctx, "mult"), _ix(space, e["right"], ctx, "mult"))
        out = _ix(space, e["out"], ctx, "mult")
        mult.setdefault(key, {})[out] = _coeff(F, e["coeff"], ctx)
    unit = {_ix(space, e["name"], ctx, "unit"): _coeff(F, e["coeff"], ctx) for e in d.get("unit", [])}
    if "comult" not in d:
        return SuperAlgebra(space, mult, unit, mode)
    comult = {}
    for e in d["comult"]:
        i = _ix(space, e["in"], ctx, "comult")
        key = (_ix(space, e["left"], ctx, "comult"), _ix(space, e["right"], ctx, "comult"))
        comult.setdefault(i, {})[key] = _coeff(F, e["coeff"], ctx)
    counit = {_ix(space, e["in"], ctx, "counit"): _coeff(F, e["coeff"], ctx) for e in d.get("counit", [])}
    antipode = None
    if "antipode" in d:
        antipode = {}
        for e in d["antipode"]:
            i = _ix(space, e["in"], ctx, "antipode")
            antipode.setdefault(i, {})[_ix(space, e["out"], ctx, "antipode")] = _coeff(F, e["coeff"], ctx)
    return HopfSuperAlgebra(space, mult, unit, comult, counit, antipode, mode)


def algebra_to_dict(R):
    F, nm = R.F, R.space.names
    d = {
        "kind": "algebra",
        "field": F.spec(),
        "mode": R.mode,
        "basis": [{"name": n, "parity": p} for n, p in R.space.basis],
        "unit": [{"name": nm[i], "coeff": F.fmt(c)} for i, c in sorted(R.unit.items())],
        "mult": [
            {"left": nm[i], "right": nm[j], "out": nm[k], "coeff": F.fmt(c)}
            for (i, j), v in sorted(R.mult.items())
            for k, c in sorted(v.items())
        ],
    }
    if isinstance(R, HopfSuperAlgebra):
        d["comult"] = [
            {"in": nm[i], "left": nm[j], "right": nm[k], "coeff": F.fmt(c)}
            for i, v in sorted(R.comult.items())
            for (j, k), c in sorted(v.items())
        ]
        d["counit"] = [{"in": nm[i], "coeff": F.fmt(c)} for i, c in sorted(R.counit.items())]
        if R.antipode is not None:
            d["antipode"] = [
                {"in": nm[i], "out": nm[j], "coeff": F.fmt(c)}
                for i, v in sorted(R.antipode.items())
                for j, c in sorted(v.items())
            ]
    return d


def bundle_to_dict(bundle):
    A, B, F = bundle.A, bundle.B, bundle.F
    an, bn = A.space.names, B.space.names
    return {
        "kind": "action",
        "A": algebra_to_dict(A),
        "B": algebra_to_dict(B),
        "rho": [
            {"in": bn[b], "b": bn[i], "a": an[j], "coeff": F.fmt(c)}
            for b, v in sorted(bundle.rho.items())
            for (i, j), c in sorted(v.items())
        ],
    }


def lie_to_dict(g):
    nm = g.names
    return {
        "kind": "lie",
        "field": g.F.spec(),
        "basis": [{"name": n, "parity": g.parity(i)} for i, n in enumerate(nm)],
        "bracket": [
            {"left": nm[i], "right": nm[j], "out": nm[k], "coeff": g.F.fmt(c)}
            for (i, j), v in sorted(g.bracket.items())
            for k, c in sorted(v.items())
        ],
    }


def laurent_to_dict(G):
    return {
        "kind": "laurent",
        "field": G.F.spec(),
        "n": G.n,
        "r": G.r,
        "characters": [list(c) for c in G.chars],
        "weights": [list(a) for a in G.weights],
    }


def to_dict(obj):
    if isinstance(obj, CoactionBundle):
        return bundle_to_dict(obj)
    if isinstance(obj, SuperAlgebra):
        return algebra_to_dict(obj)
    if isinstance(obj, LieSuperAlgebra):
        return lie_to_dict(obj)
    if isinstance(obj, GrouplikeGradedHopf):
        return laurent_to_dict(obj)
    raise TypeError(f"cannot emit {type(obj).__name__}")


def emit_dict(d):
    return json.dumps(d, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def emit(obj):
    """Canonical text of an object or a SpecDocument."""
    if isinstance(obj, SpecDocument):
        return emit_dict(obj.data)
    return emit_dict(to_dict(obj))


def _resolve(ref, base, ctx, what):
    if isinstance(ref, dict):
        return ref, None
    if not isinstance(ref, str):
        ctx.fail(f"{what} must be a path or an inline algebra", f'"{what}"')
    path = ref if os.path.isabs(ref) else os.path.join(base, ref)
    if not os.path.exists(path):
        ctx.fail(f"cannot resolve {what} file {ref!r}", f'"{ref}"')
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return _load_json(text, path), (text, path)


def _load_json(text, path):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"syntax error: {e.msg}", path, e.lineno, e.colno) from None


def from_dict(d, text=None, path=None):
    ctx = _Ctx(text, path)
    if not isinstance(d, dict):
        ctx.fail("top level must be an object")
    kind = d.get("kind")
    if kind not in KINDS:
        ctx.fail(f"unknown kind {kind!r}", '"kind"')
    base = os.path.dirname(path) if path else "."
    if kind == "algebra":
        obj = _build_algebra(d, ctx)
        data = algebra_to_dict(obj)
    elif kind == "action":
        parts = {}
        for what in ("A", "B"):
            sub, src = _resolve(d.get(what), base, ctx, what)
            sctx = _Ctx(*src) if src else ctx
            parts[what] = _build_algebra(sub, sctx)
        A, B = parts["A"], parts["B"]
        if isinstance(B, HopfSuperAlgebra):
            # only the algebra structure of B enters a coaction
            B = B.algebra()
        if not isinstance(A, HopfSuperAlgebra):
            ctx.fail("A must be a Hopf super-algebra", '"A"')
        if A.F != B.F:
            ctx.fail("A and B are over different fields", '"B"')
        rho = {}
        for e in d.get("rho", []):
            b = _ix(B.space, e["in"], ctx, "rho")
            key = (_ix(B.space, e["b"], ctx, "rho"), _ix(A.space, e["a"], ctx, "rho"))
            rho.setdefault(b, {})[key] = _coeff(A.F, e["coeff"], ctx)
        obj = CoactionBundle(A, B, rho)
        data = bundle_to_dict(obj)
    elif kind == "lie":
        F = _field(d.get("field", {"kind": "Q"}), ctx)
        basis = _basis(d.get("basis"), ctx)
        even = [n for n, p in basis if p == 0]
        odd = [n for n, p in basis if p == 1]
        if [n for n, _ in basis] != even + odd:
            ctx.fail("lie basis must list even elements before odd ones", '"basis"')
        names = set(even + odd)
        bracket = {}
        for e in d.get("bracket", []):
            for key in ("left", "right", "out"):
                if e[key] not in names:
                    ctx.fail(f"unknown basis name {e[key]!r} in bracket", f'"{e[key]}"')
            bracket.setdefault((e["left"], e["right"]), {})[e["out"]] = _coeff(F, e["coeff"], ctx)
        if F.p:
            ctx.fail("Lie super-algebras are handled over Q only", '"field"')
        obj = LieSuperAlgebra(even, odd, bracket, F)
        data = lie_to_dict(obj)
    else:
        F = _field(d.get("field", {"kind": "Q"}), ctx)
        try:
            obj = GrouplikeGradedHopf(d["n"], d["r"], d["characters"], d.get("weights", d["characters"]), F)
        except (KeyError, ValueError) as e:
            ctx.fail(f"bad laurent data: {e}", '"characters"')
        data = laurent_to_dict(obj)
    return SpecDocument(kind, data, obj, path)


def parse_text(text, path=None):
    d = _load_json(text, path)
    try:
        return from_dict(d, text, path)
    except KeyError as e:
        raise SpecError(f"missing field {e.args[0]!r}", path) from None
    except (TypeError, AttributeError) as e:
        raise SpecError(f"malformed entry: {e}", path) from None


def parse(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise SpecError(f"cannot read: {e.strerror}", path) from None
    return parse_text(text, path)

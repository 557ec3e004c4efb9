"""Command line front end.

    superhopf verify builtin:exterior 2
    superhopf integral builtin:exterior 3
    superhopf torsor builtin:alphaq 3 1
    superhopf lie unimodular builtin:borel
    superhopf bosonize my_algebra.json -o hat.json

Inputs are spec files or ``builtin:NAME [args]``.  Reports are JSON with a
fixed field order; only the ``timing_s`` field varies between runs.
"""

import argparse
import hashlib
import json
import sys
import time

from . import corpus, specfile
from .bosonization import bosonize, bosonize_comodule
from .comodule import (
    CoactionBundle,
    alpha_q_hopf,
    alpha_q_trivializable,
    comodule_injective,
    exterior_C,
    invariants,
    torsor_check,
    verify_bundle,
)
from .hopf import HopfSuperAlgebra, dual_hopf, exterior_hopf, group_hopf, idempotent_monoid_bialgebra, verify
from .integrals import classify, laurent_distinguished_grouplike, verify_integral_window
from .laurent import GrouplikeGradedHopf
from .lie import (
    LieSuperAlgebra,
    delta_character,
    dual_basis,
    explicit_integral_laurent,
    unimodularity,
    verify_lie,
)
from .scalars import QQ, Field


class UsageError(ValueError):
    pass


def parse_field(s):
    if s in (None, "q", "Q"):
        return QQ
    if s.startswith("fp:"):
        try:
            return Field(int(s[3:]))
        except ValueError as e:
            raise UsageError(f"bad field {s!r}: {e}") from None
    raise UsageError(f"bad field {s!r}; use q or fp:<p>")


def _int_args(args, k, usage):
    if len(args) != k:
        raise UsageError(f"usage: {usage}")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise UsageError(f"usage: {usage}") from None


def load_builtin(name, args, field):
    """(object, extras) for a built-in; extras carry side data for some commands."""
    extras = {}
    if name == "exterior":
        (n,) = _int_args(args, 1, "builtin:exterior <n>")
        return exterior_hopf(n, field), extras
    if name == "z2":
        return group_hopf((2,), field), extras
    if name == "sweedler-like":
        return corpus.sweedler_like(field), extras
    if name == "monoid":
        return idempotent_monoid_bialgebra(field), extras
    if name == "alphaq":
        p, r = _int_args(args, 2, "builtin:alphaq <p> <r>")
        C = exterior_C(p)
        extras["alphaq"] = (C, {3: 1}, p**r)
        return corpus.alpha_q_bundle(p, r, C, {3: 1}), extras
    if name == "alphaq-dual":
        p, r = _int_args(args, 2, "builtin:alphaq-dual <p> <r>")
        return dual_hopf(alpha_q_hopf(p, r)), extras
    if name == "laurent-borel":
        return corpus.laurent_borel(), extras
    if name == "abelian-odd":
        (n,) = _int_args(args, 1, "builtin:abelian-odd <n>")
        return corpus.abelian_odd(n), extras
    if name in corpus.LIE_BUILTINS:
        if args:
            raise UsageError(f"builtin:{name} takes no arguments")
        if name == "borel":
            extras["carrier"] = corpus.laurent_borel()
        return corpus.LIE_BUILTINS[name](), extras
    raise UsageError(f"unknown builtin {name!r}")


def load(target, field):
    """Resolve ``[path]`` or ``[builtin:NAME, args...]`` to (object, extras, input record)."""
    head, args = target[0], target[1:]
    if head.startswith("builtin:"):
        obj, extras = load_builtin(head[len("builtin:"):], args, field)
        text = specfile.emit(obj)
        src = " ".join(target)
    else:
        if args:
            raise UsageError(f"unexpected arguments after {head}: {' '.join(args)}")
        doc = specfile.parse(head)
        obj, extras = doc.obj, {}
        text = specfile.emit(doc)
        src = head
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    return obj, extras, {"source": src, "sha256": digest}


def _kind(obj):
    if isinstance(obj, CoactionBundle):
        return "action"
    if isinstance(obj, LieSuperAlgebra):
        return "lie"
    if isinstance(obj, GrouplikeGradedHopf):
        return "laurent"
    return "algebra"


def _need(obj, *kinds):
    if _kind(obj) not in kinds:
        raise UsageError(f"this command needs a {' or '.join(kinds)} input, got {_kind(obj)}")


def _checks(rep, witnesses):
    out = []
    for c in rep.checks:
        e = {"axiom": c.name, "ok": c.ok}
        if not c.ok and witnesses:
            e["witness"] = list(c.witness)
            e["lhs"], e["rhs"] = c.lhs, c.rhs
        out.append(e)
    return {"mode": rep.mode, "ok": rep.ok, "violations": len(rep.violations), "checks": out}


def cmd_verify(obj, extras, opts):
    k = _kind(obj)
    if k == "algebra":
        return _checks(verify(obj), opts.witnesses)
    if k == "action":
        res = _checks(verify_bundle(obj), opts.witnesses)
        res["A"] = _checks(verify(obj.A), opts.witnesses)
        return res
    if k == "lie":
        return _checks(verify_lie(obj), opts.witnesses)
    return _checks(obj.verify(opts.window), opts.witnesses)


def _laurent_integral_report(G, window):
    ex = explicit_integral_laurent(G)
    bad = verify_integral_window(G, ex.phi, window)
    gamma = laurent_distinguished_grouplike(G, ex.phi, min(window, 3))
    values = {}
    for I, m in G.monomials(min(window, 2)):
        v = ex.phi(I, m)
        if v:
            values[_mono_name(I, m)] = QQ.fmt(v)
    return {
        "side": "right",
        "formula": "explicit",
        "z": str(ex.z),
        "nonzero_values_on_window_2": values,
        "window": window,
        "window_failures": [_mono_name(I, m) for I, m in bad],
        "distinguished_grouplike": _mono_name((), gamma),
        "unimodular": not any(gamma),
    }


def _mono_name(I, m):
    w = "".join(f"w{i}" for i in I)
    t = "*".join(f"t{k + 1}^{e}" if len(m) > 1 else f"t^{e}" for k, e in enumerate(m) if e)
    return "*".join(x for x in (w, t) if x) or "1"


def cmd_integral(obj, extras, opts):
    _need(obj, "algebra", "laurent")
    if isinstance(obj, GrouplikeGradedHopf):
        return _laurent_integral_report(obj, opts.window)
    if not isinstance(obj, HopfSuperAlgebra):
        raise UsageError("integrals need a Hopf algebra")
    return classify(obj).as_dict(obj)


def cmd_bosonize(obj, extras, opts):
    _need(obj, "algebra", "action")
    if isinstance(obj, CoactionBundle):
        bhat, bos = bosonize_comodule(obj)
        inv = invariants(obj)
        invh = invariants(bhat)
        out = {
            "dim_Ahat": bos.Ahat.dim,
            "dim_Bhat": bhat.B.dim,
            "coaction_verifies": verify_bundle(bhat).ok,
            "dim_C": inv.dim,
            "dim_coinvariants_Bhat": invh.dim,
        }
        if opts.out:
            _write(opts.out, specfile.emit(bhat))
        return out
    bos = bosonize(obj)
    Ah = bos.Ahat
    rep = verify(Ah)
    S = Ah.antipode_map
    S2 = S @ S
    S4 = S2 @ S2
    ident = S.identity(Ah.space)
    if opts.out:
        _write(opts.out, specfile.emit(Ah))
    return {
        "dim": Ah.dim,
        "verify": _checks(rep, opts.witnesses),
        "S_bijective": S.rank() == Ah.dim,
        "S_squared_is_identity": S2 == ident,
        "S_fourth_is_identity": S4 == ident,
        "antipode": {Ah.space.name(i): Ah.fmt(c) for i, c in enumerate(S.cols)},
    }


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_invariants(obj, extras, opts):
    _need(obj, "action")
    inv = invariants(obj)
    return {"dim": inv.dim, "basis": [obj.B.fmt(v) for v in inv.basis]}


def cmd_torsor(obj, extras, opts):
    _need(obj, "action")
    v = torsor_check(obj)
    out = v.as_dict()
    out["comodule_injective"] = comodule_injective(obj)
    if opts.witnesses:
        out["witnesses"] = v.witnesses
    if "alphaq" in extras:
        C, tau, q = extras["alphaq"]
        out["trivializable (primitive-lift criterion)"] = alpha_q_trivializable(C, tau, q)
    return out


def cmd_injective(obj, extras, opts):
    _need(obj, "action")
    return {"comodule_injective": comodule_injective(obj)}


def cmd_lie(sub, obj, extras, opts):
    _need(obj, "lie")
    g = obj
    if sub == "verify":
        return _checks(verify_lie(g), opts.witnesses)
    if sub == "delta":
        return {"delta": {h: QQ.fmt(c) for h, c in delta_character(g).items()}}
    fd = dual_basis(g)
    if sub == "dualbasis":
        return {
            "y": {_index_name(J): str(y) for J, y in fd.y.items()},
            "pairing_is_identity": all(
                (v == (g.one() if I == J else 0)) for (I, J), v in fd.pairing_matrix().items()
            ),
        }
    if sub == "z":
        return {"z": str(fd.z)}
    if sub == "unimodular":
        rep = unimodularity(g, extras.get("carrier"), window=min(opts.window, 3))
        out = {
            "delta": {h: QQ.fmt(c) for h, c in rep["delta"].items()},
            "unimodular": rep["unimodular"],
        }
        if "gamma" in rep:
            out["carrier_gamma"] = _mono_name((), rep["gamma"])
            out["pi_gamma_equals_delta"] = rep["pi_gamma_equals_delta"]
        return out
    raise UsageError(f"unknown lie subcommand {sub!r}")


def _index_name(I):
    return "(" + ",".join(map(str, I)) + ")"


def cmd_emit(obj, extras, opts):
    text = specfile.emit(obj)
    if opts.out:
        _write(opts.out, text)
        return {"written": opts.out, "bytes": len(text.encode("utf-8"))}
    return {"spec": json.loads(text)}


COMMANDS = {
    "verify": cmd_verify,
    "integral": cmd_integral,
    "bosonize": cmd_bosonize,
    "invariants": cmd_invariants,
    "torsor": cmd_torsor,
    "injective": cmd_injective,
    "emit": cmd_emit,
}


def build_parser():
    p = argparse.ArgumentParser(prog="superhopf", description="Exact computations with Hopf super-algebras.")
    p.add_argument("--field", default="q", help="q or fp:<p> (applies to built-ins)")
    p.add_argument("--window", type=int, default=10, help="Laurent sweep bound M (default 10)")
    p.add_argument("--out", "-o", default=None, help="output path for emitted spec files")
    p.add_argument("--witnesses", action="store_true", help="include failure witnesses")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("target", nargs="+", help="spec file or builtin:NAME [args]")
        sp.add_argument("--out", "-o", default=argparse.SUPPRESS)
        sp.add_argument("--witnesses", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--field", default=argparse.SUPPRESS)
        sp.add_argument("--window", type=int, default=argparse.SUPPRESS)
    lp = sub.add_parser("lie")
    lp.add_argument("subcommand", choices=["verify", "delta", "dualbasis", "z", "unimodular"])
    lp.add_argument("target", nargs="+")
    lp.add_argument("--witnesses", action="store_true", default=argparse.SUPPRESS)
    lp.add_argument("--window", type=int, default=argparse.SUPPRESS)
    return p


def run(argv):
    """Execute one command; returns (report dict, exit code)."""
    parser = build_parser()
    opts = parser.parse_args(argv)
    t0 = time.perf_counter()
    field = parse_field(opts.field)
    obj, extras, record = load(opts.target, field)
    if opts.command == "lie":
        result = cmd_lie(opts.subcommand, obj, extras, opts)
        command = f"lie {opts.subcommand}"
    else:
        result = COMMANDS[opts.command](obj, extras, opts)
        command = opts.command
    report = {
        "command": command,
        "inputs": [record],
        "field": obj.F.spec() if hasattr(obj, "F") else field.spec(),
        "result": result,
        "timing_s": round(time.perf_counter() - t0, 3),
    }
    return report, 0


def dumps(report):
    return json.dumps(report, indent=2, ensure_ascii=False, default=_default) + "\n"


def _default(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return QQ.fmt(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(type(x).__name__)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, code = run(argv)
    except (UsageError, specfile.SpecError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, ArithmeticError) as e:
        # module failures carry the input they came from
        print(f"error: {' '.join(argv)}: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())

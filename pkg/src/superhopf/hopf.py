"""Super-algebras and Hopf super-algebras given by structure constants.

Every object here is finite-dimensional and carries its structure as sparse
tables over basis indices::

    mult[(i, j)]   = {k: c}          a_i a_j = sum c a_k
    comult[i]      = {(j, k): c}     Δ(a_i) = sum c a_j ⊗ a_k
    counit[i]      = c               ε(a_i)
    antipode[i]    = {j: c}          s(a_i)

Tensor products of super-algebras multiply with the Koszul sign
(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd.  An ordinary (ungraded) Hopf
algebra is a super one whose basis is purely even.
"""

import itertools
from dataclasses import dataclass, field as dc_field

from . import linalg
from .scalars import QQ, sign
from .spaces import GradedMap, SuperSpace, tensor_space

SUPERCOMMUTATIVE = "supercommutative"
NONCOMMUTATIVE = "noncommutative"
BIALGEBRA = "bialgebra"
MODES = (SUPERCOMMUTATIVE, NONCOMMUTATIVE, BIALGEBRA)


class NoAntipode(ValueError):
    pass


class StructureError(ValueError):
    """Structure tables inconsistent with the basis (bad index, bad shape)."""


class SuperAlgebra:
    def __init__(self, space, mult, unit, mode=SUPERCOMMUTATIVE):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        F = space.field
        d = space.dim
        self.space = space
        self.mode = mode
        self.mult = {}
        for (i, j), v in mult.items():
            if not (0 <= i < d and 0 <= j < d):
                raise StructureError(f"multiplication index ({i}, {j}) out of range")
            v = F.clean(v)
            for k in v:
                if not 0 <= k < d:
                    raise StructureError(f"multiplication output {k} out of range")
            if v:
                self.mult[(i, j)] = v
        self.unit = F.clean(unit)

    @property
    def field(self):
        return self.space.field

    @property
    def dim(self):
        return self.space.dim

    @property
    def F(self):
        return self.space.field

    def parity(self, i):
        return self.space.basis[i][1]

    def vec(self, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else self.space.index(name_or_index)
        return {i: self.F.one}

    def mul(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return self.F.clean(out)

    def power(self, x, n):
        out = dict(self.unit)
        for _ in range(n):
            out = self.mul(out, x)
        return out

    def one(self):
        return dict(self.unit)

    @property
    def mult_map(self):
        V = self.space
        VV = tensor_space(V, V)
        d = V.dim
        return GradedMap(VV, V, [self.mult.get((i, j), {}) for i in range(d) for j in range(d)])

    def fmt(self, x):
        return self.space.fmt(x)

    def algebra(self):
        return SuperAlgebra(self.space, self.mult, self.unit, self.mode)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, field={self.F}, mode={self.mode})"


class HopfSuperAlgebra(SuperAlgebra):
    def __init__(self, space, mult, unit, comult, counit, antipode=None, mode=SUPERCOMMUTATIVE):
        super().__init__(space, mult, unit, mode)
        F = space.field
        d = space.dim
        self.comult = {}
        for i, v in comult.items():
            if not 0 <= i < d:
                raise StructureError(f"comultiplication input {i} out of range")
            v = F.clean(v)
            for j, k in v:
                if not (0 <= j < d and 0 <= k < d):
                    raise StructureError(f"comultiplication output ({j}, {k}) out of range")
            if v:
                self.comult[i] = v
        self.counit = {}
        for i, c in counit.items():
            if not 0 <= i < d:
                raise StructureError(f"counit input {i} out of range")
            c = F(c)
            if c != 0:
                self.counit[i] = c
        self.antipode = None
        if antipode is not None:
            self.antipode = {}
            for i, v in antipode.items():
                if not 0 <= i < d:
                    raise StructureError(f"antipode input {i} out of range")
                v = F.clean(v)
                if v:
                    self.antipode[i] = v

    def comul(self, x):
        out = {}
        for i, a in x.items():
            for jk, c in self.comult.get(i, {}).items():
                out[jk] = out.get(jk, 0) + a * c
        return self.F.clean(out)

    def eps(self, x):
        return self.F(sum(a * self.counit.get(i, 0) for i, a in x.items()))

    def s(self, x):
        if self.antipode is None:
            raise NoAntipode("no antipode recorded")
        out = {}
        for i, a in x.items():
            for j, c in self.antipode.get(i, {}).items():
                out[j] = out.get(j, 0) + a * c
        return self.F.clean(out)

    @property
    def comult_map(self):
        V = self.space
        VV = tensor_space(V, V)
        d = V.dim
        return GradedMap(V, VV, [{j * d + k: c for (j, k), c in self.comult.get(i, {}).items()} for i in range(d)])

    @property
    def counit_map(self):
        k = SuperSpace(self.F, (("1", 0),))
        return GradedMap(self.space, k, [{0: self.counit[i]} if i in self.counit else {} for i in range(self.dim)])

    @property
    def antipode_map(self):
        if self.antipode is None:
            raise NoAntipode("no antipode recorded")
        return GradedMap(self.space, self.space, [self.antipode.get(i, {}) for i in range(self.dim)])

    def with_mode(self, mode):
        return HopfSuperAlgebra(self.space, self.mult, self.unit, self.comult, self.counit, self.antipode, mode)


# --- tensor calculus on elements -------------------------------------------

def tensor_mul(A, B, x, y):
    """Product in the super-algebra A ⊗ B of elements given as {(i, j): c}."""
    F = A.F
    out = {}
    for (i, j), c in x.items():
        pj = B.parity(j)
        for (k, l), d in y.items():
            ab = A.mult.get((i, k))
            if not ab:
                continue
            cd = B.mult.get((j, l))
            if not cd:
                continue
            s = sign(pj * A.parity(k)) * c * d
            for u, e in ab.items():
                for v, f in cd.items():
                    out[(u, v)] = out.get((u, v), 0) + s * e * f
    return F.clean(out)


def comul_pair(A, i, j):
    return tensor_mul(A, A, A.comult.get(i, {}), A.comult.get(j, {}))


def convolve(A, f, g):
    """Convolution (f * g)(a) = sum (-1)^{|a1||a2|} f(a1) g(a2) of functionals.

    Functionals are dicts {basis index: value}.  The sign is the Koszul rule
    for evaluating f ⊗ g on a1 ⊗ a2, specialised to the parity of the basis
    vectors on which f and g are nonzero.
    """
    out = {}
    for a, terms in A.comult.items():
        acc = 0
        for (j, k), c in terms.items():
            fj = f.get(j)
            if not fj:
                continue
            gk = g.get(k)
            if not gk:
                continue
            acc += sign(A.parity(j) * A.parity(k)) * c * fj * gk
        if acc:
            out[a] = acc
    return A.F.clean(out)


def evaluate(f, x, F=QQ):
    return F(sum(f.get(i, 0) * c for i, c in x.items()))


# --- verification ------------------------------------------------------------

@dataclass
class Check:
    name: str
    ok: bool
    witness: tuple = None
    lhs: str = None
    rhs: str = None

    def line(self):
        s = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        if not self.ok:
            s += f" at {self.witness}: {self.lhs} != {self.rhs}"
        return s


@dataclass
class VerifyReport:
    mode: str
    checks: list = dc_field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    @property
    def violations(self):
        return [c for c in self.checks if not c.ok]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self):
        return "\n".join([f"mode: {self.mode}"] + [c.line() for c in self.checks])


class _Checker:
    def __init__(self, report, space):
        self.report = report
        self.space = space
        self.current = None

    def begin(self, name):
        self.current = Check(name, True)
        self.report.checks.append(self.current)

    def fail(self, witness, lhs, rhs):
        if self.current.ok:
            self.current.ok = False
            self.current.witness = tuple(witness)
            self.current.lhs = lhs
            self.current.rhs = rhs


def _fmt_t(A, x, order=2):
    if not x:
        return "0"
    F = A.F
    out = []
    for key, c in sorted(x.items()):
        name = "⊗".join(A.space.name(i) for i in key)
        out.append(name if F(c) == 1 else f"{F.fmt(c)}*{name}")
    return " + ".join(out)


def _add(d, key, c):
    d[key] = d.get(key, 0) + c


def verify_algebra(R, report=None):
    report = report or VerifyReport(R.mode)
    F = R.F
    d = R.dim
    names = R.space.names
    chk = _Checker(report, R.space)
    basis = [{i: 1} for i in range(d)]

    chk.begin("multiplication is even")
    for (i, j), v in sorted(R.mult.items()):
        for k in v:
            if (R.parity(i) + R.parity(j) + R.parity(k)) % 2:
                chk.fail((names[i], names[j]), R.fmt(v), f"parity {(R.parity(i) + R.parity(j)) % 2}")
                break

    chk.begin("unit is even")
    if any(R.parity(i) for i in R.unit):
        chk.fail(("1",), R.fmt(R.unit), "even element")

    chk.begin("associativity")
    for i in range(d):
        for j in range(d):
            ij = R.mult.get((i, j), {})
            for k in range(d):
                lhs = R.mul(ij, basis[k])
                rhs = R.mul(basis[i], R.mult.get((j, k), {}))
                if lhs != rhs:
                    chk.fail((names[i], names[j], names[k]), R.fmt(lhs), R.fmt(rhs))
                    break
            if not chk.current.ok:
                break
        if not chk.current.ok:
            break

    chk.begin("unit law")
    for i in range(d):
        l = R.mul(R.unit, basis[i])
        r = R.mul(basis[i], R.unit)
        if l != basis[i] or r != basis[i]:
            chk.fail((names[i],), R.fmt(l if l != basis[i] else r), names[i])
            break

    if R.mode == SUPERCOMMUTATIVE:
        chk.begin("super-commutativity: even part central")
        for i in R.space.even():
            for j in range(d):
                a = R.mult.get((i, j), {})
                b = R.mult.get((j, i), {})
                if a != b:
                    chk.fail((names[i], names[j]), R.fmt(a), R.fmt(b))
                    break
            if not chk.current.ok:
                break
        # x^2 = 0 on R_1; on a basis this is x_i^2 = 0 and x_i x_j + x_j x_i = 0
        chk.begin("super-commutativity: odd elements square to zero")
        odd = R.space.odd()
        for a, i in enumerate(odd):
            sq = R.mult.get((i, i), {})
            if sq:
                chk.fail((names[i], names[i]), R.fmt(sq), "0")
                break
            for j in odd[a + 1:]:
                s = dict(R.mult.get((i, j), {}))
                for k, c in R.mult.get((j, i), {}).items():
                    _add(s, k, c)
                s = F.clean(s)
                if s:
                    chk.fail((names[i], names[j]), f"{R.fmt(s)} (= x y + y x)", "0")
                    break
            if not chk.current.ok:
                break
    return report


def verify(obj, mode=None):
    """Exhaustive axiom check of a super-algebra or Hopf super-algebra.

    ``mode`` defaults to the object's own mode.  Super-commutativity and the
    involutivity of the antipode are only required in supercommutative mode.
    """
    if mode is None:
        mode = obj.mode
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    report = VerifyReport(mode)
    R = obj if obj.mode == mode else _with_mode(obj, mode)
    verify_algebra(R, report)
    if isinstance(obj, HopfSuperAlgebra):
        _verify_hopf(R, report)
    return report


def _with_mode(obj, mode):
    if isinstance(obj, HopfSuperAlgebra):
        return obj.with_mode(mode)
    return SuperAlgebra(obj.space, obj.mult, obj.unit, mode)


def _verify_hopf(A, report):
    F = A.F
    d = A.dim
    names = A.space.names
    chk = _Checker(report, A.space)
    basis = [{i: 1} for i in range(d)]

    chk.begin("comultiplication is even")
    for i, v in sorted(A.comult.items()):
        for j, k in v:
            if (A.parity(i) + A.parity(j) + A.parity(k)) % 2:
                chk.fail((names[i],), _fmt_t(A, v), f"parity {A.parity(i)}")
                break
        if not chk.current.ok:
            break

    chk.begin("counit is even")
    for i in A.counit:
        if A.parity(i):
            chk.fail((names[i],), F.fmt(A.counit[i]), "0")
            break

    chk.begin("coassociativity")
    for i in range(d):
        lhs, rhs = {}, {}
        for (j, k), c in A.comult.get(i, {}).items():
            for (u, v), e in A.comult.get(j, {}).items():
                _add(lhs, (u, v, k), c * e)
            for (u, v), e in A.comult.get(k, {}).items():
                _add(rhs, (j, u, v), c * e)
        lhs, rhs = F.clean(lhs), F.clean(rhs)
        if lhs != rhs:
            chk.fail((names[i],), _fmt_t(A, lhs), _fmt_t(A, rhs))
            break

    chk.begin("counit law")
    for i in range(d):
        left, right = {}, {}
        for (j, k), c in A.comult.get(i, {}).items():
            _add(left, k, c * A.counit.get(j, 0))
            _add(right, j, c * A.counit.get(k, 0))
        left, right = F.clean(left), F.clean(right)
        if left != basis[i] or right != basis[i]:
            chk.fail((names[i],), A.fmt(left if left != basis[i] else right), names[i])
            break

    chk.begin("comultiplication is an algebra map")
    unit_t = {(i, j): a * b for i, a in A.unit.items() for j, b in A.unit.items()}
    if A.comul(A.unit) != F.clean(unit_t):
        chk.fail(("1",), _fmt_t(A, A.comul(A.unit)), "1⊗1")
    else:
        for i in range(d):
            for j in range(d):
                lhs = A.comul(A.mult.get((i, j), {}))
                rhs = comul_pair(A, i, j)
                if lhs != rhs:
                    chk.fail((names[i], names[j]), _fmt_t(A, lhs), _fmt_t(A, rhs))
                    break
            if not chk.current.ok:
                break

    chk.begin("counit is an algebra map")
    if A.eps(A.unit) != 1:
        chk.fail(("1",), F.fmt(A.eps(A.unit)), "1")
    else:
        for i in range(d):
            for j in range(d):
                lhs = A.eps(A.mult.get((i, j), {}))
                rhs = F(A.counit.get(i, 0) * A.counit.get(j, 0))
                if lhs != rhs:
                    chk.fail((names[i], names[j]), F.fmt(lhs), F.fmt(rhs))
                    break
            if not chk.current.ok:
                break

    if A.antipode is None:
        return
    chk.begin("antipode is even")
    for i, v in sorted(A.antipode.items()):
        if any((A.parity(i) + A.parity(j)) % 2 for j in v):
            chk.fail((names[i],), A.fmt(v), f"parity {A.parity(i)}")
            break

    for label, side in (("antipode: s * id = unit ∘ counit", 0), ("antipode: id * s = unit ∘ counit", 1)):
        chk.begin(label)
        for i in range(d):
            acc = {}
            for (j, k), c in A.comult.get(i, {}).items():
                if side == 0:
                    prod = A.mul(A.s({j: 1}), {k: 1})
                else:
                    prod = A.mul({j: 1}, A.s({k: 1}))
                for t, e in prod.items():
                    _add(acc, t, c * e)
            acc = F.clean(acc)
            want = F.clean({t: A.counit.get(i, 0) * u for t, u in A.unit.items()})
            if acc != want:
                chk.fail((names[i],), A.fmt(acc), A.fmt(want))
                break

    if A.mode == SUPERCOMMUTATIVE:
        chk.begin("antipode is an involution")
        for i in range(d):
            ss = A.s(A.s({i: 1}))
            if ss != basis[i]:
                chk.fail((names[i],), A.fmt(ss), names[i])
                break
    else:
        chk.begin("antipode is bijective")
        if A.antipode_map.rank() != d:
            chk.fail(("s",), f"rank {A.antipode_map.rank()}", f"rank {d}")


# --- constructors ------------------------------------------------------------

def monomial_indices(n):
    """Strictly increasing sequences in 1..n, ordered by length then lexicographically."""
    out = []
    for r in range(n + 1):
        out.extend(itertools.combinations(range(1, n + 1), r))
    return out


def wedge_sign(I, J):
    """Sign and support of w_I w_J in an exterior algebra (None if zero)."""
    if set(I) & set(J):
        return 0, None
    seq = list(I) + list(J)
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return sign(inv), tuple(sorted(seq))


def monomial_name(I, letter="w"):
    return "".join(f"{letter}{i}" for i in I) if I else "1"


def exterior_algebra(n, field=QQ, letter="w"):
    idx = monomial_indices(n)
    pos = {I: a for a, I in enumerate(idx)}
    space = SuperSpace(field, tuple((monomial_name(I, letter), len(I) % 2) for I in idx))
    mult = {}
    for a, I in enumerate(idx):
        for b, J in enumerate(idx):
            s, K = wedge_sign(I, J)
            if s:
                mult[(a, b)] = {pos[K]: s}
    return SuperAlgebra(space, mult, {0: 1}), idx


def exterior_hopf(n, field=QQ):
    """∧(k^n) with every w_i an odd primitive."""
    if n < 0:
        raise ValueError("n must be non-negative")
    R, idx = exterior_algebra(n, field)
    pos = {I: a for a, I in enumerate(idx)}
    comult = {0: {(0, 0): 1}}
    gens = {}
    for i in range(1, n + 1):
        gens[i] = {(pos[(i,)], 0): 1, (0, pos[(i,)]): 1}
    for a, I in enumerate(idx):
        if not I:
            continue
        x = gens[I[0]]
        for i in I[1:]:
            x = tensor_mul(R, R, x, gens[i])
        comult[a] = x
    counit = {0: 1}
    antipode = {a: {a: sign(len(I))} for a, I in enumerate(idx)}
    return HopfSuperAlgebra(R.space, R.mult, R.unit, comult, counit, antipode)


def group_hopf(orders, field=QQ):
    """Group algebra of Z/n1 × ... × Z/nk (purely even, g grouplike)."""
    orders = tuple(orders)
    if any(n < 1 for n in orders):
        raise ValueError("cyclic orders must be positive")
    elems = list(itertools.product(*[range(n) for n in orders]))
    pos = {g: a for a, g in enumerate(elems)}
    if orders == (2,):
        names = ["e", "sigma"]
    else:
        names = ["e" if not any(g) else "g" + "_".join(map(str, g)) for g in elems]
    space = SuperSpace(field, tuple((nm, 0) for nm in names))

    def add(g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, orders))

    def neg(g):
        return tuple((-a) % n for a, n in zip(g, orders))

    mult = {(pos[g], pos[h]): {pos[add(g, h)]: 1} for g in elems for h in elems}
    comult = {pos[g]: {(pos[g], pos[g]): 1} for g in elems}
    counit = {pos[g]: 1 for g in elems}
    antipode = {pos[g]: {pos[neg(g)]: 1} for g in elems}
    return HopfSuperAlgebra(space, mult, {0: 1}, comult, counit, antipode)


def idempotent_monoid_bialgebra(field=QQ):
    """Bialgebra of the monoid {1, x} with x^2 = x; it has no antipode."""
    space = SuperSpace(field, (("1", 0), ("x", 0)))
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}, (1, 1): {1: 1}}
    comult = {0: {(0, 0): 1}, 1: {(1, 1): 1}}
    return HopfSuperAlgebra(space, mult, {0: 1}, comult, {0: 1, 1: 1}, None)


def tensor_algebra(A, B):
    if A.F != B.F:
        raise ValueError(f"field mismatch: {A.F} vs {B.F}")
    dB = B.dim
    space = tensor_space(A.space, B.space)
    mult = {}
    for i in range(A.dim):
        for j in range(dB):
            for k in range(A.dim):
                for l in range(dB):
                    p = tensor_mul(A, B, {(i, j): 1}, {(k, l): 1})
                    if p:
                        mult[(i * dB + j, k * dB + l)] = {u * dB + v: c for (u, v), c in p.items()}
    unit = {i * dB + j: a * b for i, a in A.unit.items() for j, b in B.unit.items()}
    mode = SUPERCOMMUTATIVE if A.mode == B.mode == SUPERCOMMUTATIVE else NONCOMMUTATIVE
    return SuperAlgebra(space, mult, unit, mode)


def tensor_hopf(A, B):
    R = tensor_algebra(A, B)
    dB = B.dim
    comult = {}
    for i in range(A.dim):
        for j in range(dB):
            out = {}
            for (a1, a2), c in A.comult.get(i, {}).items():
                for (b1, b2), e in B.comult.get(j, {}).items():
                    s = sign(A.parity(a2) * B.parity(b1))
                    _add(out, (a1 * dB + b1, a2 * dB + b2), s * c * e)
            comult[i * dB + j] = out
    counit = {i * dB + j: a * b for i, a in A.counit.items() for j, b in B.counit.items()}
    antipode = None
    if A.antipode is not None and B.antipode is not None:
        antipode = {}
        for i in range(A.dim):
            for j in range(dB):
                antipode[i * dB + j] = {
                    u * dB + v: a * b for u, a in A.antipode.get(i, {}).items() for v, b in B.antipode.get(j, {}).items()
                }
    return HopfSuperAlgebra(R.space, R.mult, R.unit, comult, counit, antipode, R.mode)


def dual_hopf(A):
    """The dual Hopf super-algebra A* on the dual basis.

    Pairing convention <f ⊗ g, a ⊗ b> = (-1)^{|g||a|} f(a) g(b); the product
    is convolution and the coproduct is the transpose of multiplication.
    """
    space = SuperSpace(A.F, tuple((f"{n}*", p) for n, p in A.space.basis))
    mult = {}
    for k, terms in A.comult.items():
        for (i, j), c in terms.items():
            mult.setdefault((i, j), {})
            _add(mult[(i, j)], k, sign(A.parity(i) * A.parity(j)) * c)
    comult = {}
    for (i, j), v in A.mult.items():
        for k, c in v.items():
            comult.setdefault(k, {})
            _add(comult[k], (i, j), sign(A.parity(i) * A.parity(j)) * c)
    unit = dict(A.counit)
    counit = dict(A.unit)
    antipode = None
    if A.antipode is not None:
        antipode = {}
        for j, v in A.antipode.items():
            for k, c in v.items():
                antipode.setdefault(k, {})
                _add(antipode[k], j, c)
    return HopfSuperAlgebra(space, mult, unit, comult, counit, antipode, BIALGEBRA)


# --- ideals and quotients ----------------------------------------------------

def ideal_span(R, gens):
    """Row-reduced basis of the two-sided ideal generated by ``gens``."""
    F, d = R.F, R.dim
    basis = [{i: 1} for i in range(d)]
    rows = []
    for g in gens:
        rows.append([g.get(i, 0) for i in range(d)])
    Rr, piv = linalg.rref(rows, F, d) if rows else ([], [])
    frontier = [dict((i, x) for i, x in enumerate(r) if x != 0) for r in Rr]
    while frontier:
        new = []
        for v in frontier:
            for b in basis:
                for w in (R.mul(b, v), R.mul(v, b)):
                    vec = [w.get(i, 0) for i in range(d)]
                    red = linalg.reduce_vector(Rr, piv, vec, F)
                    if any(red):
                        Rr, piv = linalg.rref(Rr + [red], F, d)
                        new.append({i: x for i, x in enumerate(red) if x != 0})
        frontier = new
    return Rr, piv


def _quotient_data(R, Rr, piv):
    F, d = R.F, R.dim
    comp = linalg.complement(piv, d)
    pos = {i: a for a, i in enumerate(comp)}

    def proj(x):
        vec = [x.get(i, 0) for i in range(d)]
        red = linalg.reduce_vector(Rr, piv, vec, F)
        return F.clean({pos[i]: red[i] for i in comp if red[i] != 0})

    space = SuperSpace(F, tuple(R.space.basis[i] for i in comp))
    mult = {}
    for a, i in enumerate(comp):
        for b, j in enumerate(comp):
            p = proj(R.mult.get((i, j), {}))
            if p:
                mult[(a, b)] = p
    unit = proj(R.unit)
    pi = GradedMap(R.space, space, [proj({i: 1}) for i in range(d)])
    return space, mult, unit, comp, proj, pi


def _check_homogeneous(R, gens):
    for g in gens:
        if R.space.vector_parity(R.F.clean(g)) is None:
            raise ValueError(f"generator {R.fmt(g)} is not homogeneous")


def quotient_algebra(R, gens):
    """R/(gens) for a super-algebra; returns ``(quotient, projection)``."""
    _check_homogeneous(R, gens)
    Rr, piv = ideal_span(R, gens)
    space, mult, unit, _, _, pi = _quotient_data(R, Rr, piv)
    return SuperAlgebra(space, mult, unit, R.mode), pi


class NotACoideal(ValueError):
    def __init__(self, msg, witness):
        super().__init__(msg)
        self.witness = witness


def quotient_hopf(A, gens):
    """A/(gens) for a Hopf ideal; returns ``(quotient, projection)``.

    The quotient basis is the complement of the pivot columns of the
    ideal's reduced echelon form, in the input basis order.
    """
    _check_homogeneous(A, gens)
    F = A.F
    Rr, piv = ideal_span(A, gens)
    space, mult, unit, comp, proj, pi = _quotient_data(A, Rr, piv)
    ideal = [{i: x for i, x in enumerate(r) if x != 0} for r in Rr]

    def proj2(t):
        out = {}
        for (j, k), c in t.items():
            for u, a in proj({j: 1}).items():
                for v, b in proj({k: 1}).items():
                    _add(out, (u, v), c * a * b)
        return F.clean(out)

    for v in ideal:
        if proj2(A.comul(v)):
            raise NotACoideal(f"Δ({A.fmt(v)}) is not in I⊗A + A⊗I", A.fmt(v))
        if A.eps(v) != 0:
            raise NotACoideal(f"ε({A.fmt(v)}) != 0", A.fmt(v))
        if A.antipode is not None and proj(A.s(v)):
            raise NotACoideal(f"s({A.fmt(v)}) is not in the ideal", A.fmt(v))
    comult = {a: proj2(A.comult.get(i, {})) for a, i in enumerate(comp)}
    counit = {a: A.counit.get(i, 0) for a, i in enumerate(comp)}
    antipode = None
    if A.antipode is not None:
        antipode = {a: proj(A.antipode.get(i, {})) for a, i in enumerate(comp)}
    Q = HopfSuperAlgebra(space, mult, unit, comult, counit, antipode, A.mode)
    return Q, pi


@dataclass
class PurelyEvenQuotient:
    source: HopfSuperAlgebra
    H: HopfSuperAlgebra
    projection: GradedMap

    def pi(self, x):
        return self.projection.apply(x)


def purely_even_quotient(A):
    """H = A/(A_1), the largest purely even quotient."""
    gens = [{i: 1} for i in A.space.odd()]
    if isinstance(A, HopfSuperAlgebra):
        H, pi = quotient_hopf(A, gens)
    else:
        H, pi = quotient_algebra(A, gens)
    return PurelyEvenQuotient(A, H, pi)


# --- derived data ------------------------------------------------------------

def antipode_solve(A):
    """Solve for the convolution inverse of the identity."""
    F, d = A.F, A.dim
    var = lambda l, j: l * d + j  # coefficient of a_l in s(a_j)
    sys = linalg.LinearSystem(d * d, F)
    for a in range(d):
        want = {t: A.counit.get(a, 0) * u for t, u in A.unit.items()}
        left, right = {}, {}
        for (j, k), c in A.comult.get(a, {}).items():
            for l in range(d):
                for t, m in A.mult.get((l, k), {}).items():
                    left.setdefault(t, {})
                    _add(left[t], var(l, j), c * m)
                for t, m in A.mult.get((j, l), {}).items():
                    right.setdefault(t, {})
                    _add(right[t], var(l, k), c * m)
        for t in range(d):
            sys.add(left.get(t, {}), want.get(t, 0))
            sys.add(right.get(t, {}), want.get(t, 0))
    x, null = sys.solve()
    if x is None:
        raise NoAntipode("the convolution-inverse system is inconsistent")
    if null:
        raise NoAntipode("convolution inverse is not unique (structure is not a bialgebra)")
    cols = [{l: x[var(l, j)] for l in range(d) if x[var(l, j)] != 0} for j in range(d)]
    return GradedMap(A.space, A.space, cols)


def _primitive_functionals(A, parity):
    F, d = A.F, A.dim
    sys = linalg.LinearSystem(d, F)
    for i in range(d):
        if A.parity(i) != parity:
            sys.add({i: 1})
    for a in range(d):
        ea = A.counit.get(a, 0)
        for b in range(d):
            eq = {}
            for k, c in A.mult.get((a, b), {}).items():
                _add(eq, k, c)
            eb = A.counit.get(b, 0)
            if eb:
                _add(eq, a, -eb)
            if ea:
                _add(eq, b, -sign(A.parity(a) * parity) * ea)
            sys.add(eq)
    _, null = sys.solve()
    return [{i: x for i, x in enumerate(v) if x != 0} for v in null]


def odd_primitive_functionals(A):
    """Basis of {x in A*: x(ab) = x(a)ε(b) + (-1)^{|a|} ε(a)x(b), x(A_0) = 0}."""
    return _primitive_functionals(A, 1)


def even_primitive_functionals(A):
    return _primitive_functionals(A, 0)


def _eigenvalues(T, F):
    d = len(T)
    if F.p:
        vals = []
        for lam in range(F.p):
            M = [[T[i][j] - (lam if i == j else 0) for j in range(d)] for i in range(d)]
            if linalg.rank(M, F, d) < d:
                vals.append(lam)
        return vals
    import sympy

    x = sympy.Symbol("x")
    M = sympy.Matrix(d, d, lambda i, j: sympy.Rational(T[i][j].numerator, T[i][j].denominator))
    poly = sympy.Poly(M.charpoly(x).as_expr(), x, domain="QQ")
    return [F(sympy.Rational(r).p) / sympy.Rational(r).q for r in poly.ground_roots()]


GROUPLIKE_DIM_CAP = 64


def grouplikes(A):
    """All grouplike elements g (Δg = g⊗g, ε(g) = 1), in a canonical order.

    A grouplike g satisfies (a^i ⊗ id)Δ(g) = g_i g for every dual basis
    functional a^i.  Starting from the whole space we intersect with the
    eigenspaces of the operators T_i = (a^i ⊗ id)∘Δ; the common eigenspaces
    that survive are exactly the grouplike lines.
    """
    F, d = A.F, A.dim
    if d > GROUPLIKE_DIM_CAP:
        raise ValueError(f"grouplike search is capped at dimension {GROUPLIKE_DIM_CAP}")
    ops = []
    for i in range(d):
        T = [[F.zero] * d for _ in range(d)]
        for a, terms in A.comult.items():
            for (j, k), c in terms.items():
                if j == i:
                    T[k][a] = F(T[k][a] + c)
        ops.append(T)
    spaces = [[[F.one if r == c else F.zero for r in range(d)] for c in range(d)]]
    for T in ops:
        if all(len(V) <= 1 for V in spaces):
            break
        lams = _eigenvalues(T, F)
        refined = []
        for V in spaces:
            if len(V) <= 1:
                refined.append(V)
                continue
            TV = [[sum(T[r][k] * v[k] for k in range(d)) for r in range(d)] for v in V]
            for lam in lams:
                M = [[F(TV[c][r] - lam * V[c][r]) for c in range(len(V))] for r in range(d)]
                ns = linalg.nullspace(M, F, len(V))
                if ns:
                    refined.append([[F(sum(c[m] * V[m][r] for m in range(len(V)))) for r in range(d)] for c in ns])
        spaces = refined
    out = []
    for V in spaces:
        if len(V) != 1:
            continue
        v = {i: x for i, x in enumerate(V[0]) if x != 0}
        e = A.eps(v)
        if e == 0:
            continue
        g = F.clean({i: F.div(x, e) for i, x in v.items()})
        gg = F.clean({(i, j): a * b for i, a in g.items() for j, b in g.items()})
        if A.comul(g) == gg:
            out.append(g)
    out.sort(key=lambda g: sorted(g.items()))
    return out


def is_grouplike(A, g):
    F = A.F
    gg = F.clean({(i, j): a * b for i, a in g.items() for j, b in g.items()})
    return A.comul(g) == gg and A.eps(g) == 1


def mutate(obj, table, key, value):
    """Copy of ``obj`` with one structure constant replaced.

    ``table`` is one of "mult", "comult", "counit", "antipode", "unit",
    or "rho" for a coaction bundle;
    ``key`` addresses the constant, e.g. ``((i, j), k)`` for mult.
    """
    import copy

    new = copy.copy(obj)
    F = obj.F
    if table == "mult":
        (ij, k) = key
        d = {a: dict(b) for a, b in obj.mult.items()}
        d.setdefault(ij, {})[k] = F(value)
        new.mult = {a: F.clean(b) for a, b in d.items() if F.clean(b)}
    elif table == "comult":
        (i, jk) = key
        d = {a: dict(b) for a, b in obj.comult.items()}
        d.setdefault(i, {})[jk] = F(value)
        new.comult = {a: F.clean(b) for a, b in d.items() if F.clean(b)}
    elif table == "antipode":
        (i, j) = key
        d = {a: dict(b) for a, b in obj.antipode.items()}
        d.setdefault(i, {})[j] = F(value)
        new.antipode = {a: F.clean(b) for a, b in d.items() if F.clean(b)}
    elif table == "counit":
        d = dict(obj.counit)
        d[key] = F(value)
        new.counit = F.clean(d)
    elif table == "unit":
        d = dict(obj.unit)
        d[key] = F(value)
        new.unit = F.clean(d)
    elif table == "rho":
        (b, ia) = key
        d = {a: dict(v) for a, v in obj.rho.items()}
        d.setdefault(b, {})[ia] = F(value)
        new.rho = {a: F.clean(v) for a, v in d.items() if F.clean(v)}
    else:
        raise ValueError(f"unknown table {table!r}")
    return new


def structure_constants(obj):
    """Enumerate (table, key, value) for every nonzero structure constant."""
    out = []
    for ij, v in sorted(obj.mult.items()):
        for k, c in sorted(v.items()):
            out.append(("mult", (ij, k), c))
    if isinstance(obj, HopfSuperAlgebra):
        for i, v in sorted(obj.comult.items()):
            for jk, c in sorted(v.items()):
                out.append(("comult", (i, jk), c))
        for i, c in sorted(obj.counit.items()):
            out.append(("counit", i, c))
        if obj.antipode is not None:
            for i, v in sorted(obj.antipode.items()):
                for j, c in sorted(v.items()):
                    out.append(("antipode", (i, j), c))
    return out

"""Lie super-algebras over Q and PBW computations in U(g).

Basis letters are numbered with the even ones first, so a word is in
normal order exactly when it is non-decreasing and no odd letter repeats.
That is the order "even coefficients on the left, odd letters strictly
increasing", which makes U(g) a free left U(g_0)-module on the monomials

    x_I = x_{i_1} ... x_{i_r},    i_1 < ... < i_r.

Rewriting uses ab = (-1)^{|a||b|} ba + [a, b] and x x = 1/2 [x, x] for odd x.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import hopf
from .hopf import Check, VerifyReport, monomial_indices
from .scalars import QQ, sign


class LieError(ValueError):
    pass


class SolverInconsistency(RuntimeError):
    """The dual-basis solve failed its own verification (a rewriting bug)."""


class LieSuperAlgebra:
    def __init__(self, even, odd, bracket, field=QQ):
        if field.p:
            raise LieError("PBW rewriting needs characteristic 0")
        self.F = field
        self.even = list(even)
        self.odd = list(odd)
        self.names = self.even + self.odd
        if len(set(self.names)) != len(self.names):
            raise LieError("duplicate basis names")
        self.s = len(self.even)
        self.n = len(self.odd)
        self._index = {nm: i for i, nm in enumerate(self.names)}
        table = {}
        for (a, b), v in bracket.items():
            i, j = self._idx(a), self._idx(b)
            table[(i, j)] = field.clean({self._idx(k): c for k, c in v.items()})
        # fill missing partners by super skew-symmetry
        for (i, j), v in list(table.items()):
            if (j, i) not in table:
                sg = -sign(self.parity(i) * self.parity(j))
                table[(j, i)] = {k: sg * c for k, c in v.items()}
        self.bracket = {k: v for k, v in table.items() if v}
        self._nf = {}

    def _idx(self, a):
        if isinstance(a, int):
            return a
        try:
            return self._index[a]
        except KeyError:
            raise LieError(f"unknown basis element {a!r}") from None

    def index(self, name):
        return self._idx(name)

    def parity(self, i):
        return 0 if i < self.s else 1

    def odd_letter(self, k):
        """Letter of the k-th odd generator, k = 1..n."""
        return self.s + k - 1

    def br(self, i, j):
        return self.bracket.get((i, j), {})

    # -- normal forms ------------------------------------------------------

    def _bad(self, w):
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if a > b or (a == b and a >= self.s):
                return p
        return None

    def normal_form(self, word):
        """Normal form of a word (tuple of letters) as {normal word: coeff}."""
        word = tuple(word)
        hit = self._nf.get(word)
        if hit is not None:
            return hit
        p = self._bad(word)
        if p is None:
            out = {word: Fraction(1)}
        else:
            a, b = word[p], word[p + 1]
            pre, post = word[:p], word[p + 2:]
            out = {}
            if a == b:
                for k, c in self.br(a, a).items():
                    _acc(out, self.normal_form(pre + (k,) + post), c / 2)
            else:
                _acc(out, self.normal_form(pre + (b, a) + post), sign(self.parity(a) * self.parity(b)))
                for k, c in self.br(a, b).items():
                    _acc(out, self.normal_form(pre + (k,) + post), c)
            out = {w: c for w, c in out.items() if c != 0}
        self._nf[word] = out
        return out

    def element(self, terms):
        """PBW element from {word: coeff}; words may use names or letters."""
        out = {}
        for w, c in terms.items():
            if isinstance(w, str):
                w = (w,) if w else ()
            w = tuple(self._idx(x) for x in w)
            _acc(out, self.normal_form(w), Fraction(c))
        return PBWElement(self, out)

    def gen(self, name):
        return self.element({(name,): 1})

    def one(self):
        return PBWElement(self, {(): Fraction(1)})

    def x(self, I):
        """x_I for a MonomialIndex I (1-based odd indices)."""
        return PBWElement(self, {tuple(self.odd_letter(k) for k in I): Fraction(1)})

    def __repr__(self):
        return f"LieSuperAlgebra(even={self.even}, odd={self.odd})"


def _acc(out, terms, c):
    for w, x in terms.items():
        out[w] = out.get(w, 0) + c * x


class PBWElement:
    """Normal-ordered element of U(g): {normal word: Fraction}."""

    __slots__ = ("g", "terms")

    def __init__(self, g, terms):
        self.g = g
        self.terms = {w: Fraction(c) for w, c in terms.items() if c != 0}

    def __add__(self, other):
        out = dict(self.terms)
        _acc(out, other.terms, 1)
        return PBWElement(self.g, out)

    def __neg__(self):
        return PBWElement(self.g, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PBWElement):
            return PBWElement(self.g, {w: c * other for w, c in self.terms.items()})
        out = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                _acc(out, self.g.normal_form(u + v), a * b)
        return PBWElement(self.g, out)

    __rmul__ = lambda self, c: PBWElement(self.g, {w: c * x for w, x in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, PBWElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def counit(self):
        return self.terms.get((), Fraction(0))

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def odd_part(self, w):
        s = self.g.s
        return tuple(k - s + 1 for k in w if k >= s)

    def even_part(self, w):
        return tuple(k for k in w if k < self.g.s)

    def by_odd(self):
        """{I: coefficient in U(g_0)} for the decomposition sum c_I x_I."""
        out = {}
        for w, c in self.terms.items():
            out.setdefault(self.odd_part(w), {})[self.even_part(w)] = c
        return {I: PBWElement(self.g, d) for I, d in out.items()}

    def is_even_only(self):
        return all(k < self.g.s for w in self.terms for k in w)

    def scalar(self):
        """The value if this is a scalar multiple of 1, else None."""
        if not self.terms:
            return Fraction(0)
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def __repr__(self):
        return f"PBWElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.g.names
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0])):
            word = "".join(_power_names(names, w)) or "1"
            if c == 1:
                parts.append(word)
            elif c == -1:
                parts.append(f"-{word}")
            else:
                parts.append(f"{QQ.fmt(c)}*{word}" if word != "1" else QQ.fmt(c))
        return " + ".join(parts).replace("+ -", "- ")


def _power_names(names, w):
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(names[w[i]] + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return ["*".join(out)] if out else []


# --- verification ----------------------------------------------------------------

def verify_lie(g):
    report = VerifyReport("lie")
    d = len(g.names)
    nm = g.names

    def vec(v):
        return " + ".join(f"{QQ.fmt(c)}*{nm[k]}" for k, c in sorted(v.items())) or "0"

    def br_vec(i, v):
        out = {}
        for k, c in v.items():
            for m, e in g.br(i, k).items():
                out[m] = out.get(m, 0) + c * e
        return {k: c for k, c in out.items() if c != 0}

    def vec_br(v, j):
        out = {}
        for k, c in v.items():
            for m, e in g.br(k, j).items():
                out[m] = out.get(m, 0) + c * e
        return {k: c for k, c in out.items() if c != 0}

    c = Check("bracket is even", True)
    report.checks.append(c)
    for (i, j), v in sorted(g.bracket.items()):
        if any((g.parity(i) + g.parity(j) + g.parity(k)) % 2 for k in v):
            c.ok, c.witness, c.lhs, c.rhs = False, (nm[i], nm[j]), vec(v), f"parity {(g.parity(i) + g.parity(j)) % 2}"
            break

    c = Check("super skew-symmetry", True)
    report.checks.append(c)
    for i in range(d):
        for j in range(d):
            a = g.br(i, j)
            b = {k: -sign(g.parity(i) * g.parity(j)) * x for k, x in g.br(j, i).items()}
            if a != b:
                c.ok, c.witness, c.lhs, c.rhs = False, (nm[i], nm[j]), vec(a), vec(b)
                break
        if not c.ok:
            break

    c = Check("super Jacobi identity", True)
    report.checks.append(c)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = br_vec(i, g.br(j, k))
                r1 = vec_br(g.br(i, j), k)
                r2 = br_vec(j, g.br(i, k))
                s = sign(g.parity(i) * g.parity(j))
                rhs = dict(r1)
                for m, x in r2.items():
                    rhs[m] = rhs.get(m, 0) + s * x
                rhs = {m: x for m, x in rhs.items() if x != 0}
                if lhs != rhs:
                    c.ok, c.witness, c.lhs, c.rhs = False, (nm[i], nm[j], nm[k]), vec(lhs), vec(rhs)
                    break
            if not c.ok:
                break
        if not c.ok:
            break
    return report


# --- ϖ, δ, α --------------------------------------------------------------------

def varpi(u):
    """The U(g_0)-coefficient of x_L in u = sum c_I x_I."""
    g = u.g
    L = tuple(range(1, g.n + 1))
    return u.by_odd().get(L, PBWElement(g, {}))


def frobenius_pairing(u, v):
    return varpi(u * v)


def delta_character(g):
    """δ(h) = trace of ad h on g_1, as {even name: value}."""
    out = {}
    for i in range(g.s):
        t = Fraction(0)
        for k in range(g.s, g.s + g.n):
            t += g.br(i, k).get(k, 0)
        out[g.names[i]] = t
    return out


def alpha_automorphism(g, u, twist=1):
    """Apply h ↦ h + twist·δ(h) to an element of U(g_0) (twist = -1 gives ᾱ)."""
    if not u.is_even_only():
        raise LieError("α is defined on U(g_0)")
    delta = delta_character(g)
    images = [g.gen(g.names[i]) + g.one() * (twist * delta[g.names[i]]) for i in range(g.s)]
    out = PBWElement(g, {})
    for w, c in u.terms.items():
        t = g.one() * c
        for k in w:
            t = t * images[k]
        out = out + t
    return out


@dataclass
class FrobeniusData:
    g: LieSuperAlgebra
    indices: list
    y: dict  # I -> PBWElement
    d: dict  # (K, J) -> coefficient in U(g_0)
    z: PBWElement
    delta: dict
    alpha: dict = dc_field(default_factory=dict)

    def pairing_matrix(self):
        return {(I, J): frobenius_pairing(self.g.x(I), self.y[J]) for I in self.indices for J in self.indices}


DUAL_BASIS_CAP = 6


def dual_basis(g, cap=DUAL_BASIS_CAP):
    """The right U(g_0)-basis y_J with ϖ(x_I y_J) = δ_{IJ}, and z = sum x_I ε(y_I).

    Writing y_J = sum_K x_K d_{KJ} and using ϖ(u c) = ϖ(u) ᾱ(c), the
    conditions become sum_K M_{IK} e_{KJ} = δ_{IJ} with M_{IK} = ϖ(x_I x_K)
    and e = ᾱ(d).  M_{IK} vanishes for |I| + |K| < n and is the scalar ±1
    at K = L∖I among |K| = n - |I|, so e is found by increasing |I|.
    """
    n = g.n
    if n > cap:
        raise LieError(f"dim g_1 = {n} exceeds the cap {cap}")
    idx = monomial_indices(n)
    L = tuple(range(1, n + 1))
    comp = {I: tuple(k for k in L if k not in I) for I in idx}
    M = {}
    for I in idx:
        for K in idx:
            if len(I) + len(K) >= n:
                M[(I, K)] = varpi(g.x(I) * g.x(K))
    zero = PBWElement(g, {})
    e = {}
    for J in idx:
        for I in sorted(idx, key=len):
            K0 = comp[I]
            lead = M[(I, K0)].scalar()
            if not lead:
                raise SolverInconsistency(f"ϖ(x_I x_(L∖I)) is not a unit scalar at I = {I}")
            rhs = g.one() if I == J else zero
            for K in idx:
                if len(K) > n - len(I):
                    rhs = rhs - M[(I, K)] * e[(K, J)]
            e[(K0, J)] = rhs * (1 / lead)
    d = {k: alpha_automorphism(g, v, +1) for k, v in e.items()}
    for k, v in d.items():
        if v.degree() > n:
            raise SolverInconsistency(f"d_{k} has filtration degree {v.degree()} > {n}")
    y = {}
    for J in idx:
        acc = zero
        for K in idx:
            if not d[(K, J)].is_zero():
                acc = acc + g.x(K) * d[(K, J)]
        y[J] = acc
    for I in idx:
        for J in idx:
            val = frobenius_pairing(g.x(I), y[J])
            want = g.one() if I == J else zero
            if val != want:
                raise SolverInconsistency(f"(x_{I}, y_{J}) = {val}, expected {want}")
    z = zero
    for I in idx:
        c = y[I].counit()
        if c:
            z = z + g.x(I) * c
    delta = delta_character(g)
    alpha = {h: g.gen(h) + g.one() * delta[h] for h in g.even}
    return FrobeniusData(g, idx, y, d, z, delta, alpha)


# --- explicit integrals --------------------------------------------------------------

class DeltaMatchError(ValueError):
    pass


def lie_of(A):
    """Lie super-algebra of a finite-dimensional Hopf super-algebra over Q.

    g_1 is the space of odd primitive functionals and g_0 the even ones;
    brackets are super-commutators under convolution.
    """
    odd = hopf.odd_primitive_functionals(A)
    even = hopf.even_primitive_functionals(A)
    fns = even + odd
    names = [f"h{i + 1}" for i in range(len(even))] + [f"x{i + 1}" for i in range(len(odd))]
    par = [0] * len(even) + [1] * len(odd)
    from . import linalg

    d = A.dim
    rows = [[f.get(i, 0) for i in range(d)] for f in fns]
    bracket = {}
    for a, fa in enumerate(fns):
        for b, fb in enumerate(fns):
            ab = hopf.convolve(A, fa, fb)
            ba = hopf.convolve(A, fb, fa)
            s = sign(par[a] * par[b])
            comm = {i: ab.get(i, 0) - s * ba.get(i, 0) for i in set(ab) | set(ba)}
            comm = {i: c for i, c in comm.items() if c != 0}
            if not comm:
                continue
            coords = linalg.coordinates([list(r) for r in rows], [comm.get(i, 0) for i in range(d)], A.F) if rows else None
            if coords is None:
                raise LieError("primitive functionals are not closed under the bracket")
            bracket[(names[a], names[b])] = {names[k]: c for k, c in enumerate(coords) if c != 0}
    g = LieSuperAlgebra(names[: len(even)], names[len(even):], bracket, A.F)
    return g, fns


def word_functional(A, fns, word):
    """<x_{w_1} ... x_{w_k}, ·> = convolution product of the letter functionals."""
    out = dict(A.counit)
    for k in reversed(word):
        out = hopf.convolve(A, fns[k], out)
    return out


def pbw_functional(A, fns, u):
    out = {}
    for w, c in u.terms.items():
        for i, x in word_functional(A, fns, w).items():
            out[i] = out.get(i, 0) + c * x
    return A.F.clean(out)


@dataclass
class ExplicitIntegral:
    phi: dict
    z: PBWElement
    frob: FrobeniusData
    delta_grouplike: object
    in_integral_space: bool = None


def explicit_integral_finite(A):
    """φ(a) = sum ψ(π(a1) δ^{-1}) <z, a2> on a finite-dimensional carrier over Q."""
    from .integrals import integral_space, same_line

    if A.F.p:
        raise LieError("the explicit formula is a characteristic-0 statement")
    g, fns = lie_of(A)
    frob = dual_basis(g)
    if any(frob.delta.values()):
        raise DeltaMatchError("nontrivial δ on a finite carrier")
    P = hopf.purely_even_quotient(A)
    H = P.H
    psi = integral_space(H, "right")[0]
    # δ = 1 in H; π(a1)·1 = π(a1)
    zf = pbw_functional(A, fns, frob.z)
    phi = {}
    for a, terms in A.comult.items():
        acc = 0
        for (j, k), c in terms.items():
            zk = zf.get(k)
            if not zk:
                continue
            pa = hopf.evaluate(psi, P.pi({j: 1}), A.F)
            acc += c * pa * zk
        if acc:
            phi[a] = acc
    phi = A.F.clean(phi)
    right = integral_space(A, "right")
    ok = bool(phi) and same_line(phi, right[0], A.F)
    return ExplicitIntegral(phi, frob.z, frob, H.one(), ok)


def explicit_integral_laurent(G):
    """The same formula on a grouplike-graded carrier, as a function on monomials."""
    g = G.lie_algebra()
    frob = dual_basis(g)
    delta = tuple(int(frob.delta[h]) for h in g.even)
    if delta != G.delta_exponent():
        raise DeltaMatchError(f"δ = {delta} does not match the carrier's {G.delta_exponent()}")
    z = frob.z

    def phi(I, m):
        acc = Fraction(0)
        for ((I1, m1), (I2, m2)), c in G.comultiply({(tuple(I), tuple(m)): 1}).items():
            if I1:
                continue  # π kills the odd ideal
            shifted = tuple(a - b for a, b in zip(m1, delta))
            if any(shifted):
                continue  # ψ picks the coefficient of t^0
            acc += c * G.pair(z, I2, m2)
        return acc

    return ExplicitIntegral(phi, z, frob, delta)


def unimodularity(g, carrier=None, window=2):
    delta = delta_character(g)
    rep = {"delta": delta, "unimodular": not any(delta.values())}
    if carrier is not None:
        from .integrals import laurent_distinguished_grouplike

        ex = explicit_integral_laurent(carrier)
        gamma = laurent_distinguished_grouplike(carrier, ex.phi, window)
        rep["gamma"] = gamma
        rep["pi_gamma_equals_delta"] = gamma == carrier.delta_exponent()
    return rep

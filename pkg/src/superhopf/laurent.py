"""Grouplike-graded Hopf super-algebras ∧(W) ⊗ k[Z^r].

Basis monomials are w_I t^m with I a strictly increasing index sequence
and m in Z^r.  The structure is

    Δ(w_j) = w_j ⊗ 1 + t^{a_j} ⊗ w_j,   Δ(t^m) = t^m ⊗ t^m,
    s(w_j) = -t^{-a_j} w_j,              s(t^m) = t^{-m},

and the algebra is super-commutative with t^m even and central.
Elements are dicts {(I, m): coeff}.
"""

import itertools
from fractions import Fraction

from .hopf import Check, VerifyReport, wedge_sign
from .scalars import QQ, sign


class CharacterDataError(ValueError):
    pass


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class GrouplikeGradedHopf:
    def __init__(self, n, r, characters, weights, field=QQ):
        characters = [tuple(int(x) for x in c) for c in characters]
        weights = [tuple(int(x) for x in a) for a in weights]
        if len(characters) != n or len(weights) != n:
            raise CharacterDataError("need one character and one weight per odd generator")
        if any(len(c) != r for c in characters) or any(len(a) != r for a in weights):
            raise CharacterDataError(f"characters and weights must lie in Z^{r}")
        if characters != weights:
            raise CharacterDataError("character χ_j must equal t^{a_j}")
        self.n, self.r, self.F = n, r, field
        self.chars = characters

    @property
    def weights(self):
        return self.chars

    def mono(self, I=(), m=None):
        m = tuple(m) if m is not None else (0,) * self.r
        return {(tuple(I), m): self.F.one}

    def parity(self, I):
        return len(I) % 2

    def clean(self, x):
        return self.F.clean(x)

    def multiply(self, x, y):
        out = {}
        for (I, m), a in x.items():
            for (J, k), b in y.items():
                s, K = wedge_sign(I, J)
                if s:
                    key = (K, _add(m, k))
                    out[key] = out.get(key, 0) + s * a * b
        return self.clean(out)

    def _tmul(self, x, y):
        out = {}
        for (a1, a2), c in x.items():
            for (b1, b2), d in y.items():
                s = sign(len(a2[0]) * len(b1[0]))
                p1 = self.multiply({a1: 1}, {b1: 1})
                p2 = self.multiply({a2: 1}, {b2: 1})
                for u, e in p1.items():
                    for v, f in p2.items():
                        out[(u, v)] = out.get((u, v), 0) + s * c * d * e * f
        return self.clean(out)

    def comultiply(self, x):
        out = {}
        zero = (0,) * self.r
        for (I, m), c in x.items():
            t = {(((), m), ((), m)): 1}
            gens = []
            for j in I:
                gens.append({(((j,), zero), ((), zero)): 1, (((), self.chars[j - 1]), ((j,), zero)): 1})
            acc = {(((), zero), ((), zero)): 1}
            for g in gens:
                acc = self._tmul(acc, g)
            acc = self._tmul(acc, t)
            for k, v in acc.items():
                out[k] = out.get(k, 0) + c * v
        return self.clean(out)

    def counit(self, x):
        return self.F(sum(c for (I, m), c in x.items() if not I))

    def antipode(self, x):
        out = {}
        for (I, m), c in x.items():
            shift = tuple(-v for v in m)
            for j in I:
                shift = tuple(a - b for a, b in zip(shift, self.chars[j - 1]))
            key = (I, shift)
            out[key] = out.get(key, 0) + sign(len(I)) * c
        return self.clean(out)

    def project_to_group(self, x):
        """π onto k[Z^r]: kill every monomial containing an odd letter."""
        return self.clean({m: c for (I, m), c in x.items() if not I})

    def monomials(self, window):
        idx = []
        for k in range(self.n + 1):
            idx.extend(itertools.combinations(range(1, self.n + 1), k))
        for I in idx:
            for m in itertools.product(range(-window, window + 1), repeat=self.r):
                yield I, m

    def verify(self, window=3):
        """Hopf axioms on every monomial with |m_i| <= window."""
        rep = VerifyReport("grouplike-graded")
        F = self.F
        zero = (0,) * self.r
        gens = [((j,), zero) for j in range(1, self.n + 1)]
        for i in range(self.r):
            e = tuple(1 if k == i else 0 for k in range(self.r))
            gens += [((), e), ((), tuple(-v for v in e))]
        checks = {name: Check(name, True) for name in (
            "coassociativity", "counit law", "comultiplication is an algebra map",
            "antipode: s * id = unit ∘ counit", "antipode: id * s = unit ∘ counit", "antipode is an involution")}
        rep.checks.extend(checks.values())

        def fail(name, mono, lhs, rhs):
            c = checks[name]
            if c.ok:
                c.ok, c.witness, c.lhs, c.rhs = False, (str(mono),), str(lhs), str(rhs)

        for I, m in self.monomials(window):
            a = {(I, m): 1}
            D = self.comultiply(a)
            l3, r3 = {}, {}
            for (u, v), c in D.items():
                for (p, q), e in self.comultiply({u: 1}).items():
                    l3[(p, q, v)] = l3.get((p, q, v), 0) + c * e
                for (p, q), e in self.comultiply({v: 1}).items():
                    r3[(u, p, q)] = r3.get((u, p, q), 0) + c * e
            if F.clean(l3) != F.clean(r3):
                fail("coassociativity", (I, m), l3, r3)
            left, right = {}, {}
            for (u, v), c in D.items():
                if not u[0]:
                    left[v] = left.get(v, 0) + c
                if not v[0]:
                    right[u] = right.get(u, 0) + c
            if F.clean(left) != a or F.clean(right) != a:
                fail("counit law", (I, m), left, right)
            for gI, gm in gens:
                lhs = self.comultiply(self.multiply({(gI, gm): 1}, a))
                rhs = self._tmul(self.comultiply({(gI, gm): 1}), D)
                if lhs != rhs:
                    fail("comultiplication is an algebra map", ((gI, gm), (I, m)), lhs, rhs)
            want = {((), zero): self.counit(a)} if self.counit(a) else {}
            sl, sr = {}, {}
            for (u, v), c in D.items():
                for k, e in self.multiply(self.antipode({u: 1}), {v: 1}).items():
                    sl[k] = sl.get(k, 0) + c * e
                for k, e in self.multiply({u: 1}, self.antipode({v: 1})).items():
                    sr[k] = sr.get(k, 0) + c * e
            if F.clean(sl) != want:
                fail("antipode: s * id = unit ∘ counit", (I, m), sl, want)
            if F.clean(sr) != want:
                fail("antipode: id * s = unit ∘ counit", (I, m), sr, want)
            if self.antipode(self.antipode(a)) != a:
                fail("antipode is an involution", (I, m), self.antipode(self.antipode(a)), a)
        return rep

    # -- Lie data ----------------------------------------------------------

    def lie_algebra(self):
        """h_1..h_r even, x_1..x_n odd, [h_i, x_j] = a_j[i] x_j, all else zero."""
        from .lie import LieSuperAlgebra

        even = [f"h{i + 1}" for i in range(self.r)] if self.r > 1 else (["h"] if self.r == 1 else [])
        odd = [f"x{j + 1}" for j in range(self.n)] if self.n > 1 else (["w"] if self.n == 1 else [])
        bracket = {}
        for i, h in enumerate(even):
            for j, x in enumerate(odd):
                if self.chars[j][i]:
                    bracket[(h, x)] = {x: self.chars[j][i]}
        return LieSuperAlgebra(even, odd, bracket, self.F)

    def delta_exponent(self):
        """δ = t^{a_1 + ... + a_n} as an exponent vector."""
        out = (0,) * self.r
        for a in self.chars:
            out = _add(out, a)
        return out

    def letter_value(self, g, k, I, m):
        """<letter k, w_I t^m>: ⟨h_i, t^m⟩ = m_i and ⟨x_j, w_j t^m⟩ = 1."""
        if k < g.s:
            return Fraction(m[k]) if not I else Fraction(0)
        j = k - g.s + 1
        return Fraction(1) if I == (j,) else Fraction(0)

    def pair(self, u, I, m):
        """<u, w_I t^m> for u in U(g), via iterated coproducts."""
        g = u.g
        total = Fraction(0)
        for w, c in u.terms.items():
            total += c * self._pair_word(g, w, (tuple(I), tuple(m)))
        return total

    def _pair_word(self, g, w, mono):
        if not w:
            return Fraction(1) if not mono[0] else Fraction(0)
        total = Fraction(0)
        for (a1, a2), c in self.comultiply({mono: 1}).items():
            v = self.letter_value(g, w[0], *a1)
            if not v:
                continue
            s = sign(len(a1[0]) * len(a2[0]))
            total += s * c * v * self._pair_word(g, w[1:], a2)
        return total


def grouplike_graded_hopf(n, r, characters, weights=None, field=QQ):
    if weights is None:
        weights = characters
    return GrouplikeGradedHopf(n, r, characters, weights, field)


def borel_carrier():
    """n = r = 1, Δ(w) = w ⊗ 1 + t ⊗ w."""
    return GrouplikeGradedHopf(1, 1, [(1,)], [(1,)])

"""Bosonization A ⋊ Z/2 of a Hopf super-algebra and of its comodule algebras.

The bosonized objects are ordinary (purely even, generally noncommutative)
algebras on A ⊗ kZ/2.  Basis order is the block a_k ⊗ e followed by the
block a_k ⊗ σ, so ``index(k, i) = k + i * dim A``.
"""

from dataclasses import dataclass

from .hopf import NONCOMMUTATIVE, HopfSuperAlgebra, SuperAlgebra, verify
from .scalars import sign
from .spaces import SuperSpace


class UnverifiedInput(ValueError):
    pass


def _smash_names(names):
    return [f"{n}⊗e" for n in names] + [f"{n}⊗σ" for n in names]


def smash_algebra(R):
    """R ⋊ Z/2 with σ a σ = (-1)^{|a|} a, carried as an ordinary algebra."""
    d = R.dim
    space = SuperSpace(R.F, tuple((n, 0) for n in _smash_names(R.space.names)))
    mult = {}
    for (a, b), v in R.mult.items():
        for i in (0, 1):
            for j in (0, 1):
                s = sign(i * R.parity(b))
                mult[(a + i * d, b + j * d)] = {k + ((i + j) % 2) * d: s * c for k, c in v.items()}
    unit = dict(R.unit)
    return SuperAlgebra(space, mult, unit, NONCOMMUTATIVE), space


@dataclass
class Bosonization:
    A: HopfSuperAlgebra
    Ahat: HopfSuperAlgebra

    def index(self, k, i):
        return k + (i % 2) * self.A.dim

    def split(self, n):
        return n % self.A.dim, n // self.A.dim

    def embed(self, x, i=0):
        """a ↦ a ⊗ σ^i on elements."""
        return {self.index(k, i): c for k, c in x.items()}

    def S(self, x):
        return self.Ahat.s(x)


def bosonize(A, check=True):
    if check:
        rep = verify(A)
        if not rep.ok:
            raise UnverifiedInput(f"input fails {rep.violations[0].name}")
    if A.antipode is None:
        raise UnverifiedInput("input has no antipode")
    d = A.dim
    R, space = smash_algebra(A)
    comult = {}
    for a, terms in A.comult.items():
        for i in (0, 1):
            out = {}
            for (b, c), x in terms.items():
                key = (b + ((i + A.parity(c)) % 2) * d, c + i * d)
                out[key] = out.get(key, 0) + x
            comult[a + i * d] = out
    counit = {}
    for a, c in A.counit.items():
        counit[a] = c
        counit[a + d] = c
    # S(a ⊗ σ^i) = (-1)^{|a|(i+1)} s(a) ⊗ σ^{i+|a|}; on even a this keeps σ grouplike
    antipode = {}
    for a, v in A.antipode.items():
        pa = A.parity(a)
        for i in (0, 1):
            shift = (i + pa) % 2
            antipode[a + i * d] = {b + shift * d: sign(pa * (i + 1)) * c for b, c in v.items()}
    Ahat = HopfSuperAlgebra(space, R.mult, R.unit, comult, counit, antipode, NONCOMMUTATIVE)
    return Bosonization(A, Ahat)


def bosonize_comodule(bundle, check=True):
    """(B̂, ρ̂) as a CoactionBundle over Â = bosonize(A).

    ρ̂(b ⊗ σ^i) = sum (b_j ⊗ σ^{i+|a_j|}) ⊗ (a_j ⊗ σ^i) for ρ(b) = sum b_j ⊗ a_j.
    """
    from .comodule import CoactionBundle, verify_bundle

    if check:
        rep = verify_bundle(bundle)
        if not rep.ok:
            raise UnverifiedInput(f"bundle fails {rep.violations[0].name}")
    bos = bosonize(bundle.A, check=check)
    B, A = bundle.B, bundle.A
    dB, dA = B.dim, A.dim
    Bhat, _ = smash_algebra(B)
    rho = {}
    for b, terms in bundle.rho.items():
        for i in (0, 1):
            out = {}
            for (bj, aj), c in terms.items():
                key = (bj + ((i + A.parity(aj)) % 2) * dB, aj + i * dA)
                out[key] = out.get(key, 0) + c
            rho[b + i * dB] = out
    return CoactionBundle(bos.Ahat, Bhat, rho), bos

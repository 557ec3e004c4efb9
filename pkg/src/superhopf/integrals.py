"""Integrals, distinguished grouplikes and their transport across bosonization.

A right integral is φ in A* with sum φ(a1) a2 = φ(a) 1, i.e. a right
A-comodule map A → k; a left one satisfies sum a1 φ(a2) = φ(a) 1.  For a
right integral the distinguished grouplike γ is defined by
sum a1 φ(a2) = φ(a) γ.  Integral spaces are one-dimensional in finite
dimension and are stored scaled so the first nonzero value is 1.
"""

from dataclasses import dataclass

from . import linalg
from .hopf import is_grouplike


class IntegralError(RuntimeError):
    pass


def _normalize(phi, F):
    if not phi:
        return phi
    lead = phi[min(phi)]
    return F.clean({i: F.div(x, lead) for i, x in phi.items()})


def integral_space(A, side="right"):
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    F, d = A.F, A.dim
    sys = linalg.LinearSystem(d, F)
    for a in range(d):
        eqs = {}
        for (j, k), c in A.comult.get(a, {}).items():
            src, out = (j, k) if side == "right" else (k, j)
            eqs.setdefault(out, {})
            eqs[out][src] = eqs[out].get(src, 0) + c
        for b, u in A.unit.items():
            eqs.setdefault(b, {})
            eqs[b][a] = eqs[b].get(a, 0) - u
        for e in eqs.values():
            sys.add(e)
    _, null = sys.solve()
    return [_normalize({i: x for i, x in enumerate(v) if x != 0}, F) for v in null]


def same_line(u, v, F):
    """u and v are nonzero multiples of each other (dict functionals)."""
    if not u or not v or set(u) != set(v):
        return False
    i = min(u)
    return all(F(u[k] * v[i]) == F(v[k] * u[i]) for k in u)


def functional_parity(A, phi):
    ps = {A.parity(i) for i in phi}
    if len(ps) == 1:
        return ps.pop()
    return None


def distinguished_grouplike(A, phi):
    """γ from a right integral φ: sum a1 φ(a2) = φ(a) γ at any a with φ(a) ≠ 0."""
    F = A.F
    a = min(phi)
    acc = {}
    for (j, k), c in A.comult.get(a, {}).items():
        if k in phi:
            acc[j] = acc.get(j, 0) + c * phi[k]
    gamma = F.clean({i: F.div(x, phi[a]) for i, x in acc.items()})
    if not is_grouplike(A, gamma):
        raise IntegralError("solved γ is not grouplike")
    # the defining identity must hold on every basis element
    for b in range(A.dim):
        acc = {}
        for (j, k), c in A.comult.get(b, {}).items():
            if k in phi:
                acc[j] = acc.get(j, 0) + c * phi[k]
        want = {i: phi.get(b, 0) * x for i, x in gamma.items()}
        if F.clean(acc) != F.clean(want):
            raise IntegralError(f"γ identity fails at {A.space.name(b)}")
    return gamma


@dataclass
class IntegralReport:
    side: str
    basis: list
    parity: object
    total: bool
    unimodular: bool
    distinguished_grouplike: dict
    left_basis: list

    @property
    def phi(self):
        return self.basis[0]

    def as_dict(self, A):
        F = A.F
        gamma = A.fmt(self.distinguished_grouplike)
        return {
            "side": self.side,
            "dim": len(self.basis),
            "integral": {A.space.name(i): F.fmt(x) for i, x in sorted(self.phi.items())},
            "parity": {0: "even", 1: "odd"}.get(self.parity, "mixed"),
            "total": self.total,
            "unimodular": self.unimodular,
            "distinguished_grouplike": "identity" if self.distinguished_grouplike == A.unit else gamma,
        }


def classify(A):
    right = integral_space(A, "right")
    left = integral_space(A, "left")
    if not right:
        raise IntegralError("zero integral space on a finite-dimensional Hopf algebra")
    phi = right[0]
    parity = functional_parity(A, phi)
    if parity is None:
        raise IntegralError("integral is not homogeneous")
    total = A.F(sum(phi.get(i, 0) * u for i, u in A.unit.items())) != 0
    unimodular = len(left) == len(right) and all(same_line(u, v, A.F) for u, v in zip(left, right))
    gamma = distinguished_grouplike(A, phi)
    return IntegralReport("right", right, parity, total, unimodular, gamma, left)


def s_dual(A, phi):
    """φ ∘ s."""
    out = {}
    for j in range(A.dim):
        for k, c in A.antipode.get(j, {}).items():
            if k in phi:
                out[j] = out.get(j, 0) + c * phi[k]
    return A.F.clean(out)


# --- bosonization transport --------------------------------------------------------

def boson_transport(bos, psi):
    """ψ ↦ ψ ⊗ ω with ω(σ^i) = δ_{i,0}."""
    return {bos.index(k, 0): x for k, x in psi.items()}


def boson_transport_inverse(bos, phi):
    """φ ↦ (a ↦ φ(a ⊗ e))."""
    d = bos.A.dim
    return {k: x for k, x in phi.items() if k < d}


# --- Laurent carriers ---------------------------------------------------------------

def laurent_integral(G):
    from .lie import explicit_integral_laurent

    return explicit_integral_laurent(G)


def verify_integral_window(G, phi, window=10, side="right"):
    """Check the integral identity on every monomial with |m_i| <= window.

    Returns the list of failing monomials (empty on success).
    """
    bad = []
    zero = (0,) * G.r
    for I, m in G.monomials(window):
        acc = {}
        for (u, v), c in G.comultiply({(I, m): 1}).items():
            src, out = (u, v) if side == "right" else (v, u)
            x = phi(*src)
            if x:
                acc[out] = acc.get(out, 0) + c * x
        acc = G.clean(acc)
        val = phi(I, m)
        want = {((), zero): val} if val else {}
        if acc != want:
            bad.append((I, m))
    return bad


def laurent_distinguished_grouplike(G, phi, window=2):
    """Exponent of γ = t^g with sum a1 φ(a2) = φ(a) γ, checked on the window."""
    gamma = None
    for I, m in G.monomials(window):
        val = phi(I, m)
        acc = {}
        for (u, v), c in G.comultiply({(I, m): 1}).items():
            x = phi(*v)
            if x:
                acc[u] = acc.get(u, 0) + c * x
        acc = G.clean(acc)
        if val:
            if len(acc) != 1:
                raise IntegralError("γ is not a monomial")
            (J, g), c = next(iter(acc.items()))
            if J or c != val:
                raise IntegralError("γ is not grouplike")
            if gamma is None:
                gamma = g
            elif gamma != g:
                raise IntegralError("γ is not constant")
        elif acc:
            raise IntegralError(f"γ identity fails at {(I, m)}")
    if gamma is None:
        raise IntegralError("φ vanishes on the window")
    return gamma


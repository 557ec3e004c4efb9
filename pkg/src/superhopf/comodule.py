"""Comodule algebras, invariants, the α- and β-maps and torsor verdicts.

A bundle is a Hopf super-algebra A, a super-algebra B and an even coaction
ρ: B → B ⊗ A stored as ``rho[b] = {(b', a): c}``.  Everything here is
finite-dimensional and decided by exact rank computations.
"""

from dataclasses import dataclass, field as dc_field

from . import linalg
from .hopf import (
    HopfSuperAlgebra,
    SuperAlgebra,
    VerifyReport,
    _Checker,
    exterior_algebra,
    purely_even_quotient,
    tensor_mul,
)
from .scalars import GF
from .spaces import GradedMap, SuperSpace, tensor_space


class CoactionBundle:
    def __init__(self, A, B, rho):
        if A.F != B.F:
            raise ValueError(f"field mismatch: {A.F} vs {B.F}")
        F = A.F
        self.A = A
        self.B = B
        self.rho = {}
        for b, v in rho.items():
            if not 0 <= b < B.dim:
                raise ValueError(f"coaction input {b} out of range")
            v = F.clean(v)
            for bj, aj in v:
                if not (0 <= bj < B.dim and 0 <= aj < A.dim):
                    raise ValueError(f"coaction output ({bj}, {aj}) out of range")
            if v:
                self.rho[b] = v

    @property
    def F(self):
        return self.A.F

    def coact(self, x):
        out = {}
        for b, c in x.items():
            for key, e in self.rho.get(b, {}).items():
                out[key] = out.get(key, 0) + c * e
        return self.F.clean(out)

    @property
    def rho_map(self):
        BA = tensor_space(self.B.space, self.A.space)
        dA = self.A.dim
        return GradedMap(self.B.space, BA, [{i * dA + j: c for (i, j), c in self.rho.get(b, {}).items()} for b in range(self.B.dim)])

    def __repr__(self):
        return f"CoactionBundle(dim A={self.A.dim}, dim B={self.B.dim}, field={self.F})"


def regular_bundle(A):
    """B = A coacting on itself through Δ."""
    B = SuperAlgebra(A.space, A.mult, A.unit, A.mode)
    return CoactionBundle(A, B, dict(A.comult))


def trivial_bundle(A, B):
    """ρ(b) = b ⊗ 1."""
    one = A.unit
    return CoactionBundle(A, B, {b: {(b, i): c for i, c in one.items()} for b in range(B.dim)})


def verify_bundle(bundle):
    A, B, F = bundle.A, bundle.B, bundle.F
    report = VerifyReport("coaction")
    chk = _Checker(report, B.space)
    names = B.space.names
    dB = B.dim

    def fmt2(t):
        if not t:
            return "0"
        return " + ".join(
            (f"{F.fmt(c)}*" if c != 1 else "") + f"{B.space.name(i)}⊗{A.space.name(j)}" for (i, j), c in sorted(t.items())
        )

    chk.begin("coaction is even")
    for b, v in sorted(bundle.rho.items()):
        if any((B.parity(b) + B.parity(i) + A.parity(j)) % 2 for i, j in v):
            chk.fail((names[b],), fmt2(v), f"parity {B.parity(b)}")
            break

    chk.begin("coaction is unital")
    one = F.clean({(i, j): a * c for i, a in B.unit.items() for j, c in A.unit.items()})
    if bundle.coact(B.unit) != one:
        chk.fail(("1",), fmt2(bundle.coact(B.unit)), fmt2(one))

    chk.begin("coaction is multiplicative")
    for i in range(dB):
        for j in range(dB):
            lhs = bundle.coact(B.mult.get((i, j), {}))
            rhs = tensor_mul(B, A, bundle.rho.get(i, {}), bundle.rho.get(j, {}))
            if lhs != rhs:
                chk.fail((names[i], names[j]), fmt2(lhs), fmt2(rhs))
                break
        if not chk.current.ok:
            break

    chk.begin("coaction is coassociative")
    for b in range(dB):
        lhs, rhs = {}, {}
        for (i, j), c in bundle.rho.get(b, {}).items():
            for (u, v), e in bundle.rho.get(i, {}).items():
                lhs[(u, v, j)] = lhs.get((u, v, j), 0) + c * e
            for (u, v), e in A.comult.get(j, {}).items():
                rhs[(i, u, v)] = rhs.get((i, u, v), 0) + c * e
        lhs, rhs = F.clean(lhs), F.clean(rhs)
        if lhs != rhs:
            chk.fail((names[b],), str(sorted(lhs.items())), str(sorted(rhs.items())))
            break

    chk.begin("coaction counit law")
    for b in range(dB):
        out = {}
        for (i, j), c in bundle.rho.get(b, {}).items():
            out[i] = out.get(i, 0) + c * A.counit.get(j, 0)
        out = F.clean(out)
        if out != {b: 1}:
            chk.fail((names[b],), B.fmt(out), names[b])
            break
    return report


# --- invariants ----------------------------------------------------------------

@dataclass
class InvariantSubalgebra:
    C: SuperAlgebra
    basis: list  # vectors of B spanning C, in C's basis order

    @property
    def dim(self):
        return self.C.dim

    def include(self, x):
        out = {}
        for k, c in x.items():
            for i, e in self.basis[k].items():
                out[i] = out.get(i, 0) + c * e
        return self.C.F.clean(out)


class ClosureError(ValueError):
    pass


def _subalgebra(B, vectors, names=None):
    """Super-subalgebra of B spanned by homogeneous ``vectors``."""
    F, d = B.F, B.dim
    if names is None:
        names = []
        for v in vectors:
            n = B.fmt(v)
            names.append(n if n not in names else f"{n}#{len(names)}")
    parities = []
    for v in vectors:
        p = B.space.vector_parity(v)
        if p is None:
            raise ClosureError(f"{B.fmt(v)} is not homogeneous")
        parities.append(p)
    space = SuperSpace(F, tuple(zip(names, parities)))

    def coords(x):
        sol = linalg.coordinates([[v.get(i, 0) for i in range(d)] for v in vectors], [x.get(i, 0) for i in range(d)], F)
        if sol is None:
            raise ClosureError(f"{B.fmt(x)} leaves the subspace")
        return {k: c for k, c in enumerate(sol) if c != 0}

    mult = {}
    for a, u in enumerate(vectors):
        for b, v in enumerate(vectors):
            p = coords(B.mul(u, v))
            if p:
                mult[(a, b)] = p
    unit = coords(B.unit)
    return SuperAlgebra(space, mult, unit, B.mode)


def _homogeneous_basis(space, vectors, F):
    """Split a basis of a graded subspace into homogeneous vectors (RREF per parity)."""
    d = space.dim
    out = []
    for p in (0, 1):
        rows = [[v.get(i, 0) if space.parity(i) == p else 0 for i in range(d)] for v in vectors]
        R, _ = linalg.rref(rows, F, d) if rows else ([], [])
        out.extend({i: x for i, x in enumerate(r) if x != 0} for r in R)
    out.sort(key=lambda v: min(v))
    return out


def invariants(bundle):
    """C = {b : ρ(b) = b ⊗ 1} with its multiplication table."""
    A, B, F = bundle.A, bundle.B, bundle.F
    dB, dA = B.dim, A.dim
    rows = {}
    for b in range(dB):
        col = dict((i * dA + j, c) for (i, j), c in bundle.rho.get(b, {}).items())
        for j, c in A.unit.items():
            col[b * dA + j] = col.get(b * dA + j, 0) - c
        for r, c in col.items():
            rows.setdefault(r, [0] * dB)[b] = c
    M = list(rows.values()) or [[0] * dB]
    ns = linalg.nullspace(M, F, dB)
    vecs = _homogeneous_basis(B.space, [{i: x for i, x in enumerate(v) if x != 0} for v in ns], F)
    C = _subalgebra(B, vecs)
    return InvariantSubalgebra(C, vecs)


# --- α and β -------------------------------------------------------------------

def alpha_map(bundle):
    """a ⊗ b ↦ a ρ(b) = sum a b_j ⊗ a_j, as a map B ⊗ B → B ⊗ A."""
    B, A = bundle.B, bundle.A
    dB, dA = B.dim, A.dim
    cols = []
    for a in range(dB):
        for b in range(dB):
            col = {}
            for (bj, aj), c in bundle.rho.get(b, {}).items():
                for k, e in B.mult.get((a, bj), {}).items():
                    key = k * dA + aj
                    col[key] = col.get(key, 0) + c * e
            cols.append(col)
    return GradedMap(tensor_space(B.space, B.space), tensor_space(B.space, A.space), cols)


def _rank_and_cokernel(M):
    """Rank of a GradedMap and (if not surjective) a target vector outside the image."""
    F = M.field
    m = M.target.dim
    R, piv = linalg.rref([[c.get(i, 0) for i in range(m)] for c in M.cols], F, m)
    rank = len(piv)
    witness = None
    if rank < m:
        free = linalg.complement(piv, m)[0]
        witness = {free: 1}
    return rank, witness


def strongly_free(bundle):
    rank, _ = _rank_and_cokernel(alpha_map(bundle))
    return rank == bundle.B.dim * bundle.A.dim


def freeness(bundle):
    """Freeness of the action.  In finite dimension it agrees with strong freeness."""
    if not isinstance(bundle.A, HopfSuperAlgebra):
        return "unknown"
    return strongly_free(bundle)


@dataclass
class RelativeTensor:
    """B ⊗_C B presented as B ⊗ B modulo the balance relations."""

    space: SuperSpace  # quotient, basis = surviving B⊗B basis vectors
    relations: list
    pivots: list
    kept: list  # B⊗B indices representing the quotient basis

    @property
    def dim(self):
        return self.space.dim


def relative_tensor(B, inv):
    F, d = B.F, B.dim
    BB = tensor_space(B.space, B.space)
    C_vecs = inv.basis
    unit = F.clean(B.unit)
    rows = []
    for c in C_vecs:
        if c == unit:
            continue
        for b in range(d):
            bc = B.mul({b: 1}, c)
            for b2 in range(d):
                cb2 = B.mul(c, {b2: 1})
                row = [0] * (d * d)
                for k, x in bc.items():
                    row[k * d + b2] += x
                for k, x in cb2.items():
                    row[b * d + k] -= x
                if any(row):
                    rows.append(row)
    R, piv = linalg.rref(rows, F, d * d) if rows else ([], [])
    kept = linalg.complement(piv, d * d)
    space = SuperSpace(F, tuple(BB.basis[i] for i in kept))
    return RelativeTensor(space, R, piv, kept)


@dataclass
class BetaResult:
    rel: RelativeTensor
    matrix: GradedMap
    rank: int
    surjective: bool
    bijective: bool
    cokernel_witness: dict = None


class WellDefinednessError(ValueError):
    pass


def beta_map(bundle, inv=None):
    B, A = bundle.B, bundle.A
    if inv is None:
        inv = invariants(bundle)
    rel = relative_tensor(B, inv)
    alpha = alpha_map(bundle)
    for r in rel.relations:
        img = alpha.apply({i: x for i, x in enumerate(r) if x != 0})
        if img:
            raise WellDefinednessError("a balance relation has nonzero image")
    beta = GradedMap(rel.space, alpha.target, [alpha.cols[i] for i in rel.kept])
    rank, wit = _rank_and_cokernel(beta)
    tgt = B.dim * A.dim
    return BetaResult(rel, beta, rank, rank == tgt, rank == tgt == rel.dim, wit)


# --- module-theoretic properties of B over C ------------------------------------

def _act(B, c, b):
    return B.mul(c, b)


def _c_generators(B, inv):
    """Greedy generating set of B as a left C-module."""
    F, d = B.F, B.dim
    gens, rows = [], []
    R, piv = [], []
    for b in range(d):
        vec = [0] * d
        vec[b] = 1
        if R and linalg.in_span(R, piv, vec, F):
            continue
        gens.append(b)
        for c in inv.basis:
            x = _act(B, c, {b: 1})
            rows.append([x.get(i, 0) for i in range(d)])
        R, piv = linalg.rref(rows, F, d)
        if len(piv) == d:
            break
    return gens


def projective_over(B, inv):
    """Does the cover C^s → B, (c_k) ↦ sum c_k g_k split C-linearly?

    Unknowns are the C-coordinates of a section σ(b) = (σ_k(b))_k expanded
    in the C basis.  Conditions: σ(c b) = c σ(b) for basis c, b and
    sum_k σ_k(b) g_k = b.
    """
    C, F, d = inv.C, B.F, B.dim
    gens = _c_generators(B, inv)
    s, m = len(gens), C.dim
    var = lambda b, k, u: (b * s + k) * m + u
    sys = linalg.LinearSystem(d * s * m, F)
    # products inside C in coordinates
    for cu in range(m):
        cvec = inv.basis[cu]
        for b in range(d):
            cb = B.mul(cvec, {b: 1})
            for k in range(s):
                # σ_k(c b) - c σ_k(b) = 0 in C, coordinate by coordinate
                eqs = {}
                for b2, x in cb.items():
                    for u in range(m):
                        eqs.setdefault(u, {})
                        eqs[u][var(b2, k, u)] = eqs[u].get(var(b2, k, u), 0) + x
                for u in range(m):
                    for w, y in C.mult.get((cu, u), {}).items():
                        eqs.setdefault(w, {})
                        eqs[w][var(b, k, u)] = eqs[w].get(var(b, k, u), 0) - y
                for e in eqs.values():
                    sys.add(e)
    for b in range(d):
        total = {}
        for k, g in enumerate(gens):
            for u in range(m):
                img = B.mul(inv.basis[u], {g: 1})
                for i, x in img.items():
                    total.setdefault(i, {})
                    total[i][var(b, k, u)] = total[i].get(var(b, k, u), 0) + x
        for i in range(d):
            sys.add(total.get(i, {}), 1 if i == b else 0)
    x, _ = sys.solve()
    return x is not None, gens


def faithful_over(B, inv):
    """Annihilator {c in C : cB = 0} is zero."""
    F, d, m = B.F, B.dim, inv.C.dim
    rows = {}
    for u in range(m):
        for b in range(d):
            for i, x in B.mul(inv.basis[u], {b: 1}).items():
                rows.setdefault((b, i), [0] * m)[u] += x
    M = list(rows.values()) or [[0] * m]
    ann = linalg.nullspace(M, F, m)
    return not ann, ([{k: x for k, x in enumerate(ann[0]) if x != 0}] if ann else [])


def trace_ideal_is_whole(B, inv):
    """Image of all C-linear maps B → C spans C (B is a generator)."""
    C, F, d, m = inv.C, B.F, B.dim, inv.C.dim
    var = lambda b, u: b * m + u
    sys = linalg.LinearSystem(d * m, F)
    for cu in range(m):
        for b in range(d):
            cb = B.mul(inv.basis[cu], {b: 1})
            eqs = {}
            for b2, x in cb.items():
                for u in range(m):
                    eqs.setdefault(u, {})
                    eqs[u][var(b2, u)] = eqs[u].get(var(b2, u), 0) + x
            for u in range(m):
                for w, y in C.mult.get((cu, u), {}).items():
                    eqs.setdefault(w, {})
                    eqs[w][var(b, u)] = eqs[w].get(var(b, u), 0) - y
            for e in eqs.values():
                sys.add(e)
    _, homs = sys.solve()
    images = []
    for f in homs:
        for b in range(d):
            images.append([f[var(b, u)] for u in range(m)])
    if not images:
        return False
    return linalg.rank(images, F, m) == m


def projective_faithful_generator(B, inv, trace_check=True):
    proj, _ = projective_over(B, inv)
    faith, _ = faithful_over(B, inv)
    gen = proj and faith
    trace = trace_ideal_is_whole(B, inv) if trace_check else None
    return proj, faith, gen, trace


# --- injectivity -------------------------------------------------------------

def comodule_injective(bundle):
    """Does ρ: B → B ⊗ A split by an even comodule retraction r: B ⊗ A → B?

    B ⊗ A carries the cofree coaction id ⊗ Δ.  Unknown r has entries r[t, (b, a)]
    for parity-preserving pairs; the conditions are r ∘ ρ = id and
    ρ ∘ r = (r ⊗ id) ∘ (id ⊗ Δ).
    """
    A, B, F = bundle.A, bundle.B, bundle.F
    dA, dB = A.dim, B.dim
    src = [(b, a) for b in range(dB) for a in range(dA)]
    var = {}
    for t in range(dB):
        for b, a in src:
            if (B.parity(t) + B.parity(b) + A.parity(a)) % 2 == 0:
                var[(t, b, a)] = len(var)
    sys = linalg.LinearSystem(len(var), F)
    for b0 in range(dB):
        eqs = {}
        for (b, a), c in bundle.rho.get(b0, {}).items():
            for t in range(dB):
                v = var.get((t, b, a))
                if v is not None:
                    eqs.setdefault(t, {})
                    eqs[t][v] = eqs[t].get(v, 0) + c
        for t in range(dB):
            sys.add(eqs.get(t, {}), 1 if t == b0 else 0)
    for b, a in src:
        lhs = {}  # keyed by output (t', a')
        for t in range(dB):
            v = var.get((t, b, a))
            if v is None:
                continue
            for (t2, a2), c in bundle.rho.get(t, {}).items():
                lhs.setdefault((t2, a2), {})
                lhs[(t2, a2)][v] = lhs[(t2, a2)].get(v, 0) + c
        for (a1, a2), c in A.comult.get(a, {}).items():
            for t in range(dB):
                v = var.get((t, b, a1))
                if v is None:
                    continue
                lhs.setdefault((t, a2), {})
                lhs[(t, a2)][v] = lhs[(t, a2)].get(v, 0) - c
        for e in lhs.values():
            sys.add(e)
    x, _ = sys.solve()
    return x is not None


# --- verdict -------------------------------------------------------------------

@dataclass
class TorsorVerdict:
    strongly_free: bool
    free: object
    beta_surjective: bool
    beta_bijective: bool
    B_projective_over_C: bool
    B_faithful_over_C: bool
    B_generator_over_C: bool
    trace_ideal_is_C: object
    torsor: bool
    dim_C: int
    dim_relative_tensor: int
    dim_target: int
    finite_presentation: str = "automatic (finite-dimensional)"
    witnesses: dict = dc_field(default_factory=dict)

    def as_dict(self):
        return {
            "strongly_free": self.strongly_free,
            "free": self.free,
            "beta_surjective": self.beta_surjective,
            "beta_bijective": self.beta_bijective,
            "B_projective_over_C": self.B_projective_over_C,
            "B_faithful_over_C": self.B_faithful_over_C,
            "B_generator_over_C": self.B_generator_over_C,
            "trace_ideal_is_C": self.trace_ideal_is_C,
            "torsor": self.torsor,
            "dim_C": self.dim_C,
            "dim_relative_tensor": self.dim_relative_tensor,
            "dim_B_tensor_A": self.dim_target,
            "finite_presentation": self.finite_presentation,
        }


def torsor_check(bundle, trace_check=True):
    B, A = bundle.B, bundle.A
    inv = invariants(bundle)
    alpha = alpha_map(bundle)
    arank, awit = _rank_and_cokernel(alpha)
    sfree = arank == B.dim * A.dim
    beta = beta_map(bundle, inv)
    proj, faith, gen, trace = projective_faithful_generator(B, inv, trace_check)
    wit = {}
    BA = alpha.target
    if not sfree:
        wit["alpha_cokernel"] = BA.fmt(awit)
    if not beta.surjective:
        wit["beta_cokernel"] = BA.fmt(beta.cokernel_witness)
    elif not beta.bijective:
        wit["beta_kernel_dim"] = beta.rel.dim - beta.rank
    if not faith:
        wit["annihilator"] = inv.C.fmt(faithful_over(B, inv)[1][0])
    if not proj:
        wit["projectivity"] = "no C-linear section of the free cover"
    torsor = sfree and beta.bijective and proj and faith and gen
    return TorsorVerdict(
        strongly_free=sfree,
        free=sfree,
        beta_surjective=beta.surjective,
        beta_bijective=beta.bijective,
        B_projective_over_C=proj,
        B_faithful_over_C=faith,
        B_generator_over_C=gen,
        trace_ideal_is_C=trace,
        torsor=torsor,
        dim_C=inv.dim,
        dim_relative_tensor=beta.rel.dim,
        dim_target=B.dim * A.dim,
        witnesses=wit,
    )


# --- the α_q family ----------------------------------------------------------------

def binomial_mod(n, k, p):
    """C(n, k) mod p via Lucas' theorem."""
    from math import comb

    out = 1
    while n or k:
        a, b = n % p, k % p
        if b > a:
            return 0
        out = out * comb(a, b) % p
        n //= p
        k //= p
    return out


def alpha_q_hopf(p, r):
    """F_p[T]/(T^q), q = p^r, with T primitive."""
    F = GF(p)
    q = p**r
    names = ["1"] + ["T" if j == 1 else f"T^{j}" for j in range(1, q)]
    space = SuperSpace(F, tuple((n, 0) for n in names))
    mult = {(i, j): {i + j: 1} for i in range(q) for j in range(q) if i + j < q}
    comult = {j: {(i, j - i): binomial_mod(j, i, p) for i in range(j + 1)} for j in range(q)}
    antipode = {j: {j: (-1) ** j} for j in range(q)}
    return HopfSuperAlgebra(space, mult, {0: 1}, comult, {0: 1}, antipode)


def alpha_q_bundle(p, r, C, tau):
    """B = C[T]/(T^q - τ) with ρ(T) = T ⊗ 1 + 1 ⊗ T over A = F_p[T]/(T^q)."""
    F = GF(p)
    if C.F != F:
        raise ValueError(f"C must be defined over GF({p})")
    tau = F.clean(tau)
    if C.space.vector_parity(tau) == 1 or any(not 0 <= i < C.dim for i in tau):
        raise ValueError("τ must be an even element of C")
    if C.space.vector_parity(tau) is None:
        raise ValueError("τ must be an even element of C")
    A = alpha_q_hopf(p, r)
    q = A.dim
    m = C.dim

    def name(c, j):
        cn = C.space.name(c)
        if j == 0:
            return cn
        t = "T" if j == 1 else f"T^{j}"
        return t if cn == "1" else f"{cn}{t}"

    idx = lambda c, j: c * q + j
    space = SuperSpace(F, tuple((name(c, j), C.parity(c)) for c in range(m) for j in range(q)))
    mult = {}
    for (a, b), v in C.mult.items():
        for j in range(q):
            for l in range(q):
                out = {}
                if j + l < q:
                    for k, x in v.items():
                        out[idx(k, j + l)] = out.get(idx(k, j + l), 0) + x
                else:
                    prod = C.mul(v, tau)
                    for k, x in prod.items():
                        out[idx(k, j + l - q)] = out.get(idx(k, j + l - q), 0) + x
                mult[(idx(a, j), idx(b, l))] = out
    unit = {idx(c, 0): x for c, x in C.unit.items()}
    B = SuperAlgebra(space, mult, unit, C.mode)
    rho = {}
    for c in range(m):
        for j in range(q):
            rho[idx(c, j)] = {(idx(c, i), j - i): binomial_mod(j, i, p) for i in range(j + 1)}
    return CoactionBundle(A, B, rho)


def exterior_C(p, n=2):
    R, _ = exterior_algebra(n, GF(p))
    return R


class PreconditionError(ValueError):
    pass


def alpha_q_trivializable(C, tau, q):
    """Primitive-lift criterion: is there c in C_0 with τ + c^q in k?

    On the commutative F_p-algebra C_0 the map c ↦ c^q is additive and
    fixes F_p, hence F_p-linear; its image is spanned by the q-th powers of
    a basis of C_0, so the question is a single span-membership test.
    """
    F = C.F
    if F.p == 0 or q % F.p:
        raise PreconditionError("q must be a power of the characteristic")
    H = purely_even_quotient(C).H
    if H.dim != 1:
        raise PreconditionError("C/(C_1) is not the ground field")
    d = C.dim
    span = [[x for x in _dense(C.unit, d)]]
    for i in C.space.even():
        span.append(_dense(C.power({i: 1}, q), d))
    R, piv = linalg.rref(span, F, d)
    return linalg.in_span(R, piv, _dense(F.clean(tau), d), F)


def _dense(x, d):
    return [x.get(i, 0) for i in range(d)]


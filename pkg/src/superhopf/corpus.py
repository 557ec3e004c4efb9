"""Built-in objects: Lie super-algebras, Hopf algebras and coaction bundles."""

from .comodule import (
    CoactionBundle,
    alpha_q_bundle,
    exterior_C,
    regular_bundle,
    trivial_bundle,
)
from .hopf import SuperAlgebra, exterior_algebra, exterior_hopf, group_hopf, tensor_hopf
from .laurent import GrouplikeGradedHopf
from .lie import LieSuperAlgebra
from .scalars import QQ
from .spaces import SuperSpace


def borel():
    return LieSuperAlgebra(["h"], ["w"], {("h", "w"): {"w": 1}})


def borel_type(weights):
    """h acting diagonally on odd x_1..x_n with the given weights, [x, x] = 0."""
    odd = [f"x{j + 1}" for j in range(len(weights))]
    return LieSuperAlgebra(["h"], odd, {("h", x): {x: a} for x, a in zip(odd, weights) if a})


def abelian_odd(n):
    return LieSuperAlgebra([], [f"x{j + 1}" for j in range(n)], {})


def gl11():
    return LieSuperAlgebra(
        ["E11", "E22"],
        ["E12", "E21"],
        {
            ("E11", "E12"): {"E12": 1},
            ("E11", "E21"): {"E21": -1},
            ("E22", "E12"): {"E12": -1},
            ("E22", "E21"): {"E21": 1},
            ("E12", "E21"): {"E11": 1, "E22": 1},
        },
    )


def osp12():
    """sl_2 = <H, E, F> acting on the odd plane <u, v>, with a symmetric invariant bracket."""
    return LieSuperAlgebra(
        ["H", "E", "F"],
        ["u", "v"],
        {
            ("H", "E"): {"E": 2},
            ("H", "F"): {"F": -2},
            ("E", "F"): {"H": 1},
            ("H", "u"): {"u": 1},
            ("H", "v"): {"v": -1},
            ("E", "v"): {"u": 1},
            ("F", "u"): {"v": 1},
            ("u", "u"): {"E": 2},
            ("v", "v"): {"F": -2},
            ("u", "v"): {"H": -1},
        },
    )


def odd_heisenberg():
    return LieSuperAlgebra(["c"], ["x1", "x2"], {("x1", "x2"): {"c": 1}})


LIE_BUILTINS = {
    "borel": borel,
    "gl11": gl11,
    "osp12": osp12,
    "odd-heisenberg": odd_heisenberg,
}


def laurent_borel():
    return GrouplikeGradedHopf(1, 1, [(1,)], [(1,)])


def sweedler_like(field=QQ):
    """Λ(k^1) ⊗ kZ/2, the super-commutative 4-dimensional Hopf super-algebra."""
    return tensor_hopf(exterior_hopf(1, field), group_hopf((2,), field))


def monoid_quotient_algebra(field=QQ):
    """k[x]/(x^2) with x even."""
    space = SuperSpace(field, (("1", 0), ("x", 0)))
    return SuperAlgebra(space, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, {0: 1})


def graded_line_bundle(field=QQ):
    """B = k[x]/(x^2) over kZ/2 with ρ(x) = x ⊗ σ: injective, not strongly free."""
    A = group_hopf((2,), field)
    B = monoid_quotient_algebra(field)
    return CoactionBundle(A, B, {0: {(0, 0): 1}, 1: {(1, 1): 1}})


def cofree_bundle(A, n=1):
    """B = Λ(k^n) ⊗ A with coaction id ⊗ Δ."""
    R, _ = exterior_algebra(n, A.F)
    from .hopf import tensor_algebra

    B = tensor_algebra(R, A)
    dA = A.dim
    rho = {}
    for r in range(R.dim):
        for a in range(A.dim):
            rho[r * dA + a] = {(r * dA + a1, a2): c for (a1, a2), c in A.comult.get(a, {}).items()}
    return CoactionBundle(A, B, rho)


def bundle_corpus():
    """Named coaction bundles: torsors and deliberate non-torsors."""
    out = {}
    for n in (1, 2):
        out[f"regular Λ(Q^{n})"] = regular_bundle(exterior_hopf(n))
    out["regular kZ2"] = regular_bundle(group_hopf((2,)))
    out["regular Λ(Q^1)⊗kZ2"] = regular_bundle(sweedler_like())
    E1 = exterior_hopf(1)
    out["trivial Λ(Q^1) on Λ(Q^1)"] = trivial_bundle(E1, exterior_algebra(1)[0])
    out["trivial Λ(Q^1) on k"] = trivial_bundle(E1, exterior_algebra(0)[0])
    out["trivial kZ2 on Λ(Q^1)"] = trivial_bundle(group_hopf((2,)), exterior_algebra(1)[0])
    out["graded line over kZ2"] = graded_line_bundle()
    out["cofree Λ(Q^1)⊗Λ(Q^1)"] = cofree_bundle(E1)
    C = exterior_C(3)
    out["alpha_q p=3 τ=w1w2"] = alpha_q_bundle(3, 1, C, {3: 1})
    out["alpha_q p=3 τ=0"] = alpha_q_bundle(3, 1, C, {})
    out["alpha_q p=3 C=Λ(F3^1) τ=1"] = alpha_q_bundle(3, 1, exterior_C(3, 1), {0: 1})
    out["alpha_q p=2 q=2 τ=w1w2"] = alpha_q_bundle(2, 1, exterior_C(2), {3: 1})
    return out


def alphaq_default(p, r):
    return alpha_q_bundle(p, r, exterior_C(p), {3: 1})

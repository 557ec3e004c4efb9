import pytest

from superhopf.bosonization import UnverifiedInput, bosonize, bosonize_comodule, smash_algebra
from superhopf.comodule import alpha_q_hopf, invariants, regular_bundle, trivial_bundle, verify_bundle
from superhopf.corpus import alphaq_default, sweedler_like
from superhopf.hopf import (
    antipode_solve,
    dual_hopf,
    exterior_algebra,
    exterior_hopf,
    group_hopf,
    mutate,
    tensor_hopf,
    verify,
)
from superhopf.spaces import GradedMap

CORPUS = {
    "Λ1": lambda: exterior_hopf(1),
    "Λ2": lambda: exterior_hopf(2),
    "Λ3": lambda: exterior_hopf(3),
    "kZ2": lambda: group_hopf((2,)),
    "Λ1⊗kZ2": sweedler_like,
    "Λ1⊗Λ1": lambda: tensor_hopf(exterior_hopf(1), exterior_hopf(1)),
    "α3 dual": lambda: dual_hopf(alpha_q_hopf(3, 1)),
    "α2 dual": lambda: dual_hopf(alpha_q_hopf(2, 1)),
}


def test_smash_product_basis_and_signs():
    R, _ = exterior_algebra(1)
    S, space = smash_algebra(R)
    assert space.names == ["1⊗e", "w1⊗e", "1⊗σ", "w1⊗σ"]
    assert all(p == 0 for p in space.parities)
    # (1⊗σ)(w⊗e) = -w⊗σ
    assert S.mul({2: 1}, {1: 1}) == {3: -1}
    assert S.mul({1: 1}, {2: 1}) == {3: 1}


@pytest.mark.parametrize("name", CORPUS)
def test_bosonization_is_hopf(name):
    b = bosonize(CORPUS[name]())
    assert b.Ahat.dim == 2 * b.A.dim
    assert verify(b.Ahat).ok
    assert antipode_solve(b.Ahat) == b.Ahat.antipode_map
    assert b.Ahat.antipode_map.rank() == b.Ahat.dim


def test_lambda1_antipode_values():
    b = bosonize(exterior_hopf(1))
    ix = b.Ahat.space.index
    S = b.Ahat.s
    assert S({ix("w1⊗e"): 1}) == {ix("w1⊗σ"): 1}
    assert S({ix("w1⊗σ"): 1}) == {ix("w1⊗e"): -1}
    assert S(S({ix("w1⊗e"): 1})) == {ix("w1⊗e"): -1}
    assert S({ix("1⊗σ"): 1}) == {ix("1⊗σ"): 1}


def test_even_input_gives_involutive_antipode():
    b = bosonize(group_hopf((2,)))
    S = b.Ahat.antipode_map
    assert S @ S == GradedMap.identity(b.Ahat.space)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_antipode_order_four(n):
    S = bosonize(exterior_hopf(n)).Ahat.antipode_map
    I = GradedMap.identity(S.source)
    S2 = S @ S
    assert S2 != I
    assert S2 @ S2 == I


def test_unverified_input_rejected():
    bad = mutate(exterior_hopf(1), "comult", (1, (1, 0)), 2)
    with pytest.raises(UnverifiedInput):
        bosonize(bad)


def test_split_embed_roundtrip():
    b = bosonize(exterior_hopf(2))
    for k in range(b.A.dim):
        for i in (0, 1):
            assert b.split(b.index(k, i)) == (k, i)
    assert b.embed({1: 3}, 1) == {b.index(1, 1): 3}


def test_comodule_bosonization_invariants():
    bundle = alphaq_default(3, 1)
    bh, _ = bosonize_comodule(bundle)
    assert verify_bundle(bh).ok
    assert invariants(bh).dim == invariants(bundle).dim == 4


def test_regular_and_trivial_coinvariants():
    A = exterior_hopf(1)
    bh, _ = bosonize_comodule(regular_bundle(A))
    assert invariants(bh).dim == 1
    B, _ = exterior_algebra(1)
    bh, _ = bosonize_comodule(trivial_bundle(A, B))
    # B⊗e, one copy of B
    assert invariants(bh).dim == B.dim

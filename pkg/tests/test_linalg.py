from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superhopf import linalg
from superhopf.scalars import GF, QQ, Field, sign
from superhopf.spaces import GradedMap, SuperSpace, braiding, solve_linear, tensor_map, tensor_space


def test_field_basics():
    F = GF(7)
    assert F(10) == 3
    assert F.inv(3) == 5
    assert F.fmt(F(-1)) == "6"
    assert QQ.fmt(Fraction(-1, 2)) == "-1/2"
    assert QQ.parse("-1/2") == Fraction(-1, 2)
    assert Field.from_spec(F.spec()) == F
    with pytest.raises(ValueError):
        Field(4)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    assert sign(3) == -1 and sign(4) == 1


def test_tensor_space_dims_and_parity():
    V = SuperSpace(QQ, (("a", 0), ("b", 1)))
    W = SuperSpace(QQ, (("c", 0), ("d", 1), ("e", 1)))
    T = tensor_space(V, W)
    assert T.dim == 6
    assert T.names[4] == "b⊗d"
    assert T.parity(T.index("b⊗d")) == 0
    assert T.parity(T.index("a⊗d")) == 1


def test_duplicate_and_bad_parity():
    with pytest.raises(ValueError, match="duplicate"):
        SuperSpace(QQ, (("a", 0), ("a", 1)))
    with pytest.raises(ValueError):
        SuperSpace(QQ, (("a", 2),))


def test_braiding_signs():
    V = SuperSpace(QQ, (("v", 1),))
    W = SuperSpace(QQ, (("w", 1),))
    assert braiding(V, W).cols[0] == {0: -1}
    E = SuperSpace(QQ, (("a", 0), ("b", 0)))
    c = braiding(E, E)
    # plain transposition a⊗b ↦ b⊗a
    assert c.cols == ({0: 1}, {2: 1}, {1: 1}, {3: 1})


def test_tensor_map_koszul():
    V = SuperSpace(QQ, (("v", 1),))
    W = SuperSpace(QQ, (("x", 0), ("y", 1)))
    g = GradedMap(W, W, [{1: 1}, {0: 1}])  # odd swap
    f = GradedMap.identity(V)
    fg = tensor_map(f, g)
    assert fg.cols[0] == {1: -1}
    assert fg.cols[1] == {0: -1}
    e = GradedMap.identity(W)
    assert tensor_map(e, e) == GradedMap.identity(tensor_space(W, W))


def test_solve_linear_trivial():
    V = SuperSpace(QQ, (("x", 0),))
    twice = GradedMap(V, V, [{0: 2}])
    assert solve_linear([twice]) == []


def test_graded_map_parts():
    W = SuperSpace(QQ, (("x", 0), ("y", 1)))
    m = GradedMap(W, W, [{0: 1, 1: 2}, {1: 3}])
    assert m.even_part + m.odd_part == m
    assert m.parity is None
    assert m.odd_part.parity == 1
    with pytest.raises(ValueError):
        GradedMap.from_parts(W, W, [[0, 1], [0, 0]], [[0, 0], [0, 0]])


def _bareiss_rank_mod_p(M, p):
    """Independent oracle: fraction-free elimination, reduced mod p each step."""
    M = [[x % p for x in row] for row in M]
    rows, cols = len(M), len(M[0]) if M else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c]:
                a, b = M[r][c], M[i][c]
                M[i] = [(a * x - b * y) % p for x, y in zip(M[i], M[r])]
        r += 1
    return r


mats = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=6)
)


@given(mats)
def test_rank_nullity_q(M):
    n = len(M[0])
    R, piv = linalg.rref(M, QQ)
    null = linalg.nullspace(M, QQ)
    assert len(piv) + len(null) == n
    for v in null:
        for row in M:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0


@given(mats, st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_oracle(M, p):
    F = GF(p)
    assert linalg.rank(M, F) == _bareiss_rank_mod_p(M, p)
    for v in linalg.nullspace(M, F):
        for row in M:
            assert sum(a * b for a, b in zip(row, v)) % p == 0


@given(mats)
def test_rref_is_idempotent(M):
    R, piv = linalg.rref(M, QQ)
    if R:
        R2, piv2 = linalg.rref(R, QQ, len(M[0]))
        assert (R2, piv2) == (R, piv)


@given(mats, st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_solve_consistency(M, x):
    n = len(M[0])
    x = x[:n]
    b = [sum(a * y for a, y in zip(row, x)) for row in M]
    sol = linalg.solve(M, b, QQ)
    assert sol is not None
    assert [sum(Fraction(a) * y for a, y in zip(row, sol)) for row in M] == b


def test_linear_system_inconsistent():
    s = linalg.LinearSystem(1, QQ)
    s.add({0: 1}, 1)
    s.add({0: 1}, 2)
    assert s.solve() == (None, [])

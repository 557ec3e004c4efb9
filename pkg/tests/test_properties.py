"""Randomized invariants."""

from hypothesis import assume, given
from hypothesis import strategies as st

from superhopf import corpus, linalg
from superhopf.bosonization import bosonize
from superhopf.hopf import exterior_hopf, group_hopf, tensor_hopf, verify
from superhopf.integrals import (
    boson_transport,
    boson_transport_inverse,
    classify,
    integral_space,
    s_dual,
    same_line,
)
from superhopf.laurent import GrouplikeGradedHopf
from superhopf.lie import alpha_automorphism
from superhopf.scalars import GF, QQ
from superhopf.spaces import GradedMap, SuperSpace, braiding, tensor_map, tensor_space

fields = st.sampled_from([QQ, GF(2), GF(3), GF(5)])


@st.composite
def spaces(draw, field=QQ):
    ps = draw(st.lists(st.integers(0, 1), min_size=1, max_size=3))
    return SuperSpace(field, tuple((f"v{i}", p) for i, p in enumerate(ps)))


@st.composite
def homogeneous_maps(draw, V, W, parity=None):
    if parity is None:
        parity = draw(st.integers(0, 1))
    cols = []
    for j in range(V.dim):
        col = {}
        for i in range(W.dim):
            if (V.parity(j) + W.parity(i)) % 2 == parity:
                c = draw(st.integers(-2, 2))
                if c:
                    col[i] = c
        cols.append(col)
    return GradedMap(V, W, cols), parity


@given(spaces(), spaces())
def test_braiding_is_involutive(V, W):
    assert braiding(W, V) @ braiding(V, W) == GradedMap.identity(tensor_space(V, W))


@given(st.data())
def test_tensor_map_functorial(data):
    V, W, X, Y = (data.draw(spaces()) for _ in range(4))
    f1, _ = data.draw(homogeneous_maps(V, X))
    g1, _ = data.draw(homogeneous_maps(W, Y))
    f2, _ = data.draw(homogeneous_maps(X, V))
    g2, _ = data.draw(homogeneous_maps(Y, W))
    lhs = tensor_map(f2, g2) @ tensor_map(f1, g1)
    rhs = tensor_map(f2 @ f1, g2 @ g1)
    # Koszul: (f2⊗g2)(f1⊗g1) = (-1)^{|g2||f1|} (f2 f1)⊗(g2 g1)
    sign = (g2.parity or 0) * (f1.parity or 0)
    assert lhs == (rhs.scale(-1) if sign else rhs)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5),
       st.sampled_from([2, 3, 7]))
def test_rank_of_transpose(M, p):
    F = GF(p)
    T = [list(r) for r in zip(*M)]
    assert linalg.rank(M, F) == linalg.rank(T, F)


exterior_elems = st.dictionaries(st.integers(0, 7), st.integers(-3, 3), max_size=4)


@given(exterior_elems, exterior_elems, exterior_elems)
def test_exterior_associative(x, y, z):
    A = exterior_hopf(3)
    x, y, z = (A.F.clean(v) for v in (x, y, z))
    assert A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z))


@given(exterior_elems, exterior_elems)
def test_comultiplication_multiplicative(x, y):
    from superhopf.hopf import tensor_mul

    A = exterior_hopf(3)
    x, y = A.F.clean(x), A.F.clean(y)
    assert A.comul(A.mul(x, y)) == tensor_mul(A, A, A.comul(x), A.comul(y))


@given(exterior_elems, exterior_elems)
def test_antipode_anti_multiplicative(x, y):
    # s(xy) = (-1)^{|x||y|} s(y) s(x) on homogeneous parts
    A = exterior_hopf(3)
    for px in (0, 1):
        for py in (0, 1):
            xh = {i: c for i, c in A.F.clean(x).items() if A.parity(i) == px}
            yh = {i: c for i, c in A.F.clean(y).items() if A.parity(i) == py}
            sign = -1 if px * py else 1
            want = {k: sign * v for k, v in A.mul(A.s(yh), A.s(xh)).items()}
            assert A.s(A.mul(xh, yh)) == A.F.clean(want)


hopf_pool = st.sampled_from(["Λ1", "Λ2", "kZ2", "kZ3", "Λ1⊗kZ2"])


def _make(name, F):
    return {
        "Λ1": lambda: exterior_hopf(1, F),
        "Λ2": lambda: exterior_hopf(2, F),
        "kZ2": lambda: group_hopf((2,), F),
        "kZ3": lambda: group_hopf((3,), F),
        "Λ1⊗kZ2": lambda: tensor_hopf(exterior_hopf(1, F), group_hopf((2,), F)),
    }[name]()


@given(hopf_pool, hopf_pool, fields)
def test_integrals_of_tensor_products(a, b, F):
    A = tensor_hopf(_make(a, F), _make(b, F))
    assert verify(A).ok
    rep = classify(A)
    assert len(rep.basis) == 1
    assert rep.parity in (0, 1)
    assert same_line(s_dual(A, rep.phi), integral_space(A, "left")[0], A.F)


@given(hopf_pool, fields, st.data())
def test_transport_roundtrip(name, F, data):
    A = _make(name, F)
    b = bosonize(A)
    psi = F.clean({i: data.draw(st.integers(-3, 3)) for i in range(A.dim)})
    phi = boson_transport(b, psi)
    assert boson_transport_inverse(b, phi) == psi
    assert all(b.split(i)[1] == 0 for i in phi)


LIE = {"borel": corpus.borel, "gl11": corpus.gl11, "osp12": corpus.osp12, "heis": corpus.odd_heisenberg}


@st.composite
def pbw_words(draw):
    g = LIE[draw(st.sampled_from(sorted(LIE)))]()
    words = [draw(st.lists(st.integers(0, g.n - 1), max_size=3)) for _ in range(3)]
    return g, words


def _word(g, w):
    out = g.one()
    for k in w:
        out = out * g.gen(g.names[k])
    return out


@given(pbw_words())
def test_pbw_confluence(gw):
    g, (u, v, w) = gw
    a, b, c = _word(g, u), _word(g, v), _word(g, w)
    assert (a * b) * c == a * (b * c)
    # any bracketing of the concatenated word gives the same normal form
    assert _word(g, u + v + w) == a * (b * c)


@given(pbw_words())
def test_alpha_twist(gw):
    g, (u, v, _) = gw
    # α lives on U(g_0): keep only even letters
    a = _word(g, [k for k in u if k < g.s])
    b = _word(g, [k for k in v if k < g.s])
    back = alpha_automorphism(g, alpha_automorphism(g, a), -1)
    assert back == a
    assert alpha_automorphism(g, a * b) == alpha_automorphism(g, a) * alpha_automorphism(g, b)


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=3), st.data())
def test_laurent_antipode_is_convolution_inverse(chars, data):
    n = len(chars)
    G = GrouplikeGradedHopf(n, 1, [(c,) for c in chars], [(c,) for c in chars])
    k = data.draw(st.integers(0, n))
    I = tuple(sorted(data.draw(st.permutations(range(1, n + 1)))[:k]))
    m = (data.draw(st.integers(-5, 5)),)
    a = G.mono(I, m)
    acc = {}
    for (u, v), c in G.comultiply(a).items():
        for key, e in G.multiply(G.antipode({u: 1}), {v: 1}).items():
            acc[key] = acc.get(key, 0) + c * e
    want = {((), (0,)): 1} if not I else {}
    assert G.clean(acc) == want


@given(st.integers(0, 60), st.sampled_from([2, 3, 5]))
def test_field_roundtrip(x, p):
    F = GF(p)
    assert F.parse(F.fmt(F(x))) == F(x)
    assume(F(x) != 0)
    assert F(x * F.inv(x)) == 1

import pytest

from superhopf.corpus import laurent_borel
from superhopf.laurent import CharacterDataError, GrouplikeGradedHopf, grouplike_graded_hopf


def test_borel_coproduct():
    G = laurent_borel()
    for m in (-2, 0, 2):
        got = G.comultiply(G.mono((1,), (m,)))
        assert got == {(((1,), (m,)), ((), (m,))): 1, (((), (m + 1,)), ((1,), (m,))): 1}


def test_antipode_and_counit():
    G = laurent_borel()
    assert G.antipode(G.mono((1,), (0,))) == {((1,), (-1,)): -1}
    assert G.antipode(G.mono((), (3,))) == {((), (-3,)): 1}
    assert G.counit(G.mono((), (5,))) == 1
    assert G.counit(G.mono((1,), (0,))) == 0


def test_project_to_group():
    G = laurent_borel()
    x = {((1,), (0,)): 2, ((), (4,)): 3}
    assert G.project_to_group(x) == {(4,): 3}


@pytest.mark.parametrize("chars", [[(1,)], [(1,), (2,)], [(1, 0), (0, -1)], [(0,), (0,)]])
def test_verify(chars):
    r = len(chars[0])
    G = grouplike_graded_hopf(len(chars), r, chars)
    assert G.verify(2).ok


def test_character_mismatch():
    with pytest.raises(CharacterDataError):
        GrouplikeGradedHopf(1, 1, [(1,)], [(2,)])
    with pytest.raises(CharacterDataError):
        GrouplikeGradedHopf(2, 1, [(1,)], [(1,)])


def test_lie_side():
    G = GrouplikeGradedHopf(2, 1, [(1,), (2,)], [(1,), (2,)])
    g = G.lie_algebra()
    assert g.names == ["h", "x1", "x2"]
    assert G.delta_exponent() == (3,)
    h = g.gen("h")
    assert G.pair(h, (), (4,)) == 4
    assert G.pair(h * h, (), (4,)) == 16
    assert G.pair(g.gen("x2"), (2,), (0,)) == 1

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from misere_star import (
    DimensionMismatch,
    MoveSet,
    Window,
    min_elements,
    partial_le,
    partial_lt,
    sum_set,
    terminal_set,
)
from misere_star.core import as_vec

from .conftest import games

vec3 = st.tuples(*[st.integers(0, 5)] * 3)


def brute_min(vecs):
    return sorted(v for v in vecs if not any(partial_lt(u, v) for u in vecs))


def test_partial_le_examples():
    assert partial_le((4,), (4,))
    assert not partial_le((1, 2), (2, 1))
    assert not partial_le((2, 1), (1, 2))
    assert partial_le((0, 3), (4, 3))
    assert partial_lt((0, 3), (4, 3))
    assert not partial_lt((4,), (4,))


def test_partial_le_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        partial_le((1, 2), (1, 2, 3))


@given(vec3, vec3, vec3)
def test_partial_order_axioms(x, y, z):
    assert partial_le(x, x)
    if partial_le(x, y) and partial_le(y, x):
        assert x == y
    if partial_le(x, y) and partial_le(y, z):
        assert partial_le(x, z)


def test_as_vec_rejects_negatives():
    with pytest.raises(ValueError):
        as_vec((1, -1))
    assert as_vec(7) == (7,)


def test_window_basics():
    W = Window((3, 2))
    assert W.dim == 2 and W.size == 6
    assert list(W.positions()) == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    assert (2, 1) in W and (3, 0) not in W and (1,) not in W
    with pytest.raises(ValueError):
        Window((0, 4))


def test_moveset_roundtrip_and_order():
    S = MoveSet.from_vectors([(3, 1), (0, 2), (3, 0), (0, 2)])
    assert S.window == Window((4, 3))
    assert S.vectors() == [(0, 2), (3, 0), (3, 1)]
    assert len(S) == 3 and (3, 1) in S and (1, 1) not in S


def test_moveset_is_immutable():
    S = MoveSet.from_vectors([1, 2])
    with pytest.raises(ValueError):
        S.members[0] = True


def test_moveset_restrict_pads_and_crops():
    S = MoveSet.from_vectors([2, 7])
    assert S.restrict(Window((5,))).vectors() == [(2,)]
    assert S.restrict(Window((20,))).vectors() == [(2,), (7,)]


def test_moveset_mixed_dimensions():
    with pytest.raises(DimensionMismatch):
        MoveSet.from_vectors([(1,), (1, 2)])


def test_min_elements_examples():
    assert min_elements(MoveSet.from_vectors([4, 9])) == [(4,)]
    anti = [(2, 9), (3, 7), (4, 4), (5, 2), (8, 1)]
    assert min_elements(MoveSet.from_vectors(anti)) == anti
    assert min_elements(MoveSet.empty(Window((5, 5)))) == []


@given(games(max_moves=10))
def test_min_elements_is_antichain_below_everything(game):
    S, _ = game
    mins = min_elements(S)
    assert mins == brute_min(S.vectors())
    for a, b in itertools.combinations(mins, 2):
        assert not partial_le(a, b) and not partial_le(b, a)
    for v in S:
        assert any(partial_le(m, v) for m in mins)


def test_terminal_set_examples():
    assert terminal_set(MoveSet.from_vectors([4, 9]), Window((13,))) == [(0,), (1,), (2,), (3,)]
    got = terminal_set(MoveSet.from_vectors([(4, 0), (0, 3)]), Window((10, 10)))
    assert got == [(a, b) for a in range(4) for b in range(3)]
    assert terminal_set(MoveSet.from_vectors([0, 5]), Window((20,))) == []
    assert terminal_set(MoveSet.empty(Window((3, 2))), Window((3, 2))) == list(Window((3, 2)).positions())


@given(games(max_moves=8))
def test_terminal_set_is_lower_ideal(game):
    M, W = game
    T = set(terminal_set(M, W))
    moves = M.vectors()
    for x in W.positions():
        assert (x in T) == (not any(partial_le(m, x) for m in moves))
    for x in T:
        for y in itertools.product(*(range(c + 1) for c in x)):
            assert y in T


def test_sum_set_examples():
    W = Window((40,))
    assert sum_set(MoveSet.from_vectors([4]), MoveSet.from_vectors([4]), W).vectors() == [(8,)]
    A = MoveSet.from_vectors([4, 5])
    assert sum_set(A, A, W).vectors() == [(8,), (9,), (10,)]


def test_sum_set_of_m4_against_pairwise_sums():
    W = Window((34,))
    m4 = [x for x in range(34) if x >= 4 and (x - 4) % 11 < 4]
    brute = sorted({a + b for a in m4 for b in m4 if a + b < 34})
    expected = list(range(8, 15)) + list(range(19, 26)) + list(range(30, 34))
    assert brute == expected
    M4 = MoveSet.from_vectors(m4, W)
    assert [v[0] for v in sum_set(M4, M4, W)] == expected


@settings(max_examples=60)
@given(games(max_moves=8), games(max_moves=8), st.integers(0, 4))
def test_sum_set_matches_brute_force_and_is_window_exact(g1, g2, grow):
    A, W = g1
    B, _ = g2
    if A.dim != B.dim:
        return
    brute = sorted(
        {tuple(a + b for a, b in zip(u, v)) for u in A for v in B} & set(W.positions())
    )
    assert sum_set(A, B, W).vectors() == brute
    big = Window(tuple(b + grow for b in W.bounds))
    assert sum_set(A.restrict(big), B.restrict(big), W) == sum_set(A, B, W)


def test_sum_set_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        sum_set(MoveSet.from_vectors([1]), MoveSet.from_vectors([(1, 1)]), Window((4,)))


def test_window_str_and_cube():
    assert str(Window.cube(3, 2)) == "[0,3)x[0,3)"
    assert np.prod(Window.cube(4, 3).shape) == 64

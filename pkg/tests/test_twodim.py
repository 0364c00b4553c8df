import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from misere_star import (
    ClassLabel,
    MoveSet,
    Verdict,
    Window,
    classify_min_moves,
    generate_Mk,
    iterate,
    line_period,
    survey_class3a,
)
from misere_star.twodim import canonical_direction, eventual_period, sample_line

from .conftest import games


def brute_eventual_period(seq, repeats=3, coverage=0.5):
    n = len(seq)
    for t in range(0, n - int(np.ceil(coverage * n)) + 1):
        for p in range(1, (n - t) // repeats + 1):
            if all(seq[i] == seq[i + p] for i in range(t, n - p)):
                return t, p
    return None


@pytest.mark.parametrize(
    "moves, label",
    [
        ([(4, 0), (0, 3)], "2(c)"),
        ([(2, 9), (3, 7), (4, 4), (5, 2), (8, 1)], "3(a)"),
        ([(0, 5), (2, 2), (5, 0)], "3(c)"),
        ([(3, 0)], "1(a)"),
        ([(2, 2), (5, 7)], "1(b)"),
        ([(1, 2), (2, 1)], "2(a)"),
        ([(0, 2), (3, 1)], "2(b)"),
        ([(0, 4), (1, 2), (3, 1)], "3(b)"),
    ],
)
def test_classification(moves, label):
    assert str(classify_min_moves(MoveSet.from_vectors(moves))) == label


def test_classification_rejects_degenerate_games():
    with pytest.raises(ValueError):
        classify_min_moves(MoveSet.empty(Window((4, 4))))
    with pytest.raises(ValueError):
        classify_min_moves(MoveSet.from_vectors([(0, 0), (1, 2)]))
    with pytest.raises(ValueError):
        classify_min_moves(MoveSet.from_vectors([4]))


@given(games(dim=2, max_moves=7))
def test_classification_symmetric_under_axis_swap(game):
    M, _ = game
    if not M or M.contains_origin():
        return
    swapped = MoveSet(M.members.T)
    assert classify_min_moves(M) == classify_min_moves(swapped)


def test_line_period_examples():
    r = line_period(generate_Mk(1, 100), (0,), (1,))
    assert r.periodic and r.period == 2 and r.preperiod <= 1
    r = line_period(generate_Mk(4, 200), (0,), (1,))
    assert r.periodic and r.period == 11
    F = iterate(MoveSet.from_vectors([(0, 1), (1, 0)]), Window((40, 40))).fixed_point
    r = line_period(F, (0, 0), (1, 1))
    assert r.periodic and r.period == 1


def test_line_period_needs_samples():
    with pytest.raises(ValueError):
        line_period(generate_Mk(1, 100), (95,), (1,))


def test_direction_canonicalised():
    assert canonical_direction((4, 2)) == (2, 1)
    assert canonical_direction((0, 3)) == (0, 1)
    assert canonical_direction((2, -4)) == (1, -2)
    with pytest.raises(ValueError):
        canonical_direction((0, 0))


def test_negative_slope_line_walks_to_edge():
    S = MoveSet(np.eye(10, dtype=bool)[::-1])
    assert sample_line(S, (0, 9), (1, -1)) == [True] * 10


def test_inconclusive_on_aperiodic_data():
    # square indicator: gaps grow, so no period covers half the samples
    seq = [False] * 200
    for i in range(15):
        seq[i * i] = True
    assert eventual_period(seq) is None
    S = MoveSet(np.array(seq))
    assert line_period(S, (0,), (1,)).verdict is Verdict.INCONCLUSIVE


@given(st.lists(st.booleans(), min_size=8, max_size=60))
def test_eventual_period_matches_brute_force(seq):
    assert eventual_period(seq) == brute_eventual_period(seq)


@given(st.lists(st.booleans(), min_size=0, max_size=10), st.lists(st.booleans(), min_size=1, max_size=6))
def test_planted_periods_are_found(pre, block):
    seq = pre + block * 12
    t, p = eventual_period(seq)
    assert t <= len(pre)
    assert all(seq[i] == seq[i + p] for i in range(t, len(seq) - p))


def test_survey_class3a_reference_antichain():
    M = MoveSet.from_vectors([(2, 9), (3, 7), (4, 4), (5, 2), (8, 1)])
    assert survey_class3a(M, Window((60, 60))) == 2


def test_survey_class3a_random_antichains(rng):
    exceptions = []
    for _ in range(8):
        xs = sorted(rng.choice(np.arange(1, 15), 4, replace=False))
        ys = sorted(rng.choice(np.arange(1, 15), 4, replace=False), reverse=True)
        M = MoveSet.from_vectors(list(zip(map(int, xs), map(int, ys))))
        phi = survey_class3a(M, Window((80, 80)))
        if phi != 2:
            exceptions.append((M.vectors(), phi))
    if exceptions:
        warnings.warn(f"class 3(a) games with phi != 2: {exceptions}")


def test_survey_class3a_rejects_other_classes():
    with pytest.raises(ValueError):
        survey_class3a(MoveSet.from_vectors([(1, 2), (2, 1)]), Window((20, 20)))


def test_class_2c_axes_follow_one_dimensional_limits():
    W = Window((120, 120))
    F = iterate(MoveSet.from_vectors([(4, 0), (0, 3)]), W).fixed_point
    assert MoveSet(F.members[:, 0]) == generate_Mk(4, 120)
    assert MoveSet(F.members[0, :]) == generate_Mk(3, 120)


def test_class_label_str():
    assert str(ClassLabel(3, "c")) == "3(c)"

"""Closed forms for single-heap games.

``M_k`` is the limit of every game whose smallest move is ``k``: blocks of
``k`` consecutive integers ``k..2k-1`` repeating with period ``3k - 1``.
``A_k = {k, 2k - 1}`` is the smallest game whose P-positions are ``M_k``,
and a game ``X`` has P-positions ``M_k`` exactly when ``A_k <= X <= M_k``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MoveSet, Window
from .reflexivity import solvability_check


class InvariantViolation(AssertionError):
    """A proven identity failed to hold; indicates a bug in the engine."""


@dataclass(frozen=True)
class MkParams:
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be >= 0")

    @property
    def period(self) -> int:
        return 3 * self.k - 1

    @property
    def residues(self) -> range:
        return range(self.k, 2 * self.k)


def _window_1d(W: Window | int) -> Window:
    if isinstance(W, int):
        W = Window((W,))
    if W.dim != 1:
        raise ValueError("one-dimensional window required")
    return W


def generate_Mk(k: int, W: Window | int) -> MoveSet:
    W = _window_1d(W)
    if k < 0:
        raise ValueError("k must be >= 0")
    x = np.arange(W.bounds[0])
    if k == 0:
        mask = np.zeros_like(x, dtype=bool)
    else:
        mask = (x >= k) & ((x - k) % (3 * k - 1) < k)
    return MoveSet(mask, label=f"M_{k}")


def generate_Ak(k: int) -> MoveSet:
    if k < 1:
        raise ValueError("A_k is defined for k >= 1")
    return MoveSet.from_vectors([k, 2 * k - 1], label=f"A_{k}")


def lemma3_stage(k: int, i: int, W: Window | int) -> MoveSet:
    """Stage ``i`` (1..5) of the iteration started from the single move ``{k}``.

    Stage 4 is the finite set ``M_k`` cut at ``10k - 3``; it still contains
    ``A_k``, so stage 5 is all of ``M_k``.
    """
    W = _window_1d(W)
    if k < 2:
        raise ValueError("closed forms hold for k >= 2")
    if i not in range(1, 6):
        raise ValueError("stage must be in 1..5")
    x = np.arange(W.bounds[0])
    block = (x >= k) & (x <= 2 * k - 1)
    if i == 1:
        mask = x % (2 * k) >= k
    elif i == 2:
        mask = block | ((x >= 4 * k - 1) & ((x - (4 * k - 1)) % (2 * k) == 0))
    elif i == 3:
        mask = (
            block
            | ((x >= 4 * k - 1) & (x <= 5 * k - 2))
            | ((x >= 7 * k - 2) & ((x - (7 * k - 2)) % (2 * k) == 0))
        )
    elif i == 4:
        mask = generate_Mk(k, W).members & (x <= 10 * k - 3)
    else:
        mask = generate_Mk(k, W).members
    return MoveSet(mask, label=f"{{{k}}}^{i}")


def in_Ak_Mk_interval(X: MoveSet, k: int) -> bool:
    """``A_k <= X <= M_k``, checked on the window of ``X``."""
    W = X.window
    ak = generate_Ak(k)
    if any(a[0] >= W.bounds[0] or a not in X for a in ak):
        return False
    mk = generate_Mk(k, W).members
    return not bool((X.members & ~mk).any())


def verify_min1d(X: MoveSet, k: int, W: Window | int) -> bool:
    """Interval membership ``A_k <= X <= M_k``, cross-checked against the engine.

    The interval holds iff ``P(X) == M_k``; a disagreement raises
    :class:`InvariantViolation`.
    """
    W = _window_1d(W)
    if X.dim != 1:
        raise ValueError("one-dimensional move set required")
    if k < 1:
        raise ValueError("k must be >= 1")
    # 4k - 2 is the first position that exposes a missing 2k - 1
    if W.bounds[0] < 4 * k - 1:
        raise ValueError(f"window must reach {4 * k - 2} to decide k={k}")
    X = X.restrict(W)
    inclusion = in_Ak_Mk_interval(X, k)
    solved = solvability_check(X, generate_Mk(k, W), W)
    if inclusion != solved:
        raise InvariantViolation(
            f"A_{k} <= X <= M_{k} is {inclusion} but P(X) == M_{k} is {solved} on {W}"
        )
    return inclusion

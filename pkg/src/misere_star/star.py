"""The misère star operator ``M -> P(M)`` and its iteration.

Stage 0 is the input game, stage ``i + 1`` is the set of P-positions of
stage ``i``. Everything is evaluated on a fixed window, so the reported
``phi`` is a window quantity: it never exceeds the true number of
iterations to the limit, is nondecreasing in the window, and equals the
true value once the window is large enough.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core import DimensionMismatch, MoveSet, Vec, Window, min_elements, terminal_mask
from .engine import p_positions

DEFAULT_CAP = 64


class _NotConverged:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NotConverged"

    def __reduce__(self):
        return (_NotConverged, ())


NotConverged = _NotConverged()
"""Sentinel returned when no fixed point shows up within the iteration cap."""


@dataclass(frozen=True, eq=False)
class IterationTrace:
    window: Window
    stages: list[MoveSet]
    diff_sets: list[list[Vec]]
    phi_window: int | _NotConverged
    iteration_cap: int
    seconds: float = field(default=0.0)

    @property
    def converged(self) -> bool:
        return self.phi_window is not NotConverged

    @property
    def fixed_point(self) -> MoveSet:
        if not self.converged:
            raise ValueError(f"no fixed point within {self.iteration_cap} iterations")
        return self.stages[self.phi_window]


def star(M: MoveSet, W: Window) -> MoveSet:
    return p_positions(M, W)


def min_diff_set(A: MoveSet, B: MoveSet) -> list[Vec]:
    """Minimal elements of the symmetric difference of two sets on one window."""
    if A.window != B.window:
        raise DimensionMismatch(f"windows differ: {A.window} vs {B.window}")
    return min_elements(MoveSet(A.members ^ B.members))


def iterate(M: MoveSet, W: Window, cap: int = DEFAULT_CAP) -> IterationTrace:
    """Apply ``star`` until two consecutive stages agree on ``W``.

    ``cap`` bounds the reported ``phi``: at most ``cap + 1`` applications are
    made, enough to confirm a fixed point at stage ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if M.dim != W.dim:
        raise DimensionMismatch(f"move set has dimension {M.dim}, window {W.dim}")
    t0 = time.perf_counter()
    base = M.label or "M"
    stages = [M.restrict(W, label=f"{base}^0")]
    diffs: list[list[Vec]] = []
    phi: int | _NotConverged = NotConverged
    for i in range(cap + 1):
        nxt = star(stages[i], W).with_label(f"{base}^{i + 1}")
        stages.append(nxt)
        diffs.append(min_diff_set(stages[i], nxt))
        if nxt == stages[i]:
            phi = i
            break
    return IterationTrace(W, stages, diffs, phi, cap, time.perf_counter() - t0)


def phi_window(M: MoveSet, W: Window, cap: int = DEFAULT_CAP) -> int | _NotConverged:
    return iterate(M, W, cap).phi_window


def compare_limits(
    M: MoveSet, G: MoveSet, W: Window, cap: int = DEFAULT_CAP
) -> bool | _NotConverged:
    """Whether both games reach the same fixed point on ``W``.

    Returns ``NotConverged`` if either iteration runs out of budget.
    """
    if M.dim != G.dim:
        raise DimensionMismatch(f"dimension mismatch: {M.dim} vs {G.dim}")
    a = iterate(M, W, cap)
    b = iterate(G, W, cap)
    if not (a.converged and b.converged):
        return NotConverged
    return a.fixed_point == b.fixed_point


def limit_game(M: MoveSet, W: Window) -> MoveSet:
    """The limit of the star iteration on ``W``, built in a single sweep.

    The limit is the unique reflexive set with the same minimal elements as
    ``M``, and reflexive sets are exactly those whose non-terminal
    complement is ``A + A``. So a non-terminal position belongs to the limit
    iff it is not the sum of two smaller members. No iteration is involved,
    which makes this both a cross-check for :func:`iterate` and the cheap
    way to view a limit game on large windows.
    """
    if M.dim != W.dim:
        raise DimensionMismatch(f"move set has dimension {M.dim}, window {W.dim}")
    R = M.restrict(W)
    label = f"{M.label or 'M'}^inf"
    if not R or R.contains_origin():
        return MoveSet.empty(W, label)
    reachable = ~terminal_mask(R, W)
    out = np.zeros(W.size, dtype=np.bool_)
    _kernels.solve_limit(np.array(W.shape, dtype=np.int64), reachable.ravel(), out)
    return MoveSet(out.reshape(W.shape), label)

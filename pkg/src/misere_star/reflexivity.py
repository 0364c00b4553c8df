"""Two independent tests for reflexivity (``M == P(M)``) on a window.

``is_reflexive_window`` runs the game; ``sumset_reflexive_check`` only uses
set arithmetic: A is reflexive iff A + A equals the complement of A minus the
terminal positions. Both look only at positions inside the window, and both
are exact there because every summand of a window position is in the window.
"""

from __future__ import annotations

import numpy as np

from .core import DimensionMismatch, MoveSet, Window, sum_mask, terminal_mask
from .engine import p_positions


def is_reflexive_window(M: MoveSet, W: Window) -> bool:
    return p_positions(M, W) == M.restrict(W)


def sumset_reflexive_check(A: MoveSet, W: Window) -> bool:
    a = A.restrict(W).members
    doubled = sum_mask(A, A, W)
    return bool(np.array_equal(doubled, ~a & ~terminal_mask(A, W)))


def solvability_check(X: MoveSet, S: MoveSet, W: Window) -> bool:
    """Whether the game ``X`` has exactly ``S`` as P-positions on ``W``."""
    if X.dim != S.dim:
        raise DimensionMismatch(f"dimension mismatch: {X.dim} vs {S.dim}")
    return p_positions(X, W) == S.restrict(W)

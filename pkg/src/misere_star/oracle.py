"""Brute-force reference for the outcome engine.

Top-down, memoised on position tuples, with its own option enumeration.
Slow on purpose; used only to cross-check :mod:`misere_star.engine`.
"""

from __future__ import annotations

import itertools

import numpy as np

from .core import DimensionMismatch, MoveSet, Window
from .engine import Outcome, OutcomeGrid

MAX_CELLS = 10**6


class WindowTooLarge(ValueError):
    pass


def oracle_outcomes(M: MoveSet, W: Window) -> OutcomeGrid:
    if M.dim != W.dim:
        raise DimensionMismatch(f"move set has dimension {M.dim}, window {W.dim}")
    if W.size > MAX_CELLS:
        raise WindowTooLarge(f"oracle limited to {MAX_CELLS} cells, got {W.size}")

    moves = [tuple(int(c) for c in idx) for idx in zip(*np.nonzero(M.members))]
    moves = [m for m in moves if m in W]
    zero = (0,) * W.dim

    value: dict[tuple[int, ...], Outcome] = {}
    if zero in moves:
        for x in itertools.product(*(range(b) for b in W.bounds)):
            value[x] = Outcome.N
    else:

        def options(x):
            for m in moves:
                y = tuple(a - b for a, b in zip(x, m))
                if min(y) >= 0:
                    yield y

        # walk from the top of the box downwards, explicit stack instead of recursion
        for start in itertools.product(*(range(b - 1, -1, -1) for b in W.bounds)):
            if start in value:
                continue
            stack = [start]
            while stack:
                x = stack[-1]
                if x in value:
                    stack.pop()
                    continue
                opts = list(options(x))
                pending = [y for y in opts if y not in value]
                if pending:
                    stack.extend(pending)
                    continue
                stack.pop()
                if not opts:
                    value[x] = Outcome.TERMINAL_N
                elif any(value[y] is Outcome.P for y in opts):
                    value[x] = Outcome.N
                else:
                    value[x] = Outcome.P

    cells = np.empty(W.shape, dtype=np.int8)
    for x, v in value.items():
        cells[x] = int(v)
    return OutcomeGrid(W, cells, zero in moves, M.label)

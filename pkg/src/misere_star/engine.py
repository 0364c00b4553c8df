"""Misère outcomes of vector subtraction games over a window.

A position with no option is a terminal N-position; otherwise it is P iff
every option is N. Options of ``x`` are ``x - m`` for moves ``m <= x``, so
the value at ``x`` only depends on positions below it and any window gives
exact answers.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core import DimensionMismatch, MoveSet, Vec, Window

# below this many cells the level-parallel kernel is not worth launching
PARALLEL_MIN_CELLS = 1 << 18


class Outcome(enum.IntEnum):
    TERMINAL_N = _kernels.TERMINAL
    N = _kernels.NPOS
    P = _kernels.PPOS


@dataclass(frozen=True, eq=False)
class OutcomeGrid:
    window: Window
    cells: np.ndarray  # int8 codes, see Outcome
    has_pass_move: bool
    move_set_label: str = ""

    def __getitem__(self, x) -> Outcome:
        if isinstance(x, (int, np.integer)):
            x = (int(x),)
        return Outcome(int(self.cells[tuple(x)]))

    @property
    def p_mask(self) -> np.ndarray:
        return self.cells == Outcome.P

    @property
    def terminal_mask(self) -> np.ndarray:
        return self.cells == Outcome.TERMINAL_N

    def positions(self, outcome: Outcome) -> list[Vec]:
        return MoveSet(self.cells == outcome).vectors()

    def same_cells(self, other: OutcomeGrid) -> bool:
        return self.window == other.window and bool(np.array_equal(self.cells, other.cells))


def engine_threads() -> int:
    """Thread budget from ``SSL_THREADS``; 0 or unset means numba's default."""
    raw = os.environ.get("SSL_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"SSL_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError("SSL_THREADS must be >= 0")
    import numba

    return numba.config.NUMBA_NUM_THREADS if n == 0 else min(n, numba.config.NUMBA_NUM_THREADS)


def _flat_strides(shape: tuple[int, ...]) -> np.ndarray:
    strides = np.ones(len(shape), dtype=np.int64)
    for i in range(len(shape) - 2, -1, -1):
        strides[i] = strides[i + 1] * shape[i + 1]
    return strides


def _level_order(shape: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    level = np.zeros(shape, dtype=np.int64)
    for axis, n in enumerate(shape):
        idx = [None] * len(shape)
        idx[axis] = slice(None)
        level = level + np.arange(n, dtype=np.int64)[tuple(idx)]
    level = level.ravel()
    order = np.argsort(level, kind="stable")
    starts = np.searchsorted(level[order], np.arange(level.max() + 2))
    return order.astype(np.int64), starts.astype(np.int64)


def compute_outcomes(
    M: MoveSet, W: Window, *, threads: int | None = None, kernel: str = "auto"
) -> OutcomeGrid:
    """Outcome of every position of ``W`` in the misère game with moves ``M``.

    Moves outside ``W`` can never be used inside it and are ignored. A pass
    move (the zero vector) makes every position a draw; the grid then marks
    all cells N and sets ``has_pass_move``. With no moves every cell is
    terminal.

    ``kernel`` is ``"lex"`` (sequential sweep), ``"levels"`` (parallel over
    coordinate-sum levels) or ``"auto"``, which picks the parallel kernel
    for large multi-dimensional windows when more than one thread is allowed.
    Both give identical grids.
    """
    if M.dim != W.dim:
        raise DimensionMismatch(f"move set has dimension {M.dim}, window {W.dim}")
    if kernel not in ("auto", "lex", "levels"):
        raise ValueError(f"unknown kernel {kernel!r}")
    mask = M.restrict(W).members
    if mask.flat[0]:
        cells = np.full(W.shape, Outcome.N, dtype=np.int8)
        return OutcomeGrid(W, cells, True, M.label)

    moves = np.argwhere(mask).astype(np.int64)
    shape = np.array(W.shape, dtype=np.int64)
    offsets = moves @ _flat_strides(W.shape)
    out = np.empty(W.size, dtype=np.int8)
    if threads is None:
        threads = engine_threads()
    if kernel == "auto":
        big = W.dim > 1 and W.size >= PARALLEL_MIN_CELLS
        kernel = "levels" if threads > 1 and big and len(moves) else "lex"
    if kernel == "levels":
        import numba

        order, starts = _level_order(W.shape)
        numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
        _kernels.solve_levels(shape, moves, offsets, order, starts, out)
    else:
        _kernels.solve_lex(shape, moves, offsets, out)
    return OutcomeGrid(W, out.reshape(W.shape), False, M.label)


def p_positions(M: MoveSet, W: Window) -> MoveSet:
    grid = compute_outcomes(M, W)
    return MoveSet(grid.p_mask, label=f"P({M.label})" if M.label else "")

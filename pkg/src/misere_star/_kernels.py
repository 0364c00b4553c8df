"""Compiled inner loops for the outcome engine.

Cell codes: 0 terminal N, 1 N, 2 P. Cells are addressed by their flat
C-order index; moves by coordinate rows plus their flat offset.
"""

import os

import numba as nb
import numpy as np

# the system TBB is too old for numba; skip it unless the user chose otherwise
if "NUMBA_THREADING_LAYER_PRIORITY" not in os.environ:
    nb.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

TERMINAL, NPOS, PPOS = 0, 1, 2


@nb.njit(cache=True)
def solve_lex(shape, moves, offsets, out):
    """Sweep cells in lexicographic order, a linear extension of <=.

    ``moves`` must be sorted lexicographically.
    """
    d = shape.shape[0]
    k = moves.shape[0]
    coord = np.zeros(d, dtype=np.int64)
    for f in range(out.shape[0]):
        has_option = False
        code = PPOS
        for j in range(k):
            if moves[j, 0] > coord[0]:
                break
            ok = True
            for i in range(d):
                if coord[i] < moves[j, i]:
                    ok = False
                    break
            if ok:
                has_option = True
                if out[f - offsets[j]] == PPOS:
                    code = NPOS
                    break
        out[f] = code if has_option else TERMINAL
        i = d - 1
        while i >= 0:
            coord[i] += 1
            if coord[i] < shape[i]:
                break
            coord[i] = 0
            i -= 1


@nb.njit(cache=True, parallel=True)
def solve_levels(shape, moves, offsets, order, level_starts, out):
    """Same recursion, one coordinate-sum level at a time.

    Requires every move to be nonzero, so options of a cell sit on strictly
    lower levels and cells within a level are independent.
    """
    d = shape.shape[0]
    k = moves.shape[0]
    for lv in range(level_starts.shape[0] - 1):
        lo = level_starts[lv]
        hi = level_starts[lv + 1]
        for t in nb.prange(lo, hi):
            f = order[t]
            coord = np.empty(d, dtype=np.int64)
            rem = f
            for i in range(d - 1, -1, -1):
                coord[i] = rem % shape[i]
                rem //= shape[i]
            has_option = False
            code = PPOS
            for j in range(k):
                if moves[j, 0] > coord[0]:
                    break
                ok = True
                for i in range(d):
                    if coord[i] < moves[j, i]:
                        ok = False
                        break
                if ok:
                    has_option = True
                    if out[f - offsets[j]] == PPOS:
                        code = NPOS
                        break
            out[f] = code if has_option else TERMINAL


@nb.njit(cache=True)
def solve_limit(shape, reachable, out):
    """One sweep building the reflexive set over the ``reachable`` cells.

    A reachable cell joins the set unless it splits as ``y + (x - y)`` with
    both parts already in the set.
    """
    d = shape.shape[0]
    n = out.shape[0]
    members = np.empty((n, d), dtype=np.int64)
    member_flat = np.empty(n, dtype=np.int64)
    count = 0
    coord = np.zeros(d, dtype=np.int64)
    for f in range(n):
        inside = False
        if reachable[f]:
            inside = True
            for j in range(count):
                if members[j, 0] > coord[0]:
                    break
                ok = True
                for i in range(d):
                    if coord[i] < members[j, i]:
                        ok = False
                        break
                if ok and out[f - member_flat[j]]:
                    inside = False
                    break
        out[f] = inside
        if inside:
            for i in range(d):
                members[count, i] = coord[i]
            member_flat[count] = f
            count += 1
        i = d - 1
        while i >= 0:
            coord[i] += 1
            if coord[i] < shape[i]:
                break
            coord[i] = 0
            i -= 1

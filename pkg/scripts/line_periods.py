"""Eventual periods of a 2-D limit along rational lines.

The limit is built in one sweep (limit_game), so large windows are cheap.

    python scripts/line_periods.py "(4,0);(0,3)" --window 960
"""

import argparse

import numpy as np

from misere_star import MoveSet, Window, limit_game, line_period
from misere_star.io import parse_inline_moves

DIRECTIONS = [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("moves")
    ap.add_argument("--window", type=int, default=480)
    ap.add_argument("--bases", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    M = MoveSet.from_vectors(parse_inline_moves(args.moves))
    F = limit_game(M, Window((args.window, args.window)))
    rng = np.random.default_rng(args.seed)
    bases = [tuple(int(c) for c in rng.integers(0, 30, 2)) for _ in range(args.bases)]
    for d in DIRECTIONS:
        for b in bases:
            r = line_period(F, b, d)
            print(f"dir={d} base={b} {r.verdict.value:12} pre={r.preperiod} period={r.period} n={r.confirmed_length}")


if __name__ == "__main__":
    main()

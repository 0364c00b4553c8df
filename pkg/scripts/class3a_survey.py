"""Random class 3(a) antichains: how often does the iteration settle after two stars?"""

import argparse
from collections import Counter

import numpy as np

from misere_star import MoveSet, Window, classify_min_moves, survey_class3a


def random_antichain(rng, size, top):
    xs = sorted(rng.choice(np.arange(1, top), size, replace=False))
    ys = sorted(rng.choice(np.arange(1, top), size, replace=False), reverse=True)
    return MoveSet.from_vectors([(int(a), int(b)) for a, b in zip(xs, ys)])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--games", type=int, default=40)
    ap.add_argument("--size", type=int, default=4, help="moves per antichain")
    ap.add_argument("--top", type=int, default=15, help="coordinates drawn from 1..top-1")
    ap.add_argument("--window", type=int, default=80)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    W = Window((args.window, args.window))
    tally = Counter()
    for _ in range(args.games):
        M = random_antichain(rng, args.size, args.top)
        assert str(classify_min_moves(M)) == "3(a)"
        phi = survey_class3a(M, W)
        tally[phi] += 1
        if phi != 2:
            print("exception:", M.vectors(), "phi =", phi)
    print("phi counts:", dict(sorted(tally.items(), key=str)))


if __name__ == "__main__":
    main()

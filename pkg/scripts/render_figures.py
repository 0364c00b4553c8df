"""Render the iteration of a few reference games as PGM / SVG files."""

import argparse
from pathlib import Path

from misere_star import MoveSet, Window, iterate
from misere_star.io import strips_svg, write_pgm

GAMES = {
    "axis_pair": ([(4, 0), (0, 3)], 60),
    "antichain": ([(2, 9), (3, 7), (4, 4), (5, 2), (8, 1)], 60),
    "diagonal": ([(0, 2), (1, 1), (2, 0)], 60),
    "four_nine": ([4, 9], 200),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()

    for name, (moves, side) in GAMES.items():
        M = MoveSet.from_vectors(moves, label=name)
        W = Window((side,) * M.dim)
        tr = iterate(M, W)
        d = Path(args.out) / name
        d.mkdir(parents=True, exist_ok=True)
        if M.dim == 1:
            (d / "iteration.svg").write_text(strips_svg(tr.stages))
        else:
            for i, s in enumerate(tr.stages):
                write_pgm(d / f"stage_{i:02d}.pgm", s)
        print(f"{name}: phi={tr.phi_window} -> {d}")


if __name__ == "__main__":
    main()

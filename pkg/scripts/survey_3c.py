"""phi for the class 3(c) family {(0,n),(x,x),(n,0)} on growing windows.

    python scripts/survey_3c.py --n 5 --windows 60 120
"""

import argparse
import time

from misere_star import MoveSet, Window, phi_window


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=5, help="axis moves (0,n) and (n,0)")
    ap.add_argument("--windows", type=int, nargs="+", default=[60, 120])
    args = ap.parse_args()

    print("x  " + "  ".join(f"{w:>5}" for w in args.windows))
    for x in range(1, args.n):
        M = MoveSet.from_vectors([(0, args.n), (x, x), (args.n, 0)])
        row = []
        for w in args.windows:
            t0 = time.perf_counter()
            row.append(f"{phi_window(M, Window((w, w)))!s:>5}")
            elapsed = time.perf_counter() - t0
        print(f"{x}  " + "  ".join(row) + f"   ({elapsed:.1f} s on the largest window)")


if __name__ == "__main__":
    main()

"""Command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 no fixed point within
``--cap``, 3 a proven identity failed (engine bug).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io, onedim, reflexivity, twodim
from .core import MoveSet, Window, sum_set
from .engine import Outcome, compute_outcomes
from .oracle import oracle_outcomes
from .star import DEFAULT_CAP, NotConverged, iterate, phi_window, star

EXIT_OK, EXIT_USAGE, EXIT_NOT_CONVERGED, EXIT_INVARIANT = 0, 1, 2, 3
DEFAULT_WINDOW = {1: 500, 2: 120}

RENDER_HELP = """\
2-D stages are written as binary PGM (P5) files stage_00.pgm, stage_01.pgm, ...
Members are black (0), non-members white (255). The first coordinate grows to
the right. With --origin bottom-left (default) the second coordinate grows
upwards, so row 0 of the image is the top of the window; with --origin
top-left row 0 is y = 0. 1-D iterations are written as iteration.svg, one
strip per stage.
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_moves(args, dim_hint: int | None = None) -> MoveSet:
    if args.file and args.moves is not None:
        raise UsageError("give either --moves or --file, not both")
    if args.file:
        return io.read_moveset(args.file)
    if args.moves is None:
        raise UsageError("a move set is required (--moves or --file)")
    vecs = io.parse_inline_moves(args.moves)
    dim = len(vecs[0]) if vecs else (args.dim or dim_hint or 1)
    if vecs:
        return MoveSet.from_vectors(vecs, label=args.moves)
    return MoveSet.empty(Window.cube(1, dim), label="{}")


def _window(args, dim: int) -> Window:
    if not args.window:
        return Window.cube(DEFAULT_WINDOW.get(dim, 40), dim)
    try:
        bounds = tuple(int(c) for c in args.window.split(","))
    except ValueError:
        raise UsageError(f"bad --window {args.window!r}") from None
    if len(bounds) == 1:
        bounds = bounds * dim
    if len(bounds) != dim:
        raise UsageError(f"--window has {len(bounds)} axes, moves have {dim}")
    try:
        return Window(bounds)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _game(args) -> tuple[MoveSet, Window]:
    M = _load_moves(args)
    return M, _window(args, M.dim)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _vector_line(S: MoveSet) -> str:
    return io.format_vectors(S.vectors()) + "\n"


def cmd_outcomes(args) -> int:
    M, W = _game(args)
    grid = compute_outcomes(M, W)
    sym = {Outcome.TERMINAL_N: "T", Outcome.N: "N", Outcome.P: "P"}
    cells = grid.cells
    if W.dim == 1:
        text = "".join(sym[Outcome(c)] for c in cells) + "\n"
    elif W.dim == 2:
        # one line per value of the second coordinate, y = 0 first
        text = "".join("".join(sym[Outcome(c)] for c in cells[:, y]) + "\n" for y in range(W.bounds[1]))
    else:
        text = "".join(f"{x} {sym[grid[x]]}\n" for x in W.positions())
    _emit(args, text)
    return EXIT_OK


def cmd_star(args) -> int:
    M, W = _game(args)
    _emit(args, _vector_line(star(M, W)))
    return EXIT_OK


def cmd_iterate(args) -> int:
    M, W = _game(args)
    trace = iterate(M, W, args.cap)
    _emit(args, io.dumps_trace(trace))
    return EXIT_OK if trace.converged else EXIT_NOT_CONVERGED


def cmd_phi(args) -> int:
    M, W = _game(args)
    phi = phi_window(M, W, args.cap)
    print(phi)
    return EXIT_NOT_CONVERGED if phi is NotConverged else EXIT_OK


def cmd_reflexive(args) -> int:
    M, W = _game(args)
    direct = reflexivity.is_reflexive_window(M, W)
    sums = reflexivity.sumset_reflexive_check(M, W)
    print(f"reflexive={str(direct).lower()} sumset={str(sums).lower()}")
    if direct != sums:
        print("error: reflexivity criteria disagree", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_sumset(args) -> int:
    A, W = _game(args)
    B = A
    if args.plus is not None:
        B = MoveSet.from_vectors(io.parse_inline_moves(args.plus), dim=A.dim)
    _emit(args, _vector_line(sum_set(A, B, W)))
    return EXIT_OK


def cmd_mk(args) -> int:
    W = _window(args, 1)
    _emit(args, _vector_line(onedim.generate_Mk(args.k, W)))
    return EXIT_OK


def cmd_ak(args) -> int:
    _emit(args, _vector_line(onedim.generate_Ak(args.k)))
    return EXIT_OK


def cmd_lemma3(args) -> int:
    W = _window(args, 1)
    _emit(args, _vector_line(onedim.lemma3_stage(args.k, args.stage, W)))
    return EXIT_OK


def cmd_min1d(args) -> int:
    X, W = _game(args)
    try:
        ok = onedim.verify_min1d(X, args.k, W)
    except onedim.InvariantViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    print(str(ok).lower())
    return EXIT_OK


def cmd_classify(args) -> int:
    M = _load_moves(args)
    print(twodim.classify_min_moves(M))
    return EXIT_OK


def _parse_vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.strip("()").split(","))
    except ValueError:
        raise UsageError(f"bad vector {text!r}") from None


def cmd_lineperiod(args) -> int:
    M, W = _game(args)
    S = M.restrict(W)
    if args.limit:
        trace = iterate(M, W, args.cap)
        if not trace.converged:
            print("NotConverged")
            return EXIT_NOT_CONVERGED
        S = trace.fixed_point
    rep = twodim.line_period(S, _parse_vec(args.base), _parse_vec(args.direction))
    print(
        f"verdict={rep.verdict.value} preperiod={rep.preperiod} period={rep.period} "
        f"samples={rep.confirmed_length}"
    )
    return EXIT_OK


def cmd_render(args) -> int:
    M, W = _game(args)
    trace = iterate(M, W, args.cap)
    stages = trace.stages[: args.stages + 1] if args.stages is not None else trace.stages
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    if W.dim == 1:
        (out / "iteration.svg").write_text(io.strips_svg(stages))
    elif W.dim == 2:
        for i, s in enumerate(stages):
            io.write_pgm(out / f"stage_{i:02d}.pgm", s, args.origin)
    else:
        raise UsageError("render supports one or two dimensions")
    return EXIT_OK if trace.converged else EXIT_NOT_CONVERGED


def cmd_oracle_check(args) -> int:
    M, W = _game(args)
    same = compute_outcomes(M, W).same_cells(oracle_outcomes(M, W))
    print("agree" if same else "DISAGREE")
    return EXIT_OK if same else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="misere-star", description="Misère vector subtraction games and the star operator.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def game_cmd(name, fn, help, *, window=True, cap=False, out=False, **kw):
        sp = sub.add_parser(name, help=help, **kw)
        sp.add_argument("--moves", help='inline moves: "4,9" (1-D) or "(4,0);(0,3)"')
        sp.add_argument("--file", help="move-set file with a dim=<d> header")
        sp.add_argument("--dim", type=int, help="dimension of an empty --moves")
        if window:
            sp.add_argument("--window", help="per-axis bounds, e.g. 60 or 60,60")
        if cap:
            sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="iteration cap")
        if out:
            sp.add_argument("--out", help="output path")
        sp.set_defaults(fn=fn)
        return sp

    game_cmd("outcomes", cmd_outcomes, "T/N/P for every position", out=True)
    game_cmd("star", cmd_star, "P-positions, i.e. the next game", out=True)
    game_cmd("iterate", cmd_iterate, "iterate star, write a JSON trace", cap=True, out=True)
    game_cmd("phi", cmd_phi, "iterations until the window fixed point", cap=True)
    game_cmd("reflexive", cmd_reflexive, "direct and sum-set reflexivity checks")
    sp = game_cmd("sumset", cmd_sumset, "A + B on the window", out=True)
    sp.add_argument("--plus", help="second summand (default: the same set)")

    for name, fn, help in (("mk", cmd_mk, "the reflexive set M_k"), ("lemma3", cmd_lemma3, "closed-form stage of {k}")):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--window", help="bound of the 1-D window")
        sp.add_argument("--out")
        sp.set_defaults(fn=fn)
        if name == "lemma3":
            sp.add_argument("--stage", type=int, required=True, choices=range(1, 6))
    sp = sub.add_parser("ak", help="the smallest game with P-positions M_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(fn=cmd_ak)

    sp = game_cmd("min1d", cmd_min1d, "check A_k <= X <= M_k against the engine")
    sp.add_argument("--k", type=int, required=True)
    game_cmd("classify", cmd_classify, "class of a 2-D game by its minimal moves", window=False)
    sp = game_cmd("lineperiod", cmd_lineperiod, "eventual period along a line", cap=True)
    sp.add_argument("--base", required=True, help="start position, e.g. 0,5")
    sp.add_argument("--direction", required=True, help="step vector, e.g. 1,2")
    sp.add_argument("--limit", action="store_true", help="analyse the window fixed point instead of the set")
    sp = game_cmd(
        "render", cmd_render, "draw the iteration", cap=True, out=True,
        description=RENDER_HELP, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sp.add_argument("--origin", choices=("bottom-left", "top-left"), default="bottom-left")
    sp.add_argument("--stages", type=int, help="render only stages 0..N")
    game_cmd("oracle-check", cmd_oracle_check, "compare the engine against brute force")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:  # --help or a usage error
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except (UsageError, io.FormatError, ValueError) as e:
        print(f"misere-star: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

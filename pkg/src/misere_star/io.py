"""File formats: move-set files, trace documents, PGM and SVG renderings.

Move-set file::

    dim=2
    # comments and blank lines are ignored
    4,0
    0,3

Trace documents are JSON. Graymaps are binary PGM (``P5``), one byte per
cell: members 0 (black), everything else 255 (white). The first coordinate
runs left to right; the second runs bottom to top with ``origin="bottom-left"``
(the default, matching how lattice pictures are usually drawn) or top to
bottom with ``origin="top-left"``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .core import MoveSet, Vec, Window
from .star import IterationTrace, NotConverged


class FormatError(ValueError):
    pass


# -- move sets ---------------------------------------------------------------


def parse_moveset_text(text: str, window: Window | None = None, label: str = "") -> MoveSet:
    dim = None
    vectors: list[Vec] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if dim is None:
            m = re.fullmatch(r"dim\s*=\s*(\d+)", line)
            if not m:
                raise FormatError(f"line {lineno}: expected 'dim=<d>' header, got {raw!r}")
            dim = int(m.group(1))
            if dim < 1:
                raise FormatError(f"line {lineno}: dimension must be >= 1")
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != dim:
            raise FormatError(f"line {lineno}: expected {dim} fields, got {len(fields)}")
        try:
            v = tuple(int(f) for f in fields)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in {raw!r}") from None
        if any(c < 0 for c in v):
            raise FormatError(f"line {lineno}: negative coordinate in {raw!r}")
        vectors.append(v)
    if dim is None:
        raise FormatError("missing 'dim=<d>' header")
    if window is None and not vectors:
        window = Window.cube(1, dim)
    return MoveSet.from_vectors(vectors, window, dim=dim, label=label)


def read_moveset(path, window: Window | None = None) -> MoveSet:
    path = Path(path)
    return parse_moveset_text(path.read_text(), window, label=path.name)


def format_moveset(S: MoveSet) -> str:
    lines = [f"dim={S.dim}"]
    lines += [",".join(map(str, v)) for v in S.vectors()]
    return "\n".join(lines) + "\n"


def parse_inline_moves(spec: str) -> list[Vec]:
    """``"4,9"`` is two 1-D moves; ``"(4,0);(0,3)"`` is two 2-D moves.

    An empty string is the empty game (its dimension must come from elsewhere).
    """
    spec = spec.strip()
    if not spec:
        return []
    try:
        if "(" in spec or ";" in spec:
            out = []
            for part in spec.split(";"):
                part = part.strip()
                if not part:
                    continue
                inner = part.removeprefix("(").removesuffix(")")
                out.append(tuple(int(c) for c in inner.split(",")))
        else:
            out = [(int(c),) for c in spec.split(",") if c.strip()]
    except ValueError:
        raise FormatError(f"cannot parse moves {spec!r}") from None
    if any(c < 0 for v in out for c in v):
        raise FormatError(f"negative coordinate in {spec!r}")
    if len({len(v) for v in out}) > 1:
        raise FormatError(f"mixed dimensions in {spec!r}")
    return out


def format_vectors(vectors) -> str:
    """Space-separated; scalars for one dimension, ``(a,b)`` tuples otherwise."""
    vectors = list(vectors)
    if vectors and len(vectors[0]) == 1:
        return " ".join(str(v[0]) for v in vectors)
    return " ".join("(" + ",".join(map(str, v)) + ")" for v in vectors)


# -- trace documents ---------------------------------------------------------

TRACE_FORMAT = "misere-star-trace/1"


def trace_to_dict(trace: IterationTrace) -> dict:
    return {
        "format": TRACE_FORMAT,
        "window": list(trace.window.bounds),
        "input": {"label": trace.stages[0].label, "moves": [list(v) for v in trace.stages[0].vectors()]},
        "stages": [
            {"index": i, "label": s.label, "members": [list(v) for v in s.vectors()]}
            for i, s in enumerate(trace.stages)
        ],
        "diff_sets": [[list(v) for v in X] for X in trace.diff_sets],
        "phi_window": None if trace.phi_window is NotConverged else trace.phi_window,
        "converged": trace.converged,
        "iteration_cap": trace.iteration_cap,
        "seconds": trace.seconds,
    }


def trace_from_dict(doc: dict) -> IterationTrace:
    if doc.get("format") != TRACE_FORMAT:
        raise FormatError(f"unknown trace format {doc.get('format')!r}")
    W = Window(tuple(doc["window"]))
    stages = [
        MoveSet.from_vectors([tuple(v) for v in s["members"]], W, label=s["label"])
        for s in sorted(doc["stages"], key=lambda s: s["index"])
    ]
    diffs = [[tuple(v) for v in X] for X in doc["diff_sets"]]
    phi = NotConverged if doc["phi_window"] is None else int(doc["phi_window"])
    return IterationTrace(W, stages, diffs, phi, int(doc["iteration_cap"]), float(doc["seconds"]))


def dumps_trace(trace: IterationTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=1) + "\n"


def loads_trace(text: str) -> IterationTrace:
    return trace_from_dict(json.loads(text))


# -- rasters -----------------------------------------------------------------


def to_raster(S: MoveSet, origin: str = "bottom-left") -> np.ndarray:
    """Row-major uint8 image of a 2-D set, ``image[row, col]``."""
    if S.dim != 2:
        raise ValueError("rasters need a two-dimensional set")
    if origin not in ("bottom-left", "top-left"):
        raise ValueError(f"unknown origin {origin!r}")
    img = np.where(S.members.T, 0, 255).astype(np.uint8)  # rows = second coordinate
    return img[::-1] if origin == "bottom-left" else img


def pgm_bytes(S: MoveSet, origin: str = "bottom-left") -> bytes:
    img = to_raster(S, origin)
    h, w = img.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + np.ascontiguousarray(img).tobytes()


def write_pgm(path, S: MoveSet, origin: str = "bottom-left") -> None:
    Path(path).write_bytes(pgm_bytes(S, origin))


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    m = re.match(rb"P5\s+(\d+)\s+(\d+)\s+(\d+)\s", data)
    if not m:
        raise FormatError("not a binary PGM file")
    w, h = int(m.group(1)), int(m.group(2))
    return np.frombuffer(data[m.end():], dtype=np.uint8, count=w * h).reshape(h, w)


def strips_svg(stages: list[MoveSet], cell: int = 8) -> str:
    """One row of squares per stage, as in the classic 1-D iteration pictures."""
    if not stages or any(s.dim != 1 for s in stages):
        raise ValueError("strip rendering needs one-dimensional stages")
    n = max(s.window.bounds[0] for s in stages)
    label_w = 6 * cell
    width = label_w + n * cell
    height = len(stages) * cell
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for row, s in enumerate(stages):
        y = row * cell
        parts.append(
            f'<text x="2" y="{y + cell - 1}" font-size="{cell}" font-family="monospace">{row}</text>'
        )
        for (x,) in s.vectors():
            parts.append(
                f'<rect x="{label_w + x * cell}" y="{y}" width="{cell}" height="{cell}" fill="black"/>'
            )
    for x in range(n + 1):
        gx = label_w + x * cell
        parts.append(f'<line x1="{gx}" y1="0" x2="{gx}" y2="{height}" stroke="#bbb" stroke-width="0.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

"""Two-heap analysis: classes of minimal-move configurations and line periods.

Games are grouped by how many minimal moves they have (one, two, three or
more) and how many of those lie on an axis. Limit games appear to be
eventually periodic along every rational direction; :func:`line_period`
measures that on a window without claiming more than the data supports.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import MoveSet, Vec, Window, as_vec, min_elements
from .star import DEFAULT_CAP, _NotConverged, phi_window

MIN_SAMPLES = 8
MIN_REPEATS = 3
MIN_COVERAGE = 0.5


@dataclass(frozen=True)
class ClassLabel:
    tier: int  # 1: one minimal move, 2: exactly two, 3: three or more
    sub: str  # "a" | "b" | "c"

    def __str__(self) -> str:
        return f"{self.tier}({self.sub})"


def classify_min_moves(M: MoveSet) -> ClassLabel:
    if M.dim != 2:
        raise ValueError("classification is defined for two heaps")
    mins = min_elements(M)
    if not mins:
        raise ValueError("empty game has no class")
    if mins == [(0, 0)]:
        raise ValueError("games with a pass move have no class")
    on_axis = sum(1 for m in mins if 0 in m)
    if len(mins) == 1:
        return ClassLabel(1, "a" if on_axis else "b")
    # an antichain holds at most one move per axis
    return ClassLabel(2 if len(mins) == 2 else 3, "abc"[on_axis])


class Verdict(enum.Enum):
    PERIODIC = "Periodic"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class LinePeriodReport:
    base: Vec
    direction: Vec
    preperiod: int
    period: int
    confirmed_length: int
    verdict: Verdict

    @property
    def periodic(self) -> bool:
        return self.verdict is Verdict.PERIODIC


def canonical_direction(direction) -> tuple[int, ...]:
    d = tuple(int(c) for c in direction)
    g = math.gcd(*d) if len(d) > 1 else abs(d[0])
    if g == 0:
        raise ValueError("direction must be nonzero")
    return tuple(c // g for c in d)


def sample_line(S: MoveSet, base, direction) -> list[bool]:
    """Membership of ``base + n * direction`` for n = 0, 1, ... while inside the window.

    Directions may carry negative components (negative slopes); the walk then
    simply stops at the window edge.
    """
    base = as_vec(base)
    step = canonical_direction(direction)
    W = S.window
    if len(base) != W.dim or len(step) != W.dim:
        raise ValueError("base and direction must match the set's dimension")
    if base not in W:
        raise ValueError(f"base {base} outside {W}")
    out = []
    x = list(base)
    while tuple(x) in W:
        out.append(bool(S.members[tuple(x)]))
        x = [a + b for a, b in zip(x, step)]
    return out


def _failure(s) -> list[int]:
    pi = [0] * (len(s) + 1)
    for i in range(1, len(s)):
        j = pi[i]
        while j and s[i] != s[j]:
            j = pi[j]
        pi[i + 1] = j + 1 if s[i] == s[j] else 0
    return pi


def eventual_period(
    seq, min_repeats: int = MIN_REPEATS, min_coverage: float = MIN_COVERAGE
) -> tuple[int, int] | None:
    """Least preperiod, then least period, of ``seq``.

    The periodic tail must hold at least ``min_repeats`` full periods and
    cover at least ``min_coverage`` of the samples; otherwise ``None``.
    Works on the reversed sequence, whose prefixes are the tails of ``seq``:
    a prefix of length ``L`` has a period ``p <= L / min_repeats`` iff its
    shortest period (from the failure function) does.
    """
    r = list(seq)[::-1]
    n = len(r)
    pi = _failure(r)
    shortest = max(1, math.ceil(min_coverage * n))
    for L in range(n, shortest - 1, -1):
        p = L - pi[L]
        if min_repeats * p <= L:
            return n - L, p
    return None


def line_period(S: MoveSet, base, direction) -> LinePeriodReport:
    seq = sample_line(S, base, direction)
    if len(seq) < MIN_SAMPLES:
        raise ValueError(f"only {len(seq)} samples along the line, need {MIN_SAMPLES}")
    base, step = as_vec(base), canonical_direction(direction)
    found = eventual_period(seq)
    if found is None:
        return LinePeriodReport(base, step, 0, 0, len(seq), Verdict.INCONCLUSIVE)
    pre, p = found
    return LinePeriodReport(base, step, pre, p, len(seq), Verdict.PERIODIC)


def survey_class3a(M: MoveSet, W: Window, cap: int = DEFAULT_CAP) -> int | _NotConverged:
    label = classify_min_moves(M)
    if label != ClassLabel(3, "a"):
        raise ValueError(f"expected class 3(a), got {label}")
    return phi_window(M, W, cap)

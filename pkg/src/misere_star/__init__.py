"""Misère-play vector subtraction games and the star operator ``M -> P(M)``."""

from .core import (
    DimensionMismatch,
    MoveSet,
    Vec,
    Window,
    min_elements,
    partial_le,
    partial_lt,
    sum_set,
    terminal_set,
)
from .engine import Outcome, OutcomeGrid, compute_outcomes, p_positions
from .onedim import MkParams, generate_Ak, generate_Mk, lemma3_stage, verify_min1d
from .oracle import oracle_outcomes
from .reflexivity import is_reflexive_window, solvability_check, sumset_reflexive_check
from .star import (
    DEFAULT_CAP,
    IterationTrace,
    NotConverged,
    compare_limits,
    iterate,
    limit_game,
    min_diff_set,
    phi_window,
    star,
)
from .twodim import ClassLabel, LinePeriodReport, Verdict, classify_min_moves, line_period, survey_class3a

__all__ = [name for name in dir() if not name.startswith("_")]

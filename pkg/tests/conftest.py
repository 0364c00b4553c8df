import numpy as np
import pytest
from hypothesis import strategies as st

from misere_star import MoveSet, Window

ACCEPTANCE = []


def random_moveset(rng, window: Window, n_moves: int, *, allow_zero=False, label="") -> MoveSet:
    pts = set()
    while len(pts) < n_moves:
        v = tuple(int(rng.integers(0, b)) for b in window.bounds)
        if allow_zero or any(v):
            pts.add(v)
    return MoveSet.from_vectors(sorted(pts), window, dim=window.dim, label=label)


@st.composite
def games(draw, dim=None, max_side=None, max_moves=6, allow_zero=False):
    """A (MoveSet, Window) pair with the moves inside the window."""
    d = draw(st.integers(1, 3)) if dim is None else dim
    side = max_side or {1: 60, 2: 14, 3: 6}[d]
    bounds = tuple(draw(st.integers(1, side)) for _ in range(d))
    W = Window(bounds)
    vecs = draw(
        st.lists(
            st.tuples(*(st.integers(0, b - 1) for b in bounds)),
            max_size=max_moves,
            unique=True,
        )
    )
    if not allow_zero:
        vecs = [v for v in vecs if any(v)]
    return MoveSet.from_vectors(vecs, W, dim=d), W


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        ACCEPTANCE.append((marker.args[0], marker.args[1], rep.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, detail in sorted(ACCEPTANCE, key=lambda r: r[0]):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] criterion {num:2d}: {title}"
        if detail:
            line += f" -- {detail}"
        terminalreporter.write_line(line)

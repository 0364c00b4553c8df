"""Integer vectors, windows, move sets and the order-theoretic helpers on them.

Positions and moves are plain tuples of non-negative ints. A :class:`MoveSet`
stores a dense boolean mask over a :class:`Window`; everything outside the
window is treated as absent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

Vec = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


def as_vec(x: int | Iterable[int]) -> Vec:
    if isinstance(x, (int, np.integer)):
        v = (int(x),)
    else:
        v = tuple(int(c) for c in x)
    if not v:
        raise ValueError("vectors need at least one coordinate")
    if any(c < 0 for c in v):
        raise ValueError(f"negative coordinate in {v}")
    return v


def _check_dims(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise DimensionMismatch(f"dimension mismatch: {len(x)} vs {len(y)}")


def partial_le(x: Sequence[int], y: Sequence[int]) -> bool:
    """Componentwise order: ``x <= y`` in every coordinate."""
    _check_dims(x, y)
    return all(a <= b for a, b in zip(x, y))


def partial_lt(x: Sequence[int], y: Sequence[int]) -> bool:
    _check_dims(x, y)
    return partial_le(x, y) and tuple(x) != tuple(y)


@dataclass(frozen=True)
class Window:
    """The box ``[0, bounds[0]) x ... x [0, bounds[d-1])``."""

    bounds: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(v) for v in self.bounds)
        if not b:
            raise ValueError("window needs at least one axis")
        if any(v < 1 for v in b):
            raise ValueError(f"window bounds must be >= 1, got {b}")
        object.__setattr__(self, "bounds", b)

    @classmethod
    def cube(cls, n: int, dim: int = 1) -> Window:
        return cls((n,) * dim)

    @property
    def dim(self) -> int:
        return len(self.bounds)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.bounds

    @property
    def size(self) -> int:
        return int(np.prod(self.bounds, dtype=np.int64))

    def __contains__(self, x) -> bool:
        x = tuple(x)
        return len(x) == self.dim and all(0 <= c < b for c, b in zip(x, self.bounds))

    def positions(self) -> Iterator[Vec]:
        """All positions in lexicographic order."""
        yield from np.ndindex(*self.bounds)

    def __str__(self) -> str:
        return "x".join(f"[0,{b})" for b in self.bounds)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class MoveSet:
    """A set of vectors restricted to a window, stored as a boolean mask.

    Instances are immutable. Equality compares window and members; the label
    is informational only.
    """

    __slots__ = ("_members", "label")

    def __init__(self, members: np.ndarray, label: str = ""):
        m = np.array(members, dtype=bool, copy=True)
        if m.ndim < 1 or any(s < 1 for s in m.shape):
            raise ValueError(f"bad membership shape {m.shape}")
        self._members = _readonly(m)
        self.label = label

    @classmethod
    def empty(cls, window: Window, label: str = "") -> MoveSet:
        return cls(np.zeros(window.shape, dtype=bool), label)

    @classmethod
    def from_vectors(
        cls,
        vectors: Iterable[int | Iterable[int]],
        window: Window | None = None,
        *,
        dim: int | None = None,
        label: str = "",
    ) -> MoveSet:
        """Densify an explicit list of vectors.

        Without a window, the tightest box holding every vector is used.
        Vectors outside an explicit window are dropped.
        """
        vecs = [as_vec(v) for v in vectors]
        dims = {len(v) for v in vecs}
        if window is not None:
            dims.add(window.dim)
        if dim is not None:
            dims.add(dim)
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed dimensions {sorted(dims)}")
        if not dims:
            raise ValueError("cannot infer the dimension of an empty set")
        d = dims.pop()
        if window is None:
            bounds = [1] * d
            for v in vecs:
                bounds = [max(b, c + 1) for b, c in zip(bounds, v)]
            window = Window(tuple(bounds))
        mask = np.zeros(window.shape, dtype=bool)
        inside = [v for v in vecs if v in window]
        if inside:
            mask[tuple(np.array(inside).T)] = True
        return cls(mask, label)

    @property
    def members(self) -> np.ndarray:
        return self._members

    @property
    def window(self) -> Window:
        return Window(self._members.shape)

    @property
    def dim(self) -> int:
        return self._members.ndim

    def vectors(self) -> list[Vec]:
        """Members in lexicographic order."""
        return [tuple(int(c) for c in row) for row in np.argwhere(self._members)]

    def __iter__(self) -> Iterator[Vec]:
        return iter(self.vectors())

    def __len__(self) -> int:
        return int(self._members.sum())

    def __bool__(self) -> bool:
        return bool(self._members.any())

    def __contains__(self, x) -> bool:
        x = as_vec(x)
        return x in self.window and bool(self._members[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoveSet):
            return NotImplemented
        return self._members.shape == other._members.shape and bool(
            np.array_equal(self._members, other._members)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        vecs = self.vectors()
        shown = ", ".join(map(str, vecs[:8])) + (", ..." if len(vecs) > 8 else "")
        lab = f" {self.label!r}" if self.label else ""
        return f"MoveSet({self.window}{lab}: {{{shown}}})"

    def restrict(self, window: Window, label: str | None = None) -> MoveSet:
        """Crop or zero-pad to ``window``."""
        if window.dim != self.dim:
            raise DimensionMismatch(f"dimension mismatch: {self.dim} vs {window.dim}")
        out = np.zeros(window.shape, dtype=bool)
        common = tuple(slice(0, min(a, b)) for a, b in zip(window.shape, self._members.shape))
        out[common] = self._members[common]
        return MoveSet(out, self.label if label is None else label)

    def with_label(self, label: str) -> MoveSet:
        return MoveSet(self._members, label)

    def contains_origin(self) -> bool:
        return bool(self._members.flat[0])


def _dominated_mask(mask: np.ndarray) -> np.ndarray:
    """``out[x]`` is true iff some member ``y`` of ``mask`` has ``y <= x``."""
    out = mask
    for axis in range(mask.ndim):
        out = np.logical_or.accumulate(out, axis=axis)
    return out


def _strictly_dominated_mask(mask: np.ndarray) -> np.ndarray:
    # y < x strictly implies y <= x - e_i for some axis i with x_i > 0
    up = _dominated_mask(mask)
    out = np.zeros_like(mask)
    for axis in range(mask.ndim):
        src = [slice(None)] * mask.ndim
        dst = [slice(None)] * mask.ndim
        src[axis] = slice(0, -1)
        dst[axis] = slice(1, None)
        out[tuple(dst)] |= up[tuple(src)]
    return out


def min_mask(S: MoveSet) -> np.ndarray:
    m = S.members
    return m & ~_strictly_dominated_mask(m)


def min_elements(S: MoveSet) -> list[Vec]:
    """The minimal members of ``S`` (an antichain), lexicographically sorted."""
    return MoveSet(min_mask(S)).vectors()


def terminal_mask(M: MoveSet, W: Window) -> np.ndarray:
    if M.dim != W.dim:
        raise DimensionMismatch(f"dimension mismatch: {M.dim} vs {W.dim}")
    return ~_dominated_mask(M.restrict(W).members)


def terminal_set(M: MoveSet, W: Window) -> list[Vec]:
    """Window positions that dominate no move."""
    return MoveSet(terminal_mask(M, W)).vectors()


def sum_mask(A: MoveSet, B: MoveSet, W: Window) -> np.ndarray:
    if not (A.dim == B.dim == W.dim):
        raise DimensionMismatch(f"dimension mismatch: {A.dim}, {B.dim}, {W.dim}")
    a = A.restrict(W).members
    b = B.restrict(W).members
    if a.sum() > b.sum():
        a, b = b, a
    out = np.zeros(W.shape, dtype=bool)
    for v in np.argwhere(a):
        dst = tuple(slice(int(c), None) for c in v)
        src = tuple(slice(0, n - int(c)) for c, n in zip(v, W.shape))
        out[dst] |= b[src]
    return out


def sum_set(A: MoveSet, B: MoveSet, W: Window) -> MoveSet:
    """``{a + b}`` for members a of A and b of B, restricted to ``W``."""
    return MoveSet(sum_mask(A, B, W))

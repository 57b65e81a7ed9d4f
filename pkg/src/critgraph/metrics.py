"""Distances, eccentricities and diameter by frontier-expansion BFS."""

from __future__ import annotations

import functools

from .graph import Graph, GraphError, open_nbhd_mask


@functools.total_ordering
class ExtendedInt:
    """A non-negative integer or infinity.

    Compares with plain ints, with infinity above every finite value.  Never a
    sentinel: ``value`` is ``None`` exactly when infinite.
    """

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        if value is not None and value < 0:
            raise ValueError("value must be non-negative")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    @classmethod
    def infinite(cls):
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _key(self):
        return (1, 0) if self.value is None else (0, self.value)

    @staticmethod
    def _other_key(other):
        if isinstance(other, ExtendedInt):
            return other._key()
        if isinstance(other, int) and not isinstance(other, bool):
            return (0, other)
        if isinstance(other, float) and other == float("inf"):
            return (1, 0)
        return None

    def __eq__(self, other):
        k = self._other_key(other)
        if k is None:
            return NotImplemented
        return self._key() == k

    def __lt__(self, other):
        k = self._other_key(other)
        if k is None:
            return NotImplemented
        return self._key() < k

    def __hash__(self):
        return hash(self.value) if self.value is not None else hash(float("inf"))

    def __int__(self):
        if self.value is None:
            raise OverflowError("infinite value has no integer form")
        return self.value

    def to_json(self) -> int | str:
        return "inf" if self.value is None else self.value

    def __str__(self):
        return "∞" if self.value is None else str(self.value)

    def __repr__(self):
        return f"{type(self).__name__}({'inf' if self.value is None else self.value})"


class Distance(ExtendedInt):
    pass


INFINITE = Distance(None)


def _bfs_levels(rows: tuple[int, ...], full: int, src: int) -> tuple[int, int]:
    """Return ``(eccentricity, reached_mask)`` from ``src``."""
    seen = 1 << src
    frontier = seen
    depth = 0
    while True:
        nxt = open_nbhd_mask(rows, frontier) & ~seen
        if not nxt:
            return depth, seen
        seen |= nxt
        frontier = nxt
        depth += 1
        if seen == full:
            return depth, seen


def distance_raw(rows: tuple[int, ...], u: int, v: int) -> int | None:
    if u == v:
        return 0
    target = 1 << v
    seen = 1 << u
    frontier = seen
    depth = 0
    while frontier:
        depth += 1
        nxt = open_nbhd_mask(rows, frontier) & ~seen
        if nxt & target:
            return depth
        seen |= nxt
        frontier = nxt
    return None


def diameter_raw(rows: tuple[int, ...], n: int) -> int | None:
    """Diameter of a graph given by ``rows``; ``None`` when disconnected."""
    full = (1 << n) - 1
    best = 0
    for v in range(n):
        ecc, seen = _bfs_levels(rows, full, v)
        if seen != full:
            return None
        if ecc > best:
            best = ecc
    return best


def diameter_at_most_two(rows: tuple[int, ...], n: int) -> bool:
    full = (1 << n) - 1
    for v in range(n):
        r = rows[v]
        if (open_nbhd_mask(rows, r) | r | (1 << v)) != full:
            return False
    return True


def distance(g: Graph, u: int, v: int) -> Distance:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range for n={g.n}")
    return Distance(distance_raw(g.rows, u, v))


def eccentricity(g: Graph, v: int) -> Distance:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    ecc, seen = _bfs_levels(g.rows, g.full, v)
    return Distance(ecc if seen == g.full else None)


def diameter(g: Graph) -> Distance:
    if g.n == 0:
        raise GraphError("diameter of the null graph is undefined")
    return Distance(diameter_raw(g.rows, g.n))

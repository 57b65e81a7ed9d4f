"""Immutable simple graphs over integer bit-set adjacency rows.

Row ``i`` of a graph is a Python ``int`` whose bit ``j`` is set iff ``ij`` is an
edge.  Arbitrary-precision ints give us multi-word bit-sets for free, so the
same representation covers every size up to ``MAX_ORDER``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 512


class GraphError(ValueError):
    """Invalid graph construction or edit."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class VertexSet:
    """An immutable set of vertex indices backed by a single bit-set."""

    __slots__ = ("bits",)

    def __init__(self, vertices: Iterable[int] | int = 0):
        if isinstance(vertices, int):
            if vertices < 0:
                raise ValueError("bit-set must be non-negative")
            bits = vertices
        else:
            bits = 0
            for v in vertices:
                if v < 0:
                    raise ValueError(f"negative vertex index {v}")
                bits |= 1 << v
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_bits(cls, bits: int) -> "VertexSet":
        return cls(bits)

    def __iter__(self) -> Iterator[int]:
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and (self.bits >> v) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        if isinstance(other, (set, frozenset)):
            return self.bits == mask_of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self.bits))

    def __lt__(self, other: "VertexSet") -> bool:
        return self.sort_key() < other.sort_key()

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | _bits(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & _bits(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~_bits(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits ^ _bits(other))

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~_bits(other) == 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Order by size, then by sorted members."""
        return (len(self), tuple(self))

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(map(str, self)) + "})"


def _bits(s: VertexSet | Iterable[int] | int) -> int:
    if isinstance(s, VertexSet):
        return s.bits
    if isinstance(s, int):
        return s
    return mask_of(s)


def as_mask(s: VertexSet | Iterable[int] | int) -> int:
    """Coerce a vertex set, iterable of vertices, or raw mask to a mask."""
    return _bits(s)


class PairKind(enum.Enum):
    EDGE = "edge"
    MISSING = "missing"


@dataclass(frozen=True)
class VertexPair:
    """Unordered vertex pair stored with ``u < v``."""

    u: int
    v: int
    kind: PairKind = PairKind.EDGE

    def __post_init__(self):
        if self.u == self.v:
            raise GraphError(f"degenerate pair ({self.u}, {self.v})")
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    @classmethod
    def of(cls, g: "Graph", a: int, b: int) -> "VertexPair":
        kind = PairKind.EDGE if g.has_edge(a, b) else PairKind.MISSING
        return cls(a, b, kind)

    @property
    def mask(self) -> int:
        return (1 << self.u) | (1 << self.v)

    def ends(self) -> tuple[int, int]:
        return (self.u, self.v)

    def __lt__(self, other: "VertexPair") -> bool:
        return (self.u, self.v) < (other.u, other.v)

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x} is not an end of {self}")

    def __contains__(self, x: object) -> bool:
        return x == self.u or x == self.v

    def __str__(self) -> str:
        return f"{self.u}{self.v}" if max(self.u, self.v) < 10 else f"{self.u}-{self.v}"


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[i]`` is the open neighbourhood of ``i`` as a bit-set.  Editing
    methods return new graphs.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Iterable[int] | None = None):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = tuple(rows) if rows is not None else (0,) * n
        if len(rows) != n:
            raise GraphError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r < 0 or r & ~full:
                raise GraphError(f"row {i} has bits outside 0..{n - 1}")
            if (r >> i) & 1:
                raise GraphError(f"loop at vertex {i}")
            for j in bits_of(r):
                if not (rows[j] >> i) & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
        self._set(n, rows)

    def _set(self, n: int, rows: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Internal fast path: caller guarantees the invariants.
        g = object.__new__(cls)
        g._set(n, rows)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls._trusted(n, tuple(rows))

    # -- basic queries -------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet(self.full)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        return (self.rows[a] >> b) & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.rows[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def num_missing_edges(self) -> int:
        return self.n * (self.n - 1) // 2 - self.num_edges

    def edges(self) -> list[VertexPair]:
        """Edges in lexicographic order."""
        out = []
        for u, r in enumerate(self.rows):
            for v in bits_of(r >> (u + 1)):
                out.append(VertexPair(u, u + 1 + v, PairKind.EDGE))
        return out

    def missing_edges(self) -> list[VertexPair]:
        """Non-adjacent pairs in lexicographic order."""
        out = []
        full = self.full
        for u, r in enumerate(self.rows):
            for v in bits_of((~r & full) >> (u + 1)):
                out.append(VertexPair(u, u + 1 + v, PairKind.MISSING))
        return out

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    # -- edits -----------------------------------------------------------

    def add_edge(self, a: int, b: int) -> "Graph":
        self._check_vertex(a)
        self._check_vertex(b)
        if a == b:
            raise GraphError(f"loop at vertex {a}")
        rows = list(self.rows)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
        return Graph._trusted(self.n, tuple(rows))

    def remove_edge(self, a: int, b: int) -> "Graph":
        self._check_vertex(a)
        self._check_vertex(b)
        rows = list(self.rows)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        return Graph._trusted(self.n, tuple(rows))

    def induced_subgraph(self, keep: VertexSet | Iterable[int]) -> "Graph":
        """Subgraph induced on ``keep``, relabelled ``0..k-1`` in index order."""
        kept = list(bits_of(as_mask(keep) & self.full))
        pos = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            r = 0
            for w in bits_of(self.rows[v]):
                if w in pos:
                    r |= 1 << pos[w]
            rows.append(r)
        return Graph._trusted(len(kept), tuple(rows))

    def delete_vertices(self, s: VertexSet | Iterable[int]) -> "Graph":
        return self.induced_subgraph(self.full & ~as_mask(s))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [0] * self.n
        for v, r in enumerate(self.rows):
            nr = 0
            for w in bits_of(r):
                nr |= 1 << perm[w]
            rows[perm[v]] = nr
        return Graph._trusted(self.n, tuple(rows))

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        es = ", ".join(f"({e.u},{e.v})" for e in self.edges())
        return f"Graph(n={self.n}, edges=[{es}])"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.rows))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, tuple((~r & full) & ~(1 << i) for i, r in enumerate(g.rows)))


def closed_neighborhood(g: Graph, s: VertexSet | Iterable[int]) -> VertexSet:
    """``N[S] = N(S) ∪ S``."""
    m = as_mask(s)
    if m & ~g.full:
        raise GraphError("vertex set not contained in V(g)")
    return VertexSet(closed_nbhd_mask(g.rows, m))


def open_neighborhood(g: Graph, s: VertexSet | Iterable[int]) -> VertexSet:
    m = as_mask(s)
    if m & ~g.full:
        raise GraphError("vertex set not contained in V(g)")
    return VertexSet(open_nbhd_mask(g.rows, m))


def open_nbhd_mask(rows: tuple[int, ...], m: int) -> int:
    out = 0
    while m:
        low = m & -m
        out |= rows[low.bit_length() - 1]
        m ^= low
    return out


def closed_nbhd_mask(rows: tuple[int, ...], m: int) -> int:
    return open_nbhd_mask(rows, m) | m


def component_masks(rows: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, by min vertex."""
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = open_nbhd_mask(rows, frontier) & alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def components(g: Graph) -> list[VertexSet]:
    return [VertexSet(c) for c in component_masks(g.rows, g.full)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g.rows, g.full)) == 1


def is_independent_mask(rows: tuple[int, ...], m: int) -> bool:
    return open_nbhd_mask(rows, m) & m == 0


def is_clique_mask(rows: tuple[int, ...], m: int) -> bool:
    for v in bits_of(m):
        if (m & ~(1 << v)) & ~rows[v]:
            return False
    return True

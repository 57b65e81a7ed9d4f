"""Domination and total domination: predicates, exact numbers, adjacent pairs."""

from __future__ import annotations

import enum
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    PairKind,
    VertexPair,
    VertexSet,
    as_mask,
    complement,
    open_nbhd_mask,
)
from .metrics import ExtendedInt, diameter_raw


class DominationKind(enum.Enum):
    CLOSED = "closed"
    TOTAL = "total"


class DominationNumber(ExtendedInt):
    pass


def _cover_rows(rows: tuple[int, ...], kind: DominationKind) -> list[int]:
    # cover[c] is the set of vertices that c dominates
    if kind is DominationKind.CLOSED:
        return [r | (1 << i) for i, r in enumerate(rows)]
    return list(rows)


def dominates(g: Graph, s: VertexSet | Iterable[int], kind: DominationKind = DominationKind.CLOSED) -> bool:
    m = as_mask(s)
    if m & ~g.full:
        raise GraphError("vertex set not contained in V(g)")
    covered = open_nbhd_mask(g.rows, m)
    if kind is DominationKind.CLOSED:
        covered |= m
    return covered == g.full


def _search(cover: list[int], undominated: int, budget: int, chosen: list[int], widest: int) -> bool:
    if not undominated:
        return True
    if budget == 0 or widest * budget < undominated.bit_count():
        return False
    u = (undominated & -undominated).bit_length() - 1
    # any solution must contain some c that covers u
    for c, cov in enumerate(cover):
        if (cov >> u) & 1:
            chosen.append(c)
            if _search(cover, undominated & ~cov, budget - 1, chosen, widest):
                return True
            chosen.pop()
    return False


def minimum_dominating_set_raw(rows: tuple[int, ...], n: int, kind: DominationKind) -> int | None:
    """A minimum (total) dominating set as a mask, deterministic; ``None`` if none exists."""
    full = (1 << n) - 1
    cover = _cover_rows(rows, kind)
    if n == 0:
        return 0
    if kind is DominationKind.TOTAL and any(r == 0 for r in rows):
        return None
    widest = max(c.bit_count() for c in cover)
    for k in range(1, n + 1):
        chosen: list[int] = []
        if _search(cover, full, k, chosen, widest):
            m = 0
            for c in chosen:
                m |= 1 << c
            return m
    raise AssertionError("V is always a (total) dominating set here")


def total_domination_number_raw(rows: tuple[int, ...], n: int) -> int | None:
    m = minimum_dominating_set_raw(rows, n, DominationKind.TOTAL)
    return None if m is None else m.bit_count()


def minimum_dominating_set(g: Graph, kind: DominationKind = DominationKind.CLOSED) -> VertexSet | None:
    m = minimum_dominating_set_raw(g.rows, g.n, kind)
    return None if m is None else VertexSet(m)


def domination_number(g: Graph, kind: DominationKind = DominationKind.CLOSED) -> DominationNumber:
    """γ(G) for ``CLOSED``, γt(G) for ``TOTAL`` (infinite with isolated vertices)."""
    if g.n == 0:
        raise GraphError("domination number of the null graph is undefined")
    m = minimum_dominating_set_raw(g.rows, g.n, kind)
    return DominationNumber(None if m is None else m.bit_count())


def adjacent_dominating_pair_raw(rows: tuple[int, ...], n: int) -> tuple[int, int] | None:
    full = (1 << n) - 1
    for u in range(n):
        ru = rows[u] | (1 << u)
        higher = rows[u] >> (u + 1)
        v = u + 1
        while higher:
            if higher & 1 and (ru | rows[v] | (1 << v)) == full:
                return (u, v)
            higher >>= 1
            v += 1
    return None


def adjacent_dominating_pair(g: Graph) -> VertexPair | None:
    """Lexicographically least edge ``xy`` with ``N[{x, y}] = V``, if any."""
    if g.n < 2:
        raise GraphError("need at least two vertices")
    p = adjacent_dominating_pair_raw(g.rows, g.n)
    return None if p is None else VertexPair(p[0], p[1], PairKind.EDGE)


def duality_check(g: Graph) -> bool:
    """True iff (an adjacent dominating pair exists) == (diam(G^c) > 2)."""
    if g.n < 2:
        raise GraphError("duality needs a nontrivial graph")
    has_pair = adjacent_dominating_pair_raw(g.rows, g.n) is not None
    d = diameter_raw(complement(g).rows, g.n)
    return has_pair == (d is None or d > 2)


def has_total_dominating_pair_raw(rows: tuple[int, ...], n: int) -> bool:
    """γt ≤ 2: an adjacent pair whose open neighbourhoods cover V."""
    return adjacent_dominating_pair_raw(rows, n) is not None


def tdscap_holds(g: Graph, s: VertexSet | Iterable[int]) -> bool:
    """For a TDS ``s``: every closed neighbourhood meets ``s``."""
    m = as_mask(s)
    return all((r | (1 << v)) & m for v, r in enumerate(g.rows))


def vertices_missing(g: Graph, s: VertexSet | Iterable[int], kind: DominationKind) -> VertexSet:
    m = as_mask(s)
    covered = open_nbhd_mask(g.rows, m)
    if kind is DominationKind.CLOSED:
        covered |= m
    return VertexSet(g.full & ~covered)


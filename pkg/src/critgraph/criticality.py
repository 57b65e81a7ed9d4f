"""Edge-criticality predicates, the arrow relation, and quasi-edges.

``arrow(g, x, y, w)`` is the relation written ``xy ↦ w``: ``xy`` is an edge,
neither ``x`` nor ``y`` is adjacent to ``w``, and ``{x, y}`` dominates every
vertex except ``w``.  A quasi-edge of a missing edge ``uv`` is an edge ``xy``
with ``xy ↦ v`` and ``u ∈ {x, y}`` (or the same with ``u`` and ``v`` swapped).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .domination import adjacent_dominating_pair_raw, minimum_dominating_set_raw, DominationKind
from .graph import (
    Graph,
    GraphError,
    PairKind,
    VertexPair,
    bits_of,
    complement,
    component_masks,
    is_clique_mask,
)
from .metrics import diameter_at_most_two, diameter_raw


class CriticalKind(enum.Enum):
    STAR_COMPLEMENT = "StarComplement"
    THREE_GT_CRITICAL = "ThreeGtCritical"
    FOUR_SUPERCRITICAL = "FourSupercritical"
    NOT_DIAMETER2_CRITICAL = "NotDiameter2Critical"


@dataclass(frozen=True)
class CriticalClass:
    kind: CriticalKind
    diam: int | None = None

    def __post_init__(self):
        if self.kind is CriticalKind.THREE_GT_CRITICAL:
            if self.diam not in (2, 3):
                raise ValueError(f"3-γt-critical class needs diam 2 or 3, got {self.diam}")
        elif self.diam is not None:
            raise ValueError(f"{self.kind.value} carries no diameter tag")

    @property
    def positive(self) -> bool:
        return self.kind is not CriticalKind.NOT_DIAMETER2_CRITICAL

    def __str__(self) -> str:
        if self.kind is CriticalKind.THREE_GT_CRITICAL:
            return f"ThreeGtCritical(diam={self.diam})"
        return self.kind.value


STAR_COMPLEMENT = CriticalClass(CriticalKind.STAR_COMPLEMENT)
FOUR_SUPERCRITICAL = CriticalClass(CriticalKind.FOUR_SUPERCRITICAL)
NOT_DIAMETER2_CRITICAL = CriticalClass(CriticalKind.NOT_DIAMETER2_CRITICAL)


class TrichotomyError(AssertionError):
    """A diameter-2 edge-critical graph whose complement is in zero or several classes."""

    def __init__(self, g: Graph, memberships: dict[str, bool]):
        self.graph = g
        self.memberships = memberships
        super().__init__(f"complement class memberships {memberships} for {g!r}")


@dataclass(frozen=True)
class ArrowWitness:
    """``xy ↦ w`` with ``x < y``."""

    x: int
    y: int
    w: int

    def __post_init__(self):
        if self.x > self.y:
            a, b = self.y, self.x
            object.__setattr__(self, "x", a)
            object.__setattr__(self, "y", b)

    @property
    def edge(self) -> VertexPair:
        return VertexPair(self.x, self.y, PairKind.EDGE)

    def __str__(self) -> str:
        return f"{self.x}{self.y}↦{self.w}"


class CaseKind(enum.Enum):
    DOMINATES_ALL = "dominates_all"
    ARROW = "arrow"
    VIOLATION = "violation"


@dataclass(frozen=True)
class MissingEdgeCase:
    kind: CaseKind
    witness: ArrowWitness | None = None

    def __str__(self) -> str:
        if self.kind is CaseKind.ARROW:
            return f"Arrow({self.witness})"
        return "DominatesAll" if self.kind is CaseKind.DOMINATES_ALL else "Violation"


# -- raw kernels -----------------------------------------------------------


def _toggle(rows: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    r = list(rows)
    r[a] ^= 1 << b
    r[b] ^= 1 << a
    return tuple(r)


def is_diameter2_critical_raw(rows: tuple[int, ...], n: int) -> bool:
    if n < 3 or not diameter_at_most_two(rows, n):
        return False
    if sum(r.bit_count() for r in rows) == n * (n - 1):
        return False  # complete: diameter 1
    for u in range(n):
        for v in bits_of(rows[u] >> (u + 1)):
            if diameter_at_most_two(_toggle(rows, u, u + 1 + v), n):
                return False
    return True


def _has_tds_within(rows: tuple[int, ...], n: int, budget: int) -> bool:
    """Is there a total dominating set of size at most ``budget``?"""
    m = minimum_dominating_set_raw(rows, n, DominationKind.TOTAL)
    return m is not None and m.bit_count() <= budget


def _gamma_t(rows: tuple[int, ...], n: int) -> int | None:
    m = minimum_dominating_set_raw(rows, n, DominationKind.TOTAL)
    return None if m is None else m.bit_count()


def is_3gt_critical_raw(rows: tuple[int, ...], n: int) -> bool:
    if n < 3 or any(r == 0 for r in rows):
        return False
    if adjacent_dominating_pair_raw(rows, n) is not None:
        return False  # γt ≤ 2
    full = (1 << n) - 1
    any_missing = False
    for u in range(n):
        for v in bits_of((~rows[u] & full) >> (u + 1)):
            any_missing = True
            if adjacent_dominating_pair_raw(_toggle(rows, u, u + 1 + v), n) is None:
                return False
    return any_missing and _gamma_t(rows, n) == 3


def is_k_gt_edge_critical_raw(rows: tuple[int, ...], n: int, k: int) -> bool:
    if k == 3:
        return is_3gt_critical_raw(rows, n)
    if _gamma_t(rows, n) != k:
        return False
    full = (1 << n) - 1
    missing = [(u, u + 1 + v) for u in range(n) for v in bits_of((~rows[u] & full) >> (u + 1))]
    if not missing:
        return False
    return all(_has_tds_within(_toggle(rows, u, v), n, k - 1) for u, v in missing)


def is_k_supercritical_raw(rows: tuple[int, ...], n: int, k: int) -> bool:
    if any(r == 0 for r in rows) or n < 2:
        return False
    full = (1 << n) - 1
    missing = [(u, u + 1 + v) for u in range(n) for v in bits_of((~rows[u] & full) >> (u + 1))]
    if not missing:
        return False
    for u, v in missing:
        if _gamma_t(_toggle(rows, u, v), n) != k - 2:
            return False
    return _gamma_t(rows, n) == k


def is_star_complement_raw(rows: tuple[int, ...], n: int) -> bool:
    """``K1 ∪ K_{n-1}``: exactly one isolated vertex, the rest a clique."""
    if n < 2:
        return False
    isolated = [v for v in range(n) if rows[v] == 0]
    if len(isolated) != 1:
        return False
    rest = ((1 << n) - 1) & ~(1 << isolated[0])
    return is_clique_mask(rows, rest)


def is_two_nontrivial_cliques_raw(rows: tuple[int, ...], n: int) -> bool:
    comps = component_masks(rows, (1 << n) - 1)
    return len(comps) == 2 and all(c.bit_count() >= 2 and is_clique_mask(rows, c) for c in comps)


# -- public operations -------------------------------------------------------


def is_diameter_d_edge_critical(g: Graph, d: int) -> bool:
    if d < 1:
        raise ValueError("d must be at least 1")
    if g.n == 0:
        return False
    if d == 2:
        return is_diameter2_critical_raw(g.rows, g.n)
    if diameter_raw(g.rows, g.n) != d:
        return False
    for e in g.edges():
        de = diameter_raw(_toggle(g.rows, e.u, e.v), g.n)
        if de is not None and de <= d:
            return False
    return True


def arrow(g: Graph, x: int, y: int, w: int) -> bool:
    """``xy ↦ w``."""
    for v in (x, y, w):
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    if len({x, y, w}) != 3:
        raise GraphError("arrow needs three distinct vertices")
    return _arrow_raw(g.rows, g.full, x, y, w)


def _arrow_raw(rows: tuple[int, ...], full: int, x: int, y: int, w: int) -> bool:
    if not (rows[x] >> y) & 1:
        return False
    if (rows[x] | rows[y]) >> w & 1:
        return False
    return (rows[x] | rows[y] | (1 << x) | (1 << y)) == full & ~(1 << w)


def is_k_gt_edge_critical(g: Graph, k: int) -> bool:
    if k < 2:
        raise ValueError("k must be at least 2")
    return is_k_gt_edge_critical_raw(g.rows, g.n, k)


def is_k_supercritical(g: Graph, k: int) -> bool:
    if k < 4:
        raise ValueError("k must be at least 4")
    return is_k_supercritical_raw(g.rows, g.n, k)


def is_two_nontrivial_cliques(g: Graph) -> bool:
    """Exactly two components, each complete on at least two vertices."""
    return is_two_nontrivial_cliques_raw(g.rows, g.n)


def supercritical_characterization(g: Graph) -> bool:
    """4-supercritical iff disjoint union of two nontrivial cliques, on this instance."""
    return is_k_supercritical_raw(g.rows, g.n, 4) == is_two_nontrivial_cliques_raw(g.rows, g.n)


def complement_memberships(g: Graph) -> dict[str, bool]:
    """Which of the three complement classes ``complement(g)`` falls in."""
    h = complement(g)
    return {
        "star_complement": is_star_complement_raw(h.rows, h.n),
        "three_gt_critical": is_3gt_critical_raw(h.rows, h.n),
        "four_supercritical": is_k_supercritical_raw(h.rows, h.n, 4),
    }


def classify_complement(g: Graph) -> CriticalClass:
    """Class of ``complement(g)`` when ``g`` is diameter-2 edge-critical.

    Raises :class:`TrichotomyError` if a diameter-2 edge-critical graph lands
    in no class or in more than one.
    """
    if g.n < 2:
        raise GraphError("classification needs n >= 2")
    if not is_diameter2_critical_raw(g.rows, g.n):
        return NOT_DIAMETER2_CRITICAL
    flags = complement_memberships(g)
    if sum(flags.values()) != 1:
        raise TrichotomyError(g, flags)
    if flags["star_complement"]:
        return STAR_COMPLEMENT
    if flags["four_supercritical"]:
        return FOUR_SUPERCRITICAL
    h = complement(g)
    d = diameter_raw(h.rows, h.n)
    if d not in (2, 3):
        raise TrichotomyError(g, dict(flags, diameter_in_2_3=False))
    return CriticalClass(CriticalKind.THREE_GT_CRITICAL, d)


def _as_missing(g: Graph, e: VertexPair | tuple[int, int]) -> tuple[int, int]:
    u, v = e.ends() if isinstance(e, VertexPair) else e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"({u}, {v}) is not a vertex pair of g")
    if (g.rows[u] >> v) & 1:
        raise GraphError(f"({u}, {v}) is an edge, not a missing edge")
    return (u, v) if u < v else (v, u)


def arrow_witnesses(g: Graph, e: VertexPair | tuple[int, int]) -> list[ArrowWitness]:
    """All ``xy ↦ w`` with ``w`` one end of ``e`` and the other end in ``{x, y}``."""
    u, v = _as_missing(g, e)
    rows, full = g.rows, g.full
    out = []
    for a, b in ((u, v), (v, u)):
        # a is the end kept in the pair, b the excluded vertex
        for y in bits_of(rows[a] & ~rows[b]):
            if _arrow_raw(rows, full, a, y, b):
                out.append(ArrowWitness(a, y, b))
    out.sort(key=lambda t: (t.x, t.y, t.w))
    return out


def quasi_edges(g: Graph, e: VertexPair | tuple[int, int]) -> list[VertexPair]:
    """Edges of ``g`` that are quasi-edges of the missing edge ``e``, sorted.

    The pair ``e`` itself is never reported, even when it dominates ``g``.
    """
    return sorted(w.edge for w in arrow_witnesses(g, e))


def missing_edge_case(g: Graph, e: VertexPair | tuple[int, int]) -> MissingEdgeCase:
    u, v = _as_missing(g, e)
    rows = g.rows
    if (rows[u] | rows[v] | (1 << u) | (1 << v)) == g.full:
        return MissingEdgeCase(CaseKind.DOMINATES_ALL)
    ws = arrow_witnesses(g, (u, v))
    if ws:
        return MissingEdgeCase(CaseKind.ARROW, ws[0])
    return MissingEdgeCase(CaseKind.VIOLATION)

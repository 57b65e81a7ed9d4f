"""Vertex connectivity, independent vertex cuts, and structural claim checkers.

The claim checkers take a 3-γt-edge-critical graph together with a minimum
vertex cut and test the structural statements used when such graphs have
connectivity two or three.  Each checker verifies its hypotheses unless told
not to, so hand-built negative fixtures can reach the failure paths.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .criticality import is_3gt_critical_raw
from .errors import CapabilityError, PreconditionError
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    as_mask,
    bits_of,
    component_masks,
    is_clique_mask,
    is_independent_mask,
)
from .metrics import diameter_raw

CUT_MAX_ORDER = 16


# -- connectivity ------------------------------------------------------------


def _local_connectivity(rows: tuple[int, ...], n: int, s: int, t: int, limit: int) -> int:
    """Max number of internally disjoint s-t paths (s, t non-adjacent), capped at ``limit``.

    Unit-capacity max-flow on the split graph: vertex ``v`` becomes
    ``2v`` (in) and ``2v + 1`` (out).
    """
    cap: dict[tuple[int, int], int] = {}
    adj: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            adj[a].append(b)
            adj[b].append(a)
            cap.setdefault((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = n
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in bits_of(rows[v]):
            arc(2 * v + 1, 2 * w, big)
    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {src: src}
        queue = deque([src])
        while queue and dst not in prev:
            a = queue.popleft()
            for b in adj[a]:
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if dst not in prev:
            break
        b = dst
        while b != src:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity_raw(rows: tuple[int, ...], n: int) -> int:
    if n <= 1:
        return 0
    full = (1 << n) - 1
    if len(component_masks(rows, full)) > 1:
        return 0
    best = n - 1
    for s in range(n):
        for t in bits_of(full & ~rows[s] & ~((2 << s) - 1)):
            best = min(best, _local_connectivity(rows, n, s, t, best))
            if best == 0:
                return 0
    return best


def vertex_connectivity(g: Graph) -> int:
    """κ(G): ``n - 1`` for complete graphs, 0 when disconnected."""
    if g.n < 1:
        raise GraphError("connectivity of the null graph is undefined")
    return vertex_connectivity_raw(g.rows, g.n)


def disconnects(g: Graph, cut: VertexSet | int) -> bool:
    """Does removing ``cut`` leave at least two components?"""
    alive = g.full & ~as_mask(cut)
    return len(component_masks(g.rows, alive)) >= 2


def minimum_vertex_cuts(g: Graph) -> list[VertexSet]:
    """All vertex cuts of size κ(G), sorted.  Empty for complete graphs."""
    if g.n > CUT_MAX_ORDER:
        raise CapabilityError(f"cut enumeration supports n <= {CUT_MAX_ORDER}")
    k = vertex_connectivity(g)
    if g.is_complete():
        return []
    out = []
    for combo in combinations(range(g.n), k):
        m = 0
        for v in combo:
            m |= 1 << v
        if disconnects(g, m):
            out.append(VertexSet(m))
    return out


# -- independent cuts ----------------------------------------------------------


@dataclass(frozen=True)
class CutInfo:
    cut: VertexSet
    components_after: tuple[VertexSet, ...]
    independent: bool
    minimal: bool

    @classmethod
    def of(cls, g: Graph, cut: VertexSet | int) -> "CutInfo":
        """Build and verify: raises ``GraphError`` unless ``cut`` disconnects ``g``."""
        m = as_mask(cut)
        comps = component_masks(g.rows, g.full & ~m)
        if len(comps) < 2:
            raise GraphError(f"{sorted(bits_of(m))} is not a vertex cut")
        return cls(
            VertexSet(m),
            tuple(VertexSet(c) for c in comps),
            is_independent_mask(g.rows, m),
            _is_minimal_cut(g, m),
        )

    def to_dict(self) -> dict:
        return {
            "cut": list(self.cut),
            "components_after": [list(c) for c in self.components_after],
            "independent": self.independent,
            "minimal": self.minimal,
        }


def _is_minimal_cut(g: Graph, m: int) -> bool:
    # vertex cuts are not monotone under inclusion, so try every proper subset
    sub = (m - 1) & m
    while True:
        if sub != m and len(component_masks(g.rows, g.full & ~sub)) >= 2:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & m


def independent_cuts(g: Graph, min_size: int = 1) -> list[CutInfo]:
    """Every independent vertex cut with at least ``min_size`` vertices.

    Exhaustive; refuses graphs above ``CUT_MAX_ORDER`` vertices.  Sorted by
    size, then members.
    """
    if min_size < 1:
        raise ValueError("min_size must be at least 1")
    if g.n > CUT_MAX_ORDER:
        raise CapabilityError(f"independent cut enumeration supports n <= {CUT_MAX_ORDER}, got {g.n}")
    rows = g.rows
    found: list[int] = []

    def grow(chosen: int, size: int, candidates: int) -> None:
        if size >= min_size and len(component_masks(rows, g.full & ~chosen)) >= 2:
            found.append(chosen)
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            grow(chosen | low, size + 1, candidates & ~rows[v])

    grow(0, 0, g.full)
    found.sort(key=lambda m: (m.bit_count(), tuple(bits_of(m))))
    return [CutInfo.of(g, m) for m in found]


def has_independent_cut(g: Graph, min_size: int) -> bool:
    rows, full = g.rows, g.full

    def grow(chosen: int, size: int, candidates: int) -> bool:
        if size >= min_size and len(component_masks(rows, full & ~chosen)) >= 2:
            return True
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            if grow(chosen | low, size + 1, candidates & ~rows[v]):
                return True
        return False

    if g.n > CUT_MAX_ORDER:
        raise CapabilityError(f"independent cut search supports n <= {CUT_MAX_ORDER}, got {g.n}")
    return grow(0, 0, full)


# -- claim checkers ----------------------------------------------------------


class ClaimViolation(AssertionError):
    """A structural claim fails on a concrete instance."""

    def __init__(self, claim: str, detail: str, vertices: tuple[int, ...] = ()):
        self.claim = claim
        self.detail = detail
        self.vertices = vertices
        super().__init__(f"claim {claim} violated: {detail}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _check_critical_hypothesis(g: Graph, *, diameter: int | None = None) -> None:
    _require(is_3gt_critical_raw(g.rows, g.n), "graph is not 3-γt-edge-critical")
    if diameter is not None:
        _require(diameter_raw(g.rows, g.n) == diameter, f"graph does not have diameter {diameter}")


def _check_minimum_cut(g: Graph, cut: int) -> None:
    _require(disconnects(g, cut), "the given vertices do not form a vertex cut")
    _require(
        vertex_connectivity(g) == cut.bit_count(),
        f"the given cut has size {cut.bit_count()} but κ = {vertex_connectivity(g)}",
    )


def asseration_check(g: Graph, *, verify_hypotheses: bool = True) -> tuple[VertexSet, VertexSet] | None:
    """Find an independent cut ``S`` (|S| >= 3) and a component ``K`` of ``G - S``
    whose every vertex dominates ``V(K) ∪ S``.

    Hypotheses: 3-γt-edge-critical, minimum degree at least 3, and some
    independent vertex cut of size at least 3.  ``None`` means no witness.
    """
    if verify_hypotheses:
        _check_critical_hypothesis(g)
        _require(g.min_degree() >= 3, "minimum degree is below 3")
        _require(has_independent_cut(g, 3), "no independent vertex cut of size >= 3")
    rows = g.rows
    for info in independent_cuts(g, 3):
        s = info.cut.bits
        for comp in info.components_after:
            target = comp.bits | s
            if all((rows[k] | (1 << k)) & target == target for k in comp):
                return info.cut, comp
    return None


@dataclass(frozen=True)
class StrongWeak:
    """Vertices outside the 2-cut ``{x, y}``: strong see both, weak see one."""

    x: int
    y: int
    strong: VertexSet
    weak: VertexSet
    components: tuple[VertexSet, ...]

    def to_dict(self) -> dict:
        return {
            "cut": [self.x, self.y],
            "strong": list(self.strong),
            "weak": list(self.weak),
            "components": [list(c) for c in self.components],
        }


def strong_weak(g: Graph, x: int, y: int, *, verify_hypotheses: bool = True) -> StrongWeak:
    """Classify ``V - {x, y}`` as strong/weak and check properties (i)-(vi).

    Raises :class:`ClaimViolation` naming the first property that fails.
    """
    if x == y or not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError("x and y must be distinct vertices")
    cut = (1 << x) | (1 << y)
    if verify_hypotheses:
        _check_critical_hypothesis(g, diameter=2)
        _check_minimum_cut(g, cut)
    rows = g.rows
    rest = g.full & ~cut
    nx, ny = rows[x], rows[y]

    undominated = rest & ~(nx | ny)
    if undominated:
        v = (undominated & -undominated).bit_length() - 1
        raise ClaimViolation("i", f"vertex {v} is adjacent to neither {x} nor {y}", (v,))
    if (nx >> y) & 1:
        raise ClaimViolation("ii", f"{x} and {y} are adjacent", (x, y))

    strong = rest & nx & ny
    weak = rest & ~strong
    comps = component_masks(rows, rest)
    for c in comps:
        s = c & strong
        if not is_clique_mask(rows, s):
            a, b = _non_adjacent_pair(rows, s)
            raise ClaimViolation("iii", f"strong vertices {a} and {b} share a component but are not adjacent", (a, b))
    with_weak = [c for c in comps if c & weak]
    if len(with_weak) > 1:
        raise ClaimViolation(
            "iv",
            f"{len(with_weak)} components contain weak vertices",
            tuple(min(bits_of(c & weak)) for c in with_weak),
        )
    if not is_clique_mask(rows, weak):
        a, b = _non_adjacent_pair(rows, weak)
        raise ClaimViolation("v", f"weak vertices {a} and {b} are not adjacent", (a, b))
    if len(comps) != 2:
        raise ClaimViolation("vi", f"G - {{{x}, {y}}} has {len(comps)} components, expected 2")
    return StrongWeak(x, y, VertexSet(strong), VertexSet(weak), tuple(VertexSet(c) for c in comps))


def _non_adjacent_pair(rows: tuple[int, ...], m: int) -> tuple[int, int]:
    for a in bits_of(m):
        others = m & ~rows[a] & ~((2 << a) - 1)
        if others:
            return a, (others & -others).bit_length() - 1
    raise ValueError("set is a clique")


@dataclass
class ClaimReport:
    """Outcome of the connectivity-three claims for one minimum cut."""

    cut: tuple[int, int, int]
    component_count: int
    two_components: bool
    vclique: bool
    claim_n: bool
    s_star_size: int | None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.two_components and self.vclique and self.claim_n

    def to_dict(self) -> dict:
        return {
            "cut": list(self.cut),
            "component_count": self.component_count,
            "two_components": self.two_components,
            "vclique": self.vclique,
            "claim_n": self.claim_n,
            "s_star_size": self.s_star_size,
            "violations": list(self.violations),
        }


def conn3_claims(g: Graph, x: int, y: int, z: int, *, verify_hypotheses: bool = True) -> ClaimReport:
    """Check the claims about a minimum 3-cut ``{x, y, z}``.

    * exactly two components remain;
    * two vertices of one component that both dominate the cut are adjacent;
    * vertices of different components either see different parts of the cut
      or both dominate it.

    ``s_star_size`` records ``|S1* ∪ S2*|`` where ``Si*`` is the set of cut
    vertices dominating component ``i``; it is reported, not asserted.
    """
    if len({x, y, z}) != 3 or not all(0 <= v < g.n for v in (x, y, z)):
        raise GraphError("x, y, z must be three distinct vertices")
    cut = (1 << x) | (1 << y) | (1 << z)
    if verify_hypotheses:
        _check_critical_hypothesis(g, diameter=2)
        _check_minimum_cut(g, cut)
    rows = g.rows
    comps = component_masks(rows, g.full & ~cut)
    rep = ClaimReport(
        cut=(x, y, z),
        component_count=len(comps),
        two_components=len(comps) == 2,
        vclique=True,
        claim_n=True,
        s_star_size=None,
    )
    if not rep.two_components:
        rep.violations.append(f"G - {{{x}, {y}, {z}}} has {len(comps)} components, expected 2")

    for c in comps:
        dominators = [v for v in bits_of(c) if rows[v] & cut == cut]
        for a, b in combinations(dominators, 2):
            if not (rows[a] >> b) & 1:
                rep.vclique = False
                rep.violations.append(f"VClique: {a} and {b} both dominate the cut but are not adjacent")

    for i, ci in enumerate(comps):
        for cj in comps[i + 1:]:
            for v1 in bits_of(ci):
                t1 = rows[v1] & cut
                for v2 in bits_of(cj):
                    t2 = rows[v2] & cut
                    if t1 == t2 and t1 != cut:
                        rep.claim_n = False
                        rep.violations.append(
                            f"N: {v1} and {v2} see the same cut vertices {sorted(bits_of(t1))} without dominating the cut"
                        )

    if rep.two_components:
        s_star = 0
        for c in comps:
            for w in (x, y, z):
                if c & ~rows[w] == 0:
                    s_star |= 1 << w
        rep.s_star_size = s_star.bit_count()
    return rep

"""Vertex bipartitions and the missing-edge to crossing-edge association.

Given a partition ``(A, B)`` of a 3-γt-edge-critical graph, every missing
edge inside ``A`` or inside ``B`` is matched with one of its quasi-edges that
crosses between the parts.  When the matching exists and is injective,
``|E(G^c)| <= |A|·|B| <= floor(n²/4)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .criticality import quasi_edges
from .errors import PreconditionError
from .graph import Graph, GraphError, PairKind, VertexPair, VertexSet, as_mask, bits_of


def floor_quarter_square(n: int) -> int:
    return n * n // 4


@dataclass(frozen=True)
class Partition:
    a: VertexSet
    b: VertexSet

    @classmethod
    def of(cls, g: Graph, a: VertexSet | Iterable[int]) -> "Partition":
        """Partition with the given ``A`` and ``B = V \\ A``."""
        am = as_mask(a)
        p = cls(VertexSet(am), VertexSet(g.full & ~am))
        p.validate(g)
        return p

    def validate(self, g: Graph) -> None:
        a, b = self.a.bits, self.b.bits
        if a & b:
            raise GraphError("partition parts intersect")
        if a | b != g.full:
            raise GraphError("partition does not cover V(g)")
        if not a or not b:
            raise GraphError("partition parts must be nonempty")

    def side(self, v: int) -> str:
        return "A" if v in self.a else "B"

    def crosses(self, e: VertexPair) -> bool:
        return (e.u in self.a) != (e.v in self.a)

    def __str__(self) -> str:
        return f"A={sorted(self.a)} B={sorted(self.b)}"


def all_partitions(g: Graph) -> Iterable[Partition]:
    """Every unordered bipartition with both parts nonempty (``0 ∈ A``)."""
    n = g.n
    full = g.full
    for rest in range(1 << (n - 1)):
        a = 1 | (rest << 1)
        if a == full:
            continue
        yield Partition(VertexSet(a), VertexSet(full & ~a))


class HypothesisFailure(PreconditionError):
    """A within-part missing edge has no crossing quasi-edge."""

    def __init__(self, edge: VertexPair):
        self.edge = edge
        super().__init__(f"missing edge {edge.u}{edge.v} has no quasi-edge crossing the partition")


class InjectivityViolation(AssertionError):
    """Two distinct within-part missing edges share a crossing quasi-edge."""

    def __init__(self, first: VertexPair, second: VertexPair, shared: VertexPair):
        self.first, self.second, self.shared = first, second, shared
        super().__init__(
            f"missing edges {first.u}{first.v} and {second.u}{second.v} share quasi-edge {shared.u}{shared.v}"
        )


@dataclass
class QuasiEdgeMap:
    entries: dict[VertexPair, VertexPair]
    unmatched: list[VertexPair]
    candidates: dict[VertexPair, list[VertexPair]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "entries": [[list(k.ends()), list(v.ends())] for k, v in self.entries.items()],
            "unmatched": [list(e.ends()) for e in self.unmatched],
        }


def _missing_within(g: Graph, part: int) -> list[VertexPair]:
    out = []
    rows = g.rows
    for u in bits_of(part):
        for v in bits_of(part & ~rows[u] & ~((2 << u) - 1)):
            out.append(VertexPair(u, v, PairKind.MISSING))
    return out


def within_part_missing_edges(g: Graph, p: Partition) -> list[VertexPair]:
    """Missing edges inside ``A`` (lexicographic), then inside ``B``."""
    return _missing_within(g, p.a.bits) + _missing_within(g, p.b.bits)


def crossing_edges(g: Graph, p: Partition) -> list[VertexPair]:
    """Edges of ``[A, B]`` in lexicographic order."""
    return [e for e in g.edges() if p.crosses(e)]


def crossing_quasi_edges(g: Graph, p: Partition, e: VertexPair) -> list[VertexPair]:
    return [q for q in quasi_edges(g, e) if p.crosses(q)]


def build_association(g: Graph, p: Partition) -> QuasiEdgeMap:
    """Map each within-part missing edge to its least crossing quasi-edge.

    Raises :class:`HypothesisFailure` for the first missing edge without a
    crossing quasi-edge, and :class:`InjectivityViolation` if two missing
    edges have a crossing quasi-edge in common.
    """
    p.validate(g)
    entries: dict[VertexPair, VertexPair] = {}
    candidates: dict[VertexPair, list[VertexPair]] = {}
    owner: dict[VertexPair, VertexPair] = {}
    for e in within_part_missing_edges(g, p):
        qs = crossing_quasi_edges(g, p, e)
        if not qs:
            raise HypothesisFailure(e)
        for q in qs:
            prev = owner.get(q)
            if prev is not None:
                raise InjectivityViolation(prev, e, q)
            owner[q] = e
        candidates[e] = qs
        entries[e] = qs[0]
    used = set(entries.values())
    unmatched = [c for c in crossing_edges(g, p) if c not in used]
    return QuasiEdgeMap(entries, unmatched, candidates)


def lemma_bound_check(g: Graph, p: Partition) -> bool:
    """``|E(G^c)| <= |A|·|B|`` (which is itself at most ``floor(n²/4)``)."""
    return g.num_missing_edges <= len(p.a) * len(p.b)


def missing_edge_bipartition(g: Graph, part: VertexSet | Iterable[int]) -> tuple[VertexSet, VertexSet] | None:
    """2-colour the graph of missing pairs inside ``part``.

    Only vertices incident to such a missing pair are coloured.  Returns
    ``None`` when that graph has an odd cycle.
    """
    pm = as_mask(part)
    rows = g.rows
    colour: dict[int, int] = {}
    for s in bits_of(pm):
        if s in colour or not (pm & ~rows[s] & ~(1 << s)):
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in bits_of(pm & ~rows[x] & ~(1 << x)):
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    xs = VertexSet(v for v, c in colour.items() if c == 0)
    ys = VertexSet(v for v, c in colour.items() if c == 1)
    return xs, ys


def parity_bipartition(g: Graph, part: VertexSet | Iterable[int], other: VertexSet | Iterable[int]) -> tuple[VertexSet, VertexSet]:
    """Split the missing-edge-incident vertices of ``part`` by parity of degree into ``other``."""
    pm, om = as_mask(part), as_mask(other)
    rows = g.rows
    odd, even = [], []
    for v in bits_of(pm):
        if pm & ~rows[v] & ~(1 << v):
            (odd if (rows[v] & om).bit_count() % 2 else even).append(v)
    return VertexSet(odd), VertexSet(even)


@dataclass
class PropertyReport:
    """Outcome of the equality-case structure checks for one partition."""

    applicable: bool
    unique_quasi_edge: bool = True
    crossing_all_used: bool = True
    cross_swap: bool = True
    nesting: bool = True
    bipartite: bool = True
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.unique_quasi_edge
            and self.crossing_all_used
            and self.cross_swap
            and self.nesting
            and self.bipartite
        )

    def to_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "i_unique_quasi_edge": self.unique_quasi_edge,
            "i_crossing_all_used": self.crossing_all_used,
            "ii_cross_swap": self.cross_swap,
            "iii_nesting": self.nesting,
            "iii_bipartite": self.bipartite,
            "violations": list(self.violations),
        }


def equality_precondition(g: Graph, p: Partition) -> bool:
    if g.num_missing_edges != floor_quarter_square(g.n):
        return False
    try:
        build_association(g, p)
    except (HypothesisFailure, InjectivityViolation):
        return False
    return True


def equality_properties(g: Graph, p: Partition, *, enforce_precondition: bool = True) -> PropertyReport:
    """Check the equality-case properties (i)-(iii) on ``(g, p)``.

    With ``enforce_precondition`` the graph must have exactly
    ``floor(n²/4)`` missing edges and an association must exist; otherwise
    :class:`PreconditionError` is raised.  Disabling it lets synthetic
    fixtures exercise each check directly.
    """
    p.validate(g)
    applicable = equality_precondition(g, p)
    if enforce_precondition and not applicable:
        raise PreconditionError("equality case requires |E(G^c)| = floor(n^2/4) and a valid association")
    rep = PropertyReport(applicable=applicable)
    rows = g.rows
    am, bm = p.a.bits, p.b.bits
    missing = within_part_missing_edges(g, p)
    cands = {e: crossing_quasi_edges(g, p, e) for e in missing}

    # (i) exactly one crossing quasi-edge each, and every crossing edge used
    used: set[VertexPair] = set()
    for e, qs in cands.items():
        if len(qs) != 1:
            rep.unique_quasi_edge = False
            rep.violations.append(f"(i) missing edge {e} has {len(qs)} crossing quasi-edges")
        used.update(qs)
    for c in crossing_edges(g, p):
        if c not in used:
            rep.crossing_all_used = False
            rep.violations.append(f"(i) crossing edge {c} is no quasi-edge of a within-part missing edge")

    # (ii) u1v1, u2v2 missing and u1v2, u2v1 present force u1u2, v1v2 present
    for u1 in bits_of(am):
        for u2 in bits_of(am & ~((2 << u1) - 1)):
            for v1 in bits_of(bm & ~rows[u1] & rows[u2]):
                for v2 in bits_of(bm & rows[u1] & ~rows[u2]):
                    if not (rows[u1] >> u2) & 1 or not (rows[v1] >> v2) & 1:
                        rep.cross_swap = False
                        rep.violations.append(
                            f"(ii) u1={u1} u2={u2} v1={v1} v2={v2}: "
                            f"u1u2 {'present' if (rows[u1] >> u2) & 1 else 'missing'}, "
                            f"v1v2 {'present' if (rows[v1] >> v2) & 1 else 'missing'}"
                        )

    # (iii) neighbourhood nesting across the partition, and bipartite missing graphs
    for e in missing:
        other = bm if e.u in p.a else am
        u1, u2 = e.u, e.v
        if (rows[u1] & other).bit_count() < (rows[u2] & other).bit_count():
            u1, u2 = u2, u1
        qs = cands[e]
        if not qs:
            rep.nesting = False
            rep.violations.append(f"(iii) missing edge {e} has no crossing quasi-edge")
            continue
        q = qs[0]
        y = q.v if (other >> q.v) & 1 else q.u
        if (rows[u1] & other) != ((rows[u2] & other) | (1 << y)):
            rep.nesting = False
            rep.violations.append(
                f"(iii) missing edge {e}: N({u1}) ∩ other part != N({u2}) ∩ other part ∪ {{{y}}}"
            )
    for name, part in (("A", p.a), ("B", p.b)):
        if missing_edge_bipartition(g, part) is None:
            rep.bipartite = False
            rep.violations.append(f"(iii) missing edges inside {name} contain an odd cycle")
    return rep

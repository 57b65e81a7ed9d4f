"""Canonical labelling by partition refinement and backtracking.

A small individualisation-refinement search: equitable refinement by
neighbour counts, branching on the first non-singleton cell, pruning with
automorphisms discovered at the leaves.  The automorphisms found generate the
full automorphism group, which the generator relies on for orbit tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError
from .graph import bits_of

CANON_MAX_ORDER = 12


def refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until every cell is equitable.

    Fragments are ordered by their neighbour-count signature, which keeps the
    result invariant under relabelling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                sig = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


@dataclass
class CanonResult:
    labeling: list[int]  # labeling[i] = vertex placed at canonical position i
    certificate: tuple[int, ...]  # rows of the canonically relabelled graph
    generators: list[list[int]]  # automorphisms, as vertex -> image lists

    def positions(self) -> list[int]:
        pos = [0] * len(self.labeling)
        for i, v in enumerate(self.labeling):
            pos[v] = i
        return pos


def _certificate(rows: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    pos = [0] * len(perm)
    for i, v in enumerate(perm):
        pos[v] = i
    out = []
    for v in perm:
        r = 0
        for w in bits_of(rows[v]):
            r |= 1 << pos[w]
        out.append(r)
    return tuple(out)


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


def orbits(n: int, gens: list[list[int]]) -> list[int]:
    """Orbit representative (least member) of each vertex."""
    return _orbit_roots(n, gens)


class _Search:
    def __init__(self, rows: tuple[int, ...], n: int):
        self.rows = rows
        self.n = n
        self.first: tuple[tuple[int, ...], list[int], list[int]] | None = None
        self.best: tuple[tuple[int, ...], list[int], list[int]] | None = None
        self.gens: list[list[int]] = []

    def _automorphism(self, src: list[int], dst: list[int]) -> None:
        g = [0] * self.n
        for a, b in zip(src, dst):
            g[a] = b
        if any(g[v] != v for v in range(self.n)):
            self.gens.append(g)

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def run(self, cells: list[list[int]], prefix: list[int]) -> int | None:
        cells = refine(self.rows, cells)
        level = len(prefix)
        target = -1
        for t, cell in enumerate(cells):
            if len(cell) > 1:
                target = t
                break
        if target < 0:
            perm = [c[0] for c in cells]
            cert = _certificate(self.rows, perm)
            if self.first is None:
                self.first = self.best = (cert, perm, list(prefix))
                return None
            if cert == self.first[0]:
                self._automorphism(self.first[1], perm)
                return self._common(self.first[2], prefix)
            if cert == self.best[0]:
                self._automorphism(self.best[1], perm)
                return self._common(self.best[2], prefix)
            if cert > self.best[0]:
                self.best = (cert, perm, list(prefix))
            return None

        cell = cells[target]
        explored: list[int] = []
        seen_gens = 0
        roots = list(range(self.n))
        for v in cell:
            if explored:
                if seen_gens != len(self.gens):
                    # only automorphisms fixing the prefix may prune siblings
                    fixing = [g for g in self.gens if all(g[p] == p for p in prefix)]
                    roots = _orbit_roots(self.n, fixing)
                    seen_gens = len(self.gens)
                rv = roots[v]
                if any(roots[u] == rv for u in explored):
                    continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            explored.append(v)
            jump = self.run(child, prefix + [v])
            if jump is not None and jump < level:
                return jump
        return None


def canonical_labeling(rows: tuple[int, ...], n: int, cells: list[list[int]] | None = None) -> CanonResult:
    """Canonical labelling of the graph ``rows`` respecting the ordered colouring ``cells``."""
    if n > CANON_MAX_ORDER:
        raise CapabilityError(f"canonical labelling supports n <= {CANON_MAX_ORDER}, got {n}")
    if n == 0:
        return CanonResult([], (), [])
    start = [list(c) for c in cells] if cells is not None else [list(range(n))]
    s = _Search(rows, n)
    s.run(start, [])
    assert s.best is not None
    return CanonResult(s.best[1], s.best[0], s.gens)

"""Isomorph-free graph generation and graph6 stream ingestion.

Generation is by canonical augmentation: every graph on ``k + 1`` vertices is
built from a parent on ``k`` vertices by adding a vertex ``k`` joined to a
subset ``S``, and is kept only when vertex ``k`` lies in the automorphism
orbit of the canonically chosen vertex of the child.  Subsets are reduced to
orbit representatives under the parent's automorphism group, so each
isomorphism class is emitted exactly once.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator

from .canon import CANON_MAX_ORDER, canonical_labeling, orbits
from .errors import CapabilityError
from .graph import Graph, bits_of
from .graph6 import Graph6Error, graph6_decode, graph6_encode

GENERATE_MAX_ORDER = 10

# Unlabelled simple graphs on n vertices (OEIS A000088).
KNOWN_COUNTS = {
    0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346,
    9: 274668, 10: 12005168,
}


def canonical_form(g: Graph) -> bytes:
    """graph6 string of the canonical relabelling of ``g``."""
    if g.n > CANON_MAX_ORDER:
        raise CapabilityError(f"canonical_form supports n <= {CANON_MAX_ORDER}, got {g.n}")
    res = canonical_labeling(g.rows, g.n)
    return graph6_encode(Graph._trusted(g.n, res.certificate))


@dataclass
class GraphStream:
    """An iterable of graphs with provenance.

    ``source`` is ``"generated:<n>"``, ``"file:<path>"`` or ``"stdin"``.
    """

    source: str
    _items: Iterable[Graph] = field(repr=False)
    count_hint: int | None = None

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._items)


# -- generation ----------------------------------------------------------


def _subset_representatives(k: int, gens: list[list[int]]) -> list[int]:
    """Least member of each orbit of subsets of ``range(k)`` under ``gens``."""
    total = 1 << k
    if not gens:
        return list(range(total))
    # per generator, per byte-chunk image tables keep the mapping cheap
    images = []
    for g in gens:
        img = [0] * total
        for i in range(k):
            bit_img = 1 << g[i]
            step = 1 << i
            for s in range(step, total, step << 1):
                for t in range(s, s + step):
                    img[t] |= bit_img
        images.append(img)
    seen = bytearray(total)
    reps = []
    for s in range(total):
        if seen[s]:
            continue
        reps.append(s)
        seen[s] = 1
        stack = [s]
        while stack:
            x = stack.pop()
            for img in images:
                y = img[x]
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
    return reps


def _accept(rows: tuple[int, ...], n: int, degs: list[int]) -> tuple[bool, list[list[int]] | None]:
    """Is the last vertex of the child in the orbit of its canonical vertex?

    Returns ``(accepted, automorphism generators or None if not computed)``.
    """
    v = n - 1
    top = max(degs)
    if degs[v] != top:
        return False, None
    tied = [u for u in range(n) if degs[u] == top]
    if len(tied) > 1:
        # second invariant: sorted neighbour degrees
        def inv(u: int) -> tuple[int, ...]:
            return tuple(sorted((degs[w] for w in bits_of(rows[u])), reverse=True))

        invs = {u: inv(u) for u in tied}
        best = max(invs.values())
        if invs[v] != best:
            return False, None
        tied = [u for u in tied if invs[u] == best]
    if len(tied) == 1:
        return True, None
    res = canonical_labeling(rows, n)
    pos = res.positions()
    chosen = max(tied, key=lambda u: pos[u])
    orb = orbits(n, res.generators)
    return orb[chosen] == orb[v], res.generators


def _children(rows: tuple[int, ...], k: int, gens: list[list[int]]) -> Iterator[tuple[tuple[int, ...], list[list[int]] | None]]:
    base_deg = [r.bit_count() for r in rows]
    newbit = 1 << k
    for s in _subset_representatives(k, gens):
        sdeg = s.bit_count()
        # cheap reject: the new vertex must have maximum degree
        ok = True
        for i in range(k):
            if base_deg[i] + ((s >> i) & 1) > sdeg:
                ok = False
                break
        if not ok:
            continue
        child = tuple(rows[i] | newbit if (s >> i) & 1 else rows[i] for i in range(k)) + (s,)
        degs = [base_deg[i] + ((s >> i) & 1) for i in range(k)] + [sdeg]
        accepted, child_gens = _accept(child, k + 1, degs)
        if accepted:
            yield child, child_gens


def _automorphisms(rows: tuple[int, ...], n: int) -> list[list[int]]:
    return canonical_labeling(rows, n).generators


def _generate(n: int) -> Iterator[Graph]:
    if n == 0:
        yield Graph._trusted(0, ())
        return

    def expand(rows: tuple[int, ...], k: int, gens: list[list[int]] | None) -> Iterator[Graph]:
        if k == n:
            yield Graph._trusted(n, rows)
            return
        if gens is None:
            gens = _automorphisms(rows, k)
        for child, child_gens in _children(rows, k, gens):
            yield from expand(child, k + 1, child_gens)

    yield from expand((0,), 1, [])


def generate_all(n: int) -> GraphStream:
    """One graph per isomorphism class on ``n`` vertices, in a fixed order."""
    if not 1 <= n <= GENERATE_MAX_ORDER:
        raise ValueError(f"generate_all supports 1 <= n <= {GENERATE_MAX_ORDER}, got {n}")
    return GraphStream(f"generated:{n}", _Restartable(lambda: _generate(n)), KNOWN_COUNTS[n])


# -- ingestion -------------------------------------------------------------


def _iter_records(fh: IO[bytes]) -> Iterator[Graph]:
    for lineno, raw in enumerate(fh, start=1):
        line = raw.rstrip(b"\r\n")
        if not line.strip():
            continue
        try:
            yield graph6_decode(line)
        except Graph6Error as exc:
            raise Graph6Error(str(exc).rsplit(" (", 1)[0], exc.offset, line=lineno) from None


def read_graph6_stream(source: str | Path | IO[bytes] | None = None) -> GraphStream:
    """Lazily decode newline-delimited graph6 from a path, binary file, or stdin.

    ``None`` or ``"-"`` reads standard input.  Blank lines are skipped.
    """
    if source is None or source == "-":
        fh = sys.stdin.buffer

        def items():
            yield from _iter_records(fh)

        return GraphStream("stdin", _Restartable(items))
    if isinstance(source, (str, Path)):
        path = Path(source)

        def items():
            with path.open("rb") as fh:
                yield from _iter_records(fh)

        return GraphStream(f"file:{path}", _Restartable(items))
    handle = source

    def items():
        yield from _iter_records(handle)

    return GraphStream("stream", _Restartable(items))


class _Restartable:
    def __init__(self, factory):
        self._factory = factory

    def __iter__(self):
        return self._factory()


def deduplicate(graphs: Iterable[Graph]) -> Iterator[Graph]:
    """Drop graphs isomorphic to an earlier one (by canonical form)."""
    seen: set[bytes] = set()
    for g in graphs:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g

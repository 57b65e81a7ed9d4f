"""graph6 codec (nauty format), bit-exact.

Only the one-byte and ``~``-plus-three-byte order headers are handled, which
covers every order up to ``MAX_ORDER``.  sparse6 and digraph6 are rejected.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 record.  ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({where})")


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])


def graph6_encode(g: Graph) -> bytes:
    """Encode without the optional ``>>graph6<<`` header or newline."""
    n = g.n
    rows = g.rows
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(text: bytes | str) -> Graph:
    """Decode one graph6 record; a single trailing newline is tolerated."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.endswith(b"\n"):
        data = data[:-1]
        if data.endswith(b"\r"):
            data = data[:-1]
    pos = 0
    if data.startswith(HEADER):
        pos = len(HEADER)
    if pos >= len(data):
        raise Graph6Error("empty record", pos)
    first = data[pos]
    if first == ord(":") or first == ord(";"):
        raise Graph6Error("sparse6 records are not supported", pos)
    if first == ord("&"):
        raise Graph6Error("digraph6 records are not supported", pos)

    for k in range(pos, len(data)):
        if not 63 <= data[k] <= 126:
            raise Graph6Error(f"byte {data[k]!r} outside the graph6 range 63..126", k)

    if first < 126:
        n = first - 63
        pos += 1
    else:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise Graph6Error("8-byte order header is not supported", pos)
        if pos + 4 > len(data):
            raise Graph6Error("truncated order header", len(data))
        n = ((data[pos + 1] - 63) << 12) | ((data[pos + 2] - 63) << 6) | (data[pos + 3] - 63)
        pos += 4
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}", pos - 1)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} edge bytes, found {len(body)}", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after record", pos + nbytes)

    rows = [0] * n
    i, j = 0, 1
    k = 0
    for b, byte in enumerate(body):
        val = byte - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (val >> shift) & 1:
                    raise Graph6Error("non-zero padding bits", pos + b)
                continue
            if (val >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(n, tuple(rows))

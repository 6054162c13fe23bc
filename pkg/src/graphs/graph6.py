"""
graph6 reader and writer.

Bit-exact with the usual format: a size header N(n), then the upper
triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six
bits per byte, most significant first, each byte offset by 63.
"""

import logging
from typing import Iterable, Iterator, List

from .graph import MAX_VERTICES, Graph
from ..utils.error_handler import Graph6ByteError, Graph6HeaderError, Graph6LengthError, GraphSizeError

logger = logging.getLogger('indatt.graphs.graph6')

HEADER = ">>graph6<<"
BIAS = 63


def _encode_size(n: int) -> List[int]:
    if n <= 62:
        return [n + BIAS]
    return [126] + [((n >> shift) & 0x3F) + BIAS for shift in (12, 6, 0)]


def write_graph6(g: Graph) -> str:
    """
    Encode a graph as one graph6 line (without newline).

    Raises:
        GraphSizeError: If the graph has more than 64 vertices
    """
    if g.n > MAX_VERTICES:
        raise GraphSizeError(f"graph6 output supports at most {MAX_VERTICES} vertices, got {g.n}")
    out = _encode_size(g.n)
    value = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            value = (value << 1) | ((row >> i) & 1)
            count += 1
            if count == 6:
                out.append(value + BIAS)
                value = 0
                count = 0
    if count:
        out.append((value << (6 - count)) + BIAS)
    return bytes(out).decode('ascii')


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Args:
        text: graph6 string, optionally prefixed by >>graph6<< and followed by a newline

    Returns:
        Graph: The decoded graph

    Raises:
        Graph6HeaderError: Missing or malformed size header
        Graph6ByteError: A byte outside 63..126
        Graph6LengthError: Body too short, too long, or with nonzero padding
        GraphSizeError: n = 0 or n > 64
    """
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6HeaderError("Empty graph6 string")
    data = []
    for pos, ch in enumerate(line):
        code = ord(ch)
        if not BIAS <= code <= 126:
            raise Graph6ByteError(f"Byte {code} at position {pos} outside 63..126",
                                  details={"position": pos, "byte": code})
        data.append(code - BIAS)

    if data[0] != 63:
        n, body = data[0], data[1:]
    else:
        if len(data) >= 2 and data[1] == 63:
            raise GraphSizeError(f"graph6 sizes above {MAX_VERTICES} are not supported")
        if len(data) < 4:
            raise Graph6HeaderError("Truncated long-form size header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        if n < 63:
            raise Graph6HeaderError(f"Long-form header used for small size {n}")
        body = data[4:]
    if n == 0:
        raise GraphSizeError("graph6 string encodes the empty graph; at least one vertex is required")
    if n > MAX_VERTICES:
        raise GraphSizeError(f"graph6 size {n} exceeds {MAX_VERTICES}", details={"n": n})

    total_bits = n * (n - 1) // 2
    expected = (total_bits + 5) // 6
    if len(body) != expected:
        raise Graph6LengthError(f"Expected {expected} body bytes for n={n}, got {len(body)}",
                                details={"n": n, "expected": expected, "actual": len(body)})
    padding = expected * 6 - total_bits
    if padding and body[-1] & ((1 << padding) - 1):
        raise Graph6LengthError("Nonzero padding bits in graph6 body")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode every non-blank line of a graph6 stream."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)

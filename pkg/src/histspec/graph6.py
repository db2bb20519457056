"""Reader and writer for the short-form graph6 text format.

One graph per line.  The first byte encodes the order as n + 63 (n <= 62
only), followed by the upper triangle of the adjacency matrix read column
by column (pairs (i, j) with i < j ordered by j then i), packed into
6-bit groups, each group offset by 63, zero-padded at the end.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6FormatError(ValueError):
    """Malformed graph6 input; carries the byte offset and line number."""

    def __init__(self, message: str, offset: int, lineno: int | None = None):
        self.message = message
        self.offset = offset
        self.lineno = lineno
        where = f"byte {offset}" if lineno is None else f"line {lineno}, byte {offset}"
        super().__init__(f"{message} ({where})")


def decode_graph6(line: str) -> Graph:
    """Decode one short-form graph6 record into a Graph.

    A leading ">>graph6<<" header is tolerated and stripped; byte offsets
    in errors refer to the line as given.
    """
    base = 0
    body = line.rstrip("\r\n")
    if body.startswith(HEADER):
        base = len(HEADER)
        body = body[base:]
    if not body:
        raise Graph6FormatError("empty record", base)
    first = ord(body[0])
    if first == 126:
        raise Graph6FormatError("long-form record (n > 62) not supported", base)
    if not 63 <= first <= 126:
        raise Graph6FormatError(f"byte {first} outside printable range 63..126", base)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) - 1 < nbytes:
        raise Graph6FormatError(
            f"truncated record: order {n} needs {nbytes} data bytes, got {len(body) - 1}",
            base + len(body),
        )
    if len(body) - 1 > nbytes:
        raise Graph6FormatError(
            f"trailing bytes after record of order {n}", base + 1 + nbytes
        )
    if n == 0:
        raise Graph6FormatError("graph of order 0 not supported", base)

    rows = [0] * n
    bit = 0
    i, j = 0, 1  # current upper-triangle slot, columns ordered by j then i
    for k in range(nbytes):
        c = ord(body[1 + k])
        if not 63 <= c <= 126:
            raise Graph6FormatError(
                f"byte {c} outside printable range 63..126", base + 1 + k
            )
        group = c - 63
        for shift in range(5, -1, -1):
            b = group >> shift & 1
            if bit < nbits:
                if b:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif b:
                raise Graph6FormatError("nonzero padding bits", base + 1 + k)
            bit += 1
    return Graph._from_rows_unchecked(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a short-form graph6 record (no trailing newline)."""
    if g.n > 62:
        raise ValueError(f"cannot encode order {g.n} > 62 in short form")
    n = g.n
    out = [chr(n + 63)]
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = group << 1 | (g.rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def stream_graph6(
    lines: Iterable[str],
    strict: bool = True,
    bad: list | None = None,
) -> Iterator[tuple[int, Graph]]:
    """Yield (lineno, graph) for each nonblank line of a graph6 stream.

    The optional ">>graph6<<" header is accepted at the start of the
    stream only.  With strict=True a malformed line raises Graph6FormatError
    carrying its line number; with strict=False bad lines are skipped and
    appended to `bad` as (lineno, error) when a list is supplied.
    """
    first = True
    for lineno, raw in enumerate(lines, start=1):
        body = raw.rstrip("\r\n")
        if first and body.startswith(HEADER):
            body = body[len(HEADER):]
        first = False
        if not body:
            continue
        try:
            yield lineno, decode_graph6(body)
        except Graph6FormatError as err:
            if strict:
                raise Graph6FormatError(err.message, err.offset, lineno) from None
            if bad is not None:
                bad.append((lineno, Graph6FormatError(err.message, err.offset, lineno)))


def read_graph6_file(path: str, strict: bool = True, bad: list | None = None):
    """Stream a graph6 corpus file lazily."""
    with open(path, "r", encoding="ascii") as fh:
        yield from stream_graph6(fh, strict=strict, bad=bad)

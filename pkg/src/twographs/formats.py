"""Graph file formats: edge-list, adjacency, seidel, graph6.

All text formats use 1-based vertex labels; graph6 is the usual
printable-ASCII upper-triangle encoding (6-bit groups biased by 63,
short header form, n <= 62).  Parse errors name the offending line.
"""

import numpy as np

from .graphs import SeidelMatrix, graph_from_edges

__all__ = [
    "ParseError",
    "FORMATS",
    "parse_graph",
    "format_graph",
    "parse_seidel_matrix",
    "format_seidel_matrix",
    "parse_graph_literal",
    "format_graph_literal",
    "sniff_format",
]

FORMATS = ("edge-list", "adjacency", "seidel", "graph6")


class ParseError(ValueError):
    pass


def _lines(text):
    if isinstance(text, bytes):
        text = text.decode("ascii")
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


# -- edge list ---------------------------------------------------------------


def parse_edge_list(text):
    lines = _lines(text)
    if not lines:
        raise ParseError("empty edge-list input")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError("line %d: expected vertex count, got %r" % (lineno, head))
    if n < 1:
        raise ParseError("line %d: vertex count must be positive" % lineno)
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("line %d: expected 'u v', got %r" % (lineno, line))
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("line %d: non-integer vertex label" % lineno)
        if u == v:
            raise ParseError("line %d: loop edge %d %d" % (lineno, u, v))
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(
                "line %d: vertex out of range 1..%d" % (lineno, n)
            )
        edges.append((u - 1, v - 1))
    return graph_from_edges(n, edges)


def format_edge_list(g):
    lines = [str(g.n)]
    lines += ["%d %d" % (i + 1, j + 1) for i, j in sorted(g.edges())]
    return "\n".join(lines) + "\n"


# -- dense matrices ----------------------------------------------------------


def _parse_matrix(text, allowed, what):
    lines = _lines(text)
    if not lines:
        raise ParseError("empty %s input" % what)
    rows = []
    for lineno, line in lines:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError("line %d: non-integer %s entry" % (lineno, what))
        rows.append((lineno, row))
    n = len(rows)
    m = np.zeros((n, n), dtype=np.int64)
    for i, (lineno, row) in enumerate(rows):
        if len(row) != n:
            raise ParseError(
                "line %d: expected %d entries, got %d" % (lineno, n, len(row))
            )
        for j, val in enumerate(row):
            if val not in allowed:
                raise ParseError(
                    "line %d, column %d: entry %d not in %s"
                    % (lineno, j + 1, val, sorted(allowed))
                )
            m[i, j] = val
    for i in range(n):
        for j in range(n):
            if m[i, j] != m[j, i]:
                raise ParseError(
                    "line %d, column %d: matrix is not symmetric"
                    % (rows[i][0], j + 1)
                )
    return rows, m


def parse_adjacency(text):
    rows, m = _parse_matrix(text, {0, 1}, "adjacency")
    for i, (lineno, _) in enumerate(rows):
        if m[i, i] != 0:
            raise ParseError("line %d: nonzero diagonal entry" % lineno)
    n = m.shape[0]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if m[i, j]]
    return graph_from_edges(n, edges)


def format_adjacency(g):
    a = g.adjacency()
    return "\n".join(" ".join(str(x) for x in row) for row in a) + "\n"


def parse_seidel_matrix(text):
    rows, m = _parse_matrix(text, {-1, 0, 1}, "seidel")
    n = m.shape[0]
    for i, (lineno, _) in enumerate(rows):
        if m[i, i] != 0:
            raise ParseError("line %d: Seidel diagonal must be zero" % lineno)
        for j in range(n):
            if i != j and m[i, j] == 0:
                raise ParseError(
                    "line %d, column %d: off-diagonal Seidel entry must be +-1"
                    % (lineno, j + 1)
                )
    return SeidelMatrix(m)


def format_seidel_matrix(s):
    return (
        "\n".join(" ".join(str(int(x)) for x in row) for row in s.entries) + "\n"
    )


# -- graph6 ------------------------------------------------------------------


def parse_graph6(text):
    if isinstance(text, bytes):
        text = text.decode("ascii")
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[10:]
    if not line:
        raise ParseError("empty graph6 input")
    data = [ord(ch) - 63 for ch in line]
    if any(d < 0 or d > 63 for d in data):
        raise ParseError("line 1: graph6 characters must be in chr(63..126)")
    n = data[0]
    if n == 63:
        raise ParseError("line 1: long-form graph6 (n > 62) not supported")
    if n < 1:
        raise ParseError("line 1: graph6 vertex count must be positive")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise ParseError(
            "line 1: expected %d data characters for n=%d, got %d"
            % (need, n, len(data) - 1)
        )
    bits = []
    for d in data[1:]:
        for k in range(5, -1, -1):
            bits.append(d >> k & 1)
    if any(bits[nbits:]):
        raise ParseError("line 1: nonzero graph6 padding bits")
    # graph6 orders the upper triangle column by column
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return graph_from_edges(n, edges)


def format_graph6(g):
    n = g.n
    if n > 62:
        raise ValueError("graph6 short form supports n <= 62")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out) + "\n"


# -- inline literals ---------------------------------------------------------


def parse_graph_literal(text):
    """Literal like ``n=6;12,13,24,34`` or ``n=12;1-2,3-10`` (1-based)."""
    body = text.strip()
    if not body.startswith("n="):
        raise ParseError("graph literal must start with 'n='")
    head, _, rest = body.partition(";")
    try:
        n = int(head[2:])
    except ValueError:
        raise ParseError("bad vertex count in graph literal: %r" % head)
    edges = []
    rest = rest.strip()
    if rest:
        for tok in rest.split(","):
            tok = tok.strip()
            if "-" in tok:
                a, _, b = tok.partition("-")
            elif len(tok) == 2 and tok.isdigit():
                a, b = tok[0], tok[1]
            else:
                raise ParseError(
                    "bad edge token %r (use 'uv' digits or 'u-v')" % tok
                )
            try:
                u, v = int(a), int(b)
            except ValueError:
                raise ParseError("bad edge token %r" % tok)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError("edge %r out of range 1..%d" % (tok, n))
            if u == v:
                raise ParseError("loop edge in literal: %r" % tok)
            edges.append((u - 1, v - 1))
    return graph_from_edges(n, edges)


def format_graph_literal(g):
    return "n=%d;%s" % (
        g.n,
        ",".join("%d-%d" % (i + 1, j + 1) for i, j in sorted(g.edges())),
    )


# -- dispatch ----------------------------------------------------------------

_PARSERS = {
    "edge-list": parse_edge_list,
    "adjacency": parse_adjacency,
    "seidel": lambda text: parse_seidel_matrix(text).to_graph(),
    "graph6": parse_graph6,
}

_FORMATTERS = {
    "edge-list": format_edge_list,
    "adjacency": format_adjacency,
    "seidel": lambda g: format_seidel_matrix(g.seidel()),
    "graph6": format_graph6,
}


def sniff_format(text):
    """Best-effort format detection for CLI convenience."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input")
    first = lines[0][1]
    toks = first.split()
    if len(toks) == 1 and not toks[0].lstrip("-").isdigit():
        return "graph6"
    if len(toks) == 1:
        return "edge-list"
    vals = set()
    for _, line in lines:
        for tok in line.split():
            vals.add(tok)
    if vals <= {"-1", "0", "1"} and "-1" in vals:
        return "seidel"
    if vals <= {"0", "1"} and len(lines) == len(lines[0][1].split()):
        return "adjacency"
    return "edge-list"


def parse_graph(text, fmt):
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt not in _PARSERS:
        raise ParseError("unknown format %r (have: %s)" % (fmt, ", ".join(FORMATS)))
    return _PARSERS[fmt](text)


def format_graph(g, fmt):
    if fmt not in _FORMATTERS:
        raise ValueError("unknown format %r (have: %s)" % (fmt, ", ".join(FORMATS)))
    return _FORMATTERS[fmt](g)

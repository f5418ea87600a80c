"""Graph file parsing and emission.

The offset format holds a vertex count, a directory of n+1 cumulative
1-based offsets, and the concatenated neighbor lists; braces enclose
comments.  The edge-list format is one "u v" pair per line with optional
# comments, and preserves the listed edge order as the edge numbering.
"""

from __future__ import annotations

import re

from .errors import BadOffsets, GrfParseError, OddNeighborCount
from .graphs import Graph, build_graph, graph_from_edges

_COMMENT = re.compile(r"\{[^}]*\}")


def _tokens(text: str) -> list[int]:
    cleaned = _COMMENT.sub(" ", text)
    if "{" in cleaned or "}" in cleaned:
        raise GrfParseError("unbalanced comment braces")
    out = []
    for tok in cleaned.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise GrfParseError(f"not an integer: {tok!r}") from None
    return out


def parse_grf(text: str) -> Graph:
    """Parse the offset format into a canonically numbered graph."""
    toks = _tokens(text)
    if not toks:
        raise GrfParseError("empty input")
    n = toks[0]
    if n < 1:
        raise GrfParseError(f"vertex count {n} must be positive")
    if len(toks) < n + 2:
        raise BadOffsets(f"expected {n + 1} offsets after the vertex count")
    offsets = toks[1 : n + 2]
    if offsets[0] != 1:
        raise BadOffsets(f"first offset must be 1, got {offsets[0]}")
    for a, b in zip(offsets, offsets[1:]):
        if b < a:
            raise BadOffsets(f"offsets decrease: {a} then {b}")
    total = offsets[-1] - 1
    if total % 2 != 0:
        raise OddNeighborCount(f"{total} neighbor entries cannot pair up")
    body = toks[n + 2 :]
    if len(body) != total:
        raise BadOffsets(
            f"offset directory promises {total} neighbor entries, found {len(body)}"
        )
    rows = [
        body[offsets[v] - 1 : offsets[v + 1] - 1] for v in range(n)
    ]
    return build_graph(n, rows)


def emit_grf(g: Graph) -> str:
    """Offset-format text; parse_grf(emit_grf(g)) == g for canonical graphs."""
    offsets = [1]
    for v in g.vertices:
        offsets.append(offsets[-1] + g.degree(v))
    lines = [str(g.n), " ".join(str(o) for o in offsets)]
    for v in g.vertices:
        lines.append(" ".join(str(u) for u in g.adjacency(v)))
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse "u v" lines; the listing order becomes the edge numbering."""
    edges: list[tuple[int, int]] = []
    top = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GrfParseError(f"expected two vertex ids per line: {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GrfParseError(f"not an integer pair: {raw!r}") from None
        edges.append((u, v))
        top = max(top, u, v)
    if not edges:
        raise GrfParseError("no edges found")
    return graph_from_edges(top, edges)


def load_graph(text: str) -> Graph:
    """Parse either supported format, preferring the offset format."""
    try:
        return parse_grf(text)
    except GrfParseError:
        return parse_edgelist(text)

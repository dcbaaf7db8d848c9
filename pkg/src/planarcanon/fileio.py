"""Edge-list file format.

First line ``n m``, then ``m`` lines ``u v`` with 0-based vertices, then
optional ``c v k`` lines giving vertex ``v`` color ``k``. Blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphFormatError
from .graph_model import Graph


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    try:
        n, m = (int(x) for x in lines[0])
    except ValueError as exc:
        raise GraphFormatError(f"bad header {' '.join(lines[0])!r}; expected 'n m'") from exc
    edges, colors = [], {}
    for lineno, parts in enumerate(lines[1:], start=2):
        try:
            if parts[0] == "c" and len(parts) == 3:
                v, k = int(parts[1]), int(parts[2])
                if not 0 <= v < n or k < 0:
                    raise GraphFormatError(f"line {lineno}: bad color assignment")
                colors[v] = k
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise GraphFormatError(f"line {lineno}: expected 'u v' or 'c v k'")
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: non-integer field") from exc
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
    return Graph.from_edges(n, edges, colors or None)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    if g.colors is not None:
        lines.extend(f"c {v} {k}" for v, k in enumerate(g.colors) if k)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_edge_list(text)


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))

"""Canonical lists and canons of biconnected and general planar graphs."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Union

from .decompose import ComponentKind, TriconTree, biconnected_decompose, block_tricon_tree
from .errors import GraphFormatError, NotBiconnectedError, UnbalancedListError
from .graph_model import Dart, Graph
from .tree_order import (
    PARENT_LABEL,
    BiconEngine,
    PairRoot,
    Root,
    TriconEngine,
    plain_label,
)

HEADER = "planar-canon v1"
PARENT_COLOR = -1  # reserved color for a distinguished parent vertex


class _Bracket:
    def __init__(self, symbol: str):
        self.symbol = symbol

    def __repr__(self) -> str:
        return self.symbol


OPEN = _Bracket("[")
CLOSE = _Bracket("]")


@dataclass(frozen=True)
class EdgeToken:
    tail: int
    head: int
    pair_id: int | None = None

    @property
    def virtual(self) -> bool:
        return self.pair_id is not None

    def __repr__(self) -> str:
        return f"({self.tail},{self.head}{'*' if self.virtual else ''})"


@dataclass(frozen=True)
class ArtMark:
    vertex: int

    def __repr__(self) -> str:
        return f"<{self.vertex}>"


Token = Union[_Bracket, EdgeToken, ArtMark]


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------


def _emit_pair(engine: TriconEngine, pid: int, parent: int | None, d: Dart, out: list) -> None:
    rep = engine.pair_rep(pid, parent)
    out.append(OPEN)
    out.append(EdgeToken(d[0], d[1], pid))
    rank = {d: 0, (d[1], d[0]): 1, None: 2}
    for cls in rep.classes:
        # Within a class, children giving this direction go first.
        for cid in sorted(cls, key=lambda c: (rank[engine.comp_rep(c, pid).orientation], c)):
            _emit_comp(engine, cid, pid, d, out)
    out.append(CLOSE)


def _emit_comp(engine: TriconEngine, cid: int, parent: int, d: Dart, out: list) -> None:
    c = engine.tree.components[cid]
    out.append(OPEN)
    if c.kind is ComponentKind.BOND:
        out.append(EdgeToken(d[0], d[1]))
    else:
        code = engine.comp_rep(cid, parent).best[d][1]
        out.extend(EdgeToken(e.tail, e.head, e.pair_id) for e in code.entries)
        for e in code.entries:
            if e.pair_id is not None and e.pair_id != parent:
                _emit_pair(engine, e.pair_id, cid, (e.tail, e.head), out)
    out.append(CLOSE)


def _emit_root(engine: TriconEngine, root: Root, out: list) -> None:
    if isinstance(root, PairRoot):
        _emit_pair(engine, root.pair_id, None, engine.root_direction(root.pair_id), out)
        return
    from .component_canon import component_code

    (c,) = engine.tree.components
    code = component_code(c, root.dart, root.flip)
    out.append(OPEN)
    out.extend(EdgeToken(e.tail, e.head, e.pair_id) for e in code.entries)
    out.append(CLOSE)


def canonical_list_tricon(
    tree: TriconTree,
    root: int | None = None,
    labels: dict[int, tuple] | None = None,
) -> list[Token]:
    """Canonical list of a triconnected component tree.

    With ``root`` given, the tree is rooted at that pair; otherwise the
    smallest root is chosen.
    """
    engine = TriconEngine(tree, labels)
    if root is None:
        _, chosen = engine.best_root()
    else:
        chosen = PairRoot(root)
    out: list[Token] = []
    _emit_root(engine, chosen, out)
    return out


def _emit_art(be: BiconEngine, a: int, parent: int | None, out: list) -> None:
    out.append(OPEN)
    out.append(ArtMark(a))
    kids = [b for b in be.membership[a] if b != parent]
    for b in sorted(kids, key=lambda b: (be.block_rep(b, a).key, b)):
        _emit_block(be, b, a, out)
    out.append(CLOSE)


def _emit_block(be: BiconEngine, bid: int, parent: int | None, out: list) -> None:
    block = be.bt.blocks[bid]
    rep = be.block_rep(bid, parent)
    out.append(OPEN)
    inner: list[Token] = []
    if block.tricon is None:
        u, v = block.vertices
        if parent == v or (parent is None and plain_label(be.color(v)) < plain_label(be.color(u))):
            u, v = v, u
        inner.append(EdgeToken(u, v))
    else:
        _emit_root(rep.engine, rep.root, inner)
    out.extend(inner)
    for v in _first_occurrence(inner):
        if v != parent and v in be.arts:
            _emit_art(be, v, bid, out)
    out.append(CLOSE)


def _first_occurrence(tokens: Iterable[Token]) -> list[int]:
    seen: dict[int, None] = {}
    for t in tokens:
        if isinstance(t, EdgeToken):
            seen.setdefault(t.tail)
            seen.setdefault(t.head)
        elif isinstance(t, ArtMark):
            seen.setdefault(t.vertex)
    return list(seen)


def canonical_list(g: Graph, root_policy: str = "exhaustive") -> list[Token]:
    """Canonical list of a connected planar graph."""
    be = BiconEngine(biconnected_decompose(g), root_policy)
    _, kind, idx = be.top()
    out: list[Token] = []
    if kind == "A":
        _emit_art(be, idx, None, out)
    elif kind == "B":
        _emit_block(be, idx, None, out)
    else:
        out.append(ArtMark(0))
    return out


# ---------------------------------------------------------------------------
# Canons
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CanonComponent:
    n: int
    edges: tuple[tuple[int, int], ...]
    colors: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class Canon:
    """Canonical form: components over consecutive 1-based labels, in canonical order."""

    components: tuple[CanonComponent, ...]

    @property
    def n(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def m(self) -> int:
        return sum(len(c.edges) for c in self.components)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for c in self.components for e in c.edges)

    def text(self) -> str:
        lines = [f"{HEADER} n={self.n} m={self.m}"]
        for i, comp in enumerate(self.components):
            if i:
                lines.append("--")
            lines.extend(f"{u} {v}" for u, v in comp.edges)
            lines.extend(f"c {v} {k}" for v, k in comp.colors)
        return "\n".join(lines) + "\n"

    __str__ = text

    def to_graph(self) -> Graph:
        colors = {v - 1: k for c in self.components for v, k in c.colors if k >= 0}
        return Graph.from_edges(self.n, ((u - 1, v - 1) for u, v in self.edges), colors or None)

    @classmethod
    def parse(cls, text: str) -> Canon:
        """Inverse of :meth:`text`.

        Component vertex counts are not stored; a section spans the labels up
        to its largest vertex, and an empty section is a single vertex.
        """
        lines = [ln.strip() for ln in text.strip().splitlines()]
        if not lines or not lines[0].startswith(HEADER):
            raise GraphFormatError("missing canon header")
        fields = dict(part.split("=", 1) for part in lines[0][len(HEADER) :].split())
        n, m = int(fields["n"]), int(fields["m"])
        sections: list[list[str]] = [[]]
        for ln in lines[1:]:
            if ln == "--":
                sections.append([])
            elif ln:
                sections[-1].append(ln)
        comps = []
        offset = 0
        for sec in sections:
            edges, colors = [], []
            for ln in sec:
                parts = ln.split()
                if parts[0] == "c":
                    colors.append((int(parts[1]), int(parts[2])))
                else:
                    edges.append((int(parts[0]), int(parts[1])))
            verts = {x for e in edges for x in e} | {v for v, _ in colors}
            size = (max(verts) - offset) if verts else 1
            comps.append(CanonComponent(size, tuple(edges), tuple(colors)))
            offset += size
        canon = cls(tuple(comps))
        if canon.m != m:
            raise GraphFormatError(f"header says m={m}, found {canon.m} edges")
        if canon.n != n:
            raise GraphFormatError(f"header says n={n}, found {canon.n} vertices")
        return canon


def relabel_and_strip(tokens: Sequence[Token]) -> tuple[list[tuple[int, int]], dict[int, int]]:
    """Number vertices 1.. by first occurrence and keep only real edges.

    Returns the relabeled edges and the map from old to new labels.
    """
    depth = 0
    numbers: dict[int, int] = {}
    edges = []
    for t in tokens:
        if t is OPEN:
            depth += 1
        elif t is CLOSE:
            depth -= 1
            if depth < 0:
                raise UnbalancedListError("closing bracket without opening bracket")
        elif isinstance(t, ArtMark):
            numbers.setdefault(t.vertex, len(numbers) + 1)
        else:
            a = numbers.setdefault(t.tail, len(numbers) + 1)
            b = numbers.setdefault(t.head, len(numbers) + 1)
            if not t.virtual:
                edges.append((a, b))
    if depth:
        raise UnbalancedListError(f"{depth} unclosed bracket(s)")
    return edges, numbers


def _component_canon(g: Graph, tokens: Sequence[Token], extra_colors: dict[int, int] | None = None):
    edges, numbers = relabel_and_strip(tokens)
    for v in range(g.n):
        numbers.setdefault(v, len(numbers) + 1)
    colors = {numbers[v]: g.color(v) for v in range(g.n) if g.color(v)}
    for v, k in (extra_colors or {}).items():
        colors[numbers[v]] = k
    return CanonComponent(g.n, tuple(edges), tuple(sorted(colors.items()))), numbers


def canon_biconnected(g: Graph, parent: int | None = None) -> Canon:
    """Canon of a biconnected planar graph; ``parent`` is distinctly colored if given."""
    if g.n < 2 or not g.is_connected():
        raise NotBiconnectedError("graph is not biconnected")
    if g.n == 2:
        u, v = (1, 0) if parent == 1 else (0, 1)
        comp, _ = _component_canon(g, [OPEN, EdgeToken(u, v), CLOSE], {parent: PARENT_COLOR} if parent is not None else None)
        return Canon((comp,))
    tree = block_tricon_tree(range(g.n), g.edges)
    if len(tree.vertices) != g.n or biconnected_decompose(g).articulation_points:
        raise NotBiconnectedError("graph is not biconnected")
    labels = {v: plain_label(g.color(v)) for v in range(g.n)}
    if parent is not None:
        labels[parent] = PARENT_LABEL
    tokens = canonical_list_tricon(tree, labels=labels)
    comp, _ = _component_canon(g, tokens, {parent: PARENT_COLOR} if parent is not None else None)
    return Canon((comp,))


def canon_connected(g: Graph, root_policy: str = "exhaustive") -> tuple[CanonComponent, dict[int, int]]:
    return _component_canon(g, canonical_list(g, root_policy))


def canon_planar(g: Graph, root_policy: str = "exhaustive") -> Canon:
    """Canon of an arbitrary planar graph; equal canons iff isomorphic graphs."""
    return canon_with_labeling(g, root_policy)[0]


def canon_with_labeling(g: Graph, root_policy: str = "exhaustive") -> tuple[Canon, list[int]]:
    """Canon plus the map ``label[v]`` (1-based) from input vertices to canon vertices."""
    parts = []
    for verts in g.connected_components():
        sub, old = g.induced(verts)
        comp, numbers = canon_connected(sub, root_policy)
        parts.append((comp, [old[v] for v in sorted(numbers, key=numbers.get)]))
    parts.sort(key=lambda p: (p[0].n, len(p[0].edges), p[0].edges, p[0].colors))
    comps = []
    label = [0] * g.n
    offset = 0
    for comp, order in parts:
        comps.append(
            CanonComponent(
                comp.n,
                tuple((u + offset, v + offset) for u, v in comp.edges),
                tuple((v + offset, k) for v, k in comp.colors),
            )
        )
        for i, v in enumerate(order, start=1):
            label[v] = i + offset
        offset += comp.n
    return Canon(tuple(comps)), label

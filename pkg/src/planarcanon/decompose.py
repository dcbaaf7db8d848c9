"""Biconnected and triconnected decomposition of planar graphs.

Triconnected components are obtained by splitting a biconnected block at
every 3-connected separating pair (a pair that disconnects the block and is
joined by at least three vertex-disjoint paths). Candidate pairs come from
face boundaries of a planar embedding, since every separating pair lies on a
common face. Each split leaves a virtual edge in both halves; a real edge
between the pair moves into a 3-bond leaf.
"""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from itertools import combinations

import networkx as nx

from .errors import DisconnectedError, NotBiconnectedError, TooSmallError
from .graph_model import (
    Edge,
    Graph,
    PlaneGraph,
    RotationScheme,
    embed_edge_list,
    trace_faces,
    tree_center,
)


class ComponentKind(IntEnum):
    # Values give the type order used when comparing component subtrees.
    BOND = 0
    CYCLE = 1
    TRICONNECTED = 2


@dataclass(frozen=True)
class SeparatingPair:
    id: int
    u: int
    v: int
    faces: frozenset[int] = frozenset()

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True, eq=False)
class TriconComponent:
    """A 3-bond, cycle or 3-connected component with its virtual edges.

    ``virtual_edges`` holds ``(u, v, pair_id)`` triples. A 3-bond stores its
    single real edge; its parallel virtual copies are implied by the pair.
    """

    id: int
    kind: ComponentKind
    vertices: tuple[int, ...]
    real_edges: tuple[Edge, ...]
    virtual_edges: tuple[tuple[int, int, int], ...]
    rotation: RotationScheme | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    @cached_property
    def edge_pairs(self) -> dict[Edge, int | None]:
        """Map each undirected edge ``(u, v)``, ``u < v``, to its pair id (None if real)."""
        out: dict[Edge, int | None] = {e: None for e in self.real_edges}
        if self.kind is not ComponentKind.BOND:
            for u, v, pid in self.virtual_edges:
                out[(u, v)] = pid
        return out

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edge_pairs:
            adj[u].append(v)
            adj[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in adj.items()}

    def pair_of(self, u: int, v: int) -> int | None:
        return self.edge_pairs[(u, v) if u < v else (v, u)]


@dataclass(frozen=True, eq=False)
class TriconTree:
    """Alternating tree of separating-pair nodes and component nodes."""

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    pairs: tuple[SeparatingPair, ...]
    components: tuple[TriconComponent, ...]
    pair_adj: tuple[tuple[int, ...], ...]
    comp_adj: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        """Sum of component sizes; pair vertices count once per component."""
        return sum(c.size for c in self.components)

    def node_adjacency(self) -> dict[tuple[str, int], list[tuple[str, int]]]:
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for p in self.pairs:
            adj[("P", p.id)] = [("C", c) for c in self.pair_adj[p.id]]
        for c in self.components:
            adj[("C", c.id)] = [("P", p) for p in self.comp_adj[c.id]]
        return adj

    def center(self) -> tuple[str, int]:
        return tree_center(self.node_adjacency())

    def pair_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for p in self.pairs:
            if p.endpoints == key:
                return p.id
        raise KeyError(f"({u}, {v}) is not a separating pair")


@dataclass(frozen=True, eq=False)
class Block:
    """A biconnected component; bridges have ``tricon`` set to None."""

    id: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    tricon: TriconTree | None

    @property
    def is_bridge(self) -> bool:
        return self.tricon is None

    @property
    def size(self) -> int:
        return 2 if self.tricon is None else self.tricon.size


@dataclass(frozen=True, eq=False)
class BiconTree:
    """Alternating tree of articulation-point nodes and block nodes."""

    graph: Graph
    blocks: tuple[Block, ...]
    articulation_points: tuple[int, ...]
    art_adj: dict[int, tuple[int, ...]]

    @cached_property
    def block_arts(self) -> tuple[tuple[int, ...], ...]:
        arts = set(self.articulation_points)
        return tuple(tuple(v for v in b.vertices if v in arts) for b in self.blocks)

    def node_adjacency(self) -> dict[tuple[str, int], list[tuple[str, int]]]:
        adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for a in self.articulation_points:
            adj[("A", a)] = [("B", b) for b in self.art_adj[a]]
        for b in self.blocks:
            adj[("B", b.id)] = [("A", a) for a in self.block_arts[b.id]]
        return adj


# ---------------------------------------------------------------------------
# Connectivity helpers
# ---------------------------------------------------------------------------


def _adjacency(vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def articulation_points(adj: dict[int, Sequence[int]], exclude: int | None = None) -> set[int]:
    """Cut vertices of the graph ``adj`` with vertex ``exclude`` deleted.

    Assumes the remaining graph is connected.
    """
    verts = [v for v in adj if v != exclude]
    if len(verts) < 3:
        return set()
    root = verts[0]
    disc = {root: 0}
    low = {root: 0}
    parent: dict[int, int | None] = {root: None}
    found: set[int] = set()
    counter = 1
    root_children = 0
    stack = [(root, iter(adj[root]))]
    while stack:
        v, it = stack[-1]
        descended = False
        for w in it:
            if w == exclude:
                continue
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                parent[w] = v
                stack.append((w, iter(adj[w])))
                descended = True
                break
            if w != parent[v]:
                low[v] = min(low[v], disc[w])
        if descended:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if p == root:
                root_children += 1
            elif low[v] >= disc[p]:
                found.add(p)
    if root_children > 1:
        found.add(root)
    return found


def vertex_disjoint_paths(adj: dict[int, Sequence[int]], s: int, t: int, limit: int = 3) -> int:
    """Number of internally vertex-disjoint s-t paths, capped at ``limit``."""
    residual: dict[tuple, dict[tuple, int]] = defaultdict(dict)

    def arc(a: tuple, b: tuple) -> None:
        residual[a][b] = residual[a].get(b, 0) + 1
        residual[b].setdefault(a, 0)

    for x in adj:
        if x != s and x != t:
            arc((x, 0), (x, 1))
    for x, ws in adj.items():
        for y in ws:
            arc((x, 1), (y, 0))
    source, sink = (s, 1), (t, 0)
    flow = 0
    while flow < limit:
        prev = {source: None}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b, c in residual[a].items():
                if c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            residual[a][b] -= 1
            residual[b][a] += 1
            b = a
        flow += 1
    return flow


def _is_biconnected(adj: dict[int, Sequence[int]]) -> bool:
    if not adj:
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj) and not articulation_points(adj)


# ---------------------------------------------------------------------------
# Separating pairs and inseparable sets
# ---------------------------------------------------------------------------


def _separating_pairs(adj: dict[int, Sequence[int]], rotation: RotationScheme) -> list[SeparatingPair]:
    candidates: dict[Edge, set[int]] = {}
    for fid, face in enumerate(trace_faces(rotation)):
        for u, v in combinations(sorted(set(face.vertices)), 2):
            candidates.setdefault((u, v), set()).add(fid)
    cuts: dict[int, set[int]] = {}
    pairs = []
    for u, v in sorted(candidates):
        if u not in cuts:
            cuts[u] = articulation_points(adj, exclude=u)
        if v in cuts[u] and vertex_disjoint_paths(adj, u, v) >= 3:
            pairs.append(SeparatingPair(len(pairs), u, v, frozenset(candidates[(u, v)])))
    return pairs


def three_connected_separating_pairs(pg: PlaneGraph) -> list[SeparatingPair]:
    """All 3-connected separating pairs of a biconnected plane graph, with spanned faces."""
    adj = {v: list(ws) for v, ws in enumerate(pg.graph.adjacency)}
    if pg.graph.n < 3 or not _is_biconnected(adj):
        raise NotBiconnectedError("graph is not biconnected")
    return _separating_pairs(adj, pg.rotation)


def _separable(adj: dict[int, Sequence[int]], pairs: Iterable[SeparatingPair], members: Iterable[int]) -> bool:
    members = set(members)
    for p in pairs:
        rest = members - {p.u, p.v}
        if len(rest) < 2:
            continue
        start = next(iter(rest))
        seen = {start, p.u, p.v}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if not rest <= seen:
            return True
    return False


def inseparable_triple(pg: PlaneGraph, pairs: Iterable[SeparatingPair], triple: Iterable[int]) -> bool:
    """True iff no pair in ``pairs`` splits ``triple`` across components."""
    adj = {v: list(ws) for v, ws in enumerate(pg.graph.adjacency)}
    return not _separable(adj, pairs, triple)


def components_by_triples(pg: PlaneGraph, pairs: Sequence[SeparatingPair]) -> list[frozenset[int]]:
    """Vertex sets of the non-bond components, computed literally from inseparable triples.

    Cubic in the number of vertices; intended as an independent check of
    :func:`triconnected_decompose` on small graphs.
    """
    adj = {v: list(ws) for v, ws in enumerate(pg.graph.adjacency)}
    triples = [t for t in combinations(range(pg.graph.n), 3) if not _separable(adj, pairs, t)]
    classes: list[set[int]] = []
    for i, ti in enumerate(triples):
        if any(set(ti) <= c for c in classes):
            continue
        comp = set(ti)
        for tj in triples[i + 1 :]:
            if not _separable(adj, pairs, set(ti) | set(tj)):
                comp |= set(tj)
        classes.append(comp)
    return [frozenset(c) for c in classes]


# ---------------------------------------------------------------------------
# Triconnected decomposition
# ---------------------------------------------------------------------------


@dataclass
class _Part:
    vertices: set[int]
    real: set[Edge]
    virtual: list[tuple[int, int, int]]


def _split(part: _Part, u: int, v: int, pid: int) -> tuple[list[_Part], bool]:
    adj: dict[int, list[int]] = {x: [] for x in part.vertices}
    for a, b in part.real:
        adj[a].append(b)
        adj[b].append(a)
    for a, b, _ in part.virtual:
        adj[a].append(b)
        adj[b].append(a)
    label: dict[int, int] = {}
    for s in sorted(part.vertices - {u, v}):
        if s in label:
            continue
        label[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in label and y != u and y != v:
                    label[y] = s
                    stack.append(y)
    roots = sorted(set(label.values()))
    if len(roots) < 2:
        raise RuntimeError(f"pair ({u}, {v}) does not split the part containing it")
    pieces = {r: _Part({x for x, lr in label.items() if lr == r} | {u, v}, set(), [(u, v, pid)]) for r in roots}
    has_real = False
    for a, b in part.real:
        if {a, b} == {u, v}:
            has_real = True
            continue
        pieces[label[a] if a in label else label[b]].real.add((a, b))
    for a, b, q in part.virtual:
        pieces[label[a] if a in label else label[b]].virtual.append((a, b, q))
    return [pieces[r] for r in roots], has_real


def _classify(part: _Part) -> ComponentKind:
    degree: dict[int, int] = defaultdict(int)
    for a, b in part.real:
        degree[a] += 1
        degree[b] += 1
    for a, b, _ in part.virtual:
        degree[a] += 1
        degree[b] += 1
    edge_count = len(part.real) + len(part.virtual)
    if edge_count == len(part.vertices) and all(degree[x] == 2 for x in part.vertices):
        return ComponentKind.CYCLE
    return ComponentKind.TRICONNECTED


def _build_tricon_tree(
    vertices: Sequence[int],
    edges: Sequence[Edge],
    rotation: RotationScheme,
) -> TriconTree:
    adj = _adjacency(vertices, edges)
    pairs = _separating_pairs(adj, rotation)
    parts = [_Part(set(vertices), set(edges), [])]
    bond_pairs = []
    for p in pairs:
        holders = [i for i, part in enumerate(parts) if p.u in part.vertices and p.v in part.vertices]
        if len(holders) != 1:
            raise RuntimeError(f"pair ({p.u}, {p.v}) lies in {len(holders)} parts")
        pieces, has_real = _split(parts.pop(holders[0]), p.u, p.v, p.id)
        if has_real:
            bond_pairs.append(p.id)
        parts.extend(pieces)

    # Component ids follow the smallest vertex triple, then bonds by pair.
    parts.sort(key=lambda part: sorted(part.vertices)[:3])
    components = []
    for part in parts:
        kind = _classify(part)
        rot = None
        if kind is ComponentKind.TRICONNECTED:
            if not pairs:
                rot = rotation
            else:
                rot = embed_edge_list(sorted(part.vertices), [*part.real, *((a, b) for a, b, _ in part.virtual)])
        virtual = tuple(sorted(((a, b) if a < b else (b, a)) + (q,) for a, b, q in part.virtual))
        components.append(
            TriconComponent(len(components), kind, tuple(sorted(part.vertices)), tuple(sorted(part.real)), virtual, rot)
        )
    for pid in bond_pairs:
        p = pairs[pid]
        components.append(
            TriconComponent(len(components), ComponentKind.BOND, (p.u, p.v), ((p.u, p.v),), ((p.u, p.v, pid),))
        )
    pair_adj: list[list[int]] = [[] for _ in pairs]
    comp_adj: list[list[int]] = [[] for _ in components]
    for c in components:
        for _, _, pid in c.virtual_edges:
            pair_adj[pid].append(c.id)
            comp_adj[c.id].append(pid)
    return TriconTree(
        tuple(sorted(vertices)),
        tuple(sorted(edges)),
        tuple(pairs),
        tuple(components),
        tuple(tuple(sorted(x)) for x in pair_adj),
        tuple(tuple(sorted(x)) for x in comp_adj),
    )


def triconnected_decompose(pg: PlaneGraph) -> TriconTree:
    """Triconnected component tree of a biconnected plane graph."""
    g = pg.graph
    if g.n < 3:
        raise TooSmallError("triconnected decomposition needs at least 3 vertices")
    adj = {v: list(ws) for v, ws in enumerate(g.adjacency)}
    if not _is_biconnected(adj):
        raise NotBiconnectedError("graph is not biconnected")
    return _build_tricon_tree(range(g.n), g.edges, pg.rotation)


def block_tricon_tree(vertices: Sequence[int], edges: Sequence[Edge]) -> TriconTree:
    """Embed a biconnected block given in original vertex labels and decompose it."""
    return _build_tricon_tree(vertices, edges, embed_edge_list(vertices, edges))


def biconnected_decompose(g: Graph) -> BiconTree:
    """Block tree of a connected graph; each block carries its triconnected tree."""
    if not g.is_connected():
        raise DisconnectedError("graph is not connected")
    nxg = g.to_networkx()
    block_sets = sorted(tuple(sorted(b)) for b in nx.biconnected_components(nxg)) if g.n > 1 else []
    blocks = []
    for verts in block_sets:
        vs = set(verts)
        edges = tuple(e for e in g.edges if e[0] in vs and e[1] in vs)
        tricon = block_tricon_tree(verts, edges) if len(verts) >= 3 else None
        blocks.append(Block(len(blocks), verts, edges, tricon))
    membership: dict[int, list[int]] = defaultdict(list)
    for b in blocks:
        for v in b.vertices:
            membership[v].append(b.id)
    arts = tuple(sorted(v for v, bs in membership.items() if len(bs) > 1))
    return BiconTree(g, tuple(blocks), arts, {a: tuple(membership[a]) for a in arts})


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------


def reconstruct_edges(tree: TriconTree) -> set[Edge]:
    """Real edges obtained by merging all components and dropping virtual edges."""
    out: set[Edge] = set()
    for c in tree.components:
        out.update(c.real_edges)
    return out


def tree_violations(tree: TriconTree) -> list[str]:
    """Violations of the component-tree shape properties (empty when valid).

    Checks: the node graph is a tree, leaves are component nodes, bonds are
    leaves, and every pair-rooted depth is odd.
    """
    problems = []
    adj = tree.node_adjacency()
    nodes = list(adj)
    edge_count = sum(len(v) for v in adj.values()) // 2
    if edge_count != len(nodes) - 1:
        problems.append("node graph is not a tree (edge count)")
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y[0] == x[0]:
                problems.append(f"non-alternating edge {x}-{y}")
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nodes):
        problems.append("node graph is disconnected")
    for node, nbrs in adj.items():
        if len(nbrs) <= 1 and node[0] == "P":
            problems.append(f"pair node {node} is a leaf")
    for c in tree.components:
        if c.kind is ComponentKind.BOND and len(tree.comp_adj[c.id]) != 1:
            problems.append(f"bond {c.id} is not a leaf")
    for p in tree.pairs:
        depth = _rooted_depth(adj, ("P", p.id))
        if depth % 2 != 1:
            problems.append(f"depth {depth} from pair {p.id} is even")
    return problems


def _rooted_depth(adj: dict, root) -> int:
    depth = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in depth:
                depth[y] = depth[x] + 1
                queue.append(y)
    return max(depth.values())


def intersecting_pairs_on_faces(pg: PlaneGraph, pairs: Iterable[SeparatingPair]) -> list[tuple]:
    """Pairs spanning a common face that intersect in its cyclic order."""
    pairs = list(pairs)
    bad = []
    for fid, face in enumerate(trace_faces(pg.rotation)):
        pos = {v: i for i, v in enumerate(face.vertices)}
        spanning = [p for p in pairs if p.u in pos and p.v in pos]
        for p, q in combinations(spanning, 2):
            i, j = sorted((pos[p.u], pos[p.v]))
            k, l = sorted((pos[q.u], pos[q.v]))
            if i < k < j < l or k < i < l < j:
                bad.append((fid, p.endpoints, q.endpoints))
    return bad

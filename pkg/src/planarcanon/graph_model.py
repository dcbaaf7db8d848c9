"""Graphs, rotation schemes, faces and tree centers."""

from __future__ import annotations

import warnings
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from .errors import GraphFormatError, MultipleCenterError, NonPlanarError

Edge = tuple[int, int]
Dart = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with optional colors.

    ``edges`` holds each undirected edge once as ``(u, v)`` with ``u < v``,
    sorted. Use :meth:`from_edges` to build one from unnormalized input.
    """

    n: int
    edges: tuple[Edge, ...]
    colors: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError("vertex count must be nonnegative")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise GraphFormatError("edges must be stored as (u, v) with u < v")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if self.colors is not None:
            if len(self.colors) != self.n:
                raise GraphFormatError("colors must list one entry per vertex")
            if any(c < 0 for c in self.colors):
                raise GraphFormatError("colors must be nonnegative")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        colors: Mapping[int, int] | Iterable[int] | None = None,
    ) -> Graph:
        """Normalize an edge iterable; parallel edges are collapsed with a warning."""
        normalized = set()
        duplicates = 0
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                duplicates += 1
            normalized.add(e)
        if duplicates:
            warnings.warn(f"collapsed {duplicates} parallel edge(s)", stacklevel=2)
        col: tuple[int, ...] | None = None
        if colors is not None:
            if isinstance(colors, Mapping):
                col = tuple(int(colors.get(v, 0)) for v in range(n))
            else:
                col = tuple(int(c) for c in colors)
            if not any(col):
                col = None
        return cls(n, tuple(sorted(normalized)), col)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def color(self, v: int) -> int:
        return 0 if self.colors is None else self.colors[v]

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphFormatError("relabeling must be a permutation of 0..n-1")
        colors = None
        if self.colors is not None:
            new = [0] * self.n
            for v, c in enumerate(self.colors):
                new[perm[v]] = c
            colors = tuple(new)
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), colors)

    def with_colors(self, colors: Mapping[int, int] | Iterable[int] | None) -> Graph:
        return Graph.from_edges(self.n, self.edges, colors)

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabeled densely; returns it with the new-to-old map."""
        old = sorted(vertices)
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        colors = None if self.colors is None else [self.colors[v] for v in old]
        return Graph.from_edges(len(old), edges, colors), old

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g


@dataclass(frozen=True, eq=False)
class RotationScheme:
    """Cyclic order of neighbors around each vertex (clockwise by convention)."""

    order: Mapping[Hashable, tuple]

    @cached_property
    def position(self) -> dict:
        return {v: {w: i for i, w in enumerate(nbrs)} for v, nbrs in self.order.items()}

    def successor(self, v, w):
        """Neighbor following ``w`` in the rotation at ``v``."""
        nbrs = self.order[v]
        return nbrs[(self.position[v][w] + 1) % len(nbrs)]

    def predecessor(self, v, w):
        nbrs = self.order[v]
        return nbrs[(self.position[v][w] - 1) % len(nbrs)]

    def inverse(self) -> RotationScheme:
        return RotationScheme({v: tuple(reversed(nbrs)) for v, nbrs in self.order.items()})

    def darts(self) -> list[Dart]:
        return [(v, w) for v, nbrs in self.order.items() for w in nbrs]

    def is_single_cycle(self) -> bool:
        return all(len(set(nbrs)) == len(nbrs) for nbrs in self.order.values())


@dataclass(frozen=True)
class Face:
    darts: tuple[Dart, ...]

    @property
    def vertices(self) -> tuple:
        return tuple(d[0] for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)


def trace_faces(rotation: RotationScheme) -> list[Face]:
    """Face boundaries of an embedded graph; each dart lies on exactly one face."""
    visited = set()
    out = []
    for start in sorted(rotation.darts()):
        if start in visited:
            continue
        boundary = []
        d = start
        while d not in visited:
            visited.add(d)
            boundary.append(d)
            u, v = d
            d = (v, rotation.predecessor(v, u))
        out.append(Face(tuple(boundary)))
    return out


@dataclass(frozen=True, eq=False)
class PlaneGraph:
    graph: Graph
    rotation: RotationScheme

    def faces(self) -> list[Face]:
        return faces(self)

    def inverse(self) -> PlaneGraph:
        return PlaneGraph(self.graph, self.rotation.inverse())

    def euler_ok(self) -> bool:
        return euler_check(self.graph, self.rotation)


def euler_check(graph: Graph, rotation: RotationScheme) -> bool:
    """n - m + f == 2 on every connected component with at least one edge."""
    face_list = trace_faces(rotation)
    comp_of = {}
    for i, comp in enumerate(graph.connected_components()):
        for v in comp:
            comp_of[v] = i
    n_c: dict[int, int] = {}
    m_c: dict[int, int] = {}
    f_c: dict[int, int] = {}
    for v in range(graph.n):
        n_c[comp_of[v]] = n_c.get(comp_of[v], 0) + 1
    for u, _ in graph.edges:
        m_c[comp_of[u]] = m_c.get(comp_of[u], 0) + 1
    for f in face_list:
        c = comp_of[f.darts[0][0]]
        f_c[c] = f_c.get(c, 0) + 1
    return all(n_c[c] - m + f_c.get(c, 0) == 2 for c, m in m_c.items())


def embed_edge_list(vertices: Iterable[Hashable], edges: Iterable[tuple]) -> RotationScheme:
    """Planar rotation scheme for an arbitrary simple graph; raises NonPlanarError."""
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    planar, embedding = nx.check_planarity(g)
    if not planar:
        raise NonPlanarError("graph is not planar")
    return RotationScheme({v: tuple(embedding.neighbors_cw_order(v)) for v in g.nodes})


def planar_embed(g: Graph) -> PlaneGraph:
    """Deterministic planar embedding of ``g``."""
    return PlaneGraph(g, embed_edge_list(range(g.n), g.edges))


def faces(pg: PlaneGraph) -> list[Face]:
    return trace_faces(pg.rotation)


def tree_center(adjacency: Mapping[Hashable, Iterable[Hashable]]):
    """Unique node of minimum eccentricity in a tree given as an adjacency map.

    Raises MultipleCenterError when the tree has two central nodes, which
    happens exactly when its longest path has an even number of nodes.
    """
    nodes = list(adjacency)
    if not nodes:
        raise ValueError("empty tree")
    remaining = set(nodes)
    degree = {v: len(list(adjacency[v])) for v in nodes}
    leaves = [v for v in nodes if degree[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in leaves:
            remaining.discard(v)
            for w in adjacency[v]:
                if w in remaining:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        leaves = nxt
    if len(remaining) == 2:
        raise MultipleCenterError("tree has two centers")
    return remaining.pop()

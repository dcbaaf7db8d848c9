"""Seeded random planar graphs for tests and acceptance runs."""

from __future__ import annotations

import random

import networkx as nx
import numpy as np
from scipy.spatial import Delaunay

from .graph_model import Graph

PROFILES = ("tree-ish", "biconnected", "3-connected")


def _try_add(g: nx.Graph, u: int, v: int) -> bool:
    if u == v or g.has_edge(u, v):
        return False
    g.add_edge(u, v)
    if nx.check_planarity(g)[0]:
        return True
    g.remove_edge(u, v)
    return False


def _extra_edges(g: nx.Graph, count: int, rng: random.Random) -> None:
    nodes = list(g.nodes)
    for _ in range(count):
        _try_add(g, rng.choice(nodes), rng.choice(nodes))


def _tree_ish(n: int, rng: random.Random) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for v in range(1, n):
        g.add_edge(v, rng.randrange(v))
    _extra_edges(g, rng.randint(0, max(1, n // 3)), rng)
    return g


def _biconnected(n: int, rng: random.Random) -> nx.Graph:
    g = nx.Graph()
    start = min(n, rng.randint(3, max(3, n // 2)))
    nx.add_cycle(g, range(start))
    nxt = start
    while nxt < n:
        # Attach an ear of fresh vertices between two distinct existing ones.
        length = rng.randint(1, min(4, n - nxt))
        for _ in range(20):
            a, b = rng.sample(range(nxt), 2)
            path = [a, *range(nxt, nxt + length), b]
            h = g.copy()
            nx.add_path(h, path)
            if nx.check_planarity(h)[0]:
                g = h
                nxt += length
                break
        else:
            length = n - nxt
            a, b = rng.sample(list(g.edges), 1)[0]
            g.remove_edge(a, b)
            nx.add_path(g, [a, *range(nxt, nxt + length), b])
            nxt += length
    _extra_edges(g, rng.randint(0, max(1, n // 3)), rng)
    return g


def _three_connected(n: int, rng: random.Random) -> nx.Graph:
    if n <= 4:
        return nx.complete_graph(n)
    pts = np.array([[rng.random(), rng.random()] for _ in range(n - 1)])
    tri = Delaunay(pts)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for simplex in tri.simplices:
        a, b, c = (int(x) for x in simplex)
        g.add_edges_from([(a, b), (b, c), (a, c)])
    apex = n - 1
    for v in tri.convex_hull.ravel():
        g.add_edge(apex, int(v))
    # Thin out edges while the graph stays 3-connected.
    edges = list(g.edges)
    rng.shuffle(edges)
    for u, v in edges[: rng.randint(0, len(edges) // 2)]:
        if g.degree(u) <= 3 or g.degree(v) <= 3:
            continue
        g.remove_edge(u, v)
        if nx.node_connectivity(g) < 3:
            g.add_edge(u, v)
    return g


def random_planar(n: int, seed: int, profile: str = "biconnected") -> Graph:
    """Planar graph on ``n`` vertices; identical output for identical arguments."""
    if n < 1:
        raise ValueError("n must be positive")
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    rng = random.Random(f"{profile}:{n}:{seed}")
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    build = {"tree-ish": _tree_ish, "biconnected": _biconnected, "3-connected": _three_connected}[profile]
    g = build(n, rng)
    return Graph.from_edges(n, g.edges)


def random_relabeling(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm

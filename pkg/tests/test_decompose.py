import itertools
import random

import networkx as nx
import pytest
from _support import (
    TWO_PAIRS,
    A,
    B,
    C,
    D,
    E,
    F,
    brute_articulation_points,
    brute_separating_pairs,
    complete,
    cycle,
    random_biconnected,
)

from planarcanon.decompose import (
    ComponentKind,
    articulation_points,
    biconnected_decompose,
    components_by_triples,
    inseparable_triple,
    intersecting_pairs_on_faces,
    reconstruct_edges,
    three_connected_separating_pairs,
    tree_violations,
    triconnected_decompose,
    vertex_disjoint_paths,
)
from planarcanon.errors import DisconnectedError, NotBiconnectedError, TooSmallError
from planarcanon.generate import random_planar
from planarcanon.graph_model import Graph, PlaneGraph, RotationScheme, planar_embed


def _pairs(g):
    return {p.endpoints for p in three_connected_separating_pairs(planar_embed(g))}


def test_two_pairs_separating_pairs():
    assert _pairs(TWO_PAIRS) == {(A, B), (C, D)}


def test_two_pairs_components():
    tree = triconnected_decompose(planar_embed(TWO_PAIRS))
    got = {(c.kind, frozenset(c.vertices)) for c in tree.components}
    assert got == {
        (ComponentKind.CYCLE, frozenset({A, B, F})),
        (ComponentKind.TRICONNECTED, frozenset({A, B, C, D})),
        (ComponentKind.BOND, frozenset({C, D})),
        (ComponentKind.CYCLE, frozenset({C, D, E})),
    }
    k4 = next(c for c in tree.components if c.kind is ComponentKind.TRICONNECTED)
    assert {(u, v) for u, v, _ in k4.virtual_edges} == {(A, B), (C, D)}
    assert tree_violations(tree) == []


def test_two_pairs_center_is_k4_component():
    tree = triconnected_decompose(planar_embed(TWO_PAIRS))
    kind, idx = tree.center()
    assert kind == "C" and set(tree.components[idx].vertices) == {A, B, C, D}


def test_two_pairs_inseparable_triples():
    pg = planar_embed(TWO_PAIRS)
    pairs = three_connected_separating_pairs(pg)
    assert inseparable_triple(pg, pairs, (A, B, C))
    assert not inseparable_triple(pg, pairs, (F, E, C))


def test_cycle_triples_are_inseparable():
    pg = planar_embed(cycle(6))
    assert three_connected_separating_pairs(pg) == []
    for t in itertools.combinations(range(6), 3):
        assert inseparable_triple(pg, [], t)


def test_k4_single_triconnected_node():
    tree = triconnected_decompose(planar_embed(complete(4)))
    assert [c.kind for c in tree.components] == [ComponentKind.TRICONNECTED]
    assert tree.pairs == ()


def test_c5_single_cycle_node():
    tree = triconnected_decompose(planar_embed(cycle(5)))
    assert [c.kind for c in tree.components] == [ComponentKind.CYCLE]


def test_rejects_small_and_non_biconnected():
    with pytest.raises(TooSmallError):
        triconnected_decompose(planar_embed(Graph(2, ((0, 1),))))
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(NotBiconnectedError):
        triconnected_decompose(planar_embed(path))
    with pytest.raises(NotBiconnectedError):
        three_connected_separating_pairs(planar_embed(path))


def test_biconnected_decompose_shapes():
    assert len(biconnected_decompose(cycle(4)).blocks) == 1
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    bt = biconnected_decompose(bowtie)
    assert bt.articulation_points == (2,)
    assert len(bt.blocks) == 2 and bt.art_adj[2] == (0, 1)
    with pytest.raises(DisconnectedError):
        biconnected_decompose(Graph(3, ((0, 1),)))


def test_bridges_have_no_tricon_tree():
    bt = biconnected_decompose(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert all(b.is_bridge and b.size == 2 for b in bt.blocks)


@pytest.mark.parametrize("seed", range(30))
def test_articulation_points_match_vertex_deletion(seed):
    rng = random.Random(seed)
    g = random_planar(rng.randint(2, 9), seed, "tree-ish")
    bt = biconnected_decompose(g)
    assert set(bt.articulation_points) == brute_articulation_points(g)
    glued = {e for b in bt.blocks for e in b.edges}
    assert glued == set(g.edges)


def test_articulation_points_excluding_vertex():
    adj = {v: list(ws) for v, ws in enumerate(cycle(5).adjacency)}
    assert articulation_points(adj) == set()
    assert articulation_points(adj, exclude=0) == {2, 3}


def test_vertex_disjoint_paths_counts():
    adj = {v: list(ws) for v, ws in enumerate(complete(5).adjacency)}
    assert vertex_disjoint_paths(adj, 0, 1, limit=10) == 4
    adj = {v: list(ws) for v, ws in enumerate(cycle(5).adjacency)}
    assert vertex_disjoint_paths(adj, 0, 2) == 2


@pytest.mark.parametrize("seed", range(40))
def test_separating_pairs_match_brute_force(seed):
    g = random_biconnected(random.Random(seed).randint(3, 9), seed)
    assert _pairs(g) == brute_separating_pairs(g)


@pytest.mark.parametrize("seed", range(40))
def test_decomposition_properties(seed):
    g = random_biconnected(random.Random(seed).randint(3, 11), seed)
    pg = planar_embed(g)
    tree = triconnected_decompose(pg)
    assert tree_violations(tree) == []
    assert intersecting_pairs_on_faces(pg, tree.pairs) == []
    assert reconstruct_edges(tree) == set(g.edges)
    pair_set = {p.endpoints for p in tree.pairs}
    for c in tree.components:
        assert all((u, v) in pair_set for u, v, _ in c.virtual_edges)
        h = nx.MultiGraph()
        h.add_edges_from(c.real_edges)
        h.add_edges_from((u, v) for u, v, _ in c.virtual_edges)
        if c.kind is ComponentKind.BOND:
            assert c.size == 2 and len(c.real_edges) == 1
            assert len(tree.pair_adj[c.virtual_edges[0][2]]) >= 3
        elif c.kind is ComponentKind.CYCLE:
            assert all(d == 2 for _, d in h.degree()) and nx.is_connected(h)
        else:
            assert nx.node_connectivity(nx.Graph(h)) >= 3
    for p in tree.pairs:
        has_real = g.has_edge(*p.endpoints)
        bonds = [c for c in tree.pair_adj[p.id] if tree.components[c].kind is ComponentKind.BOND]
        assert len(bonds) == int(has_real)


@pytest.mark.parametrize("seed", range(25))
def test_components_match_inseparable_triple_classes(seed):
    g = random_biconnected(random.Random(seed).randint(3, 9), seed)
    pg = planar_embed(g)
    tree = triconnected_decompose(pg)
    ours = sorted(sorted(c.vertices) for c in tree.components if c.kind is not ComponentKind.BOND)
    classes = components_by_triples(pg, tree.pairs)
    assert ours == sorted(sorted(c) for c in classes)
    for x, y in itertools.combinations(classes, 2):
        assert x == y or len(x & y) <= 2


@pytest.mark.parametrize("seed", range(15))
def test_decomposition_is_embedding_independent(seed):
    g = random_biconnected(random.Random(seed).randint(4, 10), seed)
    pg = planar_embed(g)
    base = triconnected_decompose(pg)
    mirrored = triconnected_decompose(PlaneGraph(g, RotationScheme(pg.rotation.inverse().order)))
    family = lambda t: sorted((c.kind, c.vertices) for c in t.components)  # noqa: E731
    assert family(base) == family(mirrored)
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    relabeled = triconnected_decompose(planar_embed(g.relabel(perm)))
    assert sorted((c.kind, tuple(sorted(perm[v] for v in c.vertices))) for c in base.components) == family(relabeled)


def test_non_cycle_non_3connected_blocks_have_a_pair():
    for seed in range(60):
        g = random_biconnected(random.Random(seed).randint(4, 12), seed)
        nxg = g.to_networkx()
        is_cycle = all(d == 2 for _, d in nxg.degree())
        if is_cycle or nx.node_connectivity(nxg) >= 3:
            continue
        assert _pairs(g), f"seed {seed}"

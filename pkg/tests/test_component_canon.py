import itertools
import random

import pytest
from _support import TWO_PAIRS, A, B, C, D, complete, cycle

from planarcanon.component_canon import (
    bond_code,
    candidate_codes,
    component_code,
    cycle_code,
    threeconn_code,
)
from planarcanon.decompose import ComponentKind, triconnected_decompose
from planarcanon.errors import EdgeNotInComponentError, NotThreeConnectedError
from planarcanon.generate import random_planar
from planarcanon.graph_model import planar_embed
from planarcanon.oracle import brute_force_iso


def _single(g):
    (c,) = triconnected_decompose(planar_embed(g)).components
    return c


def _edges(code):
    return [(e.tail, e.head) for e in code.entries]


def test_triangle_codes():
    c = _single(cycle(3))
    assert _edges(cycle_code(c, (0, 1))) == [(0, 1), (1, 2), (2, 0)]
    assert _edges(cycle_code(c, (1, 0))) == [(1, 0), (0, 2), (2, 1)]


def test_c4_two_codes_are_reverses():
    c = _single(cycle(4))
    fwd = cycle_code(c, (0, 1))
    back = cycle_code(c, (1, 0))
    assert fwd.numbered() == back.numbered()
    rev = [(y, x) for x, y in reversed(_edges(fwd))]
    # Reversing the forward walk and rotating it to start at (1, 0) gives the backward walk.
    k = rev.index((1, 0))
    assert rev[k:] + rev[:k] == _edges(back)


def test_cycle_code_rejects_foreign_edge():
    with pytest.raises(EdgeNotInComponentError):
        cycle_code(_single(cycle(4)), (0, 2))


def test_k4_codes_identical_across_darts():
    c = _single(complete(4))
    numbered = {component_code(c, (u, v), f).numbered() for u, v in itertools.permutations(range(4), 2) for f in (0, 1)}
    assert len(numbered) == 1


def test_threeconn_requires_rotation():
    c = _single(cycle(4))
    with pytest.raises(NotThreeConnectedError):
        threeconn_code(c, None, (0, 1), False)


def test_code_covers_every_edge_once():
    g = random_planar(9, 4, "3-connected")
    c = _single(g)
    for u, v in g.edges:
        for f in (False, True):
            code = threeconn_code(c, c.rotation, (u, v), f)
            assert sorted(tuple(sorted(e)) for e in _edges(code)) == list(g.edges)
            assert code.start == (u, v) and code.flip is f


def test_code_is_deterministic():
    c = _single(random_planar(8, 2, "3-connected"))
    a = threeconn_code(c, c.rotation, c.real_edges[0], True)
    b = threeconn_code(c, c.rotation, c.real_edges[0], True)
    assert a == b


def test_two_pairs_k4_component_codes_from_parent_edge():
    tree = triconnected_decompose(planar_embed(TWO_PAIRS))
    k4 = next(c for c in tree.components if c.kind is ComponentKind.TRICONNECTED)
    codes = candidate_codes(k4, (A, B))
    assert len(codes) == 4
    assert {code.start for code in codes} == {(A, B), (B, A)}
    for code in codes:
        virtual = {(min(e.tail, e.head), max(e.tail, e.head)) for e in code.entries if e.virtual}
        assert virtual == {(A, B), (C, D)}
    assert len({code.numbered() for code in codes if code.start == (A, B)}) <= 2


def test_candidate_counts_by_kind():
    tree = triconnected_decompose(planar_embed(TWO_PAIRS))
    by_kind = {c.kind: c for c in tree.components}
    bond = by_kind[ComponentKind.BOND]
    assert [_edges(code) for code in candidate_codes(bond, (C, D))] == [[(C, D)]]
    cyc = by_kind[ComponentKind.CYCLE]
    assert len(candidate_codes(cyc, cyc.virtual_edges[0][:2])) == 2
    assert len(candidate_codes(by_kind[ComponentKind.TRICONNECTED], (A, B))) == 4
    assert _edges(bond_code(bond, (D, C))) == [(D, C)]


def _code_multiset(g):
    c = _single(g)
    return sorted(component_code(c, (u, v), f).numbered() for u, v in itertools.permutations(range(g.n), 2) if g.has_edge(u, v) for f in (False, True))


@pytest.mark.parametrize("seed", range(20))
def test_code_multisets_decide_isomorphism(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 8)
    g = random_planar(n, seed, "3-connected")
    perm = list(range(n))
    rng.shuffle(perm)
    same = g.relabel(perm)
    other = random_planar(n, seed + 1000, "3-connected")
    assert _code_multiset(g) == _code_multiset(same)
    assert (_code_multiset(g) == _code_multiset(other)) == bool(brute_force_iso(g, other))


@pytest.mark.parametrize("seed", range(10))
def test_corresponding_darts_give_equal_codes_for_some_flip(seed):
    rng = random.Random(seed)
    g = random_planar(rng.randint(4, 8), seed, "3-connected")
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    cg, ch = _single(g), _single(h)
    for u, v in g.edges:
        a = {component_code(cg, (u, v), f).numbered() for f in (False, True)}
        b = {component_code(ch, (perm[u], perm[v]), f).numbered() for f in (False, True)}
        assert a == b

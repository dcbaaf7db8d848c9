"""Exhaustive comparison of canon classes against the brute-force oracle."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field

import networkx as nx

from .canonizer import canon_planar
from .graph_model import Graph
from .oracle import brute_force_iso


@dataclass
class SelftestReport:
    max_n: int
    graphs: int = 0
    classes_by_n: dict[int, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def connected_planar_graphs(max_n: int) -> list[Graph]:
    """One graph per isomorphism class of connected planar graphs with 1..max_n vertices."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    out = []
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() > max_n:
            break
        if nx.is_connected(g) and nx.check_planarity(g)[0]:
            out.append(Graph.from_edges(g.number_of_nodes(), g.edges))
    return out


def _degree_signature(g: Graph) -> tuple:
    return (g.n, g.m, tuple(sorted(len(a) for a in g.adjacency)))


def run_selftest(max_n: int = 7, seed: int = 0, copies: int = 1) -> SelftestReport:
    """Check that canon equality partitions a pool of graphs exactly as the oracle does.

    The pool holds every connected planar graph up to ``max_n`` vertices plus
    ``copies`` random relabelings of each. Oracle classes are computed by
    brute force within buckets of equal degree sequence.
    """
    rng = random.Random(seed)
    report = SelftestReport(max_n)
    pool: list[Graph] = []
    for g in connected_planar_graphs(max_n):
        pool.append(g)
        for _ in range(copies):
            perm = list(range(g.n))
            rng.shuffle(perm)
            pool.append(g.relabel(perm))
    report.graphs = len(pool)

    buckets: dict[tuple, list[int]] = defaultdict(list)
    for i, g in enumerate(pool):
        buckets[_degree_signature(g)].append(i)
    oracle_class = [-1] * len(pool)
    next_class = 0
    for members in buckets.values():
        reps: list[int] = []
        for i in members:
            for r in reps:
                if brute_force_iso(pool[i], pool[r]):
                    oracle_class[i] = oracle_class[r]
                    break
            else:
                reps.append(i)
                oracle_class[i] = next_class
                next_class += 1

    canon_class: dict[str, int] = {}
    seen_pair: dict[int, str] = {}
    per_n: dict[int, set[str]] = defaultdict(set)
    for i, g in enumerate(pool):
        text = canon_planar(g).text()
        per_n[g.n].add(text)
        oc = oracle_class[i]
        if text in canon_class and canon_class[text] != oc:
            report.mismatches.append(f"graph {i}: canon shared by oracle classes {canon_class[text]} and {oc}")
        canon_class.setdefault(text, oc)
        if oc in seen_pair and seen_pair[oc] != text:
            report.mismatches.append(f"graph {i}: oracle class {oc} has two canons")
        seen_pair.setdefault(oc, text)
    report.classes_by_n = {n: len(v) for n, v in sorted(per_n.items())}
    return report

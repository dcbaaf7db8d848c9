"""Brute-force isomorphism and automorphism oracles for small graphs."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import TooLargeError
from .graph_model import Graph

DEFAULT_BOUND = 10


@dataclass(frozen=True)
class OracleResult:
    isomorphic: bool
    witness: tuple[int, ...] | None = None  # witness[v] = image of v

    def __bool__(self) -> bool:
        return self.isomorphic


def _signature(g: Graph, v: int, colored: bool) -> tuple:
    return (len(g.adjacency[v]), g.color(v) if colored else 0)


def _isomorphisms(g: Graph, h: Graph, colored: bool) -> Iterator[tuple[int, ...]]:
    """All bijections mapping ``g`` onto ``h``, by backtracking."""
    n = g.n
    if n != h.n or g.m != h.m:
        return
    sig_g = [_signature(g, v, colored) for v in range(n)]
    sig_h = [_signature(h, v, colored) for v in range(n)]
    if sorted(sig_g) != sorted(sig_h):
        return
    # Visit vertices so that each new one tends to have mapped neighbors.
    order: list[int] = []
    placed = set()
    for s in sorted(range(n), key=lambda v: -len(g.adjacency[v])):
        if s in placed:
            continue
        stack = [s]
        while stack:
            x = stack.pop()
            if x in placed:
                continue
            placed.add(x)
            order.append(x)
            stack.extend(y for y in g.adjacency[x] if y not in placed)
    image = [-1] * n
    used = [False] * n
    hset = h.edge_set

    def extend(i: int):
        if i == n:
            yield tuple(image)
            return
        v = order[i]
        for w in range(n):
            if used[w] or sig_h[w] != sig_g[v]:
                continue
            ok = True
            for x in order[:i]:
                adjacent = g.has_edge(v, x)
                y = image[x]
                if adjacent != (((w, y) if w < y else (y, w)) in hset):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            yield from extend(i + 1)
            used[w] = False
            image[v] = -1

    yield from extend(0)


def _check_bound(n: int, bound: int) -> None:
    if n > bound:
        raise TooLargeError(f"{n} vertices exceed the brute-force bound of {bound}")


def brute_force_iso(g: Graph, h: Graph, colored: bool = True, bound: int = DEFAULT_BOUND) -> OracleResult:
    """Exact isomorphism test; respects vertex colors when ``colored``."""
    _check_bound(max(g.n, h.n), bound)
    for witness in _isomorphisms(g, h, colored):
        return OracleResult(True, witness)
    return OracleResult(False)


def brute_force_aut_count(g: Graph, bound: int = DEFAULT_BOUND) -> int:
    """Number of color-preserving automorphisms."""
    _check_bound(g.n, bound)
    return sum(1 for _ in _isomorphisms(g, g, True))


def is_witness(g: Graph, h: Graph, witness: tuple[int, ...]) -> bool:
    """True iff ``witness`` maps the edges of ``g`` exactly onto those of ``h``."""
    if sorted(witness) != list(range(h.n)) or g.n != h.n:
        return False
    mapped = {(min(witness[u], witness[v]), max(witness[u], witness[v])) for u, v in g.edges}
    return mapped == set(h.edges)

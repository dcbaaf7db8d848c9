"""Codes of single triconnected components relative to a start dart.

A code lists every edge of a component exactly once, in an order fixed by
the start dart and, for 3-connected components, by the choice between the
embedding and its mirror image. Vertices are numbered by first visit, so two
codes of isomorphic components agree entry for entry whenever the start
darts correspond.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

from .decompose import ComponentKind, TriconComponent
from .errors import EdgeNotInComponentError, NotThreeConnectedError
from .graph_model import Dart, RotationScheme


@dataclass(frozen=True)
class CodeEntry:
    tail: int
    head: int
    pair_id: int | None = None

    @property
    def virtual(self) -> bool:
        return self.pair_id is not None


@dataclass(frozen=True)
class Code:
    """Edge sequence of one component; ``numbers`` maps vertices to visit order."""

    entries: tuple[CodeEntry, ...]
    start: Dart
    flip: bool
    numbers: dict[int, int]

    def numbered(self) -> tuple[tuple[int, int], ...]:
        """Entries as visit-number pairs; label independent."""
        num = self.numbers
        return tuple((num[e.tail], num[e.head]) for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _check_edge(c: TriconComponent, start: Dart) -> None:
    u, v = start
    if ((u, v) if u < v else (v, u)) not in c.edge_pairs:
        raise EdgeNotInComponentError(f"{start} is not an edge of component {c.id}")


def walk_cycle(c: TriconComponent, start: Dart) -> Iterator[Dart]:
    """Directed edges of a cycle component in traversal order from ``start``."""
    adj = c.adjacency
    prev, cur = start
    yield start
    while cur != start[0]:
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
        yield (prev, cur)


def walk_threeconn(rotation: RotationScheme, start: Dart, flip: bool) -> Iterator[Dart]:
    """Breadth-first traversal over the rotation system from ``start``.

    The queue holds (vertex, reference neighbor) darts. A vertex's neighbors
    are scanned in rotation order (mirrored if ``flip``) starting after the
    reference neighbor; each undirected edge is yielded on first encounter,
    so vertices appear in the order they are numbered.
    """
    u, v = start
    seen = {u, v}
    emitted = {(u, v) if u < v else (v, u)}
    yield start
    queue = deque([(u, v), (v, u)])
    order = rotation.order
    position = rotation.position
    step = -1 if flip else 1
    while queue:
        x, ref = queue.popleft()
        nbrs = order[x]
        k = len(nbrs)
        i = position[x][ref]
        for j in range(1, k + 1):
            y = nbrs[(i + step * j) % k]
            e = (x, y) if x < y else (y, x)
            if e not in emitted:
                emitted.add(e)
                yield (x, y)
            if y not in seen:
                seen.add(y)
                queue.append((y, x))


def walk(c: TriconComponent, start: Dart, flip: bool = False) -> Iterator[Dart]:
    """Lazy version of :func:`component_code` yielding directed edges only."""
    _check_edge(c, start)
    if c.kind is ComponentKind.BOND:
        return iter((start,))
    if c.kind is ComponentKind.CYCLE:
        return walk_cycle(c, start)
    if c.rotation is None:
        raise NotThreeConnectedError(f"component {c.id} is not 3-connected")
    return walk_threeconn(c.rotation, start, flip)


def _build(c: TriconComponent, darts: Iterator[Dart], start: Dart, flip: bool) -> Code:
    numbers: dict[int, int] = {}
    entries = []
    for x, y in darts:
        numbers.setdefault(x, len(numbers))
        numbers.setdefault(y, len(numbers))
        entries.append(CodeEntry(x, y, c.pair_of(x, y)))
    return Code(tuple(entries), start, flip, numbers)


def cycle_code(c: TriconComponent, start: Dart) -> Code:
    if c.kind is not ComponentKind.CYCLE:
        raise ValueError("cycle_code needs a cycle component")
    _check_edge(c, start)
    return _build(c, walk_cycle(c, start), start, False)


def threeconn_code(c: TriconComponent, rotation: RotationScheme | None, start: Dart, flip: bool) -> Code:
    """Code of a 3-connected component; see :func:`walk_threeconn` for the order."""
    if c.kind is not ComponentKind.TRICONNECTED or rotation is None:
        raise NotThreeConnectedError(f"component {c.id} is not 3-connected")
    _check_edge(c, start)
    return _build(c, walk_threeconn(rotation, start, flip), start, flip)


def bond_code(c: TriconComponent, start: Dart) -> Code:
    _check_edge(c, start)
    a, b = start
    return Code((CodeEntry(a, b, None),), start, False, {a: 0, b: 1})


def component_code(c: TriconComponent, start: Dart, flip: bool = False) -> Code:
    """Code for a given start dart and embedding choice; cached per component."""
    cache = c.__dict__.setdefault("_code_cache", {})
    key = (start, flip)
    code = cache.get(key)
    if code is None:
        if c.kind is ComponentKind.BOND:
            code = bond_code(c, start)
        elif c.kind is ComponentKind.CYCLE:
            code = cycle_code(c, start)
        else:
            code = threeconn_code(c, c.rotation, start, flip)
        cache[key] = code
    return code


def candidate_codes(c: TriconComponent, parent: tuple[int, int]) -> list[Code]:
    """All codes of ``c`` starting at the parent edge: 1 for bonds, 2 for cycles, 4 otherwise."""
    u, v = parent
    if c.kind is ComponentKind.BOND:
        lo, hi = (u, v) if u < v else (v, u)
        return [component_code(c, (lo, hi))]
    flips = (False, True) if c.kind is ComponentKind.TRICONNECTED else (False,)
    return [component_code(c, d, f) for d in ((u, v), (v, u)) for f in flips]

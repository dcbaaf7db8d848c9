"""Isomorphism order on triconnected and biconnected component trees.

Every rooted subtree is summarized by a comparison key: a nested tuple whose
natural ordering is the isomorphism order. Two subtrees get equal keys iff
they are isomorphic with their roots mapped onto each other. Keys are
memoized per (node, parent), which makes them independent of where the whole
tree is rooted, so trying every root costs about as much as trying one.

Subtree keys, in the order their fields are compared:

* pair node: size, number of children, sorted child keys, orientation counters;
* component node: type (bond < cycle < 3-connected), then the smallest code
  where each entry carries visit numbers, vertex labels, real/virtual, the
  child subtree key and whether the traversal agrees with the child's
  reference orientation.

Vertex labels bring in the biconnected layer: a vertex is labeled once, in
the topmost component that contains it, with its color or with the key of the
articulation subtree hanging from it.
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from itertools import groupby
from typing import NamedTuple

from .component_canon import Code, candidate_codes, component_code, walk
from .decompose import BiconTree, ComponentKind, TriconComponent, TriconTree
from .graph_model import Dart, trace_faces

trace_log = logging.getLogger("planarcanon.trace")

PARENT_LABEL = (0, 0)


def plain_label(color: int) -> tuple:
    return (1, color)


def art_label(key: tuple) -> tuple:
    return (2, key)


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, x, y) -> Ordering:
        return cls.LESS if x < y else cls.GREATER if x > y else cls.EQUAL


@dataclass(frozen=True)
class OrientationOutcome:
    """Direction given to a parent pair (None when symmetric) and per-class counters."""

    direction: Dart | None
    counters: tuple[tuple[int, int], ...] = ()

    @property
    def symmetric(self) -> bool:
        return self.direction is None


@dataclass(frozen=True)
class OrderResult:
    ordering: Ordering
    left: OrientationOutcome | None = None
    right: OrientationOutcome | None = None


class PairRoot(NamedTuple):
    pair_id: int


class DartRoot(NamedTuple):
    dart: Dart
    flip: bool


Root = PairRoot | DartRoot


@dataclass(frozen=True, eq=False)
class CompRep:
    key: tuple
    orientation: Dart | None
    size: int
    # Smallest code and its entry keys for each start direction.
    best: dict[Dart, tuple[tuple, Code]] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class PairRep:
    key: tuple
    reference: Dart | None
    counters: tuple[tuple[int, int], ...]
    size: int
    classes: tuple[tuple[int, ...], ...]


def orientation_counters(
    endpoints: Dart, classes: Sequence[Sequence[Dart | None]]
) -> tuple[tuple[tuple[int, int], ...], Dart | None]:
    """Counters per isomorphism class and the reference orientation of a pair.

    ``classes`` lists, class by class in increasing order, the orientation
    each child gives to the pair. The reference orientation comes from the
    first class whose two counts differ; counters are then reported with the
    reference direction first.
    """
    u, v = endpoints
    raw = []
    for cls in classes:
        raw.append((sum(1 for d in cls if d == (u, v)), sum(1 for d in cls if d == (v, u))))
    reference = None
    for f, b in raw:
        if f != b:
            reference = (u, v) if f > b else (v, u)
            break
    if reference == (v, u):
        raw = [(b, f) for f, b in raw]
    return tuple(raw), reference


def _fmt_counters(counters: Iterable[tuple[int, int]]) -> str:
    return ";".join(f"({f},{b})" for f, b in counters) or "-"


class TriconEngine:
    """Memoized subtree keys of one triconnected component tree.

    ``labels`` maps vertices to label tuples; unlisted vertices get the plain
    label of color 0.
    """

    def __init__(self, tree: TriconTree, labels: Mapping[int, tuple] | None = None, name: str | int = 0):
        self.tree = tree
        self.labels = dict(labels or {})
        self.name = name
        self._pairs: dict[tuple[int, int | None], PairRep] = {}
        self._comps: dict[tuple[int, int | None], CompRep] = {}

    def label(self, v: int) -> tuple:
        return self.labels.get(v, (1, 0))

    # -- subtree keys --------------------------------------------------------

    def code_key(self, c: TriconComponent, code: Code, parent: int | None, skip: Iterable[int] = ()) -> tuple:
        """Entry keys of ``code``; vertices in ``skip`` are labeled elsewhere."""
        seen = set(skip)
        num = code.numbers
        label = self.label
        out = []
        for e in code.entries:
            x, y = e.tail, e.head
            lx = ly = ()
            if x not in seen:
                seen.add(x)
                lx = label(x)
            if y not in seen:
                seen.add(y)
                ly = label(y)
            if e.pair_id is None:
                out.append((num[x], num[y], lx, ly, 0, (), 0))
            elif e.pair_id == parent:
                out.append((num[x], num[y], lx, ly, 1, (), 0))
            else:
                child = self.pair_rep(e.pair_id, c.id)
                agree = 0 if child.reference is None or child.reference == (x, y) else 1
                out.append((num[x], num[y], lx, ly, 1, child.key, agree))
        return tuple(out)

    def comp_rep(self, cid: int, parent: int) -> CompRep:
        memo = self._comps.get((cid, parent))
        if memo is not None:
            return memo
        c = self.tree.components[cid]
        endpoints = self.tree.pairs[parent].endpoints
        if c.kind is ComponentKind.BOND:
            code = component_code(c, endpoints)
            rep = CompRep((int(c.kind),), None, 2, {endpoints: ((), code), endpoints[::-1]: ((), code)})
        else:
            best: dict[Dart, tuple[tuple, Code]] = {}
            for code in candidate_codes(c, endpoints):
                k = self.code_key(c, code, parent, endpoints)
                if code.start not in best or k < best[code.start][0]:
                    best[code.start] = (k, code)
            low = min(k for k, _ in best.values())
            dirs = [d for d, (k, _) in best.items() if k == low]
            size = c.size + sum(self.pair_rep(pid, cid).size for _, _, pid in c.virtual_edges if pid != parent)
            rep = CompRep((int(c.kind), low), dirs[0] if len(dirs) == 1 else None, size, best)
        self._comps[(cid, parent)] = rep
        return rep

    def pair_rep(self, pid: int, parent: int | None) -> PairRep:
        memo = self._pairs.get((pid, parent))
        if memo is not None:
            return memo
        endpoints = self.tree.pairs[pid].endpoints
        kids = [c for c in self.tree.pair_adj[pid] if c != parent]
        reps = {c: self.comp_rep(c, pid) for c in kids}
        ordered = sorted(kids, key=lambda c: (reps[c].key, c))
        classes = tuple(tuple(g) for _, g in groupby(ordered, key=lambda c: reps[c].key))
        counters, reference = orientation_counters(
            endpoints, [[reps[c].orientation for c in cls] for cls in classes]
        )
        size = sum(r.size for r in reps.values())
        key = (size, len(kids), tuple(reps[c].key for c in ordered), counters)
        rep = PairRep(key, reference, counters, size, classes)
        self._pairs[(pid, parent)] = rep
        return rep

    # -- roots ---------------------------------------------------------------

    def all_roots(self) -> list[Root]:
        if self.tree.pairs:
            return [PairRoot(p.id) for p in self.tree.pairs]
        (c,) = self.tree.components
        flips = (False, True) if c.kind is ComponentKind.TRICONNECTED else (False,)
        return [DartRoot((x, y), f) for x in c.vertices for y in c.adjacency[x] for f in flips]

    def root_direction(self, pid: int) -> Dart:
        """Direction in which a root pair is emitted."""
        rep = self.pair_rep(pid, None)
        if rep.reference is not None:
            return rep.reference
        u, v = self.tree.pairs[pid].endpoints
        if (self.label(v), self.label(u)) < (self.label(u), self.label(v)):
            return (v, u)
        return (u, v)

    def root_key(self, root: Root) -> tuple:
        if isinstance(root, PairRoot):
            rep = self.pair_rep(root.pair_id, None)
            x, y = self.root_direction(root.pair_id)
            if trace_log.isEnabledFor(logging.DEBUG):
                ref = "none" if rep.reference is None else f"{rep.reference[0]}>{rep.reference[1]}"
                trace_log.debug(
                    "block=%s root=%d-%d counters=%s ref=%s",
                    self.name, *self.tree.pairs[root.pair_id].endpoints, _fmt_counters(rep.counters), ref,
                )
            return (rep.key, (self.label(x), self.label(y)))
        (c,) = self.tree.components
        code = component_code(c, root.dart, root.flip)
        if trace_log.isEnabledFor(logging.DEBUG):
            trace_log.debug("block=%s root=%d>%d flip=%d", self.name, *root.dart, int(root.flip))
        return (int(c.kind), self.code_key(c, code, None))

    def best_root(self, roots: Sequence[Root] | None = None) -> tuple[tuple, Root]:
        """Smallest root key over ``roots`` (all roots by default); ties go to the first."""
        roots = self.all_roots() if roots is None else roots
        if roots and isinstance(roots[0], DartRoot):
            return self._best_dart_root(roots)
        best_key, best = None, None
        for r in roots:
            k = self.root_key(r)
            if best_key is None or k < best_key:
                best_key, best = k, r
        return best_key, best


    def _best_dart_root(self, roots: Sequence[DartRoot]) -> tuple[tuple, Root]:
        """Same result as scanning :meth:`root_key`, abandoning a walk once it exceeds the best."""
        (c,) = self.tree.components
        label = self.label
        best: tuple | None = None
        best_root = None
        tracing = trace_log.isEnabledFor(logging.DEBUG)
        for r in roots:
            if tracing:
                trace_log.debug("block=%s root=%d>%d flip=%d", self.name, *r.dart, int(r.flip))
            numbers: dict[int, int] = {}
            out = []
            tied = best is not None
            for x, y in walk(c, r.dart, r.flip):
                lx = ly = ()
                if x not in numbers:
                    numbers[x] = len(numbers)
                    lx = label(x)
                if y not in numbers:
                    numbers[y] = len(numbers)
                    ly = label(y)
                entry = (numbers[x], numbers[y], lx, ly, 0, (), 0)
                if tied:
                    other = best[len(out)]
                    if entry > other:
                        break
                    if entry < other:
                        tied = False
                out.append(entry)
            else:
                if not tied:
                    best, best_root = tuple(out), r
        return (int(c.kind), best), best_root


# ---------------------------------------------------------------------------
# Sizes
# ---------------------------------------------------------------------------


def tricon_size(tree: TriconTree) -> int:
    """Sum of component sizes; pair vertices count once per component."""
    return tree.size


# ---------------------------------------------------------------------------
# Root limiting
# ---------------------------------------------------------------------------


def _pair_toward(tree: TriconTree, cid: int, vertex: int) -> int:
    """The pair adjacent to component ``cid`` on the way to the nodes containing ``vertex``."""
    adj = tree.node_adjacency()
    first: dict[tuple[str, int], int] = {}
    queue = deque()
    for pid in tree.comp_adj[cid]:
        first[("P", pid)] = pid
        queue.append(("P", pid))
    seen = {("C", cid)} | set(first)
    while queue:
        node = queue.popleft()
        kind, idx = node
        verts = tree.pairs[idx].endpoints if kind == "P" else tree.components[idx].vertices
        if vertex in verts:
            return first[node]
        for nxt in adj[node]:
            if nxt not in seen:
                seen.add(nxt)
                first[nxt] = first[node]
                queue.append(nxt)
    raise KeyError(f"vertex {vertex} is not in the tree")


def _first_virtual(c: TriconComponent, code: Code) -> int:
    for e in code.entries:
        if e.pair_id is not None:
            return e.pair_id
    raise ValueError(f"component {c.id} has no virtual edge")


def _is_platonic(c: TriconComponent) -> bool:
    degrees = {len(ws) for ws in c.adjacency.values()}
    face_lengths = {len(f) for f in trace_faces(c.rotation)}
    return len(degrees) == 1 and len(face_lengths) == 1


def _dart_roots(c: TriconComponent) -> list[tuple[Dart, bool]]:
    flips = (False, True) if c.kind is ComponentKind.TRICONNECTED else (False,)
    return [((x, y), f) for x in c.vertices for y in c.adjacency[x] for f in flips]


def limit_roots(
    tree: TriconTree,
    parent: int,
    child_arts: Mapping[int, int],
    colors: Mapping[int, int] | None = None,
) -> list[Root]:
    """Root candidates for a block hanging from articulation point ``parent``.

    ``child_arts`` maps the other articulation points of the block to the
    sizes of their subtrees; ``colors`` holds user vertex colors.
    """
    colors = colors or {}
    if not tree.pairs:
        (c,) = tree.components
        return [DartRoot(d, f) for d, f in _dart_roots(c)]
    kind, idx = tree.center()
    if kind == "P":
        return [PairRoot(idx)]
    c = tree.components[idx]
    if parent not in c.vertices:
        return [PairRoot(_pair_toward(tree, idx, parent))]
    if c.kind is ComponentKind.CYCLE:
        found = []
        for nb in c.adjacency[parent]:
            prev, cur = parent, nb
            while c.pair_of(prev, cur) is None:
                a, b = c.adjacency[cur]
                prev, cur = cur, (b if a == prev else a)
            found.append(c.pair_of(prev, cur))
        return [PairRoot(p) for p in sorted(set(found))]
    every = [PairRoot(p) for p in sorted({_first_virtual(c, component_code(c, d, f)) for d, f in _dart_roots(c)})]
    if _is_platonic(c) or len(child_arts) <= 1:
        return every
    by_size: dict[int, list[int]] = defaultdict(list)
    for art, size in child_arts.items():
        by_size[size].append(art)
    classes = sorted(by_size.items(), key=lambda kv: (len(kv[1]), kv[0]))
    first_class = sorted(classes[0][1])
    outside = [x for x in first_class if x not in c.vertices]
    if outside:
        return [PairRoot(p) for p in sorted({_pair_toward(tree, idx, x) for x in outside})]
    role = {parent: (0, colors.get(parent, 0))}
    for j, (_, members) in enumerate(classes, start=1):
        for x in members:
            role[x] = (j, colors.get(x, 0))
    best_key, best_pairs = None, set()
    for d, f in _dart_roots(c):
        code = component_code(c, d, f)
        key = _colored_code_key(code, role, colors)
        if best_key is None or key < best_key:
            best_key, best_pairs = key, {_first_virtual(c, code)}
        elif key == best_key:
            best_pairs.add(_first_virtual(c, code))
    return [PairRoot(p) for p in sorted(best_pairs)]


def _colored_code_key(code: Code, role: Mapping[int, tuple], colors: Mapping[int, int]) -> tuple:
    seen = set()
    out = []
    num = code.numbers
    for e in code.entries:
        cx = cy = ()
        if e.tail not in seen:
            seen.add(e.tail)
            cx = role.get(e.tail, (-1, colors.get(e.tail, 0)))
        if e.head not in seen:
            seen.add(e.head)
            cy = role.get(e.head, (-1, colors.get(e.head, 0)))
        out.append((num[e.tail], num[e.head], cx, cy))
    return tuple(out)


# ---------------------------------------------------------------------------
# Biconnected layer
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class BlockRep:
    key: tuple
    size: int
    engine: TriconEngine | None
    root: Root | None


class BiconEngine:
    """Memoized keys of articulation-point and block subtrees of a connected graph.

    ``root_policy`` is ``"exhaustive"`` (every root of every block) or
    ``"limited"`` (the root-limiting case analysis for non-root blocks).
    """

    def __init__(self, bt: BiconTree, root_policy: str = "exhaustive"):
        if root_policy not in ("exhaustive", "limited"):
            raise ValueError(f"unknown root policy {root_policy!r}")
        self.bt = bt
        self.policy = root_policy
        self.arts = frozenset(bt.articulation_points)
        self.membership: dict[int, list[int]] = defaultdict(list)
        for b in bt.blocks:
            for v in b.vertices:
                self.membership[v].append(b.id)
        self._arts: dict[tuple[int, int | None], tuple] = {}
        self._blocks: dict[tuple[int, int | None], BlockRep] = {}

    def color(self, v: int) -> int:
        return self.bt.graph.color(v)

    def art_key(self, a: int, parent: int | None) -> tuple:
        """Key of the subtree at vertex ``a`` below block ``parent``; first field is its size."""
        memo = self._arts.get((a, parent))
        if memo is not None:
            return memo
        kids = [b for b in self.membership[a] if b != parent]
        keys = sorted(self.block_rep(b, a).key for b in kids)
        size = 1 + sum(k[0] for k in keys)
        key = (size, len(kids), self.color(a), tuple(keys))
        self._arts[(a, parent)] = key
        return key

    def block_labels(self, bid: int, parent: int | None) -> dict[int, tuple]:
        labels = {}
        for v in self.bt.blocks[bid].vertices:
            if v == parent:
                labels[v] = PARENT_LABEL
            elif v in self.arts:
                labels[v] = art_label(self.art_key(v, bid))
            else:
                labels[v] = plain_label(self.color(v))
        return labels

    def block_rep(self, bid: int, parent: int | None) -> BlockRep:
        memo = self._blocks.get((bid, parent))
        if memo is not None:
            return memo
        block = self.bt.blocks[bid]
        labels = self.block_labels(bid, parent)
        hanging = sum(self.art_key(v, bid)[0] for v in block.vertices if v != parent and v in self.arts)
        if block.tricon is None:
            if parent is None:
                payload = tuple(sorted(labels.values()))
            else:
                (other,) = [v for v in block.vertices if v != parent]
                payload = (labels[other],)
            size = 2 + hanging
            rep = BlockRep((size, 0, payload), size, None, None)
        else:
            engine = TriconEngine(block.tricon, labels, name=bid)
            roots = None
            if self.policy == "limited" and parent is not None:
                child_arts = {
                    v: self.art_key(v, bid)[0] for v in block.vertices if v != parent and v in self.arts
                }
                colors = {v: self.color(v) for v in block.vertices}
                roots = limit_roots(block.tricon, parent, child_arts, colors)
            root_key, root = engine.best_root(roots)
            size = block.tricon.size + hanging
            tag = 2 if block.tricon.pairs else 1
            rep = BlockRep((size, tag, root_key), size, engine, root)
        self._blocks[(bid, parent)] = rep
        return rep

    def top(self) -> tuple[tuple, str, int]:
        """Smallest key over the graph's roots: ``("A", vertex)`` or ``("B", block)``."""
        if not self.arts:
            if not self.bt.blocks:
                return ((1, 0, self.color(0), ()), "V", 0)
            return (self.block_rep(0, None).key, "B", 0)
        best = min((self.art_key(a, None), a) for a in sorted(self.arts))
        return (best[0], "A", best[1])


# ---------------------------------------------------------------------------
# Comparison entry points
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RootedTricon:
    """A triconnected component tree rooted at pair ``root`` with optional vertex labels."""

    tree: TriconTree
    root: int
    labels: Mapping[int, tuple] | None = None

    def engine(self) -> TriconEngine:
        cached = self.__dict__.get("_engine")
        if cached is None:
            cached = TriconEngine(self.tree, self.labels)
            object.__setattr__(self, "_engine", cached)
        return cached


def compare_at_pair(s: RootedTricon, t: RootedTricon) -> OrderResult:
    rs = s.engine().pair_rep(s.root, None)
    rt = t.engine().pair_rep(t.root, None)
    return OrderResult(
        Ordering.of(rs.key, rt.key),
        OrientationOutcome(rs.reference, rs.counters),
        OrientationOutcome(rt.reference, rt.counters),
    )


def compare_at_component(
    s: tuple[TriconEngine, int, int], t: tuple[TriconEngine, int, int]
) -> OrderResult:
    """Compare subtrees given as (engine, component id, parent pair id)."""
    (es, cs, ps), (et, ct, pt) = s, t
    rs, rt = es.comp_rep(cs, ps), et.comp_rep(ct, pt)
    return OrderResult(
        Ordering.of(rs.key, rt.key), OrientationOutcome(rs.orientation), OrientationOutcome(rt.orientation)
    )


def compare_bicon(s: tuple[BiconEngine, int], t: tuple[BiconEngine, int]) -> OrderResult:
    """Compare graphs rooted at vertices given as (engine, vertex)."""
    (es, a), (et, b) = s, t
    return OrderResult(Ordering.of(es.art_key(a, None), et.art_key(b, None)))


@dataclass(frozen=True)
class ReferenceCopy:
    kind: str  # "P" for the root pair, "C" for a component
    node: int
    position: int | None


def reference_copy(engine: TriconEngine, root: Root, a: int) -> ReferenceCopy:
    """Where the subtree of articulation point ``a`` is attached under ``root``.

    That is the root pair when ``a`` lies on it, otherwise the component
    closest to the root that contains ``a``, together with the index of the
    first entry mentioning ``a`` in the code used for that component.
    """
    tree = engine.tree
    if isinstance(root, DartRoot):
        (c,) = tree.components
        code = component_code(c, root.dart, root.flip)
        return ReferenceCopy("C", c.id, _first_position(code, a))
    if a in tree.pairs[root.pair_id].endpoints:
        return ReferenceCopy("P", root.pair_id, None)
    start = ("P", root.pair_id)
    direction = {start: engine.root_direction(root.pair_id)}
    parent_of = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        kind, idx = node
        if kind == "C":
            ppid = parent_of[node][1]
            rep = engine.comp_rep(idx, ppid)
            code = rep.best[direction[node]][1]
            if a in tree.components[idx].vertices:
                return ReferenceCopy("C", idx, _first_position(code, a))
            for e in code.entries:
                if e.pair_id is not None and e.pair_id != ppid:
                    child = ("P", e.pair_id)
                    direction[child] = (e.tail, e.head)
                    parent_of[child] = node
                    queue.append(child)
        else:
            for cid in tree.pair_adj[idx]:
                child = ("C", cid)
                if parent_of[node] is not None and parent_of[node][1] == cid:
                    continue
                direction[child] = direction[node]
                parent_of[child] = node
                queue.append(child)
    raise KeyError(f"vertex {a} does not occur in the tree")


def _first_position(code: Code, a: int) -> int:
    for i, e in enumerate(code.entries):
        if a in (e.tail, e.head):
            return i
    raise KeyError(a)

"""Finite-window primitives for lazily described, locally finite (multi)graphs.

A graph here is an oracle: you can ask whether a vertex exists and what its
neighbours are (with multiplicities), and that is all.  Everything downstream
(component counting, end counting, Eulerian checks) works through finite
windows -- balls around a basepoint -- plus certificates that promise the
window was large enough.

Vertices are plain ints.  Edges are named by (u, v, slot) with u <= v, slot
distinguishing parallel copies.  A loop is (v, v, slot) and counts twice for
degree.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

VertexId = int


class EdgeRef(NamedTuple):
    u: VertexId
    v: VertexId
    slot: int = 0


def edge(u: VertexId, v: VertexId, slot: int = 0) -> EdgeRef:
    """Canonical edge reference: endpoints sorted, slot >= 0."""
    if slot < 0:
        raise InvalidEdge("slot must be >= 0, got %r" % (slot,))
    if u > v:
        u, v = v, u
    return EdgeRef(u, v, slot)


EdgeSet = FrozenSet[EdgeRef]


def edge_set(edges: Iterable[EdgeRef]) -> EdgeSet:
    return frozenset(edge(*e) for e in edges)


# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------

class GraphError(Exception):
    pass


class InvalidVertex(GraphError):
    pass


class InvalidEdge(GraphError):
    pass


class NotASimplePath(GraphError):
    pass


class NotAShell(GraphError):
    pass


class KindScheduleMismatch(GraphError):
    pass


class UnsoundCertificateDetected(GraphError):
    """A certificate contradicted something positively observed in the graph."""


class NoExtension(GraphError):
    """No neighbour of the path tip survives into an infinite component."""


class ArityMismatch(GraphError):
    pass


class UnboundVariable(GraphError):
    pass


# ---------------------------------------------------------------------------
# tri-valued answers and fuel
# ---------------------------------------------------------------------------

class TriBool:
    """Yes / No / Unknown(fuel_spent).

    Deliberately not truthy: call sites must say which of the three outcomes
    they mean.  Unknown never contradicts Yes or No, it only reports that the
    search budget ran out first.
    """

    __slots__ = ("kind", "fuel_spent")

    def __init__(self, kind: str, fuel_spent: int = 0):
        if kind not in ("yes", "no", "unknown"):
            raise ValueError(kind)
        self.kind = kind
        self.fuel_spent = fuel_spent

    @classmethod
    def yes(cls) -> "TriBool":
        return cls("yes")

    @classmethod
    def no(cls) -> "TriBool":
        return cls("no")

    @classmethod
    def unknown(cls, fuel_spent: int = 0) -> "TriBool":
        return cls("unknown", fuel_spent)

    @property
    def is_yes(self) -> bool:
        return self.kind == "yes"

    @property
    def is_no(self) -> bool:
        return self.kind == "no"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __bool__(self):
        raise TypeError("TriBool is three-valued; use .is_yes / .is_no / .is_unknown")

    def __eq__(self, other):
        return isinstance(other, TriBool) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        if self.kind == "unknown":
            return "TriBool.unknown(%d)" % self.fuel_spent
        return "TriBool.%s()" % self.kind


@dataclass(frozen=True)
class Unknown:
    """Out-of-fuel marker for operations whose definite answer is a number."""

    fuel_spent: int = 0


@dataclass(frozen=True)
class Fuel:
    """Search budget.  max_radius bounds window sizes, max_steps bounds visits."""

    max_radius: int = 64
    max_steps: int = 400_000

    def __post_init__(self):
        if self.max_radius < 1 or self.max_steps < 1:
            raise ValueError("fuel must be positive")


@dataclass(frozen=True)
class EndsCertificate:
    """Promise: the graph has exactly `ends` ends and removing `witness`
    leaves exactly `ends` infinite components (maximal separation)."""

    ends: int
    witness: EdgeSet = frozenset()

    def __post_init__(self):
        if self.ends < 1:
            raise ValueError("a connected infinite graph has at least one end")
        object.__setattr__(self, "witness", edge_set(self.witness))


# ---------------------------------------------------------------------------
# the oracle interface
# ---------------------------------------------------------------------------

class GraphOracle:
    """Lazily described connected infinite multigraph.

    Subclasses implement `contains` and `_neighbors`; `neighbors` memoizes.
    `_neighbors(v)` returns [(w, multiplicity)] sorted by w; a loop shows up
    as (v, m).

    `outward_growing` is an opt-in structural promise: every vertex has a
    neighbour strictly farther from the basepoint.  It implies that any
    vertex escaping beyond the radius of a finite removed edge set lies in
    an infinite component, which the path machinery uses as a cheap positive
    witness.  Leave it False unless you can prove it.  To actually unlock
    that shortcut the oracle must also answer `base_distance`, since walking
    outward only helps if we can tell how far out we are without a global
    search.
    """

    basepoint: VertexId = 0
    is_multigraph: bool = False
    outward_growing: bool = False

    def __init__(self):
        self._nbr_cache: Dict[VertexId, List[Tuple[VertexId, int]]] = {}

    def contains(self, v: VertexId) -> bool:
        raise NotImplementedError

    def _neighbors(self, v: VertexId) -> List[Tuple[VertexId, int]]:
        raise NotImplementedError

    def neighbors(self, v: VertexId) -> List[Tuple[VertexId, int]]:
        if not self.contains(v):
            raise InvalidVertex(v)
        got = self._nbr_cache.get(v)
        if got is None:
            got = sorted(self._neighbors(v))
            self._nbr_cache[v] = got
        return got

    def base_distance(self, v: VertexId) -> Optional[int]:
        """Distance from the basepoint in closed form, or None if the oracle
        cannot say without searching.  When implemented it must agree with
        BFS distance exactly."""
        return None


def degree(g: GraphOracle, v: VertexId) -> int:
    """Degree with multiplicities; loops count twice."""
    d = 0
    for w, m in g.neighbors(v):
        d += 2 * m if w == v else m
    return d


def edges_at(g: GraphOracle, v: VertexId) -> List[EdgeRef]:
    """All edge references incident to v (each parallel copy separately)."""
    out = []
    for w, m in g.neighbors(v):
        for s in range(m):
            out.append(edge(v, w, s))
    # loops appear once in neighbors but the edge() above already dedups
    return sorted(set(out))


def multiplicity(g: GraphOracle, u: VertexId, v: VertexId) -> int:
    for w, m in g.neighbors(u):
        if w == v:
            return m
    return 0


def check_edge(g: GraphOracle, e: EdgeRef) -> EdgeRef:
    """Validate an edge reference against the oracle; returns canonical form."""
    e = edge(*e)
    if not g.contains(e.u) or not g.contains(e.v):
        raise InvalidEdge("endpoint missing: %r" % (e,))
    if e.slot >= multiplicity(g, e.u, e.v):
        raise InvalidEdge("no such parallel copy: %r" % (e,))
    return e


def check_edge_set(g: GraphOracle, es: Iterable[EdgeRef]) -> EdgeSet:
    return frozenset(check_edge(g, e) for e in es)


# ---------------------------------------------------------------------------
# balls
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ball:
    center: VertexId
    radius: int
    vertices: FrozenSet[VertexId]
    edges: EdgeSet
    distances: Dict[VertexId, int] = field(hash=False, compare=False, default_factory=dict)


def ball(g: GraphOracle, center: VertexId, radius: int) -> Ball:
    """Induced ball: vertices within `radius` of center, all edges among them."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if not g.contains(center):
        raise InvalidVertex(center)
    dist = {center: 0}
    frontier = deque([center])
    while frontier:
        v = frontier.popleft()
        if dist[v] == radius:
            continue
        for w, _m in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                frontier.append(w)
    verts = frozenset(dist)
    es = set()
    for v in verts:
        for w, m in g.neighbors(v):
            if w in verts and w >= v:
                for s in range(m):
                    es.add(edge(v, w, s))
    return Ball(center, radius, verts, frozenset(es), dist)


def distances_from(g: GraphOracle, source: VertexId, max_radius: int,
                   avoid_edges: EdgeSet = frozenset()) -> Dict[VertexId, int]:
    """BFS distances within max_radius, optionally not using avoid_edges."""
    if not g.contains(source):
        raise InvalidVertex(source)
    dist = {source: 0}
    frontier = deque([source])
    while frontier:
        v = frontier.popleft()
        if dist[v] == max_radius:
            continue
        for w, m in g.neighbors(v):
            if w in dist:
                continue
            if avoid_edges:
                # usable iff some parallel copy is not removed
                if sum(1 for s in range(m) if edge(v, w, s) in avoid_edges) == m:
                    continue
            dist[w] = dist[v] + 1
            frontier.append(w)
    return dist


def bounded_distance(g: GraphOracle, a: VertexId, b: VertexId, max_radius: int) -> Optional[int]:
    if a == b:
        return 0
    # two-sided BFS keeps window sizes sane on fast-growing graphs
    da = {a: 0}
    db = {b: 0}
    qa, qb = deque([a]), deque([b])
    best = None
    for _round in range(2 * max_radius):
        side_d, side_q, other_d = (da, qa, db) if len(da) <= len(db) else (db, qb, da)
        if not side_q:
            break
        depth = side_d[side_q[0]]
        if best is not None and best <= 2 * depth:
            break
        while side_q and side_d[side_q[0]] == depth:
            v = side_q.popleft()
            for w, _m in g.neighbors(v):
                if w in other_d:
                    cand = side_d[v] + 1 + other_d[w]
                    if best is None or cand < best:
                        best = cand
                if w not in side_d:
                    side_d[w] = side_d[v] + 1
                    if side_d[w] < max_radius:
                        side_q.append(w)
        if best is not None and best <= 2 * (depth + 1):
            break
    if best is not None and best <= 2 * max_radius:
        return best
    return None


# ---------------------------------------------------------------------------
# finite component decomposition
# ---------------------------------------------------------------------------

def finite_components(vertices: Iterable[VertexId], edges: Iterable[EdgeRef],
                      removed: Iterable[EdgeRef] = ()) -> List[FrozenSet[VertexId]]:
    """Connected components of the finite graph (vertices, edges - removed).

    Every input vertex appears in the partition; vertices whose edges were all
    removed come out as singletons.  Edges with an endpoint outside `vertices`
    are ignored.  Components are sorted by their least vertex.
    """
    verts = set(vertices)
    gone = edge_set(removed)
    adj: Dict[VertexId, set] = {v: set() for v in verts}
    for e in edges:
        e = edge(*e)
        if e in gone or e.u not in verts or e.v not in verts:
            continue
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    seen = set()
    comps = []
    for v in sorted(verts):
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        q = deque([v])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    q.append(y)
        comps.append(frozenset(comp))
    return comps


def edge_induced_vertices(edges: Iterable[EdgeRef]) -> FrozenSet[VertexId]:
    """Vertex set of an edge-induced subgraph: endpoints only."""
    vs = set()
    for e in edges:
        vs.add(e.u)
        vs.add(e.v)
    return frozenset(vs)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

def to_dot(b: Ball, removed: Iterable[EdgeRef] = (), name: str = "ball") -> str:
    """Graphviz rendering of a ball; removed edges drawn dashed.

    Parallel edges are drawn individually so multigraph structure is visible.
    """
    gone = edge_set(removed)
    lines = ["graph %s {" % name]
    lines.append('  label="center=%d radius=%d";' % (b.center, b.radius))
    for v in sorted(b.vertices):
        shape = "doublecircle" if v == b.center else "circle"
        lines.append('  "%d" [shape=%s, label="%d"];' % (v, shape, v))
    for e in sorted(b.edges):
        style = ' [style=dashed, color=red]' if e in gone else ""
        lines.append('  "%d" -- "%d"%s;' % (e.u, e.v, style))
    lines.append("}")
    return "\n".join(lines)

"""Extending finite simple paths to infinite ones.

A finite simple path extends to an infinite simple path exactly when, after
deleting every edge touching the path's vertices, some neighbour of the final
vertex sits in an infinite component of what is left.  That turns path
extension into a component question, which the separation machinery answers
from an ends certificate.  Two routes compute the per-neighbour verdict:

* the windowed boundary partition: always available and exact, but it builds
  balls around the basepoint -- fine on thin graphs, hopeless on
  exponentially growing ones;

* an outward escape search, used when the oracle is `outward_growing` and
  knows `base_distance`: starting from the candidate neighbour, repeatedly
  expand the reachable vertex farthest from the basepoint.  Every removed
  edge touches a path vertex, so its endpoints sit within D+1 of the
  basepoint, D being the farthest path vertex.  The moment the search pops a
  vertex at distance D+2 or more, outwardness yields a ray of strictly
  increasing distances whose edges all dodge the removal -- component
  infinite.  If instead the search drains, the component was enumerated in
  full -- finite.  Exact either way; only the step budget can force Unknown.

Greedy construction stacks one-step extension decisions: always append the
least neighbour whose extension still stretches to infinity.  Since the
decision is exact, nothing is ever retracted.

The tree reduction runs the opposite direction: on trees, a path-extension
oracle decides separation.  Testing the two-vertex paths [u, v] right at the
removal is not enough -- the extension witnessing [u, v] may wander through
other removed edges and die there.  Instead we first walk u's surviving
component out past every endpoint of the removed set; branches hanging off
that horizon are untouched by the removal, so on them the path oracle's
answer and the component's fate coincide.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

from .graph_core import (
    EdgeSet,
    EndsCertificate,
    Fuel,
    GraphError,
    GraphOracle,
    InvalidVertex,
    NoExtension,
    NotASimplePath,
    TriBool,
    Unknown,
    VertexId,
    check_edge_set,
    distances_from,
    edge,
    edge_induced_vertices,
    edges_at,
)
from .separation import boundary_partition

__all__ = [
    "SimplePath",
    "check_simple_path",
    "path_removed_edges",
    "decide_extendable",
    "greedy_infinite_path",
    "tree_sep_from_path",
]


@dataclass(frozen=True)
class SimplePath:
    """A finite simple path, stored as its vertex sequence.

    Structural invariants (non-empty, no repeated vertex) are enforced here;
    adjacency of consecutive vertices needs the oracle and is checked by
    `check_simple_path`.
    """

    vertices: Tuple[VertexId, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise NotASimplePath("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise NotASimplePath("repeated vertex: %r" % (self.vertices,))

    @property
    def tip(self) -> VertexId:
        return self.vertices[-1]

    @property
    def edge_count(self) -> int:
        return len(self.vertices) - 1

    def extended(self, v: VertexId) -> "SimplePath":
        return SimplePath(self.vertices + (v,))


def check_simple_path(g: GraphOracle, p) -> SimplePath:
    """Coerce a SimplePath or vertex sequence and verify it against g."""
    if not isinstance(p, SimplePath):
        p = SimplePath(tuple(p))
    for v in p.vertices:
        if not g.contains(v):
            raise InvalidVertex(v)
    for a, b in zip(p.vertices, p.vertices[1:]):
        if not any(w == b for w, _ in g.neighbors(a)):
            raise NotASimplePath("%r and %r are not adjacent" % (a, b))
    return p


def path_removed_edges(g: GraphOracle, p: SimplePath) -> EdgeSet:
    """Every edge incident to a path vertex: deleting a vertex set means
    deleting exactly these."""
    out = set()
    for v in p.vertices:
        out.update(edges_at(g, v))
    return frozenset(out)


def _escapes_outward(g: GraphOracle, removed: EdgeSet, start: VertexId,
                     horizon: int, fuel: Fuel) -> Optional[bool]:
    """Is start's component of G minus removed infinite?  Exact on
    outward-growing graded oracles; None when the step budget runs dry."""
    d0 = g.base_distance(start)
    if d0 is None:
        return None
    seen = {start}
    heap = [(-d0, start)]
    steps = 0
    while heap:
        steps += 1
        if steps > fuel.max_steps:
            return None
        negd, v = heapq.heappop(heap)
        if -negd >= horizon:
            return True
        for w, m in g.neighbors(v):
            if w in seen:
                continue
            if all(edge(v, w, s) in removed for s in range(m)):
                continue
            dw = g.base_distance(w)
            if dw is None:
                return None
            seen.add(w)
            heapq.heappush(heap, (-dw, w))
    return False


def decide_extendable(g: GraphOracle, p, cert: EndsCertificate,
                      fuel: Fuel = Fuel()) -> TriBool:
    """Does the finite simple path p extend to an infinite simple path?

    Yes iff some neighbour of the final vertex survives in an infinite
    component once all edges at p's vertices are gone.
    """
    p = check_simple_path(g, p)
    removed = path_removed_edges(g, p)
    on_path = set(p.vertices)
    candidates = sorted(w for w, _ in g.neighbors(p.tip) if w not in on_path)
    if not candidates:
        return TriBool.no()

    if g.outward_growing:
        dists = [g.base_distance(v) for v in p.vertices]
        if all(d is not None for d in dists):
            horizon = max(dists) + 2
            starved = False
            for w in candidates:
                verdict = _escapes_outward(g, removed, w, horizon, fuel)
                if verdict is True:
                    return TriBool.yes()
                if verdict is None:
                    starved = True
            if starved:
                return TriBool.unknown(fuel.max_steps)
            return TriBool.no()

    bp = boundary_partition(g, removed, cert, fuel)
    if isinstance(bp, Unknown):
        return TriBool.unknown(bp.fuel_spent)
    surviving = set().union(*bp.infinite_groups) if bp.infinite_groups else set()
    if any(w in surviving for w in candidates):
        return TriBool.yes()
    return TriBool.no()


def greedy_infinite_path(g: GraphOracle, start: VertexId,
                         cert: EndsCertificate, length: int,
                         fuel: Fuel = Fuel()) -> Union[SimplePath, Unknown]:
    """Grow a simple path of `length` edges from `start`, never retracting.

    Each step appends the least neighbour whose one-step extension still
    reaches infinity.  Exactness of decide_extendable is what makes zero
    backtracking safe.  Raises NoExtension only on an unsound certificate:
    with finitely many ends a genuinely extendable path always has an
    extendable extension.
    """
    if not g.contains(start):
        raise InvalidVertex(start)
    if length < 0:
        raise GraphError("length must be >= 0")
    path = SimplePath((start,))
    while path.edge_count < length:
        grew = False
        for w, _ in g.neighbors(path.tip):
            if w in path.vertices:
                continue
            t = decide_extendable(g, path.extended(w), cert, fuel)
            if t.is_unknown:
                return Unknown(t.fuel_spent)
            if t.is_yes:
                path = path.extended(w)
                grew = True
                break
        if not grew:
            raise NoExtension(
                "no extendable neighbour at %r after %d edges; "
                "the ends certificate must be unsound" % (path.tip, path.edge_count))
    return path


def _tree_walk(g: GraphOracle, a: VertexId, b: VertexId,
               fuel: Fuel) -> List[VertexId]:
    """The unique a-to-b path in a tree, by parent-tracking BFS."""
    if a == b:
        return [a]
    parent: Dict[VertexId, VertexId] = {a: a}
    layer = [a]
    for _ in range(fuel.max_radius):
        nxt = []
        for v in layer:
            for w, _ in g.neighbors(v):
                if w in parent:
                    continue
                parent[w] = v
                if w == b:
                    out = [b]
                    while out[-1] != a:
                        out.append(parent[out[-1]])
                    out.reverse()
                    return out
                nxt.append(w)
        layer = nxt
        if not layer or len(parent) > fuel.max_steps:
            break
    raise GraphError("no path from %r to %r within fuel; not a connected "
                     "tree or budget too small" % (a, b))


def _tree_path_avoids(g: GraphOracle, a: VertexId, b: VertexId, e: EdgeSet,
                      fuel: Fuel) -> bool:
    """Same component of tree-minus-e?  The unique path must dodge e."""
    walk = _tree_walk(g, a, b, fuel)
    for x, y in zip(walk, walk[1:]):
        m = next(mm for w, mm in g.neighbors(x) if w == y)
        if all(edge(x, y, s) in e for s in range(m)):
            return False
    return True


def tree_sep_from_path(g: GraphOracle, e,
                       path_oracle: Callable[[SimplePath], bool],
                       fuel: Fuel = Fuel()) -> bool:
    """On a tree, decide whether e separates using only a path oracle.

    For each component of the tree minus e (identified by the endpoints it
    holds), walk it out to one step past every endpoint of e; a branch
    w -> x crossing that horizon is untouched by e, so [w, x] extends to an
    infinite simple path iff the branch -- hence the component -- is
    infinite.  Separating means at least two components come out infinite.
    """
    e = check_edge_set(g, e)
    if not e:
        return False
    endpoints = sorted(edge_induced_vertices(e))

    # group endpoints into components of tree-minus-e
    comp_reps: List[VertexId] = []
    comp_members: List[List[VertexId]] = []
    for v in endpoints:
        for i, rep in enumerate(comp_reps):
            if _tree_path_avoids(g, rep, v, e, fuel):
                comp_members[i].append(v)
                break
        else:
            comp_reps.append(v)
            comp_members.append([v])

    infinite = 0
    for rep in comp_reps:
        # horizon: one step past the farthest endpoint of e, as seen from rep
        # (walks stop the moment the target is found, so no full balls here)
        h = max(len(_tree_walk(g, rep, y, fuel)) - 1 for y in endpoints)
        survived = distances_from(g, rep, h + 1, avoid_edges=e)
        frontier = [x for x, d in survived.items() if d == h + 1]
        for x in frontier:
            w = next(w for w, _ in g.neighbors(x) if survived.get(w) == h)
            if path_oracle(SimplePath((w, x))):
                infinite += 1
                break
        if infinite >= 2:
            return True
    return False

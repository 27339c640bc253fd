"""Component counting after finite edge removal, with certificates.

The questions all concern G minus a finite edge set E: how many infinite
components remain, which endpoints of E belong to them, is E separating at
all, and -- running the machinery backwards -- how many ends does G have.

Subgraphs are edge-induced throughout: removing every edge at a vertex
removes the vertex.  The deciders work on finite windows (balls around the
basepoint) and trade fuel for definiteness: a definite answer is proved by
the window contents plus the supplied certificate, otherwise you get an
explicit Unknown.  Certificates that contradict something positively
observed raise UnsoundCertificateDetected; detection is best effort.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .graph_core import (
    Ball,
    EdgeRef,
    EdgeSet,
    EndsCertificate,
    Fuel,
    GraphError,
    GraphOracle,
    NotAShell,
    TriBool,
    Unknown,
    UnsoundCertificateDetected,
    VertexId,
    ball,
    check_edge_set,
    distances_from,
    edge,
    edge_induced_vertices,
    edge_set,
    edges_at,
    finite_components,
)


# ---------------------------------------------------------------------------
# growing edge neighbourhoods
# ---------------------------------------------------------------------------

def boundary_vertices(g: GraphOracle, e: EdgeSet) -> List[VertexId]:
    """Endpoints of e that keep at least one surviving edge."""
    out = []
    for v in sorted(edge_induced_vertices(e)):
        if any(x not in e for x in edges_at(g, v)):
            out.append(v)
    return out


def reach_edges(g: GraphOracle, removed: EdgeSet, v: VertexId, n: int) -> EdgeSet:
    """Surviving edges within n steps of v in G minus `removed`.

    An edge qualifies when one endpoint is at distance <= n-1 from v in the
    punctured graph; n = 0 gives the empty set.  As n grows this exhausts the
    component of v, and it stops growing exactly when that component is
    finite.
    """
    if n <= 0:
        return frozenset()
    dist = distances_from(g, v, n - 1, avoid_edges=removed)
    out = set()
    for x in dist:
        for er in edges_at(g, x):
            if er not in removed:
                out.add(er)
    return frozenset(out)


def _merge_by_overlap(sets: Dict[VertexId, EdgeSet]) -> List[FrozenSet[VertexId]]:
    """Group keys whose edge sets overlap (transitively)."""
    keys = sorted(sets)
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    # invert: edge -> first key, union on collision
    owner: Dict[EdgeRef, VertexId] = {}
    for k in keys:
        for er in sets[k]:
            if er in owner:
                parent[find(owner[er])] = find(k)
            else:
                owner[er] = k
    groups: Dict[VertexId, set] = {}
    for k in keys:
        groups.setdefault(find(k), set()).add(k)
    return sorted((frozenset(v) for v in groups.values()), key=min)


def comp_approx(g: GraphOracle, e: EdgeSet, n: int) -> int:
    """Upper-approximation stage n of the infinite-component count.

    Carrier vertices are boundary vertices whose reach still grew between n
    and n+1; carriers are grouped by overlapping reach sets.  The stage value
    is always >= the true number of infinite components, and for n past the
    point where every finite component has been exhausted it equals it.
    """
    e = check_edge_set(g, e)
    if not e:
        return 0
    carriers: Dict[VertexId, EdgeSet] = {}
    for v in boundary_vertices(g, e):
        now = reach_edges(g, e, v, n)
        nxt = reach_edges(g, e, v, n + 1)
        if now != nxt:
            carriers[v] = now
    return len(_merge_by_overlap(carriers))


def semidecide_not_separating(g: GraphOracle, e: EdgeSet, fuel: Fuel = Fuel()) -> TriBool:
    """Yes when some stage shows at most one infinite component survives.

    This is one-sided: a separating set can never produce Yes, and No is
    never returned (the complement is not semi-decidable in general).
    """
    e = check_edge_set(g, e)
    for n in range(fuel.max_radius + 1):
        if comp_approx(g, e, n) <= 1:
            return TriBool.yes()
    return TriBool.unknown(fuel.max_radius)


# ---------------------------------------------------------------------------
# the stable partition machine
# ---------------------------------------------------------------------------

def _stable_partition(g: GraphOracle, wp: EdgeSet, k: int, fuel: Fuel):
    """Partition the boundary vertices of `wp` by infinite component.

    Requires that G minus `wp` has exactly k infinite components (true for
    any superset of a maximal-separation witness with k ends).  Finite
    components announce themselves by their reach stabilizing; vertices of a
    common component announce themselves by overlapping reach.  Once the
    still-active vertices fall into exactly k groups, the groups are exactly
    the infinite components' boundary vertices.  Seeing fewer than k groups
    is impossible under a sound certificate.

    Returns (groups, finite_reach) or None when fuel runs out; finite_reach
    maps each finite-side boundary vertex to its component's full edge set.
    """
    bnd = boundary_vertices(g, wp)
    reach_now = {v: reach_edges(g, wp, v, 1) for v in bnd}
    for n in range(1, fuel.max_radius + 1):
        reach_next = {v: reach_edges(g, wp, v, n + 1) for v in bnd}
        active = {v: reach_next[v] for v in bnd if reach_now[v] != reach_next[v]}
        groups = _merge_by_overlap(active)
        if len(groups) < k:
            raise UnsoundCertificateDetected(
                "certificate claims %d infinite components but only %d groups remain"
                % (k, len(groups)))
        if len(groups) == k:
            finite = {v: reach_now[v] for v in bnd if v not in active}
            return groups, finite
        reach_now = reach_next
    return None


def _cover_radius(g: GraphOracle, es: EdgeSet, fuel: Fuel) -> Optional[int]:
    if not es:
        return 1
    dist = distances_from(g, g.basepoint, fuel.max_radius)
    worst = 0
    for v in edge_induced_vertices(es):
        if v not in dist:
            return None
        worst = max(worst, dist[v])
    return max(worst, 1)


@dataclass(frozen=True)
class BoundaryPartition:
    """Endpoints of a removed edge set, split by what survives around them.

    infinite_groups: one vertex group per infinite component of G minus E
    (ordered by least vertex); finite_group: every other endpoint -- those
    stranded in finite components and those that lost all their edges.
    """

    infinite_groups: Tuple[FrozenSet[VertexId], ...]
    finite_group: FrozenSet[VertexId]


class _Window:
    """The certified decision window: a finite edge set U containing E and
    the witness, engineered so G minus U has exactly `ends` infinite
    components, no finite ones, and its boundary groups are known."""

    def __init__(self, u_edges, groups):
        self.edges = u_edges
        self.groups = groups


def _build_window(g: GraphOracle, e: EdgeSet, cert: EndsCertificate,
                  fuel: Fuel) -> Optional[_Window]:
    k = cert.ends
    r0 = _cover_radius(g, e | cert.witness, fuel)
    if r0 is None:
        return None
    b0 = ball(g, g.basepoint, r0)
    got = _stable_partition(g, b0.edges, k, fuel)
    if got is None:
        return None
    groups0, _fin0 = got

    # grow until every same-component pair of window-boundary vertices
    # reconnects inside the annulus; r1 > r0 also guarantees every edge at an
    # endpoint of e lies inside the window
    r1 = None
    for r in range(r0 + 1, fuel.max_radius + 1):
        br = ball(g, g.basepoint, r)
        annulus = br.edges - b0.edges
        comps = finite_components(edge_induced_vertices(annulus), annulus)
        by_vertex = {}
        for i, c in enumerate(comps):
            for v in c:
                by_vertex[v] = i
        ok = True
        for grp in groups0:
            if len(grp) < 2:
                continue  # nothing to reconnect
            ids = {by_vertex.get(v) for v in grp}
            if len(ids) != 1 or None in ids:
                ok = False
                break
        if ok:
            r1 = r
            u1 = br.edges
            break
    if r1 is None:
        return None

    # absorb the finite debris of G minus the window
    u = set(u1)
    for _attempt in range(fuel.max_radius):
        got = _stable_partition(g, frozenset(u), k, fuel)
        if got is None:
            return None
        groups, finite = got
        if not finite:
            return _Window(frozenset(u), groups)
        for fr in finite.values():
            u |= fr
    return None


def decide_comp(g: GraphOracle, e: EdgeSet, cert: EndsCertificate,
                fuel: Fuel = Fuel()):
    """Exact number of infinite components of G minus e, certified by an
    ends certificate.  Returns an int or Unknown.

    With one end the answer is always 1.  Otherwise the witness is grown
    into a window U whose outside is fully understood, and the question
    reduces to connectivity of the finite graph U minus e.
    """
    e = check_edge_set(g, e)
    w = check_edge_set(g, cert.witness)
    if cert.ends >= 2 and not w:
        raise UnsoundCertificateDetected(
            "an empty witness cannot leave %d infinite components" % cert.ends)
    if not e:
        return 1
    if cert.ends == 1:
        return 1
    win = _build_window(g, e, cert, fuel)
    if win is None:
        return Unknown(fuel.max_radius)
    classes = _window_classes(g, win, e)
    return len(classes)


def comp_counter(g: GraphOracle, region, cert: EndsCertificate,
                 fuel: Fuel = Fuel()):
    """Prepare one decision window for a whole region of candidate removals.

    Returns a callable mapping any edge set inside `region` to its exact
    Comp value, or None when the window cannot be built within fuel.  The
    window's validity depends only on covering the region, so amortizing it
    over many candidates (e.g. a subset sweep) changes nothing about
    soundness -- each count equals what decide_comp would say.
    """
    region = check_edge_set(g, region)
    w = check_edge_set(g, cert.witness)
    if cert.ends >= 2 and not w:
        raise UnsoundCertificateDetected(
            "an empty witness cannot leave %d infinite components" % cert.ends)
    if cert.ends == 1:
        return lambda e: 1
    if not region:
        return lambda e: 1
    win = _build_window(g, region, cert, fuel)
    if win is None:
        return None

    def count(e) -> int:
        e = check_edge_set(g, e)
        if not e:
            return 1
        if not e <= region:
            raise GraphError("candidate removal leaves the prepared region")
        return len(_window_classes(g, win, e))

    return count


def _window_classes(g, win, e):
    """Merge window-boundary groups through the finite graph U minus e.

    Returns a list of (set of group indices, set of H-components) classes;
    two groups are one class when some component of U minus e touches both.
    """
    h_verts = edge_induced_vertices(win.edges)
    h_comps = finite_components(h_verts, win.edges, removed=e)
    idx_of = {}
    for gi, grp in enumerate(win.groups):
        for v in grp:
            idx_of[v] = gi
    parent = list(range(len(win.groups)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    comp_groups = []
    for c in h_comps:
        gids = sorted({idx_of[v] for v in c if v in idx_of})
        comp_groups.append(gids)
        for a, b in zip(gids, gids[1:]):
            parent[find(a)] = find(b)
    classes: Dict[int, List[int]] = {}
    for i in range(len(win.groups)):
        classes.setdefault(find(i), []).append(i)
    out = []
    for root in sorted(classes, key=lambda r: min(min(win.groups[i]) for i in classes[r])):
        gids = classes[root]
        members = [c for c, cg in zip(h_comps, comp_groups) if cg and find(cg[0]) == root]
        out.append((gids, members))
    return out


def boundary_partition(g: GraphOracle, e: EdgeSet, cert: EndsCertificate,
                       fuel: Fuel = Fuel()):
    """Sort the endpoints of e by the fate of their component in G minus e.

    Every endpoint is classified; ones stripped of all their edges count as
    stranded in a (trivial) finite piece.  Returns BoundaryPartition or
    Unknown.
    """
    e = check_edge_set(g, e)
    w = check_edge_set(g, cert.witness)
    if cert.ends >= 2 and not w:
        raise UnsoundCertificateDetected(
            "an empty witness cannot leave %d infinite components" % cert.ends)
    if not e:
        return BoundaryPartition((), frozenset())
    win = _build_window(g, e, cert, fuel)
    if win is None:
        return Unknown(fuel.max_radius)
    bnd = edge_induced_vertices(e)

    h_verts = edge_induced_vertices(win.edges)
    h_comps = finite_components(h_verts, win.edges, removed=e)
    comp_of = {v: c for c in h_comps for v in c}

    classes = _window_classes(g, win, e)
    class_of_comp = {}
    for ci, (_gids, comps) in enumerate(classes):
        for c in comps:
            class_of_comp[c] = ci

    infinite: Dict[int, set] = {}
    finite = set()
    for b in bnd:
        ci = class_of_comp.get(comp_of[b])
        if ci is None:
            finite.add(b)
        else:
            infinite.setdefault(ci, set()).add(b)
    groups = sorted((frozenset(v) for v in infinite.values()), key=min)
    return BoundaryPartition(tuple(groups), frozenset(finite))


# ---------------------------------------------------------------------------
# shells, minimal separators, and end counting
# ---------------------------------------------------------------------------

def shell_edges(g: GraphOracle, r: int) -> EdgeSet:
    """Edges among vertices at distance r-1 or r from the basepoint."""
    if r < 1:
        raise ValueError("shells start at radius 1")
    b = ball(g, g.basepoint, r)
    rim = {v for v, d in b.distances.items() if d in (r - 1, r)}
    return frozenset(er for er in b.edges if er.u in rim and er.v in rim)


_SUBSET_CAP = 18  # 2^18 subsets is the enumeration comfort limit


def minimal_separating_subsets(g: GraphOracle, shell: EdgeSet,
                               sep_decider: Callable[[EdgeSet], bool]) -> List[EdgeSet]:
    """All inclusion-minimal subsets of a shell that the decider accepts.

    The shell must be exactly shell_edges(g, r) for some r (NotAShell
    otherwise).  Because separation is upward closed, minimality is checked
    by pruning supersets of already-found answers.  A non-separating shell
    has no separating subsets, so the result is then empty.
    """
    shell = check_edge_set(g, shell)
    if not shell:
        raise NotAShell("empty edge set")
    cover = _cover_radius(g, shell, Fuel())
    if cover is None:
        raise GraphError("shell endpoints out of reach")
    dist = distances_from(g, g.basepoint, cover + 1)
    r = max(max(dist.get(er.u, 0), dist.get(er.v, 0)) for er in shell)
    if shell != shell_edges(g, r):
        raise NotAShell("not the full edge layer at radius %d" % r)
    if len(shell) > _SUBSET_CAP:
        raise GraphError("shell too large to enumerate (%d edges)" % len(shell))
    ordered = sorted(shell)
    found: List[EdgeSet] = []
    for size in range(1, len(ordered) + 1):
        for combo in combinations(ordered, size):
            s = frozenset(combo)
            if any(m <= s for m in found):
                continue
            if sep_decider(s):
                found.append(s)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def ends_from_sepmax(g: GraphOracle, sepmax_oracle: Callable[[EdgeSet], bool],
                     fuel: Fuel = Fuel()):
    """Count the ends of G given an oracle for maximal separation.

    The oracle answers "does removing E leave exactly one infinite component
    per end".  Strategy: the empty set is maximally separating iff there is
    one end; otherwise find a maximally separating shell, take its minimal
    maximally-separating subsets, and use their incidences to tell the
    surviving components' representatives apart.  Two representatives are
    provably distinct once every minimal subset touches a vertex already
    known to lie in one of their components (a minimal set that avoided both
    could be dropped, contradicting maximality); representatives of a common
    component eventually meet by search.  Returns an int or Unknown.
    """
    if sepmax_oracle(frozenset()):
        return 1
    e = None
    for r in range(1, fuel.max_radius + 1):
        cand = shell_edges(g, r)
        if cand and len(cand) <= _SUBSET_CAP and sepmax_oracle(cand):
            e, radius = cand, r
            break
    if e is None:
        return Unknown(fuel.max_radius)

    mins = _minimal_subsets(e, sepmax_oracle)
    dist = ball(g, g.basepoint, radius + 1).distances
    reps = []
    for u in sorted(edge_induced_vertices(e)):
        if dist[u] == radius and any(x not in e for x in edges_at(g, u)):
            if any(any(u in (er.u, er.v) for er in m) for m in mins):
                reps.append(u)
    if not reps:
        return Unknown(fuel.max_radius)

    parent = {u: u for u in reps}

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    known = {u: {u} for u in reps}      # vertices known to sit in u's component
    frontier = {u: {u} for u in reps}
    for _depth in range(1, fuel.max_radius + 1):
        roots = sorted(known)
        owner = {}
        for rt in roots:
            for v in known[rt]:
                owner[v] = rt
        merges = []
        for rt in roots:
            new = set()
            for v in frontier[rt]:
                for w, m in g.neighbors(v):
                    if all(edge(v, w, s) in e for s in range(m)):
                        continue  # every parallel copy removed
                    if w in owner:
                        if owner[w] != rt:
                            merges.append((owner[w], rt))
                        continue
                    owner[w] = rt
                    known[rt].add(w)
                    new.add(w)
            frontier[rt] = new
        for a, b in merges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        new_known, new_frontier = {}, {}
        for rt in roots:
            nr = find(rt)
            new_known.setdefault(nr, set()).update(known[rt])
            new_frontier.setdefault(nr, set()).update(frontier[rt])
        known, frontier = new_known, new_frontier
        roots = sorted(known)

        if len(roots) < 2:
            continue  # everything merged: the oracle lied, keep burning fuel
        all_distinct = True
        for a, b in combinations(roots, 2):
            zone = known[a] | known[b]
            for m in mins:
                if not any(er.u in zone or er.v in zone for er in m):
                    all_distinct = False
                    break
            if not all_distinct:
                break
        if all_distinct:
            return len(roots)
    return Unknown(fuel.max_radius)


def _minimal_subsets(e: EdgeSet, oracle: Callable[[EdgeSet], bool]) -> List[EdgeSet]:
    ordered = sorted(e)
    found: List[EdgeSet] = []
    for size in range(1, len(ordered) + 1):
        for combo in combinations(ordered, size):
            s = frozenset(combo)
            if any(m <= s for m in found):
                continue
            if oracle(s):
                found.append(s)
    return found


def sepmax_witness_from_ends(g: GraphOracle, k: int,
                             sep_decider: Callable[[EdgeSet], bool],
                             fuel: Fuel = Fuel()):
    """Produce a maximal-separation witness from the end count.

    One end: the empty set.  Otherwise scan shells outward until one has
    exactly k minimal separating subsets, pairwise disjoint; that shell
    separates every pair of ends and is the witness.  Returns EdgeSet or
    Unknown.
    """
    if k < 1:
        raise ValueError("ends >= 1")
    if k == 1:
        return frozenset()
    for r in range(1, fuel.max_radius + 1):
        shell = shell_edges(g, r)
        if not shell or len(shell) > _SUBSET_CAP:
            continue
        if not sep_decider(shell):
            continue
        mins = _minimal_subsets(shell, sep_decider)
        if len(mins) != k:
            continue
        if all(not (a & b) for a, b in combinations(mins, 2)):
            return shell
    return Unknown(fuel.max_radius)

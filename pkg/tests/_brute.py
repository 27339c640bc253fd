"""Independent brute-force oracles used to cross-check the library.

Everything here recomputes answers from first principles with its own BFS --
nothing calls into the library's deciders -- so agreement between the two is
a meaningful check, not a tautology.

The central helper counts infinite components of G minus a finite edge set
by looking at a large window.  A window component that keeps a vertex on the
rim is infinite *provided the fixture has no finite dead ends reaching the
rim*; the caller vouches for that by passing `quiet` (the radius beyond
which the graph is plain rays) and an `end_label` function classifying rim
vertices by the end they belong to.  Rim components sharing an end label are
the same component of the real graph (they reconnect outside the window).
"""

from collections import deque


def bfs_dist(g, center, radius):
    dist = {center: 0}
    q = deque([center])
    while q:
        v = q.popleft()
        if dist[v] == radius:
            continue
        for w, _m in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def window_edges(g, dist):
    es = set()
    for v in dist:
        for w, m in g.neighbors(v):
            if w in dist and w >= v:
                for s in range(m):
                    es.add((min(v, w), max(v, w), s))
    return es


def brute_components(g, removed, radius, end_label, quiet):
    """(infinite_count, finite_components) of G minus `removed`.

    `removed` is a set of (u, v, slot) triples.  All removed endpoints and
    all schedule decorations must sit within `quiet` < radius - 2; beyond
    `quiet` the fixture must consist of plain one-way rays so that touching
    the rim proves a component infinite.
    """
    bp = g.basepoint
    dist = bfs_dist(g, bp, radius)
    removed = {(min(u, v), max(u, v), s) for (u, v, s) in removed}
    for (u, v, s) in removed:
        assert u in dist and dist[u] <= quiet, "removed edge outside quiet zone"
        assert v in dist and dist[v] <= quiet, "removed edge outside quiet zone"
    assert quiet < radius - 2

    surviving = [e for e in window_edges(g, dist) if e not in removed]
    # edge-induced subgraph: vertices are endpoints of surviving edges
    adj = {}
    for (u, v, s) in surviving:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)

    comps = []
    seen = set()
    for v in sorted(adj):
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
        comps.append(comp)

    rim_comps = []
    finite = []
    for comp in comps:
        rim = {v for v in comp if dist[v] == radius}
        if rim:
            rim_comps.append((comp, {end_label(v) for v in rim}))
        else:
            finite.append(frozenset(comp))

    # merge rim components that share an end label
    parent = list(range(len(rim_comps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(rim_comps)):
        for j in range(i + 1, len(rim_comps)):
            if rim_comps[i][1] & rim_comps[j][1]:
                parent[find(i)] = find(j)

    infinite = len({find(i) for i in range(len(rim_comps))})
    return infinite, finite


def label_sign(v):
    assert v != 0
    return "pos" if v > 0 else "neg"


def label_one_end(_v):
    return "the-end"


def make_rays_label(k, chain_label):
    """Rim classifier for the rays family: ray j is its own end, the chain
    part defers to chain_label on the unpacked chain position."""

    def label(v):
        if v % k == 0:
            return ("chain", chain_label(v // k))
        return ("ray", v % k)

    return label

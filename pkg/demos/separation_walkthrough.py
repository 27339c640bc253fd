"""Separation on lazily-described infinite graphs, end to end.

Walks one family through the whole separation story: staged upper
approximations, the certified exact decision, the boundary partition, and
minimal separating subsets of a shell.  Everything here is finite work on
finite balls; the certificate carries the only genuinely infinitary fact.

Run: python3 demos/separation_walkthrough.py
"""

from graphends.gadgets import CeEnumeration, CycleChain
from graphends.graph_core import EndsCertificate, Fuel, ball, edge_set
from graphends.separation import (
    boundary_partition,
    comp_approx,
    comp_counter,
    decide_comp,
    minimal_separating_subsets,
    semidecide_not_separating,
    shell_edges,
)

# A signed line, rewired at stages 2 and 5: the negative edge at each event
# stage is replaced by two chords into the positive side.  The events stop,
# so the graph keeps two ends; the certificate names them with one cut
# beyond the last event on each side.
g = CycleChain(CeEnumeration((2, 5)))
cert = EndsCertificate(2, edge_set([(7, 8), (-8, -7)]))

print("ball around %r, radius 4:" % (g.basepoint,))
b = ball(g, g.basepoint, 4)
print("  %d vertices, %d edges" % (len(b.vertices), len(b.edges)))

for e in (edge_set([(0, 1)]), edge_set([(6, 7)]), edge_set([(6, 7), (-7, -6)])):
    removed = sorted((x.u, x.v) for x in e)
    stages = [comp_approx(g, e, n) for n in range(12)]
    print("\nremove %s" % removed)
    print("  staged counts n=0..11: %s" % stages)
    print("  certified decision:    %s" % decide_comp(g, e, cert))
    semi = semidecide_not_separating(g, e, Fuel(max_radius=10))
    print("  not-separating search: %s" % semi)

# Removing (0,1) does not separate: the chords at stages 2 and 5 reconnect
# the positive ray.  Removing (6,7) past the last event cuts the positive
# end off -- the boundary partition shows which removed endpoints face the
# surviving infinite components.
e = edge_set([(6, 7)])
part = boundary_partition(g, e, cert)
print("\nboundary partition for %s:" % sorted((x.u, x.v) for x in e))
for i, grp in enumerate(part.infinite_groups, 1):
    print("  infinite component %d touches: %s" % (i, sorted(grp)))
print("  finite side: %s" % sorted(part.finite_group))

# Minimal separating subsets of an exact shell, judged by a window counter.
r = 7
shell = shell_edges(g, r)
counter = comp_counter(g, shell, cert, Fuel(max_radius=24))
mins = minimal_separating_subsets(g, shell, lambda s: counter(s) >= 2)
print("\nshell at radius %d has %d edges; minimal separating subsets:" % (r, len(shell)))
for m in mins:
    print("  %s" % sorted((x.u, x.v) for x in m))

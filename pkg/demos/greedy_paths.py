"""Building one-way infinite simple paths greedily, without backtracking.

With an ends certificate in hand, "does this finite simple path extend to a
one-way infinite one?" is decidable, and the greedy builder that always
takes the least extendable neighbor never has to retract a step.  Shown on
a half line, a signed line, a rewired chain, and the product of two binary
trees.

Run: python3 demos/greedy_paths.py
"""

from graphends.gadgets import CeEnumeration, CycleChain, IntLine, NatLine, tree_lambda
from graphends.graph_core import EndsCertificate, Fuel, edge_set
from graphends.paths import decide_extendable, greedy_infinite_path

lam = tree_lambda()
RUNS = [
    ("half line", NatLine(), 0, EndsCertificate(1)),
    ("signed line", IntLine(), 0,
     EndsCertificate(2, edge_set([(-1, 0), (0, 1)]))),
    ("rewired chain", CycleChain(CeEnumeration((2, 5))), 0,
     EndsCertificate(2, edge_set([(7, 8), (-8, -7)]))),
    ("tree product", lam, lam.basepoint, EndsCertificate(1)),
]

fuel = Fuel(max_radius=140, max_steps=2_000_000)
for name, g, start, cert in RUNS:
    p = greedy_infinite_path(g, start, cert, 30, fuel)
    head = ",".join(str(v) for v in p.vertices[:10])
    print("%-14s length %d:  %s,..." % (name, p.edge_count, head))

# The decision behind each greedy step, made visible: on the signed line
# either direction leads to an end, but walking downhill on the half line
# corners itself at 0 and is refused.
line_cert = EndsCertificate(2, edge_set([(-1, 0), (0, 1)]))
for g, cert, path in ((IntLine(), line_cert, [0, 1, 2]),
                      (IntLine(), line_cert, [0, -1, -2]),
                      (NatLine(), EndsCertificate(1), [2, 1, 0])):
    verdict = decide_extendable(g, path, cert, fuel)
    print("extendable %r on %s -> %s" % (path, type(g).__name__, verdict))

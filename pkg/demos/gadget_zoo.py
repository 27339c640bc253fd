"""A tour of the graph families and the tree-product distance formula.

Every family is a lazily-evaluated oracle: neighbors on demand, finite
balls exactly computable, schedules injected as plain finite data.  The
text specs here are the same ones the command-line front end accepts.

Run: python3 demos/gadget_zoo.py
"""

import random

from graphends.gadgets import (
    GADGET_KINDS,
    lambda_distance,
    parse_graph_spec,
    tree_lambda,
)
from graphends.graph_core import ball, bounded_distance, to_dot

print("families:")
for kind in sorted(GADGET_KINDS):
    print("  %-18s %s" % (kind, GADGET_KINDS[kind]))

print("\nball sizes at radius 5:")
for spec in ("nat-line", "cycle-chain:events@2,5", "cycle-chain:events-all",
             "rays3:events@2", "lines-with-sticks:halt@3", "delta2:changes@2,5",
             "binary-tree", "lambda"):
    g = parse_graph_spec(spec)
    b = ball(g, g.basepoint, 5)
    print("  %-28s %3d vertices, %3d edges" % (spec, len(b.vertices), len(b.edges)))

# The product of two binary trees: distance is the sum of the two tree
# distances, and a direct search agrees.
lam = tree_lambda()
rng = random.Random(11)
print("\ntree-product distances (formula vs direct search):")
for _ in range(5):
    def node():
        v = 1
        for _ in range(rng.randint(0, 3)):
            v = 2 * v + rng.randint(0, 1)
        return v
    x, y = lam.pack(node(), node()), lam.pack(node(), node())
    d = lambda_distance(lam, x, y)
    print("  d(%d, %d) = %d   direct: %d" % (x, y, d, bounded_distance(lam, x, y, 16)))

# Any ball exports to DOT for a look at the local structure.
g = parse_graph_spec("lines-with-sticks:halt@2")
dot = to_dot(ball(g, g.basepoint, 4), frozenset(), name="sticks_halt_2")
print("\nDOT export of the halted tree near the origin (first lines):")
for line in dot.splitlines()[:6]:
    print("  " + line)
print("  ...")

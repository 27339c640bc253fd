"""End counts from separation oracles, and witnesses from end counts.

The two directions of the same correspondence: given an oracle for "is this
a maximal separation", count the ends; given the end count and a separation
decider, produce a maximal-separation witness.  The oracles here are backed
by the library's own certified decider, so the round trip closes.

Run: python3 demos/ends_roundtrip.py
"""

from graphends.gadgets import CeEnumeration, CycleChainWithRays, IntLine, NatLine
from graphends.graph_core import EndsCertificate, Fuel, edge_set
from graphends.separation import decide_comp, ends_from_sepmax, sepmax_witness_from_ends

CASES = [
    ("half line", NatLine(), 1, EndsCertificate(1)),
    ("signed line", IntLine(), 2,
     EndsCertificate(2, edge_set([(-1, 0), (0, 1)]))),
    ("chain + 1 ray", CycleChainWithRays(CeEnumeration((2,)), 2), 3,
     EndsCertificate(3, edge_set([(3, 5), (8, 10), (-10, -8)]))),
    ("chain + 2 rays", CycleChainWithRays(CeEnumeration((2,)), 3), 4,
     EndsCertificate(4, edge_set([(4, 7), (5, 8), (12, 15), (-15, -12)]))),
]

fuel = Fuel(max_radius=12)
for name, g, k, cert in CASES:
    decide = lambda es: decide_comp(g, es, cert, fuel)
    got = ends_from_sepmax(g, lambda es: decide(es) == k, fuel)
    print("%-14s ends_from_sepmax -> %s (expected %d)" % (name, got, k))
    w = sepmax_witness_from_ends(g, k, lambda es: decide(es) >= 2, fuel)
    edges = sorted((e.u, e.v) for e in w)
    print("%-14s witness from k=%d -> %s, re-certified Comp = %s"
          % ("", k, edges, decide(frozenset(w))))

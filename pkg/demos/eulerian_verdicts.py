"""Eulerian-path verdicts across the schedule-parameterized families.

Each family encodes a question about its schedule in the existence of a
one- or two-way infinite Eulerian path: the doubled chain asks whether the
rewiring goes on forever, the single-edge half line asks whether the limit
value changed exactly once, the doubled half line asks whether the machine
halts, and the two-ended multigraph asks whether the change count is odd.
The checker answers with certificates named, and a Fails verdict always
carries a finite witness.

Run: python3 demos/eulerian_verdicts.py
"""

from graphends.eulerian import (
    LocalizationCertificate,
    ParityCertificate,
    check_one_way,
    check_two_way,
)
from graphends.gadgets import (
    CeEnumeration,
    CycleChain,
    Delta2TwoEnded,
    Doubled,
    Halting,
    LimitApprox,
    Pi1Line,
    Sigma21Line,
)
from graphends.graph_core import EndsCertificate, edge_set

ONE_END = EndsCertificate(1)


def show(tag, verdict):
    line = "%-34s %s" % (tag, verdict.value)
    if verdict.is_fails:
        line += "  (%s" % verdict.reason
        if verdict.witness:
            line += "; witness %s" % (verdict.witness,)
        line += ")"
    elif verdict.certified:
        line += "  (certified: %s)" % ", ".join(verdict.certified)
    print(line)


print("doubled chain, two-way:")
show("  rewired at every stage", check_two_way(
    Doubled(CycleChain(CeEnumeration(every_stage=True))), ONE_END,
    ParityCertificate(2)))
g = Doubled(CycleChain(CeEnumeration((2, 5))))
cert = EndsCertificate(2, edge_set(
    [(7, 8, 0), (7, 8, 1), (-8, -7, 0), (-8, -7, 1)]))
show("  events 2,5 then silence", check_two_way(
    g, cert, ParityCertificate(2), LocalizationCertificate(9)))

print("\nsingle-edge half line, one-way:")
for changes in ((), (3,), (2, 5)):
    g = Sigma21Line(LimitApprox(changes))
    r = (max(changes) if changes else 0) + 2
    show("  %d change(s) at %s" % (len(changes), list(changes)),
         check_one_way(g, ONE_END, ParityCertificate(r)))

print("\ndoubled half line, two-way:")
for h in (None, 4):
    g = Pi1Line(Halting(h))
    show("  halt=%s" % ("never" if h is None else h),
         check_two_way(g, ONE_END, ParityCertificate(13 if h is None else h + 3)))

print("\ntwo-ended limit gadget, two-way:")
for k in (2, 3):
    changes = tuple(range(1, k + 1))
    g = Delta2TwoEnded(LimitApprox(changes))
    s = k + 2
    m = 2 - (k % 2)
    cert = EndsCertificate(2, edge_set(
        [(s, s + 1, c) for c in range(m)] + [(-s - 1, -s, c) for c in range(m)]))
    show("  %d changes (parity %s)" % (k, "odd" if k % 2 else "even"),
         check_two_way(g, cert, ParityCertificate(k + 3),
                       LocalizationCertificate(k + 2)))

"""First-order logic with counting quantifiers over automatic presentations.

A graph is presented by a regular language of vertex codes plus
synchronized two-tape automata for equality and adjacency; formulas then
compile to automata, with the counting quantifiers (exists-even, -odd,
-inf, -unique) handled by counting accepting paths in a cardinality
semiring.  The two builtins: the half line over unary codes and the
quarter grid over two-letter codes.

Run: python3 demos/counting_logic.py
"""

from graphends.automatic import (
    domain_words,
    eval_formula,
    eval_sentence,
    grid_presentation,
    nat_line_presentation,
    normalize_presentation,
)

nat = normalize_presentation(nat_line_presentation())
grid = normalize_presentation(grid_presentation())

SENTENCES = (
    "(forall u (exists v (adj u v)))",
    "(exists-inf u (in-l u))",
    "(exists u (exists-unique v (adj u v)))",
    "(exists-unique u (exists-odd v (adj u v)))",   # one-way Eulerian shape
    "(forall u (exists-even v (adj u v)))",         # two-way Eulerian shape
)

print("%-46s %-9s %s" % ("sentence", "half line", "grid"))
for s in SENTENCES:
    print("%-46s %-9s %s" % (s,
                             eval_sentence(nat, s, normalized=True),
                             eval_sentence(grid, s, normalized=True)))

# The Eulerian shapes above read off degree parities: the half line has
# exactly one odd vertex (its endpoint), the grid none -- matching one-way
# possible / two-way possible.

# Open formulas come back as automata; enumerate a few satisfying words.
rel = eval_formula(nat, "(exists-unique v (adj u v))", normalized=True)
hits = [w for w in domain_words(nat.domain, 4) if rel.accepts((w,))]
print("\nvertices of the half line with a unique neighbor: %s"
      % [("".join(w) or "eps") for w in hits])

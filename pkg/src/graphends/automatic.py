"""Model checking with counting quantifiers over automatic graph
presentations.

A presentation describes a graph by finite automata: a regular language of
vertex codes plus synchronized two-tape automata for code equality and for
adjacency.  Multi-tape relations are read through *convolution*: the words
of a tuple are padded on the right with ``#`` to a common length and read in
lockstep as one word over tuple letters (the all-``#`` letter never occurs).
Every first-order operation is then an automaton construction -- products
for the connectives, track erasure plus determinization for ``exists``, and
a weighted determinization over a small counting semiring for the counting
quantifiers ``exists-even`` / ``exists-odd`` / ``exists-inf`` /
``exists-unique``.

Counting quantifiers count *vertices*, not code words, so
``normalize_presentation`` first restricts the domain to the
length-lexicographically least code of every equality class;
``eval_formula`` applies it automatically.

The semiring determinization works per input prefix: a vector assigns each
state of the base automaton the count class of code words for the erased
track that reach it.  When the kept tracks end, each vector entry is
combined with a precomputed tail weight -- the count class of accepting
continuations read on letters that are blank everywhere except the erased
track -- obtained by cycle analysis plus dynamic programming on the acyclic
part.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .graph_core import ArityMismatch, GraphError, UnboundVariable

__all__ = [
    "PAD",
    "ArityMismatch",
    "UnboundVariable",
    "FormulaSyntaxError",
    "PresentationFormatError",
    "Dfa",
    "RelationAutomaton",
    "Presentation",
    "CountClass",
    "CountSemiring",
    "conv_alphabet",
    "convolve",
    "pad_dfa",
    "relation",
    "boolean_op",
    "relation_not",
    "project_exists",
    "cylindrify",
    "permute_tracks",
    "counting_project",
    "word_equality",
    "llex_less",
    "domain_as_relation",
    "domain_words",
    "validate_presentation",
    "normalize_presentation",
    "parse_formula",
    "formula_to_text",
    "free_variables",
    "eval_formula",
    "eval_sentence",
    "decide_eulerian_automatic",
    "nat_line_presentation",
    "grid_presentation",
    "parse_presentation",
    "serialize_presentation",
]

PAD = "#"


class FormulaSyntaxError(GraphError):
    pass


class PresentationFormatError(GraphError):
    pass


# ---------------------------------------------------------------------------
# deterministic automata
# ---------------------------------------------------------------------------

class Dfa:
    """Total deterministic automaton over an arbitrary finite alphabet.

    Symbols are strings for plain languages and tuples of strings for
    convolved relations.  Instances are immutable by convention; every
    operation returns a fresh automaton.
    """

    __slots__ = ("alphabet", "states", "start", "accepting", "transitions")

    def __init__(self, alphabet, states, start, accepting, transitions):
        self.alphabet = frozenset(alphabet)
        self.states = frozenset(states)
        self.start = start
        self.accepting = frozenset(accepting)
        self.transitions = dict(transitions)
        if self.start not in self.states:
            raise GraphError("start state missing from state set")
        if not self.accepting <= self.states:
            raise GraphError("accepting states outside state set")
        for q in self.states:
            for a in self.alphabet:
                t = self.transitions.get((q, a))
                if t is None:
                    raise GraphError("transition table not total at %r/%r" % (q, a))
                if t not in self.states:
                    raise GraphError("transition target %r unknown" % (t,))

    @classmethod
    def make(cls, alphabet, start, accepting, transitions, extra_states=()):
        """Build from a partial table; missing entries fall into a fresh
        rejecting sink."""
        alphabet = frozenset(alphabet)
        states = {start, *extra_states, *accepting}
        for (q, _a), t in transitions.items():
            states.add(q)
            states.add(t)
        table = dict(transitions)
        sink = "__sink__"
        while sink in states:
            sink += "_"
        need_sink = any((q, a) not in table for q in states for a in alphabet)
        if need_sink:
            states.add(sink)
        for q in list(states):
            for a in alphabet:
                table.setdefault((q, a), sink)
        return cls(alphabet, states, start, accepting, table)

    def step(self, state, symbol):
        return self.transitions[(state, symbol)]

    def accepts(self, word: Sequence) -> bool:
        q = self.start
        for a in word:
            if a not in self.alphabet:
                return False
            q = self.transitions[(q, a)]
        return q in self.accepting

    def complement(self) -> "Dfa":
        return Dfa(self.alphabet, self.states, self.start,
                   self.states - self.accepting, self.transitions)

    def product(self, other: "Dfa", keep) -> "Dfa":
        if self.alphabet != other.alphabet:
            raise ArityMismatch("product over different alphabets")
        syms = sorted(self.alphabet)
        start = (self.start, other.start)
        table = {}
        seen = {start}
        queue = deque([start])
        while queue:
            p, q = queue.popleft()
            for a in syms:
                t = (self.transitions[(p, a)], other.transitions[(q, a)])
                table[((p, q), a)] = t
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        accepting = {s for s in seen
                     if keep(s[0] in self.accepting, s[1] in other.accepting)}
        return Dfa(self.alphabet, seen, start, accepting, table)

    def intersect(self, other: "Dfa") -> "Dfa":
        return self.product(other, lambda x, y: x and y)

    def union(self, other: "Dfa") -> "Dfa":
        return self.product(other, lambda x, y: x or y)

    def map_symbols(self, fn, new_alphabet) -> "Dfa":
        """Relabel the alphabet through an injective symbol map."""
        new_alphabet = frozenset(new_alphabet)
        image = {}
        table = {}
        for (q, a), t in self.transitions.items():
            b = fn(a)
            if b not in new_alphabet:
                raise GraphError("symbol map leaves the target alphabet")
            if image.setdefault(b, a) != a:
                raise GraphError("symbol map is not injective")
            table[(q, b)] = t
        return Dfa(new_alphabet, self.states, self.start, self.accepting, table)

    def reachable(self) -> "Dfa":
        seen = {self.start}
        queue = deque([self.start])
        syms = sorted(self.alphabet)
        while queue:
            q = queue.popleft()
            for a in syms:
                t = self.transitions[(q, a)]
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        table = {(q, a): t for (q, a), t in self.transitions.items() if q in seen}
        return Dfa(self.alphabet, seen, self.start, self.accepting & seen, table)

    def minimized(self) -> "Dfa":
        """Partition refinement, then a breadth-first renumbering so equal
        languages yield identical tables."""
        trimmed = self.reachable()
        syms = sorted(trimmed.alphabet)
        block = {q: (q in trimmed.accepting) for q in trimmed.states}
        while True:
            signature = {
                q: (block[q],) + tuple(block[trimmed.transitions[(q, a)]] for a in syms)
                for q in trimmed.states
            }
            fresh = {}
            for q in sorted(trimmed.states, key=lambda s: repr(s)):
                fresh.setdefault(signature[q], len(fresh))
            new_block = {q: fresh[signature[q]] for q in trimmed.states}
            if len(set(new_block.values())) == len(set(block.values())):
                block = new_block
                break
            block = new_block
        # canonical numbering by BFS from the start block
        order = {block[trimmed.start]: 0}
        queue = deque([block[trimmed.start]])
        move = {}
        for q in trimmed.states:
            for a in syms:
                move[(block[q], a)] = block[trimmed.transitions[(q, a)]]
        while queue:
            b = queue.popleft()
            for a in syms:
                t = move[(b, a)]
                if t not in order:
                    order[t] = len(order)
                    queue.append(t)
        table = {(order[b], a): order[move[(b, a)]]
                 for b in order for a in syms}
        accepting = {order[block[q]] for q in trimmed.accepting}
        return Dfa(trimmed.alphabet, set(order.values()), 0, accepting, table)

    def is_empty(self) -> bool:
        return not any(q in self.accepting for q in self.reachable().states)

    def shortest_accepted(self) -> Optional[Tuple]:
        syms = sorted(self.alphabet)
        seen = {self.start: ()}
        queue = deque([self.start])
        while queue:
            q = queue.popleft()
            if q in self.accepting:
                return seen[q]
            for a in syms:
                t = self.transitions[(q, a)]
                if t not in seen:
                    seen[t] = seen[q] + (a,)
                    queue.append(t)
        return None

    def equivalent(self, other: "Dfa") -> bool:
        if self.alphabet != other.alphabet:
            return False
        return self.product(other, lambda x, y: x != y).is_empty()


def _determinize(alphabet, start_set, move, accept_pred) -> Dfa:
    """Subset construction; `move(frozenset, symbol) -> frozenset`."""
    syms = sorted(alphabet)
    start = frozenset(start_set)
    table = {}
    seen = {start}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for a in syms:
            t = move(s, a)
            table[(s, a)] = t
            if t not in seen:
                seen.add(t)
                queue.append(t)
    accepting = {s for s in seen if accept_pred(s)}
    return Dfa(alphabet, seen, start, accepting, table)


# ---------------------------------------------------------------------------
# convolution plumbing
# ---------------------------------------------------------------------------

def conv_alphabet(sigma: Iterable[str], arity: int) -> FrozenSet[Tuple[str, ...]]:
    """Tuple letters over sigma plus the pad, without the all-pad letter."""
    if arity < 0:
        raise ArityMismatch("arity must be >= 0")
    if arity == 0:
        return frozenset()
    padded = sorted(sigma) + [PAD]
    return frozenset(t for t in _cartesian(padded, repeat=arity)
                     if any(c != PAD for c in t))


def convolve(words: Sequence[Sequence[str]]) -> List[Tuple[str, ...]]:
    n = max((len(w) for w in words), default=0)
    return [tuple(w[i] if i < len(w) else PAD for w in words) for i in range(n)]


def pad_dfa(sigma: Iterable[str], arity: int) -> Dfa:
    """Accepts exactly the well-padded convolutions: per track, once the pad
    appears every later letter on that track is the pad."""
    alpha = conv_alphabet(sigma, arity)
    if arity == 0:
        return Dfa(alpha, {0}, 0, {0}, {})
    table = {}
    states = set()
    dead = -1
    for mask in range(1 << arity):          # bit i set = track i still live
        states.add(mask)
        for t in alpha:
            nxt = mask
            ok = True
            for i, c in enumerate(t):
                if c == PAD:
                    nxt &= ~(1 << i)
                elif not mask >> i & 1:
                    ok = False
            table[(mask, t)] = nxt if ok else dead
    states.add(dead)
    for t in alpha:
        table[(dead, t)] = dead
    full = (1 << arity) - 1
    return Dfa(alpha, states, full, states - {dead}, table)


# ---------------------------------------------------------------------------
# the counting semiring
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CountClass:
    """Cardinality class of a set: an exact small count, a big count of
    known parity, or infinite."""

    kind: str            # "exact" | "big_even" | "big_odd" | "inf"
    value: int = 0       # meaningful for "exact" only

    def __post_init__(self):
        if self.kind not in ("exact", "big_even", "big_odd", "inf"):
            raise GraphError("unknown count class %r" % (self.kind,))
        if self.kind != "exact" and self.value != 0:
            raise GraphError("only exact classes carry a value")

    @property
    def is_infinite(self) -> bool:
        return self.kind == "inf"

    @property
    def is_even(self) -> bool:
        """Finite and even; zero counts as even."""
        if self.kind == "exact":
            return self.value % 2 == 0
        return self.kind == "big_even"

    @property
    def is_odd(self) -> bool:
        if self.kind == "exact":
            return self.value % 2 == 1
        return self.kind == "big_odd"

    @property
    def is_exactly_one(self) -> bool:
        return self.kind == "exact" and self.value == 1

    def __repr__(self):
        if self.kind == "exact":
            return "CountClass(%d)" % self.value
        return "CountClass(%s)" % self.kind


INFINITE = CountClass("inf")
BIG_EVEN = CountClass("big_even")
BIG_ODD = CountClass("big_odd")


class CountSemiring:
    """Cardinal arithmetic on count classes, saturating at a threshold.

    The classes form the quotient of (N ∪ {∞}, +, ·) by the congruence that
    identifies finite numbers above the threshold with the same parity, so
    the semiring laws are inherited rather than designed.
    """

    def __init__(self, threshold: int = 2):
        if threshold < 1:
            raise GraphError("threshold must be >= 1")
        self.threshold = threshold

    def classify(self, n: int) -> CountClass:
        if n <= self.threshold:
            return CountClass("exact", n)
        return BIG_ODD if n % 2 else BIG_EVEN

    @property
    def zero(self) -> CountClass:
        return CountClass("exact", 0)

    @property
    def one(self) -> CountClass:
        return CountClass("exact", 1)

    @property
    def elements(self) -> Tuple[CountClass, ...]:
        exact = tuple(CountClass("exact", c) for c in range(self.threshold + 1))
        return exact + (BIG_EVEN, BIG_ODD, INFINITE)

    @staticmethod
    def _parity(c: CountClass) -> int:
        if c.kind == "exact":
            return c.value % 2
        return 0 if c.kind == "big_even" else 1

    def add(self, a: CountClass, b: CountClass) -> CountClass:
        if a.is_infinite or b.is_infinite:
            return INFINITE
        if a.kind == "exact" and b.kind == "exact":
            return self.classify(a.value + b.value)
        # one summand already exceeds the threshold, so the sum does too
        parity = (self._parity(a) + self._parity(b)) % 2
        return BIG_ODD if parity else BIG_EVEN

    def mul(self, a: CountClass, b: CountClass) -> CountClass:
        if (a.kind == "exact" and a.value == 0) or (b.kind == "exact" and b.value == 0):
            return self.zero
        if a.is_infinite or b.is_infinite:
            return INFINITE
        if a.kind == "exact" and b.kind == "exact":
            return self.classify(a.value * b.value)
        parity = self._parity(a) * self._parity(b)
        return BIG_ODD if parity else BIG_EVEN

    def sum(self, items: Iterable[CountClass]) -> CountClass:
        total = self.zero
        for c in items:
            total = self.add(total, c)
        return total


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelationAutomaton:
    """A regular relation of fixed arity, read through convolution.

    The base automaton accepts only well-padded convolutions; the
    constructors below guarantee that by intersecting with `pad_dfa`.
    """

    arity: int
    sigma: FrozenSet[str]
    dfa: Dfa

    def accepts(self, words: Sequence[Sequence[str]]) -> bool:
        if len(words) != self.arity:
            raise ArityMismatch(
                "expected %d words, got %d" % (self.arity, len(words)))
        return self.dfa.accepts(convolve(words))

    def is_empty(self) -> bool:
        return self.dfa.is_empty()

    def equivalent(self, other: "RelationAutomaton") -> bool:
        return (self.arity == other.arity and self.sigma == other.sigma
                and self.dfa.equivalent(other.dfa))


def relation(sigma, arity: int, dfa: Dfa) -> RelationAutomaton:
    """Wrap a base automaton, enforcing alphabet and padding discipline."""
    sigma = frozenset(sigma)
    if PAD in sigma:
        raise GraphError("the pad symbol cannot be part of the alphabet")
    want = conv_alphabet(sigma, arity)
    if dfa.alphabet != want:
        raise ArityMismatch("automaton alphabet does not match arity %d" % arity)
    clean = dfa.intersect(pad_dfa(sigma, arity)).minimized() if arity else dfa.minimized()
    return RelationAutomaton(arity, sigma, clean)


def boolean_op(a: RelationAutomaton, b: RelationAutomaton, op: str) -> RelationAutomaton:
    if a.arity != b.arity or a.sigma != b.sigma:
        raise ArityMismatch("boolean op over mismatched relations")
    if op == "and":
        keep = lambda x, y: x and y
    elif op == "or":
        keep = lambda x, y: x or y
    else:
        raise GraphError("unknown boolean op %r" % (op,))
    if a.arity == 0:
        ok = keep(a.dfa.accepts(()), b.dfa.accepts(()))
        return _nullary(a.sigma, ok)
    return RelationAutomaton(a.arity, a.sigma, a.dfa.product(b.dfa, keep).minimized())


def relation_not(a: RelationAutomaton) -> RelationAutomaton:
    """Complement within the well-padded universe."""
    if a.arity == 0:
        return _nullary(a.sigma, not a.dfa.accepts(()))
    comp = a.dfa.complement().intersect(pad_dfa(a.sigma, a.arity))
    return RelationAutomaton(a.arity, a.sigma, comp.minimized())


def _nullary(sigma, truth: bool) -> RelationAutomaton:
    dfa = Dfa(frozenset(), {0}, 0, {0} if truth else set(), {})
    return RelationAutomaton(0, frozenset(sigma), dfa)


def permute_tracks(a: RelationAutomaton, order: Sequence[int]) -> RelationAutomaton:
    order = tuple(order)
    if sorted(order) != list(range(a.arity)):
        raise ArityMismatch("not a permutation of %d tracks" % a.arity)
    if a.arity == 0:
        return a
    new_alpha = conv_alphabet(a.sigma, a.arity)
    dfa = a.dfa.map_symbols(lambda t: tuple(t[i] for i in order), new_alpha)
    return RelationAutomaton(a.arity, a.sigma, dfa.minimized())


def cylindrify(a: RelationAutomaton, position: int) -> RelationAutomaton:
    """Insert a fresh unconstrained track at `position`."""
    n = a.arity
    if not 0 <= position <= n:
        raise ArityMismatch("cannot insert a track at position %d" % position)
    alpha = conv_alphabet(a.sigma, n + 1)
    table = {}
    for q in a.dfa.states:
        for t in alpha:
            old = t[:position] + t[position + 1:]
            if n and any(c != PAD for c in old):
                table[(q, t)] = a.dfa.transitions[(q, old)]
            else:
                # the original tracks have all ended; freeze while the new
                # track runs on
                table[(q, t)] = q
    lifted = Dfa(alpha, a.dfa.states, a.dfa.start, a.dfa.accepting, table)
    return relation(a.sigma, n + 1, lifted)


def project_exists(a: RelationAutomaton, track: Optional[int] = None) -> RelationAutomaton:
    """Erase one track existentially: accepts a tuple iff some word on the
    erased track completes it."""
    n = a.arity
    if n == 0:
        raise ArityMismatch("nothing to project in a nullary relation")
    track = n - 1 if track is None else track
    if not 0 <= track < n:
        raise ArityMismatch("track %d out of range" % track)

    kept = lambda t: t[:track] + t[track + 1:]
    suffix_syms = [t for t in a.dfa.alphabet if all(c == PAD for c in kept(t))]
    # states from which acceptance is reachable on erased-track-only letters
    closure = set(a.dfa.accepting)
    changed = True
    while changed:
        changed = False
        for q in a.dfa.states:
            if q in closure:
                continue
            if any(a.dfa.transitions[(q, t)] in closure for t in suffix_syms):
                closure.add(q)
                changed = True

    moves: Dict[Tuple[object, Tuple], set] = {}
    for q in a.dfa.states:
        for t in a.dfa.alphabet:
            if t in suffix_syms:
                continue
            moves.setdefault((q, kept(t)), set()).add(a.dfa.transitions[(q, t)])

    m = n - 1
    new_alpha = conv_alphabet(a.sigma, m)
    if m == 0:
        return _nullary(a.sigma, a.dfa.start in closure)

    def move(state_set, sym):
        out = set()
        for q in state_set:
            out |= moves.get((q, sym), set())
        return frozenset(out)

    det = _determinize(new_alpha, {a.dfa.start}, move,
                       lambda s: bool(s & closure))
    return relation(a.sigma, m, det)


_COUNTING_MODES = ("even", "odd", "infinite", "exactly_one")


def counting_project(a: RelationAutomaton, mode: str,
                     semiring: Optional[CountSemiring] = None) -> RelationAutomaton:
    """Erase the last track, keeping the tuples whose number of completions
    falls in the requested cardinality class.

    even/odd mean finite-and-of-that-parity (zero is even); infinite means
    infinitely many completions; exactly_one means precisely one.
    """
    if mode not in _COUNTING_MODES:
        raise GraphError("unknown counting mode %r" % (mode,))
    if a.arity == 0:
        raise ArityMismatch("nothing to count in a nullary relation")
    sr = semiring or CountSemiring()
    A = a.dfa
    n = a.arity
    m = n - 1
    syms = sorted(a.sigma)
    tail_letters = [(PAD,) * m + (b,) for b in syms]

    tail_next = {q: [A.transitions[(q, t)] for t in tail_letters] for q in A.states}
    from_state = _path_count_classes(A.states, tail_next, A.accepting, sr)
    acc_cls = {q: sr.one if q in A.accepting else sr.zero for q in A.states}
    tail = {q: sr.sum(from_state[p] for p in tail_next[q]) for q in A.states}

    # states that can never reach acceptance contribute nothing to any
    # total; dropping their entries keeps the dead sink's ballooning tally
    # from blowing up the subset construction
    backward: Dict[object, List[object]] = {q: [] for q in A.states}
    for (q, _sym), t in A.transitions.items():
        backward[t].append(q)
    useful = set(A.accepting)
    frontier = deque(useful)
    while frontier:
        t = frontier.popleft()
        for q in backward[t]:
            if q not in useful:
                useful.add(q)
                frontier.append(q)

    def final(q, reading):
        # a path ending live on the counted track stands for the word that
        # stops right here plus every proper continuation
        return sr.add(acc_cls[q], tail[q]) if reading else acc_cls[q]

    def matches(total: CountClass) -> bool:
        if mode == "even":
            return total.is_even
        if mode == "odd":
            return total.is_odd
        if mode == "infinite":
            return total.is_infinite
        return total.is_exactly_one

    if m == 0:
        return _nullary(a.sigma, matches(final(A.start, True)))

    # The subset construction below is the hot path, so everything runs on
    # small integers: count classes become table indices (the tables are
    # built from the semiring's own add/mul, not re-derived), states become
    # positions in a byte vector, and each vector of per-state tallies is a
    # bytes key.  A slot for (state, still-reading) sits at idx, its
    # payload-exhausted twin at n_st + idx; the final slot is a trash target
    # for moves into useless states and is wiped before the vector is frozen.
    els = list(sr.elements)
    eid = {c: i for i, c in enumerate(els)}
    add_tbl = [[eid[sr.add(x, y)] for y in els] for x in els]
    mul_tbl = [[eid[sr.mul(x, y)] for y in els] for x in els]
    match_id = [matches(c) for c in els]

    states_list = sorted(A.states, key=repr)
    idx = {q: i for i, q in enumerate(states_list)}
    n_st = len(states_list)
    trash = 2 * n_st
    length = trash + 1

    new_alpha = conv_alphabet(a.sigma, m)
    alpha = sorted(new_alpha)
    programs = []
    for sym in alpha:
        read_rows = []
        pad_row = []
        for q in states_list:
            row = []
            for b in syms:
                t = A.transitions[(q, sym + (b,))]
                row.append(idx[t] if t in useful else trash)
            read_rows.append(tuple(row))
            t = A.transitions[(q, sym + (PAD,))]
            pad_row.append(n_st + idx[t] if t in useful else trash)
        programs.append((tuple(read_rows), tuple(pad_row)))

    final_read = [eid[sr.add(acc_cls[q], tail[q])] for q in states_list]
    final_pad = [eid[acc_cls[q]] for q in states_list]

    def advance(vec, prog):
        read_rows, pad_row = prog
        add = add_tbl
        out = bytearray(length)
        for i, c in enumerate(vec):
            if not c:
                continue
            if i < n_st:
                for j in read_rows[i]:
                    out[j] = add[out[j]][c]
                j = pad_row[i]
            else:
                j = pad_row[i - n_st]
            out[j] = add[out[j]][c]
        out[trash] = 0
        return bytes(out)

    def total_matches(vec):
        t = 0
        for i, c in enumerate(vec):
            if not c:
                continue
            f = final_read[i] if i < n_st else final_pad[i - n_st]
            t = add_tbl[t][mul_tbl[c][f]]
        return match_id[t]

    start = bytearray(length)
    if A.start in useful:
        start[idx[A.start]] = eid[sr.one]
    start = bytes(start)

    seen = {start: 0}
    order = [start]
    table = {}
    queue = deque([start])
    while queue:
        vec = queue.popleft()
        vid = seen[vec]
        for k, prog in enumerate(programs):
            nxt = advance(vec, prog)
            tid = seen.get(nxt)
            if tid is None:
                tid = len(order)
                seen[nxt] = tid
                order.append(nxt)
                queue.append(nxt)
                if len(order) > 200_000:
                    raise GraphError("counting projection exploded; "
                                     "simplify the relation first")
            table[(vid, alpha[k])] = tid
    accepting = {i for i, vec in enumerate(order) if total_matches(vec)}
    det = Dfa(new_alpha, range(len(order)), 0, accepting, table).minimized()
    return relation(a.sigma, m, det)


def _path_count_classes(states, next_map, accepting, sr: CountSemiring):
    """Count class, per state, of the accepted words readable from it in the
    deterministic edge structure `next_map` (the empty word included when
    the state itself accepts)."""
    rev: Dict[object, List[object]] = {q: [] for q in states}
    for q in states:
        for p in next_map[q]:
            rev[p].append(q)
    coacc = set(accepting)
    queue = deque(coacc)
    while queue:
        p = queue.popleft()
        for q in rev[p]:
            if q not in coacc:
                coacc.add(q)
                queue.append(q)

    # peel states with no useful successors; what survives can reach a cycle
    out_deg = {q: sum(1 for p in next_map[q] if p in coacc) for q in coacc}
    order = deque(q for q in coacc if out_deg[q] == 0)
    peeled: List[object] = []
    removed = set(order)
    while order:
        q = order.popleft()
        peeled.append(q)
        for r in rev[q]:
            if r in coacc and r not in removed:
                out_deg[r] -= 1
                if out_deg[r] == 0:
                    removed.add(r)
                    order.append(r)

    classes = {q: sr.zero for q in states}
    for q in coacc - removed:
        classes[q] = INFINITE
    exact: Dict[object, int] = {}
    for q in peeled:
        total = 1 if q in accepting else 0
        for p in next_map[q]:
            if p in removed:
                total += exact[p]
            # successors outside coacc contribute nothing; successors in the
            # surviving part cannot occur for peeled states
        exact[q] = total
        classes[q] = sr.classify(total)
    return classes


# ---------------------------------------------------------------------------
# stock relations
# ---------------------------------------------------------------------------

def word_equality(sigma) -> RelationAutomaton:
    """The diagonal: both tracks carry the same word."""
    sigma = frozenset(sigma)
    table = {}
    for t in conv_alphabet(sigma, 2):
        table[("eq", t)] = "eq" if t[0] == t[1] and t[0] != PAD else "no"
    dfa = Dfa.make(conv_alphabet(sigma, 2), "eq", {"eq"}, table)
    return relation(sigma, 2, dfa)


def llex_less(sigma, order: Optional[Sequence[str]] = None) -> RelationAutomaton:
    """Accepts (u, v) iff u is strictly length-lexicographically below v:
    shorter wins; equal lengths fall back to the symbol order."""
    ranks = {s: i for i, s in enumerate(order or sorted(sigma))}
    if set(ranks) != set(sigma):
        raise GraphError("symbol order must cover the alphabet exactly")
    table = {}
    for t in conv_alphabet(sigma, 2):
        x, y = t
        if x != PAD and y != PAD:
            if ranks[x] == ranks[y]:
                moves = [("eq", "eq"), ("lt", "lt"), ("gt", "gt")]
            elif ranks[x] < ranks[y]:
                moves = [("eq", "lt"), ("lt", "lt"), ("gt", "gt")]
            else:
                moves = [("eq", "gt"), ("lt", "lt"), ("gt", "gt")]
            moves += [("ushort", "no"), ("vshort", "no")]
        elif x == PAD:
            moves = [("eq", "ushort"), ("lt", "ushort"), ("gt", "ushort"),
                     ("ushort", "ushort"), ("vshort", "no")]
        else:
            moves = [("eq", "vshort"), ("lt", "vshort"), ("gt", "vshort"),
                     ("vshort", "vshort"), ("ushort", "no")]
        for src, dst in moves:
            table[(src, t)] = dst
    dfa = Dfa.make(conv_alphabet(sigma, 2), "eq", {"lt", "ushort"}, table)
    return relation(sigma, 2, dfa)


def domain_as_relation(p: "Presentation") -> RelationAutomaton:
    dfa = p.domain.map_symbols(lambda a: (a,), conv_alphabet(p.sigma, 1))
    return relation(p.sigma, 1, dfa)


def _universal_unary(sigma) -> RelationAutomaton:
    alpha = conv_alphabet(sigma, 1)
    table = {(0, t): 0 for t in alpha}
    return relation(sigma, 1, Dfa(alpha, {0}, 0, {0}, table))


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """An automatic description of a graph: a regular language of vertex
    codes, code equality, and adjacency, all over one alphabet."""

    sigma: FrozenSet[str]
    domain: Dfa
    adjacency: RelationAutomaton
    equality: RelationAutomaton

    def __post_init__(self):
        object.__setattr__(self, "sigma", frozenset(self.sigma))
        if self.domain.alphabet != self.sigma:
            raise ArityMismatch("domain automaton alphabet differs from sigma")
        for rel, name in ((self.adjacency, "adjacency"), (self.equality, "equality")):
            if rel.arity != 2 or rel.sigma != self.sigma:
                raise ArityMismatch("%s must be a binary relation over sigma" % name)


def domain_words(dfa: Dfa, max_len: int) -> List[Tuple[str, ...]]:
    """Accepted words of length <= max_len, shortest first then by symbol
    order; pruned through co-accessible states so sparse languages stay
    cheap to enumerate."""
    rev: Dict[object, set] = {q: set() for q in dfa.states}
    for (q, _a), t in dfa.transitions.items():
        rev[t].add(q)
    live = set(dfa.accepting)
    queue = deque(live)
    while queue:
        p = queue.popleft()
        for q in rev[p]:
            if q not in live:
                live.add(q)
                queue.append(q)
    syms = sorted(dfa.alphabet)
    out: List[Tuple[str, ...]] = []
    layer = [((), dfa.start)] if dfa.start in live else []
    for _ in range(max_len + 1):
        nxt = []
        for word, q in layer:
            if q in dfa.accepting:
                out.append(word)
            for a in syms:
                t = dfa.transitions[(q, a)]
                if t in live:
                    nxt.append((word + (a,), t))
        layer = nxt
    return out


def validate_presentation(p: Presentation, transitivity_len: int = 4) -> None:
    """Checks the structural promises: nonempty domain, symmetric adjacency,
    and equality an equivalence on the domain (transitivity only spot-checked
    on short words)."""
    if p.domain.is_empty():
        raise GraphError("presentation domain is empty")
    if not permute_tracks(p.adjacency, (1, 0)).equivalent(p.adjacency):
        raise GraphError("adjacency is not symmetric")
    if not permute_tracks(p.equality, (1, 0)).equivalent(p.equality):
        raise GraphError("equality is not symmetric")
    dom = domain_as_relation(p)
    diag = boolean_op(boolean_op(word_equality(p.sigma), cylindrify(dom, 1), "and"),
                      cylindrify(dom, 0), "and")
    missing = boolean_op(diag, relation_not(p.equality), "and")
    if not missing.is_empty():
        raise GraphError("equality is not reflexive on the domain")
    words = domain_words(p.domain, transitivity_len)
    related = [(u, v) for u in words for v in words if p.equality.accepts((u, v))]
    linked: Dict[Tuple, set] = {}
    for u, v in related:
        linked.setdefault(u, set()).add(v)
    for u, v in related:
        for w in linked.get(v, ()):
            if w not in linked.get(u, ()):
                raise GraphError("equality fails transitivity on %r,%r,%r" % (u, v, w))


def _saturate_adjacency(p: Presentation) -> RelationAutomaton:
    """Close adjacency under code equality, so restricting to one code per
    class cannot drop edges whose automaton only mentioned other codes."""
    beyond_diag = boolean_op(p.equality, relation_not(word_equality(p.sigma)), "and")
    if beyond_diag.is_empty():
        return p.adjacency          # equality is the identity already
    # tracks (u, v, u', v'): some equal pair (u', v') is adjacent
    adj_prime = cylindrify(cylindrify(p.adjacency, 0), 1)
    eq_u = cylindrify(cylindrify(p.equality, 1), 3)
    eq_v = cylindrify(cylindrify(p.equality, 0), 2)
    joined = boolean_op(boolean_op(eq_u, eq_v, "and"), adj_prime, "and")
    return project_exists(project_exists(joined, 3), 2)


def normalize_presentation(p: Presentation) -> Presentation:
    """Restrict the domain to the length-lexicographically least code of
    each equality class, making equality the identity; the presented graph
    is unchanged up to isomorphism, and counting words becomes counting
    vertices."""
    lt = llex_less(p.sigma)
    dom1 = domain_as_relation(p)
    # (u, v) such that v is an equal, strictly smaller code in the domain
    smaller_twin = boolean_op(
        boolean_op(p.equality, permute_tracks(lt, (1, 0)), "and"),
        cylindrify(dom1, 0), "and")
    has_smaller = project_exists(smaller_twin, 1)
    least = boolean_op(dom1, relation_not(has_smaller), "and")
    new_domain = least.dfa.map_symbols(lambda t: t[0], p.sigma).minimized()

    both = boolean_op(cylindrify(least, 1), cylindrify(least, 0), "and")
    new_equality = boolean_op(word_equality(p.sigma), both, "and")
    new_adjacency = boolean_op(_saturate_adjacency(p), both, "and")
    return Presentation(p.sigma, new_domain, new_adjacency, new_equality)


# ---------------------------------------------------------------------------
# formulas
# ---------------------------------------------------------------------------

_ATOM_ARITY = {"adj": 2, "eq": 2, "in-l": 1}
_CONNECTIVES = {"and", "or", "implies", "not"}
_QUANTIFIERS = {
    "exists": "exists",
    "forall": "forall",
    "exists-even": "even",
    "exists-odd": "odd",
    "exists-inf": "infinite",
    "exists-unique": "exactly_one",
}


def parse_formula(text: str):
    """S-expression reader for formulas, e.g.
    ``(forall u (exists-even v (adj u v)))``."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    if not tokens:
        raise FormulaSyntaxError("empty formula")
    pos = 0

    def read():
        nonlocal pos
        if pos >= len(tokens):
            raise FormulaSyntaxError("unbalanced parentheses")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            items = []
            while pos < len(tokens) and tokens[pos] != ")":
                items.append(read())
            if pos >= len(tokens):
                raise FormulaSyntaxError("missing closing parenthesis")
            pos += 1
            return tuple(items)
        if tok == ")":
            raise FormulaSyntaxError("unexpected closing parenthesis")
        return tok

    tree = read()
    if pos != len(tokens):
        raise FormulaSyntaxError("trailing input after the formula")
    _check_formula(tree, frozenset())
    return tree


def _is_variable(tok) -> bool:
    return (isinstance(tok, str) and tok not in _ATOM_ARITY
            and tok not in _CONNECTIVES and tok not in _QUANTIFIERS
            and tok.replace("-", "").replace("_", "").isalnum()
            and tok[0].isalpha())


def _check_formula(f, bound):
    if not isinstance(f, tuple) or not f or not isinstance(f[0], str):
        raise FormulaSyntaxError("malformed node %r" % (f,))
    head = f[0]
    if head in _ATOM_ARITY:
        if len(f) != _ATOM_ARITY[head] + 1:
            raise FormulaSyntaxError("%s takes %d variables" % (head, _ATOM_ARITY[head]))
        for v in f[1:]:
            if not _is_variable(v):
                raise FormulaSyntaxError("%r is not a variable" % (v,))
        return
    if head == "not":
        if len(f) != 2:
            raise FormulaSyntaxError("not takes one subformula")
        _check_formula(f[1], bound)
        return
    if head in _CONNECTIVES:
        if len(f) != 3:
            raise FormulaSyntaxError("%s takes two subformulas" % head)
        _check_formula(f[1], bound)
        _check_formula(f[2], bound)
        return
    if head in _QUANTIFIERS:
        if len(f) != 3 or not _is_variable(f[1]):
            raise FormulaSyntaxError("%s needs a variable and a body" % head)
        if f[1] in bound:
            raise FormulaSyntaxError("variable %s rebound in nested scope" % f[1])
        _check_formula(f[2], bound | {f[1]})
        return
    raise FormulaSyntaxError("unknown operator %r" % (head,))


def formula_to_text(f) -> str:
    if isinstance(f, str):
        return f
    return "(" + " ".join(formula_to_text(x) for x in f) + ")"


def free_variables(f) -> FrozenSet[str]:
    head = f[0]
    if head in _ATOM_ARITY:
        return frozenset(f[1:])
    if head == "not":
        return free_variables(f[1])
    if head in _CONNECTIVES:
        return free_variables(f[1]) | free_variables(f[2])
    return (free_variables(f[2]) - {f[1]})


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _expand(rel: RelationAutomaton, have: Tuple[str, ...],
            want: Tuple[str, ...]) -> RelationAutomaton:
    cur = list(have)
    for i, v in enumerate(want):
        if i >= len(cur) or cur[i] != v:
            rel = cylindrify(rel, i)
            cur.insert(i, v)
    return rel


def _align(a, b):
    merged = tuple(sorted(set(a[1]) | set(b[1])))
    return _expand(a[0], a[1], merged), _expand(b[0], b[1], merged), merged


def _domain_on_last(p: Presentation, arity: int) -> RelationAutomaton:
    rel = domain_as_relation(p)
    for _ in range(arity - 1):
        rel = cylindrify(rel, 0)
    return rel


def _diagonal_unary(rel2: RelationAutomaton) -> RelationAutomaton:
    """Restrict a binary relation to its diagonal and read it as a unary
    one -- the semantics of an atom applied to one variable twice."""
    diag = boolean_op(rel2, word_equality(rel2.sigma), "and")
    alpha = conv_alphabet(rel2.sigma, 1)
    table = {(q, (a,)): diag.dfa.transitions[(q, (a, a))]
             for q in diag.dfa.states for a in sorted(rel2.sigma)}
    dfa = Dfa(alpha, diag.dfa.states, diag.dfa.start, diag.dfa.accepting, table)
    return relation(rel2.sigma, 1, dfa)


def _eval(p: Presentation, f):
    head = f[0]
    if head in ("adj", "eq"):
        base = p.adjacency if head == "adj" else p.equality
        x, y = f[1], f[2]
        if x == y:
            if head == "eq":
                # every code equals itself; relativization happens at the
                # quantifier that binds the variable
                return _universal_unary(p.sigma), (x,)
            return _diagonal_unary(base), (x,)
        if x < y:
            return base, (x, y)
        return permute_tracks(base, (1, 0)), (y, x)
    if head == "in-l":
        return domain_as_relation(p), (f[1],)
    if head == "not":
        rel, vs = _eval(p, f[1])
        return relation_not(rel), vs
    if head in ("and", "or"):
        ra, rb, vs = _align(_eval(p, f[1]), _eval(p, f[2]))
        return boolean_op(ra, rb, head), vs
    if head == "implies":
        ra, rb, vs = _align(_eval(p, f[1]), _eval(p, f[2]))
        return boolean_op(relation_not(ra), rb, "or"), vs
    # quantifier
    mode = _QUANTIFIERS[head]
    var, body = f[1], f[2]
    rel, vs = _eval(p, body)
    if var not in vs:
        want = tuple(sorted(set(vs) | {var}))
        rel, vs = _expand(rel, vs, want), want
    rest = tuple(v for v in vs if v != var)
    order = tuple(vs.index(v) for v in rest + (var,))
    rel = permute_tracks(rel, order)
    guard = _domain_on_last(p, rel.arity)
    if mode == "exists":
        return project_exists(boolean_op(rel, guard, "and")), rest
    if mode == "forall":
        inner = boolean_op(relation_not(rel), guard, "and")
        return relation_not(project_exists(inner)), rest
    return counting_project(boolean_op(rel, guard, "and"), mode), rest


def eval_formula(p: Presentation, f, *, normalized: bool = False):
    """Evaluate a formula against a presentation.

    Closed formulas return a bool.  Open formulas return the defining
    RelationAutomaton, tracks ordered by variable name, restricted to the
    (normalized) domain.
    """
    if isinstance(f, str):
        f = parse_formula(f)
    else:
        _check_formula(f, frozenset())
    if not normalized:
        p = normalize_presentation(p)
    rel, vs = _eval(p, f)
    if not vs:
        return rel.dfa.accepts(())
    for i in range(rel.arity):
        guard = domain_as_relation(p)
        for j in range(rel.arity):
            if j != i:
                guard = cylindrify(guard, j if j < i else guard.arity)
        rel = boolean_op(rel, guard, "and")
    return rel


def eval_sentence(p: Presentation, f, *, normalized: bool = False) -> bool:
    if isinstance(f, str):
        f = parse_formula(f)
    fv = free_variables(f)
    if fv:
        raise UnboundVariable("free variables in sentence: %s" % ", ".join(sorted(fv)))
    return eval_formula(p, f, normalized=normalized)


def decide_eulerian_automatic(p: Presentation, which: str) -> bool:
    """Eulerian-condition deciders for presentations of connected one-ended
    graphs (the end-count hypothesis is the caller's promise):

    one_way -- exactly one vertex of odd degree;
    two_way -- every vertex of even degree.
    """
    which = which.replace("-", "_")
    if which == "one_way":
        sentence = "(exists-unique u (exists-odd v (adj u v)))"
    elif which == "two_way":
        sentence = "(forall u (exists-even v (adj u v)))"
    else:
        raise GraphError("which must be one_way or two_way, not %r" % (which,))
    return eval_sentence(p, sentence)


# ---------------------------------------------------------------------------
# built-in presentations
# ---------------------------------------------------------------------------

def nat_line_presentation() -> Presentation:
    """The half line: vertex n is the unary code 1^n."""
    sigma = {"1"}
    domain = Dfa(sigma, {0}, 0, {0}, {(0, "1"): 0})
    adj_table = {
        ("run", ("1", "1")): "run",
        ("run", ("1", PAD)): "off",
        ("run", (PAD, "1")): "off",
    }
    adj = Dfa.make(conv_alphabet(sigma, 2), "run", {"off"}, adj_table)
    return Presentation(frozenset(sigma), domain,
                        relation(sigma, 2, adj), word_equality(sigma))


def _signed_unary_adjacency() -> RelationAutomaton:
    """Codes a^n for n and b^n for -n (zero is the empty word); accepts the
    pairs at distance one."""
    sigma = {"a", "b"}
    table = {}
    for s in ("a", "b"):
        table[("run0", (s, s))] = "run-" + s
        table[("run-" + s, (s, s))] = "run-" + s
        for t in (("run0",), ("run-" + s,)):
            table[(t[0], (s, PAD))] = "off"
            table[(t[0], (PAD, s))] = "off"
    dfa = Dfa.make(conv_alphabet(sigma, 2), "run0", {"off"}, table)
    return relation(sigma, 2, dfa)


def _pack_pairs(rel4: RelationAutomaton, name) -> Dfa:
    """Reinterpret a four-track automaton as two tracks of paired symbols;
    a pair of pads becomes the pad of the packed tape."""
    def pack_component(x, y):
        return PAD if x == PAD and y == PAD else name(x, y)

    def pack_letter(t):
        return (pack_component(t[0], t[1]), pack_component(t[2], t[3]))

    packed_sigma = {name(x, y) for x in ("a", "b", PAD) for y in ("a", "b", PAD)
                    if not (x == PAD and y == PAD)}
    return rel4.dfa.map_symbols(pack_letter, conv_alphabet(packed_sigma, 2))


def grid_presentation() -> Presentation:
    """The two-dimensional integer grid.  A vertex (x, y) is coded by the
    convolution of the signed unary codes of x and y, with the inner pad
    written ``_``; e.g. (2, -1) is ``ab a_``.  Built out of the
    one-dimensional automata with the relation algebra itself."""
    adj1 = _signed_unary_adjacency()
    eq1 = word_equality({"a", "b"})
    adj_x = cylindrify(cylindrify(adj1, 1), 3)
    eq_y = cylindrify(cylindrify(eq1, 0), 2)
    eq_x = cylindrify(cylindrify(eq1, 1), 3)
    adj_y = cylindrify(cylindrify(adj1, 0), 2)
    step = boolean_op(boolean_op(adj_x, eq_y, "and"),
                      boolean_op(eq_x, adj_y, "and"), "or")

    def name(x, y):
        return (x if x != PAD else "_") + (y if y != PAD else "_")

    packed = _pack_pairs(step, name)
    sigma = frozenset(name(x, y) for x in ("a", "b", PAD) for y in ("a", "b", PAD)
                      if not (x == PAD and y == PAD))

    # the code language: each coordinate slot runs a single letter then pads
    fresh, done = 0, 3
    mode_of = {"a": 1, "b": 2, "_": done}
    table = {}
    states = set()
    for xm in (fresh, 1, 2, done):
        for ym in (fresh, 1, 2, done):
            states.add((xm, ym))
            for s in sigma:
                nxt = []
                for cur, c in ((xm, s[0]), (ym, s[1])):
                    want = mode_of[c]
                    if c == "_":
                        nxt.append(done)
                    elif cur in (fresh, want):
                        nxt.append(want)
                    else:
                        nxt.append(None)
                if None not in nxt:
                    table[((xm, ym), s)] = tuple(nxt)
    domain = Dfa.make(sigma, (fresh, fresh), states, table,
                      extra_states=states).minimized()

    dom1 = relation(sigma, 1,
                    domain.map_symbols(lambda a: (a,), conv_alphabet(sigma, 1)))
    both = boolean_op(cylindrify(dom1, 1), cylindrify(dom1, 0), "and")
    adjacency = boolean_op(relation(sigma, 2, packed), both, "and")
    equality = boolean_op(word_equality(sigma), both, "and")
    return Presentation(sigma, domain, adjacency, equality)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_SECTIONS = ("alphabet", "domain", "adjacency", "equality")


def _parse_symbol(tok: str, sigma, arity: int):
    parts = tuple(tok.split("|"))
    if len(parts) != arity:
        raise PresentationFormatError(
            "symbol %r has %d tracks, expected %d" % (tok, len(parts), arity))
    for c in parts:
        if c != PAD and c not in sigma:
            raise PresentationFormatError("unknown symbol %r in %r" % (c, tok))
    if all(c == PAD for c in parts):
        raise PresentationFormatError("the all-pad symbol %r is not allowed" % tok)
    return parts if arity > 1 else parts[0]


def _parse_dfa_section(lines, sigma, arity: int):
    meta = {"states": None, "start": None, "accepting": None}
    transitions = {}
    for ln in lines:
        key, _, rest = ln.partition(":")
        if _ and key.strip() in meta:
            meta[key.strip()] = rest.split()
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise PresentationFormatError("bad transition line %r" % ln)
        src, tok, dst = parts
        sym = _parse_symbol(tok, sigma, arity)
        transitions[(src, sym)] = dst
    if meta["start"] is None or len(meta["start"]) != 1:
        raise PresentationFormatError("section needs exactly one start state")
    alphabet = sigma if arity == 1 else conv_alphabet(sigma, arity)
    dfa = Dfa.make(alphabet, meta["start"][0], set(meta["accepting"] or ()),
                   transitions, extra_states=set(meta["states"] or ()))
    return dfa.minimized()


def parse_presentation(text: str) -> Presentation:
    """Read the sectioned text format::

        alphabet: 1
        domain:
          states: 0
          start: 0
          accepting: 0
          0 1 0
        adjacency:
          ...transition lines with two-track symbols like 1|# ...
        equality:
          ...

    Convolution symbols join tracks with ``|``; ``#`` is the pad.  Lines
    starting with ``;`` are comments.  Omitted transitions fall into a
    rejecting sink.
    """
    sections: Dict[str, List[str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        head, _, rest = line.partition(":")
        if _ and head.strip() in _SECTIONS:
            current = head.strip()
            sections[current] = []
            if rest.strip():
                sections[current].append(("inline", rest.strip()))
            continue
        if current is None:
            raise PresentationFormatError("content before any section: %r" % line)
        sections[current].append(("line", line))
    missing = [s for s in _SECTIONS if s not in sections]
    if missing:
        raise PresentationFormatError("missing sections: %s" % ", ".join(missing))
    alpha_items = [x for kind, x in sections["alphabet"]]
    sigma = frozenset(" ".join(alpha_items).split())
    if not sigma or PAD in sigma:
        raise PresentationFormatError("alphabet must be nonempty and pad-free")
    domain = _parse_dfa_section([x for _k, x in sections["domain"]], sigma, 1)
    adjacency = relation(sigma, 2, _parse_dfa_section(
        [x for _k, x in sections["adjacency"]], sigma, 2))
    equality = relation(sigma, 2, _parse_dfa_section(
        [x for _k, x in sections["equality"]], sigma, 2))
    return Presentation(sigma, domain, adjacency, equality)


def _serialize_dfa(dfa: Dfa, arity: int, out: List[str]) -> None:
    canon = dfa.minimized()
    out.append("  states: " + " ".join(str(q) for q in sorted(canon.states)))
    out.append("  start: %s" % canon.start)
    out.append("  accepting: " + " ".join(str(q) for q in sorted(canon.accepting)))
    for (q, sym), t in sorted(canon.transitions.items(),
                              key=lambda kv: (kv[0][0], repr(kv[0][1]))):
        tok = sym if arity == 1 else "|".join(sym)
        out.append("  %s %s %s" % (q, tok, t))


def serialize_presentation(p: Presentation) -> str:
    out = ["alphabet: " + " ".join(sorted(p.sigma))]
    out.append("domain:")
    _serialize_dfa(p.domain, 1, out)
    out.append("adjacency:")
    _serialize_dfa(p.adjacency.dfa, 2, out)
    out.append("equality:")
    _serialize_dfa(p.equality.dfa, 2, out)
    return "\n".join(out) + "\n"

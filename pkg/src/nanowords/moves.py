"""Homotopy moves on nanowords and bounded certificate search.

Moves (with S a set of alphabet triples, by default the diagonal):

* M1   xAAy <-> xy
* M2   xAByBAz <-> xyz                when |B| = tau(|A|)
* M3   xAByACzBCt <-> xBAyCAzCBt      when (|A|,|B|,|C|) in S

Derived single-step macros (composites of the three moves, used to keep
search trees shallow; they can be switched off):

* L32  xAByABz <-> xyz                when |B| = tau(|A|), S meets alpha x b x b
* LI   xAByCAzBCt <-> xBAyACzCBt      when (|A|, tau|B|, |C|) in S
* LII  xAByCAzCBt <-> xBAyACzBCt      when (tau|A|, tau|B|, |C|) in S
* LIII xAByACzCBt <-> xBAyCAzBCt      when (|A|, tau|B|, tau|C|) in S

Search is deterministic: states are canonical forms, expanded in a fixed
priority order, and budget exhaustion yields Unknown (never a disproof).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .errors import BudgetInvalid, PreconditionViolated
from .words import Alphabet, Nanoword

# ---------------------------------------------------------------------------
# Homotopy data and moves


@dataclass(frozen=True)
class HomotopyData:
    alphabet: Alphabet
    triples: frozenset | None = None  # None = diagonal of alpha^3

    def allows(self, a: str, b: str, c: str) -> bool:
        if self.triples is None:
            return a == b == c
        return (a, b, c) in self.triples

    def second_gate(self, b: str) -> bool:
        """S meets alpha x {b} x {b} (hypothesis of the interlaced-pair macro)."""
        if self.triples is None:
            return True
        return any(t[1] == b and t[2] == b for t in self.triples)


PAIR_KINDS = ("M1", "M2", "L32")
TRIPLE_KINDS = ("M3", "LI", "LII", "LIII")

# site letter patterns: for sites (x1,y1),(x2,y2),(x3,y3) each entry says
# which earlier slot each of x2,y2,x3,y3 must repeat (None = fresh letter).
_TRIPLE_SHAPES = {
    ("M3", "-"): ("x1", None, "y1", "y2"),
    ("M3", "+"): (None, "y1", "x2", "x1"),
    ("LI", "-"): (None, "x1", "y1", "x2"),
    ("LI", "+"): ("y1", None, "y2", "x1"),
    ("LII", "-"): (None, "x1", "x2", "y1"),
    ("LII", "+"): ("y1", None, "x1", "y2"),
    ("LIII", "-"): ("x1", None, "y2", "y1"),
    ("LIII", "+"): (None, "y1", "x1", "x2"),
}


@dataclass(frozen=True)
class Move:
    """One applicable move; positions are 0-based into the current word."""

    kind: str
    sign: str  # "-" deletes / left-to-right swap, "+" inserts / right-to-left
    positions: tuple[int, ...]
    values: tuple[str, ...] = ()  # alphabet value(s): deleted or inserted letter

    def format(self) -> str:
        pos = ",".join(str(p + 1) for p in self.positions)
        pos = f"({pos})" if len(self.positions) > 1 else pos
        out = f"{self.kind}{self.sign} @pos={pos}"
        if self.sign == "+" and self.kind in PAIR_KINDS:
            out += f" insert=({','.join(self.values)})"
        return out


def parse_move(text: str) -> Move:
    parts = text.split()
    head = parts[0]
    kind, sign = head[:-1], head[-1]
    if kind not in PAIR_KINDS + TRIPLE_KINDS or sign not in "+-":
        raise ValueError(f"bad move {text!r}")
    fields = dict(p.split("=", 1) for p in parts[1:])
    pos = fields["@pos"].strip("()")
    positions = tuple(int(p) - 1 for p in pos.split(","))
    values = ()
    if "insert" in fields:
        values = tuple(v for v in fields["insert"].strip("()").split(",") if v)
    return Move(kind, sign, positions, values)


def _triple_letters(word, p, q, r):
    return (word[p], word[p + 1], word[q], word[q + 1], word[r], word[r + 1])


def _swap_sites(word, sites):
    out = list(word)
    for p in sites:
        out[p], out[p + 1] = out[p + 1], out[p]
    return tuple(out)


def _fresh(word_letters, n):
    taken = set(word_letters)
    names = []
    k = 0
    while len(names) < n:
        name = ("+", k)
        if name not in taken:
            names.append(name)
        k += 1
    return names


def _triple_condition(data: HomotopyData, kind: str, pa: str, pb: str, pc: str) -> bool:
    tau = data.alphabet.tau
    if kind == "M3":
        return data.allows(pa, pb, pc)
    if kind == "LI":
        return data.allows(pa, tau(pb), pc)
    if kind == "LII":
        return data.allows(tau(pa), tau(pb), pc)
    if kind == "LIII":
        return data.allows(pa, tau(pb), tau(pc))
    raise ValueError(kind)


def _match_triple(w: Nanoword, data: HomotopyData, kind: str, sign: str, p, q, r):
    """Return (A, B, C) if the shape and the S-condition match, else None."""
    x1, y1, x2, y2, x3, y3 = _triple_letters(w.word, p, q, r)
    slots = {"x1": x1, "y1": y1}
    expect = _TRIPLE_SHAPES[(kind, sign)]
    actual = (x2, y2, x3, y3)
    fresh = None
    for val, rule in zip(actual, expect):
        if rule is None:
            if val in (x1, y1) or val == fresh:
                return None
            fresh = val
        else:
            slots.setdefault("x2", x2)
            slots.setdefault("y2", y2)
            if val != slots[rule]:
                return None
    # name the roles A, B, C
    if sign == "-":
        if kind in ("M3", "LIII"):
            a, b, c = x1, y1, y2
        else:  # LI, LII
            a, b, c = x1, y1, x2
    else:
        if kind in ("M3", "LIII"):
            b, a, c = x1, y1, x2
        else:  # LI, LII
            b, a, c = x1, y1, y2
    if len({a, b, c}) != 3:
        return None
    if not _triple_condition(data, kind, w.proj[a], w.proj[b], w.proj[c]):
        return None
    return a, b, c


def apply_move(w: Nanoword, move: Move, data: HomotopyData,
               validate: bool = True) -> Nanoword:
    """Apply ``move`` to ``w`` (not canonicalized); raises if it does not fit."""
    word, proj = w.word, w.proj
    n = len(word)
    k, sign, pos = move.kind, move.sign, move.positions
    tau = data.alphabet.tau

    if k in TRIPLE_KINDS:
        p, q, r = pos
        if not (0 <= p and p + 1 < q and q + 1 < r and r + 1 < n):
            raise PreconditionViolated(f"{move.format()}: sites overlap or overflow")
        if validate and _match_triple(w, data, k, sign, p, q, r) is None:
            raise PreconditionViolated(f"{move.format()}: pattern or S-condition fails")
        return Nanoword(w.alphabet, _swap_sites(word, pos), proj)

    if sign == "-":
        if k == "M1":
            (i,) = pos
            if not (0 <= i and i + 1 < n and word[i] == word[i + 1]):
                raise PreconditionViolated(f"{move.format()}: no doubled letter here")
            keep = word[:i] + word[i + 2:]
            return Nanoword(w.alphabet, keep, {x: proj[x] for x in keep})
        i, j = pos
        if not (0 <= i and i + 1 < j and j + 1 < n):
            raise PreconditionViolated(f"{move.format()}: sites overlap or overflow")
        a, b = word[i], word[i + 1]
        second = (b, a) if k == "M2" else (a, b)
        if (word[j], word[j + 1]) != second or a == b:
            raise PreconditionViolated(f"{move.format()}: pattern fails")
        if validate:
            if proj[b] != tau(proj[a]):
                raise PreconditionViolated(f"{move.format()}: |B| = tau(|A|) fails")
            if k == "L32" and not data.second_gate(proj[b]):
                raise PreconditionViolated(f"{move.format()}: S misses alpha x b x b")
        keep = word[:i] + word[i + 2:j] + word[j + 2:]
        return Nanoword(w.alphabet, keep, {x: proj[x] for x in keep})

    # insertions
    if k == "M1":
        (i,) = pos
        if not 0 <= i <= n:
            raise PreconditionViolated(f"{move.format()}: position out of range")
        (val,) = move.values
        (new,) = _fresh(w.letters, 1)
        out = word[:i] + (new, new) + word[i:]
        return Nanoword(w.alphabet, out, {**proj, new: val})
    i, j = pos
    if not 0 <= i <= j <= n:
        raise PreconditionViolated(f"{move.format()}: positions out of range")
    (val,) = move.values
    if k == "L32" and validate and not data.second_gate(tau(val)):
        raise PreconditionViolated(f"{move.format()}: S misses alpha x b x b")
    na, nb = _fresh(w.letters, 2)
    second = (nb, na) if k == "M2" else (na, nb)
    out = word[:i] + (na, nb) + word[i:j] + second + word[j:]
    return Nanoword(w.alphabet, out, {**proj, na: val, nb: tau(val)})


def invert_move(move: Move) -> Move:
    """The move that undoes ``move`` on its result (positions already shifted)."""
    k, sign, pos, vals = move.kind, move.sign, move.positions, move.values
    if k in TRIPLE_KINDS:
        return Move(k, "+" if sign == "-" else "-", pos)
    if k == "M1":
        return Move(k, "+" if sign == "-" else "-", pos, vals)
    if sign == "-":
        i, j = pos
        return Move(k, "+", (i, j - 2), vals)
    i, j = pos
    return Move(k, "-", (i, j + 2), vals)


def enumerate_moves(w: Nanoword, data: HomotopyData,
                    insert_values: tuple[str, ...] | None = None,
                    max_length: int | None = None,
                    use_macros: bool = False,
                    forward_only: bool = False):
    """All single-move successors of ``w`` as (move, canonical nanoword).

    Forward moves are exhaustive; insertions run over positions x
    ``insert_values`` and are gated by ``max_length``.
    """
    word = w.word
    n = len(word)
    tau = data.alphabet.tau
    out = []

    def emit(move):
        out.append((move, apply_move(w, move, data, validate=False).canonical()))

    for i in range(n - 1):
        if word[i] == word[i + 1]:
            emit(Move("M1", "-", (i,), (w.proj[word[i]],)))
    for i in range(n - 1):
        a, b = word[i], word[i + 1]
        if a == b or w.proj[b] != tau(w.proj[a]):
            continue
        for j in range(i + 2, n - 1):
            if (word[j], word[j + 1]) == (b, a):
                emit(Move("M2", "-", (i, j), (w.proj[a],)))
            if use_macros and (word[j], word[j + 1]) == (a, b) and data.second_gate(w.proj[b]):
                emit(Move("L32", "-", (i, j), (w.proj[a],)))

    kinds = TRIPLE_KINDS if use_macros else ("M3",)
    for p, q, r in itertools.combinations(range(n - 1), 3):
        if p + 1 >= q or q + 1 >= r:
            continue
        for kind in kinds:
            for sign in "-+":
                if _match_triple(w, data, kind, sign, p, q, r) is not None:
                    emit(Move(kind, sign, (p, q, r)))

    if not forward_only:
        values = insert_values if insert_values is not None else data.alphabet.letters
        if max_length is None or n + 2 <= max_length:
            for i in range(n + 1):
                for v in values:
                    emit(Move("M1", "+", (i,), (v,)))
        if max_length is None or n + 4 <= max_length:
            for i in range(n + 1):
                for j in range(i, n + 1):
                    for v in values:
                        emit(Move("M2", "+", (i, j), (v,)))
                        if use_macros and data.second_gate(tau(v)):
                            emit(Move("L32", "+", (i, j), (v,)))
    return out


# ---------------------------------------------------------------------------
# Certificates


@dataclass
class Certificate:
    """A replayable move chain between two canonical nanowords."""

    start: Nanoword
    end: Nanoword
    moves: tuple[Move, ...]

    def format(self) -> str:
        lines = [m.format() for m in self.moves]
        return "\n".join(lines) + ("\n" if lines else "")


def verify_certificate(cert: Certificate, data: HomotopyData) -> bool:
    cur = cert.start.canonical()
    for move in cert.moves:
        cur = apply_move(cur, move, data, validate=True).canonical()
    return cur.isomorphic(cert.end.canonical())


def certificate_from_states(states, data: HomotopyData,
                            insert_values=None, use_macros=True) -> Certificate:
    """Build a certificate from a chain of states one move apart.

    Used to replay worked contraction sequences given as word lists.
    """
    moves = []
    cur = states[0].canonical()
    for target in states[1:]:
        tkey = target.canonical().key()
        found = None
        for move, nxt in enumerate_moves(cur, data, insert_values=insert_values,
                                         use_macros=use_macros):
            if nxt.key() == tkey:
                found = move
                break
        if found is None:
            raise PreconditionViolated("consecutive states are not one move apart")
        moves.append(found)
        cur = apply_move(cur, found, data, validate=True).canonical()
    return Certificate(states[0].canonical(), cur, tuple(moves))


# ---------------------------------------------------------------------------
# Search


class _Frontier:
    """Visited set + heap; priority maps (word, depth) to a sortable key."""

    def __init__(self, start: Nanoword, priority):
        self.priority = priority
        self.parents: dict = {start.key(): (None, None)}
        self.words: dict = {start.key(): start}
        self.depths: dict = {start.key(): 0}
        self.heap = [(priority(start, 0), start.key())]

    def push(self, w: Nanoword, parent_key, move):
        k = w.key()
        if k in self.parents:
            return
        d = self.depths[parent_key] + 1
        self.parents[k] = (parent_key, move)
        self.words[k] = w
        self.depths[k] = d
        heapq.heappush(self.heap, (self.priority(w, d), k))

    def pop(self):
        if not self.heap:
            return None, None
        _, k = heapq.heappop(self.heap)
        return self.words[k], k

    def trace(self, key) -> list[Move]:
        moves = []
        while True:
            parent, move = self.parents[key]
            if parent is None:
                return list(reversed(moves))
            moves.append(move)
            key = parent


def _greedy(w, depth):
    return (len(w.word), depth, w.key())


def _breadth(w, depth):
    return (depth, len(w.word), w.key())


def _contract_pass(start, data, max_length, max_states, insert_values, use_macros):
    front = _Frontier(start, _greedy)
    while len(front.parents) < max_states:
        cur, key = front.pop()
        if cur is None:
            return None
        for move, nxt in enumerate_moves(cur, data, insert_values=insert_values,
                                         max_length=max_length, use_macros=use_macros):
            if not nxt.word:
                return Certificate(start, nxt, tuple(front.trace(key) + [move]))
            front.push(nxt, key, move)
    return None


def search_contractible(w: Nanoword, data: HomotopyData, max_length: int,
                        max_states: int, insert_values=None,
                        use_macros: bool = True) -> Certificate | None:
    """Certificate that w is homotopic to the empty nanoword, or None (Unknown).

    None never means non-contractible; it means the budget ran out.
    ``max_states`` caps the visited set (canonical forms seen), which keeps
    run time proportional to the budget.  A first pass uses only non-growing
    moves (worked contractions rarely need insertions once the derived
    macros are available); insertions join in a second pass.
    """
    if max_states <= 0:
        raise BudgetInvalid("max_states must be positive")
    if max_length < len(w):
        raise BudgetInvalid("max_length below the input length")
    start = w.canonical()
    if not start.word:
        return Certificate(start, start, ())
    cert = _contract_pass(start, data, max_length, min(max_states, 50000),
                          (), use_macros)
    if cert is not None:
        return cert
    if insert_values == ():
        return None
    return _contract_pass(start, data, max_length, max_states,
                          insert_values, use_macros)


def search_homotopic(w1: Nanoword, w2: Nanoword, data: HomotopyData,
                     max_length: int, max_states: int, insert_values=None,
                     use_macros: bool = True) -> Certificate | None:
    """Bidirectional breadth-first meet-in-the-middle search for w1 ~ w2."""
    if max_states <= 0:
        raise BudgetInvalid("max_states must be positive")
    if max_length < max(len(w1), len(w2)):
        raise BudgetInvalid("max_length below an input length")
    s1, s2 = w1.canonical(), w2.canonical()
    if s1.key() == s2.key():
        return Certificate(s1, s2, ())

    f1 = _Frontier(s1, _breadth)
    f2 = _Frontier(s2, _breadth)

    def build(meet_key):
        fwd = f1.trace(meet_key)
        back = f2.trace(meet_key)
        return Certificate(s1, s2, tuple(fwd + [invert_move(m) for m in reversed(back)]))

    while len(f1.parents) + len(f2.parents) < max_states:
        side, other = (f1, f2) if len(f1.heap) <= len(f2.heap) else (f2, f1)
        if not side.heap:
            side, other = other, side
        cur, key = side.pop()
        if cur is None:
            return None
        for move, nxt in enumerate_moves(cur, data, insert_values=insert_values,
                                         max_length=max_length, use_macros=use_macros):
            side.push(nxt, key, move)
            if nxt.key() in other.parents:
                return build(nxt.key())
    return None


def norm_upper_bound(w: Nanoword, data: HomotopyData, max_states: int,
                     max_length: int | None = None, insert_values=None,
                     use_macros: bool = True) -> int:
    """min(length)/2 over every state reached in budget; at least the norm."""
    if max_states <= 0:
        raise BudgetInvalid("max_states must be positive")
    if max_length is None:
        max_length = len(w) + 4
    start = w.canonical()
    best = len(start.word)
    front = _Frontier(start, _greedy)
    while len(front.parents) < max_states and best > 0:
        cur, key = front.pop()
        if cur is None:
            break
        best = min(best, len(cur.word))
        for move, nxt in enumerate_moves(cur, data, insert_values=insert_values,
                                         max_length=max_length, use_macros=use_macros):
            best = min(best, len(nxt.word))
            front.push(nxt, key, move)
    return best // 2

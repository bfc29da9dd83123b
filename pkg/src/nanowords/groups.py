"""Normal-form arithmetic in the groups and rings attached to an alphabet.

Five groups appear:

* ``pi``      -- abelian, generators {a} with a tau(a) = 1; so Z^k x (Z/2)^l.
* ``Pi``      -- free product: generators z_a with z_a z_tau(a) = 1.
* ``Pi'``     -- quotient of Pi by z_a^2 = 1 (one involution per orbit).
* ``Pi~``     -- central extension of Pi in which c_a = z_a z_tau(a) is
                 central instead of trivial.
* ``Psi``     -- generators a, a. with a a. = a. a and a tau(a) = a. tau(a). = 1;
                 a free product of one abelian block (Z^2 or (Z/2)^2) per orbit.

Group-ring elements over any of them are finite integer-coefficient maps.
Everything is stored on the orientation basis: a generator outside alpha0
enters as exponent -1 (respectively bit 1) of its orbit representative.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import AlphabetMismatch
from .intlinalg import solve_integer
from .words import Alphabet


def _check_same(x, y):
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch("operands live over different alphabets")


# ---------------------------------------------------------------------------
# pi: the abelian quotient


class PiElement:
    """Element of pi on the orientation basis: one exponent per orbit.

    Free orbits carry a Z exponent, fixed points a Z/2 bit.
    """

    __slots__ = ("alphabet", "exps")

    def __init__(self, alphabet: Alphabet, exps: Iterable[int]):
        self.alphabet = alphabet
        norm = []
        for i, e in enumerate(exps):
            norm.append(e % 2 if alphabet.orbit_is_fixed(i) else e)
        self.exps = tuple(norm)
        assert len(self.exps) == len(alphabet.orbits)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "PiElement":
        return cls(alphabet, [0] * len(alphabet.orbits))

    @classmethod
    def generator(cls, alphabet: Alphabet, a: str) -> "PiElement":
        exps = [0] * len(alphabet.orbits)
        i = alphabet.orbit_index(a)
        exps[i] = 1 if (alphabet.rep(a) == a or alphabet.is_fixed(a)) else -1
        return cls(alphabet, exps)

    def __mul__(self, other: "PiElement") -> "PiElement":
        _check_same(self, other)
        return PiElement(self.alphabet, [x + y for x, y in zip(self.exps, other.exps)])

    def inverse(self) -> "PiElement":
        return PiElement(self.alphabet, [-x for x in self.exps])

    def __pow__(self, n: int) -> "PiElement":
        return PiElement(self.alphabet, [n * x for x in self.exps])

    def bar(self) -> "PiElement":
        """The involution sending every element to its inverse (= tau_*)."""
        return self.inverse()

    def is_identity(self) -> bool:
        return not any(self.exps)

    def degree(self) -> int:
        """Word length in the generators {a}: |free exponents| + fixed bits."""
        return sum(abs(e) for e in self.exps)

    def sort_key(self):
        return self.exps

    def __eq__(self, other):
        return isinstance(other, PiElement) and self.exps == other.exps \
            and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"pi[{format_pi(self)}]"


def format_pi(x: PiElement) -> str:
    parts = []
    for i, e in enumerate(x.exps):
        if not e:
            continue
        r = x.alphabet.orbit_rep(i)
        parts.append(r if e == 1 else f"{r}^{e}")
    return " ".join(parts) or "1"


def parse_pi(alphabet: Alphabet, text: str) -> PiElement:
    """Parse ``a^2 b`` or condensed ``ab`` (single-char letters) into pi."""
    out = PiElement.identity(alphabet)
    for token in text.replace(",", " ").split():
        if token == "1":
            continue
        if "^" in token:
            name, _, exp = token.partition("^")
            out = out * (PiElement.generator(alphabet, name) ** int(exp))
        elif token in alphabet:
            out = out * PiElement.generator(alphabet, token)
        else:
            for ch in token:
                out = out * PiElement.generator(alphabet, ch)
    return out


# ---------------------------------------------------------------------------
# Pi and Pi': free products


class PiWord:
    """Reduced word in Pi (or Pi' when ``primed``) as alternating syllables.

    A syllable (orbit, e) means z_r^e for the orientation representative r of
    that orbit.  In Pi, fixed-point orbits have e = 1; in Pi' every orbit is
    an involution, so all exponents are 1.
    """

    __slots__ = ("alphabet", "syllables", "primed")

    def __init__(self, alphabet: Alphabet, syllables: Iterable[tuple[int, int]] = (),
                 primed: bool = False):
        self.alphabet = alphabet
        self.primed = primed
        self.syllables = self._reduce(tuple(syllables))

    def _torsion(self, orbit: int) -> bool:
        return self.primed or self.alphabet.orbit_is_fixed(orbit)

    def _reduce(self, syllables):
        out: list[list[int]] = []
        for orbit, e in syllables:
            e = e % 2 if self._torsion(orbit) else e
            if not e:
                continue
            while out and out[-1][0] == orbit:
                if self._torsion(orbit):
                    e = (out[-1][1] + e) % 2
                else:
                    e = out[-1][1] + e
                out.pop()
                if not e:
                    break
            else:
                out.append([orbit, e])
                continue
            if e:
                out.append([orbit, e])
        return tuple((o, e) for o, e in out)

    @classmethod
    def identity(cls, alphabet: Alphabet, primed: bool = False) -> "PiWord":
        return cls(alphabet, (), primed)

    @classmethod
    def generator(cls, alphabet: Alphabet, a: str, primed: bool = False) -> "PiWord":
        i = alphabet.orbit_index(a)
        e = 1 if (alphabet.rep(a) == a or alphabet.is_fixed(a)) else -1
        return cls(alphabet, ((i, e),), primed)

    def __mul__(self, other: "PiWord") -> "PiWord":
        _check_same(self, other)
        if self.primed != other.primed:
            raise AlphabetMismatch("cannot mix Pi and Pi' words")
        return PiWord(self.alphabet, self.syllables + other.syllables, self.primed)

    def inverse(self) -> "PiWord":
        inv = tuple((o, e if self._torsion(o) else -e) for o, e in reversed(self.syllables))
        return PiWord(self.alphabet, inv, self.primed)

    def __pow__(self, n: int) -> "PiWord":
        base = self if n >= 0 else self.inverse()
        out = PiWord.identity(self.alphabet, self.primed)
        for _ in range(abs(n)):
            out = out * base
        return out

    def tau_star(self) -> "PiWord":
        """The automorphism z_a -> z_tau(a)."""
        return PiWord(self.alphabet,
                      tuple((o, e if self._torsion(o) else -e) for o, e in self.syllables),
                      self.primed)

    def to_prime(self) -> "PiWord":
        return PiWord(self.alphabet, self.syllables, primed=True)

    def abelianized(self) -> PiElement:
        """Image in pi = Pi / [Pi, Pi]."""
        exps = [0] * len(self.alphabet.orbits)
        for o, e in self.syllables:
            exps[o] += e
        return PiElement(self.alphabet, exps)

    def is_identity(self) -> bool:
        return not self.syllables

    def sort_key(self):
        return self.syllables

    def __eq__(self, other):
        return (isinstance(other, PiWord) and self.primed == other.primed
                and self.syllables == other.syllables and self.alphabet == other.alphabet)

    def __hash__(self):
        return hash((self.primed, self.syllables))

    def __repr__(self):
        return f"Pi{'~prime' if self.primed else ''}[{format_pi_word(self)}]"


def format_pi_word(x: PiWord) -> str:
    parts = []
    for o, e in x.syllables:
        r = x.alphabet.orbit_rep(o)
        parts.append(f"z_{r}" if e == 1 else f"z_{r}^{e}")
    return " ".join(parts) or "1"


# ---------------------------------------------------------------------------
# Pi~: the central extension


class PiTildeElement:
    """Element of Pi~ as (central vector over orbits, reduced Pi word).

    Multiplication reduces the base words in Pi and adds one central unit per
    cancelled pair z_a z_tau(a) (and per collapse z_a z_a = 1 at a fixed
    point).  With this bookkeeping c_a = z_a z_tau(a) is central and the
    projection to Pi is the plain base product; associativity is covered by
    property tests since the construction is ours, not the source theory's.
    """

    __slots__ = ("alphabet", "central", "word")

    def __init__(self, alphabet: Alphabet, central: Iterable[int], word: PiWord):
        self.alphabet = alphabet
        self.central = tuple(central)
        self.word = word
        assert not word.primed and len(self.central) == len(alphabet.orbits)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "PiTildeElement":
        return cls(alphabet, [0] * len(alphabet.orbits), PiWord.identity(alphabet))

    @classmethod
    def generator(cls, alphabet: Alphabet, a: str) -> "PiTildeElement":
        return cls(alphabet, [0] * len(alphabet.orbits), PiWord.generator(alphabet, a))

    def __mul__(self, other: "PiTildeElement") -> "PiTildeElement":
        _check_same(self, other)
        al = self.alphabet
        central = [x + y for x, y in zip(self.central, other.central)]
        stack = [list(s) for s in self.word.syllables]
        for orbit, e in other.word.syllables:
            while stack and stack[-1][0] == orbit:
                o, e0 = stack.pop()
                if al.orbit_is_fixed(orbit):
                    # e0 = e = 1; the pair collapses and contributes a c
                    central[orbit] += 1
                    e = 0
                else:
                    if e0 * e < 0:
                        central[orbit] += min(abs(e0), abs(e))
                    e = e0 + e
                if not e:
                    break
            else:
                if e:
                    stack.append([orbit, e])
                continue
            if e:
                stack.append([orbit, e])
        word = PiWord(al, tuple((o, e) for o, e in stack))
        assert word.syllables == tuple((o, e) for o, e in stack), "base was already reduced"
        return PiTildeElement(al, central, word)

    def inverse(self) -> "PiTildeElement":
        # s(x) s(x^-1) = c^L(x) with L counting letters per orbit
        length = [0] * len(self.alphabet.orbits)
        for o, e in self.word.syllables:
            length[o] += abs(e)
        central = [-c - l for c, l in zip(self.central, length)]
        return PiTildeElement(self.alphabet, central, self.word.inverse())

    def project(self) -> PiWord:
        return self.word

    def is_identity(self) -> bool:
        return self.word.is_identity() and not any(self.central)

    def sort_key(self):
        return (self.central, self.word.syllables)

    def __eq__(self, other):
        return (isinstance(other, PiTildeElement) and self.central == other.central
                and self.word == other.word)

    def __hash__(self):
        return hash((self.central, self.word))

    def __repr__(self):
        return f"Pi~[{format_pi_tilde(self)}]"


def format_pi_tilde(x: PiTildeElement) -> str:
    parts = []
    for i, c in enumerate(x.central):
        if c:
            r = x.alphabet.orbit_rep(i)
            parts.append(f"c_{r}" if c == 1 else f"c_{r}^{c}")
    base = format_pi_word(x.word)
    if base != "1":
        parts.append(base)
    return " ".join(parts) or "1"


# ---------------------------------------------------------------------------
# Psi and its abelianization


class PsiElement:
    """Reduced word in Psi: alternating syllables (orbit, e, e_bullet).

    Each orbit contributes an abelian block generated by r and r. (bullet);
    free orbits give Z^2 blocks, fixed points (Z/2)^2 blocks.  A syllable is
    r^e r.^eb with (e, eb) != (0, 0) and adjacent syllables in distinct
    orbits.
    """

    __slots__ = ("alphabet", "syllables")

    def __init__(self, alphabet: Alphabet, syllables: Iterable[tuple[int, int, int]] = ()):
        self.alphabet = alphabet
        out: list[list[int]] = []
        for orbit, e, eb in syllables:
            if alphabet.orbit_is_fixed(orbit):
                e, eb = e % 2, eb % 2
            if not (e or eb):
                continue
            while out and out[-1][0] == orbit:
                o, e0, eb0 = out.pop()
                if alphabet.orbit_is_fixed(orbit):
                    e, eb = (e0 + e) % 2, (eb0 + eb) % 2
                else:
                    e, eb = e0 + e, eb0 + eb
                if not (e or eb):
                    break
            else:
                out.append([orbit, e, eb])
                continue
            if e or eb:
                out.append([orbit, e, eb])
        self.syllables = tuple((o, e, eb) for o, e, eb in out)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "PsiElement":
        return cls(alphabet)

    @classmethod
    def generator(cls, alphabet: Alphabet, a: str, bullet: bool = False) -> "PsiElement":
        i = alphabet.orbit_index(a)
        e = 1 if (alphabet.rep(a) == a or alphabet.is_fixed(a)) else -1
        return cls(alphabet, ((i, 0, e) if bullet else (i, e, 0),))

    def __mul__(self, other: "PsiElement") -> "PsiElement":
        _check_same(self, other)
        return PsiElement(self.alphabet, self.syllables + other.syllables)

    def inverse(self) -> "PsiElement":
        return PsiElement(self.alphabet,
                          tuple((o, -e, -eb) for o, e, eb in reversed(self.syllables)))

    def __pow__(self, n: int) -> "PsiElement":
        base = self if n >= 0 else self.inverse()
        out = PsiElement.identity(self.alphabet)
        for _ in range(abs(n)):
            out = out * base
        return out

    def reverse(self) -> "PsiElement":
        """Anti-automorphism reading the monomial right to left (iota)."""
        return PsiElement(self.alphabet, tuple(reversed(self.syllables)))

    def kappa(self) -> "PsiElement":
        """Anti-automorphism swapping a <-> a. letterwise."""
        return PsiElement(self.alphabet,
                          tuple((o, eb, e) for o, e, eb in reversed(self.syllables)))

    def tau_sharp(self) -> "PsiElement":
        """Automorphism a -> tau(a), a. -> tau(a). ."""
        return PsiElement(self.alphabet,
                          tuple((o, -e, -eb) for o, e, eb in self.syllables))

    def deg(self) -> int:
        """Occurrences of bullet-free generators, with multiplicity."""
        return sum(abs(e) for _, e, _ in self.syllables)

    def deg_bullet(self) -> int:
        return sum(abs(eb) for _, _, eb in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def sort_key(self):
        return self.syllables

    def __eq__(self, other):
        return isinstance(other, PsiElement) and self.syllables == other.syllables \
            and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.syllables)

    def __repr__(self):
        return f"Psi[{format_psi(self)}]"


def format_psi(x: PsiElement, sep: str = " ") -> str:
    parts = []
    for o, e, eb in x.syllables:
        r = x.alphabet.orbit_rep(o)
        if e:
            parts.append(r if e == 1 else f"{r}^{e}")
        if eb:
            parts.append(f"{r}." if eb == 1 else f"{r}.^{eb}")
    return sep.join(parts) or "1"


class PsiAbElement:
    """Monomial of the commutative quotient Psi^ab: exponent pairs per orbit."""

    __slots__ = ("alphabet", "exps")

    def __init__(self, alphabet: Alphabet, exps: Iterable[tuple[int, int]]):
        self.alphabet = alphabet
        norm = []
        for i, (e, eb) in enumerate(exps):
            if alphabet.orbit_is_fixed(i):
                e, eb = e % 2, eb % 2
            norm.append((e, eb))
        self.exps = tuple(norm)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "PsiAbElement":
        return cls(alphabet, [(0, 0)] * len(alphabet.orbits))

    @classmethod
    def generator(cls, alphabet: Alphabet, a: str, bullet: bool = False) -> "PsiAbElement":
        exps = [[0, 0] for _ in alphabet.orbits]
        i = alphabet.orbit_index(a)
        e = 1 if (alphabet.rep(a) == a or alphabet.is_fixed(a)) else -1
        exps[i][1 if bullet else 0] = e
        return cls(alphabet, [tuple(p) for p in exps])

    def __mul__(self, other: "PsiAbElement") -> "PsiAbElement":
        _check_same(self, other)
        return PsiAbElement(self.alphabet,
                            [(e1 + e2, b1 + b2)
                             for (e1, b1), (e2, b2) in zip(self.exps, other.exps)])

    def inverse(self) -> "PsiAbElement":
        return PsiAbElement(self.alphabet, [(-e, -b) for e, b in self.exps])

    def __pow__(self, n: int) -> "PsiAbElement":
        return PsiAbElement(self.alphabet, [(n * e, n * b) for e, b in self.exps])

    def bar(self) -> "PsiAbElement":
        return self.inverse()

    tau_sharp = bar

    def reverse(self) -> "PsiAbElement":
        return self  # reversal is trivial in a commutative quotient

    def is_identity(self) -> bool:
        return not any(e or b for e, b in self.exps)

    def sort_key(self):
        return self.exps

    def __eq__(self, other):
        return isinstance(other, PsiAbElement) and self.exps == other.exps \
            and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Psi^ab[{format_psi_ab(self)}]"


def format_psi_ab(x: PsiAbElement) -> str:
    parts = []
    for i, (e, eb) in enumerate(x.exps):
        r = x.alphabet.orbit_rep(i)
        if e:
            parts.append(r if e == 1 else f"{r}^{e}")
        if eb:
            parts.append(f"{r}." if eb == 1 else f"{r}.^{eb}")
    return " ".join(parts) or "1"


def psi_abelianize(x: PsiElement) -> PsiAbElement:
    exps = [[0, 0] for _ in x.alphabet.orbits]
    for o, e, eb in x.syllables:
        exps[o][0] += e
        exps[o][1] += eb
    return PsiAbElement(x.alphabet, [tuple(p) for p in exps])


# ---------------------------------------------------------------------------
# Group rings


class GroupRingElement:
    """Finite integer combination of group normal forms (any group above)."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping | None = None):
        self.alphabet = alphabet
        self.terms = {}
        if terms:
            for g, c in terms.items():
                if c:
                    self.terms[g] = self.terms.get(g, 0) + c
            self.terms = {g: c for g, c in self.terms.items() if c}

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "GroupRingElement":
        return cls(alphabet)

    @classmethod
    def of(cls, g, coeff: int = 1) -> "GroupRingElement":
        return cls(g.alphabet, {g: coeff})

    def __add__(self, other):
        _check_same(self, other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GroupRingElement(self.alphabet, out)

    def __neg__(self):
        return GroupRingElement(self.alphabet, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.alphabet, {g: c * other for g, c in self.terms.items()})
        _check_same(self, other)
        out: dict = {}
        for g, c in self.terms.items():
            for h, d in other.terms.items():
                gh = g * h
                out[gh] = out.get(gh, 0) + c * d
        return GroupRingElement(self.alphabet, out)

    __rmul__ = __mul__

    def map_terms(self, fn) -> "GroupRingElement":
        """Apply a group map termwise (linear extension)."""
        out: dict = {}
        for g, c in self.terms.items():
            h = fn(g)
            out[h] = out.get(h, 0) + c
        return GroupRingElement(self.alphabet, out)

    def reduce_mod(self, m: int) -> "GroupRingElement":
        return GroupRingElement(self.alphabet, {g: c % m for g, c in self.terms.items()})

    def aug(self) -> int:
        """Sum of coefficients."""
        return sum(self.terms.values())

    def coeff(self, g) -> int:
        return self.terms.get(g, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms, key=lambda g: g.sort_key())

    def key(self):
        return tuple((g.sort_key(), c) for g, c in
                     sorted(self.terms.items(), key=lambda t: t[0].sort_key()))

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms \
            and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"Ring[{format_ring(self)}]"


def ring_one(alphabet: Alphabet, identity) -> GroupRingElement:
    return GroupRingElement.of(identity)


def format_ring(x: GroupRingElement, fmt=None) -> str:
    """Signed sum in lexicographic term order, e.g. ``2·b^-1 - b``."""
    if x.is_zero():
        return "0"
    if fmt is None:
        sample = next(iter(x.terms))
        fmt = {PiElement: format_pi, PiWord: format_pi_word,
               PsiElement: format_psi, PsiAbElement: format_psi_ab}[type(sample)]
    parts = []
    for g in x.support():
        c = x.terms[g]
        mono = fmt(g)
        if mono == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}·{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Subgroups of pi


class SubgroupOfPi:
    """Subgroup of pi given by generators; membership is exact.

    The problem lifts to Z^(k+l): torsion coordinates get auxiliary columns
    2 e_i, after which membership is integer solvability of a linear system.
    """

    def __init__(self, alphabet: Alphabet, generators: Iterable[PiElement] = ()):
        self.alphabet = alphabet
        self.generators = tuple(generators)
        for g in self.generators:
            if g.alphabet != alphabet:
                raise AlphabetMismatch("subgroup generator over a different alphabet")
        n = len(alphabet.orbits)
        cols = [list(g.exps) for g in self.generators]
        for i in alphabet.fixed_orbit_indices:
            col = [0] * n
            col[i] = 2
            cols.append(col)
        # matrix with one row per orbit coordinate
        self._matrix = [[col[r] for col in cols] for r in range(n)] if cols else [[] for _ in range(n)]

    @classmethod
    def whole(cls, alphabet: Alphabet) -> "SubgroupOfPi":
        return cls(alphabet, [PiElement.generator(alphabet, a) for a in alphabet.orientation])

    @classmethod
    def trivial(cls, alphabet: Alphabet) -> "SubgroupOfPi":
        return cls(alphabet, ())

    def contains(self, x: PiElement) -> bool:
        if x.alphabet != self.alphabet:
            raise AlphabetMismatch("membership test across alphabets")
        if not self._matrix or not self._matrix[0]:
            return x.is_identity()
        return solve_integer(self._matrix, list(x.exps))

    def __repr__(self):
        gens = ", ".join(format_pi(g) for g in self.generators) or "1"
        return f"SubgroupOfPi<{gens}>"


def subgroup_contains(h: SubgroupOfPi, x: PiElement) -> bool:
    return h.contains(x)

"""The monomorphism into 1-pure braids and its inverse by coset rewriting.

The type-A group splits into n+1 cosets of the 1-pure subgroup, represented
by the braids a_0..a_n.  Rewriting a 1-pure word over that transversal
(Schreier style) expresses it, letter by letter, as a product of short
1-pure pieces a_c^-1 . letter . a_c', each of which is matched to a short
type-B word by bounded search and certified by the Garside engine when the
table is built.  A failed entry would mean a convention bug somewhere, so it
raises instead of being patched over.
"""

from __future__ import annotations

import itertools

from .garside import equal
from .words import (
    TYPE_A,
    TYPE_B,
    BraidWord,
    coset_rep,
    inverse,
    is_one_pure,
    permutation_of,
    type_a,
    type_b,
    word,
)


def eta(x: BraidWord) -> BraidWord:
    """Letterwise image in the type-A group: t_1 -> s_1^2, t_i -> s_i for i >= 2."""
    if x.group.kind != TYPE_B:
        raise ValueError("eta expects a type-B word")
    out: list[int] = []
    for letter in x.letters:
        if abs(letter) == 1:
            out.extend((1, 1) if letter > 0 else (-1, -1))
        else:
            out.append(letter)
    return BraidWord(type_a(x.group.rank), tuple(out))


def coset_index(y: BraidWord) -> int:
    """The unique i in [0, n] with y . a_i 1-pure; equals pi_y(1) - 1."""
    if y.group.kind != TYPE_A:
        raise ValueError("coset_index expects a type-A word")
    return permutation_of(y).apply(1) - 1


class RewritingTable:
    """Per-rank table (coset, signed letter) -> (type-B subword, next coset)."""

    MAX_SUBWORD_LEN = 6

    def __init__(self, n: int):
        self.n = n
        self.entries: dict[tuple[int, int], tuple[tuple[int, ...], int]] = {}
        self._build()

    def _next_index(self, c: int, letter: int) -> int:
        # track where strand 1 of the growing prefix sits: position c+1 before
        # the letter, moved by the letter's transposition
        i = abs(letter)
        if c + 1 == i:
            return c + 1
        if c + 1 == i + 1:
            return c - 1
        return c

    def _target(self, c: int, letter: int, c_next: int) -> BraidWord:
        a_c = coset_rep(c, self.n)
        a_next = coset_rep(c_next, self.n)
        return inverse(a_c) * word(a_c.group, (letter,)) * a_next

    def _analytic_entry(self, c: int, letter: int) -> tuple[int, ...]:
        """Closed-form subword for the entry (c, letter); certified afterwards.

        Conjugating a generator across the transversal braid either leaves it
        alone, shifts its index up by one, cancels it outright, or (when the
        tracked strand is crossed) produces a conjugate of the fat generator
        by a descending chain of the others.
        """
        j, sign = abs(letter), 1 if letter > 0 else -1
        if j >= c + 2:
            return (sign * j,)
        if j <= c - 1:
            return (sign * (j + 1),)
        if j == c + 1:
            if sign < 0:
                return ()
            chain = tuple(range(c + 1, 1, -1))
            return chain + (1,) + tuple(-x for x in reversed(chain))
        # j == c
        if sign > 0:
            return ()
        chain = tuple(range(c, 1, -1))
        return chain + (-1,) + tuple(-x for x in reversed(chain))

    def _search_preimage(self, target: BraidWord) -> tuple[int, ...]:
        target_perm = permutation_of(target)
        alphabet = [s * i for i in range(1, self.n + 1) for s in (1, -1)]
        gb = type_b(self.n)
        for length in range(self.MAX_SUBWORD_LEN + 1):
            for cand in itertools.product(alphabet, repeat=length):
                t = BraidWord(gb, cand)
                image = eta(t)
                if permutation_of(image) != target_perm:
                    continue
                if equal(image, target):
                    return cand
        raise RuntimeError(
            f"no short preimage for coset entry with target {target.letters} "
            f"at rank {self.n}; this indicates a convention bug"
        )

    def _build(self):
        gb = type_b(self.n)
        for c in range(self.n + 1):
            for i in range(1, self.n + 1):
                for letter in (i, -i):
                    c_next = self._next_index(c, letter)
                    target = self._target(c, letter, c_next)
                    sub = self._analytic_entry(c, letter)
                    if not equal(eta(BraidWord(gb, sub)), target):
                        sub = self._search_preimage(target)
                    self.entries[(c, letter)] = (sub, c_next)

    def step(self, c: int, letter: int) -> tuple[tuple[int, ...], int]:
        return self.entries[(c, letter)]


_tables: dict[int, RewritingTable] = {}


def rewriting_table(n: int) -> RewritingTable:
    if n not in _tables:
        _tables[n] = RewritingTable(n)
    return _tables[n]


def build_rewriting_table(n: int) -> RewritingTable:
    """Public alias: tables are cached per rank, so building twice is free."""
    return rewriting_table(n)


def eta_inverse(y: BraidWord) -> BraidWord:
    """Preimage of a 1-pure type-A word, via the rewriting table."""
    if y.group.kind != TYPE_A:
        raise ValueError("eta_inverse expects a type-A word")
    if not is_one_pure(y):
        raise ValueError("eta_inverse is only defined on 1-pure words")
    table = rewriting_table(y.group.rank)
    out: list[int] = []
    c = 0
    for letter in y.letters:
        sub, c = table.step(c, letter)
        for x in sub:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    assert c == 0, "rewriting of a 1-pure word must close at the trivial coset"
    return BraidWord(type_b(y.group.rank), tuple(out))


def psi(y: BraidWord) -> BraidWord:
    """Quasi-inverse of eta: rewrite y pushed into the 1-pure subgroup."""
    i = coset_index(y)
    return eta_inverse(y * coset_rep(i, y.group.rank))

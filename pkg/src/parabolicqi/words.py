"""Braid words over the two path-shaped Coxeter graphs (types A and B).

Elements of both groups are plain signed-generator sequences; all group-level
reasoning (equality, membership) lives in `garside`.  This module only knows
about free-word manipulation, symmetric-group images and the handful of named
elements the rest of the package is built from.

Conventions, fixed once here:

* Generators are indexed 1..n.  In type B the edge labeled 4 joins
  generators 1 and 2; all other adjacent pairs are braid-related (label 3).
* A word acts left-to-right, so for concatenated words u.v the symmetric
  group image satisfies perm(u.v) = perm(v) o perm(u).  With this choice
  the transversal braids a_i = s_i ... s_1 send strand i+1 to position 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

TYPE_A = "A"
TYPE_B = "B"


@dataclass(frozen=True)
class GroupType:
    """One of the two Artin-Tits groups handled here: kind 'A' or 'B', rank n >= 2."""

    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in (TYPE_A, TYPE_B):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.rank < 2:
            raise ValueError(f"rank must be >= 2, got {self.rank}")

    @property
    def strands(self) -> int:
        """Number of strands/punctures for the type-A picture (rank + 1)."""
        return self.rank + 1


def type_a(n: int) -> GroupType:
    return GroupType(TYPE_A, n)


def type_b(n: int) -> GroupType:
    return GroupType(TYPE_B, n)


@dataclass(frozen=True)
class BraidWord:
    """A word in the standard generators: letters are nonzero ints, sign = exponent."""

    group: GroupType
    letters: tuple[int, ...]

    def __post_init__(self):
        for x in self.letters:
            if x == 0 or abs(x) > self.group.rank:
                raise ValueError(f"letter {x} out of range for rank {self.group.rank}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.group != self.group:
            raise ValueError("cannot concatenate words over different groups")
        return BraidWord(self.group, self.letters + other.letters)

    def __pow__(self, k: int) -> "BraidWord":
        if k >= 0:
            return BraidWord(self.group, self.letters * k)
        return inverse(self) ** (-k)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(abs(x) for x in self.letters)


def word(group: GroupType, letters=()) -> BraidWord:
    return BraidWord(group, tuple(letters))


def identity(group: GroupType) -> BraidWord:
    return BraidWord(group, ())


def generator(group: GroupType, i: int) -> BraidWord:
    return BraidWord(group, (i,))


def inverse(w: BraidWord) -> BraidWord:
    """Free inverse: reversed letters with flipped signs."""
    return BraidWord(w.group, tuple(-x for x in reversed(w.letters)))


def parse_word(text: str, group: GroupType) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    An empty string is the identity.  Zero tokens and indices beyond the rank
    are rejected.
    """
    letters = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise ValueError(f"malformed token {tok!r}") from None
        if x == 0:
            raise ValueError("zero is not a valid letter")
        if abs(x) > group.rank:
            raise ValueError(f"letter {x} out of range for rank {group.rank}")
        letters.append(x)
    return BraidWord(group, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, .., n+1}; images[p-1] is where the strand starting at p ends."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images is not a bijection of {1..n+1}")

    def apply(self, p: int) -> int:
        return self.images[p - 1]

    def then(self, other: "Permutation") -> "Permutation":
        """self followed by other (matches word concatenation left-to-right)."""
        return Permutation(tuple(other.apply(v) for v in self.images))

    @property
    def is_identity(self) -> bool:
        return all(v == p for p, v in enumerate(self.images, start=1))


def permutation_of(w: BraidWord) -> Permutation:
    """Symmetric-group image of a type-A word (letter signs are irrelevant)."""
    if w.group.kind != TYPE_A:
        raise ValueError("permutation_of expects a type-A word; map type B through eta first")
    n = w.group.rank
    imgs = list(range(n + 2))  # imgs[p] = current image of start position p
    where = list(range(n + 2))  # where[v] = p with imgs[p] == v
    for letter in w.letters:
        i = abs(letter)
        p, q = where[i], where[i + 1]
        imgs[p], imgs[q] = i + 1, i
        where[i], where[i + 1] = q, p
    return Permutation(tuple(imgs[1:]))


def is_one_pure(w: BraidWord) -> bool:
    """True iff the first strand of the type-A braid ends in the first position."""
    return permutation_of(w).apply(1) == 1


def coset_rep(i: int, n: int) -> BraidWord:
    """The transversal braid a_i = s_i s_{i-1} ... s_1 (identity for i = 0)."""
    if not 0 <= i <= n:
        raise ValueError(f"coset representative index {i} outside [0, {n}]")
    return BraidWord(type_a(n), tuple(range(i, 0, -1)))


@dataclass(frozen=True)
class Interval:
    """A proper connected subinterval {m, .., m+k-1} of [n], stored as (min, size)."""

    m: int
    k: int
    rank: int

    def __post_init__(self):
        if self.k < 1 or self.m < 1 or self.m + self.k - 1 > self.rank:
            raise ValueError(f"invalid interval (m={self.m}, k={self.k}) in [{self.rank}]")
        if self.m == 1 and self.k == self.rank:
            raise ValueError(f"interval must be proper (got all of [{self.rank}])")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(range(self.m, self.m + self.k))

    @property
    def max(self) -> int:
        return self.m + self.k - 1

    def shifted(self) -> "Interval":
        """The interval {i+1 : i in I}; requires max(I) < n."""
        return Interval(self.m + 1, self.k, self.rank)

    def __contains__(self, i: int) -> bool:
        return self.m <= i <= self.max


def intervals(n: int) -> list[Interval]:
    """All proper connected subintervals of [n], ordered by min then size."""
    if n < 2:
        raise ValueError("need rank >= 2")
    out = []
    for m in range(1, n + 1):
        for k in range(1, n - m + 2):
            if not (m == 1 and k == n):
                out.append(Interval(m, k, n))
    return out


def tau_of(I: Interval) -> BraidWord:
    """The 1-pure braid moving the tilted curve of I onto the round curve.

    For m > 1 this is the block product (s_m .. s_{m+k-1}) ... (s_2 .. s_{k+1});
    for m = 1 it is the identity.  Every letter index is >= 2.
    """
    letters = []
    for j in range(I.m, 1, -1):
        letters.extend(range(j, j + I.k))
    return BraidWord(type_a(I.rank), tuple(letters))


def shift(w: BraidWord) -> BraidWord:
    """Index shift i -> i+1; defined on words avoiding the top generator."""
    if any(abs(x) >= w.group.rank for x in w.letters):
        raise ValueError("shift undefined: word uses the top generator")
    return BraidWord(w.group, tuple(x + 1 if x > 0 else x - 1 for x in w.letters))


def _pi_word(group: GroupType, a: int, b: int, m: int) -> BraidWord:
    """Alternating product of length m starting with generator a: aba..."""
    letters = tuple(a if t % 2 == 0 else b for t in range(m))
    return BraidWord(group, letters)


def coxeter_label(group: GroupType, i: int, j: int) -> int:
    """Edge label between distinct generators i < j."""
    if j != i + 1:
        return 2
    if group.kind == TYPE_B and i == 1:
        return 4
    return 3


def presentation_relators(group: GroupType) -> list[tuple[BraidWord, BraidWord]]:
    """Defining relations as pairs of equal positive words, one per generator pair."""
    pairs = []
    for i, j in itertools.combinations(range(1, group.rank + 1), 2):
        m = coxeter_label(group, i, j)
        pairs.append((_pi_word(group, i, j, m), _pi_word(group, j, i, m)))
    return pairs

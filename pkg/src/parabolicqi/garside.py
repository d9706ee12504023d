"""Word problem and canonical forms via the left-greedy normal form (type A).

Simples (permutation braids) are stored as 0-based position tuples
p where p[i] is the end position of the strand starting at i; composing
left-to-right matches the word convention in `words`.  Type-B equality and
membership questions are reduced through the monomorphism into the 1-pure
braids, which is sound on parabolic subgroups and on powers of the Garside
element.

The pair-rebalancing step is memoized process-wide; at the desk ranks used
here (n <= 9) the tables stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .words import (
    TYPE_A,
    TYPE_B,
    BraidWord,
    Interval,
    intervals,
    inverse,
    type_a,
    word,
)

Simple = tuple[int, ...]  # a permutation of range(strands), position -> position


def _mul(p: Simple, q: Simple) -> Simple:
    """p followed by q."""
    return tuple(q[x] for x in p)


def _inv(p: Simple) -> Simple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


@lru_cache(maxsize=None)
def _identity(strands: int) -> Simple:
    return tuple(range(strands))


@lru_cache(maxsize=None)
def _half_twist(strands: int) -> Simple:
    return tuple(range(strands - 1, -1, -1))


@lru_cache(maxsize=None)
def _transposition(strands: int, i: int) -> Simple:
    """The simple of the generator with index i (1-based)."""
    p = list(range(strands))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _starting_set(p: Simple) -> frozenset[int]:
    """Generator indices that left-divide the permutation braid p (descents)."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def _finishing_set(p: Simple) -> frozenset[int]:
    """Generator indices that right-divide p (descents of the inverse)."""
    return _starting_set(_inv(p))


def _tau(p: Simple) -> Simple:
    """Conjugation by the half twist: flip positions and values."""
    w0 = _half_twist(len(p))
    return _mul(w0, _mul(p, w0))


_pair_cache: dict[tuple[Simple, Simple], tuple[Simple, Simple]] = {}


def _rebalance(s: Simple, t: Simple) -> tuple[Simple, Simple]:
    """Make the pair (s, t) left-weighted by moving head divisors of t into s."""
    key = (s, t)
    hit = _pair_cache.get(key)
    if hit is not None:
        return hit
    strands = len(s)
    while True:
        moves = _starting_set(t) - _finishing_set(s)
        if not moves:
            break
        for i in sorted(moves):
            ti = _transposition(strands, i)
            s = _mul(s, ti)
            t = _mul(ti, t)
    _pair_cache[key] = (s, t)
    return s, t


def _normalize_factors(factors: list[Simple]) -> list[Simple]:
    """Sweep pair rebalancing until the whole sequence is left-weighted."""
    if not factors:
        return factors
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            s, t = _rebalance(factors[j], factors[j + 1])
            if (s, t) != (factors[j], factors[j + 1]):
                factors[j], factors[j + 1] = s, t
                changed = True
    return factors


@dataclass(frozen=True)
class NormalForm:
    """Left normal form: a power of the half twist followed by left-weighted simples."""

    strands: int
    power: int
    factors: tuple[Simple, ...]

    @property
    def is_trivial(self) -> bool:
        return self.power == 0 and not self.factors

    @property
    def canonical_length(self) -> int:
        return len(self.factors)


def _append_simple(strands: int, power: int, factors: list[Simple], s: Simple) -> int:
    factors.append(s)
    for j in range(len(factors) - 2, -1, -1):
        ns, nt = _rebalance(factors[j], factors[j + 1])
        if (ns, nt) == (factors[j], factors[j + 1]):
            break
        factors[j], factors[j + 1] = ns, nt
    return power


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy normal form of a type-A word."""
    if w.group.kind != TYPE_A:
        raise ValueError("normal_form works on type-A words; reduce type B through eta")
    strands = w.group.strands
    w0 = _half_twist(strands)
    ident = _identity(strands)
    power = 0
    factors: list[Simple] = []
    for letter in w.letters:
        if letter > 0:
            _append_simple(strands, power, factors, _transposition(strands, letter))
        else:
            power -= 1
            factors = [_tau(f) for f in factors]
            _append_simple(strands, power, factors, _mul(w0, _transposition(strands, -letter)))
    _normalize_factors(factors)
    # after rebalancing all half twists sit at the front and identities at the back
    lo = 0
    while lo < len(factors) and factors[lo] == w0:
        lo += 1
    hi = len(factors)
    while hi > lo and factors[hi - 1] == ident:
        hi -= 1
    return NormalForm(strands, power + lo, tuple(factors[lo:hi]))


def _eta_image(w: BraidWord) -> BraidWord:
    if w.group.kind == TYPE_A:
        return w
    from .cosets import eta

    return eta(w)


def equal(u: BraidWord, v: BraidWord) -> bool:
    """Group-element equality; type-B words are compared through their eta-images."""
    if u.group != v.group:
        raise ValueError("cannot compare words over different groups")
    return normal_form(_eta_image(u)) == normal_form(_eta_image(v))


def is_trivial(w: BraidWord) -> bool:
    return normal_form(_eta_image(w)).is_trivial


def simple_word(strands: int, p: Simple) -> BraidWord:
    """A positive word representing the permutation braid p (bubble-sort letters)."""
    q = list(p)
    letters = []
    for _ in range(len(q)):
        done = True
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                letters.append(i + 1)
                q[i], q[i + 1] = q[i + 1], q[i]
                done = False
        if done:
            break
    # each swap precomposes a transposition, so the letters in emission order
    # already spell the braid whose permutation is p
    return word(type_a(strands - 1), letters)


def delta(n: int) -> BraidWord:
    """The half twist of the type-A group of rank n, as the word a_1 a_2 ... a_n."""
    letters: list[int] = []
    for i in range(1, n + 1):
        letters.extend(range(i, 0, -1))
    return word(type_a(n), letters)


def delta_interval(I: Interval) -> BraidWord:
    """The half twist of the standard parabolic generated by the interval I."""
    letters: list[int] = []
    for i in range(1, I.k + 1):
        letters.extend(range(I.m + i - 1, I.m - 1, -1))
    return word(type_a(I.rank), letters)


def delta_B(n: int) -> BraidWord:
    """The type-B Garside element (t_1 ... t_n)^n; certified against the half twist."""
    from .words import type_b

    return word(type_b(n), tuple(range(1, n + 1)) * n)


@lru_cache(maxsize=None)
def _delta_b_certified(n: int) -> bool:
    lhs = _eta_image(delta_B(n))
    rhs = delta(n) * delta(n)
    if not equal(lhs, rhs):
        raise AssertionError(f"type-B Garside word failed its defining identity at rank {n}")
    return True


def _strand_range(p: Simple) -> tuple[int, int]:
    """Smallest window [lo, hi] (1-based strands) outside which p is the identity."""
    lo, hi = len(p) + 1, 0
    for i, x in enumerate(p):
        if x != i:
            lo = min(lo, i + 1)
            hi = max(hi, i + 1)
    return lo, hi


def in_standard_parabolic(w: BraidWord, I: Interval) -> bool:
    """Membership of a type-A word in the standard parabolic subgroup of I.

    After clearing denominators with the central square of the interval's half
    twist, membership is equivalent to being a positive braid whose greedy
    factors only move the strands m..m+k.
    """
    if w.group.kind != TYPE_A:
        raise ValueError("in_standard_parabolic expects a type-A word")
    if I.rank != w.group.rank:
        raise ValueError("interval rank does not match the word")
    nf = normal_form(w)
    shots = max(0, (-nf.power + 1) // 2) + 1
    cleared = (delta_interval(I) ** (2 * shots)) * w
    cnf = normal_form(cleared)
    if cnf.power != 0:
        return False
    for f in cnf.factors:
        lo, hi = _strand_range(f)
        if lo < I.m or hi > I.max + 1:
            return False
    return True


def in_B_parabolic(x: BraidWord, I: Interval) -> bool:
    """Membership of a type-B word in the standard parabolic of I, through eta."""
    if x.group.kind != TYPE_B:
        raise ValueError("in_B_parabolic expects a type-B word")
    return in_standard_parabolic(_eta_image(x), I)


def delta_squared_power(w: BraidWord) -> int | None:
    """The k with w = (Garside element)^(2k), if any."""
    if w.group.kind == TYPE_A:
        nf = normal_form(w)
        if nf.factors or nf.power % 2 != 0:
            return None
        return nf.power // 2
    _delta_b_certified(w.group.rank)
    nf = normal_form(_eta_image(w))
    if nf.factors or nf.power % 4 != 0:
        return None
    return nf.power // 4


def in_P_set(w: BraidWord) -> tuple[bool, Interval | int | None]:
    """Membership in the parabolic-or-central generating set, with a witness.

    Returns (True, Interval) for a parabolic witness, (True, k) for the k-th
    power of the squared Garside element, or (False, None).
    """
    k = delta_squared_power(w)
    if k is not None:
        return True, k
    member = in_standard_parabolic if w.group.kind == TYPE_A else in_B_parabolic
    for I in intervals(w.group.rank):
        if member(w, I):
            return True, I
    return False, None


def in_NP_set(w: BraidWord) -> tuple[bool, Interval | None]:
    """Membership in the normalizer generating set, via curve stabilizers."""
    from .curves import stabilizes

    y = _eta_image(w)
    for I in intervals(w.group.rank):
        if stabilizes(y, I):
            return True, I
    return False, None


def conjugate(w: BraidWord, by: BraidWord) -> BraidWord:
    """The word by^-1 . w . by (free concatenation, no group-level reduction)."""
    return inverse(by) * w * by

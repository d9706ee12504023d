"""Curves in the punctured disk as conjugacy classes of free-group words.

A simple closed curve around a set of punctures is recorded by the loop it
traces in the free group on x_1..x_{n+1} (one generator per puncture), up to
cyclic rotation and inversion.  The braid group acts on the right by the
Artin automorphisms of the free group; the induced action on conjugacy
classes is the curve action, and the raw action on the basis doubles as a
faithful word-problem oracle.

The half-twist substitution has two mutually inverse standard forms; the one
frozen in ACTION_CONVENTION below is the one that reproduces the geometric
picture used throughout (curve transport by the strand permutation, and the
three-case behaviour of the transversal braids on standard curves).  The
calibration tests in the suite pin it down.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    TYPE_A,
    BraidWord,
    Interval,
    coset_rep,
    permutation_of,
    tau_of,
)

# "twist-first": s_i maps x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i.
# The other choice ("twist-last") is its inverse automorphism.
ACTION_CONVENTION = "twist-first"

Letters = tuple[int, ...]


def free_reduce(letters) -> Letters:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(letters) -> Letters:
    w = list(free_reduce(letters))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert_loop(letters) -> Letters:
    return tuple(-x for x in reversed(letters))


def _letter_key(x: int) -> tuple[int, int]:
    # x_1 < x_1^-1 < x_2 < x_2^-1 < ...
    return (abs(x), 0 if x > 0 else 1)


def canonical_loop(letters) -> Letters:
    """Lexicographically least rotation of the cyclic reduction or its inverse."""
    w = cyclic_reduce(letters)
    if not w:
        return ()
    best = None
    for base in (w, invert_loop(w)):
        for r in range(len(base)):
            cand = base[r:] + base[:r]
            key = tuple(_letter_key(x) for x in cand)
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1]


@dataclass(frozen=True)
class Curve:
    """An isotopy class of curves: a canonical cyclic free-group word plus context."""

    rank: int
    loop: Letters

    def __post_init__(self):
        if canonical_loop(self.loop) != self.loop:
            raise ValueError("curve loop is not in canonical form")


def curve(rank: int, letters) -> Curve:
    return Curve(rank, canonical_loop(letters))


def standard_curve(I: Interval) -> Curve:
    """The round curve around punctures m..m+k."""
    return curve(I.rank, tuple(range(I.m, I.m + I.k + 1)))


def _apply_braid_letter(letter: int, loop: Letters) -> Letters:
    """Image of a free-group word under one Artin generator (or its inverse)."""
    i = abs(letter)
    positive = (letter > 0) == (ACTION_CONVENTION == "twist-first")
    out: list[int] = []
    for x in loop:
        a = abs(x)
        if a not in (i, i + 1):
            img = (x,)
        elif positive:
            # x_i -> x_i x_{i+1} x_i^-1 ; x_{i+1} -> x_i
            if a == i:
                img = (i, i + 1, -i) if x > 0 else (i, -(i + 1), -i)
            else:
                img = (i,) if x > 0 else (-i,)
        else:
            # inverse substitution: x_i -> x_{i+1} ; x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            if a == i:
                img = (i + 1,) if x > 0 else (-(i + 1),)
            else:
                img = (-(i + 1), i, i + 1) if x > 0 else (-(i + 1), -i, i + 1)
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def free_images(w: BraidWord) -> tuple[Letters, ...]:
    """Images of the free basis x_1..x_{n+1} under the automorphism of w."""
    if w.group.kind != TYPE_A:
        raise ValueError("the free-group action is defined for type-A words")
    imgs = [(j,) for j in range(1, w.group.strands + 1)]
    for letter in w.letters:
        imgs = [_apply_braid_letter(letter, g) for g in imgs]
    return tuple(imgs)


def act(w: BraidWord, c: Curve) -> Curve:
    """Right action on curves: act(u * v, c) == act(v, act(u, c))."""
    if w.group.kind != TYPE_A:
        raise ValueError("curves carry an action of the type-A group only")
    if w.group.rank != c.rank:
        raise ValueError("rank mismatch between braid and curve")
    loop = c.loop
    for letter in w.letters:
        loop = _apply_braid_letter(letter, loop)
    return Curve(c.rank, canonical_loop(loop))


def transported_punctures(w: BraidWord, c: Curve) -> frozenset[int]:
    """Where the enclosed punctures of c end up under the strand permutation of w."""
    perm = permutation_of(w)
    return frozenset(perm.apply(j) for j in enclosed_punctures(c))


def enclosed_punctures(c: Curve) -> frozenset[int]:
    counts: dict[int, int] = {}
    for x in c.loop:
        counts[abs(x)] = counts.get(abs(x), 0) + (1 if x > 0 else -1)
    return frozenset(j for j, e in counts.items() if e != 0)


def stabilizes(w: BraidWord, I: Interval) -> bool:
    """True iff w fixes the standard curve of I, i.e. normalizes its parabolic."""
    c = standard_curve(I)
    return act(w, c) == c


def curve_prime(I: Interval) -> Curve:
    """The tilted curve: the standard curve of I pushed along a_{m-1}."""
    return act(coset_rep(I.m - 1, I.rank), standard_curve(I))


def action_equal(u: BraidWord, v: BraidWord) -> bool:
    """Faithfulness oracle: equality via the action on the free basis."""
    if u.group != v.group:
        raise ValueError("cannot compare words over different groups")
    return free_images(u) == free_images(v)


def free_support_membership(w: BraidWord, I: Interval) -> bool:
    """Parabolic membership cross-check via the free-group action.

    The automorphism must fix every generator outside the window of I and map
    the window generators to words supported inside the window.
    """
    imgs = free_images(w)
    lo, hi = I.m, I.max + 1
    for j, g in enumerate(imgs, start=1):
        if lo <= j <= hi:
            if any(not lo <= abs(x) <= hi for x in g):
                return False
        elif g != (j,):
            return False
    return True


def curve_for_tau_identity(I: Interval) -> bool:
    """Check that a_{m-1} followed by the block braid of I rounds the curve of I."""
    target = standard_curve(Interval(1, I.k, I.rank))
    moved = act(coset_rep(I.m - 1, I.rank) * tau_of(I), standard_curve(I))
    return moved == target

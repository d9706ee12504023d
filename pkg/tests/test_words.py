"""Word, permutation, and interval layer."""

import pytest
from hypothesis import given, settings, strategies as st

from parabolicqi.words import (
    BraidWord,
    Interval,
    coset_rep,
    format_word,
    generator,
    identity,
    intervals,
    inverse,
    is_one_pure,
    parse_word,
    permutation_of,
    presentation_relators,
    shift,
    tau_of,
    type_a,
    type_b,
    word,
)


def random_letters(rank, max_len=12):
    return st.lists(
        st.integers(min_value=1, max_value=rank).flatmap(
            lambda i: st.sampled_from([i, -i])),
        max_size=max_len,
    ).map(tuple)


def test_group_types():
    a, b = type_a(3), type_b(3)
    assert a.strands == 4
    assert b.strands == 4
    assert a != b
    with pytest.raises(ValueError):
        type_a(0)


def test_word_validation_and_algebra():
    g = type_a(3)
    w = word(g, (1, -2, 3))
    assert len(w) == 3
    assert (w * inverse(w)).letters == (1, -2, 3, -3, 2, -1)
    assert (generator(g, 2) ** -3).letters == (-2, -2, -2)
    assert identity(g).letters == ()
    with pytest.raises(ValueError):
        word(g, (4,))
    with pytest.raises(ValueError):
        word(g, (0,))


def test_parse_format_round_trip():
    g = type_b(4)
    w = parse_word("1 -4 2", g)
    assert w.letters == (1, -4, 2)
    assert format_word(w) == "1 -4 2"
    assert parse_word("", g).letters == ()
    with pytest.raises(ValueError):
        parse_word("5", g)


@settings(deadline=None, max_examples=60)
@given(random_letters(3), random_letters(3))
def test_permutation_homomorphism(ls, ms):
    g = type_a(3)
    u, v = word(g, ls), word(g, ms)
    left = permutation_of(u * v)
    # composition convention: the permutation of a product applies u first
    composed = tuple(permutation_of(v).apply(permutation_of(u).apply(p))
                     for p in range(1, 5))
    assert left.images == composed


def test_coset_rep_sends_strand_home():
    for n in (3, 4, 6):
        for i in range(n + 1):
            a = coset_rep(i, n)
            assert permutation_of(a).apply(i + 1) == 1
            assert len(a) == i


def test_one_pure():
    g = type_a(3)
    assert is_one_pure(identity(g))
    assert is_one_pure(word(g, (2, 3)))
    assert is_one_pure(word(g, (1, 1)))
    assert not is_one_pure(word(g, (1,)))


def test_interval_combinatorics():
    for n in (3, 4, 5, 6):
        assert len(intervals(n)) == n * (n + 1) // 2 - 1
    I = Interval(2, 2, 4)
    assert I.members == (2, 3)
    assert I.max == 3
    assert 2 in I and 4 not in I
    assert I.shifted().members == (3, 4)
    with pytest.raises(ValueError):
        Interval(1, 4, 4)  # not proper
    with pytest.raises(ValueError):
        Interval(3, 3, 4)  # runs off the end


def test_tau_of_is_one_pure():
    for n in (3, 4, 5):
        for I in intervals(n):
            t = tau_of(I)
            assert is_one_pure(t)
            assert all(abs(x) >= 2 for x in t.letters)
    assert tau_of(Interval(1, 2, 4)).letters == ()


def test_shift_letters():
    g = type_a(4)
    assert shift(word(g, (1, -2))).letters == (2, -3)
    with pytest.raises(ValueError):
        shift(word(g, (4,)))


def test_relators_have_matching_permutations():
    from parabolicqi.cosets import eta

    for n in (3, 4):
        for group in (type_a(n), type_b(n)):
            for r1, r2 in presentation_relators(group):
                u = eta(r1) if group.kind == "B" else r1
                v = eta(r2) if group.kind == "B" else r2
                assert permutation_of(u) == permutation_of(v)


def test_words_are_immutable_and_hashable():
    g = type_a(3)
    assert hash(word(g, (1,))) == hash(word(g, (1,)))
    with pytest.raises(AttributeError):
        word(g, (1,)).letters = ()


def test_mixed_group_product_rejected():
    with pytest.raises(ValueError):
        word(type_a(3), (1,)) * word(type_b(3), (1,))

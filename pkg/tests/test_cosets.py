"""The monomorphism, its rewriting table, and the quasi-inverse."""

import pytest
from hypothesis import given, settings, strategies as st

from parabolicqi.cosets import (
    build_rewriting_table,
    coset_index,
    eta,
    eta_inverse,
    psi,
    rewriting_table,
)
from parabolicqi.garside import equal, is_trivial
from parabolicqi.words import (
    coset_rep,
    inverse,
    is_one_pure,
    presentation_relators,
    type_a,
    type_b,
    word,
)


def b_words(rank=3, max_len=10):
    return st.lists(
        st.integers(min_value=1, max_value=rank).flatmap(
            lambda i: st.sampled_from([i, -i])),
        max_size=max_len,
    ).map(lambda ls: word(type_b(rank), ls))


def a_words(rank=3, max_len=10):
    return st.lists(
        st.integers(min_value=1, max_value=rank).flatmap(
            lambda i: st.sampled_from([i, -i])),
        max_size=max_len,
    ).map(lambda ls: word(type_a(rank), ls))


def test_eta_letterwise():
    x = word(type_b(3), (1, -2, 3, -1))
    assert eta(x).letters == (1, 1, -2, 3, -1, -1)
    with pytest.raises(ValueError):
        eta(word(type_a(3), (1,)))


def test_eta_respects_relations():
    for n in (3, 4):
        for r1, r2 in presentation_relators(type_b(n)):
            assert equal(eta(r1), eta(r2))


@settings(deadline=None, max_examples=60)
@given(b_words())
def test_eta_images_are_one_pure(x):
    assert is_one_pure(eta(x))


def test_coset_index_of_transversal():
    for n in (3, 4):
        for i in range(n + 1):
            assert coset_index(inverse(coset_rep(i, n))) == i
            assert coset_index(coset_rep(i, n) * inverse(coset_rep(i, n))) == 0


def test_rewriting_table_entries_certified():
    for n in (3, 4):
        table = rewriting_table(n)
        gb = type_b(n)
        for (c, letter), (sub, c_next) in table.entries.items():
            a_c, a_next = coset_rep(c, n), coset_rep(c_next, n)
            target = inverse(a_c) * word(type_a(n), (letter,)) * a_next
            assert equal(eta(word(gb, sub)), target)
        assert build_rewriting_table(n) is table


@settings(deadline=None, max_examples=80)
@given(b_words())
def test_psi_eta_round_trip(x):
    assert equal(psi(eta(x)), x)
    assert equal(eta_inverse(eta(x)), x)


@settings(deadline=None, max_examples=80)
@given(a_words())
def test_eta_psi_displacement(y):
    i = coset_index(y)
    assert equal(eta(psi(y)), y * coset_rep(i, y.group.rank))


def test_eta_inverse_requires_one_pure():
    with pytest.raises(ValueError):
        eta_inverse(word(type_a(3), (1,)))
    with pytest.raises(ValueError):
        eta_inverse(word(type_b(3), (2,)))


def test_psi_is_retraction_near_identity():
    y = word(type_a(3), ())
    assert is_trivial(psi(y))

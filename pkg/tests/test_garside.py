"""Canonical forms, equality, and generating-set membership."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from parabolicqi.curves import action_equal, free_support_membership
from parabolicqi.garside import (
    NormalForm,
    conjugate,
    delta,
    delta_B,
    delta_interval,
    delta_squared_power,
    equal,
    in_B_parabolic,
    in_NP_set,
    in_P_set,
    in_standard_parabolic,
    is_trivial,
    normal_form,
    simple_word,
)
from parabolicqi.words import (
    Interval,
    coset_rep,
    identity,
    intervals,
    inverse,
    permutation_of,
    presentation_relators,
    type_a,
    type_b,
    word,
)


def signed_words(rank, max_len=10):
    return st.lists(
        st.integers(min_value=1, max_value=rank).flatmap(
            lambda i: st.sampled_from([i, -i])),
        max_size=max_len,
    ).map(lambda ls: word(type_a(rank), ls))


def test_delta_normal_form():
    for n in (2, 3, 4):
        nf = normal_form(delta(n))
        assert nf.power == 1 and nf.factors == ()
        assert normal_form(delta(n) ** -1) == NormalForm(n + 1, -1, ())


def test_negative_generator_normal_form():
    # at rank 2 the inverse of the first generator is the inverse half twist
    # times the permutation braid of s_1 s_2 (multiply back to check)
    nf = normal_form(word(type_a(2), (-1,)))
    assert nf.power == -1
    assert len(nf.factors) == 1
    rebuilt = delta(2) ** -1 * simple_word(3, nf.factors[0])
    assert equal(rebuilt, word(type_a(2), (-1,)))
    assert simple_word(3, nf.factors[0]).letters == (1, 2)


def test_delta_square_is_central():
    for n in (2, 3):
        d2 = delta(n) ** 2
        for i in range(1, n + 1):
            g = word(type_a(n), (i,))
            assert equal(d2 * g, g * d2)


def test_relators_equal_both_types():
    for n in (3, 4):
        for r1, r2 in presentation_relators(type_a(n)):
            assert equal(r1, r2)
        for r1, r2 in presentation_relators(type_b(n)):
            assert equal(r1, r2)


def test_simple_word_round_trip():
    for p in itertools.permutations(range(4)):
        w = simple_word(4, p)
        assert all(x > 0 for x in w.letters)
        assert tuple(x - 1 for x in permutation_of(w).images) == p
        nf = normal_form(w)
        assert nf.power + len(nf.factors) <= 1 or p == (3, 2, 1, 0)


@settings(deadline=None, max_examples=80)
@given(signed_words(3), signed_words(3))
def test_equal_matches_action_oracle(u, v):
    assert equal(u, v) == action_equal(u, v)


@settings(deadline=None, max_examples=80)
@given(signed_words(3))
def test_inverse_cancels(u):
    assert is_trivial(u * inverse(u))
    assert equal(u, u)


def test_membership_examples():
    g = type_a(3)
    I = Interval(1, 2, 3)
    assert in_standard_parabolic(word(g, (1, -2, 1)), I)
    assert not in_standard_parabolic(word(g, (3,)), I)
    # conjugating into the subgroup does not change membership of the element
    assert not in_standard_parabolic(conjugate(word(g, (3,)), word(g, (1,))), I)
    assert in_standard_parabolic(identity(g), I)
    # trivially-reducible use of an outside generator is still a member
    assert in_standard_parabolic(word(g, (3, -3, 1)), I)


@settings(deadline=None, max_examples=100)
@given(signed_words(3, max_len=8), st.sampled_from(intervals(3)))
def test_membership_matches_free_support(w, I):
    assert in_standard_parabolic(w, I) == free_support_membership(w, I)


def test_delta_b_certification_and_powers():
    for n in (3, 4):
        assert equal(delta_B(n) * delta_B(n), delta_B(n) ** 2)
        assert delta_squared_power(delta_B(n) ** 2) == 1
        assert delta_squared_power(delta_B(n)) is None
        assert delta_squared_power(delta(n) ** 4) == 2
        assert delta_squared_power(delta(n)) is None


def test_b_parabolic_membership():
    gb = type_b(3)
    I = Interval(2, 2, 3)
    assert in_B_parabolic(word(gb, (2, -3, 2)), I)
    assert not in_B_parabolic(word(gb, (1,)), I)
    tail = Interval(2, 2, 3)
    assert in_B_parabolic(word(gb, (3, 2, 2, 3)), tail)


def test_p_set_witnesses():
    ga = type_a(3)
    ok, wit = in_P_set(word(ga, (1, 2, -1)))
    assert ok and isinstance(wit, Interval) and wit.members == (1, 2)
    ok, wit = in_P_set(delta(3) ** -4)
    assert ok and wit == -2
    ok, wit = in_P_set(delta(3))
    assert not ok and wit is None
    ok, wit = in_P_set(word(ga, (1, 3)))
    assert not ok


def test_np_set_witnesses():
    ga = type_a(3)
    # the half twist flips the middle curve onto itself
    ok, wit = in_NP_set(delta(3))
    assert ok and wit == Interval(2, 1, 3)
    ok, _ = in_NP_set(coset_rep(3, 3))
    assert not ok
    # parabolic elements always normalize their own parabolic
    ok, _ = in_NP_set(word(ga, (2, -3)))
    assert ok


def test_delta_interval():
    I = Interval(2, 2, 3)
    dI = delta_interval(I)
    assert in_standard_parabolic(dI, I)
    assert equal(dI, word(type_a(3), (2, 3, 2)))


def test_normal_form_rejects_type_b():
    with pytest.raises(ValueError):
        normal_form(word(type_b(3), (1,)))

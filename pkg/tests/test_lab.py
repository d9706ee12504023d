"""Truncated generating sets, BFS norm bounds, and metric reports."""

import pytest

from parabolicqi.garside import delta, delta_B, equal, in_NP_set, in_P_set
from parabolicqi.lab import (
    GeneratorTruncation,
    delta_b_factorization,
    delta_b_p_norm_bound,
    distortion_probe,
    element_key,
    enumerate_generators,
    norm_upper_bound,
    qi_estimate,
    replay_path,
    shortest_path_words,
)
from parabolicqi.words import coset_rep, identity, type_a, type_b, word


def test_truncation_validation():
    with pytest.raises(ValueError):
        GeneratorTruncation("X", type_a(3))


def test_element_key_collapses_words():
    g = type_a(3)
    assert element_key(word(g, (1, 2, 1))) == element_key(word(g, (2, 1, 2)))
    assert element_key(word(g, (1,))) != element_key(word(g, (2,)))


def test_enumerate_generators_length_one():
    t = GeneratorTruncation("P", type_a(3), max_word_len=1, max_delta_power=1)
    gens = enumerate_generators(t)
    keys = {element_key(g) for g in gens}
    # identity, the six signed generators, and the two central powers
    expected = {element_key(identity(type_a(3)))}
    for i in (1, 2, 3):
        expected.add(element_key(word(type_a(3), (i,))))
        expected.add(element_key(word(type_a(3), (-i,))))
    expected.add(element_key(delta(3) ** 2))
    expected.add(element_key(delta(3) ** -2))
    assert keys == expected
    assert all(in_P_set(g)[0] for g in gens)


def test_p_subset_np():
    tp = GeneratorTruncation("P", type_a(3), max_word_len=1)
    tnp = GeneratorTruncation("NP", type_a(3), max_word_len=1)
    kp = {element_key(g) for g in enumerate_generators(tp)}
    knp = {element_key(g) for g in enumerate_generators(tnp)}
    assert kp <= knp
    assert all(in_NP_set(g)[0] for g in enumerate_generators(tnp))


def test_norm_bounds_and_paths():
    t = GeneratorTruncation("NP", type_a(3), max_word_len=2)
    assert norm_upper_bound(identity(type_a(3)), t, radius_cap=2) == 0
    # a generator is itself in the truncated set
    assert norm_upper_bound(word(type_a(3), (1,)), t, radius_cap=2) == 1
    # the transversal braid a_3 normalizes nothing, so its norm is exactly 2
    a3 = coset_rep(3, 3)
    assert not in_NP_set(a3)[0]
    path = shortest_path_words(a3, t, radius_cap=3)
    assert path is not None and len(path) == 2
    assert replay_path(path, a3)


def test_monotone_in_caps():
    g = type_a(3)
    w = word(g, (3, 2, 1, 3, 2, 1))
    small = GeneratorTruncation("P", g, max_word_len=1)
    big = GeneratorTruncation("P", g, max_word_len=2)
    b1 = norm_upper_bound(w, small, radius_cap=4)
    b2 = norm_upper_bound(w, big, radius_cap=4)
    assert b2 is not None and (b1 is None or b2 <= b1)


def test_delta_b_bound_certified():
    for n in (3, 4):
        factors = delta_b_factorization(n)
        prod = identity(type_b(n))
        for f in factors:
            prod = prod * f
        assert equal(prod, delta_B(n))
        assert all(in_P_set(f)[0] for f in factors)
        assert delta_b_p_norm_bound(n) <= len(factors)


def test_qi_estimate_report():
    r = qi_estimate(3, samples=4, seed=1, max_word_len=1, radius_cap=3)
    d = r.to_dict(stable=True)
    assert d["statement"] == "qi-NP"
    assert len(d["records"]) == 4
    assert d["elapsed_ms"] is None
    assert "upper bound" in d["aggregate"]["note"]


def test_distortion_probe_np_never_worse():
    r = distortion_probe(3, powers=2, max_word_len=1, radius_cap=4)
    for rec in r.records:
        if rec["p_bound"] is not None and rec["np_bound"] is not None:
            assert rec["np_bound"] <= rec["p_bound"]
    assert r.records[0] == {"power": 0, "p_bound": 0, "np_bound": 0}

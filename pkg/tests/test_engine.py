import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ulg.diagram import build_chain, builtin, parse_diagram
from ulg.engine import (
    Element, distance, evaluate, identity, inverse, is_reduced, is_right_descent, length,
    multiply, reduced_word, right_descents, right_multiply,
)

A3 = build_chain(3)
A4 = build_chain(4)
D6 = builtin("Dtilde6-paper")
TRI = builtin("Atilde2")
FREE = parse_diagram("vertices: x y z\ninfinite: x-y y-z x-z")

DIAGRAMS = [A3, A4, D6, TRI, FREE, builtin("Dstar4")]


def words(d, max_size=12):
    return st.lists(st.integers(0, d.n - 1), max_size=max_size).map(tuple)


def test_identity_and_generators():
    e = identity(A3)
    assert length(e) == 0
    assert right_descents(e) == []
    s = right_multiply(e, 1)
    assert length(s) == 1
    assert right_descents(s) == [1]
    assert s.matrix() == [[1, 0, 0], [1, -1, 1], [0, 0, 1]]


def test_longest_element_of_s4():
    w0 = evaluate(A3, A3.parse_word("121321"))
    assert length(w0) == 6
    assert right_descents(w0) == [0, 1, 2]


@pytest.mark.parametrize("n", [3, 4])
def test_matrix_length_matches_inversions_on_all_of_sn(n):
    d = build_chain(n)
    for perm in itertools.permutations(range(n + 1)):
        word = oracles.perm_reduced_word(perm)
        assert oracles.perm_of_word(n, word) == perm
        e = evaluate(d, [i - 1 for i in word])
        assert length(e) == oracles.inversions(perm)


def test_matrix_length_on_random_a5_words():
    rng = random.Random(5)
    d = build_chain(5)
    for _ in range(2000):
        word = [rng.randint(1, 5) for _ in range(rng.randint(0, 25))]
        e = evaluate(d, [i - 1 for i in word])
        assert length(e) == oracles.inversions(oracles.perm_of_word(5, word))


@pytest.mark.parametrize("d", DIAGRAMS, ids=str)
def test_relations(d):
    e = identity(d)
    for g in range(d.n):
        assert right_multiply(right_multiply(e, g), g) == e
    for g, h in itertools.combinations(range(d.n), 2):
        m = d.exponent(g, h)
        if m == float("inf"):
            assert length(evaluate(d, (g, h) * 5)) == 10
        else:
            m = int(m)
            assert evaluate(d, (g, h) * m) == e
            # the alternating word of length m is reduced, one letter more is not
            alt = ((g, h) * m)[:m]
            assert length(evaluate(d, alt)) == m
            assert evaluate(d, alt) == evaluate(d, ((h, g) * m)[:m])


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(DIAGRAMS).flatmap(lambda d: st.tuples(st.just(d), words(d))))
def test_reduced_word_and_inverse(case):
    d, word = case
    e = evaluate(d, word)
    rw = reduced_word(e)
    assert evaluate(d, rw) == e
    assert is_reduced(d, rw)
    assert len(rw) <= len(word)
    assert (len(rw) - len(word)) % 2 == 0
    assert multiply(e, inverse(e)) == identity(d)
    assert inverse(e) == evaluate(d, tuple(reversed(word)))
    assert is_reduced(d, word) == (len(rw) == len(word))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DIAGRAMS).flatmap(lambda d: st.tuples(st.just(d), words(d), words(d))))
def test_multiply_and_distance(case):
    d, u, v = case
    eu, ev = evaluate(d, u), evaluate(d, v)
    assert eu * ev == evaluate(d, u + v)
    assert distance(eu, ev) == distance(ev, eu)
    assert distance(eu, eu) == 0
    assert distance(identity(d), ev) == length(ev)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DIAGRAMS).flatmap(lambda d: st.tuples(st.just(d), words(d, 10))))
def test_deletion_property(case):
    """A non-reduced word loses two letters and keeps its value."""
    d, word = case
    if is_reduced(d, word):
        return
    e = evaluate(d, word)
    hits = [
        (i, j) for i in range(len(word)) for j in range(i + 1, len(word))
        if evaluate(d, word[:i] + word[i + 1:j] + word[j + 1:]) == e
    ]
    assert hits


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(DIAGRAMS).flatmap(lambda d: st.tuples(st.just(d), words(d))))
def test_descent_test_matches_length(case):
    d, word = case
    e = evaluate(d, word)
    for g in range(d.n):
        assert is_right_descent(e, g) == (length(right_multiply(e, g)) < length(e))


def test_element_hash_and_key():
    a = evaluate(A3, A3.parse_word("121"))
    b = evaluate(A3, A3.parse_word("212"))
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
    assert a.key == tuple(x for row in a.matrix() for x in row)
    assert a != evaluate(build_chain(4), (0, 1, 0))
    assert isinstance(a, Element)


def test_overflow_is_detected():
    with pytest.raises(OverflowError):
        evaluate(FREE, (0, 1, 2) * 60)


def test_bad_generator():
    with pytest.raises(ValueError):
        evaluate(A3, (3,))
    with pytest.raises(ValueError):
        right_multiply(identity(A3), -1)
    with pytest.raises(ValueError):
        multiply(identity(A3), identity(A4))

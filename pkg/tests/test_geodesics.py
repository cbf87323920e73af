import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ulg.diagram import build_chain, builtin, parse_diagram
from ulg.engine import evaluate, inverse, is_reduced
from ulg.geodesics import (
    IncompleteCensusError, LabelPolynomial, ResourceLimitError, ball_census, format_polynomial,
    generating_series, geodesic_count, is_ulg, parse_polynomial, reduced_words,
    unique_geodesic_elements,
)

A3 = build_chain(3)
D6 = builtin("Dtilde6-paper")
STAR_RA = parse_diagram("vertices: 0 1 2 3\ninfinite: 0-1 0-2 0-3")
PATH_RA = parse_diagram("vertices: 1 2 3 4\ninfinite: 1-2 2-3 3-4")


def test_a3_series_matches_brute_force():
    series = generating_series(ball_census(A3, 6))
    assert series.complete
    assert series.coeffs == oracles.typea_series_by_words(3)
    assert series[(1, 2, 1)] == 4
    assert len(series) == 15


@pytest.mark.parametrize("n", [2, 4, 5])
def test_typea_series_matches_permutation_bfs(n):
    census = ball_census(build_chain(n), n * (n + 1) // 2)
    assert census.complete
    assert census.series == oracles.typea_series_by_permutations(n)


def test_ball_sizes_of_s4():
    census = ball_census(A3, 10)
    assert census.level_sizes == [1, 3, 5, 6, 5, 3, 1]
    assert census.size == 24
    assert census.complete
    assert unique_geodesic_elements(census) == 10


def test_incomplete_census():
    census = ball_census(D6, 4)
    assert not census.complete
    with pytest.raises(IncompleteCensusError):
        unique_geodesic_elements(census)
    assert not ball_census(A3, 5).complete


@pytest.mark.parametrize("d,edges", [
    (STAR_RA, [(0, 1), (0, 2), (0, 3)]),
    (PATH_RA, [(0, 1), (1, 2), (2, 3)]),
])
def test_right_angled_ulgs_are_walks(d, edges):
    series = generating_series(ball_census(d, 8))
    assert series.coeffs == oracles.walk_series(d.n, edges, 8)


def test_affine_a2_prefixes_unique():
    d = builtin("Atilde2")
    word = (0, 1, 2) * 5
    for k in range(len(word) + 1):
        prefix = word[:k]
        assert is_ulg(d, prefix)
        counts = oracles.affine_a2_reduced_word_counts([g + 1 for g in prefix])
        assert counts == {d.label(prefix): 1}
        assert len(reduced_words(d, evaluate(d, prefix))) == 1


def test_threads_give_identical_results():
    one = ball_census(D6, 9, collect_ulgs=True, keep_levels=True)
    four = ball_census(D6, 9, collect_ulgs=True, keep_levels=True, threads=4)
    assert one.series == four.series
    assert one.ulg_words == four.ulg_words
    assert one.levels == four.levels
    assert one.level_sizes == four.level_sizes


def test_ulg_words_agree_with_series():
    census = ball_census(A3, 6, collect_ulgs=True)
    assert len(census.ulg_words) == generating_series(census).at_ones() == 22
    for w in census.ulg_words:
        assert is_ulg(A3, w)


def test_counts_and_levels():
    census = ball_census(A3, 6, keep_levels=True)
    e = evaluate(A3, A3.parse_word("2123"))
    # reduced words 2123 | 1213, 1231
    assert census.count(e, (1, 2, 1)) == 1
    assert census.count(e, (2, 1, 1)) == 2
    assert census.labels_of(e) == {(1, 2, 1): 1, (2, 1, 1): 2}
    assert geodesic_count(A3, e, (2, 1, 1)) == 2
    assert geodesic_count(A3, e, (1, 1, 1)) == 0
    assert sum(1 for _ in census.elements()) == 24
    short = ball_census(A3, 6)
    with pytest.raises(ValueError):
        short.count(e, (1, 2, 1))
    # the four u.l.g.'s with label t1 t2^2 t3 end at four different elements
    ends = {evaluate(A3, A3.parse_word(w)) for w in ("2123", "1232", "3212", "2321")}
    assert len(ends) == 4


def test_resource_limits():
    with pytest.raises(ResourceLimitError):
        ball_census(D6, 12, max_entries=100)
    w = evaluate(D6, D6.parse_word("a1ab3ba2ab4b" * 2))
    with pytest.raises(ResourceLimitError):
        geodesic_count(D6, w, D6.label(D6.parse_word("a1ab3ba2ab4b" * 2)), max_states=50)
    w0 = evaluate(A3, A3.parse_word("121321"))
    with pytest.raises(ResourceLimitError):
        reduced_words(A3, w0, cap=5)


def test_reduced_words_of_longest_element():
    w0 = evaluate(A3, A3.parse_word("121321"))
    words = reduced_words(A3, w0)
    assert len(words) == 16
    assert words == sorted(words)
    assert all(is_reduced(A3, w) and evaluate(A3, w) == w0 for w in words)
    by_label = reduced_words(A3, w0, (2, 2, 2))
    assert by_label == [w for w in words if A3.label(w) == (2, 2, 2)]
    assert reduced_words(A3, w0, (1, 1, 1)) == []


def test_ulg_examples_on_dtilde6():
    assert is_ulg(D6, D6.parse_word("a1ab3ba2ab4b"))
    assert not is_ulg(D6, D6.parse_word("a1ab3bab"))
    assert not is_ulg(D6, D6.parse_word("a1a2a2"))
    assert is_ulg(D6, "a1a")


def test_polynomial_format():
    p = LabelPolynomial({(0, 0, 0): 1}, radius=0, complete=False, diagram_name="A3")
    text = format_polynomial(p)
    assert text.splitlines()[-1] == "0,0,0\t1"
    assert text.count("\n") == 4
    a1 = generating_series(ball_census(build_chain(1), 3))
    assert [l for l in format_polynomial(a1).splitlines() if not l.startswith("#")] == ["0\t1", "1\t1"]
    a3 = generating_series(ball_census(A3, 6))
    body = [l for l in format_polynomial(a3).splitlines() if not l.startswith("#")]
    assert len(body) == 15
    assert str(a3).startswith("1 + t1 + t2 + t3")
    with pytest.raises(ValueError):
        parse_polynomial("1,2\tx\n")
    with pytest.raises(ValueError):
        parse_polynomial("1,2\t1\n1,2\t3\n")


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.tuples(*[st.integers(0, 9)] * 3), st.integers(1, 10**12), max_size=20),
       st.integers(0, 50), st.booleans())
def test_polynomial_round_trip(coeffs, radius, complete):
    p = LabelPolynomial(coeffs, radius, complete, "X", 3)
    q = parse_polynomial(format_polynomial(p))
    assert q.coeffs == p.coeffs
    assert (q.radius, q.complete, q.diagram_name) == (radius, complete, "X")
    assert format_polynomial(q) == format_polynomial(p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 5), max_size=14))
def test_ulg_prefix_closed(word):
    word = tuple(word)
    if is_ulg(D6, word):
        for k in range(len(word)):
            assert is_ulg(D6, word[:k])
            assert is_ulg(D6, word[k:])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 5), max_size=12))
def test_inverse_word_is_ulg_too(word):
    word = tuple(word)
    assert is_ulg(D6, word) == is_ulg(D6, word[::-1])
    if is_reduced(D6, word):
        assert evaluate(D6, word[::-1]) == inverse(evaluate(D6, word))

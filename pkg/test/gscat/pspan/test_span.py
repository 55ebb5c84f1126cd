from hypothesis import given, strategies as st
import pytest

from gscat.errors import DimensionMismatch
from gscat.pspan import (Span, all_spans, count_spans, function_span, span_compose, span_dup, span_id, span_leq,
                         span_dup_repeated, span_leq_search, span_tensor, two_cell, is_two_cell)


@st.composite
def spans(draw, src=2, tgt=2, max_apex=3):
    pairs = draw(st.lists(st.tuples(st.integers(0, src - 1), st.integers(0, tgt - 1)), max_size=max_apex))
    return Span.from_pairs(src, tgt, pairs)


def test_canonical_form_sorts_the_apex():
    s = Span(1, 2, [0, 0], [1, 0])
    assert s.pairs == ((0, 0), (0, 1))
    assert s == Span.from_pairs(1, 2, [(0, 1), (0, 0)])
    assert s.apex == 2
    with pytest.raises(DimensionMismatch):
        Span(1, 2, [0], [2])
    with pytest.raises(DimensionMismatch):
        Span(1, 2, [0, 0], [1])


def test_compose_by_pullback_keeps_multiplicity():
    s = Span.from_pairs(1, 2, [(0, 0), (0, 1)])
    t = Span.from_pairs(2, 1, [(0, 0), (1, 0), (1, 0)])
    composite = span_compose(t, s)
    assert composite.apex == 3
    assert composite.support() == frozenset([(0, 0)])
    with pytest.raises(DimensionMismatch):
        span_compose(s, s)


def test_preorder_is_not_antisymmetric():
    once = Span.from_pairs(1, 1, [(0, 0)])
    twice = Span.from_pairs(1, 1, [(0, 0), (0, 0)])
    assert once != twice
    assert span_leq(once, twice) and span_leq(twice, once)
    assert two_cell(twice, once) == (0, 0)
    assert not span_leq(once, Span(1, 1, [], []))


def test_bounded_enumeration():
    assert count_spans(1, 1, 2) == 3
    assert len(all_spans(2, 2, 2)) == count_spans(2, 2, 2) == 15
    assert span_dup(2) == function_span(2, 4, lambda x: 3 * x)


@given(spans(), spans())
def test_search_agrees_with_support(s, t):
    assert span_leq_search(s, t) == span_leq(s, t)
    alpha = two_cell(s, t)
    if alpha is not None:
        assert is_two_cell(s, t, alpha)


@given(spans(src=2, tgt=2))
def test_identities(s):
    assert span_compose(span_id(2), s) == s
    assert span_compose(s, span_id(2)) == s


@given(spans(src=1, tgt=2), spans(src=2, tgt=1))
def test_tensor_multiplies_apexes(s, t):
    assert span_tensor(s, t).apex == s.apex * t.apex


def test_two_cell_maps_each_apex_point_on_both_legs():
    s = Span.from_pairs(1, 2, [(0, 1), (0, 0)])
    t = Span.from_pairs(1, 2, [(0, 0), (0, 1), (0, 1)])
    alpha = two_cell(s, t)
    assert alpha == (0, 1)
    assert is_two_cell(s, t, alpha)
    assert not is_two_cell(s, t, (1, 0))
    assert not is_two_cell(s, t, (0,))
    assert not is_two_cell(s, t, (0, 3))
    assert two_cell(t, Span.from_pairs(1, 2, [(0, 0)])) is None


def test_repeated_duplicator_has_the_support_of_the_duplicator():
    doubled = span_dup_repeated(2)
    assert doubled.apex == 4
    assert doubled != span_dup(2)
    assert span_leq(doubled, span_dup(2)) and span_leq(span_dup(2), doubled)
    assert span_dup_repeated(2, copies=1) == span_dup(2)

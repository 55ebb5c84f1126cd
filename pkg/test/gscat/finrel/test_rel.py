from hypothesis import given
import numpy as np
import pytest

from gscat.errors import DimensionMismatch
from gscat.finrel import (Rel, all_relations, all_total_relations, is_partial_function, is_total_relation,
                          rel_compose, rel_discharge, rel_domain, rel_dup, rel_id, rel_leq, rel_symmetry,
                          rel_tensor)
from test.gsctest import relations


def test_pairing_is_row_major():
    assert rel_dup(3).pairs() == [(0, 0), (1, 4), (2, 8)]
    assert rel_symmetry(2, 3).pairs() == [(0, 0), (1, 2), (2, 4), (3, 1), (4, 3), (5, 5)]
    assert rel_discharge(2).pairs() == [(0, 0), (1, 0)]


def test_compose_example():
    R = Rel.from_pairs(2, 3, [(0, 1), (1, 2)])
    S = Rel.from_pairs(3, 2, [(1, 0), (1, 1)])
    assert rel_compose(S, R) == Rel.from_pairs(2, 2, [(0, 0), (0, 1)])
    with pytest.raises(DimensionMismatch):
        rel_compose(R, R)


def test_index_round_trip_and_counts():
    rels = all_relations(2, 2)
    assert len(rels) == 16
    assert [R.index() for R in rels] == list(range(16))
    assert len(all_total_relations(2, 2)) == 9
    assert all(is_total_relation(R) for R in all_total_relations(2, 3))


def test_from_pairs_out_of_range():
    with pytest.raises(DimensionMismatch):
        Rel.from_pairs(1, 1, [(0, 1)])
    with pytest.raises(DimensionMismatch):
        Rel(2, 2, [True, False, True])


def test_predicates():
    partial = Rel.from_pairs(2, 1, [(1, 0)])
    assert is_partial_function(partial)
    assert not is_total_relation(partial)
    assert rel_domain(partial) == Rel.from_pairs(2, 2, [(1, 1)])
    both = Rel.from_pairs(1, 2, [(0, 0), (0, 1)])
    assert not is_partial_function(both)
    assert is_total_relation(both)


@given(relations())
def test_identity_laws(R):
    assert rel_compose(R, rel_id(R.src)) == R
    assert rel_compose(rel_id(R.tgt), R) == R


@given(relations(), relations())
def test_tensor_is_kronecker(R, S):
    T = rel_tensor(R, S)
    assert (T.src, T.tgt) == (R.src * S.src, R.tgt * S.tgt)
    for a, b in R.pairs():
        for c, d in S.pairs():
            assert T.matrix[a * S.src + c, b * S.tgt + d]
    assert int(T.matrix.sum()) == int(R.matrix.sum()) * int(S.matrix.sum())


@given(relations(src=2, tgt=2), relations(src=2, tgt=2))
def test_inclusion_is_intersection(R, S):
    meet = Rel(2, 2, np.logical_and(R.matrix, S.matrix))
    assert rel_leq(meet, R)
    assert rel_leq(R, S) == (meet == R)


@given(relations())
def test_domain_is_partial_identity(R):
    d = rel_domain(R)
    assert rel_leq(d, rel_id(R.src))
    assert rel_compose(R, d) == R

from fractions import Fraction

from hypothesis import given
import pytest

from gscat.errors import DimensionMismatch, RowSumViolation
from gscat.finrel import Rel, is_total_relation, rel_compose
from gscat.finstoch import (StochMatrix, all_stoch_matrices, distributions, stoch_compose, stoch_dup, stoch_id,
                            stoch_tensor, support, support_leq, uniform_stoch)
from test.gsctest import stoch_matrices


def test_compose_example():
    f = StochMatrix(1, 2, [[0, 1]])
    g = StochMatrix(2, 2, [["1/2", "1/2"], [0, 1]])
    assert stoch_compose(g, f) == StochMatrix(1, 2, [[0, 1]])
    assert stoch_compose(StochMatrix(1, 2, [["1/2", "1/2"]]), stoch_id(1)).rows() == [[Fraction(1, 2)] * 2]


def test_support_example():
    f = StochMatrix(2, 2, [[1, 0], ["1/2", "1/2"]])
    assert support(f) == Rel.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)])


def test_row_sums_are_exact():
    with pytest.raises(RowSumViolation) as excinfo:
        StochMatrix(1, 2, [["1/2", "1/3"]])
    assert excinfo.value.total == Fraction(5, 6)
    with pytest.raises(RowSumViolation):
        StochMatrix(1, 2, [[2, -1]])
    with pytest.raises(DimensionMismatch):
        StochMatrix(2, 1, [[1]])


def test_uniform_needs_total_relation():
    R = Rel.from_pairs(2, 3, [(0, 0), (0, 2), (1, 1)])
    assert uniform_stoch(R).rows()[0] == [Fraction(1, 2), 0, Fraction(1, 2)]
    assert support(uniform_stoch(R)) == R
    with pytest.raises(RowSumViolation):
        uniform_stoch(Rel(1, 1))


def test_bounded_enumeration():
    assert len(distributions(2, 2)) == 3
    assert len(all_stoch_matrices(2, 2, 2)) == 9
    assert stoch_dup(2).rows() == [[1, 0, 0, 0], [0, 0, 0, 1]]


@given(stoch_matrices(), stoch_matrices())
def test_support_is_functorial(f, g):
    assert is_total_relation(support(f))
    if f.tgt == g.src:
        assert support(stoch_compose(g, f)) == rel_compose(support(g), support(f))
    assert support(stoch_tensor(f, g)).pairs() == sorted(
        (a * g.src + c, b * g.tgt + d) for a, b in support(f).pairs() for c, d in support(g).pairs())


@given(stoch_matrices(src=2, tgt=2))
def test_support_preorder_is_reflexive(f):
    assert support_leq(f, f)

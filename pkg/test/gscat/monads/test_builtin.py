from fractions import Fraction

import pytest

from gscat.errors import FixtureError, RowSumViolation, UsageError
from gscat.monads import get_monad, monad_names


def test_registry():
    assert "powerset" in monad_names()
    assert "writer:<k>" in monad_names()
    assert get_monad("writer:3").order == 3
    assert get_monad("writer").name == "writer:2"
    with pytest.raises(UsageError):
        get_monad("writer:0")
    with pytest.raises(UsageError):
        get_monad("writer:x")
    with pytest.raises(UsageError):
        get_monad("continuation")


@pytest.mark.parametrize("name, n, expected", [
    ("identity", 3, 3),
    ("powerset", 3, 8),
    ("nonempty", 3, 7),
    ("lifting", 3, 4),
    ("writer:2", 3, 6),
    ("multiset", 3, None),
    ("distribution", 3, None),
])
def test_carrier_sizes(name, n, expected):
    assert get_monad(name).carrier(n).size == expected


@pytest.mark.parametrize("name", ["identity", "powerset", "nonempty", "lifting", "writer:3"])
def test_enumeration_is_indexed(name):
    space = get_monad(name).carrier(3)
    assert [space.index(v) for v in space] == list(range(space.size))


def test_fixture_values():
    powerset = get_monad("powerset")
    assert powerset.decode(5, 3) == frozenset([0, 2])
    assert powerset.encode(frozenset([0, 2]), 3) == 5
    with pytest.raises(FixtureError):
        powerset.decode(8, 3)
    with pytest.raises(FixtureError):
        get_monad("nonempty").decode(0, 2)
    lifting = get_monad("lifting")
    assert lifting.decode(None, 2) is None
    assert lifting.decode(1, 2) == (1,)
    multiset = get_monad("multiset")
    assert multiset.encode(multiset.decode([2, 0, 1], 3), 3) == [2, 0, 1]
    with pytest.raises(FixtureError):
        multiset.decode([1, -1], 2)
    distribution = get_monad("distribution")
    assert dict(distribution.decode(["1/3", "2/3"], 2)) == {0: Fraction(1, 3), 1: Fraction(2, 3)}
    with pytest.raises(RowSumViolation):
        distribution.decode(["1/2", "1/3"], 2)


def test_multiset_pair_multiplies():
    M = get_monad("multiset")
    v = M.decode([2, 1], 2)
    w = M.decode([3], 1)
    assert dict(M.pair(v, w)) == {(0, 0): 6, (1, 0): 3}
    assert dict(M.mult(M.unit(v))) == dict(v)

import pytest

from gscat.errors import MissingPreorder
from gscat.monads import check_colax_cartesian_monad, check_gs_monoidal_monad, check_monad_laws, get_monad
from test.gsctest import assert_fails, assert_passes

BUDGET = dict(max_size=2, max_instances=128, seed=0)


@pytest.mark.parametrize("name", ["identity", "powerset", "nonempty", "lifting", "writer:2", "writer:3",
                                  "multiset", "distribution"])
def test_monad_laws(name):
    assert_passes(check_monad_laws(get_monad(name), **BUDGET))


@pytest.mark.parametrize("name", ["identity", "writer:1"])
def test_gs_monoidal_monads(name):
    assert_passes(check_gs_monoidal_monad(get_monad(name), **BUDGET))


@pytest.mark.parametrize("name, law", [
    ("powerset", "dup"),
    ("lifting", "discharge"),
    ("writer:2", "dup"),
    ("writer:3", "discharge"),
    ("distribution", "dup"),
])
def test_not_gs_monoidal(name, law):
    witness = assert_fails(check_gs_monoidal_monad(get_monad(name), **BUDGET), law)
    assert "value" in witness.items


@pytest.mark.parametrize("name", ["powerset", "nonempty", "lifting"])
def test_colax_cartesian(name):
    assert_passes(check_colax_cartesian_monad(get_monad(name), **BUDGET))


def test_colax_needs_order():
    M = get_monad("identity")
    M.ordered = False
    with pytest.raises(MissingPreorder):
        check_colax_cartesian_monad(M)

import pytest

from gscat.errors import InvalidPreorder, NotMonotone
from gscat.preord import (FinPreord, MonotoneMap, all_monotone_maps, all_preorders, identity_map, map_compose,
                          map_diagonal, preord_product, preord_terminal)


def test_preorder_counts():
    assert [len(all_preorders(n)) for n in (1, 2, 3)] == [1, 3, 9]
    assert [len(all_preorders(n, up_to_iso=False)) for n in (2, 3)] == [4, 29]


def test_invalid_preorders():
    with pytest.raises(InvalidPreorder):
        FinPreord(2, [[False, False], [False, True]])
    with pytest.raises(InvalidPreorder):
        FinPreord(3, [[True, True, False], [False, True, True], [False, False, True]])
    with pytest.raises(InvalidPreorder):
        FinPreord.from_pairs(2, [(0, 2)])


def test_closure():
    X = FinPreord.from_pairs(3, [(0, 1), (1, 2)])
    assert X == FinPreord.chain(3)
    assert X.leq(0, 2) and not X.leq(2, 0)


def test_monotone_maps():
    C2 = FinPreord.chain(2)
    with pytest.raises(NotMonotone) as excinfo:
        MonotoneMap(C2, C2, values=[1, 0])
    assert excinfo.value.witness == (0, 1)
    assert len(all_monotone_maps(C2, C2)) == 3
    assert len(all_monotone_maps(FinPreord.discrete(2), C2)) == 4
    assert len(all_monotone_maps(FinPreord.indiscrete(2), C2)) == 2


def test_product_is_strictly_unital():
    C2 = FinPreord.chain(2)
    assert preord_product(preord_terminal(), C2) is C2
    square = preord_product(C2, C2)
    assert square.size == 4
    assert square.leq(0, 3) and not square.leq(1, 2)
    assert map_diagonal(C2).values == (0, 3)
    assert map_compose(identity_map(C2), identity_map(C2)) == identity_map(C2)

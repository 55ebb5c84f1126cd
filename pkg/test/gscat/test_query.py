import random

import pytest

from gscat.errors import Infeasible, MoreThanOneResult
from gscat.finrel import as_presentation, open_finrel
from gscat.finstoch import open_finstoch
from gscat.query import Instances, ListSpace


def test_homset_enumeration_and_index():
    P = as_presentation(object_list=(1, 2))
    hom = P.hom(2, 2)
    assert len(hom) == 16
    items = list(hom)
    assert all(hom.index(f) == i for i, f in enumerate(items))
    assert hom[-1] == items[15]
    assert len(hom[2:5]) == 3


def test_homset_cap():
    P = open_finrel(cap=100)
    with pytest.raises(Infeasible):
        len(P.hom(3, 3))


def test_homset_cap_applies_to_sampling():
    P = open_finrel(cap=100)
    with pytest.raises(Infeasible):
        P.hom(3, 3).sample(random.Random(0))
    with pytest.raises(Infeasible):
        Instances([P.hom(1, 1), P.hom(3, 3)], 5, random.Random(0))
    f = P.hom(2, 3).sample(random.Random(0))
    assert (f.src, f.tgt) == (2, 3)


def test_infinite_homset_is_sampled():
    hom = open_finstoch().hom(1, 2)
    assert not hom.finite
    f = hom.sample(random.Random(0))
    assert (f.src, f.tgt) == (1, 2)
    with pytest.raises(Infeasible):
        len(hom)


def test_where_and_one():
    P = as_presentation(object_list=(1,))
    full = P.hom(1, 1).where(lambda f: f.matrix.all())
    assert full.one() == P.identity(1)
    with pytest.raises(MoreThanOneResult):
        P.hom(1, 1).one()


def test_instances_exhaustive_or_sampled():
    spaces = [ListSpace(range(3)), ListSpace(range(4))]
    exhaustive = Instances(spaces, 12, random.Random(0))
    assert exhaustive.exhaustive
    assert sorted(exhaustive) == [(a, b) for a in range(3) for b in range(4)]
    sampled = Instances(spaces, 5, random.Random(0))
    assert not sampled.exhaustive
    assert len(list(sampled)) == 5

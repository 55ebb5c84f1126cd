import pytest

from gscat.errors import MissingStructure, UsageError
from gscat.finrel import Rel, as_presentation
from gscat.finstoch import finstoch_presentation, support_functor
from gscat.functors import (FunctorData, check_bilax, check_colax_cartesian, check_gs_functor, check_lax_monoidal,
                            check_lax_on_identities, compose_functors, identity_functor)
from gscat.monads import get_monad, kleisli_F_T, kleisli_G_T, kleisli_to_pspan
from gscat.preord import hypograph_functor
from test.gsctest import SMALL_BUDGET, assert_fails, assert_passes


@pytest.fixture
def finrel():
    return as_presentation(object_list=(1, 2, 4))


@pytest.mark.parametrize("flavor", ["lax", "oplax", "strong", "strict"])
def test_identity_functor(finrel, flavor):
    assert_passes(check_gs_functor(identity_functor(finrel), flavor, **SMALL_BUDGET))


def test_identity_is_bilax(finrel):
    assert_passes(check_bilax(identity_functor(finrel), **SMALL_BUDGET))


def test_composite_of_identities(finrel):
    F = compose_functors(identity_functor(finrel), identity_functor(finrel))
    assert F.name == "Id[finrel].Id[finrel]"
    assert_passes(check_gs_functor(F, "strong", **SMALL_BUDGET))


def test_faulty_unit_laxator(finrel):
    F = identity_functor(finrel).with_structure(psi0=Rel(1, 1), name="broken")
    assert_fails(check_gs_functor(F, "lax", **SMALL_BUDGET), "discharge-lax")


def test_missing_structure(finrel):
    F = FunctorData(finrel, finrel, lambda a: a, lambda f: f, name="bare")
    with pytest.raises(MissingStructure):
        check_lax_monoidal(F)
    with pytest.raises(MissingStructure):
        F.phi0()
    assert_passes(check_gs_functor(F, "strict", **SMALL_BUDGET))
    with pytest.raises(UsageError):
        check_gs_functor(F, "sideways")


def test_support_is_strict():
    F = support_functor(finstoch_presentation((1, 2)))
    assert_passes(check_gs_functor(F, "strict", max_instances=64, seed=1))


@pytest.mark.parametrize("name", ["powerset", "lifting", "writer:2"])
def test_free_functor_is_strict(name):
    assert_passes(check_gs_functor(kleisli_F_T(name, (1, 2)), "strict", **SMALL_BUDGET))


def test_right_adjoint():
    assert_passes(check_gs_functor(kleisli_G_T("identity"), "lax", **SMALL_BUDGET))
    powerset = kleisli_G_T("powerset")
    assert_passes(check_lax_monoidal(powerset, **SMALL_BUDGET))
    assert_fails(check_gs_functor(powerset, "lax", **SMALL_BUDGET), "discharge-lax")


@pytest.mark.parametrize("name", ["powerset", "distribution", "lifting", "writer:2"])
def test_free_functor_is_colax_cartesian(name):
    assert_passes(check_colax_cartesian(kleisli_F_T(name, (1, 2)), **SMALL_BUDGET))


def test_right_adjoint_is_colax_cartesian():
    assert_passes(check_colax_cartesian(kleisli_G_T("powerset"), **SMALL_BUDGET))
    assert_passes(check_colax_cartesian(kleisli_G_T("lifting"), **SMALL_BUDGET))
    assert_fails(check_colax_cartesian(kleisli_G_T("writer:2"), **SMALL_BUDGET), "dup-colax")


def test_right_adjoint_into_spans():
    assert_passes(check_gs_functor(kleisli_to_pspan(get_monad("writer:1")), "lax", **SMALL_BUDGET))


def test_hypograph_is_lax_on_identities():
    assert_passes(check_lax_on_identities(hypograph_functor(), **SMALL_BUDGET))

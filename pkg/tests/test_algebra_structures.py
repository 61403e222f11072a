import pytest
from hypothesis import given, strategies as st

from weakyd.algebra_structures import (AlgebraStructure, ModuleStructure, ComoduleStructure,
                                       algebra_morphism_report, check_algebra,
                                       check_coalgebra, check_comodule, check_module,
                                       coalgebra_morphism_report, convolution,
                                       is_comodule_morphism, is_module_morphism,
                                       unit_algebra, unit_coalgebra)
from weakyd.errors import ObjectMismatch
from weakyd.tensor_core import K, Morphism, SpaceObject, identity


def test_regular_module_and_comodule(rg):
    assert check_algebra(rg.algebra).passed
    assert check_coalgebra(rg.coalgebra).passed
    assert check_module(ModuleStructure(rg.algebra, rg.carrier, rg.mu)).passed
    assert check_comodule(ComoduleStructure(rg.coalgebra, rg.carrier, rg.delta)).passed


def test_unit_structures():
    assert check_algebra(unit_algebra()).passed
    assert check_coalgebra(unit_coalgebra()).passed


def test_structure_shapes_are_enforced(rg):
    D = rg.carrier
    with pytest.raises(ObjectMismatch):
        AlgebraStructure(D, rg.eps, rg.mu)


def test_broken_product_fails_with_witness(z2):
    mu = z2.mu.with_entry(1, 2, 0)  # g·e = 0
    rep = check_algebra(AlgebraStructure(z2.carrier, z2.eta, mu))
    assert not rep.passed
    assert rep.failures[0].witness is not None


@given(st.data())
def test_convolution_unit_and_associativity(data):
    from weakyd.groupoid_factory import group_algebra

    d = group_algebra(3)
    D = d.carrier
    ents = st.integers(-2, 2)

    def draw():
        return Morphism(D, D, [[data.draw(ents) for _ in range(3)] for _ in range(3)])

    a, b, c = draw(), draw(), draw()
    u = d.eta @ d.eps
    conv = lambda x, y: convolution(x, y, d.algebra, d.coalgebra)
    assert conv(a, u) == a == conv(u, a)
    assert conv(conv(a, b), c) == conv(a, conv(b, c))


def test_antipode_is_anti_multiplicative_on_group_algebra(z3):
    # lam is an algebra map to the opposite algebra
    from weakyd.tensor_core import flip

    D = z3.carrier
    op = AlgebraStructure(D, z3.eta, z3.mu @ flip(D, D))
    assert algebra_morphism_report(z3.lam, z3.algebra, op).passed
    assert not algebra_morphism_report(z3.lam.scale(2), z3.algebra, op).passed


def test_counit_is_a_coalgebra_morphism_to_k(rg):
    assert coalgebra_morphism_report(rg.eps, rg.coalgebra, unit_coalgebra()).passed


def test_module_morphism_predicates(rg):
    M = ModuleStructure(rg.algebra, rg.carrier, rg.mu)
    C = ComoduleStructure(rg.coalgebra, rg.carrier, rg.delta)
    assert is_module_morphism(identity(rg.carrier), M, M)
    assert is_comodule_morphism(identity(rg.carrier), C, C)
    assert not is_module_morphism(rg.lam, M, M)

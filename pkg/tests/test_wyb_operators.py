import pytest
from hypothesis import given, strategies as st

from weakyd.corpus import builtin
from weakyd.errors import Eq12Violation, NotIdempotent, WybAxiomViolation
from weakyd.groupoid_factory import full_groupoid, group_algebra, groupoid_algebra
from weakyd.tensor_core import SpaceObject, flip
from weakyd.wyb_operators import (WeakYangBaxter, check_wyb, commutation_witness, flip_wyb,
                                  wyb_algebra_idempotent, wyb_coalgebra_idempotent,
                                  wyb_from_idempotent)

WYB_ROWS = ["a1", "a2-idempotent", "a2-1", "a2-2", "a2-3", "a2-4", "a3-1", "a3-2",
            "Eq(2)", "Eq(3)", "Eq(4)", "Eq(5)", "Eq(6)"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_flip_is_a_wyb(n):
    rep = check_wyb(flip_wyb(SpaceObject("V", dim=n)))
    assert rep.ids == WYB_ROWS
    assert rep.passed


@pytest.mark.parametrize("name", ["exact_factorization_full2_z2", "exact_factorization_z2_z3"])
def test_exact_factorization_operators_pass(name):
    w = builtin(name).wyb
    assert w.t == w.t_prime == w.nabla
    assert commutation_witness(w.t, w.carrier) is None
    assert check_wyb(w).passed


@pytest.mark.parametrize("d", [group_algebra(2), groupoid_algebra(full_groupoid(2))],
                         ids=["Z2", "Full2"])
def test_algebra_and_coalgebra_idempotents_fail_the_commutation(d):
    """With t = t' = nabla = Omega, row a2-1 is the self-commutation of Omega, which fails."""
    D = d.carrier
    for omega in (d.eta | (d.mu @ flip(D, D)), d.eps | (flip(D, D) @ d.delta)):
        assert omega.is_idempotent()
        wit = commutation_witness(omega, D)
        assert wit is not None
        rep = check_wyb(WeakYangBaxter(D, omega, omega, omega))
        assert rep.row("a2-1").status == "fail"
        assert rep.row("a2-1").witness == wit
        assert rep.row("a1").status == "pass"
        with pytest.raises(Eq12Violation):
            wyb_from_idempotent(omega, D)
    with pytest.raises(WybAxiomViolation):
        wyb_algebra_idempotent(d.algebra)
    with pytest.raises(WybAxiomViolation):
        wyb_coalgebra_idempotent(d.coalgebra)


def test_non_idempotent_rejected():
    D = SpaceObject("V", dim=2)
    with pytest.raises(NotIdempotent):
        wyb_from_idempotent(flip(D, D), D)


@given(st.integers(0, 15), st.integers(0, 15), st.integers(1, 3))
def test_any_single_entry_corruption_of_flip_is_caught(i, j, delta):
    D = SpaceObject("V", dim=2)
    c = flip(D, D)
    bad = c.with_entry(i % 4, j % 4, c.entry(i % 4, j % 4) + delta)
    rep = check_wyb(WeakYangBaxter(D, bad, c, flip(D, D) @ flip(D, D)))
    assert not rep.passed
    assert all(r.witness is not None or r.note for r in rep.failures)


def test_t_prime_must_invert_t_on_the_image():
    D = SpaceObject("V", dim=2)
    c = flip(D, D)
    rep = check_wyb(WeakYangBaxter(D, c, c.scale(2), c @ c))
    assert rep.status("a3-1") == "fail"
    assert rep.status("Eq(2)") == "fail"

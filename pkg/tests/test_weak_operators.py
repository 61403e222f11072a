import re

import pytest

from weakyd.algebra_structures import ComoduleStructure, ModuleStructure
from weakyd.errors import ObjectMismatch
from weakyd.weak_operators import (WeakOperatorQuad, check_comodule_compat,
                                   check_module_compat, check_unit_support, check_wo,
                                   derived_wo_suite, flip_quad, regular_quad)
from weakyd.wbha import derived_identity_suite


def eq_numbers(rep):
    out = set()
    for i in rep.ids:
        m = re.match(r"Eq\((\d+)\)", i)
        if m:
            out.add(int(m.group(1)))
    return out


def test_regular_quad_passes_every_condition(rg):
    q = regular_quad(rg)
    assert check_wo(q).passed
    rep = derived_wo_suite(q)
    # one of these concerns Pi^L alone and sits in the WBHA derived suite
    assert eq_numbers(rep) | eq_numbers(derived_identity_suite(rg)) >= set(range(34, 112))
    # lam is an involution on RG, so nothing is skipped
    assert all(r.status == "pass" for r in rep), rep.to_text()


@pytest.mark.parametrize("module", ["dl", "trivial", "omega_a", "omega_c"])
def test_flip_quads_on_corpus_modules(module, dl, trivial_pm, omega_modules, rg):
    M = {"dl": dl, "trivial": trivial_pm.yd, "omega_a": omega_modules[0],
         "omega_c": omega_modules[1]}[module]
    q = flip_quad(rg, M.carrier)
    assert check_wo(q).passed
    rep = derived_wo_suite(q)
    assert all(r.status == "pass" for r in rep), rep.to_text()


def test_dual_quad(rg):
    q = regular_quad(rg)
    d = q.dual()
    assert (d.r, d.r_prime, d.s, d.s_prime) == (q.s_prime, q.s, q.r_prime, q.r)


@pytest.mark.parametrize("which", ["r", "r_prime", "s", "s_prime"])
def test_single_entry_corruption_fails(rg, which):
    q = regular_quad(rg)
    m = getattr(q, which)
    bad = q.replace(**{which: m.with_entry(1, 2, m.entry(1, 2) + 1)})
    reps = [check_wo(bad), derived_wo_suite(bad)]
    fails = [r for rep in reps for r in rep.failures]
    assert fails and any(r.witness is not None for r in fails)


def test_shapes_are_checked(rg, dl):
    q = flip_quad(rg, dl.carrier)
    with pytest.raises(ObjectMismatch):
        WeakOperatorQuad(rg, dl.carrier, q.s, q.r_prime, q.s, q.s_prime)


def test_compatibility_with_regular_structures(rg):
    q = regular_quad(rg)
    M = ModuleStructure(rg.algebra, rg.carrier, rg.mu)
    C = ComoduleStructure(rg.coalgebra, rg.carrier, rg.delta)
    assert check_module_compat(q, M).passed
    assert check_comodule_compat(q, C).passed
    # biconditional rows: both sides hold for the regular structures
    assert check_unit_support(q, M, C).passed


def test_compat_detects_broken_crossing(rg):
    # every linear action is compatible with a flip, so corrupt the crossing instead
    q = regular_quad(rg)
    bad = q.replace(r=q.r.with_entry(1, 0, 1))
    M = ModuleStructure(rg.algebra, rg.carrier, rg.mu)
    C = ComoduleStructure(rg.coalgebra, rg.carrier, rg.delta)
    assert not check_module_compat(bad, M).passed
    assert not check_comodule_compat(bad, C).passed

"""Every suite notices a single-entry corruption of each morphism it reads."""

import pytest

from weakyd.corpus import SUITES, Instance, builtin, run_suite
from weakyd.report import FAIL
from weakyd.tensor_core import Morphism
from weakyd.wyb_operators import WeakYangBaxter

BASE = ("mu", "delta", "lam", "t")
MODULE = ("r", "s", "phi", "rho")
INPUTS = {
    "wyb": ("t",),
    "wbb": ("mu", "delta", "t"),
    "antipode": BASE,
    "derived": BASE,
    "wo": BASE + ("r", "s"),
    "yd": BASE + MODULE,
    "monoidal": BASE + MODULE,
    "projection": BASE,
    "entwining": BASE,
    "adjoint": BASE,
}
TRIES = 8


def corrupt(m: Morphism, k: int) -> Morphism:
    rows, cols = m.target.dim, m.source.dim
    i, j = (5 * k) % rows, (11 * k + 1) % cols
    return m.with_entry(i, j, m.entry(i, j) + 1)


@pytest.fixture(scope="module")
def bases(rg, product_pm):
    # flip-braided RG and a B_D whose t is not the flip
    return {"rg": rg, "braided": product_pm.wbha}


def mutant(bases, dl, suite, name, k):
    if name in BASE:
        # with t the flip, lambda enters the crossing rows only through naturality
        d = bases["braided" if (suite, name) == ("wo", "lam") else "rg"]
        if suite == "wyb":
            w = d.wyb
            return Instance("mutant", "wyb",
                            wyb=WeakYangBaxter(w.carrier, corrupt(w.t, k), w.t_prime, w.nabla))
        return Instance("mutant", "wbha", wbha=d.replace(**{name: corrupt(getattr(d, name), k)}))
    if name in ("r", "s"):
        wo = dl.wo.replace(**{name: corrupt(getattr(dl.wo, name), k)})
        return Instance("mutant", "yd", yd=dl.replace(wo=wo))
    attr = {"phi": "action", "rho": "coaction"}[name]
    return Instance("mutant", "yd", yd=dl.replace(**{attr: corrupt(getattr(dl, attr), k)}))


def failing_rows(inst, suite):
    return [r for rep in run_suite(inst, suite) for r in rep if r.status == FAIL]


def test_every_suite_has_inputs():
    assert set(INPUTS) == set(SUITES)
    assert {n for v in INPUTS.values() for n in v} == set(BASE + MODULE)


@pytest.mark.parametrize("suite,name", [(s, n) for s in SUITES for n in INPUTS[s]])
def test_single_entry_corruption_is_detected(bases, dl, suite, name):
    for k in range(TRIES):
        rows = failing_rows(mutant(bases, dl, suite, name, k), suite)
        if rows:
            assert all(r.witness is not None for r in rows), [r.identity_id for r in rows]
            return
    pytest.fail(f"{suite}: no corruption of {name} among {TRIES} tried was detected")


@pytest.mark.parametrize("suite", SUITES)
def test_uncorrupted_inputs_pass(bases, dl, suite):
    insts = [Instance("rg", "wbha", wbha=bases["rg"]), Instance("dl", "yd", yd=dl)]
    for inst in insts:
        assert failing_rows(inst, suite) == []

import itertools
from fractions import Fraction

import pytest

import oracles as O
from weakyd.errors import InvalidGroupoid, NotExactFactorization
from weakyd.fields import GF
from weakyd.groupoid_factory import (GroupoidSpec, check_frobenius, cyclic_group,
                                     discrete_groupoid, exact_factorization,
                                     exact_factorization_operator, full_groupoid,
                                     group_algebra, groupoid_algebra, matrix_frobenius,
                                     product_groupoid, validate_groupoid)
from weakyd.wyb_operators import check_wyb

GROUPOIDS = {
    "Full1": full_groupoid(1), "Full2": full_groupoid(2), "Full3": full_groupoid(3),
    "Z2": cyclic_group(2), "Z3": cyclic_group(3), "Z4": cyclic_group(4),
    "Disc3": discrete_groupoid(["a", "b", "c"]),
    "Full2xZ2": product_groupoid(full_groupoid(2), cyclic_group(2)),
}


def brute_structure(g: GroupoidSpec):
    """RG from the composition table, following the textbook formulas directly."""
    labels = list(g.labels)
    n = len(labels)
    idx = {a: k for k, a in enumerate(labels)}
    mu = [[Fraction(0)] * (n * n) for _ in range(n)]
    for tau, sigma in itertools.product(labels, labels):
        if g.source(tau) == g.target(sigma):
            mu[idx[g.composition[(tau, sigma)]]][idx[tau] * n + idx[sigma]] += 1
    unit = [[Fraction(int(a in g.identities.values()))] for a in labels]
    delta = [[Fraction(int(i == j * n + j)) for j in range(n)] for i in range(n * n)]
    eps = [[Fraction(1)] * n]
    lam = [[Fraction(int(labels[i] == g.inverses[labels[j]])) for j in range(n)]
           for i in range(n)]
    pi_l = [[Fraction(int(labels[i] == g.identities[g.target(labels[j])])) for j in range(n)]
            for i in range(n)]
    pi_r = [[Fraction(int(labels[i] == g.identities[g.source(labels[j])])) for j in range(n)]
            for i in range(n)]
    return dict(mu=mu, eta=unit, delta=delta, eps=eps, lam=lam, pi_L=pi_l, pi_R=pi_r)


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_groupoid_tables_validate(name):
    assert validate_groupoid(GROUPOIDS[name]).passed


@pytest.mark.parametrize("name", sorted(GROUPOIDS))
def test_groupoid_algebra_matches_brute_force(name):
    g = GROUPOIDS[name]
    d = groupoid_algebra(g)
    want = brute_structure(g)
    for key in ("mu", "eta", "delta", "eps", "lam", "pi_L", "pi_R"):
        assert O.as_fractions(getattr(d, key)) == want[key], key


def test_full_groupoid_target_source_and_antipode_entrywise():
    d = groupoid_algebra(full_groupoid(3))
    labels = d.carrier.basis_labels
    idx = {a: k for k, a in enumerate(labels)}
    for i, j in itertools.product("123", repeat=2):
        col = idx[f"E{i}{j}"]

        def image(m):
            return {labels[r]: m.entry(r, col) for r in range(len(labels)) if m.entry(r, col)}

        assert image(d.pi_L) == {f"E{i}{i}": 1}
        assert image(d.pi_R) == {f"E{j}{j}": 1}
        assert image(d.lam) == {f"E{j}{i}": 1}


def test_group_algebra_is_hopf():
    d = group_algebra(3)
    assert d.pi_L == d.eta @ d.eps == d.pi_R


def test_invalid_groupoid_reports_the_axiom():
    g = full_groupoid(2)
    comp = dict(g.composition)
    comp[("E12", "E21")] = "E22"  # should be E11
    bad = GroupoidSpec(g.objects, g.arrows, comp, g.identities, g.inverses, "Bad")
    rep = validate_groupoid(bad)
    assert not rep.passed
    assert rep.failures[0].witness is not None
    with pytest.raises(InvalidGroupoid):
        groupoid_algebra(bad)


def test_missing_inverse_is_rejected():
    g = cyclic_group(3)
    inv = dict(g.inverses)
    inv["g"] = "g"
    bad = GroupoidSpec(g.objects, g.arrows, g.composition, g.identities, inv, "Bad")
    assert not validate_groupoid(bad).passed


def test_exact_factorization_decomposition_is_unique_and_operator_matches():
    g = product_groupoid(cyclic_group(2), cyclic_group(3))
    H = [a for a in g.labels if a.endswith(".e")]
    V = [a for a in g.labels if a.startswith("e.")]
    ef = exact_factorization(g, H, V)
    for sigma in g.labels:
        found = [(h, v) for h in H for v in V
                 if g.source(h) == g.target(v) and g.composition[(h, v)] == sigma]
        assert found == [ef.decomposition[sigma]]
    w = exact_factorization_operator(ef)
    labels = list(g.labels)
    n = len(labels)
    idx = {a: k for k, a in enumerate(labels)}
    for s, t in itertools.product(labels, labels):
        col = idx[s] * n + idx[t]
        want = idx[ef.decomposition[s][0]] * n + idx[ef.decomposition[t][1]]
        assert [r for r in range(n * n) if w.t.entry(r, col)] == [want]
    assert check_wyb(w).passed


def test_non_exact_factorization_rejected():
    g = cyclic_group(4)
    with pytest.raises(NotExactFactorization):
        exact_factorization(g, list(g.labels), list(g.labels))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrix_frobenius_is_separable_frobenius(n):
    assert check_frobenius(matrix_frobenius(n)).passed


def test_groupoid_algebra_over_prime_field():
    d = groupoid_algebra(full_groupoid(2), GF(3))
    assert d.field == GF(3)
    assert d.lam @ d.lam == d.id

"""Concrete instances: groupoid algebras, exact factorizations, group algebras
and the weak Hopf algebra A (x) A of a separable Frobenius algebra A."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .algebra_structures import (AlgebraStructure, CoalgebraStructure, check_algebra,
                                 check_coalgebra)
from .errors import InvalidGroupoid, NotExactFactorization, NotSeparableFrobenius
from .fields import QQ, Field
from .report import (FAIL, PASS, CheckRow, Identity, Report, Witness, combine,
                     run_checks)
from .tensor_core import K, Morphism, SpaceObject, flip, identity
from .wbha import Wbha
from .wyb_operators import WeakYangBaxter, flip_wyb, wyb_from_idempotent


@dataclass(frozen=True)
class GroupoidSpec:
    """A finite groupoid given by explicit tables.

    ``arrows`` holds (label, source, target). ``composition`` maps (tau, sigma)
    to tau o sigma for every pair with s(tau) = t(sigma).
    """

    objects: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]
    composition: Mapping[tuple[str, str], str]
    identities: Mapping[str, str]
    inverses: Mapping[str, str]
    name: str = "G"

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a[0] for a in self.arrows)

    def source(self, arrow: str) -> str:
        return self._arrow(arrow)[1]

    def target(self, arrow: str) -> str:
        return self._arrow(arrow)[2]

    def _arrow(self, label: str) -> tuple[str, str, str]:
        for a in self.arrows:
            if a[0] == label:
                return a
        raise KeyError(label)

    def composable(self, tau: str, sigma: str) -> bool:
        return self.source(tau) == self.target(sigma)

    def compose(self, tau: str, sigma: str) -> Optional[str]:
        return self.composition.get((tau, sigma))

    def is_loop(self, arrow: str) -> bool:
        return self.source(arrow) == self.target(arrow)


def _gw(k: int, detail: str, expected: str) -> Witness:
    return Witness(k, k, detail, expected)


def validate_groupoid(g: GroupoidSpec) -> Report:
    """Check every groupoid axiom by enumeration; failures name the arrow involved."""
    labels = g.labels
    index = {a: k for k, a in enumerate(labels)}
    objs = set(g.objects)
    rows: list[CheckRow] = []

    def row(rid: str, wit: Optional[Witness], note: str = "") -> None:
        rows.append(CheckRow(rid, FAIL if wit else PASS, wit, note if wit else ""))

    wit = None
    if len(set(labels)) != len(labels):
        wit = _gw(0, "duplicate arrow label", "distinct labels")
    for k, (a, s, t) in enumerate(g.arrows):
        if wit is None and (s not in objs or t not in objs):
            wit = _gw(k, f"{a}: {s}->{t}", "endpoints among the objects")
    row("arrows", wit)

    wit, note = None, ""
    for (tau, sigma), v in g.composition.items():
        if tau not in index or sigma not in index or v not in index:
            wit, note = _gw(index.get(tau, 0), f"{tau}∘{sigma}={v}", "known arrows"), "unknown arrow"
            break
        if not g.composable(tau, sigma):
            wit, note = _gw(index[tau], f"{tau}∘{sigma}", "undefined"), "non-composable pair composed"
            break
        if g.source(v) != g.source(sigma) or g.target(v) != g.target(tau):
            wit, note = _gw(index[v], f"{tau}∘{sigma}={v}", "arrow with matching endpoints"), "typing"
            break
    if wit is None:
        for tau, sigma in itertools.product(labels, labels):
            if g.composable(tau, sigma) and (tau, sigma) not in g.composition:
                wit, note = _gw(index[tau], f"{tau}∘{sigma} missing", "defined"), "table not total"
                break
    row("composition", wit, note)

    wit = None
    if not _closed(g, index):
        wit = _gw(0, "incomplete table", "total table")
    else:
        for a, b, c in itertools.product(labels, repeat=3):
            if g.composable(a, b) and g.composable(b, c):
                lhs = g.compose(g.compose(a, b), c)
                rhs = g.compose(a, g.compose(b, c))
                if lhs != rhs:
                    wit = _gw(index[a], f"({a}∘{b})∘{c}={lhs}", f"{a}∘({b}∘{c})={rhs}")
                    break
    row("associativity", wit)

    wit = None
    for x in g.objects:
        i = g.identities.get(x)
        if i is None or i not in index:
            wit = _gw(0, f"id_{x} missing", "identity arrow")
            break
        if g.source(i) != x or g.target(i) != x:
            wit = _gw(index[i], f"id_{x}={i}", f"loop at {x}")
            break
        for a in labels:
            if g.source(a) == x and g.compose(a, i) != a:
                wit = _gw(index[a], f"{a}∘{i}={g.compose(a, i)}", a)
                break
            if g.target(a) == x and g.compose(i, a) != a:
                wit = _gw(index[a], f"{i}∘{a}={g.compose(i, a)}", a)
                break
        if wit:
            break
    row("identities", wit)

    wit = None
    for k, a in enumerate(labels):
        inv = g.inverses.get(a)
        if inv is None or inv not in index:
            wit = _gw(k, f"{a}⁻¹ missing", "an inverse arrow")
            break
        ids = g.identities
        if (g.compose(inv, a) != ids.get(g.source(a))
                or g.compose(a, inv) != ids.get(g.target(a))):
            wit = _gw(k, f"{a}⁻¹={inv}", "two-sided inverse")
            break
    row("inverses", wit)
    return Report(f"groupoid[{g.name}]", rows)


def _closed(g: GroupoidSpec, index: Mapping[str, int]) -> bool:
    for tau, sigma in itertools.product(g.labels, repeat=2):
        if g.composable(tau, sigma) and g.composition.get((tau, sigma)) not in index:
            return False
    return True


def _require_valid(g: GroupoidSpec) -> None:
    rep = validate_groupoid(g)
    if not rep.passed:
        bad = rep.failures[0]
        raise InvalidGroupoid(f"groupoid {g.name}: {bad.identity_id} fails",
                              witness=bad.witness, report=rep)


# builders ----------------------------------------------------------------

def full_groupoid(n: int, name: Optional[str] = None) -> GroupoidSpec:
    """One arrow E_ij: j -> i for each ordered pair; E_ij o E_jk = E_ik."""
    objs = tuple(str(i) for i in range(1, n + 1))
    arrows = tuple((f"E{i}{j}", j, i) for i in objs for j in objs)
    comp = {(f"E{i}{j}", f"E{j}{k}"): f"E{i}{k}" for i in objs for j in objs for k in objs}
    ids = {x: f"E{x}{x}" for x in objs}
    inv = {f"E{i}{j}": f"E{j}{i}" for i in objs for j in objs}
    return GroupoidSpec(objs, arrows, comp, ids, inv, name or f"Full{n}")


def cyclic_group(n: int, name: Optional[str] = None) -> GroupoidSpec:
    """Z/n as a one-object groupoid with arrows e, g, g2, ..."""
    def lab(k: int) -> str:
        return "e" if k == 0 else ("g" if k == 1 else f"g{k}")

    arrows = tuple((lab(k), "*", "*") for k in range(n))
    comp = {(lab(a), lab(b)): lab((a + b) % n) for a in range(n) for b in range(n)}
    inv = {lab(k): lab(-k % n) for k in range(n)}
    return GroupoidSpec(("*",), arrows, comp, {"*": "e"}, inv, name or f"Z{n}")


def discrete_groupoid(objects: Sequence[str], name: str = "Disc") -> GroupoidSpec:
    objs = tuple(objects)
    arrows = tuple((f"id_{x}", x, x) for x in objs)
    comp = {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in objs}
    ids = {x: f"id_{x}" for x in objs}
    return GroupoidSpec(objs, arrows, comp, ids, {a[0]: a[0] for a in arrows}, name)


def empty_groupoid() -> GroupoidSpec:
    return GroupoidSpec((), (), {}, {}, {}, "Empty")


def product_groupoid(g1: GroupoidSpec, g2: GroupoidSpec,
                     name: Optional[str] = None) -> GroupoidSpec:
    """G1 x G2; arrow (a, b) is labelled ``a.b`` and objects ``x.y``."""
    def ob(x, y):
        return f"{x}.{y}"

    objs = tuple(ob(x, y) for x in g1.objects for y in g2.objects)
    arrows = tuple((f"{a}.{b}", ob(s1, s2), ob(t1, t2))
                   for (a, s1, t1) in g1.arrows for (b, s2, t2) in g2.arrows)
    comp = {}
    for (a1, b1), v1 in g1.composition.items():
        for (a2, b2), v2 in g2.composition.items():
            comp[(f"{a1}.{a2}", f"{b1}.{b2}")] = f"{v1}.{v2}"
    ids = {ob(x, y): f"{g1.identities[x]}.{g2.identities[y]}"
           for x in g1.objects for y in g2.objects}
    inv = {f"{a}.{b}": f"{g1.inverses[a]}.{g2.inverses[b]}" for a in g1.labels for b in g2.labels}
    return GroupoidSpec(objs, arrows, comp, ids, inv, name or f"{g1.name}×{g2.name}")


def groupoid_object(g: GroupoidSpec, label: Optional[str] = None) -> SpaceObject:
    return SpaceObject(label or f"R{g.name}", basis_labels=list(g.labels))


def groupoid_algebra(g: GroupoidSpec, field: Field = QQ, label: Optional[str] = None) -> Wbha:
    """RG with composition-or-zero product, sigma -> sigma (x) sigma and t = flip."""
    _require_valid(g)
    D = groupoid_object(g, label)
    labels = g.labels
    idx = {a: k for k, a in enumerate(labels)}
    n = len(labels)
    DD = D | D

    unit = Morphism.from_columns(K, D, lambda j: {idx[i]: 1 for i in g.identities.values()},
                                 field)

    def mult_col(j: int):
        tau, sigma = labels[j // n], labels[j % n]
        v = g.compose(tau, sigma)
        return {idx[v]: 1} if v is not None else {}

    mult = Morphism.from_columns(DD, D, mult_col, field)
    comult = Morphism.from_columns(D, DD, lambda j: {j * n + j: 1}, field)
    counit = Morphism.from_columns(D, K, lambda j: {0: 1}, field)
    lam = Morphism.from_columns(D, D, lambda j: {idx[g.inverses[labels[j]]]: 1}, field)
    return Wbha(AlgebraStructure(D, unit, mult), CoalgebraStructure(D, counit, comult),
                flip_wyb(D, field), lam, name=D.label)


def group_algebra(n: int, field: Field = QQ) -> Wbha:
    """The Hopf algebra R[Z/n]."""
    return groupoid_algebra(cyclic_group(n), field)


def groupoid_automorphism(g: GroupoidSpec, arrow_map: Mapping[str, str], field: Field = QQ,
                          source: Optional[SpaceObject] = None,
                          target: Optional[SpaceObject] = None) -> Morphism:
    """The linear map of RG induced by a bijection on arrows."""
    src = source or groupoid_object(g)
    tgt = target or src
    idx = {a: k for k, a in enumerate(g.labels)}
    return Morphism.from_columns(src, tgt, lambda j: {idx[arrow_map[g.labels[j]]]: 1}, field)


# exact factorizations ------------------------------------------------------

@dataclass(frozen=True)
class ExactFactorization:
    groupoid: GroupoidSpec
    H_arrows: frozenset
    V_arrows: frozenset
    decomposition: Mapping[str, tuple[str, str]] = field(default_factory=dict)


def _is_wide_subgroupoid(g: GroupoidSpec, sub: frozenset) -> Optional[str]:
    for x in g.objects:
        if g.identities[x] not in sub:
            return f"id_{x} missing"
    for a in sub:
        if g.inverses[a] not in sub:
            return f"{a}⁻¹ missing"
        for b in sub:
            if g.composable(a, b) and g.compose(a, b) not in sub:
                return f"{a}∘{b} not in subgroupoid"
    return None


def exact_factorization(g: GroupoidSpec, H: Sequence[str], V: Sequence[str]
                        ) -> ExactFactorization:
    """Compute sigma = sigma_H o sigma_V by enumeration; raise unless unique."""
    _require_valid(g)
    Hs, Vs = frozenset(H), frozenset(V)
    for name, sub in (("H", Hs), ("V", Vs)):
        problem = _is_wide_subgroupoid(g, sub)
        if problem:
            raise NotExactFactorization(f"{name} is not a wide subgroupoid: {problem}")
    dec: dict[str, tuple[str, str]] = {}
    for sigma in g.labels:
        found = [(h, v) for h in g.labels if h in Hs for v in g.labels if v in Vs
                 if g.composable(h, v) and g.compose(h, v) == sigma]
        if len(found) != 1:
            raise NotExactFactorization(
                f"{sigma} has {len(found)} decompositions sigma_H∘sigma_V")
        dec[sigma] = found[0]
    return ExactFactorization(g, Hs, Vs, dec)


def exact_factorization_operator(ef: ExactFactorization, field: Field = QQ,
                                 carrier: Optional[SpaceObject] = None) -> WeakYangBaxter:
    """Omega(sigma (x) tau) = sigma_H (x) tau_V."""
    g = ef.groupoid
    D = carrier or groupoid_object(g)
    labels = g.labels
    idx = {a: k for k, a in enumerate(labels)}
    n = len(labels)

    def col(j: int):
        sigma, tau = labels[j // n], labels[j % n]
        return {idx[ef.decomposition[sigma][0]] * n + idx[ef.decomposition[tau][1]]: 1}

    omega = Morphism.from_columns(D | D, D | D, col, field)
    return wyb_from_idempotent(omega, D)


# separable Frobenius algebras ---------------------------------------------

@dataclass(frozen=True)
class FrobeniusSeparableAlgebra:
    algebra: AlgebraStructure
    coalgebra: CoalgebraStructure

    @property
    def carrier(self) -> SpaceObject:
        return self.algebra.carrier


def check_frobenius(a: FrobeniusSeparableAlgebra) -> Report:
    A = a.carrier
    mu, delta = a.algebra.mult, a.coalgebra.comult
    rows = run_checks("frobenius", [
        Identity("frobenius", lambda: [(delta @ mu, (A | mu) @ (delta | A)),
                                       (delta @ mu, (mu | A) @ (A | delta))]),
        Identity("separable", lambda: (mu @ delta, identity(A, mu.field))),
    ])
    return combine(f"frobenius[{A.label}]", check_algebra(a.algebra),
                   check_coalgebra(a.coalgebra), rows)


def matrix_frobenius(n: int, field: Field = QQ) -> FrobeniusSeparableAlgebra:
    """M_n with delta(E_ij) = (1/n) sum_k E_ik (x) E_kj and eps = n * trace."""
    A = SpaceObject(f"M{n}", basis_labels=[f"e{i}{j}" for i in range(1, n + 1)
                                           for j in range(1, n + 1)])

    def e(i, j):
        return i * n + j

    unit = Morphism.from_columns(K, A, lambda _: {e(i, i): 1 for i in range(n)}, field)

    def mult_col(c: int):
        (i, j), (k, l) = divmod(c // (n * n), n), divmod(c % (n * n), n)
        return {e(i, l): 1} if j == k else {}

    mult = Morphism.from_columns(A | A, A, mult_col, field)
    counit = Morphism.from_columns(A, K, lambda c: {0: n} if c // n == c % n else {}, field)
    inv_n = Fraction(1, n)

    def comult_col(c: int):
        i, j = divmod(c, n)
        return {e(i, k) * n * n + e(k, j): inv_n for k in range(n)}

    comult = Morphism.from_columns(A, A | A, comult_col, field)
    return FrobeniusSeparableAlgebra(AlgebraStructure(A, unit, mult),
                                     CoalgebraStructure(A, counit, comult))


def frobenius_weak_hopf(a: FrobeniusSeparableAlgebra, validate: bool = True) -> Wbha:
    """The weak Hopf algebra A (x) A in the symmetric case c = flip."""
    if validate:
        rep = check_frobenius(a)
        if not rep.passed:
            bad = rep.failures[0]
            raise NotSeparableFrobenius(f"{bad.identity_id} fails", witness=bad.witness,
                                        report=rep)
    A = a.carrier
    fld = a.algebra.mult.field
    eta, mu = a.algebra.unit, a.algebra.mult
    eps, delta = a.coalgebra.counit, a.coalgebra.comult
    c = flip(A, A, fld)
    D = A | A
    de = delta @ eta
    unit = eta | eta
    mult = ((mu @ c) | mu) @ (A | c | A)
    counit = eps @ mu
    comult = A | de | A
    lam = (counit | A | A) @ (A | c | A) @ (de | c)
    return Wbha(AlgebraStructure(D, unit, mult), CoalgebraStructure(D, counit, comult),
                flip_wyb(D, fld), lam, name=f"{A.label}⊗{A.label}")


def frobenius_pi_L(a: FrobeniusSeparableAlgebra) -> Morphism:
    """The closed form of Pi^L for A (x) A."""
    A = a.carrier
    fld = a.algebra.mult.field
    em = a.coalgebra.counit @ a.algebra.mult
    left = (em | A) @ (A | flip(A, A, fld)) @ (a.coalgebra.comult | A)
    return left | a.algebra.unit

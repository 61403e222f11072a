"""Algebras, coalgebras, (co)modules and convolution.

Structures are plain containers. Axioms are checked by the ``check_*``
predicates and never enforced at construction, because later constructions
deliberately build non-unital actions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ObjectMismatch
from .fields import QQ, Field
from .report import Identity, Report, run_checks
from .tensor_core import K, Morphism, SpaceObject


def _expect(m: Morphism, source: SpaceObject, target: SpaceObject, what: str) -> None:
    if m.source != source or m.target != target:
        raise ObjectMismatch(
            f"{what} must map {source.label} -> {target.label}, "
            f"got {m.source.label} -> {m.target.label}")


@dataclass(frozen=True)
class AlgebraStructure:
    carrier: SpaceObject
    unit: Morphism
    mult: Morphism

    def __post_init__(self):
        a = self.carrier
        _expect(self.unit, K, a, "unit")
        _expect(self.mult, a | a, a, "multiplication")


@dataclass(frozen=True)
class CoalgebraStructure:
    carrier: SpaceObject
    counit: Morphism
    comult: Morphism

    def __post_init__(self):
        c = self.carrier
        _expect(self.counit, c, K, "counit")
        _expect(self.comult, c, c | c, "comultiplication")


@dataclass(frozen=True)
class ModuleStructure:
    base: AlgebraStructure
    carrier: SpaceObject
    action: Morphism

    def __post_init__(self):
        _expect(self.action, self.base.carrier | self.carrier, self.carrier, "action")


@dataclass(frozen=True)
class ComoduleStructure:
    base: CoalgebraStructure
    carrier: SpaceObject
    coaction: Morphism

    def __post_init__(self):
        _expect(self.coaction, self.carrier, self.base.carrier | self.carrier, "coaction")


def check_algebra(a: AlgebraStructure) -> Report:
    A, eta, mu = a.carrier, a.unit, a.mult
    return run_checks("algebra", [
        Identity("alg-unit-left", lambda: (mu @ (eta | A), _id(A, mu))),
        Identity("alg-unit-right", lambda: (mu @ (A | eta), _id(A, mu))),
        Identity("alg-assoc", lambda: (mu @ (mu | A), mu @ (A | mu))),
    ])


def check_coalgebra(c: CoalgebraStructure) -> Report:
    C, eps, delta = c.carrier, c.counit, c.comult
    return run_checks("coalgebra", [
        Identity("coalg-counit-left", lambda: ((eps | C) @ delta, _id(C, delta))),
        Identity("coalg-counit-right", lambda: ((C | eps) @ delta, _id(C, delta))),
        Identity("coalg-coassoc", lambda: ((delta | C) @ delta, (C | delta) @ delta)),
    ])


def check_module(m: ModuleStructure) -> Report:
    D, M, phi = m.base.carrier, m.carrier, m.action
    eta, mu = m.base.unit, m.base.mult
    return run_checks("module", [
        Identity("mod-unit", lambda: (phi @ (eta | M), _id(M, phi))),
        Identity("mod-assoc", lambda: (phi @ (D | phi), phi @ (mu | M))),
    ])


def check_comodule(m: ComoduleStructure) -> Report:
    D, M, rho = m.base.carrier, m.carrier, m.coaction
    eps, delta = m.base.counit, m.base.comult
    return run_checks("comodule", [
        Identity("comod-counit", lambda: ((eps | M) @ rho, _id(M, rho))),
        Identity("comod-coassoc", lambda: ((D | rho) @ rho, (delta | M) @ rho)),
    ])


def _id(obj: SpaceObject, like: Morphism) -> Morphism:
    return Morphism.identity(obj, like.field)


def convolution(alpha: Morphism, beta: Morphism, a: AlgebraStructure,
                c: CoalgebraStructure) -> Morphism:
    """alpha * beta = mu o (alpha (x) beta) o delta."""
    for f in (alpha, beta):
        _expect(f, c.carrier, a.carrier, "convolution factor")
    return a.mult @ (alpha | beta) @ c.comult


def algebra_morphism_report(f: Morphism, a: AlgebraStructure, b: AlgebraStructure) -> Report:
    _expect(f, a.carrier, b.carrier, "algebra morphism")
    return run_checks("algebra-morphism", [
        Identity("alg-hom-unit", lambda: (f @ a.unit, b.unit)),
        Identity("alg-hom-mult", lambda: (f @ a.mult, b.mult @ (f | f))),
    ])


def coalgebra_morphism_report(f: Morphism, c: CoalgebraStructure,
                              d: CoalgebraStructure) -> Report:
    _expect(f, c.carrier, d.carrier, "coalgebra morphism")
    return run_checks("coalgebra-morphism", [
        Identity("coalg-hom-counit", lambda: (d.counit @ f, c.counit)),
        Identity("coalg-hom-comult", lambda: (d.comult @ f, (f | f) @ c.comult)),
    ])


def module_morphism_report(f: Morphism, m: ModuleStructure, n: ModuleStructure) -> Report:
    """f o phi_M = phi_N o (D (x) f)."""
    _expect(f, m.carrier, n.carrier, "module morphism")
    D = m.base.carrier
    return run_checks("module-morphism", [
        Identity("mod-hom", lambda: (f @ m.action, n.action @ (D | f))),
    ])


def comodule_morphism_report(f: Morphism, m: ComoduleStructure,
                             n: ComoduleStructure) -> Report:
    """rho_N o f = (D (x) f) o rho_M."""
    _expect(f, m.carrier, n.carrier, "comodule morphism")
    D = m.base.carrier
    return run_checks("comodule-morphism", [
        Identity("comod-hom", lambda: (n.coaction @ f, (D | f) @ m.coaction)),
    ])


def is_module_morphism(f: Morphism, m: ModuleStructure, n: ModuleStructure) -> bool:
    return module_morphism_report(f, m, n).passed


def is_comodule_morphism(f: Morphism, m: ComoduleStructure, n: ComoduleStructure) -> bool:
    return comodule_morphism_report(f, m, n).passed


def unit_algebra(field: Field = QQ) -> AlgebraStructure:
    """The ground field as a one-dimensional algebra."""
    one = Morphism(K, K, [[1]], field)
    return AlgebraStructure(K, one, one)


def unit_coalgebra(field: Field = QQ) -> CoalgebraStructure:
    one = Morphism(K, K, [[1]], field)
    return CoalgebraStructure(K, one, one)

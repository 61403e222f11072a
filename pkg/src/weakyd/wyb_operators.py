"""Weak Yang-Baxter operators (t, t', nabla) and their axiom checker."""

from __future__ import annotations

from functools import cached_property
from typing import Optional

from .algebra_structures import AlgebraStructure, CoalgebraStructure
from .errors import Eq12Violation, NotIdempotent, WybAxiomViolation
from .report import Identity, Report, Verdict, chain, compare, run_checks
from .tensor_core import (Morphism, SpaceObject, SplitIdempotent, flip, identity,
                          split_idempotent)


class WeakYangBaxter:
    """The triple (t, t', nabla) on D (x) D.

    The splitting of nabla (image D x D) is computed on first use, so that a
    corrupted triple can still be handed to ``check_wyb`` and reported on.
    """

    def __init__(self, carrier: SpaceObject, t: Morphism, t_prime: Morphism,
                 nabla: Morphism):
        dd = carrier | carrier
        for name, m in (("t", t), ("t_prime", t_prime), ("nabla", nabla)):
            if m.source != dd or m.target != dd:
                raise ValueError(f"{name} must be an endomorphism of {dd.label}")
        self.carrier = carrier
        self.t = t
        self.t_prime = t_prime
        self.nabla = nabla

    @cached_property
    def split(self) -> SplitIdempotent:
        D = self.carrier
        return split_idempotent(self.nabla, label=f"{D.label}×{D.label}")

    def swapped(self) -> "WeakYangBaxter":
        """The same data with t and t' exchanged."""
        return WeakYangBaxter(self.carrier, self.t_prime, self.t, self.nabla)

    def __repr__(self) -> str:
        return f"WeakYangBaxter({self.carrier.label})"


def _a3_1(w: WeakYangBaxter) -> Verdict:
    s = w.split
    p, i = s.proj, s.inj
    a = p @ w.t @ i
    b = p @ w.t_prime @ i
    one = identity(s.image, w.t.field)
    for k, (lhs, rhs) in enumerate(((a @ b, one), (b @ a, one))):
        wit = compare(lhs, rhs)
        if wit is not None:
            return Verdict(False, wit, f"product {k + 1} of 2 is not the identity on D×D")
    return Verdict(True)


def wyb_identities(w: WeakYangBaxter) -> list[Identity]:
    D, t, tp, nb = w.carrier, w.t, w.t_prime, w.nabla

    def idem():
        return nb @ nb, nb

    return [
        Identity("a1", lambda: ((t | D) @ (D | t) @ (t | D), (D | t) @ (t | D) @ (D | t))),
        Identity("a2-idempotent", idem),
        Identity("a2-1", lambda: ((nb | D) @ (D | nb), (D | nb) @ (nb | D))),
        Identity("a2-2", lambda: ((nb | D) @ (D | t), (D | t) @ (nb | D))),
        Identity("a2-3", lambda: ((t | D) @ (D | nb), (D | nb) @ (t | D))),
        Identity("a2-4", lambda: chain(t @ nb, nb @ t, t)),
        Identity("a3-1", lambda: _a3_1(w)),
        Identity("a3-2", lambda: chain(tp @ nb, nb @ tp, tp)),
        Identity("Eq(2)", lambda: chain(tp @ t, t @ tp, nb)),
        Identity("Eq(3)", lambda: ((D | t) @ (t | D) @ (D | tp), (tp | D) @ (D | t) @ (t | D))),
        Identity("Eq(4)", lambda: ((t | D) @ (D | t) @ (tp | D), (D | tp) @ (t | D) @ (D | t))),
        Identity("Eq(5)", lambda: ((D | tp) @ (tp | D) @ (D | t), (t | D) @ (D | tp) @ (tp | D))),
        Identity("Eq(6)", lambda: ((tp | D) @ (D | tp) @ (t | D), (D | t) @ (tp | D) @ (D | tp))),
    ]


def check_wyb(w: WeakYangBaxter) -> Report:
    return run_checks(f"wyb[{w.carrier.label}]", wyb_identities(w))


def commutation_witness(omega: Morphism, carrier: SpaceObject):
    D = carrier
    return compare((omega | D) @ (D | omega), (D | omega) @ (omega | D))


def wyb_from_idempotent(omega: Morphism, carrier: Optional[SpaceObject] = None
                        ) -> WeakYangBaxter:
    """t = t' = nabla = omega for an idempotent omega commuting with itself.

    The commutation required is (omega⊗D)(D⊗omega) = (D⊗omega)(omega⊗D).
    """
    D = carrier or omega.source.factors[0]
    wit = compare(omega @ omega, omega)
    if wit is not None:
        raise NotIdempotent("omega is not idempotent", witness=wit)
    wit = commutation_witness(omega, D)
    if wit is not None:
        raise Eq12Violation(f"(omega⊗D)(D⊗omega) != (D⊗omega)(omega⊗D) at "
                            f"({wit.row}, {wit.col})", witness=wit)
    return WeakYangBaxter(D, omega, omega, omega)


def _validated(w: WeakYangBaxter) -> WeakYangBaxter:
    rep = check_wyb(w)
    if not rep.passed:
        bad = rep.failures[0]
        raise WybAxiomViolation(f"{bad.identity_id} fails", witness=bad.witness, report=rep)
    return w


def wyb_algebra_idempotent(a: AlgebraStructure) -> WeakYangBaxter:
    """omega = eta (x) (mu o c), x (x) y -> 1 (x) yx, with c the flip."""
    D = a.carrier
    omega = a.unit | (a.mult @ flip(D, D, a.mult.field))
    return _validated(WeakYangBaxter(D, omega, omega, omega))


def wyb_coalgebra_idempotent(c: CoalgebraStructure) -> WeakYangBaxter:
    """omega' = eps (x) (c o delta), x (x) y -> eps(x) y_2 (x) y_1."""
    D = c.carrier
    omega = c.counit | (flip(D, D, c.comult.field) @ c.comult)
    return _validated(WeakYangBaxter(D, omega, omega, omega))


def flip_wyb(carrier: SpaceObject, field=None) -> WeakYangBaxter:
    """The symmetric case t = t' = flip, nabla = id."""
    from .fields import QQ

    fld = field or QQ
    c = flip(carrier, carrier, fld)
    return WeakYangBaxter(carrier, c, c, identity(carrier | carrier, fld))

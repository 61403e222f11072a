"""Weak braided bialgebras and Hopf algebras.

A ``Wbha`` bundles an algebra and a coalgebra on the same carrier D, a weak
Yang-Baxter operator on D and an antipode. The four projections

    Pi^L    = ((eps mu) (x) D) (D (x) t) ((delta eta) (x) D)
    Pi^R    = (D (x) (eps mu)) (t (x) D) (D (x) (delta eta))
    Pibar^L = (D (x) (eps mu)) ((delta eta) (x) D)
    Pibar^R = ((eps mu) (x) D) (D (x) (delta eta))

are computed once at construction.
"""

from __future__ import annotations

import threading
from typing import Optional

from .algebra_structures import (AlgebraStructure, CoalgebraStructure,
                                 algebra_morphism_report, coalgebra_morphism_report,
                                 convolution)
from .errors import ObjectMismatch, SingularAntipode, SingularMatrix
from .report import Identity, Report, SkipCheck, chain, run_checks
from .tensor_core import Morphism, SpaceObject, flip, identity, inverse
from .wyb_operators import WeakYangBaxter


class Wbha:
    def __init__(self, algebra: AlgebraStructure, coalgebra: CoalgebraStructure,
                 wyb: WeakYangBaxter, antipode: Morphism,
                 antipode_inverse: Optional[Morphism] = None, name: Optional[str] = None):
        D = algebra.carrier
        if coalgebra.carrier != D or wyb.carrier != D:
            raise ObjectMismatch("algebra, coalgebra and operator must share a carrier")
        if antipode.source != D or antipode.target != D:
            raise ObjectMismatch("antipode must be an endomorphism of the carrier")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.wyb = wyb
        self.antipode = antipode
        self.name = name or D.label
        self._given_inverse = antipode_inverse
        self._inverse = antipode_inverse
        self._inverse_error: Optional[SingularAntipode] = None
        self._lock = threading.Lock()
        self.pi_L = (self.eps_mu | D) @ (D | self.t) @ (self.delta_eta | D)
        self.pi_R = (D | self.eps_mu) @ (self.t | D) @ (D | self.delta_eta)
        self.pibar_L = (D | self.eps_mu) @ (self.delta_eta | D)
        self.pibar_R = (self.eps_mu | D) @ (D | self.delta_eta)

    # shorthand ------------------------------------------------------------

    @property
    def carrier(self) -> SpaceObject:
        return self.algebra.carrier

    @property
    def field(self):
        return self.algebra.mult.field

    @property
    def eta(self) -> Morphism:
        return self.algebra.unit

    @property
    def mu(self) -> Morphism:
        return self.algebra.mult

    @property
    def eps(self) -> Morphism:
        return self.coalgebra.counit

    @property
    def delta(self) -> Morphism:
        return self.coalgebra.comult

    @property
    def lam(self) -> Morphism:
        return self.antipode

    @property
    def t(self) -> Morphism:
        return self.wyb.t

    @property
    def t_prime(self) -> Morphism:
        return self.wyb.t_prime

    @property
    def nabla(self) -> Morphism:
        return self.wyb.nabla

    @property
    def eps_mu(self) -> Morphism:
        return self.eps @ self.mu

    @property
    def delta_eta(self) -> Morphism:
        return self.delta @ self.eta

    @property
    def id(self) -> Morphism:
        return identity(self.carrier, self.field)

    def conv(self, alpha: Morphism, beta: Morphism) -> Morphism:
        return convolution(alpha, beta, self.algebra, self.coalgebra)

    # antipode inverse -----------------------------------------------------

    @property
    def antipode_inverse(self) -> Morphism:
        """lam^{-1}, computed on first use; SingularAntipode if it does not exist."""
        with self._lock:
            if self._inverse is None and self._inverse_error is None:
                try:
                    self._inverse = inverse(self.antipode)
                except SingularMatrix as exc:
                    self._inverse_error = SingularAntipode(
                        f"antipode of {self.name} is singular ({exc})")
            if self._inverse_error is not None:
                raise self._inverse_error
            return self._inverse

    @property
    def has_invertible_antipode(self) -> bool:
        try:
            self.antipode_inverse
        except SingularAntipode:
            return False
        return True

    def replace(self, **changes) -> "Wbha":
        """A copy with some structure morphisms replaced (used for corruption tests)."""
        D = self.carrier
        mu = changes.get("mu", self.mu)
        eta = changes.get("eta", self.eta)
        eps = changes.get("eps", self.eps)
        delta = changes.get("delta", self.delta)
        t = changes.get("t", self.t)
        tp = changes.get("t_prime", self.t_prime)
        nb = changes.get("nabla", self.nabla)
        lam = changes.get("lam", self.antipode)
        return Wbha(AlgebraStructure(D, eta, mu), CoalgebraStructure(D, eps, delta),
                    WeakYangBaxter(D, t, tp, nb), lam, name=changes.get("name", self.name))

    def __repr__(self) -> str:
        return f"Wbha({self.name}, dim={self.carrier.dim})"


def projections(d: Wbha) -> tuple[Morphism, Morphism, Morphism, Morphism]:
    """(Pi^L, Pi^R, Pibar^L, Pibar^R); raises AssertionError if one is not idempotent."""
    out = (d.pi_L, d.pi_R, d.pibar_L, d.pibar_R)
    for m in out:
        assert m.is_idempotent(), "projection is not idempotent"
    return out


def check_wbb(d: Wbha) -> Report:
    D, mu, delta, t, tp, nb = d.carrier, d.mu, d.delta, d.t, d.t_prime, d.nabla
    em, de = d.eps_mu, d.delta_eta
    ids = [
        Identity("b1-1", lambda: (mu @ nb, mu)),
        Identity("b1-2", lambda: (nb @ (mu | D), (mu | D) @ (D | nb))),
        Identity("b1-3", lambda: (nb @ (D | mu), (D | mu) @ (nb | D))),
        Identity("b2-1", lambda: (nb @ delta, delta)),
        Identity("b2-2", lambda: ((delta | D) @ nb, (D | nb) @ (delta | D))),
        Identity("b2-3", lambda: ((D | delta) @ nb, (nb | D) @ (D | delta))),
        Identity("b3-1", lambda: (t @ (mu | D), (D | mu) @ (t | D) @ (D | t))),
        Identity("b3-2", lambda: (t @ (D | mu), (mu | D) @ (D | t) @ (t | D))),
        Identity("b3-3", lambda: ((delta | D) @ t, (D | t) @ (t | D) @ (D | delta))),
        Identity("b3-4", lambda: ((D | delta) @ t, (t | D) @ (D | t) @ (delta | D))),
        Identity("b4", lambda: (delta @ mu, (mu | mu) @ (D | t | D) @ (delta | delta))),
        Identity("b5-1", lambda: (em @ (mu | D), (em | em) @ (D | delta | D))),
        Identity("b5-2", lambda: (em @ (mu | D), (em | em) @ (D | (tp @ delta) | D))),
        Identity("b6-1", lambda: ((delta | D) @ de, (D | mu | D) @ (de | de))),
        Identity("b6-2", lambda: ((delta | D) @ de, (D | (mu @ tp) | D) @ (de | de))),
    ]
    return run_checks(f"wbb[{d.name}]", ids)


def check_antipode(d: Wbha) -> Report:
    D, lam, t = d.carrier, d.lam, d.t
    em, de = d.eps_mu, d.delta_eta
    ids = [
        Identity("b7-1", lambda: (d.conv(d.id, lam), (em | D) @ (D | t) @ (de | D))),
        Identity("b7-2", lambda: (d.conv(lam, d.id), (D | em) @ (t | D) @ (D | de))),
        Identity("b7-3", lambda: (d.conv(d.conv(lam, d.id), lam), lam)),
    ]
    if d._given_inverse is not None:
        li = d._given_inverse
        ids.append(Identity("antipode-inverse", lambda: chain(lam @ li, li @ lam, d.id)))
    return run_checks(f"antipode[{d.name}]", ids)


def check_weak_hopf(d: Wbha) -> Report:
    """The weak Hopf axioms (i)-(iv) written with the flip of the carrier."""
    D, mu, delta, eta, eps, lam = d.carrier, d.mu, d.delta, d.eta, d.eps, d.lam
    c = flip(D, D, d.field)
    em, de = d.eps_mu, d.delta_eta
    ids = [
        Identity("wh-i", lambda: (delta @ mu, (mu | mu) @ (D | c | D) @ (delta | delta))),
        Identity("wh-ii", lambda: chain(
            eps @ mu @ (mu | D),
            (eps | eps) @ (mu | mu) @ (D | delta | D),
            (eps | eps) @ (mu | mu) @ (D | (c @ delta) | D))),
        Identity("wh-iii", lambda: chain(
            (delta | D) @ delta @ eta,
            (D | mu | D) @ (delta | delta) @ (eta | eta),
            (D | (mu @ c) | D) @ (delta | delta) @ (eta | eta))),
        Identity("wh-iv-1", lambda: (d.conv(d.id, lam), (em | D) @ (D | c) @ (de | D))),
        Identity("wh-iv-2", lambda: (d.conv(lam, d.id), (D | em) @ (c | D) @ (D | de))),
        Identity("wh-iv-3", lambda: (d.conv(d.conv(lam, d.id), lam), lam)),
    ]
    return run_checks(f"weak-hopf[{d.name}]", ids)


def invert_antipode(d: Wbha) -> Morphism:
    return d.antipode_inverse


def derived_identity_suite(d: Wbha) -> Report:
    D, mu, delta, eta, eps, lam = d.carrier, d.mu, d.delta, d.eta, d.eps, d.lam
    t, tp, nb = d.t, d.t_prime, d.nabla
    pL, pR, bL, bR = d.pi_L, d.pi_R, d.pibar_L, d.pibar_R
    one = d.id
    conv = d.conv
    em, de = d.eps_mu, d.delta_eta

    def lam_inv():
        try:
            return d.antipode_inverse
        except SingularAntipode as exc:
            raise SkipCheck(str(exc))

    ids = [
        Identity("Eq(17)", lambda: chain(t @ (eta | D), nb @ (D | eta), tp @ (eta | D))),
        Identity("Eq(18)", lambda: chain(t @ (D | eta), nb @ (eta | D), tp @ (D | eta))),
        Identity("Eq(19)", lambda: chain((D | eps) @ t, (eps | D) @ nb, (D | eps) @ tp)),
        Identity("Eq(20)", lambda: chain((eps | D) @ t, (D | eps) @ nb, (eps | D) @ tp)),
        Identity("Eq(21)", lambda: (tp @ (mu | D), (D | mu) @ (tp | D) @ (D | tp))),
        Identity("Eq(22)", lambda: (tp @ (D | mu), (mu | D) @ (D | tp) @ (tp | D))),
        Identity("Eq(23)", lambda: ((delta | D) @ tp, (D | tp) @ (tp | D) @ (D | delta))),
        Identity("Eq(24)", lambda: ((D | delta) @ tp, (tp | D) @ (D | tp) @ (delta | D))),
        Identity("Pi-idempotent", lambda: [(p @ p, p) for p in (pL, pR, bL, bR)]),
        Identity("Pi-unit", lambda: [(p @ eta, eta) for p in (pL, pR, bL, bR)]),
        Identity("Pi-counit", lambda: [(eps @ p, eps) for p in (pL, pR, bL, bR)]),
        Identity("Eq(25)", lambda: [
            (pL, conv(one, lam)), (pR, conv(lam, one)),
            (lam, conv(lam, pL)), (lam, conv(pR, lam))]),
        Identity("Eq(26)", lambda: chain(conv(conv(one, lam), one), conv(pL, one),
                                         conv(one, pR), one)),
        Identity("Eq(27)", lambda: [(pL @ bL, pL), (pL @ bR, bR), (bL @ pL, bL), (bR @ pL, pL)]),
        Identity("Eq(28)", lambda: [(pR @ bL, bL), (pR @ bR, pR), (bL @ pR, pR), (bR @ pR, bR)]),
        Identity("Eq(29)", lambda: chain(pL @ lam, pL @ pR, lam @ pR)
                 + chain(pR @ lam, pR @ pL, lam @ pL)),
        Identity("Eq(30)", lambda: chain(pL, bR @ lam, lam @ bL) + chain(pR, bL @ lam, lam @ bR)),
        Identity("Eq(31)", lambda: (lam @ mu, mu @ t @ (lam | lam))),
        Identity("Eq(32)", lambda: (delta @ lam, (lam | lam) @ t @ delta)),
        Identity("Eq(33)", lambda: [(lam @ eta, eta), (eps @ lam, eps)]),
        Identity("Eq(90)", lambda: ((D | pL) @ delta, (mu | D) @ (D | t) @ (de | D))),
        Identity("antipode-inverse", lambda: chain(lam @ lam_inv(), lam_inv() @ lam, one)),
    ]
    return run_checks(f"derived[{d.name}]", ids)


def wbha_morphism_report(f: Morphism, d: Wbha, b: Wbha) -> Report:
    """f: D -> B is an algebra-coalgebra morphism intertwining t and t'.

    Also checks the consequences f lam_D = lam_B f and f (x) f intertwining nabla.
    """
    rep = Report(f"wbha-morphism[{d.name}->{b.name}]")
    rep.extend(algebra_morphism_report(f, d.algebra, b.algebra))
    rep.extend(coalgebra_morphism_report(f, d.coalgebra, b.coalgebra))
    ff = f | f
    rep.extend(run_checks("", [
        Identity("hom-t", lambda: (b.t @ ff, ff @ d.t)),
        Identity("hom-t'", lambda: (b.t_prime @ ff, ff @ d.t_prime)),
        Identity("hom-nabla", lambda: (b.nabla @ ff, ff @ d.nabla)),
        Identity("hom-antipode", lambda: (f @ d.lam, b.lam @ f)),
    ]))
    return rep

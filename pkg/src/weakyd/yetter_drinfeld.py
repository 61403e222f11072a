"""Left-left Yetter-Drinfeld modules over a WBHA and their monoidal structure.

The product M x N is the image of the idempotent

    nabla_{M(x)N} = (phi_M (x) phi_N) (D (x) s_M (x) N) ((delta eta) (x) M (x) N)

split by the deterministic rule of ``split_idempotent``. Products are cached
per pair of modules so that iterated products and constraints share objects.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .algebra_structures import (ComoduleStructure, ModuleStructure, check_comodule,
                                 check_module, comodule_morphism_report,
                                 module_morphism_report)
from .errors import (NablaDeltaMismatch, NotSymmetricBase, ObjectMismatch, SingularAntipode,
                     YdViolation)
from .report import (Identity, Report, SkipCheck, Verdict, chain, combine, compare,
                     run_checks)
from .tensor_core import Morphism, SpaceObject, SplitIdempotent, flip, identity, split_idempotent
from .wbha import Wbha
from .weak_operators import (WeakOperatorQuad, check_comodule_compat, check_module_compat,
                             check_wo, unit_support_identities)
from .wyb_operators import WeakYangBaxter, check_wyb


class YdModule:
    def __init__(self, base: Wbha, carrier: SpaceObject, action: Morphism, coaction: Morphism,
                 wo: WeakOperatorQuad, name: Optional[str] = None):
        D = base.carrier
        if action.source != (D | carrier) or action.target != carrier:
            raise ObjectMismatch("action must map D⊗M -> M")
        if coaction.source != carrier or coaction.target != (D | carrier):
            raise ObjectMismatch("coaction must map M -> D⊗M")
        if wo.carrier != carrier or wo.base is not base:
            raise ObjectMismatch("weak operator belongs to another object or base")
        self.base = base
        self.carrier = carrier
        self.action = action
        self.coaction = coaction
        self.wo = wo
        self.name = name or carrier.label
        self.split: Optional[SplitIdempotent] = None
        self._products: dict[int, tuple["YdModule", "YdProduct"]] = {}
        self._lock = threading.Lock()

    @property
    def module(self) -> ModuleStructure:
        return ModuleStructure(self.base.algebra, self.carrier, self.action)

    @property
    def comodule(self) -> ComoduleStructure:
        return ComoduleStructure(self.base.coalgebra, self.carrier, self.coaction)

    def replace(self, **changes) -> "YdModule":
        return YdModule(self.base, self.carrier, changes.get("action", self.action),
                        changes.get("coaction", self.coaction), changes.get("wo", self.wo),
                        changes.get("name", self.name))

    def __repr__(self) -> str:
        return f"YdModule({self.name}, dim={self.carrier.dim})"


@dataclass(frozen=True)
class YdMorphism:
    source: YdModule
    target: YdModule
    map: Morphism

    def __post_init__(self):
        if self.map.source != self.source.carrier or self.map.target != self.target.carrier:
            raise ObjectMismatch("map does not match the modules' carriers")


def yd_identity(m: YdModule) -> YdMorphism:
    return YdMorphism(m, m, identity(m.carrier, m.base.field))


def compose_yd(g: YdMorphism, f: YdMorphism) -> YdMorphism:
    if f.target is not g.source:
        raise ObjectMismatch("YD morphisms are not composable")
    return YdMorphism(f.source, g.target, g.map @ f.map)


# the YD conditions ------------------------------------------------------------

def _yd_sides(m: YdModule):
    d, M = m.base, m.carrier
    D = d.carrier
    phi, rho, r, s = m.action, m.coaction, m.wo.r, m.wo.s
    x = (d.mu | phi) @ (D | d.t | M) @ (d.delta | rho)
    yd1 = (rho, x @ (d.eta | M))
    yd2 = (x, (d.mu | M) @ (D | r) @ ((rho @ phi) | D) @ (D | s) @ (d.delta | M))
    yd3 = (rho @ phi, (d.mu | M) @ (D | r) @ (x | d.lam) @ (D | s) @ (d.delta | M))
    return yd1, yd2, yd3


def premises_report(m: YdModule) -> Report:
    """Module, comodule, weak operator and both compatibilities."""
    return combine(f"yd-premises[{m.name}]", check_module(m.module), check_comodule(m.comodule),
                   check_wo(m.wo), check_module_compat(m.wo, m.module),
                   check_comodule_compat(m.wo, m.comodule))


def check_yd(m: YdModule) -> Report:
    """yd1, yd2, yd3 and the equivalence (yd1 and yd2) <=> yd3.

    The equivalence row compares truth values. A mismatch counts as a failure
    only when the structures it presupposes (module, comodule, compatible weak
    operator) are valid; otherwise the row is skipped.
    """
    sides = {}

    def side(k: int):
        if not sides:
            sides.update(enumerate(_yd_sides(m)))
        return sides[k]

    def equivalence() -> Verdict:
        held = [compare(*side(k)) is None for k in range(3)]
        ok = (held[0] and held[1]) == held[2]
        note = "yd1={} yd2={} yd3={}".format(*("T" if h else "F" for h in held))
        prem = premises_report(m)
        if not prem.passed:
            note += f"; premises fail at {prem.failures[0].identity_id}"
            if not ok:
                raise SkipCheck(note)
        return Verdict(ok, None, note)

    ids = [
        Identity("yd1", lambda: side(0)),
        Identity("yd2", lambda: side(1)),
        Identity("yd3", lambda: side(2)),
        Identity("P2.8", equivalence),
    ]
    return run_checks(f"yd[{m.name}]", ids, jobs=1)


def yd_full_report(m: YdModule) -> Report:
    return combine(f"yd-full[{m.name}]", premises_report(m), check_yd(m))


def require_yd(m: YdModule) -> YdModule:
    rep = yd_full_report(m)
    if not rep.passed:
        bad = rep.failures[0]
        raise YdViolation(f"{m.name}: {bad.identity_id} fails", witness=bad.witness, report=rep)
    return m


def yd_derived_suite(m: YdModule) -> Report:
    d, M = m.base, m.carrier
    D = d.carrier
    phi, rho = m.action, m.coaction
    w = m.wo
    r, rp, s, sp = w.r, w.r_prime, w.s, w.s_prime
    ns, nrp, nr, nsp = w.nabla_s, w.nabla_r_prime, w.nabla_r, w.nabla_s_prime
    t, lam, mu, delta = d.t, d.lam, d.mu, d.delta
    pL, pR = d.pi_L, d.pi_R
    em, de = d.eps_mu, d.delta_eta
    rs = r @ s

    def need_inverse():
        try:
            d.antipode_inverse
        except SingularAntipode as exc:
            raise SkipCheck(str(exc))

    def iff(a, b):
        def thunk() -> Verdict:
            need_inverse()
            wa, wb = compare(*a()), compare(*b())
            ok = (wa is None) == (wb is None)
            note = f"lhs {'holds' if wa is None else 'fails'}, rhs {'holds' if wb is None else 'fails'}"
            return Verdict(ok, None if ok else (wa or wb), note)
        return thunk

    def gated(f):
        def thunk():
            need_inverse()
            return f()
        return thunk

    ids = [
        Identity("Eq(114)", lambda: (rho @ phi @ (pL | M), (mu | M) @ (pL | rho))),
        Identity("Eq(115)", lambda: ((pL | M) @ rho @ phi, (pL | phi) @ (delta | M))),
        Identity("Eq(116)", lambda: (rho @ phi @ (pR | M),
                                     (mu | M) @ (D | (lam @ pR) | M) @ (D | rs) @ (t | M)
                                     @ (D | rho))),
        Identity("Eq(117)", lambda: ((pR | M) @ rho @ phi,
                                     (D | phi) @ (t | M) @ (D | rs) @ (D | (pR @ lam) | M)
                                     @ (delta | M))),
        Identity("P2.10(i)", iff(lambda: (phi, phi @ ns), lambda: (rho, ns @ rho))),
        Identity("P2.10(ii)", iff(lambda: (phi, phi @ nrp), lambda: (rho, nrp @ rho))),
        Identity("Eq(118)", gated(lambda: chain(phi @ ns, phi @ nrp, phi)
                                  + chain(ns @ rho, nrp @ rho, rho))),
        Identity("Eq(119)", gated(lambda: (nsp @ nr, nr @ nsp))),
        Identity("Eq(120)", gated(lambda: ((M | em) @ ((nsp @ rp @ rho) | D),
                                           (M | em) @ ((rp @ rho) | D)))),
        Identity("Eq(121)", lambda: ((d.pibar_R | M) @ rho,
                                     (D | phi) @ (t | M) @ (D | rs) @ (de | M))),
    ]
    ids += unit_support_identities(w, phi, rho)
    return run_checks(f"yd-derived[{m.name}]", ids)


# products ------------------------------------------------------------------

def _wrap(label: str) -> str:
    return f"({label})" if ("×" in label or "⊗" in label) else label


@dataclass(frozen=True)
class YdProduct:
    left: YdModule
    right: YdModule
    nabla: Morphism
    delta: Morphism
    phi_tensor: Morphism
    rho_tensor: Morphism
    split: SplitIdempotent
    product: YdModule

    @property
    def p(self) -> Morphism:
        return self.split.proj

    @property
    def i(self) -> Morphism:
        return self.split.inj


def product_nabla(m: YdModule, n: YdModule) -> Morphism:
    d = m.base
    D = d.carrier
    return (m.action | n.action) @ (D | m.wo.s | n.carrier) @ (d.delta_eta | m.carrier | n.carrier)


def product_delta(m: YdModule, n: YdModule) -> Morphism:
    d = m.base
    D = d.carrier
    return (d.eps_mu | m.carrier | n.carrier) @ (D | m.wo.r | n.carrier) @ (m.coaction | n.coaction)


def _check_pair(m: YdModule, n: YdModule) -> None:
    if m.base is not n.base:
        raise ObjectMismatch("YD modules over different bases")
    m.base.antipode_inverse


def yd_product(m: YdModule, n: YdModule) -> YdProduct:
    """M x N with the weak operator and (co)action induced from M and N."""
    with m._lock:
        hit = m._products.get(id(n))
    if hit is not None:
        return hit[1]
    _check_pair(m, n)
    d = m.base
    D = d.carrier
    M, N = m.carrier, n.carrier
    nabla = product_nabla(m, n)
    delta = product_delta(m, n)
    wit = compare(nabla, delta)
    if wit is not None:
        raise NablaDeltaMismatch(f"∇ and Δ differ for {m.name}, {n.name}", witness=wit)
    split = split_idempotent(nabla, label=f"{_wrap(m.name)}×{_wrap(n.name)}")
    p, i = split.proj, split.inj
    X = split.image
    wm, wn = m.wo, n.wo
    r = (D | p) @ (wm.r | N) @ (M | wn.r) @ (i | D)
    rp = (p | D) @ (M | wn.r_prime) @ (wm.r_prime | N) @ (D | i)
    s = (p | D) @ (M | wn.s) @ (wm.s | N) @ (D | i)
    sp = (D | p) @ (wm.s_prime | N) @ (M | wn.s_prime) @ (i | D)
    phi_t = (m.action | n.action) @ (D | wm.s | N) @ (d.delta | M | N)
    rho_t = (d.mu | M | N) @ (D | wm.r | N) @ (m.coaction | n.coaction)
    phi = p @ phi_t @ (D | i)
    rho = (D | p) @ rho_t @ i
    prod = YdModule(d, X, phi, rho, WeakOperatorQuad(d, X, r, rp, s, sp), name=X.label)
    out = YdProduct(m, n, nabla, delta, phi_t, rho_t, split, prod)
    with m._lock:
        m._products.setdefault(id(n), (n, out))
        return m._products[id(n)][1]


def product_report(m: YdModule, n: YdModule) -> Report:
    """Idempotence, nabla = Delta, the r/s commutations and the product's own checks."""
    pr = yd_product(m, n)
    d = m.base
    D = d.carrier
    M, N = m.carrier, n.carrier
    nb = pr.nabla
    wm, wn = m.wo, n.wo
    MN = M | N
    ids = [
        Identity("L2.13", lambda: [(nb @ nb, nb), (pr.delta @ pr.delta, pr.delta)]),
        Identity("P2.16", lambda: (nb, pr.delta)),
        Identity("Eq(122)", lambda: ((D | nb) @ (wm.r | N) @ (M | wn.r),
                                     (wm.r | N) @ (M | wn.r) @ (nb | D))),
        Identity("Eq(123)", lambda: ((nb | D) @ (M | wn.r_prime) @ (wm.r_prime | N),
                                     (M | wn.r_prime) @ (wm.r_prime | N) @ (D | nb))),
        Identity("Eq(124)", lambda: ((nb | D) @ (M | wn.s) @ (wm.s | N),
                                     (M | wn.s) @ (wm.s | N) @ (D | nb))),
        Identity("Eq(125)", lambda: ((D | nb) @ (wm.s_prime | N) @ (M | wn.s_prime),
                                     (wm.s_prime | N) @ (M | wn.s_prime) @ (nb | D))),
        Identity("Eq(126)", lambda: chain(pr.phi_tensor @ (D | nb), pr.phi_tensor,
                                          nb @ pr.phi_tensor)),
        Identity("Eq(127)", lambda: chain(pr.rho_tensor @ nb, pr.rho_tensor,
                                          (D | nb) @ pr.rho_tensor)),
        Identity("P2.19", lambda: chain(nb, pr.phi_tensor @ (d.eta | MN),
                                        (d.eps | MN) @ pr.rho_tensor)),
    ]
    rep = run_checks(f"product[{pr.product.name}]", ids)
    rep.extend(yd_full_report(pr.product), prefix="P2.21:")
    return rep


def triple_report(m: YdModule, n: YdModule, p: YdModule) -> Report:
    """The identities relating the two bracketings of M, N, P."""
    mn, np_ = yd_product(m, n), yd_product(n, p)
    left, right = yd_product(mn.product, p), yd_product(m, np_.product)
    M, P = m.carrier, p.carrier
    lhs = lambda: (mn.i | P) @ left.nabla @ (mn.p | P)  # noqa: E731
    rhs = lambda: (M | np_.i) @ right.nabla @ (M | np_.p)  # noqa: E731
    ids = [
        Identity("Eq(128)", lambda: (lhs(), rhs())),
        Identity("Eq(129)", lambda: chain(rhs(), (mn.nabla | P) @ (M | np_.nabla),
                                          (M | np_.nabla) @ (mn.nabla | P))),
    ]
    return run_checks(f"triple[{m.name},{n.name},{p.name}]", ids)


# base object and constraints ----------------------------------------------

_BASE_CACHE: dict[int, tuple[Wbha, YdModule]] = {}
_BASE_LOCK = threading.Lock()


def base_object(d: Wbha) -> YdModule:
    """D_L = Im(Pi^L) with the (co)module structure restricted from D."""
    with _BASE_LOCK:
        hit = _BASE_CACHE.get(id(d))
        if hit is not None and hit[0] is d:
            return hit[1]
    d.antipode_inverse
    D = d.carrier
    split = split_idempotent(d.pi_L, label=f"{D.label}_L")
    p, i = split.proj, split.inj
    L = split.image
    phi = p @ d.mu @ (D | i)
    rho = (D | p) @ d.delta @ i
    wo = WeakOperatorQuad(d, L, (D | p) @ d.t @ (i | D), (p | D) @ d.t_prime @ (D | i),
                          (p | D) @ d.t @ (D | i), (D | p) @ d.t_prime @ (i | D))
    m = YdModule(d, L, phi, rho, wo, name=L.label)
    m.split = split
    with _BASE_LOCK:
        _BASE_CACHE[id(d)] = (d, m)
    return m


def yd_morphism_report(f: YdMorphism) -> Report:
    m, n, g = f.source, f.target, f.map
    D = m.base.carrier
    wm, wn = m.wo, n.wo
    rep = Report(f"yd-morphism[{m.name}->{n.name}]")
    rep.extend(module_morphism_report(g, m.module, n.module))
    rep.extend(comodule_morphism_report(g, m.comodule, n.comodule))
    rep.extend(run_checks("", [
        Identity("D2.5(ii)-r", lambda: (wn.r @ (g | D), (D | g) @ wm.r)),
        Identity("D2.5(ii)-s", lambda: (wn.s @ (D | g), (g | D) @ wm.s)),
        Identity("Eq(112)", lambda: (wn.nabla_r @ (g | D), (g | D) @ wm.nabla_r)),
        Identity("Eq(113)", lambda: (wn.nabla_r_prime @ (D | g), (D | g) @ wm.nabla_r_prime)),
        Identity("R2.6-r'", lambda: ((g | D) @ wm.r_prime, wn.r_prime @ (D | g))),
        Identity("R2.6-s'", lambda: ((D | g) @ wm.s_prime, wn.s_prime @ (g | D))),
    ]))
    return rep


@dataclass(frozen=True)
class UnitConstraints:
    l: YdMorphism
    l_inv: YdMorphism
    r: YdMorphism
    r_inv: YdMorphism


def unit_constraints(m: YdModule) -> UnitConstraints:
    d = m.base
    D = d.carrier
    L = base_object(d)
    pL, iL = L.split.proj, L.split.inj
    M = m.carrier
    lp = yd_product(L, m)
    rp = yd_product(m, L)
    l = m.action @ (iL | M) @ lp.i
    r = m.action @ m.wo.s_prime @ (M | (d.pibar_L @ iL)) @ rp.i
    l_inv = lp.p @ (pL | m.action) @ (d.delta_eta | M)
    r_inv = rp.p @ (m.action | pL) @ (D | m.wo.s) @ (d.delta_eta | M)
    return UnitConstraints(YdMorphism(lp.product, m, l), YdMorphism(m, lp.product, l_inv),
                           YdMorphism(rp.product, m, r), YdMorphism(m, rp.product, r_inv))


def unit_constraints_report(m: YdModule) -> Report:
    u = unit_constraints(m)
    rep = run_checks(f"unit-constraints[{m.name}]", [
        Identity("l-inverse", lambda: [(u.l.map @ u.l_inv.map, identity(m.carrier, m.base.field)),
                                       (u.l_inv.map @ u.l.map,
                                        identity(u.l.source.carrier, m.base.field))]),
        Identity("r-inverse", lambda: [(u.r.map @ u.r_inv.map, identity(m.carrier, m.base.field)),
                                       (u.r_inv.map @ u.r.map,
                                        identity(u.r.source.carrier, m.base.field))]),
    ])
    for name, f in (("l", u.l), ("l_inv", u.l_inv), ("r", u.r), ("r_inv", u.r_inv)):
        rep.extend(yd_morphism_report(f), prefix=f"{name}:")
    return rep


@dataclass(frozen=True)
class Associator:
    a: YdMorphism
    a_inv: YdMorphism


def assoc_constraint(m: YdModule, n: YdModule, p: YdModule) -> Associator:
    """a : M x (N x P) -> (M x N) x P and its inverse."""
    mn, np_ = yd_product(m, n), yd_product(n, p)
    left, right = yd_product(mn.product, p), yd_product(m, np_.product)
    M, P = m.carrier, p.carrier
    a = left.p @ (mn.p | P) @ (M | np_.i) @ right.i
    a_inv = right.p @ (M | np_.p) @ (mn.i | P) @ left.i
    return Associator(YdMorphism(right.product, left.product, a),
                      YdMorphism(left.product, right.product, a_inv))


def assoc_report(m: YdModule, n: YdModule, p: YdModule) -> Report:
    x = assoc_constraint(m, n, p)
    fld = m.base.field
    rep = run_checks(f"associator[{m.name},{n.name},{p.name}]", [
        Identity("a-inverse", lambda: [
            (x.a.map @ x.a_inv.map, identity(x.a.target.carrier, fld)),
            (x.a_inv.map @ x.a.map, identity(x.a.source.carrier, fld))]),
    ])
    rep.extend(yd_morphism_report(x.a), prefix="a:")
    rep.extend(yd_morphism_report(x.a_inv), prefix="a_inv:")
    rep.extend(triple_report(m, n, p))
    return rep


def yd_morphism_product(gamma: YdMorphism, phi: YdMorphism) -> YdMorphism:
    """gamma x phi = p_{M'xN'} (gamma (x) phi) i_{M(x)N}."""
    src = yd_product(gamma.source, phi.source)
    tgt = yd_product(gamma.target, phi.target)
    return YdMorphism(src.product, tgt.product, tgt.p @ (gamma.map | phi.map) @ src.i)


def functoriality_report(gamma: YdMorphism, phi: YdMorphism, gamma2: YdMorphism,
                         phi2: YdMorphism) -> Report:
    return run_checks("functoriality", [
        Identity("Eq(140)", lambda: (
            yd_morphism_product(gamma2, phi2).map @ yd_morphism_product(gamma, phi).map,
            yd_morphism_product(compose_yd(gamma2, gamma), compose_yd(phi2, phi)).map)),
        Identity("id×id", lambda: (
            yd_morphism_product(yd_identity(gamma.source), yd_identity(phi.source)).map,
            identity(yd_product(gamma.source, phi.source).product.carrier, gamma.map.field))),
    ])


def verify_coherence(m: YdModule, n: YdModule, p: YdModule, q: YdModule) -> Report:
    """Pentagon on (m, n, p, q) and triangle on (m, D_L, n)."""
    def pentagon():
        npq = yd_product(p, q).product
        a1 = assoc_constraint(m, n, npq).a
        a2 = assoc_constraint(yd_product(m, n).product, p, q).a
        lhs = a2.map @ a1.map
        b1 = yd_morphism_product(yd_identity(m), assoc_constraint(n, p, q).a)
        b2 = assoc_constraint(m, yd_product(n, p).product, q).a
        b3 = yd_morphism_product(assoc_constraint(m, n, p).a, yd_identity(q))
        return lhs, b3.map @ b2.map @ b1.map

    def triangle():
        L = base_object(m.base)
        u_m, u_n = unit_constraints(m), unit_constraints(n)
        a = assoc_constraint(m, L, n).a
        lhs = yd_morphism_product(u_m.r, yd_identity(n)).map @ a.map
        rhs = yd_morphism_product(yd_identity(m), u_n.l).map
        return lhs, rhs

    return run_checks(f"coherence[{m.name},{n.name},{p.name},{q.name}]", [
        Identity("pentagon", pentagon),
        Identity("triangle", triangle),
    ], jobs=1)


# braiding when t is the flip ----------------------------------------------

def _require_symmetric(d: Wbha) -> None:
    D = d.carrier
    c = flip(D, D, d.field)
    if d.t != c or d.t_prime != c:
        raise NotSymmetricBase(f"{d.name}: t is not the flip of {D.label}")


def braiding_tensor(m: YdModule, n: YdModule) -> Morphism:
    """t_{M,N} = (phi_N (x) M) (D (x) c_{M,N}) (rho_M (x) N)."""
    d = m.base
    return (n.action | m.carrier) @ (d.carrier | flip(m.carrier, n.carrier, d.field)) \
        @ (m.coaction | n.carrier)


def braiding_tensor_inverse(m: YdModule, n: YdModule) -> Morphism:
    """t'_{M,N} : N (x) M -> M (x) N built with the inverse antipode."""
    d = m.base
    D, M, N, f = d.carrier, m.carrier, n.carrier, d.field
    return flip(N, M, f) @ (n.action | M) @ (flip(N, D, f) | M) \
        @ (N | d.antipode_inverse | M) @ (N | m.coaction)


def symmetric_case_braiding(m: YdModule, n: YdModule) -> tuple[YdMorphism, YdMorphism]:
    d = m.base
    _require_symmetric(d)
    mn, nm = yd_product(m, n), yd_product(n, m)
    tau = nm.p @ braiding_tensor(m, n) @ mn.i
    tau_inv = mn.p @ braiding_tensor_inverse(m, n) @ nm.i
    return (YdMorphism(mn.product, nm.product, tau), YdMorphism(nm.product, mn.product, tau_inv))


def module_wyb(m: YdModule) -> WeakYangBaxter:
    """(t_{M,M}, t'_{M,M}, nabla_{M(x)M}) on a YD module over a symmetric base."""
    _require_symmetric(m.base)
    return WeakYangBaxter(m.carrier, braiding_tensor(m, m), braiding_tensor_inverse(m, m),
                          yd_product(m, m).nabla)


def braiding_report(m: YdModule, n: YdModule, p: Optional[YdModule] = None) -> Report:
    tau, tau_inv = symmetric_case_braiding(m, n)
    fld = m.base.field
    ids = [
        Identity("tau-inverse", lambda: [
            (tau.map @ tau_inv.map, identity(tau.target.carrier, fld)),
            (tau_inv.map @ tau.map, identity(tau.source.carrier, fld))]),
    ]
    if p is not None:
        def hexagon():
            x, y, z = m, n, p
            t_xy = symmetric_case_braiding(x, y)[0]
            t_xz = symmetric_case_braiding(x, z)[0]
            t_x_yz = symmetric_case_braiding(x, yd_product(y, z).product)[0]
            lhs = (assoc_constraint(y, z, x).a_inv.map @ t_x_yz.map
                   @ assoc_constraint(x, y, z).a_inv.map)
            rhs = (yd_morphism_product(yd_identity(y), t_xz).map
                   @ assoc_constraint(y, x, z).a_inv.map
                   @ yd_morphism_product(t_xy, yd_identity(z)).map)
            return lhs, rhs
        ids.append(Identity("hexagon", hexagon))
    rep = run_checks(f"braiding[{m.name},{n.name}]", ids)
    rep.extend(yd_morphism_report(tau), prefix="tau:")
    rep.extend(check_wyb(module_wyb(m)), prefix="wyb:")
    return rep

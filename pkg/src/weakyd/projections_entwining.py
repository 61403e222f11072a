"""Projections of WBHAs, the Yetter-Drinfeld module B_D and weak entwinings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .algebra_structures import (AlgebraStructure, CoalgebraStructure, check_algebra,
                                 check_coalgebra)
from .errors import NotProjectionMorphism, ProjectionInvalid, SingularMatrix, YdViolation
from .groupoid_factory import (GroupoidSpec, groupoid_algebra, product_groupoid)
from .report import Identity, Report, Verdict, compare, run_checks
from .tensor_core import Morphism, SplitIdempotent, flip, identity, inverse, split_idempotent
from .wbha import Wbha, check_antipode, check_wbb, wbha_morphism_report
from .weak_operators import WeakOperatorQuad
from .wyb_operators import WeakYangBaxter, check_wyb
from .yetter_drinfeld import (YdModule, YdMorphism, braiding_tensor_inverse, product_nabla,
                              yd_full_report, yd_morphism_report)


@dataclass(frozen=True)
class Projection:
    base: Wbha
    total: Wbha
    f: Morphism
    g: Morphism
    name: str = ""

    def __post_init__(self):
        D, B = self.base.carrier, self.total.carrier
        if self.f.source != D or self.f.target != B:
            raise ProjectionInvalid("f must map D -> B")
        if self.g.source != B or self.g.target != D:
            raise ProjectionInvalid("g must map B -> D")

    @property
    def label(self) -> str:
        return self.name or f"({self.total.name}→{self.base.name})"

    @property
    def fg(self) -> Morphism:
        return self.f @ self.g


def trivial_projection(d: Wbha) -> Projection:
    return Projection(d, d, d.id, d.id, name=f"triv({d.name})")


def check_projection(p: Projection) -> Report:
    d, b = p.base, p.total
    B = b.carrier
    fg = p.fg

    def commute(t):
        return [((B | fg) @ t, t @ (fg | B)), ((fg | B) @ t, t @ (B | fg))]

    def t_and_t_prime_agree() -> Verdict:
        held_t = all(compare(*x) is None for x in commute(b.t))
        held_tp = all(compare(*x) is None for x in commute(b.t_prime))
        note = f"t: {'holds' if held_t else 'fails'}, t': {'holds' if held_tp else 'fails'}"
        return Verdict(held_t == held_tp, None, note)

    rep = Report(f"projection[{p.label}]")
    rep.extend(wbha_morphism_report(p.f, d, b), prefix="f:")
    rep.extend(wbha_morphism_report(p.g, b, d), prefix="g:")
    rep.extend(run_checks("", [
        Identity("g∘f=id", lambda: (p.g @ p.f, d.id)),
        Identity("D3.1(i)", lambda: commute(b.t)[0]),
        Identity("D3.1(ii)", lambda: commute(b.t)[1]),
        Identity("D3.1(i)'", lambda: commute(b.t_prime)[0]),
        Identity("D3.1(ii)'", lambda: commute(b.t_prime)[1]),
        Identity("R3.2", t_and_t_prime_agree),
    ]))
    return rep


def require_projection(p: Projection) -> Projection:
    rep = check_projection(p)
    if not rep.passed:
        bad = rep.failures[0]
        raise ProjectionInvalid(f"{p.label}: {bad.identity_id} fails", witness=bad.witness,
                                report=rep)
    return p


# B_D -----------------------------------------------------------------------

class ProjectedModule:
    """B_D = Im(q) with q = id_B * (f lam_D g) and its induced structures."""

    def __init__(self, projection: Projection, label: Optional[str] = None):
        p = projection
        d, b = p.base, p.total
        self.projection = p
        self.q = b.conv(b.id, p.f @ d.lam @ p.g)
        self.split: SplitIdempotent = split_idempotent(
            self.q, label=label or f"{b.name}_{d.name}")
        pr, i = self.split.proj, self.split.inj
        X = self.split.image
        self.algebra = AlgebraStructure(X, pr @ b.eta, pr @ b.mu @ (i | i))
        self.coalgebra = CoalgebraStructure(X, b.eps @ i, (pr | pr) @ b.delta @ i)
        action = pr @ b.mu @ (p.f | i)
        coaction = (p.g | pr) @ b.delta @ i
        wo = WeakOperatorQuad(d, X,
                              (p.g | pr) @ b.t @ (i | p.f),
                              (pr | p.g) @ b.t_prime @ (p.f | i),
                              (pr | p.g) @ b.t @ (p.f | i),
                              (p.g | pr) @ b.t_prime @ (i | p.f))
        self.yd = YdModule(d, X, action, coaction, wo, name=X.label)
        self.yd.split = self.split

    @property
    def carrier(self):
        return self.split.image

    @property
    def p(self) -> Morphism:
        return self.split.proj

    @property
    def i(self) -> Morphism:
        return self.split.inj

    @cached_property
    def wbha(self) -> Wbha:
        """B_D as a WBHA; needs an invertible antipode on D."""
        return projected_wbha(self)

    def __repr__(self) -> str:
        return f"ProjectedModule({self.carrier.label}, dim={self.carrier.dim})"


def projected_module_report(pm: ProjectedModule) -> Report:
    b = pm.projection.total
    q = pm.q
    rep = run_checks(f"projected[{pm.carrier.label}]", [
        Identity("P3.3-idempotent", lambda: (q @ q, q)),
        Identity("eps∘q", lambda: (b.eps @ q, b.eps)),
        Identity("q∘eta", lambda: (q @ b.eta, b.eta)),
    ])
    rep.extend(check_algebra(pm.algebra), prefix="B_D:")
    rep.extend(check_coalgebra(pm.coalgebra), prefix="B_D:")
    rep.extend(yd_full_report(pm.yd))
    return rep


def build_projected_module(p: Projection, label: Optional[str] = None,
                           validate: bool = True) -> ProjectedModule:
    if validate:
        require_projection(p)
    pm = ProjectedModule(p, label)
    if validate:
        rep = projected_module_report(pm)
        if not rep.passed:
            bad = rep.failures[0]
            raise YdViolation(f"{pm.carrier.label}: {bad.identity_id} fails",
                              witness=bad.witness, report=rep)
    return pm


def _generalized_inverse(t: Morphism, nabla: Morphism) -> Morphism:
    """i (p t i)^-1 p for the splitting of nabla."""
    s = split_idempotent(nabla)
    core = s.proj @ t @ s.inj
    try:
        inv = inverse(core)
    except SingularMatrix as exc:
        raise YdViolation(f"t is not invertible on the image of nabla ({exc})")
    return s.inj @ inv @ s.proj


def projected_wbha(pm: ProjectedModule) -> Wbha:
    """B_D with t = (phi (x) B_D)(D (x) r_{B_D,B_D})(rho (x) B_D).

    nabla is the product idempotent of B_D with itself. Over a base whose t is
    the flip, t' is the inverse braiding built with lam^-1; otherwise t' is
    the inverse of t on the image of nabla.
    """
    p = pm.projection
    d, b = p.base, p.total
    D = d.carrier
    X = pm.carrier
    pr, i = pm.p, pm.i
    m = pm.yd
    r_xx = (pr | pr) @ b.t @ (i | i)
    t = (m.action | X) @ (D | r_xx) @ (m.coaction | X)
    nabla = product_nabla(m, m)
    c = flip(D, D, d.field)
    if d.t == c and d.t_prime == c:
        tp = braiding_tensor_inverse(m, m)
    else:
        tp = _generalized_inverse(t, nabla)
    lam = pr @ b.mu @ (p.fg | b.lam) @ b.delta @ i
    return Wbha(pm.algebra, pm.coalgebra, WeakYangBaxter(X, t, tp, nabla), lam, name=X.label)


def projected_wbha_report(pm: ProjectedModule) -> Report:
    w = pm.wbha
    b = pm.projection.total
    X = pm.carrier
    rep = Report(f"B_D-wbha[{X.label}]")
    rep.extend(check_wyb(w.wyb))
    rep.extend(check_wbb(w))
    rep.extend(check_antipode(w))
    rep.extend(run_checks("", [
        Identity("Pi^L(B_D)", lambda: (w.pi_L, pm.p @ b.pi_L @ pm.i)),
        Identity("t-vs-flip", lambda: Verdict(True, None, "t is the flip" if w.t == flip(
            X, X, w.field) else "t differs from the flip")),
    ]))
    return rep


def induced_projection_morphism(h: Morphism, src: ProjectedModule, tgt: ProjectedModule
                                ) -> YdMorphism:
    """alpha_D = p' h i for a morphism of projections h : B -> B'."""
    p1, p2 = src.projection, tgt.projection
    if p1.base is not p2.base:
        raise NotProjectionMorphism("projections over different bases")
    if h.source != p1.total.carrier or h.target != p2.total.carrier:
        raise NotProjectionMorphism("h does not map B -> B'")
    rep = wbha_morphism_report(h, p1.total, p2.total)
    rep.extend(run_checks("", [
        Identity("h∘f=f'", lambda: (h @ p1.f, p2.f)),
        Identity("g'∘h=g", lambda: (p2.g @ h, p1.g)),
    ]))
    if not rep.passed:
        bad = rep.failures[0]
        raise NotProjectionMorphism(f"{bad.identity_id} fails", witness=bad.witness, report=rep)
    alpha = tgt.p @ h @ src.i
    if tgt.i @ alpha != h @ src.i:
        raise NotProjectionMorphism("h does not restrict to B_D -> B'_D")
    return YdMorphism(src.yd, tgt.yd, alpha)


def induced_morphism_report(f: YdMorphism) -> Report:
    return yd_morphism_report(f)


def structures_equal(a: YdModule, b: YdModule) -> Report:
    """Entrywise comparison of two YD modules whose carriers differ only in label."""
    def same(x: Morphism, y: Morphism) -> Verdict:
        if x.shape != y.shape:
            return Verdict(False, None, f"shapes {x.shape} and {y.shape}")
        if x.den != y.den or (x.num != y.num).any():
            return Verdict(False, None, "entries differ")
        return Verdict(True)

    pairs = [("carrier-basis", None, None), ("action", a.action, b.action),
             ("coaction", a.coaction, b.coaction), ("r", a.wo.r, b.wo.r),
             ("r'", a.wo.r_prime, b.wo.r_prime), ("s", a.wo.s, b.wo.s),
             ("s'", a.wo.s_prime, b.wo.s_prime)]
    ids = []
    for name, x, y in pairs:
        if x is None:
            ids.append(Identity(name, lambda: Verdict(
                a.carrier.basis_labels == b.carrier.basis_labels, None,
                f"{a.carrier.basis_labels} vs {b.carrier.basis_labels}")))
        else:
            ids.append(Identity(name, lambda x=x, y=y: same(x, y)))
    return run_checks(f"same[{a.name},{b.name}]", ids)


# entwining structures ------------------------------------------------------

class EntwiningStructure:
    """(A, C, psi_RR, psi_LL) with psi_RR : C (x) A -> A (x) C, psi_LL : A (x) C -> C (x) A."""

    def __init__(self, algebra: AlgebraStructure, coalgebra: CoalgebraStructure,
                 psi_rr: Morphism, psi_ll: Morphism, name: str = ""):
        A, C = algebra.carrier, coalgebra.carrier
        if psi_rr.source != (C | A) or psi_rr.target != (A | C):
            raise ValueError("psi_RR must map C⊗A -> A⊗C")
        if psi_ll.source != (A | C) or psi_ll.target != (C | A):
            raise ValueError("psi_LL must map A⊗C -> C⊗A")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.psi_rr = psi_rr
        self.psi_ll = psi_ll
        self.name = name or f"{A.label},{C.label}"

    @property
    def A(self):
        return self.algebra.carrier

    @property
    def C(self):
        return self.coalgebra.carrier

    @cached_property
    def e_rr(self) -> Morphism:
        return (self.A | self.coalgebra.counit) @ self.psi_rr @ (self.C | self.algebra.unit)

    @cached_property
    def e_ll(self) -> Morphism:
        return (self.coalgebra.counit | self.A) @ self.psi_ll @ (self.algebra.unit | self.C)

    @cached_property
    def delta_rr(self) -> Morphism:
        A, C = self.A, self.C
        return (self.algebra.mult | C) @ (A | self.psi_rr) @ (A | C | self.algebra.unit)

    @cached_property
    def nabla_rr(self) -> Morphism:
        A, C = self.A, self.C
        return (C | A | self.coalgebra.counit) @ (C | self.psi_rr) @ (self.coalgebra.comult | A)

    @cached_property
    def delta_ll(self) -> Morphism:
        A, C = self.A, self.C
        return (C | self.algebra.mult) @ (self.psi_ll | A) @ (self.algebra.unit | C | A)

    @cached_property
    def nabla_ll(self) -> Morphism:
        A, C = self.A, self.C
        return (self.coalgebra.counit | A | C) @ (self.psi_ll | C) @ (A | self.coalgebra.comult)

    def replace(self, **changes) -> "EntwiningStructure":
        return EntwiningStructure(self.algebra, self.coalgebra,
                                  changes.get("psi_rr", self.psi_rr),
                                  changes.get("psi_ll", self.psi_ll), self.name)


def entwining_identities(e: EntwiningStructure) -> list[Identity]:
    A, C = e.A, e.C
    mu, eta = e.algebra.mult, e.algebra.unit
    delta, eps = e.coalgebra.comult, e.coalgebra.counit
    rr, ll = e.psi_rr, e.psi_ll
    return [
        Identity("Eq(141)", lambda: ((mu | C) @ (A | rr) @ (rr | A), rr @ (C | mu))),
        Identity("Eq(142)", lambda: (rr @ (C | eta), (e.e_rr | C) @ delta)),
        Identity("Eq(143)", lambda: ((A | delta) @ rr, (rr | C) @ (C | rr) @ (delta | A))),
        Identity("Eq(144)", lambda: ((A | eps) @ rr, mu @ (e.e_rr | A))),
        Identity("Eq(141)-LL", lambda: ((C | mu) @ (ll | A) @ (A | ll), ll @ (mu | C))),
        Identity("Eq(142)-LL", lambda: (ll @ (eta | C), (C | e.e_ll) @ delta)),
        Identity("Eq(143)-LL", lambda: ((delta | A) @ ll, (C | ll) @ (ll | C) @ (A | delta))),
        Identity("Eq(144)-LL", lambda: ((eps | A) @ ll, mu @ (A | e.e_ll))),
        Identity("Delta_RR-idempotent", lambda: (e.delta_rr @ e.delta_rr, e.delta_rr)),
        Identity("nabla_RR-idempotent", lambda: (e.nabla_rr @ e.nabla_rr, e.nabla_rr)),
        Identity("Delta_LL-idempotent", lambda: (e.delta_ll @ e.delta_ll, e.delta_ll)),
        Identity("nabla_LL-idempotent", lambda: (e.nabla_ll @ e.nabla_ll, e.nabla_ll)),
        Identity("D3.9(ii)-LL∘RR", lambda: (ll @ rr, e.delta_ll)),
        Identity("D3.9(ii)-RR∘LL", lambda: (rr @ ll, e.delta_rr)),
    ]


def check_entwining(e: EntwiningStructure) -> Report:
    return run_checks(f"entwining[{e.name}]", entwining_identities(e))


def entwining_from_projection(pm: ProjectedModule
                              ) -> tuple[EntwiningStructure, EntwiningStructure]:
    """(B_D, D, s, s') and (B_D, D, r', r)."""
    d = pm.projection.base
    w = pm.yd.wo
    X = pm.carrier.label
    first = EntwiningStructure(pm.algebra, d.coalgebra, w.s, w.s_prime, name=f"{X}:s,s'")
    second = EntwiningStructure(pm.algebra, d.coalgebra, w.r_prime, w.r, name=f"{X}:r',r")
    return first, second


def flip_entwining(d: Wbha) -> EntwiningStructure:
    """psi_RR = psi_LL = flip on a WBHA viewed as algebra and coalgebra."""
    D = d.carrier
    c = flip(D, D, d.field)
    return EntwiningStructure(d.algebra, d.coalgebra, c, c, name=f"flip({d.name})")


# the product-groupoid projection -------------------------------------------

@dataclass(frozen=True)
class GroupoidProjection:
    projection: Projection
    big: GroupoidSpec
    small: GroupoidSpec
    factor: GroupoidSpec


def groupoid_product_projection(g: GroupoidSpec, h: GroupoidSpec, field=None
                                ) -> GroupoidProjection:
    """R(G x H) over RG with f(s) = (s, e) and g(s, x) = s.

    H must be a group (one object) so that f and g preserve the unit and g is
    multiplicative.
    """
    from .fields import QQ

    fld = field or QQ
    if len(h.objects) != 1:
        raise ProjectionInvalid("the second factor must have a single object")
    e = h.identities[h.objects[0]]
    big = product_groupoid(g, h)
    d = groupoid_algebra(g, fld)
    b = groupoid_algebra(big, fld)
    D, B = d.carrier, b.carrier
    gi = {a: k for k, a in enumerate(g.labels)}
    bi = {a: k for k, a in enumerate(big.labels)}
    f = Morphism.from_columns(D, B, lambda j: {bi[f"{g.labels[j]}.{e}"]: 1}, fld)
    gm = Morphism.from_columns(B, D, lambda j: {gi[big.labels[j].split(".", 1)[0]]: 1}, fld)
    proj = Projection(d, b, f, gm, name=f"{b.name}→{d.name}")
    return GroupoidProjection(proj, big, g, h)


def identity_map(p: Projection) -> Morphism:
    return identity(p.total.carrier, p.total.field)

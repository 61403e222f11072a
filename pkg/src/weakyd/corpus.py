"""Named instances and the suites that run on them.

An instance is a WBHA, a bare weak Yang-Baxter operator, a projection or a
YD module given by a file. Each suite maps an instance to a list of reports;
suites that do not apply to an instance kind contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from .adjoint_actions import (adjoint_braiding_suite, adjoint_yd_modules, build_adjoint,
                              example_shortcuts, frobenius_shortcuts, is_cocommutative,
                              is_commutative, projected_shortcuts)
from .errors import ValidationError, WeakYdError
from .fields import QQ, Field
from .groupoid_factory import (FrobeniusSeparableAlgebra, cyclic_group, exact_factorization,
                               exact_factorization_operator, frobenius_weak_hopf, full_groupoid,
                               group_algebra, groupoid_algebra, matrix_frobenius,
                               product_groupoid)
from .projections_entwining import (Projection, build_projected_module, check_entwining,
                                    check_projection, entwining_from_projection,
                                    groupoid_product_projection, projected_module_report,
                                    projected_wbha_report, structures_equal,
                                    trivial_projection)
from .report import FAIL, CheckRow, Report
from .tensor_core import flip
from .wbha import Wbha, check_antipode, check_wbb, derived_identity_suite
from .weak_operators import check_wo, derived_wo_suite, regular_quad
from .wyb_operators import WeakYangBaxter, check_wyb, flip_wyb
from .yetter_drinfeld import (YdModule, assoc_report, base_object, braiding_report,
                              functoriality_report, product_report, unit_constraints,
                              unit_constraints_report, verify_coherence, yd_derived_suite,
                              yd_full_report)

SUITES = ("wyb", "wbb", "antipode", "derived", "wo", "yd", "monoidal", "projection",
          "entwining", "adjoint")


@dataclass
class Instance:
    name: str
    kind: str  # "wbha" | "wyb" | "projection" | "yd"
    wbha: Optional[Wbha] = None
    wyb: Optional[WeakYangBaxter] = None
    projection: Optional[Projection] = None
    yd: Optional[YdModule] = None
    frobenius: Optional[FrobeniusSeparableAlgebra] = None
    extra: dict = field(default_factory=dict)

    @cached_property
    def base_module(self) -> YdModule:
        return base_object(self.wbha)

    @cached_property
    def projected(self):
        p = self.projection or trivial_projection(self.wbha)
        return build_projected_module(p)

    @cached_property
    def adjoint(self):
        return build_adjoint(self.wbha)


# builders -------------------------------------------------------------------

def _omega_algebra(d: Wbha) -> WeakYangBaxter:
    D = d.carrier
    om = d.eta | (d.mu @ flip(D, D, d.field))
    return WeakYangBaxter(D, om, om, om)


def _omega_coalgebra(d: Wbha) -> WeakYangBaxter:
    D = d.carrier
    om = d.eps | (flip(D, D, d.field) @ d.delta)
    return WeakYangBaxter(D, om, om, om)


def _ef_full2_z2(fld: Field) -> WeakYangBaxter:
    g = product_groupoid(full_groupoid(2), cyclic_group(2))
    loops = set(full_groupoid(2).identities.values())
    H = [a for a in g.labels if a.endswith(".e")]
    V = [a for a in g.labels if a.split(".")[0] in loops]
    return exact_factorization_operator(exact_factorization(g, H, V), fld)


def _ef_z2_z3(fld: Field) -> WeakYangBaxter:
    g = product_groupoid(cyclic_group(2), cyclic_group(3))
    H = [a for a in g.labels if a.endswith(".e")]
    V = [a for a in g.labels if a.startswith("e.")]
    return exact_factorization_operator(exact_factorization(g, H, V), fld)


def _wbha(name: str, d: Wbha, **kw) -> Instance:
    return Instance(name, "wbha", wbha=d, **kw)


def _frobenius(fld: Field) -> Instance:
    fa = matrix_frobenius(2, fld)
    return _wbha("frobenius_m2", frobenius_weak_hopf(fa), frobenius=fa)


def _product_projection(fld: Field) -> Instance:
    gp = groupoid_product_projection(full_groupoid(2), cyclic_group(3), fld)
    return Instance("projection_full2_z3", "projection", wbha=gp.projection.base,
                    projection=gp.projection)


BUILTINS: dict[str, Callable[[Field], Instance]] = {
    "full_groupoid_2": lambda f: _wbha("full_groupoid_2", groupoid_algebra(full_groupoid(2), f)),
    "full_groupoid_3": lambda f: _wbha("full_groupoid_3", groupoid_algebra(full_groupoid(3), f)),
    "z2_group": lambda f: _wbha("z2_group", group_algebra(2, f)),
    "z3_group": lambda f: _wbha("z3_group", group_algebra(3, f)),
    "full2_x_z3": lambda f: _wbha("full2_x_z3", groupoid_algebra(
        product_groupoid(full_groupoid(2), cyclic_group(3)), f)),
    "frobenius_m2": _frobenius,
    "projection_full2_z3": _product_projection,
    "flip_full2": lambda f: Instance("flip_full2", "wyb", wyb=flip_wyb(
        groupoid_algebra(full_groupoid(2), f).carrier, f)),
    "exact_factorization_full2_z2": lambda f: Instance(
        "exact_factorization_full2_z2", "wyb", wyb=_ef_full2_z2(f)),
    "exact_factorization_z2_z3": lambda f: Instance(
        "exact_factorization_z2_z3", "wyb", wyb=_ef_z2_z3(f)),
    "omega_algebra_z2": lambda f: Instance(
        "omega_algebra_z2", "wyb", wyb=_omega_algebra(group_algebra(2, f))),
    "omega_coalgebra_z2": lambda f: Instance(
        "omega_coalgebra_z2", "wyb", wyb=_omega_coalgebra(group_algebra(2, f))),
    "omega_algebra_full2": lambda f: Instance(
        "omega_algebra_full2", "wyb",
        wyb=_omega_algebra(groupoid_algebra(full_groupoid(2), f))),
    "omega_coalgebra_full2": lambda f: Instance(
        "omega_coalgebra_full2", "wyb",
        wyb=_omega_coalgebra(groupoid_algebra(full_groupoid(2), f))),
}

# the default corpus: everything except the slow 16-dim and 9-dim instances
DEFAULT_CORPUS = ("full_groupoid_2", "z2_group", "z3_group", "projection_full2_z3",
                  "flip_full2", "exact_factorization_full2_z2", "exact_factorization_z2_z3",
                  "omega_algebra_z2", "omega_coalgebra_z2", "omega_algebra_full2",
                  "omega_coalgebra_full2")


def builtin(name: str, fld: Field = QQ) -> Instance:
    try:
        make = BUILTINS[name]
    except KeyError:
        raise ValidationError(f"unknown builtin instance {name!r}; known: {', '.join(BUILTINS)}")
    return make(fld)


# suites ---------------------------------------------------------------------

def _prefixed(rep: Report, prefix: str) -> Report:
    return Report(f"{prefix}/{rep.subject}", rep.rows)


def _wbhas(inst: Instance) -> list[Wbha]:
    if inst.kind == "wbha":
        return [inst.wbha]
    if inst.kind == "projection":
        return [inst.projection.base, inst.projection.total, inst.projected.wbha]
    return []


def suite_wyb(inst: Instance) -> list[Report]:
    if inst.kind == "wyb":
        return [check_wyb(inst.wyb)]
    return [check_wyb(d.wyb) for d in _wbhas(inst)]


def suite_wbb(inst: Instance) -> list[Report]:
    return [check_wbb(d) for d in _wbhas(inst)]


def suite_antipode(inst: Instance) -> list[Report]:
    return [check_antipode(d) for d in _wbhas(inst)]


def suite_derived(inst: Instance) -> list[Report]:
    return [derived_identity_suite(d) for d in _wbhas(inst)]


def _construction_failure(label: str, exc: WeakYdError) -> Report:
    row = CheckRow(f"{label}:construction", FAIL, exc.witness, f"{type(exc).__name__}: {exc}")
    return Report(label, [row])


def _module_builders(inst: Instance) -> list[tuple[str, Callable[[], YdModule]]]:
    if inst.kind == "yd":
        return [("module", lambda: inst.yd)]
    if inst.kind == "wbha":
        if not inst.wbha.has_invertible_antipode:
            return []
        return [("D_L", lambda: inst.base_module),
                ("Omega^a", lambda: adjoint_yd_modules(inst.adjoint)[0]),
                ("Omega^c", lambda: adjoint_yd_modules(inst.adjoint)[1])]
    if inst.kind == "projection":
        return [("B_D", lambda: inst.projected.yd)]
    return []


def _each_module(inst: Instance, check: Callable[[YdModule], list[Report]]) -> list[Report]:
    # one module failing to build does not hide the checks on the others
    out = []
    for label, build in _module_builders(inst):
        try:
            out += check(build())
        except WeakYdError as exc:
            out.append(_construction_failure(label, exc))
    return out


def _modules(inst: Instance) -> list[YdModule]:
    return [build() for _, build in _module_builders(inst)]


def suite_wo(inst: Instance) -> list[Report]:
    out = []
    for d in _wbhas(inst):
        q = regular_quad(d)
        out += [check_wo(q), derived_wo_suite(q)]
    return out + _each_module(inst, lambda m: [check_wo(m.wo), derived_wo_suite(m.wo)])


def suite_yd(inst: Instance) -> list[Report]:
    return _each_module(inst, lambda m: [yd_full_report(m), yd_derived_suite(m)])


def suite_monoidal(inst: Instance) -> list[Report]:
    mods = _modules(inst)
    if not mods:
        return []
    if inst.kind == "projection":
        d = inst.projection.base
        L = base_object(d)
        ma, _ = adjoint_yd_modules(build_adjoint(d))
        mods = [L, inst.projected.yd, ma]
    m0 = mods[0]
    out = [product_report(m, n) for m in mods[:2] for n in mods[:2]]
    out.append(unit_constraints_report(m0))
    # l^-1 then l on each factor: a composable pair of YD morphisms per side
    u, v = unit_constraints(m0), unit_constraints(mods[1 % len(mods)])
    out.append(functoriality_report(u.l_inv, v.l_inv, u.l, v.l))
    out.append(functoriality_report(u.r_inv, v.l_inv, u.r, v.l))
    out.append(assoc_report(*(mods * 3)[:3]))
    out.append(verify_coherence(*(mods * 4)[:4]))
    d = m0.base
    if d.t == flip(d.carrier, d.carrier, d.field) and d.t_prime == d.t:
        out.append(braiding_report(m0, m0, m0))
    return out


def suite_projection(inst: Instance) -> list[Report]:
    if inst.kind == "wbha":
        if not inst.wbha.has_invertible_antipode:
            return []
        pm = inst.projected
        return [check_projection(pm.projection), projected_module_report(pm),
                structures_equal(pm.yd, inst.base_module), projected_wbha_report(pm)]
    if inst.kind == "projection":
        pm = inst.projected
        return [check_projection(inst.projection), projected_module_report(pm),
                projected_wbha_report(pm)]
    return []


def suite_entwining(inst: Instance) -> list[Report]:
    if inst.kind not in ("wbha", "projection"):
        return []
    if inst.kind == "wbha" and not inst.wbha.has_invertible_antipode:
        return []
    return [check_entwining(e) for e in entwining_from_projection(inst.projected)]


def suite_adjoint(inst: Instance) -> list[Report]:
    out = []
    for d in _wbhas(inst):
        a = build_adjoint(d)
        out.append(adjoint_braiding_suite(a))
        if is_commutative(d) or is_cocommutative(d):
            out.append(example_shortcuts(d, a))
    if inst.frobenius is not None:
        out.append(frobenius_shortcuts(inst.frobenius, inst.wbha, inst.adjoint))
    if inst.kind == "projection":
        out.append(projected_shortcuts(inst.projected))
    return out


SUITE_FUNCS: dict[str, Callable[[Instance], list[Report]]] = {
    "wyb": suite_wyb, "wbb": suite_wbb, "antipode": suite_antipode, "derived": suite_derived,
    "wo": suite_wo, "yd": suite_yd, "monoidal": suite_monoidal,
    "projection": suite_projection, "entwining": suite_entwining, "adjoint": suite_adjoint,
}


def run_suite(inst: Instance, suite: str) -> list[Report]:
    """Reports of one suite; a construction error becomes a single failing row."""
    try:
        reps = SUITE_FUNCS[suite](inst)
    except WeakYdError as exc:
        return [Report(f"{inst.name}/{suite}", _construction_failure(suite, exc).rows)]
    return [_prefixed(r, f"{inst.name}/{suite}") for r in reps]

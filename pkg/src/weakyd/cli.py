"""Command line front end: load instances, run suites, print a report.

    weakyd check --instance full_groupoid_2 --suite wyb,wbb --format text
    weakyd check --config run.json

Exit status is 0 when no row fails, 1 when some row fails and 2 when the
input could not be read or validated.

Instance files are JSON. Every matrix is a list of rows (target dimension by
source dimension) whose entries are integers or strings "a/b"; floats are
rejected. A file looks like::

    {"type": "wbha", "field": "Q", "name": "RZ2", "basis": ["e", "g"],
     "unit": [["1"], ["0"]], "mult": [...], "counit": [...], "comult": [...],
     "antipode": [...], "t": [...], "t_prime": [...], "nabla": [...]}

``t``, ``t_prime`` default to the flip and ``nabla`` to the identity. Other
types are ``groupoid`` (objects, arrows, composition, identities, inverses),
``yd_module`` (base, basis, action, coaction, optional r/r_prime/s/s_prime
defaulting to flips) and ``projection`` (base, total, f, g). A ``base`` or
``total`` entry is either a builtin name or a nested wbha/groupoid object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Optional, Sequence

from .corpus import BUILTINS, DEFAULT_CORPUS, SUITES, Instance, builtin, run_suite
from .errors import InvalidGroupoid, ParseError, ValidationError, WeakYdError
from .fields import QQ, Field, parse_field
from .groupoid_factory import GroupoidSpec, groupoid_algebra, validate_groupoid
from .report import FAIL, Report, parallel_jobs
from .tensor_core import K, Morphism, SpaceObject, flip, identity
from .wbha import Wbha
from .algebra_structures import AlgebraStructure, CoalgebraStructure
from .weak_operators import WeakOperatorQuad
from .wyb_operators import WeakYangBaxter
from .yetter_drinfeld import YdModule
from .projections_entwining import Projection

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class SuiteConfig:
    field: Field = QQ
    instances: list[str] = dc_field(default_factory=lambda: list(DEFAULT_CORPUS))
    suites: list[str] = dc_field(default_factory=lambda: list(SUITES))
    jobs: int = 1
    report_format: str = "json"
    timings: bool = False
    base_dir: Path = Path(".")

    def __post_init__(self):
        if not self.suites:
            raise ValidationError("suites: at least one suite is required")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValidationError(f"suites: unknown {', '.join(bad)}; known: {', '.join(SUITES)}")
        if not self.instances:
            raise ValidationError("instances: at least one instance is required")
        if self.jobs < 0:
            raise ValidationError("jobs must be nonnegative")
        if self.report_format not in ("json", "text"):
            raise ValidationError(f"format must be json or text, not {self.report_format!r}")


# file loading ---------------------------------------------------------------

class _Reader:
    """Schema walker that tags every error with the JSON path it came from."""

    def __init__(self, fld: Field, source: str):
        self.field = fld
        self.source = source

    def fail(self, path: str, msg: str, cls=ValidationError):
        raise cls(f"{self.source}: {path}: {msg}")

    def get(self, obj: dict, key: str, path: str, default: Any = ...):
        if key in obj:
            return obj[key]
        if default is ...:
            self.fail(path, f"missing required key {key!r}")
        return default

    def space(self, obj: dict, label: str, path: str) -> SpaceObject:
        basis = obj.get("basis")
        dim = obj.get("dim")
        if basis is None and dim is None:
            self.fail(path, "need a 'dim' or 'basis' header")
        if dim is not None and (not isinstance(dim, int) or dim < 0):
            self.fail(f"{path}.dim", "must be a nonnegative integer")
        try:
            return SpaceObject(label, dim=dim, basis_labels=basis)
        except ValueError as exc:
            self.fail(f"{path}.basis", str(exc))

    def matrix(self, obj: dict, key: str, src: SpaceObject, tgt: SpaceObject,
               path: str, default: Any = ...) -> Morphism:
        raw = self.get(obj, key, path, default)
        if raw is None or isinstance(raw, Morphism):
            return raw
        p = f"{path}.{key}"
        if not isinstance(raw, list) or any(not isinstance(r, list) for r in raw):
            self.fail(p, "must be a list of rows")
        if len(raw) != tgt.dim or any(len(r) != src.dim for r in raw):
            shape = (len(raw), len(raw[0]) if raw else 0)
            self.fail(p, f"shape {shape} does not match ({tgt.dim}, {src.dim}) "
                         f"for {tgt.label} <- {src.label}")
        rows = []
        for i, r in enumerate(raw):
            row = []
            for j, x in enumerate(r):
                if isinstance(x, bool) or not isinstance(x, (int, str)):
                    self.fail(f"{p}[{i}][{j}]", "scalars are integers or strings 'a/b'",
                              ParseError)
                try:
                    row.append(self.field.parse(str(x)))
                except ParseError as exc:
                    self.fail(f"{p}[{i}][{j}]", str(exc), ParseError)
            rows.append(row)
        return Morphism(src, tgt, rows, self.field)

    # typed sections ---------------------------------------------------------

    def wbha_ref(self, ref: Any, path: str) -> Wbha:
        if isinstance(ref, str):
            if ref not in BUILTINS:
                self.fail(path, f"unknown builtin {ref!r}")
            inst = builtin(ref, self.field)
            if inst.wbha is None:
                self.fail(path, f"builtin {ref!r} is not a WBHA")
            return inst.wbha
        if not isinstance(ref, dict):
            self.fail(path, "must be a builtin name or an object")
        kind = ref.get("type", "wbha")
        if kind == "groupoid":
            return self.groupoid(ref, path)
        if kind == "wbha":
            return self.wbha(ref, path)
        self.fail(f"{path}.type", f"expected wbha or groupoid, got {kind!r}")

    def wbha(self, obj: dict, path: str) -> Wbha:
        name = str(obj.get("name", "D"))
        D = self.space(obj, name, path)
        DD = D | D
        m = lambda key, s, t, default=...: self.matrix(obj, key, s, t, path, default)
        alg = AlgebraStructure(D, m("unit", K, D), m("mult", DD, D))
        coalg = CoalgebraStructure(D, m("counit", D, K), m("comult", D, DD))
        t = m("t", DD, DD, None) or flip(D, D, self.field)
        tp = m("t_prime", DD, DD, None) or flip(D, D, self.field)
        nabla = m("nabla", DD, DD, None) or identity(DD, self.field)
        return Wbha(alg, coalg, WeakYangBaxter(D, t, tp, nabla), m("antipode", D, D),
                    antipode_inverse=m("antipode_inverse", D, D, None), name=name)

    def groupoid(self, obj: dict, path: str) -> Wbha:
        def strs(key):
            v = self.get(obj, key, path)
            if not isinstance(v, list):
                self.fail(f"{path}.{key}", "must be a list")
            return v

        objects = tuple(str(x) for x in strs("objects"))
        arrows = []
        for k, a in enumerate(strs("arrows")):
            if not (isinstance(a, list) and len(a) == 3):
                self.fail(f"{path}.arrows[{k}]", "must be [label, source, target]")
            arrows.append(tuple(str(x) for x in a))
        comp = {}
        for k, c in enumerate(strs("composition")):
            if not (isinstance(c, list) and len(c) == 3):
                self.fail(f"{path}.composition[{k}]", "must be [tau, sigma, tau∘sigma]")
            comp[(str(c[0]), str(c[1]))] = str(c[2])
        ids = self.get(obj, "identities", path)
        inv = self.get(obj, "inverses", path)
        if not isinstance(ids, dict) or not isinstance(inv, dict):
            self.fail(path, "identities and inverses must be objects")
        name = str(obj.get("name", "G"))
        g = GroupoidSpec(objects, tuple(arrows), comp, {str(a): str(b) for a, b in ids.items()},
                         {str(a): str(b) for a, b in inv.items()}, name)
        rep = validate_groupoid(g)
        if not rep.passed:
            bad = rep.failures[0]
            w = bad.witness
            detail = f" ({w.lhs}; expected {w.rhs})" if w else ""
            self.fail(path, f"groupoid invariant {bad.identity_id} fails{detail}")
        try:
            return groupoid_algebra(g, self.field)
        except InvalidGroupoid as exc:
            self.fail(path, str(exc))

    def yd_module(self, obj: dict, path: str) -> YdModule:
        d = self.wbha_ref(self.get(obj, "base", path), f"{path}.base")
        D = d.carrier
        M = self.space(obj, str(obj.get("name", "M")), path)
        m = lambda key, s, t, default=...: self.matrix(obj, key, s, t, path, default)
        fl = self.field
        quad = WeakOperatorQuad(d, M,
                                m("r", M | D, D | M, None) or flip(M, D, fl),
                                m("r_prime", D | M, M | D, None) or flip(D, M, fl),
                                m("s", D | M, M | D, None) or flip(D, M, fl),
                                m("s_prime", M | D, D | M, None) or flip(M, D, fl))
        return YdModule(d, M, m("action", D | M, M), m("coaction", M, D | M), quad)

    def projection(self, obj: dict, path: str) -> Projection:
        d = self.wbha_ref(self.get(obj, "base", path), f"{path}.base")
        b = self.wbha_ref(self.get(obj, "total", path), f"{path}.total")
        f = self.matrix(obj, "f", d.carrier, b.carrier, path)
        g = self.matrix(obj, "g", b.carrier, d.carrier, path)
        return Projection(d, b, f, g, name=str(obj.get("name", "")))


def _resolve_field(doc: dict, default: Field, source: str) -> Field:
    header = doc.get("field")
    if header is None:
        return default
    if not isinstance(header, str):
        raise ParseError(f"{source}: $.field: must be a string such as 'Q' or 'Fp:7'")
    try:
        return parse_field(header)
    except ValidationError as exc:
        raise ValidationError(f"{source}: $.field: {exc}") from None


def load_instance(path: str | os.PathLike, fld: Field = QQ) -> Instance:
    """Builtin corpus name or JSON file -> Instance.

    Shapes, scalars and the field header are validated here; algebraic
    identities are left to the suites so that a corrupted structure shows up
    as failing report rows. Groupoid tables are the exception: an invalid
    groupoid has no algebra and raises ValidationError naming the axiom.
    """
    name = str(path)
    if name in BUILTINS:
        return builtin(name, fld)
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read instance {name!r}: {exc.strerror}") from None
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except _FloatError as exc:
        raise ParseError(f"{name}: line {_line_of(text, str(exc))}: float {exc} "
                         f"is not an exact scalar") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{name}: line 1: top level must be an object")
    r = _Reader(_resolve_field(doc, fld, name), name)
    kind = doc.get("type")
    inst_name = str(doc.get("name", p.stem))
    try:
        if kind == "wbha":
            return Instance(inst_name, "wbha", wbha=r.wbha(doc, "$"))
        if kind == "groupoid":
            return Instance(inst_name, "wbha", wbha=r.groupoid(doc, "$"))
        if kind == "yd_module":
            return Instance(inst_name, "yd", yd=r.yd_module(doc, "$"))
        if kind == "projection":
            proj = r.projection(doc, "$")
            return Instance(inst_name, "projection", wbha=proj.base, projection=proj)
    except (ParseError, ValidationError):
        raise
    except WeakYdError as exc:
        raise ValidationError(f"{name}: {type(exc).__name__}: {exc}") from None
    raise ValidationError(f"{name}: $.type: expected groupoid, wbha, yd_module or projection, "
                          f"got {kind!r}")


def _rows(m: Morphism) -> list[list[str]]:
    fmt = m.field.format
    return [[fmt(x) for x in row] for row in m.tolist()]


def dump_wbha(d: Wbha) -> dict:
    """The file form of a WBHA; ``load_instance`` reads it back unchanged."""
    return {
        "type": "wbha", "field": d.field.name, "name": d.name,
        "basis": list(d.carrier.basis_labels),
        "unit": _rows(d.eta), "mult": _rows(d.mu), "counit": _rows(d.eps),
        "comult": _rows(d.delta), "antipode": _rows(d.lam),
        "t": _rows(d.t), "t_prime": _rows(d.t_prime), "nabla": _rows(d.nabla),
    }


def dump_yd_module(m: YdModule, base: Any = None) -> dict:
    """File form of a YD module; ``base`` may be a builtin name to reference."""
    w = m.wo
    return {
        "type": "yd_module", "field": m.base.field.name, "name": m.name,
        "base": base if base is not None else dump_wbha(m.base),
        "basis": list(m.carrier.basis_labels),
        "action": _rows(m.action), "coaction": _rows(m.coaction),
        "r": _rows(w.r), "r_prime": _rows(w.r_prime), "s": _rows(w.s), "s_prime": _rows(w.s_prime),
    }


class _FloatError(ValueError):
    pass


def _reject_float(s: str):
    raise _FloatError(s)


def _line_of(text: str, token: str) -> int:
    k = text.find(token)
    return text.count("\n", 0, k) + 1 if k >= 0 else 1


# running --------------------------------------------------------------------

def _expand(names: Sequence[str]) -> list[str]:
    out = []
    for n in names:
        if n == "corpus":
            out += DEFAULT_CORPUS
        elif n == "all":
            out += BUILTINS
        else:
            out.append(n)
    return out


def resolve_jobs(jobs: int) -> int:
    env = os.environ.get("WEAKYD_JOBS")
    if env is not None and env.strip():
        try:
            jobs = int(env)
        except ValueError:
            raise ValidationError(f"WEAKYD_JOBS must be an integer, not {env!r}") from None
        if jobs < 0:
            raise ValidationError("WEAKYD_JOBS must be nonnegative")
    return jobs if jobs > 0 else (os.cpu_count() or 1)


def run_suites(cfg: SuiteConfig) -> tuple[list[Report], int]:
    """All reports of the configured run and the exit code (0 iff no fail row)."""
    reports: list[Report] = []
    with parallel_jobs(resolve_jobs(cfg.jobs)):
        for ref in _expand(cfg.instances):
            path = ref if ref in BUILTINS else str(cfg.base_dir / ref)
            inst = load_instance(path, cfg.field)
            for s in cfg.suites:
                reports += run_suite(inst, s)
    failed = any(r.status == FAIL for rep in reports for r in rep)
    return reports, EXIT_FAIL if failed else EXIT_OK


def render(reports: Sequence[Report], cfg: SuiteConfig) -> str:
    if cfg.report_format == "text":
        body = "\n".join(r.to_text() for r in reports)
        n = sum(len(r) for r in reports)
        nf = sum(len(r.failures) for r in reports)
        ns = sum(1 for rep in reports for r in rep if r.status == "skipped")
        return f"{body}\n{n} rows: {n - nf - ns} pass, {nf} fail, {ns} skipped\n"
    doc = {
        "field": cfg.field.name,
        "suites": list(cfg.suites),
        "reports": [r.to_dict(cfg.timings) for r in reports],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_config(path: str) -> SuiteConfig:
    p = Path(path)
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ValidationError(f"cannot read config {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: line 1: config must be an object")
    suites = doc.get("suites", list(SUITES))
    if isinstance(suites, str):
        suites = _split(suites)
    return SuiteConfig(
        field=parse_field(str(doc.get("field", "Q"))),
        instances=list(doc.get("instances", DEFAULT_CORPUS)),
        suites=list(suites),
        jobs=int(doc.get("jobs", 1)),
        report_format=str(doc.get("format", "json")),
        timings=bool(doc.get("timings", False)),
        base_dir=p.parent,
    )


def _split(s: str) -> list[str]:
    return [x.strip() for x in s.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weakyd", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    c = sub.add_parser("check", help="run identity suites on instances")
    c.add_argument("--config", help="JSON run configuration")
    c.add_argument("--instance", action="append",
                   help="builtin name, instance file, 'corpus' or 'all' (repeatable, "
                        "comma separated)")
    c.add_argument("--suite", action="append",
                   help=f"suites to run (comma separated); default all of {','.join(SUITES)}")
    c.add_argument("--field", help="Q or Fp:<p> (default Q)")
    c.add_argument("--format", choices=("json", "text"))
    c.add_argument("--jobs", type=int, help="worker threads, 0 = one per CPU "
                                             "(WEAKYD_JOBS overrides)")
    c.add_argument("--timings", action="store_true", help="add wall_time to json rows")
    c.add_argument("--output", "-o", help="write the report here instead of stdout")
    sub.add_parser("list", help="list builtin instances and suites")
    return ap


def _config_from_args(args) -> SuiteConfig:
    cfg = load_config(args.config) if args.config else SuiteConfig()
    if args.instance:
        cfg.instances = [x for a in args.instance for x in _split(a)]
    if args.suite:
        cfg.suites = [x for a in args.suite for x in _split(a)]
    if args.field:
        cfg.field = parse_field(args.field)
    if args.format:
        cfg.report_format = args.format
    if args.jobs is not None:
        cfg.jobs = args.jobs
    if args.timings:
        cfg.timings = True
    cfg.__post_init__()
    return cfg


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        print("instances:", ", ".join(BUILTINS))
        print("default corpus:", ", ".join(DEFAULT_CORPUS))
        print("suites:", ", ".join(SUITES))
        return EXIT_OK
    try:
        cfg = _config_from_args(args)
        reports, code = run_suites(cfg)
    except WeakYdError as exc:
        print(f"weakyd: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    out = render(reports, cfg)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

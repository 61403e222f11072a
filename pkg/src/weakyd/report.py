"""Identity checks and the reports they produce.

An identity is a labelled thunk. Evaluating it yields either a pair of
morphisms (or a list of pairs) that must be equal, or an explicit
``Verdict``. Failures are data: they become rows with a witness entry.
"""

from __future__ import annotations

import contextlib
import contextvars
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .errors import WeakYdError
from .tensor_core import Morphism, first_difference

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class Witness:
    row: int
    col: int
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"row": self.row, "col": self.col, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class CheckRow:
    identity_id: str
    status: str
    witness: Optional[Witness] = None
    note: str = ""
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "id": self.identity_id,
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness else None,
        }
        if self.note:
            d["note"] = self.note
        if timings:
            d["wall_time"] = round(self.wall_time, 6)
        return d


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: Optional[Witness] = None
    note: str = ""


class SkipCheck(Exception):
    """Raised inside a thunk when the identity does not apply."""


Pair = tuple[Morphism, Morphism]
Outcome = Union[Verdict, Pair, Sequence[Pair]]


@dataclass(frozen=True)
class Identity:
    identity_id: str
    thunk: Callable[[], Outcome]


@dataclass
class Report:
    subject: str
    rows: list[CheckRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[CheckRow]:
        return [r for r in self.rows if r.status == FAIL]

    @property
    def ids(self) -> list[str]:
        return [r.identity_id for r in self.rows]

    def row(self, identity_id: str) -> CheckRow:
        for r in self.rows:
            if r.identity_id == identity_id:
                return r
        raise KeyError(identity_id)

    def status(self, identity_id: str) -> str:
        return self.row(identity_id).status

    def __iter__(self) -> Iterator[CheckRow]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, identity_id: str) -> bool:
        return any(r.identity_id == identity_id for r in self.rows)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for r in other.rows:
            self.rows.append(CheckRow(prefix + r.identity_id, r.status, r.witness,
                                      r.note, r.wall_time))
        return self

    def to_dict(self, timings: bool = False) -> dict:
        return {"subject": self.subject, "rows": [r.to_dict(timings) for r in self.rows]}

    def to_text(self) -> str:
        lines = [f"[{self.subject}]"]
        for r in self.rows:
            line = f"  {r.status.upper():7s} {r.identity_id}"
            if r.witness:
                w = r.witness
                line += f"  at ({w.row}, {w.col}): {w.lhs} != {w.rhs}"
            if r.note:
                line += f"  # {r.note}"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()


def compare(lhs: Morphism, rhs: Morphism) -> Optional[Witness]:
    """Witness of the first differing entry, or None when lhs == rhs."""
    if lhs.source != rhs.source or lhs.target != rhs.target:
        raise WeakYdError(
            f"sides have different types: {lhs.target.label}<-{lhs.source.label} "
            f"vs {rhs.target.label}<-{rhs.source.label}")
    if lhs == rhs:
        return None
    i, j = first_difference(lhs, rhs)
    f = lhs.field
    return Witness(i, j, f.format(lhs.entry(i, j)), f.format(rhs.entry(i, j)))


def equal(lhs: Morphism, rhs: Morphism) -> bool:
    return compare(lhs, rhs) is None


def chain(*sides: Morphism) -> list[Pair]:
    """a = b = c as the consecutive pairs (a, b), (b, c)."""
    return [(sides[k], sides[k + 1]) for k in range(len(sides) - 1)]


def _verdict(outcome: Outcome) -> Verdict:
    if isinstance(outcome, Verdict):
        return outcome
    if isinstance(outcome, tuple) and len(outcome) == 2 and isinstance(outcome[0], Morphism):
        pairs: Sequence[Pair] = [outcome]
    else:
        pairs = list(outcome)
    for k, (lhs, rhs) in enumerate(pairs):
        w = compare(lhs, rhs)
        if w is not None:
            note = f"equality {k + 1} of {len(pairs)}" if len(pairs) > 1 else ""
            return Verdict(False, w, note)
    return Verdict(True)


def evaluate(identity: Identity) -> CheckRow:
    start = time.perf_counter()
    try:
        v = _verdict(identity.thunk())
    except SkipCheck as exc:
        return CheckRow(identity.identity_id, SKIPPED, None, str(exc),
                        time.perf_counter() - start)
    except WeakYdError as exc:
        v = Verdict(False, exc.witness, f"{type(exc).__name__}: {exc}")
    return CheckRow(identity.identity_id, PASS if v.ok else FAIL, v.witness, v.note,
                    time.perf_counter() - start)


_JOBS: contextvars.ContextVar[int] = contextvars.ContextVar("weakyd_jobs", default=1)


@contextlib.contextmanager
def parallel_jobs(n: int):
    """Evaluate identities on n worker threads inside this block."""
    token = _JOBS.set(max(1, int(n)))
    try:
        yield
    finally:
        _JOBS.reset(token)


def run_checks(subject: str, identities: Iterable[Identity],
               jobs: Optional[int] = None) -> Report:
    """Evaluate identities; row order is the input order whatever the job count."""
    items = list(identities)
    n = jobs if jobs is not None else _JOBS.get()
    if n <= 1 or len(items) <= 1:
        rows = [evaluate(i) for i in items]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(evaluate, items))
    return Report(subject, rows)


def combine(subject: str, *reports: Report) -> Report:
    out = Report(subject)
    for r in reports:
        out.extend(r)
    return out

"""Objects, morphisms and idempotent splitting over an exact field.

A morphism is a dense matrix with ``target.dim`` rows and ``source.dim``
columns. The basis vector e_i (x) e_j of A (x) B has index i*dim(B) + j, so
the tensor product of morphisms is the Kronecker product.

Notation used throughout the package::

    g @ f      composition g o f
    f | g      tensor product f (x) g; a SpaceObject stands for its identity
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from . import _intmat
from ._elimination import rref
from .errors import NotIdempotent, ObjectMismatch, SingularMatrix
from .fields import QQ, Field, FieldScalar

__all__ = [
    "SpaceObject", "Morphism", "SplitIdempotent", "K", "tensor_objects",
    "identity", "zero", "compose", "tensor", "flip", "split_idempotent",
    "inverse", "rank", "first_difference",
]


class SpaceObject:
    """A finite-dimensional space with labelled basis.

    Tensor products are kept flat (a tuple of atomic factors) and the unit K
    is dropped from them, so the monoidal structure is strict.
    """

    __slots__ = ("label", "dim", "factors", "_basis", "_key")

    def __init__(self, label: str, dim: Optional[int] = None,
                 basis_labels: Optional[Sequence[str]] = None):
        if basis_labels is None:
            if dim is None:
                raise ValueError("need dim or basis_labels")
            basis_labels = [f"{label}{k}" for k in range(dim)]
        basis = tuple(str(b) for b in basis_labels)
        if dim is not None and dim != len(basis):
            raise ValueError(f"{label}: dim {dim} but {len(basis)} basis labels")
        if len(set(basis)) != len(basis):
            raise ValueError(f"{label}: basis labels are not distinct")
        self.label = label
        self.dim = len(basis)
        self.factors: tuple[SpaceObject, ...] = (self,)
        self._basis: Optional[tuple[str, ...]] = basis
        self._key = ("atom", label, basis)

    @classmethod
    def _product(cls, factors: tuple["SpaceObject", ...]) -> "SpaceObject":
        obj = cls.__new__(cls)
        obj.label = "⊗".join(f.label for f in factors)
        obj.dim = math.prod(f.dim for f in factors)
        obj.factors = factors
        obj._basis = None
        obj._key = ("tensor", tuple(f._key for f in factors))
        return obj

    @property
    def basis_labels(self) -> tuple[str, ...]:
        if self._basis is None:
            labels = [""]
            for f in self.factors:
                labels = [a + ("⊗" if a else "") + b for a in labels for b in f.basis_labels]
            self._basis = tuple(labels)
        return self._basis

    @property
    def is_unit(self) -> bool:
        return self._key == K._key

    def __eq__(self, other) -> bool:
        return isinstance(other, SpaceObject) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __or__(self, other):
        if isinstance(other, SpaceObject):
            return tensor_objects(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"SpaceObject({self.label!r}, dim={self.dim})"


K = SpaceObject("K", basis_labels=["1"])


def tensor_objects(*objs: SpaceObject) -> SpaceObject:
    factors: list[SpaceObject] = []
    for o in objs:
        factors.extend(f for f in o.factors if not f.is_unit)
    if not factors:
        return K
    if len(factors) == 1:
        return factors[0]
    return SpaceObject._product(tuple(factors))


Operand = Union["Morphism", SpaceObject]


class Morphism:
    """A linear map between SpaceObjects with exact entries.

    Entries are stored as an integer numerator array plus one positive common
    denominator in lowest terms. Tensor products are kept as a list of
    Kronecker factors until a dense matrix is needed; composing with a
    factored morphism contracts one factor at a time.
    """

    __slots__ = ("source", "target", "field", "_num", "_den", "_factors", "_is_id")

    def __init__(self, source: SpaceObject, target: SpaceObject, entries,
                 field: Field = QQ):
        values = np.array(entries, dtype=object)
        if values.size == 0:
            values = values.reshape(target.dim, source.dim)
        if values.shape != (target.dim, source.dim):
            raise ObjectMismatch(
                f"matrix shape {values.shape} does not match "
                f"{target.label} <- {source.label} ({target.dim}, {source.dim})")
        num, den = field.encode(values)
        self._set(source, target, field, _intmat.shrink(num), den)

    def _set(self, source, target, field, num, den, factors=None, is_id=False):
        self.source = source
        self.target = target
        self.field = field
        self._num = num
        self._den = den
        self._factors = factors
        self._is_id = is_id

    @classmethod
    def from_ints(cls, source: SpaceObject, target: SpaceObject, num: np.ndarray,
                  den: int = 1, field: Field = QQ) -> "Morphism":
        num = _intmat.shrink(np.asarray(num))
        if num.shape != (target.dim, source.dim):
            raise ObjectMismatch(f"numerator shape {num.shape} does not match objects")
        num, den = field.canonical(num, den)
        m = cls.__new__(cls)
        m._set(source, target, field, _intmat.shrink(num), den)
        return m

    @classmethod
    def from_columns(cls, source: SpaceObject, target: SpaceObject,
                     columns: Callable[[int], Mapping[int, object]],
                     field: Field = QQ) -> "Morphism":
        """Build a matrix from the image of each basis vector.

        ``columns(j)`` returns a mapping from target index to coefficient.
        """
        values = np.zeros((target.dim, source.dim), dtype=object)
        for j in range(source.dim):
            for i, c in columns(j).items():
                values[i, j] = values[i, j] + field.scalar(c)
        return cls(source, target, values, field)

    @classmethod
    def _factored(cls, factors: list["Morphism"]) -> "Morphism":
        m = cls.__new__(cls)
        src = tensor_objects(*(f.source for f in factors))
        tgt = tensor_objects(*(f.target for f in factors))
        m._set(src, tgt, factors[0].field, None, None, factors,
               all(f._is_id for f in factors))
        return m

    @classmethod
    def identity(cls, obj: SpaceObject, field: Field = QQ) -> "Morphism":
        m = cls.__new__(cls)
        m._set(obj, obj, field, None, 1, None, True)
        return m

    # dense data -------------------------------------------------------

    def _materialize(self) -> None:
        if self._num is not None:
            return
        if self._factors is None:
            num, den = np.eye(self.source.dim, dtype=np.int64), 1
        else:
            num = np.ones((1, 1), dtype=np.int64)
            den = 1
            for f in self._factors:
                num = _intmat.kron(num, f.num)
                den *= f.den
            num, den = self.field.canonical(num, den)
        self._den = den
        self._num = _intmat.shrink(num)

    @property
    def num(self) -> np.ndarray:
        self._materialize()
        return self._num

    @property
    def den(self) -> int:
        self._materialize()
        return self._den

    @property
    def shape(self) -> tuple[int, int]:
        return (self.target.dim, self.source.dim)

    @property
    def is_identity_marked(self) -> bool:
        return self._is_id

    def entry(self, i: int, j: int) -> FieldScalar:
        return self.field.decode(self.num[i, j], self.den)

    @property
    def entries(self) -> np.ndarray:
        out = np.empty(self.shape, dtype=object)
        num, den = self.num, self.den
        for idx in np.ndindex(*self.shape):
            out[idx] = self.field.decode(num[idx], den)
        return out

    def tolist(self) -> list[list[FieldScalar]]:
        return self.entries.tolist()

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self.num))

    # algebra ------------------------------------------------------------

    def __matmul__(self, other: Operand) -> "Morphism":
        if isinstance(other, SpaceObject):
            other = identity(other, self.field)
        return compose(self, other)

    def __rmatmul__(self, other: Operand) -> "Morphism":
        if isinstance(other, SpaceObject):
            return compose(identity(other, self.field), self)
        return NotImplemented

    def __or__(self, other: Operand) -> "Morphism":
        if isinstance(other, SpaceObject):
            other = identity(other, self.field)
        if not isinstance(other, Morphism):
            return NotImplemented
        return tensor(self, other)

    def __ror__(self, other: Operand) -> "Morphism":
        if isinstance(other, SpaceObject):
            return tensor(identity(other, self.field), self)
        return NotImplemented

    def _check_same_objects(self, other: "Morphism") -> None:
        if self.source != other.source or self.target != other.target:
            raise ObjectMismatch(
                f"cannot combine {self.target.label}<-{self.source.label} with "
                f"{other.target.label}<-{other.source.label}")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_same_objects(other)
        d = math.lcm(self.den, other.den)
        num = _intmat.add(_intmat.scaled(self.num, d // self.den),
                          _intmat.scaled(other.num, d // other.den))
        return Morphism.from_ints(self.source, self.target, num, d, self.field)

    def __neg__(self) -> "Morphism":
        return Morphism.from_ints(self.source, self.target,
                                  _intmat.scaled(self.num, -1), self.den, self.field)

    def __sub__(self, other: "Morphism") -> "Morphism":
        return self + (-other)

    def scale(self, c) -> "Morphism":
        x = self.field.scalar(c)
        if self.field.characteristic:
            return Morphism.from_ints(self.source, self.target,
                                      _intmat.scaled(self.num, x.value), 1, self.field)
        return Morphism.from_ints(self.source, self.target,
                                  _intmat.scaled(self.num, x.numerator),
                                  self.den * x.denominator, self.field)

    def with_entry(self, i: int, j: int, value) -> "Morphism":
        """Copy of this morphism with one entry replaced."""
        vals = self.entries
        vals[i, j] = self.field.scalar(value)
        return Morphism(self.source, self.target, vals, self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        if self.field != other.field:
            return False
        if self._is_id and other._is_id:
            return True
        return self.den == other.den and np.array_equal(self.num, other.num)

    __hash__ = None  # type: ignore[assignment]

    def is_idempotent(self) -> bool:
        return self.source == self.target and self @ self == self

    def __repr__(self) -> str:
        return f"Morphism({self.target.label} <- {self.source.label}, shape={self.shape})"


def identity(obj: SpaceObject, field: Field = QQ) -> Morphism:
    return Morphism.identity(obj, field)


def zero(source: SpaceObject, target: SpaceObject, field: Field = QQ) -> Morphism:
    return Morphism.from_ints(source, target,
                              np.zeros((target.dim, source.dim), dtype=np.int64), 1, field)


def _as_factors(m: Morphism) -> list[Morphism]:
    return list(m._factors) if m._factors is not None else [m]


def _apply_left(factors: Sequence[Morphism], x: np.ndarray) -> tuple[np.ndarray, int]:
    """(f_1 (x) ... (x) f_k) . x, contracting one factor at a time."""
    cols = x.shape[1]
    t = x.reshape([f.source.dim for f in factors] + [cols])
    den = 1
    for axis, f in enumerate(factors):
        if f._is_id:
            continue
        t = _intmat.contract_left(f.num, t, axis)
        den *= f.den
    return t.reshape(math.prod(f.target.dim for f in factors), cols), den


def _apply_right(x: np.ndarray, factors: Sequence[Morphism]) -> tuple[np.ndarray, int]:
    """x . (f_1 (x) ... (x) f_k)."""
    rows = x.shape[0]
    t = x.reshape([rows] + [f.target.dim for f in factors])
    den = 1
    for axis, f in enumerate(factors):
        if f._is_id:
            continue
        t = _intmat.contract_right(t, f.num, axis + 1)
        den *= f.den
    return t.reshape(rows, math.prod(f.source.dim for f in factors)), den


def _aligned(g: list[Morphism], f: list[Morphism]) -> bool:
    return len(g) == len(f) and all(a.source == b.target for a, b in zip(g, f))


def _fix_field(m: Morphism, field: Field) -> Morphism:
    if m.field != field:
        raise ObjectMismatch(f"field mismatch: {m.field} vs {field}")
    return m


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g o f. Requires source(g) == target(f)."""
    if g.source != f.target:
        raise ObjectMismatch(
            f"cannot compose {g.target.label}<-{g.source.label} after "
            f"{f.target.label}<-{f.source.label}")
    _fix_field(f, g.field)
    if g._is_id:
        return f
    if f._is_id:
        return g
    field = g.field
    gl, fl = g._factors, f._factors
    if gl is not None and fl is not None and _aligned(list(gl), list(fl)):
        return Morphism._factored([compose(a, b) for a, b in zip(gl, fl)])
    if gl is not None and fl is not None:
        # materialize the cheaper side
        if g.target.dim * g.source.dim <= f.target.dim * f.source.dim:
            gl = None
        else:
            fl = None
    if gl is not None:
        num, den = _apply_left(gl, f.num)
        den *= f.den
    elif fl is not None:
        num, den = _apply_right(g.num, fl)
        den *= g.den
    else:
        num, den = _intmat.matmul(g.num, f.num), g.den * f.den
    if field.characteristic:
        num = _intmat.reduce_mod(num, field.characteristic)
    return Morphism.from_ints(f.source, g.target, num, den, field)


def tensor(*ms: Morphism) -> Morphism:
    """Kronecker product under the row-major convention."""
    if not ms:
        return identity(K)
    field = ms[0].field
    factors: list[Morphism] = []
    for m in ms:
        _fix_field(m, field)
        factors.extend(_as_factors(m))
    if len(factors) == 1:
        return factors[0]
    return Morphism._factored(factors)


def flip(a: SpaceObject, b: SpaceObject, field: Field = QQ) -> Morphism:
    """The swap e_i (x) e_j -> e_j (x) e_i from A (x) B to B (x) A."""
    da, db = a.dim, b.dim
    src = tensor_objects(a, b)
    tgt = tensor_objects(b, a)
    if da <= 1 or db <= 1:
        num = np.eye(da * db, dtype=np.int64)
    else:
        num = np.zeros((da * db, da * db), dtype=np.int64)
        i, j = np.meshgrid(np.arange(da), np.arange(db), indexing="ij")
        num[(j * da + i).ravel(), (i * db + j).ravel()] = 1
    return Morphism.from_ints(src, tgt, num, 1, field)


def first_difference(a: Morphism, b: Morphism) -> Optional[tuple[int, int]]:
    """Row-major index of the first entry where a and b differ, or None."""
    if a.shape != b.shape:
        raise ObjectMismatch("shapes differ")
    if a.den == b.den:
        diff = a.num != b.num
    else:
        lhs = _intmat.scaled(a.num, b.den)
        rhs = _intmat.scaled(b.num, a.den)
        diff = lhs != rhs
    idx = np.argwhere(diff)
    if idx.size == 0:
        return None
    return int(idx[0][0]), int(idx[0][1])


def rank(m: Morphism) -> int:
    return len(rref(m.num, m.field)[2])


def inverse(m: Morphism) -> Morphism:
    """Exact inverse of a square matrix; SingularMatrix if not invertible."""
    n = m.source.dim
    if m.target.dim != n:
        raise SingularMatrix(f"{m!r} is not square")
    aug = np.concatenate([m.num.astype(object), np.eye(n, dtype=object) * m.den], axis=1)
    rows, den, piv = rref(_intmat.shrink(aug), m.field)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularMatrix(f"rank {len([p for p in piv if p < n])} < {n}")
    # rows = [den*I | den*A^{-1}] after clearing denominators
    return Morphism.from_ints(m.target, m.source, rows[:, n:], den, m.field)


@dataclass(frozen=True)
class SplitIdempotent:
    """An idempotent nabla: Y -> Y factored as inj o proj through its image."""

    nabla: Morphism
    image: SpaceObject
    inj: Morphism
    proj: Morphism

    def __post_init__(self):
        y = self.nabla.source
        assert self.inj.source == self.image and self.inj.target == y
        assert self.proj.source == y and self.proj.target == self.image
        assert self.inj @ self.proj == self.nabla
        assert self.proj @ self.inj == identity(self.image, self.nabla.field)


def _idempotence_witness(nabla: Morphism):
    from .report import Witness

    sq = nabla @ nabla
    pos = first_difference(sq, nabla)
    if pos is None:
        return None
    i, j = pos
    f = nabla.field
    return Witness(i, j, f.format(sq.entry(i, j)), f.format(nabla.entry(i, j)))


def split_idempotent(nabla: Morphism, label: Optional[str] = None) -> SplitIdempotent:
    """Deterministic splitting by rank factorization.

    ``inj`` consists of the pivot columns of nabla and ``proj`` of the nonzero
    rows of its reduced row echelon form, which is the unique solution of
    inj . proj = nabla.
    """
    y = nabla.source
    if nabla.target != y:
        raise ObjectMismatch(f"{nabla!r} is not an endomorphism")
    w = _idempotence_witness(nabla)
    if w is not None:
        raise NotIdempotent(f"not idempotent at entry ({w.row}, {w.col})", witness=w)
    rows, den, pivots = rref(nabla.num, nabla.field)
    name = label or f"Im({y.label})"
    image = SpaceObject(name, basis_labels=[f"[{y.basis_labels[c]}]" for c in pivots])
    num = nabla.num[:, pivots] if pivots else np.zeros((y.dim, 0), dtype=np.int64)
    inj = Morphism.from_ints(image, y, num, nabla.den, nabla.field)
    proj = Morphism.from_ints(y, image, rows.reshape(len(pivots), y.dim), den, nabla.field)
    return SplitIdempotent(nabla, image, inj, proj)


def morphism_from_table(source: SpaceObject, target: SpaceObject,
                        images: Iterable[Mapping[str, object]],
                        field: Field = QQ) -> Morphism:
    """Build a matrix from basis-label keyed images of each source basis vector."""
    index = {b: k for k, b in enumerate(target.basis_labels)}
    cols = [dict(im) for im in images]
    return Morphism.from_columns(source, target,
                                 lambda j: {index[k]: v for k, v in cols[j].items()}, field)

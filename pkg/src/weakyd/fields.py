"""Exact scalar fields: the rationals and prime fields.

Matrices never store field scalars directly. They keep an integer numerator
array and one positive common denominator (always 1 over a prime field), and
the field object converts between that encoding and scalar values.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import ParseError, ValidationError

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Residue:
    """An element of Z/pZ for a prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other) -> "Residue":
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError("residues of different characteristic")
            return other
        if isinstance(other, Fraction):
            return Residue(other.numerator, self.p) / Residue(other.denominator, self.p)
        if isinstance(other, int):
            return Residue(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return Residue(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Residue(self.value - o.value, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Residue(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> "Residue":
        if self.value == 0:
            raise ZeroDivisionError("zero residue has no inverse")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Residue):
            return NotImplemented
        return self.p == other.p and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


FieldScalar = Union[Fraction, Residue]


def _array_gcd(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        g = 0
        for x in a.flat:
            g = math.gcd(g, x)
            if g == 1:
                break
        return g
    return int(np.gcd.reduce(a.ravel()))


class Field:
    """Common interface of the scalar fields."""

    name: str = ""
    characteristic: int = 0

    def __eq__(self, other):
        return type(other) is type(self) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash((type(self).__name__, self.characteristic))

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "Q"
    characteristic = 0

    def scalar(self, value) -> Fraction:
        if isinstance(value, Residue):
            raise TypeError("cannot read a prime-field residue as a rational")
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        m = _SCALAR_RE.match(str(text))
        if not m:
            raise ParseError(f"not an exact scalar: {text!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)

    def format(self, x: Fraction) -> str:
        return str(x)

    def canonical(self, num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
        if den <= 0:
            raise ValueError("denominator must be positive")
        if den == 1:
            return num, 1
        g = math.gcd(_array_gcd(num), den)
        if g > 1:
            num = num // g
            den //= g
        return num, den

    def encode(self, values: np.ndarray) -> tuple[np.ndarray, int]:
        """Object array of scalars to (integer numerators, common denominator)."""
        fr = [self.scalar(v) for v in values.flat]
        den = 1
        for x in fr:
            den = math.lcm(den, x.denominator)
        num = np.array([x.numerator * (den // x.denominator) for x in fr], dtype=object)
        return self.canonical(num.reshape(values.shape), den)

    def decode(self, n, den: int) -> Fraction:
        return Fraction(int(n), den)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(int(p)):
            raise ValidationError(f"field characteristic {p} is not prime")
        self.characteristic = int(p)
        self.name = f"Fp:{p}"

    @property
    def p(self) -> int:
        return self.characteristic

    def scalar(self, value) -> Residue:
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Residue):
            if value.p != self.p:
                raise ValueError("residue from another field")
            return value
        x = Fraction(value)
        return Residue(x.numerator, self.p) / Residue(x.denominator, self.p)

    def parse(self, text: str) -> Residue:
        x = RationalField().parse(text)
        if x.denominator % self.p == 0:
            raise ParseError(f"{text!r} has a denominator divisible by {self.p}")
        return self.scalar(x)

    def format(self, x: Residue) -> str:
        return str(x.value)

    def canonical(self, num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        if den != 1:
            num = num * pow(den, -1, self.p)
        return num % self.p, 1

    def encode(self, values: np.ndarray) -> tuple[np.ndarray, int]:
        num = np.array([self.scalar(v).value for v in values.flat], dtype=object)
        return num.reshape(values.shape), 1

    def decode(self, n, den: int) -> Residue:
        return Residue(int(n), self.p)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(spec: str) -> Field:
    """Read "Q" or "Fp:<p>"."""
    s = spec.strip()
    if s in ("Q", "QQ"):
        return QQ
    m = re.match(r"^F[p]?:\s*(\d+)$", s)
    if not m:
        raise ParseError(f"unknown field {spec!r}; expected Q or Fp:<p>")
    return PrimeField(int(m.group(1)))

"""Scalars used throughout: exact rationals, exact elements of Q(sqrt d), complex doubles.

Arithmetic between ``int``/``Fraction``/``Quad`` stays exact. Anything touching a
``float`` or ``complex`` degrades to ``complex``. A ``Quad`` whose irrational part
vanishes collapses back to a ``Fraction`` so the rational fast path is kept.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational
from typing import Union

DEFAULT_TOL = 1e-9


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Return (s, d) with m = s*s*d and d squarefree (sign kept in d)."""
    if m == 0:
        return 0, 0
    sign = -1 if m < 0 else 1
    m = abs(m)
    s, d = 1, 1
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            s *= p
        if m % p == 0:
            m //= p
            d *= p
        p += 1
    return s, sign * d * m


class Quad:
    """a + b*sqrt(d) with a, b rational and d a squarefree integer other than 0, 1."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d in (0, 1):
            raise ValueError(f"radicand must be squarefree and not 0/1, got {d}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    @staticmethod
    def make(a, b, d: int) -> "Scalar":
        b = Fraction(b)
        if b == 0:
            return Fraction(a)
        return Quad(a, b, d)

    def _coerce(self, other):
        if isinstance(other, Quad):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other.a, other.b
        if isinstance(other, (int, Rational)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return complex(self) + other
        return Quad.make(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return complex(self) - other
        return Quad.make(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return other - complex(self)
        return Quad.make(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return complex(self) * other
        x, y = c
        return Quad.make(self.a * x + self.d * self.b * y, self.a * y + self.b * x, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "Scalar":
        nrm = self.norm()
        return Quad.make(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        if isinstance(other, Quad):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            return Quad.make(self.a / other, self.b / other, self.d)
        return complex(self) / other

    def __rtruediv__(self, other):
        return other * self.inverse()

    def conjugate(self) -> "Quad":
        # complex conjugation; only imaginary fields flip the radical
        if self.d < 0:
            return Quad(self.a, -self.b, self.d)
        return self

    def __complex__(self) -> complex:
        return complex(self.a) + complex(self.b) * cmath.sqrt(self.d)

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Quad):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"Quad({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        return format_scalar(self)


Scalar = Union[int, Fraction, Quad, float, complex]


def is_exact(x) -> bool:
    return isinstance(x, (int, Rational, Quad))


def conj(x):
    if isinstance(x, (int, Rational)):
        return x
    return x.conjugate()


def to_complex(x) -> complex:
    return complex(x)


def is_zero(x, tol: float = DEFAULT_TOL) -> bool:
    if is_exact(x):
        return not x
    return abs(x) <= tol


def close(x, y, tol: float = DEFAULT_TOL) -> bool:
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(complex(x) - complex(y)) <= tol


def residual(x, y) -> float:
    if is_exact(x) and is_exact(y):
        return 0.0 if x == y else abs(complex(x) - complex(y)) or math.inf
    return abs(complex(x) - complex(y))


def exact_sqrt(q: Fraction) -> Scalar | None:
    """Exact square root of a nonnegative-or-negative rational, as Fraction or Quad."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    # sqrt(p/r) = sqrt(p*r)/r
    num = q.numerator * q.denominator
    s, d = squarefree_decompose(num)
    if d == 1:
        return Fraction(s, q.denominator)
    return Quad(0, Fraction(s, q.denominator), d)


def field_of(x) -> str:
    """'rational', 'quadratic:d' or 'complex'."""
    if isinstance(x, Quad):
        return f"quadratic:{x.d}"
    if isinstance(x, (int, Rational)):
        return "rational"
    return "complex"


def join_fields(kinds) -> str:
    """Smallest scalar kind able to hold every kind in ``kinds`` (single radicand only)."""
    radicands = set()
    for k in kinds:
        if k == "complex":
            return "complex"
        if k.startswith("quadratic:"):
            radicands.add(int(k.split(":")[1]))
    if not radicands:
        return "rational"
    if len(radicands) == 1:
        return f"quadratic:{radicands.pop()}"
    return "complex"


def coerce_to_kind(x, kind: str):
    if kind == "complex":
        return complex(x)
    return x


def parse_exact(text) -> Scalar:
    """Parse a JSON number or string ("p/q", "0.5", "1/2+1/2*sqrt(-3)")."""
    if isinstance(text, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return complex(text)
    if not isinstance(text, str):
        raise ValueError(f"not a number: {text!r}")
    s = text.replace(" ", "")
    if "sqrt(" in s:
        head, _, tail = s.partition("*sqrt(")
        d = int(tail.rstrip(")"))
        # split head into a and b at the last top-level sign
        idx = max(head.rfind("+", 1), head.rfind("-", 1))
        if idx <= 0:
            a, b = "0", head
        else:
            a, b = head[:idx], head[idx:]
        return Quad.make(Fraction(a), Fraction(b.lstrip("+")), d)
    return Fraction(s)


def format_scalar(x) -> str | list[float]:
    """Exact string for exact scalars, [re, im] decimals otherwise."""
    if isinstance(x, Quad):
        b = format_scalar(x.b)
        body = f"{b}*sqrt({x.d})"
        if x.a == 0:
            return body
        sign = "" if x.b < 0 else "+"
        return f"{format_scalar(x.a)}{sign}{body}"
    if isinstance(x, (int, Rational)):
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    z = complex(x)
    return [z.real, z.imag]

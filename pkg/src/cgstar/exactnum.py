"""Exact complex-rational scalars: the coefficient field of the symbolic core.

Every symbolic coefficient is a complex number whose real and imaginary
parts are arbitrary-precision rationals in canonical form (reduced,
positive denominator).  Conversion to a machine double is the only lossy
operation in the package.
"""

from __future__ import annotations

import math
import re

try:
    from gmpy2 import mpq as Rational  # much faster on deep coefficient chains
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational


def as_rational(value) -> Rational:
    """Coerce an int, a 'p/q' / 'p' string, or any rational to Rational."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, rational, or 'p/q' string")
    return Rational(value)


def parse_rational(text: str) -> Rational:
    """Parse the external rational format: 'p/q' or 'p', optional leading '-'."""
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational: {text!r}")
    if text.endswith("/0"):
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Rational(text)


_RAT = r"\d+(?:/\d+)?"
_RE_REAL = re.compile(rf"[+-]?{_RAT}")
_RE_IMAG = re.compile(rf"([+-]?)(?:({_RAT})\*)?i")


class ExactComplex:
    """Complex scalar with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rational(re)
        self.im = as_rational(im)

    @classmethod
    def _raw(cls, re, im):
        # fast path: parts are already Rational
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def conjugate(self) -> "ExactComplex":
        return ExactComplex._raw(self.re, -self.im)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactComplex._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactComplex._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return ExactComplex._raw(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, ExactComplex):
            a, b, c, d = self.re, self.im, other.re, other.im
            return ExactComplex._raw(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Rational)):
            return ExactComplex._raw(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        den = other.re * other.re + other.im * other.im
        if not den:
            raise ZeroDivisionError("division by zero ExactComplex")
        a, b, c, d = self.re, self.im, other.re, other.im
        return ExactComplex._raw((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ExactComplex({self.re}, {self.im})"

    def __str__(self):
        return format_complex(self)

    def to_complex(self) -> complex:
        """Nearest double-precision complex; raises OverflowError if not finite."""
        z = complex(float(self.re), float(self.im))
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise OverflowError(f"{self!r} does not fit in a double")
        return z


def _coerce(value):
    if isinstance(value, ExactComplex):
        return value
    if isinstance(value, (int, Rational)):
        return ExactComplex._raw(as_rational(value), _RZERO)
    return NotImplemented


_RZERO = Rational(0)

ZERO = ExactComplex(0)
ONE = ExactComplex(1)
I = ExactComplex(0, 1)


def format_complex(z: ExactComplex) -> str:
    """External scalar format: 're', 'im*i', or 're+im*i' (with 1*i -> i)."""
    if not z.im:
        return str(z.re)
    mag = -z.im if z.im < 0 else z.im
    imag = "i" if mag == 1 else f"{mag}*i"
    if not z.re:
        return imag if z.im > 0 else f"-{imag}"
    sign = "+" if z.im > 0 else "-"
    return f"{z.re}{sign}{imag}"


def parse_complex(text: str) -> ExactComplex:
    """Parse the external scalar format produced by :func:`format_complex`."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    m = _RE_IMAG.fullmatch(s)
    if m:
        sign, mag = m.groups()
        q = Rational(mag) if mag else Rational(1)
        return ExactComplex._raw(_RZERO, -q if sign == "-" else q)
    m = _RE_REAL.fullmatch(s)
    if m:
        return ExactComplex._raw(Rational(s), _RZERO)
    m = _RE_REAL.match(s)
    if m:
        tail = _RE_IMAG.fullmatch(s, m.end())
        if tail and tail.group(1):
            sign, mag = tail.groups()
            q = Rational(mag) if mag else Rational(1)
            return ExactComplex._raw(Rational(m.group(0)), -q if sign == "-" else q)
    raise ValueError(f"not a complex scalar: {text!r}")

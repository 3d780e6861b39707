"""
Exact arithmetic in Q(i, sqrt3)
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Tuple, Union

from services.errors import DivisionByZero

Rational = Fraction
Scalar = Union[int, Fraction, "FieldElem"]

_NAMES = ("", "i", "sqrt3", "i*sqrt3")


def _normalized(a: int, b: int, c: int, d: int, den: int) -> Tuple[int, int, int, int, int]:
    if den < 0:
        a, b, c, d, den = -a, -b, -c, -d, -den
    g = gcd(gcd(a, b), gcd(gcd(c, d), den))
    if g > 1:
        a, b, c, d, den = a // g, b // g, c // g, d // g, den // g
    return a, b, c, d, den


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


# Q(sqrt3) helpers on pairs (e, f) meaning e + f*sqrt3

def _l_mul(x, y):
    return (x[0] * y[0] + 3 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _l_div(x, y):
    norm = y[0] * y[0] - 3 * y[1] * y[1]
    num = _l_mul(x, (y[0], -y[1]))
    return (num[0] / norm, num[1] / norm)


def _l_sqrt(x) -> Optional[Tuple[Fraction, Fraction]]:
    e, f = x
    if e == 0 and f == 0:
        return (Fraction(0), Fraction(0))
    root_norm = rational_sqrt(e * e - 3 * f * f)
    if root_norm is None:
        return None
    for m in (root_norm, -root_norm):
        g = rational_sqrt((e + m) / 2)
        if g is None:
            continue
        if g != 0:
            h = f / (2 * g)
        else:
            h = rational_sqrt((e - m) / 6)
            if h is None:
                continue
        if _l_mul((g, h), (g, h)) == (e, f):
            return (g, h)
    return None


class FieldElem:
    """Element c0 + c1*i + c2*sqrt3 + c3*i*sqrt3 with rational coordinates"""

    __slots__ = ("_num", "_den")

    def __init__(self, c0: Union[int, Fraction] = 0, c1: Union[int, Fraction] = 0,
                 c2: Union[int, Fraction] = 0, c3: Union[int, Fraction] = 0):
        coords = [Fraction(c) for c in (c0, c1, c2, c3)]
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in coords]
        self._set(*_normalized(nums[0], nums[1], nums[2], nums[3], den))

    def _set(self, a, b, c, d, den):
        self._num = (a, b, c, d)
        self._den = den

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "FieldElem":
        obj = cls.__new__(cls)
        obj._set(*_normalized(a, b, c, d, den))
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 0, 0, 1)
        if isinstance(value, Fraction):
            return cls._raw(value.numerator, 0, 0, 0, value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(i, sqrt3)")

    # Coordinates

    @property
    def c0(self) -> Fraction:
        return Fraction(self._num[0], self._den)

    @property
    def c1(self) -> Fraction:
        return Fraction(self._num[1], self._den)

    @property
    def c2(self) -> Fraction:
        return Fraction(self._num[2], self._den)

    @property
    def c3(self) -> Fraction:
        return Fraction(self._num[3], self._den)

    def coords(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_one(self) -> bool:
        return self._num == (1, 0, 0, 0) and self._den == 1

    def is_rational(self) -> bool:
        return not (self._num[1] or self._num[2] or self._num[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # Ring operations

    def __add__(self, other: Scalar) -> "FieldElem":
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        a, e = self._num, other._num
        if self._den == other._den:
            return FieldElem._raw(a[0] + e[0], a[1] + e[1], a[2] + e[2], a[3] + e[3], self._den)
        s, t = other._den, self._den
        return FieldElem._raw(a[0] * s + e[0] * t, a[1] * s + e[1] * t,
                              a[2] * s + e[2] * t, a[3] * s + e[3] * t, s * t)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        a = self._num
        return FieldElem._raw(-a[0], -a[1], -a[2], -a[3], self._den)

    def __sub__(self, other: Scalar) -> "FieldElem":
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "FieldElem":
        return FieldElem.coerce(other) - self

    def __mul__(self, other: Scalar) -> "FieldElem":
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._num
        e, f, g, h = other._num
        den = self._den * other._den
        if not (b or c or d):
            return FieldElem._raw(a * e, a * f, a * g, a * h, den)
        if not (f or g or h):
            return FieldElem._raw(a * e, b * e, c * e, d * e, den)
        return FieldElem._raw(
            a * e - b * f + 3 * c * g - 3 * d * h,
            a * f + b * e + 3 * c * h + 3 * d * g,
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
            den,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "FieldElem":
        try:
            other = FieldElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldElem":
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Galois conjugates: i -> -i, sqrt3 -> -sqrt3, and both

    def conjugate_i(self) -> "FieldElem":
        a, b, c, d = self._num
        return FieldElem._raw(a, -b, c, -d, self._den)

    def conjugate_sqrt3(self) -> "FieldElem":
        a, b, c, d = self._num
        return FieldElem._raw(a, b, -c, -d, self._den)

    def conjugate_both(self) -> "FieldElem":
        a, b, c, d = self._num
        return FieldElem._raw(a, -b, -c, d, self._den)

    def norm(self) -> Fraction:
        return (self * self.conjugate_i() * self.conjugate_sqrt3() * self.conjugate_both()).c0

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(i, sqrt3)")
        if self.is_rational():
            return FieldElem._raw(self._den, 0, 0, 0, self._num[0])
        cofactor = self.conjugate_i() * self.conjugate_sqrt3() * self.conjugate_both()
        norm = (self * cofactor).c0
        return cofactor * FieldElem._raw(norm.denominator, 0, 0, 0, norm.numerator)

    def sqrt(self) -> Optional["FieldElem"]:
        """A square root inside the field, or None when there is none"""
        if self.is_zero():
            return ZERO
        u = (self.c0, self.c2)
        v = (self.c1, self.c3)
        uu, vv = _l_mul(u, u), _l_mul(v, v)
        n = _l_sqrt((uu[0] + vv[0], uu[1] + vv[1]))
        if n is None:
            return None
        for sign in (1, -1):
            alpha = _l_sqrt(((u[0] + sign * n[0]) / 2, (u[1] + sign * n[1]) / 2))
            if alpha is None:
                continue
            if alpha != (0, 0):
                beta = _l_div(v, (2 * alpha[0], 2 * alpha[1]))
            else:
                beta = _l_sqrt((-u[0], -u[1]))
                if beta is None:
                    continue
            candidate = FieldElem(alpha[0], beta[0], alpha[1], beta[1])
            if candidate * candidate == self:
                return candidate
        return None

    # Comparison and hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElem.coerce(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self._num[0], self._den))
        return hash((self._num, self._den))

    # Printing

    def __str__(self) -> str:
        parts = []
        for coeff, name in zip(self.coords(), _NAMES):
            if coeff == 0:
                continue
            magnitude = abs(coeff)
            if not name:
                body = str(magnitude)
            elif magnitude == 1:
                body = name
            else:
                body = f"{magnitude}*{name}"
            parts.append((coeff < 0, body))
        if not parts:
            return "0"
        negative, body = parts[0]
        text = f"-{body}" if negative else body
        for negative, body in parts[1:]:
            text += f" - {body}" if negative else f" + {body}"
        return text

    def __repr__(self) -> str:
        return f"FieldElem('{self}')"


ZERO = FieldElem._raw(0, 0, 0, 0, 1)
ONE = FieldElem._raw(1, 0, 0, 0, 1)
I = FieldElem._raw(0, 1, 0, 0, 1)
SQRT3 = FieldElem._raw(0, 0, 1, 0, 1)

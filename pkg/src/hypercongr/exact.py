"""Exact scalars: rationals, Gaussian rationals and truncated power series.

Rationals are :class:`fractions.Fraction`, which already keeps numerator and
denominator coprime with a positive denominator. Gaussian rationals and power
series are built on top of it.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction

# v_p(0); compares above every integer and is never confused with one.
PlusInfinity = math.inf

_RATIONAL_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a :class:`Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_arith(a, b, op: str) -> Fraction:
    """Apply ``op`` in {add, sub, mul, div} to two rationals.

    Raises ZeroDivisionError for division by zero.
    """
    try:
        fn = _RATIONAL_OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational op {op!r}") from None
    a, b = as_rational(a), as_rational(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError(f"{a} / 0")
    return fn(a, b)


def _vp_int(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_rational(q, p: int):
    """p-adic valuation of a rational; ``PlusInfinity`` for zero."""
    q = as_rational(q)
    if q == 0:
        return PlusInfinity
    return _vp_int(abs(q.numerator), p) - _vp_int(q.denominator, p)


class GaussianRational:
    """An element re + im*i of Q(i) with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = as_rational(re)
        self.im = as_rational(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = cls.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        return cls._raw(as_rational(value), Fraction(0))

    def conj(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            return NotImplemented
        o = GaussianRational.coerce(other)
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return NotImplemented
        o = GaussianRational.coerce(other)
        if not o.im:
            return GaussianRational._raw(self.re * o.re, self.im * o.re)
        if not self.im:
            return GaussianRational._raw(self.re * o.re, self.re * o.im)
        return GaussianRational._raw(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return NotImplemented
        o = GaussianRational.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by the Gaussian rational 0")
        return self * GaussianRational._raw(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        result = GaussianRational._raw(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return NotImplemented
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}*i"


def gaussian_arith(a, b=None, op: str = "add") -> GaussianRational:
    """Apply ``op`` in {add, sub, mul, div, conj}; ``conj`` ignores ``b``."""
    a = GaussianRational.coerce(a)
    if op == "conj":
        return a.conj()
    b = GaussianRational.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown Gaussian op {op!r}")


Scalar = Union[int, Fraction, GaussianRational]


class PowerSeries:
    """Power series in one variable over Q(i), truncated after x**order.

    Binary operations between two series require equal orders. Plain scalars
    are promoted to constant series of the other operand's order.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Iterable[Scalar], order: int | None = None):
        coeffs = [GaussianRational.coerce(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) > order + 1:
            raise ValueError(
                f"{len(coeffs)} coefficients do not fit in order {order}"
            )
        zero = GaussianRational()
        coeffs.extend(zero for _ in range(order + 1 - len(coeffs)))
        self.coefficients = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar, order: int) -> "PowerSeries":
        """The series c0 + c1*x."""
        return cls([c0, c1] if order >= 1 else [c0], order)

    def _promote(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise ValueError(
                    f"power series orders differ: {self.order} vs {other.order}"
                )
            return other
        return PowerSeries.constant(other, self.order)

    def __getitem__(self, n: int) -> GaussianRational:
        return self.coefficients[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coefficients)

    def is_unit(self) -> bool:
        return not self.coefficients[0].is_zero()

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def __add__(self, other):
        o = self._promote(other)
        return PowerSeries(
            [a + b for a, b in zip(self.coefficients, o.coefficients)], self.order
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._promote(other)
        return PowerSeries(
            [a - b for a, b in zip(self.coefficients, o.coefficients)], self.order
        )

    def __rsub__(self, other):
        return self._promote(other) - self

    def __neg__(self):
        return PowerSeries([-c for c in self.coefficients], self.order)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = GaussianRational.coerce(other)
            return PowerSeries([a * c for a in self.coefficients], self.order)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            c = GaussianRational.coerce(other)
            return PowerSeries([a / c for a in self.coefficients], self.order)
        return series_mul(self, series_invert(self._promote(other)))

    def __rtruediv__(self, other):
        return self._promote(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return series_invert(self) ** (-n)
        result = PowerSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coefficients == other.coefficients
        try:
            return self == self._promote(other)
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coefficients]}, order={self.order})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product of two series of equal order, truncated at that order."""
    if a.order != b.order:
        raise ValueError(f"power series orders differ: {a.order} vs {b.order}")
    n = a.order
    ac, bc = a.coefficients, b.coefficients
    # skip zero coefficients; the x^4-structured series are mostly zeros
    a_nz = [(i, c) for i, c in enumerate(ac) if not c.is_zero()]
    b_nz = [(j, c) for j, c in enumerate(bc) if not c.is_zero()]
    out = [GaussianRational() for _ in range(n + 1)]
    for i, ca in a_nz:
        for j, cb in b_nz:
            if i + j > n:
                break
            out[i + j] = out[i + j] + ca * cb
    return PowerSeries(out, n)


def series_invert(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    c0 = a.coefficients[0]
    if c0.is_zero():
        raise ZeroDivisionError("power series with zero constant term is not invertible")
    inv0 = 1 / c0
    ac = a.coefficients
    out = [inv0]
    for n in range(1, a.order + 1):
        s = GaussianRational()
        for j in range(1, n + 1):
            if not ac[j].is_zero():
                s = s + ac[j] * out[n - j]
        out.append(-s * inv0)
    return PowerSeries(out, a.order)


def to_rational(value: Scalar) -> Fraction:
    """Return a real exact scalar as a Fraction; fails on nonzero imaginary part."""
    if isinstance(value, GaussianRational):
        if value.im:
            raise ValueError(f"{value} is not real")
        return value.re
    return as_rational(value)


def coefficients_as_rationals(series: PowerSeries) -> Sequence[Fraction]:
    return [to_rational(c) for c in series.coefficients]

"""Fixed-precision p-adic integers and Morita's p-adic Gamma function."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import as_rational


class NotPAdicallyIntegral(ValueError):
    """A rational whose denominator is divisible by p has no image in Z_p."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class PAdicContext:
    """The ring Z/p^k: prime ``p`` with ``k`` digits of precision."""

    p: int
    k: int
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise ValueError(f"p must be a prime >= 5, got {self.p}")
        if self.k < 1:
            raise ValueError(f"precision k must be >= 1, got {self.k}")
        object.__setattr__(self, "modulus", self.p**self.k)

    def __call__(self, value) -> "PAdicInt":
        """Embed an int, Fraction or PAdicInt into this ring."""
        if isinstance(value, PAdicInt):
            if value.ctx.p != self.p or value.ctx.k < self.k:
                raise ValueError(f"cannot move {value!r} into {self!r}")
            return PAdicInt(self, value.residue % self.modulus)
        if isinstance(value, int):
            return PAdicInt(self, value % self.modulus)
        return reduce_rational(value, self)

    def with_precision(self, k: int) -> "PAdicContext":
        return PAdicContext(self.p, k)


@dataclass(frozen=True)
class PAdicInt:
    """A residue in [0, p^k) standing for an element of Z_p to precision k."""

    ctx: PAdicContext
    residue: int

    def __post_init__(self):
        if not 0 <= self.residue < self.ctx.modulus:
            object.__setattr__(self, "residue", self.residue % self.ctx.modulus)

    def _other(self, other) -> int:
        if isinstance(other, PAdicInt):
            if other.ctx != self.ctx:
                raise ValueError(f"mixed p-adic contexts {self.ctx} and {other.ctx}")
            return other.residue
        if isinstance(other, int):
            return other
        return reduce_rational(other, self.ctx).residue

    def __add__(self, other):
        return PAdicInt(self.ctx, (self.residue + self._other(other)) % self.ctx.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return PAdicInt(self.ctx, (self.residue - self._other(other)) % self.ctx.modulus)

    def __rsub__(self, other):
        return PAdicInt(self.ctx, (self._other(other) - self.residue) % self.ctx.modulus)

    def __neg__(self):
        return PAdicInt(self.ctx, -self.residue % self.ctx.modulus)

    def __mul__(self, other):
        return PAdicInt(self.ctx, self.residue * self._other(other) % self.ctx.modulus)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return PAdicInt(self.ctx, pow(self.residue, n, self.ctx.modulus))

    def inverse(self) -> "PAdicInt":
        if self.residue % self.ctx.p == 0:
            raise ZeroDivisionError(f"{self.residue} is not a unit mod {self.ctx.p}")
        return PAdicInt(self.ctx, pow(self.residue, -1, self.ctx.modulus))

    def __truediv__(self, other):
        if not isinstance(other, PAdicInt):
            other = self.ctx(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.ctx(other) / self

    def __eq__(self, other):
        if isinstance(other, PAdicInt):
            return self.ctx == other.ctx and self.residue == other.residue
        if isinstance(other, (int, Fraction)):
            try:
                return self.residue == self._other(other) % self.ctx.modulus
            except NotPAdicallyIntegral:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.residue))

    def __int__(self):
        return self.residue

    def valuation(self) -> int:
        """v_p of the residue, capped at k (zero residue reports k)."""
        if self.residue == 0:
            return self.ctx.k
        v, r = 0, self.residue
        while r % self.ctx.p == 0:
            r //= self.ctx.p
            v += 1
        return v

    @property
    def at_cap(self) -> bool:
        """True when the residue is 0, so only v >= k is certified."""
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.residue % self.ctx.p != 0


def reduce_rational(q, ctx: PAdicContext) -> PAdicInt:
    """Image of a p-integral rational in Z/p^k."""
    q = as_rational(q)
    if q.denominator % ctx.p == 0:
        raise NotPAdicallyIntegral(f"{q} has p={ctx.p} in its denominator")
    m = ctx.modulus
    return PAdicInt(ctx, q.numerator * pow(q.denominator, -1, m) % m)


def _unit_product_below(n: int, p: int, modulus: int) -> int:
    """Product of the integers 1 <= j < n with p not dividing j, mod ``modulus``."""
    acc = 1
    start = 1
    while start < n:
        # [start, start + p - 1) runs up to, but excludes, the next multiple of p
        stop = min(start + p - 1, n)
        acc = acc * math.prod(range(start, stop)) % modulus
        start += p
    return acc


def gamma_p_int(n: int, ctx: PAdicContext) -> PAdicInt:
    """Gamma_p(n) = (-1)^n * prod_{1<=j<n, p∤j} j, with Gamma_p(0) = 1.

    Costs about n multiplications; n is normally below p^k.
    """
    if n < 0:
        raise ValueError(f"gamma_p_int needs n >= 0, got {n}")
    if n == 0:
        return PAdicInt(ctx, 1)
    prod = _unit_product_below(n, ctx.p, ctx.modulus)
    return PAdicInt(ctx, -prod if n & 1 else prod)


def representative(x, ctx: PAdicContext) -> int:
    """The integer n in [0, p^k) with n ≡ x (mod p^k)."""
    return reduce_rational(x, ctx).residue


def gamma_p_rational(x, ctx: PAdicContext) -> PAdicInt:
    """Gamma_p(x) mod p^k for p-integral rational x.

    Evaluates the defining product at the representative of x in [0, p^k);
    correct to precision k because |Gamma_p(x) - Gamma_p(y)|_p <= |x - y|_p.
    """
    return gamma_p_int(representative(x, ctx), ctx)


def gamma_p_reflection_sign(x, p: int) -> int:
    """The sign Gamma_p(x) * Gamma_p(1 - x) = (-1)^r, r ≡ x (mod p).

    r is taken in {1, ..., p}: for units this is the least nonnegative
    residue, and for x in pZ_p it is p (odd), since Gamma_p(0)Gamma_p(1) = -1.
    """
    residue = reduce_rational(x, PAdicContext(p, 1)).residue or p
    return -1 if residue & 1 else 1


def gamma_p_derivative_approx(x, ctx: PAdicContext, m: int) -> PAdicInt:
    """Forward difference (Gamma_p(x + p^m) - Gamma_p(x)) / p^m.

    The result lives in Z/p^(k-m) and matches Gamma_p'(x) modulo
    p^min(m, k-m).
    """
    if not 1 <= m < ctx.k:
        raise ValueError(f"step exponent m must satisfy 1 <= m < k={ctx.k}, got {m}")
    x = as_rational(x)
    step = ctx.p**m
    diff = (gamma_p_rational(x + step, ctx) - gamma_p_rational(x, ctx)).residue
    if diff % step:
        # continuity of Gamma_p guarantees divisibility; anything else is a bug
        raise ArithmeticError(f"Gamma_p difference {diff} not divisible by p^{m}")
    out_ctx = ctx.with_precision(ctx.k - m)
    return PAdicInt(out_ctx, (diff // step) % out_ctx.modulus)

"""Pochhammer symbols and truncated hypergeometric series over exact scalars.

Scalars may be ``int``/``Fraction``, :class:`GaussianRational` or
:class:`PowerSeries`; all arithmetic stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import GaussianRational, PowerSeries, as_rational, to_rational
from .padic import PAdicContext, PAdicInt, is_prime

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class PoleInLowerParameter(ZeroDivisionError):
    def __init__(self, term: int, index: int):
        super().__init__(f"lower parameter #{index} gives a zero factor at term k={term}")
        self.term = term
        self.index = index


class PrefactorPole(ZeroDivisionError):
    pass


class WrongResidueClass(ValueError):
    pass


def _one_like(x):
    if isinstance(x, PowerSeries):
        return PowerSeries.constant(1, x.order)
    if isinstance(x, GaussianRational):
        return GaussianRational(1)
    return Fraction(1)


def _vanishes(x) -> bool:
    """True when x cannot be divided by: zero, or a series without unit term."""
    if isinstance(x, PowerSeries):
        return not x.is_unit()
    if isinstance(x, GaussianRational):
        return x.is_zero()
    return x == 0


def pochhammer(x, j: int):
    """Rising factorial (x)_j = x(x+1)...(x+j-1); (x)_0 = 1."""
    if j < 0:
        raise ValueError(f"pochhammer needs j >= 0, got {j}")
    if not isinstance(x, (PowerSeries, GaussianRational)):
        x = as_rational(x)
    result = _one_like(x)
    for i in range(j):
        result = result * (x + i)
    return result


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters of the truncated series sum_{k<=truncation} of an nF(n-1)."""

    upper: tuple
    lower: tuple
    argument: object
    truncation: int

    def __init__(self, upper: Sequence, lower: Sequence, argument, truncation: int):
        if len(lower) != len(upper) - 1:
            raise ValueError(
                f"need len(lower) == len(upper) - 1, got {len(upper)} and {len(lower)}"
            )
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        norm = lambda v: v if isinstance(v, (PowerSeries, GaussianRational)) else as_rational(v)
        object.__setattr__(self, "upper", tuple(norm(u) for u in upper))
        object.__setattr__(self, "lower", tuple(norm(l) for l in lower))
        object.__setattr__(self, "argument", norm(argument))
        object.__setattr__(self, "truncation", truncation)


def _series_order(spec: HypergeometricSpec):
    for v in (*spec.upper, *spec.lower, spec.argument):
        if isinstance(v, PowerSeries):
            return v.order
    return None


def evaluate_truncated(spec: HypergeometricSpec):
    """Exact value of sum_{k=0}^{m} prod (upper)_k / (prod (lower)_k k!) z^k.

    Numerator and denominator products are carried separately and divided
    once per term, so power-series parameters cost one inversion per term.
    """
    order = _series_order(spec)
    if order is not None:
        lift = lambda v: v if isinstance(v, PowerSeries) else PowerSeries.constant(v, order)
        upper = [lift(u) for u in spec.upper]
        lower = [lift(l) for l in spec.lower]
        z = lift(spec.argument)
        one = PowerSeries.constant(1, order)
    else:
        upper, lower, z = list(spec.upper), list(spec.lower), spec.argument
        gaussian = any(isinstance(v, GaussianRational) for v in (*upper, *lower, z))
        one = GaussianRational(1) if gaussian else Fraction(1)

    total = one
    num = one
    den = one
    zk = one
    for k in range(1, spec.truncation + 1):
        for i, l in enumerate(lower):
            factor = l + (k - 1)
            if _vanishes(factor):
                raise PoleInLowerParameter(k, i)
            den = den * factor
        for u in upper:
            num = num * (u + (k - 1))
        den = den * k
        zk = zk * z
        total = total + num * zk / den
    return total


def vanhamme_spec(p: int) -> HypergeometricSpec:
    return HypergeometricSpec(
        [Fraction(5, 4)] + [HALF] * 5,
        [QUARTER, 1, 1, 1, 1],
        -1,
        (p - 1) // 2,
    )


def _check_odd_prime(p: int, minimum: int = 5):
    if p < minimum or not is_prime(p):
        raise ValueError(f"expected a prime >= {minimum}, got {p}")


def vanhamme_lhs(p: int) -> Fraction:
    """The truncated 6F5 sum sum_{k<=(p-1)/2} (4k+1) ((1/2)_k/k!)^5 (-1)^k."""
    _check_odd_prime(p)
    total = Fraction(0)
    c = Fraction(1)  # (1/2)_k / k!
    for k in range((p - 1) // 2 + 1):
        if k:
            c = c * (k - HALF) / k
        term = (4 * k + 1) * c**5
        total += -term if k & 1 else term
    return total


def vanhamme_lhs_mod(p: int, ctx: PAdicContext) -> PAdicInt:
    """The same sum reduced mod p^k term by term, in O(p) modular steps."""
    if ctx.p != p:
        raise ValueError(f"context prime {ctx.p} differs from p={p}")
    m = ctx.modulus
    total = 0
    c = 1
    for k in range((p - 1) // 2 + 1):
        if k:
            # (2k-1)/(2k); k < p so 2k is a unit
            c = c * (2 * k - 1) % m * pow(2 * k, -1, m) % m
        term = (4 * k + 1) * pow(c, 5, m)
        total = (total - term if k & 1 else total + term) % m
    return PAdicInt(ctx, total)


def _psi_parameters(x):
    """Upper/lower parameters of Psi(x) for a scalar or series-valued x."""
    i = GaussianRational(0, 1)
    ix = x * i
    upper = [Fraction(5, 4), HALF, (1 - ix) / 2, (1 + ix) / 2, (1 - x) / 2, (1 + x) / 2]
    lower = [QUARTER, 1 + ix / 2, 1 - ix / 2, 1 + x / 2, 1 - x / 2]
    return upper, lower


def _phi_parameters(x, p: int):
    i = GaussianRational(0, 1)
    ix = x * i
    upper = [
        Fraction(5 - p, 4),
        Fraction(1 - p, 2),
        (1 - ix) / 2,
        (1 + ix) / 2,
        (1 - x) / 2,
        (1 + x) / 2,
    ]
    lower = [
        Fraction(1 - p, 4),
        1 + (ix - p) / 2,
        1 - (ix + p) / 2,
        1 + (x - p) / 2,
        1 - (x + p) / 2,
    ]
    return upper, lower


def psi_value(x, p: int) -> GaussianRational:
    """Psi(x): the van Hamme series with the four 1/2's split by ±x, ±ix."""
    _check_odd_prime(p)
    x = GaussianRational.coerce(x)
    upper, lower = _psi_parameters(x)
    return evaluate_truncated(HypergeometricSpec(upper, lower, -1, (p - 1) // 2))


def _check_series_args(p: int, order: int):
    _check_odd_prime(p, 7)
    if p % 4 != 3:
        raise WrongResidueClass(f"series expansion needs p ≡ 3 (mod 4), got p={p}")
    if order < 8 or order % 2:
        raise ValueError(f"order must be an even integer >= 8, got {order}")


def psi_series(p: int, order: int = 8) -> PowerSeries:
    """Taylor coefficients of Psi at x = 0 through x^order."""
    _check_series_args(p, order)
    x = PowerSeries.linear(0, 1, order)
    upper, lower = _psi_parameters(x)
    return evaluate_truncated(HypergeometricSpec(upper, lower, -1, (p - 1) // 2))


def phi_series(p: int, order: int = 8) -> PowerSeries:
    """Taylor coefficients of the terminating Phi(x) through x^order."""
    _check_series_args(p, order)
    x = PowerSeries.linear(0, 1, order)
    upper, lower = _phi_parameters(x, p)
    # (1-p)/2 in the upper list stops the series after k = (p-1)/2
    return evaluate_truncated(HypergeometricSpec(upper, lower, -1, (p + 1) // 2))


def phi_terms(p: int, order: int = 8) -> list:
    """The individual (nonzero) term series of Phi before summation."""
    _check_series_args(p, order)
    x = PowerSeries.linear(0, 1, order)
    upper, lower = _phi_parameters(x, p)
    terms = []
    for k in range((p - 1) // 2 + 1):
        spec_k = HypergeometricSpec(upper, lower, -1, k)
        prev = evaluate_truncated(HypergeometricSpec(upper, lower, -1, k - 1)) if k else 0
        terms.append(evaluate_truncated(spec_k) - prev)
    return terms


def whipple_terminating(a, b, c, d, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the very-well-poised 6F5(-1) -> 3F2(1) transformation with e = -n.

    The Gamma prefactor collapses to (1+a)_n / (1+a-d)_n.
    """
    a, b, c, d = (as_rational(v) for v in (a, b, c, d))
    if n < 0:
        raise ValueError("n must be nonnegative")
    e = Fraction(-n)
    den = pochhammer(1 + a - d, n)
    if den == 0:
        raise PrefactorPole(f"(1+a-d)_n vanishes for a={a}, d={d}, n={n}")
    lhs = evaluate_truncated(
        HypergeometricSpec(
            [a / 2 + 1, a, b, c, d, e],
            [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e],
            -1,
            n,
        )
    )
    prefactor = pochhammer(1 + a, n) / den
    three_f_two = evaluate_truncated(
        HypergeometricSpec([1 + a - b - c, d, e], [1 + a - b, 1 + a - c], 1, n)
    )
    return to_rational(lhs), to_rational(prefactor * three_f_two)

"""Double-precision complex Gamma and numeric checks of classical identities."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .exact import as_rational, to_rational
from .padic import is_prime


class PoleAtNonpositiveInteger(ZeroDivisionError):
    pass


class NonConvergent(ArithmeticError):
    pass


# Lanczos approximation, g = 607/128 with 15 terms (Godfrey's table).
# Relative error is about 4e-14 on |z| <= 50.
_LANCZOS_G = 607 / 128
_LANCZOS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_SQRT_2PI = math.sqrt(2 * math.pi)
_POLE_TOL = 1e-12


def _check_pole(z: complex):
    if abs(z.imag) < _POLE_TOL and z.real < _POLE_TOL:
        if abs(z.real - round(z.real)) < _POLE_TOL:
            raise PoleAtNonpositiveInteger(f"Gamma has a pole at {z}")


def _sinpi(z: complex) -> complex:
    # reduce by the nearest integer first so sin(pi z) keeps its relative accuracy
    n = round(z.real)
    s = cmath.sin(math.pi * (z - n))
    return -s if n & 1 else s


def gamma_complex(z) -> complex:
    """Gamma(z) for complex z, using the reflection formula when Re z < 1/2."""
    z = complex(z)
    _check_pole(z)
    if z.real < 0.5:
        return math.pi / (_sinpi(z) * gamma_complex(1 - z))
    z -= 1
    s = _LANCZOS[0]
    for k in range(1, len(_LANCZOS)):
        s += _LANCZOS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(t) - t) * s


def _relative(lhs: complex, rhs: complex) -> float:
    scale = abs(rhs)
    return abs(lhs - rhs) / scale if scale else abs(lhs - rhs)


def reflection_residual(z) -> float:
    """Relative residual of Gamma(z)Gamma(1-z) = pi / sin(pi z)."""
    z = complex(z)
    _check_pole(z)
    _check_pole(1 - z)
    rhs = math.pi / _sinpi(z)
    return _relative(gamma_complex(z) * gamma_complex(1 - z), rhs)


def duplication_residual(z) -> float:
    """Relative residual of Gamma(z)Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z)."""
    z = complex(z)
    for w in (z, z + 0.5, 2 * z):
        _check_pole(w)
    lhs = gamma_complex(z) * gamma_complex(z + 0.5)
    rhs = 2 ** (1 - 2 * z) * math.sqrt(math.pi) * gamma_complex(2 * z)
    return _relative(lhs, rhs)


def _is_nonpositive_integer(q: Fraction) -> bool:
    return q.denominator == 1 and q <= 0


def dixon_3f2_check(a, c, d, tolerance: float = 1e-8, max_terms: int = 2_000_000) -> float:
    """Relative residual of the 3F2(1) summation with a+b = 1 and d+e = 2c+1.

    Terminating mode (a a nonpositive integer) sums exactly. Otherwise c must
    be at least 3/2; terms decay like k^-(c+1) and the partial sums run until
    the tail estimate |t_N| N / c drops below tolerance/10 of the sum.
    """
    a, c, d = as_rational(a), as_rational(c), as_rational(d)
    b = 1 - a
    e = 2 * c + 1 - d
    terminating = _is_nonpositive_integer(a)
    if not terminating and c < Fraction(3, 2):
        raise ValueError(f"convergent mode needs c >= 3/2, got c={c}")

    rhs_args = [(a + d) / 2, (a + e) / 2, (b + d) / 2, (b + e) / 2]
    for w in (d, e, *rhs_args):
        if _is_nonpositive_integer(w):
            raise PoleAtNonpositiveInteger(f"Gamma({w}) in the closed form is a pole")

    if terminating:
        n = -a.numerator
        for w in (d, e):
            if _is_nonpositive_integer(w) and -w < n:
                raise PoleAtNonpositiveInteger(f"lower parameter {w} vanishes before term {n}")
        from .hyper import HypergeometricSpec, evaluate_truncated

        lhs = float(to_rational(evaluate_truncated(HypergeometricSpec([a, b, c], [d, e], 1, n))))
    else:
        for w in (d, e):
            if _is_nonpositive_integer(w):
                raise PoleAtNonpositiveInteger(f"lower parameter {w} is a nonpositive integer")
        fa, fb, fc, fd, fe = map(float, (a, b, c, d, e))
        term, total = 1.0, 1.0
        k = 0
        while True:
            term *= (fa + k) * (fb + k) * (fc + k) / ((fd + k) * (fe + k) * (k + 1))
            k += 1
            total += term
            # past the largest root the ratio is monotone and the terms tail off
            if k > 10 + abs(fd) + abs(fe) and abs(term) * k / float(c) < tolerance / 10 * abs(total):
                break
            if k >= max_terms:
                raise NonConvergent(f"tail bound not met after {max_terms} terms")
        lhs = total

    num = math.pi * gamma_complex(float(d)) * gamma_complex(float(e))
    den = 2 ** float(2 * c - 1)
    for w in rhs_args:
        den *= gamma_complex(float(w))
    rhs = (num / den).real
    return _relative(lhs, rhs)


def ramanujan_check(n_terms: int) -> tuple[float, float, float]:
    """Partial sum of sum_k (4k+1) ((1/2)_k/k!)^5 (-1)^k against 2/Gamma(3/4)^4."""
    if n_terms < 0:
        raise ValueError("term count must be nonnegative")
    c = 1.0
    total = 1.0
    for k in range(1, n_terms + 1):
        c *= (k - 0.5) / k
        term = (4 * k + 1) * c**5
        total += -term if k & 1 else term
    target = 2 / gamma_complex(0.75).real ** 4
    return total, target, abs(total - target)


def liuconj2_product(p: int) -> Fraction:
    """prod_{k=(3-p)/4}^{0} (k^2 + p^2/16)."""
    q = Fraction(p * p, 16)
    out = Fraction(1)
    for k in range((3 - p) // 4, 1):
        out *= k * k + q
    return out


def liuconj3_product(p: int) -> Fraction:
    """prod_{k=0}^{(p-3)/4} ((k+1/2)^2 + p^2/16)."""
    q = Fraction(p * p, 16)
    out = Fraction(1)
    for k in range((p - 3) // 4 + 1):
        out *= (k + Fraction(1, 2)) ** 2 + q
    return out


def psip_gamma_ratio(p: int) -> complex:
    """Closed Gamma-ratio expression for Psi(p) as a complex double."""
    g = gamma_complex
    w = 1j * p / 4
    num = (
        g(1 + p / 2) * g(1 - p / 2)
        * g(0.5 + w) * g(0.5 - w) * g(1 + w) * g(1 - w)
    )
    den = (
        g(1.5) * g(0.5)
        * g((3 - p) / 4 - w) * g((3 - p) / 4 + w)
        * g((3 + p) / 4 - w) * g((3 + p) / 4 + w)
    )
    return num / den


def psip_chain_check(p: int) -> float:
    """Largest relative residual among the Gamma-ratio forms of Psi(p).

    Compares the exact Psi(p) with its closed Gamma-ratio form, and the two
    finite products over k with the Gamma ratios they replace.
    """
    if p < 7 or p % 4 != 3 or not is_prime(p):
        raise ValueError(f"psip_chain_check needs a prime p ≡ 3 (mod 4), p >= 7; got {p}")
    from .hyper import psi_value

    g = gamma_complex
    w = 1j * p / 4
    psi_p = float(to_rational(psi_value(p, p)))
    residuals = [_relative(psip_gamma_ratio(p), psi_p)]

    ratio2 = g(1 + w) * g(1 - w) / (g((3 - p) / 4 + w) * g((3 - p) / 4 - w))
    residuals.append(_relative(ratio2, float(liuconj2_product(p))))

    ratio3 = g(0.5 + w) * g(0.5 - w) / (g((3 + p) / 4 + w) * g((3 + p) / 4 - w))
    residuals.append(_relative(ratio3, 1 / float(liuconj3_product(p))))
    return max(residuals)

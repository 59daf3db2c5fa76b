"""Seeded check batteries for the classical identities.

Samplers draw small rationals with denominators in {1, 2, 3, 4, 5, 7} and
redraw whenever a configuration hits a pole, so a given seed always yields
the same admissible samples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .hyper import PoleInLowerParameter, PrefactorPole, whipple_terminating
from .numgamma import (
    PoleAtNonpositiveInteger,
    dixon_3f2_check,
    duplication_residual,
    psip_chain_check,
    ramanujan_check,
    reflection_residual,
)

DENOMINATORS = (1, 2, 3, 4, 5, 7)

DEFAULT_TOL = {
    "whipple": 0.0,
    "dixon": 1e-8,
    "ramanujan": 1e-6,
    "reflection": 1e-10,
    "duplication": 1e-10,
    "psip": 1e-8,
}
DEFAULT_TRIALS = {
    "whipple": 200,
    "dixon": 50,
    "ramanujan": 1,
    "reflection": 100,
    "duplication": 100,
    "psip": 3,
}
PSIP_PRIMES = (7, 11, 19, 23, 31, 43, 47)
RAMANUJAN_TERMS = 200_000
_MAX_REDRAWS = 10_000


@dataclass
class CheckResult:
    which: str
    params: str
    residual: float
    passed: bool


def small_rational(rng: random.Random, span: int = 3) -> Fraction:
    den = rng.choice(DENOMINATORS)
    return Fraction(rng.randint(-span * den, span * den), den)


def _near_pole(z: complex, eps: float = 1e-3) -> bool:
    return abs(z.imag) < eps and z.real < eps and abs(z.real - round(z.real)) < eps


def sample_whipple(rng: random.Random):
    """An admissible (a, b, c, d, n) together with both sides of the identity."""
    for _ in range(_MAX_REDRAWS):
        a, b, c, d = (small_rational(rng) for _ in range(4))
        n = rng.randint(0, 8)
        if a == 0:
            continue
        try:
            lhs, rhs = whipple_terminating(a, b, c, d, n)
        except (PoleInLowerParameter, PrefactorPole):
            continue
        return (a, b, c, d, n), lhs, rhs
    raise RuntimeError("whipple sampler found no admissible parameters")


def sample_dixon(rng: random.Random, tolerance: float):
    """Alternate between terminating samples (a = 0, -1, ..., -6) and convergent ones.

    Convergent samples use c in {2, 5/2, 3}; at c = 3/2 the k^(-5/2) tail
    needs millions of terms to reach 1e-9.
    """
    for _ in range(_MAX_REDRAWS):
        if rng.random() < 0.5:
            a = Fraction(-rng.randint(0, 6))
            c = small_rational(rng)
        else:
            a = small_rational(rng, 2)
            c = Fraction(rng.choice((4, 5, 6)), 2)
        d = small_rational(rng, 4)
        e = 2 * c + 1 - d
        if d <= 0 or e <= 0:
            continue
        try:
            residual = dixon_3f2_check(a, c, d, tolerance)
        except PoleAtNonpositiveInteger:
            continue
        return (a, c, d), residual
    raise RuntimeError("dixon sampler found no admissible parameters")


def sample_complex(rng: random.Random, which: str) -> complex:
    for _ in range(_MAX_REDRAWS):
        z = complex(rng.uniform(-8, 8), rng.uniform(-6, 6))
        if rng.random() < 0.25:
            z = complex(z.real, 0.0)
        if which == "reflection":
            bad = (z, 1 - z)
        else:
            bad = (z, z + 0.5, 2 * z)
        if not any(_near_pole(w) for w in bad):
            return z
    raise RuntimeError("complex sampler found no admissible point")


def run_battery(which: str, trials: int | None = None, seed: int = 0, tol: float | None = None):
    """Run ``trials`` checks of one identity; returns a list of CheckResult."""
    if which not in DEFAULT_TOL:
        raise ValueError(f"unknown identity {which!r}; choose from {sorted(DEFAULT_TOL)}")
    trials = DEFAULT_TRIALS[which] if trials is None else trials
    tol = DEFAULT_TOL[which] if tol is None else tol
    rng = random.Random(seed)
    out = []
    if which == "whipple":
        for _ in range(trials):
            (a, b, c, d, n), lhs, rhs = sample_whipple(rng)
            out.append(
                CheckResult(which, f"a={a} b={b} c={c} d={d} n={n}", 0.0 if lhs == rhs else float("inf"), lhs == rhs)
            )
    elif which == "dixon":
        for _ in range(trials):
            (a, c, d), r = sample_dixon(rng, tol)
            out.append(CheckResult(which, f"a={a} c={c} d={d}", r, r <= tol))
    elif which == "ramanujan":
        for _ in range(trials):
            s, target, r = ramanujan_check(RAMANUJAN_TERMS)
            out.append(CheckResult(which, f"N={RAMANUJAN_TERMS}", r, r <= tol))
    elif which in ("reflection", "duplication"):
        fn = reflection_residual if which == "reflection" else duplication_residual
        for _ in range(trials):
            z = sample_complex(rng, which)
            r = fn(z)
            out.append(CheckResult(which, f"z={z.real!r}{z.imag:+.17g}j", r, r <= tol))
    elif which == "psip":
        for p in PSIP_PRIMES[:trials]:
            r = psip_chain_check(p)
            out.append(CheckResult(which, f"p={p}", r, r <= tol))
    return out

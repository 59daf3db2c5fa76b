"""Congruence suites for the truncated van Hamme 6F5 sum and the proof steps behind them."""

from __future__ import annotations

import json
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import PlusInfinity, to_rational, valuation_rational
from .hyper import (
    WrongResidueClass,
    phi_series,
    pochhammer,
    psi_series,
    psi_value,
    vanhamme_lhs,
    vanhamme_lhs_mod,
)
from .numgamma import liuconj2_product, liuconj3_product, psip_chain_check
from .padic import PAdicContext, PAdicInt, gamma_p_rational, is_prime, reduce_rational

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class EmptyRangeWarning(UserWarning):
    pass


class KeyStepError(RuntimeError):
    def __init__(self, step: str, cause: Exception):
        super().__init__(f"{step}: {type(cause).__name__}: {cause}")
        self.step = step


@dataclass
class CongruenceReport:
    prime: int
    suite: str
    required_power: int
    lhs_residue: PAdicInt
    rhs_residue: PAdicInt
    difference_valuation: int
    at_cap: bool
    passed: bool
    lhs_valuation: int
    elapsed: float | None = field(default=None, compare=False)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "prime": self.prime,
            "suite": self.suite,
            "required_power": self.required_power,
            "lhs_residue": str(self.lhs_residue.residue),
            "rhs_residue": str(self.rhs_residue.residue),
            "difference_valuation": self.difference_valuation,
            "at_cap": self.at_cap,
            "pass": self.passed,
            "lhs_valuation": self.lhs_valuation,
        }
        if include_timing and self.elapsed is not None:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "CongruenceReport":
        ctx = PAdicContext(d["prime"], d["required_power"])
        elapsed = d.get("elapsed_ms")
        return cls(
            prime=d["prime"],
            suite=d["suite"],
            required_power=d["required_power"],
            lhs_residue=PAdicInt(ctx, int(d["lhs_residue"])),
            rhs_residue=PAdicInt(ctx, int(d["rhs_residue"])),
            difference_valuation=d["difference_valuation"],
            at_cap=d["at_cap"],
            passed=d["pass"],
            lhs_valuation=d["lhs_valuation"],
            elapsed=None if elapsed is None else elapsed / 1000,
        )


def reports_to_json(reports, include_timing: bool = False) -> str:
    return json.dumps([r.to_dict(include_timing) for r in reports], indent=2) + "\n"


def reports_from_json(text: str) -> list[CongruenceReport]:
    return [CongruenceReport.from_dict(d) for d in json.loads(text)]


def _report(p, suite, ctx, lhs, rhs, t0) -> CongruenceReport:
    diff = lhs - rhs
    dv = diff.valuation()
    return CongruenceReport(
        prime=p,
        suite=suite,
        required_power=ctx.k,
        lhs_residue=lhs,
        rhs_residue=rhs,
        difference_valuation=dv,
        at_cap=diff.at_cap,
        passed=dv >= ctx.k,
        lhs_valuation=lhs.valuation(),
        elapsed=time.perf_counter() - t0,
    )


def _require_prime(p: int, minimum: int = 5):
    if p < minimum or not is_prime(p):
        raise ValueError(f"expected a prime >= {minimum}, got {p}")


def _gamma_quarter_pow4(p: int, digits: int) -> int:
    """Gamma_p(1/4)^4 as an integer mod p^digits."""
    g = gamma_p_rational(QUARTER, PAdicContext(p, digits))
    return pow(g.residue, 4, p**digits)


def verify_vanhamme(p: int) -> CongruenceReport:
    """S_p ≡ -p Gamma_p(1/4)^4 (p ≡ 1 mod 4) or 0 (p ≡ 3 mod 4), mod p^3."""
    _require_prime(p)
    t0 = time.perf_counter()
    ctx = PAdicContext(p, 3)
    lhs = vanhamme_lhs_mod(p, ctx)
    if p % 4 == 1:
        # the explicit factor p means Gamma_p(1/4) is needed only mod p^2
        rhs = ctx(-p * _gamma_quarter_pow4(p, 2))
    else:
        rhs = ctx(0)
    return _report(p, "vanhamme", ctx, lhs, rhs, t0)


def verify_swisher(p: int) -> CongruenceReport:
    """S_p ≡ -p Gamma_p(1/4)^4 mod p^5 for p ≡ 1 (mod 4); costs O(p^4)."""
    _require_prime(p)
    if p % 4 != 1:
        raise WrongResidueClass(f"swisher suite needs p ≡ 1 (mod 4), got p={p}")
    t0 = time.perf_counter()
    ctx = PAdicContext(p, 5)
    lhs = vanhamme_lhs_mod(p, ctx)
    rhs = ctx(-p * _gamma_quarter_pow4(p, 4))
    return _report(p, "swisher", ctx, lhs, rhs, t0)


def _liu_rhs(p: int, ctx: PAdicContext) -> PAdicInt:
    # -(p^3/16) Gamma_p(1/4)^4 needs Gamma_p(1/4) only mod p^(k-3)
    g4 = _gamma_quarter_pow4(p, ctx.k - 3)
    m = ctx.modulus
    return ctx(-(p**3) * pow(16, -1, m) * g4)


def _require_three_mod_four(p: int, suite: str):
    _require_prime(p, 7)
    if p % 4 != 3:
        raise WrongResidueClass(f"{suite} suite needs p ≡ 3 (mod 4), got p={p}")


def verify_liu_mod_p4(p: int) -> CongruenceReport:
    """S_p ≡ -(p^3/16) Gamma_p(1/4)^4 mod p^4 for p ≡ 3 (mod 4)."""
    _require_three_mod_four(p, "liu4")
    t0 = time.perf_counter()
    ctx = PAdicContext(p, 4)
    return _report(p, "liu4", ctx, vanhamme_lhs_mod(p, ctx), _liu_rhs(p, ctx), t0)


def verify_theorem1(p: int) -> CongruenceReport:
    """S_p ≡ -(p^3/16) Gamma_p(1/4)^4 mod p^5 for p ≡ 3 (mod 4).

    ``lhs_valuation`` on the report is exactly 3 whenever this passes,
    because Gamma_p(1/4) is a unit.
    """
    _require_three_mod_four(p, "theorem1")
    t0 = time.perf_counter()
    ctx = PAdicContext(p, 5)
    return _report(p, "theorem1", ctx, vanhamme_lhs_mod(p, ctx), _liu_rhs(p, ctx), t0)


def verify_exact_path(p: int, suite: str) -> CongruenceReport:
    """Same as the named suite, but the lhs comes from the exact rational sum."""
    rep = SUITES[suite](p)
    ctx = rep.lhs_residue.ctx
    lhs = reduce_rational(vanhamme_lhs(p), ctx)
    return _report(p, suite, ctx, lhs, rep.rhs_residue, time.perf_counter())


SUITES: dict[str, Callable[[int], CongruenceReport]] = {
    "vanhamme": verify_vanhamme,
    "swisher": verify_swisher,
    "liu4": verify_liu_mod_p4,
    "theorem1": verify_theorem1,
}

ADMISSIBLE: dict[str, Callable[[int], bool]] = {
    "vanhamme": lambda p: p >= 5,
    "swisher": lambda p: p % 4 == 1,
    "liu4": lambda p: p % 4 == 3 and p >= 7,
    "theorem1": lambda p: p % 4 == 3 and p >= 7,
    "steps": lambda p: p % 4 == 3 and p >= 7,
}

# default inclusive prime ranges; swisher is O(p^4) per prime
DEFAULT_RANGES = {
    "vanhamme": (5, 499),
    "swisher": (5, 113),
    "liu4": (7, 499),
    "theorem1": (7, 499),
    "steps": (7, 23),
}


@dataclass(frozen=True)
class SuiteRequest:
    suite: str
    lo: int
    hi: int
    parallelism: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.suite not in ADMISSIBLE:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {sorted(ADMISSIBLE)}")
        if self.lo < 5 or self.hi < 5:
            raise ValueError(f"prime range bounds must be >= 5, got {self.lo}..{self.hi}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


def primes_in_range(lo: int, hi: int) -> list[int]:
    return [n for n in range(lo, hi + 1) if is_prime(n)]


def admissible_primes(req: SuiteRequest) -> tuple[list[int], int]:
    """Admissible primes in the request range, plus how many primes were skipped."""
    primes = primes_in_range(req.lo, req.hi)
    ok = [p for p in primes if ADMISSIBLE[req.suite](p)]
    return ok, len(primes) - len(ok)


def _map_primes(fn, primes, parallelism):
    if parallelism == 1 or len(primes) < 2:
        return [fn(p) for p in primes]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, primes))


def run_suite(req: SuiteRequest) -> list[CongruenceReport]:
    """Run one congruence suite over every admissible prime, sorted by prime."""
    if req.suite == "steps":
        raise ValueError("use run_key_steps for the proof-step suite")
    primes, _ = admissible_primes(req)
    if not primes:
        warnings.warn(
            EmptyRangeWarning(f"no admissible primes for {req.suite} in {req.lo}..{req.hi}")
        )
        return []
    reports = _map_primes(SUITES[req.suite], primes, req.parallelism)
    return sorted(reports, key=lambda r: r.prime)


# ---------------------------------------------------------------------------
# proof steps


@dataclass
class StepReport:
    prime: int
    step: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"prime": self.prime, "step": self.step, "pass": self.passed, "detail": self.detail}


def _vstr(v) -> str:
    return "inf" if v == PlusInfinity else str(v)


def _step_phi_vanishes(p, order):
    phi = phi_series(p, order)
    nonzero = [n for n, c in enumerate(phi.coefficients) if not c.is_zero()]
    return not nonzero, f"nonzero Phi coefficients at x^{nonzero}" if nonzero else f"x^0..x^{order} all zero"


def _step_x4_structure(p, psi):
    bad = [n for n, c in enumerate(psi.coefficients) if n % 4 and not c.is_zero()]
    return not bad, f"nonzero off-lattice coefficients at x^{bad}" if bad else "only x^(4n) terms"


def _step_a1(p, psi):
    v = valuation_rational(to_rational(psi[4]), p)
    return v >= 1, f"v_p(a_1) = {_vstr(v)}"


def _step_psi_p(p):
    v = valuation_rational(to_rational(psi_value(p, p)) - vanhamme_lhs(p), p)
    return v >= 5, f"v_p(Psi(p) - Psi(0)) = {_vstr(v)}"


def _step_gamma_half_shift(p):
    ctx = PAdicContext(p, 2)
    lhs = gamma_p_rational(1 + Fraction(p, 2), ctx) * gamma_p_rational(1 - Fraction(p, 2), ctx)
    rhs = gamma_p_rational(1, ctx) ** 2
    return lhs == rhs, f"{lhs.residue} vs {rhs.residue} mod p^2"


def _step_gamma_quarter_shift(p):
    ctx = PAdicContext(p, 2)
    lhs = gamma_p_rational(Fraction(p + 1, 4), ctx) * gamma_p_rational(Fraction(1 - p, 4), ctx)
    rhs = gamma_p_rational(QUARTER, ctx) ** 2
    return lhs == rhs, f"{lhs.residue} vs {rhs.residue} mod p^2"


def classical_half_ratio(p: int) -> Fraction:
    """Gamma(1+p/2)Gamma(1-p/2) / (Gamma(3/2)Gamma(1/2)) as an exact rational."""
    n = (p - 1) // 2
    return pochhammer(Fraction(3, 2), n) / pochhammer(1 - Fraction(p, 2), n)


def _gamma_p_half_ratio(p: int, digits: int) -> PAdicInt:
    ctx = PAdicContext(p, digits)
    g = lambda x: gamma_p_rational(x, ctx)
    return g(1 + Fraction(p, 2)) * g(1 - Fraction(p, 2)) / (g(Fraction(3, 2)) * g(HALF))


def _lift_times_p_power(x: PAdicInt, v: int, ctx: PAdicContext) -> PAdicInt:
    """p^v * x in ctx, where x is known mod p^(ctx.k - v)."""
    return ctx(ctx.p**v * x.residue)


def _step_liuconj1(p):
    ctx = PAdicContext(p, 5)
    lhs = reduce_rational(classical_half_ratio(p), ctx)
    rhs = _lift_times_p_power(_gamma_p_half_ratio(p, 4), 1, ctx) * HALF
    return lhs == rhs, f"{lhs.residue} vs {rhs.residue} mod p^5"


def _square_products(p):
    num = Fraction(1)
    for k in range((3 - p) // 4, 0):
        num *= k * k
    den = Fraction(1)
    for k in range((p - 3) // 4 + 1):
        den *= (k + HALF) ** 2
    return num / den


def _step_product_to_gamma_p(p):
    ctx = PAdicContext(p, 5)
    g = lambda x: gamma_p_rational(x, ctx)
    lhs = reduce_rational(_square_products(p), ctx)
    rhs = (g(Fraction(p + 1, 4)) * g(HALF) / g(Fraction(p + 3, 4))) ** 2
    return lhs == rhs, f"{lhs.residue} vs {rhs.residue} mod p^5"


def _shifted_liuconj2(p: int) -> Fraction:
    """prod_{k=(3-p)/4}^{-1} (k^2 + p^2/16): the k = 0 factor p^2/16 removed."""
    return liuconj2_product(p) / Fraction(p * p, 16)


def _step_psip_exact(p):
    lhs = to_rational(psi_value(p, p))
    rhs = classical_half_ratio(p) * liuconj2_product(p) / liuconj3_product(p)
    return lhs == rhs, "Psi(p) equals the product form exactly" if lhs == rhs else f"{lhs} != {rhs}"


def _step_final_chain(p):
    """Each congruence of the closing chain, all mod p^5."""
    ctx = PAdicContext(p, 5)
    g = lambda x: gamma_p_rational(x, ctx)
    p3_32 = Fraction(p**3, 32)
    links = []

    psi_p = reduce_rational(to_rational(psi_value(p, p)), ctx)
    # Psi(p) = (p^3/32) * Gamma_p ratio * shifted products; the k=0 factor of
    # the first product supplies p^2/16 of the p^3/32
    ratio = _lift_times_p_power(_gamma_p_half_ratio(p, 2), 3, ctx) * Fraction(1, 32)
    stage1 = ratio * reduce_rational(_shifted_liuconj2(p) / liuconj3_product(p), ctx)
    links.append(("assembly", psi_p, stage1))

    stage2 = ctx(-(p**3)) * reduce_rational(_square_products(p) / 16, ctx)
    links.append(("drop p^2/16 terms", stage1, stage2))

    stage3 = ctx(-(p**3)) / 16 * (g(Fraction(p + 1, 4)) * g(HALF) / g(Fraction(p + 3, 4))) ** 2
    links.append(("products to Gamma_p", stage2, stage3))

    stage4 = ctx(-(p**3)) / 16 * (g(Fraction(p + 1, 4)) * g(Fraction(1 - p, 4))) ** 2
    links.append(("reflection", stage3, stage4))

    stage5 = ctx(-(p**3)) / 16 * g(QUARTER) ** 4
    links.append(("Gamma_p(1/4)^4", stage4, stage5))

    failed = [name for name, a, b in links if a != b]
    return not failed, f"failed links: {failed}" if failed else "all 5 links hold mod p^5"


def _step_psip_numeric(p, tol=1e-8):
    r = psip_chain_check(p)
    return r <= tol, f"max relative residual {r:.3e}"


def verify_key_steps(p: int, order: int = 8) -> list[StepReport]:
    """Check every step of the Psi/Phi argument for one prime p ≡ 3 (mod 4)."""
    _require_three_mod_four(p, "steps")
    psi_cache = {}

    def psi():
        if "psi" not in psi_cache:
            psi_cache["psi"] = psi_series(p, order)
        return psi_cache["psi"]

    steps = [
        ("phi_vanishes", lambda: _step_phi_vanishes(p, order)),
        ("psi_x4_structure", lambda: _step_x4_structure(p, psi())),
        ("a1_divisible_by_p", lambda: _step_a1(p, psi())),
        ("psi_p_equiv_psi_0", lambda: _step_psi_p(p)),
        ("gamma_p_half_shift", lambda: _step_gamma_half_shift(p)),
        ("gamma_p_quarter_shift", lambda: _step_gamma_quarter_shift(p)),
        ("liuconj1_mod_p5", lambda: _step_liuconj1(p)),
        ("products_to_gamma_p", lambda: _step_product_to_gamma_p(p)),
        ("psip_exact_products", lambda: _step_psip_exact(p)),
        ("final_chain", lambda: _step_final_chain(p)),
        ("psip_numeric", lambda: _step_psip_numeric(p)),
    ]
    out = []
    for name, fn in steps:
        try:
            ok, detail = fn()
        except Exception as exc:
            raise KeyStepError(name, exc) from exc
        out.append(StepReport(p, name, bool(ok), detail))
    return out


def run_key_steps(req: SuiteRequest) -> list[StepReport]:
    primes, _ = admissible_primes(req)
    if not primes:
        warnings.warn(EmptyRangeWarning(f"no admissible primes for steps in {req.lo}..{req.hi}"))
        return []
    nested = _map_primes(verify_key_steps, primes, req.parallelism)
    return [s for group in sorted(nested, key=lambda g: g[0].prime) for s in group]

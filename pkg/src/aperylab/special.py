"""Bernoulli and Euler numbers, classical quotients, and the p-adic Gamma function.

Bernoulli numbers are kept exact (one trusted path, the defining recurrence);
Euler numbers are only ever needed mod p and are computed by running the
integer recurrence in Z/pZ.  Gamma_p is evaluated straight from the product
definition, which is the independent oracle behind the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .modring import NotPIntegral, Residue, quadratic_rep, residue

GAMMA_STEP_LIMIT = 2_000_000

_BERN: list[Fraction] = [Fraction(1)]


def bernoulli_table(n_max: int) -> list[Fraction]:
    """B_0..B_n by B_0 = 1 and sum_{k<n} binom(n,k) B_k = 0 for n >= 2."""
    if n_max < 0:
        raise ValueError("need n_max >= 0")
    while len(_BERN) <= n_max:
        idx = len(_BERN)
        n = idx + 1
        s = Fraction(_BERN[0])
        if idx >= 2:
            s += n * _BERN[1]
        # odd-index terms beyond B_1 vanish and are skipped
        s += sum(comb(n, k) * _BERN[k] for k in range(2, idx, 2))
        _BERN.append(-s / n)
    return _BERN[: n_max + 1]


def bernoulli(n: int) -> Fraction:
    return bernoulli_table(n)[n]


_EULER_MOD: dict[int, list[int]] = {}


def euler_mod(n: int, p: int) -> Residue:
    """E_n mod p via E_{2m} = -sum_{k=1}^m binom(2m,2k) E_{2m-2k}, odd-index zero."""
    if n < 0:
        raise ValueError("need n >= 0")
    if n % 2:
        return residue(0, p, 1)
    table = _EULER_MOD.setdefault(p, [1])
    while 2 * (len(table) - 1) < n:
        m = len(table)
        s = sum(comb(2 * m, 2 * k) * table[m - k] for k in range(1, m + 1))
        table.append(-s % p)
    return residue(table[n // 2], p, 1)


def fermat_quotient(a: int, p: int) -> Residue:
    """q_p(a) = (a^(p-1) - 1)/p as a residue mod p."""
    if a % p == 0:
        raise ValueError(f"{p} divides {a}")
    t = pow(a, p - 1, p * p)
    return residue((t - 1) // p, p, 1)


def wilson_side(p: int) -> Residue:
    """(p-1)! mod p^2, the factorial side of (p-1)! = p B_{p-1} - p (mod p^2)."""
    m = p * p
    v = 1
    for i in range(2, p):
        v = v * i % m
    return residue(v, p, 2)


@dataclass(frozen=True)
class PadicGammaValue:
    argument: Fraction
    p: int
    e: int
    value: Residue


def padic_gamma(
    x: Fraction, p: int, e: int, step_limit: int = GAMMA_STEP_LIMIT
) -> PadicGammaValue:
    """Gamma_p(x) mod p^e from the definition product.

    Gamma_p(n) = (-1)^n prod_{k<n, p!|k} k, and continuity gives
    Gamma_p(x) = Gamma_p(n) mod p^e for n = x mod p^e, so the product over the
    least nonnegative residue of x is exact at this precision.  Costs O(p^e)
    multiplications, hence the step limit.
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPIntegral(f"{x} is not {p}-integral", -1)
    m = p ** e
    if m > step_limit:
        raise ValueError(
            f"gamma cost cap: {p}^{e} exceeds {step_limit} product steps; "
            "use smaller precision"
        )
    n = x.numerator * pow(x.denominator, -1, m) % m
    v = 1
    for k in range(1, n):
        if k % p:
            v = v * k % m
    if n % 2:
        v = -v % m
    return PadicGammaValue(x, p, e, residue(v, p, e))


def gamma_quarter_closed_form(p: int, e: int = 3) -> Residue:
    """Gamma_p(1/4)^4 mod p^3 by the Euler-number closed form.

    4 | p-1:  -(1/2^(p-1)) binom((p-1)/2,(p-1)/4)^2 (1 - (p^2/2) E_{p-3})
    4 | p-3:  2^(p-3) (16 + 32p + (48 - 8 E_{p-3}) p^2) binom((p-3)/2,(p-3)/4)^(-2)
    """
    if p <= 3:
        raise ValueError("need p > 3")
    if e != 3:
        raise ValueError("closed form is stated mod p^3")
    m = p ** 3
    ep3 = euler_mod(p - 3, p).value
    if p % 4 == 1:
        b = comb((p - 1) // 2, (p - 1) // 4)
        val = (
            -pow(2, -(p - 1), m)
            * b * b
            * (1 - p * p * pow(2, -1, m) * ep3)
        )
    else:
        b = comb((p - 3) // 2, (p - 3) // 4)
        val = (
            pow(2, p - 3, m)
            * (16 + 32 * p + (48 - 8 * ep3) * p * p)
            * pow(b, -2, m)
        )
    return residue(val, p, 3)


def cornacchia_4y2(p: int) -> tuple[int, int]:
    """p = x^2 + 4y^2 with x odd positive, for p = 1 (mod 4)."""
    return quadratic_rep(p)

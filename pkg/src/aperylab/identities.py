"""Exact combinatorial identities, verified term by term over index ranges.

Each verifier returns an IdentityOutcome: on success it carries a small spot
value (index, lhs, rhs) for reporting; on failure it carries the first
counterexample.  The two long recurrences are the certificates that annihilate
both sides of the hardest identities, checked numerically over the range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .exactcore import series_arctanh, series_inv_sqrt_one_minus_x2, series_mul
from .sequences import harmonic_values, t_closed_form, t_exact

Value = Union[int, Fraction]


@dataclass(frozen=True)
class IdentityOutcome:
    ok: bool
    n: int
    lhs: Value
    rhs: Value
    modulus: int | None = None


def _fail(n: int, lhs: Value, rhs: Value, modulus: int | None = None) -> IdentityOutcome:
    return IdentityOutcome(False, n, lhs, rhs, modulus)


def _central_weight(k: int) -> Fraction:
    return Fraction(comb(2 * k, k), 4 ** k)


def lemma21_identity(max_n: int) -> IdentityOutcome:
    """sum_k binom(n,k)(-1)^k (binom(2k,k)/4^k) D_k = (binom(2n,n)/4^n) D_n.

    This also says the weighted sequence is its own alternating binomial
    transform (self-inverse).
    """
    ds = [harmonic_values(k)[3] for k in range(max_n + 1)]
    ws = [_central_weight(k) for k in range(max_n + 1)]
    spot = None
    for n in range(max_n + 1):
        lhs = sum(comb(n, k) * (-1) ** k * ws[k] * ds[k] for k in range(n + 1))
        rhs = ws[n] * ds[n]
        if lhs != rhs:
            return _fail(n, lhs, rhs)
        if n == min(2, max_n):
            spot = (n, lhs, rhs)
    return IdentityOutcome(True, *spot)


def _s_lemma21(n: int) -> Fraction:
    return _central_weight(n) * harmonic_values(n)[3]


def _s_lemma21_sum(n: int) -> Fraction:
    return sum(
        comb(n, k) * (-1) ** k * _central_weight(k) * harmonic_values(k)[3]
        for k in range(n + 1)
    )


def order4_certificate(max_n: int) -> IdentityOutcome:
    """The 4-term recurrence annihilating both sides of the lemma21 identity:

    8(n+1)(n+2)(n+3) S(n+3) - 12(n+1)(n+2)(2n+3) S(n+2)
      + 2(n+1)(12n^2+24n+13) S(n+1) - (2n+1)^3 S(n) = 0.
    """
    for s_fn in (_s_lemma21, _s_lemma21_sum):
        vals = [s_fn(n) for n in range(max_n + 4)]
        for n in range(max_n + 1):
            res = (
                8 * (n + 1) * (n + 2) * (n + 3) * vals[n + 3]
                - 12 * (n + 1) * (n + 2) * (2 * n + 3) * vals[n + 2]
                + 2 * (n + 1) * (12 * n * n + 24 * n + 13) * vals[n + 1]
                - (2 * n + 1) ** 3 * vals[n]
            )
            if res != 0:
                return _fail(n, res, Fraction(0))
    return IdentityOutcome(True, max_n, Fraction(0), Fraction(0))


def eq21_identity(max_n: int) -> IdentityOutcome:
    """sum_k binom(n,k) binom(n+k,k) (binom(2k,k)/(-4)^k) D_k = 0 for odd n."""
    spot = None
    for n in range(1, max_n + 1, 2):
        lhs = sum(
            comb(n, k)
            * comb(n + k, k)
            * Fraction(comb(2 * k, k), (-4) ** k)
            * harmonic_values(k)[3]
            for k in range(n + 1)
        )
        if lhs != 0:
            return _fail(n, lhs, Fraction(0))
        if spot is None:
            spot = (n, lhs, Fraction(0))
    return IdentityOutcome(True, *spot)


def eq22_congruence(p: int) -> IdentityOutcome:
    """binom((p-1)/2 + k, 2k) = binom(2k,k)/(-16)^k (mod p^2), k = 1..(p-1)/2."""
    m = p * p
    half = (p - 1) // 2
    inv_m16 = pow(-16, -1, m)
    w = 1
    spot = None
    for k in range(1, half + 1):
        w = w * inv_m16 % m
        lhs = comb(half + k, 2 * k) % m
        rhs = comb(2 * k, k) * w % m
        if lhs != rhs:
            return _fail(k, lhs, rhs, m)
        if spot is None:
            spot = (k, lhs, rhs)
    if spot is None:
        spot = (0, 1, 1)
    return IdentityOutcome(True, *spot, modulus=m)


def generalized_binomial(x: Fraction, n: int) -> Fraction:
    """binom(x, n) = x(x-1)...(x-n+1)/n! for rational x."""
    num = Fraction(1)
    for i in range(n):
        num *= x - i
    return num / factorial(n)


def eq31_identity(max_n: int, trials: int = 20, seed: int = 20240811) -> IdentityOutcome:
    """sum_k binom(n,k)(-1)^k/(x-k) = (-1)^n / ((x-n) binom(x,n)) at random
    rational x outside {0, ..., n}."""
    rng = random.Random(seed)
    spot = None
    for n in range(max_n + 1):
        for _ in range(trials):
            while True:
                x = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
                if not (x.denominator == 1 and 0 <= x <= n):
                    break
            lhs = sum(comb(n, k) * (-1) ** k / (x - k) for k in range(n + 1))
            rhs = (-1) ** n / ((x - n) * generalized_binomial(x, n))
            if lhs != rhs:
                return _fail(n, lhs, rhs)
            if spot is None:
                spot = (n, lhs, rhs)
    return IdentityOutcome(True, *spot)


def thm31_dual(max_n: int) -> IdentityOutcome:
    """t_n by recurrence equals the (2n+1)! central-binomial sum, exactly."""
    spot = None
    for n in range(max_n + 1):
        lhs = t_exact(n)
        rhs = t_closed_form(n)
        if rhs.denominator != 1 or lhs != rhs:
            return _fail(n, lhs, rhs)
        if n == min(6, max_n):
            spot = (n, lhs, int(rhs))
    return IdentityOutcome(True, *spot)


def thm32_harmonic_sum(n: int) -> Fraction:
    """sum_{k=0}^{2n+1} binom(2n+1+k,2k) binom(2k,k)^2 (-4)^(-k) O2_k,
    the series whose negative (2n+1)!^2 multiple is t_n^2."""
    return sum(
        comb(2 * n + 1 + k, 2 * k)
        * comb(2 * k, k) ** 2
        * Fraction(1, (-4) ** k)
        * harmonic_values(k)[2]
        for k in range(2 * n + 2)
    )


def _s_thm32_square(n: int) -> Fraction:
    return sum(
        comb(2 * n + 1 + k, 2 * k)
        * comb(2 * k, k) ** 2
        * Fraction(1, (-4) ** k)
        * harmonic_values(k)[1] ** 2
        for k in range(2 * n + 2)
    )


def _s_thm32_neg_square(n: int) -> Fraction:
    return -Fraction(t_exact(n), factorial(2 * n + 1)) ** 2


def thm32_identity(max_n: int) -> IdentityOutcome:
    """t_n^2 = -(2n+1)!^2 sum_k binom(2n+1+k,2k) binom(2k,k)^2 (-4)^(-k) w_k,
    for both weights w_k = sum 1/(2i-1)^2 and w_k = (sum 1/(2i-1))^2."""
    spot = None
    for n in range(max_n + 1):
        lhs = t_exact(n) ** 2
        f2 = factorial(2 * n + 1) ** 2
        for s_fn in (thm32_harmonic_sum, _s_thm32_square):
            rhs = -f2 * s_fn(n)
            if lhs != rhs:
                return _fail(n, lhs, rhs)
        if n == min(2, max_n):
            spot = (n, thm32_harmonic_sum(n), _s_thm32_neg_square(n))
    return IdentityOutcome(True, *spot)


def order5_certificate(max_n: int) -> IdentityOutcome:
    """The 5-term recurrence annihilating both sides of the thm32 identity."""
    for s_fn in (thm32_harmonic_sum, _s_thm32_neg_square):
        vals = [s_fn(n) for n in range(max_n + 5)]
        for n in range(max_n + 1):
            res = (
                4 * (n + 4) ** 2 * (2 * n + 7) ** 2 * (2 * n + 9) ** 2
                * (4 * n + 9) * (75 + 72 * n + 16 * n * n) * vals[n + 4]
                - (2 * n + 7) ** 2
                * (6913575 + 17355348 * n + 18370228 * n ** 2 + 10658464 * n ** 3
                   + 3670400 * n ** 4 + 751872 * n ** 5 + 84992 * n ** 6
                   + 4096 * n ** 7) * vals[n + 3]
                + (4 * n + 11)
                * (18889425 + 56173260 * n + 72583012 * n ** 2 + 53324832 * n ** 3
                   + 24399376 * n ** 4 + 7128000 * n ** 5 + 1299328 * n ** 6
                   + 135168 * n ** 7 + 6144 * n ** 8) * vals[n + 2]
                - 8 * (n + 2) ** 2
                * (1254375 + 3543600 * n + 4277038 * n ** 2 + 2861712 * n ** 3
                   + 1146240 * n ** 4 + 274560 * n ** 5 + 36352 * n ** 6
                   + 2048 * n ** 7) * vals[n + 1]
                + 16 * (n + 1) ** 2 * (n + 2) ** 2 * (2 * n + 3) ** 2
                * (4 * n + 13) * (163 + 104 * n + 16 * n * n) * vals[n]
            )
            if res != 0:
                return _fail(n, res, Fraction(0))
    return IdentityOutcome(True, max_n, Fraction(0), Fraction(0))


def gf_oracle(max_n: int) -> IdentityOutcome:
    """(2n+1)! [x^(2n+1)] arctanh(x)/sqrt(1-x^2) equals t_n from the recurrence."""
    order = 2 * max_n + 2
    prod = series_mul(series_arctanh(order), series_inv_sqrt_one_minus_x2(order))
    spot = None
    for n in range(max_n + 1):
        lhs = factorial(2 * n + 1) * prod.coefficient(2 * n + 1)
        rhs = t_exact(n)
        if lhs != rhs:
            return _fail(n, lhs, rhs)
        if n == min(1, max_n):
            spot = (n, int(lhs), rhs)
    return IdentityOutcome(True, *spot)

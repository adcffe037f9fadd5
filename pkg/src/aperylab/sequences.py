"""Integer and harmonic sequences, each with two independent computation routes.

Exact evaluators return big integers or fractions; seq_mod evaluates residues
without ever constructing the exact value (factored binomials for the Apery
sums, the division-free recurrence for t, incremental inverses for the
harmonic family).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .modring import (
    FactorialTable,
    NotPIntegral,
    Residue,
    residue,
    to_residue,
)


class SeqId(str, Enum):
    A = "A"
    APRIME = "Aprime"
    T = "t"
    H = "H"
    OODD = "O"
    OODD2 = "O2"
    D = "D"
    CBIG = "C"
    CPRIME = "Cprime"


# ---------------------------------------------------------------------------
# exact evaluators

@lru_cache(maxsize=None)
def apery_a_exact(n: int) -> int:
    """A_n = sum_k binom(n,k)^2 binom(n+k,k)^2."""
    if n < 0:
        raise ValueError("need n >= 0")
    return sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1))


@lru_cache(maxsize=None)
def apery_aprime_exact(n: int) -> int:
    """A'_n = sum_k binom(n,k)^2 binom(n+k,k)."""
    if n < 0:
        raise ValueError("need n >= 0")
    return sum(comb(n, k) ** 2 * comb(n + k, k) for k in range(n + 1))


_A_REC = [1, 5]
_APRIME_REC = [1, 3]
_T = [1, 5]


def apery_a_recurrence(n: int) -> int:
    """A_n by (n+1)^3 A_{n+1} = (2n+1)(17n(n+1)+5) A_n - n^3 A_{n-1}."""
    while len(_A_REC) <= n:
        i = len(_A_REC) - 1
        num = (2 * i + 1) * (17 * i * (i + 1) + 5) * _A_REC[i] - i ** 3 * _A_REC[i - 1]
        q, rem = divmod(num, (i + 1) ** 3)
        assert rem == 0
        _A_REC.append(q)
    return _A_REC[n]


def apery_aprime_recurrence(n: int) -> int:
    """A'_n by (n+1)^2 A'_{n+1} = (11n(n+1)+3) A'_n + n^2 A'_{n-1}."""
    while len(_APRIME_REC) <= n:
        i = len(_APRIME_REC) - 1
        num = (11 * i * (i + 1) + 3) * _APRIME_REC[i] + i ** 2 * _APRIME_REC[i - 1]
        q, rem = divmod(num, (i + 1) ** 2)
        assert rem == 0
        _APRIME_REC.append(q)
    return _APRIME_REC[n]


def t_exact(n: int) -> int:
    """t_n by t_{n+1} = (8n^2+12n+5) t_n - 4n^2 (2n+1)^2 t_{n-1}, t_0=1, t_1=5."""
    if n < 0:
        raise ValueError("need n >= 0")
    while len(_T) <= n:
        i = len(_T) - 1
        _T.append((8 * i * i + 12 * i + 5) * _T[i] - 4 * i * i * (2 * i + 1) ** 2 * _T[i - 1])
    return _T[n]


def t_closed_form(n: int) -> Fraction:
    """(2n+1)! sum_{k=0}^n binom(2k,k) / (4^k (2(n-k)+1)); equals t_n."""
    if n < 0:
        raise ValueError("need n >= 0")
    s = sum(Fraction(comb(2 * k, k), 4 ** k * (2 * (n - k) + 1)) for k in range(n + 1))
    return factorial(2 * n + 1) * s


@lru_cache(maxsize=None)
def c_coeffs(m: int) -> tuple[int, int]:
    """The integer pair (C_m, C'_m) weighting the p^(3r) B_{p-3} corrections.

    C_m  = sum_k binom(m,k)^2 binom(m+k,k)^2 ((m-k)^2 - 2km^2)
    C'_m = sum_k binom(m,k)^2 binom(m+k,k) (2(m-k)^2 - 3m^2(m-k) - 2k^2 m)
    """
    if m < 1:
        raise ValueError("need m >= 1")
    big = sum(
        comb(m, k) ** 2 * comb(m + k, k) ** 2 * ((m - k) ** 2 - 2 * k * m * m)
        for k in range(m + 1)
    )
    prime = sum(
        comb(m, k) ** 2
        * comb(m + k, k)
        * (2 * (m - k) ** 2 - 3 * m * m * (m - k) - 2 * k * k * m)
        for k in range(m + 1)
    )
    return big, prime


_H = [Fraction(0)]
_O = [Fraction(0)]
_O2 = [Fraction(0)]


def harmonic_values(n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(H_n, O_n, O2_n, D_n) with O_n = sum 1/(2i-1), O2_n = sum 1/(2i-1)^2,
    D_n = O_n^2 - O2_n."""
    if n < 0:
        raise ValueError("need n >= 0")
    while len(_H) <= n:
        i = len(_H)
        _H.append(_H[-1] + Fraction(1, i))
        _O.append(_O[-1] + Fraction(1, 2 * i - 1))
        _O2.append(_O2[-1] + Fraction(1, (2 * i - 1) ** 2))
    return _H[n], _O[n], _O2[n], _O[n] ** 2 - _O2[n]


def seq_exact(sid: SeqId, n: int):
    """Exact value of the sequence: int for A, A', t, C; Fraction for the rest."""
    sid = SeqId(sid)
    if sid is SeqId.A:
        return apery_a_exact(n)
    if sid is SeqId.APRIME:
        return apery_aprime_exact(n)
    if sid is SeqId.T:
        return t_exact(n)
    if sid is SeqId.CBIG:
        return c_coeffs(n)[0]
    if sid is SeqId.CPRIME:
        return c_coeffs(n)[1]
    h, o, o2, d = harmonic_values(n)
    return {SeqId.H: h, SeqId.OODD: o, SeqId.OODD2: o2, SeqId.D: d}[sid]


# ---------------------------------------------------------------------------
# modular evaluators

@lru_cache(maxsize=None)
def factorial_table(p: int, e: int) -> FactorialTable:
    return FactorialTable(p, e)


def seq_mod(sid: SeqId, n: int, p: int, e: int) -> Residue:
    """Residue of the exact sequence value mod p^e, computed modularly."""
    sid = SeqId(sid)
    if n < 0:
        raise ValueError("need n >= 0")
    if sid in (SeqId.A, SeqId.APRIME):
        table = factorial_table(p, e)
        acc = residue(0, p, e)
        for k in range(n + 1):
            b1 = table.binomial(n, k)
            b2 = table.binomial(n + k, k)
            term = b1 * b1 * b2 * b2 if sid is SeqId.A else b1 * b1 * b2
            acc = acc + to_residue(term)
        return acc
    if sid is SeqId.T:
        m = p ** e
        a, b = 1, 5
        if n == 0:
            return residue(1, p, e)
        for i in range(1, n):
            a, b = b, ((8 * i * i + 12 * i + 5) * b - 4 * i * i * (2 * i + 1) ** 2 * a) % m
        return residue(b, p, e)
    if sid in (SeqId.H, SeqId.OODD, SeqId.OODD2, SeqId.D):
        m = p ** e
        h = o = o2 = 0
        for i in range(1, n + 1):
            if sid is SeqId.H:
                if i % p == 0:
                    raise NotPIntegral(f"denominator {i} divisible by {p}", -1)
                h = (h + pow(i, -1, m)) % m
            else:
                d = 2 * i - 1
                if d % p == 0:
                    raise NotPIntegral(f"denominator {d} divisible by {p}", -1)
                inv = pow(d, -1, m)
                o = (o + inv) % m
                o2 = (o2 + inv * inv) % m
        if sid is SeqId.H:
            return residue(h, p, e)
        if sid is SeqId.OODD:
            return residue(o, p, e)
        if sid is SeqId.OODD2:
            return residue(o2, p, e)
        return residue(o * o - o2, p, e)
    raise ValueError(f"no modular evaluator for {sid.value}; reduce the exact value")

"""Odd primes and arithmetic in Z/p^e Z, with p-valuations kept explicit.

Residue refuses arithmetic across different moduli, and PadicFactored keeps a
value split as p^v * unit so that p-divisible factorials and binomials remain
exactly computable modulo p^e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union


class NotPIntegral(ValueError):
    """A rational with p in its denominator cannot be reduced mod p^e."""

    def __init__(self, message: str, valuation: int) -> None:
        super().__init__(message)
        self.valuation = valuation


# ---------------------------------------------------------------------------
# primes

def primes_up_to(hi: int) -> list[int]:
    """All primes <= hi by sieve."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, isqrt(hi) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(sieve[q * q :: q]))
    return [i for i, flag in enumerate(sieve) if flag]


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


def quadratic_rep(p: int) -> tuple[int, int]:
    """(x, y) with p = x^2 + 4y^2, x odd positive, y positive.

    Exists and is unique for every prime p = 1 (mod 4); found by exhaustive
    search over odd x <= sqrt(p).  Only x^2 is ever used downstream, so the
    sign of x is normalized positive.
    """
    if p % 4 != 1:
        raise ValueError(f"{p} is not 1 (mod 4)")
    for x in range(1, isqrt(p) + 1, 2):
        rest = p - x * x
        if rest % 4 == 0:
            y = isqrt(rest // 4)
            if y > 0 and 4 * y * y == rest:
                return x, y
    raise ValueError(f"no representation p = x^2 + 4y^2 found for {p}")


@dataclass(frozen=True)
class PrimeInfo:
    """A verified odd prime with its class mod 4 and, for class 1, p = x^2 + 4y^2."""

    p: int
    klass: int
    rep: Optional[tuple[int, int]]


def prime_info(p: int) -> PrimeInfo:
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    klass = p % 4
    rep = quadratic_rep(p) if klass == 1 else None
    return PrimeInfo(p, klass, rep)


def primes_in_range(lo: int, hi: int) -> list[PrimeInfo]:
    """The odd primes in [lo, hi] with class and quadratic representation."""
    if not 3 <= lo <= hi:
        raise ValueError(f"need 3 <= lo <= hi, got [{lo}, {hi}]")
    out = []
    for p in primes_up_to(hi):
        if p >= lo and p % 2:
            out.append(prime_info(p))
    return out


# ---------------------------------------------------------------------------
# residues

class Residue:
    """An element of Z/p^e Z that remembers (p, e) and refuses mixed arithmetic."""

    __slots__ = ("value", "p", "e", "modulus")

    def __init__(self, value: int, p: int, e: int) -> None:
        self.p = p
        self.e = e
        self.modulus = p ** e
        self.value = value % self.modulus

    def _other_value(self, other: Union["Residue", int]) -> int:
        if isinstance(other, Residue):
            if (other.p, other.e) != (self.p, self.e):
                raise ValueError(
                    f"mixed moduli: {self.p}^{self.e} vs {other.p}^{other.e}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._other_value(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value + v, self.p, self.e)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other_value(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value - v, self.p, self.e)

    def __rsub__(self, other):
        v = self._other_value(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(v - self.value, self.p, self.e)

    def __mul__(self, other):
        v = self._other_value(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value * v, self.p, self.e)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p, self.e)

    def __pow__(self, k: int):
        try:
            return Residue(pow(self.value, k, self.modulus), self.p, self.e)
        except ValueError:
            raise ValueError(
                f"not invertible: {self.value} mod {self.p}^{self.e}"
            ) from None

    def inv(self) -> "Residue":
        return self ** -1

    def __eq__(self, other) -> bool:
        if isinstance(other, Residue):
            return (self.p, self.e, self.value) == (other.p, other.e, other.value)
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.p}^{self.e})"


def residue(value: int, p: int, e: int) -> Residue:
    return Residue(value, p, e)


def mod_inv(a: Residue) -> Residue:
    """Inverse of a unit mod p^e."""
    return a ** -1


# ---------------------------------------------------------------------------
# factored values

@dataclass(frozen=True)
class PadicFactored:
    """A value p^valuation * unit, the unit kept as a residue coprime to p.

    The valuation may go negative mid-computation (quotients); conversion to a
    plain residue requires valuation >= 0.
    """

    valuation: int
    unit: Residue

    def __mul__(self, other: "PadicFactored") -> "PadicFactored":
        return PadicFactored(self.valuation + other.valuation, self.unit * other.unit)

    def __truediv__(self, other: "PadicFactored") -> "PadicFactored":
        return PadicFactored(self.valuation - other.valuation, self.unit * other.unit.inv())

    def __pow__(self, k: int) -> "PadicFactored":
        return PadicFactored(self.valuation * k, self.unit ** k)


def factored_int(n: int, p: int, e: int) -> PadicFactored:
    """n > 0 split as p^v * unit mod p^e."""
    if n <= 0:
        raise ValueError("need n > 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return PadicFactored(v, Residue(n, p, e))


def factored_factorial(n: int, p: int, e: int) -> PadicFactored:
    """n! as p^v * unit mod p^e; v is the Legendre valuation."""
    if n < 0:
        raise ValueError("need n >= 0")
    m = p ** e
    v, u = 0, 1
    for i in range(2, n + 1):
        while i % p == 0:
            i //= p
            v += 1
        u = u * i % m
    return PadicFactored(v, Residue(u, p, e))


def factored_binomial(n: int, k: int, p: int, e: int) -> PadicFactored:
    """binom(n, k) as p^v * unit mod p^e, exact for any size of n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return factored_factorial(n, p, e) / (
        factored_factorial(k, p, e) * factored_factorial(n - k, p, e)
    )


def to_residue(x: PadicFactored) -> Residue:
    """p^valuation * unit as a residue (zero once the valuation reaches e)."""
    if x.valuation < 0:
        raise NotPIntegral(
            f"not p-integral: valuation {x.valuation}", x.valuation
        )
    r = x.unit
    if x.valuation >= r.e:
        return Residue(0, r.p, r.e)
    return r * r.p ** x.valuation


def reduce_rat(q: Union[Fraction, int], p: int, e: int) -> Residue:
    """A p-integral rational reduced mod p^e."""
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    if den % p == 0:
        v = 0
        while den % p == 0:
            den //= p
            v += 1
        raise NotPIntegral(f"not p-integral: {q} has p-valuation {-v}", -v)
    m = p ** e
    return Residue(num * pow(q.denominator, -1, m), p, e)


class FactorialTable:
    """Factored factorials for one modulus p^e, built incrementally.

    binomial() is O(1) after the underlying factorial row has been extended,
    which makes residue evaluation of long binomial sums linear overall.
    """

    def __init__(self, p: int, e: int) -> None:
        self.p = p
        self.e = e
        self.modulus = p ** e
        self._val = [0]
        self._unit = [1]

    def _extend(self, n: int) -> None:
        p, m = self.p, self.modulus
        v, u = self._val[-1], self._unit[-1]
        for i in range(len(self._val), n + 1):
            while i % p == 0:
                i //= p
                v += 1
            u = u * i % m
            self._val.append(v)
            self._unit.append(u)

    def factorial(self, n: int) -> PadicFactored:
        if n < 0:
            raise ValueError("need n >= 0")
        self._extend(n)
        return PadicFactored(self._val[n], Residue(self._unit[n], self.p, self.e))

    def binomial(self, n: int, k: int) -> PadicFactored:
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        self._extend(n)
        m = self.modulus
        v = self._val[n] - self._val[k] - self._val[n - k]
        u = self._unit[n] * pow(self._unit[k] * self._unit[n - k] % m, -1, m) % m
        return PadicFactored(v, Residue(u, self.p, self.e))

"""Exact integer number theory over Python's arbitrary-precision ints.

Everything here is a pure function; no fixed-width fast paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NotInvertibleError, ResourceLimitError

#: Default iteration cap for :func:`multiplicative_order`.
ORDER_ITERATION_CAP = 10**7


@dataclass(frozen=True)
class Modulus:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 1:
            raise DomainError(f"modulus must be a positive integer, got {self.value!r}")

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class ResidueClass:
    """The class ``residue (mod modulus)`` with canonical residue in [0, modulus)."""

    residue: int
    modulus: Modulus

    def __post_init__(self):
        if not isinstance(self.modulus, Modulus):
            object.__setattr__(self, "modulus", Modulus(self.modulus))
        if not 0 <= self.residue < self.modulus.value:
            raise DomainError(
                f"residue {self.residue} not in [0, {self.modulus.value})"
            )

    @classmethod
    def of(cls, x: int, modulus: int) -> "ResidueClass":
        """Reduce an arbitrary integer ``x`` into its class mod ``modulus``."""
        mod = Modulus(modulus)
        return cls(x % mod.value, mod)

    def __contains__(self, x: int) -> bool:
        return x % self.modulus.value == self.residue

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus.value}"


def _as_modulus(N) -> int:
    if isinstance(N, Modulus):
        return N.value
    if isinstance(N, int) and N >= 1:
        return N
    return Modulus(N).value


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError("gcd is defined here for nonnegative integers only")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def radical(c: int) -> int:
    """Product of the distinct primes dividing ``c``; ``radical(1) == 1``.

    Trial division, so intended for desk-scale inputs such as a base ``b``.
    """
    if c < 1:
        raise DomainError(f"radical is defined for c >= 1, got {c}")
    rad = 1
    p = 2
    while p * p <= c:
        if c % p == 0:
            rad *= p
            while c % p == 0:
                c //= p
        p += 1 if p == 2 else 2
    if c > 1:
        rad *= c
    return rad


def mod_pow(a: int, e: int, N) -> int:
    """``a**e mod N`` by square-and-multiply (delegates to built-in ``pow``)."""
    n = _as_modulus(N)
    if e < 0:
        raise DomainError("exponent must be nonnegative")
    return pow(a, e, n)


def multiplicative_order(a: int, N, cap: int = ORDER_ITERATION_CAP) -> int:
    """Least ``w >= 1`` with ``a**w == 1 (mod N)``.

    Walks successive powers of ``a``; raises :class:`ResourceLimitError`
    after ``cap`` steps instead of running unbounded.  ``N == 1`` gives 1.
    """
    n = _as_modulus(N)
    if n == 1:
        return 1
    a %= n
    if math.gcd(a, n) != 1:
        raise NotInvertibleError(f"gcd({a}, {n}) != 1; order undefined")
    x = a
    w = 1
    while x != 1:
        if w >= cap:
            raise ResourceLimitError(
                f"order of {a} mod {n} exceeds iteration cap {cap}"
            )
        x = x * a % n
        w += 1
    return w


def crt_pair(x1: ResidueClass, x2: ResidueClass) -> ResidueClass:
    """Combine two classes with coprime moduli into one class mod M1*M2."""
    m1, m2 = x1.modulus.value, x2.modulus.value
    if math.gcd(m1, m2) != 1:
        raise DomainError(f"moduli {m1} and {m2} are not coprime")
    if m1 == 1:
        return ResidueClass.of(x2.residue, m2)
    if m2 == 1:
        return ResidueClass.of(x1.residue, m1)
    # x = x1 + m1 * t with m1 * t = x2 - x1 (mod m2)
    t = (x2.residue - x1.residue) * pow(m1, -1, m2) % m2
    return ResidueClass.of(x1.residue + m1 * t, m1 * m2)


def lcm_range(k: int) -> int:
    """lcm(1, 2, ..., k)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return math.lcm(*range(1, k + 1))


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n`` in increasing order (trial division)."""
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]

"""Sparse-repunit construction of simultaneous Niven numbers.

Given a base ``b``, an exponent ``k`` and a progression ``r (mod m)`` with
gcd(m, b) = 1, every admissible digit-sum target ``s`` (``s = r (mod m)``,
gcd(s, b) = 1) yields

    n_s = sum_{j<s} B**(j * w),    B = b**k,  w = ord_{m*s}(B),

which lies in the progression, has digit sum ``s`` in base ``b**l`` for every
``l | k``, and is divisible by ``s``.  The tower variant replaces ``k`` by
``K = lcm(1..k)`` so the same holds for every ``l <= k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from . import digits
from .errors import (
    BaseTooSmallError,
    DomainError,
    ExponentTooSmallError,
    InadmissibleError,
    ModulusNotCoprimeError,
    ModulusTooSmallError,
    ResidueOutOfRangeError,
    ResourceLimitError,
)
from .numtheory import (
    ORDER_ITERATION_CAP,
    ResidueClass,
    crt_pair,
    divisors,
    lcm_range,
    multiplicative_order,
    radical,
)

#: Refuse constructions whose predicted bit length exceeds this.
DEFAULT_SIZE_CAP = 1_000_000


@dataclass(frozen=True)
class ConstructionParams:
    b: int
    k: int
    m: int
    r: int

    @property
    def B(self) -> int:
        return self.b**self.k

    def progression(self) -> ResidueClass:
        return ResidueClass.of(self.r, self.m)


def validate(params: ConstructionParams) -> ConstructionParams:
    """Return ``params`` unchanged or raise the matching :class:`ValidationError`."""
    b, k, m, r = params.b, params.k, params.m, params.r
    if b < 2:
        raise BaseTooSmallError(f"base b must be >= 2, got {b}")
    if k < 1:
        raise ExponentTooSmallError(f"exponent k must be >= 1, got {k}")
    if m < 1:
        raise ModulusTooSmallError(f"modulus m must be >= 1, got {m}")
    if not 0 <= r < m:
        raise ResidueOutOfRangeError(f"residue r must satisfy 0 <= r < m={m}, got {r}")
    g = math.gcd(m, b)
    if g != 1:
        raise ModulusNotCoprimeError(
            f"gcd(m, b) = gcd({m}, {b}) = {g} != 1: the construction requires "
            "gcd(m, b) = 1, since a prime dividing both m and b makes "
            "B**w = 1 (mod m) impossible"
        )
    return params


@dataclass(frozen=True)
class AdmissibleS:
    """An admissible digit-sum target.

    ``q`` is rad(b); ``s_star`` is the least positive solution of
    s = r (mod m), s = 1 (mod q).  Every ``s_star + t*m*q`` is admissible,
    though not every admissible ``s`` is of that form.
    """

    s: int
    q: int
    s_star: int
    family_modulus: int

    @property
    def in_crt_family(self) -> bool:
        return self.s >= self.s_star and (self.s - self.s_star) % self.family_modulus == 0

    def __int__(self) -> int:
        return self.s


def crt_seed(params: ConstructionParams) -> tuple[int, int, int]:
    """Return ``(q, s_star, m*q)`` for the progression of admissible seeds."""
    validate(params)
    q = radical(params.b)
    cls = crt_pair(ResidueClass.of(params.r, params.m), ResidueClass.of(1, q))
    mq = cls.modulus.value
    s_star = cls.residue or mq
    return q, s_star, mq


def admissible(params: ConstructionParams, s: int) -> AdmissibleS:
    """Wrap ``s`` as :class:`AdmissibleS`, or raise :class:`InadmissibleError`."""
    validate(params)
    if s < 1:
        raise InadmissibleError(f"s must be >= 1, got {s}")
    if s % params.m != params.r:
        raise InadmissibleError(
            f"s = {s} violates s = r (mod m): {s} mod {params.m} = {s % params.m} != {params.r}"
        )
    if math.gcd(s, params.b) != 1:
        raise InadmissibleError(
            f"s = {s} violates gcd(s, b) = 1: gcd({s}, {params.b}) = {math.gcd(s, params.b)}"
        )
    q, s_star, mq = crt_seed(params)
    return AdmissibleS(s, q, s_star, mq)


def _coerce(params: ConstructionParams, s) -> AdmissibleS:
    return admissible(params, int(s))


def admissible_stream(
    params: ConstructionParams, s_min: int = 1, crt_family: bool = False
) -> Iterator[AdmissibleS]:
    """Yield admissible ``s >= s_min`` in increasing order, forever.

    With ``crt_family`` only the CRT seeds ``s_star + t*m*q`` are produced,
    which skips the gcd test entirely.
    """
    validate(params)
    if s_min < 1:
        raise DomainError(f"s_min must be >= 1, got {s_min}")
    q, s_star, mq = crt_seed(params)
    if crt_family:
        s = s_star if s_star >= s_min else s_star + -(-(s_min - s_star) // mq) * mq
        while True:
            yield AdmissibleS(s, q, s_star, mq)
            s += mq
    m, b = params.m, params.b
    s = s_min + (params.r - s_min) % m
    while True:
        if math.gcd(s, b) == 1:
            yield AdmissibleS(s, q, s_star, mq)
        s += m


def spacing(params: ConstructionParams, s, cap: int = ORDER_ITERATION_CAP) -> int:
    """Canonical spacing ord_{m*s}(B)."""
    s = _coerce(params, s)
    return multiplicative_order(params.B, params.m * s.s, cap=cap)


def predicted_bits(base: int, omega: int, s: int) -> int:
    """Bit length predicted for a sparse repunit: (s-1)*omega*log2(base) + 1, rounded up."""
    return math.ceil((s - 1) * omega * math.log2(base)) + 1


def _check_size(bits: int, size_cap: int) -> None:
    if bits > size_cap:
        raise ResourceLimitError(
            f"predicted size {bits} bits exceeds size cap {size_cap} bits"
        )


def sparse_repunit(base: int, omega: int, s: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """``sum(base**(j*omega) for j in range(s))``, cross-checked against the closed form."""
    if base < 2 or omega < 1 or s < 1:
        raise DomainError(f"need base >= 2, omega >= 1, s >= 1; got {base}, {omega}, {s}")
    _check_size(predicted_bits(base, omega, s), size_cap)
    step = base**omega
    total = 0
    term = 1
    for _ in range(s):
        total += term
        term *= step
    closed, rem = divmod(base ** (s * omega) - 1, step - 1)
    if rem or closed != total:
        raise AssertionError("geometric closed form disagrees with the term-by-term sum")
    return total


def witno_repunit(n: int, b: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """R_{n,b,k} = (b**(n*k) - 1) / (b**k - 1): n ones in base b, k-1 zeros apart."""
    if n < 1 or b < 2 or k < 1:
        raise DomainError(f"need n >= 1, b >= 2, k >= 1; got {n}, {b}, {k}")
    _check_size(predicted_bits(b, k, n), size_cap)
    value = (b ** (n * k) - 1) // (b**k - 1)
    if value != sparse_repunit(b**k, 1, n, size_cap):
        raise AssertionError("R_{n,b,k} disagrees with the base-b**k repunit")
    return value


@dataclass(frozen=True)
class Claim:
    """One checkable statement ``expected == actual`` about a value.

    kind is one of ``membership`` (value mod m vs r), ``s_divides_value``
    (value mod s vs 0), ``digit_sum_equals_s`` (s_base(value) vs s) and
    ``digit_sum_divides`` (value mod s_base(value) vs 0).
    """

    kind: str
    expected: int
    actual: int
    base: Optional[int] = None

    @property
    def name(self) -> str:
        return self.kind if self.base is None else f"{self.kind}[{self.base}]"

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class NivenCertificate:
    claims: tuple[Claim, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def bases(self) -> list[int]:
        return sorted({c.base for c in self.claims if c.base is not None})

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if not c.passed]


def certify(value: int, params: ConstructionParams, s: int, bases) -> NivenCertificate:
    """Recompute every claim from ``value`` itself via base expansion."""
    claims = [
        Claim("membership", params.r, value % params.m),
        Claim("s_divides_value", 0, value % s),
    ]
    for g in sorted(set(bases)):
        ds = digits.digit_sum(value, g)
        claims.append(Claim("digit_sum_equals_s", s, ds, g))
        claims.append(Claim("digit_sum_divides", 0, value % ds if ds else value, g))
    return NivenCertificate(tuple(claims))


@dataclass(frozen=True)
class ConstructionResult:
    params: ConstructionParams
    s: int
    omega: int
    value: int
    certificate: NivenCertificate
    tower_K: Optional[int] = None

    @property
    def spacing_base(self) -> int:
        """The base in which ``value`` is a sparse repunit (B, or b**K for towers)."""
        exp = self.params.k if self.tower_K is None else self.tower_K
        return self.params.b**exp

    @property
    def exponents(self) -> list[int]:
        """Exponents l such that the certificate covers base b**l."""
        if self.tower_K is None:
            return divisors(self.params.k)
        return list(range(1, self.params.k + 1))

    @property
    def bases(self) -> list[int]:
        return [self.params.b**l for l in self.exponents]


def construct(
    params: ConstructionParams,
    s,
    size_cap: int = DEFAULT_SIZE_CAP,
    order_cap: int = ORDER_ITERATION_CAP,
) -> ConstructionResult:
    """Build n_s and certify it in base b**l for every divisor l of k."""
    validate(params)
    s = _coerce(params, s)
    omega = spacing(params, s, cap=order_cap)
    _check_size(predicted_bits(params.b, params.k * omega, s.s), size_cap)
    value = sparse_repunit(params.B, omega, s.s, size_cap)
    bases = [params.b**l for l in divisors(params.k)]
    cert = certify(value, params, s.s, bases)
    return ConstructionResult(params, s.s, omega, value, cert)


def construct_tower(
    params: ConstructionParams,
    s,
    size_cap: int = DEFAULT_SIZE_CAP,
    order_cap: int = ORDER_ITERATION_CAP,
) -> ConstructionResult:
    """Build N_s over b**K, K = lcm(1..k), certified in every base b**l, l <= k."""
    validate(params)
    s = _coerce(params, s)
    K = lcm_range(params.k)
    tower_base = params.b**K
    omega = multiplicative_order(tower_base, params.m * s.s, cap=order_cap)
    _check_size(predicted_bits(params.b, K * omega, s.s), size_cap)
    value = sparse_repunit(tower_base, omega, s.s, size_cap)
    bases = [params.b**l for l in range(1, params.k + 1)]
    cert = certify(value, params, s.s, bases)
    return ConstructionResult(params, s.s, omega, value, cert, tower_K=K)


def construct_coprime_single_base(
    b: int, m: int, r: int, s, size_cap: int = DEFAULT_SIZE_CAP
) -> ConstructionResult:
    """Single-base order/repunit method: the k = 1 case of :func:`construct`."""
    return construct(ConstructionParams(b, 1, m, r), s, size_cap=size_cap)

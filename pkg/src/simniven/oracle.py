"""Independent brute-force checks for constructed integers.

Nothing here reuses the construction's algebra: claims are recomputed from
the integer by base expansion and plain remainders, orders are found by
stepping one multiplication at a time, and scans test every candidate.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import digits
from .construction import ConstructionParams, ConstructionResult, validate
from .errors import DomainError, NotInvertibleError
from .numtheory import divisors

_INT64_SAFE = 2**62


def brute_force_order(a: int, N) -> int:
    """Least w >= 1 with a**w = 1 (mod N), by repeated multiplication."""
    n = int(N.value if hasattr(N, "value") else N)
    if n < 1:
        raise DomainError(f"modulus must be >= 1, got {n}")
    if math.gcd(a % n, n) != 1:
        raise NotInvertibleError(f"gcd({a}, {n}) != 1")
    x = a % n
    w = 1
    while x != 1 % n:
        x = x * a % n
        w += 1
    return w


def brute_force_orders(N: int) -> np.ndarray:
    """Orders of every residue modulo ``N`` at once; 0 marks non-units.

    Steps all residues in lockstep, one multiplication per round.
    """
    if not 1 <= N < 3 * 10**9:
        raise DomainError(f"vectorized orders need 1 <= N < 3e9, got {N}")
    a = np.arange(N, dtype=np.int64)
    orders = np.zeros(N, dtype=np.int64)
    if N == 1:
        orders[0] = 1
        return orders
    units = np.gcd(a, N) == 1
    x = a.copy()
    pending = units.copy()
    w = 1
    while pending.any():
        hit = pending & (x == 1)
        orders[hit] = w
        pending &= ~hit
        x = x * a % N
        w += 1
    return orders


@dataclass(frozen=True)
class ClaimVerdict:
    name: str
    expected: int
    actual: int
    holds: bool
    recorded: bool

    @property
    def passed(self) -> bool:
        """The claim holds for the value and the certificate recorded it faithfully."""
        return self.holds and self.recorded


@dataclass(frozen=True)
class Verdict:
    claims: tuple[ClaimVerdict, ...]

    @property
    def passed(self) -> bool:
        return bool(self.claims) and all(c.passed for c in self.claims)

    def failures(self) -> list[ClaimVerdict]:
        return [c for c in self.claims if not c.passed]

    def __getitem__(self, name: str) -> ClaimVerdict:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)


def _recompute(value: int, params: ConstructionParams, s: int, bases: Iterable[int]):
    out = [
        ("membership", params.r, value % params.m),
        ("s_divides_value", 0, value % s),
    ]
    for g in sorted(set(bases)):
        ds = digits.digit_sum(value, g)
        out.append((f"digit_sum_equals_s[{g}]", s, ds))
        out.append((f"digit_sum_divides[{g}]", 0, value % ds if ds else value))
    return out


def _names(bases) -> set[str]:
    names = {"membership", "s_divides_value"}
    for g in bases:
        names.update((f"digit_sum_equals_s[{g}]", f"digit_sum_divides[{g}]"))
    return names


def required_bases(params: ConstructionParams, tower_K: Optional[int]) -> list[int]:
    """Bases b**l a certificate must cover: l | k, or every l <= k for towers."""
    ls = divisors(params.k) if tower_K is None else range(1, params.k + 1)
    return [params.b**l for l in ls]


def verify_claims(
    params: ConstructionParams, s: int, value: int, tower_K: Optional[int] = None
) -> Verdict:
    """Check a bare value against the full claim set, with no certificate."""
    rows = _recompute(value, params, s, required_bases(params, tower_K))
    return Verdict(tuple(ClaimVerdict(n, e, a, e == a, True) for n, e, a in rows))


def verify_certificate(result: ConstructionResult) -> Verdict:
    """Recompute the claim set required for ``result`` and compare to its certificate.

    A claim passes when it holds for ``result.value`` and the certificate
    records the same expected and actual values.  Claims the certificate
    makes beyond the required set are checked the same way.
    """
    params, value, s = result.params, result.value, result.s
    recorded = {c.name: (c.expected, c.actual) for c in result.certificate.claims}
    required = set(required_bases(params, result.tower_K))
    extra = {c.base for c in result.certificate.claims if c.base is not None} - required
    verdicts = []
    for name, expected, actual in _recompute(value, params, s, required | extra):
        seen = recorded.get(name)
        if seen is None and name not in _names(required):
            continue
        verdicts.append(
            ClaimVerdict(name, expected, actual, expected == actual, seen == (expected, actual))
        )
    return Verdict(tuple(verdicts))


@dataclass(frozen=True)
class ScanReport:
    params: ConstructionParams
    limit: int
    hits: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.hits)


def _digit_sums(x: np.ndarray, g: int) -> np.ndarray:
    x = x.copy()
    total = np.zeros_like(x)
    while x.any():
        total += x % g
        x //= g
    return total


def _scan_shard(start: int, stop: int, step: int, b: int, B: int) -> list[int]:
    if stop <= start:
        return []
    if stop < _INT64_SAFE and B < _INT64_SAFE:
        n = np.arange(start, stop, step, dtype=np.int64)
        ok = n % _digit_sums(n, b) == 0
        if B != b:
            ok &= n % _digit_sums(n, B) == 0
        return n[ok].tolist()
    return [
        n
        for n in range(start, stop, step)
        if n % digits.digit_sum(n, b) == 0 and n % digits.digit_sum(n, B) == 0
    ]


def scan_simultaneous(params: ConstructionParams, limit: int, shards: int = 1) -> ScanReport:
    """Every n <= limit with n = r (mod m) that is both b-Niven and b**k-Niven.

    Candidates r, r+m, ... are split into ``shards`` contiguous ranges
    evaluated on a thread pool; hits are merged in increasing order.
    """
    validate(params)
    if limit < 1:
        raise DomainError(f"limit must be >= 1, got {limit}")
    if shards < 1:
        raise DomainError(f"shards must be >= 1, got {shards}")
    m, b, B = params.m, params.b, params.B
    first = params.r if params.r else m
    count = 0 if first > limit else (limit - first) // m + 1
    per = -(-count // shards) if count else 0
    ranges = [
        (first + i * per * m, first + min((i + 1) * per, count) * m)
        for i in range(shards)
        if i * per < count
    ]
    if len(ranges) <= 1:
        parts = [_scan_shard(lo, hi, m, b, B) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
            parts = list(pool.map(lambda rg: _scan_shard(rg[0], rg[1], m, b, B), ranges))
    hits = tuple(h for part in parts for h in part)
    return ScanReport(params, limit, hits)

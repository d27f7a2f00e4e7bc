"""Base expansions, digit sums and the Niven predicate."""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import DomainError

_ALPHABET = string.digits + string.ascii_lowercase
_NAIVE_LEVEL = 4  # below g**(2**5) digits, plain repeated divmod is fastest


@dataclass(frozen=True)
class BaseExpansion:
    """Digits of a nonnegative integer in ``base``, most significant first.

    The integer 0 is the empty tuple of digits.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise DomainError(f"base must be >= 2, got {self.base}")
        if self.digits and self.digits[0] == 0:
            raise DomainError("leading digit must be nonzero")
        if any(not 0 <= d < self.base for d in self.digits):
            raise DomainError(f"digit out of range for base {self.base}")

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)

    def value(self) -> int:
        n = 0
        for d in self.digits:
            n = n * self.base + d
        return n

    def positions_of(self, digit: int) -> list[int]:
        """Exponents ``i`` (of ``base**i``) whose digit equals ``digit``, ascending."""
        return [i for i, d in enumerate(reversed(self.digits)) if d == digit]

    def __str__(self) -> str:
        return render(self)


def _check_base(g: int) -> None:
    if not isinstance(g, int) or g < 2:
        raise DomainError(f"base must be an integer >= 2, got {g!r}")


def _naive(x: int, g: int, width: int | None, out: list[int]) -> None:
    start = len(out)
    while x:
        x, d = divmod(x, g)
        out.append(d)
    if width is not None:
        out.extend([0] * (width - (len(out) - start)))


def _power_of_two_lsf(n: int, g: int) -> list[int]:
    bits = g.bit_length() - 1
    s = bin(n)[2:]
    s = "0" * (-len(s) % bits) + s
    return [int(s[i - bits:i], 2) for i in range(len(s), 0, -bits)]


def _digits_lsf(n: int, g: int) -> list[int]:
    if n == 0:
        return []
    if g & (g - 1) == 0:
        return _power_of_two_lsf(n, g)
    # pows[i] = g**(2**i); divide and conquer on these splitting points
    pows = [g]
    while pows[-1] * pows[-1] <= n:
        pows.append(pows[-1] * pows[-1])
    out: list[int] = []

    def rec(x: int, i: int, padded: bool) -> None:
        # x < g**(2**(i+1)); emits exactly 2**(i+1) digits when padded
        if i <= _NAIVE_LEVEL:
            _naive(x, g, 2 ** (i + 1) if padded else None, out)
            return
        if not padded and x < pows[i]:
            rec(x, i - 1, False)
            return
        hi, lo = divmod(x, pows[i])
        rec(lo, i - 1, True)
        if padded or hi:
            rec(hi, i - 1, padded)

    rec(n, len(pows) - 1, False)
    return out


def to_base(n: int, g: int) -> BaseExpansion:
    _check_base(g)
    if n < 0:
        raise DomainError("negative integers are not supported")
    return BaseExpansion(g, tuple(reversed(_digits_lsf(n, g))))


def digit_sum(n: int, g: int) -> int:
    _check_base(g)
    if n < 0:
        raise DomainError("negative integers are not supported")
    if g == 2:
        return bin(n).count("1")
    return sum(_digits_lsf(n, g))


def is_niven(n: int, g: int) -> bool:
    """True when the base-``g`` digit sum of ``n`` divides ``n``."""
    if n < 1:
        raise DomainError(f"Niven-ness is defined for positive integers, got {n}")
    return n % digit_sum(n, g) == 0


def render(e: BaseExpansion) -> str:
    """Text form of an expansion.

    Bases up to 36 give a contiguous string over ``0-9a-z``; larger bases give
    ``[d_L,...,d_0]`` with decimal digit values.  Zero is ``"0"`` either way.
    """
    if not e.digits:
        return "0"
    if e.base <= 36:
        return "".join(_ALPHABET[d] for d in e.digits)
    return "[" + ",".join(str(d) for d in e.digits) + "]"


def block_digit_sum_check(n: int, b: int, k: int) -> bool:
    """Check s_b(n) == sum of s_b(d) over the base-b**k digits d of n.

    Each base-b**k digit spans its own block of k base-b digits, so this
    holds for every n; it exists as an executable witness.
    """
    _check_base(b)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    blocks = _digits_lsf(n, b**k)
    return digit_sum(n, b) == sum(digit_sum(d, b) for d in blocks)

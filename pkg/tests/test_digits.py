import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simniven.digits import (
    BaseExpansion,
    block_digit_sum_check,
    digit_sum,
    is_niven,
    render,
    to_base,
)
from simniven.errors import DomainError


def naive_digits(n, g):
    """Most-significant-first digits by repeated divmod."""
    out = []
    while n:
        n, d = divmod(n, g)
        out.append(d)
    return out[::-1]


def test_to_base_examples():
    assert to_base(16781313, 8).digits == (1, 0, 0, 0, 1, 0, 0, 0, 1)
    assert to_base(0, 7).digits == ()
    assert to_base(299593, 4).digits == (1, 0, 2, 1, 0, 2, 1, 0, 2, 1)


def test_to_base_rejects_small_base():
    for g in (-1, 0, 1):
        with pytest.raises(DomainError):
            to_base(5, g)
        with pytest.raises(DomainError):
            digit_sum(5, g)


@pytest.mark.parametrize(
    "n,g,expected", [(16781313, 2, 3), (16781313, 8, 3), (299593, 4, 10), (299593, 8, 7), (0, 5, 0)]
)
def test_digit_sum_examples(n, g, expected):
    assert digit_sum(n, g) == expected


def test_is_niven_examples():
    assert is_niven(16781313, 8)
    assert is_niven(16781313, 2)
    assert not is_niven(299593, 4)
    assert all(is_niven(1, g) for g in range(2, 50))
    with pytest.raises(DomainError):
        is_niven(0, 10)


def test_render_examples():
    assert render(to_base(16781313, 2)) == "1000000000001000000000001"
    assert render(to_base(0, 10)) == "0"
    assert render(to_base(16781313, 4)) == "1000001000001"
    assert render(to_base(35, 36)) == "z"
    assert render(to_base(37 * 37 + 5, 37)) == "[1,0,5]"
    assert render(to_base(0, 1000)) == "0"


@pytest.mark.parametrize(
    "n,b,k", [(299593, 2, 3), (0, 2, 3), (16781313, 2, 3), (10**50 + 7, 10, 4)]
)
def test_block_digit_sum_examples(n, b, k):
    assert block_digit_sum_check(n, b, k)


def test_block_digit_sum_k1():
    rng = random.Random(11)
    for _ in range(200):
        assert block_digit_sum_check(rng.getrandbits(300), rng.randint(2, 40), 1)


def test_round_trip_against_naive():
    rng = random.Random(2024)
    for _ in range(10_000):
        g = rng.choice([rng.randint(2, 40), rng.randint(2, 10**6), 2 ** rng.randint(1, 20)])
        n = rng.randrange(10 ** rng.randint(0, 300))
        e = to_base(n, g)
        assert e.value() == n
        if n < 10**60:
            assert list(e.digits) == naive_digits(n, g)


def test_large_expansion_matches_naive_reconstruction():
    rng = random.Random(5)
    n = rng.getrandbits(40_000)
    for g in (3, 10, 1000, 7**5, 2**7):
        e = to_base(n, g)
        assert e.value() == n
        assert e.digits[0] != 0


@given(
    st.integers(2, 16),
    st.integers(1, 5),
    st.lists(st.integers(0, 15), max_size=50),
)
def test_small_block_digits_preserve_digit_sum(b, k, ds):
    ds = [d % b for d in ds]
    n = sum(d * (b**k) ** i for i, d in enumerate(ds))
    assert digit_sum(n, b) == digit_sum(n, b**k) == sum(ds)


@given(st.integers(0, 10**200), st.integers(2, 5000), st.integers(1, 6))
def test_block_identity_holds(n, b, k):
    assert block_digit_sum_check(n, b, k)


@given(st.integers(0, 10**100), st.integers(2, 10**4))
def test_casting_out(n, g):
    assert digit_sum(n, g) % (g - 1) == n % (g - 1)


@given(st.integers(1, 10**30), st.integers(2, 100))
def test_is_niven_definition(n, g):
    assert is_niven(n, g) == (n % digit_sum(n, g) == 0)


def test_expansion_invariants():
    with pytest.raises(DomainError):
        BaseExpansion(10, (0, 1))
    with pytest.raises(DomainError):
        BaseExpansion(10, (1, 10))
    with pytest.raises(DomainError):
        BaseExpansion(1, ())
    e = to_base(16781313, 8)
    assert e.length == 9
    assert e.positions_of(1) == [0, 4, 8]
    assert str(e) == "100010001"

import math
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from kdelete._rng import SplitMix64, derive_seed
from kdelete.bounds import (
    E_LOWER,
    ceil_mul_sqrt,
    decay_step_holds,
    floor_fraction,
    floor_mul_sqrt,
    floor_power_bound,
    iroot,
    power_bound_holds,
    sqrt_bound_holds,
)


def test_e_lower_is_a_lower_rounding_of_e():
    # partial sums of 1/k! increase to e, so 25 terms give an exact
    # rational lower bound accurate far beyond the 1e-15 truncation
    partial = Fraction(0)
    fact = 1
    for k in range(26):
        fact *= max(k, 1)
        partial += Fraction(1, fact)
    assert E_LOWER < partial  # hence E_LOWER < e
    assert partial - E_LOWER < Fraction(1, 10**15)


@given(st.integers(0, 10**30), st.integers(1, 6))
def test_iroot_is_exact_floor(x, d):
    r = iroot(x, d)
    assert r**d <= x < (r + 1) ** d


@given(st.integers(0, 10**12), st.integers(1, 5))
def test_iroot_inverts_powers(r, d):
    assert iroot(r**d, d) == r


@given(st.fractions(min_value=0, max_value=10**9))
def test_floor_fraction(fr):
    f = floor_fraction(fr)
    assert f <= fr < f + 1


@given(st.integers(1, 10**6), st.integers(1, 200), st.integers(1, 4),
       st.integers(1, 4))
def test_floor_power_bound_is_the_threshold(c, k, num, den):
    coeff = Fraction(c, 7)
    v = floor_power_bound(coeff, k, num, den)
    assert power_bound_holds(v, coeff, k, num, den)
    assert not power_bound_holds(v + 1, coeff, k, num, den)


@given(st.integers(1, 10**6), st.integers(1, 10**9))
def test_sqrt_bounds_agree(c, x):
    f = floor_mul_sqrt(c, x)
    assert sqrt_bound_holds(f, c, x)
    assert not sqrt_bound_holds(f + 1, c, x)
    assert ceil_mul_sqrt(c, x) in (f, f + 1)
    assert ceil_mul_sqrt(c, x) >= c * math.isqrt(x)


def test_decay_step_examples():
    # (8 * diff)^r * n^2 >= d_prev^(r+1), exact integers
    assert decay_step_holds(d_prev=16, d_next=14, n=10, r=1)  # 16*100 >= 256
    assert not decay_step_holds(d_prev=1600, d_next=1599, n=10, r=1)
    assert decay_step_holds(d_prev=0, d_next=0, n=5, r=2)


def test_splitmix_stream_is_deterministic():
    a = SplitMix64(12345)
    b = SplitMix64(12345)
    seq = [a.next_u64() for _ in range(8)]
    assert seq == [b.next_u64() for _ in range(8)]
    assert len(set(seq)) == 8


def test_derive_seed_separates_streams():
    seen = {derive_seed(0, tag, i) for tag in (0x11, 0x21) for i in range(50)}
    assert len(seen) == 100


@given(st.integers(0, 2**64 - 1), st.integers(1, 1000))
def test_randrange_in_range(seed, bound):
    rng = SplitMix64(seed)
    for _ in range(10):
        assert 0 <= rng.randrange(bound) < bound


@given(st.integers(0, 2**64 - 1))
def test_shuffle_is_permutation(seed):
    rng = SplitMix64(seed)
    xs = list(range(20))
    rng.shuffle(xs)
    assert sorted(xs) == list(range(20))

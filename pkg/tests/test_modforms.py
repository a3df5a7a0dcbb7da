import math
from functools import lru_cache

import numpy as np
import pytest

from lrlab.errors import InvalidArgumentError, ResourceLimitError
from lrlab.modforms import lambda_mod3, odd_tau_count, tau_exact, tau_mod

# first values of tau(n), long established
TAU_KNOWN = [
    1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
    534612, -370944, -577738, 401856, 1217160, 987136, -6905934, 2727432,
    10661420, -7109760,
]


def naive_delta_expansion(n_max):
    """Independent oracle: multiply out x * prod_{n <= n_max} (1 - x^n)^24."""
    coeffs = [1] + [0] * (n_max - 1)  # poly in x, degree < n_max
    for n in range(1, n_max + 1):
        for _ in range(24):
            # multiply by (1 - x^n)
            for i in range(n_max - 1, n - 1, -1):
                coeffs[i] -= coeffs[i - n]
    return coeffs  # coeffs[i] = tau(i + 1)


def partitions_avoiding(n, parts):
    """Count partitions of n into the allowed parts (recursive oracle)."""

    @lru_cache(maxsize=None)
    def count(remaining, max_idx):
        if remaining == 0:
            return 1
        total = 0
        for i in range(max_idx + 1):
            if parts[i] <= remaining:
                total += count(remaining - parts[i], i)
        return total

    return count(n, len(parts) - 1)


class TestTauExact:
    def test_known_values(self):
        w = tau_exact(len(TAU_KNOWN))
        assert w.values == TAU_KNOWN

    def test_against_naive_expansion(self):
        assert tau_exact(200).values == naive_delta_expansion(200)

    def test_examples(self):
        w = tau_exact(10)
        assert w.tau(1) == 1
        assert w.tau(2) == -24
        assert w.tau(5) == 4830
        assert w.tau(5) % 5 == 0 and w.tau(5) % 23 == 0

    def test_multiplicative_on_coprime(self):
        w = tau_exact(5000)
        for m, n in ((2, 3), (4, 9), (5, 7), (12, 25), (8, 27), (49, 100)):
            assert w.tau(m * n) == w.tau(m) * w.tau(n)

    def test_hecke_recursion(self):
        w = tau_exact(20000)
        for p in (2, 3, 5, 7, 11, 13):
            k = 1
            while p ** (k + 1) <= 20000:
                assert w.tau(p ** (k + 1)) == w.tau(p) * w.tau(p**k) - p**11 * w.tau(
                    p ** (k - 1)
                )
                k += 1

    def test_limits(self):
        with pytest.raises(InvalidArgumentError):
            tau_exact(0)
        with pytest.raises(ResourceLimitError):
            tau_exact(200_000)


class TestTauMod:
    def test_examples(self):
        assert tau_mod(23, 10)[2] == 22  # tau(2) = -24 = -1 (mod 23)
        assert tau_mod(691, 1500)[1381] == 0
        t5 = tau_mod(5, 10)
        assert t5[6] == (-6048) % 5 == (6 * 12) % 5  # 6*sigma_1(6) = 72

    def test_matches_exact_to_2000(self):
        w = tau_exact(2000)
        for q in (2, 3, 5, 7, 23, 691):
            tm = tau_mod(q, 2000)
            for n in (1, 2, 3, 23, 30, 691, 692, 1381, 1999, 2000):
                assert tm[n] == w.tau(n) % q, (q, n)

    def test_unsupported_modulus(self):
        with pytest.raises(InvalidArgumentError):
            tau_mod(11, 100)


class TestLambdaMod3:
    def test_small_values_against_enumeration(self):
        lam = lambda_mod3(30)
        parts = [m for m in range(1, 31) if m % 9 != 0]
        assert lam[0] == 1  # empty partition
        for n in (1, 2, 3, 4, 9, 12, 20, 30):
            assert lam[n] == partitions_avoiding(n, parts) % 3, n

    def test_quoted_counts(self):
        # lambda(4) = 5, lambda(9) = 29 = p(9) - 1
        parts = [m for m in range(1, 10) if m % 9 != 0]
        assert partitions_avoiding(4, parts) == 5
        assert partitions_avoiding(9, parts) == 29
        lam = lambda_mod3(9)
        assert lam[4] == 2 and lam[9] == 2

    def test_resource_limit(self):
        with pytest.raises(ResourceLimitError):
            lambda_mod3(200_000)


class TestOddTauCount:
    def test_examples(self):
        assert odd_tau_count(100) == 5  # 1, 9, 25, 49, 81
        assert odd_tau_count(1) == 1
        assert odd_tau_count(80) == 4

    def test_counts_odd_squares(self):
        for x in range(1, 3000):
            direct = sum(1 for j in range(1, math.isqrt(x) + 1, 2) if j * j <= x)
            assert odd_tau_count(x) == direct

    def test_matches_tau_parity(self):
        w = tau_exact(2000)
        parity = np.cumsum([t % 2 for t in w.values])
        for x in (1, 2, 10, 99, 100, 1024, 2000):
            assert int(parity[x - 1]) == odd_tau_count(x)

"""Prime generation and per-case classification of primes.

Provides a segmented sieve of Eratosthenes with a fixed segment size (so
enumeration order is deterministic), the Kronecker symbol, multiplicative
orders modulo 691, and the Wilton classes of primes modulo 23:

    S1 : (p|23) = -1
    S3 : p = U^2 + 23 V^2 with U != 0
    S2 : the remaining primes != 23
    P23: p = 23

S1, S2, S3 have natural densities 1/2, 1/3, 1/6.  An independent classifier
decides S3 through solvability of x^3 = x + 1 (mod p); both routes must
agree (the cubic x^3 - x - 1 has discriminant -23).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidArgumentError, UnsupportedCaseError

__all__ = [
    "PrimeTable",
    "PrimeClassification",
    "sieve_primes",
    "is_prime",
    "kronecker_symbol",
    "mult_order",
    "wilton_class",
    "wilton_class_cubic",
    "cubic_root_exists",
    "classify",
    "wilton_codes",
    "order_codes",
    "order_table_691",
    "S1",
    "S2",
    "S3",
    "P23",
]

SEGMENT_SIZE = 1 << 20

S1, S2, S3, P23 = "S1", "S2", "S3", "P23"

# Miller-Rabin with this witness set is deterministic for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass
class PrimeTable:
    """All primes <= limit, ascending, as a read-only int64 array."""

    limit: int
    primes: np.ndarray

    def __post_init__(self):
        self.primes.flags.writeable = False
        self._logs = None

    def __len__(self) -> int:
        return len(self.primes)

    @property
    def logs(self) -> np.ndarray:
        if self._logs is None:
            logs = np.log(self.primes.astype(np.float64))
            logs.flags.writeable = False
            self._logs = logs
        return self._logs


@dataclass(frozen=True)
class PrimeClassification:
    """Label selecting a prime's local Euler factor for one case."""

    case: str
    label: str
    order: float | None = None  # multiplicative order mod 691 (q691 only)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid for n < 3.3e24)."""
    n = int(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _simple_sieve(limit: int) -> np.ndarray:
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


@lru_cache(maxsize=6)
def _sieve_cached(limit: int) -> PrimeTable:
    base = _simple_sieve(math.isqrt(limit))
    chunks = []
    lo = 2
    while lo <= limit:
        hi = min(lo + SEGMENT_SIZE, limit + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            mask[start - lo :: p] = False
        chunks.append((lo + np.flatnonzero(mask)).astype(np.int64))
        lo = hi
    return PrimeTable(limit, np.concatenate(chunks) if chunks else np.array([], dtype=np.int64))


def sieve_primes(limit: int) -> PrimeTable:
    """All primes <= limit, ascending (segmented sieve, deterministic)."""
    limit = int(limit)
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be >= 2, got {limit}")
    return _sieve_cached(limit)


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), fully multiplicative in both arguments."""
    a, n = int(a), int(n)
    if n == 0:
        raise InvalidArgumentError("kronecker_symbol undefined for n = 0")
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        z = (n & -n).bit_length() - 1
        n >>= z
        if z % 2 == 1 and a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _factorize_small(n: int) -> list[int]:
    """Distinct prime factors by trial division (n is small here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/mZ)^*.  Requires gcd(a, m) = 1 and cyclic-friendly m."""
    a, m = int(a) % int(m), int(m)
    if math.gcd(a, m) != 1:
        raise InvalidArgumentError(f"{a} is not invertible mod {m}")
    phi = m - 1 if is_prime(m) else _euler_phi(m)
    order = phi
    for q in _factorize_small(phi):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def _euler_phi(m: int) -> int:
    phi = m
    for q in _factorize_small(m):
        phi -= phi // q
    return phi


def mult_order(p: int, m: int = 691):
    """Multiplicative order of the prime p mod m; math.inf when p == m.

    For p = m (the p | m case with m prime) the convention is "infinite":
    the corresponding local Euler factor degenerates to 1/(1 - p^-s).
    """
    p = int(p)
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if p == m:
        return math.inf
    if p % m == 0:
        raise InvalidArgumentError(f"{p} is not invertible mod {m}")
    return multiplicative_order(p, m)


@lru_cache(maxsize=2)
def order_table_691() -> np.ndarray:
    """orders[r] = multiplicative order of r mod 691 (0 at r = 0)."""
    divisors = sorted(
        d for d in range(1, 691) if 690 % d == 0
    )
    orders = np.zeros(691, dtype=np.int64)
    for r in range(1, 691):
        for d in divisors:
            if pow(r, d, 691) == 1:
                orders[r] = d
                break
    orders.flags.writeable = False
    return orders


# ---------------------------------------------------------------------------
# Wilton classes mod 23
# ---------------------------------------------------------------------------

_KRON23 = np.array([kronecker_symbol(r, 23) for r in range(23)], dtype=np.int8)


def wilton_class(p: int) -> str:
    """Primary Wilton classifier: S3 decided by the U^2 + 23 V^2 search."""
    p = int(p)
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if p == 23:
        return P23
    if kronecker_symbol(p, 23) == -1:
        return S1
    v = 1
    while 23 * v * v < p:
        u2 = p - 23 * v * v
        r = math.isqrt(u2)
        if r * r == u2:
            return S3
        v += 1
    return S2


def cubic_root_exists(p: int, chunk: int = 1 << 16) -> bool:
    """Does x^3 = x + 1 (mod p) have a solution?  Exhaustive scan.

    int64-safe: (x*x % p) * x stays below 2^63 for p < 3e9.
    """
    p = int(p)
    for lo in range(0, p, chunk):
        x = np.arange(lo, min(lo + chunk, p), dtype=np.int64)
        if np.any((x * x % p * x - x - 1) % p == 0):
            return True
    return False


def wilton_class_cubic(p: int) -> str:
    """Independent Wilton classifier: S3 iff (p|23) = 1 and x^3 = x+1 solvable mod p."""
    p = int(p)
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if p == 23:
        return P23
    if kronecker_symbol(p, 23) == -1:
        return S1
    return S3 if cubic_root_exists(p) else S2


@lru_cache(maxsize=4)
def _form_values_mask(limit: int) -> np.ndarray:
    """mask[n] = True iff n = u^2 + 23 v^2 for some u >= 1, v >= 1, n <= limit."""
    mask = np.zeros(limit + 1, dtype=bool)
    v = 1
    while 23 * v * v < limit:
        umax = math.isqrt(limit - 23 * v * v)
        if umax >= 1:
            u = np.arange(1, umax + 1, dtype=np.int64)
            mask[u * u + 23 * v * v] = True
        v += 1
    mask.flags.writeable = False
    return mask


# Vectorized class codes.
W_S1, W_S2, W_S3, W_P23 = 0, 1, 2, 3
WILTON_LABELS = {W_S1: S1, W_S2: S2, W_S3: S3, W_P23: P23}


@lru_cache(maxsize=4)
def wilton_codes(limit: int) -> np.ndarray:
    """Wilton class code for each prime <= limit (order matches sieve_primes)."""
    table = sieve_primes(limit)
    p = table.primes
    qr = _KRON23[p % 23]
    form = _form_values_mask(limit)
    codes = np.full(len(p), W_S2, dtype=np.uint8)
    codes[qr == -1] = W_S1
    codes[(qr == 1) & form[p]] = W_S3
    codes[p == 23] = W_P23
    codes.flags.writeable = False
    return codes


@lru_cache(maxsize=4)
def order_codes(limit: int) -> np.ndarray:
    """Multiplicative order mod 691 for each prime <= limit (0 at p = 691)."""
    table = sieve_primes(limit)
    codes = order_table_691()[table.primes % 691]
    codes.flags.writeable = False
    return codes


# ---------------------------------------------------------------------------
# Per-case classification
# ---------------------------------------------------------------------------

_QR7 = frozenset({1, 2, 4})


def classify(case, p: int) -> PrimeClassification:
    """Residue / order / Wilton label selecting p's local factor for the case."""
    tag = getattr(case, "tag", case)
    p = int(p)
    if not is_prime(p):
        raise InvalidArgumentError(f"{p} is not prime")
    if tag == "q2":
        return PrimeClassification(tag, "p=2" if p == 2 else "odd")
    if tag == "q3":
        return PrimeClassification(tag, "p=3" if p == 3 else f"{p % 3} mod 3")
    if tag == "q5":
        if p == 5:
            return PrimeClassification(tag, "p=5")
        r = p % 5
        return PrimeClassification(tag, "±2 mod 5" if r in (2, 3) else f"{r} mod 5")
    if tag == "q7":
        if p == 7:
            return PrimeClassification(tag, "p=7")
        return PrimeClassification(tag, "QR mod 7" if p % 7 in _QR7 else "QNR mod 7")
    if tag == "q23":
        return PrimeClassification(tag, wilton_class(p))
    if tag == "q691":
        nu = mult_order(p, 691)
        label = "p=691" if p == 691 else f"ord {int(nu)}"
        return PrimeClassification(tag, label, order=nu)
    if tag == "two_squares":
        if p == 2:
            return PrimeClassification(tag, "p=2")
        return PrimeClassification(tag, f"{p % 4} mod 4")
    if tag == "ones":
        return PrimeClassification(tag, "any")
    raise UnsupportedCaseError(f"unsupported case tag {tag!r}")

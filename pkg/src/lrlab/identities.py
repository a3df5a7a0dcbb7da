"""Euler-identity cross checks at real s > 1.

Each counting function's Dirichlet series T(s) factors over zeta and
L-functions:

  q3:  T^2 = zeta L(chi_-3) (1-3^-s) prod_{p=2(3)} (1-p^-2s)^-1
             prod_{p=1(3)} ((1-p^-2s)/(1-p^-3s))^2
  q5:  T^4 = (1-5^-s)^3 H zeta^3 L(chi_c) L(chi_c~) / L(chi_5)
  q7:  T^2 = zeta L(chi_-7) (1-7^-s) prod_{p=3,5,6(7)} (1-p^-2s)^-1
             prod_{p=1,2,4(7)} ((1-p^-6s)/(1-p^-7s))^2
  q23: T^2 = zeta L(chi_-23) (1-23^-s)^-1 prod_{S1} (1-p^-2s)^-1
             prod_{S2} ((1-p^-2s)/(1-p^-3s))^2
             prod_{S3} ((1-p^-22s)/(1-p^-23s))^2

Both sides are evaluated with budgets (series truncation, Euler-product
tails) and must agree within their combined budgets.

For q691 the T(s)^690 identity is checked locally: at each prime the local
factor of T to the 690th power must match the product of the right side's
local factors (zeta^689, the 690 character L-factors, and the four residual
products selected by nu(p)).
"""

from __future__ import annotations

import math

import numpy as np

from .budget import ValueWithBudget, csum
from .characters import generator_character, kronecker_character
from .errors import UnsupportedCaseError
from .lseries import _EPS, l_series_truncated, zeta_real
from .multfn import dirichlet_series_truncated, zero_period
from .primes import W_S1, W_S2, W_S3, sieve_primes, wilton_codes

__all__ = ["truncated_T", "euler_identity_sides", "local_factor_gap_q691"]


def truncated_T(case, s: float, n_terms: int) -> ValueWithBudget:
    """T(s) truncated at N, budget = integral tail bound N^(1-s)/(s-1)."""
    value = dirichlet_series_truncated(case, s, n_terms)
    tail = float(n_terms) ** (1.0 - s) / (s - 1.0)
    return ValueWithBudget(value, tail + _EPS * (abs(value) + 1.0) * 4.0)


def _euler_product(mask: np.ndarray, factors, s: float, cutoff: int) -> ValueWithBudget:
    """prod over masked primes of prod_i (1 - p^(-a_i s))^(c_i), with tail.

    ``factors`` is a sequence of (c_i, a_i).  The log-tail past the cutoff is
    bounded by sum_i |c_i| * 1.01 * cutoff^(1 - a_i s)/(a_i s - 1).
    """
    table = sieve_primes(cutoff)
    pf = table.primes[mask].astype(np.float64)
    log_parts = [c * np.log1p(-(pf ** (-a * s))) for c, a in factors]
    log_val = csum(np.concatenate(log_parts)) if log_parts else 0.0
    log_tail = sum(
        abs(c) * 1.01 * float(cutoff) ** (1.0 - a * s) / (a * s - 1.0) for c, a in factors
    )
    value = math.exp(log_val)
    return ValueWithBudget(value, value * math.expm1(log_tail + _EPS * (abs(log_val) + 1.0) * 8.0))


def euler_identity_sides(
    tag: str,
    s: float = 2.0,
    n_terms: int = 10**5,
    cutoff: int = 10**6,
    l_terms: int = 10**6,
):
    """Left and right side of the case's factorization identity, with budgets."""
    t = truncated_T(tag, s, n_terms)
    table = sieve_primes(cutoff)
    p = table.primes
    zeta = zeta_real(s)
    if tag == "q3":
        lhs = t * t
        rhs = (
            zeta
            * l_series_truncated(kronecker_character(-3), s, l_terms)
            * (1.0 - 3.0**-s)
            * _euler_product(p % 3 == 2, [(-1, 2)], s, cutoff)
            * _euler_product(p % 3 == 1, [(2, 2), (-2, 3)], s, cutoff)
        )
        return lhs, _real_vwb(rhs)
    if tag == "q7":
        lhs = t * t
        r = p % 7
        rhs = (
            zeta
            * l_series_truncated(kronecker_character(-7), s, l_terms)
            * (1.0 - 7.0**-s)
            * _euler_product((r == 3) | (r == 5) | (r == 6), [(-1, 2)], s, cutoff)
            * _euler_product((r == 1) | (r == 2) | (r == 4), [(2, 6), (-2, 7)], s, cutoff)
        )
        return lhs, _real_vwb(rhs)
    if tag == "q23":
        lhs = t * t
        codes = wilton_codes(cutoff)
        rhs = (
            zeta
            * l_series_truncated(kronecker_character(-23), s, l_terms)
            / (1.0 - 23.0**-s)
            * _euler_product(codes == W_S1, [(-1, 2)], s, cutoff)
            * _euler_product(codes == W_S2, [(2, 2), (-2, 3)], s, cutoff)
            * _euler_product(codes == W_S3, [(2, 22), (-2, 23)], s, cutoff)
        )
        return lhs, _real_vwb(rhs)
    if tag == "q5":
        lhs = t * t * t * t
        r = p % 5
        h = (
            _euler_product(r == 1, [(4, 4), (-4, 5)], s, cutoff)
            * _euler_product((r == 2) | (r == 3), [(4, 3), (-2, 2), (-3, 4)], s, cutoff)
            * _euler_product(r == 4, [(-2, 2)], s, cutoff)
        )
        l_c = l_series_truncated(generator_character(5, 2, 1), s, l_terms)
        l_5 = l_series_truncated(generator_character(5, 2, 2), s, l_terms)
        rhs = (1.0 - 5.0**-s) ** 3 * h * zeta * zeta * zeta * (l_c * l_c.conjugate()) / l_5
        return lhs, _real_vwb(rhs)
    raise UnsupportedCaseError(f"no product identity registered for {tag!r}")


def _real_vwb(v: ValueWithBudget) -> ValueWithBudget:
    val = v.value
    return ValueWithBudget(val.real if isinstance(val, complex) else val, v.budget)


def local_factor_gap_q691(s: float = 2.0, p_limit: int = 10**4) -> float:
    """Max |log LHS_p - log RHS_p| of the T(s)^690 identity over primes <= p_limit.

    LHS_p is the 690th power of T's local factor at p; RHS_p collects
    zeta^689, the character L-factors (odd powers up, even powers down),
    and the residual products selected by nu(p).
    """
    chi = generator_character(691, 3, 1)
    dlog = chi._dlog
    j = np.arange(690)
    odd_j = j % 2 == 1
    even_j = (j % 2 == 0) & (j >= 2)
    worst = 0.0
    for p in sieve_primes(p_limit).primes.tolist():
        x = float(p) ** (-s)
        m0 = zero_period("q691", p)
        if m0 == 0:  # p = 691, local factor 1/(1-x)
            lhs = -690.0 * math.log1p(-x)
        else:
            lhs = 690.0 * (
                math.log1p(-(x ** (m0 - 1))) - math.log1p(-x) - math.log1p(-(x**m0))
            )
        rhs = complex(-689.0 * math.log1p(-x))
        if p == 691:
            rhs += -math.log1p(-x)
            nu = None
        else:
            a = int(dlog[p % 691])
            z = x * np.exp(2j * np.pi * a * j / 690.0)
            logs = np.log1p(-z)
            # L(s, chi^1) and the ratio prod L(chi^(2j+1)) / L(chi^(2j))
            rhs += complex(-np.sum(logs[odd_j]) + np.sum(logs[even_j]))
            nu = 690 // math.gcd(a, 690)
        if nu is not None:
            if nu == 2:
                rhs += -345.0 * math.log1p(-(x**2))
            if nu == 1:
                rhs += 690.0 * (math.log1p(-(x**690)) - math.log1p(-(x**691)))
            if nu >= 4 and nu % 2 == 0:
                xh = x ** (nu / 2.0)
                rhs += (690.0 / nu) * (math.log1p(xh) - math.log1p(-xh))
            if 2 < nu < 691:
                rhs += 690.0 * (math.log1p(-(x ** (nu - 1))) - math.log1p(-(x**nu)))
        worst = max(worst, abs(lhs - rhs))
    return worst

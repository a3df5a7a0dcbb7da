"""Case-by-case assembly of the second-order constants and claim verdicts.

Writing the counting function's Dirichlet series as T(s) = zeta(s)^tau g(s)
with g regular past Re(s) = 1/2 gives B_f = -tau*gamma - g'(1)/g(1), and the
second-order coefficient of the counting asymptotic is

    C_2(f) = (1 - tau) (1 + B_f).

The claimed integral form of the asymptotic forces B_f = 0, so a computed
B_f bounded away from zero (beyond its error budget) refutes the claim.

Per-case B_f, from the square/fourth-power factorizations of T(s):

  two_squares: 2B = -gamma - L'/L(1,chi_-4) + log 2
                    + 2 sum_{p=3(4)} log p/(p^2-1)
  q5:  4B = -3 gamma - 2 Re L'/L(1,chi_c) + L'/L(1,chi_5) - (3/4) log 5
            + sum_{p=1(5)} log p (-16/(p^4-1) + 20/(p^5-1))
            + 4 sum_{p=4(5)} log p/(p^2-1)
            + sum_{p=+-2(5)} log p (4/(p^2-1) - 12/(p^3-1) + 12/(p^4-1))
  q7:  2B = -gamma - (log 7)/6 - L'/L(1,chi_-7)
            + 2 sum_{p QNR(7)} log p/(p^2-1)
            + sum_{p QR(7)} log p (14/(p^7-1) - 12/(p^6-1))
  q3:  2B = -gamma - L'/L(1,chi_-3) + 4 zeta'(2)/zeta(2)
            + 6 sum_{p=2(3)} log p/(p^2-1) + 6 sum_{p=1(3)} log p/(p^3-1)
       (numerically preferable rewrite; the direct form
        2B = -gamma - (log 3)/2 - L'/L + 2 sum_{p=2(3)} log p/(p^2-1)
             + sum_{p=1(3)} log p (6/(p^3-1) - 4/(p^2-1))
        is kept as a cross-check)
  q23: B = -gamma/2 - L'/L(1,chi_-23)/2 + (log 23)/44
           + sum_{S1} log p/(p^2-1)
           + sum_{(p|23)=1, p!=23} log p (3/(p^3-1) - 2/(p^2-1))
           + sum_{S3, p>23} log p (2/(p^2-1) - 3/(p^3-1)
                                   + 23/(p^23-1) - 22/(p^22-1))
  q691: B ~ (log 691)/690^2 - (689/690) gamma
            - (1/690) sum_{j=0}^{344} L'/L(1, chi_c^(2j+1))
            + (1/690) sum_{j=1}^{344} L'/L(1, chi_c^(2j)),
        with the four residual Euler products of the T(s)^690 identity
        contributing less than 1e-5 in absolute value (checked numerically
        by omitted_products_bound).

First-order constants: the two-squares leading constant
K = 2^(-1/2) prod_{p=3(4)} (1 - p^-2)^(-1/2), and for q5
C = Gamma(3/4)^(-1) (64 L(1,chi_c) L(1,chi_c~) / (125 L(1,chi_5)))^(1/4) D
  = (4/(5 Gamma(3/4))) (pi^2 / (2 sqrt5 log((3+sqrt5)/2)))^(1/4) D,
evaluated both ways and required to agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .budget import ValueWithBudget, csum
from .characters import generator_character, kronecker_character
from .errors import ConsistencyError, PreconditionError, UnsupportedCaseError
from .lseries import (
    _EPS,
    euler_gamma_value,
    l_derivative_at_1,
    prime_log_sum,
    prime_tail_bound,
    zeta_log_derivative_at_2,
)
from .multfn import TABLE_CASES, get_case, h_f
from .primes import W_S1, W_S3, kronecker_symbol, order_codes, sieve_primes, wilton_codes

__all__ = [
    "ConstantReport",
    "CLAIM_FALSE",
    "INCONCLUSIVE",
    "OMITTED_ALLOWANCE",
    "TABLE1_PRINTED",
    "second_order_constant",
    "q3_direct_b",
    "b691_approx",
    "b691_character_sums",
    "omitted_products_bound",
    "landau_ramanujan_K",
    "first_order_C5",
    "verdict",
    "table1",
]

CLAIM_FALSE = "CLAIM_FALSE"
INCONCLUSIVE = "INCONCLUSIVE"

# Allowance for the four residual products omitted from the q691 formula.
OMITTED_ALLOWANCE = 1e-5

# Published reference table (truncated decimals as printed), used by reports
# and the verification gate: H(1e5), H(1e6), B_f, C_2, claimed C_2.
TABLE1_PRINTED = {
    "two_squares": (+0.163, +0.162, +0.1638, 0.5819, Fraction(1, 2)),
    "q5": (-0.401, -0.400, -0.3995, 0.1501, Fraction(1, 4)),
    "q7": (-0.232, -0.232, -0.2316, 0.3841, Fraction(1, 2)),
    "q3": (-0.532, -0.534, -0.5349, 0.2325, Fraction(1, 2)),
    "q691": (-0.571, -0.571, -0.5717, 0.0006, Fraction(1, 690)),
    "q23": (-0.217, -0.217, -0.2166, 0.6083, Fraction(1, 2)),
}


@dataclass(frozen=True)
class ConstantReport:
    """Per-case record: density, B_f, C_2, checkpoints, and the verdict."""

    case: str
    tau: Fraction
    delta: Fraction
    b_f: ValueWithBudget
    c2: ValueWithBudget
    c2_ramanujan: Fraction
    h_checkpoints: tuple  # ((x, H_f(x) as ValueWithBudget), ...)
    verdict: str | None = None
    first_order: ValueWithBudget | None = None
    lambda_c2: ValueWithBudget | None = None  # q3 companion C_2(l) = C_2(t) - log(3)/2
    c2_printed_reference: float | None = None  # q23: the printed 0.6083
    notes: tuple = ()


def _l_ratio(chi, depth: float) -> ValueWithBudget:
    """L'(1, chi) / L(1, chi) with budget."""
    return l_derivative_at_1(chi, 1, depth) / l_derivative_at_1(chi, 0, depth)


def _real(v: ValueWithBudget) -> ValueWithBudget:
    return ValueWithBudget(v.value.real if isinstance(v.value, complex) else v.value, v.budget)


@lru_cache(maxsize=64)
def _masks(tag: str, cutoff: int):
    """Class masks over sieve_primes(cutoff).primes for the B_f prime sums."""
    p = sieve_primes(cutoff).primes
    if tag == "two_squares":
        return {"3mod4": p % 4 == 3}
    if tag == "q5":
        r = p % 5
        return {"r1": r == 1, "r4": r == 4, "r23": (r == 2) | (r == 3)}
    if tag == "q7":
        r = p % 7
        return {"qr": (r == 1) | (r == 2) | (r == 4), "qnr": (r == 3) | (r == 5) | (r == 6)}
    if tag == "q3":
        r = p % 3
        return {"r1": r == 1, "r2": r == 2}
    if tag == "q23":
        codes = wilton_codes(cutoff)
        s3 = codes == W_S3
        return {"s1": codes == W_S1, "qr": (_KRON23V[p % 23] == 1) & (p != 23), "s3": s3}
    raise UnsupportedCaseError(tag)


_KRON23V = np.array([kronecker_symbol(r, 23) for r in range(23)], dtype=np.int8)


def _b_two_squares(cutoff: int, depth: float) -> ValueWithBudget:
    g = euler_gamma_value(depth)
    ratio = _real(_l_ratio(kronecker_character(-4), depth))
    s = prime_log_sum(_masks("two_squares", cutoff)["3mod4"], 2, cutoff)
    return (-g - ratio + math.log(2.0) + 2.0 * s) / 2.0


def _b_q5(cutoff: int, depth: float) -> ValueWithBudget:
    g = euler_gamma_value(depth)
    chi_c = generator_character(5, 2, 1)
    chi_5 = generator_character(5, 2, 2)
    ratio_c = _real(_l_ratio(chi_c, depth))  # 2 Re(L'/L) enters the formula
    ratio_5 = _real(_l_ratio(chi_5, depth))
    m = _masks("q5", cutoff)
    a1 = (
        -16.0 * prime_log_sum(m["r1"], 4, cutoff)
        + 20.0 * prime_log_sum(m["r1"], 5, cutoff)
        + 4.0 * prime_log_sum(m["r4"], 2, cutoff)
    )
    a2 = (
        4.0 * prime_log_sum(m["r23"], 2, cutoff)
        - 12.0 * prime_log_sum(m["r23"], 3, cutoff)
        + 12.0 * prime_log_sum(m["r23"], 4, cutoff)
    )
    four_b = -3.0 * g - 2.0 * ratio_c + ratio_5 - 0.75 * math.log(5.0) + a1 + a2
    return four_b / 4.0


def _b_q7(cutoff: int, depth: float) -> ValueWithBudget:
    g = euler_gamma_value(depth)
    ratio = _real(_l_ratio(kronecker_character(-7), depth))
    m = _masks("q7", cutoff)
    two_b = (
        -g
        - math.log(7.0) / 6.0
        - ratio
        + 2.0 * prime_log_sum(m["qnr"], 2, cutoff)
        + 14.0 * prime_log_sum(m["qr"], 7, cutoff)
        - 12.0 * prime_log_sum(m["qr"], 6, cutoff)
    )
    return two_b / 2.0


def _b_q3(cutoff: int, depth: float) -> ValueWithBudget:
    """The zeta'(2)/zeta(2) rewrite (numerically preferable)."""
    g = euler_gamma_value(depth)
    ratio = _real(_l_ratio(kronecker_character(-3), depth))
    m = _masks("q3", cutoff)
    two_b = (
        6.0 * prime_log_sum(m["r2"], 2, cutoff)
        + 4.0 * zeta_log_derivative_at_2(cutoff)
        - ratio
        - g
        + 6.0 * prime_log_sum(m["r1"], 3, cutoff)
    )
    return two_b / 2.0


def q3_direct_b(cutoff: int = 10**7, depth: float = 1.0) -> ValueWithBudget:
    """The direct q3 assembly (no zeta rewrite), kept as a cross-check."""
    g = euler_gamma_value(depth)
    ratio = _real(_l_ratio(kronecker_character(-3), depth))
    m = _masks("q3", cutoff)
    two_b = (
        -g
        - math.log(3.0) / 2.0
        - ratio
        + 2.0 * prime_log_sum(m["r2"], 2, cutoff)
        + 6.0 * prime_log_sum(m["r1"], 3, cutoff)
        - 4.0 * prime_log_sum(m["r1"], 2, cutoff)
    )
    return two_b / 2.0


def _b_q23(cutoff: int, depth: float) -> ValueWithBudget:
    g = euler_gamma_value(depth)
    ratio = _real(_l_ratio(kronecker_character(-23), depth))
    m = _masks("q23", cutoff)
    return (
        -0.5 * g
        - 0.5 * ratio
        + math.log(23.0) / 44.0
        + prime_log_sum(m["s1"], 2, cutoff)
        + 3.0 * prime_log_sum(m["qr"], 3, cutoff)
        - 2.0 * prime_log_sum(m["qr"], 2, cutoff)
        + 2.0 * prime_log_sum(m["s3"], 2, cutoff)
        - 3.0 * prime_log_sum(m["s3"], 3, cutoff)
        + 23.0 * prime_log_sum(m["s3"], 23, cutoff)
        - 22.0 * prime_log_sum(m["s3"], 22, cutoff)
    )


# ---------------------------------------------------------------------------
# q = 691: character sums and the residual-products check
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _l_ratios_691(depth: float):
    """L'/L(1, chi_c^j) for j = 1..689 (chi_c(3) = exp(2 pi i / 690)).

    With residues reordered by discrete log base 3, the 690 character sums
    are a single inverse DFT of the gamma_k vectors.
    """
    from .lseries import _gamma_batch

    g0, b0 = _gamma_batch(691, 0, depth)
    g1, b1 = _gamma_batch(691, 1, depth)
    chi = generator_character(691, 3, 1)
    dlog = chi._dlog  # dlog[r] for r=1..690; r=0 excluded
    seq0 = np.zeros(690)
    seq1 = np.zeros(690)
    for r in range(1, 691):
        a = int(dlog[r])
        seq0[a] = g0[r - 1]
        seq1[a] = g1[r - 1]
    # L(1, chi^j)  =  sum_a e^(2 pi i j a / 690) gamma_0(3^a)
    l0 = 690.0 * np.fft.ifft(seq0)
    l1 = -690.0 * np.fft.ifft(seq1)
    bud_l0 = float(np.sum(b0[:-1])) + _EPS * float(np.sum(np.abs(seq0))) * 16.0
    bud_l1 = float(np.sum(b1[:-1])) + _EPS * float(np.sum(np.abs(seq1))) * 16.0
    ratios = l1[1:] / l0[1:]  # j = 1..689
    rb = (bud_l1 + np.abs(ratios) * bud_l0) / (np.abs(l0[1:]) - bud_l0)
    return ratios, rb


def b691_character_sums(depth: float = 1.0) -> tuple[ValueWithBudget, ValueWithBudget]:
    """The odd- and even-character sums of L'/L(1, chi_c^j) mod 691."""
    ratios, rb = _l_ratios_691(depth)
    # index i holds j = i + 1
    odd = ratios[0::2]  # j = 1, 3, ..., 689  (345 terms)
    even = ratios[1::2]  # j = 2, 4, ..., 688  (344 terms)
    odd_b = rb[0::2]
    even_b = rb[1::2]
    odd_sum = complex(csum(odd.real), csum(odd.imag))
    even_sum = complex(csum(even.real), csum(even.imag))
    return (
        ValueWithBudget(odd_sum, float(np.sum(odd_b))),
        ValueWithBudget(even_sum, float(np.sum(even_b))),
    )


def b691_approx(depth: float = 1.0) -> ValueWithBudget:
    """B_f for q = 691 from the character-sum formula.

    B ~ (log 691)/690^2 - (689/690) gamma - odd_sum/690 + even_sum/690,
    budget = component budgets + the 1e-5 residual-products allowance.
    """
    odd, even = b691_character_sums(depth)
    g = euler_gamma_value(depth)
    b = (
        math.log(691.0) / 690.0**2
        - (689.0 / 690.0) * g
        - _real(odd) / 690.0
        + _real(even) / 690.0
    )
    return b.widened(OMITTED_ALLOWANCE)


def omitted_products_bound(cutoff: int = 10**7) -> ValueWithBudget:
    """Contribution to B_f(q691) of the four residual products, with tail.

    Per prime class (nu = order of p mod 691):
      nu = 2 (p = -1 mod 691):  + log p/(p^2 - 1)
      nu = 1 (p = +1 mod 691):  - 690 log p/(p^690 - 1) + 691 log p/(p^691 - 1)
      nu even, >= 4:            + log p/(p^(nu/2) - p^(-nu/2))
      2 < nu < 691:             - (nu-1) log p/(p^(nu-1) - 1) + nu log p/(p^nu - 1)
    """
    cutoff = int(cutoff)
    if cutoff < 7481:
        raise PreconditionError(f"cutoff must be >= 7481, got {cutoff}")
    table = sieve_primes(cutoff)
    p = table.primes.astype(np.float64)
    logs = table.logs
    nu = order_codes(cutoff).astype(np.float64)
    terms = []
    with np.errstate(over="ignore"):
        m = nu == 2.0
        terms.append(logs[m] / (p[m] ** 2 - 1.0))
        m = nu == 1.0
        ppow = p[m] ** 690.0
        terms.append(-690.0 * logs[m] / (ppow - 1.0) + 691.0 * logs[m] / (ppow * p[m] - 1.0))
        m = (nu >= 4.0) & (nu % 2.0 == 0.0)
        ph = p[m] ** (nu[m] / 2.0)
        terms.append(logs[m] / (ph - 1.0 / ph))
        m = (nu >= 3.0) & (nu <= 690.0)
        pm1 = p[m] ** (nu[m] - 1.0)
        terms.append(-(nu[m] - 1.0) * logs[m] / (pm1 - 1.0) + nu[m] * logs[m] / (pm1 * p[m] - 1.0))
    flat = np.concatenate(terms)
    flat = flat[np.isfinite(flat)]
    value = csum(flat)
    budget = 4.0 * prime_tail_bound(2, float(cutoff)) + _EPS * float(np.sum(np.abs(flat))) * 4.0
    return ValueWithBudget(value, budget)


# ---------------------------------------------------------------------------
# First-order constants
# ---------------------------------------------------------------------------

def landau_ramanujan_K(cutoff: int = 10**7) -> ValueWithBudget:
    """K = 2^(-1/2) prod_{p = 3 (4)} (1 - p^-2)^(-1/2), truncated with tail."""
    cutoff = int(cutoff)
    if cutoff < 2:
        raise PreconditionError("cutoff must be >= 2")
    table = sieve_primes(cutoff)
    p = table.primes.astype(np.float64)
    m = table.primes % 4 == 3
    log_k = -0.5 * math.log(2.0) - 0.5 * csum(np.log1p(-1.0 / p[m] ** 2))
    value = math.exp(log_k)
    # |log tail| <= 0.51 sum_{p > x} p^-2 <= 0.51/x  (plus rounding)
    log_budget = 0.51 / cutoff + _EPS * abs(log_k) * 8.0
    return ValueWithBudget(value, value * math.expm1(log_budget))


def first_order_C5(cutoff: int = 10**7, depth: float = 1.0) -> ValueWithBudget:
    """First-order constant for the q5 count, computed by both expressions.

    Both the L-value form and the fully closed form are evaluated; they must
    agree within combined budgets (ConsistencyError otherwise).  Returns the
    L-value form.
    """
    cutoff = int(cutoff)
    if cutoff < 7481:
        raise PreconditionError(f"cutoff must be >= 7481, got {cutoff}")
    table = sieve_primes(cutoff)
    pf = table.primes.astype(np.float64)
    r = table.primes % 5
    m1 = r == 1
    m23 = (r == 2) | (r == 3)
    m4 = r == 4
    log_d = csum(
        np.concatenate(
            [
                np.log1p(-pf[m1] ** -4.0) - np.log1p(-pf[m1] ** -5.0),
                np.log1p(-pf[m23] ** -3.0)
                - 0.5 * np.log1p(-pf[m23] ** -2.0)
                - 0.75 * np.log1p(-pf[m23] ** -4.0),
                -0.5 * np.log1p(-pf[m4] ** -2.0),
            ]
        )
    )
    d_val = math.exp(log_d)
    d = ValueWithBudget(d_val, d_val * math.expm1(1.2 / cutoff + _EPS * abs(log_d) * 8.0))

    chi_c = generator_character(5, 2, 1)
    chi_5 = generator_character(5, 2, 2)
    l_c = l_derivative_at_1(chi_c, 0, depth)
    l_pair = _real(l_c * l_c.conjugate())
    l_5 = _real(l_derivative_at_1(chi_5, 0, depth))
    inner = 64.0 * l_pair / (125.0 * l_5)
    quarter = _vwb_pow(inner, 0.25)
    gamma34 = math.gamma(0.75)
    c_lvalue = quarter * d / gamma34

    pref_closed = (4.0 / (5.0 * gamma34)) * (
        math.pi**2 / (2.0 * math.sqrt(5.0) * math.log((3.0 + math.sqrt(5.0)) / 2.0))
    ) ** 0.25
    c_closed = pref_closed * d

    if not c_lvalue.agrees_with(c_closed):
        raise ConsistencyError(
            f"first-order q5 expressions disagree: {c_lvalue} vs {c_closed}"
        )
    return c_lvalue


def _vwb_pow(v: ValueWithBudget, a: float) -> ValueWithBudget:
    x = v.value.real if isinstance(v.value, complex) else v.value
    if x <= 0 or v.budget >= x:
        raise ConsistencyError("power of a non-positive or unresolved value")
    val = x**a
    lo, hi = (x - v.budget) ** a, (x + v.budget) ** a
    return ValueWithBudget(val, max(hi - val, val - lo))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

_B_ASSEMBLY = {
    "two_squares": _b_two_squares,
    "q5": _b_q5,
    "q7": _b_q7,
    "q3": _b_q3,
    "q23": _b_q23,
}


@lru_cache(maxsize=32)
def second_order_constant(
    case: str,
    prime_cutoff: int = 10**7,
    depth: float = 1.0,
    hf_checkpoints: tuple = (10**5, 10**6),
) -> ConstantReport:
    """Assemble B_f, C_2 = (1 - tau)(1 + B_f), and H_f checkpoints for a case."""
    spec = get_case(case)
    tag = spec.tag
    if tag in ("q2", "ones"):
        raise UnsupportedCaseError(f"{tag} has an exact count; no second-order constant")
    if prime_cutoff < 7481:
        raise PreconditionError(f"prime_cutoff must be >= 7481, got {prime_cutoff}")

    if tag == "q691":
        b = b691_approx(depth)
    else:
        b = _B_ASSEMBLY[tag](int(prime_cutoff), depth)
    c2 = float(1 - spec.tau) * (1.0 + b)

    checkpoints = tuple((int(x), h_f(spec, float(x))) for x in hf_checkpoints)

    first_order = None
    lambda_c2 = None
    printed_ref = None
    notes: tuple = ()
    if tag == "two_squares":
        first_order = landau_ramanujan_K(int(prime_cutoff))
    elif tag == "q5":
        first_order = first_order_C5(int(prime_cutoff), depth)
    elif tag == "q3":
        lambda_c2 = c2 - 0.5 * math.log(3.0)
        notes = (
            "companion partition count: C2(lambda) = C2 - log(3)/2, compared to 1/2",
        )
    elif tag == "q23":
        printed_ref = float(TABLE1_PRINTED["q23"][3])
        notes = (
            "printed reference table lists C2 = 0.6083, inconsistent with "
            "C2 = (1-tau)(1+B_f) applied to its own B_f = -0.2166 (which gives "
            "0.3917); the identity value is reported",
        )
    elif tag == "q691":
        notes = (
            "printed reference table lists H_f(1e6) = -0.571, but the defining "
            "sum evaluates to -0.5721 (cross-checked against the von Mangoldt "
            "sum plus the explicit correction over the 105 primes = -1 mod 691 "
            "below 1e6); the computed value is reported",
        )

    return ConstantReport(
        case=tag,
        tau=spec.tau,
        delta=spec.delta,
        b_f=b,
        c2=c2,
        c2_ramanujan=spec.delta,
        h_checkpoints=checkpoints,
        first_order=first_order,
        lambda_c2=lambda_c2,
        c2_printed_reference=printed_ref,
        notes=notes,
    )


def verdict(report: ConstantReport) -> ConstantReport:
    """CLAIM_FALSE iff the computed C_2 differs from the claimed value
    by more than its budget (equivalently, B_f is not zero within budget)."""
    gap = abs(report.c2.value - float(report.c2_ramanujan))
    v = CLAIM_FALSE if gap > report.c2.budget else INCONCLUSIVE
    return replace(report, verdict=v)


def table1(
    prime_cutoff: int = 10**7,
    hf_checkpoints: tuple = (10**5, 10**6),
    depth: float = 1.0,
    cases=None,
    threads: int | None = None,
) -> list[ConstantReport]:
    """The six-row summary: one verdict-carrying report per case."""
    tags = list(cases) if cases else list(TABLE_CASES)
    for t in tags:
        if t not in TABLE_CASES:
            raise UnsupportedCaseError(f"{t!r} is not a summary-table case")
    sieve_primes(int(prime_cutoff))  # warm the shared table before any fan-out
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=int(threads)) as pool:
            reports = list(
                pool.map(
                    lambda t: verdict(
                        second_order_constant(t, int(prime_cutoff), depth, tuple(hf_checkpoints))
                    ),
                    tags,
                )
            )
        return reports
    return [
        verdict(second_order_constant(t, int(prime_cutoff), depth, tuple(hf_checkpoints)))
        for t in tags
    ]

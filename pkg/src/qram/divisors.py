"""Exact divisor-sum arithmetic over the rationals.

Three divisor-sum flavors, all exact Fractions:

    sigma_s(n)       = sum of d^s over divisors d of n
    sigma~_s(n)      = sum of (-1)^(d-1) d^s        (sign by divisor parity)
    sigma^_s(n)      = sum of (-1)^(n/d-1) d^s      (sign by codivisor parity,
                                                     equivalently the odd-divisor sum)

Convention: every flavor is 0 when n is negative or not an integer, which makes
expressions like sigma_s(n/2) uniform. At n = 0 the classical rational boundary
values apply (sigma_3(0) = 1/240 and friends); these are a closed table, looked
up with boundary_value, never silently assumed.

convolution() is the brute-force oracle for the convolution identities: a literal
sum over all compositions i_1 + ... + i_k = n of products of divisor sums, using
the boundary values at argument 0.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache, reduce


class DivisorKind(enum.Enum):
    """Which sign pattern a divisor sum carries."""

    PLAIN = "plain"
    TILDE = "tilde"
    HAT = "hat"


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Signed Bernoulli number B_n, with B_1 = -1/2.

    Standard recurrence from x/(e^x - 1) = sum B_n x^n / n!:
    B_0 = 1 and sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    """
    if n < 0:
        raise ValueError("bernoulli: n must be nonnegative")
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


# The classical boundary values at n = 0, per flavor and weight. A closed table:
# each constant is pinned by the convolution identities that use it, and callers
# must not extrapolate silently (see extrapolated_boundary for the plain pattern).
_BOUNDARY = {
    (DivisorKind.PLAIN, 3): Fraction(1, 240),
    (DivisorKind.PLAIN, 5): Fraction(-1, 504),
    (DivisorKind.PLAIN, 7): Fraction(1, 480),
    (DivisorKind.TILDE, 1): Fraction(1, 8),
    (DivisorKind.TILDE, 3): Fraction(-1, 16),
    (DivisorKind.TILDE, 5): Fraction(1, 8),
    (DivisorKind.HAT, 1): Fraction(1, 24),
}


def boundary_value(kind: DivisorKind, s: int) -> Fraction:
    """The rational value assigned to a divisor sum at n = 0.

    Raises LookupError for pairs outside the closed table.
    """
    try:
        return _BOUNDARY[(kind, s)]
    except KeyError:
        raise LookupError(
            f"no boundary value defined for ({kind.value}, s={s})"
        ) from None


def extrapolated_boundary(s: int) -> Fraction:
    """-B_{s+1}/(2(s+1)) for odd s: the pattern behind the plain table entries.

    Documented helper only; the identity suite uses boundary_value's table.
    """
    if s < 1 or s % 2 == 0:
        raise ValueError("extrapolated_boundary: s must be a positive odd integer")
    k2 = s + 1  # 2k
    return -bernoulli(k2) / (2 * k2)


def _divisors(n: int) -> list[int]:
    # trial division to sqrt(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def _divisor_sum_positive(kind: DivisorKind, s: int, n: int) -> int:
    total = 0
    for d in _divisors(n):
        term = d**s
        if kind is DivisorKind.TILDE and d % 2 == 0:
            term = -term
        elif kind is DivisorKind.HAT and (n // d) % 2 == 0:
            term = -term
        total += term
    return total


def divisor_sum(kind: DivisorKind, s: int, n) -> Fraction:
    """sigma_s(n) in the requested flavor; Fraction-valued.

    n may be an int or Fraction. Non-integer or negative n gives 0; n = 0 gives
    the boundary value (LookupError if the pair has none).
    """
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return Fraction(0)
        n = int(n)
    if n < 0:
        return Fraction(0)
    if n == 0:
        return boundary_value(kind, s)
    return Fraction(_divisor_sum_positive(kind, s, n))


def divisor_sum_table(kind: DivisorKind, s: int, n_max: int) -> list[Fraction]:
    """[sigma_s(0..n_max)] with a sieve; index 0 holds 0, not the boundary value.

    O(n_max log n_max), for dense consumers (Lambert coefficients, bulk property
    checks). Pointwise values agree with divisor_sum for n >= 1.
    """
    table = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        ds = d**s
        if kind is DivisorKind.TILDE and d % 2 == 0:
            ds = -ds
        for m in range(d, n_max + 1, d):
            if kind is DivisorKind.HAT and (m // d) % 2 == 0:
                table[m] -= ds
            else:
                table[m] += ds
    return [Fraction(v) for v in table]


def _term_sequence(kind: DivisorKind, s: int, n_max: int) -> tuple[list[int], int]:
    """Integer-scaled values (D*sigma_s(0), sigma_s(1), ... scaled by D) for one
    convolution factor, plus the denominator D cleared from the boundary term."""
    b = boundary_value(kind, s)
    den = b.denominator
    seq = [b.numerator]
    table = divisor_sum_table(kind, s, n_max)
    seq.extend(den * int(table[i]) for i in range(1, n_max + 1))
    return seq, den


def convolution(terms: list[tuple[DivisorKind, int]], n: int) -> Fraction:
    """Brute-force k-fold convolution at a single n.

    sum over all (i_1, ..., i_k) with i_j >= 0 and i_1 + ... + i_k = n of
    prod_j sigma_{s_j}(i_j), with boundary values at 0. Literal enumeration;
    this IS the oracle the convolution identities are checked against.
    """
    if not terms:
        raise ValueError("convolution: empty term list")
    if n < 0:
        raise ValueError("convolution: n must be nonnegative")

    def fold(rest: list[tuple[DivisorKind, int]], m: int) -> Fraction:
        kind, s = rest[0]
        if len(rest) == 1:
            return divisor_sum(kind, s, m)
        total = Fraction(0)
        for i in range(m + 1):
            total += divisor_sum(kind, s, i) * fold(rest[1:], m - i)
        return total

    return fold(list(terms), n)


def convolution_sequence(
    terms: list[tuple[DivisorKind, int]], n_max: int
) -> list[Fraction]:
    """Values of convolution(terms, n) for all n = 0..n_max, in one pass.

    Clears the boundary-term denominators so the Cauchy folds run on plain
    integers, then divides once. Agrees entrywise with convolution().
    """
    if not terms:
        raise ValueError("convolution_sequence: empty term list")
    seqs_dens = [_term_sequence(kind, s, n_max) for kind, s in terms]
    acc = seqs_dens[0][0]
    for seq, _ in seqs_dens[1:]:
        nxt = [0] * (n_max + 1)
        for i, a in enumerate(acc):
            if a == 0:
                continue
            for j in range(n_max + 1 - i):
                nxt[i + j] += a * seq[j]
        acc = nxt
    den = reduce(lambda x, y: x * y, (d for _, d in seqs_dens), 1)
    return [Fraction(v, den) for v in acc]

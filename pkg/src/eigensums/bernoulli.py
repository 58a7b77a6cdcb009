"""Bernoulli numbers and polynomials over exact rationals.

The number cache uses the convention B_1 = -1/2 and grows monotonically
through the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0.  Values are
reduced mod p only at the very end, and only when the von Staudt-Clausen
guard (index <= p-2) certifies that p cannot appear in a denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from threading import Lock

from .exactnum import Residue, mod_reduce


class IndexTooLarge(ValueError):
    """B_m(x) mod p requested with m >= p-1, where denominators may contain p."""


# Shared append-only cache of B_0, B_1, ...; extension is serialised so
# concurrent readers always observe a consistent prefix.
_numbers: list[Fraction] = [Fraction(1)]
_numbers_lock = Lock()


def bernoulli_numbers(m: int) -> list[Fraction]:
    """Exact values B_0..B_m (inclusive)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    with _numbers_lock:
        while len(_numbers) <= m:
            k = len(_numbers)
            acc = Fraction(0)
            for j in range(k):
                acc += comb(k + 1, j) * _numbers[j]
            _numbers.append(-acc / (k + 1))
        return _numbers[: m + 1]


def bernoulli_number(m: int) -> Fraction:
    """The single value B_m."""
    return bernoulli_numbers(m)[m]


@lru_cache(maxsize=None)
def bernoulli_poly_eval(m: int, x: Fraction) -> Fraction:
    """B_m(x) = sum_k C(m, k) B_k x^(m-k), exactly."""
    if m < 0:
        raise ValueError("m must be >= 0")
    x = Fraction(x)
    numbers = bernoulli_numbers(m)
    total = Fraction(0)
    xpow = Fraction(1)
    for k in range(m, -1, -1):
        total += comb(m, k) * numbers[k] * xpow
        xpow *= x
    return total


def bernoulli_value_mod(m: int, x: Fraction, p: int) -> Residue:
    """B_m(x) reduced mod p.

    Requires m <= p-2: by von Staudt-Clausen a B_k with (p-1) | k could
    carry p in its denominator, so larger indices are rejected outright.
    """
    if m >= p - 1:
        raise IndexTooLarge(f"B_{m}(x) mod {p} needs m <= {p - 2}")
    return mod_reduce(bernoulli_poly_eval(m, Fraction(x)), p, 1)


def check_bernoulli_identities(m: int, a: int, x: Fraction) -> bool:
    """True iff the reflection and multiplication identities hold at (m, a, x).

    Reflection: B_m(1-x) = (-1)^m B_m(x).
    Multiplication: B_m(a*x) = a^(m-1) * sum_{k<a} B_m(x + k/a).
    """
    if m < 0 or a < 1:
        raise ValueError("need m >= 0 and a >= 1")
    x = Fraction(x)
    reflection = bernoulli_poly_eval(m, 1 - x) == (-1) ** m * bernoulli_poly_eval(m, x)
    spread = sum(bernoulli_poly_eval(m, x + Fraction(k, a)) for k in range(a))
    multiplication = bernoulli_poly_eval(m, a * x) == Fraction(a) ** (m - 1) * spread
    return reflection and multiplication

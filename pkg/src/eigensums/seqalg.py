"""Sequences, the binomial transform, and eigenspace classification.

The transform T(a)_n = sum_k C(n,k) (-1)^k a_k is an involution, so every
sequence splits into a part it fixes (the "plus" eigenspace) and a part it
negates (the "minus" eigenspace).  This module provides the transform over
exact rationals, a catalogue of builtin sequences, classification against
a finite horizon, and the second-order recurrence family a_{k+1} = a_k +
c*a_{k-1} (a_0 = 0) together with its closed form in Q(sqrt(1+4c)).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .bernoulli import bernoulli_numbers

__all__ = [
    "BUILTIN_NAMES",
    "DEFAULT_HORIZON",
    "EigenKind",
    "EigenClass",
    "SequenceSpec",
    "ClosedFormData",
    "QuadExt",
    "ZeroCNegativeIndex",
    "binom",
    "binomial_transform_prefix",
    "classify_prefix",
    "classify_eigenspace",
    "shift_weight_map",
    "second_order_terms",
]

# Large enough to catch any plausible misclassification while keeping the
# exact transform instant.
DEFAULT_HORIZON = 48


class ZeroCNegativeIndex(ValueError):
    """Negative recurrence indices requested with c = 0 (no inverse exists)."""


def binom(n: int, k: int) -> int:
    """C(n, k) for any integer n and k >= 0, generalised to negative n."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def binomial_transform_prefix(a: Sequence[Fraction | int]) -> list[Fraction]:
    """T(a)_n = sum_{k<=n} C(n,k) (-1)^k a_k for every n covered by the input."""
    vals = [Fraction(x) for x in a]
    if not vals:
        raise ValueError("need at least one term")
    out: list[Fraction] = []
    for n in range(len(vals)):
        acc = Fraction(0)
        for k in range(n + 1):
            acc += (-1) ** k * comb(n, k) * vals[k]
        out.append(acc)
    return out


class EigenKind(Enum):
    PLUS = "plus"
    MINUS = "minus"
    NEITHER = "neither"


@dataclass(frozen=True, slots=True)
class EigenClass:
    """Outcome of an eigenspace check, valid up to the stated horizon."""

    kind: EigenKind
    horizon: int


def classify_prefix(a: Sequence[Fraction | int]) -> EigenKind:
    """Compare T(a) against +a and -a exactly over the given prefix."""
    vals = [Fraction(x) for x in a]
    transformed = binomial_transform_prefix(vals)
    if transformed == vals:
        return EigenKind.PLUS
    if transformed == [-x for x in vals]:
        return EigenKind.MINUS
    return EigenKind.NEITHER


_LEGENDRE3 = (0, 1, -1)  # Legendre symbol (k|3) indexed by k mod 3

BUILTIN_NAMES = (
    "step",
    "fibonacci",
    "lucas",
    "half_power",
    "signed_bernoulli",
    "weighted_catalan",
    "legendre3_signed",
    "power2_alt",
)


def _builtin_terms(name: str, n_max: int) -> list[Fraction]:
    if name == "step":
        return [Fraction(0)] + [Fraction(1)] * n_max
    if name == "fibonacci":
        out = [0, 1]
        while len(out) <= n_max:
            out.append(out[-1] + out[-2])
        return [Fraction(x) for x in out[: n_max + 1]]
    if name == "lucas":
        out = [2, 1]
        while len(out) <= n_max:
            out.append(out[-1] + out[-2])
        return [Fraction(x) for x in out[: n_max + 1]]
    if name == "half_power":
        return [Fraction(1, 2**k) for k in range(n_max + 1)]
    if name == "signed_bernoulli":
        return [(-1) ** k * b for k, b in enumerate(bernoulli_numbers(n_max))]
    if name == "weighted_catalan":
        # (n+1) * Catalan(n) / 4^n collapses to the central binomial over 4^n.
        return [Fraction(comb(2 * k, k), 4**k) for k in range(n_max + 1)]
    if name == "legendre3_signed":
        return [Fraction((-1) ** (k - 1) * _LEGENDRE3[k % 3]) for k in range(n_max + 1)]
    if name == "power2_alt":
        return [Fraction(2**k - (-1) ** k) for k in range(n_max + 1)]
    raise ValueError(f"unknown builtin sequence {name!r}")


@dataclass(frozen=True, slots=True)
class SequenceSpec:
    """A description of a sequence: a builtin by name, or a second-order
    recurrence a_{k+1} = a_k + c*a_{k-1} with a_0 = 0 and the given a_1."""

    kind: str  # "builtin" | "second_order"
    name: str | None = None
    c: int | None = None
    a1: Fraction | None = None

    @classmethod
    def builtin(cls, name: str) -> SequenceSpec:
        if name not in BUILTIN_NAMES:
            raise ValueError(f"unknown builtin sequence {name!r}")
        return cls(kind="builtin", name=name)

    @classmethod
    def second_order(cls, c: int, a1: Fraction | int = 1) -> SequenceSpec:
        return cls(kind="second_order", c=int(c), a1=Fraction(a1))

    def describe(self) -> str:
        if self.kind == "builtin":
            return str(self.name)
        return f"second_order(c={self.c},a1={self.a1})"

    def terms(self, n_max: int) -> tuple[Fraction, ...]:
        """Exact terms a_0..a_{n_max}."""
        return _terms_cached(self, n_max)


@lru_cache(maxsize=256)
def _terms_cached(spec: SequenceSpec, n_max: int) -> tuple[Fraction, ...]:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if spec.kind == "builtin":
        return tuple(_builtin_terms(spec.name, n_max))
    return tuple(second_order_terms(spec.c, spec.a1, 0, n_max))


def classify_eigenspace(a: SequenceSpec, horizon: int = DEFAULT_HORIZON) -> EigenClass:
    """Classify the sequence against the transform up to the horizon."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    return _classify_cached(a, horizon)


@lru_cache(maxsize=256)
def _classify_cached(a: SequenceSpec, horizon: int) -> EigenClass:
    return EigenClass(classify_prefix(a.terms(horizon)), horizon)


def shift_weight_map(a: SequenceSpec, horizon: int) -> list[Fraction]:
    """The prefix of n * a_{n-1}, which swaps eigenspaces (plus <-> minus)."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    terms = a.terms(horizon - 1)
    return [Fraction(0)] + [n * terms[n - 1] for n in range(1, horizon + 1)]


def second_order_terms(
    c: int, a1: Fraction | int, k_min: int, k_max: int
) -> list[Fraction]:
    """Terms a_{k_min}..a_{k_max} of the recurrence a_{k+1} = a_k + c*a_{k-1}.

    a_0 = 0 and a_1 is given; negative indices extend the sequence by
    a_{-k} = -a_k * (-c)^{-k}, which requires c != 0.
    """
    if k_min > k_max:
        raise ValueError("k_min must be <= k_max")
    if k_min < 0 and c == 0:
        raise ZeroCNegativeIndex("negative indices need c != 0")
    a1 = Fraction(a1)
    fwd = [Fraction(0), a1]
    for _ in range(max(k_max, -k_min, 1) - 1):
        fwd.append(fwd[-1] + c * fwd[-2])

    def term(k: int) -> Fraction:
        if k >= 0:
            return fwd[k]
        j = -k
        return -fwd[j] / Fraction((-c) ** j)

    return [term(k) for k in range(k_min, k_max + 1)]


@dataclass(frozen=True, slots=True)
class QuadExt:
    """Element rat + irr*sqrt(delta) of the quadratic extension Q(sqrt(delta))."""

    rat: Fraction
    irr: Fraction
    delta: int

    def _check(self, other: QuadExt) -> None:
        if self.delta != other.delta:
            raise ValueError("mixed extension rings")

    def __add__(self, other: QuadExt) -> QuadExt:
        self._check(other)
        return QuadExt(self.rat + other.rat, self.irr + other.irr, self.delta)

    def __sub__(self, other: QuadExt) -> QuadExt:
        self._check(other)
        return QuadExt(self.rat - other.rat, self.irr - other.irr, self.delta)

    def __mul__(self, other: QuadExt) -> QuadExt:
        self._check(other)
        return QuadExt(
            self.rat * other.rat + self.irr * other.irr * self.delta,
            self.rat * other.irr + self.irr * other.rat,
            self.delta,
        )

    def __neg__(self) -> QuadExt:
        return QuadExt(-self.rat, -self.irr, self.delta)

    def inverse(self) -> QuadExt:
        norm = self.rat * self.rat - self.irr * self.irr * self.delta
        if norm == 0:
            raise ZeroDivisionError("element has zero norm")
        return QuadExt(self.rat / norm, -self.irr / norm, self.delta)

    def __pow__(self, k: int) -> QuadExt:
        base = self if k >= 0 else self.inverse()
        result = QuadExt(Fraction(1), Fraction(0), self.delta)
        for _ in range(abs(k)):
            result = result * base
        return result


@dataclass(frozen=True, slots=True)
class ClosedFormData:
    """The discriminant delta = 1 + 4c and the conjugate roots
    w = (1 +- sqrt(delta)) / 2 of the second-order recurrence.

    The closed form used here is sqrt(delta) * a_k = w_plus^k - w_minus^k
    (for a_1 = 1).  The plus-sign variant (w_plus^k + w_minus^k)/sqrt(delta)
    is sometimes quoted, but it evaluates to 1/sqrt(delta) at k = 1 and so
    cannot satisfy a_1 = 1; the difference form does.
    """

    c: int
    delta: int
    w_plus: QuadExt
    w_minus: QuadExt

    @classmethod
    def from_c(cls, c: int) -> ClosedFormData:
        delta = 1 + 4 * c
        half = Fraction(1, 2)
        w_plus = QuadExt(half, half, delta)
        w_minus = QuadExt(half, -half, delta)
        data = cls(c=c, delta=delta, w_plus=w_plus, w_minus=w_minus)
        one = QuadExt(Fraction(1), Fraction(0), delta)
        minus_c = QuadExt(Fraction(-c), Fraction(0), delta)
        if w_plus + w_minus != one or w_plus * w_minus != minus_c:
            raise ArithmeticError("root relations w+ + w- = 1, w+ w- = -c failed")
        return data

    def term(self, k: int) -> Fraction:
        """a_k for the a_1 = 1 recurrence, read off from w_plus^k - w_minus^k."""
        if k < 0 and self.c == 0:
            raise ZeroCNegativeIndex("negative indices need c != 0")
        diff = self.w_plus**k - self.w_minus**k
        if diff.rat != 0:
            raise ArithmeticError("closed-form difference has a rational part")
        return diff.irr

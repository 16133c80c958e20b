"""Exact truncated power series in the variable q.

All generating functions in the package are expanded with :class:`TruncSeries`:
a series truncated at a fixed order N whose coefficients are plain Python
integers.  Arithmetic is exact, never touches floating point, and never
promotes the truncation order -- combining two series yields the minimum of
the two orders.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence


class TruncSeries:
    """A power series in q truncated at order N, with exact int coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``; the length is always N+1.
    Instances are immutable and hashable, so builders can be memoized.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs: tuple[int, ...] = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the q^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, exp: int, order: int, coeff: int = 1) -> "TruncSeries":
        """The series ``coeff * q**exp`` (zero if exp exceeds the order)."""
        if exp < 0:
            raise ValueError("monomial exponent must be nonnegative")
        c = [0] * (order + 1)
        if exp <= order:
            c[exp] = coeff
        return cls(c)

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "TruncSeries":
        """Drop coefficients above ``order``; silent promotion is forbidden."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1])

    def shift(self, exp: int) -> "TruncSeries":
        """Multiply by ``q**exp``, keeping the truncation order."""
        if exp < 0:
            raise ValueError("shift exponent must be nonnegative")
        n = self.order
        if exp > n:
            return TruncSeries.zero(n)
        return TruncSeries([0] * exp + list(self.coeffs[: n + 1 - exp]))

    def scale(self, c: int) -> "TruncSeries":
        return TruncSeries([c * a for a in self.coeffs])

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-a for a in self.coeffs])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: n + 1 - i]):
                if b:
                    out[i + j] += a * b
        return TruncSeries(out)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(f"constant term {c0} is not a unit")
        n = self.order
        out = [0] * (n + 1)
        out[0] = c0
        for i in range(1, n + 1):
            acc = 0
            for j in range(1, i + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * out[i - j]
            out[i] = -c0 * acc
        return TruncSeries(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*q^{i}" for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"TruncSeries({body}; order={self.order})"


def _mul_one_minus(coeffs: list[int], exp: int) -> None:
    """In-place multiply a coefficient list by (1 - q**exp)."""
    for i in range(len(coeffs) - 1, exp - 1, -1):
        coeffs[i] -= coeffs[i - exp]


@functools.lru_cache(maxsize=None)
def pochhammer_finite(a_exp: int, n: int, order: int) -> TruncSeries:
    """(q**a_exp; q)_n = product of (1 - q**(a_exp+i)) for i = 0..n-1."""
    if a_exp < 1:
        raise ValueError("a_exp must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = [1] + [0] * order
    for i in range(n):
        e = a_exp + i
        if e > order:
            break  # remaining factors cannot touch coefficients <= order
        _mul_one_minus(out, e)
    return TruncSeries(out)


@functools.lru_cache(maxsize=None)
def pochhammer_inf(a_exp: int, order: int) -> TruncSeries:
    """(q**a_exp; q)_infinity truncated at ``order``.

    Factors whose exponent exceeds the order are omitted; they cannot affect
    the retained coefficients.  a_exp = 0 would make the product vanish
    identically, so it is rejected.
    """
    if a_exp < 1:
        raise ValueError("a_exp must be a positive integer")
    out = [1] + [0] * order
    for e in range(a_exp, order + 1):
        _mul_one_minus(out, e)
    return TruncSeries(out)


@functools.lru_cache(maxsize=None)
def inv_pochhammer_inf(a_exp: int, order: int) -> TruncSeries:
    """1 / (q**a_exp; q)_infinity, memoized (used by nearly every builder)."""
    return pochhammer_inf(a_exp, order).inverse()


@functools.lru_cache(maxsize=None)
def inv_pochhammer_finite(a_exp: int, n: int, order: int) -> TruncSeries:
    return pochhammer_finite(a_exp, n, order).inverse()


@functools.lru_cache(maxsize=None)
def inv_one_minus(exp: int, order: int, power: int = 1) -> TruncSeries:
    """1 / (1 - q**exp)**power as a truncated series, for exp >= 1."""
    if exp < 1 or power < 1:
        raise ValueError("exp and power must be positive")
    from math import comb

    out = [0] * (order + 1)
    t = 0
    while t * exp <= order:
        out[t * exp] = comb(t + power - 1, power - 1)
        t += 1
    return TruncSeries(out)


@functools.lru_cache(maxsize=None)
def _gauss_binomial_poly(n: int, m: int) -> tuple[int, ...]:
    """Coefficients of the Gaussian binomial [n, m] via the q-Pascal recurrence.

    [n, m] = [n-1, m] + q**(n-m) * [n-1, m-1]; the result is a polynomial of
    degree m*(n-m) with nonnegative coefficients.
    """
    if m < 0 or m > n:
        return (0,)
    if m == 0 or m == n:
        return (1,)
    low = _gauss_binomial_poly(n - 1, m)
    high = _gauss_binomial_poly(n - 1, m - 1)
    deg = m * (n - m)
    out = [0] * (deg + 1)
    for i, c in enumerate(low):
        out[i] += c
    s = n - m
    for i, c in enumerate(high):
        out[i + s] += c
    return tuple(out)


def gauss_binomial(n: int, m: int, order: int) -> TruncSeries:
    """The Gaussian binomial coefficient [n, m] truncated at ``order``.

    Returns the zero series when m < 0 or m > n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    poly = _gauss_binomial_poly(n, m)
    out = [0] * (order + 1)
    for i, c in enumerate(poly[: order + 1]):
        out[i] = c
    return TruncSeries(out)


def prod(factors: Sequence[TruncSeries], order: int) -> TruncSeries:
    """Product of a sequence of series, truncated at ``order``."""
    out = TruncSeries.one(order)
    for f in factors:
        out = out * f.truncate(min(order, f.order))
    return out

"""Laurent polynomials in z and bivariate series in q with Laurent coefficients.

This module houses the two-variable generating functions for the crank, the
rank and the j-rank, together with the z-derivative and symmetrized-moment
extractions that turn them into single-variable series.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable

from .series import TruncSeries, inv_pochhammer_finite, inv_pochhammer_inf, pochhammer_inf


def falling_factorial(x: int, t: int) -> int:
    """x * (x-1) * ... * (x-t+1) for integer x (possibly negative)."""
    out = 1
    for i in range(t):
        out *= x - i
    return out


def integer_binomial(x: int, k: int) -> int:
    """binom(x, k) as the falling-factorial polynomial, valid for negative x.

    The product of k consecutive integers is always divisible by k!, so the
    result is exact.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = falling_factorial(x, k)
    den = math.factorial(k)
    q, r = divmod(num, den)
    assert r == 0
    return q


class LaurentPoly:
    """A finite-support Laurent polynomial in z over the integers.

    Stored as a map from z-exponent to nonzero coefficient; negative
    exponents are allowed.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def z_power(cls, m: int, c: int = 1) -> "LaurentPoly":
        return cls({m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                k = m1 + m2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({m: c * v for m, v in self.terms.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """z -> 1/z."""
        return LaurentPoly({-m: c for m, c in self.terms.items()})

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of a monomial +-z^m; anything else is not invertible."""
        if len(self.terms) != 1:
            raise ValueError("not an invertible Laurent polynomial")
        ((m, c),) = self.terms.items()
        if c not in (1, -1):
            raise ValueError("not an invertible Laurent polynomial")
        return LaurentPoly({-m: c})

    def weighted_sum(self, weight) -> int:
        """Sum of coeff * weight(exponent) over the support."""
        return sum(c * weight(m) for m, c in self.terms.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly(0)"
        body = " + ".join(f"{c}*z^{m}" for m, c in sorted(self.terms.items()))
        return f"LaurentPoly({body})"


_LP_ZERO = LaurentPoly()
_LP_ONE = LaurentPoly.const(1)


class BiSeries:
    """A series in q truncated at order N whose coefficients are Laurent polynomials."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[LaurentPoly]):
        self.coeffs: tuple[LaurentPoly, ...] = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a bivariate series needs at least the q^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls([_LP_ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "BiSeries":
        return cls([_LP_ONE] + [_LP_ZERO] * order)

    @classmethod
    def from_series(cls, s: TruncSeries) -> "BiSeries":
        return cls([LaurentPoly.const(c) for c in s.coeffs])

    def coefficient(self, n: int) -> LaurentPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "BiSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return BiSeries(self.coeffs[: order + 1])

    def shift(self, exp: int) -> "BiSeries":
        n = self.order
        if exp > n:
            return BiSeries.zero(n)
        return BiSeries([_LP_ZERO] * exp + list(self.coeffs[: n + 1 - exp]))

    def __add__(self, other: "BiSeries") -> "BiSeries":
        n = min(self.order, other.order)
        return BiSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        n = min(self.order, other.order)
        return BiSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "BiSeries":
        return BiSeries([-c for c in self.coeffs])

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        n = min(self.order, other.order)
        out: list[dict[int, int]] = [dict() for _ in range(n + 1)]
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b.is_zero():
                    continue
                acc = out[i + j]
                for m1, c1 in a.terms.items():
                    for m2, c2 in b.terms.items():
                        k = m1 + m2
                        acc[k] = acc.get(k, 0) + c1 * c2
        return BiSeries([LaurentPoly(d) for d in out])

    def mul_series(self, s: TruncSeries) -> "BiSeries":
        """Multiply by a pure-q series (much cheaper than a full product)."""
        n = min(self.order, s.order)
        out: list[LaurentPoly] = [_LP_ZERO] * (n + 1)
        for j, c in enumerate(s.coeffs[: n + 1]):
            if c == 0:
                continue
            for i in range(n + 1 - j):
                a = self.coeffs[i]
                if not a.is_zero():
                    out[i + j] = out[i + j] + a.scale(c)
        return BiSeries(out)

    def inverse(self) -> "BiSeries":
        """Inverse when the q^0 coefficient is an invertible monomial +-z^m."""
        lead_inv = self.coeffs[0].unit_inverse()
        n = self.order
        out: list[LaurentPoly] = [lead_inv] + [_LP_ZERO] * n
        for i in range(1, n + 1):
            acc = _LP_ZERO
            for j in range(1, i + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[i - j]
            out[i] = -(lead_inv * acc)
        return BiSeries(out)

    def substitute_inverse(self) -> "BiSeries":
        """z -> 1/z coefficientwise."""
        return BiSeries([c.substitute_inverse() for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"BiSeries(order={self.order})"


def bi_pochhammer(z_exp: int, q_start: int, n_factors: int | None, order: int) -> BiSeries:
    """Product of (1 - z**z_exp * q**(q_start + i)) for i = 0..n_factors-1.

    ``n_factors=None`` gives the infinite product; factors whose q-exponent
    exceeds the order are dropped.  ``q_start=0`` with a finite count yields
    the (z; q)_n style product that contains the q-free factor (1 - z**z_exp).
    """
    if n_factors is None and q_start < 1:
        raise ValueError("infinite product needs q_start >= 1")
    out = BiSeries.one(order)
    i = 0
    while True:
        if n_factors is not None and i >= n_factors:
            break
        e = q_start + i
        if e > order:
            break
        terms = [_LP_ONE] + [_LP_ZERO] * order
        if e == 0:
            terms[0] = LaurentPoly({0: 1, z_exp: -1})
        else:
            terms[e] = LaurentPoly.z_power(z_exp, -1)
        out = out * BiSeries(terms)
        i += 1
    return out


def bi_geometric(z_exp: int, q_exp: int, order: int) -> BiSeries:
    """1 / (1 - z**z_exp * q**q_exp) for q_exp >= 1."""
    if q_exp < 1:
        raise ValueError("q_exp must be >= 1")
    out = [_LP_ZERO] * (order + 1)
    t = 0
    while t * q_exp <= order:
        out[t * q_exp] = LaurentPoly.z_power(t * z_exp)
        t += 1
    return BiSeries(out)


@functools.lru_cache(maxsize=None)
def _sym_z_pochhammer(n: int, q_start: int, order: int) -> BiSeries:
    """(z q**q_start-ish; q)_n * (z^{-1} ...; q)_n, the symmetric product."""
    return bi_pochhammer(1, q_start, n, order) * bi_pochhammer(-1, q_start, n, order)


@functools.lru_cache(maxsize=None)
def _inv_sym_z_pochhammer(n: int, order: int) -> BiSeries:
    """1 / ((zq; q)_n (z^{-1} q; q)_n)."""
    return _sym_z_pochhammer(n, 1, order).inverse()


@functools.lru_cache(maxsize=None)
def build_crank_gf(order: int) -> BiSeries:
    """The two-variable crank generating function (q)_inf / ((zq)_inf (z^{-1}q)_inf)."""
    denom = bi_pochhammer(1, 1, None, order) * bi_pochhammer(-1, 1, None, order)
    return denom.inverse().mul_series(pochhammer_inf(1, order))


@functools.lru_cache(maxsize=None)
def build_rank_gf(order: int) -> BiSeries:
    """The two-variable rank generating function.

    Sum over n >= 0 of q**(n*n) / ((zq)_n (z^{-1}q)_n); the n = 0 term
    contributes the constant 1 for the empty partition.
    """
    out = BiSeries.one(order)
    n = 1
    while n * n <= order:
        out = out + _inv_sym_z_pochhammer(n, order).shift(n * n)
        n += 1
    return out


def _nested_square_tuples(depth: int, bound: int):
    """Weakly increasing positive tuples (n_1 <= ... <= n_depth) with sum of squares <= bound."""

    def rec(prefix: list[int], lo: int, used: int):
        if len(prefix) == depth:
            yield tuple(prefix)
            return
        v = lo
        while used + v * v <= bound:
            prefix.append(v)
            yield from rec(prefix, v, used + v * v)
            prefix.pop()
            v += 1

    yield from rec([], 1, 0)


@functools.lru_cache(maxsize=None)
def build_jrank_gf(j: int, order: int, form: str = "nested") -> BiSeries:
    """The two-variable j-rank generating function, normalized to constant term 1.

    Forms: "nested" expands the multiple Durfee-square sum, "bilateral"
    expands the single bilateral sum, and "counts" rebuilds the series from
    the per-residue count generating functions.  All three agree (tested).
    For j = 1 the function is the crank generating function by convention.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    if form == "nested":
        if j == 1:
            # The nested sum degenerates at depth 0; by convention the
            # 1-rank is the crank (their count series coincide).
            return build_crank_gf(order)
        out = BiSeries.one(order)
        for tup in _nested_square_tuples(j - 1, order):
            weight = sum(v * v for v in tup)
            scalar = TruncSeries.one(order)
            for a, b in zip(tup, tup[1:]):
                scalar = scalar * inv_pochhammer_finite(1, b - a, order)
            term = _inv_sym_z_pochhammer(tup[0], order).mul_series(scalar)
            out = out + term.shift(weight)
        return out
    if form == "bilateral":
        return _jrank_gf_bilateral(j, order)
    if form == "counts":
        from .stats import gf_njm

        out = [LaurentPoly.const(1 if n == 0 else 0) for n in range(order + 1)]
        for m in range(0, order + 1):
            col = gf_njm(j, m, order)
            for n in range(1, order + 1):
                c = col.coefficient(n)
                if c == 0:
                    continue
                if m == 0:
                    out[n] = out[n] + LaurentPoly.const(c)
                else:
                    out[n] = out[n] + LaurentPoly({m: c, -m: c})
        return BiSeries(out)
    raise ValueError(f"unknown form {form!r}")


def _jrank_gf_bilateral(j: int, order: int) -> BiSeries:
    # z/(q)_inf * sum_{n != 0} (-1)^(n-1) q^(n((2j-1)n+1)/2) (1-q^n)/(1-zq^n).
    # For n = -m the summand rewrites to z^{-1} q^(m((2j-1)m-1)/2)
    # (1-q^m)/(1-z^{-1}q^m), so the global z factor cancels there; only the
    # positive half keeps it.  For j >= 2 the sum has no q^0 term and the
    # empty-partition constant 1 is added for consistency with the other forms.
    total = BiSeries.zero(order)
    n = 1
    while True:
        e_pos = n * ((2 * j - 1) * n + 1) // 2
        e_neg = n * ((2 * j - 1) * n - 1) // 2
        if e_pos > order and e_neg > order:
            break
        sign = 1 if n % 2 == 1 else -1  # (-1)^(n-1), shared by both halves
        one_minus = TruncSeries.one(order) - TruncSeries.monomial(n, order)
        for z_dir, z_mul, e in ((1, 1, e_pos), (-1, 0, e_neg)):
            if e > order:
                continue
            term = bi_geometric(z_dir, n, order).mul_series(one_minus).shift(e)
            if z_mul:
                term = BiSeries([c * LaurentPoly.z_power(z_mul) for c in term.coeffs])
            total = total + term if sign == 1 else total - term
        n += 1
    out = total.mul_series(inv_pochhammer_inf(1, order))
    if j >= 2:
        out = out + BiSeries.one(order)
    return out


def dz_at_1(a: BiSeries, t: int) -> TruncSeries:
    """The t-th z-derivative evaluated at z = 1, coefficient by coefficient."""
    if t < 0:
        raise ValueError("derivative order must be nonnegative")
    return TruncSeries(
        [c.weighted_sum(lambda m: falling_factorial(m, t)) for c in a.coeffs]
    )


def symmetrized_extract(a: BiSeries, k: int) -> TruncSeries:
    """Apply the symmetrized-moment weight binom(m+k-1, 2k) to each z-exponent m.

    Equals (1/(2k)!) (d/dz)^{2k} z^{k-1} a(z, q) at z = 1, which for the
    j-rank series is the generating function of the 2k-th symmetrized moments.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return TruncSeries(
        [c.weighted_sum(lambda m: integer_binomial(m + k - 1, 2 * k)) for c in a.coeffs]
    )


def _increasing_tuples_linear_tail(depth: int, bound: int):
    """Tuples 0 <= n_1 <= ... <= n_depth, weight n_1^2+..+n_{depth-1}^2 + n_depth <= bound."""

    def rec(prefix: list[int], lo: int, used: int):
        if len(prefix) == depth - 1:
            v = max(lo, 0)
            while used + v <= bound:
                yield tuple(prefix) + (v,)
                v += 1
            return
        v = lo
        while used + v * v + v <= bound:  # tail needs at least n_depth >= v
            prefix.append(v)
            yield from rec(prefix, v, used + v * v)
            prefix.pop()
            v += 1

    yield from rec([], 0, 0)


@functools.lru_cache(maxsize=None)
def _sym_z_poch_zero_start(n: int, order: int) -> BiSeries:
    """(z; q)_n (z^{-1}; q)_n, built incrementally in n."""
    if n == 0:
        return BiSeries.one(order)
    prev = _sym_z_poch_zero_start(n - 1, order)
    e = n - 1
    factor = bi_pochhammer(1, e, 1, order) * bi_pochhammer(-1, e, 1, order)
    return prev * factor


def build_kn1_sides(j: int, order: int) -> tuple[BiSeries, BiSeries]:
    """Both sides of the nested-sum / bilateral-product identity at depth j.

    The left side is the nested sum over n_j >= ... >= n_1 >= 0 with
    numerator (z)_{n_j} (z^{-1})_{n_j}; the right side is the product form
    with the alternating correction sum.  Callers assert equality.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    # Left side: group terms by n_j so the expensive bivariate factor is
    # multiplied once per distinct outer index.
    scalar_by_outer: dict[int, TruncSeries] = {}
    for tup in _increasing_tuples_linear_tail(j, order):
        weight = sum(v * v for v in tup[:-1]) + tup[-1]
        diffs = [tup[0]] + [b - a for a, b in zip(tup, tup[1:])]
        scalar = TruncSeries.monomial(weight, order)
        for d in diffs:
            scalar = scalar * inv_pochhammer_finite(1, d, order)
        outer = tup[-1]
        acc = scalar_by_outer.get(outer)
        scalar_by_outer[outer] = scalar if acc is None else acc + scalar
    lhs = BiSeries.zero(order)
    for outer, scalar in sorted(scalar_by_outer.items()):
        lhs = lhs + _sym_z_poch_zero_start(outer, order).mul_series(scalar)

    # Right side.
    prefactor = (
        bi_pochhammer(1, 1, None, order)
        * bi_pochhammer(-1, 1, None, order)
    ).mul_series(inv_pochhammer_inf(1, order) * inv_pochhammer_inf(1, order))
    correction = BiSeries.one(order)
    n = 1
    while n * ((2 * j + 1) * n + 1) // 2 <= order:
        e = n * ((2 * j + 1) * n + 1) // 2
        sign = -1 if n % 2 == 1 else 1
        num = _sym_z_poch_zero_start(n, order)
        term = (num * _inv_sym_z_pochhammer(n, order)).shift(e)
        one_plus = TruncSeries.one(order) + TruncSeries.monomial(n, order)
        term = term.mul_series(one_plus.scale(sign))
        correction = correction + term
        n += 1
    rhs = prefactor * correction
    return lhs, rhs

"""Rank, crank and j-rank statistics, their counts, and moment tables.

The numeric count tables are sourced from the single-variable generating
functions; counting over enumerated partitions is kept as a test oracle.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .laurent import integer_binomial
from .partitions import Partition, successive_durfee
from .series import TruncSeries, inv_pochhammer_inf


def rank(p: Partition) -> int:
    """Largest part minus the number of parts."""
    if not p.parts:
        raise ValueError("rank of the empty partition is undefined")
    return p.parts[0] - len(p.parts)


def crank(p: Partition) -> int:
    """Largest part if there are no ones; otherwise (#parts > #ones) - #ones."""
    if not p.parts:
        raise ValueError("crank of the empty partition is undefined")
    ones = sum(1 for part in p.parts if part == 1)
    if ones == 0:
        return p.parts[0]
    bigger = sum(1 for part in p.parts if part > ones)
    return bigger - ones


def jrank(p: Partition, j: int) -> int | None:
    """The j-rank, or None when the partition has fewer than j-1 Durfee squares.

    Counts the columns to the right of the first Durfee square whose length
    is at most the (j-1)st Durfee side, minus the number of parts below the
    (j-1)st Durfee square.  For j = 2 this is the ordinary rank.
    """
    if j < 2:
        raise ValueError("jrank needs j >= 2; j = 1 is the crank")
    chain = successive_durfee(p)
    if len(chain) < j - 1:
        return None
    sides = chain.sides
    d1 = sides[0]
    limit = sides[j - 2]
    cols = 0
    for c in range(d1 + 1, p.parts[0] + 1 if p.parts else 0):
        length = sum(1 for part in p.parts if part >= c)
        if length <= limit:
            cols += 1
    below = len(p.parts) - sum(sides[: j - 1])
    return cols - below


@functools.lru_cache(maxsize=None)
def gf_njm(j: int, m: int, order: int) -> TruncSeries:
    """Generating function of the count of partitions with j-rank m.

    j = 1 gives the crank count series (with its well-known n = 1 anomaly),
    j = 2 the rank count series.
    """
    if j < 1:
        raise ValueError("j must be >= 1")
    am = abs(m)
    acc = TruncSeries.zero(order)
    n = 1
    while True:
        e = n * ((2 * j - 1) * n - 1) // 2 + am * n
        if e > order:
            break
        sign = 1 if n % 2 == 1 else -1
        acc = acc + TruncSeries.monomial(e, order, sign)
        if e + n <= order:
            acc = acc - TruncSeries.monomial(e + n, order, sign)
        n += 1
    return acc * inv_pochhammer_inf(1, order)


@functools.lru_cache(maxsize=None)
def _count_table(j: int, order: int) -> tuple[tuple[int, ...], ...]:
    """table[m][n] = count of partitions of n with j-rank m, for 0 <= m, n <= order."""
    return tuple(tuple(gf_njm(j, m, order).coeffs) for m in range(order + 1))


def _table_order(n: int) -> int:
    # Round the table order up so repeated small queries share one table.
    return max(16, -(-n // 16) * 16)


def count_njm(j: int, m: int, n: int) -> int:
    """N_j(m, n) read from the generating-function table (symmetric in m)."""
    if n < 0:
        return 0
    am = abs(m)
    if am > n:
        return 0
    return _count_table(j, _table_order(n))[am][n]


def moment(j: int, t: int, n: int) -> int:
    """The t-th ordinary j-rank moment: sum of m**t * N_j(m, n) over m in [-n, n]."""
    if t % 2 == 1:
        return 0
    table = _count_table(j, _table_order(n))
    total = table[0][n] if t == 0 else 0
    for m in range(1, n + 1):
        c = table[m][n]
        if c:
            total += 2 * (m**t) * c
    return total


def sym_mu(j: int, k: int, n: int) -> int:
    """The k-th symmetrized j-rank moment, binom(m + floor((k-1)/2), k)-weighted."""
    if k < 1:
        raise ValueError("k must be >= 1")
    shift = (k - 1) // 2
    table = _count_table(j, _table_order(n))
    total = 0
    for m in range(-n, n + 1):
        c = table[abs(m)][n]
        if c:
            total += integer_binomial(m + shift, k) * c
    return total


@functools.lru_cache(maxsize=None)
def gf_sym_mu(j: int, k: int, order: int) -> TruncSeries:
    """Closed-form generating function of the 2k-th symmetrized j-rank moments.

    Bilateral sum with the negative half rewritten in nonnegative q-powers:
    1/(q)_inf * sum_{n>=1} (-1)^(n-1)
        (q^(n((2j-1)n+1)/2 + kn) + q^(n((2j-1)n-1)/2 + kn)) / (1-q^n)^(2k).
    """
    from .series import inv_one_minus

    acc = TruncSeries.zero(order)
    n = 1
    while True:
        e_pos = n * ((2 * j - 1) * n + 1) // 2 + k * n
        e_neg = n * ((2 * j - 1) * n - 1) // 2 + k * n
        if min(e_pos, e_neg) > order:
            break
        sign = 1 if n % 2 == 1 else -1
        inv = inv_one_minus(n, order, 2 * k)
        for e in (e_pos, e_neg):
            if e <= order:
                acc = acc + inv.shift(e).scale(sign)
        n += 1
    return acc * inv_pochhammer_inf(1, order)


def g_poly(k: int) -> tuple[int, ...]:
    """Coefficients (index = x-exponent) of g_k(x) = prod_{i=0}^{k-1} (x^2 - i^2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = [1]  # polynomial in y = x^2
    for i in range(k):
        sq = i * i
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] -= sq * c
        coeffs = nxt
    out = [0] * (2 * k + 1)
    for d, c in enumerate(coeffs):
        out[2 * d] = c
    return tuple(out)


@dataclass(frozen=True)
class StirlingStarTable:
    """Change-of-basis integers: x^(2n) = sum_k values[n][k] * g_k(x).

    ``values[n][k]`` is stored for 1 <= k <= n <= size; rows are padded with
    zeros below index 1.
    """

    size: int
    values: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        if not 1 <= k <= n <= self.size:
            raise IndexError(f"(n, k) = ({n}, {k}) outside the table")
        return self.values[n][k]


def stirling_star(size: int) -> StirlingStarTable:
    """Solve the triangular change of basis from x^(2n) to the g_k exactly."""
    if size < 1:
        raise ValueError("size must be >= 1")
    g = {k: g_poly(k) for k in range(1, size + 1)}
    rows: list[tuple[int, ...]] = [()]
    for n in range(1, size + 1):
        residual = [0] * (2 * n + 1)
        residual[2 * n] = 1
        row = [0] * (n + 1)
        for k in range(n, 0, -1):
            c = residual[2 * k]  # g_k is monic in x^(2k)
            row[k] = c
            if c:
                for d, gc in enumerate(g[k]):
                    residual[d] -= c * gc
        assert not any(residual), "change of basis did not close"
        rows.append(tuple(row))
    return StirlingStarTable(size, tuple(rows))


def moment_via_sym(j: int, k: int, n: int) -> int:
    """The 2k-th ordinary moment recovered from symmetrized moments.

    Uses the factorial-weighted change of basis; must agree with
    :func:`moment` (tested as an invariant).
    """
    import math

    table = stirling_star(k)
    total = 0
    for t in range(1, k + 1):
        total += math.factorial(2 * t) * table.value(k, t) * sym_mu(j, 2 * t, n)
    return total


@dataclass(frozen=True)
class MomentTable:
    """A memoized block of exact statistic values indexed by n.

    ``kind`` is one of "count", "moment", "symmetrized"; ``index`` is the m,
    t or k parameter; ``source`` records which route produced the values.
    """

    kind: str
    j: int
    index: int
    values: tuple[int, ...]
    source: str

    @classmethod
    def build(cls, kind: str, j: int, index: int, n_max: int) -> "MomentTable":
        if kind == "count":
            vals = tuple(count_njm(j, index, n) for n in range(n_max + 1))
        elif kind == "moment":
            vals = tuple(moment(j, index, n) for n in range(n_max + 1))
        elif kind == "symmetrized":
            vals = tuple(sym_mu(j, index, n) for n in range(n_max + 1))
        else:
            raise ValueError(f"unknown table kind {kind!r}")
        return cls(kind, j, index, vals, "generating-function")

"""The four smallest-part families and their inter-relations.

Each family is computable by several independent routes -- generating
function, combinatorial weight over partitions, and moment differences --
and the routes are required to agree.  Every division along the way is on a
provably divisible integer and is asserted exact.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .laurent import integer_binomial
from .partitions import (
    Partition,
    enumerate_partitions,
    partition_count,
    successive_lower_durfee,
)
from .series import (
    TruncSeries,
    gauss_binomial,
    inv_one_minus,
    inv_pochhammer_finite,
    inv_pochhammer_inf,
    pochhammer_finite,
)
from .stats import moment, sym_mu


# ---------------------------------------------------------------------------
# spt(n)


@functools.lru_cache(maxsize=None)
def _count_min_parts(v: int, lo: int) -> int:
    """Number of partitions of v with every part >= lo."""
    if v == 0:
        return 1
    if lo > v:
        return 0
    return _count_min_parts(v - lo, lo) + _count_min_parts(v, lo + 1)


def spt_weight(n: int) -> int:
    """Total appearances of smallest parts over all partitions of n.

    Aggregated combinatorially: a partition with smallest part s occurring m
    times contributes m, and there are exactly count(n - m*s, parts > s) of
    them.  Pure integer counting, independent of any series expansion.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    for s in range(1, n + 1):
        m = 1
        while m * s <= n:
            total += m * _count_min_parts(n - m * s, s + 1)
            m += 1
    return total


@functools.lru_cache(maxsize=None)
def gf_spt(order: int) -> TruncSeries:
    """sum_{m>=1} q^m / ((1-q^m)^2 (q^(m+1); q)_inf), truncated."""
    acc = TruncSeries.zero(order)
    for m in range(1, order + 1):
        term = inv_one_minus(m, order, 2) * inv_pochhammer_inf(m + 1, order)
        acc = acc + term.shift(m)
    return acc


# ---------------------------------------------------------------------------
# combinatorial weights


def _increasing_marks(parts_increasing: list[int]) -> list[int]:
    # mark of the i-th smallest part = number of equal parts at position >= i,
    # i.e. repeated parts are marked 1, 2, ... from the top row of the diagram
    # downwards.
    n = len(parts_increasing)
    out = [0] * n
    i = 0
    while i < n:
        j = i
        while j < n and parts_increasing[j] == parts_increasing[i]:
            j += 1
        for t in range(i, j):
            out[t] = j - t
        i = j
    return out


def _split_point_count(p: Partition, j: int) -> int:
    """Number of designated split points at the bottom of the diagram.

    The split points are the d+1 smallest parts where d is the total size of
    the first j-1 lower-Durfee squares (capped at the number of parts); when
    the partition has fewer than j-1 lower-Durfee squares every part is a
    split point.
    """
    chain = successive_lower_durfee(p)
    if len(chain) < j - 1:
        return len(p.parts)
    d = sum(chain.sides[: j - 1])
    return min(d + 1, len(p.parts))


def mark_weight(p: Partition, j: int) -> int:
    """Sum of the marks of the designated bottom parts (weight behind Spt_j)."""
    if j < 1:
        raise ValueError("j must be >= 1")
    if not p.parts:
        return 0
    inc = sorted(p.parts)
    marks = _increasing_marks(inc)
    return sum(marks[: _split_point_count(p, j)])


def _compositions(k: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to k."""
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in _compositions(k - first):
            yield (first,) + rest


def _chain_sum(freqs: dict[int, int], larger: list[int], weights: tuple[int, ...]) -> int:
    # sum over increasing chains t_2 < ... < t_r drawn from `larger` of the
    # product of binom(f_t + m, 2m) factors
    total = 0
    for combo in itertools.combinations(larger, len(weights)):
        prod = 1
        for t, m in zip(combo, weights):
            prod *= integer_binomial(freqs[t] + m, 2 * m)
            if prod == 0:
                break
        total += prod
    return total


def chain_weight(p: Partition, k: int) -> int:
    """Higher-order smallest-part weight: compositions of k over part chains."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not p.parts:
        raise ValueError("weight of the empty partition is undefined")
    freqs: dict[int, int] = {}
    for part in p.parts:
        freqs[part] = freqs.get(part, 0) + 1
    values = sorted(freqs)
    t1 = values[0]
    larger = values[1:]
    total = 0
    for comp in _compositions(k):
        head = integer_binomial(freqs[t1] + comp[0] - 1, 2 * comp[0] - 1)
        if head == 0:
            continue
        total += head * _chain_sum(freqs, larger, comp[1:])
    return total


def _split_positions(p: Partition, j: int) -> list[int]:
    """0-based positions (in increasing part order) of the split parts t_1.

    For j = 1 the single split part is the smallest part.  For j >= 2 the
    split parts sit right above each row of the (j-1)st lower-Durfee square;
    if that square does not exist the list is empty.  The position blocks for
    j = 1..s+1 tile the bottom parts, which makes the telescoping sum of
    these weights reproduce the mark weight exactly.
    """
    if j == 1:
        return [0] if p.parts else []
    chain = successive_lower_durfee(p)
    if len(chain) < j - 1:
        return []
    start = sum(chain.sides[: j - 2])
    side = chain.sides[j - 2]
    return [i for i in range(start + 1, start + side + 1) if i < len(p.parts)]


def split_chain_weight(p: Partition, j: int, k: int) -> int:
    """Generalized weight: chain weights summed over the split-point parts.

    The first factor uses the mark of the split part; later factors use the
    plain frequencies of strictly larger part values.  j = 1 reduces to
    :func:`chain_weight`.
    """
    if j < 1 or k < 1:
        raise ValueError("j and k must be >= 1")
    if not p.parts:
        return 0
    inc = sorted(p.parts)
    marks = _increasing_marks(inc)
    freqs: dict[int, int] = {}
    for part in p.parts:
        freqs[part] = freqs.get(part, 0) + 1
    values = sorted(freqs)
    total = 0
    for i in _split_positions(p, j):
        t1 = inc[i]
        mark = marks[i]
        larger = [v for v in values if v > t1]
        for comp in _compositions(k):
            head = integer_binomial(mark + comp[0] - 1, 2 * comp[0] - 1)
            if head == 0:
                continue
            total += head * _chain_sum(freqs, larger, comp[1:])
    return total


# ---------------------------------------------------------------------------
# nested-sum generating functions


def _sptjn_tuples(j: int, bound: int) -> Iterator[tuple[int, ...]]:
    # 0 <= n_1 <= ... <= n_{j-1} <= n_j with n_j >= 1 and
    # n_1^2 + ... + n_{j-1}^2 + n_j <= bound
    def rec(prefix: list[int], lo: int, used: int):
        if len(prefix) == j - 1:
            v = max(lo, 1)
            while used + v <= bound:
                yield tuple(prefix) + (v,)
                v += 1
            return
        v = lo
        while used + v * v + max(v, 1) <= bound:
            prefix.append(v)
            yield from rec(prefix, v, used + v * v)
            prefix.pop()
            v += 1

    yield from rec([], 0, 0)


def _linear_tuples(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    # 1 <= n_1 <= ... <= n_k with sum <= bound
    def rec(prefix: list[int], lo: int, used: int):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        v = lo
        while used + v * (k - len(prefix)) <= bound:
            prefix.append(v)
            yield from rec(prefix, v, used + v)
            prefix.pop()
            v += 1

    yield from rec([], 1, 0)


@functools.lru_cache(maxsize=None)
def gf_np(order: int) -> TruncSeries:
    """Generating function of n*p(n): 1/(q)_inf * sum n q^n/(1-q^n)."""
    sigma = [0] * (order + 1)
    for n in range(1, order + 1):
        for e in range(n, order + 1, n):
            sigma[e] += n
    return TruncSeries(sigma) * inv_pochhammer_inf(1, order)


@functools.lru_cache(maxsize=None)
def gf_spt_j(j: int, order: int) -> TruncSeries:
    """The defining Gaussian-binomial sum for the Spt_j family."""
    if j < 1:
        raise ValueError("j must be >= 1")
    acc = TruncSeries.zero(order)
    for tup in _sptjn_tuples(j, order):
        weight = sum(v * v for v in tup[:-1]) + tup[-1]
        nj = tup[-1]
        term = inv_one_minus(nj, order, 2) * inv_pochhammer_inf(nj + 1, order)
        for a, b in zip(tup, tup[1:]):
            term = term * gauss_binomial(b, a, order)
        acc = acc + term.shift(weight)
    return acc


@functools.lru_cache(maxsize=None)
def gf_genn1_lhs(j: int, order: int) -> TruncSeries:
    """Left side of the depth-j smallest-part identity, in telescoped form.

    Same sum as :func:`gf_spt_j` but with the binomials expanded as
    (q)_{n_j} over the difference products -- a structurally different
    expansion used to cross-check it.
    """
    acc = TruncSeries.zero(order)
    for tup in _sptjn_tuples(j, order):
        weight = sum(v * v for v in tup[:-1]) + tup[-1]
        nj = tup[-1]
        term = pochhammer_finite(1, nj, order)
        term = term * inv_one_minus(nj, order, 2) * inv_pochhammer_inf(nj + 1, order)
        diffs = [tup[0]] + [b - a for a, b in zip(tup, tup[1:])]
        for d in diffs:
            term = term * inv_pochhammer_finite(1, d, order)
        acc = acc + term.shift(weight)
    return acc


@functools.lru_cache(maxsize=None)
def gf_genn1_rhs(j: int, order: int) -> TruncSeries:
    """Right side: n*p(n) part plus the alternating pentagonal-like correction."""
    acc = TruncSeries.zero(order)
    n = 1
    while True:
        e = n * ((2 * j + 1) * n + 1) // 2
        if e > order:
            break
        sign = -1 if n % 2 == 1 else 1
        term = inv_one_minus(n, order, 2)
        one_plus = TruncSeries.one(order) + TruncSeries.monomial(n, order)
        acc = acc + (term * one_plus).shift(e).scale(sign)
        n += 1
    return gf_np(order) + acc * inv_pochhammer_inf(1, order)


def spt_j(j: int, n: int, route: str = "moments") -> int:
    """Spt_j(n) by the requested route ("gf", "weight", "moments" or "all")."""
    if j < 1 or n < 1:
        raise ValueError("j and n must be >= 1")
    if route == "gf":
        return gf_spt_j(j, n).coefficient(n)
    if route == "weight":
        return sum(mark_weight(p, j) for p in enumerate_partitions(n))
    if route == "moments":
        half = moment(j + 1, 2, n)
        quot, rem = divmod(half, 2)
        assert rem == 0, "second moment of the (j+1)-rank must be even"
        return n * partition_count(n) - quot
    if route == "all":
        vals = {r: spt_j(j, n, r) for r in ("gf", "weight", "moments")}
        if len(set(vals.values())) != 1:
            raise AssertionError(f"route disagreement for Spt_{j}({n}): {vals}")
        return vals["moments"]
    raise ValueError(f"unknown route {route!r}")


@functools.lru_cache(maxsize=None)
def gf_spt_k(k: int, order: int) -> TruncSeries:
    """Nested-sum generating function of the order-k smallest-part family."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = TruncSeries.zero(order)
    for tup in _linear_tuples(k, order):
        weight = sum(tup)
        term = inv_pochhammer_inf(tup[0] + 1, order)
        for v in tup:
            term = term * inv_one_minus(v, order, 2)
        acc = acc + term.shift(weight)
    return acc


def spt_k(k: int, n: int, route: str = "moments") -> int:
    """spt_k(n) by the requested route."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be >= 1")
    if route == "gf":
        return gf_spt_k(k, n).coefficient(n)
    if route == "weight":
        return sum(chain_weight(p, k) for p in enumerate_partitions(n))
    if route == "moments":
        return sym_mu(1, 2 * k, n) - sym_mu(2, 2 * k, n)
    if route == "all":
        vals = {r: spt_k(k, n, r) for r in ("gf", "weight", "moments")}
        if len(set(vals.values())) != 1:
            raise AssertionError(f"route disagreement for spt_{k}({n}): {vals}")
        return vals["moments"]
    raise ValueError(f"unknown route {route!r}")


def _beta_diffs(n1: int, ms: tuple[int, ...]) -> list[int]:
    # difference chain n1-m1, m1-m2, ..., m_{r-1}; with no m's this is [n1]
    if not ms:
        return [n1]
    return [n1 - ms[0]] + [a - b for a, b in zip(ms, ms[1:])] + [ms[-1]]


@functools.lru_cache(maxsize=None)
def _beta_sum(n1: int, r: int, order: int, min_m: int = 0) -> TruncSeries:
    """sum over n1 >= m_1 >= ... >= m_{r-1} >= min_m of q^(sum m_i^2) / diff products."""
    acc = TruncSeries.zero(order)

    def rec(ms: list[int], hi: int, used: int):
        nonlocal acc
        if len(ms) == r - 1:
            term = TruncSeries.monomial(used, order)
            for d in _beta_diffs(n1, tuple(ms)):
                term = term * inv_pochhammer_finite(1, d, order)
            acc = acc + term
            return
        for v in range(min_m, hi + 1):
            if used + v * v <= order:
                rec(ms + [v], v, used + v * v)

    rec([], n1, 0)
    return acc


@functools.lru_cache(maxsize=None)
def gf_jspt_k(j: int, k: int, order: int, form: str = "nested") -> TruncSeries:
    """Generating function of the two-parameter smallest-part family.

    ``form="nested"`` expands the chained-difference display; ``form="binomial"``
    the equivalent Gaussian-binomial display.  Both must agree (tested).
    """
    if j < 1 or k < 1:
        raise ValueError("j and k must be >= 1")
    acc = TruncSeries.zero(order)
    if form == "nested":
        for tup in _linear_tuples(k, order):
            n1 = tup[0]
            base = pochhammer_finite(1, n1, order) * inv_pochhammer_inf(n1 + 1, order)
            for v in tup:
                base = base * inv_one_minus(v, order, 2)
            base = base.shift(sum(tup))
            # inner sum over 1 <= m_{j-1} <= ... <= m_1 <= n_1
            inner = _beta_sum(n1, j, order, 1) if j >= 2 else _beta_sum(n1, 1, order)
            acc = acc + base * inner
        return acc
    if form == "binomial":
        for tup in _remark_tuples(j, k, order):
            inner, outer = tup[: j - 1], tup[j - 1 :]
            weight = sum(v * v for v in inner) + sum(outer)
            nj = outer[0]
            term = inv_one_minus(nj, order, 2) * inv_pochhammer_inf(nj + 1, order)
            for v in outer[1:]:
                term = term * inv_one_minus(v, order, 2)
            chain = list(inner) + [nj]
            for a, b in zip(chain, chain[1:]):
                term = term * gauss_binomial(b, a, order)
            acc = acc + term.shift(weight)
        return acc
    raise ValueError(f"unknown form {form!r}")


def _remark_tuples(j: int, k: int, bound: int) -> Iterator[tuple[int, ...]]:
    # 1 <= n_1 <= ... <= n_{j+k-1}; the first j-1 entries weigh quadratically,
    # the last k linearly
    total = j + k - 1

    def rec(prefix: list[int], lo: int, used: int):
        pos = len(prefix)
        if pos == total:
            yield tuple(prefix)
            return
        v = lo
        while True:
            w = v * v if pos < j - 1 else v
            tail = max(v, 1) * (k if pos < j - 1 else total - pos - 1)
            if used + w + tail > bound:
                break
            prefix.append(v)
            yield from rec(prefix, v, used + w)
            prefix.pop()
            v += 1

    yield from rec([], 1, 0)


def jspt_k(j: int, k: int, n: int, route: str = "moments") -> int:
    """The two-parameter smallest-part value by the requested route."""
    if j < 1 or k < 1 or n < 1:
        raise ValueError("j, k and n must be >= 1")
    if route == "moments":
        return sym_mu(j, 2 * k, n) - sym_mu(j + 1, 2 * k, n)
    if route == "gf":
        return gf_jspt_k(j, k, n).coefficient(n)
    if route == "weight":
        return sum(split_chain_weight(p, j, k) for p in enumerate_partitions(n))
    if route == "all":
        vals = {r: jspt_k(j, k, n, r) for r in ("gf", "weight", "moments")}
        if len(set(vals.values())) != 1:
            raise AssertionError(f"route disagreement for jspt({j},{k},{n}): {vals}")
        return vals["moments"]
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# identity checks


def appbp_sides(r: int, k: int, order: int) -> tuple[TruncSeries, TruncSeries]:
    """Both sides of the specialized Bailey-pair series identity."""
    if r < 1 or k < 1:
        raise ValueError("r and k must be >= 1")
    lhs = TruncSeries.zero(order)
    rhs = TruncSeries.zero(order)
    for tup in _linear_tuples(k, order):
        n1 = tup[0]
        base = TruncSeries.monomial(sum(tup), order)
        for v in tup:
            base = base * inv_one_minus(v, order, 2)
        rhs = rhs + base
        poch = pochhammer_finite(1, n1, order)
        lhs = lhs + base * poch * poch * _beta_sum(n1, r, order)
    n = 1
    while True:
        e = n * (n - 1) // 2 + r * n * n + k * n
        if e > order:
            break
        sign = -1 if n % 2 == 1 else 1
        term = inv_one_minus(n, order, 2 * k)
        one_plus = TruncSeries.one(order) + TruncSeries.monomial(n, order)
        rhs = rhs + (term * one_plus).shift(e).scale(sign)
        n += 1
    return lhs, rhs


def verify_appbp(r: int, k: int, order: int) -> bool:
    """Check the specialized Bailey-pair series identity to the given order."""
    lhs, rhs = appbp_sides(r, k, order)
    return lhs == rhs


def relation_sum(j: int, n: int) -> int:
    """Spt_j(n) via the telescoping relations; all three expressions must agree."""
    if j < 1 or n < 1:
        raise ValueError("j and n must be >= 1")
    via_moments = spt_j(j, n, "moments")
    via_telescope = sum(jspt_k(ell, 1, n, "moments") for ell in range(1, j + 1))
    via_sym = sym_mu(1, 2, n) - sym_mu(j + 1, 2, n)
    if not via_moments == via_telescope == via_sym:
        raise AssertionError(
            f"relation mismatch at (j={j}, n={n}): "
            f"{via_moments}, {via_telescope}, {via_sym}"
        )
    return via_moments


# ---------------------------------------------------------------------------
# request plumbing


_FAMILIES = {"p", "spt", "spt_k", "Spt_j", "jspt_k"}


@dataclass(frozen=True)
class SptRequest:
    """A validated computation request for one of the spt families."""

    family: str
    n_max: int
    j: int | None = None
    k: int | None = None
    route: str = "moments"

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        needs_j = self.family in ("Spt_j", "jspt_k")
        needs_k = self.family in ("spt_k", "jspt_k")
        if needs_j != (self.j is not None):
            raise ValueError(f"family {self.family} and j parameter are inconsistent")
        if needs_k != (self.k is not None):
            raise ValueError(f"family {self.family} and k parameter are inconsistent")
        if self.route not in ("gf", "weight", "moments", "all"):
            raise ValueError(f"unknown route {self.route!r}")

    def values(self) -> list[int]:
        """Values for n = 1..n_max."""
        fam = self.family
        if fam == "p":
            return [partition_count(n) for n in range(1, self.n_max + 1)]
        if fam == "spt":
            return [spt_weight(n) for n in range(1, self.n_max + 1)]
        if fam == "Spt_j":
            return [spt_j(self.j, n, self.route) for n in range(1, self.n_max + 1)]
        if fam == "spt_k":
            return [spt_k(self.k, n, self.route) for n in range(1, self.n_max + 1)]
        return [jspt_k(self.j, self.k, n, self.route) for n in range(1, self.n_max + 1)]

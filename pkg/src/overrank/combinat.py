"""Ground-truth combinatorics: overpartition enumeration, Dyson's rank,
rank-class counts, and their generating functions.

An overpartition is a partition in which the first occurrence of each
distinct part value may be overlined; the rank is the largest part minus the
number of parts.  Enumeration is the independent oracle that validates the
analytic generating functions coefficient by coefficient.

Convention at n = 0: the analytic rank generating functions have constant
term 0 for every rank class, while enumeration counts the empty overpartition
(rank 0) once.  The series builders below follow the analytic convention;
the enumeration oracle is compared for n >= 1 only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Tuple

from .errors import CapExceeded
from .lambert import lambert_sum, _geom
from .products import _poch_raw
from .series import LaurentSeries

ENUM_CAP = 40


@dataclass(frozen=True)
class Overpartition:
    """Nonincreasing positive parts plus the set of overlined part values."""

    parts: Tuple[int, ...]
    overlined: frozenset

    def __post_init__(self):
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be nonincreasing")
        if any(p < 1 for p in self.parts):
            raise ValueError("parts must be positive")
        if not self.overlined <= set(self.parts):
            raise ValueError("every overlined value must occur among the parts")

    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self):
        if not self.parts:
            return "()"
        return "+".join(f"{p}~" if first and p in self.overlined else str(p)
                        for p, first in zip(self.parts, _first_flags(self.parts)))


def _first_flags(parts):
    seen = set()
    out = []
    for p in parts:
        out.append(p not in seen)
        seen.add(p)
    return out


@dataclass(frozen=True)
class RankTable:
    """Rank-value -> count histogram for the overpartitions of n."""

    n: int
    counts: Mapping[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def rank(op: Overpartition) -> int:
    """Largest part minus number of parts; the empty overpartition has rank 0."""
    if not op.parts:
        return 0
    return op.parts[0] - len(op.parts)


def enumerate_overpartitions(n: int, cap: int = ENUM_CAP) -> Iterator[Overpartition]:
    """Yield every overpartition of n exactly once.

    Generation is by largest part value with an overline choice at the first
    occurrence of each distinct value, so each object appears once.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapExceeded(f"enumeration of n = {n} exceeds the cap {cap}")

    def rec(remaining: int, max_part: int):
        # yields (parts tuple, overlined frozenset) pairs
        if remaining == 0:
            yield (), frozenset()
            return
        for v in range(min(remaining, max_part), 0, -1):
            for mult in range(1, remaining // v + 1):
                head = (v,) * mult
                for tail, over in rec(remaining - mult * v, v - 1):
                    yield head + tail, over
                    yield head + tail, over | {v}

    for parts, over in rec(n, n):
        yield Overpartition(parts, over)


@lru_cache(maxsize=None)
def rank_table(n: int, cap: int = ENUM_CAP) -> RankTable:
    """Exact rank histogram of the overpartitions of n, by enumeration."""
    counts: Dict[int, int] = {}
    for op in enumerate_overpartitions(n, cap):
        r = rank(op)
        counts[r] = counts.get(r, 0) + 1
    return RankTable(n, counts)


def nbar(m: int, n: int, cap: int = ENUM_CAP) -> int:
    """Number of overpartitions of n with rank m (enumeration oracle)."""
    return rank_table(n, cap).counts.get(m, 0)


def nbar_class(s: int, m: int, n: int, cap: int = ENUM_CAP) -> int:
    """Number of overpartitions of n with rank congruent to s mod m."""
    if not 0 <= s < m:
        raise ValueError(f"residue {s} not in [0, {m})")
    return sum(c for r, c in rank_table(n, cap).counts.items() if r % m == s)


# ----------------------------------------------------------------------
# generating functions
# ----------------------------------------------------------------------


def pbar_series(order: int) -> LaurentSeries:
    """(-q;q)_inf / (q;q)_inf = sum_n pbar(n) q^n."""
    return _poch_raw(-1, 1, 1, order) / _poch_raw(1, 1, 1, order)


def nbar_series(m: int, order: int) -> LaurentSeries:
    """sum_n Nbar(m,n) q^n
    = 2 (-q;q)/(q;q) sum_{n>=1} (-1)^(n-1) q^(n^2+|m|n) (1-q^n)/(1+q^n).

    The constant term is 0 (analytic convention)."""
    m = abs(m)
    inner = LaurentSeries.zero(order)
    n = 1
    while n * n + m * n < order:
        lead = n * n + m * n
        g = _geom(-1, n, order - lead)
        piece = (g - g.shift(n).truncate(order - lead)).shift(lead)
        if n % 2 == 0:
            piece = -piece
        inner = inner + piece
        n += 1
    return (2 * pbar_series(order) * inner).truncate(order)


@lru_cache(maxsize=32)
def nbar_class_series(s: int, m: int, order: int) -> LaurentSeries:
    """sum_n Nbar(s,m,n) q^n
    = 2 (-q;q)/(q;q) sum'_{n in Z} (-1)^n q^(n^2+n) (q^(sn) + q^((m-s)n))
      / ((1 + q^n)(1 - q^(mn))).

    The n = 0 term is omitted; negative-n denominators expand exactly through
    the Laurent layer.  Constant term 0 (analytic convention)."""
    if not 0 <= s < m:
        raise ValueError(f"residue {s} not in [0, {m})")
    denoms = [(-1, 0, 1), (1, 0, m)]
    inner = lambert_sum(1, 1 + s, -1, denoms, order, primed=True)
    inner = inner + lambert_sum(1, 1 + m - s, -1, denoms, order, primed=True)
    out = (2 * pbar_series(order) * inner).truncate(order)
    if out.min_exp < 0:
        raise AssertionError(f"rank-class series ({s},{m}) has negative exponents")
    return out

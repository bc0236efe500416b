"""Exact truncated Laurent series over the rationals in one variable q.

A series is a contiguous window of exact rational coefficients together with
an exclusive truncation order: coefficients at exponents >= ``order`` are
unknown, everything below is exact (exponents below the stored window are
exactly zero).  All values are immutable; all operations are pure.

Coefficients are Python ints whenever the value is integral and
``fractions.Fraction`` otherwise, so the common all-integer case stays on the
fast native-int path.  Both types expose ``numerator``/``denominator`` and
compare exactly, so the union behaves as a single exact-rational scalar type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

from .errors import BeyondTruncation, NegativeExponent, ZeroLeadingTerm

Coefficient = Union[int, Fraction]


def _norm(c: Coefficient) -> Coefficient:
    """Collapse integral Fractions to int so arithmetic stays on the fast path."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentSeries:
    """A truncated Laurent series sum_{n >= min_exp} c_n q^n + O(q^order).

    Canonical form: the stored window carries no leading or trailing zero
    coefficients; the zero series has an empty window and min_exp == order.
    """

    __slots__ = ("min_exp", "coeffs", "order")

    min_exp: int
    coeffs: Tuple[Coefficient, ...]
    order: int

    def __init__(self, min_exp: int, coeffs: Iterable[Coefficient], order: int):
        cs = [_norm(c) for c in coeffs]
        lo, hi = 0, len(cs)
        while lo < hi and not cs[lo]:
            lo += 1
        while hi > lo and not cs[hi - 1]:
            hi -= 1
        min_exp += lo
        cs = cs[lo:hi]
        if not cs:
            min_exp = order
        elif min_exp + len(cs) > order:
            raise ValueError(
                f"coefficients reach exponent {min_exp + len(cs) - 1} "
                f"but truncation order is {order}"
            )
        if min_exp > order:
            raise ValueError(f"min_exp {min_exp} exceeds order {order}")
        object.__setattr__(self, "min_exp", min_exp)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls(order, (), order)

    @classmethod
    def one(cls, order: int) -> "LaurentSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def monomial(cls, c: Coefficient, exp: int, order: int) -> "LaurentSeries":
        if exp >= order:
            return cls.zero(order)
        return cls(exp, (c,), order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, Coefficient], order: int) -> "LaurentSeries":
        """Build a series from an exponent -> coefficient mapping."""
        known = {e: c for e, c in terms.items() if e < order and c}
        if not known:
            return cls.zero(order)
        lo = min(known)
        window = [0] * (max(known) + 1 - lo)
        for e, c in known.items():
            window[e - lo] = c
        return cls(lo, window, order)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Coefficient:
        """Exact coefficient of q^n; raises BeyondTruncation for n >= order."""
        if n >= self.order:
            raise BeyondTruncation(f"exponent {n} is beyond truncation order {self.order}")
        i = n - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff_range(self, lo: int, hi: int) -> list:
        """Coefficients of q^lo .. q^(hi-1); all must be below the order."""
        return [self.coeff(n) for n in range(lo, hi)]

    def terms(self) -> Iterator[Tuple[int, Coefficient]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.min_exp == other.min_exp
            and self.coeffs == other.coeffs
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.min_exp, self.coeffs, self.order))

    def __repr__(self) -> str:
        parts = []
        for e, c in list(self.terms())[:8]:
            parts.append(f"{c}*q^{e}" if e else f"{c}")
        if len(self.coeffs) > 8:
            parts.append("...")
        body = " + ".join(parts) if parts else "0"
        return f"<{body} + O(q^{self.order})>"

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return add(self, other.__neg__())

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_exp, [-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return mul(self, inverse(other))

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            return inverse(self) ** (-n)
        out = LaurentSeries.one(self.order)
        for _ in range(n):
            out = mul(out, self)
        return out

    def scale(self, c: Coefficient) -> "LaurentSeries":
        if not c:
            return LaurentSeries.zero(self.order)
        return LaurentSeries(self.min_exp, [c * x for x in self.coeffs], self.order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k."""
        return LaurentSeries(self.min_exp + k, self.coeffs, self.order + k)

    def truncate(self, order: int) -> "LaurentSeries":
        """Forget all coefficients at exponents >= order."""
        if order >= self.order:
            return self
        keep = max(0, min(len(self.coeffs), order - self.min_exp))
        return LaurentSeries(self.min_exp, self.coeffs[:keep], order)

    def inverse(self) -> "LaurentSeries":
        return inverse(self)

    def substitute_power(self, k: int) -> "LaurentSeries":
        return substitute_power(self, k)

    def extract_progression(self, m: int, d: int) -> "LaurentSeries":
        return extract_progression(self, m, d)


def add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Coefficientwise sum; order = min(a.order, b.order)."""
    order = min(a.order, b.order)
    lo = min(a.min_exp, b.min_exp, order)
    out = [0] * (order - lo)
    for src in (a, b):
        base = src.min_exp - lo
        for i, c in enumerate(src.coeffs):
            if c and base + i < len(out):
                out[base + i] += c
    return LaurentSeries(lo, out, order)


def mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product.

    The result is exact below min(a.order + b.min_exp, b.order + a.min_exp):
    the first unknown coefficient of either factor first affects that exponent.
    """
    order = min(a.order + b.min_exp, b.order + a.min_exp)
    lo = a.min_exp + b.min_exp
    if not a.coeffs or not b.coeffs:
        return LaurentSeries.zero(order)
    # iterate over the operand with fewer nonzero entries
    na = sum(1 for c in a.coeffs if c)
    nb = sum(1 for c in b.coeffs if c)
    if nb < na:
        a, b = b, a
    n = order - lo
    out = [0] * n
    bc = b.coeffs
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        jmax = min(len(bc), n - i)
        if ca == 1:
            for j in range(jmax):
                cb = bc[j]
                if cb:
                    out[i + j] += cb
        elif ca == -1:
            for j in range(jmax):
                cb = bc[j]
                if cb:
                    out[i + j] -= cb
        else:
            for j in range(jmax):
                cb = bc[j]
                if cb:
                    out[i + j] += ca * cb
    return LaurentSeries(lo, out, order)


def inverse(a: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse b with mul(a, b) = 1 + O(q^(a.order - a.min_exp)).

    The lowest-degree coefficient must be nonzero; b.min_exp = -a.min_exp.
    """
    if not a.coeffs:
        raise ZeroLeadingTerm("cannot invert the zero series")
    m = a.min_exp
    length = a.order - m
    lead = a.coeffs[0]
    if lead == 1:
        inv0 = 1
    elif lead == -1:
        inv0 = -1
    else:
        inv0 = _norm(Fraction(1, lead) if isinstance(lead, int) else 1 / lead)
    nz = [(j, c) for j, c in enumerate(a.coeffs) if j and c]
    out = [0] * length
    out[0] = inv0
    for n in range(1, length):
        s = 0
        for j, c in nz:
            if j > n:
                break
            s += c * out[n - j]
        if s:
            out[n] = _norm(-s * inv0)
    return LaurentSeries(-m, out, a.order - 2 * m)


def substitute_power(a: LaurentSeries, k: int) -> LaurentSeries:
    """Substitute q -> q^k (k >= 1); every stored exponent n becomes k*n."""
    if k < 1:
        raise ValueError("substitution power must be >= 1")
    if k == 1 or not a.coeffs:
        return LaurentSeries(a.min_exp * k, a.coeffs, a.order * k)
    out = [0] * ((len(a.coeffs) - 1) * k + 1)
    for i, c in enumerate(a.coeffs):
        out[i * k] = c
    return LaurentSeries(a.min_exp * k, out, a.order * k)


def extract_progression(a: LaurentSeries, m: int, d: int) -> LaurentSeries:
    """Series of the coefficients on the progression mn + d: g_n = a_{mn+d}.

    Requires a.min_exp >= 0 and 0 <= d < m.  The roundtrip
    sum_d q^d * substitute_power(extract_progression(a, m, d), m)
    reproduces a on its guaranteed range.
    """
    if a.min_exp < 0:
        raise NegativeExponent(
            f"progression extraction needs a power series, found min_exp {a.min_exp}"
        )
    if not 0 <= d < m:
        raise ValueError(f"residue {d} not in [0, {m})")
    g_order = -((d - a.order) // m)  # ceil((order - d) / m)
    out = []
    for n in range(max(0, g_order)):
        e = m * n + d
        i = e - a.min_exp
        out.append(a.coeffs[i] if 0 <= i < len(a.coeffs) else 0)
    return LaurentSeries(0, out, max(0, g_order))


def coeff(a: LaurentSeries, n: int) -> Coefficient:
    return a.coeff(n)


def first_mismatch(
    a: LaurentSeries, b: LaurentSeries, start: Optional[int] = None
) -> Optional[Tuple[int, Coefficient, Coefficient]]:
    """First exponent below min(a.order, b.order) where the two series differ.

    Returns (exponent, a-coefficient, b-coefficient), or None if the series
    agree on the whole compared range.  ``start`` restricts the comparison to
    exponents >= start.
    """
    hi = min(a.order, b.order)
    lo = min(a.min_exp, b.min_exp)
    if start is not None:
        lo = max(lo, start)
    for n in range(lo, hi):
        ca = a.coeff(n)
        cb = b.coeff(n)
        if ca != cb:
            return (n, ca, cb)
    return None


def series_equal(a: LaurentSeries, b: LaurentSeries, start: Optional[int] = None) -> bool:
    return first_mismatch(a, b, start=start) is None

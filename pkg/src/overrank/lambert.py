"""Generalized Lambert series: bilateral sums with quadratic exponents and
simple-pole denominators, the sums Sbar(b), and the g-functions.

The workhorse is ``lambert_sum``, which evaluates

    sum_{n in Z} csign^n * q^(quad*n^2 + lin*n) / prod_i (1 - s_i q^(off_i + step_i*n))

exactly as a truncated Laurent series.  Denominators with negative exponent
are rewritten with 1/(1 - s*q^(-m)) = -sum_{k>=1} s^k q^(k*m), the single most
error-prone spot in this whole business, so it lives in one audited place.
Results are assembled in the Laurent layer; power-series positivity is
asserted only where the mathematics promises it.
"""

from __future__ import annotations

import contextvars
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import PoleHit, ZeroExponent
from .products import SignedMonomial, p_mono, p_zero, theta, _poch_raw
from .report import IdentityReport, compare
from .series import LaurentSeries, mul, substitute_power

# extra scan margin past the natural stopping point of a bilateral sum; tests
# widen it to confirm that no contributing term is ever cut off
_EXTRA_RANGE: contextvars.ContextVar = contextvars.ContextVar("overrank_extra_range", default=0)


@contextmanager
def widened_summation(extra: int):
    """Scan `extra` additional indices on both sides of every bilateral sum."""
    token = _EXTRA_RANGE.set(extra)
    try:
        yield
    finally:
        _EXTRA_RANGE.reset(token)


@dataclass(frozen=True)
class LambertSpec:
    """Sum(z, zeta, q^base); primed sums omit the n = 0 term (and need z = q^0)."""

    z: SignedMonomial
    zeta: SignedMonomial
    base: int
    primed: bool = False

    def __post_init__(self):
        if self.base < 1:
            raise ValueError("base must be positive")
        if self.primed and (self.z.sign, self.z.exp) != (1, 0):
            raise ValueError("primed sums are defined for z = q^0 only")


@dataclass(frozen=True)
class GFuncSpec:
    """Index form g(a) over the prime ell; a must not be a multiple of ell."""

    a: int
    ell: int

    def __post_init__(self):
        if self.a % self.ell == 0:
            raise ValueError(f"index {self.a} is a multiple of {self.ell}")


def expand_geom(e: int, order: int) -> LaurentSeries:
    """1/(1 - q^e) for e != 0; e < 0 expands as -sum_{k>=1} q^(-k*e)."""
    return _geom(1, e, order)


def _geom(sign: int, e: int, order: int) -> LaurentSeries:
    if e == 0:
        raise ZeroExponent("geometric expansion needs a nonzero exponent")
    if order <= 0:
        return LaurentSeries.zero(order)
    if e > 0:
        out = [0] * order
        k = 0
        while k * e < order:
            out[k * e] = 1 if sign == 1 or k % 2 == 0 else -1
            k += 1
        return LaurentSeries(0, out, order)
    f = -e
    if f >= order:
        return LaurentSeries.zero(order)
    out = [0] * (order - f)
    k = 1
    while k * f < order:
        out[k * f - f] = -1 if sign == 1 or k % 2 == 0 else 1
        k += 1
    return LaurentSeries(f, out, order)


def lambert_sum(quad, lin, csign, denoms, order, primed=False) -> LaurentSeries:
    """Bilateral sum csign^n q^(quad n^2 + lin n) / prod (1 - s q^(off + step n)).

    `denoms` is a sequence of (sign, offset, step) triples.  A denominator that
    vanishes identically at some n raises PoleHit, unless that n is 0 and the
    sum is primed (n = 0 omitted).  A denominator equal to 2 at some n (sign -1,
    exponent 0) contributes the exact scalar 1/2.
    """
    if quad < 1:
        raise ValueError("quadratic coefficient must be positive")
    for s, off, step in denoms:
        if s == 1 and off % step == 0:
            n0 = -off // step
            if not (primed and n0 == 0):
                raise PoleHit(f"denominator 1 - q^({off} + {step}n) vanishes at n = {n0}")

    guard = (abs(lin) + sum(abs(s) for _, _, s in denoms)) // quad
    guard += max((abs(o) for _, o, _ in denoms), default=0) + 3
    extra = _EXTRA_RANGE.get()

    def term_min(n):
        m = quad * n * n + lin * n
        for s, off, step in denoms:
            e = off + step * n
            if e < 0:
                m -= e
        return m

    def build(n):
        shift = quad * n * n + lin * n
        c = 1 if csign == 1 or n % 2 == 0 else -1
        exps = []
        halves = 0
        for s, off, step in denoms:
            e = off + step * n
            if e == 0:
                halves += 1  # sign is -1 here: factor 1/(1+1)
            else:
                exps.append((s, e, max(0, -e)))
        total_gmin = sum(g for _, _, g in exps)
        rel = LaurentSeries.one(order - shift) if not exps else None
        if exps:
            parts = [
                _geom(s, e, order - shift - (total_gmin - g)) for s, e, g in exps
            ]
            rel = reduce(mul, parts)
        t = rel.shift(shift)
        if halves:
            c = c * Fraction(1, 2 ** halves)
        return t if c == 1 else t.scale(c)

    total = LaurentSeries.zero(order)
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        stop_at = None
        while True:
            if primed and n == 0:
                skip = True
            else:
                skip = term_min(n) >= order
                if not skip:
                    total = total + build(n)
            if skip and abs(n) > guard:
                if stop_at is None:
                    stop_at = abs(n) + extra
                if abs(n) >= stop_at:
                    break
            n += direction
    return total.truncate(order)


def sigma(spec: LambertSpec, order: int) -> LaurentSeries:
    """Sum(z, zeta, q^base) = sum_n (-1)^n zeta^n q^(base(n^2+n)) / (1 - z q^(base n))."""
    z, zeta = spec.z, spec.zeta
    return lambert_sum(
        spec.base,
        zeta.exp + spec.base,
        -zeta.sign,
        [(z.sign, z.exp, spec.base)],
        order,
        primed=spec.primed,
    )


def sigma_ab(a: int, b: int, ell: int, order: int) -> LaurentSeries:
    """Index form Sum(a, b) = sum_n (-1)^n y^(bn + ell*n(n+1)) / (1 - y^(ell*n + a)),
    as a series in the base variable y.  Any integer a with a % ell != 0 works;
    out-of-range indices simply produce intermediate negative exponents."""
    return lambert_sum(ell, b + ell, -1, [(1, a, ell)], order)


def sigma_primed(b: int, ell: int, order: int) -> LaurentSeries:
    """Sum(0, b): the n = 0 term is omitted; denominators are 1 - y^(ell*n)."""
    return lambert_sum(ell, b + ell, -1, [(1, 0, ell)], order, primed=True)


def s_bar(b: int, ell: int, order: int) -> LaurentSeries:
    """Sbar(b) = sum'_{n != 0} (-1)^n q^(n^2 + bn) / (1 - q^(ell*n)), base q."""
    out = lambert_sum(1, b, -1, [(1, 0, ell)], order, primed=True)
    if out.min_exp < 0:
        raise AssertionError(f"Sbar({b}) produced negative exponents: {out!r}")
    return out


# ----------------------------------------------------------------------
# the g-functions
# ----------------------------------------------------------------------


def g_series(z_sign: int, z_exp: int, base: int, order: int) -> LaurentSeries:
    """Generic g(z, q^base) at z = s*q^e:

        g(z,q) = z P(z^2)P(-1)/(P(z)P(-z)) Sum(z,1,q) - z^2 Sum(z^2,z^2,q)
                 - sum'_{n != 0} (-1)^n z^(-2n) q^(n(n+1)) / (1 - q^n).

    Negative and oversized exponents are legal; they route through the same
    Laurent machinery (used for the reflection and shift identities).
    """
    s, e = z_sign, z_exp
    n = order + 4 * abs(e) + 2 * base + 2
    sig1 = lambert_sum(base, base, -1, [(s, e, base)], n)
    ratio = (p_mono(1, 2 * e, base, n) * p_mono(-1, 0, base, n)) / (
        p_mono(s, e, base, n) * p_mono(-s, e, base, n)
    )
    f1 = mul(sig1, ratio).shift(e)
    if s < 0:
        f1 = -f1
    f2 = lambert_sum(base, 2 * e + base, -1, [(1, 2 * e, base)], n).shift(2 * e)
    f3 = lambert_sum(base, base - 2 * e, -1, [(1, 0, base)], n, primed=True)
    return (f1 - f2 - f3).truncate(order)


def g_index(a: int, ell: int, order: int) -> LaurentSeries:
    """g(a) = g(y^a, y^ell) as a power series in the base variable y."""
    out = g_series(1, a, ell, order)
    if out.min_exp < 0:
        raise AssertionError(f"g({a}) produced negative exponents: {out!r}")
    return out


def g_func(spec: GFuncSpec, order: int) -> LaurentSeries:
    """g(a) as a q-series, with y = q^ell."""
    y_order = -(-order // spec.ell)
    return substitute_power(g_index(spec.a, spec.ell, y_order), spec.ell).truncate(order)


# ----------------------------------------------------------------------
# identity checks on the Lambert layer
# ----------------------------------------------------------------------


def bilateral_theta(quad: int, lin: int, csign: int, order: int) -> LaurentSeries:
    """sum_{n in Z} csign^n q^(quad*n^2 + lin*n)."""
    return lambert_sum(quad, lin, csign, [], order)


def check_sigma_shift(z: SignedMonomial, zeta: SignedMonomial, base: int, order: int) -> IdentityReport:
    """z^2 Sum(z,zeta,q) + zeta Sum(zq,zeta,q) = -sum_n (-1)^n zeta^n q^(n(n-1)) (1 + z q^n)."""
    sz, ez = z.sign, z.exp
    sc, ec = zeta.sign, zeta.exp
    n = order + 2 * (ez + ec + base) + 2
    lhs = lambert_sum(base, ec + base, -sc, [(sz, ez, base)], n).shift(2 * ez)
    rhs2 = lambert_sum(base, ec + base, -sc, [(sz, ez + base, base)], n).shift(ec)
    if sc < 0:
        rhs2 = -rhs2
    lhs = lhs + rhs2
    t1 = bilateral_theta(base, ec - base, -sc, n)
    t2 = bilateral_theta(base, ec, -sc, n).shift(ez)
    if sz < 0:
        t2 = -t2
    rhs = -(t1 + t2)
    tag = f"sigma-shift@z={z},zeta={zeta},base={base}"
    return compare(tag, lhs.truncate(order), rhs.truncate(order))


def check_step(z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """z^2 Sum(z,1,q) + Sum(zq,1,q) = -z (q;q)_inf / (-q;q)_inf at q = q^base."""
    sz, ez = z.sign, z.exp
    n = order + 2 * (ez + base) + 2
    lhs = lambert_sum(base, base, -1, [(sz, ez, base)], n).shift(2 * ez)
    lhs = lhs + lambert_sum(base, base, -1, [(sz, ez + base, base)], n)
    rhs = (_poch_raw(1, base, base, n) / _poch_raw(-1, base, base, n)).shift(ez)
    rhs = rhs if sz < 0 else -rhs
    tag = f"step@z={z},base={base}"
    return compare(tag, lhs.truncate(order), rhs.truncate(order))


def check_short(z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """Sum(z,1,q) + z^-2 Sum(z^-1,1,q) = -z^-1 sum_n (-1)^n q^(n^2) at q = q^base."""
    sz, ez = z.sign, z.exp
    n = order + 4 * ez + 2 * base + 2
    lhs = lambert_sum(base, base, -1, [(sz, ez, base)], n)
    lhs = lhs + lambert_sum(base, base, -1, [(sz, -ez, base)], n).shift(-2 * ez)
    rhs = theta(SignedMonomial(-1, 0), base, n).shift(-ez)
    rhs = rhs if sz < 0 else -rhs
    tag = f"short@z={z},base={base}"
    return compare(tag, lhs.truncate(order), rhs.truncate(order))


def check_constant(z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """g(z,q) - g(zq,q) = -2."""
    lhs = g_series(z.sign, z.exp, base, order) - g_series(z.sign, z.exp + base, base, order)
    rhs = LaurentSeries.monomial(-2, 0, order)
    return compare(f"constant@z={z},base={base}", lhs, rhs)


def check_gees(z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """g(z^-1, q) + g(z, q) = -1."""
    lhs = g_series(z.sign, -z.exp, base, order) + g_series(z.sign, z.exp, base, order)
    rhs = LaurentSeries.monomial(-1, 0, order)
    return compare(f"gees@z={z},base={base}", lhs, rhs)


def check_g2(a: int, ell: int, order: int) -> IdentityReport:
    """g(a) + g(ell - a) = 1, in the base variable y."""
    lhs = g_index(a, ell, order) + g_index(ell - a, ell, order)
    rhs = LaurentSeries.one(order)
    return compare(f"g2@a={a},ell={ell}", lhs, rhs)


def check_g1(a: int, ell: int, order: int) -> IdentityReport:
    """2g(a) - g(2a) + 1/2 = P(-y^4a)P(0)^2/(P(4a)P(-1))
    + y^a P(-1)^2 P(0)^2 P(2a) / (P(a)^2 P(-y^a)^2), in the base variable y."""
    n = order + 6 * ell + 8 * a
    lhs = 2 * g_series(1, a, ell, n) - g_series(1, 2 * a, ell, n)
    lhs = lhs + LaurentSeries.monomial(Fraction(1, 2), 0, n)
    p0_sq = p_zero(ell, n) ** 2
    rhs = (p_mono(-1, 4 * a, ell, n) * p0_sq) / (p_mono(1, 4 * a, ell, n) * p_mono(-1, 0, ell, n))
    second = (p_mono(-1, 0, ell, n) ** 2 * p0_sq * p_mono(1, 2 * a, ell, n)) / (
        p_mono(1, a, ell, n) ** 2 * p_mono(-1, a, ell, n) ** 2
    )
    rhs = rhs + second.shift(a)
    return compare(f"g1@a={a},ell={ell}", lhs.truncate(order), rhs.truncate(order))


def check_part1(z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """2g(z,q) - g(z^2,q) + 1/2 = (q)^2 P(-z^4)/(P(z^4)P(-1))
    + z P(-1)^2 (q)^2 P(z^2) / (P(z)^2 P(-z)^2)."""
    s, e = z.sign, z.exp
    n = order + 10 * e + 4 * base
    lhs = 2 * g_series(s, e, base, n) - g_series(1, 2 * e, base, n)
    lhs = lhs + LaurentSeries.monomial(Fraction(1, 2), 0, n)
    esq = _poch_raw(1, base, base, n) ** 2
    rhs = (esq * p_mono(-1, 4 * e, base, n)) / (p_mono(1, 4 * e, base, n) * p_mono(-1, 0, base, n))
    second = (p_mono(-1, 0, base, n) ** 2 * esq * p_mono(1, 2 * e, base, n)) / (
        p_mono(s, e, base, n) ** 2 * p_mono(-s, e, base, n) ** 2
    )
    second = second.shift(e)
    if s < 0:
        second = -second
    rhs = rhs + second
    return compare(f"part1@z={z},base={base}", lhs.truncate(order), rhs.truncate(order))


def verify_lemma42(part: str, z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """The two halves of the second key identity: part1 as stated, part2 in the
    reflected form g(z,q) + g(z^-1 q, q) = 1."""
    if part == "part1":
        return check_part1(z, base, order)
    if part == "part2":
        s, e = z.sign, z.exp
        lhs = g_series(s, e, base, order) + g_series(s, base - e, base, order)
        return compare(f"part2@z={z},base={base}", lhs, LaurentSeries.one(order))
    raise ValueError(f"unknown part {part!r}")


def verify_lemma41(zeta: SignedMonomial, z: SignedMonomial, base: int, order: int) -> IdentityReport:
    """Bilateral two-pole sum equals a P-quotient multiple of Sum(z,1,q) plus a
    pure product:

        sum_n (-1)^n q^(n^2+n) [ zeta^-2n/(1 - z zeta^-1 q^n) + zeta^(2n+2)/(1 - z zeta q^n) ]
        = zeta P(zeta^2)P(-1)/(P(zeta)P(-zeta)) Sum(z,1,q)
          + P(zeta)P(zeta^2)P(-z)(q;q)^2 / (P(z)P(z zeta)P(z/zeta)P(-zeta)).
    """
    sc, ec = zeta.sign, zeta.exp
    sz, ez = z.sign, z.exp
    n = order + 4 * (ec + ez) + 4 * base

    lhs = lambert_sum(base, base - 2 * ec, -1, [(sz * sc, ez - ec, base)], n)
    lhs = lhs + lambert_sum(base, base + 2 * ec, -1, [(sz * sc, ez + ec, base)], n).shift(2 * ec)

    sig = lambert_sum(base, base, -1, [(sz, ez, base)], n)
    coeff = (p_mono(1, 2 * ec, base, n) * p_mono(-1, 0, base, n)) / (
        p_mono(sc, ec, base, n) * p_mono(-sc, ec, base, n)
    )
    first = mul(sig, coeff).shift(ec)
    if sc < 0:
        first = -first
    esq = _poch_raw(1, base, base, n) ** 2
    prod = (p_mono(sc, ec, base, n) * p_mono(1, 2 * ec, base, n) * p_mono(-sz, ez, base, n) * esq) / (
        p_mono(sz, ez, base, n)
        * p_mono(sz * sc, ez + ec, base, n)
        * p_mono(sz * sc, ez - ec, base, n)
        * p_mono(-sc, ec, base, n)
    )
    rhs = first + prod
    tag = f"lemma4.1@zeta={zeta},z={z},base={base}"
    return compare(tag, lhs.truncate(order), rhs.truncate(order))

"""Verification reports: the uniform result record for every identity check."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from .series import Coefficient, LaurentSeries, first_mismatch


@dataclass(frozen=True)
class Mismatch:
    exp: int
    lhs: Coefficient
    rhs: Coefficient


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of comparing two truncated series coefficientwise.

    ``ok`` is True iff no mismatch was found below ``checked_order`` (the
    range on which both sides are guaranteed exact).  ``window`` carries a
    few coefficients of both sides around the first mismatch, the primary
    debugging aid for transcription errors.
    """

    id: str
    ok: bool
    checked_order: int
    first_mismatch: Optional[Mismatch] = None
    runtime_ms: int = 0
    notes: str = ""
    window: Tuple[Tuple[int, Coefficient, Coefficient], ...] = ()

    def with_id(self, new_id: str) -> "IdentityReport":
        return replace(self, id=new_id)

    def with_runtime(self, ms: int) -> "IdentityReport":
        return replace(self, runtime_ms=ms)

    def with_notes(self, notes: str) -> "IdentityReport":
        return replace(self, notes=notes)

    def to_json_dict(self, include_runtime: bool = True) -> dict:
        fm = None
        if self.first_mismatch is not None:
            fm = {
                "exp": self.first_mismatch.exp,
                "lhs": _frac_str(self.first_mismatch.lhs),
                "rhs": _frac_str(self.first_mismatch.rhs),
            }
        out = {
            "id": self.id,
            "pass": self.ok,
            "checked_order": self.checked_order,
            "first_mismatch": fm,
            "runtime_ms": self.runtime_ms if include_runtime else 0,
            "notes": self.notes,
        }
        return out


def _frac_str(c: Coefficient) -> str:
    f = Fraction(c)
    return f"{f.numerator}/{f.denominator}"


def _assert_dyadic(series: LaurentSeries) -> None:
    # the only non-integer scalars in this circle of identities are halves, so
    # every denominator must be a power of two; anything else is an engine bug
    for _, c in series.terms():
        d = c.denominator
        if d & (d - 1):
            raise AssertionError(f"non-dyadic coefficient {c} in {series!r}")


def compare(
    id: str,
    lhs: LaurentSeries,
    rhs: LaurentSeries,
    start: Optional[int] = None,
    notes: str = "",
) -> IdentityReport:
    """Compare two series on their common guaranteed range."""
    _assert_dyadic(lhs)
    _assert_dyadic(rhs)
    checked = min(lhs.order, rhs.order)
    fm = first_mismatch(lhs, rhs, start=start)
    if fm is None:
        return IdentityReport(id=id, ok=True, checked_order=checked, notes=notes)
    e = fm[0]
    window = tuple(
        (n, lhs.coeff(n), rhs.coeff(n))
        for n in range(max(e - 2, min(lhs.min_exp, rhs.min_exp)), min(e + 3, checked))
    )
    return IdentityReport(
        id=id,
        ok=False,
        checked_order=checked,
        first_mismatch=Mismatch(exp=e, lhs=fm[1], rhs=fm[2]),
        notes=notes,
        window=window,
    )


def merge(id: str, reports: list) -> IdentityReport:
    """Combine sub-checks (e.g. several sampled instantiations) into one report.

    The merged report fails with the first failing sub-report's mismatch; its
    checked_order is the smallest among the parts.
    """
    if not reports:
        raise ValueError("cannot merge an empty report list")
    checked = min(r.checked_order for r in reports)
    notes = "; ".join(sorted({r.notes for r in reports if r.notes}))
    for r in reports:
        if not r.ok:
            return replace(r, id=id, checked_order=checked, notes=notes)
    return IdentityReport(id=id, ok=True, checked_order=checked, notes=notes)

"""Exception types raised by the series engine and the verification layers."""


class OverrankError(Exception):
    """Base class for all errors raised by this package."""


class ZeroLeadingTerm(OverrankError, ZeroDivisionError):
    """Attempt to invert the zero series (or a series with no leading term)."""


class NegativeExponent(OverrankError, ValueError):
    """A power-series-only operation was applied to a series with negative exponents."""


class BeyondTruncation(OverrankError, IndexError):
    """A coefficient at or beyond the truncation order was requested."""


class ZeroExponent(OverrankError, ZeroDivisionError):
    """Geometric expansion of 1/(1 - q^e) requested with e = 0."""


class PoleHit(OverrankError, ZeroDivisionError):
    """A bilateral sum has a term whose denominator vanishes identically."""


class CapExceeded(OverrankError, ValueError):
    """Enumeration was requested above the configured cap."""


class UnknownIdentity(OverrankError, KeyError):
    """The identity registry has no entry with the requested id."""

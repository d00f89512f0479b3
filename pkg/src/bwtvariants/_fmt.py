"""Decimal rendering. Every report number uses half-up rounding."""

from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction


def as_decimal(x) -> Decimal:
    if isinstance(x, Decimal):
        return x
    if isinstance(x, int):
        return Decimal(x)
    if isinstance(x, Fraction):
        return Decimal(x.numerator) / Decimal(x.denominator)
    return Decimal(str(x))


def fmt(x, places: int) -> str:
    """Fixed-point string with exactly `places` digits after the point."""
    q = Decimal(1).scaleb(-places)
    return str(as_decimal(x).quantize(q, rounding=ROUND_HALF_UP))


def half_up_int(x) -> int:
    return int(as_decimal(x).quantize(Decimal(1), rounding=ROUND_HALF_UP))

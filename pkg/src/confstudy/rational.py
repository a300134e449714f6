"""Exact rational helpers on top of :class:`fractions.Fraction`."""

from fractions import Fraction
from numbers import Rational

from .errors import SchemaError

__all__ = ["Fraction", "as_rational", "fmt", "parse_rational", "to_decimal_str"]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    try:
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"not a rational string: {s!r}") from exc


def fmt(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def to_decimal_str(r: Fraction, digits: int = 12) -> str:
    """Decimal rendering rounded to ``digits`` places, trailing zeros stripped."""
    scale = 10**digits
    n = abs(r.numerator) * scale
    q, rem = divmod(n, r.denominator)
    if 2 * rem >= r.denominator:
        q += 1
    whole, frac = divmod(q, scale)
    sign = "-" if r < 0 and q else ""
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).rjust(digits, '0').rstrip('0')}"

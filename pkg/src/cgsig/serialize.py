"""JSON helpers: big integers and exact rationals."""
from __future__ import annotations

from fractions import Fraction

_SAFE = 2 ** 53


def encode_int(n: int):
    """Plain JSON number when it survives a double round-trip, else a decimal string."""
    n = int(n)
    return n if -_SAFE < n < _SAFE else str(n)


def decode_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("boolean is not an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    raise TypeError(f"expected integer, got {type(x).__name__}")


def format_rational(x) -> str:
    """``"p/q"`` in lowest terms with the sign on ``p``; integers bare."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, bool):
        raise TypeError("boolean is not a rational")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise TypeError(f"expected rational string, got {type(s).__name__}")
    return Fraction(s.strip())

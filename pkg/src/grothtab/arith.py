"""Exact scalar arithmetic shared by every other module.

Integers are plain Python ints (arbitrary precision, canonical zero) and
rationals are fractions.Fraction, which is reduced on construction and keeps
a positive denominator, so equality is value equality.  All functions here
are pure; values are immutable and safe to share between threads.
"""

from fractions import Fraction
from math import comb

Rational = Fraction


def pochhammer(a, m: int) -> Fraction:
    """Rising factorial a(a+1)...(a+m-1); the empty product (m=0) is 1.

    Vanishes exactly when a is a non-positive integer -j and m > j, which is
    what terminates every series evaluated in this package.
    """
    if m < 0:
        raise ValueError(f"pochhammer needs m >= 0, got {m}")
    a = Fraction(a)
    value = Fraction(1)
    for i in range(m):
        value *= a + i
    return value


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k lies outside 0..n.

    Negative n is rejected: the callers that need generalized arguments go
    through pochhammer instead.
    """
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' (base-10 integers) into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value) -> str:
    """Render a rational as 'p/q', or plain 'p' when the denominator is 1."""
    return str(Fraction(value))


def rational_pair(value) -> tuple[int, int]:
    """(numerator, denominator) in lowest terms, denominator positive."""
    value = Fraction(value)
    return (value.numerator, value.denominator)

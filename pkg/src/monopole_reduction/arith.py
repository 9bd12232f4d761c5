"""Exact integer and rational helpers.

Rationals are :class:`fractions.Fraction` throughout; nothing in the
computation path ever touches a float.
"""
from fractions import Fraction
from math import comb

from .errors import CongruenceError, InputError

Rational = Fraction


def binomial(t, k):
    """Generalized binomial coefficient t(t-1)...(t-k+1)/k!.

    Defined for every integer ``t`` (negative allowed) and ``k >= 0``;
    zero for ``k < 0``.
    """
    if k < 0:
        return 0
    if t >= 0:
        return comb(t, k)
    # C(-s, k) = (-1)^k C(s+k-1, k)
    sign = -1 if k % 2 else 1
    return sign * comb(k - t - 1, k)


def pow2(e):
    """2**e as an exact rational, for any integer exponent."""
    return Fraction(2**e) if e >= 0 else Fraction(1, 2**-e)


def sign_power(e):
    """(-1)**e for any integer e, as an int."""
    return -1 if e % 2 else 1


def exact_div(num, den, what="quantity"):
    """Integer division that refuses to round."""
    q, r = divmod(num, den)
    if r:
        raise CongruenceError(f"{what} is not integral: {num}/{den}")
    return q


def format_rational(q):
    """Canonical text form: "p/q" with q > 0 in lowest terms, or "p"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    try:
        value = Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {text!r}") from exc
    if "." in str(text) or "e" in str(text).lower():
        raise InputError(f"rationals must be written p/q, got {text!r}")
    return value

"""Donaldson series of simple-type manifolds, expanded coefficient by coefficient.

The series e^{Q/2} sum_r (-1)^{(w^2 + w.K_r)/2} a_r e^{K_r} is evaluated on
h^d as d! times the t^d coefficient of the series at t h.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .arith import exact_div, pow2, sign_power
from .errors import CongruenceError, LiftMismatchError, NonIntegralReductionError
from .lattice import LatticeVector, half_difference, pair, square


@dataclass(frozen=True)
class SeriesSpec:
    w: LatticeVector
    terms: tuple
    include_witten_constant: bool = False

    def __post_init__(self):
        terms = tuple((K, Fraction(c)) for K, c in self.terms)
        object.__setattr__(self, "terms", terms)
        w2 = square(self.w)
        for K, _ in terms:
            if (w2 + pair(self.w, K)) % 2:
                raise CongruenceError(
                    f"w^2 + w.K is odd for K = {list(K.coords)}; sign undefined"
                )

    def signs(self):
        w2 = square(self.w)
        return [sign_power((w2 + pair(self.w, K)) // 2) for K, _ in self.terms]


def witten_constant(m):
    """2^{2 + (7e + 11 sigma)/4}."""
    return pow2(2 + exact_div(7 * m.euler + 11 * m.signature, 4, "(7e + 11 sigma)/4"))


def witten_coefficients(m, sw_data):
    c = witten_constant(m)
    return [(d.K, c * d.sw) for d in sw_data]


def witten_series(m, w, sw_data):
    return SeriesSpec(w, [(d.K, d.sw) for d in sw_data], include_witten_constant=True)


def km_series(w, classes):
    """Series with explicit Kronheimer-Mrowka coefficients a_r."""
    return SeriesSpec(w, list(classes), include_witten_constant=False)


def series_invariant(spec, m, h, d):
    """D^w(h^d) read off the series."""
    q = square(h)
    total = Fraction(0)
    for sign, (K, coeff) in zip(spec.signs(), spec.terms):
        kh = pair(K, h)
        inner = Fraction(0)
        for k in range(d // 2 + 1):
            inner += Fraction(q**k * kh ** (d - 2 * k), 2**k * factorial(k) * factorial(d - 2 * k))
        total += sign * coeff * inner
    total *= factorial(d)
    if spec.include_witten_constant:
        total *= witten_constant(m)
    return total


def orientation_sign(w1, w2):
    """(-1)^{(w1 - w2)^2 / 4} for two integral lifts of the same w2."""
    try:
        half = half_difference(w1, w2)
    except NonIntegralReductionError as exc:
        raise LiftMismatchError(str(exc)) from None
    return sign_power(square(half))


def reduce_point_powers(m):
    """Kronheimer-Mrowka simple type: D(x^2 z) = 4 D(z).

    Returns (m mod 2, factor) with D(x^m z) = factor * D(x^(m mod 2) z).
    Never applied implicitly by the series path.
    """
    return m % 2, 4 ** (m // 2)

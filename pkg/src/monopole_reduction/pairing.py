"""Jacobi polynomials, link pairings of top-level reducibles, and the
reduction formulas expressing Donaldson invariants through SW invariants.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import binomial, pow2, sign_power
from .errors import ConsistencyError, DegreeError, InputError, NotSimpleTypeError, SetupError, UnsupportedLevelError
from .index import dimension_report
from .lattice import pair, square


@dataclass(frozen=True)
class InvariantMonomial:
    """z = beta_1 ... beta_k x^m, paired against mu_p1, times mu_c1(x)^n_c1."""

    betas: tuple = ()
    m: int = 0
    n_c1: int = 0

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(self.betas))
        if self.m < 0 or self.n_c1 < 0:
            raise InputError("monomial exponents must be non-negative")

    @property
    def n_p1(self):
        return len(self.betas) + 2 * self.m

    @property
    def degree(self):
        # each beta in H_2 contributes 2, each x in H_0 contributes 4
        return 2 * self.n_p1 + 2 * self.n_c1


@dataclass(frozen=True)
class PairingResult:
    value: Fraction
    per_reducible: list = field(default_factory=list)

    def __post_init__(self):
        assert self.value == sum((v for _, v in self.per_reducible), Fraction(0))


def jacobi(a, b, n, x):
    """P_n^(a,b)(x) from its defining finite sum, with generalized binomials."""
    x = Fraction(x)
    total = Fraction(0)
    for k in range(n + 1):
        coeff = binomial(n + a, k) * binomial(n + b, n - k)
        if coeff:
            total += coeff * (x - 1) ** (n - k) * (x + 1) ** k
    return total * pow2(-n)


def c_constant(n_p1, n_c1, d_s, n_lambda_s):
    """C(n_p1, n_c1) = P_{d_s}^{(I,J)}(0) in its binomial-sum form."""
    if d_s < 0:
        raise SetupError(f"d_s must be non-negative, got {d_s}")
    top = n_p1 - n_lambda_s
    total = sum(sign_power(u) * binomial(n_c1, u) * binomial(top, d_s - u) for u in range(d_s + 1))
    value = total * pow2(-d_s)
    assert value == jacobi(top - d_s, n_c1 - d_s, d_s, 0)
    return value


def _check_monomial(m, report, z):
    if m.b1 > 1:
        raise SetupError(f"link pairing formula needs b1 <= 1, got b1 = {m.b1}")
    if z.n_p1 + z.n_c1 != report.d_a + report.n_a - 1:
        raise DegreeError(
            f"n_p1 + n_c1 = {z.n_p1 + z.n_c1} but d_a + n_a - 1 = {report.d_a + report.n_a - 1}"
        )


def link_pairing(m, g, r, z, report=None):
    """Pairing of mu_p1(z) mu_c1(x^n_c1) with the link of a top-level reducible."""
    if r.level != 0:
        raise UnsupportedLevelError([r.level])
    report = report or dimension_report(m, g)
    _check_monomial(m, report, z)
    diff = 2 * r.L1 - g.c1E  # = K - F
    prod = 1
    for beta in z.betas:
        prod *= pair(diff, beta)
    C = c_constant(z.n_p1, z.n_c1, r.d_s, report.n_lambda_s)
    return sign_power(z.m) * pow2(-z.n_p1 + r.d_s) * C * r.sw * prod


def _require_top_level(data):
    lower = [r.level for r in data if r.level != 0]
    if lower:
        raise UnsupportedLevelError(lower)


def link_sum(m, g, data, z, report=None):
    """Signed sum over reducibles of (-1)^{L1^2} times the link pairing."""
    report = report or dimension_report(m, g)
    terms = [(r, sign_power(square(r.L1)) * link_pairing(m, g, r, z, report)) for r in data]
    return PairingResult(sum((v for _, v in terms), Fraction(0)), terms)


def reduction_donaldson(m, g, data, z):
    """D^{c1(E)}_X(z) from the cobordism to the links of top-level reducibles.

    2^{n_a - 1} D(z) = - sum_{L1} (-1)^{L1^2} <link pairing>.  Above the
    critical degree (n_p1 > d_a) the anti-self-dual link contributes
    nothing, so the reducible links must cancel; that is checked and the
    invariant is returned as 0.
    """
    _require_top_level(data)
    report = dimension_report(m, g)
    if report.n_a <= 0:
        raise SetupError(f"n_a = {report.n_a}; the reduction formula needs n_a > 0")
    if report.d_a < 0:
        raise SetupError(f"d_a = {report.d_a}; the reduction formula needs d_a >= 0")
    if z.n_p1 < report.d_a:
        raise DegreeError(f"n_p1 = {z.n_p1} is below d_a = {report.d_a}")
    links = link_sum(m, g, data, z, report)
    if z.n_p1 > report.d_a:
        if links.value != 0:
            raise ConsistencyError(
                f"reducible links sum to {links.value} above the critical degree; expected 0"
            )
        return PairingResult(Fraction(0), [(r, Fraction(0)) for r, _ in links.per_reducible])
    scale = -pow2(1 - report.n_a)
    return PairingResult(scale * links.value, [(r, scale * v) for r, v in links.per_reducible])


def simple_type_donaldson(m, g, data, z):
    """Closed form valid when every basic class has d_s = 0."""
    _require_top_level(data)
    bad = [r for r in data if r.d_s != 0]
    if bad:
        raise NotSimpleTypeError(f"{len(bad)} reducible(s) with d_s != 0")
    report = dimension_report(m, g)
    _check_monomial(m, report, z)
    if z.n_p1 != report.d_a:
        raise DegreeError(f"simple-type formula needs n_p1 = d_a = {report.d_a}, got {z.n_p1}")
    scale = sign_power(z.m - 1) * pow2(1 - report.d_a - report.n_a)
    terms = []
    for r in data:
        diff = 2 * r.L1 - g.c1E
        prod = 1
        for beta in z.betas:
            prod *= pair(diff, beta)
        terms.append((r, sign_power(square(r.L1)) * scale * r.sw * prod))
    return PairingResult(sum((v for _, v in terms), Fraction(0)), terms)

"""Expected dimensions and indices of the moduli spaces."""
from dataclasses import dataclass

from .arith import exact_div
from .errors import AdmissibilityError
from .lattice import square


@dataclass(frozen=True)
class DimensionReport:
    p1: int
    d_a: int
    n_a: int
    dim_M_star: int
    n_lambda_s: int

    def __post_init__(self):
        assert self.dim_M_star == 2 * self.d_a + 2 * self.n_a - 1


def compute_p1(g):
    """p1(su(E)) = c1(E)^2 - 4 c2(E)."""
    return square(g.c1E) - 4 * g.c2E


def dim_asd(m, p1):
    """d_a: half the dimension of the anti-self-dual moduli space.

    2 d_a = -2 p1 - 3(1 - b1 + b+).
    """
    chi = 1 - m.b1 + m.bplus
    if chi % 2:
        raise AdmissibilityError(f"1 - b1 + b+ = {chi} is odd; manifold is not admissible")
    return -p1 - 3 * (chi // 2)


def dim_dirac(m, g):
    """n_a = (p1 + F^2 - sigma) / 4, the complex index of the Dirac operator."""
    return exact_div(compute_p1(g) + square(g.F) - m.signature, 4, "n_a")


def dim_sw(m, K):
    """d_s = (K^2 - 2e - 3 sigma) / 8, half the Seiberg-Witten moduli dimension."""
    return exact_div(square(K) - 2 * m.euler - 3 * m.signature, 8, "d_s")


def n_lambda_s(m, p1):
    return -p1 - exact_div(m.euler + m.signature, 2, "(e + sigma)/2")


def dimension_report(m, g):
    p1 = compute_p1(g)
    d_a = dim_asd(m, p1)
    n_a = dim_dirac(m, g)
    return DimensionReport(
        p1=p1,
        d_a=d_a,
        n_a=n_a,
        dim_M_star=2 * d_a + 2 * n_a - 1,
        n_lambda_s=n_lambda_s(m, p1),
    )

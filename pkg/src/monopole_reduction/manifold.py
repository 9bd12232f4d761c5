"""Four-manifold, spin-c and bundle data; the elliptic-surface catalog."""
from dataclasses import dataclass, field
from math import comb

from .arith import exact_div, sign_power
from .errors import InputError, SetupError
from .lattice import (
    IntersectionLattice,
    LatticeVector,
    diagonal,
    direct_sum,
    embed,
    is_characteristic,
    square,
)


@dataclass(frozen=True)
class FourManifold:
    """Topological data of a closed oriented four-manifold.

    ``euler``, ``signature``, ``b1`` and ``bplus`` are stored independently
    of the lattice: the lattice only needs to carry the classes whose
    pairings enter the formulas, so it may model a sublattice of H^2.
    """

    euler: int
    signature: int
    b1: int
    bplus: int
    lattice: IntersectionLattice
    labels: dict = field(default_factory=dict)
    simply_connected: bool = False

    def __post_init__(self):
        if self.b1 < 0:
            raise InputError("b1 must be non-negative")
        if self.bplus < 1:
            raise InputError("bplus must be positive")
        for name, v in self.labels.items():
            if v.lattice != self.lattice:
                raise InputError(f"label {name!r} does not live in the manifold lattice")

    @property
    def b2(self):
        return self.euler - 2 + 2 * self.b1

    @property
    def sublattice_mode(self):
        return self.lattice.rank < self.b2

    def admissible(self):
        return (self.bplus - self.b1) % 2 == 1

    def vector(self, coords):
        return self.lattice.vector(coords)

    def label(self, name):
        try:
            return self.labels[name]
        except KeyError:
            raise InputError(f"unknown class label {name!r}") from None


@dataclass(frozen=True)
class GaugeSetup:
    """c1(W+), c1(E) and c2(E) for a spin-c structure and U(2) bundle E."""

    c1W: LatticeVector
    c1E: LatticeVector
    c2E: int

    def __post_init__(self):
        if self.c1W.lattice != self.c1E.lattice:
            raise InputError("c1W and c1E must lie in the same lattice")

    @property
    def p1(self):
        """p1(su(E)) = c1(E)^2 - 4 c2(E)."""
        c1sq = square(self.c1E)
        p1 = c1sq - 4 * self.c2E
        assert (p1 - c1sq) % 4 == 0
        return p1

    @property
    def F(self):
        return derive_F(self)


@dataclass(frozen=True)
class SWDatum:
    """A class K = c1(W+ (x) L1) together with its Seiberg-Witten invariant."""

    K: LatticeVector
    sw: int


def derive_F(g):
    """F = c1(W+) + c1(E)."""
    return g.c1W + g.c1E


def flat_connection_obstructed(m, c, simply_connected):
    """True when no flat SO(3) connection can have w2 = c mod 2.

    Only decided for simply connected manifolds: there every nonzero mod-2
    class is not a pullback from the classifying space of pi_1, so an odd
    coordinate certifies the obstruction.  Anything else returns False
    ("not certified"), never a guess.
    """
    if not simply_connected:
        return False
    return not c.is_even()


def blow_up(m):
    """X # CP^2-bar: adds a generator of square -1, labelled "e*"."""
    lattice = direct_sum(m.lattice, diagonal(-1))
    labels = {name: embed(v, lattice) for name, v in m.labels.items()}
    name, k = "e*", 1
    while name in labels:
        k += 1
        name = f"e*{k}"
    labels[name] = lattice.vector([0] * m.lattice.rank + [1])
    return FourManifold(
        euler=m.euler + 1,
        signature=m.signature - 1,
        b1=m.b1,
        bplus=m.bplus,
        lattice=lattice,
        labels=labels,
        simply_connected=m.simply_connected,
    )


def elliptic_lattice(n, aux_rank=4):
    """Working lattice for E(n): span{f, s} plus an auxiliary block.

    f is the fibre (f.f = 0), s a section (s.s = -n, f.s = 1).  The
    auxiliary block is ``aux_rank`` mutually orthogonal vectors of square -2;
    they sit inside the -E8 summands of H^2(E(n)), so the canonical class
    (n-2)f stays characteristic on the whole working lattice.
    """
    if aux_rank < 0 or aux_rank % 2:
        raise InputError("aux_rank must be a non-negative even integer")
    fs = IntersectionLattice([[0, 1], [1, -n]])
    if aux_rank == 0:
        return fs
    return direct_sum(fs, diagonal(*([-2] * aux_rank)))


def catalog_elliptic(n, aux_rank=4):
    """E(n) with its basic classes K_r = (n-2-2r) f, SW(K_r) = (-1)^r C(n-2, r)."""
    if n < 2:
        raise SetupError("E(n) is catalogued for n >= 2")
    lattice = elliptic_lattice(n, aux_rank)
    basis = lattice.basis()
    labels = {"f": basis[0], "s": basis[1]}
    for i in range(aux_rank):
        labels[f"v{i + 1}"] = basis[2 + i]
    m = FourManifold(
        euler=12 * n,
        signature=-8 * n,
        b1=0,
        bplus=2 * n - 1,
        lattice=lattice,
        labels=labels,
        simply_connected=True,
    )
    f = labels["f"]
    data = [SWDatum((n - 2 - 2 * r) * f, sign_power(r) * comb(n - 2, r)) for r in range(n - 1)]
    return m, data


def f_square_window(n):
    """Even values of F^2 with d_a >= 0 and n_a > 0 on E(n): -4n < F^2 <= -3n."""
    return [q for q in range(-4 * n + 1, -3 * n + 1) if q % 2 == 0]


def _sum_of_squares(total, slots):
    """Lexicographically largest non-negative vector with given square sum."""
    if slots == 0:
        return [] if total == 0 else None
    top = int(total**0.5)
    while top * top > total:
        top -= 1
    for c in range(top, -1, -1):
        rest = _sum_of_squares(total - c * c, slots - 1)
        if rest is not None:
            return [c] + rest
    return None


def elliptic_setup(n, aux_rank=4, f_square=None):
    """Catalog E(n) plus a gauge setup keeping every reducible in the top level.

    F = c1(W+) + c1(E) is placed in the auxiliary block, so K_r.F = 0 and
    (K_r - F)^2 = F^2 = p1 for every basic class.  The default F^2 = 2 - 4n
    gives d_a = n - 2 and n_a = 1.
    """
    m, data = catalog_elliptic(n, aux_rank)
    if f_square is None:
        f_square = 2 - 4 * n
    if f_square % 2 or f_square > 0:
        raise SetupError(f"F^2 must be even and non-positive, got {f_square}")
    aux = _sum_of_squares(exact_div(-f_square, 2, "F^2/2"), aux_rank)
    if aux is None:
        raise SetupError(f"F^2 = {f_square} is not realised in an auxiliary block of rank {aux_rank}")
    F = m.vector([0, 0] + aux)
    c1W = (n - 2) * m.label("f")
    c1E = F - c1W
    c2E = exact_div(square(c1E) - f_square, 4, "c2(E)")
    g = GaugeSetup(c1W, c1E, c2E)
    assert is_characteristic(c1W)
    return m, g, data

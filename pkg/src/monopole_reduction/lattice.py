"""Integer lattices with a symmetric bilinear form.

Second homology and cohomology classes are handled uniformly as integer
coordinate vectors against a Gram matrix; every pairing and square used by
the rest of the package goes through :func:`pair`.
"""
from dataclasses import dataclass

from .errors import DimensionError, InputError, NonIntegralReductionError


@dataclass(frozen=True)
class IntersectionLattice:
    gram: tuple

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(gram)
        for row in gram:
            if len(row) != n:
                raise InputError("Gram matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise InputError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", gram)

    @property
    def rank(self):
        return len(self.gram)

    def vector(self, coords):
        return LatticeVector(tuple(coords), self)

    def zero(self):
        return LatticeVector((0,) * self.rank, self)

    def basis(self):
        return [self.vector(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def __repr__(self):
        return f"IntersectionLattice(rank={self.rank}, gram={[list(r) for r in self.gram]})"


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple
    lattice: IntersectionLattice

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.lattice.rank:
            raise DimensionError(
                f"vector of length {len(coords)} in a lattice of rank {self.lattice.rank}"
            )
        object.__setattr__(self, "coords", coords)

    def _check(self, other):
        if not isinstance(other, LatticeVector):
            return NotImplemented
        if other.lattice != self.lattice:
            raise DimensionError("vectors belong to different lattices")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.lattice)

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords), self.lattice)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return LatticeVector(tuple(k * a for a in self.coords), self.lattice)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def is_even(self):
        return all(c % 2 == 0 for c in self.coords)

    def __repr__(self):
        return f"LatticeVector({list(self.coords)})"


def pair(a, b):
    """The bilinear pairing a^T G b."""
    if a.lattice != b.lattice or len(a.coords) != len(b.coords):
        raise DimensionError("cannot pair vectors from different lattices")
    gram = a.lattice.gram
    total = 0
    for i, ai in enumerate(a.coords):
        if ai:
            row = gram[i]
            total += ai * sum(g * bj for g, bj in zip(row, b.coords))
    return total


def square(a):
    return pair(a, a)


def is_characteristic(K):
    """K.e == e.e (mod 2) for every basis vector e.

    On a sublattice of the full second cohomology this is only a necessary
    condition for K to be the first Chern class of a spin-c structure.
    """
    gram = K.lattice.gram
    for i in range(K.lattice.rank):
        k_dot_e = sum(g * c for g, c in zip(gram[i], K.coords))
        if (k_dot_e - gram[i][i]) % 2:
            return False
    return True


def half_difference(K, c):
    """Return L with 2L = K - c."""
    diff = K - c
    if not diff.is_even():
        raise NonIntegralReductionError(
            f"{list(K.coords)} and {list(c.coords)} are not congruent mod 2"
        )
    return LatticeVector(tuple(x // 2 for x in diff.coords), K.lattice)


def congruent_mod2(a, b):
    return (a - b).is_even()


# Constructors

def direct_sum(*lattices):
    """Block-diagonal sum of Gram matrices."""
    n = sum(L.rank for L in lattices)
    gram = [[0] * n for _ in range(n)]
    offset = 0
    for L in lattices:
        for i, row in enumerate(L.gram):
            gram[offset + i][offset:offset + L.rank] = row
        offset += L.rank
    return IntersectionLattice(gram)


def diagonal(*entries):
    n = len(entries)
    return IntersectionLattice([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def hyperbolic():
    return IntersectionLattice([[0, 1], [1, 0]])


E8_GRAM = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, -1),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 0, 0, 2),
)


def e8(sign=1):
    """The E8 lattice (positive definite), or -E8 with ``sign=-1``."""
    return IntersectionLattice([[sign * x for x in row] for row in E8_GRAM])


def embed(v, lattice, offset=0):
    """Pad ``v`` with zeros into a larger lattice, starting at ``offset``."""
    coords = [0] * lattice.rank
    coords[offset:offset + len(v.coords)] = v.coords
    return lattice.vector(coords)

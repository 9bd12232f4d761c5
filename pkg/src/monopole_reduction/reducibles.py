"""Reducible PU(2) monopoles: splittings E = L1 + L2 and their Uhlenbeck levels.

A basic class K determines L1 = (K - c1(W+))/2.  The reducible lives in
level l of the compactification when (K - F)^2 = p1 + 4l, where
K - F = 2 L1 - c1(E).
"""
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CongruenceError
from .index import compute_p1, dim_sw
from .lattice import LatticeVector, congruent_mod2, half_difference, square
from .manifold import derive_F

DEFAULT_MAX_LEVEL = 10


@dataclass(frozen=True)
class ReducibleDatum:
    L1: LatticeVector
    K: LatticeVector
    sw: int
    level: int
    d_s: int


class Enumeration(NamedTuple):
    reducibles: list
    above_max_level: list


def _sort_key(r):
    return (r.level, r.L1.coords)


def partition_reducibles(m, g, sw_data, max_level=DEFAULT_MAX_LEVEL, keep_zero_sw=False):
    """Reducibles at levels 0..max_level, plus those found above the cap."""
    p1 = compute_p1(g)
    F = derive_F(g)
    kept, above = [], []
    for datum in sw_data:
        if not congruent_mod2(datum.K, g.c1W):
            raise CongruenceError(
                f"basic class {list(datum.K.coords)} is not congruent to c1(W+) mod 2"
            )
        if datum.sw == 0 and not keep_zero_sw:
            continue
        L1 = half_difference(datum.K, g.c1W)
        excess = square(datum.K - F) - p1
        if excess % 4 or excess < 0:
            continue
        r = ReducibleDatum(L1=L1, K=datum.K, sw=datum.sw, level=excess // 4, d_s=dim_sw(m, datum.K))
        (kept if r.level <= max_level else above).append(r)
    return Enumeration(sorted(kept, key=_sort_key), sorted(above, key=_sort_key))


def enumerate_reducibles(m, g, sw_data, max_level=DEFAULT_MAX_LEVEL, keep_zero_sw=False):
    return partition_reducibles(m, g, sw_data, max_level, keep_zero_sw).reducibles


def top_level(data):
    """The members of Red(W, E): reducibles in the top level."""
    return [r for r in data if r.level == 0]


def top_level_only(data):
    return all(r.level == 0 for r in data)

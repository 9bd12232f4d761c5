import random

import pytest

from monopole_reduction import (
    FourManifold,
    SetupError,
    blow_up,
    catalog_elliptic,
    derive_F,
    diagonal,
    elliptic_setup,
    f_square_window,
    flat_connection_obstructed,
    hyperbolic,
    is_characteristic,
    square,
    GaugeSetup,
)
from monopole_reduction.index import dim_sw


def test_derive_F(e3, H):
    v = H.vector([2, -1])
    assert derive_F(GaugeSetup(H.zero(), v, 0)) == v
    assert derive_F(GaugeSetup(v, -v, 0)).is_zero()
    m, g, _ = e3
    F = derive_F(g)
    assert F == m.vector([0, 0, 2, 1, 0, 0])
    assert square(F) == -10


def test_flat_connection_obstruction(H):
    m = FourManifold(4, 0, 0, 1, H)
    assert flat_connection_obstructed(m, H.vector([1, 0]), True)
    assert not flat_connection_obstructed(m, H.vector([2, -4]), True)
    assert not flat_connection_obstructed(m, H.vector([1, 0]), False)


def test_blow_up_examples(H):
    m = FourManifold(4, 0, 0, 1, H)
    b = blow_up(m)
    assert (b.euler, b.signature, b.b1, b.bplus) == (5, -1, 0, 1)
    assert b.lattice.gram == ((0, 1, 0), (1, 0, 0), (0, 0, -1))
    assert square(b.label("e*")) == -1
    bb = blow_up(b)
    assert (bb.euler, bb.signature, bb.lattice.rank) == (6, -2, 4)
    assert square(bb.label("e*2")) == -1
    assert bb.label("e*").coords == (0, 0, 1, 0)


def test_catalog_e3():
    m, data = catalog_elliptic(3)
    assert (m.euler, m.signature, m.bplus, m.b1) == (36, -24, 5, 0)
    f = m.label("f")
    assert [(d.K, d.sw) for d in data] == [(f, 1), (-f, -1)]


def test_catalog_e2_and_e4():
    m, data = catalog_elliptic(2)
    assert [(d.K.is_zero(), d.sw) for d in data] == [(True, 1)]
    m, data = catalog_elliptic(4)
    f = m.label("f")
    assert [(d.K, d.sw) for d in data] == [(2 * f, 1), (m.lattice.zero(), -2), (-2 * f, 1)]


def test_catalog_rejects_small_n():
    with pytest.raises(SetupError):
        catalog_elliptic(1)


@pytest.mark.parametrize("n", range(2, 11))
def test_catalog_properties(n):
    m, data = catalog_elliptic(n)
    assert 2 * m.euler + 3 * m.signature == 0
    for d in data:
        assert square(d.K) == 0
        assert dim_sw(m, d.K) == 0
        assert is_characteristic(d.K)
    assert sum(d.sw for d in data) == (1 if n == 2 else 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_elliptic_setup_window(n):
    for q in f_square_window(n):
        m, g, data = elliptic_setup(n, f_square=q)
        assert square(g.F) == q
        assert g.p1 == q
        assert all(square(d.K - g.F) == q for d in data)
        assert is_characteristic(g.c1W)


def test_elliptic_setup_unrealisable():
    with pytest.raises(SetupError):
        elliptic_setup(4, aux_rank=2)  # F^2 = -14 needs 7 = sum of two squares


def random_manifold(rng):
    b1 = rng.randint(0, 3)
    bplus = 2 * rng.randint(0, 4) + 1 + b1
    rank = rng.randint(1, 5)
    diag = [rng.choice([1, -1, -2, 2]) for _ in range(rank)]
    euler = rank + 2 - 2 * b1 + rng.randint(0, 10)
    lattice = diagonal(*diag)
    return FourManifold(euler, rng.randint(-20, 20), b1, bplus, lattice, labels={"a": lattice.basis()[0]})


def test_blow_up_random():
    rng = random.Random(20261015)
    for _ in range(100):
        m = random_manifold(rng)
        b = blow_up(m)
        assert (b.euler, b.signature, b.lattice.rank) == (m.euler + 1, m.signature - 1, m.lattice.rank + 1)
        assert b.admissible() == m.admissible()
        assert square(b.label("a")) == square(m.label("a"))

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monopole_reduction import (
    DimensionError,
    IntersectionLattice,
    InputError,
    NonIntegralReductionError,
    diagonal,
    direct_sum,
    e8,
    half_difference,
    hyperbolic,
    is_characteristic,
    pair,
    square,
)
from monopole_reduction.lattice import embed


def test_pair_hyperbolic(H):
    assert pair(H.vector([1, 0]), H.vector([0, 1])) == 1


def test_pair_zero_vector(H):
    assert pair(H.zero(), H.vector([5, -7])) == 0


def test_pair_e3_f_with_F(e3):
    m, g, _ = e3
    assert pair(m.label("f"), g.F) == 0


def test_square_examples(H):
    assert square(H.vector([1, 1])) == 2
    assert square(diagonal(-1, -1).vector([3, 1])) == -10


def test_square_fibre_class_vanishes():
    from monopole_reduction import catalog_elliptic

    for n in range(2, 9):
        m, _ = catalog_elliptic(n)
        assert square(m.label("f")) == 0


def test_pair_mismatched_lattices(H):
    with pytest.raises(DimensionError):
        pair(H.vector([1, 0]), diagonal(-1, -1).vector([1, 0]))


def test_wrong_length_vector(H):
    with pytest.raises(DimensionError):
        H.vector([1, 2, 3])


def test_gram_must_be_symmetric():
    with pytest.raises(InputError):
        IntersectionLattice([[0, 1], [2, 0]])


def test_is_characteristic_examples(H, e3):
    assert is_characteristic(H.vector([0, 0]))
    L = diagonal(-1)
    assert is_characteristic(L.vector([1]))
    assert not is_characteristic(L.vector([0]))
    m, _, _ = e3
    assert is_characteristic(m.label("f"))


def test_half_difference_examples(H, e3):
    assert half_difference(H.vector([2, 0]), H.zero()) == H.vector([1, 0])
    v = H.vector([3, -5])
    assert half_difference(v, v).is_zero()
    m, _, _ = e3
    f = m.label("f")
    assert half_difference(f, f) == m.lattice.zero()
    with pytest.raises(NonIntegralReductionError):
        half_difference(H.vector([1, 0]), H.zero())


def test_direct_sum_blocks():
    L = direct_sum(hyperbolic(), diagonal(-1), e8(-1))
    assert L.rank == 11
    assert L.gram[2][2] == -1
    assert L.gram[1][0] == 1 and L.gram[1][2] == 0
    assert square(embed(e8(-1).basis()[0], L, offset=3)) == -2


def test_e8_is_even_unimodular():
    import sympy

    G = e8()
    assert all(G.gram[i][i] % 2 == 0 for i in range(8))
    assert sympy.Matrix(G.gram).det() == 1


LATTICES = [hyperbolic(), diagonal(-1, -1), direct_sum(hyperbolic(), diagonal(1, -1)), e8(-1)]
small = st.integers(-6, 6)


def vectors(L):
    return st.lists(small, min_size=L.rank, max_size=L.rank).map(L.vector)


@st.composite
def lattice_and_vectors(draw, k):
    L = draw(st.sampled_from(LATTICES))
    return (L,) + tuple(draw(vectors(L)) for _ in range(k))


@given(lattice_and_vectors(2))
def test_pair_symmetric(args):
    _, a, b = args
    assert pair(a, b) == pair(b, a)


@given(lattice_and_vectors(3))
def test_pair_bilinear(args):
    _, a, b, c = args
    assert pair(a + b, c) == pair(a, c) + pair(b, c)
    assert pair(3 * a, c) == 3 * pair(a, c)


@given(lattice_and_vectors(2))
def test_characteristic_invariant_under_even_shift(args):
    _, K, v = args
    assert is_characteristic(K) == is_characteristic(K + 2 * v)


@given(lattice_and_vectors(2))
def test_half_difference_roundtrip(args):
    _, c, v = args
    K = c + 2 * v
    assert 2 * half_difference(K, c) + c == K

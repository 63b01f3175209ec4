from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedpi.linalg import (
    Echelon,
    QMatrix,
    Subspace,
    format_rational,
    kernel_basis,
    parse_rational,
    rank,
    refine_kernel,
    subspace_contains,
    subspace_equal,
    to_fraction,
)


def naive_rank(rows):
    """Textbook Gaussian elimination over Fraction (the oracle)."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    nr = draw(st.integers(1, max_rows))
    nc = draw(st.integers(1, max_cols))
    small = st.one_of(st.just(Fraction(0)), rationals)
    return [[draw(small) for _ in range(nc)] for _ in range(nr)]


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_naive_oracle(m):
    assert rank(m) == naive_rank(m)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_kernel_is_annihilated_and_has_right_dimension(m):
    K = kernel_basis(m)
    ncols = len(m[0])
    assert K.dimension == ncols - naive_rank(m)
    for v in K.basis:
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


@settings(max_examples=100, deadline=None)
@given(matrices(), matrices())
def test_refine_kernel_equals_stacked_kernel(a, b):
    ncols = len(a[0])
    b = [(r + [Fraction(0)] * ncols)[:ncols] for r in b]
    refined = refine_kernel(kernel_basis(a), b)
    assert subspace_equal(refined, kernel_basis(a + b))


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_echelon_rank_and_membership(m):
    ech = Echelon(len(m[0]))
    ech.extend(m)
    assert ech.rank == naive_rank(m)
    for row in m:
        assert ech.contains(row)
    # annihilator is orthogonal to the row space and complementary in dimension
    ann = ech.annihilator()
    assert ann.dimension + ech.rank == len(m[0])
    for v in ann.basis:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in m)


def test_echelon_close_under_permutation():
    ech = Echelon(3)
    ech.add([1, 0, 0])
    ech.close_under([(1, 2, 0)])  # cyclic shift of coordinates
    assert ech.is_full


def test_subspace_canonical_form_is_basis_independent():
    a = Subspace.span([[1, 2, 3], [0, 1, 1]], 3)
    b = Subspace.span([[1, 3, 4], [2, 5, 7], [1, 1, 2]], 3)
    assert subspace_equal(a, b)
    assert subspace_contains(Subspace.full(3), a)
    assert not subspace_contains(a, Subspace.full(3))
    assert a.coordinates([1, 3, 4]) is not None
    assert a.coordinates([0, 0, 1]) is None


def test_ambient_mismatch_raises():
    with pytest.raises(ValueError):
        subspace_equal(Subspace.zero(2), Subspace.zero(3))


def test_rational_formatting_roundtrip():
    for x in [Fraction(3, 4), Fraction(-6, 8), Fraction(5), Fraction(0)]:
        assert parse_rational(format_rational(x)) == x
    assert format_rational(Fraction(-6, 8)) == "-3/4"
    assert format_rational(4) == "4"
    with pytest.raises(TypeError):
        to_fraction(0.5)
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_qmatrix_basics():
    m = QMatrix([[1, 2], [3, 4]])
    assert m[1, 0] == 3
    assert m.apply([1, 1]) == (3, 7)
    with pytest.raises(IndexError):
        m[2, 0]
    with pytest.raises(ValueError):
        QMatrix([[1, 2], [3]])

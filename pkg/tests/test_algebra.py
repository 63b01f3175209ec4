import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradedpi.algebra import (
    SuperAlgebra,
    UnknownAlgebraError,
    algebra_from_name,
    catalog,
    center,
    iter_catalog,
    multiply,
    parse_algebra_name,
    validate,
)

CATALOG = list(iter_catalog(max_k=4, max_t=4))


@pytest.mark.parametrize("A", CATALOG, ids=lambda A: A.name)
def test_catalog_entries_are_valid_superalgebras(A):
    assert validate(A).ok


@pytest.mark.parametrize("A", CATALOG, ids=lambda A: A.name)
def test_json_round_trip(A):
    B = SuperAlgebra.from_json(A.to_json())
    assert B == A
    assert B.to_json() == A.to_json()


@pytest.mark.parametrize(
    "name,dim,even",
    [("UT2", 3, 3), ("UT2gr", 3, 2), ("Dgr", 2, 1), ("C3gr", 3, 2), ("A3", 4, 4), ("N4", 6, 6),
     ("N4gr", 6, 3), ("A3gr", 4, 2), ("G3", 8, 8), ("G3gr", 8, 4)],
)
def test_dimensions_and_gradings(name, dim, even):
    A = algebra_from_name(name)
    assert A.dim == dim
    assert len(A.even_basis) == even


def test_grassmann_anticommutation():
    G = catalog("Gtgr", t=3)
    e1, e2 = G.basis_element(1), G.basis_element(2)
    assert multiply(G, e1, e2).coords == tuple(-c for c in multiply(G, e2, e1).coords)
    assert not any(multiply(G, e1, e1).coords)


def test_centers():
    assert center(catalog("Nk", k=3)).dimension == 2
    assert center(catalog("Ak", k=3)).dimension == 0
    assert center(catalog("Gt", t=3)).dimension == 5  # even part plus top degree
    assert center(catalog("Dgr")).dimension == 2


def test_name_parsing():
    assert parse_algebra_name("N4gr") == ("Nkgr", {"k": 4})
    assert parse_algebra_name("G3") == ("Gt", {"t": 3})
    with pytest.raises(UnknownAlgebraError, match="unknown algebra"):
        algebra_from_name("Q7")
    with pytest.raises(ValueError):
        catalog("Nk", k=1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_multiplication_is_associative_on_random_elements(A, data):
    coeffs = st.lists(st.integers(-3, 3), min_size=A.dim, max_size=A.dim)
    x, y, z = (A.element(data.draw(coeffs)) for _ in range(3))
    left = multiply(A, multiply(A, x, y), z)
    right = multiply(A, x, multiply(A, y, z))
    assert left.coords == right.coords


def test_product_parity():
    for A in CATALOG[:12]:
        for i, j in itertools.product(range(A.dim), repeat=2):
            for k, _ in A.products[i][j]:
                assert A.degrees[k] == (A.degrees[i] + A.degrees[j]) % 2

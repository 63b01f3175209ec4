import itertools
import math
import random
from fractions import Fraction

import pytest

from gradedpi.algebra import algebra_from_name, iter_catalog
from gradedpi.evaluation import _word_positions, codim_report, sector_rowspace
from gradedpi.polyspace import sector_words
from gradedpi.symmetrica import (
    centralizer_order,
    class_representative,
    class_size,
    cocharacter,
    hook_dim,
    mn_char,
    pair_degree,
    partitions_of,
    quotient_character,
    sector_multiplicities,
)


def test_partition_counts_and_order():
    assert [len(partitions_of(m)) for m in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("m", range(1, 8))
def test_hook_dims_square_sum(m):
    assert sum(hook_dim(l) ** 2 for l in partitions_of(m)) == math.factorial(m)


@pytest.mark.parametrize("m", range(1, 7))
def test_character_orthogonality(m):
    parts = partitions_of(m)
    for a, b in itertools.product(parts, repeat=2):
        inner = sum(Fraction(mn_char(a, rho) * mn_char(b, rho), centralizer_order(rho)) for rho in parts)
        assert inner == (1 if a == b else 0)
    for lam in parts:
        assert mn_char(lam, (1,) * m) == hook_dim(lam)
    assert sum(class_size(rho) for rho in parts) == math.factorial(m)


def test_known_character_values():
    assert mn_char((2, 1), (3,)) == -1
    assert mn_char((2, 2), (2, 2)) == 2
    assert mn_char((3, 1, 1), (5,)) == 1
    assert pair_degree((2, 1), (1,)) == 4 * 2


def _row_space_trace(A, n, r, which, g):
    """Trace of g on the constraint row space W (reduced echelon coordinates)."""
    kind = "identity" if which == "graded" else "central"
    W = sector_rowspace(A, n, r, kind)
    pos, words = _word_positions(n), sector_words(n)
    ginv = [0] * n
    for i, x in enumerate(g):
        ginv[x] = i
    total = Fraction(0)
    for row in W.rref():
        p = next(j for j, a in enumerate(row) if a)
        total += row[pos[tuple(ginv[x] for x in words[p])]]
    return total


@pytest.mark.parametrize("name", ["UT2", "N4gr", "G3gr", "A3gr", "Dgr", "G2"])
def test_quotient_character_by_kernel_equals_row_space_trace_on_conjugates(name):
    """The quotient P/K is dual to W, so the two traces agree on every group element;
    random conjugates of the class representative give the same value (class function)."""
    A = algebra_from_name(name)
    rng = random.Random(7)
    n = 4
    for r in range(n + 1):
        for which in ("graded", "central"):
            chi = quotient_character(A, n, r, which)
            for (rho, nu), value in chi.items():
                g = class_representative(rho) + class_representative(nu, offset=n - r)
                for _ in range(2):
                    a = list(range(n - r)); rng.shuffle(a)
                    b = list(range(n - r, n)); rng.shuffle(b)
                    conj = a + b
                    inv = [0] * n
                    for i, x in enumerate(conj):
                        inv[x] = i
                    h = [conj[g[inv[i]]] for i in range(n)]
                    assert _row_space_trace(A, n, r, which, h) == value


@pytest.mark.parametrize("A", list(iter_catalog(max_k=4, max_t=4)), ids=lambda A: A.name)
def test_degree_sums_match_codimensions(A):
    for n in range(1, 5):
        rep = codim_report(A, n)
        assert cocharacter(A, n, "graded").degree_sum() == rep.c
        assert cocharacter(A, n, "central").degree_sum() == rep.cz
        assert cocharacter(A, n, "proper-central").degree_sum() == rep.delta


def test_multiplicities_are_nonnegative_integers():
    for A in iter_catalog(max_k=3, max_t=3):
        for n in range(1, 5):
            for r in range(n + 1):
                for m in sector_multiplicities(A, n, r).values():
                    assert isinstance(m, int) and m >= 0


def test_grassmann_g2_cocharacters():
    G2 = algebra_from_name("G2")
    assert cocharacter(G2, 4, "central").as_dict() == {((4,), ()): 1}
    assert cocharacter(G2, 4, "graded").as_dict() == {((4,), ()): 1, ((3, 1), ()): 1, ((2, 1, 1), ()): 1}


def test_decomposition_json():
    dec = cocharacter(algebra_from_name("Dgr"), 2)
    assert dec.to_dict()["terms"] == [
        {"lambda": [2], "mu": [], "m": 1},
        {"lambda": [1], "mu": [1], "m": 1},
        {"lambda": [], "mu": [2], "m": 1},
    ]
    with pytest.raises(ValueError):
        cocharacter(algebra_from_name("Dgr"), 9)

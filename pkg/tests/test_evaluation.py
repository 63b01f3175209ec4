import json
import math

import pytest

from gradedpi.algebra import algebra_from_name, catalog, iter_catalog
from gradedpi.evaluation import (
    CodimReport,
    central_kernel,
    codim_report,
    identity_kernel,
    kernels_equal_across,
    naive_kernel,
    sector_rowspace,
)
from gradedpi.linalg import subspace_contains, subspace_equal

SMALL = list(iter_catalog(max_k=3, max_t=3))


@pytest.mark.parametrize("A", SMALL, ids=lambda A: A.name)
def test_engine_matches_naive_oracle_up_to_degree_3(A):
    for n in range(1, 4):
        for r in range(n + 1):
            assert subspace_equal(identity_kernel(A, n, r), naive_kernel(A, n, r, "identity"))
            assert subspace_equal(central_kernel(A, n, r), naive_kernel(A, n, r, "central"))


@pytest.mark.parametrize("A", list(iter_catalog(max_k=4, max_t=4)), ids=lambda A: A.name)
def test_identities_are_central(A):
    for n in range(1, 5):
        for r in range(n + 1):
            assert subspace_contains(central_kernel(A, n, r), identity_kernel(A, n, r))


@pytest.mark.parametrize("t,graded", [(2, False), (3, False), (3, True), (4, True)])
def test_grassmann_fast_path_matches_orbit_method(t, graded):
    G = catalog("Gtgr" if graded else "Gt", t=t)
    for n in range(1, 5):
        for r in range(n + 1):
            for kind in ("identity", "central"):
                fast = sector_rowspace(G, n, r, kind, method="grassmann").to_subspace()
                slow = sector_rowspace(G, n, r, kind, method="orbits").to_subspace()
                assert subspace_equal(fast, slow)


def test_codim_report_sums_sectors_and_round_trips():
    rep = codim_report(algebra_from_name("UT2gr"), 4)
    assert rep.c == sum(math.comb(4, s.r) * s.c for s in rep.sectors)
    assert rep.delta == rep.c - rep.cz
    data = json.loads(rep.to_json())
    assert data["c"] == 1 + 4 * 2**3
    assert json.loads(json.dumps(data, sort_keys=True)) == data


def test_codim_report_is_thread_count_independent():
    A = algebra_from_name("N4gr")
    assert codim_report(A, 5, threads=1).to_json() == codim_report(A, 5, threads=4).to_json()


def test_kernel_equality_helpers():
    assert kernels_equal_across(catalog("Nk", k=4), catalog("Nk", k=3), 4, "central", "identity")
    assert not kernels_equal_across(catalog("Gtgr", t=2), catalog("Gtgr", t=3), 3, "identity")


def test_caps_are_enforced():
    with pytest.raises(ValueError):
        identity_kernel(catalog("Dgr"), 9, 0)
    with pytest.raises(ValueError):
        naive_kernel(catalog("Dgr"), 4, 0)

import pytest

from gradedpi.algebra import algebra_from_name, iter_catalog
from gradedpi.t2gen import (
    PRINTED_UT2GR_IDENTITIES,
    GeneratorSet,
    congruence_item1_text,
    known_generators,
    rewrite_congruence_check,
    t2ideal_closure_check,
    t2ideal_sector,
    t2space_sector,
    verify_generators,
)


def test_ideal_of_a_commutator():
    gens = GeneratorSet.from_texts(["[y1,y2]"])
    assert t2ideal_sector(gens, 2, 0).dimension == 1
    assert t2ideal_sector(gens, 3, 0).dimension == 6 - 1  # everything but the symmetric part
    assert t2ideal_sector(gens, 1, 0).dimension == 0


def test_space_is_smaller_than_ideal():
    gens = GeneratorSet.from_texts(space=["[y1,y2]"])
    assert t2space_sector(gens, 3, 0).dimension < t2ideal_sector(GeneratorSet.from_texts(["[y1,y2]"]), 3, 0).dimension


ALGEBRAS = [A for A in iter_catalog(max_k=4, max_t=4)
            if not (A.family in ("Nk", "Nkgr") and A.param("k") == 2)]


@pytest.mark.parametrize("A", ALGEBRAS, ids=lambda A: A.name)
@pytest.mark.parametrize("mode", ["identities", "central"])
def test_known_generators_verify_up_to_degree_4(A, mode):
    gens = known_generators(A, mode)
    if gens is None:
        pytest.skip("no recorded generating set")
    report = verify_generators(gens, A, 4, mode)
    assert report.ok, report.failures


def test_missing_generator_is_detected():
    A = algebra_from_name("N3")
    gens = known_generators(A).without("[y1,y2][y3,y4]")
    report = verify_generators(gens, A, 4)
    assert not report.ok
    assert all(f.contained for f in report.failures)  # still identities, just not enough of them


def test_printed_ut2gr_list_is_incomplete():
    A = algebra_from_name("UT2gr")
    report = verify_generators(GeneratorSet.from_texts(PRINTED_UT2GR_IDENTITIES), A, 3)
    assert not report.ok
    assert (2, 0) in {(f.n, f.r) for f in report.failures}


@pytest.mark.parametrize("name", ["N3", "N4", "N3gr", "N4gr"])
def test_central_kernels_are_t2_ideals(name):
    assert t2ideal_closure_check(algebra_from_name(name), 4).ok


def test_grassmann_central_kernel_is_not_an_ideal():
    # y1 is central in G2 but z0 y1 is not: the central space is not closed.
    assert not t2ideal_closure_check(algebra_from_name("G2gr"), 2).ok


@pytest.mark.parametrize("n", [3, 4])
def test_commutator_congruences(n):
    rep = rewrite_congruence_check(n)
    assert rep.ok, rep.failures
    assert "y1" in congruence_item1_text(n)

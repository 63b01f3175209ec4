"""Exact graded and central codimensions of finite-dimensional superalgebras.

Modules
-------
linalg      exact rational linear algebra (echelon forms, kernels, subspaces)
algebra     superalgebra structure constants and the built-in catalog
polyspace   multilinear graded polynomials and the text DSL
evaluation  identity / central kernels, codimensions
t2gen       T2-ideal and T2-space spans, generator verification
symmetrica  partitions, characters, cocharacter multiplicities
fixtures    replayable closed-form ledger
cli         command-line front end
"""

__version__ = "0.1.0"

from .algebra import SuperAlgebra, UnknownAlgebraError, algebra_from_name, catalog, iter_catalog, validate
from .evaluation import CodimReport, central_kernel, codim_report, identity_kernel
from .fixtures import evaluate_formula, load_fixtures, run_fixture, run_fixtures
from .polyspace import MultilinearPoly, format_poly, parse_poly
from .symmetrica import CocharDecomposition, cocharacter
from .t2gen import GeneratorSet, known_generators, t2ideal_closure_check, verify_generators

__all__ = [
    "__version__",
    "SuperAlgebra",
    "UnknownAlgebraError",
    "algebra_from_name",
    "catalog",
    "iter_catalog",
    "validate",
    "CodimReport",
    "codim_report",
    "identity_kernel",
    "central_kernel",
    "MultilinearPoly",
    "parse_poly",
    "format_poly",
    "CocharDecomposition",
    "cocharacter",
    "GeneratorSet",
    "known_generators",
    "verify_generators",
    "t2ideal_closure_check",
    "evaluate_formula",
    "load_fixtures",
    "run_fixture",
    "run_fixtures",
]

"""Partitions, symmetric-group characters and cocharacter multiplicities.

The sector ``P_{n-r,r}`` modulo a kernel (identities or central polynomials) is
an ``S_{n-r} x S_r``-module.  Its character is computed on one representative
per pair of cycle types, and the multiplicity of ``chi_lambda (x) chi_mu`` is the
class-weighted inner product with the irreducible characters, the latter given
by the Murnaghan-Nakayama rule.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .algebra import SuperAlgebra
from .evaluation import _word_positions, sector_rowspace
from .polyspace import sector_words

__all__ = [
    "PARTITION_CAP",
    "DEFAULT_COCHAR_CAP",
    "Partition",
    "CocharDecomposition",
    "NegativeMultiplicityError",
    "partitions_of",
    "hook_dim",
    "pair_degree",
    "mn_char",
    "class_size",
    "centralizer_order",
    "class_representative",
    "quotient_character",
    "sector_multiplicities",
    "cocharacter",
]

PARTITION_CAP = 12
DEFAULT_COCHAR_CAP = 5
KINDS = ("graded", "central", "proper-central")

Partition = tuple[int, ...]


class NegativeMultiplicityError(ArithmeticError):
    """A multiplicity came out negative or fractional: an internal inconsistency."""


def _as_partition(p: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition (positive, weakly decreasing parts): {p}")
    return p


def partitions_of(m: int, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of m in reverse-lexicographic order; ``partitions_of(0) == [()]``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > cap:
        raise ValueError(f"m={m} exceeds the partition cap {cap}")
    return list(_partitions(m, m))


def _partitions(m: int, largest: int) -> Iterator[Partition]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def hook_dim(lam: Sequence[int]) -> int:
    """Degree of the irreducible character chi_lambda by the hook length formula."""
    lam = _as_partition(lam)
    conj = [sum(1 for part in lam if part > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(lam)) // hooks


def pair_degree(lam: Sequence[int], mu: Sequence[int]) -> int:
    """d_{lambda,mu} = C(n, r) d_lambda d_mu with r = |mu|, n = |lambda| + |mu|."""
    n, r = sum(lam) + sum(mu), sum(mu)
    return math.comb(n, r) * hook_dim(lam) * hook_dim(mu)


@lru_cache(maxsize=None)
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama on beta-sets: remove a rim hook of length rho[0] in every way."""
    if not rho:
        return 1
    h, rest = rho[0], rho[1:]
    members = set(beta)
    total = 0
    for b in beta:
        if b - h >= 0 and (b - h) not in members:
            # leg length = number of beta numbers strictly between b-h and b
            leg = sum(1 for c in beta if b - h < c < b)
            new = tuple(sorted((members - {b}) | {b - h}, reverse=True))
            total += (-1) ** leg * _mn(new, rest)
    return total


def mn_char(lam: Sequence[int], cycle_type: Sequence[int]) -> int:
    """chi_lambda evaluated on the class of the given cycle type."""
    lam = _as_partition(lam)
    rho = tuple(sorted((int(x) for x in cycle_type), reverse=True))
    if sum(lam) != sum(rho) or any(x <= 0 for x in rho):
        raise ValueError(f"weight mismatch: |{lam}| != |{rho}|")
    length = len(lam)
    beta = tuple(part + length - 1 - i for i, part in enumerate(lam))
    return _mn(beta, rho)


def centralizer_order(rho: Sequence[int]) -> int:
    """z_rho = prod_i i^{a_i} a_i!."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(rho: Sequence[int]) -> int:
    return math.factorial(sum(rho)) // centralizer_order(rho)


def class_representative(rho: Sequence[int], offset: int = 0) -> list[int]:
    """Permutation (as image list on offset..offset+|rho|-1) with ascending consecutive cycles."""
    images, start = [], offset
    for part in rho:
        images.extend(start + (i + 1) % part for i in range(part))
        start += part
    return images


# ---------------------------------------------------------------------------
# characters of quotient sectors
# ---------------------------------------------------------------------------


def _kernel_kind(which: str) -> str:
    if which not in ("graded", "central"):
        raise ValueError("which must be 'graded' or 'central'")
    return "identity" if which == "graded" else "central"


def quotient_character(
    A: SuperAlgebra, n: int, r: int, which: str = "graded", cap: int = DEFAULT_COCHAR_CAP
) -> dict[tuple[Partition, Partition], int]:
    """Character of P_{n-r,r} modulo the kernel, on each pair of cycle types.

    trace(quotient) = trace(P) - trace(kernel); trace(P) is n! at the identity and
    0 elsewhere (only the identity fixes a word).  The kernel basis is in reduced
    echelon form, so the coordinate of a transformed basis vector along basis
    vector i is its entry at pivot i.
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds the cocharacter cap {cap}")
    K = sector_rowspace(A, n, r, _kernel_kind(which), cap=max(cap, n)).annihilator()
    words = sector_words(n)
    pos = _word_positions(n)
    m = n - r
    out = {}
    for rho in partitions_of(m):
        for nu in partitions_of(r):
            g = class_representative(rho) + class_representative(nu, offset=m)
            ginv = [0] * n
            for i, x in enumerate(g):
                ginv[x] = i
            # (g . k)[u] = k[g^{-1} o u]
            trace_k = Fraction(0)
            for vec, p in zip(K.basis, K.pivots):
                trace_k += vec[pos[tuple(ginv[x] for x in words[p])]]
            is_identity = all(part == 1 for part in rho + nu)
            trace_p = math.factorial(n) if is_identity else 0
            value = trace_p - trace_k
            if value.denominator != 1:
                raise NegativeMultiplicityError(f"non-integral character value {value}")
            out[(rho, nu)] = int(value)
    return out


def sector_multiplicities(
    A: SuperAlgebra, n: int, r: int, which: str = "graded", cap: int = DEFAULT_COCHAR_CAP
) -> dict[tuple[Partition, Partition], int]:
    """m_{lambda,mu} for lambda |- n-r, mu |- r from the quotient character."""
    chi = quotient_character(A, n, r, which, cap)
    out = {}
    for lam in partitions_of(n - r):
        for mu in partitions_of(r):
            total = Fraction(0)
            for (rho, nu), value in chi.items():
                if value:
                    total += Fraction(
                        value * mn_char(lam, rho) * mn_char(mu, nu),
                        centralizer_order(rho) * centralizer_order(nu),
                    )
            if total.denominator != 1 or total < 0:
                raise NegativeMultiplicityError(
                    f"{A.name}: multiplicity of ({lam},{mu}) is {total} (n={n}, {which})"
                )
            out[(lam, mu)] = int(total)
    return out


@dataclass(frozen=True)
class CocharDecomposition:
    algebra: str
    n: int
    kind: str
    terms: tuple[tuple[Partition, Partition, int], ...]  # nonzero multiplicities only

    def multiplicity(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        key = (tuple(lam), tuple(mu))
        for a, b, m in self.terms:
            if (a, b) == key:
                return m
        return 0

    def as_dict(self) -> dict[tuple[Partition, Partition], int]:
        return {(a, b): m for a, b, m in self.terms}

    def degree_sum(self) -> int:
        """sum m * d_{lambda,mu}: equals the matching codimension."""
        return sum(m * pair_degree(a, b) for a, b, m in self.terms)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "n": self.n,
            "kind": self.kind,
            "terms": [{"lambda": list(a), "mu": list(b), "m": m} for a, b, m in self.terms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def cocharacter(
    A: SuperAlgebra, n: int, kind: str = "graded", cap: int = DEFAULT_COCHAR_CAP
) -> CocharDecomposition:
    """Graded (P/Id), central (P/C) or proper-central (graded - central) cocharacter."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the cocharacter cap {cap}")
    terms = []
    for r in range(n + 1):
        if kind == "proper-central":
            g = sector_multiplicities(A, n, r, "graded", cap)
            c = sector_multiplicities(A, n, r, "central", cap)
            mult = {}
            for key in g:
                diff = g[key] - c[key]
                if diff < 0:
                    raise NegativeMultiplicityError(
                        f"{A.name}: proper-central multiplicity of {key} is {diff} (n={n})"
                    )
                mult[key] = diff
        else:
            mult = sector_multiplicities(A, n, r, kind, cap)
        for lam in partitions_of(n - r):
            for mu in partitions_of(r):
                m = mult[(lam, mu)]
                if m:
                    terms.append((lam, mu, m))
    return CocharDecomposition(A.name, n, kind, tuple(terms))

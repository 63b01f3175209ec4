"""Identity kernels, central kernels and codimensions by graded basis substitution.

For a sector ``(n, r)`` every substitution tuple ``s`` (even basis elements for
the y's, odd basis elements for the z's) contributes linear constraints on the
coefficient vector of a polynomial: one constraint per output coordinate of
``f(s)`` (identity kernel) or of ``f(s)`` modulo the center (central kernel).
The constraints span the row space ``W``; the kernel is its annihilator and the
sector codimension is ``dim W``.

Rather than enumerating all ``dim^n`` tuples, only one tuple per orbit of
S_{n-r} x S_r (multisets of basis elements per parity block) is evaluated, and
``W`` is then closed under the induced column permutations: relabeling the
variables of ``s`` by ``pi`` permutes the columns of its constraint rows by
``w -> pi o w``.  For Grassmann algebras the orbit representatives are further
restricted to disjoint-support monomials, one per length profile.
"""

from __future__ import annotations

import itertools
import json
import math
import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .algebra import SuperAlgebra, center, multiply, quotient_map_mod_center
from .linalg import Echelon, QMatrix, Subspace, kernel_basis, subspace_equal
from .polyspace import sector_words

__all__ = [
    "clear_caches",
    "DEFAULT_EVAL_CAP",
    "THREADS_ENV",
    "CodimReport",
    "SectorCodim",
    "sector_rowspace",
    "identity_kernel",
    "central_kernel",
    "sector_codims",
    "codim_report",
    "grassmann_support_tuples",
    "kernels_equal_across",
    "central_equals_identity_across",
    "naive_kernel",
    "column_permutation",
    "default_threads",
]

DEFAULT_EVAL_CAP = 6
THREADS_ENV = "GRADEDPI_THREADS"

KINDS = ("identity", "central")
METHODS = ("auto", "orbits", "grassmann", "naive")


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return 1
    value = int(raw)
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer")
    return value


def _check(n: int, r: int, cap: int) -> None:
    if not (0 <= r <= n) or n < 1:
        raise ValueError(f"need 1 <= n and 0 <= r <= n, got n={n}, r={r}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the evaluation cap {cap} (raise it with --max-n)")


# ---------------------------------------------------------------------------
# column permutations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _word_positions(n: int) -> dict[tuple[int, ...], int]:
    return {w: i for i, w in enumerate(sector_words(n))}


def column_permutation(n: int, pi: Sequence[int]) -> tuple[int, ...]:
    """``pm`` with ``pm[j] = index of pi o word_j``; rows transform by ``v -> v[pm]``."""
    pos = _word_positions(n)
    return tuple(pos[tuple(pi[x] for x in w)] for w in sector_words(n))


@lru_cache(maxsize=None)
def _group_generators(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Column permutations of a generating set of S_{n-r} x S_r (transposition + cycle per block)."""
    gens = []
    for lo, size in ((0, n - r), (n - r, r)):
        if size >= 2:
            swap = list(range(n))
            swap[lo], swap[lo + 1] = swap[lo + 1], swap[lo]
            gens.append(swap)
        if size >= 3:
            cycle = list(range(n))
            for i in range(size):
                cycle[lo + i] = lo + (i + 1) % size
            gens.append(cycle)
    return tuple(column_permutation(n, g) for g in gens)


# ---------------------------------------------------------------------------
# substitution streams
# ---------------------------------------------------------------------------


def _orbit_tuples(A: SuperAlgebra, n: int, r: int) -> Iterator[tuple[int, ...]]:
    """One tuple per S_{n-r} x S_r orbit: sorted even indices then sorted odd indices."""
    even, odd = A.even_basis, A.odd_basis
    for ys in itertools.combinations_with_replacement(even, n - r):
        for zs in itertools.combinations_with_replacement(odd, r):
            yield ys + zs


def _all_tuples(A: SuperAlgebra, n: int, r: int) -> Iterator[tuple[int, ...]]:
    even, odd = A.even_basis, A.odd_basis
    return itertools.product(*([even] * (n - r) + [odd] * r))


def _grassmann_lengths(t: int, n: int, r: int, graded: bool) -> Iterator[tuple[int, ...]]:
    if graded:
        y_lengths = range(0, t + 1, 2)
        z_lengths = range(1, t + 1, 2)
    else:
        y_lengths = range(0, t + 1)
        z_lengths = range(0, t + 1)  # unused: trivially graded algebras have no odd part
    if not graded and r > 0:
        return
    for ys in itertools.combinations_with_replacement(y_lengths, n - r):
        rest = t - sum(ys)
        if rest < 0:
            continue
        for zs in itertools.combinations_with_replacement(z_lengths, r):
            if sum(zs) <= rest:
                yield ys + zs


def grassmann_support_tuples(
    t: int, n: int, r: int, graded: bool = True
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Canonical disjoint-support substitutions for G_t (graded or not) in sector (n, r).

    One tuple per length profile: lengths are sorted within the y-block and the
    z-block, and variable ``i`` receives the next ``l_i`` generators (1-based), so
    supports are consecutive and disjoint; an empty support is the unit.
    """
    if t < 1:
        raise ValueError("Grassmann algebra needs t >= 1")
    for lengths in _grassmann_lengths(t, n, r, graded):
        start, supports = 1, []
        for length in lengths:
            supports.append(tuple(range(start, start + length)))
            start += length
        yield tuple(supports)


def _grassmann_index(t: int) -> dict[tuple[int, ...], int]:
    subsets = [s for size in range(t + 1) for s in itertools.combinations(range(1, t + 1), size)]
    return {s: i for i, s in enumerate(subsets)}


def _grassmann_tuples(A: SuperAlgebra, n: int, r: int) -> Iterator[tuple[int, ...]]:
    if A.family not in ("Gt", "Gtgr"):
        raise ValueError(f"{A.name} is not a catalog Grassmann algebra")
    t = A.param("t")
    index = _grassmann_index(t)
    for supports in grassmann_support_tuples(t, n, r, graded=A.family == "Gtgr"):
        yield tuple(index[s] for s in supports)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Prepared:
    monomial: tuple | None  # mono[i][j] = (k, sign) or None, for monomial integer tables
    products: tuple
    dim: int
    qcols: tuple  # qcols[k] = ((a, q), ...): image of basis element k under the constraint map


@lru_cache(maxsize=64)
def _prepare(A: SuperAlgebra, kind: str) -> _Prepared:
    mono = None
    if A.is_monomial and all(c.denominator == 1 for row in A.products for p in row for _, c in p):
        mono = tuple(
            tuple((p[0][0], int(p[0][1])) if p else None for p in row) for row in A.products
        )
    if kind == "identity":
        qcols = tuple(((k, 1),) for k in range(A.dim))
    else:
        Q = quotient_map_mod_center(A, center(A))
        scale = math.lcm(1, *(x.denominator for row in Q for x in row))
        qcols = tuple(
            tuple((a, int(Q[a, k] * scale)) for a in range(Q.nrows) if Q[a, k])
            for k in range(A.dim)
        )
    return _Prepared(mono, A.products, A.dim, qcols)


def _monomial_rows(prep: _Prepared, s: Sequence[int], n: int) -> list[list[int]]:
    """Constraint rows of one substitution tuple, by DFS over words in lex order."""
    nfact = math.factorial(n)
    mono, qcols = prep.monomial, prep.qcols
    acc: dict[int, list[int]] = {}
    fact = [math.factorial(i) for i in range(n + 1)]
    counter = [0]

    def dfs(depth: int, used: int, k: int, sign: int) -> None:
        if depth == n:
            idx = counter[0]
            counter[0] += 1
            for a, q in qcols[k]:
                row = acc.get(a)
                if row is None:
                    row = acc[a] = [0] * nfact
                row[idx] += sign * q
            return
        for v in range(n):
            if used >> v & 1:
                continue
            entry = mono[k][s[v]]
            if entry is None:
                counter[0] += fact[n - depth - 1]
                continue
            dfs(depth + 1, used | (1 << v), entry[0], sign * entry[1])

    for v in range(n):
        dfs(1, 1 << v, s[v], 1)
    return [acc[a] for a in sorted(acc)]


def _general_rows(prep: _Prepared, s: Sequence[int], n: int) -> list[list[Fraction]]:
    nfact = math.factorial(n)
    acc: dict[int, list[Fraction]] = {}
    for idx, w in enumerate(sector_words(n)):
        value = {s[w[0]]: Fraction(1)}
        for pos in w[1:]:
            nxt: dict[int, Fraction] = {}
            b = s[pos]
            for i, c in value.items():
                for k, d in prep.products[i][b]:
                    nxt[k] = nxt.get(k, Fraction(0)) + c * d
            value = {k: c for k, c in nxt.items() if c}
            if not value:
                break
        for i, c in value.items():
            for a, q in prep.qcols[i]:
                row = acc.get(a)
                if row is None:
                    row = acc[a] = [Fraction(0)] * nfact
                row[idx] += c * q
    return [acc[a] for a in sorted(acc)]


def _rows(prep: _Prepared, s: Sequence[int], n: int):
    if prep.monomial is not None:
        return _monomial_rows(prep, s, n)
    return _general_rows(prep, s, n)


_cache: dict = {}
_cache_lock = threading.Lock()


def clear_caches() -> None:
    """Drop memoised row spaces and prepared tables (e.g. before a timing run)."""
    with _cache_lock:
        _cache.clear()
    _prepare.cache_clear()


def sector_rowspace(
    A: SuperAlgebra,
    n: int,
    r: int,
    kind: str = "identity",
    method: str = "auto",
    cap: int = DEFAULT_EVAL_CAP,
) -> Echelon:
    """Row space W of the constraints; codimension = rank W, kernel = annihilator of W.

    ``method``: ``orbits`` (orbit representatives + group closure), ``grassmann``
    (disjoint-support profiles + closure), ``naive`` (every tuple, no symmetry),
    ``auto`` (grassmann for catalog Grassmann algebras, else orbits).
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    _check(n, r, cap)
    if method == "auto":
        method = "grassmann" if A.family in ("Gt", "Gtgr") else "orbits"
    key = (A, n, r, kind, method)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    prep = _prepare(A, kind)
    W = Echelon(math.factorial(n))
    if method == "naive":
        tuples: Iterable = _all_tuples(A, n, r)
    elif method == "grassmann":
        tuples = _grassmann_tuples(A, n, r)
    else:
        tuples = _orbit_tuples(A, n, r)
    seen: set[tuple] = set()
    for s in tuples:
        for row in _rows(prep, s, n):
            key_row = tuple(row)
            if key_row in seen or not any(row):
                continue
            seen.add(key_row)
            W.add(row)
            if W.is_full():
                break
        if W.is_full():
            break
    if method != "naive":
        W.close_under(_group_generators(n, r))
    with _cache_lock:
        _cache[key] = W
    return W


def identity_kernel(A: SuperAlgebra, n: int, r: int, *, method="auto", cap=DEFAULT_EVAL_CAP) -> Subspace:
    """P_{n-r,r} ∩ Id(A) in monomial coordinates (sector_basis order)."""
    return sector_rowspace(A, n, r, "identity", method, cap).annihilator()


def central_kernel(A: SuperAlgebra, n: int, r: int, *, method="auto", cap=DEFAULT_EVAL_CAP) -> Subspace:
    """P_{n-r,r} ∩ C(A): polynomials all of whose evaluations are central."""
    return sector_rowspace(A, n, r, "central", method, cap).annihilator()


def naive_kernel(A: SuperAlgebra, n: int, r: int, kind: str = "identity") -> Subspace:
    """Independent oracle: evaluate every tuple with :func:`multiply`, solve with kernel_basis."""
    if n > 3:
        raise ValueError("the naive oracle is meant for n <= 3")
    words = sector_words(n)
    basis = [A.basis_element(i) for i in range(A.dim)]
    Q = quotient_map_mod_center(A) if kind == "central" else None
    rows = []
    for s in _all_tuples(A, n, r):
        values = []
        for w in words:
            x = basis[s[w[0]]]
            for pos in w[1:]:
                x = multiply(A, x, basis[s[pos]])
            values.append(x.coords if Q is None else Q.apply(x.coords))
        for coord in range(len(values[0])):
            rows.append([v[coord] for v in values])
    if not rows:
        return Subspace.full(len(words))
    return kernel_basis(QMatrix(rows, len(words)))


# ---------------------------------------------------------------------------
# codimensions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectorCodim:
    r: int
    c: int
    cz: int


@dataclass(frozen=True)
class CodimReport:
    algebra: str
    n: int
    c: int
    cz: int
    delta: int
    sectors: tuple[SectorCodim, ...]

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "n": self.n,
            "c": self.c,
            "cz": self.cz,
            "delta": self.delta,
            "sectors": [{"r": s.r, "c": s.c, "cz": s.cz} for s in self.sectors],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def sector_codims(A: SuperAlgebra, n: int, r: int, *, method="auto", cap=DEFAULT_EVAL_CAP) -> SectorCodim:
    c = sector_rowspace(A, n, r, "identity", method, cap).rank
    cz = sector_rowspace(A, n, r, "central", method, cap).rank
    return SectorCodim(r, c, cz)


def codim_report(
    A: SuperAlgebra,
    n: int,
    *,
    method: str = "auto",
    cap: int = DEFAULT_EVAL_CAP,
    threads: int | None = None,
) -> CodimReport:
    """c_n = sum_r C(n,r) c_{n-r,r}; likewise c_n^z; delta_n = c_n - c_n^z."""
    _check(n, 0, cap)
    threads = default_threads() if threads is None else threads
    job = lambda r: sector_codims(A, n, r, method=method, cap=cap)  # noqa: E731
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sectors = tuple(pool.map(job, range(n + 1)))
    else:
        sectors = tuple(job(r) for r in range(n + 1))
    c = sum(math.comb(n, s.r) * s.c for s in sectors)
    cz = sum(math.comb(n, s.r) * s.cz for s in sectors)
    return CodimReport(A.name, n, c, cz, c - cz, sectors)


# ---------------------------------------------------------------------------
# kernel comparisons
# ---------------------------------------------------------------------------


def kernels_equal_across(
    A: SuperAlgebra,
    B: SuperAlgebra,
    n: int,
    kind_a: str = "identity",
    kind_b: str | None = None,
    *,
    cap: int = DEFAULT_EVAL_CAP,
) -> bool:
    """Sector-wise equality of kernels of A and B for r = 0..n.

    Two kernels coincide exactly when their constraint row spaces do, which is
    what is compared (the spaces are far smaller than the kernels).
    """
    kind_b = kind_a if kind_b is None else kind_b
    for r in range(n + 1):
        wa = sector_rowspace(A, n, r, kind_a, cap=cap).to_subspace()
        wb = sector_rowspace(B, n, r, kind_b, cap=cap).to_subspace()
        if not subspace_equal(wa, wb):
            return False
    return True


def central_equals_identity_across(A: SuperAlgebra, B: SuperAlgebra, n: int, *, cap=DEFAULT_EVAL_CAP) -> bool:
    """C(A) and Id(B) agree in every sector of degree n."""
    return kernels_equal_across(A, B, n, "central", "identity", cap=cap)

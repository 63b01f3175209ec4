"""Multilinear components of T2-ideals and T2-spaces, and generating-set verification.

An instance of a generator ``g(x_1..x_d)`` inside sector ``(n, r)`` is
``a g(m_1..m_d) b`` where the ``m_i`` are parity-correct monomials (even
z-count for y-variables, odd for z-variables) and ``a``, ``b`` are possibly
empty outer monomials (T2-ideal only), all variables used exactly once.  Up to
relabeling by S_{n-r} x S_r every instance is determined by its block lengths
and the parity pattern of its positions, so canonical instances are generated
(labels assigned in order of appearance) and the span is closed under the group.
"""

from __future__ import annotations

import itertools
import json
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import SuperAlgebra
from .evaluation import _group_generators, _word_positions, sector_rowspace
from .linalg import Echelon, Subspace
from .polyspace import MultilinearPoly, parse_poly

__all__ = [
    "clear_caches",
    "DEFAULT_T2_CAP",
    "Generator",
    "GeneratorSet",
    "VerificationReport",
    "t2ideal_sector",
    "t2space_sector",
    "verify_generators",
    "t2ideal_closure_check",
    "ClosureReport",
    "rewrite_congruence_check",
    "CongruenceReport",
    "known_generators",
    "load_generators",
    "PRINTED_UT2GR_IDENTITIES",
]

DEFAULT_T2_CAP = 5


@dataclass(frozen=True)
class Generator:
    text: str
    poly: MultilinearPoly = field(compare=False)

    @classmethod
    def of(cls, text: str) -> Generator:
        return cls(text, parse_poly(text))


@dataclass(frozen=True)
class GeneratorSet:
    """``ideal`` generates a T2-ideal; ``space`` (if any) generates a T2-space on top of it."""

    ideal: tuple[Generator, ...] = ()
    space: tuple[Generator, ...] = ()

    @classmethod
    def from_texts(cls, ideal: Iterable[str] = (), space: Iterable[str] = ()) -> GeneratorSet:
        return cls(tuple(Generator.of(t) for t in ideal), tuple(Generator.of(t) for t in space))

    @classmethod
    def from_dict(cls, data: Mapping) -> GeneratorSet:
        unknown = set(data) - {"ideal", "space"}
        if unknown:
            raise ValueError(f"unknown generator-file keys: {sorted(unknown)}")
        return cls.from_texts(data.get("ideal", ()), data.get("space", ()))

    def to_dict(self) -> dict:
        return {"ideal": [g.text for g in self.ideal], "space": [g.text for g in self.space]}

    @property
    def flag(self) -> str:
        return "space-over-ideal" if self.space else "ideal"

    def without(self, text: str) -> GeneratorSet:
        """Drop one generator (by its source text) from either part."""
        return GeneratorSet(
            tuple(g for g in self.ideal if g.text != text),
            tuple(g for g in self.space if g.text != text),
        )


def load_generators(path) -> GeneratorSet:
    with open(path) as fh:
        return GeneratorSet.from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# instance enumeration
# ---------------------------------------------------------------------------


def _compositions(total: int, parts: int, minimum: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(minimum, total - minimum * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, minimum):
            yield (first,) + rest


def _instances(g: MultilinearPoly, n: int, r: int, outer: bool) -> Iterator[dict[tuple[int, ...], Fraction]]:
    """Canonical instances of generator ``g`` in sector (n, r) as word -> coefficient maps."""
    d, gm = g.n, g.n - g.r
    if d > n:
        return
    m = n - r
    for la in range(n - d + 1) if outer else (0,):
        for lb in range(n - d - la + 1) if outer else (0,):
            inner = n - la - lb
            if inner < d:
                continue
            for lengths in _compositions(inner, d, 1):
                starts = list(itertools.accumulate((la,) + lengths))
                for zpos in itertools.combinations(range(n), r):
                    zset = set(zpos)
                    ok = True
                    for i in range(d):
                        zc = sum(1 for p in range(starts[i], starts[i + 1]) if p in zset)
                        if zc % 2 != (0 if i < gm else 1):
                            ok = False
                            break
                    if not ok:
                        continue
                    labels, ny, nz = [], 0, m
                    for p in range(n):
                        if p in zset:
                            labels.append(nz)
                            nz += 1
                        else:
                            labels.append(ny)
                            ny += 1
                    a = tuple(labels[:la])
                    b = tuple(labels[n - lb :])
                    blocks = [tuple(labels[starts[i] : starts[i + 1]]) for i in range(d)]
                    yield {
                        a + tuple(x for v in w for x in blocks[v - 1]) + b: c for w, c in g.coeffs
                    }


_cache: dict = {}
_cache_lock = threading.Lock()


def clear_caches() -> None:
    """Drop memoised generated spans."""
    with _cache_lock:
        _cache.clear()


def _generated(gens: Sequence[Generator], n: int, r: int, outer: bool, cap: int) -> Echelon:
    if not (0 <= r <= n) or n < 1:
        raise ValueError(f"need 1 <= n and 0 <= r <= n, got n={n}, r={r}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the T2 cap {cap}")
    key = (tuple(g.text for g in gens), n, r, outer)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    pos = _word_positions(n)
    size = math.factorial(n)
    E = Echelon(size)
    for g in gens:
        for inst in _instances(g.poly, n, r, outer):
            if E.is_full():
                break
            row = [0] * size
            for w, c in inst.items():
                row[pos[w]] += int(c) if c.denominator == 1 else c
            E.add(row)
    E.close_under(_group_generators(n, r))
    with _cache_lock:
        _cache[key] = E
    return E


def _ideal_echelon(gens: GeneratorSet, n: int, r: int, cap: int) -> Echelon:
    return _generated(gens.ideal, n, r, True, cap)


def _space_echelon(gens: GeneratorSet, n: int, r: int, cap: int) -> Echelon:
    ideal = _ideal_echelon(gens, n, r, cap)
    images = _generated(gens.space, n, r, False, cap)
    E = Echelon(ideal.ncols)
    for _, row in ideal.integer_rows():
        E.add(row)
    for _, row in images.integer_rows():
        E.add(row)
    return E


def t2ideal_sector(gens: GeneratorSet, n: int, r: int, cap: int = DEFAULT_T2_CAP) -> Subspace:
    """Sector (n, r) of the T2-ideal generated by ``gens.ideal``."""
    return _ideal_echelon(gens, n, r, cap).to_subspace()


def t2space_sector(gens: GeneratorSet, n: int, r: int, cap: int = DEFAULT_T2_CAP) -> Subspace:
    """Sector (n, r) of the T2-space generated by ``gens.space`` plus the T2-ideal of ``gens.ideal``."""
    return _space_echelon(gens, n, r, cap).to_subspace()


# ---------------------------------------------------------------------------
# verification against evaluation kernels
# ---------------------------------------------------------------------------


def _orthogonal(a: Echelon, b: Echelon) -> bool:
    rows_b = [row for _, row in b.integer_rows()]
    for _, u in a.integer_rows():
        for v in rows_b:
            if sum(x * y for x, y in zip(u, v)):
                return False
    return True


@dataclass
class SectorMismatch:
    n: int
    r: int
    generated_dim: int
    kernel_dim: int
    contained: bool


@dataclass
class VerificationReport:
    algebra: str
    mode: str
    n: int
    failures: list[SectorMismatch]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def verify_generators(
    gens: GeneratorSet,
    A: SuperAlgebra,
    n: int,
    mode: str = "identities",
    cap: int = DEFAULT_T2_CAP,
) -> VerificationReport:
    """Compare the generated set with Id(A) (``identities``) or C(A) (``central``) for degrees 1..n.

    The generated span G equals the kernel (annihilator of the constraint row
    space W) iff G is orthogonal to W and dim G + dim W = n!.
    """
    if mode not in ("identities", "central"):
        raise ValueError("mode must be 'identities' or 'central'")
    if mode == "identities" and gens.space:
        raise ValueError("identity verification takes an ideal-only generator set")
    kind = "identity" if mode == "identities" else "central"
    failures = []
    for m in range(1, n + 1):
        for r in range(m + 1):
            G = _ideal_echelon(gens, m, r, cap) if mode == "identities" else _space_echelon(gens, m, r, cap)
            W = sector_rowspace(A, m, r, kind, cap=max(cap, m))
            contained = _orthogonal(G, W)
            kernel_dim = math.factorial(m) - W.rank
            if not contained or G.rank != kernel_dim:
                failures.append(SectorMismatch(m, r, G.rank, kernel_dim, contained))
    return VerificationReport(A.name, mode, n, failures)


@dataclass
class ClosureReport:
    algebra: str
    n: int
    failures: list[tuple[int, int, str]]  # (n, r, "left-y" | "right-y" | "left-z" | "right-z")

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def _in_annihilator(W: Echelon, vec: dict[int, int | Fraction]) -> bool:
    for _, row in W.integer_rows():
        if sum(row[j] * c for j, c in vec.items()):
            return False
    return True


def t2ideal_closure_check(A: SuperAlgebra, n: int, cap: int = DEFAULT_T2_CAP) -> ClosureReport:
    """Is C(A) closed under multiplication by a fresh variable of either parity, on both sides?

    For each degree m < = n, sector r and basis vector f of the central kernel, the
    products x'f and fx'' (x' a fresh y, x'' a fresh z) must be central again.
    """
    if n + 1 > max(cap, 6):
        raise ValueError(f"closure check needs degree n+1={n + 1} within the evaluation cap")
    failures = []
    for m in range(1, n + 1):
        words = list(itertools.permutations(range(m)))
        pos = _word_positions(m + 1)
        for r in range(m + 1):
            K = sector_rowspace(A, m, r, "central", cap=max(cap, m)).annihilator()
            my = m - r
            W_y = sector_rowspace(A, m + 1, r, "central", cap=max(cap, m + 1))
            W_z = sector_rowspace(A, m + 1, r + 1, "central", cap=max(cap, m + 1))
            # fresh y takes label my; old z labels shift up by one
            shift_y = [i if i < my else i + 1 for i in range(m)]
            for f in K.basis:
                terms = [(w, c) for w, c in zip(words, f) if c]
                checks = {
                    "left-y": (W_y, [((my,) + tuple(shift_y[i] for i in w), c) for w, c in terms]),
                    "right-y": (W_y, [(tuple(shift_y[i] for i in w) + (my,), c) for w, c in terms]),
                    "left-z": (W_z, [((m,) + w, c) for w, c in terms]),
                    "right-z": (W_z, [(w + (m,), c) for w, c in terms]),
                }
                for side, (W, entries) in checks.items():
                    if not _in_annihilator(W, {pos[w]: c for w, c in entries}):
                        failures.append((m, r, side))
    return ClosureReport(A.name, n, sorted(set(failures)))


# ---------------------------------------------------------------------------
# commutator rewriting congruences
# ---------------------------------------------------------------------------


@dataclass
class CongruenceReport:
    n: int
    item1: bool | None  # None when n < 3 (the statement needs y1, yn and at least one middle variable)
    item2: dict[int, bool]  # p -> all sigma in S_2p pass
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def _sign(perm: Sequence[int]) -> int:
    s, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def congruence_item1_text(n: int) -> str:
    """y2...y(n-1)[y1,yn] + y1 sum_i y2..^yi..y(n-1)[yi,yn] (which should vanish modulo the T2-space)."""
    mids = [f"y{j}" for j in range(2, n)]
    parts = [" ".join(mids + [f"[y1,y{n}]"])]
    for i in range(2, n):
        rest = [f"y{j}" for j in range(2, n) if j != i]
        parts.append(" ".join(["y1"] + rest + [f"[y{i},y{n}]"]))
    return " + ".join(parts)


def congruence_item2_text(sigma: Sequence[int], n: int) -> str:
    """Product of commutators permuted by sigma minus sgn(sigma) times the sorted one, padded to degree n."""
    p2 = len(sigma)
    perm = [sigma[i] - 1 for i in range(p2)]
    left = "".join(f"[y{sigma[2 * i]},y{sigma[2 * i + 1]}]" for i in range(p2 // 2))
    right = "".join(f"[y{2 * i + 1},y{2 * i + 2}]" for i in range(p2 // 2))
    tail = "".join(f"y{j}" for j in range(p2 + 1, n + 1))
    sign = "-" if _sign(perm) > 0 else "+"
    return f"{left}{tail} {sign} {right}{tail}"


def rewrite_congruence_check(n: int, p: int | None = None, cap: int = DEFAULT_T2_CAP) -> CongruenceReport:
    """Check the commutator rewriting congruences in degree n.

    Item 1: y2..y(n-1)[y1,yn] is congruent to -y1 sum_i y2..^yi..y(n-1)[yi,yn]
    modulo the T2-space <[y1,y2], y0[y1,y2,y3]>.
    Item 2: [y_s(1),y_s(2)]...[y_s(2p-1),y_s(2p)] is congruent to
    sgn(s)[y1,y2]...[y(2p-1),y(2p)] modulo the T2-ideal <[y1,y2,y3]>, for every
    s in S_2p (extra variables y(2p+1)..yn appended on the right when n > 2p).
    """
    if n > cap:
        raise ValueError(f"n={n} exceeds the T2 cap {cap}")
    failures: list[str] = []
    item1 = None
    if n >= 3:
        space = GeneratorSet.from_texts(space=["[y1,y2]", "y0[y1,y2,y3]"])
        E = _space_echelon(space, n, 0, cap)
        text = congruence_item1_text(n)
        item1 = E.contains(parse_poly(text, (n, 0)).to_vector())
        if not item1:
            failures.append(f"item 1: {text}")
    ideal = GeneratorSet.from_texts(ideal=["[y1,y2,y3]"])
    E2 = _ideal_echelon(ideal, n, 0, cap)
    item2 = {}
    for q in [p] if p is not None else range(1, n // 2 + 1):
        if 2 * q > n:
            raise ValueError(f"need 2p <= n, got p={q}, n={n}")
        good = True
        for sigma in itertools.permutations(range(1, 2 * q + 1)):
            if sigma == tuple(range(1, 2 * q + 1)):
                continue  # the difference is identically zero
            text = congruence_item2_text(sigma, n)
            if not E2.contains(parse_poly(text, (n, 0)).to_vector()):
                good = False
                failures.append(f"item 2 (p={q}): {text}")
        item2[q] = good
    return CongruenceReport(n, item1, item2, failures)


# ---------------------------------------------------------------------------
# generator lists for the catalog
# ---------------------------------------------------------------------------


def _comm(names: Sequence[str]) -> str:
    return "[" + ",".join(names) + "]"


def _ys(lo: int, hi: int) -> list[str]:
    return [f"y{i}" for i in range(lo, hi + 1)]


def _comm_products(pairs: int, offset: int = 1) -> str:
    return "".join(f"[y{offset + 2 * i},y{offset + 2 * i + 1}]" for i in range(pairs))


def _id_texts(family: str, p: int | None) -> list[str] | None:
    if family == "UT2":
        return ["[y1,y2][y3,y4]", "z1"]
    if family == "UT2gr":
        return ["[y1,y2]", "z1z2"]
    if family == "Dgr":
        return ["[y1,y2]", "[z1,z2]", "[y1,z2]"]
    if family == "Nk":
        return [_comm(_ys(1, p)), "[y1,y2][y3,y4]", "z1"]
    if family == "Nkgr":
        return ["[y1,y2]", _comm(["z1"] + _ys(1, p - 1)), "z1z2"]
    if family == "Ak":
        return ["[y1,y2][y3,y4]", "[y1,y2]" + "".join(_ys(3, p + 1)), "z1"]
    if family == "Bk":
        return ["[y1,y2][y3,y4]", "".join(_ys(3, p + 1)) + "[y1,y2]", "z1"]
    if family == "Akgr":
        return ["[y1,y2]", "z1" + "".join(_ys(2, p)), "z1z2"]
    if family == "Bkgr":
        return ["[y1,y2]", "".join(_ys(2, p)) + "z1", "z1z2"]
    if family == "Gt":
        if p % 2:
            return None
        k = p // 2
        return ["[y1,y2,y3]", _comm_products(k + 1), "z1"]
    if family == "Gtgr":
        return ["[y1,y2]", "[y1,z1]", "z1 o z2", "".join(f"z{i}" for i in range(1, p + 2))]
    return None


def known_generators(A: SuperAlgebra, mode: str = "identities") -> GeneratorSet | None:
    """Generating sets of Id(A) or C(A) for the catalog families where they are known.

    Returns None when no generating set is recorded for this algebra.
    """
    family = A.family
    p = dict(A.params).get("k", dict(A.params).get("t"))
    if mode == "identities":
        texts = _id_texts(family, p)
        return None if texts is None else GeneratorSet.from_texts(ideal=texts)
    if mode != "central":
        raise ValueError("mode must be 'identities' or 'central'")
    if family in ("UT2", "UT2gr", "Ak", "Bk", "Akgr", "Bkgr"):
        texts = _id_texts(family, p)  # no proper central polynomials
        return GeneratorSet.from_texts(ideal=texts)
    if family in ("Dgr", "Ckgr"):
        # commutative: every polynomial without constant term is central
        return GeneratorSet.from_texts(space=["y1", "z1"])
    if family in ("Nk", "Nkgr") and p >= 3:
        return GeneratorSet.from_texts(ideal=_id_texts(family, p - 1))
    if family == "Gt" and p % 2 == 0:
        k = p // 2
        space = ["[y1,y2]", "y0[y1,y2,y3]", "y0" + _comm_products(k)]
        return GeneratorSet.from_texts(ideal=["z1"], space=space)
    if family == "Gtgr":
        return GeneratorSet.from_texts(
            ideal=_id_texts(family, p), space=["y1", "".join(f"z{i}" for i in range(1, p + 1))]
        )
    return None


# The generating set of Id(UT2gr) as originally stated; it misses [y1,y2].
PRINTED_UT2GR_IDENTITIES = ("z1z2",)

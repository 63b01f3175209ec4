"""Finite-dimensional superalgebras given by graded structure constants.

A :class:`SuperAlgebra` stores, for every ordered pair of basis elements, the
sparse expansion ``b_i b_j = sum_k c[i][j][k] b_k``.  The catalog builds the
algebras used throughout the package; every catalog basis is homogeneous and
every product of two basis elements is a signed basis element or zero.

Basis orderings of the catalog entries:

* ``G{t}`` / ``G{t}gr``: monomials ``e_S`` for ``S`` a subset of ``{1..t}``,
  ordered by length and then lexicographically (``1, e1, ..., et, e1e2, ...``).
* ``UT2`` / ``UT2gr``: ``e11, e12, e22``.
* ``Dgr``: ``(1,1), (1,-1)``.
* ``C{k}gr``: ``I, E, E^2, ..., E^(k-1)``.
* ``A{k}``: ``e11, E, ..., E^(k-2), e12, ..., e1k``.
* ``B{k}``: ``ekk, E, ..., E^(k-2), e1k, ..., e(k-1)k``.
* ``N{k}``: ``I, E, ..., E^(k-2), e12, ..., e1k``.
* ``A{k}gr`` / ``B{k}gr`` / ``N{k}gr``: as above with each ``E^a`` replaced by its
  even component (``E^a - e1,1+a``, resp. ``E^a - e(k-a),k``).
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .linalg import QMatrix, Subspace, format_rational, to_fraction

__all__ = [
    "SuperAlgebra",
    "AlgebraElement",
    "ValidationReport",
    "multiply",
    "validate",
    "center",
    "quotient_map_mod_center",
    "catalog",
    "parse_algebra_name",
    "algebra_from_name",
    "catalog_names",
    "from_matrices",
    "load_algebra",
    "iter_catalog",
    "UnknownAlgebraError",
]

Product = tuple[tuple[int, Fraction], ...]


class UnknownAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class SuperAlgebra:
    name: str
    degrees: tuple[int, ...]
    products: tuple[tuple[Product, ...], ...]
    unit: tuple[Fraction, ...] | None = None
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    family: str | None = field(default=None, compare=False)
    params: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def even_basis(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == 0)

    @property
    def odd_basis(self) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.degrees) if d == 1)

    def param(self, key: str) -> int:
        return dict(self.params)[key]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def element(self, coords: Sequence) -> AlgebraElement:
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgebraElement(tuple(to_fraction(c) for c in coords))

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(tuple(Fraction(int(i == j)) for j in range(self.dim)))

    @property
    def is_monomial(self) -> bool:
        """Every product of basis elements is zero or a scalar multiple of one basis element."""
        return all(len(p) <= 1 for row in self.products for p in row)

    def to_dict(self) -> dict:
        table = [
            [i, j, k, format_rational(c)]
            for i, row in enumerate(self.products)
            for j, prod in enumerate(row)
            for k, c in prod
        ]
        return {
            "name": self.name,
            "dim": self.dim,
            "degrees": list(self.degrees),
            "unit": None if self.unit is None else [format_rational(c) for c in self.unit],
            "table": table,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, data: Mapping) -> SuperAlgebra:
        dim = int(data["dim"])
        degrees = tuple(int(d) for d in data["degrees"])
        if len(degrees) != dim or any(d not in (0, 1) for d in degrees):
            raise ValueError("degrees must list 0/1 for each basis element")
        acc: dict[tuple[int, int], dict[int, Fraction]] = {}
        for entry in data["table"]:
            i, j, k, c = entry
            if not all(0 <= x < dim for x in (i, j, k)):
                raise ValueError(f"table index out of range: {entry}")
            c = to_fraction(c)
            if c:
                slot = acc.setdefault((i, j), {})
                slot[k] = slot.get(k, Fraction(0)) + c
        unit = data.get("unit")
        if unit is not None:
            unit = tuple(to_fraction(c) for c in unit)
            if len(unit) != dim:
                raise ValueError("unit has wrong length")
        return cls(
            name=str(data["name"]),
            degrees=degrees,
            products=_freeze_products(acc, dim),
            unit=unit,
        )

    @classmethod
    def from_json(cls, text: str) -> SuperAlgebra:
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.name!r}, dim={self.dim}, odd={len(self.odd_basis)})"


@dataclass(frozen=True)
class AlgebraElement:
    coords: tuple[Fraction, ...]
    homogeneous: int | None = None

    def __len__(self) -> int:
        return len(self.coords)


def _freeze_products(acc: Mapping[tuple[int, int], Mapping[int, Fraction]], dim: int):
    return tuple(
        tuple(
            tuple((k, c) for k, c in sorted(acc.get((i, j), {}).items()) if c)
            for j in range(dim)
        )
        for i in range(dim)
    )


def _mul_vectors(A: SuperAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * A.dim
    for i, a in enumerate(x):
        if not a:
            continue
        row = A.products[i]
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in row[j]:
                out[k] += ab * c
    return out


def multiply(A: SuperAlgebra, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear product through the structure constants."""
    if len(x) != A.dim or len(y) != A.dim:
        raise ValueError(f"elements must have {A.dim} coordinates")
    return AlgebraElement(tuple(_mul_vectors(A, x.coords, y.coords)))


@dataclass
class ValidationReport:
    grading: list[tuple[int, int, int]]
    associativity: list[tuple[int, int, int]]
    unit: list[str]

    @property
    def ok(self) -> bool:
        return not (self.grading or self.associativity or self.unit)


def validate(A: SuperAlgebra) -> ValidationReport:
    """Check grading compatibility, associativity and the unit; collect every failure."""
    grading = [
        (i, j, k)
        for i in range(A.dim)
        for j in range(A.dim)
        for k, _ in A.products[i][j]
        if A.degrees[k] != (A.degrees[i] + A.degrees[j]) % 2
    ]
    basis = [A.basis_element(i).coords for i in range(A.dim)]
    prods = [[_mul_vectors(A, basis[i], basis[j]) for j in range(A.dim)] for i in range(A.dim)]
    associativity = []
    for i, j, k in itertools.product(range(A.dim), repeat=3):
        if _mul_vectors(A, prods[i][j], basis[k]) != _mul_vectors(A, basis[i], prods[j][k]):
            associativity.append((i, j, k))
    unit_issues = []
    if A.unit is not None:
        if any(c and A.degrees[i] for i, c in enumerate(A.unit)):
            unit_issues.append("unit is not even")
        for i in range(A.dim):
            b = list(basis[i])
            if _mul_vectors(A, A.unit, b) != b:
                unit_issues.append(f"unit*{A.label(i)} != {A.label(i)}")
            if _mul_vectors(A, b, A.unit) != b:
                unit_issues.append(f"{A.label(i)}*unit != {A.label(i)}")
    return ValidationReport(grading, associativity, unit_issues)


def center(A: SuperAlgebra) -> Subspace:
    """Z(A) = {x : x b_i = b_i x for all i}, as the kernel of the commutator constraints."""
    rows = []
    for i in range(A.dim):
        # coefficient of b_k in [x, b_i] as a linear form in x
        for k in range(A.dim):
            row = [Fraction(0)] * A.dim
            for j in range(A.dim):
                c = dict(A.products[j][i]).get(k, 0) - dict(A.products[i][j]).get(k, 0)
                row[j] = Fraction(c)
            if any(row):
                rows.append(row)
    if not rows:
        return Subspace.full(A.dim)
    from .linalg import kernel_basis

    return kernel_basis(QMatrix(rows, A.dim))


def quotient_map_mod_center(A: SuperAlgebra, Z: Subspace | None = None) -> QMatrix:
    """Matrix of the projection A -> A/Z(A) onto the non-pivot coordinates of Z's echelon basis."""
    Z = center(A) if Z is None else Z
    pivots = Z.pivots
    free = [j for j in range(A.dim) if j not in set(pivots)]
    rows = []
    for f in free:
        row = [Fraction(0)] * A.dim
        row[f] = Fraction(1)
        for z, p in zip(Z.basis, pivots):
            row[p] -= z[f]
        rows.append(row)
    return QMatrix(rows, A.dim)


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------

Matrix = dict[tuple[int, int], Fraction]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    out: Matrix = {}
    for (i, j), x in a.items():
        for (j2, k), y in b.items():
            if j == j2:
                out[(i, k)] = out.get((i, k), Fraction(0)) + x * y
    return {key: v for key, v in out.items() if v}


def _unit_matrix(i: int, j: int) -> Matrix:
    return {(i, j): Fraction(1)}


def _add(*mats: Matrix, signs: Sequence[int] | None = None) -> Matrix:
    out: Matrix = {}
    signs = signs or [1] * len(mats)
    for m, s in zip(mats, signs):
        for key, v in m.items():
            out[key] = out.get(key, Fraction(0)) + s * v
    return {key: v for key, v in out.items() if v}


def _shift_power(k: int, a: int) -> Matrix:
    """E^a for E = sum_i e_{i,i+1} in UT_k (1-based indices)."""
    return {(i, i + a): Fraction(1) for i in range(1, k - a + 1)}


def from_matrices(
    name: str,
    mats: Sequence[Matrix],
    degrees: Sequence[int],
    labels: Sequence[str] | None = None,
    unit: Matrix | None = None,
) -> SuperAlgebra:
    """Structure constants of the span of linearly independent matrices closed under product."""
    keys = sorted({key for m in mats for key in m})
    basis = [[m.get(key, Fraction(0)) for key in keys] for m in mats]
    solve = _span_solver(basis)

    def coords(m: Matrix) -> list[Fraction]:
        extra = set(m) - set(keys)
        if extra:
            raise ValueError(f"{name}: product leaves the span (entries {sorted(extra)})")
        c = solve([m.get(key, Fraction(0)) for key in keys])
        if c is None:
            raise ValueError(f"{name}: product leaves the span")
        return c

    acc = {}
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            c = coords(_matmul(a, b))
            acc[(i, j)] = {k: v for k, v in enumerate(c) if v}
    unit_vec = None if unit is None else tuple(coords(unit))
    return SuperAlgebra(
        name=name,
        degrees=tuple(degrees),
        products=_freeze_products(acc, len(mats)),
        unit=unit_vec,
        labels=tuple(labels) if labels else None,
    )


def _span_solver(basis: list[list[Fraction]]):
    """Return v -> coordinates of v in the (independent) basis, or None."""
    n, m = len(basis), len(basis[0]) if basis else 0
    # Row-reduce [basis^T | I] style: keep vectors with a tracked combination.
    rows = [(list(b), [Fraction(int(i == j)) for j in range(n)]) for i, b in enumerate(basis)]
    pivots = []
    reduced = []
    for vec, comb in rows:
        for (p, pv, pc) in reduced:
            c = vec[p]
            if c:
                f = c / pv[p]
                vec = [a - f * b for a, b in zip(vec, pv)]
                comb = [a - f * b for a, b in zip(comb, pc)]
        p = next((j for j in range(m) if vec[j]), None)
        if p is None:
            raise ValueError("basis matrices are linearly dependent")
        reduced.append((p, vec, comb))
        pivots.append(p)

    def solve(v: list[Fraction]):
        v = list(v)
        out = [Fraction(0)] * n
        for p, pv, pc in reduced:
            c = v[p]
            if c:
                f = c / pv[p]
                v = [a - f * b for a, b in zip(v, pv)]
                out = [a + f * b for a, b in zip(out, pc)]
        if any(v):
            return None
        return out

    return solve


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def grassmann(t: int, graded: bool) -> SuperAlgebra:
    if t < 1:
        raise ValueError("Grassmann algebra needs t >= 1")
    subsets = [s for size in range(t + 1) for s in itertools.combinations(range(1, t + 1), size)]
    index = {s: i for i, s in enumerate(subsets)}
    acc = {}
    for i, s in enumerate(subsets):
        for j, u in enumerate(subsets):
            if set(s) & set(u):
                continue
            inversions = sum(1 for a in s for b in u if a > b)
            k = index[tuple(sorted(s + u))]
            acc[(i, j)] = {k: Fraction(-1 if inversions % 2 else 1)}
    degrees = tuple(len(s) % 2 if graded else 0 for s in subsets)
    labels = tuple("".join(f"e{a}" for a in s) or "1" for s in subsets)
    unit = tuple(Fraction(int(i == 0)) for i in range(len(subsets)))
    return SuperAlgebra(
        name=f"G{t}gr" if graded else f"G{t}",
        degrees=degrees,
        products=_freeze_products(acc, len(subsets)),
        unit=unit,
        labels=labels,
        family="Gtgr" if graded else "Gt",
        params=(("t", t),),
    )


def _ut2(graded: bool) -> SuperAlgebra:
    mats = [_unit_matrix(1, 1), _unit_matrix(1, 2), _unit_matrix(2, 2)]
    alg = from_matrices(
        "UT2gr" if graded else "UT2",
        mats,
        (0, 1, 0) if graded else (0, 0, 0),
        labels=("e11", "e12", "e22"),
        unit=_add(mats[0], mats[2]),
    )
    return _tag(alg, "UT2gr" if graded else "UT2", ())


def _dgr() -> SuperAlgebra:
    one, sgn = Fraction(1), Fraction(1)
    acc = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}, (1, 1): {0: sgn}}
    return SuperAlgebra(
        name="Dgr",
        degrees=(0, 1),
        products=_freeze_products(acc, 2),
        unit=(Fraction(1), Fraction(0)),
        labels=("(1,1)", "(1,-1)"),
        family="Dgr",
    )


def _ck(k: int) -> SuperAlgebra:
    identity = {(i, i): Fraction(1) for i in range(1, k + 1)}
    mats = [identity] + [_shift_power(k, a) for a in range(1, k)]
    labels = ["I"] + [f"E^{a}" for a in range(1, k)]
    alg = from_matrices(f"C{k}gr", mats, [a % 2 for a in range(k)], labels, unit=identity)
    return _tag(alg, "Ckgr", (("k", k),))


def _upper_family(kind: str, k: int, graded: bool) -> SuperAlgebra:
    identity = {(i, i): Fraction(1) for i in range(1, k + 1)}
    if kind in ("A", "N"):
        corner = [_unit_matrix(1, j) for j in range(2, k + 1)]
        corner_labels = [f"e1{j}" for j in range(2, k + 1)]
        # odd part of E^a is the single entry in row 1
        odd_piece = lambda a: _unit_matrix(1, 1 + a)  # noqa: E731
    else:
        corner = [_unit_matrix(j, k) for j in range(1, k)]
        corner_labels = [f"e{j}{k}" for j in range(1, k)]
        odd_piece = lambda a: _unit_matrix(k - a, k)  # noqa: E731
    first = {"A": _unit_matrix(1, 1), "B": _unit_matrix(k, k), "N": identity}[kind]
    first_label = {"A": "e11", "B": f"e{k}{k}", "N": "I"}[kind]
    powers, power_labels = [], []
    for a in range(1, k - 1):
        if graded:
            powers.append(_add(_shift_power(k, a), odd_piece(a), signs=[1, -1]))
            power_labels.append(f"E^{a}_0")
        else:
            powers.append(_shift_power(k, a))
            power_labels.append(f"E^{a}")
    mats = [first] + powers + corner
    degrees = [0] * (1 + len(powers)) + [1 if graded else 0] * len(corner)
    suffix = "gr" if graded else ""
    alg = from_matrices(
        f"{kind}{k}{suffix}",
        mats,
        degrees,
        [first_label] + power_labels + corner_labels,
        unit=identity if kind == "N" else None,
    )
    return _tag(alg, f"{kind}k{suffix}", (("k", k),))


def _tag(alg: SuperAlgebra, family: str, params) -> SuperAlgebra:
    return SuperAlgebra(
        name=alg.name,
        degrees=alg.degrees,
        products=alg.products,
        unit=alg.unit,
        labels=alg.labels,
        family=family,
        params=tuple(params),
    )


_FAMILIES = {
    "Gt": ("t", 1),
    "Gtgr": ("t", 1),
    "UT2": (None, None),
    "UT2gr": (None, None),
    "Dgr": (None, None),
    "Ckgr": ("k", 2),
    "Ak": ("k", 2),
    "Bk": ("k", 2),
    "Nk": ("k", 2),
    "Akgr": ("k", 2),
    "Bkgr": ("k", 2),
    "Nkgr": ("k", 2),
}
_ALIASES = {"Ck": "Ckgr"}


def catalog_names() -> list[str]:
    return list(_FAMILIES)


def catalog(name: str, **params: int) -> SuperAlgebra:
    """Build a catalog superalgebra by family name, e.g. ``catalog("Nk", k=3)``."""
    family = _ALIASES.get(name, name)
    if family not in _FAMILIES:
        raise UnknownAlgebraError(f"unknown algebra: {name}")
    key, lo = _FAMILIES[family]
    if key is None:
        if params:
            raise ValueError(f"{family} takes no parameters")
    else:
        if set(params) != {key}:
            raise ValueError(f"{family} needs exactly the parameter {key!r}")
        if int(params[key]) < lo:
            raise ValueError(f"{family}: parameter {key} must be >= {lo}")
    return _build(family, tuple(sorted(params.items())))


_cache: dict = {}


def _build(family: str, params: tuple) -> SuperAlgebra:
    hit = _cache.get((family, params))
    if hit is not None:
        return hit
    p = dict(params)
    if family in ("Gt", "Gtgr"):
        alg = grassmann(p["t"], family == "Gtgr")
    elif family in ("UT2", "UT2gr"):
        alg = _ut2(family == "UT2gr")
    elif family == "Dgr":
        alg = _dgr()
    elif family == "Ckgr":
        alg = _ck(p["k"])
    else:
        alg = _upper_family(family[0], p["k"], family.endswith("gr"))
    _cache[(family, params)] = alg
    return alg


_NAME_RE = re.compile(r"^([GCABN])(\d+)(gr)?$")


def parse_algebra_name(text: str) -> tuple[str, dict[str, int]]:
    """``"N4gr" -> ("Nkgr", {"k": 4})``; ``"G3" -> ("Gt", {"t": 3})``; ``"UT2" -> ("UT2", {})``."""
    text = text.strip()
    if text in ("UT2", "UT2gr", "Dgr"):
        return text, {}
    m = _NAME_RE.match(text)
    if not m:
        raise UnknownAlgebraError(f"unknown algebra: {text}")
    letter, num, gr = m.group(1), int(m.group(2)), m.group(3)
    if letter == "G":
        return ("Gtgr" if gr else "Gt"), {"t": num}
    if letter == "C":
        return "Ckgr", {"k": num}
    return f"{letter}k{'gr' if gr else ''}", {"k": num}


def algebra_from_name(text: str) -> SuperAlgebra:
    family, params = parse_algebra_name(text)
    return catalog(family, **params)


def load_algebra(path) -> SuperAlgebra:
    with open(path) as fh:
        return SuperAlgebra.from_json(fh.read())


def iter_catalog(max_k: int = 4, max_t: int = 5) -> Iterable[SuperAlgebra]:
    """A representative sweep of the catalog at small parameters."""
    yield catalog("Dgr")
    yield catalog("UT2")
    yield catalog("UT2gr")
    for k in range(2, max_k + 1):
        for fam in ("Ckgr", "Ak", "Bk", "Nk", "Akgr", "Bkgr", "Nkgr"):
            yield catalog(fam, k=k)
    for t in range(1, max_t + 1):
        yield catalog("Gt", t=t)
        yield catalog("Gtgr", t=t)

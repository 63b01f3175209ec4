"""Exact rational linear algebra.

Everything here works over ``fractions.Fraction``; integer rows are kept
primitive (content 1, positive pivot) during elimination so intermediate
entries stay small.  Canonical forms are reduced row-echelon forms, which
are unique, so two subspaces are equal exactly when their stored bases are
equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Iterator, Sequence

__all__ = [
    "QMatrix",
    "Subspace",
    "Echelon",
    "rank",
    "kernel_basis",
    "refine_kernel",
    "subspace_equal",
    "subspace_contains",
    "to_fraction",
    "format_rational",
    "parse_rational",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_fraction(x) -> Fraction:
    """Coerce an exact scalar to ``Fraction``; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def format_rational(x) -> str:
    """Reduced ``num/den``; integers print without a denominator."""
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _primitive(v: list[int]) -> list[int]:
    g = gcd(*v)
    if g > 1:
        return [a // g for a in v]
    return v


def _integer_row(v: Sequence) -> list[int]:
    """Scale a rational vector to a primitive integer vector spanning the same line."""
    fr = [to_fraction(a) for a in v]
    den = reduce(lcm, (a.denominator for a in fr), 1)
    return _primitive([int(a * den) for a in fr])


class QMatrix:
    """Dense rational matrix, immutable after construction."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Iterable[Sequence], ncols: int | None = None):
        data = tuple(tuple(to_fraction(a) for a in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix rows")
        self.nrows = len(data)
        self.ncols = ncols
        self._rows = data

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> QMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols}")
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self.ncols == other.ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"QMatrix({self.nrows}x{self.ncols})"

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * to_fraction(b) for a, b in zip(row, v)), _ZERO) for row in self._rows)


def _as_rows(m) -> tuple[list[Sequence], int]:
    if isinstance(m, QMatrix):
        return list(m.rows()), m.ncols
    rows = [list(r) for r in m]
    if not rows:
        raise ValueError("cannot infer column count of an empty matrix; pass a QMatrix")
    return rows, len(rows[0])


class Echelon:
    """Incremental row-space accumulator over Q.

    Rows are primitive integer vectors kept fully reduced: every stored row is
    zero in the pivot columns of the others.  Pivots are the first nonzero
    column (or the last one when ``reverse`` is set, which is what makes the
    annihilator come out directly in reduced echelon form).
    """

    def __init__(self, ncols: int, reverse: bool = False):
        self.ncols = ncols
        self.reverse = reverse
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def is_full(self) -> bool:
        return len(self._rows) == self.ncols

    def _pivot_of(self, v: list[int]) -> int:
        if self.reverse:
            for j in range(len(v) - 1, -1, -1):
                if v[j]:
                    return j
        else:
            for j, a in enumerate(v):
                if a:
                    return j
        return -1

    def _reduce(self, v: list[int]) -> list[int]:
        for p, row in zip(self._pivots, self._rows):
            c = v[p]
            if c:
                d = row[p]
                g = gcd(c, d)
                c //= g
                d //= g
                v = _primitive([d * a - c * b for a, b in zip(v, row)])
        return v

    def reduce(self, v: Sequence) -> list[int]:
        """Residual of ``v`` (scaled to a primitive integer vector)."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return self._reduce(_integer_row(v))

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; returns True when it enlarged the row space."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        if self.is_full():
            return False
        if all(isinstance(a, int) for a in v):
            w = self._reduce(_primitive(list(v)) if any(v) else list(v))
        else:
            w = self._reduce(_integer_row(v))
        p = self._pivot_of(w)
        if p < 0:
            return False
        if w[p] < 0:
            w = [-a for a in w]
        d = w[p]
        for i, row in enumerate(self._rows):
            c = row[p]
            if c:
                g = gcd(c, d)
                self._rows[i] = _primitive([d // g * a - c // g * b for a, b in zip(row, w)])
        self._rows.append(w)
        self._pivots.append(p)
        return True

    def extend(self, vectors: Iterable[Sequence]) -> int:
        added = 0
        for v in vectors:
            if self.is_full():
                break
            added += self.add(v)
        return added

    def close_under(self, perms: Sequence[Sequence[int]]) -> int:
        """Enlarge to the smallest subspace stable under the column permutations.

        Each permutation ``pm`` acts by ``v -> [v[pm[j]] for j]``.  Returns the
        number of rows added.
        """
        added = 0
        queue = list(range(len(self._rows)))
        seen_raw: list[list[int]] = [list(r) for r in self._rows]
        head = 0
        while head < len(queue):
            if self.is_full():
                break
            v = seen_raw[queue[head]]
            head += 1
            for pm in perms:
                w = [v[j] for j in pm]
                if self.add(w):
                    added += 1
                    seen_raw.append(w)
                    queue.append(len(seen_raw) - 1)
        return added

    def integer_rows(self) -> list[tuple[int, list[int]]]:
        """(pivot, primitive integer row) pairs sorted by pivot."""
        return sorted(zip(self._pivots, self._rows), key=lambda t: t[0])

    def rref(self) -> tuple[tuple[Fraction, ...], ...]:
        """Reduced row-echelon basis with Fraction entries (pivot entries 1)."""
        out = []
        for p, row in self.integer_rows():
            d = row[p]
            out.append(tuple(_ZERO if a == 0 else Fraction(a, d) for a in row))
        if self.reverse:
            out.sort(key=_first_nonzero)
        return tuple(out)

    def to_subspace(self) -> Subspace:
        if self.reverse:
            return Subspace.span(self.rref(), self.ncols)
        return Subspace(self.ncols, self.rref())

    def annihilator(self) -> Subspace:
        """The subspace {x : r . x = 0 for every stored row r}."""
        if self.reverse:
            rows = self.integer_rows()
        else:
            rev = Echelon(self.ncols, reverse=True)
            for _, row in self.integer_rows():
                rev.add(row)
            rows = rev.integer_rows()
        pivots = {p: row for p, row in rows}
        # With last-nonzero pivots every row is zero right of its pivot, so the
        # vectors below are already in reduced echelon form.
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [_ZERO] * self.ncols
            v[f] = _ONE
            for p, row in rows:
                c = row[f]
                if c:
                    v[p] = Fraction(-c, row[p])
            basis.append(tuple(v))
        return Subspace(self.ncols, tuple(basis))


def _first_nonzero(v: Sequence) -> int:
    for j, a in enumerate(v):
        if a:
            return j
    return len(v)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient stored by its reduced row-echelon basis."""

    ambient: int
    basis: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int) -> Subspace:
        ech = Echelon(ambient)
        for v in vectors:
            ech.add(v)
        return ech.to_subspace()

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        basis = tuple(
            tuple(_ONE if i == j else _ZERO for j in range(ambient)) for i in range(ambient)
        )
        return cls(ambient, basis)

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, ())

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_first_nonzero(v) for v in self.basis)

    def coordinates(self, v: Sequence) -> tuple[Fraction, ...] | None:
        """Coefficients of ``v`` in the echelon basis, or None if v is outside."""
        v = [to_fraction(a) for a in v]
        if len(v) != self.ambient:
            raise ValueError("dimension mismatch")
        coeffs = []
        for b, p in zip(self.basis, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c:
                v = [a - c * x for a, x in zip(v, b)]
        if any(v):
            return None
        return tuple(coeffs)

    def contains_vector(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains_vector(v)

    def echelon(self) -> Echelon:
        ech = Echelon(self.ambient)
        for b in self.basis:
            ech.add(b)
        return ech

    def intersection_dim_with(self, other: Subspace) -> int:
        _check_ambient(self, other)
        ech = self.echelon()
        ech.extend(other.basis)
        return len(self) + len(other) - ech.rank

    def __repr__(self) -> str:
        return f"Subspace(ambient={self.ambient}, dim={len(self)})"


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient dimension mismatch: {a.ambient} vs {b.ambient}")


def rank(m) -> int:
    """Rank by one-step fraction-free (Bareiss) elimination over the integers."""
    rows, ncols = _as_rows(m)
    a = [_integer_row(r) if any(to_fraction(x) for x in r) else [0] * ncols for r in rows]
    nrows = len(a)
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        pv = pr[col]
        for i in range(r + 1, nrows):
            ri = a[i]
            f = ri[col]
            # Bareiss: (pv*ri - f*pr) / prev is exact over Z
            a[i] = [(pv * x - f * y) // prev for x, y in zip(ri, pr)]
        prev = pv
        r += 1
    return r


def kernel_basis(m) -> Subspace:
    """Canonical echelon basis of the right kernel {v : m v = 0}."""
    rows, ncols = _as_rows(m)
    ech = Echelon(ncols, reverse=True)
    for row in rows:
        ech.add(row)
    return ech.annihilator()


def refine_kernel(current: Subspace, rows: Iterable[Sequence]) -> Subspace:
    """Kernel of ``rows`` restricted to ``current``, without re-eliminating from scratch.

    Each new constraint is evaluated on the current basis only; the work is
    proportional to dim(current), which shrinks as constraints accumulate.
    """
    basis = [list(b) for b in current.basis]
    for row in rows:
        if not basis:
            break
        row = [to_fraction(a) for a in row]
        if len(row) != current.ambient:
            raise ValueError("dimension mismatch")
        vals = [sum((x * y for x, y in zip(row, b) if y), _ZERO) for b in basis]
        k = next((i for i, c in enumerate(vals) if c), None)
        if k is None:
            continue
        bk, ck = basis[k], vals[k]
        new = []
        for i, (b, c) in enumerate(zip(basis, vals)):
            if i == k:
                continue
            if c:
                f = c / ck
                b = [x - f * y for x, y in zip(b, bk)]
            new.append(b)
        basis = new
    return Subspace.span(basis, current.ambient) if basis else Subspace.zero(current.ambient)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a.basis == b.basis


def subspace_contains(a: Subspace, b: Subspace) -> bool:
    """True iff every basis vector of ``b`` lies in ``a``."""
    _check_ambient(a, b)
    if len(b) > len(a):
        return False
    return all(a.contains_vector(v) for v in b.basis)

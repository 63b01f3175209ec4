"""Multilinear sectors P_{n-r,r}, the polynomial DSL, substitution and the S_{n-r} x S_r action.

Sector convention: in sector ``(n, r)`` the variables are ``y1..y(n-r)`` (even)
followed by ``z(n-r+1)..zn`` (odd).  A monomial is a word, i.e. an ordering of
``1..n``; ``sector_basis`` lists the ``n!`` words lexicographically, and the
coordinate vector of a polynomial is indexed by that list.

Commutators are left-normed: ``[a, b, c] = [[a, b], c]``.  ``a o b`` is the
Jordan product ``ab + ba``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from .linalg import to_fraction

__all__ = [
    "DEFAULT_SECTOR_CAP",
    "GradedMonomial",
    "MultilinearPoly",
    "ParseError",
    "ExpansionError",
    "SubstitutionError",
    "Var",
    "Sum",
    "Prod",
    "Comm",
    "Jordan",
    "sector_basis",
    "sector_words",
    "word_index",
    "parse",
    "expand",
    "parse_poly",
    "format_poly",
    "substitute",
    "act",
]

DEFAULT_SECTOR_CAP = 7


# ---------------------------------------------------------------------------
# sector basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class GradedMonomial:
    word: tuple[int, ...]
    r: int

    @property
    def n(self) -> int:
        return len(self.word)

    def kind(self, index: int) -> str:
        return "y" if index <= self.n - self.r else "z"

    @property
    def parity(self) -> tuple[int, ...]:
        """Parity of the letter at each position of the word."""
        return tuple(int(self.kind(i) == "z") for i in self.word)

    def __str__(self) -> str:
        return "".join(f"{self.kind(i)}{i}" for i in self.word)


def _check_sector(n: int, r: int, cap: int) -> None:
    if not (0 <= r <= n):
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the configured cap {cap}")


def sector_basis(n: int, r: int, cap: int = DEFAULT_SECTOR_CAP) -> list[GradedMonomial]:
    """All n! monomials of sector (n, r) in lexicographic order of the word."""
    _check_sector(n, r, cap)
    return [GradedMonomial(tuple(i + 1 for i in p), r) for p in sector_words(n)]


@lru_cache(maxsize=None)
def sector_words(n: int) -> tuple[tuple[int, ...], ...]:
    """0-based permutation words of length n in lexicographic order."""
    return tuple(itertools.permutations(range(n)))


def word_index(word: Sequence[int]) -> int:
    """Lexicographic rank of a permutation word (0- or 1-based is detected by min)."""
    base = min(word) if word else 0
    rest = [w - base for w in word]
    n = len(rest)
    idx = 0
    for pos, w in enumerate(rest):
        smaller = sum(1 for v in rest[pos + 1 :] if v < w)
        idx += smaller * math.factorial(n - 1 - pos)
    return idx


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultilinearPoly:
    """Element of P_{n-r,r}; ``coeffs`` maps 1-based words to nonzero rationals."""

    n: int
    r: int
    coeffs: tuple[tuple[tuple[int, ...], Fraction], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_mapping(cls, n: int, r: int, coeffs: Mapping, names=None) -> MultilinearPoly:
        clean = {}
        for word, c in coeffs.items():
            word = tuple(word)
            if sorted(word) != list(range(1, n + 1)):
                raise ValueError(f"word {word} is not a permutation of 1..{n}")
            c = to_fraction(c)
            if c:
                clean[word] = clean.get(word, Fraction(0)) + c
        return cls(n, r, tuple(sorted((w, c) for w, c in clean.items() if c)), names)

    @classmethod
    def from_vector(cls, n: int, r: int, vector: Sequence) -> MultilinearPoly:
        words = sector_words(n)
        if len(vector) != len(words):
            raise ValueError(f"vector length {len(vector)} != {n}!")
        return cls.from_mapping(
            n, r, {tuple(i + 1 for i in w): c for w, c in zip(words, vector) if c}
        )

    @property
    def sector(self) -> tuple[int, int]:
        return (self.n, self.r)

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.coeffs)

    def terms(self) -> Iterable[tuple[GradedMonomial, Fraction]]:
        for w, c in self.coeffs:
            yield GradedMonomial(w, self.r), c

    def to_vector(self) -> list[Fraction]:
        v = [Fraction(0)] * math.factorial(self.n)
        for w, c in self.coeffs:
            v[word_index(w)] = c
        return v

    def _same_sector(self, other: MultilinearPoly) -> None:
        if self.sector != other.sector:
            raise ValueError(f"sector mismatch: {self.sector} vs {other.sector}")

    def __add__(self, other: MultilinearPoly) -> MultilinearPoly:
        self._same_sector(other)
        acc = self.as_dict()
        for w, c in other.coeffs:
            acc[w] = acc.get(w, Fraction(0)) + c
        return MultilinearPoly.from_mapping(self.n, self.r, acc)

    def __neg__(self) -> MultilinearPoly:
        return MultilinearPoly(self.n, self.r, tuple((w, -c) for w, c in self.coeffs))

    def __sub__(self, other: MultilinearPoly) -> MultilinearPoly:
        return self + (-other)

    def scale(self, c) -> MultilinearPoly:
        c = to_fraction(c)
        return MultilinearPoly.from_mapping(self.n, self.r, {w: c * v for w, v in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        return format_poly(self)


def _sector_name(n: int, r: int, i: int) -> str:
    return f"{'y' if i <= n - r else 'z'}{i}"


def format_poly(f: MultilinearPoly) -> str:
    """Render in DSL syntax; ``expand(parse(format_poly(f))) == f``."""
    if f.is_zero():
        return "0"
    parts = []
    for k, (w, c) in enumerate(f.coeffs):
        mono = "".join(_sector_name(f.n, f.r, i) for i in w)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if a.denominator != 1:
            raise ValueError("DSL has integer coefficients only; cannot render a fraction")
        coef = "" if a == 1 else str(a.numerator)
        text = f"{coef} {mono}" if coef else mono
        if k == 0:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f"{sign} {text}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# DSL
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    kind: str  # "y" or "z"
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


@dataclass(frozen=True)
class Sum:
    terms: tuple[tuple[int, "Expr"], ...]  # (integer coefficient, expression)


@dataclass(frozen=True)
class Prod:
    factors: tuple["Expr", ...]


@dataclass(frozen=True)
class Comm:
    args: tuple["Expr", ...]

    def __post_init__(self):
        if len(self.args) < 2:
            raise ParseError("commutator needs at least two entries", 0)


@dataclass(frozen=True)
class Jordan:
    left: "Expr"
    right: "Expr"


Expr = Union[Var, Sum, Prod, Comm, Jordan]


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ExpansionError(ValueError):
    pass


class SubstitutionError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<var>[yz]\d+)|(?P<int>\d+)|(?P<op>[\[\],()+\-o]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind == "end":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def expr(self) -> Expr:
        terms = []
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append(self.term(sign))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self, sign: int) -> tuple[int, Expr]:
        coef = 1
        if self.peek()[0] == "int":
            _, val, pos = self.take()
            coef = int(val)
            if not self._starts_factor():
                if coef != 0:
                    raise ParseError("nonzero constant terms are not multilinear", pos)
                return 0, Sum(())  # the literal 0 printed for the zero polynomial
        factors = [self.factor()]
        while self._starts_factor():
            factors.append(self.factor())
        body = factors[0] if len(factors) == 1 else Prod(tuple(factors))
        return sign * coef, body

    def _starts_factor(self) -> bool:
        kind, val, _ = self.peek()
        return kind == "var" or (kind == "op" and val in "[(")

    def factor(self) -> Expr:
        left = self.primary()
        while self.peek()[0] == "op" and self.peek()[1] == "o":
            self.take()
            left = Jordan(left, self.primary())
        return left

    def primary(self) -> Expr:
        kind, val, pos = self.take()
        if kind == "var":
            return Var(val[0], int(val[1:]))
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "op" and val == "[":
            args = [self.expr()]
            while self.peek()[1] == "," and self.peek()[0] == "op":
                self.take()
                args.append(self.expr())
            self.expect("]")
            if len(args) < 2:
                raise ParseError("commutator needs at least two entries", pos)
            return Comm(tuple(args))
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos)


def parse(text: str) -> Expr:
    """Parse DSL text into an expression tree."""
    p = _Parser(text)
    e = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected token {val!r}", pos)
    return e


# Free-algebra expansion: dict of words over (kind, index) letters -> Fraction.
_Letter = tuple[str, int]
_Free = dict[tuple[_Letter, ...], Fraction]


def _free_mul(a: _Free, b: _Free) -> _Free:
    out: _Free = {}
    for u, x in a.items():
        for v, y in b.items():
            w = u + v
            out[w] = out.get(w, Fraction(0)) + x * y
    return {w: c for w, c in out.items() if c}


def _free_add(a: _Free, b: _Free, sign: int = 1) -> _Free:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, Fraction(0)) + sign * c
    return {w: c for w, c in out.items() if c}


def _expand_free(e: Expr) -> _Free:
    if isinstance(e, Var):
        return {((e.kind, e.index),): Fraction(1)}
    if isinstance(e, Sum):
        out: _Free = {}
        for coef, t in e.terms:
            out = _free_add(out, {w: coef * c for w, c in _expand_free(t).items()})
        return out
    if isinstance(e, Prod):
        out = {(): Fraction(1)}
        for f in e.factors:
            out = _free_mul(out, _expand_free(f))
        return out
    if isinstance(e, Comm):
        acc = _expand_free(e.args[0])
        for arg in e.args[1:]:
            b = _expand_free(arg)
            acc = _free_add(_free_mul(acc, b), _free_mul(b, acc), -1)
        return acc
    if isinstance(e, Jordan):
        a, b = _expand_free(e.left), _expand_free(e.right)
        return _free_add(_free_mul(a, b), _free_mul(b, a))
    raise TypeError(f"not an expression: {e!r}")


def _relabel(free: _Free) -> MultilinearPoly:
    """Turn a multilinear free-algebra element into a sector polynomial.

    y-letters sorted by index become 1..n-r, z-letters sorted by index become n-r+1..n.
    """
    if not free:
        raise ExpansionError("expression expands to zero; its sector is undetermined")
    letters = None
    for w in free:
        if len(set(w)) != len(w):
            raise ExpansionError(f"non-multilinear monomial {_fmt_free_word(w)}")
        if letters is None:
            letters = set(w)
        elif set(w) != letters:
            raise ExpansionError("monomials use different variable sets (mixed sector)")
    ys = sorted(i for k, i in letters if k == "y")
    zs = sorted(i for k, i in letters if k == "z")
    order = [("y", i) for i in ys] + [("z", i) for i in zs]
    pos = {letter: j + 1 for j, letter in enumerate(order)}
    n, r = len(order), len(zs)
    coeffs = {tuple(pos[x] for x in w): c for w, c in free.items()}
    names = tuple(f"{k}{i}" for k, i in order)
    return MultilinearPoly.from_mapping(n, r, coeffs, names)


def _fmt_free_word(w) -> str:
    return "".join(f"{k}{i}" for k, i in w)


def expand(e: Expr | str, sector: tuple[int, int] | None = None) -> MultilinearPoly:
    """Expand to a multilinear polynomial in its sector.

    Variables are mapped to the sector convention: y's (by index) first, then z's.
    With ``sector=(n, r)`` declared, an expression that cancels to zero yields the
    zero polynomial of that sector, and a nonzero one must belong to it.
    """
    if isinstance(e, str):
        e = parse(e)
    free = _expand_free(e)
    if not free and sector is not None:
        return MultilinearPoly(sector[0], sector[1], ())
    f = _relabel(free)
    if sector is not None and f.sector != tuple(sector):
        raise ExpansionError(f"expression lies in sector {f.sector}, not the declared {tuple(sector)}")
    return f


def parse_poly(text: str, sector: tuple[int, int] | None = None) -> MultilinearPoly:
    return expand(parse(text), sector)


def substitute(f: MultilinearPoly, images: Mapping[int, Sequence[str] | str]) -> MultilinearPoly:
    """Graded endomorphism: replace variable i of f by a word of fresh variables.

    ``images`` maps sector indices (1..n) to a word, either as DSL text
    (``"z1z2"``) or a sequence of names (``["z1", "z2"]``).  Missing indices map to
    themselves.  y-images need an even number of z's, z-images an odd number.
    """
    words: dict[int, tuple[_Letter, ...]] = {}
    for i in range(1, f.n + 1):
        img = images.get(i, _sector_name(f.n, f.r, i))
        if isinstance(img, str):
            img = re.findall(r"[yz]\d+", img) if img.strip() else []
            raw = images.get(i)
            if isinstance(raw, str) and "".join(img) != re.sub(r"\s+", "", raw):
                raise SubstitutionError(f"image of variable {i} is not a word: {raw!r}")
        letters = tuple((s[0], int(s[1:])) for s in img)
        if not letters:
            raise SubstitutionError(f"image of variable {i} is empty")
        zcount = sum(1 for k, _ in letters if k == "z")
        want = 0 if i <= f.n - f.r else 1
        if zcount % 2 != want:
            raise SubstitutionError(
                f"parity violation: {_sector_name(f.n, f.r, i)} -> {_fmt_free_word(letters)}"
            )
        words[i] = letters
    seen = [x for w in words.values() for x in w]
    if len(set(seen)) != len(seen):
        raise SubstitutionError("images reuse a variable")
    free = {tuple(x for i in w for x in words[i]): c for w, c in f.coeffs}
    if not free:
        raise SubstitutionError("cannot substitute into the zero polynomial")
    return _relabel(free)


def act(g: Sequence[int], h: Sequence[int], f: MultilinearPoly) -> MultilinearPoly:
    """(g, h) in S_{n-r} x S_r renames y_i -> y_g(i) and z_(n-r+j) -> z_(n-r+h(j)).

    Permutations are in 1-based one-line notation, e.g. ``(2, 1)`` swaps the first two.
    """
    m = f.n - f.r
    if len(g) != m or len(h) != f.r:
        raise ValueError(f"need permutations of sizes {m} and {f.r}")
    if sorted(g) != list(range(1, m + 1)) or sorted(h) != list(range(1, f.r + 1)):
        raise ValueError("g and h must be permutations in one-line notation")
    image = {i: g[i - 1] for i in range(1, m + 1)}
    image.update({m + j: m + h[j - 1] for j in range(1, f.r + 1)})
    return MultilinearPoly(
        f.n, f.r, tuple(sorted((tuple(image[i] for i in w), c) for w, c in f.coeffs))
    )

"""Replayable ledger of closed-form claims: codimensions, cocharacters, generators, kernel equalities.

A fixture is a JSON object::

    {"id": ..., "algebra": {"name": family, "params": {p: expr | [values]}},
     "kind": "codim" | "central-codim" | "delta" | "cochar" | "generators"
             | "kernel-equality" | "closure",
     "formula": ..., "range": [lo, hi],   (lo may be an expression) "status": "asserted" | "suspect",
     "anchor": "<LaTeX of the claimed formula>"}

Parameters given as lists, and the optional ``"bind": {name: [values]}`` formula
parameters, are instantiated one combination at a time; the remaining algebra
parameters are expressions in them.
Numeric and cocharacter formulas use a small expression tree:

* integers, ``{"param": name}``
* ``{"add": [...]}``, ``{"sub": [a, b]}``, ``{"mul": [...]}``, ``{"pow": [a, b]}``,
  ``{"binom": [a, b]}`` (zero outside ``0 <= b <= a``), ``{"floordiv": [a, b]}``,
  ``{"min": [...]}``
* ``{"sum": {"var": v, "from": e, "to": e, "step": e?, "body": e}}`` (inclusive)
* ``{"chi": {"lambda": [part...], "mu": [part...]}}`` where a part is an expression
  or ``{"ones": e}`` (that many parts equal to 1).  Trailing zero parts are
  dropped; a template that does not give a partition contributes nothing.

For ``cochar`` the formula is ``{"character": graded|central|proper-central,
"terms": expr}``; for ``generators`` it is ``{"mode": identities|central,
"ideal": [...], "space": [...]}`` whose texts may contain template fields
expanded by :func:`expand_template`; for ``kernel-equality`` it is
``{"left": {"algebra": ..., "kind": ...}, "right": {...}, "equal": bool}``
(``equal: false`` means the kernels differ somewhere in the range); for
``closure`` it is ``{"holds": bool}``.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Any, Mapping

from .algebra import SuperAlgebra, catalog
from .evaluation import codim_report, default_threads, kernels_equal_across
from .symmetrica import cocharacter, pair_degree
from .t2gen import GeneratorSet, t2ideal_closure_check, verify_generators

__all__ = [
    "Fixture",
    "FixtureResult",
    "FormulaError",
    "evaluate",
    "evaluate_formula",
    "expand_template",
    "load_fixtures",
    "default_fixture_path",
    "run_fixture",
    "run_fixtures",
    "KINDS",
]

KINDS = ("codim", "central-codim", "delta", "cochar", "generators", "kernel-equality", "closure")
STATUSES = ("asserted", "suspect")
KIND_CAPS = {"codim": 6, "central-codim": 6, "delta": 6, "cochar": 5, "generators": 5,
             "kernel-equality": 5, "closure": 4}


class FormulaError(ValueError):
    pass


# ---------------------------------------------------------------------------
# expression evaluation
# ---------------------------------------------------------------------------


class Character(dict):
    """Formal sum of chi_{lambda,mu}: maps (lambda, mu) -> integer multiplicity."""

    def plus(self, other: Character) -> Character:
        out = Character(self)
        for key, m in other.items():
            out[key] = out.get(key, 0) + m
        return Character({k: v for k, v in out.items() if v})

    def times(self, c: int) -> Character:
        return Character({k: c * v for k, v in self.items() if c * v})


def _combine_add(values):
    if any(isinstance(v, Character) for v in values):
        out = Character()
        for v in values:
            if not isinstance(v, Character):
                if v != 0:
                    raise FormulaError("cannot add a number to a character")
                continue
            out = out.plus(v)
        return out
    return sum(values)


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _partition(parts, env) -> tuple[int, ...] | None:
    out = []
    for p in parts:
        if isinstance(p, Mapping) and "ones" in p:
            count = _int(evaluate(p["ones"], env))
            if count < 0:
                return None
            out.extend([1] * count)
        else:
            out.append(_int(evaluate(p, env)))
    while out and out[-1] == 0:
        out.pop()
    if any(x <= 0 for x in out) or any(a < b for a, b in zip(out, out[1:])):
        return None
    return tuple(out)


def _int(v) -> int:
    if isinstance(v, Character) or not isinstance(v, int):
        raise FormulaError(f"expected an integer, got {v!r}")
    return v


def evaluate(expr: Any, env: Mapping[str, int]):
    """Evaluate an expression tree to an int or a :class:`Character`."""
    if isinstance(expr, bool):
        raise FormulaError("booleans are not expressions")
    if isinstance(expr, int):
        return expr
    if not isinstance(expr, Mapping) or len(expr) != 1:
        raise FormulaError(f"malformed expression node: {expr!r}")
    (op, arg), = expr.items()
    if op == "param":
        if arg not in env:
            raise FormulaError(f"unbound parameter {arg!r}")
        return env[arg]
    if op == "add":
        return _combine_add([evaluate(a, env) for a in arg])
    if op == "sub":
        a, b = (evaluate(x, env) for x in arg)
        if isinstance(a, Character) or isinstance(b, Character):
            a = a if isinstance(a, Character) else Character()
            b = b if isinstance(b, Character) else Character()
            return a.plus(b.times(-1))
        return a - b
    if op == "mul":
        values = [evaluate(a, env) for a in arg]
        chars = [v for v in values if isinstance(v, Character)]
        if len(chars) > 1:
            raise FormulaError("cannot multiply two characters")
        scalar = math.prod(v for v in values if not isinstance(v, Character))
        return chars[0].times(scalar) if chars else scalar
    if op == "pow":
        a, b = (_int(evaluate(x, env)) for x in arg)
        if b < 0:
            raise FormulaError("negative exponent")
        return a**b
    if op == "binom":
        a, b = (_int(evaluate(x, env)) for x in arg)
        return _binom(a, b)
    if op == "floordiv":
        a, b = (_int(evaluate(x, env)) for x in arg)
        return a // b
    if op == "min":
        return min(_int(evaluate(x, env)) for x in arg)
    if op == "sum":
        var = arg["var"]
        lo = _int(evaluate(arg["from"], env))
        hi = _int(evaluate(arg["to"], env))
        step = _int(evaluate(arg.get("step", 1), env))
        if step <= 0:
            raise FormulaError("sum step must be positive")
        values = [evaluate(arg["body"], {**env, var: i}) for i in range(lo, hi + 1, step)]
        if not values:
            return 0
        return _combine_add(values)
    if op == "chi":
        lam = _partition(arg["lambda"], env)
        mu = _partition(arg["mu"], env)
        if lam is None or mu is None:
            return Character()
        return Character({(lam, mu): 1})
    raise FormulaError(f"unknown operator {op!r}")


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fixture:
    id: str
    algebra: Mapping
    kind: str
    formula: Any
    range: tuple[Any, int]  # (lower bound expression, upper bound)
    status: str
    anchor: str
    bind: Mapping = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data: Mapping) -> Fixture:
        missing = {"id", "algebra", "kind", "formula", "range", "status", "anchor"} - set(data)
        if missing:
            raise ValueError(f"fixture missing keys: {sorted(missing)}")
        if data["kind"] not in KINDS:
            raise ValueError(f"{data['id']}: unknown kind {data['kind']!r}")
        if data["status"] not in STATUSES:
            raise ValueError(f"{data['id']}: unknown status {data['status']!r}")
        lo, hi = data["range"]
        if not isinstance(hi, int) or (isinstance(lo, int) and not 1 <= lo <= hi):
            raise ValueError(f"{data['id']}: bad range {data['range']}")
        return cls(data["id"], data["algebra"], data["kind"], data["formula"], (lo, hi),
                   data["status"], data["anchor"], data.get("bind", {}))

    def to_dict(self) -> dict:
        out = {"id": self.id, "algebra": self.algebra, "kind": self.kind, "formula": self.formula,
               "range": list(self.range), "status": self.status, "anchor": self.anchor}
        if self.bind:
            out["bind"] = dict(self.bind)
        return out

    def lower(self, env: Mapping[str, int]) -> int:
        """Smallest degree covered by the claim for this parameter instance."""
        return max(1, _int(evaluate(self.range[0], env)))

    def instances(self) -> list[dict[str, int]]:
        """Parameter environments: every combination of the ``bind`` values and of the
        list-valued algebra parameters."""
        params = {k: v for k, v in self.algebra.get("params", {}).items() if isinstance(v, list)}
        params.update(self.bind)
        keys = sorted(params)
        choices = [params[k] if isinstance(params[k], list) else [params[k]] for k in keys]
        return [dict(zip(keys, combo)) for combo in itertools.product(*choices)]


def _build_algebra(spec: Mapping, env: Mapping[str, int]) -> SuperAlgebra:
    params = {}
    for key, value in spec.get("params", {}).items():
        params[key] = env[key] if isinstance(value, list) else _int(evaluate(value, env))
    return catalog(spec["name"], **params)


def evaluate_formula(f: Fixture, n: int, params: Mapping[str, int] | None = None):
    """Value claimed by a numeric or cocharacter fixture at degree n."""
    env = dict(params if params is not None else f.instances()[0])
    if not (f.lower(env) <= n <= f.range[1]):
        raise ValueError(f"{f.id}: n={n} outside range [{f.lower(env)}, {f.range[1]}]")
    env["n"] = n
    if f.kind == "cochar":
        value = evaluate(f.formula["terms"], env)
        if isinstance(value, int):
            if value != 0:
                raise FormulaError("cocharacter formula evaluated to a nonzero number")
            value = Character()
        return value
    if f.kind in ("codim", "central-codim", "delta"):
        value = _int(evaluate(f.formula, env))
        if value < 0:
            raise FormulaError(f"{f.id}: formula is negative at n={n}")
        return value
    raise ValueError(f"{f.id}: kind {f.kind} has no numeric formula")


_TEMPLATE = re.compile(r"\{([^{}]+)\}")


def expand_template(text: str, env: Mapping[str, int]) -> str:
    """Expand ``{list:y:1:k}`` (y1,...,yk), ``{word:y:2:k}`` (y2...yk),
    ``{pairs:1:k}`` ([y1,y2]...[y(2k-1),y(2k)]) and ``{expr}`` integer fields."""

    def field_value(spec: str) -> str:
        parts = spec.split(":")
        if parts[0] == "list":
            letter, lo, hi = parts[1], _param_int(parts[2], env), _param_int(parts[3], env)
            return ",".join(f"{letter}{i}" for i in range(lo, hi + 1))
        if parts[0] == "word":
            letter, lo, hi = parts[1], _param_int(parts[2], env), _param_int(parts[3], env)
            return "".join(f"{letter}{i}" for i in range(lo, hi + 1))
        if parts[0] == "pairs":
            lo, count = _param_int(parts[1], env), _param_int(parts[2], env)
            return "".join(f"[y{lo + 2 * i},y{lo + 2 * i + 1}]" for i in range(count))
        return str(_param_int(spec, env))

    return _TEMPLATE.sub(lambda m: field_value(m.group(1)), text)


def _param_int(token: str, env: Mapping[str, int]) -> int:
    """Integer literal, parameter name, or ``name+c`` / ``name-c`` / ``name/c``."""
    m = re.fullmatch(r"([A-Za-z_]\w*|\d+)(?:([+\-/])(\d+))?", token.strip())
    if not m:
        raise FormulaError(f"bad template field {token!r}")
    base = int(m.group(1)) if m.group(1).isdigit() else env[m.group(1)]
    if m.group(2) == "+":
        return base + int(m.group(3))
    if m.group(2) == "-":
        return base - int(m.group(3))
    if m.group(2) == "/":
        return base // int(m.group(3))
    return base


@dataclass
class FixtureResult:
    id: str
    verdict: str  # pass | fail | suspect-diff
    status: str
    diffs: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"id": self.id, "verdict": self.verdict, "status": self.status, "diffs": self.diffs}


def _char_json(ch: Mapping) -> list[dict]:
    return [{"lambda": list(l), "mu": list(m), "m": v} for (l, m), v in sorted(
        ch.items(), key=lambda kv: (sum(kv[0][1]), [-x for x in kv[0][0]], [-x for x in kv[0][1]]))]


def _check_instance(f: Fixture, env: dict[str, int], hi: int) -> list[dict]:
    """Return the list of discrepancies for one parameter instance."""
    lo = f.lower(env)
    A = _build_algebra(f.algebra, env)
    diffs = []
    if f.kind in ("codim", "central-codim", "delta"):
        attr = {"codim": "c", "central-codim": "cz", "delta": "delta"}[f.kind]
        for n in range(lo, hi + 1):
            expected = evaluate_formula(f, n, env)
            computed = getattr(codim_report(A, n), attr)
            if expected != computed:
                diffs.append({"params": env, "n": n, "expected": expected, "computed": computed})
    elif f.kind == "cochar":
        which = f.formula["character"]
        for n in range(lo, hi + 1):
            expected = evaluate_formula(f, n, env)
            computed = cocharacter(A, n, which).as_dict()
            if dict(expected) != computed:
                diffs.append({
                    "params": env, "n": n,
                    "expected": _char_json(expected),
                    "computed": _char_json(computed),
                    "expected_degree_sum": sum(m * pair_degree(a, b) for (a, b), m in expected.items()),
                    "computed_degree_sum": sum(m * pair_degree(a, b) for (a, b), m in computed.items()),
                })
    elif f.kind == "generators":
        spec = f.formula
        gens = GeneratorSet.from_texts(
            [expand_template(t, env) for t in spec.get("ideal", [])],
            [expand_template(t, env) for t in spec.get("space", [])],
        )
        report = verify_generators(gens, A, hi, spec["mode"])
        for s in report.failures:
            if s.n >= lo:
                diffs.append({"params": env, "n": s.n, "r": s.r, "generated_dim": s.generated_dim,
                              "kernel_dim": s.kernel_dim, "contained": s.contained})
    elif f.kind == "kernel-equality":
        left, right = f.formula["left"], f.formula["right"]
        B = _build_algebra(right["algebra"], env)
        A = _build_algebra(left["algebra"], env)
        results = {n: kernels_equal_across(A, B, n, _kernel(left["kind"]), _kernel(right["kind"]))
                   for n in range(lo, hi + 1)}
        if f.formula["equal"]:
            diffs.extend({"params": env, "n": n, "equal": False} for n, ok in results.items() if not ok)
        elif all(results.values()):
            diffs.append({"params": env, "n": [lo, hi], "equal": True})
    elif f.kind == "closure":
        report = t2ideal_closure_check(A, hi)
        if report.ok != f.formula["holds"]:
            diffs.append({"params": env, "n": hi, "holds": report.ok,
                          "failures": [list(x) for x in report.failures[:10]]})
    return diffs


def _kernel(kind: str) -> str:
    if kind not in ("identity", "central"):
        raise ValueError(f"kernel kind must be identity or central, got {kind!r}")
    return kind


def run_fixture(f: Fixture, max_n: int | None = None) -> FixtureResult:
    """Replay a fixture; suspect fixtures report differences instead of failing."""
    hi = min(f.range[1], KIND_CAPS[f.kind] if max_n is None else max_n)
    diffs = []
    for env in f.instances():
        if hi >= f.lower(env):
            diffs.extend(_check_instance(f, env, hi))
    if not diffs:
        verdict = "pass"
    else:
        verdict = "suspect-diff" if f.status == "suspect" else "fail"
    return FixtureResult(f.id, verdict, f.status, diffs)


def run_fixtures(
    fixtures: list[Fixture], max_n: int | None = None, threads: int | None = None
) -> list[FixtureResult]:
    """Run fixtures (optionally in parallel); results ordered by fixture id."""
    ordered = sorted(fixtures, key=lambda f: f.id)
    threads = default_threads() if threads is None else threads
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda f: run_fixture(f, max_n), ordered))
    return [run_fixture(f, max_n) for f in ordered]


def default_fixture_path():
    return resources.files("gradedpi").joinpath("data/fixtures.json")


def load_fixtures(path=None) -> list[Fixture]:
    """Load a fixture file (a JSON list, or an object with a "fixtures" list)."""
    if path is None:
        text = default_fixture_path().read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    items = data["fixtures"] if isinstance(data, Mapping) else data
    fixtures = [Fixture.from_dict(d) for d in items]
    ids = [f.id for f in fixtures]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate fixture ids")
    return fixtures

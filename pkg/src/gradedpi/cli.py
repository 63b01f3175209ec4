"""Command-line front end: ``gradedpi <command> ...``.

Exit codes: 0 success, 1 a verification reported failures, 2 usage errors
(unknown algebra, malformed input, caps exceeded).
"""

from __future__ import annotations

import argparse
import csv
import fnmatch
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .algebra import SuperAlgebra, UnknownAlgebraError, algebra_from_name, catalog_names, iter_catalog, load_algebra, validate
from .evaluation import DEFAULT_EVAL_CAP, METHODS, THREADS_ENV, codim_report
from .fixtures import _build_algebra, evaluate, load_fixtures, run_fixtures
from .polyspace import MultilinearPoly, format_poly
from .symmetrica import DEFAULT_COCHAR_CAP, cocharacter
from .t2gen import (
    DEFAULT_T2_CAP,
    GeneratorSet,
    known_generators,
    load_generators,
    rewrite_congruence_check,
    t2ideal_closure_check,
    t2ideal_sector,
    t2space_sector,
    verify_generators,
)

FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    """Reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def parse_range(text: str) -> tuple[int, int]:
    """``"3"`` -> (3, 3); ``"1..5"`` -> (1, 5)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad degree range {text!r} (expected N or LO..HI)") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad degree range {text!r}")
    return lo, hi


def resolve_algebra(text: str) -> SuperAlgebra:
    """A catalog name (``N4gr``, ``G2``, ...) or the path of an algebra JSON file."""
    if text.endswith(".json") or os.path.sep in text:
        try:
            return load_algebra(text)
        except OSError as exc:
            raise UsageError(f"cannot read algebra file: {exc}") from None
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed algebra file {text}: {exc}") from None
    return algebra_from_name(text)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, default=_json_default)


def _json_default(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    raise TypeError(f"not JSON serialisable: {type(x).__name__}")


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _table(rows: list[list]) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).rjust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n"


def _emit(fmt: str, obj, rows: list[list]) -> None:
    if fmt == "json":
        sys.stdout.write(dumps(obj) + "\n")
    elif fmt == "csv":
        sys.stdout.write(_csv(rows))
    else:
        sys.stdout.write(_table(rows))


def _partition_text(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")" if p else "∅"


def _closed_forms(A: SuperAlgebra, n: int) -> dict[str, int]:
    """Closed-form values recorded in the shipped fixtures for this algebra and degree."""
    out = {}
    key = {"codim": "c", "central-codim": "cz", "delta": "delta"}
    for f in load_fixtures():
        if f.kind not in key:
            continue
        for env in f.instances():
            try:
                if _build_algebra(f.algebra, env).name != A.name:
                    continue
            except ValueError:
                continue
            if n >= f.lower(env):
                out[key[f.kind]] = evaluate(f.formula, {**env, "n": n})
    return out


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_algebra(args) -> int:
    if args.action == "list":
        names = [A.name for A in iter_catalog()]
        if args.format == "json":
            sys.stdout.write(dumps({"families": catalog_names(), "examples": names}) + "\n")
        else:
            sys.stdout.write("families: " + " ".join(catalog_names()) + "\n")
            sys.stdout.write("examples: " + " ".join(names) + "\n")
        return 0
    if not args.name:
        raise UsageError("algebra show needs a name")
    A = resolve_algebra(args.name)
    if args.format == "json":
        sys.stdout.write(A.to_json() + "\n")
        return 0
    report = validate(A)
    print(f"{A.name}: dim {A.dim} (even {len(A.even_basis)}, odd {len(A.odd_basis)})")
    print("degrees: " + " ".join(str(d) for d in A.degrees))
    print(f"unit: {A.unit is not None}  monomial basis: {A.is_monomial}")
    print(f"valid: {report.ok}  grading violations: {len(report.grading)}  "
          f"associativity violations: {len(report.associativity)}  unit problems: {len(report.unit)}")
    return 0


def cmd_codim(args) -> int:
    A = resolve_algebra(args.algebra)
    lo, hi = parse_range(args.n)
    cap = args.max_n or DEFAULT_EVAL_CAP
    if hi > cap:
        raise UsageError(f"n={hi} exceeds the evaluation cap {cap} (raise it with --max-n)")
    reports = []
    for n in range(lo, hi + 1):
        rep = codim_report(A, n, method=args.method, cap=cap, threads=args.threads).to_dict()
        forms = _closed_forms(A, n)
        if forms:
            rep["formula"] = forms
        reports.append(rep)
    header = ["algebra", "n", "c", "cz", "delta", "formula"]
    rows = [header] + [
        [r["algebra"], r["n"], r["c"], r["cz"], r["delta"],
         " ".join(f"{k}={v}" for k, v in sorted(r.get("formula", {}).items())) or "-"]
        for r in reports
    ]
    _emit(args.format, reports, rows)
    return 0


def cmd_cocharacter(args) -> int:
    A = resolve_algebra(args.algebra)
    n = int(args.n)
    cap = args.max_n or DEFAULT_COCHAR_CAP
    if not 1 <= n <= cap:
        raise UsageError(f"n={n} outside 1..{cap} (raise the cap with --max-n)")
    dec = cocharacter(A, n, args.kind, cap=cap)
    terms = sorted(dec.terms, key=lambda t: (sum(t[1]), [-x for x in t[0]], [-x for x in t[1]]))
    obj = dec.to_dict()
    obj["terms"] = [{"lambda": list(a), "mu": list(b), "m": m} for a, b, m in terms]
    obj["degree_sum"] = dec.degree_sum()
    if args.format == "json":
        sys.stdout.write(dumps(obj) + "\n")
    elif args.format == "csv":
        rows = [["lambda", "mu", "m"]] + [[_partition_text(a), _partition_text(b), m] for a, b, m in terms]
        sys.stdout.write(_csv(rows))
    else:
        print(f"{dec.algebra} n={n} {args.kind} cocharacter")
        for a, b, m in terms:
            print(f"  ({_partition_text(a)},{_partition_text(b)}): {m}")
        print(f"degree sum: {dec.degree_sum()}")
    return 0


def _generator_set(args) -> GeneratorSet | None:
    if getattr(args, "gens", None):
        try:
            return load_generators(args.gens)
        except OSError as exc:
            raise UsageError(f"cannot read generator file: {exc}") from None
        except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed generator file {args.gens}: {exc}") from None
    if getattr(args, "ideal", None) or getattr(args, "space", None):
        return GeneratorSet.from_texts(args.ideal or (), args.space or ())
    return None


def _integer_vector(vec) -> list[int]:
    den = math.lcm(*(Fraction(x).denominator for x in vec)) if vec else 1
    ints = [int(Fraction(x) * den) for x in vec]
    g = math.gcd(*ints) or 1
    return [x // g for x in ints]


def cmd_t2(args) -> int:
    cap = args.max_n or DEFAULT_T2_CAP
    if args.action == "span":
        gens = _generator_set(args)
        if gens is None:
            raise UsageError("t2 span needs --gens FILE or --ideal/--space texts")
        n = int(args.n)
        if n > cap:
            raise UsageError(f"n={n} exceeds the T2 cap {cap}")
        sectors = [args.r] if args.r is not None else list(range(n + 1))
        out = []
        for r in sectors:
            if not 0 <= r <= n:
                raise UsageError(f"sector r={r} outside 0..{n}")
            sub = t2space_sector(gens, n, r, cap) if gens.space else t2ideal_sector(gens, n, r, cap)
            entry = {"n": n, "r": r, "dim": sub.dimension, "ambient": math.factorial(n)}
            if args.basis:
                entry["basis"] = [
                    format_poly(MultilinearPoly.from_vector(n, r, _integer_vector(v))) for v in sub.basis
                ]
            out.append(entry)
        rows = [["n", "r", "dim", "ambient"]] + [[e["n"], e["r"], e["dim"], e["ambient"]] for e in out]
        obj = {"flag": gens.flag, "generators": gens.to_dict(), "sectors": out}
        _emit(args.format, obj, rows)
        if args.basis and args.format == "table":
            for e in out:
                for text in e["basis"]:
                    print(f"  [{e['n']},{e['r']}] {text}")
        return 0
    if args.action == "congruence":
        n = int(args.n)
        rep = rewrite_congruence_check(n, cap=max(cap, n))
        obj = {"n": n, "item1": rep.item1, "item2": {str(p): v for p, v in sorted(rep.item2.items())},
               "failures": rep.failures, "ok": rep.ok}
        rows = [["n", "item1", "item2", "ok"],
                [n, rep.item1, " ".join(f"p={p}:{v}" for p, v in sorted(rep.item2.items())), rep.ok]]
        _emit(args.format, obj, rows)
        return 0 if rep.ok else 1
    if not args.algebra:
        raise UsageError(f"t2 {args.action} needs --algebra")
    A = resolve_algebra(args.algebra)
    n = int(args.n)
    if args.action == "verify":
        gens = _generator_set(args) or known_generators(A, args.mode)
        if gens is None:
            raise UsageError(f"no recorded generating set for {A.name} ({args.mode}); pass --gens")
        if n > cap:
            raise UsageError(f"n={n} exceeds the T2 cap {cap}")
        rep = verify_generators(gens, A, n, args.mode, cap)
        failures = [{"n": s.n, "r": s.r, "generated_dim": s.generated_dim, "kernel_dim": s.kernel_dim,
                     "contained": s.contained} for s in rep.failures]
        obj = {"algebra": A.name, "mode": args.mode, "n": n, "generators": gens.to_dict(),
               "ok": rep.ok, "failures": failures}
        rows = [["algebra", "mode", "n", "ok", "failures"],
                [A.name, args.mode, n, rep.ok, " ".join(f"({f['n']},{f['r']})" for f in failures) or "-"]]
        _emit(args.format, obj, rows)
        return 0 if rep.ok else 1
    # closure
    if n + 1 > max(cap, DEFAULT_EVAL_CAP):
        raise UsageError(f"closure at n={n} needs degree {n + 1} within the evaluation cap")
    rep = t2ideal_closure_check(A, n, max(cap, n + 1))
    obj = {"algebra": A.name, "n": n, "ok": rep.ok, "failures": [list(f) for f in rep.failures]}
    rows = [["algebra", "n", "ok", "failures"],
            [A.name, n, rep.ok, " ".join(f"({a},{b},{c})" for a, b, c in rep.failures) or "-"]]
    _emit(args.format, obj, rows)
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    try:
        fixtures = load_fixtures(args.fixtures)
    except OSError as exc:
        raise UsageError(f"cannot read fixture file: {exc}") from None
    except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed fixture file: {exc}") from None
    if args.filter:
        fixtures = [f for f in fixtures if any(fnmatch.fnmatchcase(f.id, p) for p in args.filter)]
    results = run_fixtures(fixtures, max_n=args.max_n, threads=args.threads)
    failed = [r for r in results if r.verdict == "fail"]
    obj = {"results": [r.to_dict() for r in results],
           "summary": {v: sum(r.verdict == v for r in results) for v in ("pass", "fail", "suspect-diff")}}
    rows = [["id", "status", "verdict", "first-n"]] + [
        [r.id, r.status, r.verdict, r.diffs[0]["n"] if r.diffs else "-"] for r in results
    ]
    _emit(args.format, obj, rows)
    if args.format == "table":
        s = obj["summary"]
        print(f"{len(results)} fixtures: {s['pass']} pass, {s['fail']} fail, {s['suspect-diff']} suspect-diff")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table", help="output format")
    common.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")
    common.add_argument("--max-n", type=int, default=None, help="override the degree cap")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker threads (default: ${THREADS_ENV} or 1)")

    parser = argparse.ArgumentParser(prog="gradedpi", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gradedpi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("algebra", parents=[common], help="list or show catalog algebras")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("codim", parents=[common], help="graded, central and proper central codimensions")
    p.add_argument("--algebra", required=True, help="catalog name (e.g. UT2, N4gr, G2) or algebra JSON path")
    p.add_argument("--n", required=True, help="degree N or inclusive range LO..HI")
    p.add_argument("--method", choices=METHODS, default="auto", help="evaluation strategy (fast path toggle)")
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("cocharacter", parents=[common], help="cocharacter multiplicities")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--kind", choices=("graded", "central", "proper-central"), default="graded")
    p.set_defaults(func=cmd_cocharacter)

    p = sub.add_parser("t2", parents=[common], help="T2-ideal / T2-space spans and verification")
    p.add_argument("action", choices=("span", "verify", "closure", "congruence"))
    p.add_argument("--algebra")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--r", type=int, default=None, help="single sector (span only)")
    p.add_argument("--mode", choices=("identities", "central"), default="identities")
    p.add_argument("--gens", help="generator JSON file {\"ideal\": [...], \"space\": [...]}")
    p.add_argument("--ideal", nargs="*", help="ideal-part generator texts")
    p.add_argument("--space", nargs="*", help="space-part generator texts")
    p.add_argument("--basis", action="store_true", help="print a basis of each sector (span only)")
    p.set_defaults(func=cmd_t2)

    p = sub.add_parser("verify", parents=[common], help="replay the fixture ledger")
    p.add_argument("--fixtures", default=None, help="fixture JSON file (default: shipped ledger)")
    p.add_argument("--filter", action="append", help="glob on fixture ids, e.g. 'N*' (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n is not None and args.max_n < 1:
        parser.error("--max-n must be positive")
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    try:
        return args.func(args)
    except UnknownAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # caps, malformed generator texts, bad parameters
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

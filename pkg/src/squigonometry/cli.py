"""Command-line interface: CSV-emitting subcommands over the library.

Output conventions: every data command writes CSV to stdout with a header
row; floats are printed in shortest round-trip form, so parsing a value back
gives the identical binary64.  Exit codes: 0 on success, 2 on invalid
arguments or domain errors, 3 when a computation or verification fails.

The cache subcommands persist MacLaurin tables plus the matching pi_p to a
JSON file so later runs can rebuild evaluation contexts bit-identically.
Entries are keyed by (p, m, n, epsilon); floats are stored as JSON numbers
(round-trip exact) and integer numerators as decimal strings.  The cache
directory defaults to $SQUIG_CACHE_DIR, falling back to ~/.cache/squigonometry.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import constants, derivpoly, evalcore, explicit, factors, series, triangle
from .errors import DomainError, ParameterError, SquigError
from .series import EPS_DEFAULT
from .triangle import SquigParams

CACHE_FORMAT = 1
CACHE_BASENAME = "tables.json"


# ---------------------------------------------------------------------------
# Cache file handling.

def default_cache_dir() -> str:
    env = os.environ.get("SQUIG_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "squigonometry")


def _entry_key(p: int, m: int, n: int, epsilon: float) -> str:
    return f"{p}|{m}|{n}|{float(epsilon).hex()}"


def save_tables(path: str, p: int, epsilon: float = EPS_DEFAULT) -> dict:
    """Write (or merge into) a cache file the sq and cq tables for one p.

    Stores floats verbatim and exact numerators as decimal strings, plus the
    pi_p the tables were sized against.  Returns the full document.
    """
    record = constants.compute_pi(p, epsilon)
    doc: dict = {"format": CACHE_FORMAT, "entries": {}}
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("format") != CACHE_FORMAT:
            raise ParameterError(f"cache file {path} has unsupported format {doc.get('format')!r}")
    for m, n in ((0, 1), (1, 0)):
        table = series.maclaurin(SquigParams(p=p, m=m, n=n), record.J_used, with_numerators=True)
        doc["entries"][_entry_key(p, m, n, epsilon)] = {
            "p": p,
            "m": m,
            "n": n,
            "J": table.J,
            "epsilon": epsilon,
            "pi_p": record.value,
            "floats": list(table.floats),
            "numerators": [str(v) for v in table.numerators],
        }
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
    return doc


def _load_entry(doc: dict, p: int, m: int, n: int, epsilon: float) -> series.MacLaurinTable:
    key = _entry_key(p, m, n, epsilon)
    if key not in doc.get("entries", {}):
        raise ParameterError(f"cache has no entry for p={p}, m={m}, n={n}, epsilon={epsilon}")
    entry = doc["entries"][key]
    return series.MacLaurinTable(
        params=SquigParams(p=entry["p"], m=entry["m"], n=entry["n"]),
        J=entry["J"],
        floats=tuple(entry["floats"]),
        numerators=tuple(int(v) for v in entry["numerators"]),
    )


def load_context(path: str, p: int, epsilon: float = EPS_DEFAULT) -> evalcore.EvalContext:
    """Rebuild an evaluation context from a cache file, bit-identically.

    The returned context evaluates exactly as one built fresh with the same
    (p, epsilon): floats pass through JSON unchanged.
    """
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("format") != CACHE_FORMAT:
        raise ParameterError(f"cache file {path} has unsupported format {doc.get('format')!r}")
    sq_table = _load_entry(doc, p, 0, 1, epsilon)
    cq_table = _load_entry(doc, p, 1, 0, epsilon)
    key = _entry_key(p, 0, 1, epsilon)
    pi_p = doc["entries"][key]["pi_p"]
    return evalcore.EvalContext(
        p=p,
        quarter=pi_p / 4.0,
        sq_table=sq_table,
        cq_table=cq_table,
        epsilon=epsilon,
    )


# ---------------------------------------------------------------------------
# Subcommand handlers.  Each returns a process exit code.

def _cmd_table1(args: argparse.Namespace) -> int:
    p = 4
    J = args.terms
    cq_nums = series.integer_maclaurin(SquigParams(p=p, m=1, n=0), J)
    sq_nums = series.integer_maclaurin(SquigParams(p=p, m=0, n=1), J)
    print("k_c,c_k,k_s,s_k")
    for j in range(J + 1):
        k_c = p * j
        k_s = 1 + p * j
        c_val = float(Fraction((-1) ** j * cq_nums[j], math.factorial(k_c)))
        s_val = float(Fraction((-1) ** j * sq_nums[j], math.factorial(k_s)))
        print(f"{k_c},{c_val!r},{k_s},{s_val!r}")
    return 0


def _cmd_pi(args: argparse.Namespace) -> int:
    lo, hi = args.p_min, args.p_max
    if lo > hi:
        raise ParameterError(f"empty p range {lo}..{hi}")
    print("p,pi_p,terms,iterations")
    for p in range(lo, hi + 1):
        rec = constants.compute_pi(p, args.eps)
        print(f"{p},{rec.value!r},{rec.J_used},{rec.iterations}")
    return 0


def _cmd_beta(args: argparse.Namespace) -> int:
    value = constants.beta_value(args.p, args.m, args.n, args.eps)
    print("p,m,n,beta")
    print(f"{args.p},{args.m},{args.n},{value!r}")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    ctx = evalcore.build_context(args.p, args.eps)
    print("t,value")
    for t in args.t:
        if args.func == "sq":
            value = evalcore.sq(ctx, t)
        elif args.func == "cq":
            value = evalcore.cq(ctx, t)
        else:
            value = evalcore.pow_general(ctx, args.m, args.n, t)
        print(f"{t!r},{value!r}")
    return 0


def _cmd_plotdata(args: argparse.Namespace) -> int:
    ctx = evalcore.build_context(args.p, args.eps)
    tmax = args.tmax if args.tmax is not None else 2.0 * ctx.pi_p
    if args.points < 2:
        raise ParameterError(f"need at least 2 points, got {args.points}")
    print("t,sq,cq")
    for i in range(args.points):
        t = tmax * i / (args.points - 1)
        print(f"{t!r},{evalcore.sq(ctx, t)!r},{evalcore.cq(ctx, t)!r}")
    return 0


def _cmd_triangle(args: argparse.Namespace) -> int:
    tri = triangle.build_triangle(SquigParams(p=args.p, m=args.m, n=args.n), args.K)
    if args.json:
        print(triangle.triangle_to_json(tri))
        return 0
    print("k,j,q")
    for k, row in enumerate(tri.rows):
        for j, v in sorted(row.items()):
            print(f"{k},{j},{v}")
    return 0


def _cmd_roots(args: argparse.Namespace) -> int:
    params = SquigParams(p=args.p, m=args.m, n=args.n)
    ladder = derivpoly.root_ladder(params, args.k_max)
    print("k,zero_multiplicity,root,cq,sq")
    for level in ladder:
        for root in level.negative_roots:
            cq_val, sq_val = derivpoly.algebraic_values(root, args.p)
            print(f"{level.k},{level.zero_multiplicity},{root!r},{cq_val!r},{sq_val!r}")
    return 0


def _cmd_factors(args: argparse.Namespace) -> int:
    params = SquigParams(p=args.p, m=args.m, n=args.n)
    J = args.J if args.J is not None else 8
    nums = series.integer_maclaurin(params, J)
    fs = factors.factor_sequence(nums, params)
    print("j,a_exact,a_float")
    for j, (exact, approx) in enumerate(zip(fs.exact, fs.floats)):
        print(f"{j},{exact},{approx!r}")
    return 0


def _cmd_maclaurin(args: argparse.Namespace) -> int:
    params = SquigParams(p=args.p, m=args.m, n=args.n)
    if args.J is not None:
        J = args.J
    else:
        rec = constants.compute_pi(args.p, args.eps)
        J = rec.J_used
    table = series.maclaurin(params, J, with_numerators=args.exact)
    if args.exact:
        print("j,power,coefficient,numerator")
        for j in range(J + 1):
            print(f"{j},{table.power(j)},{table.signed(j)!r},{table.numerators[j]}")
    else:
        print("j,power,coefficient")
        for j in range(J + 1):
            print(f"{j},{table.power(j)},{table.signed(j)!r}")
    return 0


def _cmd_cache(args: argparse.Namespace) -> int:
    directory = args.dir if args.dir is not None else default_cache_dir()
    path = os.path.join(directory, CACHE_BASENAME)
    if args.cache_action == "save":
        save_tables(path, args.p, args.eps)
        print(f"saved p={args.p} tables to {path}")
        return 0
    ctx = load_context(path, args.p, args.eps)
    print(f"loaded p={ctx.p} J={ctx.sq_table.J} pi_p={ctx.pi_p!r} from {path}")
    return 0


def _check(name: str, detail: str, ok: bool, lines: list[str]) -> bool:
    lines.append(f"{'PASS' if ok else 'FAIL'} {name} ({detail})")
    return ok


def _cmd_verify(args: argparse.Namespace) -> int:
    lines: list[str] = []
    all_ok = True
    sweep = [
        (p, m, n)
        for p in (2, 3, 4)
        for m, n in ((1, 0), (0, 1), (2, 1))
    ]

    for p, m, n in ((4, 1, 0), (3, 2, 1)):
        tri = triangle.build_triangle(SquigParams(p=p, m=m, n=n), 20)
        problems = triangle.verify_structure(tri)
        all_ok &= _check("triangle-structure", f"p={p} m={m} n={n} K=20",
                         not problems, lines)

    for p in range(2, 11):
        got = constants.compute_pi(p, args.eps).value
        want = constants.pi_gamma(p)
        all_ok &= _check("pi-gamma-oracle", f"p={p}",
                         abs(got - want) <= 1e-13 * want, lines)

    k_cap = 8 if args.quick else 12
    for p, m, n in sweep:
        params = SquigParams(p=p, m=m, n=n)
        tri = triangle.build_triangle(params, k_cap)
        ok = all(
            explicit.explicit_coefficient(params, k, j) == triangle.coefficient(tri, k, j)
            for k in range(k_cap + 1)
            for j in range(k + 1)
        )
        all_ok &= _check("explicit-equals-triangle", f"p={p} m={m} n={n} k<={k_cap}", ok, lines)

    for p, m, n in sweep:
        params = SquigParams(p=p, m=m, n=n)
        tri = triangle.build_triangle(params, 15)
        ok = True
        for k in range(16):
            vec = explicit.matrix_factorial_row(params, k, 17)
            ok &= all(vec[j] == triangle.coefficient(tri, k, j) for j in range(17) if j <= k)
            ok &= all(v == 0 for v in vec[k + 1:])
        all_ok &= _check("matrix-equals-triangle", f"p={p} m={m} n={n} k<=15", ok, lines)

    params = SquigParams(p=4, m=1, n=0)
    j_cap = 4 if args.quick else 5
    ok = True
    for j in range(1, j_cap + 1):
        k = 4 * j
        ok &= set(explicit.enumerate_nonzero(params, k, j)) == set(
            explicit.filter_nonzero_brute(params, k, j)
        )
    all_ok &= _check("enumeration-equals-brute", f"4-cosquine j<={j_cap}", ok, lines)

    for p in (3, 4):
        for m, n in ((1, 0), (0, 1)):
            params = SquigParams(p=p, m=m, n=n)
            table = series.maclaurin(params, 4)
            ok = all(
                abs(explicit.corollary_coefficient(params, j) - table.signed(j)) <= 1e-12
                for j in range(5)
            )
            all_ok &= _check("corollary-equals-series", f"p={p} m={m} n={n} j<=4", ok, lines)

    for p in (2, 3, 4, 6):
        ctx = evalcore.build_context(p, args.eps)
        worst = 0.0
        for i in range(201):
            t = -10.0 + 20.0 * i / 200
            worst = max(worst, abs(abs(evalcore.cq(ctx, t)) ** p
                                   + abs(evalcore.sq(ctx, t)) ** p - 1.0))
        all_ok &= _check("pythagorean-identity", f"p={p} worst={worst:.2e}",
                         worst <= 5e-14, lines)

    for p, m, n in ((2, 0, 0), (4, 0, 0), (4, 2, 1), (3, 1, 2)):
        got = constants.beta_value(p, m, n, args.eps)
        want = constants.beta_gamma(p, m, n)
        all_ok &= _check("beta-gamma-oracle", f"p={p} m={m} n={n}",
                         abs(got - want) <= 1e-11 * abs(want), lines)

    for line in lines:
        print(line)
    return 0 if all_ok else 3


# ---------------------------------------------------------------------------
# Parser assembly.

def _add_eps(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--eps", type=float, default=EPS_DEFAULT,
                     help="tolerance target for table sizing (default: 2^-53)")


def _add_pmn(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="circle degree, p >= 2")
    sub.add_argument("--m", type=int, required=True, help="cosquine power")
    sub.add_argument("--n", type=int, required=True, help="squine power")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squig",
        description="Squigonometric tables, constants, and evaluation.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("table1", help="signed MacLaurin coefficients for p=4")
    sub.add_argument("--terms", type=int, default=32,
                     help="last coefficient index (default: 32, giving 33 rows)")
    sub.set_defaults(handler=_cmd_table1)

    sub = subs.add_parser("pi", help="pi_p over a range of degrees")
    sub.add_argument("--p-min", type=int, default=2)
    sub.add_argument("--p-max", type=int, default=10)
    _add_eps(sub)
    sub.set_defaults(handler=_cmd_pi)

    sub = subs.add_parser("beta", help="Beta value B((m+1)/p, (n+1)/p)")
    _add_pmn(sub)
    _add_eps(sub)
    sub.set_defaults(handler=_cmd_beta)

    sub = subs.add_parser("eval", help="evaluate sq, cq, or cq^m sq^n")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--func", choices=("sq", "cq", "pow"), default="sq")
    sub.add_argument("--m", type=int, default=0)
    sub.add_argument("--n", type=int, default=1)
    sub.add_argument("--t", type=float, nargs="+", required=True)
    _add_eps(sub)
    sub.set_defaults(handler=_cmd_eval)

    sub = subs.add_parser("plotdata", help="sq/cq samples over a uniform grid")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--points", type=int, default=257)
    sub.add_argument("--tmax", type=float, default=None,
                     help="grid endpoint (default: one full period 2 pi_p)")
    _add_eps(sub)
    sub.set_defaults(handler=_cmd_plotdata)

    sub = subs.add_parser("triangle", help="exact coefficient triangle rows")
    _add_pmn(sub)
    sub.add_argument("--K", type=int, required=True, help="highest row")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    sub.set_defaults(handler=_cmd_triangle)

    sub = subs.add_parser("roots", help="interior zeros of derivatives, with algebraic values")
    _add_pmn(sub)
    sub.add_argument("--k-max", type=int, required=True, help="highest derivative order")
    sub.set_defaults(handler=_cmd_roots)

    sub = subs.add_parser("factors", help="term-to-term factor sequence a_j")
    _add_pmn(sub)
    sub.add_argument("--J", type=int, default=None, help="last factor index (default: 8)")
    sub.set_defaults(handler=_cmd_factors)

    sub = subs.add_parser("maclaurin", help="MacLaurin table for cq^m sq^n")
    _add_pmn(sub)
    sub.add_argument("--J", type=int, default=None,
                     help="last coefficient index (default: sized from eps)")
    sub.add_argument("--exact", action="store_true", help="include integer numerators")
    _add_eps(sub)
    sub.set_defaults(handler=_cmd_maclaurin)

    sub = subs.add_parser("verify", help="run built-in cross-checks")
    sub.add_argument("--quick", action="store_true", help="smaller sweeps")
    _add_eps(sub)
    sub.set_defaults(handler=_cmd_verify)

    sub = subs.add_parser("cache", help="save or load table caches")
    cache_subs = sub.add_subparsers(dest="cache_action", required=True)
    for action in ("save", "load"):
        cache_sub = cache_subs.add_parser(action)
        cache_sub.add_argument("--p", type=int, required=True)
        cache_sub.add_argument("--dir", default=None,
                               help="cache directory (default: $SQUIG_CACHE_DIR)")
        _add_eps(cache_sub)
        cache_sub.set_defaults(handler=_cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code in (0, None):
            return 0
        return 2
    try:
        return args.handler(args)
    except (ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SquigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

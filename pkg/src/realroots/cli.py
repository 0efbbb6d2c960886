"""Command-line interface.

Thin adapters only: every subcommand parses flags, calls the library, and
formats output.  Exit codes: 0 success, 2 tolerance violation under --check,
64 usage error, 65 malformed polynomial file.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .dyadic import DyadicInterval, format_dyadic, parse_dyadic
from .fileio import PolynomialFormatError, read_polynomial, write_polynomial
from .polynomial import BernsteinPolynomial, IntPolynomial, bernstein_to_power
from .randgen import (
    BERNSTEIN_SK,
    BERNSTEIN_STD,
    MODELS,
    RNG_ALGORITHM,
    sample_polynomial,
    exactify,
)
from .sturm import count_in, sturm_sequence
from .isolator import METHODS, hong_root_bound, isolate, isolate_all
from .theory import (
    bernstein_even_variances,
    binomial_sum_identity,
    ek_density,
    stirling_binomial_ratio,
    wallis_float,
    wallis_product_identity_holds,
    wallis_upper_bound_holds,
    weyl_density,
    sk_sandwich_holds,
    binomial_ratio_upper_holds,
)
from .randgen import variance_vector
from . import experiments as exp

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 64
EXIT_BAD_FILE = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    p = _Parser(prog="realroots", description=__doc__)
    p.add_argument(
        "--version",
        action="version",
        version=f"realroots {__version__} (rng: {RNG_ALGORITHM})",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="sample a random polynomial to a file")
    g.add_argument("--model", choices=MODELS, required=True)
    g.add_argument("--degree", type=int, required=True)
    g.add_argument("--seed", type=int, default=42)
    g.add_argument("--trial", type=int, default=0)
    g.add_argument("--out", required=True)

    i = sub.add_parser("isolate", help="isolate the real roots of a polynomial file")
    i.add_argument("--in", dest="infile", required=True)
    i.add_argument("--method", choices=METHODS, default="sturm")
    i.add_argument("--interval", help="lo:hi with dyadic endpoints (default: all roots)")
    i.add_argument("--json", action="store_true")
    i.add_argument("--out")

    c = sub.add_parser("count", help="count real roots in an interval")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--interval", default="-inf:inf", help="a:b, endpoints rational or inf")

    b = sub.add_parser("bound", help="upper bound on positive real root parts")
    b.add_argument("--in", dest="infile", required=True)
    b.add_argument("--printed-variant", action="store_true",
                   help="use the leading coefficient as the ratio denominator")

    d = sub.add_parser("density", help="tabulate expected real-root density")
    d.add_argument("--model", choices=list(MODELS) + ["bern-even"], required=True)
    d.add_argument("--degree", type=int, required=True)
    d.add_argument("--t-min", type=float, default=-3.0)
    d.add_argument("--t-max", type=float, default=3.0)
    d.add_argument("--points", type=int, default=61)
    d.add_argument("--out")

    idn = sub.add_parser("identities", help="tabulate the exact identity checks")
    idn.add_argument("--n-max", type=int, default=12)
    idn.add_argument("--wallis-max", type=int, default=200)
    idn.add_argument("--out")

    t = sub.add_parser("table1", help="random Bernstein-basis root-count experiment")
    _experiment_flags(t)
    t.add_argument("--degrees", default="100,150,200,300")
    t.add_argument("--model", choices=(BERNSTEIN_STD, BERNSTEIN_SK), default=BERNSTEIN_STD)
    t.add_argument("--check", action="store_true",
                   help="exit 2 unless within tolerance of the reference table")
    t.add_argument("--large", action="store_true", help="allow degrees above 300")

    s = sub.add_parser("sep", help="separation-law experiment")
    _experiment_flags(s)
    s.add_argument("--model", choices=("so2", "weyl"), default="so2")
    s.add_argument("--degrees", default="100")
    s.add_argument("--targets", default="0.02,0.05,0.1")
    s.add_argument("--check", action="store_true")

    sb = sub.add_parser("solver-bench", help="subdivision-tree instrumentation")
    _experiment_flags(sb)
    sb.add_argument("--model", choices=MODELS, default="so2")
    sb.add_argument("--degrees", default="100")
    sb.add_argument("--methods", default=",".join(METHODS))

    u = sub.add_parser("uniformity", help="KS uniformity check of Bernstein roots")
    _experiment_flags(u)
    u.add_argument("--degree", type=int, default=500)
    u.add_argument("--check", action="store_true")

    e = sub.add_parser("ek-mc", help="Monte Carlo vs expected-count integral")
    _experiment_flags(e)
    e.add_argument("--models", default="so2")
    e.add_argument("--degrees", default="100")

    return p


def _experiment_flags(sp) -> None:
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", help="output directory for CSV logs")
    sp.add_argument("--json", action="store_true")


def _parse_degrees(text: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in text.split(",") if tok.strip())


def _read_power_poly(path) -> IntPolynomial:
    poly = read_polynomial(path)
    if isinstance(poly, BernsteinPolynomial):
        return bernstein_to_power(poly)
    return poly


def _parse_interval(text: str) -> DyadicInterval:
    lo_s, hi_s = text.split(":")
    return DyadicInterval(parse_dyadic(lo_s), parse_dyadic(hi_s))


def _parse_endpoint(text: str):
    text = text.strip()
    if text in ("inf", "+inf"):
        return math.inf
    if text == "-inf":
        return -math.inf
    if "*2^" in text:
        return parse_dyadic(text)
    return Fraction(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + ("\n" if not text.endswith("\n") else ""))
    else:
        print(text)


def _cfg(args, model, degrees) -> exp.ExperimentConfig:
    return exp.ExperimentConfig(
        model=model,
        degrees=degrees,
        trials=args.trials,
        seed=args.seed,
        jobs=args.jobs,
        out_dir=args.out,
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except PolynomialFormatError as exc:
        print(f"realroots: malformed polynomial file: {exc}", file=sys.stderr)
        return EXIT_BAD_FILE
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"realroots: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "gen":
        sample = sample_polynomial(args.model, args.degree, args.seed, args.trial)
        if isinstance(sample, BernsteinPolynomial):
            cleared = exactify(sample.coeffs)
            write_polynomial(BernsteinPolynomial(cleared.coeffs), args.out)
        else:
            write_polynomial(exactify(sample), args.out)
        return EXIT_OK

    if cmd == "isolate":
        poly = _read_power_poly(args.infile)
        interval = _parse_interval(args.interval) if args.interval else None
        roots, stats = isolate(poly, interval, method=args.method)
        if args.json:
            payload = {
                "roots": [
                    {
                        "lo": format_dyadic(r.interval.lo),
                        "hi": format_dyadic(r.interval.hi),
                        "exact": format_dyadic(r.exact_root) if r.is_exact else None,
                    }
                    for r in roots
                ],
                "stats": {
                    "tree_nodes": stats.tree_nodes,
                    "max_depth": stats.max_depth,
                    "counter_calls": stats.counter_calls,
                    "root_bound": format_dyadic(stats.root_bound),
                    "sep_bitsize": stats.sep_bitsize,
            "gap_lower_bounds": [format_dyadic(g) for g in stats.gap_lower_bounds],
                },
            }
            _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
        else:
            lines = [
                f"exact {format_dyadic(r.exact_root)}"
                if r.is_exact
                else f"({format_dyadic(r.interval.lo)}, {format_dyadic(r.interval.hi)})"
                for r in roots
            ]
            lines.append(f"# tree_nodes={stats.tree_nodes} max_depth={stats.max_depth}")
            _emit("\n".join(lines), getattr(args, "out", None))
        return EXIT_OK

    if cmd == "count":
        poly = _read_power_poly(args.infile)
        a_s, b_s = args.interval.split(":")
        seq = sturm_sequence(poly)
        print(count_in(seq, _parse_endpoint(a_s), _parse_endpoint(b_s)))
        return EXIT_OK

    if cmd == "bound":
        poly = _read_power_poly(args.infile)
        print(format_dyadic(hong_root_bound(poly, printed_variant=args.printed_variant)))
        return EXIT_OK

    if cmd == "density":
        rows = []
        if args.model == "bern-even":
            v = bernstein_even_variances(args.degree)
            dens = lambda t: ek_density(v, t)
        elif args.model == "weyl":
            dens = lambda t: weyl_density(t, args.degree)
        else:
            v = variance_vector(args.model, args.degree)
            dens = lambda t: ek_density(v, t)
        for i in range(args.points):
            t = args.t_min + (args.t_max - args.t_min) * i / max(args.points - 1, 1)
            rows.append((t, dens(t)))
        text = "t,density\n" + "\n".join(f"{t!r},{r!r}" for t, r in rows)
        _emit(text, args.out)
        return EXIT_OK

    if cmd == "identities":
        lines = ["check,params,lhs,rhs,ok"]
        for n in range(1, args.n_max + 1):
            for k in (1, 2):
                if k > n:
                    continue
                for x in (Fraction(-1), Fraction(1, 2), Fraction(3)):
                    lhs, rhs = binomial_sum_identity(n, k, x)
                    lines.append(f"binomial_sum,(n={n};k={k};x={x}),{lhs},{rhs},{lhs == rhs}")
        for n, k, p in ((50, 25, 2), (100, 50, 2), (100, 50, 1)):
            exact, approx = stirling_binomial_ratio(n, k, p)
            rel = abs(float(exact) - approx) / approx
            lines.append(f"stirling_ratio,(n={n};k={k};p={p}),{float(exact)!r},{approx!r},{rel < 0.02}")
        for d in (10, 100, 500):
            lines.append(f"sk_sandwich,(d={d}),,,{sk_sandwich_holds(d)}")
            lines.append(f"binomial_ratio_upper,(d={d}),,,{binomial_ratio_upper_holds(d)}")
        ok_w = all(wallis_upper_bound_holds(n) for n in range(args.wallis_max + 1))
        ok_p = all(wallis_product_identity_holds(n) for n in range(1, args.wallis_max + 1))
        lines.append(f"wallis_upper,(n<={args.wallis_max}),,,{ok_w}")
        lines.append(f"wallis_product,(n<={args.wallis_max}),,,{ok_p}")
        lines.append(f"wallis_value,(n=4),{wallis_float(4)!r},{3 * math.pi / 16!r},True")
        _emit("\n".join(lines), args.out)
        return EXIT_OK

    if cmd == "table1":
        degrees = _parse_degrees(args.degrees)
        if max(degrees) > 300 and not args.large:
            print("realroots: degrees above 300 take minutes each; pass --large", file=sys.stderr)
            return EXIT_USAGE
        rows, _ = exp.run_table1(_cfg(args, args.model, degrees))
        values = [exp.table1_row_values(r) for r in rows]
        if args.json:
            print(exp.rows_to_json(exp.TABLE1_HEADER, values))
        else:
            print(",".join(exp.TABLE1_HEADER))
            for v in values:
                print(",".join(str(x) for x in v))
        if args.check and not exp.table1_check(rows):
            return EXIT_CHECK_FAILED
        return EXIT_OK

    if cmd == "sep":
        degrees = _parse_degrees(args.degrees)
        targets = tuple(float(t) for t in args.targets.split(","))
        rows, _ = exp.run_sep(_cfg(args, args.model, degrees), targets)
        if args.json:
            print(exp.rows_to_json(exp.SEP_HEADER, rows))
        else:
            print(",".join(exp.SEP_HEADER))
            for row in rows:
                print(",".join(exp._fmt(x) for x in row))
        if args.check and not exp.sep_check(rows):
            return EXIT_CHECK_FAILED
        return EXIT_OK

    if cmd == "solver-bench":
        degrees = _parse_degrees(args.degrees)
        methods = tuple(m.strip() for m in args.methods.split(","))
        rows, _ = exp.run_solver(_cfg(args, args.model, degrees), methods)
        if args.json:
            print(exp.rows_to_json(exp.SOLVER_HEADER, rows))
        else:
            print(",".join(exp.SOLVER_HEADER))
            for row in rows:
                print(",".join(exp._fmt(x) for x in row))
        return EXIT_OK

    if cmd == "uniformity":
        cfg = _cfg(args, BERNSTEIN_STD, (args.degree,))
        stat, pvalue, n = exp.run_uniformity(cfg)
        payload = {"d": args.degree, "n_roots": n, "ks_distance": stat, "p_value": pvalue}
        print(json.dumps(payload, sort_keys=True) if args.json else payload)
        if args.check and pvalue <= 1e-3:
            return EXIT_CHECK_FAILED
        return EXIT_OK

    if cmd == "ek-mc":
        degrees = _parse_degrees(args.degrees)
        models = tuple(m.strip() for m in args.models.split(","))
        rows, _ = exp.run_ek_mc(_cfg(args, models[0], degrees), models)
        if args.json:
            print(exp.rows_to_json(exp.EKMC_HEADER, rows))
        else:
            print(",".join(exp.EKMC_HEADER))
            for row in rows:
                print(",".join(exp._fmt(x) for x in row))
        return EXIT_OK

    raise AssertionError(f"unhandled command {cmd}")


if __name__ == "__main__":
    sys.exit(main())

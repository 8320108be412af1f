"""Command-line front end.

Subcommands: count-svt, count-sst, enumerate, eval-groth, eval-2f1,
eval-holman, verify.  All arithmetic is exact; rationals are written
'p/q'.  Exit codes: 0 success, 1 identity/cross-check failure, 2 usage
error (including non-terminating series refusals).
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from .arith import format_rational, parse_rational, rational_pair
from .grothendieck import (
    BETA,
    count_svt_formula,
    grothendieck_tableau_sum,
    principal_specialization_q,
    refined_bialternant,
)
from .hypergeom import (
    HolmanInstance,
    classical_summation_conditions,
    gauss_2f1_terminating,
    holman_series,
)
from .identities import Grid, SuiteReport, UnknownCheckError, run_all, run_check
from .partitions import Partition, count_sst_hook, count_sst_product
from .tableaux import enumerate_sst, enumerate_svt


def parse_shape(text: str) -> Partition:
    """Parse a shape: '4,3' or '(4,3)'; repeated parts as '1^3' or '2^2,1';
    '0' or '()' denote the empty shape."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if text in ("", "0"):
        return Partition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        if "^" in token:
            base, _, count = token.partition("^")
            parts.extend([int(base)] * int(count))
        else:
            parts.append(int(token))
    return Partition(parts)


def _parse_rational_list(text: str) -> list[Fraction]:
    return [parse_rational(tok) for tok in text.split(",") if tok.strip() != ""]


def _print_csv(rows: list[list], header: list[str]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([str(v) for v in row])


# ----------------------------------------------------------------------
# counting
# ----------------------------------------------------------------------

def _svt_count_by(method: str, shape: Partition, nvars: int) -> int:
    if method == "enum":
        return sum(1 for _ in enumerate_svt(shape, nvars))
    if method == "formula":
        return count_svt_formula(shape, nvars)
    if method == "holman":
        if len(shape) > nvars:
            return 0
        value = count_sst_product(shape, nvars) * holman_series(
            HolmanInstance.from_shape(shape, nvars, -1))
        assert value.denominator == 1, f"non-integral count {value}"
        return value.numerator
    raise ValueError(f"unknown method {method!r}")


def _sst_count_by(method: str, shape: Partition, nvars: int) -> int:
    if method == "enum":
        return sum(1 for _ in enumerate_sst(shape, nvars))
    if method == "product":
        return count_sst_product(shape, nvars)
    if method == "hook":
        return count_sst_hook(shape, nvars)
    raise ValueError(f"unknown method {method!r}")


def _run_count(args, methods: list[str], counter) -> int:
    shape = parse_shape(args.shape)
    wanted = methods if args.method == "all" else [args.method]
    counts = {m: counter(m, shape, args.vars) for m in wanted}
    distinct = set(counts.values())
    if args.format == "json":
        print(json.dumps({"shape": list(shape), "vars": args.vars,
                          "counts": counts, "agree": len(distinct) == 1}))
    elif args.format == "csv":
        _print_csv([[str(shape), args.vars, m, c] for m, c in counts.items()],
                   ["shape", "vars", "method", "count"])
    elif len(wanted) == 1:
        print(counts[wanted[0]])
    else:
        for m, c in counts.items():
            print(f"{m}: {c}")
        print("agree" if len(distinct) == 1 else "DISAGREE")
    if len(distinct) > 1:
        print(f"method disagreement for shape {shape}, n={args.vars}: "
              + ", ".join(f"{m}={c}" for m, c in counts.items()), file=sys.stderr)
        return 1
    return 0


def cmd_count_svt(args) -> int:
    return _run_count(args, ["enum", "formula", "holman"], _svt_count_by)


def cmd_count_sst(args) -> int:
    return _run_count(args, ["enum", "product", "hook"], _sst_count_by)


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    shape = parse_shape(args.shape)
    stream = enumerate_sst(shape, args.vars) if args.kind == "sst" else enumerate_svt(shape, args.vars)
    if args.format == "json":
        print(json.dumps([t.to_json() for t in stream]))
    elif args.format == "csv":
        _print_csv([[i, t.compact_str()] for i, t in enumerate(stream)],
                   ["index", "tableau"])
    else:
        for t in stream:
            print(t.compact_str())
    return 0


# ----------------------------------------------------------------------
# evaluation
# ----------------------------------------------------------------------

def _print_value(value, fmt: str) -> None:
    if fmt == "json":
        num, den = rational_pair(value)
        print(json.dumps({"value": format_rational(value),
                          "numerator": num, "denominator": den}))
    else:
        print(format_rational(value))


def cmd_eval_groth(args) -> int:
    shape = parse_shape(args.shape)
    n = args.vars
    beta = parse_rational(args.beta) if args.beta is not None else BETA
    if args.refined is not None:
        betas = _parse_rational_list(args.refined)
        if len(betas) != n - 1:
            raise ValueError(f"--refined needs exactly {n - 1} values")
    else:
        betas = None

    if args.principal_q is not None:
        q = parse_rational(args.principal_q)
        result = principal_specialization_q(
            shape, n, betas if betas is not None else [beta] * (n - 1), q)
    else:
        if betas is not None:
            poly = refined_bialternant(shape, n, betas)
        else:
            poly = grothendieck_tableau_sum(shape, n)
            if args.beta is not None:
                poly = poly.substitute({BETA: beta})
        if args.at is not None:
            point = _parse_rational_list(args.at)
            if len(point) != n:
                raise ValueError(f"--at needs exactly {n} values")
            poly = poly.substitute({f"x{i + 1}": v for i, v in enumerate(point)})
        elif args.ones:
            poly = poly.substitute({f"x{i}": 1 for i in range(1, n + 1)})
        result = poly

    if not isinstance(result, Fraction) and result.is_constant():
        result = result.as_fraction()
    if isinstance(result, Fraction):
        _print_value(result, args.format)
    elif args.format == "json":
        print(json.dumps(result.to_json()))
    else:
        print(result)
    return 0


def cmd_eval_2f1(args) -> int:
    value = gauss_2f1_terminating(
        parse_rational(args.alpha), parse_rational(args.beta),
        parse_rational(args.gamma), parse_rational(args.z))
    _print_value(value, args.format)
    return 0


def cmd_eval_holman(args) -> int:
    if args.fixture is not None:
        inst = HolmanInstance.load(args.fixture)
    else:
        shape = parse_shape(args.from_shape)
        if args.vars is None:
            raise ValueError("--from-shape needs --vars")
        inst = HolmanInstance.from_shape(shape, args.vars, parse_rational(args.z))
    value = holman_series(inst)
    conditions = classical_summation_conditions(inst) if args.conditions else None
    if args.format == "json":
        payload = {"value": format_rational(value), "instance": inst.to_json()}
        if conditions is not None:
            payload["conditions"] = conditions.as_dict()
        print(json.dumps(payload))
    else:
        print(format_rational(value))
        if conditions is not None:
            for name, good in conditions.as_dict().items():
                print(f"{name}: {'yes' if good else 'NO'}")
    return 0


# ----------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------

def _suite_table(suite: SuiteReport) -> str:
    lines = [f"{'check':<14} {'instances':>9} {'passed':>7} {'failed':>7} {'seconds':>8}"]
    for c in suite.checks:
        lines.append(f"{c.id:<14} {c.instances:>9} {c.passed:>7} {c.failed:>7} {c.seconds:>8.2f}")
        for w in c.witnesses:
            ps = ", ".join(f"{k}={v}" for k, v in w.params.items())
            lines.append(f"    FAIL [{ps}] left={w.left} right={w.right}")
    lines.append(f"{'OK' if suite.ok else 'FAIL'}: {suite.passed} passed, {suite.failed} failed")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    grid = Grid(max_size=args.max_size, max_vars=args.max_vars)
    if args.id is not None:
        try:
            suite = SuiteReport(grid.max_size, grid.max_vars, [run_check(args.id, grid)])
        except UnknownCheckError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        suite = run_all(grid)
    if args.json is not None:
        with open(args.json, "w") as handle:
            json.dump(suite.to_json(), handle, indent=2)
    if args.format == "json":
        print(json.dumps(suite.to_json()))
    elif args.format == "csv":
        _print_csv([[c.id, c.instances, c.passed, c.failed, f"{c.seconds:.3f}"]
                    for c in suite.checks],
                   ["id", "instances", "passed", "failed", "seconds"])
    else:
        print(_suite_table(suite))
    return 0 if suite.ok else 1


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grothtab",
        description="Exact counting, evaluation, and verification for "
                    "set-valued tableaux and Grothendieck polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape_vars(p):
        p.add_argument("--shape", required=True,
                       help="partition, e.g. 4,3 or 1^3 (0 for the empty shape)")
        p.add_argument("--vars", required=True, type=int,
                       help="number of variables / letters (n >= 1)")

    p = sub.add_parser("count-svt", help="count set-valued tableaux")
    add_shape_vars(p)
    p.add_argument("--method", choices=["enum", "formula", "holman", "all"],
                   default="formula")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_count_svt)

    p = sub.add_parser("count-sst", help="count semistandard tableaux")
    add_shape_vars(p)
    p.add_argument("--method", choices=["enum", "product", "hook", "all"],
                   default="product")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_count_sst)

    p = sub.add_parser("enumerate", help="list the tableaux themselves")
    add_shape_vars(p)
    p.add_argument("--kind", choices=["svt", "sst"], default="svt")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("eval-groth",
                       help="Grothendieck polynomial, symbolic or evaluated")
    add_shape_vars(p)
    p.add_argument("--beta", help="rational value for the parameter b")
    p.add_argument("--refined",
                   help="comma list of n-1 rationals for the refined variant")
    point = p.add_mutually_exclusive_group()
    point.add_argument("--at", help="comma list of n rationals for x")
    point.add_argument("--ones", action="store_true", help="evaluate at x = (1,..,1)")
    point.add_argument("--principal-q", dest="principal_q",
                       help="evaluate at x = (1,q,..,q^(n-1)) via the "
                            "shifted-exponent sum")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval_groth)

    p = sub.add_parser("eval-2f1", help="terminating Gauss series")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("gamma")
    p.add_argument("z")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval_2f1)

    p = sub.add_parser("eval-holman", help="terminating coupled series")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--fixture", help="JSON instance file")
    source.add_argument("--from-shape", dest="from_shape",
                        help="build the instance attached to a shape")
    p.add_argument("--vars", type=int, help="number of summation indices")
    p.add_argument("--z", default="1", help="constant argument (with --from-shape)")
    p.add_argument("--conditions", action="store_true",
                   help="also report the classical summation conditions")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_eval_holman)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--id", help="run a single check by id")
    p.add_argument("--max-size", dest="max_size", type=int, default=6)
    p.add_argument("--max-vars", dest="max_vars", type=int, default=4)
    p.add_argument("--json", help="also write the JSON report to this path")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

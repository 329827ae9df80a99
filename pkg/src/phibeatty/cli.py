"""Command-line front end.

One-shot computations (floors, inverses, comparisons, witnesses, Fibonacci
floors, interval extrema), formula decisions, the audit suites, and a
plot-data emitter for the fractional-part diamond pattern.  Exit codes:
0 for success / true / all-pass, 1 for false / some-counterexample, 2 for
usage or runtime errors.  All numeric output is exact; the plot column is a
truncated decimal produced by pure integer scaling, so output is
byte-identical across platforms.
"""

from __future__ import annotations

import argparse
import enum
import json
import re
import sys
from math import isqrt as _math_isqrt

from .checker import CheckSpec, check_all
from .errors import (
    BoxShapeError,
    DomainError,
    EnumerationBudgetError,
    FormulaSyntaxError,
    UnboundVariableError,
)
from .extrema import (
    Interval,
    arg_max_frac,
    arg_min_frac,
    constrained_max,
    constrained_min,
)
from .fib import fibfloor, g_func, zeckendorf
from .formula import evaluate, parse
from .kernel import (
    Ordering,
    beatty_f,
    f_inverse,
    fbar,
    frac_compare,
    kronecker_witness,
    refine,
)

__all__ = ["OutputMode", "run", "main"]


class OutputMode(enum.Enum):
    HUMAN = "human"
    JSON = "json"
    CSV = "csv"


_NEGATIVE_INT = re.compile(r"^-\d[\d_]*$")


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _bind_arg(text: str) -> tuple[str, int]:
    name, sep, value = text.partition("=")
    if not sep or not name.isidentifier():
        raise argparse.ArgumentTypeError(f"expected NAME=INT, got {text!r}")
    try:
        return name, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None


def _emit(args: argparse.Namespace, human: str, payload: dict) -> None:
    if args.format == OutputMode.JSON.value:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _ordering_name(order: Ordering) -> str:
    return {Ordering.LT: "LT", Ordering.EQ: "EQ", Ordering.GT: "GT"}[order]


# ---------------------------------------------------------------------------
# handlers


def _cmd_f(args) -> int:
    value = beatty_f(args.n)
    _emit(args, str(value), {"op": "f", "n": args.n, "value": value})
    return 0


def _cmd_fbar(args) -> int:
    value = fbar(args.n)
    _emit(args, str(value), {"op": "fbar", "n": args.n, "value": value})
    return 0


def _cmd_finv(args) -> int:
    value = f_inverse(args.n)
    _emit(
        args,
        "none" if value is None else str(value),
        {"op": "finv", "n": args.n, "value": value},
    )
    return 0


def _cmd_cmp(args) -> int:
    if args.frac:
        order = frac_compare(args.x, args.y)
    else:
        order = Ordering(
            (args.x > args.y) - (args.x < args.y)
        )
    name = _ordering_name(order)
    _emit(
        args,
        name,
        {"op": "cmp", "frac": bool(args.frac), "x": args.x, "y": args.y, "result": name},
    )
    return 0


def _cmd_fibfloor(args) -> int:
    value = fibfloor(args.n)
    _emit(args, str(value), {"op": "fibfloor", "n": args.n, "value": value})
    return 0


def _cmd_g(args) -> int:
    value = g_func(args.n)
    _emit(args, str(value), {"op": "g", "n": args.n, "value": value})
    return 0


def _cmd_zeckendorf(args) -> int:
    indices = zeckendorf(args.n)
    _emit(
        args,
        " ".join(str(i) for i in indices),
        {"op": "zeckendorf", "n": args.n, "indices": indices},
    )
    return 0


def _cmd_witness(args) -> int:
    value = kronecker_witness(args.x, args.y)
    _emit(args, str(value), {"op": "witness", "x": args.x, "y": args.y, "value": value})
    return 0


def _cmd_refine(args) -> int:
    values = refine(args.x, args.y, args.k)
    _emit(
        args,
        "\n".join(str(v) for v in values),
        {"op": "refine", "x": args.x, "y": args.y, "k": args.k, "witnesses": values},
    )
    return 0


def _cmd_extrema(args) -> int:
    iv = Interval(args.lo, args.hi)
    if args.minimum:
        if args.below is not None:
            raise DomainError("--below applies to --max only")
        value = arg_min_frac(iv) if args.above is None else constrained_min(iv, args.above)
    else:
        if args.above is not None:
            raise DomainError("--above applies to --min only")
        value = arg_max_frac(iv) if args.below is None else constrained_max(iv, args.below)
    _emit(
        args,
        "none" if value is None else str(value),
        {
            "op": "extrema",
            "kind": "min" if args.minimum else "max",
            "lo": args.lo,
            "hi": args.hi,
            "above": args.above,
            "below": args.below,
            "value": value,
        },
    )
    return 0


def _cmd_decide(args) -> int:
    phi = parse(args.formula, require_sentence=True)
    verdict = evaluate(phi, {})
    _emit(args, "true" if verdict else "false", {"op": "decide", "value": verdict})
    return 0 if verdict else 1


def _cmd_eval(args) -> int:
    phi = parse(args.formula)
    env = dict(args.bind or [])
    verdict = evaluate(phi, env)
    _emit(
        args,
        "true" if verdict else "false",
        {"op": "eval", "env": env, "value": verdict},
    )
    return 0 if verdict else 1


def _cmd_check(args) -> int:
    spec = CheckSpec(
        name="cli",
        exhaustive_bound=args.bound,
        random_trials=args.random,
        seed=args.seed,
        paper_literal=args.paper_literal,
    )
    reports = check_all(spec)
    ok = True
    for report in reports:
        ok = ok and report.passed
        if args.format == OutputMode.JSON.value:
            print(report.to_json())
            continue
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status}  {report.name}  instances={report.instances}"
            f"  counterexamples={len(report.counterexamples)}"
        )
        for example in report.counterexamples:
            print(f"      counterexample: {example}")
        for note in report.notes:
            print(f"      note: {note}")
    return 0 if ok else 1


def _floor_scaled_frac(n: int, digits: int) -> int:
    # floor(frac(phi*n) * 10^digits), by integer scaling only
    scale = 10**digits
    a = n * scale
    root = _math_isqrt(5 * a * a)
    floor_sqrt5 = root if a >= 0 else -root - 1
    return (a + floor_sqrt5) // 2 - beatty_f(n) * scale


def _cmd_plot(args) -> int:
    digits = args.digits
    if digits < 1:
        raise DomainError("--digits must be at least 1")
    if args.stop < args.start:
        raise DomainError("--to must not be below --from")
    rows = []
    for n in range(args.start, args.stop + 1):
        frac = _floor_scaled_frac(n, digits)
        rows.append((n, beatty_f(n), f"0.{frac:0{digits}d}"))
    if args.plot_format == "csv":
        print("n,f_n,frac_phi_n")
        for n, fn, frac in rows:
            print(f"{n},{fn},{frac}")
        return 0
    scale = 10**digits
    width = args.stop - args.start + 1
    print(
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{args.start} 0 {width} 1">'
    )
    for n, _fn, frac in rows:
        flipped = scale - int(frac[2:])
        cy = f"{flipped // scale}.{flipped % scale:0{digits}d}"
        print(f'  <circle cx="{n}" cy="{cy}" r="0.05"/>')
    print("</svg>")
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phibeatty",
        description="Exact golden-ratio Beatty sequence arithmetic.",
    )
    parser._negative_number_matcher = _NEGATIVE_INT
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, handler, help_text: str, fmt: bool = True):
        p = sub.add_parser(name, help=help_text)
        p._negative_number_matcher = _NEGATIVE_INT
        p.set_defaults(handler=handler)
        if fmt:
            p.add_argument(
                "--format",
                choices=[OutputMode.HUMAN.value, OutputMode.JSON.value],
                default=OutputMode.HUMAN.value,
                help="output format (default human)",
            )
        return p

    p = command("f", _cmd_f, "floor(phi * N)")
    p.add_argument("n", type=_int_arg, metavar="N")

    p = command("fbar", _cmd_fbar, "N + floor(phi * N)")
    p.add_argument("n", type=_int_arg, metavar="N")

    p = command("finv", _cmd_finv, "preimage of N under f, if any")
    p.add_argument("n", type=_int_arg, metavar="N")

    p = command("cmp", _cmd_cmp, "compare X and Y (numerically, or by fractional part)")
    p.add_argument("--frac", action="store_true", help="compare frac(phi*X) vs frac(phi*Y)")
    p.add_argument("x", type=_int_arg, metavar="X")
    p.add_argument("y", type=_int_arg, metavar="Y")

    p = command("fibfloor", _cmd_fibfloor, "largest even-index Fibonacci number <= N")
    p.add_argument("n", type=_int_arg, metavar="N")

    p = command("g", _cmd_g, "largest odd-index Fibonacci number <= N")
    p.add_argument("n", type=_int_arg, metavar="N")

    p = command("zeckendorf", _cmd_zeckendorf, "greedy Fibonacci decomposition indices")
    p.add_argument("n", type=_int_arg, metavar="N")

    p = command("witness", _cmd_witness, "a point fractionally between X and Y")
    p.add_argument("x", type=_int_arg, metavar="X")
    p.add_argument("y", type=_int_arg, metavar="Y")

    p = command("refine", _cmd_refine, "K nested witnesses approaching X from above")
    p.add_argument("x", type=_int_arg, metavar="X")
    p.add_argument("y", type=_int_arg, metavar="Y")
    p.add_argument("k", type=_int_arg, metavar="K")

    p = command("extrema", _cmd_extrema, "fractional-part extrema over the open interval (LO, HI)")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--min", dest="minimum", action="store_true", help="minimize")
    kind.add_argument("--max", dest="minimum", action="store_false", help="maximize")
    p.add_argument("lo", type=_int_arg, metavar="LO")
    p.add_argument("hi", type=_int_arg, metavar="HI")
    p.add_argument("--above", type=_int_arg, metavar="C", help="restrict to frac > frac(C)")
    p.add_argument("--below", type=_int_arg, metavar="D", help="restrict to frac < frac(D)")

    p = command("decide", _cmd_decide, "decide a sentence of the formula language")
    p.add_argument("formula", metavar="FORMULA")

    p = command("eval", _cmd_eval, "evaluate a formula under --bind assignments")
    p.add_argument("formula", metavar="FORMULA")
    p.add_argument(
        "--bind",
        type=_bind_arg,
        action="append",
        metavar="NAME=INT",
        help="bind a free variable (repeatable)",
    )

    p = command("check", _cmd_check, "run the audit suites")
    p.add_argument("--bound", type=_int_arg, default=200, help="exhaustive sweep bound")
    p.add_argument("--random", type=_int_arg, default=1000, help="random trials per suite")
    p.add_argument("--seed", type=_int_arg, default=0, help="random seed")
    p.add_argument(
        "--paper-literal",
        action="store_true",
        help="also exercise the literal printed law forms and note their failures",
    )

    p = command("plot", _cmd_plot, "emit (n, f(n), frac(phi*n)) rows", fmt=False)
    p.add_argument("--from", dest="start", type=_int_arg, required=True, metavar="A")
    p.add_argument("--to", dest="stop", type=_int_arg, required=True, metavar="B")
    p.add_argument("--digits", type=_int_arg, default=12, metavar="D")
    p.add_argument(
        "--format",
        dest="plot_format",
        choices=["csv", "svg-points"],
        default="csv",
        help="row format (default csv)",
    )

    return parser


def run(argv: list[str] | None = None) -> int:
    """Dispatch one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        return args.handler(args)
    except (
        DomainError,
        FormulaSyntaxError,
        UnboundVariableError,
        EnumerationBudgetError,
        BoxShapeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Subcommands: seq (scalar terms), oct (lifted octonion terms), roots
(characteristic-cubic data), genfunc (generating-function numerator and
denominator), sum (octonion prefix sums) and verify (the identity suite).
Output is deterministic for a given invocation.

Exit codes: 0 success, 1 usage or out-of-regime error, 2 when verify
reports at least one failing check.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .genfunc import build_gf, format_polynomial, gf_numerator
from .octseq import OctSequenceContext
from .scalars import RegimeError, VariantError, format_scalar, parse_exact
from .sequences import PRESET_NAMES, RecurrenceParams, preset_lookup, seq_term
from .cubic import cubic_roots
from .verify import SuiteConfig, run_suite


class CliError(Exception):
    """Usage or input error; rendered as one line on stderr, exit 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(message)


_CONFIG_KEYS = ("r", "s", "t", "v0", "v1", "v2")


def _add_param_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--preset", help="named parameter set: " + ", ".join(PRESET_NAMES))
    parser.add_argument("--config", help="path to a 'key = value' parameter file")
    for key in _CONFIG_KEYS:
        parser.add_argument(f"--{key}", help="explicit parameter (integer or p/q)")


def _add_output(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument("--format", choices=formats, default=formats[0])
    parser.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trioct", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="emit scalar sequence terms")
    _add_param_source(p)
    p.add_argument("--n", required=True, help="index A or inclusive range A..B")
    _add_output(p, ("csv", "jsonl", "text"))

    p = sub.add_parser("oct", help="emit lifted octonion terms")
    _add_param_source(p)
    p.add_argument("--n", required=True, help="index A or inclusive range A..B")
    _add_output(p, ("csv", "jsonl", "text"))

    p = sub.add_parser("roots", help="print characteristic-cubic root data")
    _add_param_source(p)
    p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("genfunc", help="print the generating function")
    _add_param_source(p)
    p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("sum", help="emit octonion prefix sums")
    _add_param_source(p)
    p.add_argument("--n", required=True, help="index A or inclusive range A..B")
    _add_output(p, ("csv", "jsonl", "text"))

    p = sub.add_parser("verify", help="run the identity-verification suite")
    p.add_argument("--preset", default="all", help="'all' or one preset name")
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--m-max", type=int, default=20)
    p.add_argument("--random-sets", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report to this path instead of stdout")

    return parser


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise CliError(f"malformed range {text!r}; expected A or A..B") from None
    if a < 0 or b < a:
        raise CliError(f"range {text!r} must be nonnegative and nondecreasing")
    return a, b


def _params_from_config(path: str) -> RecurrenceParams:
    values: dict[str, int | Fraction] = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise CliError(f"cannot read config {path!r}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep or key not in _CONFIG_KEYS:
            raise CliError(f"{path}:{lineno}: expected 'key = value' with key in {_CONFIG_KEYS}")
        try:
            values[key] = parse_exact(value)
        except ValueError as exc:
            raise CliError(f"{path}:{lineno}: {exc}") from None
    missing = [k for k in _CONFIG_KEYS if k not in values]
    if missing:
        raise CliError(f"config {path!r} is missing keys: {', '.join(missing)}")
    return _make_params([values[k] for k in _CONFIG_KEYS])


def _make_params(values: list[int | Fraction]) -> RecurrenceParams:
    # mixed integer/rational inputs widen to the rational variant
    if any(isinstance(v, Fraction) for v in values):
        values = [Fraction(v) for v in values]
    return RecurrenceParams(*values)


def _resolve_params(args: argparse.Namespace) -> RecurrenceParams:
    explicit = [getattr(args, key) for key in _CONFIG_KEYS]
    sources = sum((args.preset is not None, args.config is not None, any(v is not None for v in explicit)))
    if sources != 1:
        raise CliError("supply exactly one parameter source: --preset, --config, or all of --r..--v2")
    if args.preset is not None:
        try:
            return preset_lookup(args.preset.replace("-", "_"))
        except ValueError as exc:
            raise CliError(str(exc)) from None
    if args.config is not None:
        return _params_from_config(args.config)
    if any(v is None for v in explicit):
        raise CliError("explicit parameters need all six of --r --s --t --v0 --v1 --v2")
    try:
        return _make_params([parse_exact(v) for v in explicit])
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_seq(args: argparse.Namespace) -> int:
    params = _resolve_params(args)
    lo, hi = _parse_range(args.n)
    rows = [(n, format_scalar(seq_term(params, n))) for n in range(lo, hi + 1)]
    if args.format == "csv":
        text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in rows)
    elif args.format == "jsonl":
        text = "".join(json.dumps({"n": n, "value": v}) + "\n" for n, v in rows)
    else:
        text = "".join(f"{n}: {v}\n" for n, v in rows)
    _emit(args, text)
    return 0


def _oct_rows(args: argparse.Namespace, octonions: list) -> str:
    serialized = [(n, o.serialize()) for n, o in octonions]
    if args.format == "csv":
        header = "n," + ",".join(f"e{l}" for l in range(8)) + "\n"
        return header + "".join(f"{n}," + ",".join(comps) + "\n" for n, comps in serialized)
    if args.format == "jsonl":
        return "".join(
            json.dumps({"n": n, "components": list(comps)}) + "\n" for n, comps in serialized
        )
    return "".join(f"{n}: (" + ", ".join(comps) + ")\n" for n, comps in serialized)


def _cmd_oct(args: argparse.Namespace) -> int:
    ctx = OctSequenceContext(_resolve_params(args))
    lo, hi = _parse_range(args.n)
    _emit(args, _oct_rows(args, [(n, ctx.oct_term(n)) for n in range(lo, hi + 1)]))
    return 0


def _cmd_sum(args: argparse.Namespace) -> int:
    ctx = OctSequenceContext(_resolve_params(args))
    lo, hi = _parse_range(args.n)
    rows = []
    for n in range(lo, hi + 1):
        try:
            rows.append((n, ctx.sum_octonions(n)))
        except RegimeError:
            # delta == 0: the closed form is undefined but the sum itself
            # is not; fall back to direct summation
            rows.append((n, ctx.oct_prefix_sum(n)))
    _emit(args, _oct_rows(args, rows))
    return 0


def _cmd_roots(args: argparse.Namespace) -> int:
    params = _resolve_params(args)
    roots = cubic_roots(params)
    lines = [
        f"alpha = {roots.alpha:.17g}",
        f"omega1 = {format_scalar(roots.omega1)}",
        f"omega2 = {format_scalar(roots.omega2)}",
        f"discriminant = {roots.discriminant:.17g}",
        f"weight_alpha = {format_scalar(roots.weight_alpha)}",
        f"weight_omega1 = {format_scalar(roots.weight_omega1)}",
        f"weight_omega2 = {format_scalar(roots.weight_omega2)}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_genfunc(args: argparse.Namespace) -> int:
    ctx = OctSequenceContext(_resolve_params(args))
    numerator = gf_numerator(ctx)
    gf = build_gf(ctx)
    lines = [
        f"e{slot}: {format_polynomial(numerator.slot_coefficients(slot))}"
        for slot in range(8)
    ]
    lines.append(f"denominator: {format_polynomial(gf.denom_coeffs)}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.preset == "all":
        presets = PRESET_NAMES
    else:
        name = args.preset.replace("-", "_")
        try:
            preset_lookup(name)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        presets = (name,)
    try:
        config = SuiteConfig(
            presets=presets,
            random_sets=args.random_sets,
            n_max=args.n_max,
            m_max=args.m_max,
            seed=args.seed,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    report = run_suite(config)
    _emit(args, report.to_json() if args.report == "json" else report.to_text())
    return 2 if report.total_failures else 0


_COMMANDS = {
    "seq": _cmd_seq,
    "oct": _cmd_oct,
    "roots": _cmd_roots,
    "genfunc": _cmd_genfunc,
    "sum": _cmd_sum,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"trioct: error: {exc}", file=sys.stderr)
        return 1
    except (RegimeError, VariantError, ValueError) as exc:
        print(f"trioct: error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())

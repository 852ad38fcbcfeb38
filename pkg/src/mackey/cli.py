"""Command-line surface: socle filtrations, lengths, LR coefficients,
coproducts, finite-rank dimensions, and the verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error. JSON goes to
stdout, diagnostics to stderr. The SOCLE_BUDGET environment variable
overrides the default brute-force size budget.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys

from . import verify
from .brute import DEFAULT_BUDGET, BudgetExceededError
from .finrank import MixedWeight, dim_mixed
from .linalg import CancelToken, OperationCancelled
from .partitions import Partition, format_partition, parse_partition
from .socle import SocleReport, simple_length, socle_layers, tensor_length
from .symfunc import coproduct, lr_coefficient

USAGE_ERROR = 2


def canonical_json(data) -> str:
    """The byte-stable JSON form used everywhere: compact separators,
    insertion order preserved.
    """
    return json.dumps(data, separators=(",", ":"))


def _partition_arg(parser: argparse.ArgumentParser, flag: str, help_text: str) -> None:
    # --lambda cannot land on the namespace under its own (keyword) name
    dest = "lam" if flag == "--lambda" else flag.lstrip("-")
    parser.add_argument(flag, dest=dest, required=True, metavar="PARTS",
                        help=help_text)


def _parse_partition_or_exit(text: str, what: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        print(f"error: invalid partition for {what}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _default_budget() -> int:
    raw = os.environ.get("SOCLE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        print(f"error: SOCLE_BUDGET must be an integer, got {raw!r}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def render_socle_text(report: SocleReport) -> str:
    lines = [
        f"socle filtration of W(lambda={format_partition(report.lam)}, "
        f"mu={format_partition(report.mu)}): "
        f"{len(report.layers)} layers, length {report.length()}"
    ]
    for k, layer in enumerate(report.layers):
        rendered = "; ".join(
            f"(alpha={format_partition(c.alpha)}, beta={format_partition(c.beta)}, "
            f"mu={format_partition(c.mu)}) x{c.multiplicity}"
            for c in layer)
        lines.append(f"layer {k}: {rendered}")
    return "\n".join(lines)


def cmd_socle(args) -> int:
    lam = _parse_partition_or_exit(args.lam, "--lambda")
    mu = _parse_partition_or_exit(args.mu, "--mu")
    report = socle_layers(lam, mu)
    if args.format == "json":
        print(canonical_json(report.to_json()))
    else:
        print(render_socle_text(report))
    return 0


def cmd_simple_length(args) -> int:
    lam = _parse_partition_or_exit(args.lam, "--lambda")
    mu = _parse_partition_or_exit(args.mu, "--mu")
    print(simple_length(lam, mu))
    return 0


def cmd_length(args) -> int:
    print(tensor_length(args.m, args.n))
    return 0


def cmd_lr(args) -> int:
    lam = _parse_partition_or_exit(args.lam, "lambda")
    mu = _parse_partition_or_exit(args.mu, "mu")
    nu = _parse_partition_or_exit(args.nu, "nu")
    print(lr_coefficient(lam, mu, nu))
    return 0


def cmd_coproduct(args) -> int:
    lam = _parse_partition_or_exit(args.lam, "lambda")
    delta = coproduct(lam)
    if args.format == "json":
        print(canonical_json(delta.to_json()))
    else:
        for (mu, nu), c in delta:
            print(f"{c} * ({format_partition(mu)}) (x) ({format_partition(nu)})")
    return 0


def cmd_dim(args) -> int:
    lam = _parse_partition_or_exit(args.lam, "--lambda")
    mu = _parse_partition_or_exit(args.mu, "--mu")
    try:
        weight = MixedWeight(lam, mu, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    print(dim_mixed(weight))
    return 0


def cmd_verify(args) -> int:
    cancel = CancelToken()
    previous = signal.getsignal(signal.SIGINT)
    signal.signal(signal.SIGINT, lambda *_: cancel.cancel())
    try:
        results = verify.run_suite(args.suite, budget=args.budget,
                                   seed=args.seed, cancel=cancel)
    except OperationCancelled:
        print("verification cancelled", file=sys.stderr)
        return 130
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        signal.signal(signal.SIGINT, previous)
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"{len(failed)} of {len(results)} checks failed", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mackey",
        description="Socle filtrations and lengths of tensor modules over "
                    "Mackey Lie algebras, with finite-rank verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_socle = sub.add_parser("socle", help="socle filtration of W(lambda, mu)")
    _partition_arg(p_socle, "--lambda", "partition on the dual side, e.g. 2,1 or -")
    _partition_arg(p_socle, "--mu", "partition on the plain side")
    p_socle.add_argument("--format", choices=("text", "json"), default="text")
    p_socle.set_defaults(func=cmd_socle)

    p_slen = sub.add_parser("simple-length",
                            help="length of the simple module W(lambda, mu)")
    _partition_arg(p_slen, "--lambda", "partition on the dual side")
    _partition_arg(p_slen, "--mu", "partition on the plain side")
    p_slen.set_defaults(func=cmd_simple_length)

    p_len = sub.add_parser("length", help="length of (V*)^m (x) V^n")
    p_len.add_argument("--m", type=int, required=True, help="dual tensor degree")
    p_len.add_argument("--n", type=int, required=True, help="plain tensor degree")
    p_len.set_defaults(func=cmd_length)

    p_lr = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lambda_{mu nu}")
    p_lr.add_argument("lam", metavar="LAMBDA")
    p_lr.add_argument("mu", metavar="MU")
    p_lr.add_argument("nu", metavar="NU")
    p_lr.set_defaults(func=cmd_lr)

    p_cop = sub.add_parser("coproduct", help="coproduct of a Schur basis element")
    p_cop.add_argument("lam", metavar="LAMBDA")
    p_cop.add_argument("--format", choices=("text", "json"), default="text")
    p_cop.set_defaults(func=cmd_coproduct)

    p_dim = sub.add_parser("dim", help="dimension of a mixed-tensor simple of gl(rank)")
    p_dim.add_argument("--rank", type=int, required=True)
    _partition_arg(p_dim, "--lambda", "covariant partition")
    _partition_arg(p_dim, "--mu", "contravariant partition")
    p_dim.set_defaults(func=cmd_dim)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=("hopf", "branching", "brute", "all"))
    p_ver.add_argument("--budget", type=int, default=None,
                       help="size budget for brute-force modules "
                            f"(default {DEFAULT_BUDGET}, or SOCLE_BUDGET)")
    p_ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED,
                       help="seed for randomized point checks")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is None and args.command == "verify":
        args.budget = _default_budget()
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())

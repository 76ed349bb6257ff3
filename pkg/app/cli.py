"""
Command line for the partition operators and the verification harness.

    python -m app reg --e 3 --partition "4,3^3,1^5"
    python -m app check --suite main --max-n 12 --e-range 2..6

Exit status: 0 on success, 1 when a verification report fails, 2 for usage,
parse and precondition errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from jinja2 import Environment, FileSystemLoader

from app.partitions import (
    Annotation,
    Partition,
    PartitionParseError,
    PreconditionError,
    RenderOptions,
    S_operator,
    conjugate,
    e_rim,
    format_partition,
    hook_profile,
    mullineux,
    parse_partition,
    regularise,
    render_diagram,
    strip_I,
    strip_J,
)
from app.schemas.partition import DiagramOut, HookTableOut, LPartitionOut, RimOut
from app.services.verification_service import (
    DEFAULT_E_SET,
    DEFAULT_MAX_N,
    DEFAULT_WORKERS,
    SUITES,
    reports_to_json,
    run_suite,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

COUNTEREXAMPLES_SHOWN = 5

PARTITION_COMMANDS: Dict[str, Callable[[Partition, int], Partition]] = {
    "reg": regularise,
    "strip-i": strip_I,
    "strip-j": strip_J,
    "mull": mullineux,
    "s-op": S_operator,
}


class UsageError(Exception):
    pass


def _node_text(node: Sequence[int]) -> str:
    return f"({node[0]},{node[1]})"


def _template_env() -> Environment:
    env = Environment(
        loader=FileSystemLoader(str(Path(__file__).parent / "templates" / "cli")),
        trim_blocks=True,
        keep_trailing_newline=False,
    )
    env.filters["node"] = _node_text
    env.filters["partition_text"] = lambda parts: format_partition(Partition(tuple(parts)))
    return env


def _e_value(text: str) -> int:
    try:
        e = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"e must be an integer, got {text!r}")
    if e < 2:
        raise argparse.ArgumentTypeError(f"e must be at least 2, got {e}")
    return e


def parse_e_range(text: str) -> List[int]:
    """"2..6" or "2,4,5" or a single value"""
    try:
        if ".." in text:
            low, high = (int(piece) for piece in text.split("..", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed e range {text!r}; use e.g. 2..6")
    if not values or min(values) < 2:
        raise argparse.ArgumentTypeError(f"e range {text!r} must be non-empty with every e >= 2")
    return values


def _max_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"max-n must be an integer, got {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"max-n must be non-negative, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--e", type=_e_value, help="the integer e >= 2")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--partition", help='partition in exponent notation, e.g. "4,3^3,1^5"; "()" is empty')

    parser = argparse.ArgumentParser(prog="mullineux-lab", description=__doc__.split("\n\n")[0])
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    show = commands.add_parser("show", parents=[common], help="draw the Young diagram")
    show.add_argument(
        "--annotation",
        choices=[annotation.value for annotation in Annotation],
        default=Annotation.NONE.value,
    )
    commands.add_parser("conjugate", parents=[common], help="conjugate partition Tλ")
    commands.add_parser("reg", parents=[common], help="e-regularisation Gλ")
    commands.add_parser("rim", parents=[common], help="e-rim, r, m and l'")
    commands.add_parser("strip-i", parents=[common], help="Iλ: remove the e-rim")
    commands.add_parser("strip-j", parents=[common], help="Jλ: remove the truncated e-rim")
    commands.add_parser("mull", parents=[common], help="Mullineux map Mλ")
    commands.add_parser("hooks", parents=[common], help="hook table with e-weight and z")
    commands.add_parser("lpart", parents=[common], help="is λ an L-partition")
    commands.add_parser("s-op", parents=[common], help="the S operator on an L-partition")

    check = commands.add_parser("check", parents=[common], help="run the verification harness")
    check.add_argument("--suite", choices=SUITES, default="all")
    check.add_argument("--max-n", type=_max_n, default=DEFAULT_MAX_N)
    check.add_argument(
        "--e-range",
        type=parse_e_range,
        default=list(DEFAULT_E_SET),
        help="values of e, e.g. 2..6 or 3,5",
    )
    check.add_argument("--workers", type=int, default=DEFAULT_WORKERS)
    return parser


def _partition_arg(args: argparse.Namespace) -> Partition:
    if args.partition is None:
        raise UsageError(f"{args.command} needs --partition")
    return parse_partition(args.partition)


def _e_arg(args: argparse.Namespace) -> int:
    if args.e is None:
        raise UsageError(f"{args.command} needs --e")
    return args.e


def _print_partition(la: Partition, as_json: bool) -> None:
    print(json.dumps(la.to_json()) if as_json else format_partition(la))


def _execute(args: argparse.Namespace, env: Environment) -> int:
    command = args.command

    if command == "check":
        reports = run_suite(args.suite, args.max_n, args.e_range, max(1, args.workers))
        print(json.dumps(reports_to_json(reports), indent=2, ensure_ascii=False))
        passed = sum(report.passed for report in reports)
        summary = env.get_template("summary.txt.j2").render(
            reports=reports, passed=passed, limit=COUNTEREXAMPLES_SHOWN
        )
        print(summary, file=sys.stderr)
        return EXIT_OK if passed == len(reports) else EXIT_FAILED

    la = _partition_arg(args)

    if command == "conjugate":
        _print_partition(conjugate(la), args.json)
        return EXIT_OK

    if command == "show":
        annotation = Annotation(args.annotation)
        options = RenderOptions(annotation=annotation, e=args.e)
        diagram = render_diagram(la, options)
        print(DiagramOut(diagram=diagram).json(ensure_ascii=False) if args.json else diagram)
        return EXIT_OK

    e = _e_arg(args)

    if command in PARTITION_COMMANDS:
        _print_partition(PARTITION_COMMANDS[command](la, e), args.json)
    elif command == "rim":
        rim = e_rim(la, e)
        if args.json:
            print(RimOut.from_rim(rim).json())
        else:
            print(env.get_template("rim.txt.j2").render(rim=rim))
    elif command == "hooks":
        profile = hook_profile(la, e)
        if args.json:
            print(HookTableOut.from_profile(profile).json())
        else:
            print(env.get_template("hooks.txt.j2").render(profile=profile))
    elif command == "lpart":
        profile = hook_profile(la, e)
        bad = profile.bad_hooks
        if args.json:
            print(LPartitionOut.from_profile(profile).json())
        elif bad:
            print(f"false\nbad hook: {bad[0].describe()}")
        else:
            print("true")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _execute(args, _template_env())
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except PartitionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except PreconditionError as exc:
        print(f"error: precondition violated ({exc.condition}): {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())

import argparse
import csv
import json
import logging
import sys

from pinnacles.actions import CLASSICAL, DUAL, orbit_size
from pinnacles.admissibility import vale_sets
from pinnacles.bench import CSV_HEADER, admissible_pinnacle_sets, bench_rows
from pinnacles.config import MAX_NAIVE_N_ENV, ExhaustiveLimitError
from pinnacles.counting import count_pin
from pinnacles.generation import (
    generate_naive,
    iter_constructive,
    iter_fs_minimal,
    iter_naive,
)
from pinnacles.permutation import Permutation
from pinnacles.utils import format_value_set, parse_value_set

logger = logging.getLogger(__name__)


def _pinnacles(text):
    try:
        return parse_value_set(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error))


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer.")
    if value < 1:
        raise argparse.ArgumentTypeError(f"n should be at least 1. Got {value}.")
    return value


def _permutation(text):
    try:
        return Permutation.from_string(text)
    except ValueError as error:
        raise argparse.ArgumentTypeError(str(error))


def _emit_json(data):
    print(json.dumps(data))


def _emit_csv(header, rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_count(args):
    if args.method == "formula":
        count = count_pin(args.pinnacles, args.n)
    else:
        count = len(generate_naive(args.pinnacles, args.n))

    if args.format == "json":
        _emit_json(
            {
                "n": args.n,
                "pinnacles": list(args.pinnacles),
                "method": args.method,
                "count": count,
            }
        )
    elif args.format == "csv":
        _emit_csv(
            ("n", "pinnacles", "count"),
            [(args.n, format_value_set(args.pinnacles, sep=";"), count)],
        )
    else:
        print(count)
    return 0


def cmd_generate(args):
    if args.method == "naive":
        permutations = iter_naive(args.pinnacles, args.n)
    else:
        permutations = iter_constructive(args.pinnacles, args.n)
    if args.sorted:
        permutations = sorted(permutations)

    count = 0
    if args.format == "json":
        permutations = [list(p) for p in permutations]
        count = len(permutations)
        _emit_json(permutations)
    else:
        for p in permutations:
            print(p)
            count += 1

    print(f"count: {count}", file=sys.stderr)
    return 0


def cmd_orbits(args):
    representatives = sorted(iter_fs_minimal(args.pinnacles, args.n))
    rows = [(rep, orbit_size(rep)) for rep in representatives]

    if args.format == "json":
        _emit_json([{"representative": list(rep), "size": size} for rep, size in rows])
    elif args.format == "csv":
        _emit_csv(
            ("representative", "size"),
            [(";".join(str(v) for v in rep), size) for rep, size in rows],
        )
    else:
        for rep, size in rows:
            print(f"{rep} {size}")
    return 0


def cmd_vale_sets(args):
    sets = vale_sets(args.pinnacles, args.n)
    if args.format == "json":
        _emit_json([list(V) for V in sets])
    else:
        for V in sets:
            print(format_value_set(V))
    return 0


def cmd_act(args):
    action = CLASSICAL if args.variant == "classic" else DUAL
    image = action.act(args.perm, args.x)
    if args.format == "json":
        _emit_json(list(image))
    else:
        print(image)
    return 0


def cmd_bench(args):
    if args.all:
        pinnacle_sets = admissible_pinnacle_sets(args.n)
    else:
        pinnacle_sets = [args.pinnacles]
    rows = bench_rows(pinnacle_sets, args.n, runs=args.runs)

    if args.format == "json":
        _emit_json([row.as_dict() for row in rows])
    else:
        _emit_csv(CSV_HEADER, [row.as_csv_row() for row in rows])
    return 0


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("plain", "json", "csv"),
        default="plain",
        help="Output format.",
    )
    common.add_argument(
        "--sorted",
        action="store_true",
        help="Emit permutations in lexicographic order.",
    )
    common.add_argument(
        "--runs", type=int, default=3, help="Timed runs per benchmark leg."
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log to standard error. Repeat for more detail.",
    )
    return common


def _add_pinnacles(parser):
    parser.add_argument(
        "-P",
        "--pinnacles",
        type=_pinnacles,
        required=True,
        help='Comma-separated pinnacle set. Use "" or none for the empty set.',
    )


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="pinnacles",
        description="Construct, count and benchmark permutations with a given "
        "pinnacle set.",
        epilog=f"{MAX_NAIVE_N_ENV} caps exhaustive enumeration (default 10).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    count = subparsers.add_parser(
        "count", parents=[common], help="Count permutations with pinnacle set P."
    )
    count.add_argument("-n", type=_positive_int, required=True)
    _add_pinnacles(count)
    count.add_argument(
        "--method", choices=("formula", "enumerate"), default="formula"
    )
    count.set_defaults(func=cmd_count)

    generate = subparsers.add_parser(
        "generate", parents=[common], help="List permutations with pinnacle set P."
    )
    generate.add_argument("-n", type=_positive_int, required=True)
    _add_pinnacles(generate)
    generate.add_argument(
        "--method", choices=("naive", "construct"), default="construct"
    )
    generate.set_defaults(func=cmd_generate)

    orbits = subparsers.add_parser(
        "orbits", parents=[common], help="FS-minimal orbit representatives."
    )
    orbits.add_argument("-n", type=_positive_int, required=True)
    _add_pinnacles(orbits)
    orbits.set_defaults(func=cmd_orbits)

    vale = subparsers.add_parser(
        "vale-sets", parents=[common], help="Admissible vale sets of P."
    )
    vale.add_argument("-n", type=_positive_int, required=True)
    _add_pinnacles(vale)
    vale.set_defaults(func=cmd_vale_sets)

    act = subparsers.add_parser(
        "act", parents=[common], help="Apply one Foata-Strehl involution."
    )
    act.add_argument("--perm", type=_permutation, required=True)
    act.add_argument("-x", type=int, required=True)
    variant = act.add_mutually_exclusive_group()
    variant.add_argument(
        "--dual", dest="variant", action="store_const", const="dual"
    )
    variant.add_argument(
        "--classic", dest="variant", action="store_const", const="classic"
    )
    act.set_defaults(func=cmd_act, variant="dual")

    bench = subparsers.add_parser(
        "bench", parents=[common], help="Time the naive and constructive algorithms."
    )
    bench.add_argument("-n", type=_positive_int, required=True)
    scope = bench.add_mutually_exclusive_group(required=True)
    scope.add_argument("-P", "--pinnacles", type=_pinnacles)
    scope.add_argument("--all", action="store_true")
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        return args.func(args)
    except ExhaustiveLimitError as error:
        print(f"pinnacles: {error}", file=sys.stderr)
        return 3
    except ValueError as error:
        print(f"pinnacles: {error}", file=sys.stderr)
        return 2
    except RuntimeError as error:
        logger.error("%s", error)
        return 1

"""run the eight named errors"""
from syndromelab import protocol
from syndromelab import scriptutils


HEADER = ["error", "p00", "p10", "p01", "p11", "class_mode"]


def add_parser(subparsers):
    """Add parser for suite"""
    parser = subparsers.add_parser(
        "suite",
        help="""Run the named error suite""",
        description="""Compute the syndrome probabilities of the eight
        composite errors Y_{pi/3}, X_{pi/3}, X_{pi/3}Y_{pi/3},
        X_{pi/3}Y_{2pi/3}, X_{2pi/3}Y_{pi/3}, X_{2pi/3}Y_{2pi/3}, R and H.
        Primitives of a composite act left to right. Each row holds the error,
        the probabilities of outcomes 00, 10, 01 and 11, and the error type of
        the most likely outcome.""",
    )
    scriptutils.add_spec_argument(parser)
    parser.add_argument(
        "--target",
        "-t",
        metavar="<qubit>",
        type=int,
        default=0,
        help="""Qubit the errors act on, from 0 to 2n. (default:
        %(default)d)""",
    )
    scriptutils.add_run_arguments(parser)
    scriptutils.add_output_arguments(parser)
    return parser


def main(args):
    """Entry point for suite"""
    spec = scriptutils.load_spec(args.spec)
    seed = scriptutils.resolve_seed(args.seed)
    names, table = protocol.suite(
        spec, args.target, mode=args.mode, shots=args.shots, seed=seed
    )
    baseline = protocol.no_error_baseline(spec)
    rows = [
        [name]
        + list(row)
        + [
            protocol.classify_distribution(
                row[list(protocol.TABLE_ORDER)], baseline
            ).value
        ]
        for name, row in zip(names, table)
    ]
    with scriptutils.open_output(args.out, args.force) as out:
        scriptutils.write_rows(out, args.format, HEADER, rows)

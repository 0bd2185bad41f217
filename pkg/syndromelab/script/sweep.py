"""sweep a rotation error over angles"""
from syndromelab import protocol
from syndromelab import scriptutils


HEADER = ["theta", "p00", "p10", "p01", "p11", "class_mode"]


def add_parser(subparsers):
    """Add parser for sweep"""
    parser = subparsers.add_parser(
        "sweep",
        help="""Sweep a rotation error""",
        description="""Compute the syndrome probabilities of a rotation error
        for every angle of a grid. Each row holds the angle, the probabilities
        of outcomes 00, 10, 01 and 11 (syndrome a first), and the error type
        of the most likely outcome.""",
    )
    scriptutils.add_spec_argument(parser)
    parser.add_argument(
        "--axis",
        "-a",
        choices=("X", "Y", "Z"),
        type=str.upper,
        default="Y",
        help="""Rotation axis of the error. (default: %(default)s)""",
    )
    parser.add_argument(
        "--theta-grid",
        "-g",
        metavar="<grid>",
        help="""Angles to sweep, either `start:stop:num` for evenly spaced
        angles including both ends, or a comma separated list like
        `0,pi/3,2pi/3`. (default: k pi / 15 for k from -15 to 15)""",
    )
    parser.add_argument(
        "--target",
        "-t",
        metavar="<qubit>",
        type=int,
        default=0,
        help="""Qubit the error acts on, from 0 to 2n. (default:
        %(default)d)""",
    )
    parser.add_argument(
        "--processes",
        "-p",
        metavar="<num-procs>",
        type=scriptutils.positive_int,
        default=1,
        help="""Number of processes to evaluate angles with. Results don't
        depend on it. (default: %(default)d)""",
    )
    scriptutils.add_run_arguments(parser)
    scriptutils.add_output_arguments(parser)
    return parser


def main(args):
    """Entry point for sweep"""
    spec = scriptutils.load_spec(args.spec)
    thetas = scriptutils.parse_grid(args.theta_grid)
    seed = scriptutils.resolve_seed(args.seed)
    table = protocol.sweep(
        spec,
        args.axis,
        thetas,
        args.target,
        mode=args.mode,
        shots=args.shots,
        seed=seed,
        processes=args.processes,
    )
    baseline = protocol.no_error_baseline(spec)
    rows = [
        list(row)
        + [
            protocol.classify_distribution(
                row[1:][list(protocol.TABLE_ORDER)], baseline
            ).value
        ]
        for row in table
    ]
    with scriptutils.open_output(args.out, args.force) as out:
        scriptutils.write_rows(out, args.format, HEADER, rows)

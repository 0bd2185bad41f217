"""run the detection protocol once"""
from syndromelab import errors
from syndromelab import protocol
from syndromelab import scriptutils


def add_parser(subparsers):
    """Add parser for run"""
    parser = subparsers.add_parser(
        "run",
        help="""Run the protocol""",
        description="""Run the detection protocol on a spec with an optional
        error, and print the probability of every syndrome outcome with the
        type of error it signals. Outcomes are read relative to the error free
        outcome of the spec, which is 01 for specs with a negative sign.""",
    )
    scriptutils.add_spec_argument(parser)
    parser.add_argument(
        "--error",
        "-e",
        metavar="<error>",
        help="""Error to insert, e.g. `X:pi`, `X:pi/3,Y:2pi/3`, `H` or `R`.
        (default: no error)""",
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
    scriptutils.add_run_arguments(parser)
    scriptutils.add_output_arguments(parser, ("text", "json"))
    return parser


def main(args):
    """Entry point for run"""
    spec = scriptutils.load_spec(args.spec)
    error = None if args.error is None else errors.parse_error(args.error, args.target)
    baseline = protocol.no_error_baseline(spec)
    if args.mode == "exact":
        dist = protocol.run_exact(spec, error)
        counts = None
    else:
        seed = scriptutils.resolve_seed(args.seed)
        counts = protocol.run_shots(spec, error, args.shots, seed)
        dist = counts / args.shots
    modal = protocol.modal_outcome(dist)
    rows = []
    for index in protocol.TABLE_ORDER:
        outcome = protocol.outcome_of(index)
        row = {
            "outcome": outcome.label,
            "probability": float(dist[index]),
            "class": protocol.classify(outcome, baseline).value,
        }
        if counts is not None:
            row["counts"] = int(counts[index])
        rows.append(row)

    with scriptutils.open_output(args.out, args.force) as out:
        if args.format == "json":
            scriptutils.write_json(
                {
                    "error": None if error is None else errors.error_name(error),
                    "target": None if error is None else error.target,
                    "baseline": baseline.label,
                    "outcomes": rows,
                    "modal": modal.label,
                    "class_mode": protocol.classify(modal, baseline).value,
                },
                out,
            )
        else:
            for row in rows:
                out.write(
                    "{} {:.6f} {}{}\n".format(
                        row["outcome"],
                        row["probability"],
                        row["class"],
                        "" if counts is None else " {:d}".format(row["counts"]),
                    )
                )
            out.write(
                "modal outcome {}: {}\n".format(
                    modal.label, protocol.classify(modal, baseline).value
                )
            )

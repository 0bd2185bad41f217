"""validate a complementarity spec"""
from syndromelab import scriptutils
from syndromelab import states


def add_parser(subparsers):
    """Add parser for validate"""
    parser = subparsers.add_parser(
        "validate",
        aliases=["val"],
        help="""Validate a spec""",
        description="""Check a spec against the complementarity invariants.
        Valid specs are summarized with their parity class and entanglement
        properties, invalid specs list every violation and exit with status
        1.""",
    )
    scriptutils.add_spec_argument(parser)
    scriptutils.add_output_arguments(parser, ("text", "json"))
    return parser


def _summary(spec):
    state = states.build_state(spec)
    return {
        "n": spec.n,
        "num_qubits": spec.num_qubits,
        "representatives": len(spec.representatives),
        "sign": "+" if spec.sign == 1 else "-",
        "parity": states.parity_class(spec).value,
        "concurrence": states.concurrence(state),
        "separable": states.is_fully_separable(state),
        "ancilla_entangling": states.ancilla_is_entangling(spec),
    }


def main(args):
    """Entry point for validate"""
    spec = scriptutils.load_spec(args.spec)
    violations = states.validate_spec(spec)
    with scriptutils.open_output(args.out, args.force) as out:
        if args.format == "json":
            result = {"valid": not violations}
            result["violations"] = [v._asdict() for v in violations]
            if not violations:
                result.update(_summary(spec))
            scriptutils.write_json(result, out)
        elif violations:
            out.write("invalid\n")
            for violation in violations:
                out.write("{}: {}\n".format(violation.kind, violation.detail))
        else:
            out.write("valid\n")
            for key, val in _summary(spec).items():
                out.write("{}: {}\n".format(key, val))
    return 1 if violations else 0

"""emit the protocol circuit as OpenQASM"""
from syndromelab import device
from syndromelab import errors
from syndromelab import protocol
from syndromelab import scriptutils


def add_parser(subparsers):
    """Add parser for emit-qasm"""
    parser = subparsers.add_parser(
        "emit-qasm",
        aliases=["qasm"],
        help="""Emit OpenQASM""",
        description="""Write the protocol circuit of a spec as an OpenQASM 2.0
        program measuring both syndromes. Single pair specs are prepared with
        gates, other specs only carry their amplitudes as comments.""",
    )
    scriptutils.add_spec_argument(parser)
    parser.add_argument(
        "--error",
        "-e",
        metavar="<error>",
        help="""Error to insert, e.g. `Y:pi/3`. (default: no error)""",
    )
    parser.add_argument(
        "--target",
        "-t",
        metavar="<qubit>",
        type=int,
        default=0,
        help="""Qubit the error acts on. (default: %(default)d)""",
    )
    parser.add_argument(
        "--device",
        "-d",
        action="store_true",
        help="""Place the circuit on the ibmqx5 device, reversing CNOTs that
        only exist in the other direction and warning about illegal ones.""",
    )
    parser.add_argument(
        "--layout",
        "-l",
        metavar="<q0,q1,...>",
        help="""Physical qubit of every logical qubit when placing on the
        device. (default: identity)""",
    )
    parser.add_argument(
        "--register-size",
        metavar="<size>",
        type=scriptutils.positive_int,
        help="""Size of the quantum register. (default: the device or circuit
        size)""",
    )
    parser.add_argument(
        "--convention",
        "-c",
        choices=device.CONVENTIONS,
        default="legacy",
        help="""Encoding of X rotations. `legacy` uses u3(theta,pi/2,-pi/2) and
        `exact` uses u3(theta,-pi/2,pi/2); both give the same syndrome
        statistics. (default: %(default)s)""",
    )
    scriptutils.add_output_arguments(parser, ("qasm",))
    return parser


def main(args):
    """Entry point for emit-qasm"""
    spec = scriptutils.load_spec(args.spec)
    error = None if args.error is None else errors.parse_error(args.error, args.target)
    circuit = protocol.build_circuit(spec, error)
    program = device.emit_qasm(
        circuit,
        device=device.builtin_ibmqx5() if args.device else None,
        layout=scriptutils.parse_layout(args.layout),
        register_size=args.register_size,
        convention=args.convention,
    )
    with scriptutils.open_output(args.out, args.force) as out:
        out.write(program.text)

"""print device information"""
from syndromelab import device
from syndromelab import protocol
from syndromelab import scriptutils


def add_parser(subparsers):
    """Add parser for device-info"""
    parser = subparsers.add_parser(
        "device-info",
        aliases=["dev"],
        help="""Print ibmqx5 information""",
        description="""Print the qubit parameters and allowed CNOTs of the
        ibmqx5 device. If a spec is given, also report whether every CNOT of
        its protocol circuit is legal, reversible or illegal on the device,
        with the hop distance between its qubits.""",
    )
    parser.add_argument(
        "--spec",
        "-s",
        metavar="<spec>",
        help="""Spec whose protocol circuit to check, in any form `run`
        accepts.""",
    )
    parser.add_argument(
        "--layout",
        "-l",
        metavar="<q0,q1,...>",
        help="""Physical qubit of every logical qubit. (default:
        identity)""",
    )
    scriptutils.add_output_arguments(parser, ("text", "json"))
    return parser


def _report(args, dev):
    if args.spec is None:
        return None
    circuit = protocol.build_circuit(scriptutils.load_spec(args.spec))
    return device.check_legality(circuit, dev, scriptutils.parse_layout(args.layout))


def main(args):
    """Entry point for device-info"""
    dev = device.builtin_ibmqx5()
    report = _report(args, dev)
    with scriptutils.open_output(args.out, args.force) as out:
        if args.format == "json":
            result = {
                "name": dev.name,
                "qubits": [params._asdict() for params in dev.qubits],
                "coupling": [
                    {"control": c, "target": t, "cx_error": err}
                    for (c, t), err in sorted(dev.cx_errors.items())
                ],
            }
            if report is not None:
                result["legality"] = [
                    {
                        "control": row.control,
                        "target": row.target,
                        "physical": list(row.physical),
                        "category": row.category,
                        "distance": float(row.distance),
                    }
                    for row in report
                ]
            scriptutils.write_json(result, out)
            return
        out.write(device.dumps(dev))
        if report is not None:
            out.write("\n[legality]\n")
            for row in report:
                out.write(
                    "{:d} {:d} -> Q{:d} Q{:d} {} {:g}\n".format(
                        row.control,
                        row.target,
                        *row.physical,
                        row.category,
                        row.distance,
                    )
                )

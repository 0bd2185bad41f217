"""Device model and OpenQASM emission

A device is a set of qubits with calibration parameters and a directed
coupling graph of allowed CNOTs, control first. Parameters are metadata and
never affect simulation.

Device files are plain text. Blank lines and `#` comments are ignored, a
`name <name>` line names the device, and two sections follow. Each row of
the `[qubits]` section is

    <qubit> <frequency GHz> <coherence us> <relaxation us> <gate err> <readout err>

with gate errors in units of 1e-3 and readout errors in units of 1e-2, and
each row of the `[coupling]` section is

    <control> <target> <cx error 1e-2>
"""
import collections
import logging
import pkgutil
import re

import numpy as np
from scipy.sparse import csgraph

from syndromelab import states
from syndromelab import utils


LEGAL = "legal"
REVERSIBLE = "reversible"
ILLEGAL = "illegal"

QASM_GATES = frozenset(["u1", "u3", "h", "x", "cx", "measure"])
CONVENTIONS = ("legacy", "exact")

QubitParams = collections.namedtuple(
    "QubitParams",
    ["frequency", "coherence", "relaxation", "gate_error", "readout_error"],
)
LegalityRow = collections.namedtuple(
    "LegalityRow", ["control", "target", "physical", "category", "distance"]
)
QasmProgram = collections.namedtuple(
    "QasmProgram", ["text", "num_qubits", "num_clbits"]
)


class DeviceModel(object):
    """A quantum processor with a directed coupling graph

    Parameters
    ----------
    name : str
        The device name.
    qubits : [QubitParams]
        The parameters of every qubit, indexed by qubit.
    coupling : {(int, int): float}
        Map from every allowed (control, target) pair to the error rate of
        that CNOT in units of 1e-2.
    """

    def __init__(self, name, qubits, coupling):
        self.name = name
        self.qubits = tuple(qubits)
        self.cx_errors = dict(coupling)
        self.coupling = frozenset(self.cx_errors)
        utils.check(self.qubits, "a device needs at least one qubit")
        for qubit, params in enumerate(self.qubits):
            utils.check(
                all(v >= 0 for v in params),
                "qubit {:d} has negative parameters",
                qubit,
            )
        for (control, target), err in self.cx_errors.items():
            utils.check(
                0 <= control < self.num_qubits and 0 <= target < self.num_qubits,
                "edge {:d} -> {:d} references an unknown qubit",
                control,
                target,
            )
            utils.check(control != target, "self loop on qubit {:d}", control)
            utils.check(
                err >= 0, "edge {:d} -> {:d} has negative error", control, target
            )

    @property
    def num_qubits(self):
        """Number of qubits on the device"""
        return len(self.qubits)

    def category(self, control, target):
        """Legality of a CNOT between two physical qubits"""
        if (control, target) in self.coupling:  # pylint: disable=no-else-return
            return LEGAL
        elif (target, control) in self.coupling:
            return REVERSIBLE
        else:
            return ILLEGAL

    @utils.memoize
    def hop_distances(self):
        """Undirected shortest path lengths between all pairs of qubits"""
        adj = np.zeros((self.num_qubits,) * 2, bool)
        for control, target in self.coupling:
            adj[control, target] = True
        dists = csgraph.shortest_path(adj, directed=False, unweighted=True)
        dists.setflags(write=False)
        return dists

    def distance(self, first, second):
        """Number of couplings separating two qubits, inf if disconnected"""
        return self.hop_distances()[first, second]

    def __eq__(self, other):
        return (
            isinstance(other, DeviceModel)
            and self.name == other.name
            and self.qubits == other.qubits
            and self.cx_errors == other.cx_errors
        )

    def __hash__(self):
        return hash((self.name, self.qubits, self.coupling))

    def __repr__(self):
        return "{}({!r}, {:d} qubits, {:d} couplings)".format(
            self.__class__.__name__, self.name, self.num_qubits, len(self.coupling)
        )


def _parse_float(token, lineno):
    try:
        return float(token)
    except ValueError as ex:
        raise ValueError(
            "line {:d}: {!r} isn't a number".format(lineno, token)
        ) from ex


def _parse_int(token, lineno):
    utils.check(
        token.isdigit(), "line {:d}: {!r} isn't a qubit index", lineno, token
    )
    return int(token)


def loads(string):
    """Read a device from the text format"""
    name = None
    section = None
    qubits = {}
    coupling = {}
    for lineno, line in enumerate(string.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "name":
            utils.check(len(tokens) == 2, "line {:d}: name takes one value", lineno)
            name = tokens[1]
        elif line in ("[qubits]", "[coupling]"):
            section = line[1:-1]
        elif section == "qubits":
            utils.check(
                len(tokens) == 6, "line {:d}: qubit rows have six columns", lineno
            )
            index = _parse_int(tokens[0], lineno)
            utils.check(index not in qubits, "line {:d}: duplicate qubit", lineno)
            qubits[index] = QubitParams(
                *(_parse_float(t, lineno) for t in tokens[1:])
            )
        elif section == "coupling":
            utils.check(
                len(tokens) == 3, "line {:d}: coupling rows have three columns", lineno
            )
            edge = _parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)
            utils.check(edge not in coupling, "line {:d}: duplicate edge", lineno)
            coupling[edge] = _parse_float(tokens[2], lineno)
        else:
            raise ValueError("line {:d}: unexpected {!r}".format(lineno, line))
    utils.check(name is not None, "device file has no name")
    utils.check(
        sorted(qubits) == list(range(len(qubits))),
        "qubits must be numbered from zero without gaps",
    )
    return DeviceModel(name, [qubits[i] for i in range(len(qubits))], coupling)


def load(filelike):
    """Read a device from a file"""
    return loads(filelike.read())


def dumps(device):
    """Write a device in the text format"""
    lines = ["name {}".format(device.name), "", "[qubits]"]
    lines.extend(
        "{:d} {}".format(i, " ".join("{:.2f}".format(v) for v in params))
        for i, params in enumerate(device.qubits)
    )
    lines.extend(["", "[coupling]"])
    lines.extend(
        "{:d} {:d} {:.2f}".format(control, target, err)
        for (control, target), err in sorted(device.cx_errors.items())
    )
    return "\n".join(lines) + "\n"


def dump(device, filelike):
    """Write a device to a file"""
    filelike.write(dumps(device))


def builtin_ibmqx5():
    """The sixteen qubit ibmqx5 processor"""
    logging.info("loading builtin ibmqx5 device")
    return loads(pkgutil.get_data("syndromelab", "data/ibmqx5.txt").decode("utf8"))


def check_layout(layout, num_logical, device):
    """Validate a logical to physical layout, defaulting to the identity"""
    if layout is None:
        layout = range(num_logical)
    layout = [int(p) for p in layout]
    utils.check(
        len(layout) == num_logical,
        "layout must place {:d} qubits, got {:d}",
        num_logical,
        len(layout),
    )
    utils.check(
        all(0 <= p < device.num_qubits for p in layout),
        "layout {} has qubits outside [0, {:d})",
        layout,
        device.num_qubits,
    )
    utils.check(
        len(set(layout)) == len(layout), "layout {} places qubits twice", layout
    )
    return layout


def check_legality(circuit, device, layout=None):
    """Classify every CNOT of a circuit on a device

    Parameters
    ----------
    circuit : ProtocolCircuit
        The circuit to place.
    device : DeviceModel
        The device to place it on.
    layout : [int], optional
        The physical qubit of every logical qubit. Defaults to the identity.

    Returns
    -------
    report : [LegalityRow]
        One row per CNOT with its logical and physical qubits, whether it is
        `legal`, `reversible` with Hadamards or `illegal`, and the hop
        distance between its physical qubits.
    """
    layout = check_layout(layout, circuit.num_qubits, device)
    report = []
    for inst in circuit.instructions:
        if inst.name != "CX":
            continue
        control, target = inst.qubits
        phys = layout[control], layout[target]
        report.append(
            LegalityRow(
                control, target, phys, device.category(*phys), device.distance(*phys)
            )
        )
    return report


def fix_directions(instructions, device, layout):
    """Reverse CNOTs that only exist the other way round

    A CNOT is reversed by conjugating both qubits with Hadamards. Illegal
    CNOTs are left in place.

    Parameters
    ----------
    instructions : [Instruction]
        Logical circuit instructions.
    device : DeviceModel
        The device to place them on.
    layout : [int]
        The physical qubit of every logical qubit.
    """
    fixed = []
    for inst in instructions:
        if inst.name == "CX" and device.category(
            *(layout[q] for q in inst.qubits)
        ) == REVERSIBLE:
            control, target = inst.qubits
            hads = [inst._replace(name="H", qubits=(q,)) for q in inst.qubits]
            fixed.extend(hads)
            fixed.append(inst._replace(qubits=(target, control)))
            fixed.extend(hads)
        else:
            fixed.append(inst)
    return fixed


def _angles(*angles):
    return "({})".format(",".join(utils.format_angle(a) for a in angles))


def _gate_lines(inst, qubit, convention):
    """QASM statements for one single qubit instruction"""
    name, params = inst.name, inst.params
    if name == "H":  # pylint: disable=no-else-return
        return ["h {};".format(qubit)]
    elif name == "X":
        return ["x {};".format(qubit)]
    elif name == "Z":
        return ["u1(pi) {};".format(qubit)]
    elif name == "Y":
        return ["u1(pi) {};".format(qubit), "x {};".format(qubit)]
    elif name == "I":
        return ["// id {}".format(qubit)]
    elif name == "RY":
        return ["u3{} {};".format(_angles(params[0], 0, 0), qubit)]
    elif name == "RX":
        sign = 1 if convention == "legacy" else -1
        return [
            "u3{} {};".format(
                _angles(params[0], sign * np.pi / 2, -sign * np.pi / 2), qubit
            )
        ]
    elif name in ("RZ", "U1"):
        return ["u1{} {};".format(_angles(*params), qubit)]
    else:
        return ["u3{} {};".format(_angles(*params), qubit)]


def _preparation(spec, qreg):
    """Gate based preparation of single pair specs, else None"""
    if len(spec.representatives) != 1:
        return None
    rep = spec.representatives[0]
    lines = ["x {};".format(qreg(0))] if spec.sign == -1 else []
    lines.append("h {};".format(qreg(0)))
    lines.extend(
        "cx {},{};".format(qreg(0), qreg(i)) for i in range(1, spec.num_qubits)
    )
    lines.extend(
        "x {};".format(qreg(i))
        for i in range(1, spec.num_qubits)
        if rep[i] != rep[0]
    )
    return lines


def emit_qasm(
    circuit, *, device=None, layout=None, register_size=None, convention="legacy"
):
    """Write a protocol circuit as OpenQASM 2.0

    Parameters
    ----------
    circuit : ProtocolCircuit
        The circuit to emit.
    device : DeviceModel, optional
        If given, qubits are placed with `layout`, CNOTs that only exist in
        the other direction are reversed, and illegal CNOTs are logged.
    layout : [int], optional
        Physical qubit of every logical qubit. Defaults to the identity.
    register_size : int, optional
        Size of the quantum register. Defaults to the device size if a device
        is given, else the circuit size.
    convention : {'legacy', 'exact'}, optional
        Encoding of X rotations. `legacy` writes `X_theta` as
        `u3(theta,pi/2,-pi/2)`, which is an X rotation by `-theta` and gives
        the same syndrome statistics, `exact` writes `u3(theta,-pi/2,pi/2)`.

    Returns
    -------
    program : QasmProgram
    """
    utils.check(
        convention in CONVENTIONS, "unknown convention {!r}", convention
    )
    instructions = circuit.instructions
    if device is None:
        utils.check(layout is None, "a layout needs a device")
        layout = list(range(circuit.num_qubits))
        default_size = circuit.num_qubits
    else:
        layout = check_layout(layout, circuit.num_qubits, device)
        default_size = device.num_qubits
        for row in check_legality(circuit, device, layout):
            if row.category == ILLEGAL:
                logging.warning(
                    "cx %d -> %d has no coupling on %s", *row.physical, device.name
                )
        instructions = fix_directions(instructions, device, layout)
    size = default_size if register_size is None else register_size
    utils.check(
        max(layout) < size,
        "circuit needs {:d} qubits but the register has {:d}",
        max(layout) + 1,
        size,
    )

    def qreg(qubit):
        return "q[{:d}]".format(layout[qubit])

    spec = circuit.spec
    width = spec.num_qubits
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "qreg q[{:d}];".format(size),
        "creg c[2];",
        "// data {}..{}, parity {}, syndromes {} {}".format(
            qreg(0),
            qreg(width - 1),
            qreg(circuit.parity_qubit),
            qreg(circuit.syndrome_a),
            qreg(circuit.syndrome_b),
        ),
        "// initial data amplitudes",
    ]
    amps = states.build_state(spec).amps
    lines.extend(
        "//   |{}> {:+.8f}".format(states.index_to_ket(i, width), amps[i].real)
        for i in np.flatnonzero(amps)
    )
    prep = _preparation(spec, qreg)
    if prep is None:
        lines.append("// no gate preparation, initialize the data qubits directly")
    else:
        lines.append("// preparation")
        lines.extend(prep)

    stage = None
    for inst in instructions:
        if inst.stage != stage:
            stage = inst.stage
            lines.append("// {}".format(stage))
        if inst.name == "CX":
            lines.append("cx {},{};".format(*map(qreg, inst.qubits)))
        else:
            lines.extend(_gate_lines(inst, qreg(inst.qubits[0]), convention))
    lines.append("measure {} -> c[0];".format(qreg(circuit.syndrome_a)))
    lines.append("measure {} -> c[1];".format(qreg(circuit.syndrome_b)))
    return QasmProgram("\n".join(lines) + "\n", size, 2)


_STATEMENT = re.compile(
    r"^(?P<name>[a-z][a-z0-9_]*)\s*(?:\((?P<params>[^)]*)\))?\s*(?P<args>.*);$"
)
_QUBIT = re.compile(r"^q\[(\d+)\]$")


def lint_qasm(text):
    """Structural problems of an emitted program

    Checks the header, a single quantum register and a two bit classical
    register declared before any gate, that only whitelisted gates are used
    on declared qubits, and that measurements come last.

    Returns
    -------
    problems : [str]
        Empty if the program passes.
    """
    problems = []
    statements = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("//", 1)[0].strip()
        if line:
            statements.append((lineno, line))
    if not statements or statements[0][1] != "OPENQASM 2.0;":
        problems.append("missing OPENQASM 2.0 header")
    if len(statements) < 2 or statements[1][1] != 'include "qelib1.inc";':
        problems.append("missing qelib1.inc include")

    size = None
    creg = False
    measuring = False
    for lineno, line in statements[2:]:
        match = _STATEMENT.match(line)
        if match is None:
            problems.append("line {:d}: can't parse {!r}".format(lineno, line))
            continue
        name, args = match["name"], match["args"]
        if name == "qreg":
            if size is not None:
                problems.append("line {:d}: second qreg".format(lineno))
            reg = re.match(r"^q\s*\[(\d+)\]$", args)
            if reg is None:
                problems.append("line {:d}: qreg must be named q".format(lineno))
            else:
                size = int(reg.group(1))
            continue
        if name == "creg":
            if creg:
                problems.append("line {:d}: second creg".format(lineno))
            if args.replace(" ", "") != "c[2]":
                problems.append("line {:d}: creg must be c[2]".format(lineno))
            creg = True
            continue
        if size is None or not creg:
            problems.append(
                "line {:d}: gate before register declarations".format(lineno)
            )
        if name not in QASM_GATES:
            problems.append("line {:d}: gate {} isn't allowed".format(lineno, name))
        if name == "measure":
            measuring = True
            qubits = [args.split("->")[0].strip()]
        else:
            if measuring:
                problems.append("line {:d}: gate after measurement".format(lineno))
            qubits = [a.strip() for a in args.split(",")]
        for qubit in qubits:
            found = _QUBIT.match(qubit)
            if found is None or (size is not None and int(found.group(1)) >= size):
                problems.append("line {:d}: bad qubit {!r}".format(lineno, qubit))
    if not measuring:
        problems.append("program never measures")
    return problems

"""Two syndrome error detection protocol

For a spec over `2n` data qubits the protocol circuit acts on `2n + 3`
qubits. Qubits `0` through `2n - 1` hold the complementarity state, qubit
`2n` is the appended parity qubit, and qubits `2n + 1` and `2n + 2` are the
two syndrome qubits `a` and `b`. The circuit has three stages:

1. extension: a CNOT from every data qubit onto the parity qubit.
2. error: the primitives of an optional single qubit error.
3. syndrome: a CNOT from every qubit `0..2n` onto syndrome `a`, then syndrome
   `b` is put in `|+>`, controls a CNOT onto every data qubit `0..2n-1`, and
   is rotated back with a second Hadamard.

Syndrome `a` measures the parity of the `2n + 1` qubit register, which is
always even before an error, and syndrome `b` measures the eigenvalue of
`X` on all data qubits, which is the sign of the spec. Outcomes are indexed
`2 * s_a + s_b`, so distributions are ordered `00, 01, 10, 11`.
"""
import collections
import enum
import functools
import logging
import multiprocessing

import numpy as np

from syndromelab import errors
from syndromelab import states
from syndromelab import statevector
from syndromelab import utils


DEFAULT_SHOTS = 8192

# Outcome order of the printed tables: {0,+}, {1,+}, {0,-}, {1,-}
TABLE_ORDER = (0, 2, 1, 3)
TABLE_LABELS = ("00", "10", "01", "11")

EXTENSION = "extension"
ERROR = "error"
SYNDROME = "syndrome"

Instruction = collections.namedtuple(
    "Instruction", ["name", "qubits", "params", "stage"]
)


class SyndromeOutcome(collections.namedtuple("SyndromeOutcome", ["s_a", "s_b"])):
    """Measured values of the two syndrome qubits"""

    __slots__ = ()

    @property
    def index(self):
        """Index into a distribution over the two syndromes"""
        return 2 * self.s_a + self.s_b

    @property
    def label(self):
        """Ket label with syndrome a first"""
        return "{:d}{:d}".format(self.s_a, self.s_b)


class ErrorClass(enum.Enum):
    """Type of error signalled by a syndrome outcome"""

    NO_ERROR = "NoError"
    BIT_FLIP = "BitFlip"
    PHASE_FLIP = "PhaseFlip"
    BOTH = "Both"


_CLASSES = {
    (0, 0): ErrorClass.NO_ERROR,
    (1, 0): ErrorClass.BIT_FLIP,
    (0, 1): ErrorClass.PHASE_FLIP,
    (1, 1): ErrorClass.BOTH,
}


class ProtocolCircuit(object):
    """The protocol circuit for one spec and optional error

    Parameters
    ----------
    spec : ComplementarySpec
        The valid spec of the data register.
    error : ErrorSpec or None
        The error inserted after the extension stage.
    instructions : (Instruction)
        The gates in application order.
    """

    def __init__(self, spec, error, instructions):
        self.spec = spec
        self.error = error
        self.instructions = tuple(instructions)

    @property
    def n(self):
        """Half the number of data qubits"""
        return self.spec.n

    @property
    def num_qubits(self):
        """Total number of qubits including parity and syndromes"""
        return 2 * self.n + 3

    @property
    def parity_qubit(self):
        """The appended qubit"""
        return 2 * self.n

    @property
    def syndrome_a(self):
        """Syndrome qubit detecting bit flips"""
        return 2 * self.n + 1

    @property
    def syndrome_b(self):
        """Syndrome qubit detecting phase flips"""
        return 2 * self.n + 2

    def stage(self, name):
        """Instructions of one stage"""
        return [inst for inst in self.instructions if inst.stage == name]

    @property
    def num_cnots(self):
        """Number of CNOT instructions"""
        return sum(inst.name == "CX" for inst in self.instructions)

    def __len__(self):
        return len(self.instructions)

    def __repr__(self):
        return "{}({!r}, {!r})".format(self.__class__.__name__, self.spec, self.error)


def _cx(control, target, stage):
    return Instruction("CX", (control, target), (), stage)


def build_circuit(spec, error=None):
    """Build the protocol circuit of a spec

    Parameters
    ----------
    spec : ComplementarySpec
        A valid spec.
    error : ErrorSpec, optional
        An error whose target must be a data or parity qubit, i.e. in
        `[0, 2n]`.
    """
    states.check_valid(spec)
    width = 2 * spec.n
    sa, sb = width + 1, width + 2
    insts = [_cx(i, width, EXTENSION) for i in range(width)]
    if error is not None:
        utils.check_index(
            0 <= error.target <= width,
            "error target {:d} must be in [0, {:d}]",
            error.target,
            width,
        )
        insts.extend(
            Instruction(p.kind, (error.target,), p.params, ERROR)
            for p in error.sequence
        )
    insts.extend(_cx(i, sa, SYNDROME) for i in range(width + 1))
    insts.append(Instruction("H", (sb,), (), SYNDROME))
    insts.extend(_cx(sb, i, SYNDROME) for i in range(width))
    insts.append(Instruction("H", (sb,), (), SYNDROME))
    circuit = ProtocolCircuit(spec, error, insts)
    logging.debug(
        "built protocol circuit over %d qubits with %d gates",
        circuit.num_qubits,
        len(circuit),
    )
    return circuit


def initial_state(circuit):
    """Spec state with the parity and syndrome qubits in |0>"""
    data = states.build_state(circuit.spec)
    amps = np.zeros(2 ** circuit.num_qubits, complex)
    amps[::8] = data.amps
    return statevector.StateVector(circuit.num_qubits, amps)


def apply_instruction_(state, inst):
    """Apply one circuit instruction to a state in place"""
    if inst.name == "CX":  # pylint: disable=no-else-return
        return state.apply_cnot_(*inst.qubits)
    elif inst.name == "H":
        return state.apply_1q_(statevector.H, *inst.qubits)
    else:
        gate = errors.matrix_of(errors.ErrorPrimitive(inst.name, inst.params))
        return state.apply_1q_(gate, *inst.qubits)


def run_state(circuit):
    """Final state of the full register after running a circuit"""
    state = initial_state(circuit)
    for inst in circuit.instructions:
        apply_instruction_(state, inst)
    return state


def extended_state(spec):
    """The `2n + 1` qubit state after the extension stage"""
    states.check_valid(spec)
    data = states.build_state(spec)
    width = spec.num_qubits
    amps = np.zeros(2 ** (width + 1), complex)
    amps[::2] = data.amps
    state = statevector.StateVector(width + 1, amps)
    for qubit in range(width):
        state.apply_cnot_(qubit, width)
    return state


def syndrome_distribution(circuit):
    """Exact distribution of the syndromes of a circuit"""
    return statevector.marginal_distribution(
        run_state(circuit), [circuit.syndrome_a, circuit.syndrome_b]
    )


def run_exact(spec, error=None):
    """Exact probability of each syndrome outcome

    Returns
    -------
    probs : ndarray
        Probabilities of outcomes `00, 01, 10, 11` where the first bit is
        syndrome `a`.
    """
    return syndrome_distribution(build_circuit(spec, error))


def run_shots(spec, error=None, shots=DEFAULT_SHOTS, seed=0):
    """Sampled counts of each syndrome outcome, ordered like `run_exact`"""
    return statevector.sample_distribution(run_exact(spec, error), shots, seed)


def outcome_of(index):
    """Syndrome outcome of a distribution index"""
    utils.check_index(0 <= index < 4, "outcome index {:d} out of range", index)
    return SyndromeOutcome(int(index) >> 1, int(index) & 1)


def _as_outcome(outcome):
    if isinstance(outcome, str):
        utils.check(
            len(outcome) == 2 and set(outcome) <= {"0", "1"},
            "invalid syndrome label {!r}",
            outcome,
        )
        outcome = (int(outcome[0]), int(outcome[1]))
    s_a, s_b = outcome
    utils.check(s_a in (0, 1) and s_b in (0, 1), "syndromes must be bits")
    return SyndromeOutcome(int(s_a), int(s_b))


def classify(outcome, baseline=None):
    """Type of error signalled by a syndrome outcome

    Parameters
    ----------
    outcome : SyndromeOutcome or (int, int) or str
        The measured syndromes, syndrome `a` first, e.g. `"10"`.
    baseline : SyndromeOutcome or (int, int) or str, optional
        The outcome measured without any error. Specs with a negative sign
        have baseline `01`, and outcomes are read relative to it. Defaults to
        `00`.
    """
    outcome = _as_outcome(outcome)
    if baseline is not None:
        baseline = _as_outcome(baseline)
        outcome = SyndromeOutcome(
            outcome.s_a ^ baseline.s_a, outcome.s_b ^ baseline.s_b
        )
    return _CLASSES[tuple(outcome)]


def modal_outcome(dist):
    """The most likely outcome of a distribution"""
    dist = np.asarray(dist)
    utils.check(dist.shape == (4,), "distribution must have four outcomes")
    return outcome_of(int(dist.argmax()))


def classify_distribution(dist, baseline=None):
    """Classification of the modal outcome of a distribution"""
    return classify(modal_outcome(dist), baseline)


def no_error_baseline(spec):
    """Outcome of the error free protocol on a spec"""
    return modal_outcome(run_exact(spec))


def nondemolition_fidelity(spec):
    """Fidelity of the error free output with the extended input

    The syndromes of an error free run end in a basis state, so the final
    register is the extended data state next to that basis state exactly when
    the protocol leaves the data untouched.
    """
    final = run_state(build_circuit(spec)).amps.reshape(-1, 4)
    ext = extended_state(spec).amps
    return max(abs(np.vdot(ext, final[:, col])) ** 2 for col in range(4))


def to_table(dist):
    """Reorder an outcome distribution into table columns"""
    return np.asarray(dist)[list(TABLE_ORDER)]


_AXES = {"X": errors.rx, "Y": errors.ry, "Z": errors.rz}


def axis_error(axis, theta, target=0):
    """Rotation error about one axis"""
    axis = axis.upper()
    utils.check(axis in _AXES, "axis must be one of X, Y, Z not {!r}", axis)
    return errors.error_spec([_AXES[axis](theta)], target)


def _point_seed(seed, index):
    return np.random.SeedSequence([seed, index])


def _distribution(spec, error, mode, shots, seed):
    if mode == "exact":  # pylint: disable=no-else-return
        return run_exact(spec, error)
    else:
        return run_shots(spec, error, shots, seed) / shots


def _check_mode(mode, shots, seed):
    utils.check(
        mode in ("exact", "shots"), "mode must be exact or shots not {!r}", mode
    )
    utils.check(shots >= 1, "must take at least one shot")
    utils.check(seed >= 0, "seed must be nonnegative")


def _sweep_point(spec, axis, target, mode, shots, seed, indexed):
    index, theta = indexed
    dist = _distribution(
        spec, axis_error(axis, theta, target), mode, shots, _point_seed(seed, index)
    )
    return np.concatenate([[theta], to_table(dist)])


def _map(function, items, processes):
    if processes == 1:
        return [function(item) for item in items]
    chunksize = max(len(items) // (4 * (processes or multiprocessing.cpu_count())), 1)
    with multiprocessing.Pool(processes) as pool:
        return list(pool.imap(function, items, chunksize=chunksize))


def sweep(
    spec,
    axis,
    thetas,
    target=0,
    *,
    mode="exact",
    shots=DEFAULT_SHOTS,
    seed=0,
    processes=1,
):
    """Syndrome probabilities of a rotation error over a range of angles

    Parameters
    ----------
    spec : ComplementarySpec
        The valid spec to protect.
    axis : {'X', 'Y', 'Z'}
        The rotation axis of the error.
    thetas : [float]
        Rotation angles in radians.
    target : int, optional
        The qubit the error acts on, in `[0, 2n]`.
    mode : {'exact', 'shots'}, optional
        Whether to report exact probabilities or sampled frequencies.
    shots : int, optional
        Number of shots per angle in shots mode.
    seed : int, optional
        Master seed. Angle `i` is sampled with `SeedSequence([seed, i])`, so
        results don't depend on `processes`.
    processes : int, optional
        Number of processes to evaluate angles with. `None` uses every core.

    Returns
    -------
    rows : ndarray
        One row per angle: the angle followed by the probabilities of
        outcomes `00, 10, 01, 11`.
    """
    _check_mode(mode, shots, seed)
    thetas = [float(t) for t in thetas]
    utils.check(thetas, "sweep needs at least one angle")
    build_circuit(spec, axis_error(axis, 0.0, target))
    logging.info(
        "sweeping %s rotations on qubit %d over %d angles in %s mode",
        axis.upper(),
        target,
        len(thetas),
        mode,
    )
    rows = _map(
        functools.partial(_sweep_point, spec, axis, target, mode, shots, seed),
        list(enumerate(thetas)),
        processes,
    )
    return np.array(rows).reshape(len(thetas), 5)


def suite(spec, target=0, *, mode="exact", shots=DEFAULT_SHOTS, seed=0):
    """Syndrome probabilities of the eight named errors

    Returns
    -------
    names : [str]
        The name of every error.
    table : ndarray
        One row per error with the probabilities of outcomes `00, 10, 01,
        11`.
    """
    _check_mode(mode, shots, seed)
    suite_errors = errors.named_error_suite(target)
    table = np.empty((len(suite_errors), 4))
    for index, error in enumerate(suite_errors):
        table[index] = to_table(
            _distribution(spec, error, mode, shots, _point_seed(seed, index))
        )
    return [errors.error_name(err) for err in suite_errors], table

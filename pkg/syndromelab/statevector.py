"""Dense statevector engine

A state over `m` qubits is an array of `2 ** m` complex amplitudes. Qubit 0 is
the leftmost character of a ket string and the most significant bit of an
amplitude index, so index `b` holds bit `m - 1 - q` for qubit `q`. Reshaping
the amplitudes to `(2,) * m` therefore puts qubit `q` on axis `q`, which is
how every kernel here addresses qubits.

Gate kernels mutate a state in place through the trailing underscore methods
on `StateVector`. The module level functions with the same names return new
states and leave their input alone.
"""
import numpy as np

from syndromelab import utils


MAX_QUBITS = 26
MAX_MARGINAL_QUBITS = 16
UNITARY_TOL = 1e-12

I = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], complex)
Y = np.array([[0, -1j], [1j, 0]], complex)
Z = np.array([[1, 0], [0, -1]], complex)
H = np.array([[1, 1], [1, -1]], complex) / np.sqrt(2)
for _gate in (I, X, Y, Z, H):
    _gate.setflags(write=False)


class StateVector(object):
    """A pure state of a qubit register

    Parameters
    ----------
    num_qubits : int
        The number of qubits in the register.
    amps : ndarray
        Contiguous complex array of length `2 ** num_qubits`. It is owned by
        the new object and mutated by the in place kernels.
    """

    def __init__(self, num_qubits, amps):
        self.num_qubits = num_qubits
        self.amps = amps

    def copy(self):
        """Return an independent copy of this state"""
        return StateVector(self.num_qubits, self.amps.copy())

    def _check_qubit(self, qubit):
        utils.check_index(
            0 <= qubit < self.num_qubits,
            "qubit {:d} out of range for {:d} qubits",
            qubit,
            self.num_qubits,
        )

    def apply_1q_(self, gate, qubit):
        """Apply a single qubit gate to `qubit` in place and return self"""
        self._check_qubit(qubit)
        gate = check_unitary(gate)
        view = self.amps.reshape(2 ** qubit, 2, -1)
        zero = view[:, 0].copy()
        one = view[:, 1]
        view[:, 0] = gate[0, 0] * zero + gate[0, 1] * one
        view[:, 1] = gate[1, 0] * zero + gate[1, 1] * one
        return self

    def apply_cnot_(self, control, target):
        """Apply a CNOT in place and return self"""
        self._check_qubit(control)
        self._check_qubit(target)
        utils.check_index(
            control != target, "control and target must differ: {:d}", control
        )
        tensor = self.amps.reshape((2,) * self.num_qubits)
        zero = [slice(None)] * self.num_qubits
        zero[control] = 1
        zero[target] = 0
        one = list(zero)
        one[target] = 1
        zero, one = tuple(zero), tuple(one)
        flipped = tensor[zero].copy()
        tensor[zero] = tensor[one]
        tensor[one] = flipped
        return self

    def probabilities(self):
        """Probability of every computational basis state"""
        return np.abs(self.amps) ** 2

    def __eq__(self, other):
        return (
            isinstance(other, StateVector)
            and self.num_qubits == other.num_qubits
            and np.allclose(self.amps, other.amps, rtol=0, atol=UNITARY_TOL)
        )

    def __repr__(self):
        return "{}({:d})".format(self.__class__.__name__, self.num_qubits)


def check_unitary(gate):
    """Return gate as a 2x2 complex array, raising if it isn't unitary"""
    gate = np.asarray(gate, complex)
    utils.check(gate.shape == (2, 2), "gate must be 2x2 not {}", gate.shape)
    utils.check(np.all(np.isfinite(gate)), "gate entries must be finite")
    err = np.abs(gate.conj().T.dot(gate) - I).max()
    utils.check(err <= UNITARY_TOL, "gate is not unitary (error {:g})", err)
    return gate


def _check_size(num_qubits):
    utils.check(
        1 <= num_qubits <= MAX_QUBITS,
        "number of qubits must be in [1, {:d}] not {:d}",
        MAX_QUBITS,
        num_qubits,
    )


def zero_state(num_qubits):
    """The all zero state of `num_qubits` qubits"""
    _check_size(num_qubits)
    amps = np.zeros(2 ** num_qubits, complex)
    amps[0] = 1
    return StateVector(num_qubits, amps)


def from_amplitudes(num_qubits, amps):
    """Create a state from amplitudes, normalizing them to unit length

    Parameters
    ----------
    num_qubits : int
        The number of qubits.
    amps : array_like
        Array of `2 ** num_qubits` finite complex amplitudes, not all zero.
    """
    _check_size(num_qubits)
    amps = np.array(amps, complex).ravel()
    utils.check(
        amps.size == 2 ** num_qubits,
        "need {:d} amplitudes for {:d} qubits, got {:d}",
        2 ** num_qubits,
        num_qubits,
        amps.size,
    )
    utils.check(np.all(np.isfinite(amps)), "amplitudes must be finite")
    length = np.linalg.norm(amps)
    utils.check(length > 0, "can't normalize the zero vector")
    return StateVector(num_qubits, amps / length)


def basis_state(bits):
    """Computational basis state of a ket string like `"0110"`"""
    utils.check(bits and set(bits) <= {"0", "1"}, "invalid ket string {!r}", bits)
    state = zero_state(len(bits))
    state.amps[0] = 0
    state.amps[int(bits, 2)] = 1
    return state


def tensor(first, second):
    """Product state with `first` on the leading qubits"""
    num_qubits = first.num_qubits + second.num_qubits
    _check_size(num_qubits)
    return StateVector(num_qubits, np.kron(first.amps, second.amps))


def apply_1q(state, gate, qubit):
    """Return a new state with `gate` applied to `qubit`"""
    return state.copy().apply_1q_(gate, qubit)


def apply_cnot(state, control, target):
    """Return a new state with a CNOT from `control` onto `target`"""
    return state.copy().apply_cnot_(control, target)


def norm(state):
    """The L2 norm of a state"""
    return np.linalg.norm(state.amps)


def marginal_distribution(state, qubits):
    """Probability of each outcome of measuring `qubits`

    Parameters
    ----------
    state : StateVector
        The state to measure.
    qubits : [int]
        Distinct qubits to measure. The first listed qubit is the most
        significant bit of the outcome index.

    Returns
    -------
    probs : ndarray
        Array of `2 ** len(qubits)` probabilities.
    """
    qubits = [int(q) for q in qubits]
    utils.check(
        1 <= len(qubits) <= MAX_MARGINAL_QUBITS,
        "can measure between 1 and {:d} qubits",
        MAX_MARGINAL_QUBITS,
    )
    utils.check_index(len(set(qubits)) == len(qubits), "duplicate qubits {}", qubits)
    for qubit in qubits:
        state._check_qubit(qubit)  # pylint: disable=protected-access
    probs = state.probabilities().reshape((2,) * state.num_qubits)
    others = tuple(q for q in range(state.num_qubits) if q not in qubits)
    marginal = probs.sum(others)
    kept = sorted(qubits)
    return marginal.transpose([kept.index(q) for q in qubits]).ravel()


def sample_distribution(probs, shots, seed):
    """Draw `shots` outcomes from a probability table

    Sampling inverts the cumulative distribution of `probs` with uniform
    draws from numpy's PCG64 generator seeded by `seed`, so identical seeds
    give identical counts.

    Parameters
    ----------
    probs : ndarray
        Nonnegative probabilities summing to one.
    shots : int
        Number of draws, at least one.
    seed : int or SeedSequence
        Seed for the generator.

    Returns
    -------
    counts : ndarray
        Integer counts per outcome, summing to `shots`.
    """
    utils.check(shots >= 1, "must take at least one shot")
    probs = np.asarray(probs, float)
    cdf = np.cumsum(probs)
    utils.check(cdf[-1] > 0, "probabilities must not all be zero")
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(shots), side="right")
    return np.bincount(np.minimum(draws, probs.size - 1), minlength=probs.size)


def sample_counts(state, qubits, shots, seed):
    """Simulate `shots` measurements of `qubits`"""
    return sample_distribution(marginal_distribution(state, qubits), shots, seed)


def inner_product(first, second):
    """<first|second>, conjugating `first`"""
    utils.check(
        first.num_qubits == second.num_qubits,
        "states have different sizes: {:d} and {:d}",
        first.num_qubits,
        second.num_qubits,
    )
    return complex(np.vdot(first.amps, second.amps))


def fidelity(first, second):
    """|<first|second>|^2"""
    return abs(inner_product(first, second)) ** 2


def single_qubit_purity(state, qubit):
    """Purity Tr(rho^2) of the reduced state of one qubit

    This is 1 exactly when `qubit` is in a product state with the rest of the
    register and 1/2 when it is maximally mixed.
    """
    state._check_qubit(qubit)  # pylint: disable=protected-access
    rows = np.moveaxis(state.amps.reshape((2,) * state.num_qubits), qubit, 0)
    rows = rows.reshape(2, -1)
    rho = rows.dot(rows.conj().T)
    return float(np.sum(np.abs(rho) ** 2))

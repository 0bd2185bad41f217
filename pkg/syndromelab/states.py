"""States with the complementarity property

A spec lists one representative ket per complementary pair together with a
global sign. The state it describes is the uniform superposition

    (1 / sqrt(2k)) * sum_r (|r> + sign * |~r>)

over its `k` representatives `r`, where `~r` flips every bit of `r`. Listing
only representatives makes repeated terms impossible to express, and the
remaining structural constraints are reported by `validate_spec`.
"""
import collections
from collections import abc
import enum
import itertools

import numpy as np

from syndromelab import statevector
from syndromelab import utils


Violation = collections.namedtuple("Violation", ["kind", "detail"])


class ParityClass(enum.Enum):
    """Parity of the number of ones over every ket of a spec"""

    ALL_EVEN = "AllEven"
    ALL_ODD = "AllOdd"
    MIXED = "Mixed"


def complement_of(ket):
    """Flip every bit of a ket string"""
    return ket.translate(_FLIP)


_FLIP = str.maketrans("01", "10")


def ket_to_index(ket):
    """Amplitude index of a ket string, qubit 0 most significant"""
    return int(ket, 2)


def index_to_ket(index, width):
    """Ket string of an amplitude index"""
    return "{:0{:d}b}".format(index, width)


def _parse_sign(sign):
    """Returns a sign in {1, -1} or None if it's invalid"""
    if isinstance(sign, str):
        return {"+": 1, "-": -1}.get(sign.strip())
    if sign in (1, -1):
        return int(sign)
    return None


class ComplementarySpec(object):
    """A member of the complementarity state family

    Construction never fails for well typed input; structural problems are
    left for `validate_spec` so that they can all be reported at once.

    Parameters
    ----------
    n : int
        Half the number of qubits.
    representatives : [str]
        One ket string of length `2 * n` per complementary pair. Order is kept
        for reporting, but doesn't affect the state.
    sign : str or int or [str or int]
        The global sign `+`/`-` (or `1`/`-1`). A list of per representative
        signs is accepted if they all agree.
    """

    def __init__(self, n, representatives, sign=1):
        self.n = int(n)
        self.representatives = tuple(str(r) for r in representatives)
        if isinstance(sign, (list, tuple)):
            signs = {_parse_sign(s) for s in sign}
            self.sign = signs.pop() if len(signs) == 1 else None
            self._raw_sign = tuple(sign)
        else:
            self.sign = _parse_sign(sign)
            self._raw_sign = sign

    @property
    def num_qubits(self):
        """Number of qubits of the state"""
        return 2 * self.n

    def to_json(self):
        """Json representation of the spec"""
        return {
            "n": self.n,
            "representatives": list(self.representatives),
            "sign": "+" if self.sign == 1 else "-",
        }

    def __eq__(self, other):
        return (
            isinstance(other, ComplementarySpec)
            and self.n == other.n
            and self.sign == other.sign
            and frozenset(self.representatives) == frozenset(other.representatives)
        )

    def __hash__(self):
        return hash((self.n, self.sign, frozenset(self.representatives)))

    def __repr__(self):
        return "{}({:d}, {}, {:+d})".format(
            self.__class__.__name__, self.n, list(self.representatives), self.sign or 0
        )


def spec_json(obj):
    """Read a spec from its json representation"""
    utils.check(isinstance(obj, abc.Mapping), "spec json must be an object")
    utils.check("representatives" in obj, "spec json needs representatives")
    reps = obj["representatives"]
    utils.check(
        not isinstance(reps, str) and all(isinstance(r, str) for r in reps),
        "representatives must be a list of bit strings",
    )
    num = obj.get("n")
    if num is None:
        utils.check(reps, "n is required when there are no representatives")
        num = len(reps[0]) // 2
    return ComplementarySpec(num, reps, obj.get("sign", "+"))


def validate_spec(spec):
    """Find every violation of the complementarity invariants

    Returns
    -------
    violations : [Violation]
        Empty if the spec is valid.
    """
    violations = []
    width = 2 * spec.n
    if spec.n < 1:
        violations.append(Violation("length", "n must be at least 1"))
    if spec.sign is None:
        violations.append(
            Violation(
                "sign",
                "sign must be one of +, - not {!r}".format(
                    spec._raw_sign  # pylint: disable=protected-access
                ),
            )
        )
    if not spec.representatives:
        violations.append(Violation("empty", "no representatives"))

    valid = []
    for rep in spec.representatives:
        if not rep or not set(rep) <= {"0", "1"}:
            violations.append(
                Violation("bad-ket", "{!r} isn't a bit string".format(rep))
            )
        elif len(rep) != width:
            violations.append(
                Violation(
                    "length",
                    "{!r} has length {:d}, expected {:d}".format(rep, len(rep), width),
                )
            )
        else:
            valid.append(rep)

    counts = collections.Counter(valid)
    for rep, count in sorted(counts.items()):
        if count > 1:
            violations.append(
                Violation("duplicate", "{} appears {:d} times".format(rep, count))
            )
    for rep in sorted(counts):
        comp = complement_of(rep)
        if rep < comp and comp in counts:
            violations.append(
                Violation("complement", "{} and its complement {}".format(rep, comp))
            )

    pairs = {min(r, complement_of(r)) for r in valid}
    if spec.n >= 1 and len(pairs) == 2 ** (width - 1):
        violations.append(Violation("full", "pairs cover every ket"))
    return violations


def is_valid(spec):
    """True if the spec has no violations"""
    return not validate_spec(spec)


def check_valid(spec):
    """Raise a ValueError listing every violation of an invalid spec"""
    violations = validate_spec(spec)
    utils.check(
        not violations,
        "invalid spec: {}",
        "; ".join("{}: {}".format(v.kind, v.detail) for v in violations),
    )


def closure(spec):
    """Every ket of the state, representatives then complements"""
    return spec.representatives + tuple(complement_of(r) for r in spec.representatives)


def build_state(spec):
    """The state described by a valid spec"""
    check_valid(spec)
    reps = np.fromiter(
        (ket_to_index(r) for r in spec.representatives), int, len(spec.representatives)
    )
    mask = 2 ** spec.num_qubits - 1
    amps = np.zeros(2 ** spec.num_qubits, complex)
    amps[reps] = 1
    amps[reps ^ mask] = spec.sign
    return statevector.from_amplitudes(spec.num_qubits, amps)


def concurrence(state):
    """Pure state concurrence |<s| Y^{(x)m} |s*>|

    Parameters
    ----------
    state : StateVector
        A state with an even number of qubits.

    Notes
    -----
    For a complementarity state with representatives `R` this reduces to
    `|#even(R) - #odd(R)| / |R|`, so it vanishes whenever both parities occur
    equally often even though such states are entangled.
    """
    utils.check(
        state.num_qubits % 2 == 0,
        "concurrence needs an even number of qubits, got {:d}",
        state.num_qubits,
    )
    flipped = statevector.StateVector(state.num_qubits, state.amps.conj())
    for qubit in range(state.num_qubits):
        flipped.apply_1q_(statevector.Y, qubit)
    return abs(statevector.inner_product(state, flipped))


def is_fully_separable(state, *, tol=1e-12):
    """True if every qubit is unentangled with the rest of the register"""
    return all(
        statevector.single_qubit_purity(state, q) >= 1 - tol
        for q in range(state.num_qubits)
    )


def parity_class(spec):
    """Parity class of the kets of a spec

    Complementing a ket of even length keeps the parity of its number of ones,
    so the representatives decide the class.
    """
    check_valid(spec)
    parities = {r.count("1") % 2 for r in spec.representatives}
    if parities == {0}:  # pylint: disable=no-else-return
        return ParityClass.ALL_EVEN
    elif parities == {1}:
        return ParityClass.ALL_ODD
    else:
        return ParityClass.MIXED


def ancilla_is_entangling(spec):
    """True if the parity qubit added by the protocol becomes entangled"""
    return parity_class(spec) is ParityClass.MIXED


def pair_representatives(n):
    """Canonical representative of every complementary pair of 2n bits

    The canonical representative is the member starting with `0`.
    """
    return [
        "0" + "".join(bits) for bits in itertools.product("01", repeat=2 * n - 1)
    ]

"""Single qubit error library

Errors are ordered lists of primitives applied to one qubit, the first
primitive acting first in time. Rotations use the half angle convention
`R_a(theta) = cos(theta / 2) I - i sin(theta / 2) sigma_a`.

Error strings for the command line are comma separated primitives, e.g.
`X:pi/3,Y:2pi/3`. A name followed by one angle is a rotation about that axis
(`X`, `Y`, `Z`, or explicitly `RX`, `RY`, `RZ`), a bare `X`, `Y`, `Z`, `H`
or `I` is the named gate, `R` is `Y:pi/2,X:pi/2`, `U1:lam` is the phase gate
and `U3:theta:phi:lam` the general rotation. Angles are decimals or
multiples of pi such as `pi`, `-2pi/3`, `2*pi/3` or `pi/15`.
"""
import collections
import math
import re

import numpy as np

from syndromelab import statevector
from syndromelab import utils


ErrorPrimitive = collections.namedtuple("ErrorPrimitive", ["kind", "params"])
ErrorSpec = collections.namedtuple(
    "ErrorSpec", ["sequence", "target", "label"], defaults=(0, None)
)

ARITY = {
    "RX": 1,
    "RY": 1,
    "RZ": 1,
    "U1": 1,
    "U3": 3,
    "X": 0,
    "Y": 0,
    "Z": 0,
    "H": 0,
    "I": 0,
}
_NAMED = {
    "X": statevector.X,
    "Y": statevector.Y,
    "Z": statevector.Z,
    "H": statevector.H,
    "I": statevector.I,
}
_PAULIS = (statevector.I, statevector.X, statevector.Y, statevector.Z)
_ANGLE = re.compile(
    r"^(?P<sign>[+-]?)(?P<coef>\d+(?:\.\d*)?|\.\d+)?(?P<star>\*)?(?P<pi>pi)?"
    r"(?:/(?P<den>\d+(?:\.\d*)?))?$"
)


def primitive(kind, *params):
    """Create a validated error primitive"""
    kind = kind.upper()
    utils.check(kind in ARITY, "unknown error primitive {!r}", kind)
    utils.check(
        len(params) == ARITY[kind],
        "{} takes {:d} angles, got {:d}",
        kind,
        ARITY[kind],
        len(params),
    )
    params = tuple(float(p) for p in params)
    utils.check(all(map(math.isfinite, params)), "angles must be finite")
    return ErrorPrimitive(kind, params)


def rx(theta):
    """X rotation"""
    return primitive("RX", theta)


def ry(theta):
    """Y rotation"""
    return primitive("RY", theta)


def rz(theta):
    """Z rotation"""
    return primitive("RZ", theta)


def error_spec(sequence, target=0, label=None):
    """Create a validated error spec"""
    sequence = tuple(sequence)
    utils.check(sequence, "error sequence can't be empty")
    for prim in sequence:
        primitive(prim.kind, *prim.params)
    utils.check_index(target >= 0, "error target must be nonnegative")
    return ErrorSpec(sequence, int(target), label)


def u3(theta, phi, lam):
    """The general single qubit rotation U3(theta, phi, lambda)"""
    cos, sin = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [
            [cos, -np.exp(1j * lam) * sin],
            [np.exp(1j * phi) * sin, np.exp(1j * (phi + lam)) * cos],
        ]
    )


def _rotation(pauli, theta):
    return math.cos(theta / 2) * statevector.I - 1j * math.sin(theta / 2) * pauli


def matrix_of(prim):
    """The 2x2 unitary of an error primitive"""
    prim = primitive(prim.kind, *prim.params)
    if prim.kind == "RX":  # pylint: disable=no-else-return
        return _rotation(statevector.X, *prim.params)
    elif prim.kind == "RY":
        return _rotation(statevector.Y, *prim.params)
    elif prim.kind == "RZ":
        return _rotation(statevector.Z, *prim.params)
    elif prim.kind == "U1":
        return np.diag([1, np.exp(1j * prim.params[0])])
    elif prim.kind == "U3":
        return u3(*prim.params)
    else:
        return _NAMED[prim.kind].copy()


def compose(spec):
    """Unitary of a whole error, applying its primitives in order"""
    utils.check(spec.sequence, "error sequence can't be empty")
    gate = statevector.I
    for prim in spec.sequence:
        gate = matrix_of(prim).dot(gate)
    return statevector.check_unitary(gate)


def pauli_weights(gate):
    """Weight of I, X, Y and Z in the Pauli expansion of a unitary

    Returns
    -------
    weights : ndarray
        `|Tr(P^dagger g) / 2|^2` for `P` in I, X, Y, Z. These sum to one and
        are the exact probabilities of no error, bit flip, both and phase
        flip under the detection protocol.
    """
    gate = statevector.check_unitary(gate)
    return np.array([abs(np.trace(p.conj().T.dot(gate)) / 2) ** 2 for p in _PAULIS])


def syndrome_prediction(gate):
    """Predicted syndrome distribution over outcomes 00, 01, 10, 11"""
    w_i, w_x, w_y, w_z = pauli_weights(gate)
    return np.array([w_i, w_z, w_x, w_y])


def named_error_suite(target=0):
    """The eight composite errors of the arbitrary error experiment"""
    third, two_thirds, half = math.pi / 3, 2 * math.pi / 3, math.pi / 2
    suite = [
        ("Y_{pi/3}", [ry(third)]),
        ("X_{pi/3}", [rx(third)]),
        ("X_{pi/3}Y_{pi/3}", [rx(third), ry(third)]),
        ("X_{pi/3}Y_{2pi/3}", [rx(third), ry(two_thirds)]),
        ("X_{2pi/3}Y_{pi/3}", [rx(two_thirds), ry(third)]),
        ("X_{2pi/3}Y_{2pi/3}", [rx(two_thirds), ry(two_thirds)]),
        ("R", [ry(half), rx(half)]),
        ("H", [primitive("H")]),
    ]
    return [error_spec(seq, target, label) for label, seq in suite]


def _short_angle(angle):
    return utils.format_angle(angle).replace("*", "")


def error_name(spec):
    """Human readable name of an error, e.g. `X_{pi/3}Y_{2pi/3}`"""
    if spec.label is not None:
        return spec.label
    parts = []
    for prim in spec.sequence:
        if prim.kind in ("RX", "RY", "RZ"):
            parts.append("{}_{{{}}}".format(prim.kind[1], _short_angle(*prim.params)))
        elif prim.params:
            parts.append(
                "{}({})".format(prim.kind, ",".join(map(_short_angle, prim.params)))
            )
        else:
            parts.append(prim.kind)
    return "".join(parts)


def parse_angle(text):
    """Parse an angle in radians like `2pi/3`, `-pi` or `0.5`"""
    text = text.strip().lower().replace(" ", "")
    try:
        value = float(text)
    except ValueError:
        match = _ANGLE.match(text)
        utils.check(
            match is not None and (match["coef"] or match["pi"]),
            "invalid angle {!r}",
            text,
        )
        utils.check(
            not match["star"] or (match["coef"] and match["pi"]),
            "invalid angle {!r}",
            text,
        )
        value = float(match["coef"]) if match["coef"] else 1.0
        if match["pi"]:
            value *= math.pi
        if match["den"]:
            den = float(match["den"])
            utils.check(den != 0, "angle {!r} divides by zero", text)
            value /= den
        if match["sign"] == "-":
            value = -value
    utils.check(math.isfinite(value), "angle must be finite not {!r}", text)
    return value


def _parse_term(term):
    name, *angles = (t.strip() for t in term.split(":"))
    name = name.upper()
    angles = [parse_angle(a) for a in angles]
    if name == "R":
        utils.check(not angles, "R takes no angles")
        return [ry(math.pi / 2), rx(math.pi / 2)]
    if name in ("X", "Y", "Z") and angles:
        name = "R" + name
    return [primitive(name, *angles)]


def parse_error(text, target=0):
    """Parse an error string into an ErrorSpec"""
    utils.check(text and text.strip(), "error string can't be empty")
    sequence = []
    for term in text.split(","):
        utils.check(term.strip(), "empty term in error {!r}", text)
        sequence.extend(_parse_term(term))
    return error_spec(sequence, target)

"""Module for generating complementarity specs"""
import itertools

import numpy as np

from syndromelab import states
from syndromelab import utils


# Seed used by the test suite and the profiler for random specs
DEFAULT_SEED = 20180611


def bell(sign=1):
    """Bell state (|00> + sign |11>) / sqrt(2)"""
    return states.ComplementarySpec(1, ["00"], sign)


def psi(sign=1):
    """Bell state (|01> + sign |10>) / sqrt(2)"""
    return states.ComplementarySpec(1, ["01"], sign)


def ghz(num_qubits, sign=1):
    """GHZ state over an even number of qubits"""
    utils.check(
        num_qubits >= 2 and num_qubits % 2 == 0,
        "ghz states need an even number of qubits, not {:d}",
        num_qubits,
    )
    return states.ComplementarySpec(num_qubits // 2, ["0" * num_qubits], sign)


def example4():
    """The six term four qubit state with mixed parity"""
    return states.ComplementarySpec(2, ["0000", "1010", "0111"])


def paper13():
    """Twelve qubit GHZ type spec for the thirteen qubit protocol state"""
    return ghz(12)


def paper13_mixed():
    """Twelve qubit spec whose parity qubit becomes entangled"""
    return states.ComplementarySpec(6, ["0" * 12, "0" * 11 + "1"])


def _parity_pairs(n, parity):
    pairs = states.pair_representatives(n)
    if parity == "even":  # pylint: disable=no-else-return
        return [p for p in pairs if p.count("1") % 2 == 0]
    elif parity == "odd":
        return [p for p in pairs if p.count("1") % 2 == 1]
    utils.check(parity in (None, "mixed"), "unknown parity {!r}", parity)
    return pairs


def random_spec(n, *, sign=1, parity=None, rng=None):
    """Uniformly random valid spec over 2n qubits

    Every complementary pair is kept with probability one half, redrawing
    until the kept pairs form a nonempty proper subset (and match `parity` if
    given). Each kept pair is then represented by a random member.

    Parameters
    ----------
    n : int
        Half the number of qubits.
    sign : int, optional
        The global sign of the spec.
    parity : {None, 'even', 'odd', 'mixed'}, optional
        Restrict the parity class of the result.
    rng : Generator, optional
        Numpy generator to draw from. Defaults to one seeded with
        `DEFAULT_SEED`.
    """
    utils.check(n >= 1, "n must be at least 1")
    utils.check(not (n == 1 and parity == "mixed"), "n = 1 has no mixed specs")
    if rng is None:
        rng = np.random.default_rng(DEFAULT_SEED)
    pairs = np.array(_parity_pairs(n, parity))
    total = 2 ** (2 * n - 1)
    while True:
        keep = pairs[rng.random(pairs.size) < 0.5]
        if not 0 < keep.size < total:
            continue
        if parity == "mixed" and len({k.count("1") % 2 for k in keep}) < 2:
            continue
        break
    flip = rng.random(keep.size) < 0.5
    reps = [states.complement_of(k) if f else k for k, f in zip(keep, flip)]
    return states.ComplementarySpec(n, reps, sign)


def random_specs(n, num, *, seed=DEFAULT_SEED, **kwargs):
    """Generator of `num` random specs drawn from one seeded generator"""
    rng = np.random.default_rng(seed)
    for _ in range(num):
        yield random_spec(n, rng=rng, **kwargs)


def all_specs(n, sign=1):
    """Every valid spec over 2n qubits using canonical representatives"""
    pairs = states.pair_representatives(n)
    for size in range(1, len(pairs)):
        for reps in itertools.combinations(pairs, size):
            yield states.ComplementarySpec(n, reps, sign)

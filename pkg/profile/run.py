"""This file profiles protocol sweeps

Every case times a full theta sweep, a single exact run and qasm emission for
a random spec, and prints one json object per case. Pipe the output into
`display.py` to write the `profile_sweeps` documentation page.
"""
import argparse
import json
import logging
import sys
import time

from syndromelab import device
from syndromelab import errors
from syndromelab import protocol
from syndromelab import scriptutils
from syndromelab import specgen


def _timed(func, *args, **kwargs):
    start = time.time()
    func(*args, **kwargs)
    return time.time() - start


def gen_cases(num, max_n):
    """Random specs for every size"""
    for n in range(1, max_n + 1):
        for spec in specgen.random_specs(n, num, seed=n):
            yield n, spec


def process_case(spec, mode, processes):
    """Time the protocol on one spec"""
    thetas = scriptutils.default_grid()
    error = errors.named_error_suite()[5]
    circuit = protocol.build_circuit(spec, error)
    return {
        "sweep": _timed(
            protocol.sweep,
            spec,
            "Y",
            thetas,
            mode=mode,
            seed=0,
            processes=processes,
        ),
        "run": _timed(protocol.run_exact, spec, error),
        "qasm": _timed(device.emit_qasm, circuit),
        "points": len(thetas),
        "count": 1,
    }


def profile(num, max_n, processes):
    """Compute profiling information"""
    for n, spec in gen_cases(num, max_n):
        for mode in ["exact", "shots"]:
            logging.warning("profiling %s sweep with n = %d", mode, n)
            result = process_case(spec, mode, processes)
            json.dump({"n": n, "mode": mode, "times": result}, sys.stdout)
            sys.stdout.write("\n")


def main(*argv):
    """Run profiling"""
    parser = argparse.ArgumentParser(
        description="""Time protocol sweeps for every spec size and print
        json lines for display.py."""
    )
    parser.add_argument(
        "num",
        nargs="?",
        metavar="<num>",
        type=int,
        default=1,
        help="""Number of random specs of each size.""",
    )
    parser.add_argument(
        "--max-n",
        metavar="<n>",
        type=int,
        default=6,
        help="""Largest number of qubit pairs to profile. (default:
        %(default)d)""",
    )
    parser.add_argument(
        "--processes",
        "-p",
        metavar="<num-procs>",
        type=scriptutils.positive_int,
        default=1,
        help="""Processes per sweep. (default: %(default)d)""",
    )
    args = parser.parse_args(argv)
    profile(args.num, args.max_n, args.processes)


if __name__ == "__main__":
    main(*sys.argv[1:])

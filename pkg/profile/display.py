"""Aggregate profiling data and generate an rst file"""
import json
import sys

import tabulate


def update(means, new, count, num=1):
    """Recursively update mean dictionary"""
    for key, val in new.items():
        if isinstance(val, dict):
            update(means.setdefault(key, {}), val, count)
        else:
            value = means.get(key, 0)
            means[key] = value + (val - value) * num / count


def aggregate(lines):
    """Mean times of every size and mode"""
    results = {}
    counts = {}
    for line in lines:
        if not line.strip():
            continue
        case = json.loads(line)
        key = case["n"], case["mode"]
        num = case["times"].pop("count")
        counts[key] = counts.get(key, 0) + num
        update(results.setdefault(key, {}), case["times"], counts[key], num)
    return results


def write_file(results, fil):
    """Write file with results"""
    fil.write(
        """.. _profile_sweeps:

Sweep Timing
============

For every number of qubit pairs `n` this lists the mean time in seconds of a
default 31 angle sweep in exact and shots mode, the time per angle, the time
of a single exact run of the :math:`X_{2\\pi/3}Y_{2\\pi/3}` error, and the time
to emit its OpenQASM program. The statevector holds :math:`2^{2n + 3}`
amplitudes, so times grow by about a factor of four per pair.

Regenerate this page with
``python profile/run.py | python profile/display.py sphinx/profile_sweeps.rst``.

"""
    )
    fil.write(
        tabulate.tabulate(
            [
                [
                    n,
                    mode,
                    times["sweep"],
                    times["sweep"] / times["points"],
                    times["run"],
                    times["qasm"],
                ]
                for (n, mode), times in sorted(results.items())
            ],
            headers=[
                "n",
                "Mode",
                "Sweep (sec)",
                "Per Angle (sec)",
                "Run (sec)",
                "Emit (sec)",
            ],
            tablefmt="rst",
        )
    )
    fil.write("\n")


def main(*argv):
    """Read profiler output from stdin and write the rst page"""
    results = aggregate(sys.stdin)
    if argv:
        with open(argv[0], "w") as fil:
            write_file(results, fil)
    else:
        write_file(results, sys.stdout)


if __name__ == "__main__":
    main(*sys.argv[1:])

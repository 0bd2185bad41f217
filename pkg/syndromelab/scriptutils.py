"""Utilities for syndromelab scripts"""
import argparse
import contextlib
import csv
import json
import logging
import math
import os
import sys

import numpy as np

from syndromelab import errors
from syndromelab import specreader
from syndromelab import utils


SEED_VARIABLE = "SYNDROMELAB_SEED"


def load_spec(source):
    """Load a spec from a builtin name, file name, `-` or inline json

    Parameters
    ----------
    source : str
        Builtin names are tried first, then `-` reads stdin, then an existing
        file, and anything else is parsed as json.
    """
    if specreader.is_builtin(source):  # pylint: disable=no-else-return
        return specreader.builtin(source)
    elif source == "-":
        logging.info("loading spec from stdin")
        return specreader.load(sys.stdin)
    elif os.path.isfile(source):
        logging.info("loading spec from %s", source)
        with open(source) as fil:
            return specreader.load(fil)
    else:
        logging.info("loading inline spec")
        return specreader.loads(source)


def resolve_seed(seed):
    """The seed flag, else the seed environment variable, else zero"""
    if seed is None:
        value = os.environ.get(SEED_VARIABLE)
        if value is None:
            seed = 0
        else:
            utils.check(
                value.strip().isdigit(),
                "{} must be a nonnegative integer, not {!r}",
                SEED_VARIABLE,
                value,
            )
            seed = int(value)
    utils.check(seed >= 0, "seed must be nonnegative")
    logging.debug("using seed %d", seed)
    return seed


def default_grid():
    """The 31 angles k pi / 15 for k from -15 to 15"""
    return np.arange(-15, 16) * math.pi / 15


def parse_grid(text):
    """Parse a theta grid

    Parameters
    ----------
    text : str or None
        Either `start:stop:num` for `num` evenly spaced angles including both
        ends, or a comma separated list of angles. Angles are in the error
        angle syntax, e.g. `-pi:pi:31` or `0,pi/3,2pi/3`. None gives the
        default grid.
    """
    if text is None:
        return default_grid()
    parts = text.split(":")
    if len(parts) == 3:
        start, stop = errors.parse_angle(parts[0]), errors.parse_angle(parts[1])
        num = parts[2].strip()
        utils.check(num.isdigit() and int(num) >= 1, "invalid grid size {!r}", num)
        return np.linspace(start, stop, int(num))
    utils.check(len(parts) == 1, "invalid theta grid {!r}", text)
    grid = [errors.parse_angle(t) for t in text.split(",") if t.strip()]
    utils.check(grid, "theta grid can't be empty")
    return np.array(grid)


@contextlib.contextmanager
def open_output(name, force=False):
    """Open an output file, or stdout for None or `-`

    Existing files are only overwritten with `force`.
    """
    if name is None or name == "-":
        yield sys.stdout
        return
    if os.path.exists(name) and not force:
        raise FileExistsError(
            "{} exists, pass --force to overwrite it".format(name)
        )
    with open(name, "w", newline="") as fil:
        yield fil


def add_spec_argument(parser):
    """Add the spec flag shared by most commands"""
    parser.add_argument(
        "--spec",
        "-s",
        metavar="<spec>",
        default="paper13",
        help="""Spec to protect. Either a builtin name ({}), a json file, `-`
        for stdin, or inline json like '{{"representatives": ["00"]}}'.
        (default: %(default)s)""".format(", ".join(specreader.BUILTINS)),
    )


def add_output_arguments(parser, formats=("csv", "json")):
    """Add output file flags"""
    parser.add_argument(
        "--out",
        "-o",
        metavar="<output-file>",
        help="""Output file for script. (default: stdout)""",
    )
    parser.add_argument(
        "--force",
        action="store_true",
        help="""Overwrite the output file if it exists.""",
    )
    if len(formats) > 1:
        parser.add_argument(
            "--format",
            "-f",
            choices=formats,
            default=formats[0],
            help="""Output format. (default: %(default)s)""",
        )


def add_run_arguments(parser):
    """Add the mode, shots and seed flags"""
    parser.add_argument(
        "--mode",
        "-m",
        choices=("exact", "shots"),
        default="exact",
        help="""Report exact probabilities or frequencies from simulated
        shots. (default: %(default)s)""",
    )
    parser.add_argument(
        "--shots",
        "-n",
        metavar="<shots>",
        type=positive_int,
        default=8192,
        help="""Number of shots in shots mode. (default: %(default)d)""",
    )
    parser.add_argument(
        "--seed",
        metavar="<seed>",
        type=int,
        help="""Seed for shot sampling. (default: ${} or 0)""".format(
            SEED_VARIABLE
        ),
    )


def positive_int(text):
    """Argparse type for integers of at least one"""
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1, not {:d}".format(value))
    return value


def write_json(obj, out):
    """Write json with a trailing newline"""
    json.dump(obj, out)
    out.write("\n")


def write_rows(out, fmt, header, rows):
    """Write table rows as csv or as a json list of objects

    Floats are written with their shortest round trip representation.
    """
    rows = [[_cell(v) for v in row] for row in rows]
    if fmt == "json":
        write_json([dict(zip(header, row)) for row in rows], out)
    else:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _cell(value):
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def parse_layout(text):
    """Parse a comma separated list of physical qubits, None for identity"""
    if text is None:
        return None
    try:
        return [int(q) for q in text.split(",")]
    except ValueError as ex:
        raise ValueError("invalid layout {!r}".format(text)) from ex

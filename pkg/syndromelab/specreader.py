"""Module for loading complementarity specs

A spec file is json of the form

    {"n": 2, "representatives": ["0000", "1010", "0111"], "sign": "+"}

where `n` may be omitted if there are representatives to infer it from, and
`sign` defaults to `+`. Builtin specs are addressed by name instead.
"""
import json
import logging

from syndromelab import specgen
from syndromelab import states
from syndromelab import utils


BUILTINS = (
    "bell",
    "bell-",
    "psi",
    "psi-",
    "ghz:<2n>",
    "example4",
    "paper13",
    "paper13-mixed",
)


def load(filelike):
    """Read a spec from a file

    Parameters
    ----------
    filelike : file-like
        A file-like object to read the spec from. The entire file will be
        consumed by this action.
    """
    return loads(filelike.read())


def loads(string):
    """Read a spec from a json string"""
    try:
        obj = json.loads(string)
    except json.JSONDecodeError as ex:
        raise ValueError("spec isn't valid json: {}".format(ex)) from ex
    return loadj(obj)


def loadj(obj):
    """Read a spec from serializable python objects"""
    logging.info("loading spec from json")
    return states.spec_json(obj)


def builtin(name):
    """Get a builtin spec by name

    Parameters
    ----------
    name : str
        One of `bell`, `bell-`, `psi`, `psi-`, `ghz:<2n>`, `example4`,
        `paper13` or `paper13-mixed`.
    """
    kind, _, arg = name.strip().lower().partition(":")
    logging.info("loading builtin spec %s", name)
    if kind == "bell":  # pylint: disable=no-else-return
        return specgen.bell()
    elif kind == "bell-":
        return specgen.bell(-1)
    elif kind == "psi":
        return specgen.psi()
    elif kind == "psi-":
        return specgen.psi(-1)
    elif kind == "ghz":
        utils.check(arg.isdigit(), "ghz needs a qubit count, e.g. ghz:4")
        return specgen.ghz(int(arg))
    elif kind == "example4":
        return specgen.example4()
    elif kind == "paper13":
        return specgen.paper13()
    elif kind == "paper13-mixed":
        return specgen.paper13_mixed()
    else:
        raise ValueError(
            "unknown builtin spec {!r}, known: {}".format(name, ", ".join(BUILTINS))
        )


def is_builtin(name):
    """True if name addresses a builtin spec"""
    kind = name.strip().lower().partition(":")[0]
    return kind in {b.partition(":")[0] for b in BUILTINS}


def dumpj(spec):
    """Dump a spec to json"""
    return spec.to_json()


def dumps(spec):
    """Dump a spec to a string"""
    return json.dumps(dumpj(spec))


def dump(spec, file_like):
    """Dump a spec to a file object"""
    return json.dump(dumpj(spec), file_like)

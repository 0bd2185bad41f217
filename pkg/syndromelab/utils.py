"""Utilities shared by the simulation modules"""
import functools
import inspect
import math
from fractions import Fraction


# Largest denominator printed as a fraction of pi
_MAX_PI_DENOM = 64
_PI_TOL = 1e-12


def check(condition, message, *args, **kwargs):
    """Check state and raise exception if not valid"""
    if not condition:
        raise ValueError(message.format(*args, **kwargs))


def check_index(condition, message, *args, **kwargs):
    """Check a qubit index and raise an index error if not valid"""
    if not condition:
        raise IndexError(message.format(*args, **kwargs))


def memoize(member_function):
    """Memoize computation of single object functions"""
    check(
        len(inspect.signature(member_function).parameters) == 1,
        "can only memoize single object functions",
    )

    @functools.wraps(member_function)
    def new_member_function(obj):
        """Memoized member function"""
        name = "__{}_{}".format(member_function.__name__, obj.__class__.__name__)
        if not hasattr(obj, name):
            setattr(obj, name, member_function(obj))
        return getattr(obj, name)

    return new_member_function


def pi_fraction(angle):
    """Return angle / pi as a small fraction, or None if it isn't one"""
    frac = Fraction(angle / math.pi).limit_denominator(_MAX_PI_DENOM)
    if abs(float(frac) * math.pi - angle) < _PI_TOL:
        return frac
    return None


def format_angle(angle):
    """Format an angle in radians deterministically

    Rational multiples of pi with small denominators are written like
    `2*pi/3`, everything else uses the shortest round trip repr.
    """
    angle = float(angle)
    frac = pi_fraction(angle)
    if frac is None:
        return repr(angle)
    if frac == 0:
        return "0"
    num = frac.numerator
    sign = "-" if num < 0 else ""
    num = abs(num)
    head = "pi" if num == 1 else "{:d}*pi".format(num)
    if frac.denominator == 1:
        return sign + head
    return "{}{}/{:d}".format(sign, head, frac.denominator)

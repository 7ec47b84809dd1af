"""Checked exponentiation: magnitudes outside [2**-1024, 2**1024) are errors.

This is the range the safe intervals are built on. Its lower end sits just
inside the subnormals, where about 50 significant bits remain; anything
smaller has lost enough precision to merge or reorder close values.
"""
import math

import numpy as np

from .errors import ComputabilityError

TINY = 2.0 ** -1024


def _bad(values):
    return ~(np.abs(values) >= TINY) | np.isinf(values)


def checked_pow(base, alpha):
    try:
        value = math.pow(base, alpha)
    except OverflowError:
        value = math.inf
    if not TINY <= value < math.inf:
        raise ComputabilityError(
            f"{base!r} ** {alpha!r} is not representable in binary64; "
            "alpha lies outside the safe interval", base=base, alpha=alpha)
    return value


def checked_powers(bases, alpha, strict=True):
    bases = np.asarray(bases, dtype=float)
    with np.errstate(over="ignore", under="ignore"):
        out = np.power(bases, alpha)
    if not strict:
        return out
    bad = _bad(out)
    if bad.any():
        base = float(bases[np.flatnonzero(bad)[0]])
        raise ComputabilityError(
            f"{base!r} ** {alpha!r} is not representable in binary64; "
            "alpha lies outside the safe interval", base=base, alpha=alpha)
    return out


def checked_product(x, y, what="product", strict=True):
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        value = np.multiply(x, y)
    if not strict:
        return value
    if np.any(_bad(value)):
        raise ComputabilityError(f"{what} is not representable in binary64")
    return value

"""Brute-force Hurwitz oracle: direct enumeration of transposition tuples.

Independent of the character-sum route; used to cross-validate it on
small inputs. The tuple walk is the one hot loop in the package, so a
compiled kernel (hurwitz._speedups, built from Cython at install time)
is preferred and the pure-Python kernel is the fallback. Set
HURWITZ_ORACLE_BACKEND=python to force the fallback, or =cython to make
a missing extension an import error.
"""

import os
from fractions import Fraction
from math import factorial

from . import _oracle_py

# guarded enumeration bound: 6^8 tuples is fine, full S_6 walks are not
MAX_DEGREE = 5
MAX_BRANCH_POINTS = 10


class OracleBoundError(ValueError):
    """Requested enumeration exceeds the guarded brute-force bound."""


def _pick_backend():
    forced = os.environ.get("HURWITZ_ORACLE_BACKEND", "")
    if forced not in ("", "python", "cython"):
        raise RuntimeError(
            f"HURWITZ_ORACLE_BACKEND={forced!r}: expected 'python' or 'cython'"
        )
    if forced == "python":
        return _oracle_py, "python"
    try:
        from . import _speedups
    except ImportError:
        if forced == "cython":
            raise
        return _oracle_py, "python"
    return _speedups, "cython"


_kernel, BACKEND = _pick_backend()


def count_factorizations(d: int, r: int) -> tuple[int, int]:
    """(identity, transitive) tuple counts from the selected kernel.

    Unbounded entry point for tests and benchmarks; the Hurwitz-number
    wrapper below enforces the brute-force bound.
    """
    return _kernel.count_factorizations(d, r)


def oracle_connected(g: int, d: int) -> Fraction:
    """H_{g,d} by brute force: enumerate all tuples of r = 2g - 2 + 2d
    transpositions in the symmetric group on d letters, keep those with
    identity product whose transpositions connect all d letters, and
    divide by d!.

    Only inputs with d <= 5 and r <= 10 are accepted; anything larger
    raises OracleBoundError rather than starting a hopeless walk.
    """
    if g < 0:
        raise ValueError("g must be a nonnegative integer")
    if d < 1:
        raise ValueError("d must be a positive integer")
    r = 2 * g - 2 + 2 * d
    if d > MAX_DEGREE or r > MAX_BRANCH_POINTS:
        raise OracleBoundError(
            f"oracle bound exceeded: d={d}, r={r} "
            f"(limits: d <= {MAX_DEGREE}, r <= {MAX_BRANCH_POINTS})"
        )
    _, transitive = _kernel.count_factorizations(d, r)
    return Fraction(transitive, factorial(d))

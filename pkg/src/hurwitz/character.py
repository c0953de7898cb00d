"""Hurwitz numbers from symmetric-group character sums.

The disconnected count of degree-d covers with r simple branch points
is a transposition-factorization count in the symmetric group, computed
exactly as a sum over partitions of d of (dimension)^2 (content sum)^r
divided by d!. Connected counts are extracted with the exponential
formula: take the formal log of the bivariate generating series of
disconnected counts.
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import content_sum, enumerate_partitions, irrep_dimension
from .series import TruncatedSeries


def branch_count(genus: int, degree: int, target_genus: int = 0) -> int:
    """Number of simple branch points forced on a connected cover:
    2*genus - 2 - degree*(2*target_genus - 2).
    """
    if genus < 0 or degree < 1 or target_genus < 0:
        raise ValueError("genus and target_genus must be >= 0, degree >= 1")
    return 2 * genus - 2 - degree * (2 * target_genus - 2)


@cache
def factorization_count(d: int, r: int) -> int:
    """Number of r-tuples of transpositions in the symmetric group on d
    letters whose product is the identity.

    Exact integer via the character sum (1/d!) * sum over partitions of
    (dim)^2 (content sum)^r; a non-integral or negative sum means the
    inputs or the table of statistics are corrupt and raises.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if r < 0:
        raise ValueError("r must be a nonnegative integer")
    total = 0
    for lam in enumerate_partitions(d):
        dim = irrep_dimension(lam)
        total += dim * dim * content_sum(lam) ** r
    count, rem = divmod(total, factorial(d))
    if rem:
        raise ArithmeticError(
            f"character sum for d={d}, r={r} is not divisible by d!"
        )
    if count < 0:
        raise ArithmeticError(f"character sum for d={d}, r={r} is negative")
    return count


def disconnected_hurwitz(d: int, r: int) -> Fraction:
    """Disconnected degree-d count with r simple branch points:
    factorization count divided by d! (covers weighted by 1/|Aut|).
    """
    return Fraction(factorization_count(d, r), factorial(d))


@cache
def _disconnected_series(a_max: int, r_max: int) -> TruncatedSeries:
    # generating series of disconnected counts, with the 1/r! branch-point
    # weight folded in so that products are plain convolutions
    coeffs = {(0, 0): Fraction(1)}
    for a in range(1, a_max + 1):
        for r in range(r_max + 1):
            c = Fraction(factorization_count(a, r),
                         factorial(a) * factorial(r))
            if c:
                coeffs[(a, r)] = c
    return TruncatedSeries(a_max, r_max, coeffs)


@cache
def connected_hurwitz(g: int, d: int) -> Fraction:
    """Hurwitz number H_{g,d}: connected genus-g degree-d covers of the
    projective line with r = 2g - 2 + 2d simple branch points, each
    cover weighted by 1/|Aut|.

    Extracted from the log of the disconnected generating series.
    """
    if g < 0:
        raise ValueError("g must be a nonnegative integer")
    if d < 1:
        raise ValueError("d must be a positive integer")
    r = branch_count(g, d)
    connected = _disconnected_series(d, r).log()
    return connected.coefficient(d, r) * factorial(r)

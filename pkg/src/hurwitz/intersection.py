"""Genus-0 psi-class intersection numbers and the Hurwitz count they give.

On the moduli space of stable genus-0 curves with n marked points, the
top intersection of psi-power classes is a multinomial coefficient.
Summing them with the right combinatorial prefactor reproduces the
genus-0 Hurwitz numbers, giving a route independent of both the
character sum and the recursions.
"""

from fractions import Fraction
from math import factorial

# genus-0 covers of degrees 1 and 2 fall outside the intersection
# formula (fewer than three marked points); their values are pinned here
DEGENERATE_DEGREES = {1: Fraction(1), 2: Fraction(1, 2)}


class DegenerateCaseError(ValueError):
    """Degrees 1 and 2 sit outside the genus-0 intersection formula."""


def psi_integral_genus0(exponents: tuple[int, ...]) -> int:
    """Integral of psi_1^a_1 ... psi_n^a_n over the moduli space of
    stable genus-0 curves with n marked points.

    Equals the multinomial coefficient (n-3)! / (a_1! ... a_n!) when the
    exponents sum to n - 3 (the dimension), and 0 otherwise.
    """
    exponents = tuple(exponents)
    n = len(exponents)
    if n < 3:
        raise ValueError("need at least three marked points")
    if any(a < 0 for a in exponents):
        raise ValueError("exponents must be nonnegative")
    if sum(exponents) != n - 3:
        return 0
    value = factorial(n - 3)
    for a in exponents:
        value //= factorial(a)
    return value


def compositions(total: int, slots: int):
    """All tuples of `slots` nonnegative ints summing to `total`."""
    if slots < 0 or total < 0:
        raise ValueError("total and slots must be nonnegative")
    if slots == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, slots - 1):
            yield (first, *rest)


def elsv_genus0(d: int) -> Fraction:
    """Genus-0 Hurwitz number H_{0,d} from psi-integrals:
    (2d-2)!/d! times the sum of psi_integral_genus0 over all exponent
    vectors of length d, computed term by term.

    Only d >= 3 is meaningful; degrees 1 and 2 raise DegenerateCaseError
    (their pinned values live in DEGENERATE_DEGREES).
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if d < 3:
        raise DegenerateCaseError(
            f"degenerate case: d={d} has no genus-0 intersection formula"
        )
    total = 0
    for exponents in compositions(d - 3, d):
        total += psi_integral_genus0(exponents)
    return Fraction(factorial(2 * d - 2), factorial(d)) * total

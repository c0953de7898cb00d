"""Truncated bivariate power series over exact rationals.

Carrier for the bookkeeping that links disconnected and connected cover
counts: a series in a degree variable (exponent a) and a branch-point
variable (exponent r), truncated to the box 0 <= a <= a_max,
0 <= r <= r_max. Coefficients are stored sparsely; any factorial
weights are folded into the coefficients by the caller, so
multiplication is plain truncated convolution.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class TruncatedSeries:
    """Polynomial truncation of a two-variable power series.

    Immutable by convention: every operation returns a new series with
    the same truncation box, and indices outside the box are discarded.
    """

    __slots__ = ("a_max", "r_max", "_coeffs")

    def __init__(self, a_max: int, r_max: int, coeffs=None):
        if a_max < 0 or r_max < 0:
            raise ValueError("truncation bounds must be nonnegative")
        self.a_max = a_max
        self.r_max = r_max
        self._coeffs: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (a, r), c in dict(coeffs).items():
                if not (0 <= a <= a_max and 0 <= r <= r_max):
                    raise ValueError(
                        f"index ({a}, {r}) outside truncation box "
                        f"({a_max}, {r_max})"
                    )
                c = Fraction(c)
                if c:
                    self._coeffs[(a, r)] = c

    @classmethod
    def zero(cls, a_max: int, r_max: int) -> TruncatedSeries:
        return cls(a_max, r_max)

    @classmethod
    def one(cls, a_max: int, r_max: int) -> TruncatedSeries:
        return cls(a_max, r_max, {(0, 0): Fraction(1)})

    def coefficient(self, a: int, r: int) -> Fraction:
        """Coefficient at (a, r); zero off the support, error off the box."""
        if not (0 <= a <= self.a_max and 0 <= r <= self.r_max):
            raise ValueError(
                f"index ({a}, {r}) outside truncation box "
                f"({self.a_max}, {self.r_max})"
            )
        return self._coeffs.get((a, r), Fraction(0))

    def items(self):
        return self._coeffs.items()

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.a_max == other.a_max
            and self.r_max == other.r_max
            and self._coeffs == other._coeffs
        )

    def __repr__(self) -> str:
        n = len(self._coeffs)
        return (
            f"TruncatedSeries(a_max={self.a_max}, r_max={self.r_max}, "
            f"{n} nonzero coefficient{'s' if n != 1 else ''})"
        )

    def _same_box(self, other: TruncatedSeries) -> None:
        if self.a_max != other.a_max or self.r_max != other.r_max:
            raise ValueError("truncation boxes differ")

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_box(other)
            out = dict(self._coeffs)
            for key, c in other._coeffs.items():
                out[key] = out.get(key, Fraction(0)) + c
            return TruncatedSeries(self.a_max, self.r_max, out)
        if isinstance(other, (int, Fraction)):
            out = dict(self._coeffs)
            out[(0, 0)] = out.get((0, 0), Fraction(0)) + Fraction(other)
            return TruncatedSeries(self.a_max, self.r_max, out)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(
            self.a_max, self.r_max, {k: -c for k, c in self._coeffs.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, int, Fraction)):
            return self + (-other if isinstance(other, TruncatedSeries)
                           else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + Fraction(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_box(other)
            out: dict[tuple[int, int], Fraction] = {}
            for (a1, r1), c1 in self._coeffs.items():
                for (a2, r2), c2 in other._coeffs.items():
                    a, r = a1 + a2, r1 + r2
                    if a > self.a_max or r > self.r_max:
                        continue
                    key = (a, r)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
            return TruncatedSeries(self.a_max, self.r_max, out)
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return TruncatedSeries(
                self.a_max,
                self.r_max,
                {k: scalar * c for k, c in self._coeffs.items()},
            )
        return NotImplemented

    __rmul__ = __mul__

    def exp(self) -> TruncatedSeries:
        """Formal exponential; requires a vanishing constant term.

        Computed as the finite sum of T^k / k!; powers of a series with
        no constant term gain total degree, so the sum stops as soon as
        a power truncates to zero.
        """
        if self.coefficient(0, 0) != 0:
            raise ValueError("exp requires constant term 0")
        result = TruncatedSeries.one(self.a_max, self.r_max)
        power = TruncatedSeries.one(self.a_max, self.r_max)
        k = 0
        while True:
            k += 1
            power = power * self
            if not power:
                return result
            result = result + power * Fraction(1, factorial(k))

    def log(self) -> TruncatedSeries:
        """Formal logarithm; requires constant term exactly 1.

        Computed as the alternating finite sum of (self - 1)^k / k.
        """
        if self.coefficient(0, 0) != 1:
            raise ValueError("log requires constant term 1")
        shifted = self - 1
        result = TruncatedSeries.zero(self.a_max, self.r_max)
        power = TruncatedSeries.one(self.a_max, self.r_max)
        k = 0
        while True:
            k += 1
            power = power * shifted
            if not power:
                return result
            result = result + power * Fraction((-1) ** (k + 1), k)

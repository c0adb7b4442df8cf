"""Evaluation rings: the same formula evaluated exactly or as factored residues.

Every summand in the package is written once against the small interface
below. ExactRing yields `fractions.Fraction` values; ResidueRing yields
`FactoredResidue` values for one prime at a fixed unit precision.
"""

import abc
import math
from fractions import Fraction
from typing import Any, Iterable

from wzcheck.arith import exact
from wzcheck.arith.exact import Rational, Valuation
from wzcheck.arith.residue import DEFAULT_PRECISION, FactoredResidue
from wzcheck.sequences import factorials, numbers

EXACT = "exact"
FAST = "fast"


class Ring(abc.ABC):
    """Arithmetic domain for closed-form terms."""

    name: str

    @abc.abstractmethod
    def rational(self, x: Rational) -> Any:
        """Embeds an exact rational."""

    @abc.abstractmethod
    def binomial(self, n: int, k: int) -> Any:
        """C(n, k) with the conventions of numbers.binomial."""

    @abc.abstractmethod
    def factorial(self, n: int) -> Any:
        """n!"""

    @abc.abstractmethod
    def residue(self, x: Any, p: int, k: int) -> int:
        """Reduces an element modulo p^k."""

    @abc.abstractmethod
    def valuation(self, x: Any, p: int) -> Valuation:
        """v_p of an element."""

    def integer(self, n: int) -> Any:
        return self.rational(n)

    def zero(self) -> Any:
        return self.integer(0)

    def one(self) -> Any:
        return self.integer(1)

    def sign(self, e: int) -> Any:
        """(-1)^e"""
        return self.integer(-1 if e % 2 else 1)

    def power(self, base: int, e: int) -> Any:
        return self.integer(base) ** e

    def sum(self, terms: Iterable[Any]) -> Any:
        total = self.zero()
        for term in terms:
            total = total + term
        return total

    def prod(self, factors: Iterable[Any]) -> Any:
        total = self.one()
        for factor in factors:
            total = total * factor
        return total

    def multinomial4(self, n: int) -> Any:
        """(4n)! / (n!)^4"""
        return self.factorial(4 * n) / self.factorial(n) ** 4

    def pochhammer(self, a: Rational, n: int) -> Any:
        """(a)_n, one factor at a time."""
        a = Fraction(a)
        return self.prod(self.rational(a + j) for j in range(n))

    def harmonic(self, n: int, order: int = 1) -> Any:
        """sum_{0<j<=n} 1/j^order"""
        return self.sum(self.rational(Fraction(1, j**order)) for j in range(1, n + 1))


class ExactRing(Ring):
    """Exact rational arithmetic."""

    name = EXACT

    def rational(self, x: Rational) -> Fraction:
        return Fraction(x)

    def binomial(self, n: int, k: int) -> Fraction:
        return Fraction(numbers.binomial(n, k))

    def factorial(self, n: int) -> Fraction:
        return Fraction(math.factorial(n))

    def multinomial4(self, n: int) -> Fraction:
        return Fraction(numbers.multinomial4(n))

    def pochhammer(self, a: Rational, n: int) -> Fraction:
        return numbers.pochhammer(a, n)

    def harmonic(self, n: int, order: int = 1) -> Fraction:
        pair = numbers.harmonic(n)
        if order == 1:
            return pair.h1
        if order == 2:
            return pair.h2
        return super().harmonic(n, order)

    def residue(self, x: Fraction, p: int, k: int) -> int:
        return exact.reduce_mod(x, p, k)

    def valuation(self, x: Fraction, p: int) -> Valuation:
        return exact.valuation(x, p)


class ResidueRing(Ring):
    """Factored residues p^v * u with units modulo p^prec."""

    name = FAST

    def __init__(self, p: int, prec: int = DEFAULT_PRECISION) -> None:
        self.p = p
        self.prec = prec

    def rational(self, x: Rational) -> FactoredResidue:
        return FactoredResidue.from_rational(x, self.p, self.prec)

    def integer(self, n: int) -> FactoredResidue:
        return FactoredResidue.from_int(n, self.p, self.prec)

    def binomial(self, n: int, k: int) -> FactoredResidue:
        if k < 0:
            return FactoredResidue.zero(self.p)
        if n < 0:
            return self.sign(k) * self.binomial(-n + k - 1, k)
        if k > n:
            return FactoredResidue.zero(self.p)
        return factorials.factored_binomial(n, k, self.p, self.prec)

    def factorial(self, n: int) -> FactoredResidue:
        return factorials.factored_factorial(n, self.p, self.prec)

    def residue(self, x: FactoredResidue, p: int, k: int) -> int:
        return x.residue(k)

    def valuation(self, x: FactoredResidue, p: int) -> Valuation:
        return x.v

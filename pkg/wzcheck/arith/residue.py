"""Valuation-tracked residues modulo prime powers.

A FactoredResidue stands for a value p^v * u whose unit u is known modulo
p^prec. The value itself is then known modulo p^(v + prec), its absolute
precision. Exact zero is a distinguished state with infinite valuation and
infinite absolute precision; a nonzero value never carries u = 0.
"""

import dataclasses
from fractions import Fraction
from typing import Union

from wzcheck.arith.exact import (
    INFINITY,
    NegativeValuation,
    Rational,
    Valuation,
    int_valuation,
    min_valuation,
)

DEFAULT_PRECISION = 6


class Error(Exception):
    """Base Exception handling class."""


class PrecisionExhausted(Error):
    """Cancellation left no significant p-adic digit; retry on the exact path."""


@dataclasses.dataclass(frozen=True)
class FactoredResidue:
    """A value p^v * u with u a unit known modulo p^prec.

    Attributes:
        p: The prime.
        v: The p-adic valuation, INFINITY for exact zero.
        u: The unit, in [0, p^prec); 0 only for exact zero.
        prec: Number of significant p-adic digits of u, INFINITY for exact zero.
    """

    p: int
    v: Valuation
    u: int
    prec: Valuation

    @classmethod
    def zero(cls, p: int) -> "FactoredResidue":
        return cls(p=p, v=INFINITY, u=0, prec=INFINITY)

    @classmethod
    def from_int(
        cls, n: int, p: int, prec: int = DEFAULT_PRECISION
    ) -> "FactoredResidue":
        if n == 0:
            return cls.zero(p)
        v = int_valuation(n, p)
        return cls(p=p, v=v, u=(n // p**v) % p**prec, prec=prec)

    @classmethod
    def from_rational(
        cls, x: Rational, p: int, prec: int = DEFAULT_PRECISION
    ) -> "FactoredResidue":
        x = Fraction(x)
        if x == 0:
            return cls.zero(p)
        a = int_valuation(x.numerator, p)
        b = int_valuation(x.denominator, p)
        modulus = p**prec
        num = (x.numerator // p**a) % modulus
        den = (x.denominator // p**b) % modulus
        return cls(p=p, v=a - b, u=num * pow(den, -1, modulus) % modulus, prec=prec)

    @property
    def is_zero(self) -> bool:
        return self.v is INFINITY

    @property
    def abs_prec(self) -> Valuation:
        """The value is known modulo p^abs_prec."""
        if self.is_zero:
            return INFINITY
        return self.v + self.prec

    def residue(self, k: int) -> int:
        """Reduces the value modulo p^k.

        Raises:
            NegativeValuation: If the value is not p-integral.
            PrecisionExhausted: If the value is not known modulo p^k.
        """
        if self.is_zero:
            return 0
        if self.v < 0:
            raise NegativeValuation(
                f"value p^{self.v} * {self.u} is not {self.p}-integral"
            )
        if self.abs_prec < k:
            raise PrecisionExhausted(
                f"value known modulo {self.p}^{self.abs_prec}, need {self.p}^{k}"
            )
        modulus = self.p**k
        return self.u * self.p**self.v % modulus

    def _check(self, other: "FactoredResidue") -> None:
        if self.p != other.p:
            raise ValueError(f"Mixed primes {self.p} and {other.p}")

    def __neg__(self) -> "FactoredResidue":
        if self.is_zero:
            return self
        return dataclasses.replace(self, u=(-self.u) % self.p**self.prec)

    def __mul__(self, other: "FactoredResidue") -> "FactoredResidue":
        return fr_mul(self, other)

    def __truediv__(self, other: "FactoredResidue") -> "FactoredResidue":
        return fr_div(self, other)

    def __add__(self, other: "FactoredResidue") -> "FactoredResidue":
        return fr_add(self, other)

    def __radd__(self, other: Union[int, "FactoredResidue"]) -> "FactoredResidue":
        # sum() starts from the integer 0
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __sub__(self, other: "FactoredResidue") -> "FactoredResidue":
        return fr_add(self, -other)

    def __pow__(self, e: int) -> "FactoredResidue":
        if e == 0:
            prec = DEFAULT_PRECISION if self.is_zero else self.prec
            return FactoredResidue(p=self.p, v=0, u=1 % self.p**prec, prec=prec)
        if self.is_zero:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return self
        modulus = self.p**self.prec
        return FactoredResidue(
            p=self.p, v=self.v * e, u=pow(self.u, e, modulus), prec=self.prec
        )


def fr_mul(a: FactoredResidue, b: FactoredResidue) -> FactoredResidue:
    """Multiplies: valuations add, units multiply at the smaller precision."""
    a._check(b)
    if a.is_zero or b.is_zero:
        return FactoredResidue.zero(a.p)
    prec = min(a.prec, b.prec)
    return FactoredResidue(
        p=a.p, v=a.v + b.v, u=a.u * b.u % a.p**prec, prec=prec
    )


def fr_div(a: FactoredResidue, b: FactoredResidue) -> FactoredResidue:
    """Divides: valuations subtract, units divide at the smaller precision."""
    a._check(b)
    if b.is_zero:
        raise ZeroDivisionError("division by an exact zero residue")
    if a.is_zero:
        return a
    prec = min(a.prec, b.prec)
    modulus = a.p**prec
    return FactoredResidue(
        p=a.p, v=a.v - b.v, u=a.u * pow(b.u, -1, modulus) % modulus, prec=prec
    )


def fr_add(a: FactoredResidue, b: FactoredResidue) -> FactoredResidue:
    """Adds two residues at the smaller absolute precision.

    eg, for p = 5 and prec 4:
        (v=0, u=1) + (v=1, u=1) -> (v=0, u=6)
        (v=1, u=2) + (v=1, u=3) -> (v=2, u=1), absolute precision 5

    Raises:
        PrecisionExhausted: If the sum vanishes modulo the absolute precision.
    """
    a._check(b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    p = a.p
    abs_prec = min_valuation(a.abs_prec, b.abs_prec)
    v = min(a.v, b.v)
    width = abs_prec - v
    total = (a.u * p ** (a.v - v) + b.u * p ** (b.v - v)) % p**width
    if total == 0:
        raise PrecisionExhausted(
            f"sum vanishes modulo {p}^{abs_prec}; no significant digit left"
        )
    shift = int_valuation(total, p)
    prec = width - shift
    return FactoredResidue(p=p, v=v + shift, u=(total // p**shift) % p**prec, prec=prec)

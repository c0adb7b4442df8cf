"""Exact rational arithmetic: p-adic valuations and reduction modulo prime powers.

Rationals are `fractions.Fraction`, which are kept in lowest terms with a
positive denominator, and zero is 0/1.
"""

import enum
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


class Error(Exception):
    """Base Exception handling class."""


class NegativeValuation(Error):
    """The value is not p-integral, so it has no residue modulo p^k."""


class Sentinel(enum.Enum):
    """Valuation of zero."""

    INFINITY = "inf"

    def __str__(self) -> str:
        return self.value


INFINITY = Sentinel.INFINITY

Valuation = Union[int, Sentinel]


def int_valuation(n: int, p: int) -> int:
    """Returns v_p(n) for a nonzero integer n."""
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Rational, p: int) -> Valuation:
    """Returns v_p(x) = v_p(numerator) - v_p(denominator).

    eg:
        valuation(Fraction(125, 12), 5) -> 3
        valuation(Fraction(7, 32), 2) -> -5
        valuation(0, 7) -> INFINITY
    """
    x = Fraction(x)
    if x == 0:
        return INFINITY
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def at_least(v: Valuation, k: int) -> bool:
    """True iff the valuation v is >= k, treating INFINITY as above everything."""
    return v is INFINITY or v >= k


def min_valuation(a: Valuation, b: Valuation) -> Valuation:
    if a is INFINITY:
        return b
    if b is INFINITY:
        return a
    return min(a, b)


def reduce_mod(x: Rational, p: int, k: int) -> int:
    """Reduces a p-integral rational modulo p^k.

    eg:
        reduce_mod(126, 5, 3) -> 1
        reduce_mod(Fraction(1, 2), 3, 2) -> 5

    Arguments:
        x: The rational to reduce.
        p: A prime.
        k: A positive exponent.

    Raises:
        NegativeValuation: If v_p(x) < 0.

    Returns:
        The unique r in [0, p^k) with v_p(x - r) >= k.
    """
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NegativeValuation(f"{x} is not {p}-integral (valuation {valuation(x, p)})")
    modulus = p**k
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def congruent(a: Rational, b: Rational, p: int, k: int) -> bool:
    """True iff a = b (mod p^k), that is v_p(a - b) >= k."""
    return at_least(valuation(Fraction(a) - Fraction(b), p), k)

"""A collection of general utilities for prime sweeps."""

from typing import List

import sympy


def is_prime(n: int) -> bool:
    """Deterministic primality test for the desk-scale ranges used here."""
    return n >= 2 and bool(sympy.isprime(n))


def is_odd_prime(n: int) -> bool:
    return n > 2 and is_prime(n)


def primes_in(lo: int, hi: int) -> List[int]:
    """Lists the primes of a closed interval.

    eg:
        primes_in(5, 20) -> [5, 7, 11, 13, 17, 19]
        primes_in(90, 96) -> []

    Arguments:
        lo: Lower end of the interval, at least 2.
        hi: Upper end of the interval, inclusive.

    Raises:
        ValueError: If the interval is malformed.

    Returns:
        All primes p with lo <= p <= hi, ascending.
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"Need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    return [int(p) for p in sympy.primerange(lo, hi + 1)]


def half(p: int) -> int:
    """Returns (p - 1) / 2 for an odd p."""
    if p % 2 == 0:
        raise ValueError(f"{p} is not odd")
    return (p - 1) // 2

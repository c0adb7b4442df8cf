"""Combinatorial and number-theoretic sequences, computed exactly."""

import dataclasses
import functools
import math
from fractions import Fraction
from typing import List, Tuple

from wzcheck.arith.exact import Rational


@dataclasses.dataclass(frozen=True)
class EulerTable:
    """Euler numbers E_0..E_nmax.

    Attributes:
        values: E_0, E_1, ..., with E_0 = 1 and E_n = 0 for odd n.
    """

    values: Tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclasses.dataclass(frozen=True)
class HarmonicPair:
    """H_n and H_n^(2)."""

    h1: Fraction
    h2: Fraction


# Grown on demand; each worker process keeps its own copy.
_euler_values: List[int] = [1]
_harmonic_values: List[HarmonicPair] = [HarmonicPair(Fraction(0), Fraction(0))]


def euler_numbers(n_max: int) -> EulerTable:
    """Euler numbers from E_0 = 1 and E_n = -sum_{k=1}^{n/2} C(n, 2k) E_{n-2k}.

    eg:
        euler_numbers(6).values -> (1, 0, -1, 0, 5, 0, -61)
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    for n in range(len(_euler_values), n_max + 1):
        if n % 2:
            _euler_values.append(0)
            continue
        _euler_values.append(
            -sum(math.comb(n, 2 * k) * _euler_values[n - 2 * k] for k in range(1, n // 2 + 1))
        )
    return EulerTable(values=tuple(_euler_values[: n_max + 1]))


@functools.lru_cache(maxsize=256)
def _euler_mod_table(n_max: int, p: int) -> Tuple[int, ...]:
    binom_row = [1]
    values = [1 % p]
    for n in range(1, n_max + 1):
        # Pascal row n, reduced mod p.
        binom_row = [1] + [(binom_row[i - 1] + binom_row[i]) % p for i in range(1, n)] + [1]
        if n % 2:
            values.append(0)
            continue
        values.append(
            -sum(binom_row[2 * k] * values[n - 2 * k] for k in range(1, n // 2 + 1)) % p
        )
    return tuple(values)


def euler_mod(n: int, p: int) -> int:
    """E_n mod p, running the Euler recurrence over residues.

    eg:
        euler_mod(2, 5) -> 4
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _euler_mod_table(n, p)[n]


def harmonic(n: int) -> HarmonicPair:
    """Exact H_n = sum 1/k and H_n^(2) = sum 1/k^2 over 0 < k <= n.

    eg:
        harmonic(4).h1 -> 25/12
        harmonic(2).h2 -> 5/4
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for k in range(len(_harmonic_values), n + 1):
        last = _harmonic_values[-1]
        _harmonic_values.append(
            HarmonicPair(h1=last.h1 + Fraction(1, k), h2=last.h2 + Fraction(1, k * k))
        )
    return _harmonic_values[n]


def harmonic_reflection_holds(p: int, k: int) -> bool:
    """True iff H_{p-1-k} = H_k (mod p) for 0 <= k <= p - 1."""
    diff = harmonic(p - 1 - k).h1 - harmonic(k).h1
    return diff.numerator % p == 0


def pochhammer(a: Rational, n: int) -> Fraction:
    """The raising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    a = Fraction(a)
    result = Fraction(1)
    for j in range(n):
        result *= a + j
    return result


def binomial(n: int, k: int) -> int:
    """C(n, k) for signed n and k.

    Zero for k < 0 and for 0 <= n < k. A negative upper index follows the
    reflection C(n, k) = (-1)^k C(-n+k-1, k).

    eg:
        binomial(-5, 2) -> 15
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(-n + k - 1, k)


def multinomial4(n: int) -> int:
    """(4n)! / (n!)^4."""
    return math.factorial(4 * n) // math.factorial(n) ** 4


def fermat_quotient(p: int) -> int:
    """q_p(2) = (2^(p-1) - 1) / p for an odd prime p."""
    if p < 3:
        raise ValueError(f"Fermat quotient base 2 needs an odd prime, got {p}")
    quotient, remainder = divmod(2 ** (p - 1) - 1, p)
    if remainder:
        raise ValueError(f"{p} is not prime")
    return quotient

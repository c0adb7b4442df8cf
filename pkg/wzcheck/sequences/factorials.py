"""Factorials and binomials as factored residues p^v * u."""

import functools
from typing import List

from wzcheck.arith.exact import int_valuation
from wzcheck.arith.residue import DEFAULT_PRECISION, FactoredResidue


class FactorialTable:
    """Prefix table of n! = p^v(n) * u(n) with u(n) modulo p^prec.

    The table grows on demand, up to 6p^2 for the largest Jacobsthal binomials;
    one table exists per (p, prec) in each worker.
    """

    def __init__(self, p: int, prec: int) -> None:
        self.p = p
        self.prec = prec
        self._modulus = p**prec
        self._vals: List[int] = [0]
        self._units: List[int] = [1 % self._modulus]

    def __len__(self) -> int:
        return len(self._units)

    def _extend(self, n: int) -> None:
        p, modulus = self.p, self._modulus
        for i in range(len(self._units), n + 1):
            v = int_valuation(i, p)
            self._vals.append(self._vals[-1] + v)
            self._units.append(self._units[-1] * (i // p**v) % modulus)

    def factorial(self, n: int) -> FactoredResidue:
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        self._extend(n)
        return FactoredResidue(
            p=self.p, v=self._vals[n], u=self._units[n], prec=self.prec
        )


# Jacobsthal tables at p near 200 hold over 200k entries each.
@functools.lru_cache(maxsize=8)
def factorial_table(p: int, prec: int) -> FactorialTable:
    return FactorialTable(p, prec)


def factored_factorial(
    n: int, p: int, k: int = DEFAULT_PRECISION
) -> FactoredResidue:
    """n! as p^v * u, v = sum_{i>=1} floor(n / p^i) and u = n!/p^v mod p^k.

    eg:
        factored_factorial(10, 5, 4) -> (v=2, u=152)
    """
    return factorial_table(p, k).factorial(n)


def factored_binomial(
    n: int, k: int, p: int, prec: int = DEFAULT_PRECISION
) -> FactoredResidue:
    """C(n, k) for 0 <= k <= n as p^v * u, via three factored factorials."""
    if not 0 <= k <= n:
        raise ValueError(f"Need 0 <= k <= n, got n={n}, k={k}")
    table = factorial_table(p, prec)
    return (
        table.factorial(n) / (table.factorial(k) * table.factorial(n - k))
    )

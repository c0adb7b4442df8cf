"""The two WZ pairs, their telescoping relation and the boundary identity.

F and G are written once against a `Ring`; the exact values are memoised
per process, the factored-residue values are not.
"""

import dataclasses
import enum
import functools
from fractions import Fraction
from typing import Any, Callable, Dict, Optional, Tuple

from wzcheck.arith.residue import DEFAULT_PRECISION, FactoredResidue
from wzcheck.common.utils import is_odd_prime
from wzcheck.sequences.rings import ExactRing, ResidueRing, Ring

EXACT_RING = ExactRing()


class WZPairId(enum.Enum):
    PAIR256 = "Pair256"
    PAIR1024 = "Pair1024"

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class WZTerm:
    """One evaluated term F(n, k) or G(n, k).

    Attributes:
        pair: The pair the term belongs to.
        name: "F" or "G".
        n: Row index.
        k: Column index.
        value: The exact value, 0 whenever n < k.
    """

    pair: WZPairId
    name: str
    n: int
    k: int
    value: Fraction

    def __str__(self) -> str:
        return f"{self.name}_{self.pair}({self.n},{self.k}) = {self.value}"


@dataclasses.dataclass(frozen=True)
class BoundaryCheck:
    """sum_{n<p} F(n,0) against F(p-1,p-1) + sum_{k=1}^{p-1} G(p,k)."""

    pair: WZPairId
    p: int
    holds: bool
    lhs: Fraction
    rhs: Fraction


def _f256(ring: Ring, n: int, k: int) -> Any:
    b = ring.binomial
    return (
        ring.integer(6 * n - 2 * k + 1)
        / ring.power(2, 8 * n - 2 * k)
        * b(2 * n, n)
        * b(2 * n + 2 * k, n + k)
        * b(2 * n - 2 * k, n - k)
        * b(n + k, n)
        / b(2 * k, k)
    )


def _g256(ring: Ring, n: int, k: int) -> Any:
    b = ring.binomial
    return (
        ring.integer(n * n)
        * b(2 * n, n)
        * b(2 * n + 2 * k, n + k)
        * b(2 * n - 2 * k, n - k)
        * b(n + k, n)
        / (
            ring.power(2, 8 * n - 2 * k - 4)
            * ring.integer(2 * n + 2 * k - 1)
            * b(2 * k, k)
        )
    )


def _f1024(ring: Ring, n: int, k: int) -> Any:
    b = ring.binomial
    return (
        ring.sign(n + k)
        * ring.integer(20 * n - 2 * k + 3)
        / ring.power(4, 5 * n - k)
        * b(2 * n, n)
        * b(4 * n + 2 * k, 2 * n + k)
        * b(2 * n - k, n)
        * b(2 * n + k, 2 * k)
        / b(2 * k, k)
    )


def _g1024(ring: Ring, n: int, k: int) -> Any:
    b = ring.binomial
    return (
        ring.sign(n + k)
        * ring.integer(n)
        * b(2 * n - 1, n - 1)
        * b(4 * n + 2 * k - 2, 2 * n + k - 1)
        * b(2 * n - k - 1, n - 1)
        * b(2 * n + k - 1, 2 * k)
        / (ring.power(4, 5 * n - k - 4) * b(2 * k, k))
    )


_FORMULAS: Dict[WZPairId, Tuple[Callable, Callable]] = {
    WZPairId.PAIR256: (_f256, _g256),
    WZPairId.PAIR1024: (_f1024, _g1024),
}


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"Indices must be nonnegative, got n={n}, k={k}")


@functools.lru_cache(maxsize=None)
def _exact_F(pair: WZPairId, n: int, k: int) -> Fraction:
    return _FORMULAS[pair][0](EXACT_RING, n, k)


@functools.lru_cache(maxsize=None)
def _exact_G(pair: WZPairId, n: int, k: int) -> Fraction:
    return _FORMULAS[pair][1](EXACT_RING, n, k)


def eval_F(pair: WZPairId, n: int, k: int, ring: Optional[Ring] = None) -> Any:
    """F(n, k) of the given pair.

    eg:
        eval_F(WZPairId.PAIR256, 1, 1) -> 15/16
        eval_F(WZPairId.PAIR1024, 1, 0) -> -69/128

    Arguments:
        pair: Which WZ pair.
        n: Row index, nonnegative.
        k: Column index, nonnegative.
        ring: Ring to evaluate in, exact rationals by default.

    Returns:
        The value as an element of the ring; 0 when n < k.
    """
    _check_indices(n, k)
    if ring is None or isinstance(ring, ExactRing):
        return _exact_F(pair, n, k)
    return _FORMULAS[pair][0](ring, n, k)


def eval_G(pair: WZPairId, n: int, k: int, ring: Optional[Ring] = None) -> Any:
    """G(n, k) of the given pair; 0 when n < k and G(0, k) = 0.

    eg:
        eval_G(WZPairId.PAIR256, 2, 1) -> 9/32
    """
    _check_indices(n, k)
    if ring is None or isinstance(ring, ExactRing):
        return _exact_G(pair, n, k)
    return _FORMULAS[pair][1](ring, n, k)


def _residue_ring(p: int, prec: int) -> ResidueRing:
    if not is_odd_prime(p):
        raise ValueError(f"Fast evaluation needs an odd prime, got {p}")
    return ResidueRing(p, prec)


def eval_F_fast(
    pair: WZPairId, n: int, k: int, p: int, prec: int = DEFAULT_PRECISION
) -> FactoredResidue:
    return eval_F(pair, n, k, _residue_ring(p, prec))


def eval_G_fast(
    pair: WZPairId, n: int, k: int, p: int, prec: int = DEFAULT_PRECISION
) -> FactoredResidue:
    return eval_G(pair, n, k, _residue_ring(p, prec))


def terms(pair: WZPairId, n: int, k: int) -> Tuple[WZTerm, WZTerm]:
    """The exact F and G terms at (n, k)."""
    return (
        WZTerm(pair=pair, name="F", n=n, k=k, value=eval_F(pair, n, k)),
        WZTerm(pair=pair, name="G", n=n, k=k, value=eval_G(pair, n, k)),
    )


def check_telescoping(pair: WZPairId, n: int, k: int) -> bool:
    """True iff F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k) exactly."""
    if k < 1:
        raise ValueError(f"Telescoping needs k >= 1, got {k}")
    lhs = eval_F(pair, n, k - 1) - eval_F(pair, n, k)
    rhs = eval_G(pair, n + 1, k) - eval_G(pair, n, k)
    return lhs == rhs


def sum_G(
    pair: WZPairId, p: int, lo: int, hi: int, ring: Optional[Ring] = None
) -> Any:
    """sum_{k=lo}^{hi} G(p, k); empty ranges sum to zero."""
    ring = ring or EXACT_RING
    return ring.sum(eval_G(pair, p, k, ring) for k in range(lo, hi + 1))


def boundary_identity(pair: WZPairId, p: int) -> BoundaryCheck:
    """Checks sum_{n=0}^{p-1} F(n,0) = F(p-1,p-1) + sum_{k=1}^{p-1} G(p,k).

    The identity follows from summing the telescoping relation over the
    triangle 0 <= k <= n < p, so any integer p >= 1 qualifies.
    """
    if p < 1:
        raise ValueError(f"Boundary identity needs p >= 1, got {p}")
    lhs = sum((eval_F(pair, n, 0) for n in range(p)), Fraction(0))
    rhs = eval_F(pair, p - 1, p - 1) + sum_G(pair, p, 1, p - 1)
    return BoundaryCheck(pair=pair, p=p, holds=lhs == rhs, lhs=lhs, rhs=rhs)


def _rewritten_g256(ring: Ring, p: int, k: int) -> Any:
    b = ring.binomial
    return (
        ring.integer(p * p)
        * b(2 * p, p)
        * b(2 * p + 2 * k, p)
        * b(2 * p - 2 * k, p - k)
        * b(p + 2 * k, k)
        / (
            ring.power(2, 8 * p - 4 - 2 * k)
            * ring.integer(2 * p + 2 * k - 1)
            * b(2 * k, k)
        )
    )


def _rewritten_g1024(ring: Ring, p: int, k: int) -> Any:
    b = ring.binomial
    # C(4p+2k-2, 2k) = C(-4p+1, 2k) = 4p(4p-1) / (2k(2k-1)) * C(-4p-1, 2k-2)
    reflected = (
        ring.integer(4 * p * (4 * p - 1))
        / ring.integer(2 * k * (2 * k - 1))
        * b(-4 * p - 1, 2 * k - 2)
    )
    return (
        ring.sign(k + 1)
        * ring.integer(p)
        * b(2 * p - 1, p - 1)
        * reflected
        * b(4 * p - 2, p - 1)
        * b(3 * p - 1, p - k)
        / (ring.power(4, 5 * p - 4 - k) * b(2 * k, k))
    )


def rewritten_G(pair: WZPairId, p: int, k: int, ring: Optional[Ring] = None) -> Any:
    """G(p, k) after the binomial transformation C(n,k)C(k,j) = C(n,j)C(n-j,k-j).

    For the 1024 pair the factor C(4p+2k-2, 2k) is further reflected to a
    negative upper index, which isolates the factor p. Both forms equal
    eval_G(pair, p, k) for odd p and 1 <= k <= p - 1.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError(f"Rewritten G needs an odd p >= 3, got {p}")
    if not 1 <= k <= p - 1:
        raise ValueError(f"Rewritten G needs 1 <= k <= p - 1, got k={k}")
    ring = ring or EXACT_RING
    if pair is WZPairId.PAIR256:
        return _rewritten_g256(ring, p, k)
    return _rewritten_g1024(ring, p, k)

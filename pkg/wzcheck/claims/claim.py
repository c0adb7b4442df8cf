"""Checkable claims and their evaluation on the exact and fast paths."""

import dataclasses
import enum
import functools
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from wzcheck.arith import exact
from wzcheck.arith.exact import INFINITY, Valuation
from wzcheck.arith.residue import DEFAULT_PRECISION, PrecisionExhausted
from wzcheck.common import logger
from wzcheck.common.utils import half, is_odd_prime, is_prime
from wzcheck.sequences import numbers
from wzcheck.sequences.rings import EXACT, FAST, ExactRing, ResidueRing, Ring

# Exact E_{p-3} is used up to here, its residue mod p beyond. The two differ
# by a multiple of p, so p^3 E_{p-3} is unchanged mod p^4.
EXACT_EULER_LIMIT = 613
BOTH = "both"
PATHS = (EXACT, FAST, BOTH)

Params = Dict[str, int]
# (lhs residue, rhs residue, diff valuation)
Triple = Tuple[Any, Any, Valuation]


class Error(Exception):
    """Base Exception handling class."""


class DomainError(Error):
    """The prime (or index) lies outside the claim's domain."""


class InternalMismatch(Error):
    """The fast and exact paths disagree. Always a bug in this package."""

    def __init__(
        self, claim_id: str, p: int, instance: str, exact_result: Triple, fast_result: Triple
    ) -> None:
        super().__init__(claim_id, p, instance, exact_result, fast_result)
        self.claim_id = claim_id
        self.p = p
        self.instance = instance
        self.exact_result = exact_result
        self.fast_result = fast_result

    def __str__(self) -> str:
        where = f"{self.claim_id} at p={self.p}"
        if self.instance:
            where += f" ({self.instance})"
        return (
            f"fast and exact paths disagree for {where}: "
            f"exact (lhs, rhs, v) = {self.exact_result}, fast = {self.fast_result}"
        )


class PrimeDomain(enum.Enum):
    P_GT3 = "p>3"
    P_ODD = "p odd"
    P_GT2 = "p>2"
    ALL_N = "all n"

    def __str__(self) -> str:
        return self.value

    def contains(self, n: int) -> bool:
        if self is PrimeDomain.ALL_N:
            return n >= 0
        if self is PrimeDomain.P_GT3:
            return n > 3 and is_prime(n)
        return is_odd_prime(n)


class PrimeConstants:
    """The ring elements a right side is built from, for one prime.

    Identities reuse the class with `p` holding their integer index n; only
    `ring` and `p` are meaningful then.
    """

    def __init__(self, p: int, ring: Ring) -> None:
        self.p = p
        self.ring = ring

    @functools.cached_property
    def pp(self) -> Any:
        return self.ring.integer(self.p)

    @functools.cached_property
    def q(self) -> Any:
        """The Fermat quotient q_p(2)."""
        return self.ring.integer(numbers.fermat_quotient(self.p))

    @functools.cached_property
    def s(self) -> Any:
        """(-1)^((p-1)/2)"""
        return self.ring.sign(half(self.p))

    @functools.cached_property
    def E(self) -> Any:
        """E_{p-3}"""
        return self.ring.integer(euler_p3(self.p))

    @functools.cached_property
    def two_pow(self) -> Any:
        """2^(p-1)"""
        return self.ring.power(2, self.p - 1)


def euler_p3(p: int) -> int:
    if p <= EXACT_EULER_LIMIT:
        return numbers.euler_numbers(p - 3)[p - 3]
    return numbers.euler_mod(p - 3, p)


def _single_instance(p: int) -> List[Params]:
    return [{}]


@dataclasses.dataclass(frozen=True)
class Claim:
    """A congruence lhs = rhs (mod p^k), or an exact identity when k = 0.

    Attributes:
        id: Unique claim id.
        domain: Primes (or indices) the claim is stated for.
        modulus_exponent: The k in mod p^k; 0 for exact identities.
        lhs: Left side, called as lhs(constants, **params).
        rhs: Right side, called as rhs(constants, **params).
        source: Anchor of the statement being checked.
        description: One line summary for listings.
        instances: Parameter sets to check at a given prime.
        modulus_for: Per instance modulus exponent, if it varies.
    """

    id: str
    domain: PrimeDomain
    modulus_exponent: int
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    source: str
    description: str = ""
    instances: Callable[[int], List[Params]] = _single_instance
    modulus_for: Optional[Callable[..., int]] = None

    @property
    def is_identity(self) -> bool:
        return self.modulus_exponent == 0

    def exponent(self, params: Params) -> int:
        if self.modulus_for is None:
            return self.modulus_exponent
        return self.modulus_for(**params)


@dataclasses.dataclass(frozen=True)
class VerificationOutcome:
    """Result of checking one claim instance at one prime (or index).

    Attributes:
        claim_id: The claim checked.
        p: The prime, or the index n for identities.
        instance: Parameter label, eg "k=3"; empty when there are none.
        holds: True iff diff_valuation >= modulus_exponent (identities: exact).
        lhs_residue: Left side mod p^k, in [0, p^k); the exact value for identities.
        rhs_residue: Right side mod p^k; the exact value for identities.
        modulus_exponent: The k of this instance.
        diff_valuation: v_p(lhs - rhs); INFINITY when the sides are equal.
        path: exact, fast or both.
    """

    claim_id: str
    p: int
    instance: str
    holds: bool
    lhs_residue: Union[int, Fraction]
    rhs_residue: Union[int, Fraction]
    modulus_exponent: int
    diff_valuation: Valuation
    path: str

    @property
    def sort_key(self) -> Tuple[str, int, str]:
        return (self.claim_id, self.p, self.instance)


def format_instance(params: Params) -> str:
    return ",".join(f"{key}={value}" for key, value in params.items())


def _triple(claim: Claim, p: int, params: Params, ring: Ring, k: int) -> Triple:
    constants = PrimeConstants(p, ring)
    lhs = claim.lhs(constants, **params)
    rhs = claim.rhs(constants, **params)
    diff_valuation = ring.valuation(lhs - rhs, p)
    return (ring.residue(lhs, p, k), ring.residue(rhs, p, k), diff_valuation)


def _evaluate_identity(claim: Claim, n: int, params: Params) -> VerificationOutcome:
    constants = PrimeConstants(n, ExactRing())
    lhs = Fraction(claim.lhs(constants, **params))
    rhs = Fraction(claim.rhs(constants, **params))
    holds = lhs == rhs
    return VerificationOutcome(
        claim_id=claim.id,
        p=n,
        instance=format_instance(params),
        holds=holds,
        lhs_residue=lhs,
        rhs_residue=rhs,
        modulus_exponent=0,
        diff_valuation=INFINITY if holds else 0,
        path=EXACT,
    )


def evaluate_claim(
    claim: Claim,
    p: int,
    path: str = BOTH,
    params: Optional[Params] = None,
    precision: int = DEFAULT_PRECISION,
) -> VerificationOutcome:
    """Evaluates one claim instance at one prime.

    eg:
        evaluate_claim(thm1, 5) -> holds, lhs = rhs = 130 (mod 5^4)

    Arguments:
        claim: The claim to check.
        p: A prime in the claim's domain, or n >= 0 for identities.
        path: "exact", "fast" or "both".
        params: One of claim.instances(p); empty for plain claims.
        precision: Minimum unit precision on the fast path.

    Raises:
        DomainError: If p lies outside the claim's domain.
        PrecisionExhausted: On the fast path, when cancellation hides the result.
        InternalMismatch: On path "both", when the paths disagree.

    Returns:
        The outcome. Path "both" degrades to "exact" when the fast path
        runs out of precision.
    """
    if path not in PATHS:
        raise ValueError(f"Unknown path {path!r}, expected one of {PATHS}")
    if not claim.domain.contains(p):
        raise DomainError(f"{claim.id} is stated for {claim.domain}, got {p}")
    params = params or {}
    if claim.is_identity:
        return _evaluate_identity(claim, p, params)

    k = claim.exponent(params)
    instance = format_instance(params)
    fast_ring = ResidueRing(p, max(precision, k + 2))
    if path == EXACT:
        result = _triple(claim, p, params, ExactRing(), k)
    elif path == FAST:
        result = _triple(claim, p, params, fast_ring, k)
    else:
        result = _triple(claim, p, params, ExactRing(), k)
        try:
            fast_result = _triple(claim, p, params, fast_ring, k)
        except PrecisionExhausted:
            logger.debug("Fast path exhausted for %s at p=%d %s", claim.id, p, instance)
            path = EXACT
        else:
            if fast_result != result:
                raise InternalMismatch(claim.id, p, instance, result, fast_result)

    lhs_residue, rhs_residue, diff_valuation = result
    return VerificationOutcome(
        claim_id=claim.id,
        p=p,
        instance=instance,
        holds=exact.at_least(diff_valuation, k),
        lhs_residue=lhs_residue,
        rhs_residue=rhs_residue,
        modulus_exponent=k,
        diff_valuation=diff_valuation,
        path=path,
    )


def evaluate_instances(
    claim: Claim, p: int, path: str = BOTH, precision: int = DEFAULT_PRECISION
) -> List[VerificationOutcome]:
    """Evaluates every instance of a claim at p."""
    return [
        evaluate_claim(claim, p, path, params, precision)
        for params in claim.instances(p)
    ]


def rhs_value(claim: Claim, p: int, params: Optional[Params] = None) -> Fraction:
    """The exact right side of a claim at p.

    eg:
        rhs_value(thm1, 5) -> 130

    Raises:
        DomainError: If p is not an odd prime (for identities: if n < 0).
    """
    if claim.is_identity:
        if p < 0:
            raise DomainError(f"{claim.id} needs n >= 0, got {p}")
    elif not is_odd_prime(p):
        raise DomainError(f"{claim.id} needs an odd prime, got {p}")
    return Fraction(claim.rhs(PrimeConstants(p, ExactRing()), **(params or {})))

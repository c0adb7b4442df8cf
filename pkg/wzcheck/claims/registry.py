"""The fixed registry of claims, and the decomposition check tying them together.

Every left and right side takes a `PrimeConstants` and is written once for
both evaluation rings.
"""

import dataclasses
from fractions import Fraction
from typing import Any, Dict, List

from wzcheck.arith import exact
from wzcheck.claims.claim import Claim, Params, PrimeConstants, PrimeDomain
from wzcheck.common.utils import half
from wzcheck.sequences.rings import ExactRing
from wzcheck.wz.pairs import WZPairId, eval_F, eval_G, sum_G

HALF = Fraction(1, 2)
JACOBSTHAL_A_MAX = 6
JACOBSTHAL_EXPONENTS = (1, 2)


class Error(Exception):
    """Base Exception handling class."""


class UnknownClaimError(Error):
    """No claim with the given id exists."""


# Theorems and the congruences they are compared with.


def _thm1_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.integer(6 * n + 1) * r.binomial(2 * n, n) ** 3 / r.power(256, n)
        for n in range(c.p)
    )


def _thm1_rhs(c: PrimeConstants) -> Any:
    return c.s * c.pp - c.pp**3 * c.E


def _m4_sum(c: PrimeConstants, upper: int) -> Any:
    r = c.ring
    return r.sum(
        r.integer(20 * n + 3) * r.multinomial4(n) / r.power(-1024, n)
        for n in range(upper + 1)
    )


def _thm2_lhs(c: PrimeConstants) -> Any:
    return _m4_sum(c, c.p - 1)


def _thm2_rhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.integer(3) * c.pp * c.s + r.integer(3) * c.pp**3 * c.E


def _vanhamme_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.integer(4 * k + 1)
        * r.sign(k)
        * (r.pochhammer(HALF, k) / r.factorial(k)) ** 3
        for k in range(half(c.p) + 1)
    )


def _sp(c: PrimeConstants) -> Any:
    return c.s * c.pp


def _zero(c: PrimeConstants) -> Any:
    return c.ring.zero()


def _one(c: PrimeConstants, **params: int) -> Any:
    return c.ring.one()


def _central_cube_sum(c: PrimeConstants, slope: int, base: int) -> Any:
    """sum_{k<p} (slope k + 1) C(2k,k)^3 / base^k"""
    r = c.ring
    return r.sum(
        r.integer(slope * k + 1) * r.binomial(2 * k, k) ** 3 / r.power(base, k)
        for k in range(c.p)
    )


def _guoliu_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.sign(k)
        * r.integer(4 * k - 1)
        * (r.pochhammer(-HALF, k) / r.pochhammer(1, k)) ** 3
        for k in range((c.p + 1) // 2 + 1)
    )


def _guoliu_rhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sign((c.p + 1) // 2) * c.pp + c.pp**3 * (r.integer(2) - c.E)


def _zudilin_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.pochhammer(HALF, n)
        * r.pochhammer(HALF, 2 * n)
        / r.factorial(n) ** 3
        * r.integer(20 * n + 3)
        / r.power(-16, n)
        for n in range(c.p)
    )


def _sun_ijm_rhs(c: PrimeConstants) -> Any:
    r = c.ring
    t = c.two_pow
    return c.pp * c.s * (t + r.integer(2) - (t - r.one()) ** 2)


def _long_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.integer(6 * n + 1) * r.binomial(2 * n, n) ** 3 / r.power(256, n)
        for n in range(half(c.p) + 1)
    )


# Auxiliary congruences.


def _binom_2p1p(c: PrimeConstants) -> Any:
    return c.ring.binomial(2 * c.p - 1, c.p - 1)


def _jacobsthal_instances(p: int) -> List[Params]:
    instances = []
    for a in range(2, JACOBSTHAL_A_MAX + 1):
        for b in range(1, a):
            for r in JACOBSTHAL_EXPONENTS:
                for s in JACOBSTHAL_EXPONENTS:
                    # Both binomials vanish past this point.
                    if b * p**s > a * p**r:
                        continue
                    instances.append({"a": a, "b": b, "r": r, "s": s})
    return instances


def _jacobsthal_lhs(c: PrimeConstants, a: int, b: int, r: int, s: int) -> Any:
    p, ring = c.p, c.ring
    return ring.binomial(a * p**r, b * p**s) / ring.binomial(
        a * p ** (r - 1), b * p ** (s - 1)
    )


def _jacobsthal_modulus(a: int, b: int, r: int, s: int) -> int:
    return r + s + min(r, s)


def _sunimp_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.power(4, k) / (r.integer(k * (2 * k - 1)) * r.binomial(2 * k, k))
        for k in range(1, half(c.p) + 1)
    )


def _two_E(c: PrimeConstants) -> Any:
    return c.ring.integer(2) * c.E


def _kbinom_instances(p: int) -> List[Params]:
    return [{"k": k} for k in range(1, p)]


def _kbinom_lhs(c: PrimeConstants, k: int) -> Any:
    r, p = c.ring, c.p
    return r.integer(k) * r.binomial(2 * k, k) * r.binomial(2 * (p - k), p - k)


def _kbinom_rhs(c: PrimeConstants, k: int) -> Any:
    return c.ring.sign(2 * k // c.p - 1) * c.ring.integer(2) * c.pp


def _zhsun_h_rhs(c: PrimeConstants) -> Any:
    return c.ring.integer(-2) * c.q + c.pp * c.q**2


def _lemma25a_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.binomial(2 * k, k) / (r.integer(2 * k + 1) * r.power(4, k))
        for k in range(half(c.p))
    )


def _lemma25b_lhs(c: PrimeConstants) -> Any:
    r = c.ring
    return r.sum(
        r.binomial(2 * k, k) / (r.integer((2 * k + 1) ** 2) * r.power(4, k))
        for k in range(half(c.p))
    )


def _central_tail(c: PrimeConstants, n: int) -> Any:
    """sum_{k=1}^n C(2k,k) / (k 4^k)"""
    r = c.ring
    return r.sum(
        r.binomial(2 * k, k) / (r.integer(k) * r.power(4, k)) for k in range(1, n + 1)
    )


def _lemma26_prefactor(c: PrimeConstants, n: int) -> Any:
    r = c.ring
    return -r.power(4, n) / (r.integer(2 * n + 1) * r.binomial(2 * n, n))


def _lemma26a_lhs(c: PrimeConstants) -> Any:
    r, n = c.ring, c.p
    return r.sum(
        r.sign(k) * r.binomial(n, k) * r.harmonic(k) / r.integer(2 * k + 1)
        for k in range(1, n + 1)
    )


def _lemma26a_rhs(c: PrimeConstants) -> Any:
    return _lemma26_prefactor(c, c.p) * _central_tail(c, c.p)


def _lemma26b_lhs(c: PrimeConstants) -> Any:
    r, n = c.ring, c.p
    return r.sum(
        r.sign(k) * r.binomial(n, k) * r.harmonic(2 * k) / r.integer(2 * k + 1)
        for k in range(1, n + 1)
    )


def _lemma26b_rhs(c: PrimeConstants) -> Any:
    r, n = c.ring, c.p
    inner = r.harmonic(n) / r.integer(2) + _central_tail(c, n) / r.integer(2)
    return _lemma26_prefactor(c, n) * inner


def _morley_lhs(c: PrimeConstants) -> Any:
    return c.ring.binomial(c.p - 1, half(c.p))


def _morley_rhs(c: PrimeConstants) -> Any:
    return c.s * c.ring.power(4, c.p - 1)


def _h2khk_lhs(c: PrimeConstants) -> Any:
    r, h = c.ring, half(c.p)
    return r.sum(
        r.sign(k)
        * r.binomial(h, k)
        * (r.integer(2) * r.harmonic(2 * k) - r.harmonic(k))
        / r.integer(2 * k + 1)
        for k in range(1, half(c.p - 2) + 1)
    )


def _h2khk_rhs(c: PrimeConstants) -> Any:
    return c.ring.integer(-2) * c.s * c.q**2


# The boundary pieces of the two WZ pairs.


def _fdiag(pair: WZPairId):
    def lhs(c: PrimeConstants) -> Any:
        return eval_F(pair, c.p - 1, c.p - 1, c.ring)

    return lhs


def _ghalf(pair: WZPairId):
    def lhs(c: PrimeConstants) -> Any:
        return sum_G(pair, c.p, 1, half(c.p), c.ring)

    return lhs


def _gmid(pair: WZPairId):
    def lhs(c: PrimeConstants) -> Any:
        return eval_G(pair, c.p, (c.p + 1) // 2, c.ring)

    return lhs


def _gupper(pair: WZPairId):
    def lhs(c: PrimeConstants) -> Any:
        return sum_G(pair, c.p, (c.p + 3) // 2, c.p - 1, c.ring)

    return lhs


def _lemma21_rhs(c: PrimeConstants) -> Any:
    r, p = c.ring, c.pp
    return r.integer(-3) * p**2 - r.integer(12) * p**3 + r.integer(18) * p**3 * c.q


def _lemma23_rhs(c: PrimeConstants) -> Any:
    return -(c.pp**3) * c.E


def _lemma24_rhs(c: PrimeConstants) -> Any:
    r, p, q = c.ring, c.pp, c.q
    return c.s * p * (r.one() - r.integer(3) * p * q + r.integer(6) * p**2 * q**2)


def _lemma28_rhs(c: PrimeConstants) -> Any:
    r, p, q = c.ring, c.pp, c.q
    return r.integer(3) * p**2 * (
        r.one() + r.integer(4) * p - r.integer(6) * p * q
    ) + c.s * r.integer(3) * p**2 * q * (r.one() - r.integer(2) * p * q)


def _lemma31_rhs(c: PrimeConstants) -> Any:
    r, p, q = c.ring, c.pp, c.q
    return r.integer(15) * p**2 * (
        r.integer(-1) - r.integer(6) * p + r.integer(8) * p * q
    )


def _lemma32_rhs(c: PrimeConstants) -> Any:
    return c.ring.integer(3) * c.pp**3 * c.E


def _lemma33_rhs(c: PrimeConstants) -> Any:
    r, p, q = c.ring, c.pp, c.q
    return c.s * r.integer(3) * p * (
        r.one() - r.integer(5) * p * q + r.integer(15) * p**2 * q**2
    )


def _lemma34_rhs(c: PrimeConstants) -> Any:
    r, p, q = c.ring, c.pp, c.q
    return r.integer(15) * p**2 * (
        r.one() + r.integer(6) * p - r.integer(8) * p * q
    ) + c.s * r.integer(15) * p**2 * (q - r.integer(3) * p * q**2)


_P256 = WZPairId.PAIR256
_P1024 = WZPairId.PAIR1024
_GT3 = PrimeDomain.P_GT3
_ODD = PrimeDomain.P_ODD

_CLAIMS = (
    Claim(
        id="thm1",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_thm1_lhs,
        rhs=_thm1_rhs,
        source="Theorem 1.1, p(-1)^{(p-1)/2}-p^3E_{p-3} (mod p^4)",
        description="sum_{n<p} (6n+1) C(2n,n)^3 / 256^n",
    ),
    Claim(
        id="thm2",
        domain=_ODD,
        modulus_exponent=4,
        lhs=_thm2_lhs,
        rhs=_thm2_rhs,
        source="Theorem 1.2, 3p(-1)^{(p-1)/2}+3p^3E_{p-3} (mod p^4)",
        description="sum_{n<p} (20n+3) (4n)!/(n!)^4 / (-1024)^n",
    ),
    Claim(
        id="vanhamme-4k1",
        domain=_ODD,
        modulus_exponent=3,
        lhs=_vanhamme_lhs,
        rhs=_sp,
        source="Eq. (1.1), (4k+1)(-1)^k ((1/2)_k / k!)^3",
        description="sum_{k<=(p-1)/2} (4k+1) (-1)^k ((1/2)_k / k!)^3",
    ),
    Claim(
        id="wolstenholme-h1",
        domain=_GT3,
        modulus_exponent=2,
        lhs=lambda c: c.ring.harmonic(c.p - 1),
        rhs=_zero,
        source="Section 1, H_{p-1} = 0 (mod p^2)",
        description="H_{p-1}",
    ),
    Claim(
        id="wolstenholme-h2",
        domain=_GT3,
        modulus_exponent=1,
        lhs=lambda c: c.ring.harmonic(c.p - 1, order=2),
        rhs=_zero,
        source="Section 1, H^{(2)}_{p-1} = 0 (mod p)",
        description="H^(2)_{p-1}",
    ),
    Claim(
        id="binom-2p1p",
        domain=_GT3,
        modulus_exponent=3,
        lhs=_binom_2p1p,
        rhs=_one,
        source="Eq. (1.2), C(2p-1,p-1) = 1 (mod p^3)",
        description="C(2p-1, p-1)",
    ),
    Claim(
        id="cxh-3k1",
        domain=_GT3,
        modulus_exponent=4,
        lhs=lambda c: _central_cube_sum(c, 3, -8),
        rhs=lambda c: c.pp * c.s + c.pp**3 * c.E,
        source="Section 1, (3k+1)/(-8)^k C(2k,k)^3",
        description="sum_{k<p} (3k+1) C(2k,k)^3 / (-8)^k",
    ),
    Claim(
        id="sun-4k1",
        domain=_GT3,
        modulus_exponent=4,
        lhs=lambda c: _central_cube_sum(c, 4, -64),
        rhs=lambda c: c.s * c.pp + c.pp**3 * c.E,
        source="Eq. (1.3), (4k+1)/(-64)^k C(2k,k)^3",
        description="sum_{k<p} (4k+1) C(2k,k)^3 / (-64)^k",
    ),
    Claim(
        id="guoliu",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_guoliu_lhs,
        rhs=_guoliu_rhs,
        source="Eq. (1.4), p(-1)^{(p+1)/2}+p^3(2-E_{p-3})",
        description="sum_{k<=(p+1)/2} (-1)^k (4k-1) ((-1/2)_k / k!)^3",
    ),
    Claim(
        id="zudilin-20n3",
        domain=_ODD,
        modulus_exponent=3,
        lhs=_zudilin_lhs,
        rhs=lambda c: c.ring.integer(3) * c.pp * c.s,
        source="Eq. (1.5), (20n+3)/2^{4n} = 3p(-1)^{(p-1)/2} (mod p^3)",
        description="sum_{n<p} (1/2)_n (1/2)_{2n} / n!^3 (20n+3) / (-16)^n",
    ),
    Claim(
        id="sun-ijm-20k3",
        domain=_GT3,
        modulus_exponent=4,
        lhs=lambda c: _m4_sum(c, half(c.p)),
        rhs=_sun_ijm_rhs,
        source="Section 1, p(-1)^{(p-1)/2}(2^{p-1}+2-(2^{p-1}-1)^2)",
        description="sum_{k<=(p-1)/2} (20k+3) (4k)!/(k!)^4 / (-1024)^k",
    ),
    Claim(
        id="long-6n1",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_long_lhs,
        rhs=_sp,
        source="Section 1, (6n+1)/256^n C(2n,n)^3 = p(-1)^{(p-1)/2}",
        description="sum_{n<=(p-1)/2} (6n+1) C(2n,n)^3 / 256^n",
    ),
    Claim(
        id="lemma21-Fdiag",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_fdiag(_P256),
        rhs=_lemma21_rhs,
        source="Lemma 2.1, -3p^2-12p^3+18p^3q_p(2)",
        description="F(p-1, p-1) of the 256 pair",
    ),
    Claim(
        id="jacobsthal",
        domain=_GT3,
        modulus_exponent=3,
        lhs=_jacobsthal_lhs,
        rhs=_one,
        source="Eq. (2.5), Jacobsthal's congruence",
        description="C(a p^r, b p^s) / C(a p^{r-1}, b p^{s-1})",
        instances=_jacobsthal_instances,
        modulus_for=_jacobsthal_modulus,
    ),
    Claim(
        id="lemma22-sunimp",
        domain=_GT3,
        modulus_exponent=1,
        lhs=_sunimp_lhs,
        rhs=_two_E,
        source="Lemma 2.2, = 2E_{p-3} (mod p)",
        description="sum_{k=1}^{(p-1)/2} 4^k / (k (2k-1) C(2k,k))",
    ),
    Claim(
        id="lemma23-Ghalf",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_ghalf(_P256),
        rhs=_lemma23_rhs,
        source="Lemma 2.3, -p^3E_{p-3} (mod p^4)",
        description="sum_{k=1}^{(p-1)/2} G(p, k) of the 256 pair",
    ),
    Claim(
        id="sun-kbinom",
        domain=PrimeDomain.P_GT2,
        modulus_exponent=2,
        lhs=_kbinom_lhs,
        rhs=_kbinom_rhs,
        source="Section 2, (-1)^{floor(2k/p)-1} 2p (mod p^2)",
        description="k C(2k,k) C(2(p-k), p-k) for 1 <= k <= p-1",
        instances=_kbinom_instances,
    ),
    Claim(
        id="lemma24-Gmid",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_gmid(_P256),
        rhs=_lemma24_rhs,
        source="Lemma 2.4, (-1)^{(p-1)/2}p(1-3pq_p(2)+6p^2q_p(2)^2)",
        description="G(p, (p+1)/2) of the 256 pair",
    ),
    Claim(
        id="zhsun-h",
        domain=_GT3,
        modulus_exponent=2,
        lhs=lambda c: c.ring.harmonic(half(c.p)),
        rhs=_zhsun_h_rhs,
        source="Section 2, H_{(p-1)/2} = -2q_p(2)+pq_p(2)^2 (mod p^2)",
        description="H_{(p-1)/2}",
    ),
    Claim(
        id="zhsun-h2",
        domain=_GT3,
        modulus_exponent=1,
        lhs=lambda c: c.ring.harmonic(half(c.p), order=2),
        rhs=_zero,
        source="Section 2, H^{(2)}_{(p-1)/2} = 0 (mod p)",
        description="H^(2)_{(p-1)/2}",
    ),
    Claim(
        id="lemma25a",
        domain=_GT3,
        modulus_exponent=2,
        lhs=_lemma25a_lhs,
        rhs=lambda c: -(c.s * c.q),
        source="Lemma 2.5, -(-1)^{(p-1)/2}q_p(2) (mod p^2)",
        description="sum_{k<=(p-3)/2} C(2k,k) / ((2k+1) 4^k)",
    ),
    Claim(
        id="lemma25b",
        domain=_GT3,
        modulus_exponent=1,
        lhs=_lemma25b_lhs,
        rhs=lambda c: -(c.s * c.q**2) / c.ring.integer(2),
        source="Lemma 2.5, -(-1)^{(p-1)/2}q_p(2)^2/2 (mod p)",
        description="sum_{k<=(p-3)/2} C(2k,k) / ((2k+1)^2 4^k)",
    ),
    Claim(
        id="lemma26a",
        domain=PrimeDomain.ALL_N,
        modulus_exponent=0,
        lhs=_lemma26a_lhs,
        rhs=_lemma26a_rhs,
        source="Lemma 2.6, first identity, -4^n/((2n+1)C(2n,n))",
        description="sum_{k=1}^n (-1)^k C(n,k) H_k / (2k+1)",
    ),
    Claim(
        id="lemma26b",
        domain=PrimeDomain.ALL_N,
        modulus_exponent=0,
        lhs=_lemma26b_lhs,
        rhs=_lemma26b_rhs,
        source="Lemma 2.6, second identity, H_n/2 + sum C(2k,k)/(2k 4^k)",
        description="sum_{k=1}^n (-1)^k C(n,k) H_{2k} / (2k+1)",
    ),
    Claim(
        id="lemma27-morley",
        domain=_GT3,
        modulus_exponent=3,
        lhs=_morley_lhs,
        rhs=_morley_rhs,
        source="Lemma 2.7, (-1)^{(p-1)/2}4^{p-1} (mod p^3)",
        description="C(p-1, (p-1)/2)",
    ),
    Claim(
        id="lemma28-Gupper",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_gupper(_P256),
        rhs=_lemma28_rhs,
        source="Lemma 2.8, 3p^2(1+4p-6pq_p(2))+(-1)^{(p-1)/2}3p^2q_p(2)(1-2pq_p(2))",
        description="sum_{k=(p+3)/2}^{p-1} G(p, k) of the 256 pair",
    ),
    Claim(
        id="h2khk",
        domain=_GT3,
        modulus_exponent=1,
        lhs=_h2khk_lhs,
        rhs=_h2khk_rhs,
        source="Eq. (2.8), -2(-1)^{(p-1)/2}q_p(2)^2 (mod p)",
        description="sum_{k=1}^{(p-3)/2} (-1)^k C((p-1)/2,k) (2H_{2k}-H_k) / (2k+1)",
    ),
    Claim(
        id="lemma31-Fdiag",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_fdiag(_P1024),
        rhs=_lemma31_rhs,
        source="Lemma 3.1, 15p^2(-1-6p+8pq_p(2))",
        description="F(p-1, p-1) of the 1024 pair",
    ),
    Claim(
        id="lemma32-Ghalf",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_ghalf(_P1024),
        rhs=_lemma32_rhs,
        source="Lemma 3.2, sum_{k=1}^{(p-1)/2} G(p,k), 3p^3E_{p-3} (mod p^4)",
        description="sum_{k=1}^{(p-1)/2} G(p, k) of the 1024 pair",
    ),
    Claim(
        id="lemma33-Gmid",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_gmid(_P1024),
        rhs=_lemma33_rhs,
        source="Lemma 3.3, (-1)^{(p-1)/2}3p(1-5pq_p(2)+15p^2q_p(2)^2)",
        description="G(p, (p+1)/2) of the 1024 pair",
    ),
    Claim(
        id="lemma34-Gupper",
        domain=_GT3,
        modulus_exponent=4,
        lhs=_gupper(_P1024),
        rhs=_lemma34_rhs,
        source="Lemma 3.4, 15p^2(1+6p-8pq_p(2))+(-1)^{(p-1)/2}15p^2(q_p(2)-3pq_p(2)^2)",
        description="sum_{k=(p+3)/2}^{p-1} G(p, k) of the 1024 pair",
    ),
)

_BY_ID: Dict[str, Claim] = {claim.id: claim for claim in _CLAIMS}


def registry() -> List[Claim]:
    """All claims, in a fixed order."""
    return list(_CLAIMS)


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaimError(f"No claim with id {claim_id!r}") from None


@dataclasses.dataclass(frozen=True)
class SplitCheck:
    """How a theorem's left side splits along the boundary of its WZ pair.

    Attributes:
        pair: The WZ pair.
        p: The prime.
        split_holds: theorem lhs = F(p-1,p-1) + G over k <= (p-1)/2, k = (p+1)/2
            and k >= (p+3)/2, exactly.
        rhs_holds: the four lemma right sides sum to the theorem right side
            mod p^4.
        theorem_lhs: The theorem's left side.
        pieces: The sum of the four lemma left sides.
    """

    pair: WZPairId
    p: int
    split_holds: bool
    rhs_holds: bool
    theorem_lhs: Fraction
    pieces: Fraction

    @property
    def holds(self) -> bool:
        return self.split_holds and self.rhs_holds


_SPLITS = {
    _P256: ("thm1", ("lemma21-Fdiag", "lemma23-Ghalf", "lemma24-Gmid", "lemma28-Gupper")),
    _P1024: ("thm2", ("lemma31-Fdiag", "lemma32-Ghalf", "lemma33-Gmid", "lemma34-Gupper")),
}


def check_decomposition(pair: WZPairId, p: int) -> SplitCheck:
    """Checks a theorem against the four boundary lemmas of its WZ pair.

    Arguments:
        pair: The WZ pair.
        p: A prime > 3.

    Raises:
        ValueError: If p is not a prime > 3.
    """
    if not PrimeDomain.P_GT3.contains(p):
        raise ValueError(f"Decomposition needs a prime > 3, got {p}")
    theorem_id, lemma_ids = _SPLITS[pair]
    theorem = get_claim(theorem_id)
    lemmas = [get_claim(claim_id) for claim_id in lemma_ids]
    c = PrimeConstants(p, ExactRing())
    pieces = sum((Fraction(lemma.lhs(c)) for lemma in lemmas), Fraction(0))
    rhs_sum = sum((Fraction(lemma.rhs(c)) for lemma in lemmas), Fraction(0))
    theorem_lhs = Fraction(theorem.lhs(c))
    return SplitCheck(
        pair=pair,
        p=p,
        split_holds=theorem_lhs == pieces,
        rhs_holds=exact.congruent(rhs_sum, theorem.rhs(c), p, 4),
        theorem_lhs=theorem_lhs,
        pieces=pieces,
    )

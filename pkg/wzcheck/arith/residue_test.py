"""Unit tests for residue.py"""

import operator
import random
import unittest
from fractions import Fraction

from wzcheck.arith import exact
from wzcheck.arith.residue import (
    FactoredResidue,
    PrecisionExhausted,
    fr_add,
    fr_div,
    fr_mul,
)


def _fr(v: int, u: int, p: int = 5, prec: int = 4) -> FactoredResidue:
    return FactoredResidue(p=p, v=v, u=u, prec=prec)


def _represents(r: FactoredResidue, x: Fraction) -> bool:
    """True iff r agrees with x up to r's absolute precision."""
    if r.is_zero:
        return x == 0
    return exact.congruent(x, Fraction(r.p) ** r.v * r.u, r.p, r.abs_prec)


class FactoredResidueTest(unittest.TestCase):
    def test_mul_adds_valuations(self):
        """Verify (v=1,u=2)(v=2,u=3) = (v=3,u=6)."""
        self.assertEqual(_fr(3, 6), fr_mul(_fr(1, 2), _fr(2, 3)))

    def test_mul_abs_prec(self):
        """Verify a product is known to min(v1 + abs2, v2 + abs1)."""
        a, b = _fr(1, 2), _fr(2, 3, prec=3)
        self.assertEqual(min(1 + b.abs_prec, 2 + a.abs_prec), (a * b).abs_prec)

    def test_add_different_valuations(self):
        """Verify 1 + 5 = 6."""
        self.assertEqual(_fr(0, 6), fr_add(_fr(0, 1), _fr(1, 1)))

    def test_add_renormalizes(self):
        """Verify 10 + 15 = 25 = 5^2 * 1 with absolute precision 5."""
        total = fr_add(_fr(1, 2), _fr(1, 3))
        self.assertEqual(2, total.v)
        self.assertEqual(1, total.u)
        self.assertEqual(5, total.abs_prec)
        self.assertEqual(3, total.prec)

    def test_add_fails_precision_exhausted(self):
        """Verify full cancellation raises PrecisionExhausted."""
        with self.assertRaises(PrecisionExhausted):
            fr_add(_fr(1, 2), _fr(1, 625 - 2))

    def test_sub_of_self_exhausts(self):
        """Verify x - x cannot be told apart from zero."""
        x = FactoredResidue.from_int(1234, 7)
        with self.assertRaises(PrecisionExhausted):
            _ = x - x

    def test_div(self):
        """Verify division subtracts valuations and inverts the unit."""
        q = fr_div(_fr(3, 6), _fr(2, 3))
        self.assertEqual(_fr(1, 2), q)

    def test_div_fails_zero(self):
        """Verify division by exact zero fails."""
        with self.assertRaises(ZeroDivisionError):
            fr_div(_fr(0, 1), FactoredResidue.zero(5))

    def test_zero_is_distinguished(self):
        """Verify exact zero absorbs products and is neutral for sums."""
        zero = FactoredResidue.zero(5)
        self.assertTrue(zero.is_zero)
        self.assertIs(exact.INFINITY, zero.abs_prec)
        self.assertEqual(zero, zero * _fr(1, 2))
        self.assertEqual(_fr(1, 2), zero + _fr(1, 2))
        self.assertEqual(zero, FactoredResidue.from_int(0, 5))
        self.assertEqual(0, zero.residue(4))

    def test_from_rational(self):
        """Verify a rational is split into p-power and unit."""
        r = FactoredResidue.from_rational(Fraction(250, 3), 5, prec=2)
        self.assertEqual(3, r.v)
        self.assertEqual(2 * pow(3, -1, 25) % 25, r.u)

    def test_residue_fails_negative_valuation(self):
        """Verify a residue of a non-integral value is refused."""
        with self.assertRaises(exact.NegativeValuation):
            FactoredResidue.from_rational(Fraction(1, 5), 5).residue(1)

    def test_residue_fails_beyond_precision(self):
        """Verify a residue beyond the absolute precision is refused."""
        with self.assertRaises(PrecisionExhausted):
            _fr(1, 2).residue(6)

    def test_residue_matches_reduce_mod(self):
        """Verify residue agrees with reduce_mod."""
        x = Fraction(-360 * 7, 11)
        r = FactoredResidue.from_rational(x, 5)
        self.assertEqual(exact.reduce_mod(x, 5, 4), r.residue(4))

    def test_pow(self):
        """Verify integer powers, including negative ones."""
        two = FactoredResidue.from_int(2, 7)
        self.assertEqual(FactoredResidue.from_int(64, 7), two**6)
        self.assertEqual(FactoredResidue.from_rational(Fraction(1, 8), 7), two**-3)
        seven = FactoredResidue.from_int(7, 7)
        self.assertEqual(-2, (seven**-2).v)

    def test_sum_builtin(self):
        """Verify sum() works from its integer start value."""
        terms = [FactoredResidue.from_int(n, 3) for n in (1, 2, 4)]
        self.assertEqual(FactoredResidue.from_int(7, 3), sum(terms))

    def test_mixed_primes_rejected(self):
        """Verify operands must share the prime."""
        with self.assertRaises(ValueError):
            fr_mul(_fr(0, 1, p=5), _fr(0, 1, p=7))

    def test_embedding_homomorphism(self):
        """Verify random operation chains agree with exact arithmetic."""
        rng = random.Random(11)
        ops = [operator.mul, operator.truediv, operator.add, operator.sub]
        for p in (3, 5, 7, 13):
            for _ in range(40):
                x = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
                x *= Fraction(p) ** rng.randint(-6, 6)
                r = FactoredResidue.from_rational(x, p)
                for _ in range(8):
                    y = Fraction(rng.randint(1, 10**6), rng.randint(1, 10**6))
                    y *= Fraction(p) ** rng.randint(-6, 6)
                    op = rng.choice(ops)
                    try:
                        r2 = op(r, FactoredResidue.from_rational(y, p))
                    except PrecisionExhausted:
                        continue
                    x, r = op(x, y), r2
                    self.assertTrue(_represents(r, x), (p, x, r))


if __name__ == "__main__":
    unittest.main()

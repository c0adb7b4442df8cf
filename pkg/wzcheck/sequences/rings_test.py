"""Unit tests for rings.py"""

import unittest
from fractions import Fraction

from wzcheck.arith import exact
from wzcheck.arith.residue import FactoredResidue
from wzcheck.sequences import rings


def _summand(ring: rings.Ring, n: int):
    """(6n+1) C(2n,n)^3 / 256^n"""
    return ring.integer(6 * n + 1) * ring.binomial(2 * n, n) ** 3 / ring.power(256, n)


class ExactRingTest(unittest.TestCase):
    def setUp(self):
        self.ring = rings.ExactRing()

    def test_elements_are_fractions(self):
        """Verify the exact ring hands out Fractions."""
        self.assertEqual(Fraction(15), self.ring.binomial(-5, 2))
        self.assertEqual(Fraction(120), self.ring.factorial(5))
        self.assertEqual(Fraction(24), self.ring.multinomial4(1))
        self.assertEqual(Fraction(-1), self.ring.sign(3))
        self.assertEqual(Fraction(1, 16), self.ring.power(4, -2))

    def test_harmonic_orders(self):
        """Verify harmonic sums of order one, two and three."""
        self.assertEqual(Fraction(25, 12), self.ring.harmonic(4))
        self.assertEqual(Fraction(5, 4), self.ring.harmonic(2, order=2))
        self.assertEqual(Fraction(9, 8), self.ring.harmonic(2, order=3))

    def test_residue_and_valuation(self):
        """Verify reduction and valuation defer to exact arithmetic."""
        x = Fraction(125, 12)
        self.assertEqual(exact.reduce_mod(x, 5, 4), self.ring.residue(x, 5, 4))
        self.assertEqual(3, self.ring.valuation(x, 5))

    def test_thm_sum_at_five(self):
        """Verify sum_{n<5} (6n+1) C(2n,n)^3 / 256^n = 130 (mod 5^4)."""
        total = self.ring.sum(_summand(self.ring, n) for n in range(5))
        self.assertEqual(130, self.ring.residue(total, 5, 4))


class ResidueRingTest(unittest.TestCase):
    def test_elements_are_factored(self):
        """Verify the residue ring hands out FactoredResidues."""
        ring = rings.ResidueRing(5, 4)
        self.assertIsInstance(ring.binomial(6, 3), FactoredResidue)
        self.assertEqual(FactoredResidue.from_int(15, 5, 4), ring.binomial(-5, 2))

    def test_binomial_zero_cases(self):
        """Verify out of range binomials are exact zero."""
        ring = rings.ResidueRing(7)
        self.assertTrue(ring.binomial(3, 4).is_zero)
        self.assertTrue(ring.binomial(3, -1).is_zero)
        self.assertTrue(ring.binomial(-3, -2).is_zero)

    def test_thm_sum_at_five(self):
        """Verify the fast ring reproduces 130 (mod 5^4)."""
        ring = rings.ResidueRing(5, 6)
        total = ring.sum(_summand(ring, n) for n in range(5))
        self.assertEqual(130, ring.residue(total, 5, 4))
        self.assertEqual(1, ring.valuation(total, 5))

    def test_agrees_with_exact(self):
        """Verify both rings agree term by term modulo p^4."""
        exact_ring = rings.ExactRing()
        for p in (5, 7, 11, 13):
            fast_ring = rings.ResidueRing(p, 6)
            for n in range(p):
                x = _summand(exact_ring, n)
                y = _summand(fast_ring, n)
                self.assertEqual(exact_ring.valuation(x, p), fast_ring.valuation(y, p))
                self.assertEqual(exact_ring.residue(x, p, 4), fast_ring.residue(y, p, 4))

    def test_pochhammer_and_harmonic(self):
        """Verify default pochhammer and harmonic against exact values."""
        ring = rings.ResidueRing(7, 5)
        self.assertEqual(
            exact.reduce_mod(Fraction(15, 8), 7, 5),
            ring.residue(ring.pochhammer(Fraction(1, 2), 3), 7, 5),
        )
        self.assertEqual(
            exact.reduce_mod(Fraction(25, 12), 7, 5),
            ring.residue(ring.harmonic(4), 7, 5),
        )

    def test_multinomial4(self):
        """Verify (4n)!/(n!)^4 through factored factorials."""
        ring = rings.ResidueRing(5, 4)
        self.assertEqual(FactoredResidue.from_int(2520, 5, 4), ring.multinomial4(2))


if __name__ == "__main__":
    unittest.main()

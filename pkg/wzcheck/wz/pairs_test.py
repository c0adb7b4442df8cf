"""Unit tests for pairs.py"""

import unittest
from fractions import Fraction

from wzcheck.arith import exact
from wzcheck.arith.residue import PrecisionExhausted
from wzcheck.common.utils import half, primes_in
from wzcheck.sequences import numbers
from wzcheck.sequences.rings import ResidueRing
from wzcheck.wz import pairs
from wzcheck.wz.pairs import WZPairId

P256 = WZPairId.PAIR256
P1024 = WZPairId.PAIR1024


class EvalTest(unittest.TestCase):
    def test_eval_F_examples(self):
        """Verify F values for both pairs."""
        self.assertEqual(Fraction(1), pairs.eval_F(P256, 0, 0))
        self.assertEqual(Fraction(15, 16), pairs.eval_F(P256, 1, 1))
        self.assertEqual(Fraction(7, 32), pairs.eval_F(P256, 1, 0))
        self.assertEqual(Fraction(-69, 128), pairs.eval_F(P1024, 1, 0))
        self.assertEqual(Fraction(3), pairs.eval_F(P1024, 0, 0))

    def test_eval_G_examples(self):
        """Verify G values for both pairs."""
        self.assertEqual(Fraction(1), pairs.eval_G(P256, 1, 1))
        self.assertEqual(Fraction(9, 32), pairs.eval_G(P256, 2, 1))
        self.assertEqual(Fraction(0), pairs.eval_G(P256, 0, 3))
        self.assertEqual(Fraction(3), pairs.eval_G(P1024, 1, 1))
        self.assertEqual(Fraction(-315, 128), pairs.eval_G(P1024, 2, 1))

    def test_zero_below_diagonal(self):
        """Verify F(n,k) = G(n,k) = 0 for n < k <= 40."""
        for pair in WZPairId:
            for k in range(1, 41):
                for n in range(k):
                    self.assertEqual(0, pairs.eval_F(pair, n, k), (pair, n, k))
                    self.assertEqual(0, pairs.eval_G(pair, n, k), (pair, n, k))

    def test_G_vanishes_on_row_zero(self):
        """Verify G(0, k) = 0."""
        for pair in WZPairId:
            for k in range(0, 10):
                self.assertEqual(0, pairs.eval_G(pair, 0, k))

    def test_column_zero_links_pair256(self):
        """Verify F(n, 0) = (6n+1) C(2n,n)^3 / 256^n."""
        for n in range(61):
            expected = Fraction((6 * n + 1) * numbers.binomial(2 * n, n) ** 3, 256**n)
            self.assertEqual(expected, pairs.eval_F(P256, n, 0))

    def test_column_zero_links_pair1024(self):
        """Verify F(n, 0) = (20n+3) (4n)!/(n!)^4 / (-1024)^n."""
        for n in range(61):
            expected = Fraction((20 * n + 3) * numbers.multinomial4(n), (-1024) ** n)
            self.assertEqual(expected, pairs.eval_F(P1024, n, 0))

    def test_negative_indices_fail(self):
        """Verify negative indices are refused."""
        with self.assertRaises(ValueError):
            pairs.eval_F(P256, -1, 0)
        with self.assertRaises(ValueError):
            pairs.eval_G(P1024, 0, -2)

    def test_terms(self):
        """Verify the WZTerm pair at (2, 1)."""
        f, g = pairs.terms(P256, 2, 1)
        self.assertEqual("F", f.name)
        self.assertEqual(Fraction(9, 32), g.value)
        self.assertEqual("G_Pair256(2,1) = 9/32", str(g))


class TelescopingTest(unittest.TestCase):
    def test_examples(self):
        """Verify the relation at (1,1) and on an all-zero cell."""
        self.assertTrue(pairs.check_telescoping(P256, 1, 1))
        self.assertTrue(pairs.check_telescoping(P256, 0, 2))
        self.assertTrue(pairs.check_telescoping(P1024, 1, 1))

    def test_both_sides_at_one_one(self):
        """Verify both sides equal -23/32 for the 256 pair at (1,1)."""
        lhs = pairs.eval_F(P256, 1, 0) - pairs.eval_F(P256, 1, 1)
        rhs = pairs.eval_G(P256, 2, 1) - pairs.eval_G(P256, 1, 1)
        self.assertEqual(Fraction(-23, 32), lhs)
        self.assertEqual(lhs, rhs)

    def test_small_grid(self):
        """Verify telescoping on 0 <= n <= 25, 1 <= k <= 25."""
        for pair in WZPairId:
            for n in range(26):
                for k in range(1, 26):
                    self.assertTrue(pairs.check_telescoping(pair, n, k), (pair, n, k))

    def test_k_zero_fails(self):
        """Verify k = 0 is refused."""
        with self.assertRaises(ValueError):
            pairs.check_telescoping(P256, 3, 0)


class BoundaryTest(unittest.TestCase):
    def test_p_one(self):
        """Verify the trivial case F(0,0) = F(0,0)."""
        check = pairs.boundary_identity(P256, 1)
        self.assertTrue(check.holds)
        self.assertEqual(Fraction(1), check.lhs)

    def test_small_p(self):
        """Verify the boundary identity for every integer 1 <= p <= 30."""
        for pair in WZPairId:
            for p in range(1, 31):
                check = pairs.boundary_identity(pair, p)
                self.assertTrue(check.holds, (pair, p))
                self.assertEqual(check.lhs, check.rhs)

    def test_p_zero_fails(self):
        """Verify p = 0 is refused."""
        with self.assertRaises(ValueError):
            pairs.boundary_identity(P1024, 0)


class FastTest(unittest.TestCase):
    def test_agrees_with_exact(self):
        """Verify fast terms reduce like exact terms for p < 30 and n, k <= 2p."""
        for p in primes_in(3, 30):
            for pair in WZPairId:
                for n in range(0, 2 * p + 1):
                    for k in range(0, n + 1, max(1, n // 6)):
                        for fast, slow in (
                            (pairs.eval_F_fast, pairs.eval_F),
                            (pairs.eval_G_fast, pairs.eval_G),
                        ):
                            x = slow(pair, n, k)
                            r = fast(pair, n, k, p)
                            self.assertEqual(exact.valuation(x, p), r.v, (pair, n, k, p))
                            if exact.at_least(exact.valuation(x, p), 0):
                                self.assertEqual(
                                    exact.reduce_mod(x, p, 4), r.residue(4), (pair, n, k, p)
                                )

    def test_fast_zero_below_diagonal(self):
        """Verify fast terms are exact zero for n < k."""
        self.assertTrue(pairs.eval_F_fast(P1024, 2, 5, 7).is_zero)
        self.assertTrue(pairs.eval_G_fast(P256, 3, 4, 7).is_zero)

    def test_diagonal_valuation(self):
        """Verify v_5(F(4,4)) >= 2 for the 256 pair."""
        self.assertGreaterEqual(pairs.eval_F_fast(P256, 4, 4, 5).v, 2)

    def test_middle_valuation(self):
        """Verify v_7(G(7,4)) = 1 for the 1024 pair."""
        self.assertEqual(1, pairs.eval_G_fast(P1024, 7, 4, 7).v)

    def test_fast_needs_odd_prime(self):
        """Verify the fast path refuses 2 and composites."""
        with self.assertRaises(ValueError):
            pairs.eval_F_fast(P256, 1, 1, 2)
        with self.assertRaises(ValueError):
            pairs.eval_G_fast(P256, 1, 1, 9)

    def test_sum_G_matches_ring(self):
        """Verify sum_G over a residue ring reduces like the exact sum."""
        p = 11
        exact_sum = pairs.sum_G(P256, p, 1, half(p))
        try:
            fast_sum = pairs.sum_G(P256, p, 1, half(p), ResidueRing(p, 8))
        except PrecisionExhausted:
            self.skipTest("cancellation")
        self.assertEqual(exact.reduce_mod(exact_sum, p, 4), fast_sum.residue(4))

    def test_sum_G_empty(self):
        """Verify an empty range sums to zero."""
        self.assertEqual(0, pairs.sum_G(P1024, 5, 4, 3))


class RewrittenTest(unittest.TestCase):
    def test_matches_G(self):
        """Verify the rewritten forms equal G(p, k) for odd p <= 23."""
        for pair in WZPairId:
            for p in range(3, 24, 2):
                for k in range(1, p):
                    self.assertEqual(
                        pairs.eval_G(pair, p, k), pairs.rewritten_G(pair, p, k), (pair, p, k)
                    )

    def test_rewritten_over_residues(self):
        """Verify the rewritten 1024 form through the residue ring."""
        p = 13
        ring = ResidueRing(p, 6)
        for k in range(1, p):
            self.assertEqual(
                pairs.eval_G_fast(P1024, p, k, p).residue(4),
                pairs.rewritten_G(P1024, p, k, ring).residue(4),
            )

    def test_bad_arguments(self):
        """Verify even p and k out of range are refused."""
        with self.assertRaises(ValueError):
            pairs.rewritten_G(P256, 4, 1)
        with self.assertRaises(ValueError):
            pairs.rewritten_G(P1024, 7, 7)
        with self.assertRaises(ValueError):
            pairs.rewritten_G(P1024, 7, 0)


if __name__ == "__main__":
    unittest.main()

# encoding: utf-8
"""
Unit tests for pyGentle/bands.py
$Id$
"""

import unittest
from pyGentle import words, bands, morphisms
from pyGentle.bands import BandSpec, band_band_dim, band_string_dim, self_ext_positive, band_grid
from pyGentle.oracle import Oracle
from pyGentle.complexes import build_complex
from pyGentle.common import KindMismatchError, InvalidParametersError
from quivertests import running_example

Z = "(d,3,2)(e,2,1)(f,1,0)(c,0,1)(b,1,2)(a,2,3)"
W5 = "(e,2,1)(f,1,0)(c,0,1)(b,1,2)(a*f,2,3)"


# ==============================================================================
class BandSpecTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()
        self.z = words.parse_word(Z, self.A)

    def test_create(self):
        x = BandSpec(self.z, 2, 3)
        self.assertEqual(x.r, 3)
        self.assertEqual(x.scalar, 2)
        self.assertEqual(x.one_dimensional().dim, 1)
        self.assertEqual(x.full_word().dim, 3)
        self.assertEqual(x.complex().total_rank(), 18)

    def test_scalar_from_text(self):
        self.assertEqual(BandSpec(self.z, "5").scalar, 5)

    def test_invalid(self):
        self.assertRaises(KindMismatchError, BandSpec, words.parse_word(W5, self.A))
        self.assertRaises(InvalidParametersError, BandSpec, self.z, 0)
        self.assertRaises(InvalidParametersError, BandSpec, self.z, 1, 0)

    def test_shifted(self):
        x = BandSpec(self.z, 2, 2).shifted(1)
        self.assertEqual(x.r, 2)
        self.assertEqual(x.word.degree_range(), (-1, 2))


# ==============================================================================
class BandDimensionTest(unittest.TestCase):
    """Band formulas against the oracle on the explicit r-dimensional complexes."""

    def setUp(self):
        self.A = running_example()
        self.z = words.parse_word(Z, self.A)
        self.oracle = Oracle()

    def check(self, x, y):
        expected = self.oracle.hom_dim(x.complex(), y.complex())
        self.assertEqual(band_band_dim(x, y), expected, "%s -> %s" % (x, y))

    def test_one_dimensional(self):
        x = BandSpec(self.z, 2)
        self.assertEqual(band_band_dim(x, x), morphisms.hom_dim(x.word, x.word))

    def test_same_band(self):
        for r in (1, 2):
            for s in (1, 2):
                self.check(BandSpec(self.z, 2, r), BandSpec(self.z, 2, s))

    def test_different_scalars(self):
        """λ ≠ μ: no identity contribution."""
        x, y = BandSpec(self.z, 1, 2), BandSpec(self.z, 2, 1)
        self.check(x, y)
        self.assertEqual(band_band_dim(x, y), 2 * morphisms.hom_dim(x.word, y.word))

    def test_shifted_self(self):
        for r in (1, 2):
            for s in (1, 2):
                self.check(BandSpec(self.z, 2, r), BandSpec(self.z, 2, s).shifted(1))

    def test_symmetry(self):
        x, y = BandSpec(self.z, 2, 1), BandSpec(self.z, 2, 2)
        self.assertEqual(band_band_dim(x, y), band_band_dim(y, x))


# ==============================================================================
class BandStringTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()
        self.z = words.parse_word(Z, self.A)
        self.u = words.parse_word(W5, self.A)
        self.oracle = Oracle()

    def test_both_directions(self):
        x = BandSpec(self.z, 2, 2)
        P = build_complex(self.u)
        self.assertEqual(band_string_dim(x, self.u, bands.TO), self.oracle.hom_dim(x.complex(), P))
        self.assertEqual(band_string_dim(x, self.u, bands.FROM), self.oracle.hom_dim(P, x.complex()))

    def test_linear_in_r(self):
        one = band_string_dim(BandSpec(self.z, 2, 1), self.u)
        self.assertEqual(band_string_dim(BandSpec(self.z, 2, 3), self.u), 3 * one)

    def test_errors(self):
        x = BandSpec(self.z, 2)
        self.assertRaises(KindMismatchError, band_string_dim, x, x.word)
        self.assertRaises(InvalidParametersError, band_string_dim, x, self.u, "sideways")


# ==============================================================================
class SelfExtensionTest(unittest.TestCase):

    def setUp(self):
        self.x = BandSpec(words.parse_word(Z, running_example()), 2)

    def test_degree_three(self):
        """A graph map of degree 3 links the band to its third shift."""
        self.assertTrue(self_ext_positive(self.x, 3))

    def test_identity_and_first_shift(self):
        self.assertTrue(self_ext_positive(self.x, 0))
        self.assertTrue(self_ext_positive(self.x, 1))

    def test_grid(self):
        rows = band_grid(self.x.word, self.x.word, [1, 2], [1, 2], [0, 3])
        self.assertEqual(len(rows), 2 * 2 * 2 * 2 * 2)
        for r, s, lam, mu, k, dim in rows:
            self.assertTrue(dim >= 0)
            if k == 0 and lam == mu:
                self.assertTrue(dim >= min(r, s))


if __name__ == "__main__":
    unittest.main()

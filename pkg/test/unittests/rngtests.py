"""
Unit tests for pyGentle/random.py
$Id$
"""

import unittest
from pyGentle import random, quivers
from quivertests import running_example


# ==============================================================================
class SimpleTests(unittest.TestCase):
    """Simple tests on a single RNG function."""

    def setUp(self):
        self.rng = random.NumpyRNG(seed=987)

    def test_invalid_seed(self):
        self.assertRaises(AssertionError, random.NumpyRNG, seed=2.3)

    def test_same_seed_same_permutation(self):
        a = random.NumpyRNG(seed=1234).permutation(range(20))
        b = random.NumpyRNG(seed=1234).permutation(range(20))
        self.assertEqual(a, b)

    def test_describe(self):
        self.assertEqual(self.rng.describe(), "NumpyRNG() with seed 987")


# ==============================================================================
class SubsampleTests(unittest.TestCase):

    def test_keeps_order(self):
        rng = random.NumpyRNG(seed=1234)
        items = list(range(100))
        chosen = rng.subsample(items, 10)
        self.assertEqual(len(chosen), 10)
        self.assertEqual(chosen, sorted(chosen))
        self.assertEqual(len(set(chosen)), 10)

    def test_all_items(self):
        rng = random.NumpyRNG(seed=1234)
        self.assertEqual(rng.subsample("abc", 5), ["a", "b", "c"])

    def test_reproducible(self):
        first = random.NumpyRNG(seed=42).subsample(range(50), 7)
        second = random.NumpyRNG(seed=42).subsample(range(50), 7)
        self.assertEqual(first, second)

    def test_permutation(self):
        rng = random.NumpyRNG(seed=1000)
        A = list(range(10))
        self.assertEqual(sorted(rng.permutation(A)), A)


# ==============================================================================
class RenamingTests(unittest.TestCase):

    def test_bijective(self):
        A = running_example()
        renamed, arrow_map, vertex_map = random.random_renaming(A, random.NumpyRNG(seed=7))
        self.assertEqual(sorted(arrow_map.values()), ["x%d" % i for i in range(6)])
        self.assertEqual(sorted(vertex_map.values()), ["v%d" % i for i in range(5)])
        self.assertEqual(len(renamed.relations), len(A.relations))

    def test_cycle_arrows_invariant(self):
        """Renaming arrows renames the cycle arrows and nothing else."""
        for A in (running_example(), quivers.discrete_algebra(2, 3, 1)):
            for seed in (1, 2, 3):
                renamed, arrow_map, vertex_map = random.random_renaming(A, random.NumpyRNG(seed=seed))
                expected = set(arrow_map[a] for a in quivers.cycle_arrows(A))
                self.assertEqual(set(quivers.cycle_arrows(renamed)), expected)


if __name__ == "__main__":
    unittest.main()

"""
Seeded random number generation for sweeps and tests: subsampling of word
pairs and random renamings of an algebra.

Classes:
    NumpyRNG           - uses the numpy.random.RandomState RNG

Functions:
    random_renaming()

$Id$
"""

import sys
import logging
import numpy.random

logger = logging.getLogger("pyGentle")


class NumpyRNG(object):
    """Wrapper for the numpy.random.RandomState class (Mersenne Twister PRNG)."""

    def __init__(self, seed=None):
        if seed:
            assert isinstance(seed, int), "`seed` must be an int (< %d), not a %s" % (sys.maxsize, type(seed).__name__)
        self.seed = seed
        self.rng = numpy.random.RandomState()
        if self.seed:
            self.rng.seed(self.seed)
        else:
            self.rng.seed()

    def subsample(self, items, k):
        """
        Return k of the items, chosen without replacement, in their original
        order. All items are returned when k is at least their number.
        """
        items = list(items)
        if k >= len(items):
            return items
        chosen = numpy.sort(self.rng.choice(len(items), size=k, replace=False))
        logger.debug("subsample: %d of %d items" % (k, len(items)))
        return [items[i] for i in chosen]

    def permutation(self, items):
        items = list(items)
        return [items[i] for i in self.rng.permutation(len(items))]

    def describe(self):
        return "NumpyRNG() with seed %s" % self.seed


def random_renaming(algebra, rng=None):
    """
    Return (renamed algebra, arrow map, vertex map) for a random bijective
    renaming of the arrows and vertices of `algebra`.
    """
    rng = rng or NumpyRNG()
    arrows = list(algebra.arrow_names)
    vertices = list(algebra.vertices)
    arrow_map = dict(zip(arrows, ["x%d" % i for i in rng.permutation(range(len(arrows)))]))
    vertex_map = dict(zip(vertices, ["v%d" % i for i in rng.permutation(range(len(vertices)))]))
    renamed = algebra.rename(arrow_map, vertex_map, name="%s-renamed" % algebra.name)
    return renamed, arrow_map, vertex_map

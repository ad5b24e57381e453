# encoding: utf-8
"""
Dimensions of morphism spaces involving r-dimensional band complexes.

Everything is reduced to the one-dimensional band B_{w,λ,1}, whose morphism
spaces are computed combinatorially by morphisms.hom_dim():

    hom(B_{v,λ,r}, B_{w,μ,s}) = min(r,s)·δ + rs·(hom(B_{v,λ,1}, B_{w,μ,1}) - δ)

with δ = 1 iff the one-dimensional bands are isomorphic, except when
B_{w,μ,1} ≅ ΣB_{v,λ,1}, where

    hom(B_{v,λ,r}, B_{w,μ,s}) = min(r,s) + rs·(hom(B_{v,λ,1}, ΣB_{v,λ,1}) - 1).

Classes:
    BandSpec

Functions:
    band_band_dim()
    band_string_dim()
    self_ext_positive()
    band_grid()

$Id$
"""

import logging
from pyGentle.common import InvalidParametersError, KindMismatchError
from pyGentle.fields import active_field
from pyGentle import words
from pyGentle.morphisms import hom_dim
from pyGentle.complexes import build_complex

logger = logging.getLogger("pyGentle")

TO = "to"
FROM = "from"


class BandSpec(object):
    """A band word with a non-zero scalar λ and a dimension r ≥ 1."""

    def __init__(self, word, scalar=None, r=1):
        if not word.is_band():
            raise KindMismatchError("%s is not a band" % word)
        if scalar is None:
            scalar = word.scalar
        elif isinstance(scalar, str):
            scalar = active_field().parse(scalar)
        else:
            scalar = active_field()(scalar)
        if not scalar:
            raise InvalidParametersError("band scalar must be non-zero")
        if int(r) < 1:
            raise InvalidParametersError("band dimension must be positive, got %s" % r)
        self.word = word.with_scalar(scalar).with_dimension(1)
        self.scalar = scalar
        self.r = int(r)

    def one_dimensional(self):
        return self.word

    def full_word(self):
        return self.word.with_dimension(self.r)

    def complex(self):
        """The complex B_{w,λ,r}."""
        return build_complex(self.full_word())

    def shifted(self, k):
        return BandSpec(words.shift_word(self.word, k), self.scalar, self.r)

    def __repr__(self):
        return "BandSpec(%s)" % words.format_word(self.full_word())


def _isomorphic(x, y):
    return words.canonical_key(x.word) == words.canonical_key(y.word)

def _is_shifted_copy(x, y):
    """True iff B_{y,1} ≅ ΣB_{x,1}."""
    return words.is_shift_of(y.word, x.word) == 1

def band_band_dim(x, y):
    r, s = x.r, y.r
    hom = hom_dim(x.word, y.word)
    if _is_shifted_copy(x, y):
        dim = min(r, s) + r * s * (hom - 1)
        logger.debug("band dims: shifted self case, hom = %d, dim = %d" % (hom, dim))
        return dim
    delta = 1 if _isomorphic(x, y) else 0
    dim = min(r, s) * delta + r * s * (hom - delta)
    logger.debug("band dims: δ = %d, hom = %d, dim = %d" % (delta, hom, dim))
    return dim

def band_string_dim(x, u, direction=TO):
    """r times the dimension for the one-dimensional band; `to` means Hom(B, P_u)."""
    if u.is_band():
        raise KindMismatchError("%s is a band, use band_band_dim()" % u)
    if direction == TO:
        return x.r * hom_dim(x.word, u)
    if direction == FROM:
        return x.r * hom_dim(u, x.word)
    raise InvalidParametersError("direction must be '%s' or '%s', not '%s'" % (TO, FROM, direction))

def self_ext_positive(x, k):
    """Whether Hom(B_{w,λ,1}, Σ^k B_{w,λ,1}) is non-zero."""
    return hom_dim(x.word, words.shift_word(x.word, k)) > 0

def band_grid(x_word, y_word, lambdas, dims, shifts):
    """
    Rows (r, s, λ, μ, k, dim) of hom(B_{x,λ,r}, Σ^k B_{y,μ,s}) over all
    combinations of the given scalars, dimensions and shifts.
    """
    rows = []
    for lam in lambdas:
        for mu in lambdas:
            for k in shifts:
                target_word = words.shift_word(y_word, k)
                for r in dims:
                    for s in dims:
                        dim = band_band_dim(BandSpec(x_word, lam, r), BandSpec(target_word, mu, s))
                        rows.append((r, s, str(lam), str(mu), k, dim))
    logger.info("band grid: %d entries" % len(rows))
    return rows

# encoding: utf-8
"""
Exact linear algebra on explicit complexes of projectives. This is the
independent check of every combinatorial answer: it knows nothing about
words, only about paths and matrices.

The graded maps C -> D of degree k are coordinatised by triples (slot of C,
slot of D, path), the paths running through hom_path_basis. The boundary
δ(g) = g d_D - (-1)^k d_C g (composition written left to right, first g
then d_D) turns these spaces into a complex, and

    dim Hom_K(C, D) = dim ker δ_0 - rank δ_{-1}.

Elimination uses sympy's DomainMatrix, over GF(p) or over QQ, so large
primes are exact. Pivots are always taken in column order.

Classes:
    FlatMapSpace
    Oracle

Functions:
    chain_map_dim()
    null_homotopic_dim()
    oracle_hom_dim()
    verify()

$Id$
"""

import logging
from sympy import QQ
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix
from pyGentle.common import InfiniteComplexError, InvalidParametersError
from pyGentle.fields import active_field, field_from_spec, PrimeField
from pyGentle.quivers import hom_path_basis
from pyGentle.complexes import GradedMap, PathSum, differential_map

logger = logging.getLogger("pyGentle")

CHAIN_MAP = "chain-map"
HOMOTOPIC = "homotopic"
NULL_HOMOTOPIC = "null-homotopic"


class FlatMapSpace(object):
    """The graded maps source -> target of degree `offset`, with coordinates."""

    def __init__(self, source, target, offset=0):
        self.source = source
        self.target = target
        self.offset = offset
        algebra = source.algebra
        self.coordinates = []
        for d in source.degrees():
            for s, slot in enumerate(source.slots(d)):
                for t, other in enumerate(target.slots(d + offset)):
                    for path in hom_path_basis(algebra, other.vertex, slot.vertex):
                        self.coordinates.append((d, s, t, path))
        self.index = dict((c, k) for k, c in enumerate(self.coordinates))

    @property
    def dimension(self):
        return len(self.coordinates)

    def unit(self, k):
        d, s, t, path = self.coordinates[k]
        return GradedMap(self.source, self.target, {(d, s, t): path}, self.offset)

    def flatten(self, gmap, coerce):
        """Coordinates of a GradedMap, as a list of values of the oracle field."""
        vector = [coerce(0)] * self.dimension
        for (d, s, t), entry in gmap.entries.items():
            for path, scalar in entry.terms.items():
                k = self.index.get((d, s, t, path))
                if k is None:
                    raise InvalidParametersError("%s is not a coordinate of this map space" % ((d, s, t, str(path)),))
                vector[k] = coerce(scalar)
        return vector

    def unflatten(self, vector, field):
        entries = {}
        for value, (d, s, t, path) in zip(vector, self.coordinates):
            if value:
                key = (d, s, t)
                term = PathSum.single(path, field(value), field=field)
                entries[key] = entries[key] + term if key in entries else term
        return GradedMap(self.source, self.target, entries, self.offset)


class Oracle(object):
    """Hom computations in the homotopy category over one exact field."""

    def __init__(self, field=None):
        self.field = field_from_spec(field) if field is not None else active_field()
        self.modular = isinstance(self.field, PrimeField)
        self.domain = GF(self.field.p, symmetric=False) if self.modular else QQ

    # --------------------------------------------------------------------------
    #   Field plumbing
    # --------------------------------------------------------------------------

    def coerce(self, x):
        """A raw value of the oracle field (int mod p, or sympy Rational)."""
        if hasattr(x, "field"):
            if x.field == self.field:
                return x.value
            return self.field.parse(str(x)).value
        return self.field(x).value

    def _check(self, *complexes):
        for c in complexes:
            if c.truncated:
                raise InfiniteComplexError("the oracle only works with bounded complexes")

    # --------------------------------------------------------------------------
    #   Elimination
    # --------------------------------------------------------------------------

    def rref(self, rows, ncols):
        """Reduced row echelon form of a list of rows. Returns (rows, pivot columns)."""
        if not rows or ncols == 0:
            return [], []
        K = self.domain
        matrix = DomainMatrix([[K.convert(v) for v in row] for row in rows], (len(rows), ncols), K)
        reduced, pivots = matrix.rref()
        reduced = [[self._raw(v) for v in row] for row in reduced.to_list()]
        return reduced[:len(pivots)], list(pivots)

    def _raw(self, v):
        if self.modular:
            return int(self.domain.to_sympy(v)) % self.field.p
        return self.field(self.domain.to_sympy(v)).value

    def rank(self, rows, ncols):
        return len(self.rref(rows, ncols)[1])

    def solve(self, columns, target):
        """
        Find x with sum_k x_k columns[k] = target, or None. Vectors are lists
        of raw field values of equal length.
        """
        n = len(target)
        m = len(columns)
        rows = [[columns[k][i] for k in range(m)] + [target[i]] for i in range(n)]
        reduced, pivots = self.rref(rows, m + 1)
        if m in pivots:
            return None
        x = [self.field.zero.value] * m
        for line, col in zip(reduced, pivots):
            x[col] = line[m]
        return x

    # --------------------------------------------------------------------------
    #   The Hom complex
    # --------------------------------------------------------------------------

    def boundary(self, gmap):
        """δ(g) = g d_D - (-1)^k d_C g."""
        sign = -1 if gmap.offset % 2 == 0 else 1
        outer = gmap.then(differential_map(gmap.target))
        inner = differential_map(gmap.source).then(gmap)
        return outer.add(inner.scale(sign))

    def boundary_columns(self, source, target, offset):
        """Columns of δ: Hom^offset -> Hom^(offset+1), with both map spaces."""
        domain = FlatMapSpace(source, target, offset)
        codomain = FlatMapSpace(source, target, offset + 1)
        columns = []
        for k in range(domain.dimension):
            columns.append(codomain.flatten(self.boundary(domain.unit(k)), self.coerce))
        return domain, codomain, columns

    def _rank_of_columns(self, columns, length):
        if not columns or length == 0:
            return 0
        rows = [[col[i] for col in columns] for i in range(length)]
        return self.rank(rows, len(columns))

    def chain_map_dim(self, source, target):
        self._check(source, target)
        domain, codomain, columns = self.boundary_columns(source, target, 0)
        return domain.dimension - self._rank_of_columns(columns, codomain.dimension)

    def null_homotopic_dim(self, source, target):
        self._check(source, target)
        domain, codomain, columns = self.boundary_columns(source, target, -1)
        return self._rank_of_columns(columns, codomain.dimension)

    def hom_dim(self, source, target):
        dim = self.chain_map_dim(source, target) - self.null_homotopic_dim(source, target)
        logger.debug("oracle: dim Hom = %d" % dim)
        return dim

    def is_chain_map(self, gmap):
        self._check(gmap.source, gmap.target)
        return self.boundary(gmap).is_zero()

    def solve_homotopy(self, f, g=None):
        """A homotopy h with f - g = d_C h + h d_D, or None."""
        self._check(f.source, f.target)
        difference = f if g is None else f - g
        domain, codomain, columns = self.boundary_columns(f.source, f.target, -1)
        target = codomain.flatten(difference, self.coerce)
        if not columns:
            return GradedMap(f.source, f.target, {}, -1) if not any(target) else None
        x = self.solve(columns, target)
        if x is None:
            return None
        return domain.unflatten(x, self.field)

    def reduce_modulo_homotopy(self, source, target, maps):
        """The dimension of the span of `maps` in Hom_K(source, target)."""
        self._check(source, target)
        domain, codomain, columns = self.boundary_columns(source, target, -1)
        base = self._rank_of_columns(columns, codomain.dimension)
        extra = [codomain.flatten(m, self.coerce) for m in maps]
        return self._rank_of_columns(columns + extra, codomain.dimension) - base

    def coordinates_modulo_homotopy(self, gmap, basis):
        """
        Coefficients c with gmap - sum c_k basis[k] null-homotopic, or None if
        gmap is not in the span.
        """
        domain, codomain, columns = self.boundary_columns(gmap.source, gmap.target, -1)
        vectors = [codomain.flatten(b, self.coerce) for b in basis]
        x = self.solve(vectors + columns, codomain.flatten(gmap, self.coerce))
        if x is None:
            return None
        return [self.field(v) for v in x[:len(basis)]]

    def verify(self, mode, f, g=None):
        if mode == CHAIN_MAP:
            return self.is_chain_map(f)
        if mode == HOMOTOPIC:
            if g is None:
                raise InvalidParametersError("homotopic needs a second map")
            return self.is_chain_map(f) and self.is_chain_map(g) and self.solve_homotopy(f, g) is not None
        if mode == NULL_HOMOTOPIC:
            return self.is_chain_map(f) and self.solve_homotopy(f) is not None
        raise InvalidParametersError("unknown verification mode '%s'" % mode)


# ==============================================================================
#   Module-level shortcuts using the active field
# ==============================================================================

def chain_map_dim(source, target, field=None):
    return Oracle(field).chain_map_dim(source, target)

def null_homotopic_dim(source, target, field=None):
    return Oracle(field).null_homotopic_dim(source, target)

def oracle_hom_dim(source, target, field=None):
    return Oracle(field).hom_dim(source, target)

def verify(mode, f, g=None, field=None):
    return Oracle(field).verify(mode, f, g)

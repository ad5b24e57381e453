# encoding: utf-8
"""
Bound quivers, paths and gentle algebras.

A path is stored as a tuple of arrow names in the order in which the arrows
are applied. Composition follows the usual convention for path algebras:
the product "pq" means "first q, then p", so a relation written `relation b a`
says that the path "ba" (first a, then b) is zero. A path p: x ⇝ y
corresponds to the basis element of Hom(P(y), P(x)) given by right
multiplication with p.

Classes:
    Arrow
    Path
    BoundQuiver
    GentleAlgebra

Functions:
    parse_algebra()     - read the bound-quiver description language
    compose_paths()     - product of two paths, or ZERO
    hom_path_basis()    - the non-zero paths between two vertices
    cycle_arrows()      - arrows on cycles with full relations
    discrete_algebra()  - the algebras Λ(r,n,m) with discrete derived category
    count_paths_by_transfer_matrix() - independent path count (numpy)

$Id$
"""

import re
import logging
from collections import namedtuple
import numpy
import networkx as nx
from pyGentle.common import GentleSyntaxError, NotGentleError, NonComposableError, \
                            InvalidParametersError, DisconnectedQuiverWarning, warn

logger = logging.getLogger("pyGentle")

# compose_paths() returns this when the product lies in the ideal
ZERO = None

IDENTIFIER = r"[A-Za-z_][A-Za-z0-9_]*"
VERTEX = r"(?:-?[0-9]+|%s)" % IDENTIFIER

Arrow = namedtuple("Arrow", ["name", "source", "target"])


class Path(object):
    """
    A non-zero path in a gentle algebra. `arrows` lists arrow names in
    application order; a stationary path has no arrows and equal endpoints.
    """

    __slots__ = ("arrows", "source", "target")

    def __init__(self, arrows, source, target):
        self.arrows = tuple(arrows)
        self.source = source
        self.target = target

    @property
    def length(self):
        return len(self.arrows)

    def __len__(self):
        return len(self.arrows)

    def is_stationary(self):
        return not self.arrows

    @property
    def first(self):
        """The arrow applied first, or None for a stationary path."""
        return self.arrows[0] if self.arrows else None

    @property
    def last(self):
        """The arrow applied last, or None for a stationary path."""
        return self.arrows[-1] if self.arrows else None

    def __eq__(self, other):
        return isinstance(other, Path) and self.arrows == other.arrows \
               and self.source == other.source and self.target == other.target

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.arrows, self.source, self.target))

    def sort_key(self):
        return (len(self.arrows), self.arrows, str(self.source), str(self.target))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        """Word-literal form: arrow names joined by '*', last applied arrow first."""
        if not self.arrows:
            return "1_%s" % self.source
        return "*".join(reversed(self.arrows))

    def label(self):
        """Compact form for diagrams, e.g. 'af' when all arrow names are single letters."""
        if self.arrows and all(len(name) == 1 for name in self.arrows):
            return "".join(reversed(self.arrows))
        return str(self)

    def __repr__(self):
        return "Path(%s: %s -> %s)" % (self, self.source, self.target)


class BoundQuiver(object):
    """
    A finite quiver together with a set of length-2 relations. Only checks that
    can be made without the gentleness conditions are done here.
    """

    def __init__(self, vertices, arrows, relations):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise GentleSyntaxError("duplicate vertex names in %s" % self.vertices)
        self.arrows = {}
        for name, source, target in arrows:
            source, target = str(source), str(target)
            if name in self.arrows:
                raise GentleSyntaxError("duplicate arrow name '%s'" % name)
            for v in (source, target):
                if v not in self.vertices:
                    raise GentleSyntaxError("arrow %s uses unknown vertex '%s'" % (name, v))
            self.arrows[name] = Arrow(name, source, target)
        self.relations = set()
        for relation in relations:
            relation = tuple(relation)
            if len(relation) != 2:
                raise GentleSyntaxError("relations must have length 2, got %s" % " ".join(relation))
            for name in relation:
                if name not in self.arrows:
                    raise GentleSyntaxError("relation %s uses unknown arrow '%s'" % (" ".join(relation), name))
            self.relations.add(relation)
        self.relations = frozenset(self.relations)

    @property
    def arrow_names(self):
        return sorted(self.arrows)

    def graph(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for arrow in self.arrows.values():
            graph.add_edge(arrow.source, arrow.target, key=arrow.name)
        return graph

    def is_connected(self):
        if len(self.vertices) <= 1:
            return True
        return nx.is_weakly_connected(self.graph())


class GentleAlgebra(object):
    """
    A bound quiver algebra kΓ/I satisfying the gentleness conditions. The
    constructor validates and builds the successor tables; after that the
    object is never modified.
    """

    def __init__(self, quiver, name=None):
        self.quiver = quiver
        self.name = name or "algebra"
        self.vertices = list(quiver.vertices)
        self.arrows = dict(quiver.arrows)
        self.arrow_names = quiver.arrow_names
        self.relations = quiver.relations
        self._out = dict((v, []) for v in self.vertices)
        self._in = dict((v, []) for v in self.vertices)
        for name in self.arrow_names:
            arrow = self.arrows[name]
            self._out[arrow.source].append(name)
            self._in[arrow.target].append(name)
        self.validate()
        self._build_tables()
        self.cycle_arrows = self._find_cycle_arrows()
        self._path_cache = {}
        if not quiver.is_connected():
            warn("quiver of %s is not connected" % self.name, DisconnectedQuiverWarning)

    @classmethod
    def from_data(cls, vertices, arrows, relations, name=None):
        return cls(BoundQuiver(vertices, arrows, relations), name=name)

    # --------------------------------------------------------------------------
    #   Validation
    # --------------------------------------------------------------------------

    def violations(self):
        """Return a list of (condition number, witness) pairs."""
        found = []
        for v in self.vertices:
            if len(self._out[v]) > 2:
                found.append((1, "vertex %s has %d outgoing arrows %s" % (v, len(self._out[v]), self._out[v])))
            if len(self._in[v]) > 2:
                found.append((1, "vertex %s has %d incoming arrows %s" % (v, len(self._in[v]), self._in[v])))
        for name in self.arrow_names:
            arrow = self.arrows[name]
            after = self._out[arrow.target]
            before = self._in[arrow.source]
            nonzero_after = [b for b in after if (b, name) not in self.relations]
            zero_after = [b for b in after if (b, name) in self.relations]
            nonzero_before = [c for c in before if (name, c) not in self.relations]
            zero_before = [c for c in before if (name, c) in self.relations]
            if len(nonzero_after) > 1:
                found.append((2, "arrows %s all compose non-trivially after %s" % (nonzero_after, name)))
            if len(nonzero_before) > 1:
                found.append((2, "arrows %s all compose non-trivially before %s" % (nonzero_before, name)))
            if len(zero_after) > 1:
                found.append((3, "arrows %s all compose to zero after %s" % (zero_after, name)))
            if len(zero_before) > 1:
                found.append((3, "arrows %s all compose to zero before %s" % (zero_before, name)))
        for b, a in sorted(self.relations):
            if self.arrows[a].target != self.arrows[b].source:
                found.append((4, "relation %s %s is not a path (%s ends at %s, %s starts at %s)" % (
                    b, a, a, self.arrows[a].target, b, self.arrows[b].source)))
        cycle = self._unbounded_cycle()
        if cycle:
            found.append((4, "the cycle %s avoids the relations, so the algebra is infinite dimensional" % "".join(cycle)))
        return found

    def validate(self):
        found = self.violations()
        if found:
            raise NotGentleError(found)

    def _unbounded_cycle(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.arrow_names)
        for a in self.arrow_names:
            for b in self._out[self.arrows[a].target]:
                if (b, a) not in self.relations:
                    graph.add_edge(a, b)
        try:
            return [edge[0] for edge in nx.find_cycle(graph)]
        except nx.NetworkXNoCycle:
            return None

    def _build_tables(self):
        self.succ_nonzero = {}
        self.succ_zero = {}
        self.pred_nonzero = {}
        self.pred_zero = {}
        for name in self.arrow_names:
            arrow = self.arrows[name]
            for b in self._out[arrow.target]:
                if (b, name) in self.relations:
                    self.succ_zero[name] = b
                else:
                    self.succ_nonzero[name] = b
            for c in self._in[arrow.source]:
                if (name, c) in self.relations:
                    self.pred_zero[name] = c
                else:
                    self.pred_nonzero[name] = c

    def _find_cycle_arrows(self):
        graph = nx.DiGraph()
        graph.add_nodes_from(self.arrow_names)
        graph.add_edges_from(self.succ_zero.items())
        found = set()
        for cycle in nx.simple_cycles(graph):
            found.update(cycle)
        return frozenset(found)

    # --------------------------------------------------------------------------
    #   Queries
    # --------------------------------------------------------------------------

    def arrows_from(self, vertex):
        return list(self._out[str(vertex)])

    def arrows_to(self, vertex):
        return list(self._in[str(vertex)])

    def source(self, arrow):
        return self.arrows[arrow].source

    def target(self, arrow):
        return self.arrows[arrow].target

    def stationary(self, vertex):
        vertex = str(vertex)
        if vertex not in self._out:
            raise InvalidParametersError("unknown vertex '%s'" % vertex)
        return Path((), vertex, vertex)

    def arrow_path(self, name):
        arrow = self.arrows[name]
        return Path((name,), arrow.source, arrow.target)

    def path(self, arrows):
        """
        Build the path applying `arrows` in the given order. Raises
        NonComposableError on mismatched endpoints and returns ZERO if the path
        contains a relation.
        """
        arrows = list(arrows)
        if not arrows:
            raise InvalidParametersError("use stationary() for paths of length zero")
        for name in arrows:
            if name not in self.arrows:
                raise InvalidParametersError("unknown arrow '%s'" % name)
        for a, b in zip(arrows, arrows[1:]):
            if self.arrows[a].target != self.arrows[b].source:
                raise NonComposableError("%s ends at %s but %s starts at %s" % (
                    a, self.arrows[a].target, b, self.arrows[b].source))
            if (b, a) in self.relations:
                return ZERO
        return Path(arrows, self.arrows[arrows[0]].source, self.arrows[arrows[-1]].target)

    def parse_path(self, text):
        """Parse 'a*f' (f first, then a), a single arrow name, or '1_x'."""
        text = text.strip()
        if text.startswith("1_"):
            return self.stationary(text[2:])
        names = [name.strip() for name in text.split("*")]
        if len(names) == 1 and names[0] not in self.arrows:
            # allow 'af' when every arrow name is a single character
            if all(ch in self.arrows for ch in names[0]):
                names = list(names[0])
        path = self.path(list(reversed(names)))
        if path is ZERO:
            raise GentleSyntaxError("path %s lies in the ideal" % text)
        return path

    def compose(self, p, q):
        """The product "pq" (first q, then p), or ZERO."""
        return compose_paths(self, p, q)

    def maximal_extension(self, arrow):
        """The longest non-zero path that starts with `arrow`."""
        arrows = [arrow]
        while arrows[-1] in self.succ_nonzero:
            arrows.append(self.succ_nonzero[arrows[-1]])
        return Path(arrows, self.arrows[arrow].source, self.arrows[arrows[-1]].target)

    def can_extend_at_end(self, path):
        return not path.is_stationary() and path.last in self.succ_nonzero

    def can_extend_at_start(self, path):
        return not path.is_stationary() and path.first in self.pred_nonzero

    def paths_from(self, vertex):
        """All non-zero paths starting at `vertex`, stationary path first."""
        vertex = str(vertex)
        paths = [self.stationary(vertex)]
        for name in self._out[vertex]:
            longest = self.maximal_extension(name)
            for k in range(1, len(longest) + 1):
                arrows = longest.arrows[:k]
                paths.append(Path(arrows, vertex, self.arrows[arrows[-1]].target))
        return paths

    def paths_between(self, x, y):
        key = (str(x), str(y))
        if key not in self._path_cache:
            found = [p for p in self.paths_from(x) if p.target == key[1]]
            self._path_cache[key] = sorted(found)
        return list(self._path_cache[key])

    def longest_path_length(self):
        if not self.arrow_names:
            return 0
        return max(len(self.maximal_extension(a)) for a in self.arrow_names)

    def rename(self, arrow_map=None, vertex_map=None, name=None):
        """Return an isomorphic algebra with arrows and vertices renamed."""
        arrow_map = arrow_map or {}
        vertex_map = vertex_map or {}
        av = lambda a: arrow_map.get(a, a)
        vv = lambda v: str(vertex_map.get(v, v))
        arrows = [(av(a.name), vv(a.source), vv(a.target)) for a in self.arrows.values()]
        relations = [(av(b), av(a)) for b, a in self.relations]
        return GentleAlgebra.from_data([vv(v) for v in self.vertices], arrows, relations, name=name or self.name)

    def to_text(self):
        lines = ["# %s" % self.name, "vertices: %s" % " ".join(self.vertices)]
        for name in self.arrow_names:
            arrow = self.arrows[name]
            lines.append("arrow %s: %s -> %s" % (name, arrow.source, arrow.target))
        for b, a in sorted(self.relations):
            lines.append("relation %s %s" % (b, a))
        return "\n".join(lines) + "\n"

    def describe(self):
        return "%s: %d vertices, %d arrows, %d relations, |C| = %d" % (
            self.name, len(self.vertices), len(self.arrows), len(self.relations), len(self.cycle_arrows))

    def __eq__(self, other):
        return isinstance(other, GentleAlgebra) and self.vertices == other.vertices \
               and self.arrows == other.arrows and self.relations == other.relations

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((tuple(self.vertices), tuple(sorted(self.arrows.values())), self.relations))


# ==============================================================================
#   Module-level operations
# ==============================================================================

_vertices_re = re.compile(r"^vertices\s*:\s*(.*)$")
_arrow_re = re.compile(r"^arrow\s+(%s)\s*:\s*(%s)\s*->\s*(%s)$" % (IDENTIFIER, VERTEX, VERTEX))
_relation_re = re.compile(r"^relation\s+(.+)$")

def parse_algebra(text, name=None):
    """
    Parse a bound-quiver description:

        vertices: 0 1 2
        arrow a: 0 -> 1
        relation b a        # the path "ba" (first a, then b) is zero

    Raises GentleSyntaxError or NotGentleError.
    """
    vertices, arrows, relations = [], [], []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _vertices_re.match(line)
        if match:
            for token in match.group(1).split():
                if not re.match("^%s$" % VERTEX, token):
                    raise GentleSyntaxError("bad vertex name '%s'" % token, number)
                vertices.append(token)
            continue
        match = _arrow_re.match(line)
        if match:
            arrows.append(match.groups())
            continue
        match = _relation_re.match(line)
        if match:
            names = match.group(1).replace("*", " ").split()
            if len(names) != 2:
                raise GentleSyntaxError("relations must be products of exactly two arrows: '%s'" % line, number)
            for n in names:
                if not re.match("^%s$" % IDENTIFIER, n):
                    raise GentleSyntaxError("bad arrow name '%s'" % n, number)
            relations.append(tuple(names))
            continue
        raise GentleSyntaxError("cannot parse '%s'" % line, number)
    quiver = BoundQuiver(vertices, arrows, relations)
    algebra = GentleAlgebra(quiver, name=name)
    logger.debug("parsed %s" % algebra.describe())
    return algebra

def load_algebra(filename):
    with open(filename) as f:
        text = f.read()
    return parse_algebra(text, name=filename)

def compose_paths(algebra, p, q):
    """
    Return the product "pq" (first q, then p), or ZERO if it lies in the ideal.
    """
    if q.target != p.source:
        raise NonComposableError("cannot compose %s after %s: %s ends at %s, %s starts at %s" % (
            p, q, q, q.target, p, p.source))
    if p.is_stationary():
        return q
    if q.is_stationary():
        return p
    if (p.first, q.last) in algebra.relations:
        return ZERO
    return Path(q.arrows + p.arrows, q.source, p.target)

def hom_path_basis(algebra, x, y, max_len=None):
    """
    All non-zero paths x ⇝ y of length at most `max_len`, ordered by length
    and then by arrow names. With max_len at least the longest path length
    this is a basis of Hom(P(y), P(x)).
    """
    paths = algebra.paths_between(x, y)
    if max_len is not None:
        paths = [p for p in paths if len(p) <= max_len]
    return paths

def cycle_arrows(algebra):
    return set(algebra.cycle_arrows)

def count_paths_by_transfer_matrix(algebra, x, y, max_len):
    """
    Count the non-zero paths x ⇝ y of length at most `max_len` with powers of
    the arrow transfer matrix (T[a,b] = 1 iff "ba" is a non-zero path).
    """
    x, y = str(x), str(y)
    names = algebra.arrow_names
    index = dict((name, i) for i, name in enumerate(names))
    n = len(names)
    count = 1 if x == y else 0
    if n == 0 or max_len < 1:
        return count
    transfer = numpy.zeros((n, n), dtype=numpy.int64)
    for a, b in algebra.succ_nonzero.items():
        transfer[index[a], index[b]] = 1
    start = numpy.array([1 if algebra.source(a) == x else 0 for a in names], dtype=numpy.int64)
    end = numpy.array([1 if algebra.target(a) == y else 0 for a in names], dtype=numpy.int64)
    row = start
    for length in range(1, max_len + 1):
        count += int(row.dot(end))
        row = row.dot(transfer)
    return count

def discrete_algebra(r, n, m):
    """
    The algebra Λ(r,n,m), n ≥ r ≥ 1, m ≥ 0. Vertices are -m, ..., n-1. The
    tail arrow a_{-i}: -i -> -i+1 is named 'a<i>', so 'a1' is the arrow into
    vertex 0. The cycle has arrows b0, ..., b<n-r> followed by c<n-r+1>, ...,
    c<n-1> back to 0; when r = n the first cycle arrow is called c0 instead of
    b0. The r relations are the compositions of consecutive c arrows, the
    composite c<n-r+1> b<n-r> and the composite b0 c<n-1>.
    """
    if not (isinstance(r, int) and isinstance(n, int) and isinstance(m, int)):
        raise InvalidParametersError("r, n and m must be integers")
    if not (n >= r >= 1 and m >= 0):
        raise InvalidParametersError("need n >= r >= 1 and m >= 0, got r=%d, n=%d, m=%d" % (r, n, m))
    vertices = [str(i) for i in range(-m, n)]
    arrows = []
    for i in range(m, 0, -1):
        arrows.append(("a%d" % i, str(-i), str(-i + 1)))
    cycle = []
    for i in range(n):
        if i <= n - r and r < n:
            name = "b%d" % i
        else:
            name = "c%d" % i
        cycle.append(name)
        arrows.append((name, str(i), str((i + 1) % n)))
    relations = []
    for i in range(n):
        here, after = cycle[i], cycle[(i + 1) % n]
        if after.startswith("c") or (here.startswith("c") and after.startswith("b")):
            relations.append((after, here))
    if r == 1 and n > 1:
        relations = [(cycle[0], cycle[n - 1])]
    name = "Lambda(%d,%d,%d)" % (r, n, m)
    algebra = GentleAlgebra.from_data(vertices, arrows, relations, name=name)
    assert len(algebra.relations) == r, algebra.relations
    return algebra

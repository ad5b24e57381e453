# encoding: utf-8
"""
Complexes of indecomposable projective modules built from homotopy words.

The differential d^i is stored as a matrix whose rows are the slots of degree
i and whose columns are the slots of degree i+1. An entry is a PathSum,
a formal combination of paths; the path p stands for the map P(t(p)) ->
P(s(p)). Slots within a degree are ordered by node index; for an
r-dimensional band they are ordered copy by copy.

Classes:
    PathSum
    Slot
    ProjComplex
    UnfoldedDiagram
    GradedMap

Functions:
    build_complex()
    unfold()
    differential_map()

$Id$
"""

import logging
from collections import namedtuple
from pyGentle.common import D2NotZeroError, InfiniteComplexError, InvalidParametersError
from pyGentle.fields import active_field
from pyGentle.quivers import compose_paths, ZERO, Path
from pyGentle import words

logger = logging.getLogger("pyGentle")

Slot = namedtuple("Slot", ["vertex", "node", "copy"])


class PathSum(object):
    """A finite sum of scalar multiples of paths with the same endpoints."""

    __slots__ = ("terms", "field")

    def __init__(self, terms=None, field=None):
        self.field = field or active_field()
        self.terms = {}
        for path, scalar in (terms or {}).items():
            scalar = self.field(scalar)
            if scalar:
                self.terms[path] = scalar

    @classmethod
    def single(cls, path, scalar=1, field=None):
        return cls({path: scalar}, field)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def add(self, other):
        terms = dict(self.terms)
        for path, scalar in other.terms.items():
            if path in terms:
                total = terms[path] + scalar
                if total:
                    terms[path] = total
                else:
                    del terms[path]
            else:
                terms[path] = scalar
        return PathSum(terms, self.field)

    __add__ = add

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        c = self.field(c)
        return PathSum(dict((p, s * c) for p, s in self.terms.items()), self.field)

    def compose(self, later, algebra):
        """First self, then `later`."""
        total = {}
        for p, s in self.terms.items():
            for q, t in later.terms.items():
                if q.target != p.source:
                    continue
                product = compose_paths(algebra, p, q)
                if product is ZERO:
                    continue
                total[product] = total.get(product, self.field.zero) + s * t
        return PathSum(total, self.field)

    def coefficient(self, path):
        return self.terms.get(path, self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __eq__(self, other):
        if isinstance(other, PathSum):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for path, scalar in self.sorted_terms():
            if scalar.is_one():
                parts.append(path.label())
            else:
                parts.append("%s%s" % (scalar, path.label()))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return [{"path": str(p), "scalar": str(s)} for p, s in self.sorted_terms()]


def _zero_matrix(rows, cols, field):
    return [[PathSum(field=field) for _ in range(cols)] for _ in range(rows)]


class ProjComplex(object):
    """
    A bounded complex of finitely generated projective modules. `objects` maps
    a degree to its list of Slots, `differentials` maps a degree i to the
    matrix of d^i.
    """

    def __init__(self, algebra, objects, differentials, word=None, truncated=False, field=None):
        self.algebra = algebra
        self.field = field or active_field()
        self.objects = dict((d, list(slots)) for d, slots in objects.items() if slots)
        self.differentials = {}
        for d, matrix in differentials.items():
            if d in self.objects and d + 1 in self.objects:
                self.differentials[d] = matrix
        self.word = word
        self.truncated = truncated
        self.positions = {}
        for d, slots in self.objects.items():
            for k, slot in enumerate(slots):
                self.positions[(slot.node, slot.copy)] = (d, k)

    def degrees(self):
        return sorted(self.objects)

    def degree_range(self):
        degrees = self.degrees()
        if not degrees:
            return None
        return (degrees[0], degrees[-1])

    def slots(self, degree):
        return self.objects.get(degree, [])

    def rank(self, degree):
        return len(self.slots(degree))

    def is_zero(self):
        return not self.objects

    def differential(self, degree):
        if degree in self.differentials:
            return self.differentials[degree]
        return _zero_matrix(self.rank(degree), self.rank(degree + 1), self.field)

    def entry(self, degree, row, col):
        return self.differential(degree)[row][col]

    def require_finite(self):
        if self.truncated:
            raise InfiniteComplexError("%s is a truncation of an unbounded complex" % (self.word or "complex"))

    def check_d2(self):
        """Raise D2NotZeroError unless d^{i+1} d^i = 0 in every degree."""
        for d in self.degrees():
            first, second = self.differential(d), self.differential(d + 1)
            for s in range(self.rank(d)):
                for u in range(self.rank(d + 2)):
                    total = PathSum(field=self.field)
                    for t in range(self.rank(d + 1)):
                        total = total + first[s][t].compose(second[t][u], self.algebra)
                    if total:
                        raise D2NotZeroError("d^%d d^%d has entry %s at (%d, %d)" % (d + 1, d, total, s, u))
        return True

    def shift(self, k):
        """Σ^k: the object in degree i moves to degree i - k."""
        objects = dict((d - k, slots) for d, slots in self.objects.items())
        differentials = dict((d - k, matrix) for d, matrix in self.differentials.items())
        word = words.shift_word(self.word, k) if self.word is not None else None
        return ProjComplex(self.algebra, objects, differentials, word, self.truncated, self.field)

    def direct_sum(self, other):
        """Block diagonal sum; the slots of `other` get copy numbers after ours."""
        offset = 1 + max([slot.copy for slots in self.objects.values() for slot in slots] or [0])
        objects = {}
        for d in sorted(set(self.objects) | set(other.objects)):
            objects[d] = self.slots(d) + [Slot(s.vertex, s.node, s.copy + offset) for s in other.slots(d)]
        differentials = {}
        for d in objects:
            if d + 1 not in objects:
                continue
            matrix = _zero_matrix(len(objects[d]), len(objects[d + 1]), self.field)
            a, b = self.rank(d), self.rank(d + 1)
            for s in range(a):
                for t in range(b):
                    matrix[s][t] = self.entry(d, s, t)
            for s in range(other.rank(d)):
                for t in range(other.rank(d + 1)):
                    matrix[a + s][b + t] = other.entry(d, s, t)
            differentials[d] = matrix
        return ProjComplex(self.algebra, objects, differentials, None, self.truncated or other.truncated, self.field)

    def perturbed(self, degree, row, col, entry):
        """A copy with the entry at (row, col) of d^degree replaced."""
        if isinstance(entry, Path):
            entry = PathSum.single(entry, field=self.field)
        if not (0 <= row < self.rank(degree) and 0 <= col < self.rank(degree + 1)):
            raise InvalidParametersError("no entry (%d, %d) in d^%d" % (row, col, degree))
        differentials = dict((d, [list(r) for r in m]) for d, m in self.differentials.items())
        if degree not in differentials:
            differentials[degree] = self.differential(degree)
        differentials[degree][row][col] = entry
        return ProjComplex(self.algebra, self.objects, differentials, None, self.truncated, self.field)

    def total_rank(self):
        return sum(len(slots) for slots in self.objects.values())

    def to_json(self):
        return {
            "word": words.format_word(self.word) if self.word is not None else None,
            "truncated": self.truncated,
            "field": self.field.spec(),
            "objects": dict((str(d), [s.vertex for s in self.slots(d)]) for d in self.degrees()),
            "differentials": dict((str(d), [[e.to_json() for e in row] for row in m])
                                  for d, m in sorted(self.differentials.items())),
        }

    def __str__(self):
        lines = []
        for d in self.degrees():
            lines.append("%d: %s" % (d, " + ".join("P(%s)" % s.vertex for s in self.slots(d))))
            if d in self.differentials:
                for row in self.differentials[d]:
                    lines.append("    [%s]" % ", ".join(str(e) for e in row))
        return "\n".join(lines)


# ==============================================================================
#   Construction
# ==============================================================================

def build_complex(word, degree_cutoff=None):
    """
    The complex P_w of a string, B_{w,λ,r} of a band, or the truncation at
    `degree_cutoff` of an infinite string. Raises InfiniteComplexError for
    an infinite word without a cutoff.
    """
    truncated = False
    source_word = word
    if word.is_infinite():
        if degree_cutoff is None:
            raise InfiniteComplexError("an infinite word needs a degree cutoff")
        word = word.materialize(degree_cutoff).word
        truncated = True
    field = word.scalar.field if word.kind == words.BAND else active_field()
    copies = word.dim if word.kind == words.BAND else 1
    placement = {}
    for node in sorted(word.nodes(), key=lambda node: node.index):
        placement[node.index] = node
    objects = {}
    for copy in range(copies):
        for index in sorted(placement):
            node = placement[index]
            objects.setdefault(node.degree, []).append(Slot(node.vertex, index, copy))
    position = {}
    for d, slots in objects.items():
        for k, slot in enumerate(slots):
            position[(slot.node, slot.copy)] = k
    differentials = {}
    for d in objects:
        if d + 1 in objects:
            differentials[d] = _zero_matrix(len(objects[d]), len(objects[d + 1]), field)
    for edge in word.edges():
        d = placement[edge.lower].degree
        single = PathSum.single(edge.path, field=field)
        for copy in range(copies):
            row, col = position[(edge.lower, copy)], position[(edge.upper, copy)]
            matrix = differentials[d]
            matrix[row][col] = matrix[row][col] + single.scale(edge.scalar)
            if edge.letter == 1 and word.kind == words.BAND and copy + 1 < copies:
                # link to the next layer
                col = position[(edge.upper, copy + 1)]
                matrix[row][col] = matrix[row][col] + single
    result = ProjComplex(word.algebra, objects, differentials, source_word, truncated, field)
    logger.debug("built complex of %s with %d summands" % (source_word, result.total_rank()))
    return result


DiagramNode = namedtuple("DiagramNode", ["index", "copy", "degree", "vertex"])
DiagramArrow = namedtuple("DiagramArrow", ["source", "target", "label", "scalar", "link"])


class UnfoldedDiagram(object):
    """
    The picture of a word: one node per summand, one arrow per path term.
    Arrows point from the lower degree to the higher degree, i.e. in the
    direction of the differential.
    """

    def __init__(self, nodes, arrows, cyclic=False, name=None):
        self.nodes = list(nodes)
        self.arrows = list(arrows)
        self.cyclic = cyclic
        self.name = name or "diagram"

    def to_dot(self):
        lines = ['digraph "%s" {' % self.name, "  rankdir=LR;"]
        for node in self.nodes:
            lines.append('  n%d_%d [label="P(%s)\\n%d"];' % (node.index, node.copy, node.vertex, node.degree))
        for arrow in self.arrows:
            label = arrow.label if arrow.scalar in (None, "1") else "%s %s" % (arrow.scalar, arrow.label)
            style = ", style=dashed" if arrow.link else ""
            lines.append('  n%d_%d -> n%d_%d [label="%s"%s];' % (
                arrow.source[0], arrow.source[1], arrow.target[0], arrow.target[1], label, style))
        lines.append("}")
        return "\n".join(lines) + "\n"


def unfold(obj):
    """The unfolded diagram of a HomotopyWord or of a ProjComplex built from one."""
    if isinstance(obj, words.HomotopyWord):
        obj = build_complex(obj, degree_cutoff=None if not obj.is_infinite() else obj.degree_range()[0] - 2)
    nodes = []
    for d in obj.degrees():
        for slot in obj.slots(d):
            nodes.append(DiagramNode(slot.node, slot.copy, d, slot.vertex))
    arrows = []
    for d in sorted(obj.differentials):
        targets = obj.slots(d + 1)
        for row, source in zip(obj.differentials[d], obj.slots(d)):
            for entry, target in zip(row, targets):
                for path, scalar in entry.sorted_terms():
                    arrows.append(DiagramArrow((source.node, source.copy), (target.node, target.copy),
                                               path.label(), str(scalar), source.copy != target.copy))
    word = obj.word
    cyclic = word is not None and word.kind == words.BAND
    name = words.format_word(word) if word is not None else None
    return UnfoldedDiagram(nodes, arrows, cyclic, name)


class GradedMap(object):
    """
    A graded map from `source` to `target` of degree `offset`: the component
    in degree d is a matrix with rows the slots of source in degree d and
    columns the slots of target in degree d + offset. Components are stored
    sparsely as {(d, row, col): PathSum}.
    """

    def __init__(self, source, target, entries=None, offset=0):
        self.source = source
        self.target = target
        self.offset = offset
        self.field = source.field
        self.entries = {}
        for key, value in (entries or {}).items():
            if isinstance(value, Path):
                value = PathSum.single(value, field=self.field)
            if value:
                self.entries[key] = value

    @classmethod
    def identity(cls, proj):
        entries = {}
        for d in proj.degrees():
            for k, slot in enumerate(proj.slots(d)):
                entries[(d, k, k)] = PathSum.single(proj.algebra.stationary(slot.vertex), field=proj.field)
        return cls(proj, proj, entries)

    def entry(self, d, row, col):
        return self.entries.get((d, row, col), PathSum(field=self.field))

    def is_zero(self):
        return not self.entries

    def components(self):
        return sorted(self.entries.items())

    def add(self, other):
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries[key] + value if key in entries else value
        return GradedMap(self.source, self.target, entries, self.offset)

    __add__ = add

    def scale(self, c):
        return GradedMap(self.source, self.target,
                         dict((k, v.scale(c)) for k, v in self.entries.items()), self.offset)

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def then(self, other):
        """First self, then `other`."""
        algebra = self.source.algebra
        entries = {}
        for (d, s, t), first in self.entries.items():
            for (e, t2, u), second in other.entries.items():
                if e != d + self.offset or t2 != t:
                    continue
                product = first.compose(second, algebra)
                if product:
                    key = (d, s, u)
                    entries[key] = entries[key] + product if key in entries else product
        return GradedMap(self.source, other.target, entries, self.offset + other.offset)

    def to_json(self):
        return [{"degree": d, "source_slot": s, "target_slot": t, "entry": v.to_json()}
                for (d, s, t), v in self.components()]

    def __str__(self):
        return "; ".join("d%d[%d,%d]=%s" % (d, s, t, v) for (d, s, t), v in self.components()) or "0"


def differential_map(proj):
    """The differential of `proj` as a GradedMap of degree one."""
    entries = {}
    for d, matrix in proj.differentials.items():
        for s, row in enumerate(matrix):
            for t, value in enumerate(row):
                if value:
                    entries[(d, s, t)] = value
    return GradedMap(proj, proj, entries, 1)

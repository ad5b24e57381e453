# encoding: utf-8
"""
Bases of morphism spaces between string and band complexes.

The basis Θ of Hom_K(Q_v, Q_w) is read off the unfolded diagrams:

  - graph maps are the overlaps of v and w satisfying a left and a right
    endpoint condition;
  - each overlap of v and Σ^{-1} w satisfying no endpoint condition gives
    one quasi-graph map, represented by a single or double map;
  - singleton single maps are single maps that no elementary homotopy can
    reach, i.e. p is not a right factor of an outgoing differential of v
    nor a left factor of an incoming differential of w;
  - singleton double maps are the double maps whose square splits through
    a non-stationary middle path.

The chain maps Q_v -> Q_w (the complex-level basis 𝔅) are also solved
directly: a variable is a triple (x, y, p), a node x of v, a node y of w in
the same degree and a non-zero path p giving a map P(φ_v(x)) -> P(φ_w(y)).
Every commutativity square gives, for each path, an equation with at most
one variable on either side, so the equations split the variables into
classes (a weighted union-find). Elementary homotopies written in the
coordinates of 𝔅 drive the homotopy-set walk and give an independent count
of dim Hom_K by elimination.

Classes:
    Overlap
    Component
    BasisMorphism
    HomotopySet
    Hom

Functions:
    find_overlaps()
    compute_hom()
    graph_maps()
    quasi_graph_maps()
    singleton_singles()
    singleton_doubles()
    hom_basis()
    hom_dim()
    complex_level_basis()
    homotopy_set()
    realize()
    compose_morphisms()
    express_in_basis()

$Id$
"""

import logging
from collections import namedtuple
from pyGentle.common import KindMismatchError, RealizationMismatchError, InvalidParametersError
from pyGentle.fields import active_field
from pyGentle.quivers import compose_paths, hom_path_basis, ZERO
from pyGentle import words
from pyGentle.complexes import build_complex, GradedMap, PathSum

logger = logging.getLogger("pyGentle")

GRAPH = "graph"
SINGLE = "single"
DOUBLE = "double"
QUASI_REP = "quasiRep"
SINGLETON_SINGLE = "singletonSingle"
SINGLETON_DOUBLE = "singletonDouble"

SINGLETON = "singleton"
QUASI_GRAPH = "quasi-graph"
NULL_HOMOTOPIC = "null-homotopic"

# how a null-homotopic walk ends
N1 = "N1"        # a non-stationary homotopy factors the component
N2 = "N2"        # the component is a differential of the source
N3 = "N3"        # the component is a differential of the target
CYCLE = "cycle"  # the relations around a band do not close up

Component = namedtuple("Component", ["degree", "source", "target", "scalar", "path"])
Flank = namedtuple("Flank", ["neighbour", "path", "above", "scalar"])
Step = namedtuple("Step", ["letter_v", "letter_w", "path", "up", "scalar_v", "scalar_w"])


class _Diagram(object):
    """Nodes and edges of an unfolded diagram, indexed for the engine."""

    def __init__(self, word, cutoff=None):
        self.word = word
        finite = word.materialize(cutoff).word if word.is_infinite() else word
        self.finite = finite
        self.nodes = dict((node.index, node) for node in finite.nodes())
        self.up = dict((i, []) for i in self.nodes)
        self.down = dict((i, []) for i in self.nodes)
        self.letters = dict((i, {}) for i in self.nodes)
        self.edges = finite.edges()
        for edge in self.edges:
            self.up[edge.lower].append((edge.upper, edge.path, edge.scalar))
            self.down[edge.upper].append((edge.lower, edge.path, edge.scalar))
            self.letters[edge.lower][edge.letter] = Flank(edge.upper, edge.path, True, edge.scalar)
            self.letters[edge.upper][edge.letter] = Flank(edge.lower, edge.path, False, edge.scalar)
        self.by_degree = {}
        for node in sorted(self.nodes.values(), key=lambda node: node.index):
            self.by_degree.setdefault(node.degree, []).append(node.index)
        self.n = finite.n
        self.cyclic = finite.kind == words.BAND

    def degree(self, x):
        return self.nodes[x].degree

    def vertex(self, x):
        return self.nodes[x].vertex

    def sides(self, x):
        """(left flank, right flank) at node x; letter x is on the right of node x."""
        right = self.letters[x].get(x)
        left = None
        for letter, flank in self.letters[x].items():
            if letter != x:
                left = flank
        return left, right

    def other_flanks(self, x, letter):
        """Flanks at x other than the one along `letter`."""
        return [f for l, f in sorted(self.letters[x].items()) if l != letter]


# ==============================================================================
#   Overlaps
# ==============================================================================

class Overlap(object):
    """
    A maximal common piece of the unfolded diagrams of v and of Σ^{-shift} w.
    `pairs` lists the matched node pairs from left to right and `steps` the
    matched letters between consecutive pairs (for a wrap, also from the last
    pair back to the first). `pairings` lists the possible (left, right)
    assignments of the unmatched flanks; only an overlap of a single node
    pair can have two. Flanks are Flank tuples or None.
    """

    def __init__(self, v, w, shift, pairs, steps, pairings, wrap=False):
        self.v = v
        self.w = w
        self.shift = shift
        self.pairs = tuple(pairs)
        self.steps = tuple(steps)
        self.letters = tuple(s.path for s in self.steps)
        self.wrap = wrap
        self.pairings = list(pairings) or [((None, None), (None, None))]
        self._options = [_endpoint_conditions(left, right) for left, right in self.pairings]
        chosen = 0
        for k, (conditions, factors) in enumerate(self._options):
            if _left_ok(conditions) and _right_ok(conditions):
                chosen = k
                break
        self.left, self.right = self.pairings[chosen]
        self.conditions, (self.f_left, self.f_right) = self._options[chosen]
        if wrap:
            self.conditions = set()
            self.f_left = self.f_right = None
        self.ratio = _winding_ratio(self.steps) if wrap else None

    def is_consistent(self):
        """A wrap closes up only when the scalars around the band agree."""
        return not self.wrap or self.ratio.is_one()

    def left_ok(self):
        return self.wrap or _left_ok(self.conditions)

    def right_ok(self):
        return self.wrap or _right_ok(self.conditions)

    def is_graph(self):
        if self.shift != 0:
            return False
        if self.wrap:
            return self.is_consistent()
        return self.left_ok() and self.right_ok()

    def is_quasi(self):
        if self.shift != 1:
            return False
        if self.wrap:
            return self.is_consistent()
        return all(not conditions for conditions, factors in self._options)

    def key(self):
        return (self.shift, self.pairs)

    def to_json(self):
        return {"shift": self.shift, "pairs": [list(p) for p in self.pairs],
                "letters": [str(p) for p in self.letters], "wrap": self.wrap,
                "conditions": sorted(self.conditions)}

    def __repr__(self):
        return "Overlap(shift=%d, %s, %s)" % (self.shift, " ".join(p.label() for p in self.letters) or "-",
                                               ",".join(sorted(self.conditions)) or ("wrap" if self.wrap else "none"))


def _left_ok(conditions):
    return bool(conditions & set(["LG1", "LG2"]))

def _right_ok(conditions):
    return bool(conditions & set(["RG1", "RG2"]))

def _endpoint_conditions(left, right):
    conditions = set()
    factors = []
    for side, (fv, fw) in (("L", left), ("R", right)):
        factor = _g1_factor(fv, fw)
        if factor is not None:
            conditions.add("%sG1" % side)
        if _g2_holds(fv, fw):
            conditions.add("%sG2" % side)
        factors.append(factor)
    return conditions, tuple(factors)

def _g1_factor(fv, fw):
    """The arrows of f_L (or f_R) making the endpoint square commute, or None."""
    if fv is None or fw is None or fv.above != fw.above:
        return None
    a, b = fv.path.arrows, fw.path.arrows
    if not fv.above:
        # flank below: p_v = f after p_w
        if len(a) > len(b) and a[:len(b)] == b:
            return a[len(b):]
    else:
        # flank above: p_w = p_v after f
        if len(b) > len(a) and b[len(b) - len(a):] == a:
            return b[:len(b) - len(a)]
    return None

def _g2_holds(fv, fw):
    return (fv is None or fv.above) and (fw is None or not fw.above)

def _step_factor(step):
    """c(next pair) / c(this pair) for the identities of a graph map."""
    if step.up:
        return step.scalar_w / step.scalar_v
    return step.scalar_v / step.scalar_w

def _winding_ratio(steps):
    ratio = active_field().one
    for step in steps:
        ratio = ratio * _step_factor(step)
    return ratio

def _overlaps_between(dv, dw, shift):
    v, w = dv.word, dw.word
    pairs = set()
    for x, node in dv.nodes.items():
        for y, other in dw.nodes.items():
            if node.degree == other.degree + shift and node.vertex == other.vertex:
                pairs.add((x, y))
    links = dict((p, []) for p in pairs)
    for (x, y) in pairs:
        for lx, fx in sorted(dv.letters[x].items()):
            for ly, fy in sorted(dw.letters[y].items()):
                if fx.path == fy.path and fx.above == fy.above and (fx.neighbour, fy.neighbour) in pairs:
                    step = Step(lx, ly, fx.path, fx.above, fx.scalar, fy.scalar)
                    links[(x, y)].append(((fx.neighbour, fy.neighbour), step))
    seen = set()
    found = []
    for start in sorted(pairs):
        if start in seen:
            continue
        component = set([start])
        stack = [start]
        while stack:
            p = stack.pop()
            for q, _ in links[p]:
                if q not in component:
                    component.add(q)
                    stack.append(q)
        seen |= component
        link_count = sum(len(links[p]) for p in component) // 2
        wrap = link_count >= len(component)
        if wrap:
            first = min(component, key=lambda p: (-p[0], p[1]))
        else:
            ends = [p for p in component if len(links[p]) <= 1]
            first = min(ends, key=lambda p: (-p[0], p[1]))
        chain, steps = _walk_links(links, first)
        if wrap:
            found.append(Overlap(v, w, shift, chain, steps, [], wrap=True))
        elif len(chain) == 1:
            x, y = chain[0]
            lv, rv = dv.sides(x)
            lw, rw = dw.sides(y)
            pairings = [((lv, lw), (rv, rw))]
            if (lw, rw) != (rw, lw):
                pairings.append(((lv, rw), (rv, lw)))
            found.append(Overlap(v, w, shift, chain, [], pairings))
        else:
            left = _flanks(dv, dw, chain[0], steps[0])
            right = _flanks(dv, dw, chain[-1], steps[-1])
            found.append(Overlap(v, w, shift, chain, steps, [(left, right)]))
    return found


def _walk_links(links, first):
    """Follow unused links from `first`; a wrap ends when it returns to `first`."""
    chain = [first]
    steps = []
    used = set()
    current = first
    while True:
        fresh = [(q, s) for q, s in links[current] if (s.letter_v, s.letter_w) not in used]
        if not fresh:
            break
        q, step = fresh[0]
        used.add((step.letter_v, step.letter_w))
        steps.append(step)
        if q == first:
            break
        chain.append(q)
        current = q
    return chain, steps


def _flanks(dv, dw, pair, step):
    x, y = pair
    fv = dv.other_flanks(x, step.letter_v)
    fw = dw.other_flanks(y, step.letter_w)
    return (fv[0] if fv else None, fw[0] if fw else None)


def _diagrams(v, w):
    """Diagrams of v and w, materialized deep enough for infinite words."""
    if v.algebra != w.algebra:
        raise InvalidParametersError("%s and %s live over different algebras" % (v, w))
    for word in (v, w):
        if word.is_band() and word.dim != 1:
            raise KindMismatchError("morphism bases need one-dimensional bands, %s has r=%d" % (word, word.dim))
    if not (v.is_infinite() or w.is_infinite()):
        return _Diagram(v), _Diagram(w), None, None
    floor = min(v.core().degree_range()[0], w.core().degree_range()[0])
    periods = [len(p) for word in (v, w) for p in (word.left_period, word.right_period) if p]
    cutoff = floor - max(3, 2 * max(periods) + 1)
    return _Diagram(v, cutoff), _Diagram(w, cutoff), floor, cutoff


def find_overlaps(v, w, shift=0):
    """
    All overlaps of the unfolded diagrams of v and Σ^{-shift} w. With
    shift=0 the ones satisfying a left and a right endpoint condition give
    graph maps; with shift=1 the ones satisfying none give quasi-graph maps.
    """
    dv, dw, floor, cutoff = _diagrams(v, w)
    return _overlaps_between(dv, dw, shift)


# ==============================================================================
#   Chain maps and homotopies
# ==============================================================================

class _WeightedClasses(object):
    """Union-find where value(x) = weight(x) * value(root(x))."""

    def __init__(self, field):
        self.field = field
        self.parent = {}
        self.weight = {}
        self.dead = set()

    def add(self, x):
        self.parent[x] = x
        self.weight[x] = self.field.one

    def find(self, x):
        chain = []
        while self.parent[x] != x:
            chain.append(x)
            x = self.parent[x]
        root = x
        # chain[-1] hangs directly off the root
        for node in reversed(chain):
            parent = self.parent[node]
            if parent != root:
                self.weight[node] = self.weight[node] * self.weight[parent]
                self.parent[node] = root
        return root

    def ratio(self, x):
        root = self.find(x)
        return root, self.weight[x]

    def relate(self, a, b, factor):
        """Impose value(b) = factor * value(a)."""
        ra, wa = self.ratio(a)
        rb, wb = self.ratio(b)
        if ra == rb:
            if wb != factor * wa:
                self.dead.add(ra)
            return
        self.parent[rb] = ra
        self.weight[rb] = factor * wa / wb
        if rb in self.dead:
            self.dead.discard(rb)
            self.dead.add(ra)

    def kill(self, x):
        self.dead.add(self.find(x))

    def is_dead(self, x):
        return self.find(x) in self.dead


class BasisMorphism(object):
    """
    A basis element of Hom(Q_v, Q_w). `components` is a list of Component
    tuples (degree, node of v, node of w, scalar, path). A quasiRep also
    carries `representatives`: pairs (s, e) with s*e homotopic to the
    representative, itself listed with s = 1.
    """

    def __init__(self, variant, source, target, components, provenance=None, representatives=None,
                 cutoff=None):
        self.variant = variant
        self.source = source
        self.target = target
        self.components = list(components)
        self.provenance = provenance
        self.representatives = representatives or []
        self.cutoff = cutoff

    @property
    def kind(self):
        if any(c.path.is_stationary() for c in self.components):
            return GRAPH
        return SINGLE if len(self.components) == 1 else DOUBLE

    def paths(self):
        return [c.path for c in self.components]

    def degrees(self):
        return sorted(set(c.degree for c in self.components))

    def key(self):
        return tuple((c.degree, c.source, c.target, c.path.sort_key()) for c in self.components)

    def to_json(self):
        data = {"variant": self.variant,
                "components": [{"degree": c.degree, "source_node": c.source, "target_node": c.target,
                                "scalar": str(c.scalar), "path": c.path.label()} for c in self.components]}
        if self.provenance is not None:
            data["overlap"] = self.provenance.to_json()
        if self.representatives:
            data["representatives"] = [{"scalar": str(s), "components": [
                {"degree": c.degree, "source_node": c.source, "target_node": c.target,
                 "scalar": str(c.scalar), "path": c.path.label()} for c in e.components]}
                for s, e in self.representatives]
        return data

    def __str__(self):
        parts = []
        for c in self.components:
            scalar = "" if c.scalar.is_one() else "%s*" % c.scalar
            parts.append("%s%s@%d[%d->%d]" % (scalar, c.path.label(), c.degree, c.source, c.target))
        return "%s(%s)" % (self.variant, ", ".join(parts))

    __repr__ = __str__


class HomotopySet(object):
    """
    The homotopy set 𝓗(f) of a complex-level basis element, found by walking
    elementary homotopies outwards from f.

    Attributes:
        members     - pairs (s, e) with s*e homotopic to f, f first with s = 1
        homotopies  - (i, j, h) for each step of the walk from member i to j
        used        - the differentials the walk went through
        status      - SINGLETON, QUASI_GRAPH or NULL_HOMOTOPIC
        verdict     - for a null-homotopic f, which of N1, N2, N3 (or CYCLE) fired
        killed_by   - the homotopy whose boundary is a multiple of one member
    """

    def __init__(self, morphism, status, members, homotopies, used=None, verdict=None, killed_by=None):
        self.morphism = morphism
        self.status = status
        self.members = members
        self.homotopies = homotopies
        self.used = used or []
        self.verdict = verdict
        self.killed_by = killed_by

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        if self.verdict:
            return "HomotopySet(%s by %s, %d members)" % (self.status, self.verdict, len(self.members))
        return "HomotopySet(%s, %d members)" % (self.status, len(self.members))


_Boundary = namedtuple("_Boundary", ["homotopy", "row", "origin", "used"])


class Hom(object):
    """
    The combinatorial computation of Hom_K(Q_v, Q_w) for strings, 1-dimensional
    bands and infinite strings over the active field.

    Attributes:
        complex_basis - the chain maps 𝔅 (single, double and graph maps)
        classes       - elements of 𝔅 linked by elementary homotopies, as lists of indices
        theta         - the basis of the morphism space in the homotopy category
    """

    def __init__(self, v, w):
        self.v = v
        self.w = w
        self.field = active_field()
        self.algebra = v.algebra
        self._dv, self._dw, self.floor, self.cutoff = _diagrams(v, w)
        self._solve_chain_maps()
        self._collect_boundaries()
        self._build_theta()
        logger.debug("Hom(%s, %s): %d chain maps, dimension %d" % (v, w, len(self.complex_basis), len(self.theta)))

    # --------------------------------------------------------------------------
    #   The complex-level basis
    # --------------------------------------------------------------------------

    def _variables(self, offset):
        """Triples (x, y, p) with deg y = deg x + offset and p: φ_w(y) ⇝ φ_v(x)."""
        dv, dw = self._dv, self._dw
        variables = []
        for d in sorted(dv.by_degree):
            for x in dv.by_degree[d]:
                for y in dw.by_degree.get(d + offset, []):
                    for path in hom_path_basis(self.algebra, dw.vertex(y), dv.vertex(x)):
                        variables.append((x, y, path))
        return variables

    def _solve_chain_maps(self):
        dv, dw = self._dv, self._dw
        field = self.field
        variables = self._variables(0)
        classes = _WeightedClasses(field)
        for var in variables:
            classes.add(var)
        equations = {}
        for var in variables:
            x, y, p = var
            for x0, e, s in dv.down[x]:
                q = compose_paths(self.algebra, e, p)
                if q is not ZERO:
                    eq = equations.setdefault((x0, y, q), {})
                    eq[var] = eq.get(var, field.zero) + s
            for y1, e, s in dw.up[y]:
                q = compose_paths(self.algebra, p, e)
                if q is not ZERO:
                    eq = equations.setdefault((x, y1, q), {})
                    eq[var] = eq.get(var, field.zero) - s
        for key in sorted(equations, key=_var_order):
            terms = [(var, c) for var, c in sorted(equations[key].items(), key=lambda t: _var_order(t[0])) if c]
            if len(terms) == 1:
                classes.kill(terms[0][0])
            elif len(terms) == 2:
                (a, ca), (b, cb) = terms
                classes.relate(a, b, -ca / cb)
            elif len(terms) > 2:
                raise RealizationMismatchError("commutativity condition %s has %d terms; is the algebra gentle?"
                                               % (key, len(terms)))
        groups = {}
        for var in variables:
            root, _ = classes.ratio(var)
            if root not in classes.dead:
                groups.setdefault(root, []).append(var)
        self.complex_basis = []
        self._coordinate = {}
        for root in sorted(groups, key=_var_order):
            members = sorted(groups[root], key=_var_order)
            stationary = [var for var in members if var[2].is_stationary()]
            pivot = stationary[0] if stationary else members[0]
            scale = classes.ratio(pivot)[1]
            components = []
            index = len(self.complex_basis)
            for var in members:
                value = classes.ratio(var)[1] / scale
                self._coordinate[var] = (index, value)
                x, y, path = var
                components.append(Component(dv.degree(x), x, y, value, path))
            self.complex_basis.append(BasisMorphism(None, self.v, self.w, components, cutoff=self.cutoff))
        for f in self.complex_basis:
            f.variant = f.kind

    def _collect_boundaries(self):
        """δ(h) of every elementary homotopy h, in the coordinates of 𝔅."""
        dv, dw = self._dv, self._dw
        field = self.field
        self._boundaries = []
        self._touching = dict((i, []) for i in range(len(self.complex_basis)))
        for h in self._variables(-1):
            x, y, p = h
            terms = {}
            origin = {}
            for y1, e, s in dw.up[y]:
                q = compose_paths(self.algebra, p, e)
                if q is not ZERO:
                    terms[(x, y1, q)] = terms.get((x, y1, q), field.zero) + s
                    origin[(x, y1, q)] = ("target", y, y1)
            for x0, e, s in dv.down[x]:
                q = compose_paths(self.algebra, e, p)
                if q is not ZERO:
                    terms[(x0, y, q)] = terms.get((x0, y, q), field.zero) + s
                    origin[(x0, y, q)] = ("source", x0, x)
            row = {}
            sides = {}
            used = []
            for var in sorted(terms, key=_var_order):
                c = terms[var]
                if not c or var not in self._coordinate:
                    continue
                index, value = self._coordinate[var]
                used.append(origin[var])
                if index not in row:
                    row[index] = c / value
                    sides[index] = origin[var][0]
            row = dict((k, c) for k, c in row.items() if c)
            if row:
                boundary = _Boundary(h, row, sides, tuple(used))
                self._boundaries.append(boundary)
                for i in row:
                    self._touching[i].append(boundary)
        parent = list(range(len(self.complex_basis)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for boundary in self._boundaries:
            support = sorted(boundary.row)
            for k in support[1:]:
                a, b = find(support[0]), find(k)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        grouped = {}
        for i in range(len(self.complex_basis)):
            grouped.setdefault(find(i), []).append(i)
        self.classes = [grouped[k] for k in sorted(grouped)]

    # --------------------------------------------------------------------------
    #   Θ from the diagrams
    # --------------------------------------------------------------------------

    def _build_theta(self):
        dv, dw = self._dv, self._dw
        found = []
        for overlap in _overlaps_between(dv, dw, 0):
            if overlap.is_graph():
                found.append(self._graph_map(overlap))
        for overlap in _overlaps_between(dv, dw, 1):
            if overlap.is_quasi():
                element = self._quasi_graph_map(overlap)
                if element is not None:
                    found.append(element)
        found.extend(self._singleton_singles())
        found.extend(self._singleton_doubles())
        self.theta = []
        keys = set()
        for element in found:
            key = (element.variant, tuple(sorted(element.key())))
            if key in keys:
                continue
            keys.add(key)
            if self.floor is not None and max(element.degrees() + [
                    d for s, e in element.representatives for d in e.degrees()]) < self.floor:
                # lives only in the materialized tail
                continue
            self.theta.append(element)

    def _stationary(self, x):
        return self.algebra.stationary(self._dv.vertex(x))

    def _graph_map(self, overlap):
        """Identities along the overlap, with f_L and f_R at the ends."""
        dv = self._dv
        one = self.field.one
        scalars = [one]
        for step in overlap.steps[:len(overlap.pairs) - 1]:
            scalars.append(scalars[-1] * _step_factor(step))
        components = [Component(dv.degree(x), x, y, c, self._stationary(x))
                      for (x, y), c in zip(overlap.pairs, scalars)]
        for (fv, fw), factor, c in ((overlap.left, overlap.f_left, scalars[0]),
                                    (overlap.right, overlap.f_right, scalars[-1])):
            if factor is None:
                continue
            if fv.above:
                scalar = c * fw.scalar / fv.scalar
            else:
                scalar = c * fv.scalar / fw.scalar
            components.append(Component(dv.degree(fv.neighbour), fv.neighbour, fw.neighbour, scalar,
                                        self.algebra.path(factor)))
        components.sort(key=lambda c: _var_order((c.source, c.target, c.path)))
        return BasisMorphism(GRAPH, self.v, self.w, components, overlap, cutoff=self.cutoff)

    def _quasi_candidates(self, overlap):
        """
        Components of the boundaries of the identity homotopies along the
        overlap: the letters u_1, ..., u_p from the right, then the maps at
        the right and left ends.
        """
        pairs = overlap.pairs
        candidates = []
        for i in reversed(range(len(overlap.steps))):
            step = overlap.steps[i]
            (x, y), (x1, y1) = pairs[i], pairs[(i + 1) % len(pairs)]
            if step.up:
                candidates.append((x, y1, step.path))
            else:
                candidates.append((x1, y, step.path))
        if not overlap.wrap:
            for (x, y), (fv, fw) in ((pairs[-1], overlap.right), (pairs[0], overlap.left)):
                if fv is not None and not fv.above:
                    candidates.append((fv.neighbour, y, fv.path))
                if fw is not None and fw.above:
                    candidates.append((x, fw.neighbour, fw.path))
        return candidates

    def _quasi_graph_map(self, overlap):
        """The chosen representative of the quasi-graph map, with its homotopy set."""
        for var in self._quasi_candidates(overlap):
            if var in self._coordinate:
                index = self._coordinate[var][0]
                break
        else:
            if self.floor is not None:
                return None
            raise RealizationMismatchError("quasi-graph overlap %s has no representative in the complex-level "
                                           "basis" % overlap)
        hset = self._walk(index)
        if hset.status == NULL_HOMOTOPIC:
            logger.warning("the homotopy set of %s is null-homotopic (%s) although %s satisfies no endpoint "
                           "condition" % (hset.morphism, hset.verdict, overlap))
        rep = self.complex_basis[index]
        return BasisMorphism(QUASI_REP, self.v, self.w, rep.components, overlap, hset.members,
                             cutoff=self.cutoff)

    def _is_single_map(self, x, y, p):
        """No commutativity square at (x, y, p) has a non-zero relation."""
        for x0, e, s in self._dv.down[x]:
            if compose_paths(self.algebra, e, p) is not ZERO:
                return False
        for y1, e, s in self._dw.up[y]:
            if compose_paths(self.algebra, p, e) is not ZERO:
                return False
        return True

    def _singleton_singles(self):
        """
        Single maps p: x -> y which no elementary homotopy reaches: p does not
        end with an outgoing differential of v at x and does not start with
        an incoming differential of w at y.
        """
        dv, dw = self._dv, self._dw
        found = []
        for x, y, p in self._variables(0):
            if p.is_stationary() or not self._is_single_map(x, y, p):
                continue
            if any(_ends_with(p, e) for x1, e, s in dv.up[x]):
                continue
            if any(_starts_with(p, e) for y0, e, s in dw.down[y]):
                continue
            found.append(BasisMorphism(SINGLETON_SINGLE, self.v, self.w,
                                       [Component(dv.degree(x), x, y, self.field.one, p)], cutoff=self.cutoff))
        return found

    def _singleton_doubles(self):
        """
        Double maps whose square splits as v_0 = f' f_L, w_0 = f_R f' (paths,
        last arrow first) with f' non-stationary; the other flanks must not
        see the components.
        """
        dv, dw = self._dv, self._dw
        found = []
        for ev in dv.edges:
            for ew in dw.edges:
                if dv.degree(ev.lower) != dw.degree(ew.lower):
                    continue
                a, b = ev.path.arrows, ew.path.arrows
                for k in range(1, min(len(a), len(b) + 1)):
                    # a = f' + f_L and b = f_R + f' in application order
                    middle, lower = a[:k], a[k:]
                    if len(b) <= k or b[len(b) - k:] != middle:
                        continue
                    upper = b[:len(b) - k]
                    f_lower = self.algebra.path(lower)
                    f_upper = self.algebra.path(upper)
                    if not self._double_is_closed(ev, ew, f_lower, f_upper):
                        continue
                    components = [Component(dv.degree(ev.upper), ev.upper, ew.upper, ew.scalar / ev.scalar, f_upper),
                                  Component(dv.degree(ev.lower), ev.lower, ew.lower, self.field.one, f_lower)]
                    components.sort(key=lambda c: _var_order((c.source, c.target, c.path)))
                    found.append(BasisMorphism(SINGLETON_DOUBLE, self.v, self.w, components, cutoff=self.cutoff))
        return found

    def _double_is_closed(self, ev, ew, f_lower, f_upper):
        A = self.algebra
        for flank in self._dv.other_flanks(ev.lower, ev.letter):
            if not flank.above and compose_paths(A, flank.path, f_lower) is not ZERO:
                return False
        for flank in self._dw.other_flanks(ew.lower, ew.letter):
            if flank.above and compose_paths(A, f_lower, flank.path) is not ZERO:
                return False
        for flank in self._dv.other_flanks(ev.upper, ev.letter):
            if not flank.above and compose_paths(A, flank.path, f_upper) is not ZERO:
                return False
        for flank in self._dw.other_flanks(ew.upper, ew.letter):
            if flank.above and compose_paths(A, f_upper, flank.path) is not ZERO:
                return False
        return True

    # --------------------------------------------------------------------------
    #   Homotopy sets
    # --------------------------------------------------------------------------

    def _walk(self, i):
        """
        Walk the elementary homotopies out of element i. Each boundary used
        either links two members (e_b ≡ -(row[a]/row[b]) e_a) or is a
        multiple of one member, which makes the set null-homotopic.
        """
        field = self.field
        factor = {i: field.one}     # e_k ≡ factor[k] * e_i
        order = [i]
        steps = []
        used = []
        done = set()
        verdict = killed_by = None
        queue = [i]
        while queue:
            a = queue.pop(0)
            for boundary in self._touching[a]:
                if boundary.homotopy in done:
                    continue
                done.add(boundary.homotopy)
                row = boundary.row
                if len(row) > 2:
                    raise RealizationMismatchError("the boundary of %s meets %d basis elements"
                                                   % (_format_var(boundary.homotopy), len(row)))
                used.extend(boundary.used)
                if len(row) == 1:
                    if verdict is None:
                        verdict, killed_by = _verdict(boundary, a), boundary.homotopy
                    continue
                b = [k for k in row if k != a][0]
                value = -(row[a] / row[b]) * factor[a]
                if b in factor:
                    if factor[b] != value and verdict is None:
                        verdict, killed_by = CYCLE, boundary.homotopy
                    continue
                factor[b] = value
                order.append(b)
                steps.append((a, b, boundary.homotopy))
                queue.append(b)
        if verdict is not None:
            status = NULL_HOMOTOPIC
        elif len(order) > 1:
            status = QUASI_GRAPH
        else:
            status = SINGLETON
        members = [(factor[k].inverse(), self.complex_basis[k]) for k in order]
        return HomotopySet(self.complex_basis[i], status, members, steps, used, verdict, killed_by)

    def linear_dimension(self):
        """
        dim Hom_K counted by elimination: |𝔅| minus the rank of the boundaries
        of the elementary homotopies. Counts the materialized complexes of
        infinite words.
        """
        from pyGentle.oracle import Oracle
        oracle = Oracle(self.field)
        n = len(self.complex_basis)
        rows = []
        for boundary in self._boundaries:
            line = [oracle.coerce(0)] * n
            for k, c in boundary.row.items():
                line[k] = c.value
            rows.append(line)
        return n - oracle.rank(rows, n)

    # --------------------------------------------------------------------------
    #   Queries
    # --------------------------------------------------------------------------

    @property
    def dimension(self):
        return len(self.theta)

    def index_of(self, f):
        if f.source == self.v and f.target == self.w:
            for i, g in enumerate(self.complex_basis):
                if g.key() == f.key():
                    return i
        raise InvalidParametersError("%s is not an element of the complex-level basis" % f)

    def homotopy_set(self, f):
        return self._walk(self.index_of(f))

    def to_json(self):
        return {"source": words.format_word(self.v), "target": words.format_word(self.w),
                "field": self.field.spec(), "dimension": self.dimension,
                "basis": [f.to_json() for f in self.theta]}


def _var_order(var):
    x, y, path = var
    return (-x, y, path.sort_key())

def _format_var(var):
    x, y, path = var
    return "(%d, %d, %s)" % (x, y, path.label())

def _ends_with(p, e):
    return len(p) >= len(e) and p.arrows[len(p) - len(e):] == e.arrows

def _starts_with(p, e):
    return len(p) >= len(e) and p.arrows[:len(e)] == e.arrows

def _verdict(boundary, member):
    if not boundary.homotopy[2].is_stationary():
        return N1
    return N2 if boundary.origin[member] == "source" else N3


# ==============================================================================
#   Public interface
# ==============================================================================

_cache = {}

def compute_hom(v, w):
    """The Hom object for Hom_K(Q_v, Q_w) over the active field, cached."""
    key = (v, w, active_field())
    if key not in _cache:
        if len(_cache) > 512:
            _cache.clear()
        _cache[key] = Hom(v, w)
    return _cache[key]

def hom_basis(v, w):
    return list(compute_hom(v, w).theta)

def hom_dim(v, w):
    return compute_hom(v, w).dimension

def complex_level_basis(v, w):
    return list(compute_hom(v, w).complex_basis)

def graph_maps(v, w):
    return [f for f in compute_hom(v, w).theta if f.variant == GRAPH]

def quasi_graph_maps(v, w):
    return [f for f in compute_hom(v, w).theta if f.variant == QUASI_REP]

def singleton_singles(v, w):
    return [f for f in compute_hom(v, w).theta if f.variant == SINGLETON_SINGLE]

def singleton_doubles(v, w):
    return [f for f in compute_hom(v, w).theta if f.variant == SINGLETON_DOUBLE]

def homotopy_set(f):
    return compute_hom(f.source, f.target).homotopy_set(f)


_complexes = {}

def _complex_of(word, cutoff):
    key = (word, cutoff, active_field())
    if key not in _complexes:
        if len(_complexes) > 512:
            _complexes.clear()
        _complexes[key] = build_complex(word, cutoff)
    return _complexes[key]

def _check_squares(f):
    """A non-stationary component has at most one square with a non-zero relation."""
    if f.cutoff is None and (f.source.is_infinite() or f.target.is_infinite()):
        return
    dv = _Diagram(f.source, f.cutoff)
    dw = _Diagram(f.target, f.cutoff)
    algebra = f.source.algebra
    for c in f.components:
        if c.path.is_stationary() or c.source not in dv.nodes or c.target not in dw.nodes:
            continue
        live = [e for x0, e, s in dv.down[c.source] if compose_paths(algebra, e, c.path) is not ZERO]
        live += [e for y1, e, s in dw.up[c.target] if compose_paths(algebra, c.path, e) is not ZERO]
        if len(live) > 1:
            raise RealizationMismatchError("component %s of %s has %d squares with a non-zero relation"
                                           % (c.path.label(), f, len(live)))

def realize(f, source=None, target=None):
    """
    The GradedMap of f between the complexes of its words. Raises
    RealizationMismatchError if a component does not fit those complexes.
    """
    source = source or _complex_of(f.source, f.cutoff if f.source.is_infinite() else None)
    target = target or _complex_of(f.target, f.cutoff if f.target.is_infinite() else None)
    field = source.field
    entries = {}
    for c in f.components:
        s = source.positions.get((c.source, 0))
        t = target.positions.get((c.target, 0))
        if s is None or t is None or s[0] != c.degree or t[0] != c.degree:
            raise RealizationMismatchError("component %s of %s does not fit the complexes" % (c, f))
        key = (c.degree, s[1], t[1])
        term = PathSum.single(c.path, field(str(c.scalar)), field=field)
        entries[key] = entries[key] + term if key in entries else term
    _check_squares(f)
    return GradedMap(source, target, entries)

def compose_morphisms(f, g):
    """First f, then g, as a GradedMap. The target of f must be the source of g."""
    if f.target != g.source:
        raise InvalidParametersError("cannot compose %s with %s: target and source differ" % (f, g))
    middle = _complex_of(f.target, f.cutoff if f.target.is_infinite() else None)
    return realize(f, target=middle).then(realize(g, source=middle))

def express_in_basis(v, w, gmap):
    """Coordinates of a chain map in the basis hom_basis(v, w), modulo homotopy."""
    from pyGentle.oracle import Oracle
    basis = [realize(f, gmap.source, gmap.target) for f in hom_basis(v, w)]
    return Oracle(active_field()).coordinates_modulo_homotopy(gmap, basis)

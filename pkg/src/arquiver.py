# encoding: utf-8
"""
Irreducible morphisms starting at a string complex.

left_step() alters the identity of P_w in a minimal way "from the left",
right_step() does the same from the right (it runs left_step() on the
inverse word and transports the answer back). Each step returns the new word,
the map as a BasisMorphism and a StepTrace recording the control path.

Steps, for w = w_n ... w_1:

    1    prepend a maximal direct letter u
    2    remove the longest direct antipath ψ on the left, leaving w_r on top
    3    w_r inverse: replace it by w_r a
    4    w_r inverse and no such a: drop it (no antipath is attached)
    5    w_r = a a' direct: replace it by a'
    6    w a direct antipath (or trivial): map its right end along an arrow a
    7    nothing applies: the zero map
    8    attach the maximal inverse antipath θ on the left
    8.5  θ is infinite: the zero map

Classes:
    StepTrace
    Verdict
    RadicalWindow

Functions:
    trivial_sides()
    left_step()
    right_step()
    resolve_infinite_step()
    irreducible_maps()
    is_isomorphism()
    is_obviously_reducible()
    ar_graph()
    radical_square_window()

$Id$
"""

import logging
from pyGentle.common import KindMismatchError, InvalidParametersError
from pyGentle.fields import active_field
from pyGentle.quivers import compose_paths
from pyGentle import words
from pyGentle.words import HomotopyLetter, HomotopyWord
from pyGentle.morphisms import (BasisMorphism, Component, GRAPH, DOUBLE, SINGLE, SINGLETON_SINGLE,
                                _Diagram, hom_basis, realize, compose_morphisms)

logger = logging.getLogger("pyGentle")

LEFT = "left"
RIGHT = "right"


class StepTrace(object):
    """The record of one run of the algorithm."""

    def __init__(self, word, side=LEFT):
        self.word = word
        self.side = side
        self.steps = []
        self.psi = ()
        self.arrows = []
        self.theta = ()
        self.result = None
        self.morphism = None

    def record(self, step, note=None):
        self.steps.append(step)
        if note:
            logger.debug("%s step %s on %s: %s" % (self.side, step, self.word, note))
        else:
            logger.debug("%s step %s on %s" % (self.side, step, self.word))

    def primed(self, word):
        """The same trace seen as a run of the dual algorithm on `word`."""
        trace = StepTrace(word, RIGHT)
        trace.steps = ["%s'" % s for s in self.steps]
        trace.psi = self.psi
        trace.arrows = list(self.arrows)
        trace.theta = self.theta
        return trace

    def to_json(self):
        return {"word": words.format_word(self.word), "side": self.side, "steps": self.steps,
                "psi": [str(l) for l in self.psi], "arrows": self.arrows,
                "theta": [str(l) for l in self.theta],
                "result": words.format_word(self.result) if self.result is not None else None,
                "morphism": self.morphism.to_json() if self.morphism is not None else None}

    def __repr__(self):
        return "StepTrace(%s: %s)" % (self.side, " ".join(self.steps))


# ==============================================================================
#   The algorithm
# ==============================================================================

def trivial_sides(algebra, vertex):
    """
    The arrows at `vertex` split into at most two sides: two outgoing (or
    two incoming) arrows lie on different sides, and an outgoing α and an
    incoming β share a side iff αβ is a relation. Sides are sorted by their
    smallest arrow name.
    """
    outgoing = sorted(algebra.arrows_from(vertex))
    incoming = sorted(algebra.arrows_to(vertex))
    sides = [[a] for a in outgoing]
    for b in incoming:
        for side in sides:
            if side[0] in outgoing and len(side) == 1 and (side[0], b) in algebra.relations:
                side.append(b)
                break
        else:
            sides.append([b])
    sides.sort(key=lambda side: min(side))
    return sides

def _selected_side(word):
    letter = word.letters[0]
    sides = trivial_sides(word.algebra, letter.path.source)
    k = 1 if word.flag else 0
    if k >= len(sides):
        return [], []
    vertex = letter.path.source
    out = [a for a in sides[k] if word.algebra.source(a) == vertex]
    into = [a for a in sides[k] if word.algebra.target(a) == vertex]
    return out, into

def _step_one(word):
    """The letter u of Step 1, or None."""
    algebra = word.algebra
    if word.is_trivial():
        out, into = _selected_side(word)
        alpha = out[0] if out else None
        top = word.letters[0].i
    else:
        w_n = word.letters[0]
        x = w_n.target
        top = w_n.i
        if w_n.is_direct():
            alpha = algebra.succ_zero.get(w_n.last)
        else:
            others = [a for a in sorted(algebra.arrows_from(x)) if a != w_n.first]
            alpha = others[0] if others else None
    if alpha is None:
        return None
    return HomotopyLetter(algebra.maximal_extension(alpha), top - 1, top)

def _theta_start(algebra, w_prime, anchor):
    """The arrow θ_1 of Step 8, or None."""
    if w_prime.is_trivial():
        return algebra.pred_zero.get(anchor) if anchor is not None else None
    top = w_prime.letters[0]
    if top.is_direct():
        others = [a for a in sorted(algebra.arrows_to(top.path.target)) if a != top.last]
        return others[0] if others else None
    return algebra.pred_zero.get(top.first)

def _step_eight(trace, algebra, w_prime, anchor):
    """Attach θ; returns the letters of w+, or None when θ is infinite."""
    arrow = _theta_start(algebra, w_prime, anchor)
    if arrow is None:
        trace.record("9")
        return list(w_prime.letters)
    trace.record("8")
    thetas = []
    while arrow is not None:
        if arrow in thetas:
            trace.record("8.5", "inverse antipath through %s is infinite" % arrow)
            return None
        thetas.append(arrow)
        arrow = algebra.pred_zero.get(arrow)
    top = w_prime.letters[0].i
    theta = [HomotopyLetter(algebra.arrow_path(a), top + k, top + k - 1) for k, a in enumerate(thetas, 1)]
    theta.reverse()
    trace.theta = tuple(theta)
    return theta + list(w_prime.letters)

def _identity_on(finite, nodes):
    algebra = finite.algebra
    placed = dict((node.index, node) for node in finite.nodes())
    return [(k, k, algebra.stationary(placed[k].vertex)) for k in nodes]

def _run(source, finite, cutoff, allow_step_one=True):
    """Steps 1 to 9 on the finite word `finite` (a materialization of `source`)."""
    algebra = finite.algebra
    trace = StepTrace(source)
    letters = list(finite.letters) if not finite.is_trivial() else []
    n = finite.n
    anchor = None
    after_four = False
    w_prime = None
    components = None
    if allow_step_one:
        u = _step_one(finite)
        if u is not None:
            trace.record("1", "u = %s" % u.path.label())
            trace.arrows.append(u.path.label())
            w_prime = HomotopyWord(algebra, [u] + list(finite.letters), check=False)
            components = _identity_on(finite, range(n + 1))
    if w_prime is None:
        trace.record("2")
        psi = 0
        while psi < n and letters[psi].is_direct() and letters[psi].is_arrow():
            psi += 1
        trace.psi = tuple(letters[:psi])
        r = n - psi
        if r >= 1:
            w_r = finite.letter(r)
            p = w_r.path
            rest = letters[psi + 1:]
            components = _identity_on(finite, range(r))
            if w_r.is_inverse():
                a = algebra.pred_nonzero.get(p.first)
                if a is not None:
                    trace.record("3", "a = %s" % a)
                    trace.arrows.append(a)
                    q = compose_paths(algebra, p, algebra.arrow_path(a))
                    w_prime = HomotopyWord(algebra, [HomotopyLetter(q, w_r.i, w_r.j)] + rest, check=False)
                    components.append((r, r, algebra.arrow_path(a)))
                else:
                    trace.record("4")
                    after_four = True
                    if rest:
                        w_prime = HomotopyWord(algebra, rest, check=False)
                    else:
                        bottom = finite.letter(1)
                        w_prime = HomotopyWord(algebra, [HomotopyLetter(algebra.stationary(bottom.source),
                                                                        bottom.j, bottom.j)], check=False)
            else:
                a = p.last
                trace.record("5", "a = %s" % a)
                trace.arrows.append(a)
                rest_path = algebra.path(list(p.arrows[:-1]))
                w_prime = HomotopyWord(algebra, [HomotopyLetter(rest_path, w_r.i, w_r.j)] + rest, check=False)
                components.append((r, r, algebra.arrow_path(a)))
        else:
            trace.record("6")
            if finite.is_trivial():
                out, into = _selected_side(finite)
                a = into[0] if into else None
                degree = finite.letters[0].i
            else:
                w_1 = finite.letter(1)
                a = algebra.pred_zero.get(w_1.first)
                degree = w_1.j
            if a is None:
                trace.record("7")
                return None, None, trace
            trace.arrows.append(a)
            anchor = a
            w_prime = HomotopyWord(algebra, [HomotopyLetter(algebra.stationary(algebra.source(a)), degree, degree)],
                                   check=False)
            components = [(0, 0, algebra.arrow_path(a))]
    if after_four:
        trace.record("9")
        plus = list(w_prime.letters)
    else:
        plus = _step_eight(trace, algebra, w_prime, anchor)
        if plus is None:
            return None, None, trace
    target = HomotopyWord(algebra, plus)
    return target, _morphism(source, finite, target, components, cutoff), trace

def _morphism(source, finite, target, components, cutoff):
    placed = dict((node.index, node) for node in finite.nodes())
    one = active_field().one
    comps = [Component(placed[x].degree, x, y, one, path) for x, y, path in components]
    variant = GRAPH if any(path.is_stationary() for x, y, path in components) else SINGLETON_SINGLE
    return BasisMorphism(variant, source, target, comps, cutoff=cutoff)

def _margin_cutoff(word):
    periods = [len(p) for p in (word.left_period, word.right_period) if p]
    return word.core().degree_range()[0] - (max(periods) + 3)

def resolve_infinite_step(word):
    """
    left_step() for any string: one-sided infinite words are materialized,
    run through the algorithm and have their periods attached again.
    """
    if word.kind == words.TWO_SIDED:
        trace = StepTrace(word)
        trace.record("8.5", "two-sided infinite words have no irreducible maps")
        return None, None, trace
    if not word.is_infinite():
        plus, f, trace = _run(word, word, None)
        trace.result, trace.morphism = plus, f
        return plus, f, trace
    cutoff = _margin_cutoff(word)
    finite = word.materialize(cutoff).word
    if word.kind == words.LEFT_INFINITE:
        # nothing can be prepended to an infinite left tail
        plus, f, trace = _run(word, finite, cutoff, allow_step_one=False)
        trace.result, trace.morphism = plus, f
        return plus, f, trace
    plus, f, trace = _run(word, finite, cutoff)
    if plus is None:
        return None, None, trace
    arrow = words.is_right_resolvable(plus)
    if arrow is None:
        raise InvalidParametersError("%s lost its infinite tail" % plus)
    period = words.cycle_from(word.algebra, arrow)
    infinite = words.fold_periods(HomotopyWord(word.algebra, plus.letters, words.RIGHT_INFINITE,
                                               right_period=period, check=False))
    f.target = infinite
    trace.result, trace.morphism = infinite, f
    return infinite, f, trace

def left_step(word):
    if word.is_band():
        raise KindMismatchError("irreducible maps are computed for strings only")
    return resolve_infinite_step(word)

def _materialized_n(word, cutoff):
    if word.is_infinite():
        return word.materialize(cutoff).word.n
    return word.n

def right_step(word):
    if word.is_band():
        raise KindMismatchError("irreducible maps are computed for strings only")
    other = words.inverse(word)
    plus, f, trace = left_step(other)
    trace = trace.primed(word)
    if plus is None:
        return None, None, trace
    target = words.inverse(plus)
    ns = _materialized_n(word, f.cutoff)
    nt = _materialized_n(target, f.cutoff)
    components = [Component(c.degree, ns - c.source, nt - c.target, c.scalar, c.path) for c in f.components]
    components.sort(key=lambda c: -c.source)
    g = BasisMorphism(f.variant, word, target, components, cutoff=f.cutoff)
    trace.result, trace.morphism = target, g
    return target, g, trace

def _same_map(f, g):
    return f.target == g.target and sorted(f.key()) == sorted(g.key())

def irreducible_maps(word):
    """The non-zero outputs of left_step() and right_step()."""
    found = []
    for step in (left_step, right_step):
        plus, f, trace = step(word)
        if f is not None and not any(_same_map(f, g) for g in found):
            found.append(f)
    return found


# ==============================================================================
#   Reducibility
# ==============================================================================

class Verdict(object):
    """A truth value with the clause that decided it."""

    def __init__(self, value, reason):
        self.value = value
        self.reason = reason

    def __bool__(self):
        return self.value

    __nonzero__ = __bool__

    def __repr__(self):
        return "Verdict(%s, %s)" % (self.value, self.reason)


def is_isomorphism(f):
    if f.kind != GRAPH or f.source.is_infinite() or f.target.is_infinite():
        return False
    if not all(c.path.is_stationary() for c in f.components):
        return False
    return len(f.components) == len(f.source.nodes()) == len(f.target.nodes())

def _finite(word, cutoff):
    return word.materialize(cutoff).word if word.is_infinite() else word

def is_obviously_reducible(f):
    if f.kind == DOUBLE:
        return Verdict(True, "double map")
    ordered = sorted(f.components, key=lambda c: -c.source)
    left, right = ordered[0], ordered[-1]
    if f.kind == GRAPH:
        if len(ordered) > 1 and not left.path.is_stationary() and not right.path.is_stationary():
            return Verdict(True, "graph map whose endpoints are both non-isomorphisms")
    for end in (left, right):
        if len(end.path) > 1:
            return Verdict(True, "endpoint component %s factors through a shorter path" % end.path.label())
    if f.kind == SINGLE:
        component = ordered[0]
        dv = _Diagram(f.source, f.cutoff)
        dw = _Diagram(f.target, f.cutoff)
        x, y = component.source, component.target
        if dv.up[x] or len(dv.down[x]) > 1:
            return Verdict(True, "single map whose source summand has the wrong neighbours")
        if dw.down[y] or len(dw.up[y]) > 1:
            return Verdict(True, "single map whose target summand has the wrong neighbours")
        for word in (dv.finite, dw.finite):
            if not word.is_uniformly_oriented():
                return Verdict(True, "single map between words that are not uniformly oriented")
            if any(len(l.path) > 1 for l in word.letters):
                return Verdict(True, "single map between words with a letter longer than an arrow")
    return Verdict(False, "no reducibility criterion applies")


# ==============================================================================
#   Windows
# ==============================================================================

def ar_graph(word_list):
    """Triples (key of w, key of target, map) for every irreducible map out of the words."""
    arrows = []
    for word in word_list:
        for f in irreducible_maps(word):
            arrows.append((words.canonical_key(word), words.canonical_key(f.target), f))
    logger.info("AR graph: %d arrows out of %d words" % (len(arrows), len(word_list)))
    return arrows


class RadicalWindow(object):
    """
    rad² restricted to a window W of finite strings: the span of the
    compositions h then g of non-isomorphism basis maps through the words
    of W.
    """

    def __init__(self, window):
        self.window = [w for w in window if not w.is_infinite() and not w.is_band()]

    def compositions(self, v, w):
        maps = []
        for u in self.window:
            first = [h for h in hom_basis(v, u) if not is_isomorphism(h)]
            if not first:
                continue
            second = [g for g in hom_basis(u, w) if not is_isomorphism(g)]
            for h in first:
                for g in second:
                    maps.append(compose_morphisms(h, g))
        return maps

    def contains(self, f):
        """Whether f lies in the window's rad² modulo homotopy."""
        from pyGentle.oracle import Oracle
        realized = realize(f)
        oracle = Oracle(active_field())
        maps = [m for m in self.compositions(f.source, f.target) if not m.is_zero()]
        base = oracle.reduce_modulo_homotopy(realized.source, realized.target, maps)
        extended = oracle.reduce_modulo_homotopy(realized.source, realized.target, maps + [realized])
        return extended == base


def radical_square_window(window, algebra=None):
    """
    A RadicalWindow over `window`: a list of words, or, together with an
    algebra, a pair (max_letters, (lo, hi)) to enumerate the strings from.
    """
    if algebra is not None:
        max_letters, degree_window = window
        strings, bands = words.enumerate_words(algebra, max_letters, degree_window)
        window = strings
    return RadicalWindow(window)

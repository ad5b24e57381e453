# encoding: utf-8
"""
Homotopy letters, homotopy strings and bands, and eventually periodic
infinite homotopy strings.

A word stores its letters in written order, w_n first and w_1 last. Node r
(1 <= r <= n) of the unfolded diagram sits in degree i_r with vertex t(w_r);
node 0 sits in degree j_1 with vertex s(w_1). For a band node 0 and node n
coincide. Every letter joins the node in the lower degree (vertex t(p)) to
the node in the higher degree (vertex s(p)), with the map P(t(p)) -> P(s(p))
given by p.

Infinite words keep a finite core and one period per infinite side. A left
period (a_1, ..., a_m) puts the direct letters a_1, a_2, ... to the left of
w_n, a_1 adjacent to w_n, with degrees decreasing; a right period puts the
inverse letters b_1, b_2, ... to the right of w_1, again with degrees
decreasing. Periods always satisfy a_{k+1} a_k in I.

Classes:
    HomotopyLetter
    HomotopyWord
    NotResolvable

Functions:
    validate_word()     - build and check a word
    inverse()
    rotate()
    shift_word()
    canonical_key()
    canonical_form()
    enumerate_words()
    enumerate_infinite_words()
    resolve_infinite()
    fold_periods()
    parse_word()
    format_word()

$Id$
"""

import re
import logging
from collections import namedtuple
from pyGentle.common import GentleSyntaxError, InvalidJunctionError, NotPrimitiveError, \
                            DegreeMismatchError, KindMismatchError, InvalidParametersError
from pyGentle.fields import active_field

logger = logging.getLogger("pyGentle")

STRING = "string"
BAND = "band"
LEFT_INFINITE = "left-infinite"
RIGHT_INFINITE = "right-infinite"
TWO_SIDED = "two-sided-infinite"
KINDS = (STRING, BAND, LEFT_INFINITE, RIGHT_INFINITE, TWO_SIDED)
INFINITE_KINDS = (LEFT_INFINITE, RIGHT_INFINITE, TWO_SIDED)

Node = namedtuple("Node", ["index", "degree", "vertex"])
Edge = namedtuple("Edge", ["letter", "lower", "upper", "path", "scalar"])
CanonicalKey = namedtuple("CanonicalKey", ["kind", "body", "scalar", "dim", "offset"])
Materialized = namedtuple("Materialized", ["word", "left", "right"])


class HomotopyLetter(object):
    """A triple (p, i, j) with |i - j| <= 1, and p stationary iff i = j."""

    __slots__ = ("path", "i", "j")

    def __init__(self, path, i, j):
        self.path = path
        self.i = int(i)
        self.j = int(j)
        if abs(self.i - self.j) > 1:
            raise DegreeMismatchError("letter (%s,%d,%d): degrees differ by more than one" % (path, self.i, self.j))
        if path.is_stationary() != (self.i == self.j):
            raise DegreeMismatchError("letter (%s,%d,%d): a letter is trivial exactly when its path is stationary" % (path, self.i, self.j))

    def is_direct(self):
        return self.j == self.i + 1

    def is_inverse(self):
        return self.j == self.i - 1

    def is_trivial(self):
        return self.i == self.j

    def is_arrow(self):
        return len(self.path) == 1

    @property
    def source(self):
        return self.path.target if self.is_inverse() else self.path.source

    @property
    def target(self):
        return self.path.source if self.is_inverse() else self.path.target

    @property
    def first(self):
        return self.path.first

    @property
    def last(self):
        return self.path.last

    def orientation(self):
        """+1 for direct, -1 for inverse and 0 for trivial letters."""
        return self.j - self.i

    def inverse(self):
        return HomotopyLetter(self.path, self.j, self.i)

    def shifted(self, k):
        return HomotopyLetter(self.path, self.i - k, self.j - k)

    def key(self, offset=0):
        return (self.path.arrows, self.path.source, self.i - offset, self.j - offset)

    def __eq__(self, other):
        return isinstance(other, HomotopyLetter) and self.key() == other.key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return "(%s,%d,%d)" % (self.path, self.i, self.j)

    __repr__ = __str__


def junction_violation(algebra, left, right):
    """
    Check the sign and relation condition at the junction of `left` (w_r) and
    `right` (w_{r-1}). Return None, or a (condition, detail) pair.
    """
    if left.is_direct() and right.is_direct():
        if (left.first, right.last) not in algebra.relations:
            return (1, "%s %s has no subpath in the ideal" % (left.path, right.path))
    elif left.is_inverse() and right.is_inverse():
        if (right.first, left.last) not in algebra.relations:
            return (2, "%s %s has no subpath in the ideal" % (right.path, left.path))
    elif left.is_direct() and right.is_inverse():
        if left.first == right.first:
            return (3, "%s and %s both start with %s" % (left.path, right.path, left.first))
    elif left.is_inverse() and right.is_direct():
        if left.last == right.last:
            return (4, "%s and %s both end with %s" % (left.path, right.path, left.last))
    return None

def _check_fit(left, right, index):
    if left.j != right.i:
        raise DegreeMismatchError("letter %d ends in degree %d but letter %d starts in degree %d" % (
            index, left.j, index - 1, right.i))
    if left.source != right.target:
        raise DegreeMismatchError("endpoint mismatch at letter %d: s%s = %s but t%s = %s" % (
            index, left, left.source, right, right.target))

def _is_proper_power(letters):
    n = len(letters)
    for d in range(1, n):
        if n % d == 0 and letters == letters[d:] + letters[:d]:
            return True
    return False

def cycle_from(algebra, arrow):
    """The period a, c, ... obtained by following composites in I from `arrow`."""
    period = [arrow]
    while True:
        following = algebra.succ_zero.get(period[-1])
        if following is None or following == arrow:
            break
        if following in period:
            raise InvalidParametersError("%s does not lie on a cycle of relations" % arrow)
        period.append(following)
    if algebra.succ_zero.get(period[-1]) != arrow:
        raise InvalidParametersError("%s does not lie on a cycle of relations" % arrow)
    return tuple(period)


class HomotopyWord(object):
    """
    A homotopy string, band or infinite string. Words are values: operations
    return new words and never modify their argument.
    """

    def __init__(self, algebra, letters, kind=STRING, scalar=None, dim=1,
                 left_period=None, right_period=None, flag=False, check=True):
        self.algebra = algebra
        if kind not in KINDS:
            raise InvalidParametersError("unknown kind of word '%s'" % kind)
        self.kind = kind
        letters = list(letters)
        if not letters:
            raise InvalidParametersError("a word needs at least one letter")
        if len(letters) > 1:
            # trivial letters compose away
            for k in range(len(letters) - 1):
                _check_fit(letters[k], letters[k + 1], len(letters) - k)
            letters = [l for l in letters if not l.is_trivial()] or letters[:1]
        self.letters = tuple(letters)
        self.flag = bool(flag) if self.is_trivial() else False
        if kind == BAND:
            self.scalar = active_field()(1 if scalar is None else scalar)
            self.dim = int(dim)
        else:
            if scalar is not None or dim != 1:
                raise KindMismatchError("only bands carry a scalar and a dimension")
            self.scalar = None
            self.dim = 1
        self.left_period = tuple(left_period) if left_period else None
        self.right_period = tuple(right_period) if right_period else None
        if check:
            self.check()

    # --------------------------------------------------------------------------
    #   Validation
    # --------------------------------------------------------------------------

    def check(self, band_orientation=True):
        letters = self.letters
        n = len(letters)
        if self.is_trivial() and self.kind != STRING:
            raise KindMismatchError("a trivial word can only be a string")
        for k in range(n - 1):
            left, right = letters[k], letters[k + 1]
            _check_fit(left, right, n - k)
            violation = junction_violation(self.algebra, left, right)
            if violation:
                raise InvalidJunctionError(n - k, "condition (%d)" % violation[0], violation[1])
        if self.kind == BAND:
            self._check_band(band_orientation)
        wants_left = self.kind in (LEFT_INFINITE, TWO_SIDED)
        wants_right = self.kind in (RIGHT_INFINITE, TWO_SIDED)
        if wants_left != bool(self.left_period) or wants_right != bool(self.right_period):
            raise KindMismatchError("a %s word needs periods exactly on its infinite sides" % self.kind)
        if wants_left:
            self._check_left(self.core(), self.left_period)
        if wants_right:
            self._check_left(inverse(self.core()), self.right_period)
        return self

    def _check_band(self, orientation):
        w_n, w_1 = self.letters[0], self.letters[-1]
        n = len(self.letters)
        if w_n.i != w_1.j:
            raise DegreeMismatchError("band does not close up: i_n = %d but j_1 = %d" % (w_n.i, w_1.j))
        if w_1.source != w_n.target:
            raise DegreeMismatchError("band does not close up: s(w) = %s but t(w) = %s" % (w_1.source, w_n.target))
        if orientation and w_n.is_direct() == w_1.is_direct():
            raise InvalidJunctionError(n, "band axiom", "exactly one of w_n and w_1 must be direct")
        violation = junction_violation(self.algebra, w_1, w_n)
        if violation:
            raise InvalidJunctionError(1, "condition (%d)" % violation[0], "closing junction: %s" % violation[1])
        if _is_proper_power(self.letters):
            raise NotPrimitiveError("%s is a proper power of a shorter band" % format_word(self))
        if not self.scalar:
            raise InvalidParametersError("band scalar must be non-zero")
        if self.dim < 1:
            raise InvalidParametersError("band dimension must be positive, got %d" % self.dim)

    def _check_left(self, core, period):
        arrow = is_left_resolvable(core)
        if arrow is None:
            raise InvalidParametersError("%s is not left resolvable" % format_word(core))
        if period != cycle_from(self.algebra, arrow):
            raise InvalidParametersError("period %s does not continue %s" % (list(period), format_word(core)))
        if not _is_primitive_left(core):
            raise NotPrimitiveError("%s is not primitive; fold the period first" % format_word(core))

    # --------------------------------------------------------------------------
    #   Queries
    # --------------------------------------------------------------------------

    def is_trivial(self):
        return self.letters[0].is_trivial()

    def is_band(self):
        return self.kind == BAND

    def is_infinite(self):
        return self.kind in INFINITE_KINDS

    @property
    def n(self):
        """The number of non-trivial letters."""
        return 0 if self.is_trivial() else len(self.letters)

    def __len__(self):
        return self.n

    def letter(self, r):
        """The letter w_r, 1 <= r <= n."""
        if not 1 <= r <= self.n:
            raise IndexError("letter index %d out of range" % r)
        return self.letters[self.n - r]

    def core(self):
        """The finite string underneath an infinite word (or the word itself)."""
        if not self.is_infinite():
            return self
        return HomotopyWord(self.algebra, self.letters, check=False)

    def nodes(self):
        if self.is_trivial():
            letter = self.letters[0]
            return [Node(0, letter.i, letter.path.source)]
        n = self.n
        nodes = [Node(n - k, l.i, l.target) for k, l in enumerate(self.letters)]
        if self.kind != BAND:
            nodes.append(Node(0, self.letters[-1].j, self.letters[-1].source))
        return nodes

    def edges(self):
        """One Edge per letter; for a band, letter 1 joins node 1 and node n."""
        if self.is_trivial():
            return []
        n = self.n
        one = active_field().one
        edges = []
        for k, letter in enumerate(self.letters):
            r = n - k
            right = r - 1
            if self.kind == BAND and r == 1:
                right = n
            scalar = self.scalar if (self.kind == BAND and r == 1) else one
            if letter.is_direct():
                edges.append(Edge(r, r, right, letter.path, scalar))
            else:
                edges.append(Edge(r, right, r, letter.path, scalar))
        return edges

    def degrees(self):
        return [node.degree for node in self.nodes()]

    def degree_range(self):
        degrees = self.degrees()
        return (min(degrees), max(degrees))

    def is_antipath(self):
        if self.is_trivial():
            return False
        return all(l.is_arrow() for l in self.letters) and self.is_uniformly_oriented()

    def is_uniformly_oriented(self):
        if self.is_trivial():
            return True
        return len(set(l.orientation() for l in self.letters)) == 1

    def with_scalar(self, scalar):
        if self.kind != BAND:
            raise KindMismatchError("only bands carry a scalar")
        return HomotopyWord(self.algebra, self.letters, BAND, scalar, self.dim, check=False).check(False)

    def with_dimension(self, dim):
        if self.kind != BAND:
            raise KindMismatchError("only bands carry a dimension")
        return HomotopyWord(self.algebra, self.letters, BAND, self.scalar, dim, check=False).check(False)

    def materialize(self, cutoff):
        """
        Unroll the periods of an infinite word down to degree `cutoff`. Returns
        a Materialized triple (finite string, letters added on the left,
        letters added on the right). Finite words are returned unchanged.
        """
        if not self.is_infinite():
            return Materialized(self, 0, 0)
        letters = list(self.letters)
        left = right = 0
        if self.left_period:
            top = letters[0].i
            left = max(0, top - cutoff)
            period = self.left_period
            tail = [HomotopyLetter(self.algebra.arrow_path(period[(k - 1) % len(period)]), top - k, top - k + 1)
                    for k in range(left, 0, -1)]
            letters = tail + letters
        if self.right_period:
            top = letters[-1].j
            right = max(0, top - cutoff)
            period = self.right_period
            letters += [HomotopyLetter(self.algebra.arrow_path(period[(k - 1) % len(period)]), top - k + 1, top - k)
                        for k in range(1, right + 1)]
        return Materialized(HomotopyWord(self.algebra, letters, check=False), left, right)

    def key(self):
        return canonical_key(self)

    def _identity(self):
        return (self.kind, self.letters, self.scalar, self.dim, self.left_period, self.right_period, self.flag)

    def __eq__(self, other):
        return isinstance(other, HomotopyWord) and self._identity() == other._identity() \
               and self.algebra == other.algebra

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._identity())

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return "HomotopyWord(%s)" % format_word(self)


class NotResolvable(object):
    """Returned by resolve_infinite() when no infinite word can be formed."""

    def __init__(self, reason):
        self.reason = reason

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotResolvable(%s)" % self.reason


# ==============================================================================
#   Operations
# ==============================================================================

def validate_word(algebra, letters, kind=STRING, scalar=None, dim=1, left_period=None,
                  right_period=None, flag=False):
    """
    Build a word from HomotopyLetters and check every junction and band axiom.
    Raises InvalidJunctionError, NotPrimitiveError or DegreeMismatchError.
    """
    return HomotopyWord(algebra, letters, kind, scalar, dim, left_period, right_period, flag)

def make_letter(algebra, path, i, j):
    if isinstance(path, str):
        path = algebra.parse_path(path)
    return HomotopyLetter(path, i, j)

def make_word(algebra, triples, kind=STRING, **kwargs):
    """Shorthand: make_word(A, [("e", 2, 1), ("f", 1, 0)])."""
    return validate_word(algebra, [make_letter(algebra, *t) for t in triples], kind, **kwargs)

def _inverse_scalar(band):
    # The product of the edge scalars, each raised to the orientation of its
    # letter, determines the band complex up to isomorphism.
    if band.letters[0].orientation() == band.letters[-1].orientation():
        return band.scalar
    return band.scalar.inverse()

def inverse(word):
    if word.is_trivial():
        return HomotopyWord(word.algebra, word.letters, flag=not word.flag, check=False)
    letters = [l.inverse() for l in reversed(word.letters)]
    if word.kind == BAND:
        return HomotopyWord(word.algebra, letters, BAND, _inverse_scalar(word), word.dim, check=False)
    kind = {LEFT_INFINITE: RIGHT_INFINITE, RIGHT_INFINITE: LEFT_INFINITE}.get(word.kind, word.kind)
    return HomotopyWord(word.algebra, letters, kind, left_period=word.right_period,
                        right_period=word.left_period, check=False)

def rotate(band, k):
    """
    The rotation w_k ... w_1 w_n ... w_{k+1}. The scalar moves to the new w_1
    (inverted when the new w_1 has the opposite orientation), so the band
    complex stays the same up to isomorphism.
    """
    if band.kind != BAND:
        raise KindMismatchError("only bands can be rotated")
    n = band.n
    k = k % n or n
    letters = band.letters[n - k:] + band.letters[:n - k]
    scalar = band.scalar
    if letters[-1].orientation() != band.letters[-1].orientation():
        scalar = scalar.inverse()
    return HomotopyWord(band.algebra, letters, BAND, scalar, band.dim, check=False)

def shift_word(word, k):
    """Subtract k from every degree; this realises Σ^k."""
    return HomotopyWord(word.algebra, [l.shifted(k) for l in word.letters], word.kind, word.scalar,
                        word.dim, word.left_period, word.right_period, word.flag, check=False)

def _serialize(letters, offset):
    return tuple(l.key(offset) for l in letters)

def _scalar_order(scalar):
    return scalar.value if scalar is not None else 0

def _band_forms(band):
    for base in (band, inverse(band)):
        for k in range(1, band.n + 1):
            yield rotate(base, k)

def canonical_key(word):
    """
    A hashable key; two words have equal keys exactly when they are related
    by inversion (strings and infinite strings) or by rotation and inversion
    (bands, with the scalar adjusted).
    """
    offset = min(word.degrees())
    if word.kind == STRING:
        if word.is_trivial():
            letter = word.letters[0]
            return CanonicalKey(STRING, (((), letter.path.source, 0, 0),), None, 1, offset)
        body = min(_serialize(word.letters, offset), _serialize(reversed([l.inverse() for l in word.letters]), offset))
        return CanonicalKey(STRING, body, None, 1, offset)
    if word.kind == BAND:
        best = min(((_serialize(form.letters, offset), _scalar_order(form.scalar), form.scalar)
                    for form in _band_forms(word)), key=lambda t: t[:2])
        return CanonicalKey(BAND, best[0], best[2], word.dim, offset)
    candidates = []
    for form in (word, inverse(word)):
        candidates.append((form.kind, (form.left_period or (), _serialize(form.letters, offset),
                                       form.right_period or ())))
    kind, body = min(candidates)
    return CanonicalKey(kind, body, None, 1, offset)

def canonical_form(word):
    """The representative whose letters give the canonical key."""
    if word.kind == BAND:
        forms = [f for f in _band_forms(word) if f.letters[0].is_direct() != f.letters[-1].is_direct()]
        offset = min(word.degrees())
        return min(forms, key=lambda f: (_serialize(f.letters, offset), _scalar_order(f.scalar)))
    if word.is_trivial():
        return HomotopyWord(word.algebra, word.letters, check=False)
    other = inverse(word)
    offset = min(word.degrees())
    if word.is_infinite():
        pick = lambda f: (f.kind, f.left_period or (), _serialize(f.letters, offset), f.right_period or ())
    else:
        pick = lambda f: _serialize(f.letters, offset)
    return min((word, other), key=pick)

def same_word(v, w):
    return canonical_key(v) == canonical_key(w)

def is_shift_of(w, v):
    """Return k with w equivalent to shift_word(v, k), or None."""
    kw, kv = canonical_key(w), canonical_key(v)
    if kw[:4] != kv[:4]:
        return None
    return kv.offset - kw.offset


# ==============================================================================
#   Infinite strings
# ==============================================================================

def is_left_resolvable(word):
    """
    Return the arrow a of the cycle set with (a, i_n - 1, i_n) w a homotopy
    string, when w_n is direct and i_n is the lowest degree of w; else None.
    """
    if word.kind != STRING or word.is_trivial():
        return None
    w_n = word.letters[0]
    if not w_n.is_direct() or w_n.i > min(word.degrees()):
        return None
    arrow = word.algebra.succ_zero.get(w_n.last)
    if arrow is None or arrow not in word.algebra.cycle_arrows:
        return None
    return arrow

def is_right_resolvable(word):
    if word.kind != STRING or word.is_trivial():
        return None
    return is_left_resolvable(inverse(word))

def _is_primitive_left(word):
    letters = word.letters
    for s in range(1, len(letters)):
        if not (letters[s - 1].is_direct() and letters[s - 1].is_arrow()):
            break
        rest = HomotopyWord(word.algebra, letters[s:], check=False)
        if is_left_resolvable(rest) is not None:
            return False
    return True

def is_primitive(word, side="left"):
    """Primitive left (or right) resolvable: no direct antipath can be split off."""
    if side == "left":
        return is_left_resolvable(word) is not None and _is_primitive_left(word)
    return is_right_resolvable(word) is not None and _is_primitive_left(inverse(word))

def resolve_infinite(word, side=None):
    """
    Attach the resolving cycles to a finite string. `side` is "left", "right",
    "both" or None for every side on which w is resolvable. Returns the
    infinite word or a NotResolvable.
    """
    if word.kind != STRING:
        return NotResolvable("not a finite string")
    left = is_left_resolvable(word)
    right = is_right_resolvable(word)
    if side in ("left", "both") and left is None:
        return NotResolvable("not left resolvable")
    if side in ("right", "both") and right is None:
        return NotResolvable("not right resolvable")
    if side == "left":
        right = None
    elif side == "right":
        left = None
    if left is None and right is None:
        return NotResolvable("not resolvable")
    if left is not None and not _is_primitive_left(word):
        return NotResolvable("not primitive")
    if right is not None and not _is_primitive_left(inverse(word)):
        return NotResolvable("not primitive")
    algebra = word.algebra
    left_period = cycle_from(algebra, left) if left is not None else None
    right_period = cycle_from(algebra, right) if right is not None else None
    if left_period and right_period:
        kind = TWO_SIDED
    elif left_period:
        kind = LEFT_INFINITE
    else:
        kind = RIGHT_INFINITE
    return HomotopyWord(algebra, word.letters, kind, left_period=left_period, right_period=right_period)

def fold_periods(word):
    """
    Normal form of an infinite word: core letters that continue a period are
    moved into the period, as long as the rest of the core stays resolvable.
    """
    if not word.is_infinite():
        return word
    algebra = word.algebra
    letters = list(word.letters)
    left_period, right_period = word.left_period, word.right_period
    if left_period:
        s = 0
        while s + 1 < len(letters) and letters[s].is_direct() and letters[s].is_arrow():
            arrow = is_left_resolvable(HomotopyWord(algebra, letters[s + 1:], check=False))
            if arrow is None:
                break
            s += 1
            left_period = cycle_from(algebra, arrow)
        letters = letters[s:]
    if right_period:
        s = 0
        while s + 1 < len(letters) and letters[-1 - s].is_inverse() and letters[-1 - s].is_arrow():
            arrow = is_right_resolvable(HomotopyWord(algebra, letters[:len(letters) - s - 1], check=False))
            if arrow is None:
                break
            s += 1
            right_period = cycle_from(algebra, arrow)
        letters = letters[:len(letters) - s]
    return HomotopyWord(algebra, letters, word.kind, left_period=left_period, right_period=right_period)


# ==============================================================================
#   Enumeration
# ==============================================================================

def _nonstationary_paths(algebra):
    paths = []
    for v in algebra.vertices:
        paths.extend(p for p in algebra.paths_from(v) if not p.is_stationary())
    return sorted(paths)

def _extensions(algebra, last, paths, lo, hi):
    """Letters that can follow `last` on the right inside the window."""
    found = []
    x, d = last.source, last.j
    for p in paths:
        if p.target == x and d + 1 <= hi:
            candidate = HomotopyLetter(p, d, d + 1)
        elif p.source == x and d - 1 >= lo:
            candidate = HomotopyLetter(p, d, d - 1)
        else:
            continue
        if junction_violation(algebra, last, candidate) is None:
            found.append(candidate)
    return found

def _closes_as_band(algebra, letters):
    w_n, w_1 = letters[0], letters[-1]
    return len(letters) >= 2 and w_n.i == w_1.j and w_1.source == w_n.target \
           and w_n.is_direct() != w_1.is_direct() \
           and junction_violation(algebra, w_1, w_n) is None \
           and not _is_proper_power(tuple(letters))

def _sort_key(word):
    key = canonical_key(word)
    return (word.n, key.offset, key.body)

def enumerate_words(algebra, max_letters, degree_window):
    """
    Return (strings, bands): one canonical representative per class of
    strings with at most `max_letters` letters (trivial strings included)
    and per class of bands, all degrees inside `degree_window` = (lo, hi).
    """
    lo, hi = degree_window
    strings, bands = {}, {}
    for d in range(lo, hi + 1):
        for v in algebra.vertices:
            word = HomotopyWord(algebra, [HomotopyLetter(algebra.stationary(v), d, d)], check=False)
            strings[canonical_key(word)] = word
    paths = _nonstationary_paths(algebra)
    frontier = []
    for p in paths:
        for i in range(lo, hi):
            frontier.append((HomotopyLetter(p, i, i + 1),))
            frontier.append((HomotopyLetter(p, i + 1, i),))
    length = 1
    while frontier and length <= max_letters:
        following = []
        for letters in frontier:
            word = HomotopyWord(algebra, letters, check=False)
            key = canonical_key(word)
            if key not in strings:
                strings[key] = canonical_form(word)
            if _closes_as_band(algebra, letters):
                band = HomotopyWord(algebra, letters, BAND, check=False)
                key = canonical_key(band)
                if key not in bands:
                    bands[key] = canonical_form(band)
            if length < max_letters:
                for letter in _extensions(algebra, letters[-1], paths, lo, hi):
                    following.append(letters + (letter,))
        frontier = following
        length += 1
    strings = sorted(strings.values(), key=_sort_key)
    bands = sorted(bands.values(), key=_sort_key)
    logger.debug("enumerated %d strings and %d bands (max %d letters, degrees %d..%d)" % (
        len(strings), len(bands), max_letters, lo, hi))
    return strings, bands

def enumerate_infinite_words(algebra, max_letters, degree_window):
    """Every infinite word whose core is one of the enumerated strings."""
    strings, _ = enumerate_words(algebra, max_letters, degree_window)
    found = {}
    for word in strings:
        if word.is_trivial():
            continue
        for base in (word, inverse(word)):
            for side in ("left", "right", "both"):
                result = resolve_infinite(base, side)
                if result:
                    found.setdefault(canonical_key(result), canonical_form(result))
    return sorted(found.values(), key=_sort_key)


# ==============================================================================
#   Literal syntax
# ==============================================================================

_letter_re = re.compile(r"\(\s*([^(),]+?)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")
_period_re = re.compile(r"\[\s*([^\]]+?)\s*\]\s*\^\s*inf")
_suffix_re = re.compile(r"@\s*(.*)$")

def _parse_period(algebra, text):
    names = [name.strip() for name in text.split("*")]
    for name in names:
        if name not in algebra.arrows:
            raise GentleSyntaxError("unknown arrow '%s' in period [%s]" % (name, text))
    return tuple(reversed(names))

def parse_word(text, algebra, kind=None):
    """
    Parse the literal syntax, for example

        (e,2,1)(f,1,0)(c,0,1)(b,1,2)(a*f,2,3)
        (d,3,2)(e,2,1)(f,1,0)(c,0,1)(b,1,2)(a,2,3)@λ=2,r=3
        [c*b*a]^inf (b,1,2)
        (1_0,0,0)^-1

    A band suffix makes the word a band; periods make it infinite.
    """
    text = text.strip()
    scalar, dim = None, 1
    suffix = _suffix_re.search(text)
    if suffix:
        kind = kind or BAND
        for item in [s for s in suffix.group(1).split(",") if s.strip()]:
            if "=" not in item:
                raise GentleSyntaxError("bad band parameter '%s'" % item)
            name, value = [s.strip() for s in item.split("=", 1)]
            if name in ("λ", "lambda", "l"):
                scalar = active_field().parse(value)
            elif name == "r":
                dim = int(value)
            else:
                raise GentleSyntaxError("unknown band parameter '%s'" % name)
        text = text[:suffix.start()].strip()
    flag = False
    if text.endswith("^-1"):
        flag = True
        text = text[:-3].strip()
    left_period = right_period = None
    position = 0
    letters = []
    for match in re.finditer(r"%s|%s" % (_period_re.pattern, _letter_re.pattern), text):
        gap = text[position:match.start()].strip()
        if gap:
            raise GentleSyntaxError("cannot parse '%s' in word literal" % gap)
        position = match.end()
        if match.group(1) is not None:
            period = _parse_period(algebra, match.group(1))
            if letters:
                right_period = period
            else:
                left_period = period
        else:
            if right_period is not None:
                raise GentleSyntaxError("letters after a right period")
            letters.append(make_letter(algebra, match.group(2), match.group(3), match.group(4)))
    if text[position:].strip():
        raise GentleSyntaxError("cannot parse '%s' in word literal" % text[position:].strip())
    if not letters:
        raise GentleSyntaxError("word literal without letters: '%s'" % text)
    if left_period and right_period:
        kind = TWO_SIDED
    elif left_period:
        kind = LEFT_INFINITE
    elif right_period:
        kind = RIGHT_INFINITE
    kind = kind or STRING
    if kind in INFINITE_KINDS:
        word = HomotopyWord(algebra, letters, kind, left_period=left_period, right_period=right_period, check=False)
        return fold_periods(word)
    if kind == BAND:
        return validate_word(algebra, letters, BAND, scalar, dim)
    return validate_word(algebra, letters, flag=flag)

def format_word(word):
    parts = []
    if word.left_period:
        parts.append("[%s]^inf " % "*".join(reversed(word.left_period)))
    parts.append("".join(str(l) for l in word.letters))
    if word.right_period:
        parts.append(" [%s]^inf" % "*".join(reversed(word.right_period)))
    if word.kind == BAND:
        parts.append("@lambda=%s,r=%d" % (word.scalar, word.dim))
    if word.flag:
        parts.append("^-1")
    return "".join(parts)

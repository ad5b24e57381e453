# encoding: utf-8
"""
Unit tests for pyGentle/words.py
$Id$
"""

import unittest
from pyGentle import words, fields, quivers
from pyGentle.common import GentleSyntaxError, InvalidJunctionError, DegreeMismatchError, \
                            NotPrimitiveError, KindMismatchError
from quivertests import running_example

Z = "(d,3,2)(e,2,1)(f,1,0)(c,0,1)(b,1,2)(a,2,3)"
W5 = "(e,2,1)(f,1,0)(c,0,1)(b,1,2)(a*f,2,3)"
V3 = "(a,-1,0)(c,0,1)(b,1,2)"
W10 = "(e,2,3)(d,3,4)(a,4,3)(b,3,2)(d*c,2,1)(e,1,0)(f,0,-1)(c,-1,0)(b,0,1)(a,1,2)"


# ==============================================================================
class ParseWordTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_strings(self):
        for text, n in ((W5, 5), (V3, 3), (W10, 10)):
            w = words.parse_word(text, self.A)
            self.assertEqual(w.kind, words.STRING)
            self.assertEqual(w.n, n)
            self.assertEqual(words.format_word(w), text)

    def test_band(self):
        z = words.parse_word(Z + "@lambda=2", self.A)
        self.assertEqual(z.kind, words.BAND)
        self.assertEqual(z.scalar, 2)
        self.assertEqual(z.dim, 1)
        self.assertEqual(words.format_word(z), Z + "@lambda=2,r=1")

    def test_band_unicode_suffix(self):
        z = words.parse_word(Z + "@λ=3,r=2", self.A)
        self.assertEqual((z.scalar, z.dim), (3, 2))

    def test_band_kind_without_suffix(self):
        """A band literal without suffix has λ = 1."""
        z = words.parse_word(Z, self.A, kind=words.BAND)
        self.assertEqual(z.scalar, 1)

    def test_trivial_with_flag(self):
        w = words.parse_word("(1_0,0,0)^-1", self.A)
        assert w.is_trivial()
        assert w.flag
        self.assertEqual(words.format_word(w), "(1_0,0,0)^-1")

    def test_garbage(self):
        self.assertRaises(GentleSyntaxError, words.parse_word, "(a,0,1) x", self.A)
        self.assertRaises(GentleSyntaxError, words.parse_word, "", self.A)


class ValidateWordTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_direct_direct_needs_relation(self):
        """Two direct letters must compose into the ideal (condition 1)."""
        try:
            words.parse_word("(a,0,1)(f,1,2)", self.A)
        except InvalidJunctionError as err:
            self.assertEqual(err.condition, "condition (1)")
        else:
            self.fail("no InvalidJunctionError")

    def test_endpoint_mismatch(self):
        self.assertRaises(DegreeMismatchError, words.parse_word, "(a,0,1)(b,1,2)", self.A)

    def test_bad_degrees(self):
        self.assertRaises(DegreeMismatchError, words.parse_word, "(a,0,2)", self.A)
        self.assertRaises(DegreeMismatchError, words.parse_word, "(a,0,0)", self.A)

    def test_band_proper_power(self):
        self.assertRaises(NotPrimitiveError, words.parse_word, Z + Z + "@lambda=1", self.A)

    def test_band_needs_closing(self):
        self.assertRaises(DegreeMismatchError, words.parse_word, W5 + "@lambda=1", self.A)

    def test_make_word(self):
        w = words.make_word(self.A, [("e", 2, 1), ("f", 1, 0)])
        self.assertEqual(words.format_word(w), "(e,2,1)(f,1,0)")


class NodesTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_nodes(self):
        """Node r sits at t(w_r); node 0 at s(w_1)."""
        w = words.parse_word("(e,2,1)(f,1,0)", self.A)
        self.assertEqual([tuple(n) for n in w.nodes()], [(2, 2, "4"), (1, 1, "3"), (0, 0, "0")])

    def test_edges(self):
        w = words.parse_word("(e,2,1)(f,1,0)", self.A)
        e2 = w.edges()[0]
        self.assertEqual((e2.letter, e2.lower, e2.upper, str(e2.path)), (2, 1, 2, "e"))

    def test_band_nodes(self):
        """A band has n nodes; letter 1 joins node 1 and node n with λ."""
        z = words.parse_word(Z + "@lambda=2", self.A)
        self.assertEqual(len(z.nodes()), 6)
        first = [e for e in z.edges() if e.letter == 1][0]
        self.assertEqual((first.lower, first.upper), (1, 6))
        self.assertEqual(first.scalar, 2)

    def test_shape_queries(self):
        w = words.parse_word("(c,0,1)(b,1,2)", self.A)
        assert w.is_antipath()
        assert w.is_uniformly_oriented()
        self.assertEqual(w.degree_range(), (0, 2))
        assert not words.parse_word(W5, self.A).is_uniformly_oriented()


class SymmetryTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()
        self.z = words.parse_word(Z + "@lambda=2", self.A)
        self.w = words.parse_word(W10, self.A)

    def test_inverse_is_an_involution(self):
        self.assertEqual(words.inverse(words.inverse(self.w)), self.w)
        self.assertEqual(words.inverse(words.inverse(self.z)), self.z)

    def test_inverse_of_band_inverts_scalar(self):
        self.assertEqual(words.inverse(self.z).scalar, fields.active_field()(2).inverse())

    def test_rotation_group_law(self):
        n = self.z.n
        self.assertEqual(words.rotate(self.z, n), self.z)
        for j in range(n):
            for k in range(n):
                self.assertEqual(words.rotate(words.rotate(self.z, j), k), words.rotate(self.z, j + k))

    def test_shift_group_law(self):
        self.assertEqual(words.shift_word(words.shift_word(self.w, 2), -2), self.w)
        self.assertEqual(words.shift_word(words.shift_word(self.w, 1), 1), words.shift_word(self.w, 2))

    def test_rotate_string(self):
        self.assertRaises(KindMismatchError, words.rotate, self.w, 1)

    def test_with_scalar_on_string(self):
        self.assertRaises(KindMismatchError, self.w.with_scalar, 2)


class CanonicalKeyTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_string_inverse(self):
        w = words.parse_word(W10, self.A)
        self.assertEqual(words.canonical_key(w), words.canonical_key(words.inverse(w)))

    def test_band_rotations_and_inverse(self):
        z = words.parse_word(Z + "@lambda=2", self.A)
        key = words.canonical_key(z)
        for k in range(z.n):
            self.assertEqual(words.canonical_key(words.rotate(z, k)), key)
            self.assertEqual(words.canonical_key(words.rotate(words.inverse(z), k)), key)

    def test_band_scalars_differ(self):
        z1 = words.parse_word(Z + "@lambda=1", self.A)
        z2 = words.parse_word(Z + "@lambda=2", self.A)
        self.assertNotEqual(words.canonical_key(z1), words.canonical_key(z2))

    def test_shift_offset(self):
        w = words.parse_word(V3, self.A)
        self.assertEqual(words.is_shift_of(words.shift_word(w, 2), w), 2)
        self.assertEqual(words.is_shift_of(w, w), 0)
        self.assertEqual(words.is_shift_of(words.parse_word(W5, self.A), w), None)

    def test_canonical_form_has_the_key(self):
        w = words.parse_word(W10, self.A)
        self.assertEqual(words.canonical_key(words.canonical_form(w)), words.canonical_key(w))


class EnumerateWordsTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_one_letter(self):
        """Five trivial strings in each of two degrees, and each of the eight paths once."""
        strings, bands = words.enumerate_words(self.A, 1, (0, 1))
        self.assertEqual(len(strings), 18)
        self.assertEqual(bands, [])
        self.assertEqual(len(set(words.canonical_key(w) for w in strings)), 18)

    def test_no_short_bands(self):
        strings, bands = words.enumerate_words(self.A, 4, (0, 2))
        self.assertEqual(bands, [])

    def test_band_z(self):
        """The shortest band of the Running Example has six letters."""
        strings, bands = words.enumerate_words(self.A, 6, (0, 3))
        z = words.parse_word(Z, self.A, kind=words.BAND)
        self.assertIn(words.canonical_key(z), [words.canonical_key(b) for b in bands])

    def test_deterministic(self):
        first = [words.format_word(w) for w in words.enumerate_words(self.A, 3, (0, 1))[0]]
        second = [words.format_word(w) for w in words.enumerate_words(self.A, 3, (0, 1))[0]]
        self.assertEqual(first, second)


class InfiniteWordTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()
        self.w = words.parse_word("(a,0,1)", self.A)

    def test_left_resolvable(self):
        self.assertEqual(words.is_left_resolvable(self.w), "b")
        self.assertEqual(words.is_right_resolvable(self.w), None)

    def test_resolve_left(self):
        w = words.resolve_infinite(self.w, "left")
        self.assertEqual(w.kind, words.LEFT_INFINITE)
        self.assertEqual(w.left_period, ("b", "c", "a"))
        self.assertEqual(words.format_word(w), "[a*c*b]^inf (a,0,1)")

    def test_resolve_right_fails(self):
        assert not words.resolve_infinite(self.w, "right")

    def test_parse_infinite(self):
        w = words.parse_word("[a*c*b]^inf (a,0,1)", self.A)
        self.assertEqual(w, words.resolve_infinite(self.w, "left"))

    def test_materialize(self):
        w = words.resolve_infinite(self.w, "left")
        m = w.materialize(-2)
        self.assertEqual(words.format_word(m.word), "(c,-2,-1)(b,-1,0)(a,0,1)")
        self.assertEqual((m.left, m.right), (2, 0))

    def test_inverse_swaps_sides(self):
        w = words.inverse(words.resolve_infinite(self.w, "left"))
        self.assertEqual(w.kind, words.RIGHT_INFINITE)
        self.assertEqual(w.right_period, ("b", "c", "a"))


# ==============================================================================
def tail_then_direct(word):
    """
    Strings over Λ(r,n,m) are pieces of a line that is direct except for a
    leftmost inverse letter made of tail arrows; check w or its inverse.
    """
    for u in (word, words.inverse(word)):
        first, rest = u.letters[0], u.letters[1:]
        if any(l.is_inverse() for l in rest):
            continue
        if first.is_inverse() and not all(a.startswith("a") for a in first.path.arrows):
            continue
        return True
    return False


class DiscreteStringsTest(unittest.TestCase):

    def test_strings_lie_on_the_line(self):
        for r, n, m in ((1, 3, 1), (2, 3, 1), (3, 3, 1), (1, 2, 2)):
            A = quivers.discrete_algebra(r, n, m)
            strings, bands = words.enumerate_words(A, 3, (0, 2))
            self.assertEqual(bands, [])
            for w in strings:
                self.assertTrue(tail_then_direct(w), "%s: %s" % (A.name, words.format_word(w)))

    def test_shape(self):
        A = quivers.discrete_algebra(1, 3, 1)
        w = words.parse_word("(a1,2,1)(b2*b1*b0,1,2)(b2*b1*b0,2,3)(b2*b1*b0*a1,3,4)", A)
        self.assertTrue(tail_then_direct(w))
        self.assertTrue(tail_then_direct(words.inverse(w)))
        self.assertFalse(tail_then_direct(words.parse_word(W10, running_example())))


# ==============================================================================
if __name__ == "__main__":
    unittest.main()

# encoding: utf-8
"""
Unit tests for pyGentle/quivers.py
$Id$
"""

import os
import unittest
import warnings
from pyGentle import quivers
from pyGentle.common import GentleSyntaxError, NotGentleError, NonComposableError, \
                            InvalidParametersError, DisconnectedQuiverWarning

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "data")

RUNNING = open(os.path.join(DATA, "running.quiver")).read()


def running_example():
    return quivers.parse_algebra(RUNNING, name="running")


# ==============================================================================
class ParseAlgebraTest(unittest.TestCase):

    def test_running_example(self):
        """The Running Example parses, with five vertices and six arrows."""
        A = running_example()
        self.assertEqual(A.vertices, ["0", "1", "2", "3", "4"])
        self.assertEqual(A.arrow_names, ["a", "b", "c", "d", "e", "f"])
        self.assertEqual(len(A.relations), 6)

    def test_star_relation_syntax(self):
        A = quivers.parse_algebra("vertices: 0 1 2\narrow a: 0 -> 1\narrow b: 1 -> 2\nrelation b*a\n")
        self.assertEqual(A.relations, frozenset([("b", "a")]))

    def test_comments_and_blank_lines(self):
        A = quivers.parse_algebra("# nothing\n\nvertices: 0 1  # two vertices\narrow a: 0 -> 1\n")
        self.assertEqual(A.arrow_names, ["a"])

    def test_malformed_line(self):
        """A line that is not a declaration is a syntax error with its line number."""
        try:
            quivers.parse_algebra("vertices: 0 1\narrow a 0 -> 1\n")
        except GentleSyntaxError as err:
            self.assertEqual(err.line_number, 2)
        else:
            self.fail("no GentleSyntaxError")

    def test_unknown_vertex(self):
        self.assertRaises(GentleSyntaxError, quivers.parse_algebra, "vertices: 0\narrow a: 0 -> 1\n")

    def test_unknown_arrow_in_relation(self):
        self.assertRaises(GentleSyntaxError, quivers.parse_algebra,
                          "vertices: 0 1\narrow a: 0 -> 1\nrelation b a\n")

    def test_long_relation(self):
        self.assertRaises(GentleSyntaxError, quivers.parse_algebra,
                          "vertices: 0 1\narrow a: 0 -> 1\nrelation a a a\n")

    def test_duplicate_arrow(self):
        self.assertRaises(GentleSyntaxError, quivers.parse_algebra,
                          "vertices: 0 1\narrow a: 0 -> 1\narrow a: 1 -> 0\n")

    def test_three_arrows_out(self):
        """Condition (1) is reported with the offending vertex."""
        text = "vertices: 0 1 2 3\narrow a: 0 -> 1\narrow b: 0 -> 2\narrow c: 0 -> 3\n"
        try:
            quivers.parse_algebra(text)
        except NotGentleError as err:
            self.assertIn(1, [v[0] for v in err.violations])
        else:
            self.fail("no NotGentleError")

    def test_two_nonzero_continuations(self):
        """Condition (2): two arrows composing non-trivially after the same arrow."""
        text = "vertices: 0 1 2 3\narrow a: 0 -> 1\narrow b: 1 -> 2\narrow c: 1 -> 3\n"
        try:
            quivers.parse_algebra(text)
        except NotGentleError as err:
            self.assertIn(2, [v[0] for v in err.violations])
        else:
            self.fail("no NotGentleError")

    def test_relation_not_a_path(self):
        text = "vertices: 0 1 2\narrow a: 0 -> 1\narrow b: 2 -> 0\nrelation b a\n"
        self.assertRaises(NotGentleError, quivers.parse_algebra, text)

    def test_infinite_dimensional(self):
        """A loop without relations makes the algebra infinite dimensional."""
        self.assertRaises(NotGentleError, quivers.parse_algebra, "vertices: 0\narrow a: 0 -> 0\n")

    def test_disconnected_warns(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            quivers.parse_algebra("vertices: 0 1\n")
        assert any(issubclass(w.category, DisconnectedQuiverWarning) for w in caught)

    def test_to_text_round_trip(self):
        A = running_example()
        B = quivers.parse_algebra(A.to_text())
        self.assertEqual(A, B)


class ComposePathsTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_af(self):
        """a after f is the non-zero path af from 3 to 1."""
        a, f = self.A.arrow_path("a"), self.A.arrow_path("f")
        af = quivers.compose_paths(self.A, a, f)
        self.assertEqual(af.arrows, ("f", "a"))
        self.assertEqual((af.source, af.target), ("3", "1"))
        self.assertEqual(str(af), "a*f")
        self.assertEqual(af.label(), "af")

    def test_relation_gives_zero(self):
        a, b = self.A.arrow_path("a"), self.A.arrow_path("b")
        self.assertEqual(quivers.compose_paths(self.A, b, a), quivers.ZERO)

    def test_not_composable(self):
        a, c = self.A.arrow_path("a"), self.A.arrow_path("c")
        self.assertRaises(NonComposableError, quivers.compose_paths, self.A, c, a)

    def test_stationary_is_identity(self):
        a = self.A.arrow_path("a")
        self.assertEqual(quivers.compose_paths(self.A, a, self.A.stationary("0")), a)
        self.assertEqual(quivers.compose_paths(self.A, self.A.stationary("1"), a), a)

    def test_associativity(self):
        """(pq)r = p(qr) whenever both sides are defined."""
        A = self.A
        paths = [p for v in A.vertices for p in A.paths_from(v)]
        for p in paths:
            for q in paths:
                if q.target != p.source:
                    continue
                pq = quivers.compose_paths(A, p, q)
                for r in paths:
                    if r.target != q.source:
                        continue
                    qr = quivers.compose_paths(A, q, r)
                    left = quivers.compose_paths(A, pq, r) if pq is not None else None
                    right = quivers.compose_paths(A, p, qr) if qr is not None else None
                    self.assertEqual(left, right)

    def test_parse_path(self):
        self.assertEqual(self.A.parse_path("a*f"), self.A.parse_path("af"))
        self.assertEqual(self.A.parse_path("1_2"), self.A.stationary("2"))
        self.assertRaises(GentleSyntaxError, self.A.parse_path, "b*a")


class HomPathBasisTest(unittest.TestCase):

    def setUp(self):
        self.A = running_example()

    def test_three_to_one(self):
        self.assertEqual([str(p) for p in quivers.hom_path_basis(self.A, "3", "1")], ["a*f"])

    def test_loops(self):
        """Only the stationary path goes from 0 to 0."""
        self.assertEqual(quivers.hom_path_basis(self.A, "0", "0"), [self.A.stationary("0")])

    def test_max_len(self):
        self.assertEqual(quivers.hom_path_basis(self.A, "3", "1", max_len=1), [])

    def test_transfer_matrix_agrees(self):
        """Counting by numpy matrix powers matches the enumerated paths."""
        for A in (self.A, quivers.discrete_algebra(1, 2, 2), quivers.discrete_algebra(2, 3, 1)):
            L = A.longest_path_length()
            for x in A.vertices:
                for y in A.vertices:
                    self.assertEqual(len(quivers.hom_path_basis(A, x, y, L)),
                                     quivers.count_paths_by_transfer_matrix(A, x, y, L))


class CycleArrowsTest(unittest.TestCase):

    def test_running_example(self):
        """Both 3-cycles carry full relations."""
        self.assertEqual(quivers.cycle_arrows(running_example()), set("abcdef"))

    def test_renaming_invariance(self):
        A = running_example()
        arrow_map = dict(zip("abcdef", "uvwxyz"))
        B = A.rename(arrow_map, {"0": "p"})
        self.assertEqual(quivers.cycle_arrows(B), set(arrow_map[a] for a in quivers.cycle_arrows(A)))

    def test_partial_relations(self):
        """A cycle with fewer relations than arrows contributes nothing."""
        self.assertEqual(quivers.cycle_arrows(quivers.discrete_algebra(1, 2, 0)), set())


class DiscreteAlgebraTest(unittest.TestCase):

    def test_relation_count(self):
        for r, n, m in ((1, 1, 3), (1, 2, 2), (2, 3, 1), (3, 3, 1)):
            A = quivers.discrete_algebra(r, n, m)
            self.assertEqual(len(A.relations), r)
            self.assertEqual(len(A.vertices), n + m)
            self.assertEqual(len(A.arrows), n + m)

    def test_full_cycle(self):
        """For r = n every cycle arrow is a cycle arrow of C(Λ)."""
        A = quivers.discrete_algebra(3, 3, 1)
        self.assertEqual(quivers.cycle_arrows(A), set(["c0", "c1", "c2"]))

    def test_loop(self):
        A = quivers.discrete_algebra(1, 1, 3)
        self.assertEqual(A.relations, frozenset([("c0", "c0")]))
        self.assertEqual(A.vertices, ["-3", "-2", "-1", "0"])

    def test_bad_parameters(self):
        for r, n, m in ((0, 1, 0), (2, 1, 0), (1, 1, -1)):
            self.assertRaises(InvalidParametersError, quivers.discrete_algebra, r, n, m)


class MaximalExtensionTest(unittest.TestCase):

    def test_running_example(self):
        A = running_example()
        self.assertEqual(str(A.maximal_extension("f")), "a*f")
        self.assertEqual(str(A.maximal_extension("c")), "d*c")
        self.assertEqual(str(A.maximal_extension("a")), "a")


# ==============================================================================
if __name__ == "__main__":
    unittest.main()

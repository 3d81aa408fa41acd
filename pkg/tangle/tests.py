# Tangles: text format, classification, closures, the tangle sum and the
# simply-linked construction with its left-closure swap.

import random

from django.test import SimpleTestCase

from diagram.models import LongDiagram
from diagram.services import UnknownCrossing, format_gauss_code
from diagram.test_utils import (LINKED_PAIR, TREFOIL, code, fake_diagram,
                                fake_diagrams, fake_tangle)
from invariants.services import bundle_diff, intersection_polys
from laurent.models import ZERO
from laurent.services import parse_poly
from tangle.constants import (LEFT_CLOSURE_SWAP, MIXED_AB, MIXED_BA,
                              SELF_A_0, SELF_B_1, TANGLE_SUM_H)
from tangle.models import TangleDiagram
from tangle.serializers import (tangle_from_json, tangle_invariants_to_json,
                                tangle_to_json)
from tangle.services import (MalformedTangle, RelocationTooLarge,
                             check_tangle_identities, classify_crossing,
                             crossing_sets, format_tangle, is_simply_linked,
                             left_close, parse_tangle, right_close,
                             simply_linked_from, split_tangle, swap_fh,
                             tangle_invariants, tangle_sum)

J1 = "U2+ O1+ O2+ U1+"

T1 = "A: O1+\nB: U1+"
T2 = "A: U2- O1-\nB: O2- U1-"
T3 = "A: U1+\nB: O1+"
T4 = "A: U1-\nB: O1-"


def p(text):
    return parse_poly(text)


class TangleFormatTestCase(SimpleTestCase):
    def test_round_trip(self):
        E = parse_tangle(T2)
        self.assertEqual(format_tangle(E), T2)
        self.assertEqual(len(E.strand_a), 2)
        self.assertEqual(E.n, 2)

    def test_both_strands_are_read(self):
        E = parse_tangle(T2)
        self.assertEqual(len(E.strand_b), 2)
        self.assertEqual(dict(E.strands_of), {1: ("A", "B"), 2: ("A", "B")})

    def test_lines_in_any_order(self):
        E = parse_tangle("B: O1- U2+\nA: U1- O2+")
        self.assertEqual(format_tangle(E), "A: U1- O2+\nB: O1- U2+")

    def test_empty_strands(self):
        E = parse_tangle("A:\nB:")
        self.assertEqual(E, TangleDiagram())
        self.assertEqual(format_tangle(E), "A:\nB:")

    def test_malformed(self):
        for bad in ["A: O1+", "A: O1+\nA: U1+", "A: O1+\nC: U1+", "O1+ U1+"]:
            with self.assertRaises(MalformedTangle, msg=bad):
                parse_tangle(bad)

    def test_split_bounds(self):
        with self.assertRaises(MalformedTangle):
            split_tangle(code(J1), 5)


class ClassifyCrossingTestCase(SimpleTestCase):
    def test_mixed(self):
        E = parse_tangle(T2)
        self.assertEqual(classify_crossing(E, 1), MIXED_AB)
        self.assertEqual(classify_crossing(E, 2), MIXED_BA)
        self.assertTrue(is_simply_linked(E))

    def test_self(self):
        E = parse_tangle("A: O1+ U1+\nB: U2- O2-")
        self.assertEqual(classify_crossing(E, 1), SELF_A_0)
        self.assertEqual(classify_crossing(E, 2), SELF_B_1)
        self.assertFalse(is_simply_linked(E))

    def test_unknown(self):
        with self.assertRaises(UnknownCrossing):
            classify_crossing(parse_tangle(T1), 2)

    def test_sets_partition_crossings(self):
        rng = random.Random(3)
        for _ in range(20):
            E = fake_tangle(rng)
            ids = sorted(c for group in crossing_sets(E).values() for c in group)
            self.assertEqual(ids, list(E.ids))


class ClosureTestCase(SimpleTestCase):
    def test_closures(self):
        E = parse_tangle(T2)
        self.assertEqual(format_gauss_code(right_close(E)), "U2- O1- O2- U1-")
        self.assertEqual(format_gauss_code(left_close(E)), "O2- U1- U2- O1-")

    def test_empty(self):
        self.assertEqual(right_close(TangleDiagram()), LongDiagram())

    def test_split_then_close(self):
        for D in fake_diagrams(8, 10):
            self.assertEqual(right_close(split_tangle(D, len(D.passages) // 2)), D)


class TangleInvariantsTestCase(SimpleTestCase):
    def test_t1(self):
        E = parse_tangle(T1)
        self.assertEqual(tangle_invariants(E).linking[0], 1)
        self.assertEqual(intersection_polys(right_close(E)).F[0, 0], ZERO)

    def test_t2(self):
        E = parse_tangle(T2)
        inv = tangle_invariants(E)
        self.assertEqual(inv.linking[0], -1)
        self.assertEqual(inv.V[0], p("-t^-1"))
        self.assertEqual(intersection_polys(right_close(E)).G[0, 0], ZERO)

    def test_t3(self):
        inv = tangle_invariants(parse_tangle(T3))
        self.assertEqual(dict(inv.linking), {0: 0, 1: 1})

    def test_t4(self):
        E = parse_tangle(T4)
        inv = tangle_invariants(E)
        self.assertEqual(inv.linking[1], -1)
        self.assertEqual(inv.V[0], ZERO)
        self.assertEqual(intersection_polys(right_close(E)).G[0, 1], ZERO)

    def test_no_mixed_crossings(self):
        inv = tangle_invariants(parse_tangle("A: O1+ U1+\nB: U2- O2-"))
        self.assertEqual(inv.V[0], ZERO)
        self.assertEqual(inv.V[1], ZERO)
        self.assertEqual(dict(inv.linking), {0: 0, 1: 0})

    def test_json(self):
        data = tangle_invariants_to_json(tangle_invariants(parse_tangle(T2)))
        self.assertEqual(data["polynomials"]["V0"], "-t^-1")
        self.assertEqual(data["polynomials"]["U0"], "0")
        self.assertEqual(data["linking"], {"0": -1, "1": -1})


class TangleSumTestCase(SimpleTestCase):
    def test_trivial_tangle(self):
        D = code(TREFOIL)
        self.assertEqual(tangle_sum(TangleDiagram(), D), D)

    def test_t1_plus_j1(self):
        S = tangle_sum(parse_tangle(T1), code(J1))
        self.assertEqual(format_gauss_code(S), "O1+ U3+ O2+ O3+ U2+ U1+")
        self.assertEqual(intersection_polys(S).F[0, 0], p("t-2+t^-1"))

    def test_t2_plus_j1(self):
        E = parse_tangle(T2)
        W0 = intersection_polys(tangle_sum(E, code(J1))).W[0]
        self.assertEqual(W0, intersection_polys(right_close(E)).W[0] + p("t-1"))
        self.assertEqual(W0, p("t-t^-1"))

    def test_identities_on_small_tangles(self):
        for text in (T1, T2, T3, T4):
            report = check_tangle_identities(parse_tangle(text), code(J1))
            self.assertTrue(report.passed, [c.label for c in report.failures])
            self.assertIn(TANGLE_SUM_H, report.identities())

    def test_identities_on_random_pairs(self):
        rng = random.Random(29)
        for _ in range(40):
            E = fake_tangle(rng, max_crossings=5)
            D = fake_diagram(rng, max_crossings=5)
            report = check_tangle_identities(E, D)
            self.assertTrue(report.passed, [c.label for c in report.failures])


class SimplyLinkedTestCase(SimpleTestCase):
    def assertSimplyLinkedCopy(self, D):
        T = simply_linked_from(D)
        self.assertTrue(is_simply_linked(T))
        self.assertEqual(dict(tangle_invariants(T).linking), {0: 0, 1: 0})
        self.assertEqual(bundle_diff(intersection_polys(right_close(T)), intersection_polys(D)), [])
        return T

    def test_empty(self):
        self.assertEqual(simply_linked_from(LongDiagram()), TangleDiagram())

    def test_classical_trefoil(self):
        T = self.assertSimplyLinkedCopy(code(TREFOIL))
        self.assertEqual(crossing_sets(T)[SELF_A_0], ())

    def test_small_examples(self):
        for text in (J1, LINKED_PAIR, "O1+ U1+", "U1- O2+ O1- U2+"):
            self.assertSimplyLinkedCopy(code(text))

    def test_random_diagrams(self):
        for D in fake_diagrams(31, 15, max_crossings=4):
            self.assertSimplyLinkedCopy(D)

    def test_left_closure_swap(self):
        for D in fake_diagrams(37, 10, max_crossings=4):
            report = check_tangle_identities(simply_linked_from(D))
            self.assertIn(LEFT_CLOSURE_SWAP, report.identities())
            self.assertTrue(report.passed, [c.label for c in report.failures])

    def test_split(self):
        D = code(J1)
        T = simply_linked_from(D, split=2)
        self.assertTrue(is_simply_linked(T))
        self.assertEqual(T.strand_a[:2], D.passages[:2])
        self.assertEqual(bundle_diff(intersection_polys(right_close(T)), intersection_polys(D)), [])
        for split in (0, 3, 5):
            with self.assertRaises(MalformedTangle, msg=split):
                simply_linked_from(D, split=split)

    def test_crossing_limit(self):
        with self.assertRaises(RelocationTooLarge):
            simply_linked_from(code(TREFOIL), crossing_limit=3)


class SwapTestCase(SimpleTestCase):
    def test_j1(self):
        B = intersection_polys(swap_fh(code(J1)))
        for a, b in ((0, 0), (0, 1), (1, 0), (1, 1)):
            self.assertEqual(B.F[a, b], p("-t+2-t^-1"))
            self.assertEqual(B.H[a, b], ZERO)

    def test_planar_input(self):
        B = intersection_polys(swap_fh(code(TREFOIL)))
        self.assertTrue(all(poly == ZERO for _, poly in B.items()))

    def test_random_knots(self):
        for D in fake_diagrams(41, 10, max_crossings=4):
            B, S = intersection_polys(D), intersection_polys(swap_fh(D))
            for a, b in ((0, 0), (0, 1), (1, 0), (1, 1)):
                self.assertEqual(S.F[a, b], B.H[1 - a, 1 - b])
                self.assertEqual(S.H[a, b], B.F[1 - a, 1 - b])


class TangleJsonTestCase(SimpleTestCase):
    def test_to_json(self):
        data = tangle_to_json(parse_tangle(T2))
        self.assertEqual(data["A"], "U2- O1-")
        self.assertEqual(data["B"], "O2- U1-")
        self.assertTrue(data["simply_linked"])

    def test_from_json(self):
        self.assertEqual(tangle_from_json({"A": "O1+", "B": "U1+"}), parse_tangle(T1))

    def test_bad_document(self):
        with self.assertRaises(MalformedTangle):
            tangle_from_json({"A": "O1+"})

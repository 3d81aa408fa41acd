# Writhe and intersection polynomials, closed-knot invariants via cuts and the
# identity suite. Family values live with the constructions in construct/tests.py.

import random

from django.test import SimpleTestCase
from hypothesis import given, settings

from diagram.models import LongDiagram
from diagram.moves import random_rmove_sequence
from diagram.services import close, concatenate, untwist
from diagram.test_utils import (LINKED_PAIR, TREFOIL, code, diagrams,
                                fake_diagrams)
from invariants.constants import (ANNULUS_LAW_H, INTERSECTION_NAMES,
                                  PLANAR_VANISHING, PRODUCT_H_CROSS_TERM,
                                  SINGLE_TYPE0_VANISHING, TORUS_RECIPROCITY_W)
from invariants.serializers import bundle_to_json, report_to_json
from invariants.services import (bundle_diff, bundle_equal, check_identities,
                                 closed_invariants, format_bundle_table,
                                 intersection_polys, invariance_violations,
                                 writhe_poly)
from laurent.models import ZERO
from laurent.services import parse_poly
from surface.models import DEFAULT_RULES

J1 = "U2+ O1+ O2+ U1+"


def p(text):
    return parse_poly(text)


class WrithePolyTestCase(SimpleTestCase):
    def test_empty(self):
        self.assertEqual(writhe_poly(LongDiagram(), 0), ZERO)
        self.assertEqual(writhe_poly(LongDiagram(), 1), ZERO)

    def test_j1(self):
        D = code(J1)
        self.assertEqual(writhe_poly(D, 0), p("t-1"))
        self.assertEqual(writhe_poly(D, 1), p("t-1"))

    def test_linked_pair(self):
        D = code(LINKED_PAIR)
        self.assertEqual(writhe_poly(D, 0), p("t-2+t^-1"))
        self.assertEqual(writhe_poly(D, 1), ZERO)

    def test_kinks_do_not_count(self):
        self.assertEqual(writhe_poly(code("O1+ U1+ U2- O2-"), 0), ZERO)


class IntersectionPolysTestCase(SimpleTestCase):
    def test_empty_bundle(self):
        B = intersection_polys(LongDiagram())
        self.assertTrue(all(poly == ZERO for _, poly in B.items()))
        self.assertEqual(dict(B.omega), {0: 0, 1: 0})

    def test_j1(self):
        B = intersection_polys(code(J1))
        for name in INTERSECTION_NAMES:
            expected = p("-t+2-t^-1") if name.startswith("H") else ZERO
            self.assertEqual(B[name], expected, msg=name)

    def test_linked_pair(self):
        B = intersection_polys(code(LINKED_PAIR))
        self.assertEqual(dict(B.omega), {0: 2, 1: 0})
        self.assertEqual(B["F00"], p("t-2+t^-1"))
        self.assertEqual(B["G00"], p("-t+2-t^-1"))
        self.assertEqual(B["H00"], p("-3*t+6-3*t^-1"))
        for name in ("F01", "F10", "F11", "G01", "G10", "G11", "H01", "H10", "H11"):
            self.assertEqual(B[name], ZERO, msg=name)

    def test_planar_trefoil_vanishes(self):
        B = intersection_polys(code(TREFOIL))
        self.assertEqual(bundle_diff(B, intersection_polys(LongDiagram())), [])

    def test_bad_name(self):
        with self.assertRaises(KeyError):
            intersection_polys(code(J1))["X00"]

    def test_hundred_crossings(self):
        (D,) = fake_diagrams(2, 1, max_crossings=100, min_crossings=100)
        B = intersection_polys(D)
        self.assertEqual(B["F01"], B["F10"].invert_var())

    @given(diagrams())
    def test_every_polynomial_vanishes_at_one(self, D):
        for name, poly in intersection_polys(D).items():
            self.assertEqual(poly.eval_one(), 0, msg=name)

    @given(diagrams())
    def test_bundle_level_identities(self, D):
        B = intersection_polys(D)
        for name in ("F00", "F11", "H00", "H11"):
            self.assertTrue(B[name].is_reciprocal(), msg=name)
        self.assertEqual(B["F01"], B["F10"].invert_var())
        self.assertEqual(B["H01"], B["H10"].invert_var())
        self.assertEqual(B["G00"].deriv_one(), 0)
        self.assertEqual(B["G11"].deriv_one(), 0)


class ClosedInvariantsTestCase(SimpleTestCase):
    def test_closure_of_j1(self):
        W, I = closed_invariants(close(code(J1)))
        self.assertEqual(W, p("t-2+t^-1"))
        self.assertEqual(I, p("-t+2-t^-1"))

    def test_every_cut_of_j1(self):
        C = close(code(J1))
        values = {closed_invariants(C, arc) for arc in range(4)}
        self.assertEqual(len(values), 1)

    def test_empty(self):
        self.assertEqual(closed_invariants(close(LongDiagram())), (ZERO, ZERO))

    @given(diagrams(max_crossings=6))
    @settings(max_examples=40)
    def test_cut_independence(self, D):
        C = close(D)
        reference = closed_invariants(C)
        for arc in range(1, len(D.passages)):
            self.assertEqual(closed_invariants(C, arc), reference)


class RMoveInvarianceTestCase(SimpleTestCase):
    def test_random_sequences(self):
        rng = random.Random(17)
        for D in fake_diagrams(17, 15, max_crossings=5):
            sequence = random_rmove_sequence(D, rng, 12)
            self.assertEqual(invariance_violations(D, sequence), [])

    def test_untwist(self):
        for D in fake_diagrams(4, 20):
            self.assertTrue(bundle_equal(intersection_polys(untwist(D)), intersection_polys(D)))
            self.assertTrue(bundle_equal(intersection_polys(untwist(D, arc=1 if D.n else 0)), intersection_polys(D)))


class IdentityReportTestCase(SimpleTestCase):
    def test_j1_passes_everything(self):
        report = check_identities(code(J1))
        self.assertTrue(report.passed, [c.label for c in report.failures])
        self.assertIn(ANNULUS_LAW_H, report.identities())
        self.assertIn(SINGLE_TYPE0_VANISHING, report.identities())

    def test_conditional_identities(self):
        planar = check_identities(code(TREFOIL))
        self.assertIn(PLANAR_VANISHING, planar.identities())
        linked = check_identities(code(LINKED_PAIR))
        self.assertNotIn(PLANAR_VANISHING, linked.identities())
        self.assertIn(TORUS_RECIPROCITY_W, linked.identities())
        self.assertNotIn(ANNULUS_LAW_H, linked.identities())
        self.assertTrue(linked.passed)

    def test_product(self):
        K2 = concatenate(code(J1), code(J1))
        report = check_identities(code(J1), K2)
        self.assertTrue(report.passed, [c.label for c in report.failures])
        self.assertIn(PRODUCT_H_CROSS_TERM, report.identities())

    def test_flipped_transversal_rule_is_caught(self):
        rules = DEFAULT_RULES.with_flipped_transversal()
        report = check_identities(code(TREFOIL), rules=rules)
        self.assertFalse(report.passed)
        self.assertIn(PLANAR_VANISHING, {c.identity for c in report.failures})

    @given(diagrams(max_crossings=5))
    @settings(max_examples=30)
    def test_random_diagrams(self, D):
        report = check_identities(D)
        self.assertTrue(report.passed, [c.label for c in report.failures])

    def test_random_pairs(self):
        diagrams_ = fake_diagrams(23, 20, max_crossings=5)
        for D, E in zip(diagrams_[::2], diagrams_[1::2]):
            report = check_identities(D, E)
            self.assertTrue(report.passed, [c.label for c in report.failures])


class InvariantJsonTestCase(SimpleTestCase):
    def test_bundle(self):
        data = bundle_to_json(intersection_polys(code(J1)))
        self.assertEqual(data["omega"], {"0": 1, "1": 1})
        self.assertEqual(data["polynomials"]["W0"], "t-1")
        self.assertEqual(data["polynomials"]["H01"], "-t+2-t^-1")
        self.assertEqual(data["polynomials"]["F00"], "0")

    def test_report(self):
        data = report_to_json(check_identities(code(J1)), verbose=True)
        self.assertTrue(data["passed"])
        self.assertEqual(data["failures"], [])
        self.assertEqual(data["checked"], len(data["checks"]))

    def test_table(self):
        table = format_bundle_table(intersection_polys(code(J1)))
        self.assertIn("H00  -t+2-t^-1", table)
        self.assertTrue(table.startswith("omega0"))

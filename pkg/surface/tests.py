# Ribbon graphs, genus and the intersection pairings on the Carter surface.

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings

from diagram.models import LongDiagram
from diagram.services import sym_reflect
from diagram.test_utils import LINKED_PAIR, TREFOIL, code, diagrams, fake_diagrams
from surface.models import DEFAULT_RULES, RibbonGraph
from surface.serializers import HomologyDataSerializer, surface_report
from surface.services import (Disconnected, IndexOutOfRange, SurfaceError,
                              build_carter, derived_pairings,
                              ends_on_distinct_faces, face_cycles, genus,
                              homology_data, open_ribbon, pairing_mismatches,
                              push_homology_data, two_boundary_genus)

J1 = "U2+ O1+ O2+ U1+"


class RibbonGraphTestCase(SimpleTestCase):
    def test_empty_diagram_is_a_sphere(self):
        R = build_carter(LongDiagram())
        self.assertEqual((R.vertex_count, R.edge_count), (1, 1))
        self.assertEqual(len(face_cycles(R)), 2)
        self.assertEqual(genus(R), 0)

    def test_vertex_degrees(self):
        R = build_carter(code(TREFOIL))
        self.assertEqual([len(c) for c in R.rotation], [4, 4, 4, 2])
        self.assertEqual(R.edge_count, 7)

    def test_faces_partition_darts(self):
        for D in fake_diagrams(5, 20):
            R = build_carter(D)
            darts = sorted(d for face in face_cycles(R) for d in face)
            self.assertEqual(darts, list(range(R.darts)))

    def test_genus_examples(self):
        self.assertEqual(genus(build_carter(code(TREFOIL))), 0)
        self.assertEqual(genus(build_carter(code(LINKED_PAIR))), 1)
        self.assertEqual(genus(build_carter(code(J1))), 1)

    def test_mirror_keeps_genus(self):
        for D in fake_diagrams(9, 10):
            self.assertEqual(genus(build_carter(D)), genus(build_carter(D, mirrored=True)))

    def test_disconnected(self):
        two_circles = RibbonGraph(edge=(1, 0, 3, 2), rotation=((0, 1), (2, 3)))
        with self.assertRaises(Disconnected):
            genus(two_circles)

    def test_broken_involution(self):
        with self.assertRaises(SurfaceError):
            genus(RibbonGraph(edge=(0, 1), rotation=((0, 1),)))
        with self.assertRaises(SurfaceError):
            face_cycles(RibbonGraph(edge=(1, 0), rotation=((0,),)))


class OpenRibbonTestCase(SimpleTestCase):
    def test_free_ends(self):
        R = open_ribbon(code(J1))
        self.assertEqual(R.rotation[-2:], ((8,), (9,)))
        self.assertEqual(len(face_cycles(R)), 3)
        self.assertTrue(ends_on_distinct_faces(code(J1)))

    def test_two_boundary_genus(self):
        self.assertEqual(two_boundary_genus(LongDiagram()), 0)
        self.assertEqual(two_boundary_genus(code(TREFOIL)), 0)
        self.assertEqual(two_boundary_genus(code(J1)), 0)

    @given(diagrams())
    def test_bounds_differ_by_at_most_one(self, D):
        g1 = genus(build_carter(D))
        g2 = two_boundary_genus(D)
        self.assertLessEqual(g2, g1)
        self.assertLessEqual(g1, g2 + 1)


class HomologyDataTestCase(SimpleTestCase):
    def test_empty(self):
        H = homology_data(LongDiagram())
        self.assertEqual(H.ids, ())
        self.assertTrue(H.is_trivial())

    def test_planar_trefoil_is_trivial(self):
        H = homology_data(code(TREFOIL))
        self.assertEqual(H.genus, 0)
        self.assertTrue(H.is_trivial())

    def test_j1(self):
        H = homology_data(code(J1))
        self.assertEqual(H.v.tolist(), [1, 1])
        self.assertEqual(H.M.tolist(), [[0, 0], [0, 0]])

    def test_linked_pair(self):
        H = homology_data(code(LINKED_PAIR))
        self.assertEqual(H.v.tolist(), [1, -1])
        self.assertEqual(H.M.tolist(), [[0, 1], [-1, 0]])

    def test_reflection_negates(self):
        D = code(LINKED_PAIR)
        H, R = homology_data(D), homology_data(sym_reflect(D))
        # only the corner term survives here, and it is odd in the signs
        self.assertEqual(R.M.tolist(), (-H.M).tolist())

    def test_values_are_read_only(self):
        H = homology_data(code(J1))
        with self.assertRaises(ValueError):
            H.v[0] = 5

    def test_flipped_transversal_rule_breaks_planarity(self):
        H = homology_data(code(TREFOIL), DEFAULT_RULES.with_flipped_transversal())
        self.assertFalse(H.is_trivial())
        self.assertEqual(H.M[0, 2], 2)

    @given(diagrams())
    def test_antisymmetric(self, D):
        H = homology_data(D)
        self.assertTrue(np.array_equal(H.M, -H.M.T))
        self.assertFalse(H.M.diagonal().any())

    @given(diagrams())
    def test_nonzero_pairings_need_genus(self, D):
        H = homology_data(D)
        if not H.is_trivial():
            self.assertGreaterEqual(H.genus, 1)

    def test_hundred_crossings(self):
        (D,) = fake_diagrams(1, 1, max_crossings=100, min_crossings=100)
        H = homology_data(D)
        self.assertEqual(H.M.shape, (100, 100))


class PushOracleTestCase(SimpleTestCase):
    def test_hand_examples(self):
        for text in [J1, LINKED_PAIR, "O1- O2+ U1- U2+", "U1+ U2+ O1+ O2+", "U2- O1- O2- U1-"]:
            self.assertEqual(pairing_mismatches(code(text)), [], msg=text)

    @given(diagrams(max_crossings=6))
    @settings(max_examples=60)
    def test_closed_form_matches_push_off(self, D):
        self.assertEqual(homology_data(D), push_homology_data(D))

    @given(diagrams(max_crossings=5))
    @settings(max_examples=30)
    def test_mirrored_orientation_negates(self, D):
        H, mirrored = push_homology_data(D), push_homology_data(D, mirrored=True)
        self.assertTrue(np.array_equal(mirrored.v, -H.v))
        self.assertTrue(np.array_equal(mirrored.M, -H.M))

    def test_mutated_rules_disagree_with_oracle(self):
        rules = DEFAULT_RULES.with_flipped_transversal()
        self.assertNotEqual(pairing_mismatches(code(TREFOIL), rules), [])


class DerivedPairingsTestCase(SimpleTestCase):
    def test_diagonal(self):
        H = homology_data(code(LINKED_PAIR))
        self.assertEqual(derived_pairings(H, 1, 1), (1, 0))
        self.assertEqual(derived_pairings(H, 2, 2), (-1, 0))

    def test_off_diagonal(self):
        H = homology_data(code(LINKED_PAIR))
        self.assertEqual(derived_pairings(H, 1, 2), (0, -1))
        self.assertEqual(derived_pairings(H, 2, 1), (0, 1))

    def test_unknown_crossing(self):
        H = homology_data(code(J1))
        with self.assertRaises(IndexOutOfRange):
            derived_pairings(H, 1, 3)

    @given(diagrams(min_crossings=1))
    def test_beta_pairing_antisymmetric(self, D):
        H = homology_data(D)
        for i in D.ids:
            for j in D.ids:
                self.assertEqual(derived_pairings(H, i, j)[1], -derived_pairings(H, j, i)[1])


class SurfaceJsonTestCase(SimpleTestCase):
    def test_report(self):
        data = surface_report(code(LINKED_PAIR))
        self.assertEqual(data["genus"], 1)
        self.assertEqual(data["v"], [1, -1])
        self.assertEqual(data["M"], [[0, 1], [-1, 0]])
        self.assertEqual(data["g2_upper"], 1)

    def test_homology_serializer(self):
        data = HomologyDataSerializer(homology_data(code(J1))).data
        self.assertEqual(data["crossings"], [1, 2])
        self.assertEqual(data["v"], [1, 1])
        self.assertEqual(data["genus"], 1)

# Gauss-code parsing, the structural operators and the Reidemeister move engine.
# Invariance of the polynomials under these moves is tested in invariants/tests.py.

import random

from django.test import SimpleTestCase
from hypothesis import given, settings

from diagram.constants import (OVER, R1_DELETE, R1_INSERT, R2_DELETE,
                               R2_INSERT, R3_SLIDE, UNDER)
from diagram.models import LongDiagram
from diagram.moves import (InvalidSite, MoveSite, apply_rmove,
                           enumerate_rmoves, random_rmove_sequence)
from diagram.serializers import diagram_from_json, diagram_to_json
from diagram.services import (ArcOutOfRange, LabelCountNotTwo,
                              MalformedToken, RoleDuplicated, SignMismatch,
                              UnknownCrossing, close, concatenate,
                              crossing_type, cut, cuts, format_gauss_code,
                              sym_flip, sym_reflect, sym_reverse, untwist,
                              writhe_a)
from diagram.test_utils import (LINKED_PAIR, TREFOIL, code, diagrams,
                                fake_diagrams)

# three strands stacked top to bottom, all crossings positive
TRIANGLE = "O1+ O2+ U1+ O3+ U2+ U3+"


class ParseGaussCodeTestCase(SimpleTestCase):
    def test_smallest_kink(self):
        D = code("O1+ U1+")
        self.assertEqual(D.n, 1)
        self.assertEqual(D.signs[1], 1)
        self.assertEqual(D.positions[1], (0, 1))

    def test_interleaved_pair(self):
        D = code("O1+ U2+ O2+ U1+")
        self.assertEqual(D.n, 2)
        self.assertEqual(D.interval(1), (0, 3))
        self.assertEqual(D.interval(2), (1, 2))

    def test_empty_code_is_empty_diagram(self):
        self.assertEqual(code(""), LongDiagram())
        self.assertEqual(code("   ").n, 0)

    def test_labels_relabeled_in_sorted_order(self):
        D = code("O5+ U7- O7- U5+")
        self.assertEqual(format_gauss_code(D), "O1+ U2- O2- U1+")

    def test_errors(self):
        with self.assertRaises(LabelCountNotTwo):
            code("O1+ U2- O2-")
        with self.assertRaises(RoleDuplicated):
            code("O1+ O1+")
        with self.assertRaises(SignMismatch):
            code("O1+ U1-")
        for bad in ["X1+", "O1", "O0+", "O+1", "o1+"]:
            with self.assertRaises(MalformedToken, msg=bad):
                code(bad)

    def test_format_round_trip(self):
        for D in fake_diagrams(7, 20):
            self.assertEqual(code(format_gauss_code(D)), D)


class CrossingTypeTestCase(SimpleTestCase):
    def test_types(self):
        self.assertEqual(crossing_type(code("O1+ U1+"), 1), 0)
        self.assertEqual(crossing_type(code("U1+ O1+"), 1), 1)
        with self.assertRaises(UnknownCrossing):
            crossing_type(code("O1+ U1+"), 2)

    def test_writhes(self):
        D = code("O1+ U1+")
        self.assertEqual((writhe_a(D, 0), writhe_a(D, 1)), (1, 0))
        self.assertEqual((writhe_a(LongDiagram(), 0), writhe_a(LongDiagram(), 1)), (0, 0))

    @given(diagrams())
    def test_types_partition_crossings(self, D):
        types = [crossing_type(D, c) for c in D.ids]
        self.assertEqual(len(types), D.n)
        self.assertEqual(
            sum(D.signs[c] for c in D.ids), writhe_a(D, 0) + writhe_a(D, 1)
        )


class UntwistTestCase(SimpleTestCase):
    def test_kink_gets_a_negative_partner(self):
        D = untwist(code("O1+ U1+"))
        self.assertEqual(format_gauss_code(D), "O1+ U1+ O2- U2-")
        self.assertEqual((writhe_a(D, 0), writhe_a(D, 1)), (0, 0))

    def test_nested_at_arc(self):
        D = untwist(code("O1+ U1+ U2+ O2+"), arc=1)
        self.assertEqual(format_gauss_code(D), "O1+ O3- U4- O4- U3- U1+ U2+ O2+")
        self.assertEqual((writhe_a(D, 0), writhe_a(D, 1)), (0, 0))

    def test_untwisted_is_fixed(self):
        D = code("O1+ U1+ O2- U2-")
        self.assertIs(untwist(D), D)

    def test_bad_arc(self):
        with self.assertRaises(ArcOutOfRange):
            untwist(code("O1+ U1+"), arc=3)

    @given(diagrams())
    def test_always_untwisted(self, D):
        for arc in (None, 0, len(D.passages)):
            U = untwist(D, arc=arc)
            self.assertEqual((writhe_a(U, 0), writhe_a(U, 1)), (0, 0))


class SymmetryTestCase(SimpleTestCase):
    def test_flip_of_kink(self):
        D = sym_flip(code("O1+ U1+"))
        self.assertEqual(format_gauss_code(D), "U1- O1-")
        self.assertEqual(crossing_type(D, 1), 1)

    def test_flip_keeping_signs(self):
        D = sym_flip(code("O1+ U1+"), negate_signs=False)
        self.assertEqual(format_gauss_code(D), "U1+ O1+")

    def test_reverse_and_reflect(self):
        D = code("O1+ U2- O2- U1+")
        self.assertEqual(format_gauss_code(sym_reverse(D)), "U1+ O2- U2- O1+")
        self.assertEqual(format_gauss_code(sym_reflect(D)), "O1- U2+ O2+ U1-")

    @given(diagrams())
    def test_involutions_and_commutation(self, D):
        self.assertEqual(sym_flip(sym_flip(D)), D)
        self.assertEqual(sym_reverse(sym_reverse(D)), D)
        self.assertEqual(sym_reflect(sym_reflect(D)), D)
        self.assertEqual(sym_flip(sym_reverse(D)), sym_reverse(sym_flip(D)))
        self.assertEqual(sym_flip(sym_reflect(D)), sym_reflect(sym_flip(D)))
        self.assertEqual(sym_reverse(sym_reflect(D)), sym_reflect(sym_reverse(D)))

    @given(diagrams())
    def test_writhe_relations(self, D):
        for a in (0, 1):
            self.assertEqual(writhe_a(sym_flip(D), a), -writhe_a(D, 1 - a))
            self.assertEqual(writhe_a(sym_reverse(D), a), writhe_a(D, 1 - a))
            self.assertEqual(writhe_a(sym_reflect(D), a), -writhe_a(D, a))


class ConcatenateAndCutTestCase(SimpleTestCase):
    def test_empty_is_identity(self):
        D = code(LINKED_PAIR)
        self.assertEqual(concatenate(D, LongDiagram()), D)
        self.assertEqual(concatenate(LongDiagram(), D), D)

    def test_second_factor_renumbered(self):
        D = concatenate(code("O1+ U1+"), code("U1- O1-"))
        self.assertEqual(format_gauss_code(D), "O1+ U1+ U2- O2-")

    def test_cut_of_close_at_basepoint(self):
        D = code(TREFOIL)
        self.assertEqual(cut(close(D), 0), D)

    def test_cut_rotates(self):
        C = close(code("O1+ U2- O2- U1+"))
        self.assertEqual(format_gauss_code(cut(C, 1)), "U2- O2- U1+ O1+")
        self.assertEqual(len(list(cuts(C))), 4)

    def test_close_empty(self):
        C = close(LongDiagram())
        self.assertEqual(len(C.passages), 0)
        self.assertEqual(cut(C, 0), LongDiagram())

    def test_arc_out_of_range(self):
        C = close(code("O1+ U1+"))
        with self.assertRaises(ArcOutOfRange):
            cut(C, 2)
        with self.assertRaises(ArcOutOfRange):
            cut(C, -1)


class ReidemeisterMoveTestCase(SimpleTestCase):
    def test_r1_delete_kink(self):
        D = code("O1+ U1+")
        self.assertEqual(apply_rmove(D, MoveSite(R1_DELETE, crossings=(1,))), LongDiagram())

    def test_r1_insert(self):
        D = apply_rmove(code("O1+ U1+"), MoveSite(R1_INSERT, arcs=(1,), first_role=UNDER, sign=-1))
        self.assertEqual(format_gauss_code(D), "O1+ U2- O2- U1+")

    def test_r2_insert_then_delete(self):
        D = code(TREFOIL)
        for parallel in (True, False):
            site = MoveSite(R2_INSERT, arcs=(1, 4), first_role=OVER, sign=1, parallel=parallel)
            bigger = apply_rmove(D, site)
            self.assertEqual(bigger.n, 5)
            self.assertEqual(apply_rmove(bigger, MoveSite(R2_DELETE, crossings=(4, 5))), D)

    def test_r2_needs_opposite_signs(self):
        D = code("O1+ O2+ U1+ U2+")
        with self.assertRaises(InvalidSite):
            apply_rmove(D, MoveSite(R2_DELETE, crossings=(1, 2)))

    def test_r3_triangle_slides_back_and_forth(self):
        D = code(TRIANGLE)
        sites = enumerate_rmoves(D, kinds=[R3_SLIDE])
        self.assertEqual(sites, [MoveSite(R3_SLIDE, arcs=(0, 2, 4), crossings=(1, 2, 3))])
        slid = apply_rmove(D, sites[0])
        self.assertEqual(format_gauss_code(slid), "O2+ O1+ O3+ U1+ U3+ U2+")
        back = enumerate_rmoves(slid, kinds=[R3_SLIDE])
        self.assertEqual(len(back), 1)
        self.assertEqual(apply_rmove(slid, back[0]), D)

    def test_r3_rejects_inconsistent_signs(self):
        D = code("O1+ O2+ U1+ O3- U2+ U3-")
        self.assertEqual(enumerate_rmoves(D, kinds=[R3_SLIDE]), [])
        with self.assertRaises(InvalidSite):
            apply_rmove(D, MoveSite(R3_SLIDE, arcs=(0, 2, 4), crossings=(1, 2, 3)))

    def test_site_counts_on_kink(self):
        sites = enumerate_rmoves(code("O1+ U1+"))
        kinds = [s.kind for s in sites]
        self.assertEqual(kinds.count(R1_INSERT), 12)
        self.assertEqual(kinds.count(R1_DELETE), 1)
        self.assertEqual(kinds.count(R2_INSERT), 24)
        self.assertEqual(kinds.count(R2_DELETE), 0)

    def test_every_enumerated_site_applies(self):
        for D in fake_diagrams(11, 10, max_crossings=4):
            for site in enumerate_rmoves(D):
                apply_rmove(D, site)

    def test_unknown_kind(self):
        with self.assertRaises(InvalidSite):
            apply_rmove(code("O1+ U1+"), MoveSite("R4"))

    def test_random_sequence_is_deterministic(self):
        D = code(TREFOIL)
        first = [s for s, _ in random_rmove_sequence(D, random.Random(5), 15)]
        second = [s for s, _ in random_rmove_sequence(D, random.Random(5), 15)]
        self.assertEqual(first, second)


class DiagramJsonTestCase(SimpleTestCase):
    def test_sign_on_first_occurrence(self):
        data = diagram_to_json(code("O1+ U2- O2- U1+"))
        self.assertEqual(data["passages"], [["O", 1, 1], ["U", 2, -1], ["O", 2], ["U", 1]])
        self.assertEqual(data["code"], "O1+ U2- O2- U1+")

    def test_round_trip(self):
        for D in fake_diagrams(3, 15):
            self.assertEqual(diagram_from_json(dict(diagram_to_json(D))), D)

    def test_bad_documents(self):
        with self.assertRaises(MalformedToken):
            diagram_from_json({"passages": [["X", 1, 1], ["U", 1]]})
        with self.assertRaises(MalformedToken):
            diagram_from_json({"nope": []})
        with self.assertRaises(LabelCountNotTwo):
            diagram_from_json({"passages": [["O", 1, 1]]})
        with self.assertRaises(SignMismatch):
            diagram_from_json({"passages": [["O", 1, 1], ["U", 1, -1]]})

    @given(diagrams(max_crossings=5))
    @settings(max_examples=40)
    def test_json_keeps_code(self, D):
        self.assertEqual(code(diagram_to_json(D)["code"]), D)

# Example families, the writhe and intersection polynomial synthesizers and
# the supporting-genus classifier.

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from construct.constants import (DERIVATIVE_VANISHES_AT_ONE, FAMILY_NAMES,
                                 GENUS_SANDWICH, RECIPROCAL, TANGLE_CODES,
                                 TARGET_NAMES, VANISHES_AT_ONE)
from construct.models import GenusBounds, Target
from construct.serializers import bounds_to_json, realization_to_json
from construct.services import (BadParameter, ConditionViolated, _hairpins,
                                classify_filtration, family, genus_bounds,
                                parse_target, realize, realize_writhe,
                                swap_source, tangle_T, target_condition,
                                verify_realization)
from diagram.models import LongDiagram
from diagram.services import format_gauss_code
from invariants.services import intersection_polys
from laurent.models import ZERO, LaurentPoly
from laurent.services import parse_poly
from surface.services import build_carter, genus, two_boundary_genus
from tangle.services import format_tangle

N_RANGE = range(1, 9)


def p(text):
    return parse_poly(text)


def writhe_sum(coeffs):
    # sum c_k (t^k - 1)
    return LaurentPoly.sum(c * (LaurentPoly.monomial(k) - 1) for k, c in coeffs.items())


@st.composite
def vanishing_polys(draw, max_exponent=3, max_coeff=2):
    keys = [k for k in range(-max_exponent, max_exponent + 1) if k]
    coeffs = draw(st.dictionaries(st.sampled_from(keys), st.integers(-max_coeff, max_coeff), max_size=3))
    return writhe_sum(coeffs)


@st.composite
def reciprocal_polys(draw):
    g = draw(vanishing_polys())
    return g + g.invert_var()


@st.composite
def flat_polys(draw):
    # (1 - t^-1) g with g(1) = 0, so f(1) = f'(1) = 0
    return (1 - LaurentPoly.monomial(-1)) * draw(vanishing_polys())


class FamilyTestCase(SimpleTestCase):
    def test_j(self):
        for n in N_RANGE:
            D = family("J", n)
            B = intersection_polys(D)
            tn = LaurentPoly.monomial(n)
            self.assertEqual(D.n, 2 * n)
            self.assertEqual(B.W[0], tn - 1)
            self.assertEqual(B.W[1], tn - 1)
            for a in (0, 1):
                for b in (0, 1):
                    self.assertEqual(B.F[a, b], ZERO)
                    self.assertEqual(B.G[a, b], ZERO)
                    self.assertEqual(B.H[a, b], 2 - tn - tn.invert_var())
            self.assertEqual(two_boundary_genus(D), 0)
            self.assertEqual(genus(build_carter(D)), 1)

    def test_j1_code(self):
        self.assertEqual(format_gauss_code(family("J", 1)), "U2+ O1+ O2+ U1+")

    def test_k(self):
        for n in N_RANGE:
            B = intersection_polys(family("K", n))
            self.assertEqual(B.W[0], n * p("t-1"))
            self.assertEqual(B.W[1], n * p("t-1"))

    def test_kp(self):
        for n in N_RANGE:
            B = intersection_polys(family("Kp", n))
            self.assertEqual(B.F[0, 0], n * p("t-2+t^-1"))

    def test_kpp(self):
        for n in N_RANGE:
            B = intersection_polys(family("Kpp", n))
            self.assertEqual(B.W[1], n * p("t^2-1"))
            self.assertEqual(B.W[0] - B.W[1], p("-t^2+2*t-1"))

    def test_bad_parameters(self):
        with self.assertRaises(BadParameter):
            family("K", 0)
        with self.assertRaises(BadParameter):
            family("L", 2)
        with self.assertRaises(BadParameter):
            family("J", True)
        with self.assertRaises(BadParameter):
            tangle_T(5)

    def test_small_tangles(self):
        for k, text in TANGLE_CODES.items():
            self.assertEqual(format_tangle(tangle_T(k)), text)


class GenusBoundsTestCase(SimpleTestCase):
    EXPECTED = {
        "K": ((1, 1), (0, 0), "K2(0) \\ K1(0)"),
        "Kp": ((1, 1), (1, 1), "K1(1) \\ K2(0)"),
        "Kpp": ((2, 2), (1, 1), "K2(1) \\ K1(1)"),
        "J": ((1, 1), (0, 0), "K2(0) \\ K1(0)"),
    }

    def test_families(self):
        for name in FAMILY_NAMES:
            sg1, sg2, stratum = self.EXPECTED[name]
            for n in (1, 2, 3):
                D = family(name, n)
                bounds = genus_bounds(D)
                self.assertEqual(bounds.sg1, sg1, msg=f"{name}{n}")
                self.assertEqual(bounds.sg2, sg2, msg=f"{name}{n}")
                self.assertEqual(classify_filtration(D, bounds), stratum)

    def test_empty(self):
        bounds = genus_bounds(LongDiagram())
        self.assertEqual((bounds.sg1, bounds.sg2), ((0, 0), (0, 0)))
        self.assertEqual(bounds.reasons, ())
        self.assertEqual(classify_filtration(LongDiagram()), "K1(0)")

    def test_reasons(self):
        reasons = genus_bounds(family("Kpp", 1)).reasons
        self.assertTrue(any(reason.startswith("sg1 >= 2") for reason in reasons))
        self.assertTrue(any(reason.startswith("sg2 >= 1") for reason in reasons))
        self.assertFalse(any(GENUS_SANDWICH in reason for reason in reasons))

    def test_gap_is_reported(self):
        bounds = GenusBounds(sg1_lower=1, sg1_upper=2, sg2_lower=0, sg2_upper=1)
        self.assertEqual(classify_filtration(LongDiagram(), bounds), "undetermined [K2(0), K2(1)]")

    def test_json(self):
        D = family("Kp", 1)
        data = bounds_to_json(genus_bounds(D), classify_filtration(D))
        self.assertEqual(data["sg1"], [1, 1])
        self.assertEqual(data["sg2"], [1, 1])
        self.assertEqual(data["stratum"], "K1(1) \\ K2(0)")


class RealizeWritheTestCase(SimpleTestCase):
    def assertRealizes(self, f):
        D = realize_writhe(f)
        B = intersection_polys(D)
        self.assertEqual(B.W[0], f)
        self.assertEqual(B.W[1], f)
        self.assertEqual(two_boundary_genus(D), 0)
        return D

    def test_zero(self):
        self.assertEqual(self.assertRealizes(ZERO), LongDiagram())

    def test_mixed_signs(self):
        D = self.assertRealizes(p("t^2-t"))
        self.assertEqual(D.n, 6)

    def test_negative_exponents(self):
        self.assertRealizes(p("t^-2-1"))
        self.assertRealizes(p("-t^-1+1"))

    def test_not_vanishing(self):
        with self.assertRaises(ConditionViolated):
            realize_writhe(p("t-2"))

    @given(vanishing_polys())
    @settings(max_examples=25)
    def test_random(self, f):
        self.assertRealizes(f)


class HairpinTestCase(SimpleTestCase):
    def assertHairpins(self, coeffs):
        D = _hairpins(coeffs)
        B = intersection_polys(D)
        self.assertEqual(B.W[0], writhe_sum(coeffs))
        self.assertEqual(B.W[1], writhe_sum(coeffs))
        self.assertEqual(two_boundary_genus(D), 0)
        # every crossing passes once in the first half
        self.assertEqual(len({p.crossing for p in D.passages[:D.n]}), D.n)
        return D

    def test_empty(self):
        self.assertEqual(_hairpins({}), LongDiagram())

    def test_single_hairpin(self):
        D = self.assertHairpins({2: 1})
        self.assertEqual(D.n, 5)

    def test_mixed_coefficients(self):
        self.assertHairpins({1: 2, 3: -1})
        self.assertHairpins({-2: -3, -1: 1})

    @given(st.booleans(), st.dictionaries(st.integers(1, 6), st.integers(-5, 5).filter(bool), max_size=3))
    @settings(max_examples=25)
    def test_random(self, negative, coeffs):
        self.assertHairpins({-k if negative else k: c for k, c in coeffs.items()})


class TargetTestCase(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(parse_target(" G01 "), Target("G", 0, 1))
        self.assertEqual(len(TARGET_NAMES), 12)
        with self.assertRaises(BadParameter):
            parse_target("W0")

    def test_conditions(self):
        self.assertEqual(target_condition(parse_target("F01"), p("t-2")), VANISHES_AT_ONE)
        self.assertEqual(target_condition(parse_target("F00"), p("t-1")), RECIPROCAL)
        self.assertEqual(target_condition(parse_target("H11"), p("t-1")), RECIPROCAL)
        self.assertEqual(target_condition(parse_target("G11"), p("t-1")), DERIVATIVE_VANISHES_AT_ONE)
        self.assertIsNone(target_condition(parse_target("G10"), p("t-1")))
        self.assertIsNone(target_condition(parse_target("G00"), p("t-2+t^-1")))


class RealizeTestCase(SimpleTestCase):
    def assertRoundTrip(self, name, f):
        target = parse_target(name)
        D = realize(target, f)
        report = verify_realization(target, f, D)
        self.assertTrue(report.passed, f"{name}: {report.actual} on genus {report.genus}")
        return D

    def test_f00(self):
        D = self.assertRoundTrip("F00", p("t^2-2+t^-2"))
        self.assertEqual(format_gauss_code(D), format_gauss_code(
            realize(parse_target("F00"), p("t^2-2+t^-2"))
        ))
        self.assertEqual(D.n, 5)

    def test_g00(self):
        D = self.assertRoundTrip("G00", p("t-2+t^-1"))
        self.assertEqual(D.n, 4)

    def test_off_diagonal(self):
        for name in ("F01", "F10", "G01", "G10"):
            self.assertRoundTrip(name, p("t^2-1"))
            self.assertRoundTrip(name, p("-t^-1+1"))

    def test_flipped_diagonal(self):
        self.assertRoundTrip("F11", p("t-2+t^-1"))
        self.assertRoundTrip("G11", p("-t+2-t^-1"))

    def test_h_targets(self):
        for name in ("H00", "H11", "H01", "H10"):
            f = p("t-2+t^-1") if name[1] == name[2] else p("t-1")
            self.assertRoundTrip(name, f)

    def test_h_targets_with_large_terms(self):
        for name, text in (
            ("H00", "3t^4-6+3t^-4"),
            ("H01", "5t^6-5"),
            ("H01", "2t^3-3t+1"),
            ("H11", "5t^6-10+5t^-6"),
        ):
            D = self.assertRoundTrip(name, p(text))
            self.assertLess(D.n, 200, msg=name)

    def test_h_mixed_signs(self):
        self.assertRoundTrip("H01", p("t^2-t^-1"))
        self.assertRoundTrip("H10", p("2t^3-t^-2-1"))

    def test_h_mixed_signs_stay_polynomial(self):
        # one relocation pass of the negative part across the positive one
        f = p("5t^6-4t^-5-t^2")
        for name in ("H01", "H10"):
            dual, D, split = swap_source(parse_target(name), f)
            self.assertTrue(verify_realization(dual, f, D).passed, name)
            self.assertEqual(len({x.crossing for x in D.passages[:split]}), split)
            self.assertLess(realize(parse_target(name), f).n, 10000, msg=name)

    def test_h_diagonal_needs_no_relocation(self):
        # T1, five hairpins around six translates and at most one kink per crossing
        D = realize(parse_target("H00"), p("5t^6-10+5t^-6"))
        self.assertLessEqual(D.n, 2 * (1 + 13 + 4 * 14))

    def test_h_zero(self):
        for name in ("H00", "H01"):
            self.assertRoundTrip(name, ZERO)

    def test_zero(self):
        for name in ("F00", "G01", "G11"):
            self.assertRoundTrip(name, ZERO)

    def test_condition_violated(self):
        with self.assertRaises(ConditionViolated):
            realize(parse_target("F00"), p("t-1"))
        with self.assertRaises(ConditionViolated):
            realize(parse_target("G00"), p("t-1"))
        with self.assertRaises(ConditionViolated):
            realize(parse_target("F01"), p("t"))

    @given(st.sampled_from(["F00", "F11"]), reciprocal_polys())
    @settings(max_examples=20)
    def test_random_reciprocal(self, name, f):
        self.assertRoundTrip(name, f)

    @given(st.sampled_from(["G00", "G11"]), flat_polys())
    @settings(max_examples=20)
    def test_random_flat(self, name, f):
        self.assertRoundTrip(name, f)

    @given(st.sampled_from(["F01", "F10", "G01", "G10"]), vanishing_polys())
    @settings(max_examples=20)
    def test_random_off_diagonal(self, name, f):
        self.assertRoundTrip(name, f)

    @given(st.sampled_from(["H00", "H11"]), reciprocal_polys())
    @settings(max_examples=15)
    def test_random_h_diagonal(self, name, f):
        self.assertRoundTrip(name, f)

    @given(st.sampled_from(["H01", "H10"]), vanishing_polys(max_exponent=3, max_coeff=2))
    @settings(max_examples=15)
    def test_random_h_off_diagonal(self, name, f):
        self.assertRoundTrip(name, f)

    def test_json(self):
        target = parse_target("G00")
        D = realize(target, p("t-2+t^-1"))
        data = realization_to_json(D, verify_realization(target, p("t-2+t^-1"), D))
        self.assertTrue(data["verification"]["passed"])
        self.assertEqual(data["verification"]["actual"], "t-2+t^-1")
        self.assertEqual(data["diagram"]["crossings"], 4)

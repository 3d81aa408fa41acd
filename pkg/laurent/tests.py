# Polynomial arithmetic, the text syntax and the decompositions the synthesizers rely on.

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from laurent.models import LaurentPoly
from laurent.services import (MalformedPolynomial, NotDivisible,
                              divide_by_one_minus_inverse, format_poly,
                              is_reciprocal, parse_poly, poly_add,
                              poly_deriv_one, poly_eval_one, poly_invert_var,
                              poly_mul, reciprocal_decomposition,
                              writhe_decomposition)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=6).map(
    LaurentPoly
)


def P(text):
    return parse_poly(text)


class ArithmeticTestCase(SimpleTestCase):
    def test_add_merges_terms(self):
        self.assertEqual(poly_add(P("t-1"), P("t^-1-1")), P("t-2+t^-1"))

    def test_add_zero_is_identity(self):
        p = P("3*t^4-t+2")
        self.assertEqual(poly_add(p, LaurentPoly()), p)

    def test_add_cancels(self):
        self.assertTrue(poly_add(P("t-1"), P("1-t")).is_zero())

    def test_mul_expands(self):
        self.assertEqual(poly_mul(P("t-1"), P("t^-1-1")), P("2-t-t^-1"))

    def test_mul_by_one(self):
        p = P("-t^2+2-t^-2")
        self.assertEqual(poly_mul(p, LaurentPoly.constant(1)), p)

    def test_annulus_cross_term(self):
        # W_0(J_1) = t - 1, so W(t^-1) * W(t) is the H value of J_1
        w = P("t-1")
        self.assertEqual(poly_mul(poly_invert_var(w), w), P("-t+2-t^-1"))

    def test_invert_var(self):
        self.assertEqual(poly_invert_var(P("t-2+t^-1")), P("t-2+t^-1"))
        self.assertEqual(poly_invert_var(P("t^2-1")), P("t^-2-1"))
        self.assertEqual(poly_invert_var(P("-t^2+2-t^-2")), P("-t^2+2-t^-2"))

    def test_eval_and_derivative_at_one(self):
        self.assertEqual(poly_eval_one(P("t-2+t^-1")), 0)
        self.assertEqual(poly_deriv_one(P("t-2+t^-1")), 0)
        self.assertEqual(poly_eval_one(P("t^2-t")), 0)
        self.assertEqual(poly_deriv_one(P("t^2-t")), 1)
        self.assertEqual(poly_eval_one(P("t-1")), 0)

    def test_no_zero_coefficients_stored(self):
        p = LaurentPoly({3: 0, 1: 2, -1: 0})
        self.assertEqual(dict(p.terms), {1: 2})

    def test_from_exponents_aggregates(self):
        p = LaurentPoly.from_exponents([1, 1, 0, -2, -2], [1, 2, 5, 1, -1])
        self.assertEqual(p, P("3*t+5"))
        self.assertTrue(LaurentPoly.from_exponents([], []).is_zero())

    def test_from_exponents_big_weights(self):
        big = 2**62
        p = LaurentPoly.from_exponents([3, 3, 3, -1], [big, big, big, -(2**80)])
        self.assertEqual(dict(p.terms), {3: 3 * big, -1: -(2**80)})

    @given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-(2**90), 2**90)), max_size=8))
    @settings(max_examples=50)
    def test_from_exponents_matches_sum(self, pairs):
        expected = LaurentPoly.sum(LaurentPoly({e: w}) for e, w in pairs)
        self.assertEqual(LaurentPoly.from_exponents([e for e, _ in pairs], [w for _, w in pairs]), expected)

    @given(polys, polys, polys)
    @settings(max_examples=150)
    def test_ring_axioms(self, p, q, r):
        self.assertEqual((p + q) + r, p + (q + r))
        self.assertEqual((p * q) * r, p * (q * r))
        self.assertEqual(p * (q + r), p * q + p * r)
        self.assertEqual(p * q, q * p)

    @given(polys)
    def test_invert_var_is_involution(self, p):
        self.assertEqual(poly_invert_var(poly_invert_var(p)), p)
        self.assertEqual(poly_eval_one(poly_invert_var(p)), poly_eval_one(p))
        self.assertEqual(is_reciprocal(p), p == poly_invert_var(p))


class TextFormatTestCase(SimpleTestCase):
    def test_canonical_order(self):
        self.assertEqual(format_poly(P("-t^-2+2-t^2")), "-t^2+2-t^-2")
        self.assertEqual(format_poly(P("1-t")), "-t+1")
        self.assertEqual(format_poly(P("2*t^3 - 4t")), "2*t^3-4*t")
        self.assertEqual(format_poly(LaurentPoly()), "0")

    def test_parser_accepts_bare_forms(self):
        self.assertEqual(P("t"), LaurentPoly.monomial(1))
        self.assertEqual(P("t^-3"), LaurentPoly.monomial(-3))
        self.assertEqual(P("-7"), LaurentPoly.constant(-7))
        self.assertTrue(P("0").is_zero())

    def test_parser_rejects_garbage(self):
        for bad in ["", "t^", "x+1", "2**t", "t t", "--1", "*t"]:
            with self.assertRaises(MalformedPolynomial, msg=bad):
                parse_poly(bad)

    @given(polys)
    def test_format_parses_back(self, p):
        self.assertEqual(parse_poly(format_poly(p)), p)


class DecompositionTestCase(SimpleTestCase):
    def test_writhe_decomposition(self):
        self.assertEqual(writhe_decomposition(P("t^2-t")), {1: -1, 2: 1})
        self.assertEqual(writhe_decomposition(LaurentPoly()), {})
        with self.assertRaises(NotDivisible):
            writhe_decomposition(P("t-2"))

    def test_reciprocal_decomposition(self):
        f = P("3*t^2-t-4-t^-1+3*t^-2")
        self.assertEqual(reciprocal_decomposition(f), {1: -1, 2: 3})
        with self.assertRaises(NotDivisible):
            reciprocal_decomposition(P("t-1"))

    def test_divide_by_one_minus_inverse(self):
        f = P("t-2+t^-1")
        g = divide_by_one_minus_inverse(f)
        self.assertEqual(g, P("t-1"))
        self.assertEqual(poly_mul(P("1-t^-1"), g), f)

    @given(polys)
    def test_divide_recovers_multiple(self, p):
        f = poly_mul(P("1-t^-1"), p)
        self.assertEqual(divide_by_one_minus_inverse(f), p)

# The vknot management command, driven through call_command, and the fuzzer
# behind it.

import json
import random
import tempfile
from io import StringIO

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from cli.services import (FUZZ_TARGETS, MAX_EXPONENT, MAX_TERMS,
                          MAX_COEFFICIENT, SIMPLY_LINKED_MAX_CROSSINGS, _Run,
                          fuzz, random_admissible, read_inputs,
                          swap_mismatches)
from construct.constants import TARGET_NAMES
from construct.services import parse_target, target_condition
from diagram.services import parse_gauss_code
from surface.models import DEFAULT_RULES
from tangle.constants import RELOCATION_CROSSING_LIMIT
from tangle.services import swap_fh

J1 = "U2+ O1+ O2+ U1+"
T1 = "A: O1+; B: U1+"
T2 = "A: U2- O1-; B: O2- U1-"


def vknot(*args, **options):
    out = StringIO()
    call_command("vknot", *args, stdout=out, **options)
    return out.getvalue().strip()


def vknot_json(*args, **options):
    return json.loads(vknot(*args, json=True, **options))


class InvariantsCommandTestCase(SimpleTestCase):
    def test_json_bundle(self):
        data = vknot_json("invariants", J1)
        self.assertEqual(data["polynomials"]["W0"], "t-1")
        self.assertEqual(data["polynomials"]["H11"], "-t+2-t^-1")
        self.assertEqual(data["omega"], {"0": 1, "1": 1})

    def test_text_table(self):
        self.assertIn("H00  -t+2-t^-1", vknot("invariants", J1))

    def test_malformed_code(self):
        with self.assertRaises(CommandError) as ctx:
            vknot("invariants", "X1+ O1+")
        self.assertIn("MalformedToken", str(ctx.exception))
        self.assertEqual(ctx.exception.returncode, 1)

    def test_stdin_batch(self):
        data = vknot_json("invariants", stdin=StringIO(f"{J1}\n\nO1+ O2+ U1+ U2+\n"))
        self.assertEqual(len(data["results"]), 2)
        self.assertEqual(data["results"][1]["polynomials"]["F00"], "t-2+t^-1")

    def test_file_batch(self):
        with tempfile.NamedTemporaryFile("w", suffix=".txt") as handle:
            handle.write(f"{J1}\n")
            handle.flush()
            data = vknot_json("invariants", "--file", handle.name)
        self.assertEqual(data["results"][0]["polynomials"]["W1"], "t-1")

    def test_usage_error(self):
        with self.assertRaises(CommandError):
            vknot("bogus")


class SurfaceCommandTestCase(SimpleTestCase):
    def test_surface(self):
        data = vknot_json("surface", J1)
        self.assertEqual(data["genus"], 1)
        self.assertEqual(data["g2_upper"], 0)
        self.assertEqual(len(data["v"]), 2)

    def test_genus_and_classify(self):
        K2 = "U2+ O1+ O2+ U1+ U4+ O3+ O4+ U3+"
        data = vknot_json("genus", K2)
        self.assertEqual(data["sg1"], [1, 1])
        self.assertEqual(data["sg2"], [0, 0])
        self.assertEqual(vknot("classify", K2), "K2(0) \\ K1(0)")
        self.assertEqual(vknot("classify", ""), "K1(0)")

    def test_check(self):
        self.assertTrue(vknot("check", J1).startswith("passed"))
        data = vknot_json("check", J1, J1)
        self.assertTrue(data["passed"])


class TangleCommandTestCase(SimpleTestCase):
    def test_closures(self):
        self.assertEqual(vknot("tangle", "close-r", T2), "U2- O1- O2- U1-")
        self.assertEqual(vknot("tangle", "close-l", T2), "O2- U1- U2- O1-")

    def test_sum(self):
        self.assertEqual(vknot("tangle", "sum", T1, J1), "O1+ U3+ O2+ O3+ U2+ U1+")

    def test_invariants(self):
        data = vknot_json("tangle", "invariants", T2)
        self.assertEqual(data["linking"], {"0": -1, "1": -1})
        self.assertIn("lambda0 -1", vknot("tangle", "invariants", T2))

    def test_simply_linked_and_swap(self):
        data = vknot_json("tangle", "simply-linked", J1)
        self.assertTrue(data["simply_linked"])
        swapped = vknot_json("tangle", "swap", J1)
        polys = vknot_json("invariants", swapped["code"])["polynomials"]
        self.assertEqual(polys["F01"], "-t+2-t^-1")
        self.assertEqual(polys["H01"], "0")

    def test_malformed_tangle(self):
        with self.assertRaises(CommandError) as ctx:
            vknot("tangle", "close-r", "A: O1+")
        self.assertIn("MalformedTangle", str(ctx.exception))


class ConstructCommandTestCase(SimpleTestCase):
    def test_family(self):
        self.assertEqual(vknot("family", "J", "1"), J1)
        data = vknot_json("family", "K", "3")
        self.assertEqual(data["invariants"]["polynomials"]["W0"], "3*t-3")
        self.assertEqual(data["diagram"]["crossings"], 6)

    def test_bad_family_index(self):
        with self.assertRaises(CommandError) as ctx:
            vknot("family", "K", "0")
        self.assertIn("BadParameter", str(ctx.exception))

    def test_realize(self):
        self.assertTrue(vknot("realize", "F00", "t^2-2+t^-2").endswith("F00 ok"))
        data = vknot_json("realize", "G00", "t-2+t^-1")
        self.assertTrue(data["verification"]["passed"])

    def test_realize_condition_violated(self):
        with self.assertRaises(CommandError) as ctx:
            vknot("realize", "F00", "t-1")
        self.assertIn("ConditionViolated", str(ctx.exception))
        self.assertEqual(ctx.exception.returncode, 1)


class FuzzTestCase(SimpleTestCase):
    def test_small_run_passes(self):
        report = fuzz(iterations=6, max_crossings=5, seed=7, max_moves=6, pairs=3)
        self.assertTrue(report.passed, report.counterexample)
        self.assertEqual(report.iterations, 6)
        self.assertGreater(report.checks, 6)

    def test_deterministic(self):
        first = vknot("fuzz", "--iters", "3", "--max-crossings", "4", "--seed", "11")
        second = vknot("fuzz", "--iters", "3", "--max-crossings", "4", "--seed", "11")
        self.assertEqual(first, second)
        self.assertTrue(first.startswith("all passed"))

    def test_mutant_is_caught(self):
        rules = DEFAULT_RULES.with_flipped_transversal()
        report = fuzz(iterations=40, max_crossings=6, seed=5, max_moves=4, pairs=0, rules=rules)
        self.assertFalse(report.passed)
        self.assertTrue(report.mutant)

    def test_mutant_json(self):
        data = vknot_json("fuzz", "--iters", "40", "--max-crossings", "6", "--mutant")
        self.assertFalse(data["passed"])
        self.assertIsNotNone(data["counterexample"]["details"])

    def test_random_admissible(self):
        rng = random.Random(1)
        for name in TARGET_NAMES:
            target = parse_target(name)
            for _ in range(100):
                f = random_admissible(rng, target)
                self.assertIsNone(target_condition(target, f), f"{name}: {f}")
                if not target.diagonal:
                    self.assertTrue(all(abs(e) <= MAX_EXPONENT for e in f.terms), f)
                    self.assertLessEqual(max(map(abs, f.terms.values()), default=0), MAX_TERMS * MAX_COEFFICIENT)

    def test_draws_reach_the_edges(self):
        rng = random.Random(2)
        target = parse_target("F01")
        draws = [random_admissible(rng, target) for _ in range(300)]
        self.assertIn(MAX_EXPONENT, {abs(e) for f in draws for e in f.terms})
        self.assertTrue(any(len([e for e in f.terms if e]) == MAX_TERMS for f in draws))

    def test_every_target_realizes(self):
        run = _Run(3, DEFAULT_RULES)
        for i in range(10 * len(FUZZ_TARGETS)):
            self.assertTrue(run.realization(i, RELOCATION_CROSSING_LIMIT), run.counterexample)

    def test_wide_simply_linked_inputs(self):
        self.assertEqual(SIMPLY_LINKED_MAX_CROSSINGS, 8)
        run = _Run(9, DEFAULT_RULES)
        for i in range(15):
            self.assertTrue(run.swap(i, RELOCATION_CROSSING_LIMIT), run.counterexample)

    def test_swap_mismatches(self):
        D = parse_gauss_code(J1)
        self.assertEqual(swap_mismatches(D, swap_fh(D)), [])
        self.assertEqual(len(swap_mismatches(D, D)), 8)

    def test_read_inputs(self):
        self.assertEqual(read_inputs("O1+ U1+", None, StringIO("ignored")), ["O1+ U1+"])
        self.assertEqual(read_inputs(None, None, StringIO("a\n \nb\n")), ["a", "b"])


class SettingsTestCase(SimpleTestCase):
    def test_no_storage_or_auth(self):
        self.assertNotIn("django.contrib.auth", settings.INSTALLED_APPS)
        self.assertEqual(settings.DATABASES, {})
        call_command("check", stdout=StringIO())
        self.assertIn("H00", vknot("invariants", J1))

import argparse
import logging
import sys

from django.conf import settings
from django.core.management.base import BaseCommand
from rest_framework.renderers import JSONRenderer

from cli.serializers import fuzz_report_to_json
from cli.services import (format_fuzz_report, fuzz, read_diagram,
                          read_inputs, read_tangle)
from construct.constants import FAMILY_NAMES, TARGET_NAMES
from construct.serializers import bounds_to_json, realization_to_json
from construct.services import (classify_filtration, family, genus_bounds,
                                parse_target, realize, verify_realization)
from diagram.serializers import diagram_to_json
from diagram.services import format_gauss_code
from exceptions import root_exception_handler
from invariants.serializers import bundle_to_json, report_to_json
from invariants.services import (check_identities, format_bundle_table,
                                 intersection_polys)
from laurent.services import parse_poly
from surface.models import DEFAULT_RULES
from surface.serializers import surface_report
from tangle.serializers import tangle_invariants_to_json, tangle_to_json
from tangle.services import (format_tangle, left_close, right_close,
                             simply_linked_from, swap_fh, tangle_invariants,
                             tangle_sum)

logger = logging.getLogger(__name__)

TANGLE_ACTIONS = ("close-r", "close-l", "sum", "invariants", "simply-linked", "swap")


class Command(BaseCommand):
    help = "Invariants, surfaces, tangles and realizations of long virtual knots."

    stealth_options = ("stdin",)

    def add_arguments(self, parser):
        parser.add_argument("--json", action="store_true", help="Print one JSON object.")
        sub = parser.add_subparsers(dest="subcommand", required=True)

        def with_input(name, help_text):
            p = sub.add_parser(name, help=help_text)
            p.add_argument("code", nargs="?", help="Gauss code; stdin when omitted.")
            p.add_argument("--file", help="Read one code per line from this file.")
            return p

        with_input("invariants", "Writhe and intersection polynomials.")
        with_input("surface", "Carter surface genus, indices and pairings.")
        with_input("genus", "Bounds on the supporting genera.")
        with_input("classify", "Place the knot in the supporting-genus filtration.")
        check = with_input("check", "Run the identity suite.")
        check.add_argument("other", nargs="?", help="Second code for the product identities.")

        fuzz_parser = sub.add_parser("fuzz", help="Random identity and invariance checks.")
        fuzz_parser.add_argument("--seed", type=int)
        fuzz_parser.add_argument("--iters", type=int)
        fuzz_parser.add_argument("--max-crossings", type=int)
        fuzz_parser.add_argument("--mutant", action="store_true", help="Flip the transversal rule.")

        tangle = sub.add_parser("tangle", help="Tangle closures, sums and invariants.")
        tangle.add_argument("action", choices=TANGLE_ACTIONS)
        tangle.add_argument("value", help='A tangle "A: ...; B: ..." or, for simply-linked and swap, a Gauss code.')
        tangle.add_argument("code", nargs="?", help="Long knot inserted by sum.")

        fam = sub.add_parser("family", help="A member of an example family.")
        fam.add_argument("name", choices=FAMILY_NAMES)
        fam.add_argument("n", type=int)

        real = sub.add_parser("realize", help="A diagram with a prescribed polynomial.")
        real.add_argument("target", choices=TARGET_NAMES)
        real.add_argument("poly")

        # --json is accepted after the subcommand as well
        for p in sub.choices.values():
            p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    def handle(self, *args, **options):
        name = options["subcommand"]
        self.as_json = options["json"]
        try:
            getattr(self, f"run_{name}")(options)
        except Exception as exc:
            raise root_exception_handler(exc, f"vknot {name}")

    # -- output ------------------------------------------------------------

    def emit(self, data, text: str):
        if self.as_json:
            self.stdout.write(JSONRenderer().render(data).decode())
        else:
            self.stdout.write(text)

    def batch(self, options, compute):
        """compute(diagram) -> (json, text) over every input."""
        values = read_inputs(options["code"], options["file"], options.get("stdin") or sys.stdin)
        results = [compute(read_diagram(value)) for value in values]
        if len(results) == 1 and options["code"] is not None:
            self.emit(*results[0])
        else:
            self.emit({"results": [data for data, _ in results]}, "\n\n".join(text for _, text in results))

    # -- subcommands -------------------------------------------------------

    def run_invariants(self, options):
        def compute(D):
            B = intersection_polys(D)
            return bundle_to_json(B), format_bundle_table(B)

        self.batch(options, compute)

    def run_surface(self, options):
        def compute(D):
            data = surface_report(D)
            text = f"genus {data['genus']}\ng2_upper {data['g2_upper']}\nv {data['v']}\nM {data['M']}"
            return data, text

        self.batch(options, compute)

    def run_genus(self, options):
        def compute(D):
            bounds = genus_bounds(D)
            lines = [f"sg1 {list(bounds.sg1)}", f"sg2 {list(bounds.sg2)}"]
            return bounds_to_json(bounds), "\n".join(lines + list(bounds.reasons))

        self.batch(options, compute)

    def run_classify(self, options):
        def compute(D):
            bounds = genus_bounds(D)
            stratum = classify_filtration(D, bounds)
            return bounds_to_json(bounds, stratum), stratum

        self.batch(options, compute)

    def run_check(self, options):
        other = read_diagram(options["other"]) if options["other"] else None

        def compute(D):
            report = check_identities(D, other)
            lines = [f"{'passed' if report.passed else 'FAILED'} {len(report.checks)} checks"]
            lines += [f"  {c.label}: {c.left} != {c.right}" for c in report.failures]
            return report_to_json(report), "\n".join(lines)

        self.batch(options, compute)

    def run_fuzz(self, options):
        seed = options["seed"] if options["seed"] is not None else settings.VKNOT_FUZZ_SEED
        rules = DEFAULT_RULES.with_flipped_transversal() if options["mutant"] else DEFAULT_RULES
        report = fuzz(
            iterations=options["iters"] or settings.VKNOT_FUZZ_ITERATIONS,
            max_crossings=options["max_crossings"] or settings.VKNOT_FUZZ_MAX_CROSSINGS,
            seed=seed,
            max_moves=settings.VKNOT_FUZZ_MAX_MOVES,
            pairs=settings.VKNOT_FUZZ_PAIRS,
            rules=rules,
            crossing_limit=settings.VKNOT_RELOCATION_CROSSING_LIMIT,
        )
        self.emit(fuzz_report_to_json(report), format_fuzz_report(report))

    def run_tangle(self, options):
        action, limit = options["action"], settings.VKNOT_RELOCATION_CROSSING_LIMIT
        if action == "simply-linked":
            T = simply_linked_from(read_diagram(options["value"]), limit)
            return self.emit(tangle_to_json(T), format_tangle(T))
        if action == "swap":
            D = swap_fh(read_diagram(options["value"]), limit)
            return self.emit(diagram_to_json(D), format_gauss_code(D))

        E = read_tangle(options["value"])
        if action == "invariants":
            data = tangle_invariants_to_json(tangle_invariants(E))
            lines = [f"{key:<4} {poly}" for key, poly in data["polynomials"].items()]
            lines += [f"lambda{a} {lam}" for a, lam in data["linking"].items()]
            return self.emit(data, "\n".join(lines))
        if action == "close-r":
            D = right_close(E)
        elif action == "close-l":
            D = left_close(E)
        else:
            D = tangle_sum(E, read_diagram(options["code"] or ""))
        self.emit(diagram_to_json(D), format_gauss_code(D))

    def run_family(self, options):
        D = family(options["name"], options["n"])
        data = {"diagram": diagram_to_json(D), "invariants": bundle_to_json(intersection_polys(D))}
        self.emit(data, format_gauss_code(D))

    def run_realize(self, options):
        target, f = parse_target(options["target"]), parse_poly(options["poly"])
        D = realize(target, f, settings.VKNOT_RELOCATION_CROSSING_LIMIT)
        report = verify_realization(target, f, D)
        verdict = "ok" if report.passed else f"FAILED: {report.actual} on genus {report.genus}"
        self.emit(realization_to_json(D, report), f"{format_gauss_code(D)}\n{target.name} {verdict}")

"""
Input handling and the identity fuzzer behind the vknot command.

fuzz walks a single random.Random(seed) stream: for every iteration it draws
a diagram, checks the unary identities and the closed-form pairings against
the push-off oracle, then replays a random Reidemeister sequence. The first
`pairs` iterations also draw a partner for the product and tangle sum
identities, a small diagram for the simply-linked construction and its
closure swap, and a random admissible polynomial for a realization round trip,
cycling through the twelve targets. The run stops at the
first counterexample, so the report only depends on the seed and the limits.
"""

import logging
import random
from pathlib import Path

from cli.models import Counterexample, FuzzReport
from construct.constants import TARGET_NAMES
from construct.models import Target
from construct.services import (parse_target, realize, swap_source,
                                verify_realization)
from diagram.models import LongDiagram
from diagram.moves import random_diagram, random_rmove_sequence
from diagram.services import format_gauss_code, parse_gauss_code
from invariants.constants import TYPE_PAIRS
from invariants.services import (check_identities, intersection_polys,
                                 invariance_violations)
from laurent.models import LaurentPoly
from surface.models import DEFAULT_RULES, LocalRules
from surface.services import pairing_mismatches
from tangle.constants import RELOCATION_CROSSING_LIMIT
from tangle.services import (RelocationTooLarge, check_tangle_identities,
                             left_close, parse_tangle, simply_linked_from,
                             split_tangle)

logger = logging.getLogger(__name__)

# the simply-linked construction can grow exponentially in its input
SIMPLY_LINKED_MAX_CROSSINGS = 8
# outputs past this size skip the closure swap check
SWAP_CHECK_MAX_CROSSINGS = 400
# realizations past this size are checked before the swap
REALIZE_CHECK_MAX_CROSSINGS = 400
FUZZ_TARGETS = TARGET_NAMES
MAX_EXPONENT = 6
MAX_COEFFICIENT = 5
MAX_TERMS = 3


def read_inputs(value: str | None, path: str | None, stream) -> list[str]:
    """
    The positional value if given, else the non-blank lines of --file, else the
    non-blank lines of stdin.
    """
    if value is not None:
        return [value]
    text = Path(path).read_text() if path else stream.read()
    return [line.strip() for line in text.splitlines() if line.strip()]


def read_tangle(text: str):
    # one-line form "A: ... ; B: ..." next to the two-line one
    return parse_tangle(text.replace(";", "\n"))


def read_diagram(text: str) -> LongDiagram:
    return parse_gauss_code(text)


def _random_term(rng: random.Random) -> LaurentPoly:
    k = rng.choice([e for e in range(-MAX_EXPONENT, MAX_EXPONENT + 1) if e])
    c = rng.choice([c for c in range(-MAX_COEFFICIENT, MAX_COEFFICIENT + 1) if c])
    return c * (LaurentPoly.monomial(k) - 1)


def random_admissible(rng: random.Random, target: Target) -> LaurentPoly:
    g = LaurentPoly.sum(_random_term(rng) for _ in range(rng.randint(0, MAX_TERMS)))
    if not target.diagonal:
        return g
    if target.family == "G":
        return (1 - LaurentPoly.monomial(-1)) * g
    return g + g.invert_var()


class _Run:
    def __init__(self, seed: int, rules: LocalRules):
        self.rng = random.Random(seed)
        self.rules = rules
        self.checks = 0
        self.counterexample = None

    def report(self, iteration, check, D, failures, other=None) -> bool:
        self.checks += 1
        if not failures:
            return True
        self.counterexample = Counterexample(
            iteration=iteration,
            check=check,
            diagram=format_gauss_code(D),
            other=other,
            details=tuple(failures),
        )
        logger.warning(f"fuzz iteration {iteration}: {check} failed on {self.counterexample.diagram}")
        return False

    def identities(self, i, D, E=None) -> bool:
        report = check_identities(D, E, rules=self.rules)
        self.checks += len(report.checks) - 1
        other = format_gauss_code(E) if E is not None else None
        return self.report(i, "identities", D, [c.label for c in report.failures], other)

    def diagram(self, i, max_crossings, max_moves) -> bool:
        D = random_diagram(self.rng, max_crossings)
        if not self.identities(i, D):
            return False
        if not self.report(i, "pairings", D, pairing_mismatches(D, self.rules)):
            return False
        sequence = list(random_rmove_sequence(D, self.rng, self.rng.randint(1, max_moves)))
        return self.report(i, "rmove-invariance", D, invariance_violations(D, sequence, self.rules))

    def pair(self, i, max_crossings, crossing_limit) -> bool:
        D = random_diagram(self.rng, max_crossings)
        E = random_diagram(self.rng, max_crossings)
        if not self.identities(i, D, E):
            return False

        T = split_tangle(D, self.rng.randint(0, len(D.passages)))
        report = check_tangle_identities(T, E, self.rules)
        self.checks += len(report.checks) - 1
        if not self.report(i, "tangle", D, [c.label for c in report.failures], format_gauss_code(E)):
            return False
        return self.swap(i, crossing_limit) and self.realization(i, crossing_limit)

    def swap(self, i, crossing_limit) -> bool:
        S = random_diagram(self.rng, SIMPLY_LINKED_MAX_CROSSINGS)
        try:
            T = simply_linked_from(S, crossing_limit)
        except RelocationTooLarge as e:
            logger.debug(f"fuzz iteration {i}: simply-linked check skipped, {e}")
            return True
        if T.n > SWAP_CHECK_MAX_CROSSINGS:
            logger.debug(f"fuzz iteration {i}: swap check skipped on {T.n} crossings")
            return True
        report = check_tangle_identities(T, rules=self.rules)
        self.checks += len(report.checks) - 1
        if not self.report(i, "simply-linked", S, [c.label for c in report.failures]):
            return False
        return self.report(i, "swap", S, swap_mismatches(S, left_close(T), self.rules))

    def realization(self, i, crossing_limit) -> bool:
        # every target in turn
        target = parse_target(FUZZ_TARGETS[i % len(FUZZ_TARGETS)])
        f = random_admissible(self.rng, target)
        R = realize(target, f, crossing_limit)
        if R.n <= REALIZE_CHECK_MAX_CROSSINGS or target.family != "H":
            verdict = verify_realization(target, f, R)
            failures = [] if verdict.passed else [f"{target.name}: {verdict.actual} != {f} on genus {verdict.genus}"]
            return self.report(i, "realize", R, failures)
        # too large for the pairing matrices: check the diagram the swap starts from
        dual, D, _ = swap_source(target, f)
        verdict = verify_realization(dual, f, D)
        failures = [] if verdict.passed else [f"{dual.name}: {verdict.actual} != {f} on genus {verdict.genus}"]
        return self.report(i, "realize", D, failures)


def swap_mismatches(K: LongDiagram, swapped: LongDiagram, rules: LocalRules = DEFAULT_RULES) -> list[str]:
    """Labels X_ab where X_ab(swapped) differs from the dual polynomial of K."""
    B, S = intersection_polys(K, rules), intersection_polys(swapped, rules)
    failures = []
    for a, b in TYPE_PAIRS:
        if S.F[a, b] != B.H[1 - a, 1 - b]:
            failures.append(f"F{a}{b}: {S.F[a, b]} != H{1 - a}{1 - b} {B.H[1 - a, 1 - b]}")
        if S.H[a, b] != B.F[1 - a, 1 - b]:
            failures.append(f"H{a}{b}: {S.H[a, b]} != F{1 - a}{1 - b} {B.F[1 - a, 1 - b]}")
    return failures


def fuzz(
    iterations: int,
    max_crossings: int,
    seed: int,
    max_moves: int = 20,
    pairs: int = 200,
    rules: LocalRules = DEFAULT_RULES,
    crossing_limit: int = RELOCATION_CROSSING_LIMIT,
) -> FuzzReport:
    run = _Run(seed, rules)
    done = 0
    for i in range(iterations):
        done = i + 1
        if not run.diagram(i, max_crossings, max_moves):
            break
        if i < pairs and not run.pair(i, max_crossings, crossing_limit):
            break
        logger.debug(f"fuzz iteration {i}: {run.checks} checks so far")

    report = FuzzReport(
        seed=seed,
        iterations=done,
        checks=run.checks,
        mutant=rules != DEFAULT_RULES,
        counterexample=run.counterexample,
    )
    logger.info(f"fuzz seed {seed}: {done} iterations, {run.checks} checks, passed={report.passed}")
    return report


def format_fuzz_report(report: FuzzReport) -> str:
    if report.passed:
        return f"all passed ({report.iterations} iterations, {report.checks} checks, seed {report.seed})"
    c = report.counterexample
    lines = [
        f"counterexample at iteration {c.iteration} (seed {report.seed}): {c.check}",
        f"diagram: {c.diagram}",
    ]
    if c.other is not None:
        lines.append(f"other: {c.other}")
    lines += [f"  {detail}" for detail in c.details]
    return "\n".join(lines)

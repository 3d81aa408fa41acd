"""
Example families, the four small tangles used as building blocks, the
synthesizers that realize a prescribed writhe or intersection polynomial,
and the supporting-genus bounds with the filtration they place a knot in.
"""

import logging

from construct.constants import (DERIVATIVE_VANISHES_AT_ONE, FAMILY_J,
                                 FAMILY_K, FAMILY_KP, FAMILY_NAMES,
                                 GENUS_SANDWICH, KPP_HEAD, NONZERO_POLYNOMIAL,
                                 RECIPROCAL, TANGLE_CODES, TARGET_NAMES,
                                 VANISHES_AT_ONE)
from construct.models import GenusBounds, RealizationReport, Target
from diagram.constants import OVER, UNDER
from diagram.models import LongDiagram
from diagram.services import (build_diagram, concatenate_all,
                              parse_gauss_code, sym_flip, sym_reflect)
from exceptions import VknotError
from invariants.services import (annulus_checks, intersection_polys,
                                 torus_checks)
from laurent.models import LaurentPoly
from laurent.services import (divide_by_one_minus_inverse,
                              reciprocal_decomposition, writhe_decomposition)
from surface.services import build_carter, genus, two_boundary_genus
from tangle.constants import RELOCATION_CROSSING_LIMIT
from tangle.models import TangleDiagram
from tangle.services import (left_close, parse_tangle, simply_linked_from,
                             tangle_sum)

logger = logging.getLogger(__name__)


class ConstructError(VknotError):
    """Base class for construction errors."""

    pass


class BadParameter(ConstructError):
    pass


class ConditionViolated(ConstructError):
    pass


# -- families ----------------------------------------------------------------


def _spiral(n: int) -> LongDiagram:
    """
    J_n: a strand that winds n times around a vertical segment before leaving
    across the winds. Y_0 is the only over-first crossing and has index n.
    """
    Y = lambda k: k + 1  # noqa: E731
    X = lambda k: n + k  # noqa: E731

    tokens = [(UNDER, X(k), 1) for k in range(n, 0, -1)]
    tokens.append((OVER, Y(0), 1))
    for k in range(1, n):
        tokens.append((OVER, X(k), None))
        tokens.append((UNDER, Y(k), -1))
    tokens.append((OVER, X(n), None))
    tokens += [(OVER, Y(k), None) for k in range(n - 1, 0, -1)]
    tokens.append((UNDER, Y(0), None))
    return build_diagram(tokens, LongDiagram)


def family(name: str, n: int) -> LongDiagram:
    if name not in FAMILY_NAMES:
        raise BadParameter(f"unknown family {name!r}, expected one of {', '.join(FAMILY_NAMES)}")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise BadParameter(f"family index must be a positive integer, got {n!r}")

    if name == FAMILY_J:
        return _spiral(n)
    if name == FAMILY_K:
        return concatenate_all([_spiral(1)] * n)
    if name == FAMILY_KP:
        return tangle_sum(tangle_T(1), family(FAMILY_K, n))
    return concatenate_all([parse_gauss_code(KPP_HEAD)] + [_spiral(2)] * (n - 1))


def tangle_T(k: int) -> TangleDiagram:
    if k not in TANGLE_CODES:
        raise BadParameter(f"no tangle T{k}; choose 1..{len(TANGLE_CODES)}")
    return parse_tangle(TANGLE_CODES[k])


# -- realization -------------------------------------------------------------


def _writhe_piece(k: int, c: int) -> LongDiagram:
    """A diagram with W0 = W1 = sgn(c) (t^k - 1)."""
    J = _spiral(abs(k))
    if k > 0:
        return J if c > 0 else sym_flip(J)
    return sym_flip(sym_reflect(J)) if c > 0 else sym_reflect(J)


def realize_writhe(f: LaurentPoly) -> LongDiagram:
    """
    A diagram D with W0(D) = W1(D) = f whose open ribbon has genus 0 with the
    two ends on different boundary circles.
    """
    if f.eval_one() != 0:
        raise ConditionViolated(f"{VANISHES_AT_ONE} fails for {f}")
    pieces = []
    for k, c in writhe_decomposition(f).items():
        pieces += [_writhe_piece(k, c)] * abs(c)
    return concatenate_all(pieces)


def parse_target(text: str) -> Target:
    name = (text or "").strip()
    if name not in TARGET_NAMES:
        raise BadParameter(f"unknown target {text!r}, expected one of {', '.join(TARGET_NAMES)}")
    return Target(family=name[0], a=int(name[1]), b=int(name[2]))


def target_condition(target: Target, f: LaurentPoly) -> str | None:
    """The first predicate f fails for target, or None when f is realizable."""
    if f.eval_one() != 0:
        return VANISHES_AT_ONE
    if not target.diagonal:
        return None
    if target.family in ("F", "H") and not f.is_reciprocal():
        return RECIPROCAL
    if target.family == "G" and f.deriv_one() != 0:
        return DERIVATIVE_VANISHES_AT_ONE
    return None


def _realize_type0(target: Target, f: LaurentPoly) -> LongDiagram:
    # F/G targets with a = 0; the others come from these by the flip
    if target.name == "F00":
        g = LaurentPoly(reciprocal_decomposition(f))
        g = g - g.eval_one()
        return tangle_sum(tangle_T(1), realize_writhe(g))
    if target.name == "G00":
        return tangle_sum(tangle_T(2), realize_writhe(divide_by_one_minus_inverse(f)))
    if target.name == "F01":
        return tangle_sum(tangle_T(3), realize_writhe(f))
    return tangle_sum(tangle_T(4), realize_writhe(f))


def _hairpins(coeffs: dict[int, int]) -> LongDiagram:
    """
    A diagram with W0 = W1 = sum c_k (t^k - 1), the exponents k all of one
    sign, drawn on an annulus. A radial segment leaves the inner circle, then
    the strand runs max |c_k| hairpins around the annulus, each crossing the
    segment's translates and coming back, and leaves through the outer circle.
    Every crossing is between the segment and a hairpin, so the word starts
    with one passage of each crossing and the rest of it has no self crossing.
    """
    if not coeffs:
        return LongDiagram()
    # the crossing with the j-th translate has index -sigma * j
    sigma = -1 if next(iter(coeffs)) > 0 else 1
    # (translate, lane, segment over, sign) in the order the hairpins meet them
    crossings = []
    for m in range(max(abs(c) for c in coeffs.values())):
        d = {abs(k): sigma * (1 if c > 0 else -1) for k, c in coeffs.items() if abs(c) > m}
        depth = max(d)
        for j in range(1 if m == 0 else 0, depth + 1):
            over = d.get(j, 0) >= 0
            crossings.append((j, 2 * m, over, sigma if over else -sigma))
        for j in range(depth, -1, -1):
            over = d.get(j, 0) <= 0
            crossings.append((j, 2 * m + 1, over, -sigma if over else sigma))

    label = {(j, lane): i + 1 for i, (j, lane, _, _) in enumerate(crossings)}
    segment = sorted(crossings, key=lambda x: (x[0], x[1]), reverse=True)
    tokens = [(OVER if over else UNDER, label[j, lane], sign) for j, lane, over, sign in segment]
    tokens += [(UNDER if over else OVER, label[j, lane], None) for j, lane, over, _ in crossings]
    return build_diagram(tokens, LongDiagram)


def swap_source(target: Target, f: LaurentPoly) -> tuple[Target, LongDiagram, int]:
    """
    (dual, D, split) for an H target: F_dual(D) = f on genus at most one, and
    the first `split` passages of D meet every crossing at most once.
    H_ab(L(T)) = F_{1-a,1-b}(R(T)) for a simply linked T with zero linking
    numbers, and R(T) = D. D is T1 or T3 summed with hairpin diagrams whose
    first halves join strand A, so only the second of two parts is relocated.
    """
    dual = Target("F", 1 - target.a, 1 - target.b)
    base = dual if dual.a == 0 else dual.swapped()
    if base.diagonal:
        T = tangle_T(1)
        parts = [_hairpins(reciprocal_decomposition(f))]
    else:
        T = tangle_T(3)
        c = writhe_decomposition(f)
        parts = [_hairpins({k: v for k, v in c.items() if k > 0}),
                 _hairpins({k: v for k, v in c.items() if k < 0})]
        parts.sort(key=lambda K: K.n, reverse=True)

    D = tangle_sum(T, concatenate_all(parts))
    if dual.a == 1:
        D = sym_flip(D)
    return dual, D, len(T.strand_a) + parts[0].n


def _realize_h(target: Target, f: LaurentPoly, crossing_limit: int) -> LongDiagram:
    _, D, split = swap_source(target, f)
    return left_close(simply_linked_from(D, crossing_limit, split=split))


def realize(
    target: Target, f: LaurentPoly, crossing_limit: int = RELOCATION_CROSSING_LIMIT
) -> LongDiagram:
    """
    A long diagram whose `target` polynomial is f, on a surface of genus at
    most one. H targets close a simply linked tangle; its size is linear in
    the hairpins of f when all exponents share a sign, quadratic otherwise.
    """
    failed = target_condition(target, f)
    if failed:
        raise ConditionViolated(f"{target.name} needs {failed}, which fails for {f}")

    if target.family == "H":
        D = _realize_h(target, f, crossing_limit)
    elif target.a == 0:
        D = _realize_type0(target, f)
    else:
        # F_ab(D#) = F_{1-a,1-b}(D), likewise for G
        D = sym_flip(_realize_type0(target.swapped(), f))
    logger.debug(f"realized {target.name} = {f} with {D.n} crossings")
    return D


def verify_realization(target: Target, f: LaurentPoly, D: LongDiagram) -> RealizationReport:
    actual = intersection_polys(D)[target.name]
    report = RealizationReport(
        target=target.name,
        expected=f,
        actual=actual,
        genus=genus(build_carter(D)),
        crossings=D.n,
    )
    if not report.passed:
        logger.warning(f"{target.name}: expected {f}, got {actual} on genus {report.genus}")
    return report


# -- supporting genus --------------------------------------------------------


def genus_bounds(D: LongDiagram) -> GenusBounds:
    B = intersection_polys(D)
    reasons = []

    sg1_lower = 0
    nonzero = [name for name, poly in B.items() if poly]
    if nonzero:
        sg1_lower = 1
        reasons.append(f"sg1 >= 1: {NONZERO_POLYNOMIAL} {nonzero[0]}")
    broken = [check for check in torus_checks(B) if not check.passed]
    if broken:
        sg1_lower = 2
        reasons.append(f"sg1 >= 2: {broken[0].label} not reciprocal")

    sg2_lower = 0
    broken = [check for check in annulus_checks(B) if not check.passed]
    if broken:
        sg2_lower = 1
        reasons.append(f"sg2 >= 1: {broken[0].label} fails")

    sg1_upper = genus(build_carter(D))
    sg2_upper = two_boundary_genus(D)

    # sg2 <= sg1 <= sg2 + 1
    if sg2_lower > sg1_lower:
        sg1_lower = sg2_lower
        reasons.append(f"sg1 >= {sg1_lower}: {GENUS_SANDWICH}")
    if sg1_lower - 1 > sg2_lower:
        sg2_lower = sg1_lower - 1
        reasons.append(f"sg2 >= {sg2_lower}: {GENUS_SANDWICH}")
    sg1_upper = min(sg1_upper, sg2_upper + 1)
    sg2_upper = min(sg2_upper, sg1_upper)

    return GenusBounds(
        sg1_lower=sg1_lower,
        sg1_upper=sg1_upper,
        sg2_lower=sg2_lower,
        sg2_upper=sg2_upper,
        reasons=tuple(reasons),
    )


def _stratum(level: int) -> str:
    # K1(0) < K2(0) < K1(1) < K2(1) < ...
    return f"K{1 + level % 2}({level // 2})"


def _level(sg1: int, sg2: int) -> int:
    return min(2 * sg1, 2 * sg2 + 1)


def classify_filtration(D: LongDiagram, bounds: GenusBounds | None = None) -> str:
    """
    The smallest set of the supporting-genus filtration the bounds certify,
    minus the one below it; an interval when the bounds leave a gap.
    """
    bounds = bounds or genus_bounds(D)
    lo = _level(bounds.sg1_lower, bounds.sg2_lower)
    hi = _level(bounds.sg1_upper, bounds.sg2_upper)
    if lo != hi:
        return f"undetermined [{_stratum(lo)}, {_stratum(hi)}]"
    if lo == 0:
        return _stratum(0)
    return f"{_stratum(lo)} \\ {_stratum(lo - 1)}"

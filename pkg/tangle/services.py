"""
Virtual 2-string tangles: the two-line text format, the six-way crossing
classification, both closures, the sum with a long knot and the tangle
writhe polynomials U, V and linking numbers.

simply_linked_from turns a long diagram into a simply linked tangle whose
right closure presents the same long knot. The split point q sits right
after the first passage; every crossing between two paths of B is then
dragged behind q by a finger move along the path from q to it.
"""

import logging
import re

from diagram.constants import OVER, SIGN_SYMBOLS, UNDER
from diagram.models import LongDiagram, Passage
from diagram.services import (UnknownCrossing, parse_gauss_code, relabel,
                              untwist, validate_passages)
from exceptions import VknotError
from invariants.constants import TYPE_PAIRS
from invariants.models import IdentityCheck, IdentityReport, InvariantBundle
from invariants.services import intersection_polys
from laurent.models import ZERO, LaurentPoly
from surface.models import DEFAULT_RULES, HomologyData, LocalRules
from surface.services import homology_data
from tangle.constants import (CROSSING_KINDS, LEFT_CLOSURE_SWAP, MIXED_KINDS,
                              RELOCATION_CROSSING_LIMIT, SELF_KINDS, STRAND_A,
                              STRAND_B, STRANDS, TANGLE_SUM_F, TANGLE_SUM_G,
                              TANGLE_SUM_H, TANGLE_SUM_W, TANGLE_WRITHE_SPLIT)
from tangle.models import TangleDiagram, TangleInvariants

logger = logging.getLogger(__name__)


class TangleError(VknotError):
    """Base class for tangle errors."""

    pass


class MalformedTangle(TangleError):
    pass


class NonterminatingRelocation(TangleError):
    pass


class RelocationTooLarge(TangleError):
    pass


_LINE = re.compile(r"^\s*([AB])\s*:(.*)$")


def build_tangle(strand_a, strand_b, signs) -> TangleDiagram:
    validate_passages(list(strand_a) + list(strand_b), signs)
    return TangleDiagram(strand_a=strand_a, strand_b=strand_b, signs=signs)


def split_tangle(D: LongDiagram, k: int) -> TangleDiagram:
    """A is the first k passages of D and B the rest, so right_close gives D back."""
    if not 0 <= k <= len(D.passages):
        raise MalformedTangle(f"split point {k} outside 0..{len(D.passages)}")
    return TangleDiagram(strand_a=D.passages[:k], strand_b=D.passages[k:], signs=D.signs)


def parse_tangle(text: str) -> TangleDiagram:
    """
    Reads two lines `A: <gauss code>` and `B: <gauss code>`. Crossing ids are
    shared by both lines; a sign may sit on either occurrence.
    """
    strands = {}
    for line in (text or "").splitlines():
        if not line.strip():
            continue
        match = _LINE.match(line)
        if not match:
            raise MalformedTangle(f"expected 'A: ...' or 'B: ...', got {line.strip()!r}")
        label, body = match.groups()
        if label in strands:
            raise MalformedTangle(f"strand {label} given twice")
        strands[label] = body.split()

    missing = [label for label in STRANDS if label not in strands]
    if missing:
        raise MalformedTangle(f"missing strand {', '.join(missing)}")
    D = parse_gauss_code(" ".join(strands[STRAND_A] + strands[STRAND_B]))
    return split_tangle(D, len(strands[STRAND_A]))


def _format_strand(E: TangleDiagram, strand) -> str:
    return " ".join(f"{p.role}{p.crossing}{SIGN_SYMBOLS[E.signs[p.crossing]]}" for p in strand)


def format_tangle(E: TangleDiagram) -> str:
    return "\n".join(
        f"{label}: {_format_strand(E, strand)}".rstrip()
        for label, strand in ((STRAND_A, E.strand_a), (STRAND_B, E.strand_b))
    )


def right_close(E: TangleDiagram) -> LongDiagram:
    return LongDiagram(passages=E.strand_a + E.strand_b, signs=E.signs)


def left_close(E: TangleDiagram) -> LongDiagram:
    return LongDiagram(passages=E.strand_b + E.strand_a, signs=E.signs)


def classify_crossing(E: TangleDiagram, crossing: int) -> str:
    if crossing not in E.signs:
        raise UnknownCrossing(f"no crossing {crossing} in tangle")
    # the type in the right closure is the type on the crossing's own strand,
    # and for a mixed crossing it is 0 exactly when A passes over
    a = right_close(E).crossing_type(crossing)
    first, second = E.strands_of[crossing]
    if first == second:
        return SELF_KINDS[first, a]
    return MIXED_KINDS[a]


def crossing_sets(E: TangleDiagram) -> dict[str, tuple[int, ...]]:
    sets = {kind: [] for kind in CROSSING_KINDS}
    for c in E.ids:
        sets[classify_crossing(E, c)].append(c)
    return {kind: tuple(ids) for kind, ids in sets.items()}


def is_simply_linked(E: TangleDiagram) -> bool:
    return all(first != second for first, second in E.strands_of.values())


def _signed_powers(E: TangleDiagram, H: HomologyData, ids) -> LaurentPoly:
    # sum of eps_i t^{v_i}
    return LaurentPoly.from_exponents(
        [H.v[H.index[c]] for c in ids], [E.signs[c] for c in ids]
    )


def tangle_invariants(E: TangleDiagram, rules: LocalRules = DEFAULT_RULES) -> TangleInvariants:
    U = {(a, X): ZERO for X in STRANDS for a in (0, 1)}
    V = {a: ZERO for a in (0, 1)}
    if E.n:
        H = homology_data(right_close(E), rules)
        sets = crossing_sets(E)
        for (X, a), kind in SELF_KINDS.items():
            ids = sets[kind]
            U[a, X] = _signed_powers(E, H, ids) - sum(E.signs[c] for c in ids)
        for a, kind in MIXED_KINDS.items():
            V[a] = _signed_powers(E, H, sets[kind])
    return TangleInvariants(U=U, V=V, linking={a: V[a].eval_one() for a in (0, 1)})


def tangle_sum(E: TangleDiagram, D: LongDiagram) -> LongDiagram:
    """E + D: strand A, then D between the right endpoints, then strand B."""
    D = relabel(D, start=max(E.signs, default=0) + 1)
    return relabel(
        LongDiagram(
            passages=E.strand_a + D.passages + E.strand_b,
            signs={**E.signs, **D.signs},
        )
    )


# -- simply linked tangles ---------------------------------------------------


def _first_b_self(passages: list[Passage], q: int) -> int | None:
    """Position of the earliest passage on B whose crossing lies entirely on B."""
    first = {}
    for k, p in enumerate(passages):
        first.setdefault(p.crossing, k)
    for k in range(q, len(passages)):
        if first[passages[k].crossing] >= q:
            return k
    return None


def _direction(p: Passage, sign: int) -> int:
    """
    +1 if the strand crossing path p at this passage goes to p's left, seen
    along p; -1 if it goes to the right.
    """
    return sign if p.role == OVER else -sign


def _relocate(passages: list[Passage], signs: dict[int, int], q: int, s: int, next_id: int):
    """
    Drags the second path of the crossing c at position s back along the
    first path until its tip crosses A just before q. Every mixed passage
    x_k between q and s turns into an R2 pair (a_k, b_k) between the finger
    and x_k's strand on A; c itself becomes mixed.
    Returns (passages, new q, next free id).
    """
    c = passages[s].crossing
    r = next(k for k in range(s + 1, len(passages)) if passages[k].crossing == c)
    on_a = {passages[k].crossing: k for k in range(q)}

    d = _direction(passages[s], signs[c])
    finger = passages[r].role
    f = 1 if finger == OVER else -1
    held = UNDER if finger == OVER else OVER

    around = {}
    below, above = [], []
    for k in range(q, s):
        x = passages[k]
        d_k = _direction(x, signs[x.crossing])
        b, a = next_id, next_id + 1
        next_id += 2
        signs[b] = -f * d * d_k
        signs[a] = f * d * d_k
        u = on_a[x.crossing]
        triple = (Passage(b, held), passages[u], Passage(a, held))
        around[u] = triple if d_k == 1 else triple[::-1]
        below.append(Passage(b, finger))
        above.append(Passage(a, finger))

    tip = passages[r]
    loop = below[::-1] + [tip] + above if d == 1 else above[::-1] + [tip] + below

    strand_a = [p for k in range(q) for p in around.get(k, (passages[k],))]
    strand_a.append(passages[s])
    strand_b = []
    for k in range(q, len(passages)):
        if k == s:
            continue
        strand_b.extend(loop if k == r else (passages[k],))
    return strand_a + strand_b, len(strand_a), next_id


def simply_linked_from(
    D: LongDiagram, crossing_limit: int = RELOCATION_CROSSING_LIMIT, split: int = 1
) -> TangleDiagram:
    """
    A simply linked tangle T with both linking numbers 0 and R(T) equivalent
    to D. Strand A starts as the first `split` passages of D, which must not
    meet the same crossing twice. The compensating kinks of the untwisting sit
    at q with one passage on each side, so they start out mixed.

    Every relocation adds two crossings per mixed passage in front of the
    relocated one, so the output can be exponentially larger than D when
    relocations compound. A diagram whose self crossings all lie behind the
    split needs none.
    """
    if D.n == 0:
        return TangleDiagram()
    front = [p.crossing for p in D.passages[:split]]
    if split < 1 or split > len(D.passages) or len(set(front)) < len(front):
        raise MalformedTangle(f"split {split} does not cut a self-crossing-free strand A off D")

    U = untwist(D, arc=split)
    q = split + U.n - D.n
    passages, signs = list(U.passages), dict(U.signs)
    next_id = max(signs) + 1
    # each relocation turns one crossing between two paths of B into a mixed one
    budget = len({p.crossing for p in passages[q:]} - {p.crossing for p in passages[:q]})

    steps = 0
    while True:
        s = _first_b_self(passages, q)
        if s is None:
            break
        steps += 1
        if steps > budget:
            raise NonterminatingRelocation(f"B still has self crossings after {budget} relocations")
        passages, q, next_id = _relocate(passages, signs, q, s, next_id)
        if len(signs) > crossing_limit:
            raise RelocationTooLarge(
                f"{len(signs)} crossings after {steps} relocations, limit {crossing_limit}"
            )
        logger.debug(f"relocation {steps}/{budget}: {len(signs)} crossings, q at {q}")

    logger.info(f"simply linked tangle with {len(signs)} crossings from {D.n}")
    return split_tangle(relabel(LongDiagram(passages=passages, signs=signs)), q)


def swap_fh(D: LongDiagram, crossing_limit: int = RELOCATION_CROSSING_LIMIT) -> LongDiagram:
    """A long knot K' with F_ab(K') = H_{1-a,1-b}(D) and H_ab(K') = F_{1-a,1-b}(D)."""
    return left_close(simply_linked_from(D, crossing_limit))


# -- identities --------------------------------------------------------------


def _check(identity: str, subject: str, left, right) -> IdentityCheck:
    return IdentityCheck(identity, subject, left == right, left, right)


def _sum_checks(
    E: TangleDiagram,
    D: LongDiagram,
    BR: InvariantBundle,
    inv: TangleInvariants,
    rules: LocalRules,
) -> list[IdentityCheck]:
    BK = intersection_polys(D, rules)
    BS = intersection_polys(tangle_sum(E, D), rules)
    W, lam, V = BK.W, inv.linking, inv.V

    checks = [_check(TANGLE_SUM_W, f"W{a}", BS.W[a], BR.W[a] + W[a]) for a in (0, 1)]
    for a, b in TYPE_PAIRS:
        F = BR.F[a, b] + BK.F[a, b] + lam[b] * W[a] + lam[a] * W[b].invert_var()
        G = BR.G[a, b] + BK.G[a, b] - lam[b] * W[a] + V[a] * W[b]
        H = (
            BR.H[a, b]
            + BK.H[a, b]
            + (inv.U_total(b) - lam[b]) * W[a].invert_var()
            + (inv.U_total(a).invert_var() - lam[a]) * W[b]
        )
        checks.append(_check(TANGLE_SUM_F, f"F{a}{b}", BS.F[a, b], F))
        checks.append(_check(TANGLE_SUM_G, f"G{a}{b}", BS.G[a, b], G))
        checks.append(_check(TANGLE_SUM_H, f"H{a}{b}", BS.H[a, b], H))
    return checks


def check_tangle_identities(
    E: TangleDiagram, D: LongDiagram | None = None, rules: LocalRules = DEFAULT_RULES
) -> IdentityReport:
    BR = intersection_polys(right_close(E), rules)
    inv = tangle_invariants(E, rules)
    checks = [
        _check(
            TANGLE_WRITHE_SPLIT,
            f"W{a}",
            BR.W[a],
            inv.U_total(a) + inv.V[a] - inv.linking[a],
        )
        for a in (0, 1)
    ]
    if D is not None:
        checks += _sum_checks(E, D, BR, inv, rules)

    if is_simply_linked(E) and inv.linking[0] == inv.linking[1] == 0:
        BL = intersection_polys(left_close(E), rules)
        for a, b in TYPE_PAIRS:
            checks.append(_check(LEFT_CLOSURE_SWAP, f"F{a}{b}", BL.F[a, b], BR.H[1 - a, 1 - b]))
            checks.append(_check(LEFT_CLOSURE_SWAP, f"H{a}{b}", BL.H[a, b], BR.F[1 - a, 1 - b]))
    else:
        logger.debug(f"{LEFT_CLOSURE_SWAP} skipped: not simply linked or nonzero linking")

    report = IdentityReport(tuple(checks))
    for failure in report.failures:
        logger.warning(f"identity {failure.label} failed: {failure.left} != {failure.right}")
    return report

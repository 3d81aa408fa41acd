"""
Gauss-code front end and the structural operations on long diagrams:
crossing types, writhes, untwisting, the three symmetry operators,
concatenation and closure/cut.
"""

import logging
import re
from collections import Counter
from collections.abc import Iterable, Iterator, Mapping

from diagram.constants import (FLIP_NEGATES_SIGNS, OVER, OVER_FIRST,
                               SIGN_SYMBOLS, SIGN_VALUES, TYPES, UNDER)
from diagram.models import ClosedDiagram, GaussDiagram, LongDiagram, Passage
from exceptions import VknotError

logger = logging.getLogger(__name__)


class DiagramError(VknotError):
    """Base class for diagram errors."""

    pass


class MalformedToken(DiagramError):
    pass


class LabelCountNotTwo(DiagramError):
    pass


class RoleDuplicated(DiagramError):
    pass


class SignMismatch(DiagramError):
    pass


class UnknownCrossing(DiagramError):
    pass


class ArcOutOfRange(DiagramError):
    pass


_TOKEN = re.compile(r"^([OU])(\d+)([+-])$")


def validate_passages(
    passages: Iterable[Passage], signs: Mapping[int, int]
) -> None:
    """Every id twice, once over and once under, with a single sign of +-1."""
    passages = list(passages)
    counts = Counter(p.crossing for p in passages)
    for crossing, count in counts.items():
        if count != 2:
            raise LabelCountNotTwo(f"crossing {crossing} occurs {count} times")
    roles = {}
    for p in passages:
        if p.role not in (OVER, UNDER):
            raise MalformedToken(f"unknown role {p.role!r}")
        if roles.get(p.crossing) == p.role:
            raise RoleDuplicated(f"crossing {p.crossing} has two {p.role} passages")
        roles[p.crossing] = p.role
    if set(signs) != set(counts):
        raise SignMismatch("signs do not cover exactly the crossings present")
    for crossing, sign in signs.items():
        if sign not in (1, -1):
            raise SignMismatch(f"crossing {crossing} has sign {sign}")


def relabel(D: GaussDiagram, start: int = 1) -> GaussDiagram:
    """Renames crossings start, start+1, ... in increasing order of the old ids."""
    mapping = {old: start + k for k, old in enumerate(sorted(D.signs))}
    if all(old == new for old, new in mapping.items()):
        return D
    return type(D)(
        passages=[p.relabeled(mapping) for p in D.passages],
        signs={mapping[c]: s for c, s in D.signs.items()},
    )


def build_diagram(
    tokens: Iterable[tuple[str, int, int | None]], cls=LongDiagram
) -> GaussDiagram:
    """
    Builds a diagram from (role, label, sign) triples. The sign may be None on one
    of the two occurrences. Labels are relabeled 1..n by sorted order.
    """
    passages = []
    signs = {}
    for role, label, sign in tokens:
        passages.append(Passage(int(label), role))
        if sign is None:
            continue
        if label in signs and signs[label] != sign:
            raise SignMismatch(f"crossing {label} carries both signs")
        signs[label] = sign

    counts = Counter(p.crossing for p in passages)
    for label in counts:
        if label not in signs and counts[label] == 2:
            raise SignMismatch(f"crossing {label} has no sign")
        signs.setdefault(label, 1)
    validate_passages(passages, signs)
    return relabel(cls(passages=passages, signs=signs))


def parse_gauss_code(text: str) -> LongDiagram:
    """Reads whitespace separated `O<label><sign>` / `U<label><sign>` tokens."""
    tokens = []
    for raw in (text or "").split():
        match = _TOKEN.match(raw)
        if not match:
            raise MalformedToken(f"cannot read token {raw!r}")
        role, label, sign = match.groups()
        if int(label) <= 0:
            raise MalformedToken(f"label must be positive in {raw!r}")
        tokens.append((role, int(label), SIGN_VALUES[sign]))
    return build_diagram(tokens, LongDiagram)


def format_gauss_code(D: GaussDiagram) -> str:
    return " ".join(
        f"{p.role}{p.crossing}{SIGN_SYMBOLS[D.signs[p.crossing]]}" for p in D.passages
    )


def _require(D: GaussDiagram, crossing: int) -> None:
    if crossing not in D.signs:
        raise UnknownCrossing(f"no crossing {crossing} in diagram")


def crossing_type(D: GaussDiagram, crossing: int) -> int:
    _require(D, crossing)
    return D.crossing_type(crossing)


def crossings_of_type(D: GaussDiagram, a: int) -> list[int]:
    return [c for c in D.ids if D.crossing_type(c) == a]


def writhe_a(D: GaussDiagram, a: int) -> int:
    return sum(D.signs[c] for c in crossings_of_type(D, a))


def untwist(D: LongDiagram, arc: int | None = None) -> LongDiagram:
    """
    Adds |w_a| kinks of sign -sgn(w_a) for each type a so both writhes vanish.
    Kinks go to the +inf end by default; with an arc index they are nested
    at that arc (all first passages, then all second passages in reverse).
    """
    if arc is not None and not 0 <= arc <= len(D.passages):
        raise ArcOutOfRange(f"arc {arc} outside 0..{len(D.passages)}")

    kinks = []
    for a in TYPES:
        w = writhe_a(D, a)
        first = OVER if a == OVER_FIRST else UNDER
        kinks.extend([(first, -1 if w > 0 else 1)] * abs(w))
    if not kinks:
        return D

    next_id = max(D.signs, default=0) + 1
    signs = dict(D.signs)
    heads, tails = [], []
    for k, (first, sign) in enumerate(kinks):
        head = Passage(next_id + k, first)
        signs[head.crossing] = sign
        heads.append(head)
        tails.append(head.switched())

    if arc is None:
        added = [p for pair in zip(heads, tails) for p in pair]
        passages = list(D.passages) + added
    else:
        passages = (
            list(D.passages[:arc]) + heads + tails[::-1] + list(D.passages[arc:])
        )
    logger.debug(f"untwist added {len(kinks)} kinks")
    return LongDiagram(passages=passages, signs=signs)


def sym_flip(D: LongDiagram, negate_signs: bool = FLIP_NEGATES_SIGNS) -> LongDiagram:
    signs = {c: -s for c, s in D.signs.items()} if negate_signs else D.signs
    return LongDiagram(passages=[p.switched() for p in D.passages], signs=signs)


def sym_reverse(D: LongDiagram) -> LongDiagram:
    return LongDiagram(passages=D.passages[::-1], signs=D.signs)


def sym_reflect(D: LongDiagram) -> LongDiagram:
    return LongDiagram(
        passages=D.passages, signs={c: -s for c, s in D.signs.items()}
    )


def concatenate(D: LongDiagram, E: LongDiagram) -> LongDiagram:
    """E after D, with E's crossings renumbered after D's."""
    D = relabel(D)
    E = relabel(E, start=D.n + 1)
    return LongDiagram(
        passages=D.passages + E.passages, signs={**D.signs, **E.signs}
    )


def concatenate_all(diagrams: Iterable[LongDiagram]) -> LongDiagram:
    out = LongDiagram()
    for D in diagrams:
        out = concatenate(out, D)
    return out


def close(D: LongDiagram) -> ClosedDiagram:
    return ClosedDiagram(passages=D.passages, signs=D.signs)


def cut(C: ClosedDiagram, arc: int) -> LongDiagram:
    """Opens C just before passage `arc`; the empty diagram only has arc 0."""
    size = len(C.passages)
    if not (0 <= arc < size or (size == 0 and arc == 0)):
        raise ArcOutOfRange(f"arc {arc} outside 0..{max(size - 1, 0)}")
    return LongDiagram(
        passages=C.passages[arc:] + C.passages[:arc], signs=C.signs
    )


def cuts(C: ClosedDiagram) -> Iterator[LongDiagram]:
    for arc in range(max(len(C.passages), 1)):
        yield cut(C, arc)


def type_vector(D: GaussDiagram) -> dict[int, int]:
    return {c: D.crossing_type(c) for c in D.ids}


"""
Reidemeister moves on based Gauss diagrams.

A move is described by a MoveSite. enumerate_rmoves lists every site of a
diagram, random_rmove samples one, apply_rmove performs it. Sites are plain
values so a site found on D can be applied to D and only to D.
random_diagram draws the starting diagrams for the fuzzer.
"""

import itertools
import logging
import random
from dataclasses import dataclass

from diagram.constants import (OVER, R1_DELETE, R1_INSERT, R2_DELETE,
                               R2_INSERT, R3_SLIDE, ROLES, UNDER)
from diagram.models import LongDiagram, Passage
from diagram.services import DiagramError, relabel

logger = logging.getLogger(__name__)


class InvalidSite(DiagramError):
    pass


@dataclass(frozen=True)
class MoveSite:
    """
    R1+  arcs=(k,)            first_role, sign
    R1-  crossings=(c,)
    R2+  arcs=(i, j), i < j   first_role (role of both passages at arc i),
                              sign (of the first inserted crossing), parallel
    R2-  crossings=(x, y)
    R3   arcs=(k1, k2, k3)    start of each adjacent pair, crossings=(x, y, z)
    """

    kind: str
    arcs: tuple[int, ...] = ()
    crossings: tuple[int, ...] = ()
    first_role: str = OVER
    sign: int = 1
    parallel: bool = True


def _other(role: str) -> str:
    return UNDER if role == OVER else OVER


def _adjacent(a: int, b: int) -> bool:
    return abs(a - b) == 1


# -- R1 ---------------------------------------------------------------------


def _r1_insert(D: LongDiagram, site: MoveSite) -> LongDiagram:
    (k,) = site.arcs
    if not 0 <= k <= len(D.passages) or site.first_role not in ROLES:
        raise InvalidSite(f"no R1 insertion at arc {k}")
    if site.sign not in (1, -1):
        raise InvalidSite(f"bad sign {site.sign}")
    c = max(D.signs, default=0) + 1
    kink = [Passage(c, site.first_role), Passage(c, _other(site.first_role))]
    return LongDiagram(
        passages=list(D.passages[:k]) + kink + list(D.passages[k:]),
        signs={**D.signs, c: site.sign},
    )


def _is_kink(D: LongDiagram, c: int) -> bool:
    return c in D.signs and _adjacent(*D.positions[c])


def _remove(D: LongDiagram, doomed: set[int]) -> LongDiagram:
    return relabel(
        LongDiagram(
            passages=[p for p in D.passages if p.crossing not in doomed],
            signs={c: s for c, s in D.signs.items() if c not in doomed},
        )
    )


def _r1_delete(D: LongDiagram, site: MoveSite) -> LongDiagram:
    (c,) = site.crossings
    if not _is_kink(D, c):
        raise InvalidSite(f"crossing {c} is not a kink")
    return _remove(D, {c})


# -- R2 ---------------------------------------------------------------------


def _r2_insert(D: LongDiagram, site: MoveSite) -> LongDiagram:
    i, j = site.arcs
    if not 0 <= i < j <= len(D.passages) or site.first_role not in ROLES:
        raise InvalidSite(f"no R2 insertion at arcs {site.arcs}")
    if site.sign not in (1, -1):
        raise InvalidSite(f"bad sign {site.sign}")
    x = max(D.signs, default=0) + 1
    y = x + 1
    role, back = site.first_role, _other(site.first_role)
    first = [Passage(x, role), Passage(y, role)]
    second = (
        [Passage(x, back), Passage(y, back)]
        if site.parallel
        else [Passage(y, back), Passage(x, back)]
    )
    passages = (
        list(D.passages[:i]) + first + list(D.passages[i:j]) + second
        + list(D.passages[j:])
    )
    return LongDiagram(passages=passages, signs={**D.signs, x: site.sign, y: -site.sign})


def _is_bigon(D: LongDiagram, x: int, y: int) -> bool:
    if x == y or x not in D.signs or y not in D.signs:
        return False
    if D.signs[x] != -D.signs[y]:
        return False
    (ox, ux), (oy, uy) = D.positions[x], D.positions[y]
    return _adjacent(ox, oy) and _adjacent(ux, uy)


def _r2_delete(D: LongDiagram, site: MoveSite) -> LongDiagram:
    x, y = site.crossings
    if not _is_bigon(D, x, y):
        raise InvalidSite(f"crossings {x}, {y} do not bound a bigon")
    return _remove(D, {x, y})


# -- R3 ---------------------------------------------------------------------


def _r3_shape(D: LongDiagram, starts: tuple[int, ...], chords: tuple[int, ...]):
    """
    Checks that the three adjacent pairs starting at `starts` carry the three
    sides of a triangle on `chords` that a real R3 move can slide across.
    Returns True/False.
    """
    if len(set(starts)) != 3 or len(set(chords)) != 3:
        return False
    cells = set()
    pairs = []
    for k in starts:
        if not 0 <= k < len(D.passages) - 1:
            return False
        a, b = D.passages[k], D.passages[k + 1]
        if a.crossing == b.crossing:
            return False
        cells.update((k, k + 1))
        pairs.append((a, b))
    if len(cells) != 6:
        return False
    covered = sorted(tuple(sorted((a.crossing, b.crossing))) for a, b in pairs)
    x, y, z = sorted(chords)
    if covered != sorted([(x, y), (x, z), (y, z)]):
        return False

    # every labelling of the chords as x, y, z where strand 1 meets strand 2 at x,
    # strand 1 meets strand 3 at y and strand 2 meets strand 3 at z
    for cx, cy, cz in itertools.permutations(chords):
        sides = {}
        for a, b in pairs:
            sides[frozenset((a.crossing, b.crossing))] = (a, b)
        s1_pair = sides[frozenset((cx, cy))]
        s2_pair = sides[frozenset((cx, cz))]
        s3_pair = sides[frozenset((cy, cz))]

        d1 = 1 if s1_pair[0].crossing == cx else -1
        d2 = 1 if s2_pair[0].crossing == cx else -1
        d3 = 1 if s3_pair[0].crossing == cz else -1

        def role_on(pair, chord):
            return pair[0].role if pair[0].crossing == chord else pair[1].role

        h12 = 1 if role_on(s1_pair, cx) == OVER else -1
        h13 = 1 if role_on(s1_pair, cy) == OVER else -1
        h23 = 1 if role_on(s2_pair, cz) == OVER else -1
        if (h12, h23, h13) in ((1, 1, -1), (-1, -1, 1)):
            continue  # cyclic heights, not a triangle of three layered strands

        if (
            D.signs[cx] == d1 * d2 * h12
            and D.signs[cy] == -d1 * d3 * h13
            and D.signs[cz] == -d2 * d3 * h23
        ):
            return True
    return False


def _r3_slide(D: LongDiagram, site: MoveSite) -> LongDiagram:
    if len(site.arcs) != 3 or not _r3_shape(D, site.arcs, site.crossings):
        raise InvalidSite(f"no R3 triangle at {site.arcs}")
    passages = list(D.passages)
    for k in site.arcs:
        passages[k], passages[k + 1] = passages[k + 1], passages[k]
    return LongDiagram(passages=passages, signs=D.signs)


# -- enumeration ------------------------------------------------------------


def _r1_insert_sites(D):
    for k in range(len(D.passages) + 1):
        for role in ROLES:
            for sign in (1, -1):
                yield MoveSite(R1_INSERT, arcs=(k,), first_role=role, sign=sign)


def _r1_delete_sites(D):
    for c in D.ids:
        if _is_kink(D, c):
            yield MoveSite(R1_DELETE, crossings=(c,))


def _r2_insert_sites(D):
    size = len(D.passages)
    for i in range(size + 1):
        for j in range(i + 1, size + 1):
            for role in ROLES:
                for sign in (1, -1):
                    for parallel in (True, False):
                        yield MoveSite(
                            R2_INSERT,
                            arcs=(i, j),
                            first_role=role,
                            sign=sign,
                            parallel=parallel,
                        )


def _r2_delete_sites(D):
    for x, y in itertools.combinations(D.ids, 2):
        if _is_bigon(D, x, y):
            yield MoveSite(R2_DELETE, crossings=(x, y))


def _r3_sites(D):
    edges = {}
    for k in range(len(D.passages) - 1):
        a, b = D.passages[k].crossing, D.passages[k + 1].crossing
        if a != b:
            edges.setdefault(frozenset((a, b)), []).append(k)

    seen = set()
    keys = list(edges)
    for e1, e2 in itertools.combinations(keys, 2):
        common = e1 & e2
        if len(common) != 1:
            continue
        third = frozenset((e1 ^ e2))
        if third not in edges:
            continue
        chords = tuple(sorted(e1 | e2))
        for starts in itertools.product(edges[e1], edges[e2], edges[third]):
            key = (chords, tuple(sorted(starts)))
            if key in seen:
                continue
            seen.add(key)
            if _r3_shape(D, starts, chords):
                yield MoveSite(R3_SLIDE, arcs=tuple(sorted(starts)), crossings=chords)


_SITES = {
    R1_INSERT: _r1_insert_sites,
    R1_DELETE: _r1_delete_sites,
    R2_INSERT: _r2_insert_sites,
    R2_DELETE: _r2_delete_sites,
    R3_SLIDE: _r3_sites,
}

_APPLY = {
    R1_INSERT: _r1_insert,
    R1_DELETE: _r1_delete,
    R2_INSERT: _r2_insert,
    R2_DELETE: _r2_delete,
    R3_SLIDE: _r3_slide,
}


def enumerate_rmoves(D: LongDiagram, kinds=None) -> list[MoveSite]:
    kinds = kinds or list(_SITES)
    return [site for kind in kinds for site in _SITES[kind](D)]


def apply_rmove(D: LongDiagram, site: MoveSite) -> LongDiagram:
    try:
        move = _APPLY[site.kind]
    except KeyError:
        raise InvalidSite(f"unknown move kind {site.kind!r}")
    try:
        return move(D, site)
    except ValueError as exc:
        # wrong number of arcs/crossings for the kind
        raise InvalidSite(str(exc)) from exc


def random_rmove(D: LongDiagram, rng: random.Random) -> MoveSite:
    """Uniform over the kinds that have a site on D, then uniform over sites."""
    size = len(D.passages)
    options = [R1_INSERT, R2_INSERT] if size else [R1_INSERT]
    deletions = {
        R1_DELETE: list(_r1_delete_sites(D)),
        R2_DELETE: list(_r2_delete_sites(D)),
        R3_SLIDE: list(_r3_sites(D)),
    }
    options += [kind for kind, sites in deletions.items() if sites]
    kind = rng.choice(options)

    if kind == R1_INSERT:
        return MoveSite(
            R1_INSERT,
            arcs=(rng.randint(0, size),),
            first_role=rng.choice(ROLES),
            sign=rng.choice((1, -1)),
        )
    if kind == R2_INSERT:
        i, j = sorted(rng.sample(range(size + 1), 2))
        return MoveSite(
            R2_INSERT,
            arcs=(i, j),
            first_role=rng.choice(ROLES),
            sign=rng.choice((1, -1)),
            parallel=rng.random() < 0.5,
        )
    return rng.choice(deletions[kind])


def random_rmove_sequence(D: LongDiagram, rng: random.Random, length: int):
    """Yields (site, diagram after the move) for `length` random moves."""
    for _ in range(length):
        site = random_rmove(D, rng)
        D = apply_rmove(D, site)
        logger.debug(f"applied {site.kind} at {site.arcs or site.crossings}")
        yield site, D


def diagram_from_layout(slots, over_first, signs) -> LongDiagram:
    """
    slots is a permutation of range(2n); chord c sits at slots[2c], slots[2c+1].
    over_first[c] says whether the earlier slot is the over passage.
    """
    n = len(signs)
    passages = [None] * (2 * n)
    for c in range(n):
        a, b = sorted((slots[2 * c], slots[2 * c + 1]))
        first, second = (OVER, UNDER) if over_first[c] else (UNDER, OVER)
        passages[a] = Passage(c + 1, first)
        passages[b] = Passage(c + 1, second)
    return LongDiagram(
        passages=passages, signs={c + 1: 1 if signs[c] else -1 for c in range(n)}
    )


def random_diagram(rng: random.Random, max_crossings=8, min_crossings=0) -> LongDiagram:
    # uniformly random chord diagram, random roles and signs
    n = rng.randint(min_crossings, max_crossings)
    slots = list(range(2 * n))
    rng.shuffle(slots)
    return diagram_from_layout(
        slots,
        [rng.random() < 0.5 for _ in range(n)],
        [rng.random() < 0.5 for _ in range(n)],
    )

"""
Carter surfaces of based Gauss diagrams.

The diagram closed through its basepoint is thickened into a ribbon graph:
one 4-valent vertex per crossing and a 2-valent basepoint vertex. Faces are
traced with phi = rotation . edge and the genus follows from Euler's formula.

homology_data gets the index vector v and the intersection matrix M in closed
form from the chord layout; push_homology_data recomputes both by pushing
the second cycle off the ribbon graph to its left and counting the signed
crossings vertex by vertex. The second one is slow and only serves as an
oracle for the first.
"""

import logging
from collections import deque

import numpy as np

from diagram.models import GaussDiagram, LongDiagram
from exceptions import VknotError
from surface.constants import (IN_SLOT, MIRROR_ORIENTATION, OUT_SLOT,
                               ROTATION, SLOTS_PER_CROSSING)
from surface.models import DEFAULT_RULES, HomologyData, LocalRules, RibbonGraph

logger = logging.getLogger(__name__)


class SurfaceError(VknotError):
    """Base class for surface errors."""

    pass


class Disconnected(SurfaceError):
    pass


class IndexOutOfRange(SurfaceError):
    pass


def _dart(index: dict[int, int], crossing: int, slot: int) -> int:
    return SLOTS_PER_CROSSING * index[crossing] + slot


def _strand_darts(D: GaussDiagram):
    """(in-dart, out-dart) of every passage, in strand order."""
    index = {c: k for k, c in enumerate(D.ids)}
    return [
        (_dart(index, p.crossing, IN_SLOT[p.role]), _dart(index, p.crossing, OUT_SLOT[p.role]))
        for p in D.passages
    ]


def _crossing_rotations(D: GaussDiagram) -> list[tuple[int, ...]]:
    return [
        tuple(SLOTS_PER_CROSSING * k + slot for slot in ROTATION[D.signs[c]])
        for k, c in enumerate(D.ids)
    ]


def _edges(D: GaussDiagram, start: int, end: int) -> list[int]:
    """Edge involution of the strand run from dart `start` through D to dart `end`."""
    edge = [None] * (SLOTS_PER_CROSSING * D.n + 2)
    darts = _strand_darts(D)
    tail = start
    for d_in, d_out in darts:
        edge[tail], edge[d_in] = d_in, tail
        tail = d_out
    edge[tail], edge[end] = end, tail
    return edge


def build_carter(D: LongDiagram, mirrored: bool = MIRROR_ORIENTATION) -> RibbonGraph:
    """Ribbon graph of D closed through the basepoint vertex (darts 4n, 4n+1)."""
    b_out, b_in = SLOTS_PER_CROSSING * D.n, SLOTS_PER_CROSSING * D.n + 1
    return RibbonGraph(
        edge=tuple(_edges(D, b_out, b_in)),
        rotation=tuple(_crossing_rotations(D) + [(b_out, b_in)]),
        mirrored=mirrored,
    )


def open_ribbon(D: LongDiagram, mirrored: bool = MIRROR_ORIENTATION) -> RibbonGraph:
    """The open diagram thickened: the basepoint is split into two free ends."""
    left, right = SLOTS_PER_CROSSING * D.n, SLOTS_PER_CROSSING * D.n + 1
    return RibbonGraph(
        edge=tuple(_edges(D, left, right)),
        rotation=tuple(_crossing_rotations(D) + [(left,), (right,)]),
        mirrored=mirrored,
    )


def _validate(R: RibbonGraph) -> None:
    for d, e in enumerate(R.edge):
        if e is None or e == d or R.edge[e] != d:
            raise SurfaceError(f"edge pairing is not a fixed-point-free involution at dart {d}")
    seen = sorted(d for cycle in R.rotation for d in cycle)
    if seen != list(range(R.darts)):
        raise SurfaceError("rotation cycles do not partition the darts")


def _check_connected(R: RibbonGraph) -> None:
    if not R.rotation:
        return
    reached = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for d in R.rotation[v]:
            w = R.vertex_of[R.edge[d]]
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != R.vertex_count:
        raise Disconnected(f"{R.vertex_count - len(reached)} vertices unreachable")


def face_cycles(R: RibbonGraph) -> list[tuple[int, ...]]:
    _validate(R)
    faces = []
    visited = [False] * R.darts
    for start in range(R.darts):
        if visited[start]:
            continue
        face = []
        d = start
        while not visited[d]:
            visited[d] = True
            face.append(d)
            d = R.next_dart[R.edge[d]]
        faces.append(tuple(face))
    return faces


def genus(R: RibbonGraph) -> int:
    _validate(R)
    _check_connected(R)
    faces = face_cycles(R)
    twice = 2 - R.vertex_count + R.edge_count - len(faces)
    return twice // 2


def ends_on_distinct_faces(D: LongDiagram, mirrored: bool = MIRROR_ORIENTATION) -> bool:
    R = open_ribbon(D, mirrored)
    left, right = SLOTS_PER_CROSSING * D.n, SLOTS_PER_CROSSING * D.n + 1
    for face in face_cycles(R):
        if left in face:
            return right not in face
    return False


def two_boundary_genus(D: LongDiagram, mirrored: bool = MIRROR_ORIENTATION) -> int:
    """
    Upper bound for the 2-supporting genus. When both free ends of the open
    ribbon sit on different boundary circles, capping the others leaves a
    two-boundary surface; otherwise a pair of discs is removed near the
    basepoint of the Carter surface.
    """
    if ends_on_distinct_faces(D, mirrored):
        return genus(open_ribbon(D, mirrored))
    return genus(build_carter(D, mirrored))


def _layout(D: GaussDiagram):
    over = np.array([D.positions[c][0] for c in D.ids], dtype=np.int64)
    under = np.array([D.positions[c][1] for c in D.ids], dtype=np.int64)
    eps = np.array([D.signs[c] for c in D.ids], dtype=np.int64)
    return over, under, eps


def homology_data(D: LongDiagram, rules: LocalRules = DEFAULT_RULES) -> HomologyData:
    n = D.n
    if n == 0:
        return HomologyData(ids=(), v=[], M=np.zeros((0, 0)), genus=genus(build_carter(D)))

    over, under, eps = _layout(D)
    lo, hi = np.minimum(over, under), np.maximum(over, under)

    # P[i, k]: over passage of c_k inside I_i; Q likewise for the under passage
    P = (lo[:, None] < over[None, :]) & (over[None, :] < hi[:, None])
    Q = (lo[:, None] < under[None, :]) & (under[None, :] < hi[:, None])
    P, Q = P.astype(np.int64), Q.astype(np.int64)

    v = (P - Q) @ eps
    transversal = rules.over_under * (P * eps) @ Q.T + rules.under_over * (Q * eps) @ P.T

    linked = (lo[:, None] < lo[None, :]) & (lo[None, :] < hi[:, None]) & (hi[:, None] < hi[None, :])
    L = linked.astype(np.int64) - linked.T.astype(np.int64)
    types = (over > under).astype(np.int64)
    sigma = np.array(
        [rules.corner[(int(a), int(s))] for a, s in zip(types, eps)], dtype=np.int64
    )
    corner = L * (sigma[:, None] + sigma[None, :]) // 2

    return HomologyData(
        ids=D.ids, v=v, M=transversal + corner, genus=genus(build_carter(D))
    )


def derived_pairings(H: HomologyData, i: int, j: int) -> tuple[int, int]:
    """(alpha_i . beta_j, beta_i . beta_j) from alpha_k + beta_k = gamma_D."""
    for c in (i, j):
        if c not in H.index:
            raise IndexOutOfRange(f"no crossing {c}; known {list(H.ids)}")
    a, b = H.index[i], H.index[j]
    m = int(H.M[a, b])
    return int(H.v[a]) - m, m + int(H.v[b]) - int(H.v[a])


# -- push-off oracle ---------------------------------------------------------


def _alpha_walk(D: GaussDiagram, crossing: int, darts) -> list[tuple[int, int]]:
    """
    Visits (in-dart, out-dart) of the smoothing cycle at `crossing` that avoids
    the basepoint: out of the first passage, along the strand, into the second
    passage and across the smoothing back to the start.
    """
    p, q = sorted(D.positions[crossing])
    walk = [(darts[q][0], darts[p][1])]
    walk.extend(darts[p + 1 : q])
    return walk


def _left_sector(R: RibbonGraph, d_in: int, d_out: int) -> set[int]:
    # darts strictly counter-clockwise after d_out and before d_in
    sector = set()
    d = R.next_dart[d_out]
    while d != d_in:
        if d == d_out:
            raise SurfaceError(f"darts {d_in} and {d_out} share no vertex")
        sector.add(d)
        d = R.next_dart[d]
    return sector


def _push_pairing(R: RibbonGraph, a_walk, b_walk) -> int:
    """a . b with b pushed to its left; transversal points only occur at vertices."""
    total = 0
    sectors = {}
    for d_in, d_out in b_walk:
        sectors.setdefault(R.vertex_of[d_in], []).append(_left_sector(R, d_in, d_out))
    for d_in, d_out in a_walk:
        for sector in sectors.get(R.vertex_of[d_in], ()):
            total += (d_in in sector) - (d_out in sector)
    return total


def push_homology_data(D: LongDiagram, mirrored: bool = MIRROR_ORIENTATION) -> HomologyData:
    R = build_carter(D, mirrored)
    darts = _strand_darts(D)
    basepoint = R.vertex_count - 1
    # gamma_D runs through the basepoint: in at 4n+1, out at 4n
    gamma = list(darts) + [(R.darts - 1, R.darts - 2)]

    alphas = []
    for c in D.ids:
        walk = _alpha_walk(D, c, darts)
        assert all(R.vertex_of[d] != basepoint for d, _ in walk)
        alphas.append(walk)

    n = D.n
    v = np.array([_push_pairing(R, alphas[i], gamma) for i in range(n)], dtype=np.int64)
    M = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j:
                M[i, j] = _push_pairing(R, alphas[i], alphas[j])
    logger.debug(f"pushed {n} cycles on a genus {genus(R)} surface")
    return HomologyData(ids=D.ids, v=v, M=M, genus=genus(R))


def pairing_mismatches(D: LongDiagram, rules: LocalRules = DEFAULT_RULES) -> list[str]:
    """Entries where the closed form disagrees with the push-off oracle."""
    fast, slow = homology_data(D, rules), push_homology_data(D)
    problems = []
    for k, c in enumerate(D.ids):
        if fast.v[k] != slow.v[k]:
            problems.append(f"v[{c}]: {fast.v[k]} != {slow.v[k]}")
        for l, e in enumerate(D.ids):
            if fast.M[k, l] != slow.M[k, l]:
                problems.append(f"M[{c},{e}]: {fast.M[k, l]} != {slow.M[k, l]}")
    return problems

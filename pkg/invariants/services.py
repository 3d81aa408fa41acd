"""
Writhe polynomials W_a and the twelve intersection polynomials F_ab, G_ab, H_ab
of a long diagram, the closed-knot W and I through a cut, and the identity
suite run against them.
"""

import logging

import numpy as np

from diagram.models import ClosedDiagram, LongDiagram
from diagram.services import (close, concatenate, cut, sym_flip,
                              sym_reflect, sym_reverse, untwist, writhe_a)
from invariants.constants import (ANNULUS_LAW_FG, ANNULUS_LAW_H, ANNULUS_LAW_W,
                                  CLOSURE_CUT_INDEPENDENCE,
                                  DIAGONAL_RECIPROCITY, F01_F10_DUALITY,
                                  FLIP_INTERSECTION, FLIP_WRITHE,
                                  G_DIAGONAL_DERIVATIVE, H01_H10_DUALITY,
                                  INTERSECTION_NAMES, MIRROR_INTERSECTION,
                                  MIRROR_WRITHE, PLANAR_VANISHING, POLY_NAMES,
                                  PRODUCT_ADDITIVITY_FG, PRODUCT_ADDITIVITY_W,
                                  PRODUCT_GENUS_SUBADDITIVITY,
                                  PRODUCT_H_CROSS_TERM, REVERSE_INTERSECTION,
                                  REVERSE_WRITHE, SINGLE_TYPE0_VANISHING,
                                  TORUS_RECIPROCITY_CLOSURE_I,
                                  TORUS_RECIPROCITY_DESCENDING_G,
                                  TORUS_RECIPROCITY_W, TYPE_PAIRS,
                                  UNTWIST_INVARIANCE, VANISH_AT_ONE)
from invariants.models import IdentityCheck, IdentityReport, InvariantBundle
from laurent.models import ZERO, LaurentPoly
from surface.models import DEFAULT_RULES, HomologyData, LocalRules
from surface.services import homology_data, two_boundary_genus

logger = logging.getLogger(__name__)


def _sum_minus_count(exponents, weights) -> LaurentPoly:
    # sum of w * (t^e - 1)
    weights = np.asarray(weights, dtype=object)
    return LaurentPoly.from_exponents(exponents, weights) - int(weights.sum())


def _type_masks(D: LongDiagram) -> dict[int, np.ndarray]:
    types = np.array([D.crossing_type(c) for c in D.ids], dtype=np.int64)
    return {a: types == a for a in (0, 1)}


def _eps(D: LongDiagram) -> np.ndarray:
    return np.array([D.signs[c] for c in D.ids], dtype=np.int64)


def writhe_poly(D: LongDiagram, a: int, H: HomologyData | None = None) -> LaurentPoly:
    """sum over type-a crossings of eps_i (t^{v_i} - 1)"""
    if D.n == 0:
        return ZERO
    H = H if H is not None else homology_data(D)
    mask = _type_masks(D)[a]
    return _sum_minus_count(H.v[mask], _eps(D)[mask])


def intersection_polys(D: LongDiagram, rules: LocalRules = DEFAULT_RULES) -> InvariantBundle:
    H = homology_data(D, rules)
    omega = {a: writhe_a(D, a) for a in (0, 1)}
    W = {a: writhe_poly(D, a, H) for a in (0, 1)}
    F, G, Hs = {}, {}, {}
    if D.n == 0:
        return InvariantBundle(
            W=W, F=dict.fromkeys(TYPE_PAIRS, ZERO), G=dict.fromkeys(TYPE_PAIRS, ZERO),
            H=dict.fromkeys(TYPE_PAIRS, ZERO), omega=omega,
        )

    masks, eps = _type_masks(D), _eps(D)
    v, M = H.v, H.M
    for a, b in TYPE_PAIRS:
        ia, ib = masks[a], masks[b]
        weights = np.outer(eps[ia], eps[ib])
        M_ab = M[np.ix_(ia, ib)]
        v_i = v[ia][:, None]
        v_j = v[ib][None, :]

        F[a, b] = _sum_minus_count(M_ab, weights)
        G[a, b] = _sum_minus_count(v_i - M_ab, weights) - omega[b] * W[a]
        Hs[a, b] = (
            _sum_minus_count(M_ab + v_j - v_i, weights)
            - omega[a] * W[b]
            - omega[b] * W[a].invert_var()
        )
    return InvariantBundle(W=W, F=F, G=G, H=Hs, omega=omega)


def closed_invariants(
    C: ClosedDiagram, arc: int = 0, rules: LocalRules = DEFAULT_RULES
) -> tuple[LaurentPoly, LaurentPoly]:
    """(W, I) of the closed knot, read off the long knot obtained by cutting at `arc`."""
    B = intersection_polys(cut(C, arc), rules)
    W = B.W[0] + B.W[1].invert_var()
    I = B.F[0, 1] + B.G[0, 0] + B.G[1, 1].invert_var() + B.H[0, 1].invert_var()
    return W, I


def bundle_diff(B1: InvariantBundle, B2: InvariantBundle) -> list[str]:
    # writhes are not invariants, only the polynomials are compared
    return [name for name in POLY_NAMES if B1[name] != B2[name]]


def bundle_equal(B1: InvariantBundle, B2: InvariantBundle) -> bool:
    return not bundle_diff(B1, B2)


def format_bundle_table(B: InvariantBundle) -> str:
    width = max(len(name) for name in POLY_NAMES)
    rows = [f"{'omega0'.ljust(width)}  {B.omega[0]}", f"{'omega1'.ljust(width)}  {B.omega[1]}"]
    rows += [f"{name.ljust(width)}  {poly}" for name, poly in B.items()]
    return "\n".join(rows)


# -- identity suite ------------------------------------------------------------


def _check(identity: str, subject: str, left, right) -> IdentityCheck:
    return IdentityCheck(identity, subject, left == right, left, right)


def _reciprocal(identity: str, subject: str, p: LaurentPoly) -> IdentityCheck:
    return _check(identity, subject, p, p.invert_var())


def _swap(name: str) -> str:
    """F01 -> F10, W0 -> W1"""
    return name[0] + "".join(str(1 - int(d)) for d in name[1:])


def _unary_checks(D: LongDiagram, B: InvariantBundle, rules: LocalRules) -> list[IdentityCheck]:
    checks = [_check(VANISH_AT_ONE, name, p.eval_one(), 0) for name, p in B.items()]
    checks.append(_check(F01_F10_DUALITY, "", B.F[0, 1], B.F[1, 0].invert_var()))
    checks.append(_check(H01_H10_DUALITY, "", B.H[0, 1], B.H[1, 0].invert_var()))
    checks += [
        _reciprocal(DIAGONAL_RECIPROCITY, name, B[name]) for name in ("F00", "F11", "H00", "H11")
    ]
    checks += [
        _check(G_DIAGONAL_DERIVATIVE, name, B[name].deriv_one(), 0) for name in ("G00", "G11")
    ]

    flipped = intersection_polys(sym_flip(D), rules)
    reversed_ = intersection_polys(sym_reverse(D), rules)
    mirrored = intersection_polys(sym_reflect(D), rules)
    for a in (0, 1):
        checks.append(_check(FLIP_WRITHE, f"W{a}", flipped.W[a], -B.W[1 - a]))
        checks.append(_check(REVERSE_WRITHE, f"W{a}", reversed_.W[a], B.W[1 - a]))
        checks.append(_check(MIRROR_WRITHE, f"W{a}", mirrored.W[a], -B.W[a].invert_var()))
    for name in INTERSECTION_NAMES:
        checks.append(_check(FLIP_INTERSECTION, name, flipped[name], B[_swap(name)]))
        checks.append(_check(REVERSE_INTERSECTION, name, reversed_[name], B[_swap(name)]))
        checks.append(_check(MIRROR_INTERSECTION, name, mirrored[name], B[name].invert_var()))

    closed = close(D)
    W_ref, I_ref = closed_invariants(closed, 0, rules)
    for arc in range(1, len(D.passages)):
        W, I = closed_invariants(closed, arc, rules)
        checks.append(_check(CLOSURE_CUT_INDEPENDENCE, f"W arc {arc}", W, W_ref))
        checks.append(_check(CLOSURE_CUT_INDEPENDENCE, f"I arc {arc}", I, I_ref))

    untwisted = intersection_polys(untwist(D), rules)
    checks += [_check(UNTWIST_INVARIANCE, name, untwisted[name], p) for name, p in B.items()]
    return checks


def torus_checks(B: InvariantBundle) -> list[IdentityCheck]:
    """Reciprocities that hold whenever the diagram has a genus one realization."""
    return [
        _reciprocal(TORUS_RECIPROCITY_W, "W0-W1", B.W[0] - B.W[1]),
        _reciprocal(
            TORUS_RECIPROCITY_CLOSURE_I,
            "F01+G00-G11-H01",
            B.F[0, 1] + B.G[0, 0] - B.G[1, 1] - B.H[0, 1],
        ),
        _reciprocal(
            TORUS_RECIPROCITY_DESCENDING_G,
            "G00-G01-G10+G11",
            B.G[0, 0] - B.G[0, 1] - B.G[1, 0] + B.G[1, 1],
        ),
    ]


def annulus_checks(B: InvariantBundle) -> list[IdentityCheck]:
    """What a realization on an annulus with the ends on both boundary circles forces."""
    checks = [_check(ANNULUS_LAW_W, "", B.W[0], B.W[1])]
    checks += [
        _check(ANNULUS_LAW_FG, f"{X}{a}{b}", getattr(B, X)[a, b], ZERO)
        for X in ("F", "G")
        for a, b in TYPE_PAIRS
    ]
    square = B.W[0] * B.W[0].invert_var()
    checks += [_check(ANNULUS_LAW_H, f"H{a}{b}", B.H[a, b], square) for a, b in TYPE_PAIRS]
    return checks


def _conditional_checks(D: LongDiagram, B: InvariantBundle, genus: int) -> list[IdentityCheck]:
    checks = []
    if genus == 0:
        checks += [_check(PLANAR_VANISHING, name, p, ZERO) for name, p in B.items()]
    else:
        logger.debug(f"{PLANAR_VANISHING} skipped: Carter genus {genus}")

    if genus <= 1:
        checks += torus_checks(B)
    else:
        logger.debug(f"torus reciprocity skipped: Carter genus {genus}")

    if two_boundary_genus(D) == 0:
        checks += annulus_checks(B)
    else:
        logger.debug("annulus laws skipped: ends share a boundary circle or g2 > 0")

    type0 = [c for c in D.ids if D.crossing_type(c) == 0]
    if len(type0) == 1:
        checks.append(_check(SINGLE_TYPE0_VANISHING, "F00", B.F[0, 0], ZERO))
        checks.append(_check(SINGLE_TYPE0_VANISHING, "G00", B.G[0, 0], ZERO))
    return checks


def _product_checks(
    D: LongDiagram, E: LongDiagram, B: InvariantBundle, rules: LocalRules
) -> list[IdentityCheck]:
    BE = intersection_polys(E, rules)
    P = concatenate(D, E)
    BP = intersection_polys(P, rules)
    checks = [_check(PRODUCT_ADDITIVITY_W, f"W{a}", BP.W[a], B.W[a] + BE.W[a]) for a in (0, 1)]
    checks += [
        _check(PRODUCT_ADDITIVITY_FG, name, BP[name], B[name] + BE[name])
        for name in INTERSECTION_NAMES
        if name[0] in "FG"
    ]
    for a, b in TYPE_PAIRS:
        cross = B.W[a].invert_var() * BE.W[b] + BE.W[a].invert_var() * B.W[b]
        checks.append(
            _check(PRODUCT_H_CROSS_TERM, f"H{a}{b}", BP.H[a, b] - B.H[a, b] - BE.H[a, b], cross)
        )

    g_d, g_e, g_p = (homology_data(X, rules).genus for X in (D, E, P))
    checks.append(
        IdentityCheck(PRODUCT_GENUS_SUBADDITIVITY, "sg1", g_p <= g_d + g_e, g_p, g_d + g_e)
    )
    t_d, t_e, t_p = (two_boundary_genus(X) for X in (D, E, P))
    checks.append(
        IdentityCheck(PRODUCT_GENUS_SUBADDITIVITY, "sg2", t_p <= t_d + t_e, t_p, t_d + t_e)
    )
    return checks


def check_identities(
    D: LongDiagram, other: LongDiagram | None = None, rules: LocalRules = DEFAULT_RULES
) -> IdentityReport:
    B = intersection_polys(D, rules)
    genus = homology_data(D, rules).genus
    checks = _unary_checks(D, B, rules) + _conditional_checks(D, B, genus)
    if other is not None:
        checks += _product_checks(D, other, B, rules)

    report = IdentityReport(tuple(checks))
    for failure in report.failures:
        logger.warning(f"identity {failure.label} failed: {failure.left} != {failure.right}")
    return report


def invariance_violations(
    D: LongDiagram, sequence, rules: LocalRules = DEFAULT_RULES
) -> list[str]:
    """
    Walks a random_rmove_sequence and returns one message per move after which
    the bundle changed.
    """
    reference = intersection_polys(D, rules)
    problems = []
    for site, moved in sequence:
        diff = bundle_diff(intersection_polys(moved, rules), reference)
        if diff:
            problems.append(f"{site.kind} at {site.arcs or site.crossings}: {', '.join(diff)}")
    return problems


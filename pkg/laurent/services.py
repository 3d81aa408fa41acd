"""
Laurent polynomial operations: arithmetic wrappers, the textual syntax and the
decompositions used by the realization synthesizers.
"""

import logging
import re

from exceptions import VknotError
from laurent.models import LaurentPoly

logger = logging.getLogger(__name__)


class LaurentError(VknotError):
    """Base class for polynomial errors."""

    pass


class MalformedPolynomial(LaurentError):
    pass


class NotDivisible(LaurentError):
    pass


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p - q


def poly_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def poly_scale(p: LaurentPoly, k: int) -> LaurentPoly:
    return p * k


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_invert_var(p: LaurentPoly) -> LaurentPoly:
    return p.invert_var()


def poly_substitute_power(p: LaurentPoly, k: int) -> LaurentPoly:
    return p.substitute_power(k)


def poly_eval_one(p: LaurentPoly) -> int:
    return p.eval_one()


def poly_deriv_one(p: LaurentPoly) -> int:
    return p.deriv_one()


def is_reciprocal(p: LaurentPoly) -> bool:
    return p.is_reciprocal()


def format_poly(p: LaurentPoly) -> str:
    return str(p)


# sign, coefficient, optional "*t" with optional exponent
_TERM = re.compile(r"([+-])?(\d+)?(\*?t(?:\^([+-]?\d+))?)?")


def parse_poly(text: str) -> LaurentPoly:
    """
    Parses `c*t^e` terms joined by + and -. Accepts `t`, `-t^-3`, `2t`, `5` and `0`.
    """
    if text is None:
        raise MalformedPolynomial("empty polynomial")
    source = re.sub(r"\s+", "", text)
    if not source:
        raise MalformedPolynomial("empty polynomial")

    terms = {}
    pos = 0
    while pos < len(source):
        match = _TERM.match(source, pos)
        sign, digits, power, exponent = match.groups()
        if match.end() == pos or (digits is None and power is None):
            raise MalformedPolynomial(f"cannot read {text!r} at offset {pos}")
        if pos > 0 and sign is None:
            raise MalformedPolynomial(f"missing operator in {text!r} at offset {pos}")
        if power is not None and power.startswith("*") and digits is None:
            raise MalformedPolynomial(f"dangling '*' in {text!r}")

        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        if power is None:
            e = 0
        else:
            e = int(exponent) if exponent is not None else 1
        terms[e] = terms.get(e, 0) + coeff
        pos = match.end()

    return LaurentPoly(terms)


def writhe_decomposition(f: LaurentPoly) -> dict[int, int]:
    """
    Coefficients c_k (k != 0) with f = sum c_k (t^k - 1). Requires f(1) = 0.
    """
    if f.eval_one() != 0:
        raise NotDivisible(f"{f} does not vanish at t=1")
    return {e: c for e, c in sorted(f.terms.items()) if e != 0}


def reciprocal_decomposition(f: LaurentPoly) -> dict[int, int]:
    """
    Coefficients c_k (k > 0) with f = sum c_k (t^k - 2 + t^-k), read greedily from
    the top exponent down. Requires f reciprocal with f(1) = 0.
    """
    if f.eval_one() != 0 or not f.is_reciprocal():
        raise NotDivisible(f"{f} is not a reciprocal polynomial vanishing at t=1")

    rest = f
    out = {}
    while not rest.is_zero():
        k = rest.max_exponent
        c = rest.coeff(k)
        out[k] = c
        rest = rest - LaurentPoly({k: c, 0: -2 * c, -k: c})
    return dict(sorted(out.items()))


def divide_by_one_minus_inverse(f: LaurentPoly) -> LaurentPoly:
    """Returns g with (1 - t^-1) * g = f."""
    if f.eval_one() != 0:
        raise NotDivisible(f"{f} is not divisible by 1 - t^-1")
    if f.is_zero():
        return LaurentPoly()

    # coefficient of t^e in (1 - t^-1)g is g_e - g_{e+1}, so g_e is a tail sum of f
    g = {}
    running = 0
    for e in range(f.max_exponent, f.min_exponent - 1, -1):
        running += f.coeff(e)
        g[e] = running
    return LaurentPoly(g)

"""
Integer Laurent polynomials in one variable t.

Values are immutable; arithmetic always returns a new canonical polynomial
(no zero coefficient is ever stored).
"""

from collections.abc import Iterable, Mapping
from types import MappingProxyType

import numpy as np


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for exponent, coeff in (terms or {}).items():
            if coeff:
                clean[int(exponent)] = int(coeff)
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents, weights) -> "LaurentPoly":
        """
        Sum of weight * t^exponent over two parallel arrays. Weights are summed
        as Python ints.
        """
        exps = np.asarray(exponents, dtype=np.int64).ravel()
        ws = np.asarray(weights, dtype=object).ravel()
        if exps.size == 0:
            return cls()
        keys, inverse = np.unique(exps, return_inverse=True)
        sums = np.zeros(keys.shape[0], dtype=object)
        np.add.at(sums, inverse, ws)
        return cls({int(k): int(c) for k, c in zip(keys, sums) if c})

    @classmethod
    def sum(cls, polys: Iterable["LaurentPoly"]) -> "LaurentPoly":
        total = {}
        for p in polys:
            for e, c in p._terms.items():
                total[e] = total.get(e, 0) + c
        return cls(total)

    # -- accessors --------------------------------------------------------

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def max_exponent(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def min_exponent(self) -> int | None:
        return min(self._terms) if self._terms else None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        product = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def invert_var(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        # t -> t^k
        merged = {}
        for e, c in self._terms.items():
            merged[e * k] = merged.get(e * k, 0) + c
        return LaurentPoly(merged)

    def eval_one(self) -> int:
        return sum(self._terms.values())

    def deriv_one(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def is_reciprocal(self) -> bool:
        return self == self.invert_var()

    # -- protocol -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "t" if e == 1 else f"t^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            out.append(sign + body)
        text = "".join(out)
        return text[1:] if text.startswith("+") else text


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
T = LaurentPoly.monomial(1)

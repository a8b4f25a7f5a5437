"""
Exact coefficient arithmetic for the algebras.

Every expression in the toolkit carries coefficients in Z[q].  The
``QPoly`` class stores such a polynomial sparsely as a mapping from
exponent to a Python integer, so arithmetic is exact at any size and
never touches floating point.  Integer constants mix freely with
``QPoly`` values in sums, products and comparisons.

The textual form lists exponents in descending order, e.g.
``q^3+q^2-q`` or ``q^2-2*q+1``.  ``QPoly.parse`` reads that form (or
any other integer polynomial in ``q`` that sympy can parse) back.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from math import comb
from tokenize import TokenError
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import PolynomialError

from .errors import DomainError

logger = logging.getLogger(__name__)

_Q = sympy.Symbol("q")

CoefficientLike = Union["QPoly", int]


class QPoly:
    """Sparse univariate polynomial in ``q`` with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[None, int, "QPoly", Mapping[int, int]] = None) -> None:
        data: Dict[int, int] = {}
        if terms is None:
            pass
        elif isinstance(terms, QPoly):
            data = dict(terms._terms)
        elif isinstance(terms, int):
            if terms:
                data[0] = int(terms)
        else:
            for exponent, coefficient in terms.items():
                exponent = int(exponent)
                if exponent < 0:
                    raise DomainError(f"Negative exponent {exponent} in a polynomial in q")
                value = data.get(exponent, 0) + int(coefficient)
                if value:
                    data[exponent] = value
                else:
                    data.pop(exponent, None)
        self._terms = data

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        """Return ``coefficient * q**exponent``."""
        return cls({exponent: coefficient})

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        """Parse the textual form of a polynomial in ``q``.

        Raises:
            DomainError: if the text is not an integer polynomial in q.
        """
        source = text.strip()
        if not source:
            raise DomainError("Empty polynomial")
        try:
            expr = parse_expr(source.replace("^", "**"), local_dict={"q": _Q})
            poly = sympy.Poly(expr, _Q)
        except (sympy.SympifyError, PolynomialError, SyntaxError, TypeError, TokenError) as e:
            raise DomainError(f"Cannot parse polynomial {text!r}: {e}")
        data: Dict[int, int] = {}
        for (exponent,), coefficient in poly.terms():
            if not coefficient.is_Integer:
                raise DomainError(f"Polynomial {text!r} has a non-integer coefficient {coefficient}")
            data[int(exponent)] = int(coefficient)
        return cls(data)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[int, int]:
        """A copy of the exponent to coefficient mapping."""
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, int]]:
        """Iterate over ``(exponent, coefficient)`` in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> int:
        """Return the integer value of a constant polynomial."""
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def evaluate(self, value: int) -> int:
        """Exact value at ``q = value``."""
        result = 0
        for exponent in range(self.degree, -1, -1):
            result = result * value + self._terms.get(exponent, 0)
        return result

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> Optional["QPoly"]:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly(other)
        return None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self._terms.get(0, 0))
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "QPoly":
        return QPoly({k: -v for k, v in self._terms.items()})

    def __pos__(self) -> "QPoly":
        return self

    def __add__(self, other: object) -> "QPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data = dict(self._terms)
        for k, v in rhs._terms.items():
            value = data.get(k, 0) + v
            if value:
                data[k] = value
            else:
                data.pop(k, None)
        result = QPoly()
        result._terms = data
        return result

    __radd__ = __add__

    def __sub__(self, other: object) -> "QPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "QPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "QPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return qpoly_mul(self, rhs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError(f"Polynomial powers need a non-negative integer exponent, got {exponent!r}")
        result = QPoly(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent in sorted(self._terms, reverse=True):
            coefficient = self._terms[exponent]
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if pieces:
                pieces.append(("-" if coefficient < 0 else "+") + body)
            else:
                pieces.append(("-" if coefficient < 0 else "") + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"QPoly('{self}')"

    def is_monomial(self) -> bool:
        """True for ``c*q^k`` with a single stored term."""
        return len(self._terms) == 1


ZERO = QPoly()
ONE = QPoly(1)
Q = QPoly.monomial(1)


def as_qpoly(value: CoefficientLike) -> QPoly:
    """Coerce an integer or polynomial to ``QPoly``."""
    if isinstance(value, QPoly):
        return value
    if isinstance(value, int):
        return QPoly(value)
    raise DomainError(f"Cannot use {value!r} as a coefficient")


def qpoly_mul(a: QPoly, b: QPoly) -> QPoly:
    """Exact product of two polynomials."""
    if not a._terms or not b._terms:
        return QPoly()
    data: Dict[int, int] = {}
    for i, x in a._terms.items():
        for j, y in b._terms.items():
            data[i + j] = data.get(i + j, 0) + x * y
    return QPoly(data)


def qpoly_eval(p: QPoly, v: int) -> int:
    """Exact integer value of ``p`` at ``q = v``."""
    return p.evaluate(v)


@lru_cache(maxsize=None)
def one_minus_q_power(k: int) -> QPoly:
    """Expanded ``(1 - q)**k``."""
    if k < 0:
        raise DomainError(f"(1-q)^k needs k >= 0, got {k}")
    return QPoly({i: (-1) ** i * comb(k, i) for i in range(k + 1)})

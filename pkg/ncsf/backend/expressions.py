"""
Sparse graded expressions shared by NSym, QSym and the Sym oracle.

An expression is a basis tag plus a mapping from index compositions
to ``QPoly`` coefficients.  Zero coefficients are never stored and
terms are always listed in ascending (size, lex) order of their
index, which fixes the text and JSON renderings.

Text form::

    S[2,2,2] + S[2,3,1] + 2*S[3,2,1] - q*S[4,2] + (q^2-2*q+1)*Qp[3,4,1]

Unit constants are omitted, single monomials are written inline and
longer polynomials are parenthesised.  ``parse_expression`` reads the
same form back.
"""

from __future__ import annotations

import logging
import re
from enum import Enum
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Type, TypeVar

from .coefficients import QPoly, as_qpoly
from .compositions import Composition, parse_composition
from .errors import DomainError

logger = logging.getLogger(__name__)


class Basis(str, Enum):
    """Basis tags with their text letters."""

    COMPLETE = "H"
    RIBBON = "R"
    IMMACULATE = "S"
    QPRIME = "Qp"
    MONOMIAL = "M"
    FUNDAMENTAL = "F"
    DUAL_IMMACULATE = "Sd"
    DUAL_QPRIME = "P"
    SYM_COMPLETE = "h"
    SCHUR = "s"

    @property
    def algebra(self) -> str:
        if self in _NSYM:
            return "NSym"
        if self in _QSYM:
            return "QSym"
        return "Sym"

    @classmethod
    def parse(cls, text: str) -> "Basis":
        for member in cls:
            if member.value == text:
                return member
        raise DomainError(f"Unknown basis tag {text!r}; expected one of {', '.join(m.value for m in cls)}")

    def __str__(self) -> str:
        return self.value


_NSYM = frozenset({"H", "R", "S", "Qp"})
_QSYM = frozenset({"M", "F", "Sd", "P"})

NSYM_BASES = (Basis.COMPLETE, Basis.RIBBON, Basis.IMMACULATE, Basis.QPRIME)
QSYM_BASES = (Basis.MONOMIAL, Basis.FUNDAMENTAL, Basis.DUAL_IMMACULATE, Basis.DUAL_QPRIME)
_MIXED_DEGREES = frozenset({Basis.COMPLETE, Basis.SYM_COMPLETE})

E = TypeVar("E", bound="SparseExpression")


def add_term(acc: Dict[Composition, Any], key: Composition, coefficient: Any) -> None:
    """Accumulate ``coefficient`` into ``acc[key]``, dropping zeros."""
    value = acc.get(key, 0) + coefficient
    if value:
        acc[key] = value
    else:
        acc.pop(key, None)


_REGISTRY: Dict[str, Type["SparseExpression"]] = {}


class SparseExpression:
    """Immutable sparse linear combination of basis elements."""

    algebra = ""

    __slots__ = ("basis", "_terms")

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        if cls.algebra:
            _REGISTRY[cls.algebra] = cls

    def __init__(self, basis: Basis, terms: Optional[Mapping[Composition, Any]] = None) -> None:
        if isinstance(basis, str) and not isinstance(basis, Basis):
            basis = Basis.parse(basis)
        if basis.algebra != self.algebra:
            raise DomainError(f"{basis.value} is not a basis of {self.algebra}")
        data: Dict[Composition, QPoly] = {}
        for key, coefficient in (terms or {}).items():
            if not isinstance(key, Composition):
                key = Composition(key)
            self._validate_key(basis, key)
            add_term(data, key, as_qpoly(coefficient))
        self.basis = basis
        self._terms = data
        if self.basis not in _MIXED_DEGREES and not self.is_homogeneous():
            raise DomainError(f"Only h and H expressions may mix degrees; got {self}")

    def _validate_key(self, basis: Basis, key: Composition) -> None:
        pass

    # -- construction ---------------------------------------------------

    @classmethod
    def zero(cls: Type[E], basis: Basis) -> E:
        return cls(basis)

    @classmethod
    def element(cls: Type[E], basis: Basis, index: Any, coefficient: Any = 1) -> E:
        key = index if isinstance(index, Composition) else Composition(index)
        return cls(basis, {key: coefficient})

    def _new(self: E, terms: Mapping[Composition, Any], basis: Optional[Basis] = None) -> E:
        return type(self)(basis or self.basis, terms)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Dict[Composition, QPoly]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Composition, QPoly]]:
        """Terms in canonical (size, lex) order."""
        return sorted(self._terms.items())

    def coefficient(self, index: Any) -> QPoly:
        key = index if isinstance(index, Composition) else Composition(index)
        return self._terms.get(key, QPoly())

    def support(self) -> List[Composition]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Composition]:
        return iter(self.support())

    def is_homogeneous(self) -> bool:
        return len({key.size for key in self._terms}) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Common size of the indices; None when empty or mixed."""
        sizes = {key.size for key in self._terms}
        return sizes.pop() if len(sizes) == 1 else None

    def is_q_free(self) -> bool:
        return all(c.is_constant() for c in self._terms.values())

    # -- arithmetic -----------------------------------------------------

    def _check_compatible(self, other: "SparseExpression") -> None:
        if type(other) is not type(self) or other.basis is not self.basis:
            raise DomainError(f"Cannot combine {self.basis.value} and {getattr(other, 'basis', other)} expressions")

    def __add__(self: E, other: E) -> E:
        self._check_compatible(other)
        data = dict(self._terms)
        for key, coefficient in other._terms.items():
            add_term(data, key, coefficient)
        return self._new(data)

    def __sub__(self: E, other: E) -> E:
        self._check_compatible(other)
        data = dict(self._terms)
        for key, coefficient in other._terms.items():
            add_term(data, key, -coefficient)
        return self._new(data)

    def __neg__(self: E) -> E:
        return self._new({k: -v for k, v in self._terms.items()})

    def scale(self: E, factor: Any) -> E:
        factor = as_qpoly(factor)
        return self._new({k: factor * v for k, v in self._terms.items()})

    def __rmul__(self: E, factor: Any) -> E:
        if isinstance(factor, (int, QPoly)):
            return self.scale(factor)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseExpression):
            return NotImplemented
        return type(other) is type(self) and other.basis is self.basis and other._terms == self._terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self._terms.items())))

    def map_coefficients(self: E, fn: Callable[[QPoly], Any]) -> E:
        return self._new({k: fn(v) for k, v in self._terms.items()})

    def specialize(self: E, value: int) -> E:
        """Evaluate every coefficient at ``q = value``."""
        return self.map_coefficients(lambda c: c.evaluate(value))

    # -- rendering ------------------------------------------------------

    def to_text(self) -> str:
        return format_terms(self.basis.value, self.items())

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "terms": [{"index": list(key), "coef": str(c)} for key, c in self.items()],
        }


def _format_coefficient(coefficient: QPoly) -> Tuple[bool, str]:
    """Return (negative, body) where body already ends in ``*`` unless empty."""
    if coefficient.is_constant():
        value = coefficient.constant_value()
        magnitude = abs(value)
        return value < 0, "" if magnitude == 1 else f"{magnitude}*"
    if coefficient.is_monomial():
        text = str(coefficient)
        negative = text.startswith("-")
        return negative, (text[1:] if negative else text) + "*"
    return False, f"({coefficient})*"


def format_terms(letter: str, items: List[Tuple[Composition, QPoly]]) -> str:
    """Render ``coef*B[a,b,c]`` terms joined by `` + `` and `` - ``."""
    if not items:
        return "0"
    pieces: List[str] = []
    for key, coefficient in items:
        negative, body = _format_coefficient(coefficient)
        term = f"{body}{letter}{key.bracketed()}"
        if not pieces:
            pieces.append(("-" if negative else "") + term)
        else:
            pieces.append((" - " if negative else " + ") + term)
    return "".join(pieces)


_TERM = re.compile(r"(?:(?P<coef>.+)\*)?(?P<basis>[A-Za-z]+)\[(?P<index>[-\d,\s]*)\]")


def _split_terms(text: str) -> List[Tuple[int, str]]:
    """Split at top-level ``+``/``-`` signs, returning (sign, term) pairs."""
    pieces: List[Tuple[int, str]] = []
    depth = 0
    sign = 1
    current = ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise DomainError(f"Unbalanced brackets in {text!r}")
        if depth == 0 and ch in "+-":
            if current.strip():
                pieces.append((sign, current.strip()))
                sign = 1
                current = ""
            if ch == "-":
                sign = -sign
            continue
        current += ch
    if depth != 0:
        raise DomainError(f"Unbalanced brackets in {text!r}")
    if current.strip():
        pieces.append((sign, current.strip()))
    elif pieces or text.strip():
        raise DomainError(f"Dangling sign in {text!r}")
    return pieces


def parse_terms(text: str) -> Tuple[Optional[Basis], Dict[Composition, QPoly]]:
    """Parse the text form into a basis tag and a term mapping."""
    source = text.strip()
    if source == "0":
        return None, {}
    basis: Optional[Basis] = None
    terms: Dict[Composition, QPoly] = {}
    for sign, piece in _split_terms(source):
        match = _TERM.fullmatch(piece)
        if match is None:
            raise DomainError(f"Cannot parse term {piece!r}")
        letter = Basis.parse(match.group("basis"))
        if basis is not None and letter is not basis:
            raise DomainError(f"Mixed bases {basis.value} and {letter.value} in one expression")
        basis = letter
        raw = match.group("coef")
        coefficient = QPoly.parse(raw) if raw is not None else QPoly(1)
        add_term(terms, parse_composition(match.group("index")), coefficient * sign)
    return basis, terms


def parse_expression(text: str, basis: Optional[Basis] = None) -> SparseExpression:
    """Parse an expression in any registered algebra.

    ``basis`` is required for the bare ``0`` and, when given, must match
    the letters used in the text.
    """
    found, terms = parse_terms(text)
    if basis is not None and isinstance(basis, str) and not isinstance(basis, Basis):
        basis = Basis.parse(basis)
    if found is None:
        if basis is None:
            raise DomainError("The zero expression needs an explicit basis")
        found = basis
    elif basis is not None and basis is not found:
        raise DomainError(f"Expected a {basis.value} expression, got {found.value}")
    if found.algebra not in _REGISTRY:
        from . import nsym, qsym, sym_oracle  # noqa: F401
    cls = _REGISTRY.get(found.algebra)
    if cls is None:
        raise DomainError(f"No expression type registered for {found.algebra}")
    return cls(found, terms)

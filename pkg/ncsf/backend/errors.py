"""
Exception types shared by the backend modules.

``DomainError`` covers every malformed input a caller can hand us
(bad composition strings, size mismatches, unknown basis tags,
unparseable polynomials).  The command line maps it to exit status 2
and the HTTP API to a 400 response.  ``InvariantViolation`` signals
that an internal identity the algorithms rely on did not hold; it is
never caught.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class InvariantViolation(RuntimeError):
    """Raised when an internal consistency guarantee is broken."""

"""Exception hierarchy shared by every module and mapped to CLI exit codes."""

from __future__ import annotations


class StabkitError(Exception):
    """Base class for all errors raised by stabkit."""


class ParseError(StabkitError, ValueError):
    """Malformed edge-list or JSON input."""


class InputError(StabkitError, ValueError):
    """A precondition on the input graph or arguments does not hold."""


class DomainError(InputError):
    """An argument lies outside the domain where a quantity is defined."""


class ResourceLimitError(StabkitError, RuntimeError):
    """An exhaustive search would exceed the configured enumeration caps."""

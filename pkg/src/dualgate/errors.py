"""Semantic exception hierarchy. Public functions never raise bare ValueError."""

from __future__ import annotations


class DualgateError(Exception):
    """Base error for this package."""


class DomainError(DualgateError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergenceInfiniteError(DualgateError):
    """The Renyi divergence integral diverges for this (family, order)."""


class MomentDivergedError(DualgateError):
    """The p-value moment in the counting bound is not integrable."""


class RootNotBracketedError(DualgateError):
    """Threshold search failed to bracket a root; the family's CDF evaluations
    are inconsistent (configuration bug)."""


class BudgetExceedsHorizonError(DualgateError, ValueError):
    """Risk budget per step B/N reaches 1; the ceiling formula is undefined."""


class NonpositiveMarginError(DualgateError):
    """A ball certificate was requested for an anchor that is not safe."""


class DimensionMismatchError(DualgateError, ValueError):
    """A parameter vector has the wrong dimension for the environment."""


class ScheduleRangeError(DualgateError, ValueError):
    """Step index outside the finite schedule's range."""


class ConfigError(DualgateError, ValueError):
    """Invalid experiment configuration (unknown keys, bad values)."""


class SchemaMismatchError(DualgateError, ValueError):
    """Two tables do not share a schema and cannot be compared."""

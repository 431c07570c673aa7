"""Semantic exceptions; all inputs violating a documented precondition raise these."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class DocumentError(ValueError):
    """A structured input document is malformed; the message carries the field path."""

"""Shared exception types."""


class DuplicatePointsError(ValueError):
    """A point set contains the same point twice."""


class DegenerateSegmentError(ValueError):
    """A segment or line was given with identical endpoints."""


class NotNonPathError(ValueError):
    """An operation requiring a non-path visibility graph got a path."""


class SizeMismatchError(ValueError):
    """Embedding point count does not match graph vertex count."""


class CoverageViolationError(RuntimeError):
    """Star-line decomposition failed to cover all points (implementation bug)."""


class BoundViolationError(RuntimeError):
    """A dominating-set construction exceeded its guaranteed size bound."""


class SchemaError(ValueError):
    """A serialized document violates its schema.

    ``context`` carries a human-readable position (field path or index).
    """

    def __init__(self, message: str, context: str = ""):
        self.context = context
        super().__init__(f"{context}: {message}" if context else message)

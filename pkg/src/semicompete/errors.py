"""Package-wide exception types."""


class DomainError(ValueError):
    """Raised when an argument lies outside its mathematical domain."""


class UnsupportedIndexError(ValueError):
    """Raised for a derivative multi-index outside the supported set."""


class SchemaError(ValueError):
    """Raised when a file or configuration fails schema validation."""

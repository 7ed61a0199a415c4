"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ComplexFormatError(DomainError):
    """A complex description was rejected; ``facet_index`` points at the culprit."""

    def __init__(self, message, facet_index=None):
        super().__init__(message)
        self.facet_index = facet_index

    def to_dict(self):
        return {"error": str(self), "facet_index": self.facet_index}


class ResourceError(RuntimeError):
    """A configured size ceiling would be exceeded."""

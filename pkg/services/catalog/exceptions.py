"""
Exceptions for the model-function catalog.

Custom exceptions for singular evaluation and function-spec parsing.
"""

from apps.core.exceptions import ValidationError


class CatalogError(ValidationError):
    """Base exception for catalog errors."""

    default_message = "Catalog error."


class SingularPointError(CatalogError):
    """Raised when a Hessian is requested on the pole set."""

    default_message = "Point lies on the pole set."


class SpecSyntaxError(CatalogError):
    """Raised when a function spec does not match the grammar."""

    default_message = "Function spec syntax error."

    def __init__(
        self,
        message: str | None = None,
        position: int | None = None,
        expected: str | None = None,
    ):
        self.position = position
        self.expected = expected
        if message and position is not None:
            message = f"{message} (at char {position})"
        super().__init__(message)


class SpecSemanticError(CatalogError):
    """Raised when a function spec parses but describes an invalid object."""

    default_message = "Function spec is not valid for this setting."


class BidimensionError(CatalogError):
    """Raised when a current's bidegree bookkeeping is invalid."""

    default_message = "Invalid bidimension for this operation."

class CompositionError(ValueError):
    """
    Raised when two morphisms are composed whose codomain and domain do not match.

    Args:
        first: The morphism applied first.
        then: The morphism applied second.
        detail: Optional explanation appended to the message.
    """

    def __init__(self, first, then, detail: str | None = None):
        self.first = first
        self.then = then
        msg = f'Cannot compose {first} then {then}'
        if detail is not None:
            msg = f'{msg}: {detail}'
        super().__init__(msg)


class SizeLimitError(ValueError):
    """
    Raised when a request exceeds one of the enumeration guards.

    Args:
        guard: Name of the guarded quantity (e.g. 'max_size').
        value: The requested value.
        limit: The largest value permitted.
        budget: Whether the limit is the search cap rather than a size guard.
    """

    def __init__(self, guard: str, value, limit, budget: bool = False):
        self.guard = guard
        self.value = value
        self.limit = limit
        self.budget = budget
        super().__init__(f'{guard}={value} exceeds the limit of {limit}')


class InfiniteCategoryError(ValueError):
    pass


class UnknownNameError(KeyError):

    def __str__(self) -> str:
        # KeyError quotes its argument by default
        return str(self.args[0]) if self.args else ''


class PresentationError(ValueError):
    """
    Raised when presentation data (a preorder, monoid table, graph or explicit
    category) is invalid. The failed axiom or field is named in the message.
    """

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        if field is not None:
            message = f'{field}: {message}'
        super().__init__(message)


class ShapeError(ValueError):
    pass


class UnsupportedInstanceError(ValueError):
    pass


class DocumentError(ValueError):
    """
    Raised for schema violations in CLI documents.

    Args:
        message: What is wrong with the document.
        path: The JSON field path of the offending value, e.g. 'morphisms[2].dom'.
    """

    def __init__(self, message: str, path: str | None = None):
        self.path = path
        if path:
            message = f'{path}: {message}'
        super().__init__(message)

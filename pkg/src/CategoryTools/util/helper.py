import os
import warnings

from CategoryTools.util.constants import DEFAULT_MAX_SEARCH, MAX_SEARCH_ENV
from CategoryTools.util.errors import SizeLimitError


def max_search() -> int:
    """
    The search cap for exhaustive enumerations.

    Reads the CATTOOL_MAX_SEARCH environment variable at call time, falling back
    to DEFAULT_MAX_SEARCH when it is unset or not a positive integer.
    """
    value = os.environ.get(MAX_SEARCH_ENV)
    if value is None:
        return DEFAULT_MAX_SEARCH
    try:
        cap = int(value)
    except ValueError:
        warnings.warn(f'Ignoring {MAX_SEARCH_ENV}={value!r}, which is not an integer')
        return DEFAULT_MAX_SEARCH
    if cap <= 0:
        warnings.warn(f'Ignoring non-positive {MAX_SEARCH_ENV}={cap}')
        return DEFAULT_MAX_SEARCH
    return cap


def check_guard(guard: str, value: int, limit: int) -> None:
    if value > limit:
        raise SizeLimitError(guard, value, limit)


def bounded_power(base: int, exponent: int, limit: int) -> int:
    """
    base ** exponent, or limit + 1 once the power exceeds limit.
    """
    if base <= 1 or exponent == 0:
        return min(base**exponent, limit + 1)
    result = 1
    for _ in range(exponent):
        result *= base
        if result > limit:
            return limit + 1
    return result


class SearchBudget():
    """
    Counts the candidates visited by a search and raises a SizeLimitError once
    the cap is exceeded.

    Args:
        guard: Name reported when the budget runs out.
        limit: The cap. Defaults to max_search().
    """

    def __init__(self, guard: str, limit: int | None = None):
        self.guard = guard
        self.limit = max_search() if limit is None else limit
        self.visited = 0

    def spend(self, n: int = 1) -> None:
        self.visited += n
        if self.visited > self.limit:
            raise SizeLimitError(self.guard, self.visited, self.limit, budget=True)


def format_table(table) -> str:
    return '[' + ','.join(str(v) for v in table) + ']'


def jsonable(value):
    """
    Convert witness values into JSON-friendly structures.

    Tuples become lists, sets become sorted lists, numpy arrays become nested
    lists and MSONable objects become their as_dict document. Anything else
    falls back to its repr.
    """
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    if hasattr(value, 'tolist'):
        return value.tolist()
    if hasattr(value, 'as_dict'):
        return value.as_dict()
    return repr(value)

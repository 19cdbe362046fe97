from monty.json import MSONable


class Conat(MSONable):
    """
    A conatural number: Fin(n) for a natural n, or Inf.

    Args:
        n (int): The finite value, or None for Inf.
    """

    def __init__(self, n: int | None = None):
        if n is not None and n < 0:
            raise ValueError(f'Fin({n}) is not a conatural number')
        self.n = n

    @classmethod
    def fin(cls, n: int) -> 'Conat':
        return cls(n)

    @classmethod
    def inf(cls) -> 'Conat':
        return cls(None)

    @property
    def is_inf(self) -> bool:
        return self.n is None

    def succ(self) -> 'Conat':
        return self if self.is_inf else Conat(self.n + 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Conat) and self.n == other.n

    def __hash__(self) -> int:
        return hash(('Conat', self.n))

    def __str__(self) -> str:
        return 'Inf' if self.is_inf else f'Fin({self.n})'

    def __repr__(self) -> str:
        return str(self)


# The point of 1 + Conat
STAR = None


def conat_out(v: Conat):
    """
    The predecessor: Fin(0) -> STAR, Fin(n+1) -> Fin(n), Inf -> Inf.
    """
    if v.is_inf:
        return v
    if v.n == 0:
        return STAR
    return Conat(v.n - 1)


def truncated_conats(k: int):
    """
    Fin(0), ..., Fin(k-1), Inf.
    """
    return [Conat(i) for i in range(k)] + [Conat.inf()]

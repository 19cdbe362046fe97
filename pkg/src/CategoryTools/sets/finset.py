"""
Canonical finite sets and the functions between them.

Elements of a FinSet of size n are the indices 0..n-1. Labels are for display
only. Composition is diagrammatic: compose(f, g) applies f first.
"""
import itertools
from typing import Callable, Iterator, Sequence, Tuple

from monty.json import MSONable

from CategoryTools.util.errors import CompositionError, ShapeError


class FinSet(MSONable):
    """
    A finite set with canonical elements 0..size-1.

    Args:
        size (int): Number of elements.
        labels (Sequence[str], None): Optional display names, one per element.
            Labels must be distinct.
    """

    def __init__(self, size: int, labels: Sequence[str] | None = None):
        if size < 0:
            raise ValueError(f'FinSet size must be non-negative, got {size}')
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != size:
                raise ValueError(
                    f'Expected {size} labels, got {len(labels)}')
            if len(set(labels)) != size:
                raise ValueError(f'Duplicate labels in {labels}')
        self.size = size
        self.labels = labels

    @property
    def elements(self) -> range:
        return range(self.size)

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(i)
        return self.labels[i]

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(range(self.size))

    def __contains__(self, i) -> bool:
        return isinstance(i, int) and 0 <= i < self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinSet):
            return NotImplemented
        return self.size == other.size and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.size, self.labels))

    def __str__(self) -> str:
        if self.labels is None:
            return f'[{self.size}]'
        return '{' + ','.join(self.labels) + '}'

    def __repr__(self) -> str:
        return f'FinSet({self.size}, labels={self.labels})'


class FinFun(MSONable):
    """
    A function between finite sets, given by its value table.

    Args:
        dom (FinSet): Domain.
        cod (FinSet): Codomain.
        table (Sequence[int]): table[i] is the image of element i.
    """

    def __init__(self, dom: FinSet, cod: FinSet, table: Sequence[int]):
        table = tuple(int(v) for v in table)
        if len(table) != dom.size:
            raise ValueError(
                f'Table of length {len(table)} does not match domain size {dom.size}')
        for i, v in enumerate(table):
            if not 0 <= v < cod.size:
                raise ValueError(
                    f'Table entry {i} -> {v} is outside the codomain {cod}')
        self.dom = dom
        self.cod = cod
        self.table = table

    def __call__(self, i: int) -> int:
        return self.table[i]

    def then(self, other: 'FinFun') -> 'FinFun':
        return compose(self, other)

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table) == set(range(self.cod.size))

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def image(self) -> frozenset:
        return frozenset(self.table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinFun):
            return NotImplemented
        return (self.dom == other.dom and self.cod == other.cod
                and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, self.table))

    def __str__(self) -> str:
        return f'{self.dom}->{self.cod}:[' + ','.join(map(str, self.table)) + ']'

    def __repr__(self) -> str:
        return f'FinFun({self.dom!r}, {self.cod!r}, {list(self.table)})'


def identity(X: FinSet) -> FinFun:
    return FinFun(X, X, range(X.size))


def constant(X: FinSet, Y: FinSet, y: int) -> FinFun:
    return FinFun(X, Y, [y] * X.size)


def compose(f: FinFun, g: FinFun) -> FinFun:
    """
    Diagrammatic composition: the result sends i to g(f(i)).

    Raises:
        CompositionError: if the codomain of f is not the domain of g.
    """
    if f.cod != g.dom:
        raise CompositionError(f, g, f'codomain {f.cod} is not domain {g.dom}')
    return FinFun(f.dom, g.cod, [g.table[v] for v in f.table])


def compose_classical(g: FinFun, f: FinFun) -> FinFun:
    """
    Composition in applicative order, g after f.
    """
    return compose(f, g)


def enumerate_functions(X: FinSet, Y: FinSet) -> Iterator[FinFun]:
    """
    All |Y|^|X| functions from X to Y, in lexicographic order of their tables.
    """
    for table in itertools.product(range(Y.size), repeat=X.size):
        yield FinFun(X, Y, table)


def count_functions(X: FinSet, Y: FinSet) -> int:
    return Y.size**X.size


def function_index(f: FinFun) -> int:
    """
    Position of f in enumerate_functions(f.dom, f.cod).
    """
    index = 0
    for v in f.table:
        index = index * f.cod.size + v
    return index


def function_at(X: FinSet, Y: FinSet, index: int) -> FinFun:
    """
    The index-th function of enumerate_functions(X, Y).
    """
    if not 0 <= index < count_functions(X, Y):
        raise IndexError(f'No function with index {index} from {X} to {Y}')
    table = []
    for _ in range(X.size):
        index, v = divmod(index, Y.size)
        table.append(v)
    return FinFun(X, Y, reversed(table))


class ProductCone(MSONable):
    """
    A chosen cartesian product A x B with its projections.

    The pair (i, j) is encoded as the element i * |B| + j.

    Args:
        obj (FinSet): The product object.
        proj_l (FinFun): Left projection onto A.
        proj_r (FinFun): Right projection onto B.
    """

    def __init__(self, obj: FinSet, proj_l: FinFun, proj_r: FinFun):
        if proj_l.dom != obj or proj_r.dom != obj:
            raise ShapeError('Projections must start at the product object')
        self.obj = obj
        self.proj_l = proj_l
        self.proj_r = proj_r

    @property
    def left(self) -> FinSet:
        return self.proj_l.cod

    @property
    def right(self) -> FinSet:
        return self.proj_r.cod

    def encode(self, i: int, j: int) -> int:
        return i * self.right.size + j

    def pair(self, q1: FinFun, q2: FinFun) -> FinFun:
        """
        The mediating map <q1, q2> from the common domain of q1 and q2.
        """
        if q1.dom != q2.dom:
            raise ShapeError(
                f'Pairing needs equal domains, got {q1.dom} and {q2.dom}')
        if q1.cod != self.left or q2.cod != self.right:
            raise ShapeError('Pairing legs must land in the product factors')
        return FinFun(q1.dom, self.obj,
                      [self.encode(a, b) for a, b in zip(q1.table, q2.table)])


class CoproductCocone(MSONable):
    """
    A chosen disjoint union A + B with its injections. A occupies indices
    0..|A|-1 and B is shifted by |A|.

    Args:
        obj (FinSet): The coproduct object.
        inj_l (FinFun): Left injection from A.
        inj_r (FinFun): Right injection from B.
    """

    def __init__(self, obj: FinSet, inj_l: FinFun, inj_r: FinFun):
        if inj_l.cod != obj or inj_r.cod != obj:
            raise ShapeError('Injections must land in the coproduct object')
        self.obj = obj
        self.inj_l = inj_l
        self.inj_r = inj_r

    @property
    def left(self) -> FinSet:
        return self.inj_l.dom

    @property
    def right(self) -> FinSet:
        return self.inj_r.dom

    def copair(self, f: FinFun, g: FinFun) -> FinFun:
        """
        The mediating map [f, g] into the common codomain of f and g.
        """
        if f.cod != g.cod:
            raise ShapeError(
                f'Copairing needs equal codomains, got {f.cod} and {g.cod}')
        if f.dom != self.left or g.dom != self.right:
            raise ShapeError('Copairing legs must start at the coproduct summands')
        return FinFun(self.obj, f.cod, f.table + g.table)


def product(A: FinSet, B: FinSet) -> Tuple[ProductCone, Callable[[FinFun, FinFun], FinFun]]:
    obj = FinSet(A.size * B.size)
    proj_l = FinFun(obj, A, [k // B.size for k in range(obj.size)])
    proj_r = FinFun(obj, B, [k % B.size for k in range(obj.size)])
    cone = ProductCone(obj, proj_l, proj_r)
    return cone, cone.pair


def coproduct(A: FinSet,
              B: FinSet) -> Tuple[CoproductCocone, Callable[[FinFun, FinFun], FinFun]]:
    obj = FinSet(A.size + B.size)
    inj_l = FinFun(A, obj, range(A.size))
    inj_r = FinFun(B, obj, range(A.size, A.size + B.size))
    cocone = CoproductCocone(obj, inj_l, inj_r)
    return cocone, cocone.copair


def product_map(f: FinFun, g: FinFun) -> FinFun:
    """
    f x g between the canonical products, (a, b) -> (f a, g b).
    """
    source, _ = product(f.dom, g.dom)
    target, pair = product(f.cod, g.cod)
    return pair(compose(source.proj_l, f), compose(source.proj_r, g))


def exponential(Y: FinSet, Z: FinSet) -> Tuple[FinSet, FinFun]:
    """
    The set Z^Y of functions Y -> Z, indexed in enumerate_functions order, with
    the evaluation map (Z^Y) x Y -> Z.
    """
    exp = FinSet(count_functions(Y, Z))
    cone, _ = product(exp, Y)
    table = []
    for k in range(exp.size):
        f = function_at(Y, Z, k)
        table.extend(f.table)
    return exp, FinFun(cone.obj, Z, table)


def curry(f: FinFun, X: FinSet, Y: FinSet) -> FinFun:
    """
    The transpose X -> Z^Y of f: X x Y -> Z.
    """
    if f.dom.size != X.size * Y.size:
        raise ShapeError(f'{f} is not defined on {X} x {Y}')
    Z = f.cod
    exp = FinSet(count_functions(Y, Z))
    table = []
    for x in range(X.size):
        row = FinFun(Y, Z, f.table[x * Y.size:(x + 1) * Y.size])
        table.append(function_index(row))
    return FinFun(X, exp, table)


def uncurry(g: FinFun, Y: FinSet, Z: FinSet) -> FinFun:
    """
    The inverse of curry: from g: X -> Z^Y to X x Y -> Z.
    """
    if g.cod.size != count_functions(Y, Z):
        raise ShapeError(f'{g} does not land in the exponential of {Y} and {Z}')
    cone, _ = product(g.dom, Y)
    table = []
    for x in range(g.dom.size):
        table.extend(function_at(Y, Z, g.table[x]).table)
    return FinFun(cone.obj, Z, table)

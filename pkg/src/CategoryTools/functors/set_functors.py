"""
Endofunctors of finite sets acting on explicit FinFun tables, the hom functor
of a FinCat, and the contravariant powerset functor.

A set functor lists the elements of F(X) in a fixed order; F(X) is the FinSet
of that many indices and F(f) is computed by mapping each listed element and
looking up its index.
"""
import itertools
from abc import ABC, abstractmethod
from typing import Dict, Hashable, List

from CategoryTools.categories.fincat import FinCat
from CategoryTools.categories.universe import SetCategory, universe_category
from CategoryTools.functors.functor import ContravariantFunctorData
from CategoryTools.sets.finset import FinFun, FinSet, enumerate_functions
from CategoryTools.util.errors import ShapeError, UnknownNameError
from CategoryTools.util.helper import check_guard
from CategoryTools.util.report import LawReport

DEFAULT_LIST_BOUND = 3


def _as_finset(value) -> FinSet:
    return value if isinstance(value, FinSet) else FinSet(int(value))


class SetFunctor(ABC):
    """
    A functor into finite sets computed from an element listing.

    Args:
        source: The category acted on. Defaults to SetCategory.canonical(2).
    """

    name = 'F'

    def __init__(self, source=None):
        self.source = source if source is not None else SetCategory.canonical(2)
        self._values: Dict[Hashable, List] = {}
        self._index: Dict[Hashable, Dict] = {}
        self._target = None

    @property
    def target(self) -> SetCategory:
        if self._target is None:
            self._target = SetCategory([self.on_object(X) for X in self.source.objects],
                                       name=f'{self.name}(Set)')
        return self._target

    @abstractmethod
    def list_values(self, X) -> List:
        raise NotImplementedError

    @abstractmethod
    def map_value(self, f, value):
        raise NotImplementedError

    def values(self, X) -> List:
        if X not in self._values:
            self._values[X] = list(self.list_values(X))
        return self._values[X]

    def index(self, X, value) -> int:
        if X not in self._index:
            self._index[X] = {v: i for i, v in enumerate(self.values(X))}
        try:
            return self._index[X][value]
        except KeyError:
            raise UnknownNameError(f'{value} is not an element of {self.name}({X})')

    def on_object(self, X) -> FinSet:
        return FinSet(len(self.values(X)))

    def on_morphism(self, f) -> FinFun:
        X, Y = self.source.dom(f), self.source.cod(f)
        return FinFun(self.on_object(X), self.on_object(Y),
                      [self.index(Y, self.map_value(f, v)) for v in self.values(X)])

    def fmap(self, f) -> FinFun:
        return self.on_morphism(f)

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self.name})'


class ListFunctor(SetFunctor):
    """
    Lists of length at most L, ordered by length and then lexicographically.
    Mapping preserves length, so the bounded carrier is closed.
    """

    def __init__(self, L: int = DEFAULT_LIST_BOUND, source=None):
        super().__init__(source)
        self.L = L
        self.name = f'List{L}'

    def list_values(self, X):
        for n in range(self.L + 1):
            yield from itertools.product(range(X.size), repeat=n)

    def map_value(self, f, value):
        return tuple(f(x) for x in value)


class MaybeFunctor(SetFunctor):
    """
    X + {*}. The adjoined point (None) is listed last and is fixed by every map.
    """

    name = 'Maybe'

    def list_values(self, X):
        return list(range(X.size)) + [None]

    def map_value(self, f, value):
        return None if value is None else f(value)


class TimesFunctor(SetFunctor):
    """
    X x A with (x, a) at index x * |A| + a, the encoding of the canonical product.
    """

    def __init__(self, A, source=None):
        super().__init__(source)
        self.A = _as_finset(A)
        self.name = f'(x{self.A.size})'

    def list_values(self, X):
        return list(itertools.product(range(X.size), range(self.A.size)))

    def map_value(self, f, value):
        x, a = value
        return f(x), a


class PlusFunctor(SetFunctor):
    """
    X + A with X first, the encoding of the canonical coproduct.
    """

    def __init__(self, A, source=None):
        super().__init__(source)
        self.A = _as_finset(A)
        self.name = f'(+{self.A.size})'

    def list_values(self, X):
        return [('inl', x) for x in range(X.size)] + [('inr', a) for a in range(self.A.size)]

    def map_value(self, f, value):
        tag, v = value
        return (tag, f(v)) if tag == 'inl' else value


class ReaderFunctor(SetFunctor):
    """
    Functions R -> X, stored as tables and acted on by postcomposition.

    Args:
        R: The fixed argument set.
        order (str): 'lex' lists the tables in enumerate_functions order, so the
            indices agree with exponential() and curry(); 'colex' compares the
            last entry first.
    """

    def __init__(self, R, order: str = 'lex', source=None):
        if order not in ('lex', 'colex'):
            raise UnknownNameError(f'unknown table order {order}')
        super().__init__(source)
        self.R = _as_finset(R)
        self.order = order
        self.name = f'({self.R.size}->)' if order == 'lex' else f'({self.R.size}->)colex'

    def list_values(self, X):
        tables = list(itertools.product(range(X.size), repeat=self.R.size))
        if self.order == 'colex':
            tables.sort(key=lambda t: t[::-1])
        return tables

    def map_value(self, f, value):
        return tuple(f(x) for x in value)


class HomFunctor(SetFunctor):
    """
    Hom(R, -): C -> Set for a FinCat C. A morphism f: X -> Y acts on
    g: R -> X by g then f.
    """

    def __init__(self, C: FinCat, R: str):
        super().__init__(C)
        C.identity(R)
        self.R = R
        self.name = f'Hom({R},-)'

    def list_values(self, X):
        return list(self.source.hom(self.R, X))

    def map_value(self, f, value):
        return self.source.compose(value, f)


def hom_functor(C: FinCat, R: str) -> HomFunctor:
    return HomFunctor(C, R)


def builtin_set_functor(name: str, source=None, **params) -> SetFunctor:
    """
    Look up a built-in set functor.

    Args:
        name: 'list' (param L), 'maybe', 'times' (param A), 'plus' (param A),
            'reader' (params R and order) or 'hom' (params C and R).
        source: The category acted on, for all but 'hom'.

    Raises:
        UnknownNameError: for any other name.
    """
    if name == 'list':
        return ListFunctor(params.get('L', DEFAULT_LIST_BOUND), source=source)
    if name == 'maybe':
        return MaybeFunctor(source)
    if name == 'times':
        return TimesFunctor(params['A'], source=source)
    if name == 'plus':
        return PlusFunctor(params['A'], source=source)
    if name == 'reader':
        return ReaderFunctor(params['R'], order=params.get('order', 'lex'), source=source)
    if name == 'hom':
        return HomFunctor(params['C'], params['R'])
    raise UnknownNameError(f'unknown set functor {name}')


def _subset_mask(subset) -> int:
    return sum(1 << x for x in subset)


def powerset_inverse_image(f: FinFun, B) -> frozenset:
    """
    f^-1(B) = {x | f(x) in B}.

    Raises:
        ShapeError: if B is not a subset of the codomain of f.
    """
    B = frozenset(B)
    outside = [b for b in B if b not in f.cod]
    if outside:
        raise ShapeError(f'{sorted(outside)} are not elements of {f.cod}')
    return frozenset(x for x in f.dom if f(x) in B)


class PowersetFunctor():
    """
    The contravariant powerset functor. Subsets of X are listed by bitmask and
    f: X -> Y is sent to the inverse image map P(Y) -> P(X).
    """

    name = 'P'
    contravariant = True

    def __init__(self, source=None):
        self.source = source if source is not None else SetCategory.canonical(2)

    def values(self, X: FinSet) -> List[frozenset]:
        return [frozenset(x for x in range(X.size) if mask >> x & 1)
                for mask in range(2**X.size)]

    def on_object(self, X: FinSet) -> FinSet:
        return FinSet(2**X.size)

    def on_morphism(self, f: FinFun) -> FinFun:
        return FinFun(self.on_object(f.cod), self.on_object(f.dom),
                      [_subset_mask(powerset_inverse_image(f, B)) for B in self.values(f.cod)])


def check_contravariant(nmax: int = 3) -> LawReport:
    """
    (f then g)^-1 = g^-1 then f^-1 and id^-1 = id for all functions and subsets
    between sets of size at most nmax.
    """
    check_guard('nmax', nmax, 3)
    sets = [FinSet(k) for k in range(nmax + 1)]
    P = PowersetFunctor(SetCategory(sets))
    checked = 0
    for X in sets:
        for B in P.values(X):
            checked += 1
            if powerset_inverse_image(FinFun(X, X, range(X.size)), B) != B:
                return LawReport.failure('inverse image laws', {
                    'law': 'identity',
                    'set': X,
                    'subset': B
                }, checked)
    for X, Y, Z in itertools.product(sets, repeat=3):
        for f in enumerate_functions(X, Y):
            for g in enumerate_functions(Y, Z):
                fg = FinFun(X, Z, [g(f(x)) for x in X])
                for B in P.values(Z):
                    checked += 1
                    left = powerset_inverse_image(fg, B)
                    right = powerset_inverse_image(f, powerset_inverse_image(g, B))
                    if left != right:
                        return LawReport.failure('inverse image laws', {
                            'law': 'composition',
                            'f': f,
                            'g': g,
                            'subset': B
                        }, checked)
    return LawReport.success('inverse image laws', checked, f'sets up to {nmax}')


def powerset_functor_data(n: int = 2) -> ContravariantFunctorData:
    """
    The powerset functor tabulated between finord universes, from sizes up to n
    into sizes up to 2^n.
    """
    check_guard('max_size', n, 2)
    source = universe_category('finord', n)
    target = universe_category('finord', 2**n)
    P = PowersetFunctor(SetCategory([source.object_payload(X) for X in source.objects]))
    obj_map = {X: str(2**int(X)) for X in source.objects}
    mor_map = {}
    for f in source.morphisms:
        image = P.on_morphism(source.payload(f))
        mor_map[f] = target.find_morphism(obj_map[source.cod(f)], obj_map[source.dom(f)], image)
    return ContravariantFunctorData(source, target, obj_map, mor_map, name='P')


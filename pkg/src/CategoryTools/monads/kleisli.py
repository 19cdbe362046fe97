"""
Kleisli triples and monads on finite sets, the law harness for both, the
conversions between the two presentations and the Kleisli category.

A Kleisli arrow f: X -> T Y is a tuple whose x-th entry is the T Y value f(x).
Values of T applied to a carrier FinSet(n) refer to elements by index, so T of
a list S of T X values is T(FinSet(len(S))) with S as the inner list.
"""
import itertools
import logging
from abc import ABC, abstractmethod
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

import numpy as np
from monty.json import MSONable

from CategoryTools.categories.fincat import FinCat
from CategoryTools.sets.finset import FinSet
from CategoryTools.util.constants import MONAD_NESTED_LIMIT
from CategoryTools.util.errors import UnsupportedInstanceError
from CategoryTools.util.helper import SearchBudget, max_search
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Monads')


class InstanceParams(MSONable):
    """
    Sizes and bounds of a monad instance check.

    Args:
        name (str): list, tree, exception, powerset, reader or continuation.
        x (int): Size of X.
        y (int): Size of Y.
        z (int): Size of Z.
        extra (int): |E| for exception, |R| for reader and continuation.
        max_len (int): Longest list value enumerated.
        max_depth (int): Deepest tree value enumerated (a leaf has depth 1).
    """

    def __init__(self,
                 name: str,
                 x: int = 2,
                 y: int = 2,
                 z: int = 2,
                 extra: int | None = None,
                 max_len: int = 3,
                 max_depth: int = 2):
        self.name = name
        self.x = x
        self.y = y
        self.z = z
        if extra is None:
            extra = 1 if name == 'exception' else 2
        self.extra = extra
        self.max_len = max_len
        self.max_depth = max_depth

    @property
    def carriers(self) -> Tuple[FinSet, FinSet, FinSet]:
        return FinSet(self.x), FinSet(self.y), FinSet(self.z)


class KleisliTriple(ABC):
    """
    A Kleisli triple (T, eta, (-)*) on finite sets.

    Subclasses enumerate T X deterministically. Instances whose bind leaves
    every bounded enumeration (list, tree) set closed to False.
    """

    name = 'T'
    closed = True
    nested_limit = MONAD_NESTED_LIMIT

    @abstractmethod
    def values(self, carrier: FinSet) -> List:
        """
        The enumerated values of T(carrier).
        """
        raise NotImplementedError

    @abstractmethod
    def unit(self, x: int, carrier: FinSet):
        raise NotImplementedError

    @abstractmethod
    def bind(self, f: Sequence, t, source: FinSet, target: FinSet):
        """
        f*(t) for the Kleisli arrow f: source -> T target.
        """
        raise NotImplementedError

    def count(self, n: int, limit: int) -> int | None:
        """
        The number of enumerated values of T(FinSet(n)), or limit + 1 when it
        exceeds limit. None when the triple cannot count without enumerating.
        """
        return None

    def arrow_values(self, carrier: FinSet) -> List:
        """
        The values Kleisli arrows may take. Defaults to values().
        """
        return self.values(carrier)

    def arrows(self, source: FinSet, target: FinSet) -> Iterator[Tuple]:
        """
        All Kleisli arrows source -> T target, lexicographic in the value order.
        """
        return itertools.product(self.arrow_values(target), repeat=source.size)

    def unit_arrow(self, carrier: FinSet) -> Tuple:
        return tuple(self.unit(x, carrier) for x in range(carrier.size))

    def show(self, value) -> str:
        return str(value)

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self.name})'


class DerivedKleisliTriple(KleisliTriple):
    """
    The Kleisli triple of a monad: f* = map(f) then mu.
    """

    def __init__(self, monad: 'MonadSpec'):
        self.monad = monad
        self.name = monad.name
        self.closed = monad.closed
        self.nested_limit = monad.nested_limit

    def values(self, carrier):
        return self.monad.values(carrier)

    def arrow_values(self, carrier):
        return self.monad.arrow_values(carrier)

    def count(self, n, limit):
        if self.monad.count is None:
            return None
        return self.monad.count(n, limit)

    def unit(self, x, carrier):
        return self.monad.unit(x, carrier)

    def bind(self, f, t, source, target):
        # map with the index arrow, then flatten with f's values as the inner list
        indices = FinSet(source.size)
        mapped = self.monad.fmap(tuple(range(source.size)), t, source, indices)
        return self.monad.mu(mapped, list(f), target)

    def show(self, value):
        return self.monad.show(value)


class MonadSpec():
    """
    A monad (T, map, eta, mu) on finite sets, given by callables.

    Args:
        name (str): Display name.
        values (Callable): carrier -> enumerated T(carrier).
        unit (Callable): (x, carrier) -> T value.
        fmap (Callable): (f table, t, source, target) -> T(f)(t), f a tuple of
            target indices.
        mu (Callable): (tt, inner, carrier) -> T value, where tt is a value of
            T(FinSet(len(inner))) and inner lists T(carrier) values.
        arrow_values (Callable): carrier -> values used for Kleisli arrows.
        show (Callable): Rendering of values.
        closed (bool): Whether bind stays inside the enumeration.
        nested_limit (int): Size of the sub-carriers used for T^2 and T^3.
        count (Callable): (n, limit) -> number of values of T(FinSet(n)), capped
            at limit + 1, or None. Lets associativity run exhaustively when
            T^3 X is small.
    """

    def __init__(self,
                 name: str,
                 values: Callable,
                 unit: Callable,
                 fmap: Callable,
                 mu: Callable,
                 arrow_values: Callable | None = None,
                 show: Callable = str,
                 closed: bool = True,
                 nested_limit: int = MONAD_NESTED_LIMIT,
                 count: Callable | None = None):
        self.name = name
        self.values = values
        self.unit = unit
        self.fmap = fmap
        self.mu = mu
        self.arrow_values = arrow_values or values
        self.show = show
        self.closed = closed
        self.nested_limit = nested_limit
        self.count = count


def kleisli_to_monad(spec: KleisliTriple) -> MonadSpec:
    """
    mu = (id_{T X})* and map(f) = (f then eta)*.
    """

    def fmap(f, t, source, target):
        return spec.bind(tuple(spec.unit(f[x], target) for x in range(source.size)), t, source,
                         target)

    def mu(tt, inner, carrier):
        return spec.bind(tuple(inner), tt, FinSet(len(inner)), carrier)

    return MonadSpec(spec.name,
                     spec.values,
                     spec.unit,
                     fmap,
                     mu,
                     arrow_values=spec.arrow_values,
                     show=spec.show,
                     closed=spec.closed,
                     nested_limit=spec.nested_limit,
                     count=spec.count)


def monad_to_kleisli(m: MonadSpec) -> KleisliTriple:
    return DerivedKleisliTriple(m)


class _Star():
    """
    Memoized bind of a Kleisli triple.
    """

    def __init__(self, spec: KleisliTriple):
        self.spec = spec
        self._cache: Dict = {}

    def __call__(self, f, t, source, target):
        key = (f, t, source, target)
        if key not in self._cache:
            self._cache[key] = self.spec.bind(f, t, source, target)
        return self._cache[key]


def check_kleisli_laws(spec: KleisliTriple, params: InstanceParams) -> LawReport:
    """
    Law 1: eta* = id on every enumerated t. Law 2: f*(eta(x)) = f(x) for every
    enumerated arrow f and x. Law 3: g*(f*(t)) = (f then g*)*(t) for every
    enumerated f, g and t.
    """
    X, Y, Z = params.carriers
    star = _Star(spec)
    show = spec.show
    children = []

    checked = 0
    eta = spec.unit_arrow(X)
    for t in spec.values(X):
        checked += 1
        result = star(eta, t, X, X)
        if result != t:
            children.append(
                LawReport.failure('law 1', {
                    'law': 1,
                    't': show(t),
                    'result': show(result)
                }, checked, 'eta* is not the identity'))
            break
    else:
        children.append(LawReport.success('law 1', checked))

    checked = 0
    failure = None
    for f in spec.arrows(X, Y):
        for x in range(X.size):
            checked += 1
            result = star(f, spec.unit(x, X), X, Y)
            if result != f[x]:
                failure = LawReport.failure('law 2', {
                    'law': 2,
                    'x': x,
                    'f': [show(v) for v in f],
                    'result': show(result)
                }, checked, f'f*(eta({x})) is not f({x})')
                break
        if failure:
            break
    children.append(failure or LawReport.success('law 2', checked))

    checked = 0
    failure = None
    # one unit of budget per (f, g) pair; the values t are bounded by the guards
    budget = SearchBudget('kleisli law 3 pairs')
    arrows_yz = list(spec.arrows(Y, Z))
    values_x = spec.values(X)
    for f in spec.arrows(X, Y):
        images = [star(f, t, X, Y) for t in values_x]
        for g in arrows_yz:
            budget.spend()
            h = tuple(star(g, f[x], Y, Z) for x in range(X.size))
            for t, ft in zip(values_x, images):
                checked += 1
                left = star(g, ft, Y, Z)
                right = star(h, t, X, Z)
                if left != right:
                    failure = LawReport.failure('law 3', {
                        'law': 3,
                        't': show(t),
                        'f': [show(v) for v in f],
                        'g': [show(v) for v in g],
                        'left': show(left),
                        'right': show(right)
                    }, checked, 'g*(f*(t)) differs from (f then g*)*(t)')
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('law 3', checked))
    report = LawReport.combine('kleisli laws', children, message=spec.name)
    LOGGER.debug(f'{spec.name} kleisli laws: {report.status}')
    return report


def spread(values: Sequence, limit: int) -> List:
    """
    At most limit values, spread evenly over the sequence.
    """
    if len(values) <= limit:
        return list(values)
    picks = np.unique(np.linspace(0, len(values) - 1, limit).round().astype(int))
    return [values[i] for i in picks]


def check_monad_laws(m: MonadSpec, params: InstanceParams,
                     nested_limit: int | None = None) -> LawReport:
    """
    Both unit triangles on every enumerated t in T X, and associativity
    mu_{T X} then mu_X = T(mu_X) then mu_X on T^3 X. T^3 X is enumerated
    exhaustively when the monad counts its values and T^2 X and T^3 X fit the
    search cap; otherwise the check runs over spread sub-carriers of T X and
    T^2 X of at most nested_limit elements. The associativity report says
    which was done.
    """
    X = FinSet(params.x)
    if nested_limit is None:
        nested_limit = m.nested_limit
    show = m.show
    children = []
    values = m.values(X)

    checked = 0
    failure = None
    eta_values = [m.unit(x, X) for x in range(X.size)]
    for t in values:
        checked += 1
        # eta_{T X}(t), with t as the only inner value
        outer = m.mu(m.unit(0, FinSet(1)), [t], X)
        # T(eta_X)(t), with the eta values as the inner list
        inner = m.mu(m.fmap(tuple(range(X.size)), t, X, FinSet(X.size)), eta_values, X)
        for side, result in (('eta then mu', outer), ('T(eta) then mu', inner)):
            if result != t:
                failure = LawReport.failure('unit triangles', {
                    'triangle': side,
                    't': show(t),
                    'result': show(result)
                }, checked)
                break
        if failure:
            break
    children.append(failure or LawReport.success('unit triangles', checked))

    # T^3 X is enumerated outright when it fits the search cap, sampled otherwise
    cap = max_search()
    exhaustive = False
    if m.count is not None:
        n2 = m.count(len(values), cap)
        if n2 is not None and n2 <= cap:
            n3 = m.count(n2, cap)
            exhaustive = n3 is not None and n3 <= cap
    if exhaustive:
        S1 = values
        S2 = m.values(FinSet(len(S1)))
        S3 = m.values(FinSet(len(S2)))
        scope = f'exhaustive over {len(S3)} values of T^3 X'
    else:
        S1 = spread(values, nested_limit)
        S2 = spread(m.values(FinSet(len(S1))), nested_limit)
        S3 = spread(m.values(FinSet(len(S2))), nested_limit**2)
        scope = (f'sampled {len(S3)} values of T^3 over {len(S2)} values of T^2 '
                 f'and {len(S1)} of T X')
    LOGGER.debug(f'{m.name} associativity: {scope}')
    flattened = [m.mu(s, S1, X) for s in S2]
    checked = 0
    failure = None
    for ttt in S3:
        checked += 1
        left = m.mu(m.mu(ttt, S2, FinSet(len(S1))), S1, X)
        right = m.mu(ttt, flattened, X)
        if left != right:
            failure = LawReport.failure('associativity', {
                'ttt': show(ttt),
                'inner': [show(s) for s in S2],
                'left': show(left),
                'right': show(right)
            }, checked, f'mu_T then mu differs from T(mu) then mu ({scope})')
            break
    children.append(failure or LawReport.success('associativity', checked, scope))
    return LawReport.combine('monad laws', children, message=m.name)


def check_conversion_roundtrip(spec: KleisliTriple, params: InstanceParams) -> LawReport:
    """
    The triple recovered from kleisli_to_monad(spec) binds exactly like spec on
    every enumerated arrow and value.
    """
    X, Y, _ = params.carriers
    derived = monad_to_kleisli(kleisli_to_monad(spec))
    checked = 0
    for f in spec.arrows(X, Y):
        for t in spec.values(X):
            checked += 1
            a, b = spec.bind(f, t, X, Y), derived.bind(f, t, X, Y)
            if a != b:
                return LawReport.failure('conversion roundtrip', {
                    'f': [spec.show(v) for v in f],
                    't': spec.show(t),
                    'original': spec.show(a),
                    'roundtrip': spec.show(b)
                }, checked)
    return LawReport.success('conversion roundtrip', checked, spec.name)


def kleisli_category(spec: KleisliTriple, objects: Sequence[FinSet]) -> FinCat:
    """
    The Kleisli category on the given sets: Hom(X, Y) holds every function
    X -> T Y, the identity is eta and "f then g" is x -> g*(f(x)).

    Raises:
        UnsupportedInstanceError: for instances whose bind leaves the
            enumerated values (list, tree).
    """
    if not spec.closed:
        raise UnsupportedInstanceError(
            f'{spec.name} is not finitely closed, so it has no finite Kleisli category')
    objects = list(objects)
    ids = {X: str(X.size) for X in objects}
    morphisms = []
    for X in objects:
        for Y in objects:
            for f in spec.arrows(X, Y):
                name = f'{ids[X]}->{ids[Y]}:[' + ','.join(spec.show(v) for v in f) + ']'
                morphisms.append((name, ids[X], ids[Y], (X, Y, f)))
    names = {p: name for name, _, _, p in morphisms}
    identities = {ids[X]: names[(X, X, spec.unit_arrow(X))] for X in objects}

    def compose_payload(p, q):
        X, Y, f = p
        _, Z, g = q
        return X, Z, tuple(spec.bind(g, f[x], Y, Z) for x in range(X.size))

    LOGGER.info(f'Kleisli category of {spec.name}: {len(morphisms)} morphisms')
    return FinCat.from_payloads([(ids[X], X) for X in objects], morphisms, identities,
                                compose_payload, name=f'Kl({spec.name})')

"""
The six Kleisli triples: list, binary tree, exception, powerset, reader
(families of elements) and continuation.
"""
import itertools
from dataclasses import dataclass
from typing import List

from CategoryTools.monads.kleisli import InstanceParams, KleisliTriple
from CategoryTools.sets.finset import FinFun, FinSet, count_functions, function_at, function_index
from CategoryTools.util.constants import MONAD_GUARDS
from CategoryTools.util.errors import UnknownNameError
from CategoryTools.util.helper import bounded_power, check_guard
from CategoryTools.util.report import LawReport


class ListTriple(KleisliTriple):
    """
    Finite lists. Values of T X are enumerated up to max_len and Kleisli arrows
    return lists of at most max_len - 1 elements; f*(xs) concatenates f(x)
    over xs.
    """

    name = 'list'
    closed = False

    def __init__(self, max_len: int = 3):
        self.max_len = max_len

    def _lists(self, carrier: FinSet, bound: int) -> List:
        return [
            t for n in range(bound + 1) for t in itertools.product(range(carrier.size), repeat=n)
        ]

    def values(self, carrier):
        return self._lists(carrier, self.max_len)

    def arrow_values(self, carrier):
        return self._lists(carrier, max(self.max_len - 1, 1))

    def count(self, n, limit):
        return min(sum(bounded_power(n, k, limit) for k in range(self.max_len + 1)), limit + 1)

    def unit(self, x, carrier):
        return (x, )

    def bind(self, f, t, source, target):
        if not t:
            return ()
        return f[t[0]] + self.bind(f, t[1:], source, target)

    def show(self, value):
        return '[' + ','.join(str(v) for v in value) + ']'


@dataclass(frozen=True)
class Leaf:
    label: int


@dataclass(frozen=True)
class Node:
    left: object
    right: object


def show_tree(t) -> str:
    if isinstance(t, Leaf):
        return f'(leaf {t.label})'
    return f'(node {show_tree(t.left)} {show_tree(t.right)})'


def tree_depth(t) -> int:
    if isinstance(t, Leaf):
        return 1
    return 1 + max(tree_depth(t.left), tree_depth(t.right))


class TreeTriple(KleisliTriple):
    """
    Binary trees with labelled leaves. f* replaces each leaf a by the tree f(a).
    """

    name = 'tree'
    closed = False

    def __init__(self, max_depth: int = 2):
        self.max_depth = max_depth

    def _trees(self, carrier: FinSet, depth: int) -> List:
        if depth <= 0:
            return []
        leaves = [Leaf(a) for a in range(carrier.size)]
        below = self._trees(carrier, depth - 1)
        return leaves + [Node(l, r) for l, r in itertools.product(below, repeat=2)]

    def values(self, carrier):
        return self._trees(carrier, self.max_depth)

    def count(self, n, limit):
        total = 0
        for _ in range(self.max_depth):
            total = min(n + total * total, limit + 1)
        return total

    def unit(self, x, carrier):
        return Leaf(x)

    def bind(self, f, t, source, target):
        if isinstance(t, Leaf):
            return f[t.label]
        return Node(self.bind(f, t.left, source, target), self.bind(f, t.right, source, target))

    def show(self, value):
        return show_tree(value)


class ExceptionTriple(KleisliTriple):
    """
    X + E. Adjoined E values pass through bind unchanged.
    """

    name = 'exception'

    def __init__(self, E: int = 1):
        self.E = E

    def values(self, carrier):
        return [('inl', x) for x in range(carrier.size)] + [('inr', e) for e in range(self.E)]

    def count(self, n, limit):
        return min(n + self.E, limit + 1)

    def unit(self, x, carrier):
        return ('inl', x)

    def bind(self, f, t, source, target):
        tag, v = t
        return f[v] if tag == 'inl' else t

    def show(self, value):
        return f'{value[0]} {value[1]}'


class PowersetTriple(KleisliTriple):
    """
    Subsets, listed by bitmask. f*(A) is the union of f(a) over A.
    """

    name = 'powerset'

    def values(self, carrier):
        return [
            frozenset(x for x in range(carrier.size) if mask >> x & 1)
            for mask in range(2**carrier.size)
        ]

    def count(self, n, limit):
        return bounded_power(2, n, limit)

    def unit(self, x, carrier):
        return frozenset((x, ))

    def bind(self, f, t, source, target):
        return frozenset().union(*(f[a] for a in t))

    def show(self, value):
        return '{' + ','.join(str(v) for v in sorted(value)) + '}'


class ReaderTriple(KleisliTriple):
    """
    Families of elements indexed by R, stored as tuples of length |R|.
    f*(g) is r -> f(g(r))(r).
    """

    name = 'reader'

    def __init__(self, R: int = 2):
        self.R = R

    def values(self, carrier):
        return list(itertools.product(range(carrier.size), repeat=self.R))

    def count(self, n, limit):
        return bounded_power(n, self.R, limit)

    def unit(self, x, carrier):
        return (x, ) * self.R

    def bind(self, f, t, source, target):
        return tuple(f[t[r]][r] for r in range(self.R))

    def show(self, value):
        return '(' + ','.join(str(v) for v in value) + ')'


class ContinuationTriple(KleisliTriple):
    """
    (X -> R) -> R, stored as the table of results on the functions X -> R in
    enumerate_functions order. eta(x) = j -> j(x) and
    f*(t) = j -> t(x -> f(x)(j)).
    """

    name = 'continuation'
    nested_limit = 2

    def __init__(self, R: int = 2):
        self.R = FinSet(R)

    def values(self, carrier):
        return list(itertools.product(range(self.R.size), repeat=count_functions(carrier, self.R)))

    def count(self, n, limit):
        return bounded_power(self.R.size, bounded_power(self.R.size, n, limit), limit)

    def unit(self, x, carrier):
        return tuple(
            function_at(carrier, self.R, k)(x) for k in range(count_functions(carrier, self.R)))

    def bind(self, f, t, source, target):
        results = []
        for k in range(count_functions(target, self.R)):
            j = FinFun(source, self.R, [f[x][k] for x in range(source.size)])
            results.append(t[function_index(j)])
        return tuple(results)

    def show(self, value):
        return '<' + ','.join(str(v) for v in value) + '>'


INSTANCES = ('list', 'tree', 'exception', 'powerset', 'reader', 'continuation')


def instance(params: InstanceParams) -> KleisliTriple:
    """
    The Kleisli triple named by params, after checking its size guards.

    Raises:
        UnknownNameError: for an unknown instance name.
        SizeLimitError: if a size exceeds the instance's guard.
    """
    if params.name not in MONAD_GUARDS:
        raise UnknownNameError(f'unknown monad instance {params.name}')
    guards = MONAD_GUARDS[params.name]
    for axis in ('x', 'y', 'z'):
        check_guard(axis, getattr(params, axis), guards['carrier'])
    if 'extra' in guards:
        check_guard('extra', params.extra, guards['extra'])
    if 'max_len' in guards:
        check_guard('max_len', params.max_len, guards['max_len'])
    if 'max_depth' in guards:
        check_guard('max_depth', params.max_depth, guards['max_depth'])

    if params.name == 'list':
        return ListTriple(params.max_len)
    if params.name == 'tree':
        return TreeTriple(params.max_depth)
    if params.name == 'exception':
        return ExceptionTriple(params.extra)
    if params.name == 'powerset':
        return PowersetTriple()
    if params.name == 'reader':
        return ReaderTriple(params.extra)
    return ContinuationTriple(params.extra)


def check_list_bind_distributes(params: InstanceParams) -> LawReport:
    """
    g*(s + t) = g*(s) + g*(t) for every enumerated arrow g and lists s, t whose
    concatenation stays within max_len.
    """
    spec = ListTriple(params.max_len)
    Y, Z = FinSet(params.y), FinSet(params.z)
    values = spec.values(Y)
    checked = 0
    for g in spec.arrows(Y, Z):
        for s in values:
            for t in values:
                if len(s) + len(t) > params.max_len:
                    continue
                checked += 1
                left = spec.bind(g, s + t, Y, Z)
                right = spec.bind(g, s, Y, Z) + spec.bind(g, t, Y, Z)
                if left != right:
                    return LawReport.failure('bind distributes over concatenation', {
                        'g': [spec.show(v) for v in g],
                        's': spec.show(s),
                        't': spec.show(t)
                    }, checked)
    return LawReport.success('bind distributes over concatenation', checked)

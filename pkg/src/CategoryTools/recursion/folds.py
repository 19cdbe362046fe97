"""
The fold library: list functions as catamorphisms, evaluators of the
expression datatype, and the fusion demonstrations.
"""
from typing import Callable, Dict, Sequence

from CategoryTools.recursion.algebra import AlgebraSpec, FusionReport, fusion_check, run
from CategoryTools.recursion.polynomial import (PolyF, enumerate_terms, exp_functor,
                                                list_functor, list_term)
from CategoryTools.sets.finset import FinSet, enumerate_functions
from CategoryTools.util.constants import EXP_INT_RANGE
from CategoryTools.util.errors import UnknownNameError
from CategoryTools.util.helper import check_guard
from CategoryTools.util.report import LawReport

FOLDS = ('sum', 'product', 'and', 'or', 'append', 'length', 'reverse', 'map', 'filter',
         'bin2int', 'bin2int2_pair')
EXP_FOLDS = ('eval', 'size', 'depth', 'mod3')

DEFAULT_LABELS = tuple(range(EXP_INT_RANGE[0], EXP_INT_RANGE[1] + 1))
INT_TEST_VALUES = DEFAULT_LABELS


def _as_function(arg) -> Callable:
    if arg is None:
        raise ValueError('this fold needs a function argument')
    if callable(arg):
        return arg
    if isinstance(arg, dict):
        return arg.__getitem__
    table = list(arg)
    return table.__getitem__


def _list_values(labels: Sequence, max_len: int):
    values = [()]
    frontier = [()]
    for _ in range(max_len):
        frontier = [(a, ) + xs for a in labels for xs in frontier]
        values.extend(frontier)
    return values


def fold_library(name: str, labels: Sequence | None = None, arg=None) -> AlgebraSpec:
    """
    The list algebra whose catamorphism is the named function.

    Args:
        name (str): One of FOLDS.
        labels (Sequence): The element set A of the lists. Defaults to the
            integers of EXP_INT_RANGE, and to (0, 1) for the binary decoders.
        arg: The list appended by 'append', the function of 'map' or the
            predicate of 'filter', as a callable, a dict or a table.

    Raises:
        UnknownNameError: for an unknown fold.
    """
    if name in ('bin2int', 'bin2int2_pair') and labels is None:
        labels = (0, 1)
    if labels is None:
        labels = DEFAULT_LABELS
    F = list_functor(labels)
    lists = _list_values(labels[:2], 2)

    def fold(nil, step, carrier=None, test_values=None, export=None):

        def structure(value):
            tag, v = value
            return nil if tag == 'inl' else step(*v)

        return AlgebraSpec(F, structure, carrier, name=name, export=export,
                           test_values=test_values)

    if name == 'sum':
        return fold(0, lambda a, n: a + n, test_values=INT_TEST_VALUES)
    if name == 'product':
        return fold(1, lambda a, n: a * n, test_values=INT_TEST_VALUES)
    if name == 'and':
        return fold(True, lambda a, b: bool(a) and b, carrier=[False, True])
    if name == 'or':
        return fold(False, lambda a, b: bool(a) or b, carrier=[False, True])
    if name == 'length':
        return fold(0, lambda a, n: n + 1, test_values=range(0, 8))
    if name == 'append':
        suffix = tuple(arg or ())
        return fold(suffix, lambda a, xs: (a, ) + xs, test_values=lists)
    if name == 'reverse':
        return fold((), lambda a, xs: xs + (a, ), test_values=lists)
    if name == 'map':
        g = _as_function(arg)
        return fold((), lambda a, xs: (g(a), ) + xs, test_values=lists)
    if name == 'filter':
        p = _as_function(arg)
        return fold((), lambda a, xs: (a, ) + xs if p(a) else xs, test_values=lists)
    if name == 'bin2int':
        # big-endian: the head digit is weighted by 2 ** len(tail)
        return fold((0, 1),
                    lambda a, vw: (a * vw[1] + vw[0], 2 * vw[1]),
                    test_values=[(v, 2**n) for n in range(4) for v in range(2**n)],
                    export=lambda vw: vw[0])
    if name == 'bin2int2_pair':
        # little-endian, paired with the length of the list
        return fold((0, 0),
                    lambda a, vn: (a + 2 * vn[0], vn[1] + 1),
                    test_values=[(v, n) for n in range(4) for v in range(2**n)],
                    export=lambda vn: vn[0])
    raise UnknownNameError(f'unknown fold {name}')


def apply_fold(name: str, xs: Sequence, labels: Sequence | None = None, arg=None):
    """
    Run a fold of the library on a Python list.
    """
    if labels is None and name not in ('bin2int', 'bin2int2_pair'):
        labels = tuple(sorted(set(DEFAULT_LABELS) | set(xs)))
    alg = fold_library(name, labels, arg)
    return run(alg.functor, alg, list_term(xs))


def exp_algebra(name: str, int_range=EXP_INT_RANGE) -> AlgebraSpec:
    """
    Algebras over Int n | Plus e e | Squared e: integer evaluation, size,
    depth, and evaluation modulo 3 on the finite carrier {0, 1, 2}.
    """
    F = exp_functor(int_range)

    def cases(on_int, on_plus, on_squared):

        def structure(value):
            tag, v = value
            if tag == 'inl':
                return on_int(v)
            tag, v = v
            return on_plus(*v) if tag == 'inl' else on_squared(v)

        return structure

    if name == 'eval':
        return AlgebraSpec(F, cases(lambda n: n, lambda a, b: a + b, lambda a: a * a),
                           name=name, test_values=INT_TEST_VALUES)
    if name == 'size':
        return AlgebraSpec(F, cases(lambda n: 1, lambda a, b: a + b + 1, lambda a: a + 1),
                           name=name, test_values=range(1, 8))
    if name == 'depth':
        return AlgebraSpec(F, cases(lambda n: 1, lambda a, b: max(a, b) + 1, lambda a: a + 1),
                           name=name, test_values=range(1, 8))
    if name == 'mod3':
        return AlgebraSpec(F,
                           cases(lambda n: n % 3, lambda a, b: (a + b) % 3, lambda a: a * a % 3),
                           carrier=[0, 1, 2],
                           name=name)
    raise UnknownNameError(f'unknown expression fold {name}')


def _sum_fusion(f: Callable):
    labels = tuple(range(-2, 3))
    phi = fold_library('sum', labels)
    psi = AlgebraSpec(phi.functor,
                      lambda value: 1 if value[0] == 'inl' else value[1][0] + value[1][1],
                      name='fold (+) 1',
                      test_values=INT_TEST_VALUES)
    # lists of length at most 5
    return phi.functor, phi, psi, f, 6


def _map_fusion():
    labels = (0, 1)
    f, g = (1, 0), (1, 1)
    phi = fold_library('map', labels, f)
    psi = fold_library('map', labels, [g[f[a]] for a in labels])

    def map_g(xs):
        return tuple(g[a] for a in xs)

    # lists of length at most 4
    return phi.functor, phi, psi, map_g, 5


FUSION_DEMOS: Dict[str, Callable] = {
    'sum-plus-one': lambda: _sum_fusion(lambda n: n + 1),
    'sum-plus-two': lambda: _sum_fusion(lambda n: n + 2),
    'map-map': _map_fusion,
}


def fusion_demo(name: str) -> FusionReport:
    """
    Run one of FUSION_DEMOS: sum-plus-one checks (+1) after sum = fold (+) 1,
    map-map checks map g after map f = map (f then g), and sum-plus-two is an
    instance whose premise fails.
    """
    if name not in FUSION_DEMOS:
        raise UnknownNameError(f'unknown fusion demo {name}')
    F, phi, psi, f, depth = FUSION_DEMOS[name]()
    return fusion_check(F, phi, psi, f, depth, name=name)


def check_fold_identities(size: int = 2,
                          max_len: int = 4,
                          folds: Callable[..., AlgebraSpec] = fold_library) -> LawReport:
    """
    map g after map f = map (f then g), and filter p after map f =
    map f after filter (f then p), for all maps f, g and predicates p on a set
    of the given size and all lists up to max_len.

    The map and filter algebras come from folds, which takes the arguments of
    fold_library.
    """
    check_guard('size', size, 2)
    check_guard('max_len', max_len, 4)
    labels = tuple(range(size))
    A = FinSet(size)
    F: PolyF = list_functor(labels)
    terms = enumerate_terms(F, max_len + 1)
    maps = list(enumerate_functions(A, A))
    predicates = list(enumerate_functions(A, FinSet(2)))

    def apply(name, arg, xs):
        alg = folds(name, labels, arg)
        return run(F, alg, list_term(xs))

    def as_list(t):
        return tuple(run(F, fold_library('append', labels), t))

    children = []
    checked = 0
    failure = None
    for f in maps:
        for g in maps:
            for t in terms:
                checked += 1
                xs = as_list(t)
                left = apply('map', g, apply('map', f, xs))
                right = apply('map', f.then(g), xs)
                if left != right:
                    failure = LawReport.failure('map composition', {
                        'f': f,
                        'g': g,
                        'list': list(xs)
                    }, checked)
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('map composition', checked))

    checked = 0
    failure = None
    for f in maps:
        for p in predicates:
            for t in terms:
                checked += 1
                xs = as_list(t)
                left = apply('filter', p, apply('map', f, xs))
                right = apply('map', f, apply('filter', f.then(p), xs))
                if left != right:
                    failure = LawReport.failure('filter after map', {
                        'f': f,
                        'p': p,
                        'list': list(xs)
                    }, checked)
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('filter after map', checked))
    return LawReport.combine('fold identities', children)


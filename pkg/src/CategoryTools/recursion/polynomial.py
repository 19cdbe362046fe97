"""
Polynomial endofunctors on finite sets and their initial algebras as finite
constructor trees.

A value of F(X) is encoded structurally: a Const position holds one of its
labels, an Id position holds an element of X, a Sum value is a pair
('inl', v) or ('inr', v) and a Prod value is a pair (v1, v2). Param positions
are the A argument of a two-argument functor F(A, X).
"""
import itertools
import re
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

from CategoryTools.sets.finset import FinSet
from CategoryTools.util.constants import EXP_INT_RANGE
from CategoryTools.util.errors import ShapeError, UnknownNameError
from CategoryTools.util.helper import SearchBudget


class PolyF():
    """
    Base class of the functor grammar Const | Id | Sum | Prod | Param.
    """


@dataclass(frozen=True)
class Const(PolyF):
    labels: Tuple

    def __post_init__(self):
        object.__setattr__(self, 'labels', tuple(self.labels))

    def __str__(self) -> str:
        return '{' + ','.join(str(a) for a in self.labels) + '}'


@dataclass(frozen=True)
class Id(PolyF):

    def __str__(self) -> str:
        return 'X'


@dataclass(frozen=True)
class Param(PolyF):

    def __str__(self) -> str:
        return 'A'


@dataclass(frozen=True)
class Sum(PolyF):
    left: PolyF
    right: PolyF

    def __str__(self) -> str:
        return f'({self.left} + {self.right})'


@dataclass(frozen=True)
class Prod(PolyF):
    left: PolyF
    right: PolyF

    def __str__(self) -> str:
        return f'({self.left} x {self.right})'


def _elements(X) -> List:
    if isinstance(X, FinSet):
        return list(X.elements)
    return list(X)


def polyF_apply(F: PolyF, X, A=None) -> List:
    """
    The values of F(X), in structural order: inl values before inr values and
    products in lexicographic order.

    Args:
        F (PolyF): The functor.
        X (FinSet, Iterable): The argument set.
        A (FinSet, Iterable): The parameter set, for functors with Param positions.
    """
    xs = _elements(X)
    if isinstance(F, Const):
        return list(F.labels)
    if isinstance(F, Id):
        return xs
    if isinstance(F, Param):
        if A is None:
            raise ShapeError('functor has a parameter position but no parameter set was given')
        return _elements(A)
    if isinstance(F, Sum):
        return ([('inl', v) for v in polyF_apply(F.left, xs, A)] +
                [('inr', v) for v in polyF_apply(F.right, xs, A)])
    if isinstance(F, Prod):
        return list(itertools.product(polyF_apply(F.left, xs, A), polyF_apply(F.right, xs, A)))
    raise ShapeError(f'{F!r} is not a polynomial functor')


def polyF_map(F: PolyF, f: Callable, g: Callable | None = None) -> Callable:
    """
    The action of F on a function: f at Id positions, g at Param positions
    (identity by default) and the identity at Const positions.

    Raises:
        ShapeError: when the returned map meets a value of the wrong shape.
    """

    def mapped(value):
        return _map(F, f, g, value)

    return mapped


def _map(F: PolyF, f: Callable, g: Callable | None, value):
    if isinstance(F, Const):
        if value not in F.labels:
            raise ShapeError(f'{value!r} is not a label of {F}')
        return value
    if isinstance(F, Id):
        return f(value)
    if isinstance(F, Param):
        return value if g is None else g(value)
    if isinstance(F, Sum):
        if not (isinstance(value, tuple) and len(value) == 2 and value[0] in ('inl', 'inr')):
            raise ShapeError(f'{value!r} is not a tagged value of {F}')
        tag, v = value
        return (tag, _map(F.left if tag == 'inl' else F.right, f, g, v))
    if isinstance(F, Prod):
        if not (isinstance(value, tuple) and len(value) == 2):
            raise ShapeError(f'{value!r} is not a pair of {F}')
        return (_map(F.left, f, g, value[0]), _map(F.right, f, g, value[1]))
    raise ShapeError(f'{F!r} is not a polynomial functor')


def children(F: PolyF, value) -> List:
    """
    The entries of a value of F(X) at Id positions, left to right.
    """
    found = []
    polyF_map(F, lambda x: found.append(x) or x)(value)
    return found


def const_sizes(F: PolyF) -> List[int]:
    if isinstance(F, Const):
        return [len(F.labels)]
    if isinstance(F, (Sum, Prod)):
        return const_sizes(F.left) + const_sizes(F.right)
    return []


@dataclass(frozen=True)
class Term():
    """
    An element of the initial algebra: one constructor layer whose Id
    positions hold Terms.
    """
    layer: object

    def __str__(self) -> str:
        return f'in({_show_layer(self.layer)})'


def _show_layer(value) -> str:
    if isinstance(value, tuple) and len(value) == 2 and value[0] in ('inl', 'inr'):
        return f'{value[0]} {_show_layer(value[1])}'
    if isinstance(value, tuple):
        return '(' + ', '.join(_show_layer(v) for v in value) + ')'
    return str(value)


def in_(layer) -> Term:
    return Term(layer)


def out(t: Term):
    return t.layer


def term_depth(F: PolyF, t: Term) -> int:
    """
    A term without subterms has depth 1.
    """
    return 1 + max((term_depth(F, s) for s in children(F, t.layer)), default=0)


def enumerate_terms(F: PolyF,
                    depth: int,
                    A=None,
                    budget: SearchBudget | None = None) -> List[Term]:
    """
    All terms of depth at most depth, every term listed after its subterms.

    Raises:
        SizeLimitError: if more terms than the search cap would be built.
    """
    if budget is None:
        budget = SearchBudget('terms')
    terms: List[Term] = []
    for _ in range(depth):
        layers = polyF_apply(F, terms, A)
        budget.spend(len(layers))
        known = set(terms)
        terms = terms + [Term(s) for s in layers if Term(s) not in known]
    return terms


# Standard functors. Labels of the one-point set are '*'.
ONE = ('*', )


def _labels(A) -> Tuple:
    if isinstance(A, int):
        return tuple(range(A))
    if isinstance(A, FinSet):
        return tuple(A.elements)
    return tuple(A)


def nat_functor() -> PolyF:
    """
    Maybe = 1 + X, whose initial algebra is (N, zero, succ).
    """
    return Sum(Const(ONE), Id())


def list_functor(A) -> PolyF:
    """
    1 + A x X, whose initial algebra is the lists over A.
    """
    return Sum(Const(ONE), Prod(Const(_labels(A)), Id()))


def btree_functor(A) -> PolyF:
    """
    A + X x X, whose initial algebra is the leaf-labelled binary trees.
    """
    return Sum(Const(_labels(A)), Prod(Id(), Id()))


def bool_functor() -> PolyF:
    return Sum(Const(ONE), Const(ONE))


def coproduct_functor(X, Y) -> PolyF:
    return Sum(Const(_labels(X)), Const(_labels(Y)))


def exp_functor(int_range: Tuple[int, int] = EXP_INT_RANGE) -> PolyF:
    """
    Z + X x X + X for the expressions Int n | Plus e e | Squared e, with the
    integer labels bounded by int_range (inclusive).
    """
    lo, hi = int_range
    return Sum(Const(tuple(range(lo, hi + 1))), Sum(Prod(Id(), Id()), Id()))


def list_bifunctor() -> PolyF:
    return Sum(Const(ONE), Prod(Param(), Id()))


def btree_bifunctor() -> PolyF:
    return Sum(Param(), Prod(Id(), Id()))


def functor_by_name(name: str, labels=2) -> PolyF:
    """
    One of nat, bool, list, btree, exp. labels sizes the A of list and btree.
    """
    if name == 'nat':
        return nat_functor()
    if name == 'bool':
        return bool_functor()
    if name == 'list':
        return list_functor(labels)
    if name == 'btree':
        return btree_functor(labels)
    if name == 'exp':
        return exp_functor()
    raise UnknownNameError(f'unknown datatype {name}')


# Constructors and readers for the standard datatypes

ZERO = Term(('inl', '*'))
NIL = Term(('inl', '*'))


def succ(t: Term) -> Term:
    return Term(('inr', t))


def nat_term(n: int) -> Term:
    t = ZERO
    for _ in range(n):
        t = succ(t)
    return t


def term_to_nat(t: Term) -> int:
    n = 0
    while t.layer[0] == 'inr':
        n += 1
        t = t.layer[1]
    return n


def cons(a, t: Term) -> Term:
    return Term(('inr', (a, t)))


def list_term(xs: Sequence) -> Term:
    t = NIL
    for a in reversed(list(xs)):
        t = cons(a, t)
    return t


def term_to_list(t: Term) -> List:
    xs = []
    while t.layer[0] == 'inr':
        a, t = t.layer[1]
        xs.append(a)
    return xs


def leaf(a) -> Term:
    return Term(('inl', a))


def node(left: Term, right: Term) -> Term:
    return Term(('inr', (left, right)))


def int_(n: int) -> Term:
    return Term(('inl', n))


def plus(e1: Term, e2: Term) -> Term:
    return Term(('inr', ('inl', (e1, e2))))


def squared(e: Term) -> Term:
    return Term(('inr', ('inr', e)))


TRUE = Term(('inl', '*'))
FALSE = Term(('inr', '*'))

# Term literals: lists "[1,0,1]", naturals "s(s(z))" or decimal, and the
# s-expressions "(plus (int 3) (squared (int 2)))" and "(node (leaf 0) (leaf 1))".
DATATYPES = ('list', 'nat', 'exp', 'btree')

_TOKEN = re.compile(r'\s*(\(|\)|-?\d+|[a-z]+)')


def _tokens(text: str) -> List[str]:
    text = text.strip()
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ValueError(f'unexpected character {text[pos]!r} at {pos} in {text!r}')
        tokens.append(match.group(1))
        pos = match.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def _sexpr(tokens: List[str], pos: int = 0):
    if tokens[pos] != '(':
        return tokens[pos], pos + 1
    items = []
    pos += 1
    while pos < len(tokens) and tokens[pos] != ')':
        item, pos = _sexpr(tokens, pos)
        items.append(item)
    if pos >= len(tokens):
        raise ValueError('unbalanced parentheses')
    return items, pos + 1


def _build(tree, datatype: str) -> Term:
    if not isinstance(tree, list) or not tree:
        raise ValueError(f'expected a constructor application, got {tree!r}')
    head, args = tree[0], tree[1:]
    if datatype == 'exp':
        if head == 'int' and len(args) == 1:
            return int_(int(args[0]))
        if head == 'plus' and len(args) == 2:
            return plus(_build(args[0], datatype), _build(args[1], datatype))
        if head == 'squared' and len(args) == 1:
            return squared(_build(args[0], datatype))
    if datatype == 'btree':
        if head == 'leaf' and len(args) == 1:
            return leaf(int(args[0]))
        if head == 'node' and len(args) == 2:
            return node(_build(args[0], datatype), _build(args[1], datatype))
    raise ValueError(f'unknown {datatype} constructor {head} with {len(args)} arguments')


def parse_term(datatype: str, text: str) -> Term:
    """
    Parse a term literal of the given datatype.

    Raises:
        UnknownNameError: for an unknown datatype.
        ValueError: for a malformed literal.
    """
    text = text.strip()
    if datatype == 'list':
        if not (text.startswith('[') and text.endswith(']')):
            raise ValueError(f'list literal must be bracketed: {text!r}')
        body = text[1:-1].strip()
        return list_term([int(v) for v in body.split(',')] if body else [])
    if datatype == 'nat':
        if text.isdigit():
            return nat_term(int(text))
        n = 0
        while text.startswith('s(') and text.endswith(')'):
            text = text[2:-1].strip()
            n += 1
        if text != 'z':
            raise ValueError(f'malformed natural literal, stopped at {text!r}')
        return nat_term(n)
    if datatype in ('exp', 'btree'):
        tokens = _tokens(text)
        if not tokens:
            raise ValueError('empty literal')
        tree, pos = _sexpr(tokens)
        if pos != len(tokens):
            raise ValueError(f'trailing input after {datatype} literal')
        return _build(tree, datatype)
    raise UnknownNameError(f'unknown datatype {datatype}')


def render_term(datatype: str, t: Term) -> str:
    if datatype == 'list':
        return '[' + ','.join(str(a) for a in term_to_list(t)) + ']'
    if datatype == 'nat':
        return str(term_to_nat(t))
    if datatype == 'exp':
        tag, v = t.layer
        if tag == 'inl':
            return f'(int {v})'
        tag, v = v
        if tag == 'inl':
            return f'(plus {render_term(datatype, v[0])} {render_term(datatype, v[1])})'
        return f'(squared {render_term(datatype, v)})'
    if datatype == 'btree':
        tag, v = t.layer
        if tag == 'inl':
            return f'(leaf {v})'
        return f'(node {render_term(datatype, v[0])} {render_term(datatype, v[1])})'
    raise UnknownNameError(f'unknown datatype {datatype}')


from CategoryTools.categories import (
    PreorderPresentation, FiniteMonoidPresentation, GraphPresentation, HomEnumeration,
    from_preorder, from_monoid, from_graph, opposite, product_category, interval_category,
    discrete_category, cyclic_monoid, boolean_and_monoid, boolean_or_monoid, trivial_monoid,
    monoid_by_name, check_laws)
from CategoryTools.util.errors import (InfiniteCategoryError, PresentationError,
                                       UnknownNameError)

import itertools

import pytest


@pytest.fixture
def diamond():
    return PreorderPresentation(['bot', 'a', 'b', 'top'],
                                [['bot', 'a'], ['bot', 'b'], ['a', 'top'], ['b', 'top']])


@pytest.fixture
def square():
    return GraphPresentation(['a', 'b', 'c', 'd'], [('f', 'a', 'b'), ('g', 'a', 'c'),
                                                    ('h', 'b', 'd'), ('k', 'c', 'd')])


def test_preorder(diamond):
    assert diamond.le('bot', 'top')
    assert not diamond.le('a', 'b')
    assert diamond.is_antisymmetric()

    P = from_preorder(diamond)
    assert P.num_morphisms == 9
    assert P.hom('bot', 'top') == ('bot<=top', )
    assert P.compose('bot<=a', 'a<=top') == 'bot<=top'
    assert check_laws(P).passed
    for x, y in itertools.product(diamond.elements, repeat=2):
        assert P.hom_count(x, y) in (0, 1)
        if x != y:
            assert not (P.hom_count(x, y) and P.hom_count(y, x))


def test_preorder_chains():
    for n in range(1, 6):
        elements = [str(i) for i in range(n)]
        P = from_preorder(PreorderPresentation(elements, list(zip(elements, elements[1:]))))
        assert P.num_morphisms == n * (n + 1) // 2
        assert check_laws(P).passed


def test_preorder_not_antisymmetric():
    P = PreorderPresentation(['a', 'b'], [['a', 'b'], ['b', 'a']])
    assert not P.is_antisymmetric()
    C = from_preorder(P)
    assert C.hom_count('a', 'b') == C.hom_count('b', 'a') == 1
    assert check_laws(C).passed

    with pytest.raises(PresentationError):
        PreorderPresentation(['a'], [['a', 'c']])
    with pytest.raises(PresentationError):
        PreorderPresentation(['a', 'a'], [])


def test_monoids():
    for M in [cyclic_monoid(n) for n in range(1, 7)] + [
            boolean_and_monoid(), boolean_or_monoid(), trivial_monoid()]:
        B = from_monoid(M)
        assert B.objects == ['*']
        assert B.num_morphisms == M.size
        assert B.identity('*') == str(M.unit)
        assert check_laws(B).passed

    Z3 = from_monoid(cyclic_monoid(3))
    assert Z3.compose('1', '2') == '0'
    assert Z3.compose('2', '2') == '1'
    assert monoid_by_name('Z/4') == cyclic_monoid(4)
    assert monoid_by_name('and') == boolean_and_monoid()
    with pytest.raises(UnknownNameError):
        monoid_by_name('free')


def test_monoid_composite_is_reversed_product():
    # "f then g" is g * f, which matters for a non-commutative monoid
    elements = ['e', 'a', 'b']
    table = {}
    for x in elements:
        table[('e', x)] = x
        table[(x, 'e')] = x
    # left-zero semigroup on {a, b} with a unit adjoined
    for x in ('a', 'b'):
        for y in ('a', 'b'):
            table[(x, y)] = x
    M = FiniteMonoidPresentation(elements, 'e', table, name='L')
    B = from_monoid(M)
    assert M.multiply('a', 'b') == 'a'
    assert B.compose('a', 'b') == 'b'
    assert check_laws(B).passed


def test_monoid_validation():
    with pytest.raises(PresentationError, match='associativity'):
        FiniteMonoidPresentation(['e', 'a', 'b'], 'e',
                                 [['e', 'a', 'b'], ['a', 'b', 'b'], ['b', 'a', 'a']])
    with pytest.raises(PresentationError, match='unit law'):
        FiniteMonoidPresentation([0, 1], 1, [[0, 1], [1, 0]])
    with pytest.raises(PresentationError, match='not an element'):
        FiniteMonoidPresentation([0, 1], 0, [[0, 1], [1, 2]])
    with pytest.raises(PresentationError, match='unit'):
        FiniteMonoidPresentation([0, 1], 5, [[0, 1], [1, 0]])


def test_graph(square):
    G = from_graph(square)
    assert G.num_morphisms == 10
    assert G.hom('a', 'd') == ('f·h', 'g·k')
    assert G.compose('f', 'h') == 'f·h'
    assert G.compose('id_a', 'g') == 'g'
    assert G.hom('d', 'a') == ()
    assert check_laws(G).passed


def test_graph_parallel_edges():
    G = from_graph(GraphPresentation(['x', 'y'], [('u', 'x', 'y'), ('v', 'x', 'y')]))
    assert G.hom('x', 'y') == ('u', 'v')
    assert check_laws(G).passed


def test_cyclic_graph():
    cycle = GraphPresentation(['x', 'y'], [('f', 'x', 'y'), ('g', 'y', 'x')])
    with pytest.raises(InfiniteCategoryError, match='infinite'):
        from_graph(cycle)

    bounded = from_graph(GraphPresentation(cycle.nodes, cycle.edges, max_path_len=2))
    assert isinstance(bounded, HomEnumeration)
    assert bounded.hom('x', 'x') == ('id_x', 'f·g')
    with pytest.raises(InfiniteCategoryError):
        check_laws(bounded)

    with pytest.raises(InfiniteCategoryError):
        from_graph(GraphPresentation(['x'], [('loop', 'x', 'x')]))


def test_acyclic_graph_ignores_truncation(square):
    with pytest.warns(UserWarning):
        G = from_graph(GraphPresentation(square.nodes, square.edges, max_path_len=1))
    assert G.num_morphisms == 10


def test_graph_errors():
    with pytest.raises(PresentationError):
        GraphPresentation(['x'], [('f', 'x', 'y')])
    with pytest.raises(PresentationError):
        GraphPresentation(['x', 'y'], [('f', 'x', 'y'), ('f', 'y', 'x')])
    with pytest.raises(PresentationError):
        GraphPresentation(['x'], [], max_path_len=-1)


def test_opposite(diamond):
    C = interval_category()
    op = opposite(C)
    assert op.hom('y', 'x') == ('f^op', )
    assert op.compose('f^op', 'id_x^op') == 'f^op'
    assert check_laws(op).passed
    assert opposite(op) == C

    P = from_preorder(diamond)
    assert opposite(opposite(P)) == P


def test_product_category():
    C = interval_category()
    CC = product_category(C, C)
    assert len(CC.objects) == 4
    assert CC.num_morphisms == 9
    assert CC.hom('(x,x)', '(y,y)') == ('(f,f)', )
    assert CC.compose('(id_x,f)', '(f,id_y)') == '(f,f)'
    assert check_laws(CC).passed

    D = discrete_category(['p', 'q'])
    assert check_laws(product_category(D, C)).passed

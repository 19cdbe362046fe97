from CategoryTools.sets import (FinSet, FinFun, identity, constant, compose, compose_classical,
                                enumerate_functions, count_functions, function_index,
                                function_at, product, coproduct, product_map, exponential,
                                curry, uncurry)
from CategoryTools.util.errors import CompositionError, ShapeError

import itertools

import pytest


@pytest.fixture
def sets():
    return [FinSet(n) for n in range(4)]


def test_finset():
    X = FinSet(3, ['a', 'b', 'c'])
    assert list(X) == [0, 1, 2]
    assert X.label(1) == 'b'
    assert 2 in X
    assert 3 not in X
    assert str(X) == '{a,b,c}'
    assert X != FinSet(3)
    assert FinSet.from_dict(X.as_dict()) == X

    with pytest.raises(ValueError):
        FinSet(-1)
    with pytest.raises(ValueError):
        FinSet(2, ['a', 'a'])
    with pytest.raises(ValueError):
        FinSet(2, ['a'])


def test_finfun():
    f = FinFun(FinSet(3), FinSet(2), [0, 1, 1])
    assert f(2) == 1
    assert not f.is_injective()
    assert f.is_surjective()
    assert f.image() == frozenset({0, 1})
    assert str(f) == '[3]->[2]:[0,1,1]'

    with pytest.raises(ValueError):
        FinFun(FinSet(2), FinSet(2), [0])
    with pytest.raises(ValueError):
        FinFun(FinSet(2), FinSet(2), [0, 2])


def test_compose():
    f = FinFun(FinSet(2), FinSet(3), [2, 0])
    g = FinFun(FinSet(3), FinSet(2), [1, 1, 0])
    assert compose(f, g).table == (0, 1)
    assert f.then(g) == compose(f, g)
    assert compose_classical(g, f) == compose(f, g)
    assert compose(identity(FinSet(2)), f) == f
    assert compose(f, identity(FinSet(3))) == f

    with pytest.raises(CompositionError):
        compose(f, f)


def test_composition_is_associative(sets):
    X, Y = sets[2], sets[3]
    fs = list(enumerate_functions(X, Y))
    gs = list(enumerate_functions(Y, X))
    for f in fs[:10]:
        for g in gs[:10]:
            for h in fs[:10]:
                assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_enumerate_functions(sets):
    for X, Y in itertools.product(sets, repeat=2):
        fs = list(enumerate_functions(X, Y))
        assert len(fs) == count_functions(X, Y) == Y.size**X.size
        assert len(set(fs)) == len(fs)
        for k, f in enumerate(fs):
            assert function_index(f) == k
            assert function_at(X, Y, k) == f

    # the empty function is the only map out of 0
    assert count_functions(FinSet(0), FinSet(0)) == 1
    assert count_functions(FinSet(2), FinSet(0)) == 0
    with pytest.raises(IndexError):
        function_at(FinSet(1), FinSet(2), 2)


def test_constant():
    assert constant(FinSet(3), FinSet(2), 1).table == (1, 1, 1)


def test_product(sets):
    A, B = sets[2], sets[3]
    cone, pair = product(A, B)
    assert cone.obj.size == 6
    assert cone.proj_l.table == (0, 0, 0, 1, 1, 1)
    assert cone.proj_r.table == (0, 1, 2, 0, 1, 2)

    # the mediating map is the unique one commuting with both projections
    Q = FinSet(2)
    for q1 in enumerate_functions(Q, A):
        for q2 in enumerate_functions(Q, B):
            m = pair(q1, q2)
            assert compose(m, cone.proj_l) == q1
            assert compose(m, cone.proj_r) == q2
            others = [h for h in enumerate_functions(Q, cone.obj)
                      if compose(h, cone.proj_l) == q1 and compose(h, cone.proj_r) == q2]
            assert others == [m]

    with pytest.raises(ShapeError):
        pair(FinFun(FinSet(1), A, [0]), FinFun(FinSet(2), B, [0, 0]))


def test_coproduct(sets):
    A, B = sets[1], sets[2]
    cocone, copair = coproduct(A, B)
    assert cocone.obj.size == 3
    assert cocone.inj_r.table == (1, 2)
    Q = FinSet(2)
    for f in enumerate_functions(A, Q):
        for g in enumerate_functions(B, Q):
            m = copair(f, g)
            assert compose(cocone.inj_l, m) == f
            assert compose(cocone.inj_r, m) == g


def test_product_map():
    f = FinFun(FinSet(2), FinSet(2), [1, 0])
    g = FinFun(FinSet(1), FinSet(3), [2])
    fg = product_map(f, g)
    assert fg.dom.size == 2
    assert fg.cod.size == 6
    # (0, 0) -> (1, 2) and (1, 0) -> (0, 2)
    assert fg.table == (5, 2)


def test_curry_uncurry(sets):
    for X, Y, Z in itertools.product(sets[:3], repeat=3):
        cone, _ = product(X, Y)
        exp, ev = exponential(Y, Z)
        for f in enumerate_functions(cone.obj, Z):
            g = curry(f, X, Y)
            assert g.cod == exp
            assert uncurry(g, Y, Z) == f
            # ev after (curry f x id) is f
            assert compose(product_map(g, identity(Y)), ev) == f

    with pytest.raises(ShapeError):
        curry(FinFun(FinSet(3), FinSet(2), [0, 0, 0]), FinSet(2), FinSet(2))

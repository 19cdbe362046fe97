from CategoryTools.categories import SetCategory, UNIVERSE_KINDS, check_laws, universe_category
from CategoryTools.categories.universe import posets_on
from CategoryTools.sets import FinSet, FinFun
from CategoryTools.util.errors import SizeLimitError, UnknownNameError

import pytest


def test_finset_universe():
    C = universe_category('finset', 2)
    assert C.name == 'finset2'
    assert C.objects == ['{}', '{a}', '{b}', '{a,b}']
    # sum of |B|^|A| over the sizes 0, 1, 1, 2
    assert C.num_morphisms == 18
    assert C.hom('{}', '{a,b}') == ('{}->{a,b}:[]', )
    assert C.hom('{a}', '{b}') == ('{a}->{b}:[0]', )
    assert C.hom_count('{a,b}', '{a,b}') == 4
    assert C.identity('{a,b}') == '{a,b}->{a,b}:[0,1]'
    assert C.payload('{a,b}->{a}:[0,0]') == FinFun(FinSet(2, 'ab'), FinSet(1, 'a'), [0, 0])
    assert C.object_payload('{b}') == FinSet(1, ['b'])
    assert C.compose('{a}->{a,b}:[1]', '{a,b}->{b}:[0,0]') == '{a}->{b}:[0]'
    assert check_laws(C).passed


def test_finord_universe():
    C = universe_category('finord', 2)
    assert C.objects == ['0', '1', '2']
    assert C.num_morphisms == 11
    assert check_laws(C).passed


def test_finptset_universe():
    C = universe_category('finptset', 2)
    assert C.objects == ['*1', '*2']
    # maps fixing the base point 0
    assert C.num_morphisms == 5
    assert C.hom('*2', '*2') == ('*2->*2:[0,0]', '*2->*2:[0,1]')
    assert check_laws(C).passed


def test_finpos_universe():
    assert [len(list(posets_on(k))) for k in range(4)] == [1, 1, 3, 19]

    C = universe_category('finpos', 2)
    assert C.objects == ['0[]', '1[]', '2[]', '2[0<1]', '2[1<0]']
    # the two constants and the isomorphism swapping 0 and 1
    assert C.hom_count('2[0<1]', '2[1<0]') == 3
    assert C.hom_count('2[]', '2[0<1]') == 4
    assert C.hom_count('2[0<1]', '2[]') == 2
    assert check_laws(C).passed


def test_universe_guards():
    assert UNIVERSE_KINDS == ('finset', 'finord', 'finptset', 'finpos')
    with pytest.raises(SizeLimitError) as excinfo:
        universe_category('finpos', 4)
    assert excinfo.value.limit == 3
    with pytest.raises(UnknownNameError):
        universe_category('grp', 2)
    with pytest.raises(ValueError):
        universe_category('finset', -1)

    # the empty universe still has the empty set
    C = universe_category('finord', 0)
    assert C.objects == ['0']
    assert C.num_morphisms == 1


def test_set_category():
    S = SetCategory.canonical(2)
    assert S.name == 'Set2'
    assert [X.size for X in S.objects] == [0, 1, 2]
    assert S.hom_count(FinSet(2), FinSet(3)) == 9
    assert len(S.hom(FinSet(3), FinSet(2))) == 8
    assert len(S.isomorphisms(FinSet(3), FinSet(3))) == 6
    assert S.isomorphisms(FinSet(2), FinSet(3)) == ()
    assert len(S.morphisms) == 11
    assert len(list(S.composable_pairs())) == sum(
        len(S.hom(X, Y)) * len(S.hom(Y, Z)) for X in S.objects for Y in S.objects
        for Z in S.objects)

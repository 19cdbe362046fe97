from CategoryTools.categories import (cyclic_monoid, from_monoid, interval_category,
                                      universe_category)
from CategoryTools.functors import (check_action_laws, check_equivariance_characterization,
                                    check_functor, check_monoid_functor_correspondence,
                                    check_naturality, classify_functor, constant_functor,
                                    enumerate_functors, finset_to_finord, forget_poset,
                                    identity_functor, is_equivariant, monoid_homomorphisms,
                                    action_of)
from CategoryTools.sets import FinFun, FinSet

import pytest


@pytest.fixture(scope='module')
def Z2():
    return cyclic_monoid(2)


@pytest.fixture(scope='module')
def actions(Z2):
    # functors B(Z2) -> finord2 are the Z2-sets of size at most 2
    return list(enumerate_functors(from_monoid(Z2), universe_category('finord', 2)))


def test_identity_is_an_isomorphism():
    c = classify_functor(identity_functor(interval_category()))
    assert all(c.flags().values())
    assert c.witnesses == {}


def test_finset_to_finord_is_an_equivalence():
    U = finset_to_finord(2)
    c = classify_functor(U)
    assert c.is_equivalence
    assert not c.is_isomorphism
    assert c.full and c.faithful and c.essentially_surjective
    assert not c.injective_on_objects
    assert c.witnesses == {'not_injective_on_objects': ['{a}', '{b}']}

    G = c.quasi_inverse
    assert G.obj_map == {'0': '{}', '1': '{a}', '2': '{a,b}'}
    assert check_functor(G).passed
    assert check_naturality(c.unit).passed
    assert check_naturality(c.counit).passed
    assert c.counit.component('1') == '1->1:[0]'
    assert c.unit.component('{b}') == '{b}->{a}:[0]'


def test_forgetting_the_order_is_not_full():
    c = classify_functor(forget_poset(2))
    assert not c.is_equivalence
    assert not c.full
    assert c.faithful
    assert c.essentially_surjective
    assert c.quasi_inverse is None
    assert set(c.witnesses) == {'not_injective_on_objects', 'not_full'}
    # a chain only maps monotonically to an antichain by a constant
    assert c.witnesses['not_full'] == {
        'source': '2[0<1]',
        'target': '2[]',
        'morphism': '2->2:[0,1]'
    }


def test_constant_functor_is_not_essentially_surjective():
    C = interval_category()
    c = classify_functor(constant_functor(C, C, 'x'))
    assert not c.essentially_surjective
    assert not c.full
    assert c.witnesses['not_essentially_surjective'] == 'y'
    assert c.witnesses['not_surjective_on_objects'] == 'y'
    assert c.witnesses['not_injective_on_objects'] == ['x', 'y']
    assert c.witnesses['not_full'] == {'source': 'y', 'target': 'x', 'morphism': 'id_x'}


def test_action_laws(Z2, actions):
    assert len(actions) == 4
    for F in actions:
        assert check_action_laws(Z2, F).passed

    swap = actions[-1]
    assert swap.on_morphism('1') == '2->2:[1,0]'
    carrier, act = action_of(swap)
    assert carrier == FinSet(2)
    assert act[(1, 0)] == 1
    assert act[(0, 1)] == 1


def test_equivariance(Z2, actions):
    on_two = [F for F in actions if F.on_object('*') == '2']
    trivial, swap = sorted(on_two, key=lambda F: F.on_morphism('1'))
    assert trivial.on_morphism('1') == '2->2:[0,1]'
    assert swap.on_morphism('1') == '2->2:[1,0]'

    assert is_equivariant(Z2, swap, swap, FinFun(FinSet(2), FinSet(2), [1, 0]))
    assert not is_equivariant(Z2, swap, trivial, FinFun(FinSet(2), FinSet(2), [0, 1]))
    assert is_equivariant(Z2, swap, trivial, FinFun(FinSet(2), FinSet(2), [0, 0]))
    for F in on_two:
        for G in on_two:
            assert check_equivariance_characterization(Z2, F, G).passed


def test_functors_are_homomorphisms(Z2):
    assert monoid_homomorphisms(Z2, cyclic_monoid(4)) == [{0: 0, 1: 0}, {0: 0, 1: 2}]
    report = check_monoid_functor_correspondence(Z2, cyclic_monoid(4))
    assert report.passed
    assert report.message == '2 homomorphisms Z2 -> Z4'
    assert check_monoid_functor_correspondence(cyclic_monoid(3), cyclic_monoid(3)).checked == 3

from CategoryTools.categories import boolean_and_monoid, cyclic_monoid, trivial_monoid
from CategoryTools.monoids import (BoundedMonoidCategory, ForgetfulFunctor, FreeFunctor,
                                   FreeMonoid, MonoidHom, bounded_homs, canonical_injection,
                                   check_free_forget_adjunction, check_free_functor_laws,
                                   check_free_monoid_laws, check_free_triangles, check_uvp,
                                   free_forget_adjunction, free_map, is_bounded_hom, lift, words)
from CategoryTools.categories.universe import SetCategory
from CategoryTools.sets import FinFun, FinSet
from CategoryTools.util.errors import CompositionError, SizeLimitError

import pytest


@pytest.fixture
def Z3():
    return cyclic_monoid(3)


def test_words():
    assert words(2, 2) == [(), (0, ), (1, ), (0, 0), (0, 1), (1, 0), (1, 1)]
    assert words(0, 3) == [()]
    assert len(words(2, 3)) == 15
    inject = canonical_injection(2)
    assert inject(1) == (1, )
    with pytest.raises(ValueError):
        inject(2)


def test_free_monoid():
    F = FreeMonoid(2)
    assert F.name == 'Free2'
    assert F.unit == ()
    assert F.multiply((0, ), (1, 1)) == (0, 1, 1)
    assert len(F.elements) == 15
    assert F == FreeMonoid(2, max_len=1)
    assert F != FreeMonoid(1)

    report = check_free_monoid_laws(2, 2)
    assert report.passed
    assert report.checked == 7 + 7**3


def test_lift(Z3):
    phi = lift({0: 1, 1: 2}, Z3)
    assert phi(()) == 0
    assert phi((0, )) == 1
    assert phi((0, 1, 1)) == 2
    # lifting into a free monoid is substitution
    assert lift(lambda x: (x, x), FreeMonoid(2))((0, 1)) == (0, 0, 1, 1)


def test_bounded_homs(Z3):
    table = {w: lift([1, 2], Z3)(w) for w in words(2, 2)}
    assert is_bounded_hom(table, Z3)
    table[(0, 1)] = 1
    assert not is_bounded_hom(table, Z3)
    table[()] = 1
    assert not is_bounded_hom(table, Z3)

    assert [h[(0, )] for h in bounded_homs(1, Z3, 2)] == [0, 1, 2]
    assert len(list(bounded_homs(2, Z3, 3))) == 9


def test_uvp(Z3):
    report = check_uvp(2, Z3, [1, 2])
    assert report.passed
    assert report.message == 'Free2 -> Z3'
    uniqueness = report.child('uniqueness')
    assert uniqueness.checked == 9
    assert uniqueness.message == '1 of 9 bounded homomorphisms extends f'

    assert check_uvp(1, boolean_and_monoid(), {0: 0}, 2).passed
    assert check_uvp(2, trivial_monoid(), lambda x: trivial_monoid().unit).passed


def test_uvp_guards(Z3):
    with pytest.raises(SizeLimitError):
        check_uvp(3, Z3, [0, 0, 0])
    with pytest.raises(SizeLimitError):
        check_uvp(2, Z3, [0, 0], max_len=4)
    with pytest.raises(SizeLimitError) as excinfo:
        check_uvp(1, cyclic_monoid(4), [1])
    assert excinfo.value.guard == 'monoid size'


def test_free_functor_laws():
    assert free_map(FinFun(FinSet(2), FinSet(3), [2, 0]))((0, 1, 0)) == (2, 0, 2)
    report = check_free_functor_laws(2, 2)
    assert report.passed
    assert [c.checked for c in report.children] == [10, 200]


def test_monoid_category(Z3):
    Z2 = cyclic_monoid(2)
    D = BoundedMonoidCategory([Z2, Z3])
    assert D.name == 'Mon(Z2,Z3)'
    assert D.hom_count(Z3, Z3) == 3
    assert D.hom_count(Z2, Z3) == 1
    assert len(D.morphisms) == 7
    assert D.hom_count(FreeMonoid(2), Z3) == 9

    negate = MonoidHom(Z3, Z3, {0: 0, 1: 2, 2: 1})
    assert negate in D.hom(Z3, Z3)
    assert D.compose(D.identity(Z3), negate) == negate
    assert D.compose(negate, negate) == D.identity(Z3)

    f = MonoidHom(FreeMonoid(2), Z3, {0: 1, 1: 2})
    assert f((0, 1, 1)) == 2
    fg = D.compose(f, negate)
    assert fg.images == {0: 2, 1: 1}
    assert str(fg) == 'Free2->Z3:[2,1]'
    with pytest.raises(CompositionError):
        D.compose(negate, f)


def test_free_and_forget(Z3):
    C = SetCategory.canonical(2)
    D = BoundedMonoidCategory([Z3])
    Free, U = FreeFunctor(C, D), ForgetfulFunctor(D, C)
    swap = FinFun(FinSet(2), FinSet(2), [1, 0])
    assert Free.on_object(FinSet(2)) == FreeMonoid(2)
    assert Free.on_morphism(swap)((0, 0, 1)) == (1, 1, 0)
    assert U.on_object(Z3) == FinSet(3)
    assert U.on_morphism(MonoidHom(Z3, Z3, {0: 0, 1: 2, 2: 1})).table == (0, 2, 1)


def test_free_forget_adjunction(Z3):
    adj = free_forget_adjunction(2, [Z3])
    g = MonoidHom(FreeMonoid(2), Z3, {0: 2, 1: 1})
    f = adj.alpha(FinSet(2), Z3, g)
    assert f.table == (2, 1)
    assert adj.alpha_inv(FinSet(2), Z3, f) == g

    report = check_free_forget_adjunction(2, [Z3])
    assert report.passed
    assert report.message == 'words up to length 3'

    triangles = check_free_triangles(2, [Z3, boolean_and_monoid()])
    assert triangles.passed
    assert [c.checked for c in triangles.children] == [20, 5]

    with pytest.raises(SizeLimitError):
        free_forget_adjunction(3, [Z3])

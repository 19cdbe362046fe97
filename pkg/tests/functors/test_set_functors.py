from CategoryTools.categories import interval_category, universe_category
from CategoryTools.functors import (ContravariantFunctorData, ListFunctor, MaybeFunctor,
                                    PlusFunctor, PowersetFunctor, ReaderFunctor, TimesFunctor,
                                    builtin_set_functor, check_contravariant,
                                    check_contravariant_functor, check_functor, hom_functor,
                                    powerset_functor_data, powerset_inverse_image)
from CategoryTools.sets import FinFun, FinSet
from CategoryTools.util.errors import ShapeError, SizeLimitError, UnknownNameError
from CategoryTools.util.report import LawReport

import pytest

swap = FinFun(FinSet(2), FinSet(2), [1, 0])


@pytest.mark.parametrize('F', [
    ListFunctor(2), MaybeFunctor(), TimesFunctor(2), PlusFunctor(1), ReaderFunctor(2),
    ReaderFunctor(1, order='colex')
])
def test_functor_laws(F):
    report = check_functor(F)
    assert report.passed, report.to_text()


def test_list_functor():
    L = ListFunctor(2)
    assert L.values(FinSet(2)) == [(), (0, ), (1, ), (0, 0), (0, 1), (1, 0), (1, 1)]
    assert L.on_object(FinSet(2)).size == 7
    assert L.fmap(swap).table == (0, 2, 1, 6, 5, 4, 3)


def test_table_encodings():
    collapse = FinFun(FinSet(2), FinSet(1), [0, 0])
    assert MaybeFunctor().on_morphism(collapse).table == (0, 0, 1)
    assert TimesFunctor(2).on_morphism(swap).table == (2, 3, 0, 1)
    assert PlusFunctor(1).on_morphism(swap).table == (1, 0, 2)
    assert ReaderFunctor(2).on_morphism(FinFun(FinSet(1), FinSet(2), [1])).table == (3, )


def test_hom_functor():
    C = interval_category()
    H = hom_functor(C, 'x')
    assert H.values('y') == ['f']
    assert H.on_morphism('f').table == (0, )
    assert check_functor(H).passed

    Hy = builtin_set_functor('hom', C=C, R='y')
    assert Hy.on_object('x').size == 0
    assert check_functor(Hy).passed

    with pytest.raises(UnknownNameError):
        H.index('x', 'f')
    with pytest.raises(UnknownNameError):
        builtin_set_functor('free')
    with pytest.raises(UnknownNameError):
        ReaderFunctor(2, order='random')


def test_inverse_image():
    f = FinFun(FinSet(3), FinSet(2), [0, 1, 1])
    assert powerset_inverse_image(f, {1}) == frozenset({1, 2})
    assert powerset_inverse_image(f, set()) == frozenset()
    with pytest.raises(ShapeError):
        powerset_inverse_image(f, {5})

    include = FinFun(FinSet(1), FinSet(2), [1])
    image = PowersetFunctor().on_morphism(include)
    assert image.dom.size == 4 and image.cod.size == 2
    assert image.table == (0, 0, 1, 1)


def test_powerset_is_contravariant():
    report = check_contravariant(2)
    assert report.passed
    assert report.message == 'sets up to 2'
    with pytest.raises(SizeLimitError):
        check_contravariant(4)

    P = powerset_functor_data(1)
    assert P.on_object('1') == '2'
    assert check_contravariant_functor(P).passed
    assert check_functor(P.to_covariant()).passed


def test_covariant_table_is_not_contravariant():
    C = universe_category('finord', 1)
    same = ContravariantFunctorData(C, C, {X: X for X in C.objects},
                                    {f: f for f in C.morphisms})
    report = check_contravariant_functor(same)
    assert report.status == LawReport.ERROR
    assert report.witnesses['morphism'] == '0->1:[]'
    assert check_functor(same.to_covariant()).status == LawReport.ERROR

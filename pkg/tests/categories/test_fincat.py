from CategoryTools.categories import (FinCat, HomEnumeration, interval_category,
                                      terminal_category, check_laws, path_name)
from CategoryTools.util.errors import (CompositionError, InfiniteCategoryError,
                                       PresentationError, UnknownNameError)

import pytest


@pytest.fixture
def interval():
    return interval_category()


def test_interval(interval):
    assert interval.objects == ['x', 'y']
    assert interval.num_morphisms == 3
    assert interval.hom('x', 'y') == ('f', )
    assert interval.hom('y', 'x') == ()
    assert interval.hom_count('x', 'x') == 1
    assert interval.dom('f') == 'x'
    assert interval.cod('f') == 'y'
    assert interval.identity('y') == 'id_y'
    assert interval.is_identity('id_x')
    assert not interval.is_identity('f')
    assert interval.compose('id_x', 'f') == 'f'
    assert interval.compose('f', 'id_y') == 'f'
    assert list(interval.composable_pairs()) == [('id_x', 'id_x'), ('id_x', 'f'),
                                                 ('id_y', 'id_y'), ('f', 'id_y')]


def test_compose_errors(interval):
    with pytest.raises(CompositionError):
        interval.compose('f', 'f')
    with pytest.raises(UnknownNameError):
        interval.compose('f', 'g')
    with pytest.raises(UnknownNameError):
        interval.identity('z')


def test_presentation_errors():
    objects = ['x', 'y']
    morphisms = [('id_x', 'x', 'x'), ('id_y', 'y', 'y'), ('f', 'x', 'y')]
    identities = {'x': 'id_x', 'y': 'id_y'}
    total = {('id_x', 'id_x'): 'id_x', ('id_y', 'id_y'): 'id_y', ('id_x', 'f'): 'f',
             ('f', 'id_y'): 'f'}

    with pytest.raises(PresentationError, match='not total'):
        partial = dict(total)
        del partial[('f', 'id_y')]
        FinCat(objects, morphisms, identities, partial)
    with pytest.raises(PresentationError, match='unknown object'):
        FinCat(objects, morphisms + [('g', 'x', 'z')], identities, total)
    with pytest.raises(PresentationError, match='no identity'):
        FinCat(objects, morphisms, {'x': 'id_x'}, total)
    with pytest.raises(PresentationError, match='not an endomorphism'):
        FinCat(objects, morphisms, {'x': 'f', 'y': 'id_y'}, total)
    with pytest.raises(PresentationError, match='wrong domain or codomain'):
        wrong = dict(total)
        wrong[('id_x', 'f')] = 'id_x'
        FinCat(objects, morphisms, identities, wrong)
    with pytest.raises(PresentationError, match='duplicate morphism'):
        FinCat(objects, morphisms + [('f', 'x', 'y')], identities, total)

    with pytest.raises(PresentationError) as excinfo:
        FinCat(objects, morphisms, identities, {})
    assert excinfo.value.field == 'composition'


def test_rows_and_dicts_agree(interval):
    rows = [{'first': f, 'then': g, 'result': interval.compose(f, g)}
            for f, g in interval.composable_pairs()]
    C = FinCat(interval.objects, [{'name': f, 'dom': d, 'cod': c}
                                  for f, d, c in interval.morphism_triples()],
               interval.identities, rows)
    assert C == interval
    assert C.composition == rows


def test_serialization(interval):
    d = interval.as_dict()
    assert d['morphisms'][2] == {'name': 'f', 'dom': 'x', 'cod': 'y'}
    assert {'first': 'id_x', 'then': 'f', 'result': 'f'} in d['composition']
    assert FinCat.from_dict(d) == interval


def test_rename(interval):
    renamed = interval.rename({'f': 'g'}, {'x': 'a'})
    assert renamed.hom('a', 'y') == ('g', )
    assert renamed.compose('id_x', 'g') == 'g'
    assert check_laws(renamed).passed


def test_payloads():
    C = FinCat.from_payloads([('a', 1), ('b', 2)],
                             [('id_a', 'a', 'a', 'e'), ('id_b', 'b', 'b', 'e'),
                              ('u', 'a', 'b', 'u')],
                             {'a': 'id_a', 'b': 'id_b'},
                             lambda p, q: q if p == 'e' else p)
    assert C.compose('id_a', 'u') == 'u'
    assert C.compose('u', 'id_b') == 'u'
    assert C.find_morphism('a', 'b', 'u') == 'u'
    assert C.find_object(2) == 'b'
    assert C.payload('u') == 'u'
    with pytest.raises(UnknownNameError):
        C.find_morphism('b', 'a', 'u')


def test_terminal_category():
    one = terminal_category()
    assert one.objects == ['*']
    assert check_laws(one).passed


def test_hom_enumeration():
    H = HomEnumeration(['x', 'y'], [('f', 'x', 'y'), ('g', 'y', 'x')], 4)
    assert H.hom('x', 'x') == ('id_x', 'f·g', 'f·g·f·g')
    assert H.hom('x', 'y') == ('f', 'f·g·f')
    assert not H.closed
    with pytest.raises(InfiniteCategoryError):
        check_laws(H)
    with pytest.raises(UnknownNameError):
        H.hom('x', 'z')


def test_path_name():
    assert path_name('x', ()) == 'id_x'
    assert path_name('x', ('f', 'g')) == 'f·g'

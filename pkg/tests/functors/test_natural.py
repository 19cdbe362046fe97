from CategoryTools.categories import (GraphPresentation, check_laws, from_graph,
                                      interval_category)
from CategoryTools.functors import (FunctorData, NatTransData, ReaderFunctor, check_naturality,
                                    enumerate_functors, enumerate_transformations,
                                    find_natural_iso, functor_category, hcompose,
                                    hcompose_agreement, hcompose_alternate,
                                    identity_functor, identity_transformation, vcompose)
from CategoryTools.util.errors import ShapeError
from CategoryTools.util.report import LawReport

import pytest


@pytest.fixture
def interval():
    return interval_category()


@pytest.fixture
def functors(interval):
    # collapse to x, identity, collapse to y
    return list(enumerate_functors(interval, interval))


@pytest.fixture
def square():
    return from_graph(
        GraphPresentation(['a', 'b', 'c', 'd'], [('f', 'a', 'b'), ('g', 'a', 'c'),
                                                 ('h', 'b', 'd'), ('k', 'c', 'd')]))


def test_identity_transformation(functors):
    for F in functors:
        report = check_naturality(identity_transformation(F))
        assert report.passed
        assert report.checked == 3


def test_transformations_between_interval_functors(functors):
    F0, F1, F2 = functors
    (alpha, ) = enumerate_transformations(F0, F1)
    assert alpha.table() == {'x': 'id_x', 'y': 'f'}
    (beta, ) = enumerate_transformations(F1, F2)
    assert beta.table() == {'x': 'f', 'y': 'id_y'}
    assert list(enumerate_transformations(F2, F0)) == []

    gamma = vcompose(alpha, beta)
    assert gamma.table() == {'x': 'f', 'y': 'f'}
    assert check_naturality(gamma).passed
    with pytest.raises(ShapeError):
        vcompose(beta, alpha)


def test_naturality_failure(interval, square):
    F = FunctorData(interval, square, {'x': 'a', 'y': 'd'}, {
        'id_x': 'id_a',
        'id_y': 'id_d',
        'f': 'f·h'
    }, name='upper')
    G = FunctorData(interval, square, {'x': 'a', 'y': 'd'}, {
        'id_x': 'id_a',
        'id_y': 'id_d',
        'f': 'g·k'
    }, name='lower')
    alpha = NatTransData(F, G, {'x': 'id_a', 'y': 'id_d'})
    report = check_naturality(alpha)
    assert report.status == LawReport.FAIL
    assert report.checked == 3
    assert report.witnesses == {
        'f': 'f',
        'component_at_dom': 'id_a',
        'component_at_cod': 'id_d',
        'left': 'g·k',
        'right': 'f·h'
    }
    assert list(enumerate_transformations(F, G)) == []
    assert find_natural_iso(F, G) is None


def test_bad_components_are_errors(interval):
    I = identity_functor(interval)
    wrong_type = check_naturality(NatTransData(I, I, {'x': 'f', 'y': 'id_y'}))
    assert wrong_type.status == LawReport.ERROR
    assert wrong_type.witnesses == {'object': 'x', 'component': 'f'}

    missing = check_naturality(NatTransData(I, I, {'x': 'id_x'}))
    assert missing.status == LawReport.ERROR
    assert missing.witnesses == {'object': 'y'}


def test_horizontal_composites(functors):
    F0, F1, F2 = functors
    (alpha, ) = enumerate_transformations(F0, F1)
    (beta, ) = enumerate_transformations(F1, F2)
    first = hcompose(alpha, beta)
    second = hcompose_alternate(alpha, beta)
    assert first.table() == second.table()
    assert check_naturality(first).passed
    assert hcompose_agreement(alpha, beta).passed
    assert hcompose_agreement(beta, alpha).passed


def test_functor_category(interval):
    FC = functor_category(interval, interval)
    assert FC.objects == ['F0', 'F1', 'F2']
    assert FC.num_morphisms == 6
    assert FC.hom('F0', 'F2') == ('F0=>F2:[f,f]', )
    assert FC.compose('F0=>F1:[id_x,f]', 'F1=>F2:[f,id_y]') == 'F0=>F2:[f,f]'
    assert check_laws(FC).passed


def test_natural_iso(functors):
    F0, F1, _ = functors
    iso = find_natural_iso(F1, F1)
    assert iso.table() == {'x': 'id_x', 'y': 'id_y'}
    assert find_natural_iso(F0, F1) is None


def test_reader_orders_are_naturally_isomorphic():
    lex, colex = ReaderFunctor(2), ReaderFunctor(2, order='colex')
    iso = find_natural_iso(lex, colex)
    assert iso is not None
    assert check_naturality(iso).passed
    # reversing a table sends lex position i to colex position i, so the first
    # iso found is the identity on indices, i.e. precomposition with the swap of R
    assert iso.component(lex.source.objects[2]).table == (0, 1, 2, 3)

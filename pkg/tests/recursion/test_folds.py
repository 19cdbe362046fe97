from CategoryTools.recursion import (AlgebraSpec, apply_fold, check_fold_identities,
                                     exp_algebra, fold_library, fusion_demo, int_, plus, run,
                                     squared)
from CategoryTools.util.errors import SizeLimitError, UnknownNameError

import pytest


@pytest.mark.parametrize('name, xs, arg, expected', [
    ('sum', [1, 2, 3], None, 6),
    ('sum', [], None, 0),
    ('product', [2, 3, -1], None, -6),
    ('length', [5, 5, 5], None, 3),
    ('reverse', [1, 2, 3], None, (3, 2, 1)),
    ('append', [1, 2], [9], (1, 2, 9)),
    ('map', [1, 2], {1: 10, 2: 20}, (10, 20)),
    ('map', [0, 2], [5, 6, 7], (5, 7)),
    ('filter', [1, 2, 1], {1: True, 2: False}, (1, 1)),
    ('and', [1, 1], None, True),
    ('and', [1, 0], None, False),
    ('or', [0, 0], None, False),
    ('or', [0, 1], None, True),
    ('bin2int', [1, 1, 0, 1], None, 13),
    ('bin2int', [], None, 0),
    ('bin2int2_pair', [1, 1, 0, 1], None, 11),
])
def test_apply_fold(name, xs, arg, expected):
    assert apply_fold(name, xs, arg=arg) == expected


def test_fold_errors():
    with pytest.raises(UnknownNameError):
        fold_library('scan')
    with pytest.raises(ValueError):
        apply_fold('map', [1])


def test_fold_library():
    alg = fold_library('sum', labels=(0, 1))
    assert alg.name == 'sum'
    assert not alg.is_finite
    assert alg.sample == list(range(-8, 9))
    assert fold_library('and').carrier == [False, True]


def test_exp_algebras():
    e = plus(int_(3), squared(int_(2)))
    values = {}
    for name in ('eval', 'size', 'depth', 'mod3'):
        alg = exp_algebra(name)
        values[name] = run(alg.functor, alg, e)
    assert values == {'eval': 7, 'size': 4, 'depth': 3, 'mod3': 1}
    with pytest.raises(UnknownNameError):
        exp_algebra('simplify')


def test_sum_plus_one():
    result = fusion_demo('sum-plus-one')
    assert result.premise_holds
    assert result.conclusion_holds
    report = result.to_report()
    assert report.passed
    assert report.checked == 3992
    assert [c.checked for c in report.children] == [86, 3906]


def test_sum_plus_two():
    result = fusion_demo('sum-plus-two')
    assert not result.premise_holds
    assert not result.conclusion_holds
    assert result.premise_witness['value'] == ('inl', '*')
    report = result.to_report()
    assert report.passed
    assert report.checked == 86
    assert report.message == 'premise does not hold, conclusion not asserted'


def test_map_map():
    result = fusion_demo('map-map')
    assert result.premise_checked == 15
    assert result.conclusion_checked == 31
    assert result.to_report().passed
    with pytest.raises(UnknownNameError):
        fusion_demo('map-filter')


def test_fold_identities():
    report = check_fold_identities(2, 3)
    assert report.passed
    assert [c.checked for c in report.children] == [240, 240]
    with pytest.raises(SizeLimitError):
        check_fold_identities(3, 3)


def reversing_map(name, labels=None, arg=None):
    """
    fold_library, except that 'map' also reverses the list.
    """
    alg = fold_library(name, labels, arg)
    if name != 'map':
        return alg

    def structure(value):
        tag, v = value
        return () if tag == 'inl' else v[1] + (arg(v[0]), )

    return AlgebraSpec(alg.functor, structure, name='reversing map')


def test_broken_fold_identities():
    report = check_fold_identities(2, 3, folds=reversing_map)
    assert report.status == 'fail'
    composition = report.child('map composition')
    assert composition.status == 'fail'
    assert set(composition.witnesses) == {'f', 'g', 'list'}
    xs = composition.witnesses['list']
    assert xs != xs[::-1]
    # reversing commutes with filtering, so only composition breaks
    assert report.child('filter after map').passed
    assert report.witnesses['law'] == 'map composition'

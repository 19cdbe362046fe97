from CategoryTools.categories import FinCat, check_laws, interval_category
from CategoryTools.categories.laws import (check_associativity, check_left_unit,
                                           check_right_unit)
from CategoryTools.util.report import LawReport

import pytest


@pytest.fixture
def broken():
    """
    One object, unit e and a table on {a, b} that is not associative.
    """
    table = {('a', 'a'): 'a', ('a', 'b'): 'b', ('b', 'a'): 'a', ('b', 'b'): 'a'}
    for x in ('e', 'a', 'b'):
        table[('e', x)] = x
        table[(x, 'e')] = x
    return FinCat(['*'], [('e', '*', '*'), ('a', '*', '*'), ('b', '*', '*')], {'*': 'e'},
                  table, name='broken')


@pytest.fixture
def bad_unit():
    table = {('e', 'e'): 'e', ('e', 'a'): 'e', ('a', 'e'): 'a', ('a', 'a'): 'a'}
    return FinCat(['*'], [('e', '*', '*'), ('a', '*', '*')], {'*': 'e'}, table)


def test_interval_laws():
    report = check_laws(interval_category())
    assert report.passed
    assert report.checked == 11
    assert [child.name for child in report.children] == [
        'left unit', 'right unit', 'associativity'
    ]
    assert report.child('associativity').checked == 5
    assert report.to_text() == '\n'.join([
        '[PASS] category laws (11 checked): 2',
        '  [PASS] left unit (3 checked)',
        '  [PASS] right unit (3 checked)',
        '  [PASS] associativity (5 checked)',
    ])


def test_associativity_failure(broken):
    assert check_left_unit(broken).passed
    assert check_right_unit(broken).passed

    report = check_associativity(broken)
    assert report.status == LawReport.FAIL
    assert report.checked == 24
    assert report.witnesses == {'f': 'b', 'g': 'a', 'h': 'b', 'left': 'b', 'right': 'a'}

    # the witness replays the violation
    w = report.witnesses
    assert (broken.compose(broken.compose(w['f'], w['g']), w['h']) != broken.compose(
        w['f'], broken.compose(w['g'], w['h'])))

    laws = check_laws(broken)
    assert laws.status == LawReport.FAIL
    assert laws.checked == 30
    assert laws.witnesses['law'] == 'associativity'
    assert laws.message == '(b then a) then b is b but b then (a then b) is a'


def test_unit_failure(bad_unit):
    report = check_left_unit(bad_unit)
    assert not report.passed
    assert report.witnesses == {'identity': 'e', 'f': 'a', 'composite': 'e'}
    assert bad_unit.compose('e', 'a') != 'a'

    laws = check_laws(bad_unit)
    assert laws.witnesses['law'] == 'left unit'
    assert laws.child('right unit').passed

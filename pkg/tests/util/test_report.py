from CategoryTools.util.report import LawReport

import pytest


def test_leaf_reports():
    ok = LawReport.success('left unit', 3, 'fine', objects=('x', 'y'))
    assert ok.passed
    assert ok.witnesses == {'objects': ['x', 'y']}

    bad = LawReport.failure('associativity', {'f': 'a', 'g': 'b'}, 5)
    assert bad.status == LawReport.FAIL
    assert not bad.passed
    # a failed report is still a report, not a falsy value
    assert (bad or ok) is bad

    with pytest.raises(ValueError, match='must carry a witness'):
        LawReport.failure('associativity', {})
    with pytest.raises(ValueError, match='Unknown report status'):
        LawReport('laws', 'maybe')

    err = LawReport.error('laws', 'not a category')
    assert err.checked == 0
    assert err.status == LawReport.ERROR


def test_combine():
    left = LawReport.success('left unit', 3)
    assoc = LawReport.failure('associativity', {'f': 'a'}, 24, 'a then a')
    report = LawReport.combine('category laws', [left, assoc], message='broken')
    assert report.status == LawReport.FAIL
    assert report.checked == 27
    assert report.witnesses == {'f': 'a', 'law': 'associativity'}
    assert report.message == 'a then a'
    assert report.child('left unit') is left
    with pytest.raises(KeyError):
        report.child('right unit')

    # an error outranks a failure that was seen first
    err = LawReport.error('structure', 'ill typed', law='typing')
    report = LawReport.combine('functor laws', [assoc, err], message='F')
    assert report.status == LawReport.ERROR
    assert report.witnesses == {'law': 'typing'}
    assert report.message == 'ill typed'

    report = LawReport.combine('category laws', [left], message='interval')
    assert report.passed
    assert report.witnesses == {}
    assert report.message == 'interval'


def test_to_text_and_document():
    assoc = LawReport.failure('associativity', {'f': 'a'}, 24, 'a then a')
    report = LawReport.combine('category laws', [LawReport.success('left unit', 3), assoc])
    assert report.to_text() == '\n'.join([
        '[FAIL] category laws (27 checked): a then a',
        '    f = a',
        '    law = associativity',
        '  [PASS] left unit (3 checked)',
        '  [FAIL] associativity (24 checked): a then a',
        '      f = a',
    ])
    assert str(LawReport.error('laws', 'no input')) == '[ERROR] laws: no input'

    doc = report.to_document()
    assert doc['status'] == 'fail'
    assert [c['name'] for c in doc['children']] == ['left unit', 'associativity']
    assert doc['children'][1]['witnesses'] == {'f': 'a'}

from CategoryTools.recursion import (STAR, CoalgebraSpec, Conat, all_coalgebras, ana_conat,
                                     bisimilar_up_to, check_conat_terminality,
                                     check_identity_anamorphism, check_stream_equations,
                                     coalgebra_category, coalgebra_category_check, conat_in,
                                     conat_out, constant, diagonal, dual_lambek_check,
                                     is_coalgebra_morphism, iterate, nats, stream_by_name,
                                     stream_take, truncated_conat_coalgebra, truncated_conats,
                                     unfold_conat, zip_streams, StreamProc)
from CategoryTools.util.errors import SizeLimitError, UnknownNameError
from CategoryTools.util.report import LawReport

import itertools

import pytest

FIN = Conat.fin
INF = Conat.inf()


def test_conat():
    assert FIN(2).succ() == FIN(3)
    assert INF.succ() == INF
    assert str(FIN(2)) == 'Fin(2)'
    assert str(INF) == 'Inf'
    assert conat_out(FIN(0)) is STAR
    assert conat_out(FIN(3)) == FIN(2)
    assert conat_out(INF) == INF
    assert truncated_conats(2) == [FIN(0), FIN(1), INF]
    with pytest.raises(ValueError):
        Conat(-1)


def test_coalgebra_spec():
    c = CoalgebraSpec(3, [None, 0, 2])
    assert c.label == '3:[*,0,2]'
    assert str(c) == '3:[*,0,2]'
    assert c(1) == 0
    assert len(all_coalgebras(2)) == 9
    with pytest.raises(ValueError):
        CoalgebraSpec(2, [0])
    with pytest.raises(ValueError):
        CoalgebraSpec(2, [0, 2])


def test_ana_conat():
    # 2 is a fixed point of the structure map
    assert ana_conat(CoalgebraSpec(3, [None, 0, 2])) == [FIN(0), FIN(1), INF]
    assert ana_conat(CoalgebraSpec(3, [1, 2, None])) == [FIN(2), FIN(1), FIN(0)]
    assert ana_conat(CoalgebraSpec(2, [1, 0])) == [INF, INF]
    assert ana_conat(truncated_conat_coalgebra(0)) == [INF]


def test_conat_terminality():
    report = check_conat_terminality(3)
    assert report.passed
    assert [c.name for c in report.children] == [
        'anamorphism square and uniqueness', 'identity is ana of out', 'dual lambek'
    ]
    assert report.child('anamorphism square and uniqueness').checked == 76
    with pytest.raises(SizeLimitError):
        check_conat_terminality(5)


def test_identity_anamorphism():
    c = truncated_conat_coalgebra(2)
    assert c.label == '3:[*,0,2]'
    assert c.name == 'conat2'
    report = check_identity_anamorphism(2)
    assert report.passed
    assert report.checked == 3


def test_unfold_conat():

    def countdown(n):
        return STAR if n == 0 else n - 1

    assert unfold_conat(countdown, 3, 8) == FIN(3)
    assert unfold_conat(countdown, 9, 8) == INF
    assert unfold_conat(lambda x: x, 0, 8) == INF


def test_dual_lambek():
    assert conat_in(STAR) == FIN(0)
    assert conat_in(FIN(2)) == FIN(3)
    assert conat_in(INF) == INF
    report = dual_lambek_check()
    assert report.passed
    assert [c.checked for c in report.children] == [6, 7]


def test_coalgebra_morphisms():
    source = CoalgebraSpec(2, [None, 0])
    target = truncated_conat_coalgebra(2)
    assert is_coalgebra_morphism(source, target, (0, 1))
    assert not is_coalgebra_morphism(source, target, (0, 2))


def test_coalgebra_category():
    C = coalgebra_category((1, 2))
    assert C.name == 'Coalg(Maybe)'
    assert len(C.objects) == 12
    report = coalgebra_category_check((1, 2))
    assert report.passed
    assert report.child('terminal coalgebra').witnesses == {'terminal': '3:[*,0,2]'}
    with pytest.raises(SizeLimitError):
        coalgebra_category((4, ))


def test_streams():
    assert stream_take(nats(), 5) == [0, 1, 2, 3, 4]
    assert stream_take(nats(), 0) == []
    assert stream_take(zip_streams(nats(), nats(1)), 2) == [(0, 1), (1, 2)]
    assert stream_take(constant(7), 3) == [7, 7, 7]
    assert stream_take(diagonal(nats(2)), 2) == [(2, 2), (3, 3)]
    assert stream_take(iterate(lambda n: 2 * n, 1), 4) == [1, 2, 4, 8]
    assert str(nats(3)) == 'nats(3)'
    with pytest.raises(ValueError):
        stream_take(nats(), -1)


def test_nats_bound():
    assert stream_take(nats(0, bound=3), 4) == [0, 1, 2, 3]
    with pytest.raises(SizeLimitError):
        stream_take(nats(0, bound=3), 5)


def test_bisimilar():
    assert bisimilar_up_to(constant(1), iterate(lambda s: s, 1), 5)
    assert bisimilar_up_to(nats(), iterate(lambda n: n + 1, 0), 6)
    assert bisimilar_up_to(nats(), constant(0), 1)
    assert not bisimilar_up_to(nats(), constant(0), 2)


def test_stream_equations():
    report = check_stream_equations(nats())
    assert report.passed
    assert report.checked == 4
    assert report.message == 'nats'
    for name in ('nats', 'zip', 'constant', 'diagonal'):
        assert check_stream_equations(stream_by_name(name, 1)).passed


def test_impure_head():
    calls = itertools.count()
    p = StreamProc(0, lambda s: next(calls), lambda s: s + 1, name='counter')
    report = check_stream_equations(p)
    assert report.status == LawReport.FAIL
    assert report.witnesses == {'state': 0, 'head': 0}
    assert report.message == 'first observation is not the head'


def test_stream_by_name():
    assert stream_take(stream_by_name('zip', 1), 2) == [(1, 2), (2, 3)]
    assert stream_take(stream_by_name('constant', 4), 2) == [4, 4]
    with pytest.raises(UnknownNameError):
        stream_by_name('primes')


def test_broken_anamorphism():

    def off_by_one(c):
        return [v.succ() for v in ana_conat(c)]

    report = check_conat_terminality(2, ana=off_by_one)
    assert report.status == LawReport.FAIL
    square = report.child('anamorphism square')
    # the coalgebra that stops at once is sent to Fin(1), whose predecessor is not the point
    assert square.witnesses['coalgebra'] == '1:[*]'
    assert report.witnesses['law'] == 'anamorphism square'
    assert report.child('identity is ana of out').passed
    assert report.child('dual lambek').passed

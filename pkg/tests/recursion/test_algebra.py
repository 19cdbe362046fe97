from CategoryTools.categories import (check_laws, cyclic_monoid, from_monoid,
                                      interval_category)
from CategoryTools.recursion import (AlgebraSpec, ZERO, Term, bool_algebra, bool_functor, cata,
                                     check_cata_laws, check_conat_not_initial,
                                     check_is_catamorphism, check_mu_functor_laws,
                                     count_homomorphisms, exp_functor, fusion_check,
                                     id_algebra_category, initial_algebra,
                                     initial_object_is_initial_algebra_of_id, lambek_check,
                                     list_bifunctor, btree_bifunctor, list_functor, list_term,
                                     maybe_algebra, monoid_as_algebra, mu_as_functor, nat_functor,
                                     nat_term, run, term_to_nat,
                                     terminal_object_is_terminal_coalgebra_of_id)
from CategoryTools.recursion.folds import exp_algebra
from CategoryTools.sets import FinFun, FinSet
from CategoryTools.util.errors import ShapeError, SizeLimitError
from CategoryTools.util.report import LawReport

import pytest


@pytest.fixture
def mod3():
    # zero and successor modulo 3
    return maybe_algebra(3, 0, [1, 2, 0], name='mod3')


def test_cata(mod3):
    F = nat_functor()
    assert [cata(F, mod3, nat_term(n)) for n in range(7)] == [0, 1, 2, 0, 1, 2, 0]
    assert cata(F, initial_algebra(F), nat_term(2)) == nat_term(2)
    with pytest.raises(ShapeError):
        cata(list_functor(2), mod3, ZERO)


def test_cata_laws(mod3):
    report = check_cata_laws(nat_functor(), mod3, 4)
    assert report.passed
    assert report.message == 'mod3 over ({*} + X)'
    assert [c.name for c in report.children] == [
        'initial algebra square', 'cata of in is identity', 'uniqueness'
    ]
    assert report.child('uniqueness').message == 'brute force'
    assert report.checked == 12

    assert count_homomorphisms(nat_functor(), mod3, 4) == 1
    assert check_cata_laws(bool_functor(), bool_algebra(2, 1, 0), 1).passed


def test_cata_leaves_carrier():
    # s(1) = 2 is not in {0, 1}
    report = check_cata_laws(nat_functor(), maybe_algebra(2, 0, [1, 2]), 3)
    assert report.status == LawReport.FAIL
    square = report.child('initial algebra square')
    assert square.checked == 3
    assert square.witnesses['cata'] == 2
    assert report.child('uniqueness').witnesses == {'solutions': 0}
    assert count_homomorphisms(nat_functor(), maybe_algebra(2, 0, [1, 2]), 3) == 0


def test_exp_cata_laws():
    F = exp_functor((0, 1))
    small = check_cata_laws(F, exp_algebra('mod3', (0, 1)), 2)
    assert small.passed
    assert small.child('uniqueness').message == 'brute force'
    assert small.child('uniqueness').checked == 8

    large = check_cata_laws(F, exp_algebra('mod3', (0, 1)), 3)
    assert large.passed
    assert large.child('uniqueness').message == 'forced values'
    assert large.child('uniqueness').checked == 74

    # value domains get the induction argument only
    evaluated = check_cata_laws(F, exp_algebra('eval', (0, 1)), 2)
    assert evaluated.child('uniqueness').message == 'forced by induction on the terms'


def test_cata_guards():
    with pytest.raises(SizeLimitError):
        check_cata_laws(exp_functor(), exp_algebra('mod3'), 2)
    with pytest.raises(SizeLimitError):
        check_cata_laws(nat_functor(), maybe_algebra(1, 0, [0]), 5)


def test_is_catamorphism(mod3):
    F = nat_functor()
    assert check_is_catamorphism(F, mod3, lambda t: term_to_nat(t) % 3, 5).passed

    report = check_is_catamorphism(F, mod3, lambda t: 0, 3)
    assert report.status == LawReport.FAIL
    assert report.child('square').checked == 2
    assert report.child('equals cata').witnesses['cata'] == 1


def test_conat_not_initial():
    report = check_conat_not_initial(3)
    assert report.passed
    assert report.message == '2 homomorphisms into (0,id)'
    assert report.witnesses['homomorphisms'] == [
        {'Fin(0)': 0, 'Fin(1)': 0, 'Fin(2)': 0, 'Inf': 0},
        {'Fin(0)': 0, 'Fin(1)': 0, 'Fin(2)': 0, 'Inf': 1},
    ]


def test_lambek():
    report = lambek_check(nat_functor(), 3)
    assert report.passed
    assert [c.checked for c in report.children] == [3, 3]
    assert lambek_check(list_functor(2), 3).passed

    wrong = lambek_check(nat_functor(), 3, inverse=lambda t: ('inl', '*'))
    assert wrong.status == LawReport.FAIL
    assert wrong.child('in then inverse').checked == 2


def test_fusion():
    F = nat_functor()
    minus_one = maybe_algebra(3, 0, [2, 0, 1], name='minus one')
    # n mod 3 negated is cata of (0, x - 1 mod 3)
    negate = fusion_check(F, maybe_algebra(3, 0, [1, 2, 0]), minus_one, lambda x: -x % 3, 4)
    assert negate.premise_holds and negate.conclusion_holds
    assert negate.premise_checked == 4
    assert negate.to_report().passed

    constant = maybe_algebra(3, 1, [1, 1, 1])
    broken = fusion_check(F, maybe_algebra(3, 0, [1, 2, 0]), constant, lambda x: x, 4)
    assert not broken.premise_holds
    assert not broken.conclusion_holds
    report = broken.to_report()
    assert report.passed
    assert report.message == 'premise does not hold, conclusion not asserted'
    assert report.child('premise').witnesses['value'] == ['inl', '*']


def test_id_algebras():
    C = interval_category()
    A = id_algebra_category(C)
    assert A.objects == ['(x,id_x)', '(y,id_y)']
    assert A.num_morphisms == 3
    assert check_laws(A).passed

    B = id_algebra_category(from_monoid(cyclic_monoid(3)))
    assert len(B.objects) == 3
    # only endomorphisms of an algebra commute with it
    assert B.num_morphisms == 9

    initial = initial_object_is_initial_algebra_of_id(C)
    assert initial.passed
    assert initial.child('initial in algebras').witnesses == {'initial': '(x,id_x)'}
    terminal = terminal_object_is_terminal_coalgebra_of_id(C)
    assert terminal.passed
    assert terminal.child('terminal in algebras').witnesses == {'terminal': '(y,id_y)'}

    none = initial_object_is_initial_algebra_of_id(from_monoid(cyclic_monoid(3)))
    assert none.status == LawReport.ERROR
    assert none.message.startswith('not applicable')


def test_mu_functor():
    F2 = list_bifunctor()
    swap = FinFun(FinSet(2), FinSet(2), [1, 0])
    mapped = mu_as_functor(F2, swap)
    assert mapped(list_term([0, 0, 1])) == list_term([1, 1, 0])

    report = check_mu_functor_laws(F2, 2, 3)
    assert report.passed
    assert report.child('preserves identity').checked == 7
    assert report.child('preserves composition').checked == 112
    assert check_mu_functor_laws(btree_bifunctor(), 2, 2).passed
    with pytest.raises(SizeLimitError):
        check_mu_functor_laws(F2, 3, 2)


def test_monoid_as_algebra():
    M = cyclic_monoid(3)
    alg = monoid_as_algebra(M)
    one = Term(('inl', '*'))
    assert cata(alg.functor, alg, one) == M.unit
    assert cata(alg.functor, alg, Term(('inr', (one, one)))) == M.unit
    assert check_cata_laws(alg.functor, alg, 2).passed


def test_algebra_from_cases():
    alg = AlgebraSpec.from_cases(nat_functor(), FinSet(1), {('inl', '*'): 0}, name='partial')
    with pytest.raises(ShapeError):
        run(nat_functor(), alg, nat_term(1))
    with pytest.raises(ShapeError):
        AlgebraSpec(nat_functor(), lambda v: v, name='bare').sample

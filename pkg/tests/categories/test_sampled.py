from CategoryTools.categories import LawSampler, MatrixCategory, sampled_laws
from CategoryTools.util.report import LawReport

import numpy as np


def test_matrix_laws_hold():
    report = sampled_laws(MatrixCategory(), samples=200, seed=3)
    assert report.passed
    assert report.checked == 200
    assert report.message == 'seed 3'


def test_matrix_category():
    M = MatrixCategory(dims=[2, 3])
    rng = np.random.default_rng(seed=0)
    f = M.sample_morphism(rng, 2, 3)
    assert f.shape == (2, 3)
    assert f.min() >= -2 and f.max() <= 2
    assert M.dom(f) == 2 and M.cod(f) == 3
    assert M.equal(M.compose(M.identity(2), f), f)
    assert M.sample_object(rng) in (2, 3)


def test_broken_composition_is_caught():
    # composing and transposing breaks the unit laws on square matrices
    M = MatrixCategory(dims=[2], compose=lambda f, g: (f @ g).T)
    report = sampled_laws(M, samples=100, seed=11)
    assert report.status == LawReport.FAIL
    assert report.witnesses['seed'] == 11
    assert report.witnesses['law'] in ('left unit', 'right unit', 'associativity')
    assert report.checked == report.witnesses['sample']
    assert isinstance(report.witnesses['f'], list)


def test_sampling_is_reproducible():
    M = MatrixCategory()
    first = LawSampler(M, seed=5).sample_triple()
    second = LawSampler(M, seed=5).sample_triple()
    for a, b in zip(first, second):
        assert np.array_equal(a, b)
    f, g, h = first
    assert f.shape[1] == g.shape[0]
    assert g.shape[1] == h.shape[0]

"""
Sampled law checks for categories too large to materialize.
"""
import logging
from abc import ABC, abstractmethod
from typing import Callable, Sequence

import numpy as np

from CategoryTools.util.constants import (DEFAULT_SAMPLES, DEFAULT_SEED,
                                          MATRIX_ENTRY_RANGE, MATRIX_MAX_DIM)
from CategoryTools.util.report import LawReport


class LazyCategory(ABC):
    """
    A category presented by callbacks. Law checks draw objects and morphisms
    from it with a numpy Generator.
    """

    @abstractmethod
    def sample_object(self, rng: np.random.Generator):
        raise NotImplementedError

    @abstractmethod
    def sample_morphism(self, rng: np.random.Generator, dom, cod):
        raise NotImplementedError

    @abstractmethod
    def dom(self, f):
        raise NotImplementedError

    @abstractmethod
    def cod(self, f):
        raise NotImplementedError

    @abstractmethod
    def identity(self, X):
        raise NotImplementedError

    @abstractmethod
    def compose(self, f, g):
        raise NotImplementedError

    def equal(self, f, g) -> bool:
        return f == g


class MatrixCategory(LazyCategory):
    """
    Objects are dimensions and Hom(l, m) is the set of integer l x m matrices.
    The composite "M then N" is the matrix product M N.

    Args:
        dims (Sequence[int]): Dimensions used as objects. Defaults to 1..MATRIX_MAX_DIM.
        entry_range (tuple): Inclusive bounds of sampled entries.
        compose (Callable): Replacement composition, used to exhibit violations.
    """

    def __init__(self,
                 dims: Sequence[int] | None = None,
                 entry_range: tuple = MATRIX_ENTRY_RANGE,
                 compose: Callable | None = None):
        if dims is None:
            dims = range(1, MATRIX_MAX_DIM + 1)
        self.dims = list(dims)
        self.entry_range = entry_range
        self._compose = compose

    def sample_object(self, rng):
        return int(rng.choice(self.dims))

    def sample_morphism(self, rng, dom, cod):
        low, high = self.entry_range
        return rng.integers(low, high + 1, size=(dom, cod))

    def dom(self, f):
        return f.shape[0]

    def cod(self, f):
        return f.shape[1]

    def identity(self, X):
        return np.eye(X, dtype=int)

    def compose(self, f, g):
        if self._compose is not None:
            return self._compose(f, g)
        return f @ g

    def equal(self, f, g) -> bool:
        return f.shape == g.shape and bool(np.array_equal(f, g))


class LawSampler():
    """
    Checks the unit laws and associativity of a LazyCategory on pseudo-random
    composable triples.

    Args:
        category (LazyCategory): The category to sample.
        seed (int): Seed of the numpy Generator.
    """

    def __init__(self, category: LazyCategory, seed: int = DEFAULT_SEED):
        self.category = category
        self.seed = seed
        self.logger = logging.getLogger(type(self).__name__)
        self._rng = None

    @property
    def rng(self):
        if self._rng is None:
            self._rng = np.random.default_rng(seed=self.seed)
        return self._rng

    def sample_triple(self):
        C = self.category
        a, b, c, d = (C.sample_object(self.rng) for _ in range(4))
        return (C.sample_morphism(self.rng, a, b), C.sample_morphism(self.rng, b, c),
                C.sample_morphism(self.rng, c, d))

    def run(self, samples: int = DEFAULT_SAMPLES) -> LawReport:
        C = self.category
        self.logger.info(f'Sampling {samples} composable triples with seed {self.seed}')
        for n in range(1, samples + 1):
            f, g, h = self.sample_triple()
            left_unit = C.compose(C.identity(C.dom(f)), f)
            if not C.equal(left_unit, f):
                return self._fail('left unit', n, f=f, composite=left_unit)
            right_unit = C.compose(f, C.identity(C.cod(f)))
            if not C.equal(right_unit, f):
                return self._fail('right unit', n, f=f, composite=right_unit)
            left = C.compose(C.compose(f, g), h)
            right = C.compose(f, C.compose(g, h))
            if not C.equal(left, right):
                return self._fail('associativity', n, f=f, g=g, h=h, left=left, right=right)
        return LawReport.success('sampled category laws', samples, f'seed {self.seed}')

    def _fail(self, law: str, n: int, **witnesses) -> LawReport:
        witnesses['law'] = law
        witnesses['seed'] = self.seed
        witnesses['sample'] = n
        return LawReport.failure('sampled category laws', witnesses, n,
                                 f'{law} fails on sample {n}')


def sampled_laws(spec: LazyCategory,
                 samples: int = DEFAULT_SAMPLES,
                 seed: int = DEFAULT_SEED) -> LawReport:
    return LawSampler(spec, seed).run(samples)

"""
The currying adjunction (- x Y) -| (Y -> -) on finite sets, and the search for
a natural isomorphism between two encodings of its right adjoint.
"""
import logging

from CategoryTools.adjunctions.adjunction import AdjunctionHomBijection
from CategoryTools.categories.universe import SetCategory
from CategoryTools.functors.natural import find_natural_iso
from CategoryTools.functors.set_functors import ReaderFunctor, TimesFunctor
from CategoryTools.sets.finset import FinSet, curry, uncurry
from CategoryTools.util.constants import MAX_CURRYING_SIZE
from CategoryTools.util.helper import check_guard
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Currying')


def _parameter(Y) -> FinSet:
    return Y if isinstance(Y, FinSet) else FinSet(int(Y))


def currying_adjunction(Y, n: int) -> AdjunctionHomBijection:
    """
    F = (- x Y) left adjoint to G = (Y -> -) over the finite sets of size at
    most n, with alpha = curry and alpha^-1 = uncurry.

    Args:
        Y (FinSet, int): The parameter set.
        n (int): Largest listed set size.

    Raises:
        SizeLimitError: if n or |Y| exceeds 3.
    """
    Y = _parameter(Y)
    check_guard('max_size', n, MAX_CURRYING_SIZE)
    check_guard('|Y|', Y.size, MAX_CURRYING_SIZE)
    C = SetCategory.canonical(n)
    F = TimesFunctor(Y, source=C)
    G = ReaderFunctor(Y, source=C)

    def alpha(X, Z, g):
        return curry(g, X, Y)

    def alpha_inv(X, Z, f):
        return uncurry(f, Y, Z)

    LOGGER.info(f'Currying adjunction with |Y|={Y.size} over sets up to {n}')
    return AdjunctionHomBijection(F, G, alpha, alpha_inv, name=f'currying{Y.size}')


def right_adjoint_uniqueness(Y, n: int) -> LawReport:
    """
    Search a natural isomorphism between the right adjoint of (- x Y) with
    lexicographically listed tables and the one listed colexicographically.
    """
    Y = _parameter(Y)
    check_guard('max_size', n, MAX_CURRYING_SIZE)
    C = SetCategory.canonical(n)
    lex = ReaderFunctor(Y, order='lex', source=C)
    colex = ReaderFunctor(Y, order='colex', source=C)
    iso = find_natural_iso(lex, colex)
    if iso is None:
        return LawReport.failure('right adjoint uniqueness', {
            'lex': lex.name,
            'colex': colex.name
        }, len(C.objects), 'no natural isomorphism between the two encodings')
    return LawReport.success('right adjoint uniqueness',
                             len(C.objects),
                             f'{lex.name} ~ {colex.name}',
                             components={str(X): iso.component(X) for X in C.objects})

import logging

from CategoryTools.categories.fincat import FinCat, require_closed
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('CategoryLaws')


def check_left_unit(C: FinCat) -> LawReport:
    checked = 0
    for f in C.morphisms:
        i = C.identity(C.dom(f))
        composite = C.compose(i, f)
        checked += 1
        if composite != f:
            return LawReport.failure('left unit', {
                'identity': i,
                'f': f,
                'composite': composite
            }, checked, f'{i} then {f} is {composite}, not {f}')
    return LawReport.success('left unit', checked)


def check_right_unit(C: FinCat) -> LawReport:
    checked = 0
    for f in C.morphisms:
        i = C.identity(C.cod(f))
        composite = C.compose(f, i)
        checked += 1
        if composite != f:
            return LawReport.failure('right unit', {
                'f': f,
                'identity': i,
                'composite': composite
            }, checked, f'{f} then {i} is {composite}, not {f}')
    return LawReport.success('right unit', checked)


def check_associativity(C: FinCat) -> LawReport:
    checked = 0
    for f in C.morphisms:
        for g in C.out_morphisms(C.cod(f)):
            fg = C.compose(f, g)
            for h in C.out_morphisms(C.cod(g)):
                left = C.compose(fg, h)
                right = C.compose(f, C.compose(g, h))
                checked += 1
                if left != right:
                    return LawReport.failure('associativity', {
                        'f': f,
                        'g': g,
                        'h': h,
                        'left': left,
                        'right': right
                    }, checked, f'({f} then {g}) then {h} is {left} but '
                                f'{f} then ({g} then {h}) is {right}')
    return LawReport.success('associativity', checked)


def check_laws(C: FinCat) -> LawReport:
    """
    Verify the unit laws and associativity over all composable pairs and
    triples of C.

    Raises:
        InfiniteCategoryError: if C is a truncated hom enumeration.
    """
    require_closed(C, 'check_laws')
    LOGGER.info(f'Checking category laws of {C}')
    report = LawReport.combine(
        'category laws',
        [check_left_unit(C), check_right_unit(C), check_associativity(C)],
        message=f'{C.name}')
    LOGGER.debug(f'{C.name}: {report.status}')
    return report

import argparse
import json
import logging
import sys

from monty.json import MontyEncoder

from CategoryTools.cli import commands
from CategoryTools.monads import INSTANCES
from CategoryTools.recursion import EXP_FOLDS, FOLDS, FUSION_DEMOS, STREAMS
from CategoryTools.util.constants import (DEFAULT_SAMPLES, DEFAULT_SEED, MAX_SEARCH_ENV,
                                          MAX_WORD_LENGTH)
from CategoryTools.util.errors import SizeLimitError
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('cattool')

EXIT_CODES = {LawReport.PASS: 0, LawReport.FAIL: 1, LawReport.ERROR: 2}


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--json',
                        help='Write the report as a JSON document',
                        action='store_true')
    parser.add_argument('-v',
                        '--verbose',
                        help='Log progress at INFO level',
                        action='store_true')
    parser.add_argument('--seed',
                        help='Seed for commands that sample',
                        type=int,
                        default=DEFAULT_SEED)
    return parser


def _checker(subparsers, name: str, verb: str, func, common, help: str):
    """
    A two-word command such as 'functor check': the group parser plus its
    single action parser, which is returned.
    """
    group = subparsers.add_parser(name, help=help)
    actions = group.add_subparsers(dest='action', required=True)
    parser = actions.add_parser(verb, parents=[common], help=help)
    parser.set_defaults(func=func)
    return parser


def get_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='cattool',
        description='Check category laws, universal properties, monads and recursion schemes')
    subparsers = parser.add_subparsers(dest='command', required=True)

    laws = subparsers.add_parser('laws', parents=[common], help='Check the category laws')
    laws.add_argument('document', help='Category document', nargs='?')
    laws.add_argument('--matrix',
                      help='Sample the laws of the integer matrix category instead',
                      action='store_true')
    laws.add_argument('--samples',
                      help='Number of sampled composable triples',
                      type=int,
                      default=DEFAULT_SAMPLES)
    laws.set_defaults(func=commands.laws)

    classify = subparsers.add_parser('classify',
                                     parents=[common],
                                     help='Classify morphisms as mono, epi or iso')
    classify.add_argument('document', help='Category document')
    classify.add_argument('morphism', help='Morphism to classify (default: all)', nargs='?')
    classify.add_argument('--require',
                          help='Fail unless the morphism has this property',
                          choices=('mono', 'epi', 'iso'))
    classify.set_defaults(func=commands.classify_command)

    universal = subparsers.add_parser('universal',
                                      parents=[common],
                                      help='Find initial or terminal objects')
    universal.add_argument('document', help='Category document')
    universal.add_argument('--kind', choices=('initial', 'terminal'), required=True)
    universal.add_argument('--require',
                           help='Fail when no such object exists',
                           action='store_true')
    universal.set_defaults(func=commands.universal)

    binary = subparsers.add_parser('binary',
                                   parents=[common],
                                   help='Find products or coproducts of two objects')
    binary.add_argument('document', help='Category document')
    binary.add_argument('left', help='First object')
    binary.add_argument('right', help='Second object')
    binary.add_argument('--kind', choices=('product', 'coproduct'), required=True)
    binary.add_argument('--require',
                        help='Fail when no such object exists',
                        action='store_true')
    binary.set_defaults(func=commands.binary)

    functor = _checker(subparsers, 'functor', 'check', commands.functor_check, common,
                       'Check the functor laws of a functor document')
    functor.add_argument('document', help='Functor document')

    nattrans = _checker(subparsers, 'nattrans', 'check', commands.nattrans_check, common,
                        'Check naturality of a transformation document')
    nattrans.add_argument('document', help='Natural transformation document')

    adjunction = _checker(subparsers, 'adjunction', 'check', commands.adjunction_check, common,
                          'Check an adjunction')
    adjunction.add_argument('document', help='Adjunction document', nargs='?')
    adjunction.add_argument('--builtin', choices=commands.BUILTIN_ADJUNCTIONS)
    adjunction.add_argument('--param',
                            help='Size of the exponent Y of the currying adjunction',
                            type=int,
                            default=2)
    adjunction.add_argument('--size',
                            help='Largest set size of the currying adjunction',
                            type=int,
                            default=2)
    adjunction.add_argument('--gens',
                            help='Number of generators of Free -| Forget',
                            type=int,
                            default=2)
    adjunction.add_argument('--monoid',
                            help='Catalogued monoid of Free -| Forget',
                            type=str,
                            default='Z3')
    adjunction.add_argument('--max-len',
                            help='Longest word of Free -| Forget',
                            type=int,
                            default=MAX_WORD_LENGTH)

    monad = _checker(subparsers, 'monad', 'laws', commands.monad_laws, common,
                     'Check the Kleisli and monad laws of an instance')
    monad.add_argument('--instance', choices=INSTANCES, required=True)
    monad.add_argument('--x', help='Size of X', type=int, default=2)
    monad.add_argument('--y', help='Size of Y', type=int, default=2)
    monad.add_argument('--z', help='Size of Z', type=int, default=2)
    monad.add_argument('--extra',
                       help='|E| for exception, |R| for reader and continuation',
                       type=int,
                       default=None)
    monad.add_argument('--max-len', help='Longest list value', type=int, default=3)
    monad.add_argument('--max-depth', help='Deepest tree value', type=int, default=2)

    fold = subparsers.add_parser('fold', parents=[common], help='Run a catamorphism on a term')
    fold.add_argument('term', help='Term literal, e.g. "[1,0,1]" or "(plus (int 3) (int 2))"')
    fold.add_argument('--datatype', choices=('list', 'exp'), default='list')
    fold.add_argument('--fold', choices=FOLDS + EXP_FOLDS, required=True)
    fold.add_argument('--arg',
                      help='JSON argument of append, map or filter',
                      type=str,
                      default=None)
    fold.add_argument('--expect', help='Expected value as JSON', type=str, default=None)
    fold.set_defaults(func=commands.fold)

    unfold = subparsers.add_parser('unfold', parents=[common], help='Observe a stream')
    unfold.add_argument('--stream', choices=STREAMS, required=True)
    unfold.add_argument('--take', help='Number of elements', type=int, default=8)
    unfold.add_argument('--start', help='Initial state', type=int, default=0)
    unfold.add_argument('--expect', help='Expected prefix as JSON', type=str, default=None)
    unfold.set_defaults(func=commands.unfold)

    fusion = subparsers.add_parser('fusion', parents=[common], help='Run a fusion demonstration')
    fusion.add_argument('--demo', choices=tuple(FUSION_DEMOS), required=True)
    fusion.add_argument('--require',
                        help='Fail when the premise does not hold',
                        action='store_true')
    fusion.set_defaults(func=commands.fusion)

    free = _checker(subparsers, 'free-monoid', 'uvp', commands.free_monoid_uvp, common,
                    'Check the universal property of a free monoid')
    free.add_argument('--gens', help='Number of generators', type=int, default=2)
    free.add_argument('--monoid',
                      help='Catalogued monoid (Z3, and, or, trivial) or a monoid document',
                      type=str,
                      default='Z3')
    free.add_argument('--max-len', help='Longest word', type=int, default=MAX_WORD_LENGTH)
    free.add_argument('--images',
                      help='Comma separated images of the generators',
                      type=str,
                      default=None)

    equiv = _checker(subparsers, 'equiv', 'check', commands.equiv_check, common,
                     'Decide whether a functor is an equivalence')
    equiv.add_argument('document', help='Functor document', nargs='?')
    equiv.add_argument('--builtin', choices=commands.BUILTIN_EQUIVALENCES)
    equiv.add_argument('--size', help='Size bound of the builtin functor', type=int, default=3)
    return parser


def render(report: LawReport, as_json: bool) -> str:
    if as_json:
        return json.dumps(report.to_document(), indent=2, sort_keys=True, cls=MontyEncoder)
    return report.to_text()


def run(argv=None) -> int:
    """
    Run one cattool command.

    Returns:
        0 when every check passed or the query was answered, 1 when a law
        failed or a required object does not exist, 2 for input errors.
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    command = args.command
    if getattr(args, 'action', None) is not None:
        command = f'{command} {args.action}'
    try:
        report = args.func(args)
    except SizeLimitError as e:
        LOGGER.debug(f'{command} hit the {e.guard} guard', exc_info=True)
        hint = (f'raise {MAX_SEARCH_ENV} above {e.limit} or shrink the input'
                if e.budget else f'lower {e.guard} to at most {e.limit}')
        report = LawReport.error(command,
                                 f'{e}; {hint}',
                                 guard=e.guard,
                                 value=e.value,
                                 limit=e.limit)
        if not args.json:
            print(f'cattool {command}: size limit: {report.message}', file=sys.stderr)
            return EXIT_CODES[LawReport.ERROR]
    except (ValueError, KeyError, TypeError, OSError) as e:
        LOGGER.debug(f'{command} failed on its input', exc_info=True)
        report = LawReport.error(command, str(e) or type(e).__name__)
        if not args.json:
            print(f'cattool {command}: error: {report.message}', file=sys.stderr)
            return EXIT_CODES[LawReport.ERROR]
    print(render(report, args.json))
    return EXIT_CODES[report.status]


def main():
    sys.exit(run())

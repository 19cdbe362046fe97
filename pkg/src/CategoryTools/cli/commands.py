"""
One function per cattool command. Each takes the parsed arguments and returns
the LawReport that main renders; input problems surface as exceptions.
"""
import json
import logging
import os
from typing import Dict

from CategoryTools.adjunctions import check_adjunction, currying_adjunction
from CategoryTools.categories import MatrixCategory, check_laws, monoid_by_name, sampled_laws
from CategoryTools.category_data import bundled_path
from CategoryTools.cli.documents import DocumentBuilder, parse_document
from CategoryTools.functors import (check_functor, check_naturality, classify_functor,
                                    finset_to_finord, forget_poset)
from CategoryTools.monads import (InstanceParams, check_conversion_roundtrip,
                                  check_kleisli_laws, check_list_bind_distributes,
                                  check_monad_laws, instance, kleisli_to_monad)
from CategoryTools.monoids import check_free_forget_adjunction, check_uvp
from CategoryTools.queries import (check_canonical_isos, classify, classify_all,
                                   find_binary, find_universal)
from CategoryTools.recursion import (apply_fold, check_stream_equations, exp_algebra,
                                     fusion_demo, parse_term, render_term, run, stream_by_name,
                                     stream_take, term_to_list)
from CategoryTools.util.errors import DocumentError, UnknownNameError
from CategoryTools.util.helper import jsonable
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('cattool')

BUILTIN_EQUIVALENCES = ('finset-to-finord', 'forget-poset')
BUILTIN_ADJUNCTIONS = ('currying', 'free-forget')


def resolve_path(path: str) -> str:
    """
    The path itself if it exists, otherwise the bundled document of the same
    file name.
    """
    if os.path.exists(path):
        return path
    bundled = bundled_path(path)
    if bundled is None:
        raise FileNotFoundError(f'no such document: {path}')
    LOGGER.info(f'Using bundled document {bundled}')
    return bundled


def load(path: str) -> Dict:
    return parse_document(resolve_path(path))


def _json_value(text: str, option: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f'{option} is not valid JSON: {e.msg}')


def laws(args) -> LawReport:
    if args.matrix:
        return sampled_laws(MatrixCategory(), samples=args.samples, seed=args.seed)
    if args.document is None:
        raise DocumentError('laws needs a category document or --matrix')
    C = DocumentBuilder().category(load(args.document))
    return check_laws(C)


def _classification_report(c, require: str | None) -> LawReport:
    flags = {'is_mono': c.is_mono, 'is_epi': c.is_epi, 'is_iso': c.is_iso}
    name = f'classify {c.morphism}'
    message = ', '.join(k[3:] for k, v in flags.items() if v) or 'none'
    if require is not None and not flags[f'is_{require}']:
        witnesses = {'morphism': c.morphism, 'required': require}
        witnesses.update(c.witnesses)
        return LawReport.failure(name, witnesses, 1, f'{c.morphism} is not {require}')
    return LawReport.success(name,
                             1,
                             message,
                             inverse=c.inverse,
                             retractions=c.retractions_of,
                             sections=c.sections_of,
                             **flags)


def classify_command(args) -> LawReport:
    C = DocumentBuilder().category(load(args.document))
    if args.morphism is not None:
        return _classification_report(classify(C, args.morphism), args.require)
    children = [_classification_report(c, args.require) for c in classify_all(C).values()]
    return LawReport.combine(f'classify {C.name}', children)


def _universal_report(C, witness, name: str, require: bool) -> LawReport:
    if not witness.exists:
        if require:
            return LawReport.failure(name, {
                'category': C.name,
                'kind': witness.kind
            }, len(C.objects), f'no {witness.kind} exists')
        return LawReport.success(name, len(C.objects), f'no {witness.kind} exists', objects=[])
    isos = check_canonical_isos(C, witness)
    if not isos.passed:
        return LawReport.combine(name, [isos])
    return LawReport(name,
                     LawReport.PASS, {
                         'objects': witness.objects,
                         'mediating': witness.mediating,
                         'canonical_isos': witness.canonical_isos
                     },
                     len(C.objects),
                     ', '.join(witness.objects),
                     children=[isos])


def universal(args) -> LawReport:
    C = DocumentBuilder().category(load(args.document))
    witness = find_universal(C, args.kind)
    return _universal_report(C, witness, f'{args.kind} object', args.require)


def binary(args) -> LawReport:
    C = DocumentBuilder().category(load(args.document))
    witness = find_binary(C, args.kind, args.left, args.right)
    return _universal_report(C, witness, f'{args.kind} of {args.left} and {args.right}',
                             args.require)


def functor_check(args) -> LawReport:
    return check_functor(DocumentBuilder().functor(load(args.document)))


def nattrans_check(args) -> LawReport:
    return check_naturality(DocumentBuilder().nattrans(load(args.document)))


def adjunction_check(args) -> LawReport:
    if args.builtin == 'currying':
        return check_adjunction(currying_adjunction(args.param, args.size))
    if args.builtin == 'free-forget':
        return check_free_forget_adjunction(args.gens, [monoid_by_name(args.monoid)],
                                            args.max_len)
    if args.document is None:
        raise DocumentError('adjunction check needs a document or --builtin')
    return check_adjunction(DocumentBuilder().adjunction(load(args.document)))


def monad_laws(args) -> LawReport:
    params = InstanceParams(args.instance,
                            x=args.x,
                            y=args.y,
                            z=args.z,
                            extra=args.extra,
                            max_len=args.max_len,
                            max_depth=args.max_depth)
    spec = instance(params)
    LOGGER.info(f'Checking the {spec.name} monad')
    children = [
        check_kleisli_laws(spec, params),
        check_monad_laws(kleisli_to_monad(spec), params),
        check_conversion_roundtrip(spec, params)
    ]
    if args.instance == 'list':
        children.append(check_list_bind_distributes(params))
    return LawReport.combine(f'{args.instance} monad', children, message=spec.name)


def _fold_arg(text: str | None):
    if text is None:
        return None
    value = _json_value(text, '--arg')
    if isinstance(value, dict):
        return {int(k): v for k, v in value.items()}
    return value


def fold(args) -> LawReport:
    t = parse_term(args.datatype, args.term)
    shown = render_term(args.datatype, t)
    if args.datatype == 'list':
        value = apply_fold(args.fold, term_to_list(t), arg=_fold_arg(args.arg))
    elif args.datatype == 'exp':
        alg = exp_algebra(args.fold)
        value = run(alg.functor, alg, t)
    else:
        raise UnknownNameError(f'no folds are catalogued for {args.datatype}')
    value = jsonable(value)
    name = f'fold {args.fold}'
    if args.expect is not None:
        expected = _json_value(args.expect, '--expect')
        if value != expected:
            return LawReport.failure(name, {
                'term': shown,
                'value': value,
                'expected': expected
            }, 1, f'{args.fold} {shown} = {value}, expected {expected}')
    return LawReport.success(name, 1, f'{args.fold} {shown} = {value}', term=shown, value=value)


def unfold(args) -> LawReport:
    p = stream_by_name(args.stream, args.start)
    values = jsonable(stream_take(p, args.take))
    name = f'unfold {args.stream}'
    if args.expect is not None:
        expected = _json_value(args.expect, '--expect')
        if values != expected:
            return LawReport.failure(name, {
                'take': args.take,
                'values': values,
                'expected': expected
            }, args.take, 'observed prefix differs from the expected one')
    take = LawReport.success('take', args.take, str(p), values=values)
    return LawReport.combine(name, [take, check_stream_equations(p)])


def fusion(args) -> LawReport:
    result = fusion_demo(args.demo)
    report = result.to_report()
    if args.require and not result.premise_holds:
        return LawReport(report.name, LawReport.FAIL, result.premise_witness, report.checked,
                         'premise does not hold', report.children)
    return report


def free_monoid_uvp(args) -> LawReport:
    if os.path.exists(args.monoid) or args.monoid.endswith('.json'):
        M = DocumentBuilder().monoid(load(args.monoid))
    else:
        M = monoid_by_name(args.monoid)
    if args.images is None:
        images = [M.elements[(x + 1) % M.size] for x in range(args.gens)]
    else:
        by_name = {str(e): e for e in M.elements}
        names = args.images.split(',')
        if len(names) != args.gens:
            raise DocumentError(f'--images needs {args.gens} elements, got {len(names)}')
        try:
            images = [by_name[name.strip()] for name in names]
        except KeyError as e:
            raise UnknownNameError(f'{e.args[0]} is not an element of {M.name}')
    return check_uvp(args.gens, M, images, args.max_len)


def equiv_check(args) -> LawReport:
    if args.builtin == 'finset-to-finord':
        F = finset_to_finord(args.size)
    elif args.builtin == 'forget-poset':
        F = forget_poset(args.size)
    elif args.document is not None:
        F = DocumentBuilder().functor(load(args.document))
    else:
        raise DocumentError('equiv check needs a functor document or --builtin')
    c = classify_functor(F)
    flags = c.flags()
    name = f'equivalence {F.name}'
    message = ', '.join(k for k, v in flags.items() if v) or 'none'
    if not c.is_equivalence:
        witnesses = dict(flags)
        witnesses.update(c.witnesses)
        return LawReport.failure(name, witnesses, len(F.source.morphisms), message)
    return LawReport.success(name, len(F.source.morphisms), message, **flags, **c.witnesses)

"""
F-algebras over polynomial functors, catamorphisms and the initial-algebra
law suite: the commuting square, cata(in) = id, uniqueness, Lambek and fusion.
"""
import itertools
import logging
from typing import Callable, Dict, List, Sequence, Tuple

from monty.json import MSONable

from CategoryTools.categories.fincat import FinCat, require_closed
from CategoryTools.categories.laws import check_laws
from CategoryTools.queries.universal import find_universal
from CategoryTools.recursion.conat import Conat, truncated_conats
from CategoryTools.recursion.polynomial import (ONE, Const, Id, PolyF, Prod, Sum, Term,
                                                const_sizes, enumerate_terms, in_, nat_functor,
                                                polyF_apply, polyF_map)
from CategoryTools.sets.finset import FinSet, enumerate_functions, identity
from CategoryTools.util.constants import (BRUTE_FORCE_UNIQUENESS_LIMIT, MAX_CONST_LABELS,
                                          MAX_TERM_DEPTH, MAX_UNIQUENESS_CARRIER)
from CategoryTools.util.errors import ShapeError
from CategoryTools.util.helper import check_guard
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Catamorphisms')


class AlgebraSpec():
    """
    An F-algebra (C, phi: F C -> C).

    The carrier is finite (a FinSet or a list of values) or a named value
    domain, in which case test_values supplies the bounded vectors that
    premise checks run over.

    Args:
        functor (PolyF): F.
        structure (Callable): phi, applied to values of F(C).
        carrier (FinSet, Sequence): The finite carrier, or None for a value domain.
        name (str): Display name.
        export (Callable): Applied after cata when the algebra computes a
            function through an auxiliary carrier (e.g. a left projection).
        test_values (Sequence): Carrier values for checks over F(C) when the
            carrier is not finite.
    """

    def __init__(self,
                 functor: PolyF,
                 structure: Callable,
                 carrier=None,
                 name: str = 'phi',
                 export: Callable | None = None,
                 test_values: Sequence | None = None):
        self.functor = functor
        self.structure = structure
        if isinstance(carrier, FinSet):
            carrier = list(carrier.elements)
        self.carrier = None if carrier is None else list(carrier)
        self.name = name
        self.export = export
        self.test_values = None if test_values is None else list(test_values)

    @property
    def is_finite(self) -> bool:
        return self.carrier is not None

    @property
    def sample(self) -> List:
        """
        The carrier when it is finite, otherwise the test values.
        """
        if self.carrier is not None:
            return self.carrier
        if self.test_values is None:
            raise ShapeError(f'algebra {self.name} has neither a finite carrier nor test values')
        return self.test_values

    def __call__(self, value):
        return self.structure(value)

    @classmethod
    def from_cases(cls, functor: PolyF, carrier, cases: Dict, name: str = 'phi'):
        """
        An algebra given by its table on F(carrier).
        """
        cases = dict(cases)

        def structure(value):
            try:
                return cases[value]
            except KeyError:
                raise ShapeError(f'algebra {name} has no case for {value!r}')

        return cls(functor, structure, carrier, name=name)

    def __str__(self) -> str:
        return self.name


def initial_algebra(F: PolyF) -> AlgebraSpec:
    return AlgebraSpec(F, in_, name='in')


def maybe_algebra(size: int, z: int, s: Sequence[int], name: str = 'phi') -> AlgebraSpec:
    """
    The Maybe-algebra (X, [z, s]) on X = {0, ..., size-1}.
    """
    cases = {('inl', '*'): z}
    cases.update({('inr', x): s[x] for x in range(size)})
    return AlgebraSpec.from_cases(nat_functor(), FinSet(size), cases, name=name)


def bool_algebra(size: int, b1: int, b2: int) -> AlgebraSpec:
    cases = {('inl', '*'): b1, ('inr', '*'): b2}
    return AlgebraSpec.from_cases(Sum(Const(ONE), Const(ONE)), FinSet(size), cases,
                                  name=f'({b1},{b2})')


def cata(F: PolyF, alg: AlgebraSpec, t: Term):
    """
    The catamorphism: cata(in(s)) = phi(F(cata)(s)).

    Raises:
        ShapeError: if the algebra is over another functor or t does not fit F.
    """
    if alg.functor != F:
        raise ShapeError(f'algebra {alg.name} is over {alg.functor}, not {F}')
    return _cata(F, alg, t)


def _cata(F: PolyF, alg: AlgebraSpec, t: Term):
    if not isinstance(t, Term):
        raise ShapeError(f'{t!r} is not a term')
    return alg.structure(polyF_map(F, lambda s: _cata(F, alg, s))(t.layer))


def run(F: PolyF, alg: AlgebraSpec, t: Term):
    value = cata(F, alg, t)
    return value if alg.export is None else alg.export(value)


def _forced(F: PolyF, alg: AlgebraSpec, terms: Sequence[Term]) -> Dict[Term, object]:
    """
    The values forced by the commuting square, term by term. Subterms come
    first in enumerate_terms order, so every lookup is already filled.
    """
    table: Dict[Term, object] = {}
    for t in terms:
        table[t] = alg.structure(polyF_map(F, table.__getitem__)(t.layer))
    return table


def _commutes(F: PolyF, alg: AlgebraSpec, h: Dict, terms: Sequence[Term]) -> bool:
    for t in terms:
        if h[t] != alg.structure(polyF_map(F, h.__getitem__)(t.layer)):
            return False
    return True


def _square_solutions(F: PolyF, alg: AlgebraSpec,
                      terms: Sequence[Term]) -> Tuple[int, List[Dict], str]:
    """
    The maps from terms into the carrier that make the square commute.

    Brute force when there are at most BRUTE_FORCE_UNIQUENESS_LIMIT candidate
    maps. Otherwise by induction: the square fixes h(t) once the subterms are
    fixed, so there is exactly one solution if every forced value lies in the
    carrier and none otherwise.

    Returns:
        (number of solutions, up to two solutions, method)
    """
    carrier = alg.carrier
    if len(carrier)**len(terms) <= BRUTE_FORCE_UNIQUENESS_LIMIT:
        solutions = []
        count = 0
        for values in itertools.product(carrier, repeat=len(terms)):
            h = dict(zip(terms, values))
            if _commutes(F, alg, h, terms):
                count += 1
                if len(solutions) < 2:
                    solutions.append(h)
        return count, solutions, 'brute force'
    forced = _forced(F, alg, terms)
    if all(v in carrier for v in forced.values()):
        return 1, [forced], 'forced values'
    return 0, [], 'forced values'


def _check_guards(F: PolyF, depth: int) -> None:
    check_guard('depth', depth, MAX_TERM_DEPTH)
    for size in const_sizes(F):
        check_guard('const labels', size, MAX_CONST_LABELS)


def check_cata_laws(F: PolyF,
                    alg: AlgebraSpec,
                    depth: int,
                    carrier_bound: int = MAX_UNIQUENESS_CARRIER) -> LawReport:
    """
    On all terms of depth at most depth: the initial-algebra square commutes
    for cata, cata of the initial algebra is the identity, and cata is the only
    map into the carrier making the square commute.

    Uniqueness is checked for finite carriers of at most carrier_bound values;
    other carriers get the induction argument only.

    Raises:
        SizeLimitError: if depth exceeds 4 or a Const position has more than 3 labels.
    """
    _check_guards(F, depth)
    terms = enumerate_terms(F, depth)
    LOGGER.info(f'Checking {alg.name} over {F} on {len(terms)} terms')
    children = []

    forced = _forced(F, alg, terms)
    failure = None
    for i, t in enumerate(terms):
        value = cata(F, alg, t)
        if value != forced[t]:
            failure = LawReport.failure('initial algebra square', {
                'term': t,
                'cata': value,
                'forced': forced[t]
            }, i + 1)
            break
        if alg.is_finite and value not in alg.carrier:
            failure = LawReport.failure('initial algebra square', {
                'term': t,
                'cata': value
            }, i + 1, 'cata leaves the carrier')
            break
    children.append(failure or LawReport.success('initial algebra square', len(terms)))

    identity_alg = initial_algebra(F)
    failure = None
    for i, t in enumerate(terms):
        if cata(F, identity_alg, t) != t:
            failure = LawReport.failure('cata of in is identity', {
                'term': t,
                'cata': cata(F, identity_alg, t)
            }, i + 1)
            break
    children.append(failure or LawReport.success('cata of in is identity', len(terms)))

    if alg.is_finite and len(alg.carrier) <= carrier_bound:
        count, solutions, method = _square_solutions(F, alg, terms)
        if count == 1 and all(solutions[0][t] == forced[t] for t in terms):
            children.append(LawReport.success('uniqueness', len(terms), method))
        else:
            witnesses = {'solutions': count}
            if len(solutions) > 1:
                other = solutions[0] if solutions[0] != forced else solutions[1]
                t = next(t for t in terms if other[t] != forced[t])
                witnesses.update({'term': t, 'cata': forced[t], 'other': other[t]})
            children.append(LawReport.failure('uniqueness', witnesses, len(terms), method))
    else:
        children.append(
            LawReport.success('uniqueness', len(terms), 'forced by induction on the terms'))

    report = LawReport.combine('catamorphism laws', children, message=f'{alg.name} over {F}')
    LOGGER.debug(f'{alg.name}: {report.status}')
    return report


def count_homomorphisms(F: PolyF, alg: AlgebraSpec, depth: int) -> int:
    """
    Number of maps from the terms of depth at most depth into the finite
    carrier of alg that make the initial-algebra square commute.
    """
    if not alg.is_finite:
        raise ShapeError(f'algebra {alg.name} has no finite carrier')
    count, _, _ = _square_solutions(F, alg, enumerate_terms(F, depth))
    return count


def check_is_catamorphism(F: PolyF, alg: AlgebraSpec, h: Callable, depth: int) -> LawReport:
    """
    A map h that makes the square commute, h(in s) = phi(F(h)(s)), agrees with
    cata on every term of depth at most depth.
    """
    terms = enumerate_terms(F, depth)
    square = None
    for i, t in enumerate(terms):
        expected = alg.structure(polyF_map(F, h)(t.layer))
        if h(t) != expected:
            square = LawReport.failure('square', {
                'term': t,
                'h': h(t),
                'phi of F(h)': expected
            }, i + 1)
            break
    square = square or LawReport.success('square', len(terms))

    agree = None
    for i, t in enumerate(terms):
        if h(t) != cata(F, alg, t):
            agree = LawReport.failure('equals cata', {
                'term': t,
                'h': h(t),
                'cata': cata(F, alg, t)
            }, i + 1)
            break
    agree = agree or LawReport.success('equals cata', len(terms))
    return LawReport.combine('is catamorphism', [square, agree], message=alg.name)


def algebra_homomorphisms(F: PolyF, source: AlgebraSpec, target: AlgebraSpec) -> List[Dict]:
    """
    All maps h between the finite carriers with h(phi(s)) = psi(F(h)(s)).

    The source carrier may be a fragment of a larger algebra: equations whose
    phi(s) falls outside it are skipped.
    """
    homs = []
    values = polyF_apply(F, source.carrier)
    for table in itertools.product(target.carrier, repeat=len(source.carrier)):
        h = dict(zip(source.carrier, table))
        ok = True
        for s in values:
            image = source.structure(s)
            if image not in h:
                continue
            if h[image] != target.structure(polyF_map(F, h.__getitem__)(s)):
                ok = False
                break
        if ok:
            homs.append(h)
    return homs


def conat_algebra(k: int) -> AlgebraSpec:
    """
    (Conat, [zero, succ]) on the fragment Fin(0), ..., Fin(k-1), Inf.
    """

    def structure(value):
        tag, v = value
        return Conat.fin(0) if tag == 'inl' else v.succ()

    return AlgebraSpec(nat_functor(), structure, truncated_conats(k), name='conat')


def check_conat_not_initial(k: int = 3) -> LawReport:
    """
    The conaturals with zero and succ are a Maybe-algebra but not the initial
    one: there are two homomorphisms into ({0, 1}, 0, id), differing at Inf.
    """
    target = maybe_algebra(2, 0, [0, 1], name='(0,id)')
    homs = algebra_homomorphisms(nat_functor(), conat_algebra(k), target)
    witnesses = {'homomorphisms': [{str(x): y for x, y in h.items()} for h in homs]}
    if len(homs) >= 2:
        return LawReport.success('conat algebra is not initial',
                                 len(homs),
                                 f'{len(homs)} homomorphisms into {target.name}',
                                 **witnesses)
    return LawReport.failure('conat algebra is not initial', witnesses, len(homs),
                             'expected at least two homomorphisms')


def lambek_check(F: PolyF, depth: int, inverse: Callable | None = None) -> LawReport:
    """
    in^-1 = cata(F(in)) is a two-sided inverse of in on the terms of depth at
    most depth. A different inverse candidate can be passed to check it instead.
    """
    if inverse is None:
        unfold = AlgebraSpec(F, polyF_map(F, in_), name='F(in)')

        def inverse(t):
            return cata(F, unfold, t)

    terms = enumerate_terms(F, depth)
    children = []
    for name, roundtrip in (('in then inverse', lambda t: inverse(in_(t.layer)) == t.layer),
                            ('inverse then in', lambda t: in_(inverse(t)) == t)):
        failure = None
        for i, t in enumerate(terms):
            if not roundtrip(t):
                failure = LawReport.failure(name, {'term': t, 'inverse': inverse(t)}, i + 1)
                break
        children.append(failure or LawReport.success(name, len(terms)))
    return LawReport.combine('lambek', children, message=str(F))


class FusionReport(MSONable):
    """
    The outcome of a fusion check: whether f is an algebra homomorphism from
    phi to psi (the premise), and whether f after cata(phi) equals cata(psi)
    on the enumerated terms (the conclusion).
    """

    def __init__(self,
                 name: str,
                 premise_holds: bool,
                 conclusion_holds: bool,
                 premise_checked: int = 0,
                 conclusion_checked: int = 0,
                 premise_witness: Dict | None = None,
                 conclusion_witness: Dict | None = None):
        self.name = name
        self.premise_holds = premise_holds
        self.conclusion_holds = conclusion_holds
        self.premise_checked = premise_checked
        self.conclusion_checked = conclusion_checked
        self.premise_witness = premise_witness or {}
        self.conclusion_witness = conclusion_witness or {}

    def to_report(self) -> LawReport:
        if self.premise_holds:
            premise = LawReport.success('premise', self.premise_checked)
        else:
            premise = LawReport.failure('premise', self.premise_witness, self.premise_checked)
        if self.conclusion_holds:
            conclusion = LawReport.success('conclusion', self.conclusion_checked)
        else:
            conclusion = LawReport.failure('conclusion', self.conclusion_witness,
                                           self.conclusion_checked)
        if not self.premise_holds:
            return LawReport(self.name,
                             LawReport.PASS,
                             checked=self.premise_checked,
                             message='premise does not hold, conclusion not asserted',
                             children=[premise, conclusion])
        return LawReport.combine(self.name, [premise, conclusion])


def fusion_check(F: PolyF,
                 phi: AlgebraSpec,
                 psi: AlgebraSpec,
                 f: Callable,
                 depth: int,
                 name: str = 'fusion') -> FusionReport:
    """
    Check the premise phi then f = F(f) then psi on F(carrier of phi), or on
    F of its test values, and the conclusion cata(phi) then f = cata(psi) on
    the terms of depth at most depth.
    """
    premise_values = polyF_apply(F, phi.sample)
    premise_holds, premise_witness = True, None
    for s in premise_values:
        left = f(phi.structure(s))
        right = psi.structure(polyF_map(F, f)(s))
        if left != right:
            premise_holds = False
            premise_witness = {'value': s, 'f after phi': left, 'psi after F(f)': right}
            break

    terms = enumerate_terms(F, depth)
    conclusion_holds, conclusion_witness = True, None
    for t in terms:
        left = f(cata(F, phi, t))
        right = cata(F, psi, t)
        if left != right:
            conclusion_holds = False
            conclusion_witness = {'term': t, 'f after cata phi': left, 'cata psi': right}
            break
    LOGGER.info(f'{name}: premise {premise_holds} on {len(premise_values)} values, '
                f'conclusion {conclusion_holds} on {len(terms)} terms')
    return FusionReport(name, premise_holds, conclusion_holds, len(premise_values), len(terms),
                        premise_witness, conclusion_witness)


def id_algebra_category(C: FinCat) -> FinCat:
    """
    The category of Id-algebras over C: objects are the endomorphisms a: X -> X
    and morphisms (X, a) -> (Y, b) are the h: X -> Y with a then h = h then b.
    Id-coalgebras form the same category.
    """
    require_closed(C, 'id_algebra_category')
    objects = [(f'({X},{a})', (X, a)) for X in C.objects for a in C.hom(X, X)]
    morphisms = []
    identities = {}
    for source, (X, a) in objects:
        for target, (Y, b) in objects:
            for h in C.hom(X, Y):
                if C.compose(a, h) == C.compose(h, b):
                    name = f'{h}:{source}->{target}'
                    morphisms.append((name, source, target, h))
                    if source == target and h == C.identity(X):
                        identities[source] = name
    return FinCat.from_payloads(objects, morphisms, identities, C.compose,
                                name=f'Alg_Id({C.name})')


def _id_structure_check(C: FinCat, kind: str, name: str) -> LawReport:
    witness = find_universal(C, kind)
    if not witness.exists:
        return LawReport.error(name, f'not applicable: {C.name} has no {kind} object')
    X = witness.found[0]
    A = id_algebra_category(C)
    target = f'({X},{C.identity(X)})'
    found = find_universal(A, kind)
    if target in found.objects:
        universal = LawReport.success(f'{kind} in algebras', len(A.objects), **{kind: target})
    else:
        universal = LawReport.failure(f'{kind} in algebras', {
            'expected': target,
            'found': found.objects
        }, len(A.objects))
    return LawReport.combine(name, [check_laws(A), universal], message=C.name)


def initial_object_is_initial_algebra_of_id(C: FinCat) -> LawReport:
    """
    (bottom, id) is the initial Id-algebra when C has an initial object bottom.
    Reports an error when C has no initial object.
    """
    return _id_structure_check(C, 'initial', 'initial algebra of Id')


def terminal_object_is_terminal_coalgebra_of_id(C: FinCat) -> LawReport:
    """
    (top, id) is the terminal Id-coalgebra when C has a terminal object top.
    """
    return _id_structure_check(C, 'terminal', 'terminal coalgebra of Id')


def mu_as_functor(F2: PolyF, f: Callable) -> Callable[[Term], Term]:
    """
    The action of A -> mu F(A, -) on a map f of parameters: the catamorphism of
    the algebra in after F(f, id).
    """
    alg = AlgebraSpec(F2, lambda s: in_(polyF_map(F2, lambda x: x, f)(s)), name='mu(f)')

    def mapped(t: Term) -> Term:
        return cata(F2, alg, t)

    return mapped


def check_mu_functor_laws(F2: PolyF, A: int, depth: int) -> LawReport:
    """
    mu_as_functor preserves identities and composition, for every map between
    parameter sets of size A and every term of depth at most depth.
    """
    check_guard('parameter size', A, 2)
    check_guard('depth', depth, 3)
    P = FinSet(A)
    terms = enumerate_terms(F2, depth, A=P)
    maps = list(enumerate_functions(P, P))

    ident = mu_as_functor(F2, identity(P))
    failure = None
    for t in terms:
        if ident(t) != t:
            failure = LawReport.failure('preserves identity', {'term': t, 'image': ident(t)},
                                        len(terms))
            break
    children = [failure or LawReport.success('preserves identity', len(terms))]

    failure = None
    checked = 0
    for f in maps:
        for g in maps:
            both = mu_as_functor(F2, f.then(g))
            mf, mg = mu_as_functor(F2, f), mu_as_functor(F2, g)
            for t in terms:
                checked += 1
                if both(t) != mg(mf(t)):
                    failure = LawReport.failure('preserves composition', {
                        'f': f,
                        'g': g,
                        'term': t
                    }, checked)
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('preserves composition', checked))
    return LawReport.combine('mu functor laws', children, message=str(F2))


def monoid_as_algebra(M) -> AlgebraSpec:
    """
    The algebra view of a finite monoid over 1 + X x X: the point goes to the
    unit and a pair to its product. Associativity and unit laws are not part
    of the algebra structure.
    """
    F = Sum(Const(ONE), Prod(Id(), Id()))

    def structure(value):
        tag, v = value
        return M.unit if tag == 'inl' else M.multiply(*v)

    return AlgebraSpec(F, structure, M.elements, name=M.name)

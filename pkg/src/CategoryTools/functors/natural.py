"""
Natural transformations, their vertical and horizontal composites, and the
functor category between two finite categories.
"""
import itertools
import logging
from typing import Callable, Dict, Iterator, List

from monty.json import MSONable

from CategoryTools.categories.fincat import FinCat, require_closed
from CategoryTools.functors.functor import (FunctorData, compose_functors,
                                            enumerate_functors, same_functor)
from CategoryTools.queries.classify import find_inverse
from CategoryTools.util.errors import ShapeError, UnknownNameError
from CategoryTools.util.helper import SearchBudget
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('NaturalTransformations')


class NatTransData(MSONable):
    """
    A natural transformation alpha: F => G between functors C -> D.

    Args:
        source_functor: F.
        target_functor: G, with the same source and target categories as F.
        components (dict, Callable): Object X of C -> alpha_X: F(X) -> G(X) in D.
            A callable is evaluated on demand.
        name (str): Display name.
    """

    def __init__(self,
                 source_functor,
                 target_functor,
                 components: Dict | Callable,
                 name: str = 'alpha'):
        self.source_functor = source_functor
        self.target_functor = target_functor
        self.components = components
        self.name = name

    @property
    def source(self):
        return self.source_functor.source

    @property
    def target(self):
        return self.source_functor.target

    def component(self, X):
        if callable(self.components):
            return self.components(X)
        try:
            return self.components[X]
        except KeyError:
            raise UnknownNameError(f'{self.name} has no component at {X}')

    def table(self) -> Dict:
        return {X: self.component(X) for X in self.source.objects}

    def as_dict(self) -> dict:
        return {
            '@module': type(self).__module__,
            '@class': type(self).__name__,
            'source_functor': self.source_functor.as_dict(),
            'target_functor': self.target_functor.as_dict(),
            'components': {str(X): str(a) for X, a in self.table().items()},
            'name': self.name
        }

    @classmethod
    def from_dict(cls, d: dict) -> 'NatTransData':
        return cls(FunctorData.from_dict(d['source_functor']),
                   FunctorData.from_dict(d['target_functor']), d['components'],
                   name=d.get('name', 'alpha'))

    def __repr__(self) -> str:
        return (f'NatTransData({self.name}: {self.source_functor.name} => '
                f'{self.target_functor.name})')


def check_naturality(alpha: NatTransData) -> LawReport:
    """
    For every f: X -> Y of the source, alpha_X then G(f) = F(f) then alpha_Y.

    A missing or ill-typed component is reported with status 'error'.
    """
    F, G = alpha.source_functor, alpha.target_functor
    C, D = alpha.source, alpha.target
    require_closed(C, 'check_naturality')
    for X in C.objects:
        try:
            a = alpha.component(X)
            ok = D.dom(a) == F.on_object(X) and D.cod(a) == G.on_object(X)
        except KeyError as e:
            return LawReport.error('naturality', str(e), object=X)
        if not ok:
            return LawReport.error('naturality',
                                   f'component at {X} is not a morphism '
                                   f'{F.on_object(X)} -> {G.on_object(X)}',
                                   object=X,
                                   component=a)
    checked = 0
    for f in C.morphisms:
        X, Y = C.dom(f), C.cod(f)
        left = D.compose(alpha.component(X), G.on_morphism(f))
        right = D.compose(F.on_morphism(f), alpha.component(Y))
        checked += 1
        if left != right:
            return LawReport.failure('naturality', {
                'f': f,
                'component_at_dom': alpha.component(X),
                'component_at_cod': alpha.component(Y),
                'left': left,
                'right': right
            }, checked, f'the naturality square of {f} does not commute')
    return LawReport.success('naturality', checked, alpha.name)


def identity_transformation(F) -> NatTransData:
    D = F.target
    if isinstance(F, FunctorData):
        components = {X: D.identity(F.on_object(X)) for X in F.source.objects}
    else:

        def components(X):
            return D.identity(F.on_object(X))

    return NatTransData(F, F, components, name=f'id_{F.name}')


def vcompose(alpha: NatTransData, beta: NatTransData) -> NatTransData:
    """
    Vertical composite F => G => H, componentwise alpha_X then beta_X.

    Raises:
        ShapeError: if the target functor of alpha is not the source functor of beta.
    """
    if not same_functor(alpha.target_functor, beta.source_functor):
        raise ShapeError(f'{alpha.name} ends at {alpha.target_functor.name} but '
                         f'{beta.name} starts at {beta.source_functor.name}')
    D = alpha.target

    def component(X):
        return D.compose(alpha.component(X), beta.component(X))

    components = component
    if isinstance(alpha.components, dict) and isinstance(beta.components, dict):
        components = {X: component(X) for X in alpha.source.objects}
    return NatTransData(alpha.source_functor, beta.target_functor, components,
                        name=f'{alpha.name}·{beta.name}')


def _check_horizontal_shape(alpha: NatTransData, beta: NatTransData) -> None:
    D = alpha.target
    if beta.source is not D and beta.source != D:
        raise ShapeError(f'{beta.name} does not start at the target category of {alpha.name}')


def hcompose(alpha: NatTransData, beta: NatTransData) -> NatTransData:
    """
    Horizontal composite of alpha: F => G (C -> D) and beta: H => K (D -> E),
    a transformation F·H => G·K with component H(alpha_X) then beta_{G X}.
    """
    _check_horizontal_shape(alpha, beta)
    G = alpha.target_functor
    H = beta.source_functor
    E = beta.target

    def component(X):
        return E.compose(H.on_morphism(alpha.component(X)), beta.component(G.on_object(X)))

    return NatTransData(compose_functors(alpha.source_functor, H),
                        compose_functors(G, beta.target_functor),
                        _tabulate(component, alpha, beta),
                        name=f'{alpha.name}∙{beta.name}')


def hcompose_alternate(alpha: NatTransData, beta: NatTransData) -> NatTransData:
    """
    The other formula for the horizontal composite: beta_{F X} then K(alpha_X).
    """
    _check_horizontal_shape(alpha, beta)
    F = alpha.source_functor
    K = beta.target_functor
    E = beta.target

    def component(X):
        return E.compose(beta.component(F.on_object(X)), K.on_morphism(alpha.component(X)))

    return NatTransData(compose_functors(F, beta.source_functor),
                        compose_functors(alpha.target_functor, K),
                        _tabulate(component, alpha, beta),
                        name=f'{alpha.name}∙{beta.name}')


def _tabulate(component, alpha, beta):
    if isinstance(alpha.components, dict) and isinstance(beta.components, dict):
        return {X: component(X) for X in alpha.source.objects}
    return component


def hcompose_agreement(alpha: NatTransData, beta: NatTransData) -> LawReport:
    """
    Both formulas for the horizontal composite give the same components.
    """
    first, second = hcompose(alpha, beta), hcompose_alternate(alpha, beta)
    checked = 0
    for X in alpha.source.objects:
        checked += 1
        a, b = first.component(X), second.component(X)
        if a != b:
            return LawReport.failure('horizontal composite agreement', {
                'object': X,
                'first': a,
                'second': b
            }, checked)
    return LawReport.success('horizontal composite agreement', checked)


def enumerate_transformations(F: FunctorData,
                              G: FunctorData,
                              budget: SearchBudget | None = None) -> Iterator[NatTransData]:
    """
    All natural transformations F => G between functors of FinCats.
    """
    C, D = F.source, F.target
    if budget is None:
        budget = SearchBudget('natural transformation search')
    choices = [D.hom(F.on_object(X), G.on_object(X)) for X in C.objects]
    for components in itertools.product(*choices):
        budget.spend()
        table = dict(zip(C.objects, components))
        if all(
                D.compose(table[C.dom(f)], G.on_morphism(f)) == D.compose(
                    F.on_morphism(f), table[C.cod(f)]) for f in C.morphisms):
            yield NatTransData(F, G, table, name=f'{F.name}=>{G.name}')


def functor_category(C: FinCat, D: FinCat) -> FinCat:
    """
    The category [C, D]: objects are all functors C -> D (named F0, F1, ...)
    and morphisms all natural transformations, composed vertically.

    Raises:
        SizeLimitError: if the functor or transformation search exceeds the cap.
    """
    require_closed(C, 'functor_category')
    require_closed(D, 'functor_category')
    budget = SearchBudget('functor category')
    functors = list(enumerate_functors(C, D, budget))
    LOGGER.info(f'[{C.name}, {D.name}] has {len(functors)} functors')
    objects = [(F.name, F) for F in functors]
    morphisms = []
    identities = {}
    for F in functors:
        for G in functors:
            for alpha in enumerate_transformations(F, G, budget):
                payload = tuple(alpha.component(X) for X in C.objects)
                name = f'{F.name}=>{G.name}:[' + ','.join(payload) + ']'
                morphisms.append((name, F.name, G.name, payload))
                if F is G and all(D.is_identity(a) for a in payload):
                    identities[F.name] = name

    def compose_payload(p, q):
        return tuple(D.compose(a, b) for a, b in zip(p, q))

    return FinCat.from_payloads(objects, morphisms, identities, compose_payload,
                                name=f'[{C.name},{D.name}]')


def _isomorphisms(D, X, Y):
    listed = getattr(D, 'isomorphisms', None)
    if listed is not None:
        return listed(X, Y)
    return tuple(f for f in D.hom(X, Y) if find_inverse(D, f) is not None)


def find_natural_iso(F, G, budget: SearchBudget | None = None) -> NatTransData | None:
    """
    A natural isomorphism F => G, or None.

    Components are chosen object by object among the isomorphisms F(X) -> G(X),
    checking every naturality square between already chosen objects.
    """
    C, D = F.source, F.target
    if budget is None:
        budget = SearchBudget('natural iso search')
    objects = list(C.objects)
    candidates = [_isomorphisms(D, F.on_object(X), G.on_object(X)) for X in objects]
    squares: List[List] = [[] for _ in objects]
    index = {X: i for i, X in enumerate(objects)}
    for f in C.morphisms:
        squares[max(index[C.dom(f)], index[C.cod(f)])].append(f)

    chosen = {}

    def search(i):
        if i == len(objects):
            return True
        X = objects[i]
        for a in candidates[i]:
            budget.spend()
            chosen[X] = a
            if all(
                    D.compose(chosen[C.dom(f)], G.on_morphism(f)) == D.compose(
                        F.on_morphism(f), chosen[C.cod(f)]) for f in squares[i]):
                if search(i + 1):
                    return True
        chosen.pop(X, None)
        return False

    if not search(0):
        return None
    return NatTransData(F, G, dict(chosen), name=f'{F.name}~{G.name}')

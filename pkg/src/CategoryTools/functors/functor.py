"""
Functors between finite categories.

A functor is anything with source and target categories and on_object /
on_morphism maps. FunctorData is the tabulated form between FinCats; the set
functors in set_functors.py compute their action instead.
"""
import itertools
import logging
from typing import Dict, Iterator, List

from monty.json import MSONable

from CategoryTools.categories.constructors import op_name, opposite
from CategoryTools.categories.fincat import FinCat, require_closed
from CategoryTools.util.errors import UnknownNameError
from CategoryTools.util.helper import SearchBudget
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Functors')


class FunctorData(MSONable):
    """
    A functor between FinCats given by its object and morphism tables.

    Args:
        source (FinCat): Domain category.
        target (FinCat): Codomain category.
        obj_map (dict): Object id -> object id.
        mor_map (dict): Morphism id -> morphism id.
        name (str): Display name.
    """

    def __init__(self,
                 source: FinCat,
                 target: FinCat,
                 obj_map: Dict[str, str],
                 mor_map: Dict[str, str],
                 name: str = 'F'):
        self.source = source
        self.target = target
        self.obj_map = {str(k): str(v) for k, v in obj_map.items()}
        self.mor_map = {str(k): str(v) for k, v in mor_map.items()}
        self.name = name

    def on_object(self, X: str) -> str:
        try:
            return self.obj_map[X]
        except KeyError:
            raise UnknownNameError(f'{self.name} has no image for object {X}')

    def on_morphism(self, f: str) -> str:
        try:
            return self.mor_map[f]
        except KeyError:
            raise UnknownNameError(f'{self.name} has no image for morphism {f}')

    def __call__(self, f: str) -> str:
        return self.on_morphism(f)

    def __repr__(self) -> str:
        return f'FunctorData({self.name}: {self.source.name} -> {self.target.name})'


class IdentityFunctor():
    """
    The identity functor on any category, including lazily presented ones.
    """

    def __init__(self, C):
        self.source = C
        self.target = C
        self.name = f'id_{getattr(C, "name", "C")}'

    def on_object(self, X):
        return X

    def on_morphism(self, f):
        return f


class ComposedFunctor():
    """
    The diagrammatic composite "F then G" of two functors given by their actions.
    """

    def __init__(self, F, G):
        self.F = F
        self.G = G
        self.source = F.source
        self.target = G.target
        self.name = f'{F.name}·{G.name}'

    def on_object(self, X):
        return self.G.on_object(self.F.on_object(X))

    def on_morphism(self, f):
        return self.G.on_morphism(self.F.on_morphism(f))


def identity_functor(C):
    if isinstance(C, FinCat):
        return FunctorData(C, C, {X: X for X in C.objects}, {f: f for f in C.morphisms},
                           name=f'id_{C.name}')
    return IdentityFunctor(C)


def constant_functor(C: FinCat, D: FinCat, Y: str) -> FunctorData:
    i = D.identity(Y)
    return FunctorData(C, D, {X: Y for X in C.objects}, {f: i for f in C.morphisms},
                       name=f'const_{Y}')


def compose_functors(F, G):
    """
    F then G, i.e. X -> G(F(X)).
    """
    if isinstance(F, FunctorData) and isinstance(G, FunctorData):
        return FunctorData(F.source, G.target,
                           {X: G.on_object(F.on_object(X)) for X in F.source.objects},
                           {f: G.on_morphism(F.on_morphism(f)) for f in F.source.morphisms},
                           name=f'{F.name}·{G.name}')
    return ComposedFunctor(F, G)


def same_functor(F, G) -> bool:
    """
    Pointwise equality on the objects and morphisms of the common source.
    """
    if F.source is not G.source and F.source != G.source:
        return False
    return (all(F.on_object(X) == G.on_object(X) for X in F.source.objects)
            and all(F.on_morphism(f) == G.on_morphism(f) for f in F.source.morphisms))


def check_structure(F) -> LawReport:
    """
    Every image exists and morphism images have the mapped domain and codomain.
    """
    C, D = F.source, F.target
    checked = 0
    for f in C.morphisms:
        checked += 1
        try:
            Ff = F.on_morphism(f)
            source, target = F.on_object(C.dom(f)), F.on_object(C.cod(f))
            dom, cod = D.dom(Ff), D.cod(Ff)
        except KeyError as e:
            return LawReport.error('functor structure', str(e), morphism=f)
        if dom != source or cod != target:
            return LawReport.error('functor structure',
                                   f'{f} is sent to {Ff}: {dom} -> {cod}, '
                                   f'expected {source} -> {target}',
                                   morphism=f,
                                   image=Ff)
    for X in C.objects:
        try:
            F.on_object(X)
        except KeyError as e:
            return LawReport.error('functor structure', str(e), object=X)
    return LawReport.success('functor structure', checked)


def check_functor(F) -> LawReport:
    """
    Verify F(id_X) = id_FX for every object and F(f then g) = F(f) then F(g)
    for every composable pair of the source.

    Ill-typed object or morphism tables give an 'error' report before any law
    is checked.
    """
    C, D = F.source, F.target
    require_closed(C, 'check_functor')
    structure = check_structure(F)
    if structure.status == LawReport.ERROR:
        return LawReport.combine('functor laws', [structure])

    checked = 0
    identity = None
    for X in C.objects:
        checked += 1
        image = F.on_morphism(C.identity(X))
        expected = D.identity(F.on_object(X))
        if image != expected:
            identity = LawReport.failure('preserves identity', {
                'object': X,
                'image': image,
                'expected': expected
            }, checked)
            break
    if identity is None:
        identity = LawReport.success('preserves identity', checked)

    checked = 0
    composition = None
    for f, g in C.composable_pairs():
        checked += 1
        left = F.on_morphism(C.compose(f, g))
        right = D.compose(F.on_morphism(f), F.on_morphism(g))
        if left != right:
            composition = LawReport.failure('preserves composition', {
                'f': f,
                'g': g,
                'image_of_composite': left,
                'composite_of_images': right
            }, checked)
            break
    if composition is None:
        composition = LawReport.success('preserves composition', checked)
    report = LawReport.combine('functor laws', [structure, identity, composition],
                               message=getattr(F, 'name', ''))
    LOGGER.debug(f'{getattr(F, "name", F)}: {report.status}')
    return report


def enumerate_functors(C: FinCat, D: FinCat, budget: SearchBudget | None = None) -> Iterator[FunctorData]:
    """
    All functors C -> D, found by backtracking over object assignments and then
    morphism assignments, pruning as soon as a composite is fully assigned.

    Raises:
        SizeLimitError: if more candidates than the search cap are visited.
    """
    require_closed(C, 'enumerate_functors')
    require_closed(D, 'enumerate_functors')
    if budget is None:
        budget = SearchBudget('functor search')
    morphisms = [f for f in C.morphisms if not C.is_identity(f)]
    position = {f: i for i, f in enumerate(morphisms)}
    # constraints (f, g, f then g) checked once the last of the three is assigned
    checks: List[List] = [[] for _ in morphisms]
    for f, g in C.composable_pairs():
        h = C.compose(f, g)
        involved = [position[m] for m in (f, g, h) if m in position]
        if involved:
            checks[max(involved)].append((f, g, h))

    count = 0
    for images in itertools.product(D.objects, repeat=len(C.objects)):
        budget.spend()
        obj_map = dict(zip(C.objects, images))
        mor_map = {C.identity(X): D.identity(obj_map[X]) for X in C.objects}
        for table in _assign(C, D, morphisms, 0, obj_map, mor_map, checks, budget):
            yield FunctorData(C, D, obj_map, table, name=f'F{count}')
            count += 1


def _assign(C, D, morphisms, i, obj_map, mor_map, checks, budget):
    if i == len(morphisms):
        yield dict(mor_map)
        return
    f = morphisms[i]
    for image in D.hom(obj_map[C.dom(f)], obj_map[C.cod(f)]):
        budget.spend()
        mor_map[f] = image
        if all(D.compose(mor_map[a], mor_map[b]) == mor_map[c] for a, b, c in checks[i]):
            yield from _assign(C, D, morphisms, i + 1, obj_map, mor_map, checks, budget)
    mor_map.pop(f, None)


def check_functor_composition(C: FinCat, D: FinCat, E: FinCat, G: FinCat) -> LawReport:
    """
    Functor composition is associative and unital on every enumerated triple
    C -> D -> E -> G.
    """
    checked = 0
    Fs, Hs, Ks = (list(enumerate_functors(*pair)) for pair in ((C, D), (D, E), (E, G)))
    for F in Fs:
        if not (same_functor(compose_functors(identity_functor(C), F), F)
                and same_functor(compose_functors(F, identity_functor(D)), F)):
            return LawReport.failure('functor composition', {'law': 'unit', 'F': F.name})
        for H in Hs:
            FH = compose_functors(F, H)
            for K in Ks:
                checked += 1
                left = compose_functors(FH, K)
                right = compose_functors(F, compose_functors(H, K))
                if not same_functor(left, right):
                    return LawReport.failure('functor composition', {
                        'law': 'associativity',
                        'F': F.name,
                        'G': H.name,
                        'H': K.name
                    }, checked)
    return LawReport.success('functor composition', checked)


class ContravariantFunctorData(MSONable):
    """
    A contravariant functor: mor_map sends f: X -> Y to F(f): F(Y) -> F(X).

    Args:
        source (FinCat): Domain category.
        target (FinCat): Codomain category.
        obj_map (dict): Object id -> object id.
        mor_map (dict): Morphism id -> morphism id, direction reversed.
        name (str): Display name.
    """

    contravariant = True

    def __init__(self,
                 source: FinCat,
                 target: FinCat,
                 obj_map: Dict[str, str],
                 mor_map: Dict[str, str],
                 name: str = 'P'):
        self.source = source
        self.target = target
        self.obj_map = {str(k): str(v) for k, v in obj_map.items()}
        self.mor_map = {str(k): str(v) for k, v in mor_map.items()}
        self.name = name

    def on_object(self, X: str) -> str:
        try:
            return self.obj_map[X]
        except KeyError:
            raise UnknownNameError(f'{self.name} has no image for object {X}')

    def on_morphism(self, f: str) -> str:
        try:
            return self.mor_map[f]
        except KeyError:
            raise UnknownNameError(f'{self.name} has no image for morphism {f}')

    def to_covariant(self) -> FunctorData:
        """
        The same data as a covariant functor out of opposite(source).
        """
        return FunctorData(opposite(self.source), self.target, self.obj_map,
                           {op_name(f): g for f, g in self.mor_map.items()},
                           name=f'{self.name}^op')

    @classmethod
    def from_covariant(cls, F: FunctorData, source: FinCat | None = None) -> 'ContravariantFunctorData':
        """
        Read a functor out of an opposite category as a contravariant functor on
        the original category (source, or opposite(F.source) when not given).
        """
        if source is None:
            source = opposite(F.source)
        return cls(source, F.target, F.obj_map,
                   {op_name(f): g for f, g in F.mor_map.items()},
                   name=op_name(F.name))


def check_contravariant_functor(F: ContravariantFunctorData) -> LawReport:
    """
    Verify F(id_X) = id_FX and F(f then g) = F(g) then F(f).
    """
    C, D = F.source, F.target
    require_closed(C, 'check_contravariant_functor')
    checked = 0
    for f in C.morphisms:
        checked += 1
        try:
            Ff = F.on_morphism(f)
            ok = (D.dom(Ff) == F.on_object(C.cod(f)) and D.cod(Ff) == F.on_object(C.dom(f)))
        except KeyError as e:
            return LawReport.error('contravariant functor laws', str(e), morphism=f)
        if not ok:
            return LawReport.error('contravariant functor laws',
                                   f'{f} is not sent to a reversed morphism', morphism=f)
    children = [LawReport.success('functor structure', checked)]

    checked = 0
    for X in C.objects:
        checked += 1
        image = F.on_morphism(C.identity(X))
        if image != D.identity(F.on_object(X)):
            children.append(LawReport.failure('preserves identity', {
                'object': X,
                'image': image
            }, checked))
            break
    else:
        children.append(LawReport.success('preserves identity', checked))

    checked = 0
    for f, g in C.composable_pairs():
        checked += 1
        left = F.on_morphism(C.compose(f, g))
        right = D.compose(F.on_morphism(g), F.on_morphism(f))
        if left != right:
            children.append(LawReport.failure('reverses composition', {
                'f': f,
                'g': g,
                'image_of_composite': left,
                'reversed_composite': right
            }, checked))
            break
    else:
        children.append(LawReport.success('reverses composition', checked))
    return LawReport.combine('contravariant functor laws', children, message=F.name)

"""
Initial and terminal objects, binary products and coproducts.

Products are found literally as terminal objects of the category of cones over
a pair of objects, and coproducts as initial objects of the category of cocones.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from monty.json import MSONable

from CategoryTools.categories.constructors import opposite
from CategoryTools.categories.fincat import FinCat, require_closed
from CategoryTools.queries.classify import find_inverse
from CategoryTools.sets.finset import product
from CategoryTools.util.errors import UnknownNameError
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('UniversalSearch')

KINDS = ('initial', 'terminal')
BINARY_KINDS = ('product', 'coproduct')


@dataclass(frozen=True)
class Cone:
    """
    A cone (apex, left leg, right leg). For cocones the legs point into the apex.
    """
    apex: str
    left: str
    right: str

    def __str__(self) -> str:
        return f'{self.apex};{self.left},{self.right}'


class UniversalWitness(MSONable):
    """
    All objects with a universal property, with the mediating morphisms that
    certify it and the canonical isomorphisms between them.

    Args:
        kind (str): 'initial', 'terminal', 'product' or 'coproduct'.
        objects (list): Ids of the qualifying objects (cones are written
            'apex;left,right').
        mediating (dict): For every qualifying object, test object -> the unique
            mediating morphism.
        canonical_isos (list): Rows [source, target, morphism], the unique
            mediating morphism between each ordered pair of qualifying objects.
    """

    def __init__(self,
                 kind: str,
                 objects: List[str],
                 mediating: Dict[str, Dict[str, str]] | None = None,
                 canonical_isos: List[List[str]] | None = None):
        self.kind = kind
        self.objects = list(objects)
        self.mediating = dict(mediating or {})
        self.canonical_isos = [list(row) for row in canonical_isos or []]
        self.found = []

    @property
    def exists(self) -> bool:
        return bool(self.objects)

    def iso(self, source: str, target: str) -> str:
        for s, t, m in self.canonical_isos:
            if s == source and t == target:
                return m
        raise UnknownNameError(f'no canonical iso {source} -> {target}')

    def __repr__(self) -> str:
        return f'UniversalWitness({self.kind}, {self.objects})'


class ConeCategory():
    """
    Cones over (A, B) in C, or cocones under (A, B) when dual is True.

    A morphism of cones is a morphism h between apexes commuting with the legs.
    Hom-sets are computed per (cone, apex) by grouping the apex morphisms by the
    legs they induce.

    Args:
        C (FinCat): The ambient category.
        A (str): Left object.
        B (str): Right object.
        dual (bool): Cocones instead of cones.
    """

    closed = True

    def __init__(self, C: FinCat, A: str, B: str, dual: bool = False):
        self.C = C
        self.A = A
        self.B = B
        self.dual = dual
        self.name = f'{"Cocone" if dual else "Cone"}({A},{B})'
        self.objects = [Cone(Q, q1, q2) for Q in C.objects
                        for q1 in self._legs(Q, A) for q2 in self._legs(Q, B)]
        self._fibre_cache: Dict[Tuple[Cone, str], Dict[Tuple[str, str], List[str]]] = {}

    def _legs(self, Q: str, X: str) -> Tuple[str, ...]:
        return self.C.hom(X, Q) if self.dual else self.C.hom(Q, X)

    def _fibres(self, fixed: Cone, other: str) -> Dict[Tuple[str, str], List[str]]:
        """
        For cones: the morphisms other -> fixed.apex grouped by the legs they
        induce on other. For cocones: fixed.apex -> other, grouped likewise.
        """
        key = (fixed, other)
        fibres = self._fibre_cache.get(key)
        if fibres is None:
            C = self.C
            fibres = {}
            if self.dual:
                for h in C.hom(fixed.apex, other):
                    legs = (C.compose(fixed.left, h), C.compose(fixed.right, h))
                    fibres.setdefault(legs, []).append(h)
            else:
                for h in C.hom(other, fixed.apex):
                    legs = (C.compose(h, fixed.left), C.compose(h, fixed.right))
                    fibres.setdefault(legs, []).append(h)
            self._fibre_cache[key] = fibres
        return fibres

    def hom(self, c1: Cone, c2: Cone) -> Tuple[str, ...]:
        if self.dual:
            return tuple(self._fibres(c1, c2.apex).get((c2.left, c2.right), ()))
        return tuple(self._fibres(c2, c1.apex).get((c1.left, c1.right), ()))

    def hom_count(self, c1: Cone, c2: Cone) -> int:
        return len(self.hom(c1, c2))

    def identity(self, c: Cone) -> str:
        return self.C.identity(c.apex)

    def compose(self, h: str, k: str) -> str:
        return self.C.compose(h, k)

    def is_universal(self, P: Cone) -> bool:
        """
        Whether P is a product cone (terminal cone) or, for cocones, a coproduct
        cocone (initial cocone). For every apex Q the morphisms between Q and the
        apex of P must induce every pair of legs exactly once.
        """
        C = self.C
        for Q in C.objects:
            pairs = len(self._legs(Q, self.A)) * len(self._legs(Q, self.B))
            between = C.hom_count(P.apex, Q) if self.dual else C.hom_count(Q, P.apex)
            if between != pairs:
                return False
        for Q in C.objects:
            fibres = self._fibres(P, Q)
            if any(len(hs) != 1 for hs in fibres.values()):
                return False
        return True

    def qualifies(self, P: Cone, kind: str) -> bool:
        if kind == ('initial' if self.dual else 'terminal'):
            return self.is_universal(P)
        return _qualifies_by_count(self, P, kind)

    def to_fincat(self) -> FinCat:
        """
        Materialize the cone category. Only sensible for small ambient categories.
        """
        C = self.C
        objects = [(str(c), c) for c in self.objects]
        morphisms = []
        identities = {}
        for c1 in self.objects:
            for c2 in self.objects:
                for h in self.hom(c1, c2):
                    name = f'{h}@{c1}->{c2}'
                    morphisms.append((name, str(c1), str(c2), h))
                    if c1 == c2 and h == C.identity(c1.apex):
                        identities[str(c1)] = name
        return FinCat.from_payloads(objects, morphisms, identities, C.compose, name=self.name)


def _hom_count(C, X, Y) -> int:
    counter = getattr(C, 'hom_count', None)
    if counter is not None:
        return counter(X, Y)
    return len(C.hom(X, Y))


def _qualifies_by_count(C, X, kind: str) -> bool:
    if kind == 'initial':
        return all(_hom_count(C, X, Y) == 1 for Y in C.objects)
    return all(_hom_count(C, Y, X) == 1 for Y in C.objects)


def find_universal(C, kind: str) -> UniversalWitness:
    """
    All initial (or terminal) objects of C.

    Returns:
        UniversalWitness listing exactly the X with |Hom(X, Y)| = 1 for every Y
        (respectively |Hom(Y, X)| = 1), the mediating morphisms, and the unique
        morphisms between qualifying objects as canonical isos.
    """
    require_closed(C, 'find_universal')
    if kind not in KINDS:
        raise UnknownNameError(f'unknown universal kind {kind}')
    qualifies = getattr(C, 'qualifies', None)
    found = []
    for X in C.objects:
        ok = qualifies(X, kind) if qualifies is not None else _qualifies_by_count(C, X, kind)
        if ok:
            found.append(X)
    LOGGER.debug(f'{kind} objects of {getattr(C, "name", C)}: {[str(X) for X in found]}')

    mediating = {}
    for X in found:
        if kind == 'initial':
            mediating[str(X)] = {str(Y): str(C.hom(X, Y)[0]) for Y in C.objects}
        else:
            mediating[str(X)] = {str(Y): str(C.hom(Y, X)[0]) for Y in C.objects}
    canonical_isos = [[str(X), str(Y), str(C.hom(X, Y)[0])]
                      for X in found for Y in found if X != Y]
    witness = UniversalWitness(kind, [str(X) for X in found], mediating, canonical_isos)
    witness.found = found
    return witness


def find_binary(C: FinCat, kind: str, A: str, B: str) -> UniversalWitness:
    """
    All products (terminal cones) or coproducts (initial cocones) of A and B.
    """
    require_closed(C, 'find_binary')
    if kind not in BINARY_KINDS:
        raise UnknownNameError(f'unknown binary kind {kind}')
    C.identity(A)
    C.identity(B)
    cones = ConeCategory(C, A, B, dual=(kind == 'coproduct'))
    LOGGER.info(f'Searching {len(cones.objects)} {"cocones" if cones.dual else "cones"} '
                f'over ({A}, {B})')
    witness = find_universal(cones, 'initial' if cones.dual else 'terminal')
    witness.kind = kind
    return witness


def check_canonical_isos(C, witness: UniversalWitness) -> LawReport:
    """
    The canonical isos between qualifying objects compose to identities in
    both orders.
    """
    checked = 0
    lookup = {str(X): X for X in witness.found}
    for source, target, m in witness.canonical_isos:
        back = witness.iso(target, source)
        X, Y = lookup[source], lookup[target]
        checked += 1
        if (C.compose(m, back) != C.identity(_apex(X))
                or C.compose(back, m) != C.identity(_apex(Y))):
            return LawReport.failure('canonical isos', {
                'source': source,
                'target': target,
                'iso': m,
                'inverse': back
            }, checked)
    return LawReport.success('canonical isos', checked)


def _apex(X):
    return X.apex if isinstance(X, Cone) else X


def check_universal_transport(C: FinCat, witness: UniversalWitness) -> LawReport:
    """
    Transport the universal property along every isomorphism touching a
    qualifying object and re-verify it on the transported structure.
    """
    require_closed(C, 'check_universal_transport')
    checked = 0
    name = f'{witness.kind} transport'
    if witness.kind in KINDS:
        for X in witness.found:
            for Z in C.objects:
                isos = C.hom(X, Z) if witness.kind == 'initial' else C.hom(Z, X)
                for i in isos:
                    if find_inverse(C, i) is None:
                        continue
                    checked += 1
                    if not _qualifies_by_count(C, Z, witness.kind):
                        return LawReport.failure(name, {'object': str(X), 'iso': i, 'to': Z},
                                                 checked)
        return LawReport.success(name, checked)

    cones = ConeCategory(C, *_factors(witness, C), dual=(witness.kind == 'coproduct'))
    for P in witness.found:
        for Q in C.objects:
            if cones.dual:
                candidates = C.hom(P.apex, Q)
            else:
                candidates = C.hom(Q, P.apex)
            for i in candidates:
                if find_inverse(C, i) is None:
                    continue
                if cones.dual:
                    moved = Cone(Q, C.compose(P.left, i), C.compose(P.right, i))
                else:
                    moved = Cone(Q, C.compose(i, P.left), C.compose(i, P.right))
                checked += 1
                if not cones.is_universal(moved):
                    return LawReport.failure(name, {
                        'cone': str(P),
                        'iso': i,
                        'transported': str(moved)
                    }, checked)
    return LawReport.success(name, checked)


def _factors(witness: UniversalWitness, C: FinCat) -> Tuple[str, str]:
    P = witness.found[0]
    if witness.kind == 'coproduct':
        return C.dom(P.left), C.dom(P.right)
    return C.cod(P.left), C.cod(P.right)


def check_opposite_duality(C: FinCat) -> LawReport:
    """
    The terminal objects of C are the initial objects of its opposite, and
    vice versa.
    """
    op = opposite(C)
    children = []
    for kind, dual in (('terminal', 'initial'), ('initial', 'terminal')):
        here = find_universal(C, kind).objects
        there = find_universal(op, dual).objects
        if here != there:
            children.append(LawReport.failure(f'{kind} vs opposite {dual}', {
                kind: here,
                f'opposite {dual}': there
            }))
        else:
            children.append(LawReport.success(f'{kind} vs opposite {dual}', len(C.objects)))
    return LawReport.combine('opposite duality', children)


def check_product_with_terminal(C: FinCat, A: str, T: str) -> LawReport:
    """
    For a terminal T, the cone (A, id_A, A -> T) is a product of A and T.
    """
    if not _qualifies_by_count(C, T, 'terminal'):
        return LawReport.error('product with terminal', f'{T} is not terminal')
    cone = Cone(A, C.identity(A), C.hom(A, T)[0])
    cones = ConeCategory(C, A, T)
    if cones.is_universal(cone):
        return LawReport.success('product with terminal', 1, f'{A} x {T} = {A}')
    return LawReport.failure('product with terminal', {'cone': str(cone)}, 1)


class ChosenProducts():
    """
    A table of chosen product cones, one per ordered pair of objects.

    Args:
        C (FinCat): The category.
        cones (dict): (A, B) -> Cone with legs to A and B.
    """

    def __init__(self, C: FinCat, cones: Dict[Tuple[str, str], Cone]):
        self.C = C
        self.cones = dict(cones)

    @classmethod
    def choose(cls, C: FinCat, pairs: Sequence[Tuple[str, str]] | None = None):
        """
        Choose the first product cone found for each pair. Pairs without a
        product are left out.
        """
        if pairs is None:
            pairs = list(itertools.product(C.objects, repeat=2))
        cones = {}
        for A, B in pairs:
            witness = find_binary(C, 'product', A, B)
            if witness.exists:
                cones[(A, B)] = witness.found[0]
        return cls(C, cones)

    @classmethod
    def from_set_products(cls, C: FinCat, pairs: Sequence[Tuple[str, str]]):
        """
        Choose the canonical cartesian products of finset-universe objects whose
        payloads are unlabeled FinSets, when the product object is present.
        """
        cones = {}
        for A, B in pairs:
            cone, _ = product(C.object_payload(A), C.object_payload(B))
            try:
                apex = C.find_object(cone.obj)
            except UnknownNameError:
                continue
            cones[(A, B)] = Cone(apex, C.find_morphism(apex, A, cone.proj_l),
                                 C.find_morphism(apex, B, cone.proj_r))
        return cls(C, cones)

    def cone(self, A: str, B: str) -> Cone:
        try:
            return self.cones[(A, B)]
        except KeyError:
            raise UnknownNameError(f'no chosen product for ({A}, {B})')


def _mediate(C: FinCat, apex: str, target: Cone, left: str, right: str) -> str:
    for h in C.hom(apex, target.apex):
        if C.compose(h, target.left) == left and C.compose(h, target.right) == right:
            return h
    raise UnknownNameError(f'no mediating morphism {apex} -> {target}')


def product_of_morphisms(C: FinCat, chosen: ChosenProducts, f: str, g: str) -> str:
    """
    f x g: A x B -> C x D, the mediating morphism with
    (f x g) then left' = left then f, and likewise on the right.
    """
    source = chosen.cone(C.dom(f), C.dom(g))
    target = chosen.cone(C.cod(f), C.cod(g))
    return _mediate(C, source.apex, target, C.compose(source.left, f),
                    C.compose(source.right, g))


def swap_iso(C: FinCat, chosen: ChosenProducts, A: str, B: str) -> str:
    """
    The swap A x B -> B x A, i.e. the pairing of the right and left projections.
    """
    source = chosen.cone(A, B)
    target = chosen.cone(B, A)
    return _mediate(C, source.apex, target, source.right, source.left)


def choose_products(C: FinCat, pairs: Sequence[Tuple[str, str]] | None = None) -> ChosenProducts:
    return ChosenProducts.choose(C, pairs)

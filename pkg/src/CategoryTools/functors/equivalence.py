"""
Classification of functors (full, faithful, essentially surjective, ...) with a
constructive equivalence test, the comparison functors between the universes,
and functors out of one-object categories read as monoid actions.
"""
import itertools
import logging
from typing import Dict, List, Tuple

from monty.json import MSONable

from CategoryTools.categories.constructors import FiniteMonoidPresentation, from_monoid
from CategoryTools.categories.fincat import FinCat, require_closed
from CategoryTools.categories.universe import universe_category
from CategoryTools.functors.functor import (FunctorData, check_functor, compose_functors,
                                            enumerate_functors, identity_functor)
from CategoryTools.functors.natural import NatTransData, check_naturality
from CategoryTools.queries.classify import find_inverse
from CategoryTools.sets.finset import FinFun, FinSet
from CategoryTools.util.helper import check_guard
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Equivalence')


class FunctorClassification(MSONable):
    """
    Flags describing a functor F: C -> D, with a witness for every false flag.

    is_isomorphism holds exactly when F is injective and surjective on objects,
    full and faithful. is_equivalence is decided by constructing a quasi-inverse
    and checking both natural isomorphisms.
    """

    def __init__(self,
                 injective_on_objects: bool,
                 surjective_on_objects: bool,
                 full: bool,
                 faithful: bool,
                 essentially_surjective: bool,
                 is_isomorphism: bool,
                 is_equivalence: bool,
                 witnesses: Dict | None = None):
        self.injective_on_objects = injective_on_objects
        self.surjective_on_objects = surjective_on_objects
        self.full = full
        self.faithful = faithful
        self.essentially_surjective = essentially_surjective
        self.is_isomorphism = is_isomorphism
        self.is_equivalence = is_equivalence
        self.witnesses = dict(witnesses or {})
        self.quasi_inverse = None
        self.unit = None
        self.counit = None

    def flags(self) -> Dict[str, bool]:
        return {
            'injective_on_objects': self.injective_on_objects,
            'surjective_on_objects': self.surjective_on_objects,
            'full': self.full,
            'faithful': self.faithful,
            'essentially_surjective': self.essentially_surjective,
            'is_isomorphism': self.is_isomorphism,
            'is_equivalence': self.is_equivalence
        }

    def __repr__(self) -> str:
        on = [k for k, v in self.flags().items() if v]
        return f'FunctorClassification({", ".join(on) or "none"})'


def _object_witnesses(F: FunctorData, witnesses: Dict) -> Tuple[bool, bool]:
    C, D = F.source, F.target
    seen = {}
    injective = True
    for X in C.objects:
        FX = F.on_object(X)
        if FX in seen:
            injective = False
            witnesses['not_injective_on_objects'] = [seen[FX], X]
            break
        seen[FX] = X
    images = {F.on_object(X) for X in C.objects}
    missed = [Z for Z in D.objects if Z not in images]
    if missed:
        witnesses['not_surjective_on_objects'] = missed[0]
    return injective, not missed


def _hom_witnesses(F: FunctorData, witnesses: Dict) -> Tuple[bool, bool]:
    C, D = F.source, F.target
    full, faithful = True, True
    for X in C.objects:
        for Y in C.objects:
            images = {}
            for f in C.hom(X, Y):
                Ff = F.on_morphism(f)
                if Ff in images and faithful:
                    faithful = False
                    witnesses['not_faithful'] = [images[Ff], f]
                images.setdefault(Ff, f)
            if full:
                missed = [g for g in D.hom(F.on_object(X), F.on_object(Y)) if g not in images]
                if missed:
                    full = False
                    witnesses['not_full'] = {'source': X, 'target': Y, 'morphism': missed[0]}
    return full, faithful


def _essential_preimages(F: FunctorData) -> Dict[str, Tuple[str, str]]:
    """
    For every object Z of the target, the first X (in source order) with an
    isomorphism e_Z: F(X) -> Z, and that isomorphism.
    """
    C, D = F.source, F.target
    found = {}
    for Z in D.objects:
        for X in C.objects:
            iso = next((e for e in D.hom(F.on_object(X), Z) if find_inverse(D, e) is not None),
                       None)
            if iso is not None:
                found[Z] = (X, iso)
                break
    return found


def quasi_inverse(F: FunctorData):
    """
    For a full, faithful and essentially surjective F, the functor G: D -> C
    with G(Z) the chosen essential preimage of Z, and the natural isomorphisms
    unit: id_C => F then G and counit: G then F => id_D.

    G(k) for k: Z -> Z' is the unique h with F(h) = e_Z then k then e_Z'^-1.
    The counit is e and the unit at X is the preimage of e_{F X}^-1.
    """
    C, D = F.source, F.target
    preimages = _essential_preimages(F)
    inverse = {Z: find_inverse(D, e) for Z, (_, e) in preimages.items()}

    def preimage(X, Y, g):
        return next(h for h in C.hom(X, Y) if F.on_morphism(h) == g)

    obj_map = {Z: X for Z, (X, _) in preimages.items()}
    mor_map = {}
    for k in D.morphisms:
        Z, W = D.dom(k), D.cod(k)
        target = D.compose(D.compose(preimages[Z][1], k), inverse[W])
        mor_map[k] = preimage(obj_map[Z], obj_map[W], target)
    G = FunctorData(D, C, obj_map, mor_map, name=f'{F.name}^-1')

    FG = compose_functors(F, G)
    GF = compose_functors(G, F)
    unit = NatTransData(identity_functor(C), FG, {
        X: preimage(X, obj_map[F.on_object(X)], inverse[F.on_object(X)])
        for X in C.objects
    }, name='eta')
    counit = NatTransData(GF, identity_functor(D), {Z: e for Z, (_, e) in preimages.items()},
                          name='epsilon')
    return G, unit, counit


def _is_natural_iso(alpha: NatTransData) -> bool:
    if not check_naturality(alpha).passed:
        return False
    D = alpha.target
    return all(find_inverse(D, alpha.component(X)) is not None for X in alpha.source.objects)


def classify_functor(F: FunctorData) -> FunctorClassification:
    """
    Classify F exhaustively.

    A functor that is not full, faithful and essentially surjective is not an
    equivalence; otherwise the quasi-inverse is built and both unit and counit
    are checked to be natural isomorphisms.
    """
    require_closed(F.source, 'classify_functor')
    require_closed(F.target, 'classify_functor')
    witnesses = {}
    injective, surjective = _object_witnesses(F, witnesses)
    full, faithful = _hom_witnesses(F, witnesses)
    preimages = _essential_preimages(F)
    essentially_surjective = len(preimages) == len(F.target.objects)
    if not essentially_surjective:
        witnesses['not_essentially_surjective'] = next(
            Z for Z in F.target.objects if Z not in preimages)

    equivalence = False
    G = unit = counit = None
    if full and faithful and essentially_surjective:
        G, unit, counit = quasi_inverse(F)
        equivalence = (check_functor(G).passed and _is_natural_iso(unit)
                       and _is_natural_iso(counit))
    LOGGER.debug(f'{F.name}: full={full} faithful={faithful} '
                 f'essentially_surjective={essentially_surjective} equivalence={equivalence}')
    result = FunctorClassification(injective, surjective, full, faithful, essentially_surjective,
                                   injective and surjective and full and faithful, equivalence,
                                   witnesses)
    if equivalence:
        result.quasi_inverse, result.unit, result.counit = G, unit, counit
    return result


def _comparison_functor(source: FinCat, target: FinCat, size_of, name: str) -> FunctorData:
    obj_map = {X: str(size_of(source.object_payload(X))) for X in source.objects}
    mor_map = {}
    for f in source.morphisms:
        p = source.payload(f)
        image = FinFun(FinSet(p.dom.size), FinSet(p.cod.size), p.table)
        mor_map[f] = target.find_morphism(obj_map[source.dom(f)], obj_map[source.cod(f)], image)
    return FunctorData(source, target, obj_map, mor_map, name=name)


def finset_to_finord(n: int) -> FunctorData:
    """
    U: finset(n) -> finord(n), sending a set of size k to the ordinal k. The
    chosen bijection between a set and its ordinal is the identity on element
    indices, so U(f) has the same table as f.
    """
    check_guard('max_size', n, 3)
    return _comparison_functor(universe_category('finset', n), universe_category('finord', n),
                               lambda X: X.size, name='U')


def forget_poset(n: int) -> FunctorData:
    """
    The forgetful functor finpos(n) -> finord(n) dropping the order.
    """
    return _comparison_functor(universe_category('finpos', n), universe_category('finord', n),
                               lambda p: p[0], name='Forget')


def action_of(F: FunctorData) -> Tuple[FinSet, Dict[Tuple, int]]:
    """
    The M-set of a functor out of a one-object monoid category into a category
    of finite sets: the carrier F(*) and mu(m, x) = F(m)(x).
    """
    C, D = F.source, F.target
    carrier = D.object_payload(F.on_object('*'))
    act = {}
    for f in C.morphisms:
        image = D.payload(F.on_morphism(f))
        for x in range(carrier.size):
            act[(C.payload(f), x)] = image(x)
    return carrier, act


def check_action_laws(M: FiniteMonoidPresentation, F: FunctorData) -> LawReport:
    """
    mu(e, x) = x and mu(m n, x) = mu(m, mu(n, x)).
    """
    carrier, act = action_of(F)
    checked = 0
    for x in range(carrier.size):
        checked += 1
        if act[(M.unit, x)] != x:
            return LawReport.failure('action laws', {'law': 'unit', 'x': x}, checked)
    for m, n in itertools.product(M.elements, repeat=2):
        for x in range(carrier.size):
            checked += 1
            if act[(M.multiply(m, n), x)] != act[(m, act[(n, x)])]:
                return LawReport.failure('action laws', {
                    'law': 'compatibility',
                    'm': m,
                    'n': n,
                    'x': x
                }, checked)
    return LawReport.success('action laws', checked, F.name)


def is_equivariant(M: FiniteMonoidPresentation, F: FunctorData, G: FunctorData,
                   phi: FinFun) -> bool:
    """
    phi(mu_F(m, x)) = mu_G(m, phi(x)) for all m and x.
    """
    _, act_f = action_of(F)
    _, act_g = action_of(G)
    return all(phi(act_f[(m, x)]) == act_g[(m, phi(x))] for m in M.elements
               for x in range(phi.dom.size))


def check_equivariance_characterization(M: FiniteMonoidPresentation, F: FunctorData,
                                        G: FunctorData) -> LawReport:
    """
    Between two M-sets, a family with the single component phi is natural
    exactly when phi is equivariant. Checked over every candidate phi.
    """
    D = F.target
    checked = 0
    for a in D.hom(F.on_object('*'), G.on_object('*')):
        checked += 1
        alpha = NatTransData(F, G, {'*': a}, name='phi')
        natural = check_naturality(alpha).passed
        equivariant = is_equivariant(M, F, G, D.payload(a))
        if natural != equivariant:
            return LawReport.failure('natural iff equivariant', {
                'component': a,
                'natural': natural,
                'equivariant': equivariant
            }, checked)
    return LawReport.success('natural iff equivariant', checked)


def monoid_homomorphisms(M: FiniteMonoidPresentation,
                         N: FiniteMonoidPresentation) -> List[Dict]:
    """
    All maps phi: M -> N with phi(e) = e and phi(a b) = phi(a) phi(b), as dicts.
    """
    homs = []
    for images in itertools.product(N.elements, repeat=len(M.elements)):
        phi = dict(zip(M.elements, images))
        if phi[M.unit] != N.unit:
            continue
        if all(phi[M.multiply(a, b)] == N.multiply(phi[a], phi[b]) for a in M.elements
               for b in M.elements):
            homs.append(phi)
    return homs


def check_monoid_functor_correspondence(M: FiniteMonoidPresentation,
                                        N: FiniteMonoidPresentation) -> LawReport:
    """
    Functors between the one-object categories of M and N are exactly the
    monoid homomorphisms M -> N.
    """
    BM, BN = from_monoid(M), from_monoid(N)
    from_functors = sorted(
        tuple(BN.payload(F.on_morphism(str(a))) for a in M.elements)
        for F in enumerate_functors(BM, BN))
    from_homs = sorted(tuple(phi[a] for a in M.elements) for phi in monoid_homomorphisms(M, N))
    if from_functors != from_homs:
        return LawReport.failure('functors are monoid homomorphisms', {
            'functors': from_functors,
            'homomorphisms': from_homs
        }, len(from_homs))
    return LawReport.success('functors are monoid homomorphisms', len(from_homs),
                             f'{len(from_homs)} homomorphisms {M.name} -> {N.name}')

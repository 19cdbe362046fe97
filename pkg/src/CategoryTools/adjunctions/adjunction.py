"""
Adjunctions F -| G with F: C -> D and G: D -> C, presented either by unit and
counit or by the hom-set bijection alpha: Hom_D(F X, Y) -> Hom_C(X, G Y).

All composites are diagrammatic: the unit is eta: id_C => F then G, the counit
is epsilon: G then F => id_D, and the triangle identities read
F(eta_X) then epsilon_{F X} = id and eta_{G Y} then G(epsilon_Y) = id.
"""
import logging
from typing import Callable, Dict, Tuple

from CategoryTools.categories.fincat import require_closed
from CategoryTools.functors.functor import compose_functors, identity_functor
from CategoryTools.functors.natural import (NatTransData, check_naturality,
                                            identity_transformation)
from CategoryTools.util.errors import UnknownNameError
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Adjunctions')


class AdjunctionUnitCounit():
    """
    Args:
        F: Left adjoint C -> D.
        G: Right adjoint D -> C.
        unit (NatTransData): id_C => F then G.
        counit (NatTransData): G then F => id_D.
    """

    def __init__(self, F, G, unit: NatTransData, counit: NatTransData, name: str = 'adj'):
        self.F = F
        self.G = G
        self.unit = unit
        self.counit = counit
        self.name = name

    @property
    def C(self):
        return self.F.source

    @property
    def D(self):
        return self.G.source


class AdjunctionHomBijection():
    """
    An adjunction given by alpha and its inverse, one map per pair of objects.

    The maps are callables alpha(X, Y, g) and alpha_inv(X, Y, f); table(X, Y)
    tabulates alpha on the whole hom-set and caches it.

    Args:
        F: Left adjoint C -> D.
        G: Right adjoint D -> C.
        alpha (Callable): (X, Y, g: F X -> Y) -> f: X -> G Y.
        alpha_inv (Callable): (X, Y, f: X -> G Y) -> g: F X -> Y.
    """

    def __init__(self, F, G, alpha: Callable, alpha_inv: Callable, name: str = 'adj'):
        self.F = F
        self.G = G
        self._alpha = alpha
        self._alpha_inv = alpha_inv
        self.name = name
        self._tables: Dict[Tuple, Dict] = {}

    @property
    def C(self):
        return self.F.source

    @property
    def D(self):
        return self.G.source

    def alpha(self, X, Y, g):
        return self._alpha(X, Y, g)

    def alpha_inv(self, X, Y, f):
        return self._alpha_inv(X, Y, f)

    def table(self, X, Y) -> Dict:
        key = (X, Y)
        if key not in self._tables:
            self._tables[key] = {
                g: self.alpha(X, Y, g)
                for g in self.D.hom(self.F.on_object(X), Y)
            }
        return self._tables[key]

    @classmethod
    def from_tables(cls, F, G, tables: Dict[Tuple, Dict], name: str = 'adj'):
        """
        Build from explicit tables {(X, Y): {g: alpha(g)}}. The inverse tables
        are obtained by inverting each table.
        """
        inverses = {key: {f: g for g, f in table.items()} for key, table in tables.items()}

        def lookup(store, X, Y, value):
            try:
                return store[(X, Y)][value]
            except KeyError:
                raise UnknownNameError(f'no table entry for {value} at ({X}, {Y})')

        return cls(F, G, lambda X, Y, g: lookup(tables, X, Y, g),
                   lambda X, Y, f: lookup(inverses, X, Y, f), name=name)


def identity_adjunction(C) -> AdjunctionUnitCounit:
    Id = identity_functor(C)
    eta = identity_transformation(Id)
    return AdjunctionUnitCounit(Id, Id,
                                NatTransData(Id, compose_functors(Id, Id), eta.components,
                                             name='eta'),
                                NatTransData(compose_functors(Id, Id), Id, eta.components,
                                             name='epsilon'),
                                name=f'id_{getattr(C, "name", "C")}')


def check_triangles(adj: AdjunctionUnitCounit) -> LawReport:
    """
    F(eta_X) then epsilon_{F X} = id_{F X} for every X of C and
    eta_{G Y} then G(epsilon_Y) = id_{G Y} for every Y of D.
    """
    F, G, C, D = adj.F, adj.G, adj.C, adj.D
    children = []
    checked = 0
    for X in C.objects:
        checked += 1
        FX = F.on_object(X)
        left = D.compose(F.on_morphism(adj.unit.component(X)), adj.counit.component(FX))
        if left != D.identity(FX):
            children.append(LawReport.failure('left triangle', {
                'object': X,
                'composite': left
            }, checked, f'F(eta) then epsilon is not the identity at {X}'))
            break
    else:
        children.append(LawReport.success('left triangle', checked))

    checked = 0
    for Y in D.objects:
        checked += 1
        GY = G.on_object(Y)
        right = C.compose(adj.unit.component(GY), G.on_morphism(adj.counit.component(Y)))
        if right != C.identity(GY):
            children.append(LawReport.failure('right triangle', {
                'object': Y,
                'composite': right
            }, checked, f'eta then G(epsilon) is not the identity at {Y}'))
            break
    else:
        children.append(LawReport.success('right triangle', checked))
    return LawReport.combine('triangle identities', children, message=adj.name)


def hom_bijection_from_unit_counit(adj: AdjunctionUnitCounit) -> AdjunctionHomBijection:
    """
    alpha(g) = eta_X then G(g) and alpha^-1(f) = F(f) then epsilon_Y.
    """
    F, G, C, D = adj.F, adj.G, adj.C, adj.D

    def alpha(X, Y, g):
        return C.compose(adj.unit.component(X), G.on_morphism(g))

    def alpha_inv(X, Y, f):
        return D.compose(F.on_morphism(f), adj.counit.component(Y))

    return AdjunctionHomBijection(F, G, alpha, alpha_inv, name=adj.name)


def unit_counit_from_hom_bijection(adj: AdjunctionHomBijection) -> AdjunctionUnitCounit:
    """
    eta_X = alpha(id_{F X}) and epsilon_Y = alpha^-1(id_{G Y}).
    """
    F, G, C, D = adj.F, adj.G, adj.C, adj.D

    # F X and G Y may lie outside the listed objects
    def unit(X):
        return adj.alpha(X, F.on_object(X), D.identity(F.on_object(X)))

    def counit(Y):
        return adj.alpha_inv(G.on_object(Y), Y, C.identity(G.on_object(Y)))

    return AdjunctionUnitCounit(F, G,
                                NatTransData(identity_functor(C), compose_functors(F, G), unit,
                                             name='eta'),
                                NatTransData(compose_functors(G, F), identity_functor(D), counit,
                                             name='epsilon'),
                                name=adj.name)


def check_roundtrip(adj: AdjunctionHomBijection) -> LawReport:
    """
    alpha and alpha^-1 are mutually inverse on every hom-set.
    """
    F, G, C, D = adj.F, adj.G, adj.C, adj.D
    checked = 0
    for X in C.objects:
        for Y in D.objects:
            for g in D.hom(F.on_object(X), Y):
                checked += 1
                back = adj.alpha_inv(X, Y, adj.alpha(X, Y, g))
                if back != g:
                    return LawReport.failure('alpha roundtrip', {
                        'X': X,
                        'Y': Y,
                        'g': g,
                        'roundtrip': back
                    }, checked)
            for f in C.hom(X, G.on_object(Y)):
                checked += 1
                back = adj.alpha(X, Y, adj.alpha_inv(X, Y, f))
                if back != f:
                    return LawReport.failure('alpha roundtrip', {
                        'X': X,
                        'Y': Y,
                        'f': f,
                        'roundtrip': back
                    }, checked)
    return LawReport.success('alpha roundtrip', checked)


def check_hom_naturality(adj: AdjunctionHomBijection) -> LawReport:
    """
    The roundtrip, naturality in X: alpha(F(h) then g) = h then alpha(g) for
    h: X' -> X, and naturality in Y: alpha(g then k) = alpha(g) then G(k) for
    k: Y -> Y'.
    """
    F, G, C, D = adj.F, adj.G, adj.C, adj.D
    require_closed(C, 'check_hom_naturality')
    children = [check_roundtrip(adj)]

    checked = 0
    failure = None
    for h in C.morphisms:
        X1, X = C.dom(h), C.cod(h)
        Fh = F.on_morphism(h)
        for Y in D.objects:
            for g in D.hom(F.on_object(X), Y):
                checked += 1
                left = adj.alpha(X1, Y, D.compose(Fh, g))
                right = C.compose(h, adj.alpha(X, Y, g))
                if left != right:
                    failure = LawReport.failure('naturality in X', {
                        'h': h,
                        'g': g,
                        'left': left,
                        'right': right
                    }, checked)
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('naturality in X', checked))

    checked = 0
    failure = None
    for k in D.morphisms:
        Y, Y1 = D.dom(k), D.cod(k)
        Gk = G.on_morphism(k)
        for X in C.objects:
            for g in D.hom(F.on_object(X), Y):
                checked += 1
                left = adj.alpha(X, Y1, D.compose(g, k))
                right = C.compose(adj.alpha(X, Y, g), Gk)
                if left != right:
                    failure = LawReport.failure('naturality in Y', {
                        'k': k,
                        'g': g,
                        'left': left,
                        'right': right
                    }, checked)
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('naturality in Y', checked))
    report = LawReport.combine('hom-set naturality', children, message=adj.name)
    LOGGER.debug(f'{adj.name}: {report.status}')
    return report


def check_adjunction(adj) -> LawReport:
    """
    Every adjunction check on either presentation: the hom-set bijection with
    its naturality, naturality of unit and counit, and both triangles.
    """
    if isinstance(adj, AdjunctionHomBijection):
        bijection = adj
        unit_counit = unit_counit_from_hom_bijection(adj)
    else:
        unit_counit = adj
        bijection = hom_bijection_from_unit_counit(adj)
    unit = check_naturality(unit_counit.unit)
    unit.name = 'unit naturality'
    counit = check_naturality(unit_counit.counit)
    counit.name = 'counit naturality'
    children = [check_hom_naturality(bijection), unit, counit, check_triangles(unit_counit)]
    return LawReport.combine('adjunction', children, message=adj.name)

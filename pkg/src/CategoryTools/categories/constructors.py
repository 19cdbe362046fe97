"""
Constructors for the category families: preorders, monoids, free categories on
graphs, opposites and products.
"""
import itertools
import warnings
from typing import Dict, Hashable, List, Sequence, Tuple

import networkx as nx
from monty.json import MSONable

from CategoryTools.categories.fincat import (FinCat, HomEnumeration, path_name,
                                             require_closed)
from CategoryTools.util.errors import (InfiniteCategoryError, PresentationError,
                                       UnknownNameError)


class PreorderPresentation(MSONable):
    """
    A finite preordered set. The relation is closed under reflexivity and
    transitivity on construction.

    Args:
        elements (Sequence[str]): The underlying set.
        leq (Sequence[Tuple[str, str]]): Generating pairs (x, y) meaning x <= y.
    """

    def __init__(self, elements: Sequence, leq: Sequence[Sequence]):
        self.elements = [str(x) for x in elements]
        if len(set(self.elements)) != len(self.elements):
            raise PresentationError('duplicate elements', field='elements')
        pairs = []
        for pair in leq:
            if len(pair) != 2:
                raise PresentationError(f'{pair} is not a pair', field='leq')
            x, y = str(pair[0]), str(pair[1])
            for z in (x, y):
                if z not in self.elements:
                    raise PresentationError(f'unknown element {z}', field='leq')
            pairs.append((x, y))
        self.leq = pairs
        self._closure = self._close(pairs)

    def _close(self, pairs) -> set:
        closure = {(x, x) for x in self.elements} | set(pairs)
        # Warshall
        for k in self.elements:
            for i in self.elements:
                if (i, k) not in closure:
                    continue
                for j in self.elements:
                    if (k, j) in closure:
                        closure.add((i, j))
        return closure

    def le(self, x: str, y: str) -> bool:
        return (str(x), str(y)) in self._closure

    def is_antisymmetric(self) -> bool:
        return all(x == y or not self.le(y, x) for x, y in self._closure)

    def as_dict(self) -> dict:
        _d = super().as_dict()
        _d['leq'] = [list(pair) for pair in self.leq]
        return _d


class FiniteMonoidPresentation(MSONable):
    """
    A finite monoid given by its multiplication table.

    The unit law and associativity are validated on construction; a violation
    raises a PresentationError naming the failed axiom.

    Args:
        elements (Sequence): The elements, in presentation order.
        unit: The unit element.
        table: Either a square matrix with table[i][j] the product of
            elements[i] and elements[j], or a dict {(a, b): a * b}.
        name (str): Display name.
    """

    is_free = False

    def __init__(self, elements: Sequence, unit, table, name: str = 'M'):
        self.elements = list(elements)
        self.name = name
        if len(set(self.elements)) != len(self.elements):
            raise PresentationError('duplicate elements', field='elements')
        if unit not in self.elements:
            raise PresentationError(f'unit {unit} is not an element', field='unit')
        self.unit = unit
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._mult: Dict[Tuple[Hashable, Hashable], Hashable] = {}

        if isinstance(table, dict):
            for a in self.elements:
                for b in self.elements:
                    if (a, b) not in table:
                        raise PresentationError(f'table is not total: {a} * {b} is missing',
                                                field='table')
                    self._mult[(a, b)] = table[(a, b)]
        else:
            if len(table) != len(self.elements):
                raise PresentationError('table must have one row per element', field='table')
            for a, row in zip(self.elements, table):
                if len(row) != len(self.elements):
                    raise PresentationError(f'row of {a} is not total', field='table')
                for b, c in zip(self.elements, row):
                    self._mult[(a, b)] = c
        for (a, b), c in self._mult.items():
            if c not in self._index:
                raise PresentationError(f'{a} * {b} = {c} is not an element', field='table')
        self._validate()

    def _validate(self) -> None:
        e = self.unit
        for a in self.elements:
            if self._mult[(e, a)] != a or self._mult[(a, e)] != a:
                raise PresentationError(f'unit law fails at {a}', field='table')
        for a, b, c in itertools.product(self.elements, repeat=3):
            if self.multiply(self.multiply(a, b), c) != self.multiply(a, self.multiply(b, c)):
                raise PresentationError(f'associativity fails at ({a}, {b}, {c})',
                                        field='table')

    def multiply(self, a, b):
        return self._mult[(a, b)]

    def index(self, a) -> int:
        return self._index[a]

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def table(self) -> List[List]:
        return [[self._mult[(a, b)] for b in self.elements] for a in self.elements]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteMonoidPresentation):
            return NotImplemented
        return (self.elements == other.elements and self.unit == other.unit
                and self._mult == other._mult)

    def __hash__(self) -> int:
        return hash((tuple(self.elements), self.unit))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f'FiniteMonoidPresentation({self.name!r}, {self.elements})'


def cyclic_monoid(n: int) -> FiniteMonoidPresentation:
    """
    Z/n under addition.
    """
    elements = list(range(n))
    return FiniteMonoidPresentation(elements, 0, [[(a + b) % n for b in elements]
                                                  for a in elements],
                                    name=f'Z{n}')


def boolean_and_monoid() -> FiniteMonoidPresentation:
    return FiniteMonoidPresentation([0, 1], 1, [[0, 0], [0, 1]], name='and')


def boolean_or_monoid() -> FiniteMonoidPresentation:
    return FiniteMonoidPresentation([0, 1], 0, [[0, 1], [1, 1]], name='or')


def trivial_monoid() -> FiniteMonoidPresentation:
    return FiniteMonoidPresentation([0], 0, [[0]], name='trivial')


def monoid_by_name(name: str) -> FiniteMonoidPresentation:
    """
    Look up a named monoid: 'Z<n>' (or 'Z/<n>'), 'and', 'or' or 'trivial'.
    """
    key = name.strip().lower().replace('/', '')
    if key == 'and':
        return boolean_and_monoid()
    if key == 'or':
        return boolean_or_monoid()
    if key == 'trivial':
        return trivial_monoid()
    if key.startswith('z') and key[1:].isdigit() and int(key[1:]) > 0:
        return cyclic_monoid(int(key[1:]))
    raise UnknownNameError(f'unknown monoid {name}')


class GraphPresentation(MSONable):
    """
    A directed multigraph generating a free category.

    Args:
        nodes (Sequence[str]): Nodes.
        edges (Sequence): Entries (edge id, src, dst) or {name, src, dst}.
        max_path_len (int, None): Truncation for cyclic graphs.
    """

    def __init__(self, nodes: Sequence[str], edges: Sequence, max_path_len: int | None = None):
        self.nodes = [str(x) for x in nodes]
        if len(set(self.nodes)) != len(self.nodes):
            raise PresentationError('duplicate nodes', field='nodes')
        self.edges = []
        seen = set()
        for edge in edges:
            if isinstance(edge, dict):
                try:
                    edge = (edge['name'], edge['src'], edge['dst'])
                except KeyError as e:
                    raise PresentationError(f'missing key {e}', field='edges')
            name, src, dst = (str(v) for v in edge)
            if name in seen:
                raise PresentationError(f'duplicate edge {name}', field='edges')
            for end in (src, dst):
                if end not in self.nodes:
                    raise PresentationError(f'edge {name} uses unknown node {end}',
                                            field='edges')
            seen.add(name)
            self.edges.append((name, src, dst))
        if max_path_len is not None and max_path_len < 0:
            raise PresentationError('must be non-negative', field='max_path_len')
        self.max_path_len = max_path_len

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.nodes)
        for name, src, dst in self.edges:
            graph.add_edge(src, dst, key=name)
        return graph

    def as_dict(self) -> dict:
        _d = super().as_dict()
        _d['edges'] = [list(edge) for edge in self.edges]
        return _d


def from_preorder(P: PreorderPresentation, name: str = 'P') -> FinCat:
    morphisms = []
    for x in P.elements:
        for y in P.elements:
            if P.le(x, y):
                morphisms.append((f'{x}<={y}', x, y))
    identities = {x: f'{x}<={x}' for x in P.elements}
    composition = {}
    for f, x, y in morphisms:
        for g, y2, z in morphisms:
            if y == y2:
                composition[(f, g)] = f'{x}<={z}'
    return FinCat(P.elements, morphisms, identities, composition, name=name)


def from_monoid(M: FiniteMonoidPresentation, name: str | None = None) -> FinCat:
    """
    The one-object category of M. The composite "f then g" is the product g * f,
    so functors out of it are left actions.
    """
    names = {e: str(e) for e in M.elements}
    morphisms = [(names[e], '*', '*') for e in M.elements]
    composition = {(names[a], names[b]): names[M.multiply(b, a)]
                   for a in M.elements for b in M.elements}
    cat = FinCat(['*'], morphisms, {'*': names[M.unit]}, composition,
                 name=name or f'B{M.name}')
    cat.payloads = {names[e]: e for e in M.elements}
    cat.object_payloads = {'*': M.name}
    return cat


def from_graph(G: GraphPresentation, name: str = 'G') -> FinCat | HomEnumeration:
    """
    The free category on G: morphisms are directed paths, identities are the
    empty paths and composition concatenates.

    Returns a HomEnumeration instead of a category when G has a cycle and
    max_path_len is given.

    Raises:
        InfiniteCategoryError: if G has a cycle and no max_path_len.
    """
    graph = G.to_networkx()
    if not nx.is_directed_acyclic_graph(graph):
        if G.max_path_len is None:
            raise InfiniteCategoryError(
                f'graph {name} has a cycle, so its free category is infinite; '
                'give max_path_len to enumerate hom-sets')
        return HomEnumeration(G.nodes, G.edges, G.max_path_len, name=name)

    edge_order = {edge: i for i, (edge, _, _) in enumerate(G.edges)}
    morphisms = []
    longest = 0
    for x in G.nodes:
        for y in G.nodes:
            if x == y:
                paths = [()]
            else:
                paths = sorted((tuple(k for _, _, k in path)
                                for path in nx.all_simple_edge_paths(graph, x, y)),
                               key=lambda p: (len(p), [edge_order[e] for e in p]))
            for path in paths:
                longest = max(longest, len(path))
                morphisms.append((path_name(x, path), x, y, path))
    if G.max_path_len is not None and longest > G.max_path_len:
        warnings.warn(f'Graph {name} is acyclic; ignoring max_path_len={G.max_path_len} '
                      f'and keeping paths of length up to {longest}')
    objects = [(x, x) for x in G.nodes]
    identities = {x: path_name(x, ()) for x in G.nodes}
    return FinCat.from_payloads(objects, morphisms, identities, lambda p, q: p + q, name=name)


def op_name(name: str) -> str:
    if name.endswith('^op'):
        return name[:-3]
    return name + '^op'


def opposite(C: FinCat) -> FinCat:
    """
    The opposite category. Morphism f becomes f^op (and f^op becomes f again),
    so opposite(opposite(C)) == C.
    """
    require_closed(C, 'opposite')
    morphisms = [(op_name(f), c, d) for f, d, c in C.morphism_triples()]
    identities = {X: op_name(f) for X, f in C.identities.items()}

    def composer(a, b):
        return op_name(C.compose(op_name(b), op_name(a)))

    op = FinCat(C.objects, morphisms, identities, composer, name=op_name(C.name))
    op.payloads = {op_name(f): p for f, p in C.payloads.items()}
    op.object_payloads = dict(C.object_payloads)
    return op


def product_category(C: FinCat, D: FinCat) -> FinCat:
    require_closed(C, 'product_category')
    require_closed(D, 'product_category')
    objects = [(f'({X},{Y})', (X, Y)) for X in C.objects for Y in D.objects]
    morphisms = [(f'({f},{g})', f'({C.dom(f)},{D.dom(g)})', f'({C.cod(f)},{D.cod(g)})', (f, g))
                 for f in C.morphisms for g in D.morphisms]
    identities = {f'({X},{Y})': f'({C.identity(X)},{D.identity(Y)})'
                  for X in C.objects for Y in D.objects}

    def compose_payload(p, q):
        return C.compose(p[0], q[0]), D.compose(p[1], q[1])

    return FinCat.from_payloads(objects, morphisms, identities, compose_payload,
                                name=f'{C.name}x{D.name}')


def terminal_category() -> FinCat:
    return FinCat(['*'], [('id_*', '*', '*')], {'*': 'id_*'}, {('id_*', 'id_*'): 'id_*'},
                  name='1')


def interval_category() -> FinCat:
    """
    Two objects x, y and a single non-identity arrow f: x -> y.
    """
    return FinCat(['x', 'y'], [('id_x', 'x', 'x'), ('id_y', 'y', 'y'), ('f', 'x', 'y')],
                  {'x': 'id_x', 'y': 'id_y'},
                  {('id_x', 'id_x'): 'id_x', ('id_y', 'id_y'): 'id_y',
                   ('id_x', 'f'): 'f', ('f', 'id_y'): 'f'},
                  name='2')


def discrete_category(objects: Sequence[str], name: str = 'D') -> FinCat:
    objects = [str(X) for X in objects]
    return FinCat(objects, [(f'id_{X}', X, X) for X in objects],
                  {X: f'id_{X}' for X in objects},
                  {(f'id_{X}', f'id_{X}'): f'id_{X}' for X in objects},
                  name=name)

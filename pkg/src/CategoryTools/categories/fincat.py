from collections import deque
from typing import Callable, Dict, Hashable, Iterator, List, Sequence, Tuple

from monty.json import MSONable

from CategoryTools.util.errors import (CompositionError, InfiniteCategoryError,
                                       PresentationError, UnknownNameError)


def _morphism_entry(entry) -> Tuple[str, str, str]:
    if isinstance(entry, dict):
        try:
            return str(entry['name']), str(entry['dom']), str(entry['cod'])
        except KeyError as e:
            raise PresentationError(f'missing key {e}', field='morphisms')
    name, dom, cod = entry
    return str(name), str(dom), str(cod)


def _composition_rows(composition) -> Iterator[Tuple[str, str, str]]:
    if isinstance(composition, dict):
        for (first, then), result in composition.items():
            yield first, then, result
        return
    for row in composition:
        if isinstance(row, dict):
            try:
                yield str(row['first']), str(row['then']), str(row['result'])
            except KeyError as e:
                raise PresentationError(f'missing key {e}', field='composition')
        else:
            first, then, result = row
            yield str(first), str(then), str(result)


class FinCat(MSONable):
    """
    A fully materialized small category.

    Objects and morphisms are identified by strings. Composition is diagrammatic:
    compose(f, g) is "f then g" and is defined exactly when cod(f) = dom(g).

    The composition table is either given explicitly (and must be total on the
    composable pairs) or computed on demand by a composer callback, which is how
    the large universe categories avoid materializing millions of entries up
    front. Either way every composable pair has exactly one composite.

    Morphisms and objects may carry payloads (the FinFun of a set map, the path
    of a graph category, ...). Payloads are not serialized.

    Args:
        objects (Sequence[str]): Object ids, in presentation order.
        morphisms (Sequence): Entries (name, dom, cod) or {name, dom, cod}.
        identities (dict): Object id -> identity morphism id.
        composition: Rows (first, then, result) or {first, then, result}, a
            dict {(first, then): result}, or a callable (first, then) -> result.
        name (str): Display name.
    """

    closed = True

    def __init__(self,
                 objects: Sequence[str],
                 morphisms: Sequence,
                 identities: Dict[str, str],
                 composition,
                 name: str = 'C'):
        self.name = name
        self.objects = [str(X) for X in objects]
        if len(set(self.objects)) != len(self.objects):
            raise PresentationError('duplicate object ids', field='objects')
        object_set = set(self.objects)

        self._names: List[str] = []
        self._dom: Dict[str, str] = {}
        self._cod: Dict[str, str] = {}
        self._hom: Dict[Tuple[str, str], List[str]] = {}
        self._out: Dict[str, List[str]] = {X: [] for X in self.objects}
        self._in: Dict[str, List[str]] = {X: [] for X in self.objects}
        for entry in morphisms:
            f, dom, cod = _morphism_entry(entry)
            if f in self._dom:
                raise PresentationError(f'duplicate morphism id {f}', field='morphisms')
            for end in (dom, cod):
                if end not in object_set:
                    raise PresentationError(f'morphism {f} uses unknown object {end}',
                                            field='morphisms')
            self._names.append(f)
            self._dom[f] = dom
            self._cod[f] = cod
            self._hom.setdefault((dom, cod), []).append(f)
            self._out[dom].append(f)
            self._in[cod].append(f)

        if not isinstance(identities, dict):
            identities = dict(identities)
        self.identities = {str(X): str(f) for X, f in identities.items()}
        for X in self.objects:
            if X not in self.identities:
                raise PresentationError(f'object {X} has no identity', field='identities')
            f = self.identities[X]
            if f not in self._dom:
                raise PresentationError(f'identity {f} of {X} is not a morphism',
                                        field='identities')
            if self._dom[f] != X or self._cod[f] != X:
                raise PresentationError(f'identity {f} of {X} is not an endomorphism of {X}',
                                        field='identities')
        self._identity_set = set(self.identities.values())

        self._comp: Dict[Tuple[str, str], str] = {}
        self._composer: Callable[[str, str], str] | None = None
        if callable(composition):
            self._composer = composition
        else:
            self._load_composition(composition)

        self.payloads: Dict[str, Hashable] = {}
        self.object_payloads: Dict[str, Hashable] = {}
        self._by_payload: Dict[Tuple[str, str, Hashable], str] | None = None
        self._by_object_payload: Dict[Hashable, str] | None = None

    def _load_composition(self, composition) -> None:
        for first, then, result in _composition_rows(composition):
            for f in (first, then, result):
                if f not in self._dom:
                    raise PresentationError(f'unknown morphism {f}', field='composition')
            if self._cod[first] != self._dom[then]:
                raise PresentationError(f'{first} then {then} is not composable',
                                        field='composition')
            if self._dom[result] != self._dom[first] or self._cod[result] != self._cod[then]:
                raise PresentationError(
                    f'{first} then {then} = {result} has the wrong domain or codomain',
                    field='composition')
            previous = self._comp.get((first, then))
            if previous is not None and previous != result:
                raise PresentationError(f'{first} then {then} is defined twice',
                                        field='composition')
            self._comp[(first, then)] = result
        for f in self._names:
            for g in self._out[self._cod[f]]:
                if (f, g) not in self._comp:
                    raise PresentationError(
                        f'composition table is not total: {f} then {g} is missing',
                        field='composition')

    @classmethod
    def from_payloads(cls,
                      objects: Sequence[Tuple[str, Hashable]],
                      morphisms: Sequence[Tuple[str, str, str, Hashable]],
                      identities: Dict[str, str],
                      compose_payload: Callable[[Hashable, Hashable], Hashable],
                      name: str = 'C') -> 'FinCat':
        """
        Build a category whose composition is computed from morphism payloads.

        Args:
            objects: Pairs (object id, object payload).
            morphisms: Tuples (name, dom, cod, payload). Within a hom-set
                payloads must be distinct.
            identities: Object id -> identity morphism id.
            compose_payload: Diagrammatic composition of two payloads.
        """
        cat = None

        def composer(f, g):
            payload = compose_payload(cat.payloads[f], cat.payloads[g])
            return cat.find_morphism(cat.dom(f), cat.cod(g), payload)

        cat = cls([X for X, _ in objects], [(f, d, c) for f, d, c, _ in morphisms],
                  identities, composer, name=name)
        cat.object_payloads = {X: p for X, p in objects}
        cat.payloads = {f: p for f, _, _, p in morphisms}
        return cat

    @property
    def morphisms(self) -> List[str]:
        return list(self._names)

    @property
    def num_morphisms(self) -> int:
        return len(self._names)

    def morphism_triples(self) -> List[Tuple[str, str, str]]:
        return [(f, self._dom[f], self._cod[f]) for f in self._names]

    def has_morphism(self, f) -> bool:
        return f in self._dom

    def _check(self, f: str) -> None:
        if f not in self._dom:
            raise UnknownNameError(f"unknown morphism '{f}' in {self.name}")

    def _check_object(self, X: str) -> None:
        if X not in self._out:
            raise UnknownNameError(f"unknown object '{X}' in {self.name}")

    def dom(self, f: str) -> str:
        self._check(f)
        return self._dom[f]

    def cod(self, f: str) -> str:
        self._check(f)
        return self._cod[f]

    def identity(self, X: str) -> str:
        self._check_object(X)
        return self.identities[X]

    def is_identity(self, f: str) -> bool:
        return f in self._identity_set

    def hom(self, X: str, Y: str) -> Tuple[str, ...]:
        self._check_object(X)
        self._check_object(Y)
        return tuple(self._hom.get((X, Y), ()))

    def hom_count(self, X: str, Y: str) -> int:
        return len(self._hom.get((X, Y), ()))

    def out_morphisms(self, X: str) -> Tuple[str, ...]:
        return tuple(self._out[X])

    def in_morphisms(self, Y: str) -> Tuple[str, ...]:
        return tuple(self._in[Y])

    def compose(self, f: str, g: str) -> str:
        """
        The composite "f then g".

        Raises:
            UnknownNameError: if f or g is not a morphism.
            CompositionError: if cod(f) != dom(g).
        """
        self._check(f)
        self._check(g)
        if self._cod[f] != self._dom[g]:
            raise CompositionError(f, g, f'codomain {self._cod[f]} is not domain {self._dom[g]}')
        key = (f, g)
        result = self._comp.get(key)
        if result is None:
            result = self._composer(f, g)
            if self._dom.get(result) != self._dom[f] or self._cod.get(result) != self._cod[g]:
                raise CompositionError(f, g, f'composite {result} has the wrong type')
            self._comp[key] = result
        return result

    def composable_pairs(self) -> Iterator[Tuple[str, str]]:
        for f in self._names:
            for g in self._out[self._cod[f]]:
                yield f, g

    def payload(self, f: str):
        self._check(f)
        return self.payloads.get(f)

    def object_payload(self, X: str):
        self._check_object(X)
        return self.object_payloads.get(X)

    def find_morphism(self, X: str, Y: str, payload) -> str:
        """
        The morphism X -> Y carrying the given payload.
        """
        if self._by_payload is None:
            self._by_payload = {(self._dom[f], self._cod[f], p): f
                                for f, p in self.payloads.items()}
        try:
            return self._by_payload[(X, Y, payload)]
        except KeyError:
            raise UnknownNameError(f'no morphism {X} -> {Y} with payload {payload}')

    def find_object(self, payload) -> str:
        if self._by_object_payload is None:
            self._by_object_payload = {p: X for X, p in self.object_payloads.items()}
        try:
            return self._by_object_payload[payload]
        except KeyError:
            raise UnknownNameError(f'no object with payload {payload}')

    def rename(self,
               morphisms: Dict[str, str],
               objects: Dict[str, str] | None = None,
               name: str | None = None) -> 'FinCat':
        """
        A copy with morphisms (and optionally objects) renamed. Names missing
        from the maps are kept. Payloads follow their morphisms.
        """
        objects = objects or {}

        def m(f):
            return morphisms.get(f, f)

        def o(X):
            return objects.get(X, X)

        renamed = FinCat([o(X) for X in self.objects],
                         [(m(f), o(d), o(c)) for f, d, c in self.morphism_triples()],
                         {o(X): m(f) for X, f in self.identities.items()},
                         [(m(f), m(g), m(self.compose(f, g))) for f, g in self.composable_pairs()],
                         name=name or self.name)
        renamed.payloads = {m(f): p for f, p in self.payloads.items()}
        renamed.object_payloads = {o(X): p for X, p in self.object_payloads.items()}
        return renamed

    @property
    def composition(self) -> List[Dict[str, str]]:
        return [{
            'first': f,
            'then': g,
            'result': self.compose(f, g)
        } for f, g in self.composable_pairs()]

    def as_dict(self) -> dict:
        return {
            '@module': type(self).__module__,
            '@class': type(self).__name__,
            'name': self.name,
            'objects': list(self.objects),
            'morphisms': [{
                'name': f,
                'dom': d,
                'cod': c
            } for f, d, c in self.morphism_triples()],
            'identities': dict(self.identities),
            'composition': self.composition
        }

    @classmethod
    def from_dict(cls, d: dict) -> 'FinCat':
        return cls(d['objects'],
                   d['morphisms'],
                   d['identities'],
                   d['composition'],
                   name=d.get('name', 'C'))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinCat):
            return NotImplemented
        if (self.objects != other.objects
                or self.morphism_triples() != other.morphism_triples()
                or self.identities != other.identities):
            return False
        return all(self.compose(f, g) == other.compose(f, g)
                   for f, g in self.composable_pairs())

    def __hash__(self) -> int:
        return hash((tuple(self.objects), tuple(self._names)))

    def __str__(self) -> str:
        return (f'{self.name}: {len(self.objects)} objects, '
                f'{len(self._names)} morphisms')

    def __repr__(self) -> str:
        return f'FinCat({self.name!r}, objects={len(self.objects)}, morphisms={len(self._names)})'


class HomEnumeration():
    """
    Hom-sets of the free category on a cyclic graph, truncated at a path length.

    The truncation is not closed under composition, so this is not a category:
    only hom() is available, and law checks and queries refuse it.

    Args:
        nodes (Sequence[str]): Graph nodes.
        edges (Sequence[Tuple[str, str, str]]): (edge id, src, dst).
        max_path_len (int): Longest path enumerated.
    """

    closed = False

    def __init__(self,
                 nodes: Sequence[str],
                 edges: Sequence[Tuple[str, str, str]],
                 max_path_len: int,
                 name: str = 'G'):
        self.name = name
        self.objects = list(nodes)
        self.edges = [tuple(e) for e in edges]
        self.max_path_len = max_path_len

    def hom(self, X: str, Y: str) -> Tuple[str, ...]:
        """
        All paths X -> Y with at most max_path_len edges, shortest first.
        """
        if X not in self.objects or Y not in self.objects:
            raise UnknownNameError(f'unknown node {X if X not in self.objects else Y}')
        found = []
        queue = deque([(X, ())])
        while queue:
            node, path = queue.popleft()
            if node == Y:
                found.append(path_name(X, path))
            if len(path) == self.max_path_len:
                continue
            for edge, src, dst in self.edges:
                if src == node:
                    queue.append((dst, path + (edge, )))
        return tuple(found)

    def __str__(self) -> str:
        return (f'{self.name}: hom enumeration on {len(self.objects)} nodes '
                f'up to length {self.max_path_len}')


def path_name(start: str, path: Sequence[str]) -> str:
    if not path:
        return f'id_{start}'
    return '·'.join(path)


def require_closed(C, operation: str) -> None:
    if not getattr(C, 'closed', False):
        raise InfiniteCategoryError(
            f'{operation} needs a materialized category, got {C}')

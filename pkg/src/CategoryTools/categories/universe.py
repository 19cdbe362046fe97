"""
Bounded universes standing in for Set, FinOrd, pointed sets and posets, plus a
lazily presented category of finite sets.
"""
import itertools
import logging
from typing import Iterator, List, Sequence, Tuple

from CategoryTools.categories.fincat import FinCat
from CategoryTools.sets import finset
from CategoryTools.sets.finset import FinFun, FinSet, enumerate_functions
from CategoryTools.util.constants import FINSET_ALPHABET, MAX_UNIVERSE_SIZE
from CategoryTools.util.errors import UnknownNameError
from CategoryTools.util.helper import check_guard, format_table

LOGGER = logging.getLogger('Universe')

UNIVERSE_KINDS = tuple(MAX_UNIVERSE_SIZE.keys())


def _subset_id(letters: Sequence[str]) -> str:
    return '{' + ','.join(letters) + '}'


def _finset_objects(n: int) -> List[Tuple[str, FinSet]]:
    letters = FINSET_ALPHABET[:n]
    objects = []
    for size in range(n + 1):
        for subset in itertools.combinations(letters, size):
            objects.append((_subset_id(subset), FinSet(size, subset)))
    return objects


def _finord_objects(n: int) -> List[Tuple[str, FinSet]]:
    return [(str(k), FinSet(k)) for k in range(n + 1)]


def _finptset_objects(n: int) -> List[Tuple[str, FinSet]]:
    return [(f'*{k}', FinSet(k)) for k in range(1, n + 1)]


def posets_on(k: int) -> Iterator[frozenset]:
    """
    All partial orders on {0..k-1}, as sets of strict pairs (a, b) meaning a < b.
    """
    pairs = [(a, b) for a in range(k) for b in range(k) if a != b]
    for mask in range(2**len(pairs)):
        relation = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((b, a) in relation for a, b in relation):
            continue
        if any((a, d) not in relation for a, b in relation for c, d in relation
               if b == c and a != d):
            continue
        yield frozenset(relation)


def poset_id(k: int, relation: frozenset) -> str:
    return f'{k}[' + ','.join(f'{a}<{b}' for a, b in sorted(relation)) + ']'


def _finpos_objects(n: int) -> List[Tuple[str, Tuple[int, frozenset]]]:
    objects = []
    for k in range(n + 1):
        for relation in sorted(posets_on(k), key=lambda r: (len(r), sorted(r))):
            objects.append((poset_id(k, relation), (k, relation)))
    return objects


def _is_monotone(table: Sequence[int], source: frozenset, target: frozenset) -> bool:
    return all(table[a] == table[b] or (table[a], table[b]) in target for a, b in source)


def universe_category(kind: str, n: int) -> FinCat:
    """
    Materialize a bounded universe.

    Args:
        kind: 'finset' (all subsets of the first n letters of the alphabet, so
            distinct equinumerous sets are present), 'finord' (the canonical sets
            0..n), 'finptset' (pointed sets of size 1..n, pointed at 0) or
            'finpos' (every labeled poset on at most n elements).
        n: The size bound.

    Returns:
        FinCat whose morphisms are all structure preserving maps, each carrying
        its FinFun as payload. Object payloads are FinSets, except for finpos
        where they are (size, strict relation) pairs.

    Raises:
        SizeLimitError: if n is above the family's bound.
    """
    if kind not in MAX_UNIVERSE_SIZE:
        raise UnknownNameError(f'unknown universe family {kind}')
    if n < 0:
        raise ValueError(f'max_size must be non-negative, got {n}')
    check_guard('max_size', n, MAX_UNIVERSE_SIZE[kind])

    if kind == 'finpos':
        objects = _finpos_objects(n)
    else:
        objects = {
            'finset': _finset_objects,
            'finord': _finord_objects,
            'finptset': _finptset_objects
        }[kind](n)

    morphisms = []
    identities = {}
    for A, pa in objects:
        for B, pb in objects:
            if kind == 'finpos':
                source, target = FinSet(pa[0]), FinSet(pb[0])
            else:
                source, target = pa, pb
            for f in enumerate_functions(source, target):
                if kind == 'finptset' and f.table[0] != 0:
                    continue
                if kind == 'finpos' and not _is_monotone(f.table, pa[1], pb[1]):
                    continue
                name = f'{A}->{B}:{format_table(f.table)}'
                morphisms.append((name, A, B, f))
                if A == B and f == finset.identity(source):
                    identities[A] = name
    LOGGER.info(f'Materialized {kind} universe up to {n}: '
                f'{len(objects)} objects, {len(morphisms)} morphisms')
    return FinCat.from_payloads(objects, morphisms, identities, finset.compose,
                                name=f'{kind}{n}')


class SetCategory():
    """
    Finite sets and all functions between them, presented lazily.

    The listed objects are the ones law checks quantify over, but hom(), compose()
    and identity() accept any FinSets, so functors such as (- x Y) may leave the
    listed objects.

    Args:
        objects (Sequence[FinSet]): Objects quantified over.
        name (str): Display name.
    """

    closed = True

    def __init__(self, objects: Sequence[FinSet], name: str = 'Set'):
        self.objects = list(objects)
        self.name = name

    @classmethod
    def canonical(cls, n: int) -> 'SetCategory':
        return cls([FinSet(k) for k in range(n + 1)], name=f'Set{n}')

    def hom(self, X: FinSet, Y: FinSet) -> Tuple[FinFun, ...]:
        return tuple(enumerate_functions(X, Y))

    def hom_count(self, X: FinSet, Y: FinSet) -> int:
        return finset.count_functions(X, Y)

    def isomorphisms(self, X: FinSet, Y: FinSet) -> Tuple[FinFun, ...]:
        """
        The bijections X -> Y, in lexicographic order.
        """
        if X.size != Y.size:
            return ()
        return tuple(FinFun(X, Y, p) for p in itertools.permutations(range(Y.size)))

    def dom(self, f: FinFun) -> FinSet:
        return f.dom

    def cod(self, f: FinFun) -> FinSet:
        return f.cod

    def identity(self, X: FinSet) -> FinFun:
        return finset.identity(X)

    def compose(self, f: FinFun, g: FinFun) -> FinFun:
        return finset.compose(f, g)

    @property
    def morphisms(self) -> List[FinFun]:
        return [f for X in self.objects for Y in self.objects for f in self.hom(X, Y)]

    def composable_pairs(self) -> Iterator[Tuple[FinFun, FinFun]]:
        for X in self.objects:
            for Y in self.objects:
                for f in self.hom(X, Y):
                    for Z in self.objects:
                        for g in self.hom(Y, Z):
                            yield f, g

    def __str__(self) -> str:
        return f'{self.name}: finite sets ' + ', '.join(str(X) for X in self.objects)

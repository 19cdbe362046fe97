"""
Free monoids on finite generator sets, the universal property of the
canonical injection, and the adjunction Free -| Forget checked on words of
bounded length.

Words are tuples of generator indices. The free monoid is infinite, so every
claim is checked on the words of length at most max_len; a homomorphism out of
a free monoid is determined by the images of the generators, which lie in that
fragment.
"""
import itertools
import logging
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from CategoryTools.adjunctions.adjunction import AdjunctionHomBijection, check_hom_naturality
from CategoryTools.categories.constructors import FiniteMonoidPresentation
from CategoryTools.categories.universe import SetCategory
from CategoryTools.functors.equivalence import monoid_homomorphisms
from CategoryTools.sets.finset import FinFun, FinSet, enumerate_functions, identity
from CategoryTools.util.constants import MAX_GENERATORS, MAX_MONOID_SIZE, MAX_WORD_LENGTH
from CategoryTools.util.errors import CompositionError
from CategoryTools.util.helper import SearchBudget, check_guard
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('FreeMonoids')

Word = Tuple[int, ...]


def _size(X) -> int:
    return X.size if isinstance(X, FinSet) else int(X)


def words(n: int, max_len: int) -> List[Word]:
    """
    The words over n generators of length at most max_len, shortest first and
    lexicographic within a length.
    """
    return [w for k in range(max_len + 1) for w in itertools.product(range(n), repeat=k)]


def canonical_injection(X) -> Callable[[int], Word]:
    """
    x -> the one-letter word (x).
    """
    n = _size(X)

    def inject(x: int) -> Word:
        if not 0 <= x < n:
            raise ValueError(f'{x} is not a generator of a set of size {n}')
        return (x, )

    return inject


class FreeMonoid():
    """
    The free monoid on n generators. elements lists the words up to max_len;
    multiply concatenates without a bound.
    """

    is_free = True

    def __init__(self, n: int, max_len: int = MAX_WORD_LENGTH):
        self.n = n
        self.max_len = max_len
        self.unit: Word = ()
        self.name = f'Free{n}'

    @property
    def generators(self) -> List[int]:
        return list(range(self.n))

    @property
    def elements(self) -> List[Word]:
        return words(self.n, self.max_len)

    def multiply(self, a: Word, b: Word) -> Word:
        return tuple(a) + tuple(b)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeMonoid) and self.n == other.n

    def __hash__(self) -> int:
        return hash(('Free', self.n))

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f'FreeMonoid({self.n})'


def lift(f, M) -> Callable[[Word], object]:
    """
    The homomorphism Free(X) -> M extending f: X -> M, sending (x1, ..., xn)
    to f(x1) * ... * f(xn) and the empty word to the unit.

    Args:
        f: A callable, dict or table from generators to elements of M.
        M: A FiniteMonoidPresentation or FreeMonoid.
    """
    image = f if callable(f) else f.__getitem__

    def evaluate(w: Word):
        result = M.unit
        for x in w:
            result = M.multiply(result, image(x))
        return result

    return evaluate


def check_free_monoid_laws(n: int, max_len: int = MAX_WORD_LENGTH) -> LawReport:
    """
    Concatenation is associative with the empty word as unit, on all words up
    to max_len.
    """
    ws = words(n, max_len)
    checked = 0
    for w in ws:
        checked += 1
        if () + w != w or w + () != w:
            return LawReport.failure('free monoid laws', {'word': w}, checked, 'unit law fails')
    for u, v, w in itertools.product(ws, repeat=3):
        checked += 1
        if (u + v) + w != u + (v + w):
            return LawReport.failure('free monoid laws', {
                'u': u,
                'v': v,
                'w': w
            }, checked, 'associativity fails')
    return LawReport.success('free monoid laws', checked)


def is_bounded_hom(table: Dict[Word, object], M) -> bool:
    """
    The table sends the empty word to the unit and u + v to table[u] * table[v]
    whenever u + v is in the table. The table must be closed under splitting
    words, as the tables on all words up to a length are.
    """
    if table.get(()) != M.unit:
        return False
    for w, value in table.items():
        for i in range(len(w) + 1):
            u, v = w[:i], w[i:]
            if value != M.multiply(table[u], table[v]):
                return False
    return True


def bounded_homs(n: int, M, max_len: int, budget: SearchBudget | None = None) -> Iterator[Dict]:
    """
    Every table on the words up to max_len that satisfies the homomorphism
    laws within the bound. Words are assigned shortest first and a branch is
    cut as soon as a split of the newest word disagrees.
    """
    if budget is None:
        budget = SearchBudget('bounded homomorphisms')
    ws = words(n, max_len)
    table: Dict[Word, object] = {}

    def consistent(w: Word) -> bool:
        if w == ():
            return table[w] == M.unit
        for i in range(len(w) + 1):
            u, v = w[:i], w[i:]
            if table[w] != M.multiply(table[u], table[v]):
                return False
        return True

    def extend(i: int):
        if i == len(ws):
            yield dict(table)
            return
        w = ws[i]
        for value in M.elements:
            budget.spend()
            table[w] = value
            if consistent(w):
                yield from extend(i + 1)
            del table[w]

    yield from extend(0)


def check_uvp(n: int,
              M: FiniteMonoidPresentation,
              f,
              max_len: int = MAX_WORD_LENGTH) -> LawReport:
    """
    lift(f) after the canonical injection is f, lift(f) is a homomorphism, and
    it is the only homomorphism on the words up to max_len that agrees with f
    on the one-letter words.

    Raises:
        SizeLimitError: if n > 2, |M| > 3 or max_len > 3.
    """
    check_guard('generators', n, MAX_GENERATORS)
    check_guard('monoid size', M.size, MAX_MONOID_SIZE)
    check_guard('max_len', max_len, MAX_WORD_LENGTH)
    image = f if callable(f) else f.__getitem__
    phi = lift(image, M)
    inject = canonical_injection(n)
    children = []

    bad = [x for x in range(n) if phi(inject(x)) != image(x)]
    if bad:
        children.append(
            LawReport.failure('lift extends f', {
                'generator': bad[0],
                'lift': phi(inject(bad[0])),
                'f': image(bad[0])
            }, n))
    else:
        children.append(LawReport.success('lift extends f', n))

    ws = words(n, max_len)
    table = {w: phi(w) for w in ws}
    if is_bounded_hom(table, M):
        children.append(LawReport.success('lift is a homomorphism', len(ws)))
    else:
        children.append(
            LawReport.failure('lift is a homomorphism', {'table': list(table.items())}, len(ws)))

    candidates = 0
    extending = []
    for candidate in bounded_homs(n, M, max_len):
        candidates += 1
        if all(candidate[(x, )] == image(x) for x in range(n)):
            extending.append(candidate)
    if len(extending) == 1 and extending[0] == table:
        children.append(
            LawReport.success('uniqueness', candidates,
                              f'1 of {candidates} bounded homomorphisms extends f'))
    else:
        witnesses = {'extending': len(extending)}
        for candidate in extending:
            if candidate != table:
                w = next(w for w in ws if candidate[w] != table[w])
                witnesses.update({'word': w, 'lift': table[w], 'other': candidate[w]})
                break
        children.append(LawReport.failure('uniqueness', witnesses, candidates))
    LOGGER.debug(f'uvp over {M.name} with {n} generators: {candidates} bounded homomorphisms')
    return LawReport.combine('universal property', children, message=f'Free{n} -> {M.name}')


def free_map(h: FinFun) -> Callable[[Word], Word]:
    """
    The action of the free functor on h: apply h letter by letter.
    """
    return lambda w: tuple(h(x) for x in w)


def check_free_functor_laws(n: int = MAX_GENERATORS, max_len: int = 4) -> LawReport:
    """
    free_map preserves identities and composition for all functions between
    generator sets of size at most n, on all words up to max_len.
    """
    check_guard('generators', n, MAX_GENERATORS)
    sets = [FinSet(k) for k in range(1, n + 1)]
    children = []
    checked = 0
    failure = None
    for X in sets:
        ident = free_map(identity(X))
        for w in words(X.size, max_len):
            checked += 1
            if ident(w) != w:
                failure = LawReport.failure('preserves identity', {'word': w}, checked)
                break
    children.append(failure or LawReport.success('preserves identity', checked))

    checked = 0
    failure = None
    for X, Y, Z in itertools.product(sets, repeat=3):
        for f in enumerate_functions(X, Y):
            for g in enumerate_functions(Y, Z):
                both = free_map(f.then(g))
                for w in words(X.size, max_len):
                    checked += 1
                    if both(w) != free_map(g)(free_map(f)(w)):
                        failure = LawReport.failure('preserves composition', {
                            'f': f,
                            'g': g,
                            'word': w
                        }, checked)
                        break
                if failure:
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('preserves composition', checked))
    return LawReport.combine('free functor laws', children)


class MonoidHom():
    """
    A monoid homomorphism given by its values on generators (free source) or
    on every element (finite source).
    """

    def __init__(self, source, target, images: Dict):
        self.source = source
        self.target = target
        self.images = dict(images)
        keys = source.generators if getattr(source, 'is_free', False) else source.elements
        self._key = tuple(self.images[k] for k in keys)

    def __call__(self, a):
        if getattr(self.source, 'is_free', False):
            return lift(self.images, self.target)(a)
        return self.images[a]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonoidHom) and self.source == other.source and
                self.target == other.target and self._key == other._key)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self._key))

    def __str__(self) -> str:
        return f'{self.source}->{self.target}:[' + ','.join(str(v) for v in self._key) + ']'

    def __repr__(self) -> str:
        return str(self)


class BoundedMonoidCategory():
    """
    Finite monoids with their homomorphisms, extended by the free monoids as
    sources. hom(Free(n), M) is every lift of a map from the generators.

    Only the listed finite monoids are objects quantified over.

    Args:
        monoids (Sequence[FiniteMonoidPresentation]): The listed objects.
        max_len (int): Word bound for the free monoids.
    """

    closed = True

    def __init__(self,
                 monoids: Sequence[FiniteMonoidPresentation],
                 max_len: int = MAX_WORD_LENGTH):
        self.objects = list(monoids)
        self.max_len = max_len
        self.name = 'Mon(' + ','.join(M.name for M in self.objects) + ')'

    def hom(self, A, B) -> Tuple[MonoidHom, ...]:
        if getattr(A, 'is_free', False):
            return tuple(
                MonoidHom(A, B, dict(zip(A.generators, images)))
                for images in itertools.product(B.elements, repeat=A.n))
        return tuple(MonoidHom(A, B, phi) for phi in monoid_homomorphisms(A, B))

    def hom_count(self, A, B) -> int:
        return len(self.hom(A, B))

    def dom(self, f: MonoidHom):
        return f.source

    def cod(self, f: MonoidHom):
        return f.target

    def identity(self, A) -> MonoidHom:
        if getattr(A, 'is_free', False):
            return MonoidHom(A, A, {x: (x, ) for x in A.generators})
        return MonoidHom(A, A, {a: a for a in A.elements})

    def compose(self, f: MonoidHom, g: MonoidHom) -> MonoidHom:
        if f.target != g.source:
            raise CompositionError(f, g)
        keys = f.source.generators if getattr(f.source, 'is_free', False) else f.source.elements
        return MonoidHom(f.source, g.target, {k: g(f.images[k]) for k in keys})

    @property
    def morphisms(self) -> List[MonoidHom]:
        return [f for A in self.objects for B in self.objects for f in self.hom(A, B)]

    def composable_pairs(self) -> Iterator[Tuple[MonoidHom, MonoidHom]]:
        for f in self.morphisms:
            for C in self.objects:
                for g in self.hom(f.target, C):
                    yield f, g

    def __str__(self) -> str:
        return self.name


class FreeFunctor():
    """
    Free: Set -> Mon, X -> Free(X) and h -> letter-by-letter application.
    """

    name = 'Free'

    def __init__(self, source: SetCategory, target: BoundedMonoidCategory):
        self.source = source
        self.target = target

    def on_object(self, X: FinSet) -> FreeMonoid:
        return FreeMonoid(X.size, self.target.max_len)

    def on_morphism(self, h: FinFun) -> MonoidHom:
        return MonoidHom(self.on_object(h.dom), self.on_object(h.cod),
                         {x: (h(x), ) for x in range(h.dom.size)})


class ForgetfulFunctor():
    """
    Forget: Mon -> Set. The underlying set of M is {0, ..., |M|-1}, indexed in
    presentation order.
    """

    name = 'U'

    def __init__(self, source: BoundedMonoidCategory, target: SetCategory):
        self.source = source
        self.target = target

    def on_object(self, M) -> FinSet:
        return FinSet(M.size)

    def on_morphism(self, phi: MonoidHom) -> FinFun:
        A, B = phi.source, phi.target
        return FinFun(FinSet(A.size), FinSet(B.size), [B.index(phi(a)) for a in A.elements])


def free_forget_adjunction(n: int,
                           monoids: Sequence[FiniteMonoidPresentation],
                           max_len: int = MAX_WORD_LENGTH) -> AdjunctionHomBijection:
    """
    Free -| Forget over generator sets of size at most n and the given finite
    monoids. alpha precomposes with the canonical injection and alpha^-1 lifts.

    Raises:
        SizeLimitError: if n > 2, a monoid has more than 3 elements or max_len > 3.
    """
    check_guard('generators', n, MAX_GENERATORS)
    check_guard('max_len', max_len, MAX_WORD_LENGTH)
    for M in monoids:
        check_guard('monoid size', M.size, MAX_MONOID_SIZE)
    C = SetCategory.canonical(n)
    D = BoundedMonoidCategory(monoids, max_len)
    F = FreeFunctor(C, D)
    G = ForgetfulFunctor(D, C)

    def alpha(X, M, g):
        return FinFun(X, FinSet(M.size), [M.index(g((x, ))) for x in range(X.size)])

    def alpha_inv(X, M, f):
        return MonoidHom(F.on_object(X), M, {x: M.elements[f(x)] for x in range(X.size)})

    return AdjunctionHomBijection(F, G, alpha, alpha_inv, name='Free-|Forget')


def check_free_triangles(n: int, monoids: Sequence[FiniteMonoidPresentation],
                         max_len: int = MAX_WORD_LENGTH) -> LawReport:
    """
    The triangles of the unit eta_X: x -> (x) and the counit epsilon_M, which
    multiplies out a word of elements of M:
    Free(eta_X) then epsilon_{Free X} is the identity on words up to max_len,
    and eta_{U M} then U(epsilon_M) is the identity of U M.
    """
    children = []
    checked = 0
    failure = None
    for k in range(n + 1):
        for w in words(k, max_len):
            checked += 1
            # Free(eta) turns w into a word of one-letter words; epsilon concatenates
            lifted = tuple((x, ) for x in w)
            flattened = tuple(itertools.chain.from_iterable(lifted))
            if flattened != w:
                failure = LawReport.failure('left triangle', {'word': w}, checked)
                break
        if failure:
            break
    children.append(failure or LawReport.success('left triangle', checked))

    checked = 0
    failure = None
    for M in monoids:
        counit = lift(lambda a: a, M)
        for a in M.elements:
            checked += 1
            if counit((a, )) != a:
                failure = LawReport.failure('right triangle', {'monoid': M.name, 'element': a},
                                            checked)
                break
        if failure:
            break
    children.append(failure or LawReport.success('right triangle', checked))
    return LawReport.combine('triangle identities', children)


def check_free_forget_adjunction(n: int,
                                 monoids: Sequence[FiniteMonoidPresentation],
                                 max_len: int = MAX_WORD_LENGTH) -> LawReport:
    adj = free_forget_adjunction(n, monoids, max_len)
    return LawReport.combine('free forget adjunction',
                             [check_hom_naturality(adj),
                              check_free_triangles(n, monoids, max_len)],
                             message=f'words up to length {max_len}')

"""
Coalgebras: finite Maybe-coalgebras and their anamorphisms into the
conatural numbers, and streams as (state, head, tail) processes observed by
taking finitely many heads.
"""
import itertools
import logging
from typing import Callable, List, Sequence

from monty.json import MSONable

from CategoryTools.categories.fincat import FinCat
from CategoryTools.categories.laws import check_laws
from CategoryTools.queries.universal import find_universal
from CategoryTools.recursion.conat import STAR, Conat, conat_out, truncated_conats
from CategoryTools.util.constants import MAX_COALGEBRA_CARRIER, MAX_CONAT_CARRIER, NATS_BOUND
from CategoryTools.util.errors import SizeLimitError, UnknownNameError
from CategoryTools.util.helper import check_guard
from CategoryTools.util.report import LawReport

LOGGER = logging.getLogger('Coalgebras')


class CoalgebraSpec(MSONable):
    """
    A Maybe-coalgebra on {0, ..., size-1}: structure[x] is the next state, or
    None for the point of 1 + X.
    """

    def __init__(self, size: int, structure: Sequence[int | None], name: str | None = None):
        structure = tuple(structure)
        if len(structure) != size:
            raise ValueError(f'structure has {len(structure)} entries for a carrier of {size}')
        for y in structure:
            if y is not None and not 0 <= y < size:
                raise ValueError(f'structure value {y} is outside the carrier')
        self.size = size
        self.structure = structure
        self.name = name or self.label

    @property
    def label(self) -> str:
        return f'{self.size}:[' + ','.join('*' if y is None else str(y)
                                           for y in self.structure) + ']'

    def __call__(self, x: int):
        return self.structure[x]

    def __eq__(self, other) -> bool:
        return (isinstance(other, CoalgebraSpec) and self.size == other.size and
                self.structure == other.structure)

    def __hash__(self) -> int:
        return hash((self.size, self.structure))

    def __str__(self) -> str:
        return self.name


def all_coalgebras(size: int) -> List[CoalgebraSpec]:
    return [
        CoalgebraSpec(size, s)
        for s in itertools.product([None] + list(range(size)), repeat=size)
    ]


def ana_conat(c: CoalgebraSpec) -> List[Conat]:
    """
    The anamorphism into the conaturals: x goes to Fin(n) when the structure
    map reaches the point after n steps, and to Inf when a state repeats first.
    """
    result = []
    for x in range(c.size):
        seen = set()
        steps = 0
        while c(x) is not None:
            if x in seen:
                break
            seen.add(x)
            x = c(x)
            steps += 1
        result.append(Conat.fin(steps) if c(x) is None else Conat.inf())
    return result


def _coalgebra_square(c: CoalgebraSpec, h: Sequence[Conat]) -> bool:
    for x in range(c.size):
        y = c(x)
        if conat_out(h[x]) != (STAR if y is None else h[y]):
            return False
    return True


def check_conat_terminality(max_size: int = MAX_CONAT_CARRIER,
                            ana: Callable[[CoalgebraSpec], List[Conat]] = ana_conat) -> LawReport:
    """
    For every Maybe-coalgebra on a carrier of size k <= max_size, ana_conat
    makes the coalgebra square commute and is the only map into
    Fin(0), ..., Fin(k-1), Inf that does. Any commuting map from a carrier of
    size k lands in that set, so this is uniqueness among all maps.

    Args:
        max_size (int): Largest carrier checked.
        ana (Callable): The anamorphism under test, coalgebra -> list of conats.
    """
    check_guard('max_size', max_size, MAX_CONAT_CARRIER)
    children = []
    checked = 0
    failure = None
    for k in range(max_size + 1):
        codomain = truncated_conats(k)
        coalgebras = all_coalgebras(k)
        LOGGER.info(f'Checking {len(coalgebras)} coalgebras of size {k}')
        for c in coalgebras:
            checked += 1
            phi = ana(c)
            if not _coalgebra_square(c, phi):
                failure = LawReport.failure('anamorphism square', {
                    'coalgebra': c.label,
                    'ana': phi
                }, checked)
                break
            for h in itertools.product(codomain, repeat=k):
                if list(h) != phi and _coalgebra_square(c, h):
                    failure = LawReport.failure('anamorphism uniqueness', {
                        'coalgebra': c.label,
                        'ana': phi,
                        'other': list(h)
                    }, checked)
                    break
            if failure:
                break
        if failure:
            break
    children.append(failure or LawReport.success('anamorphism square and uniqueness', checked))
    children.append(check_identity_anamorphism(max_size))
    children.append(dual_lambek_check())
    return LawReport.combine('conat terminality', children)


def truncated_conat_coalgebra(k: int) -> CoalgebraSpec:
    """
    Fin(0), ..., Fin(k-1), Inf as states 0, ..., k with the predecessor.
    """
    structure = [None] + list(range(k - 1)) + [k] if k > 0 else [0]
    return CoalgebraSpec(k + 1, structure, name=f'conat{k}')


def check_identity_anamorphism(k: int) -> LawReport:
    """
    The anamorphism of the predecessor coalgebra is the identity.
    """
    c = truncated_conat_coalgebra(k)
    values = truncated_conats(k)
    image = ana_conat(c)
    if image != values:
        return LawReport.failure('identity is ana of out', {
            'values': values,
            'ana': image
        }, c.size)
    return LawReport.success('identity is ana of out', c.size)


def unfold_conat(step: Callable, x, depth: int) -> Conat:
    """
    Observe the anamorphism of step at x to the given depth: Fin(n) if step
    returns STAR at its n-th application, Inf if it has not after depth steps.
    """
    for n in range(depth):
        x = step(x)
        if x is STAR:
            return Conat.fin(n)
    return Conat.inf()


def _out_step(state):
    # states of 1 + Conat, tagged so that the point of 1 + Conat differs
    # from the point of 1 + (1 + Conat)
    tag, v = state
    if tag == 'point':
        return STAR
    m = conat_out(v)
    return ('point', None) if m is STAR else ('value', m)


def conat_in(m, depth: int = 8) -> Conat:
    """
    The inverse of out, built as the anamorphism of F(out): STAR -> Fin(0) and
    v -> the successor of v.
    """
    return unfold_conat(_out_step, ('point', None) if m is STAR else ('value', m), depth)


def dual_lambek_check(depth: int = 8) -> LawReport:
    """
    conat_in is a two-sided inverse of out on Fin(0), ..., Fin(depth // 2)
    and Inf, observed to the given depth.
    """
    sample = truncated_conats(depth // 2 + 1)
    children = []
    failure = None
    for i, v in enumerate(sample):
        back = conat_in(conat_out(v), depth)
        if back != v:
            failure = LawReport.failure('out then in', {'value': v, 'roundtrip': back}, i + 1)
            break
    children.append(failure or LawReport.success('out then in', len(sample)))

    failure = None
    for i, m in enumerate([STAR] + sample):
        back = conat_out(conat_in(m, depth))
        if back != m:
            failure = LawReport.failure('in then out', {'value': m, 'roundtrip': back}, i + 1)
            break
    children.append(failure or LawReport.success('in then out', len(sample) + 1))
    return LawReport.combine('dual lambek', children)


def is_coalgebra_morphism(source: CoalgebraSpec, target: CoalgebraSpec,
                          h: Sequence[int]) -> bool:
    for x in range(source.size):
        y = source(x)
        if (None if y is None else h[y]) != target(h[x]):
            return False
    return True


def coalgebra_category(sizes: Sequence[int] = (1, 2)) -> FinCat:
    """
    The Maybe-coalgebras on carriers of the given sizes, plus the truncated
    conats on max(sizes) + 1 states, with the coalgebra morphisms between them.
    """
    for size in sizes:
        check_guard('carrier', size, MAX_COALGEBRA_CARRIER)
    coalgebras = [c for size in sizes for c in all_coalgebras(size)]
    coalgebras.append(truncated_conat_coalgebra(max(sizes)))
    LOGGER.info(f'Materializing {len(coalgebras)} coalgebras')
    objects = [(c.label, c) for c in coalgebras]
    morphisms = []
    identities = {}
    for source in coalgebras:
        for target in coalgebras:
            for h in itertools.product(range(target.size), repeat=source.size):
                if is_coalgebra_morphism(source, target, h):
                    name = f'{source.label}->{target.label}:' + ','.join(str(y) for y in h)
                    morphisms.append((name, source.label, target.label, h))
                    if source == target and h == tuple(range(source.size)):
                        identities[source.label] = name
    return FinCat.from_payloads(objects, morphisms, identities,
                                lambda p, q: tuple(q[x] for x in p),
                                name='Coalg(Maybe)')


def coalgebra_category_check(sizes: Sequence[int] = (1, 2)) -> LawReport:
    """
    The materialized coalgebra category satisfies the category laws, every
    morphism h: (X, phi) -> (Y, psi) satisfies h then ana(psi) = ana(phi), and
    its terminal object is the truncated conat coalgebra.
    """
    C = coalgebra_category(sizes)
    children = [check_laws(C)]

    failure = None
    for i, f in enumerate(C.morphisms):
        source, target = C.object_payload(C.dom(f)), C.object_payload(C.cod(f))
        h = C.payload(f)
        ana_source, ana_target = ana_conat(source), ana_conat(target)
        if [ana_target[y] for y in h] != ana_source:
            failure = LawReport.failure('anamorphism fusion', {'morphism': f}, i + 1)
            break
    children.append(failure or LawReport.success('anamorphism fusion', len(C.morphisms)))

    expected = truncated_conat_coalgebra(max(sizes)).label
    found = find_universal(C, 'terminal')
    if found.objects == [expected]:
        children.append(LawReport.success('terminal coalgebra', len(C.objects), terminal=expected))
    else:
        children.append(
            LawReport.failure('terminal coalgebra', {
                'expected': expected,
                'found': found.objects
            }, len(C.objects)))
    return LawReport.combine('coalgebra category', children, message=C.name)


class StreamProc():
    """
    A stream as the anamorphism of <head, tail> at a state. Observing it never
    changes the process.

    Args:
        state: The current state.
        head (Callable): state -> emitted value.
        tail (Callable): state -> next state.
    """

    def __init__(self, state, head: Callable, tail: Callable, name: str = 'stream'):
        self.state = state
        self.head = head
        self.tail = tail
        self.name = name

    def at(self, state) -> 'StreamProc':
        return StreamProc(state, self.head, self.tail, self.name)

    def __str__(self) -> str:
        return f'{self.name}({self.state})'


def stream_take(p: StreamProc, k: int) -> List:
    """
    The first k heads: head(tail^i(state)) for i < k.
    """
    if k < 0:
        raise ValueError(f'cannot take {k} elements')
    values = []
    state = p.state
    for i in range(k):
        values.append(p.head(state))
        if i < k - 1:
            state = p.tail(state)
    return values


def nats(start: int = 0, bound: int = NATS_BOUND) -> StreamProc:
    """
    start, start + 1, ... over the naturals up to bound.

    Observing past the bound raises SizeLimitError.
    """

    def succ(n):
        if n + 1 > bound:
            raise SizeLimitError('nats', n + 1, bound)
        return n + 1

    return StreamProc(start, lambda n: n, succ, name='nats')


def constant(a) -> StreamProc:
    return StreamProc(a, lambda s: s, lambda s: s, name='constant')


def iterate(f: Callable, x) -> StreamProc:
    return StreamProc(x, lambda s: s, f, name='iterate')


def zip_streams(p: StreamProc, q: StreamProc) -> StreamProc:
    """
    Head is head x head and tail is tail x tail.
    """
    return StreamProc((p.state, q.state),
                      lambda s: (p.head(s[0]), q.head(s[1])),
                      lambda s: (p.tail(s[0]), q.tail(s[1])),
                      name=f'zip({p.name},{q.name})')


def diagonal(p: StreamProc) -> StreamProc:
    """
    Each head of p paired with itself.
    """
    return StreamProc(p.state, lambda s: (p.head(s), p.head(s)), p.tail, name=f'diag({p.name})')


def bisimilar_up_to(p: StreamProc, q: StreamProc, k: int) -> bool:
    return stream_take(p, k) == stream_take(q, k)


def check_stream_equations(p: StreamProc, k: int = 8, states: int = 4) -> LawReport:
    """
    The observed stream f = [[<head, tail>]] satisfies f then head = head and
    f then tail = tail then f, at the first few states reached by tail.
    """
    checked = 0
    state = p.state
    for _ in range(states):
        here, there = p.at(state), p.at(p.tail(state))
        observed = stream_take(here, k + 1)
        checked += 1
        if observed[0] != p.head(state):
            return LawReport.failure('stream equations', {
                'state': state,
                'head': observed[0]
            }, checked, 'first observation is not the head')
        if observed[1:] != stream_take(there, k):
            return LawReport.failure('stream equations', {
                'state': state,
                'observed': observed
            }, checked, 'observed tail differs from the stream at the next state')
        state = p.tail(state)
    return LawReport.success('stream equations', checked, p.name)


STREAMS = ('nats', 'zip', 'constant', 'diagonal')


def stream_by_name(name: str, start: int = 0) -> StreamProc:
    """
    Processes for the unfold command: nats from start, zip of nats from start
    with nats from start + 1, the constant stream at start, and the diagonal
    of nats.
    """
    if name == 'nats':
        return nats(start)
    if name == 'zip':
        return zip_streams(nats(start), nats(start + 1))
    if name == 'constant':
        return constant(start)
    if name == 'diagonal':
        return diagonal(nats(start))
    raise UnknownNameError(f'unknown stream {name}')

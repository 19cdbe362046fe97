from typing import Dict, List, Optional, Tuple

from monty.json import MSONable

from CategoryTools.categories.fincat import require_closed


class MorphismClassification(MSONable):
    """
    Mono/epi/iso status of a morphism together with its one-sided inverses.

    Args:
        morphism (str): The classified morphism.
        is_mono (bool): Left cancellable.
        is_epi (bool): Right cancellable.
        is_iso (bool): Has a two-sided inverse.
        inverse (str, None): The inverse, present exactly when is_iso.
        retractions_of (list): All r with f then r = identity.
        sections_of (list): All s with s then f = identity.
        witnesses (dict): For a non-mono, a pair g1 != g2 with g1 then f = g2 then f;
            for a non-epi, a pair h1 != h2 with f then h1 = f then h2.
    """

    def __init__(self,
                 morphism: str,
                 is_mono: bool,
                 is_epi: bool,
                 is_iso: bool,
                 inverse: str | None = None,
                 retractions_of: List[str] | None = None,
                 sections_of: List[str] | None = None,
                 witnesses: Dict | None = None):
        self.morphism = morphism
        self.is_mono = is_mono
        self.is_epi = is_epi
        self.is_iso = is_iso
        self.inverse = inverse
        self.retractions_of = list(retractions_of or [])
        self.sections_of = list(sections_of or [])
        self.witnesses = dict(witnesses or {})

    def __repr__(self) -> str:
        flags = [name for name, flag in (('mono', self.is_mono), ('epi', self.is_epi),
                                         ('iso', self.is_iso)) if flag]
        return f'MorphismClassification({self.morphism}: {",".join(flags) or "none"})'


def find_inverse(C, f) -> Optional[object]:
    """
    The two-sided inverse of f, or None. Works for any category exposing
    hom/compose/identity/dom/cod.
    """
    X, Y = C.dom(f), C.cod(f)
    id_x, id_y = C.identity(X), C.identity(Y)
    for g in C.hom(Y, X):
        if C.compose(f, g) == id_x and C.compose(g, f) == id_y:
            return g
    return None


def is_iso(C, f) -> bool:
    return find_inverse(C, f) is not None


def mono_witness(C, f) -> Optional[Tuple]:
    """
    A pair g1 != g2 into dom(f) with g1 then f = g2 then f, or None if f is mono.
    """
    X = C.dom(f)
    for W in C.objects:
        seen = {}
        for g in C.hom(W, X):
            h = C.compose(g, f)
            if h in seen:
                return seen[h], g
            seen[h] = g
    return None


def epi_witness(C, f) -> Optional[Tuple]:
    """
    A pair h1 != h2 out of cod(f) with f then h1 = f then h2, or None if f is epi.
    """
    Y = C.cod(f)
    for Z in C.objects:
        seen = {}
        for h in C.hom(Y, Z):
            k = C.compose(f, h)
            if k in seen:
                return seen[k], h
            seen[k] = h
    return None


def classify(C, f) -> MorphismClassification:
    """
    Classify f by exhaustive quantification over C.

    Raises:
        UnknownNameError: if f is not a morphism of C.
    """
    require_closed(C, 'classify')
    X, Y = C.dom(f), C.cod(f)
    id_x, id_y = C.identity(X), C.identity(Y)
    retractions = [r for r in C.hom(Y, X) if C.compose(f, r) == id_x]
    sections = [s for s in C.hom(Y, X) if C.compose(s, f) == id_y]
    inverse = next((g for g in retractions if g in sections), None)

    witnesses = {}
    non_mono = mono_witness(C, f)
    if non_mono is not None:
        witnesses['not_mono'] = list(non_mono)
    non_epi = epi_witness(C, f)
    if non_epi is not None:
        witnesses['not_epi'] = list(non_epi)
    return MorphismClassification(f,
                                  is_mono=non_mono is None,
                                  is_epi=non_epi is None,
                                  is_iso=inverse is not None,
                                  inverse=inverse,
                                  retractions_of=retractions,
                                  sections_of=sections,
                                  witnesses=witnesses)


def classify_all(C) -> Dict[str, MorphismClassification]:
    return {f: classify(C, f) for f in C.morphisms}

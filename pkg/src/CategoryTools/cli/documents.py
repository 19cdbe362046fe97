"""
JSON documents read by cattool.

Every document is an object with a "kind" discriminator. Category documents
(explicit, preorder, monoid, graph, universe) mirror the presentations of
CategoryTools.categories; functor, nattrans and adjunction documents refer to
other documents either inline or by a path relative to the referring file.

parse_document validates and normalizes a document: references are inlined,
morphisms and edges become {name, dom, cod} / {name, src, dst} objects, and
optional fields are filled in, so serialize(parse_document(text)) is stable.
"""
import json
import os
from typing import Dict, List

from CategoryTools.categories.constructors import (FiniteMonoidPresentation, GraphPresentation,
                                                   PreorderPresentation, from_graph,
                                                   from_monoid, from_preorder, monoid_by_name)
from CategoryTools.categories.fincat import FinCat
from CategoryTools.categories.universe import UNIVERSE_KINDS, universe_category
from CategoryTools.functors.functor import FunctorData, compose_functors, identity_functor
from CategoryTools.functors.natural import NatTransData
from CategoryTools.adjunctions.adjunction import AdjunctionHomBijection, AdjunctionUnitCounit
from CategoryTools.util.errors import DocumentError, UnknownNameError

CATEGORY_KINDS = ('explicit', 'preorder', 'monoid', 'graph', 'universe')
KINDS = CATEGORY_KINDS + ('functor', 'nattrans', 'adjunction')


def _join(path: str, key) -> str:
    if isinstance(key, int):
        return f'{path}[{key}]'
    return f'{path}.{key}' if path else str(key)


def _field(doc: Dict, key: str, path: str, expected=None, default=None, required=True):
    if key not in doc:
        if required:
            raise DocumentError('missing field', _join(path, key))
        return default
    value = doc[key]
    if expected is not None and not isinstance(value, expected):
        names = expected.__name__ if isinstance(expected, type) else '/'.join(
            t.__name__ for t in expected)
        raise DocumentError(f'expected {names}, got {type(value).__name__}', _join(path, key))
    return value


def _name(value, path: str) -> str:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError('expected a name', path)
    return str(value)


def _names(values, path: str) -> List[str]:
    return [_name(value, _join(path, i)) for i, value in enumerate(values)]


def _name_map(values: Dict, path: str) -> Dict[str, str]:
    return {str(key): _name(value, _join(path, key)) for key, value in values.items()}


def _triples(entries, path: str, keys) -> List[Dict[str, str]]:
    rows = []
    for i, entry in enumerate(entries):
        here = _join(path, i)
        if isinstance(entry, list):
            if len(entry) != len(keys):
                raise DocumentError(f'expected {len(keys)} entries', here)
            entry = dict(zip(keys, entry))
        if not isinstance(entry, dict):
            raise DocumentError('expected an object', here)
        rows.append({key: _name(_field(entry, key, here), _join(here, key)) for key in keys})
    return rows


def _read(path: str) -> Dict:
    with open(path, 'r') as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as e:
            raise DocumentError(f'invalid JSON at line {e.lineno}: {e.msg}', path)


def _reference(value, path: str, base_dir: str | None, kinds) -> Dict:
    if isinstance(value, str):
        file = value if base_dir is None else os.path.join(base_dir, value)
        doc = _normalize(_read(file), '', os.path.dirname(file))
    elif isinstance(value, dict):
        doc = _normalize(value, path, base_dir)
    else:
        raise DocumentError('expected a document or a path', path)
    if doc['kind'] not in kinds:
        raise DocumentError(f'expected a {"/".join(kinds)} document, got {doc["kind"]}', path)
    return doc


def _normalize(doc, path: str = '', base_dir: str | None = None) -> Dict:
    if not isinstance(doc, dict):
        raise DocumentError('a document must be a JSON object', path or None)
    kind = _field(doc, 'kind', path, str)
    if kind not in KINDS:
        raise DocumentError(f'unknown kind {kind}', _join(path, 'kind'))
    out = {'kind': kind}

    if kind == 'explicit':
        out['name'] = _field(doc, 'name', path, str, 'C', required=False)
        out['objects'] = _names(_field(doc, 'objects', path, list), _join(path, 'objects'))
        out['morphisms'] = _triples(_field(doc, 'morphisms', path, list),
                                    _join(path, 'morphisms'), ('name', 'dom', 'cod'))
        out['identities'] = _name_map(_field(doc, 'identities', path, dict),
                                      _join(path, 'identities'))
        out['composition'] = _triples(_field(doc, 'composition', path, list),
                                      _join(path, 'composition'), ('first', 'then', 'result'))

    elif kind == 'preorder':
        out['name'] = _field(doc, 'name', path, str, 'P', required=False)
        out['elements'] = _names(_field(doc, 'elements', path, list), _join(path, 'elements'))
        leq = []
        for i, pair in enumerate(_field(doc, 'leq', path, list)):
            here = _join(_join(path, 'leq'), i)
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError('expected a pair [x, y]', here)
            leq.append(_names(pair, here))
        out['leq'] = leq

    elif kind == 'monoid':
        if 'table' not in doc and 'catalog' in doc:
            catalog = _field(doc, 'catalog', path, str)
            try:
                M = monoid_by_name(catalog)
            except UnknownNameError as e:
                raise DocumentError(str(e), _join(path, 'catalog'))
            out['name'] = _field(doc, 'name', path, str, M.name, required=False)
            out['elements'] = list(M.elements)
            out['unit'] = M.unit
            out['table'] = M.table
        else:
            out['name'] = _field(doc, 'name', path, str, 'M', required=False)
            out['elements'] = _field(doc, 'elements', path, list)
            out['unit'] = _field(doc, 'unit', path)
            table = _field(doc, 'table', path, list)
            for i, row in enumerate(table):
                if not isinstance(row, list):
                    raise DocumentError('expected a row', _join(_join(path, 'table'), i))
            out['table'] = table

    elif kind == 'graph':
        out['name'] = _field(doc, 'name', path, str, 'G', required=False)
        out['nodes'] = _names(_field(doc, 'nodes', path, list), _join(path, 'nodes'))
        out['edges'] = _triples(_field(doc, 'edges', path, list), _join(path, 'edges'),
                                ('name', 'src', 'dst'))
        max_path_len = _field(doc, 'max_path_len', path, (int, type(None)), None, required=False)
        if isinstance(max_path_len, bool):
            raise DocumentError('expected int', _join(path, 'max_path_len'))
        out['max_path_len'] = max_path_len

    elif kind == 'universe':
        family = _field(doc, 'family', path, str)
        if family not in UNIVERSE_KINDS:
            raise DocumentError(f'unknown family {family}', _join(path, 'family'))
        out['family'] = family
        out['max_size'] = _field(doc, 'max_size', path, int)

    elif kind == 'functor':
        out['name'] = _field(doc, 'name', path, str, 'F', required=False)
        for key in ('source', 'target'):
            out[key] = _reference(_field(doc, key, path), _join(path, key), base_dir,
                                  CATEGORY_KINDS)
        out['obj_map'] = _name_map(_field(doc, 'obj_map', path, dict), _join(path, 'obj_map'))
        out['mor_map'] = _name_map(_field(doc, 'mor_map', path, dict), _join(path, 'mor_map'))

    elif kind == 'nattrans':
        out['name'] = _field(doc, 'name', path, str, 'alpha', required=False)
        for key in ('source_functor', 'target_functor'):
            out[key] = _reference(_field(doc, key, path), _join(path, key), base_dir,
                                  ('functor', ))
        out['components'] = _name_map(_field(doc, 'components', path, dict),
                                      _join(path, 'components'))

    else:
        out['name'] = _field(doc, 'name', path, str, 'adj', required=False)
        for key in ('left', 'right'):
            out[key] = _reference(_field(doc, key, path), _join(path, key), base_dir,
                                  ('functor', ))
        if 'alpha' in doc:
            tables = []
            for i, entry in enumerate(_field(doc, 'alpha', path, list)):
                here = _join(_join(path, 'alpha'), i)
                if not isinstance(entry, dict):
                    raise DocumentError('expected an object', here)
                tables.append({
                    'object': _name(_field(entry, 'object', here), _join(here, 'object')),
                    'target': _name(_field(entry, 'target', here), _join(here, 'target')),
                    'table': _name_map(_field(entry, 'table', here, dict),
                                       _join(here, 'table'))
                })
            out['alpha'] = tables
        else:
            for key in ('unit', 'counit'):
                out[key] = _name_map(_field(doc, key, path, dict), _join(path, key))
    return out


def parse_document(source) -> Dict:
    """
    Read and normalize a document.

    Args:
        source: A path to a JSON file, JSON text, or an already decoded dict.
            References inside a file are resolved relative to its directory.

    Returns:
        The normalized document.

    Raises:
        DocumentError: for invalid JSON or a schema violation; the message
            carries the JSON field path.
        OSError: if a referenced file cannot be read.
    """
    if isinstance(source, dict):
        return _normalize(source)
    if isinstance(source, str) and source.lstrip().startswith('{'):
        try:
            doc = json.loads(source)
        except json.JSONDecodeError as e:
            raise DocumentError(f'invalid JSON at line {e.lineno}: {e.msg}')
        return _normalize(doc)
    path = os.fspath(source)
    return _normalize(_read(path), '', os.path.dirname(os.path.abspath(path)))


def serialize(doc: Dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def _key(doc: Dict) -> str:
    return json.dumps(doc, sort_keys=True)


class DocumentBuilder():
    """
    Builds library objects from normalized documents. Equal category documents
    give the same FinCat instance, so functors written against the same source
    file share their categories.
    """

    def __init__(self):
        self._categories: Dict[str, object] = {}
        self._functors: Dict[str, FunctorData] = {}

    def category(self, doc: Dict):
        """
        The FinCat (or HomEnumeration, for a truncated cyclic graph) of a
        category document.

        Raises:
            PresentationError: for data that violates the presentation axioms.
            InfiniteCategoryError: for a cyclic graph without max_path_len.
        """
        key = _key(doc)
        if key in self._categories:
            return self._categories[key]
        kind = doc['kind']
        if kind == 'explicit':
            C = FinCat(doc['objects'], doc['morphisms'], doc['identities'], doc['composition'],
                       name=doc['name'])
        elif kind == 'preorder':
            C = from_preorder(PreorderPresentation(doc['elements'], doc['leq']), name=doc['name'])
        elif kind == 'monoid':
            C = from_monoid(self.monoid(doc))
        elif kind == 'graph':
            G = GraphPresentation(doc['nodes'], [(e['name'], e['src'], e['dst'])
                                                 for e in doc['edges']], doc['max_path_len'])
            C = from_graph(G, name=doc['name'])
        elif kind == 'universe':
            C = universe_category(doc['family'], doc['max_size'])
        else:
            raise DocumentError(f'a {kind} document is not a category', 'kind')
        self._categories[key] = C
        return C

    def monoid(self, doc: Dict) -> FiniteMonoidPresentation:
        if doc['kind'] != 'monoid':
            raise DocumentError(f'a {doc["kind"]} document is not a monoid', 'kind')
        return FiniteMonoidPresentation(doc['elements'], doc['unit'], doc['table'],
                                        name=doc['name'])

    def functor(self, doc: Dict) -> FunctorData:
        if doc['kind'] != 'functor':
            raise DocumentError(f'a {doc["kind"]} document is not a functor', 'kind')
        key = _key(doc)
        if key not in self._functors:
            self._functors[key] = FunctorData(self.category(doc['source']),
                                              self.category(doc['target']), doc['obj_map'],
                                              doc['mor_map'], name=doc['name'])
        return self._functors[key]

    def nattrans(self, doc: Dict) -> NatTransData:
        if doc['kind'] != 'nattrans':
            raise DocumentError(f'a {doc["kind"]} document is not a transformation', 'kind')
        return NatTransData(self.functor(doc['source_functor']),
                            self.functor(doc['target_functor']), doc['components'],
                            name=doc['name'])

    def adjunction(self, doc: Dict):
        """
        An AdjunctionUnitCounit when the document gives unit and counit, or an
        AdjunctionHomBijection when it gives alpha tables.
        """
        if doc['kind'] != 'adjunction':
            raise DocumentError(f'a {doc["kind"]} document is not an adjunction', 'kind')
        F, G = self.functor(doc['left']), self.functor(doc['right'])
        if 'alpha' in doc:
            tables = {(entry['object'], entry['target']): entry['table'] for entry in doc['alpha']}
            return AdjunctionHomBijection.from_tables(F, G, tables, name=doc['name'])
        C, D = F.source, G.source
        unit = NatTransData(identity_functor(C), compose_functors(F, G), doc['unit'], name='eta')
        counit = NatTransData(compose_functors(G, F), identity_functor(D), doc['counit'],
                              name='epsilon')
        return AdjunctionUnitCounit(F, G, unit, counit, name=doc['name'])


def build_category(doc: Dict):
    return DocumentBuilder().category(doc)


def build_functor(doc: Dict) -> FunctorData:
    return DocumentBuilder().functor(doc)

from CategoryTools.category_data import bundled_path
from CategoryTools.categories import check_laws, interval_category
from CategoryTools.cli.documents import (DocumentBuilder, build_category, build_functor,
                                         parse_document, serialize)
from CategoryTools.util.errors import DocumentError, InfiniteCategoryError, PresentationError

from pathlib import Path
import json

import pytest

MODULE_DIR = Path(__file__).absolute().parent
DOC_DIR = MODULE_DIR / '..' / 'test_files' / 'documents'


def test_explicit_document():
    doc = parse_document(str(DOC_DIR / 'interval.json'))
    assert doc['name'] == 'interval'
    assert doc['morphisms'][2] == {'name': 'f', 'dom': 'x', 'cod': 'y'}
    C = build_category(doc)
    assert C.objects == interval_category().objects
    assert C.hom('x', 'y') == ('f', )
    assert check_laws(C).passed


def test_list_rows_are_normalized():
    doc = parse_document(str(DOC_DIR / 'broken.json'))
    assert doc['morphisms'][0] == {'name': 'e', 'dom': '*', 'cod': '*'}
    assert {'first': 'b', 'then': 'b', 'result': 'a'} in doc['composition']
    # normalizing twice changes nothing
    assert parse_document(serialize(doc)) == doc


def test_inline_text_and_dict():
    text = json.dumps({'kind': 'preorder', 'elements': [0, 1], 'leq': [[0, 1]]})
    doc = parse_document(text)
    assert doc == {'kind': 'preorder', 'name': 'P', 'elements': ['0', '1'], 'leq': [['0', '1']]}
    assert parse_document(json.loads(text)) == doc
    assert build_category(doc).hom('0', '1') == ('0<=1', )


def test_bundled_documents():
    for name in ('chain3', 'diamond', 'finord3', 'finset2', 'interval', 'square', 'z3'):
        path = bundled_path(name)
        assert path is not None
        assert check_laws(build_category(parse_document(path))).passed
    assert bundled_path('finset2.json') == bundled_path('finset2')
    assert bundled_path('nothing') is None

    with pytest.raises(InfiniteCategoryError):
        build_category(parse_document(bundled_path('xy_cycle')))


def test_catalog_monoid():
    doc = parse_document({'kind': 'monoid', 'catalog': 'and'})
    assert doc['name'] == 'and'
    assert doc['unit'] == 1
    assert DocumentBuilder().monoid(doc).multiply(0, 1) == 0
    with pytest.raises(DocumentError, match='catalog'):
        parse_document({'kind': 'monoid', 'catalog': 'free'})


def test_references_are_inlined():
    doc = parse_document(str(DOC_DIR / 'constant_to_identity.json'))
    source = doc['source_functor']
    assert source['kind'] == 'functor'
    assert source['source']['name'] == 'interval'

    builder = DocumentBuilder()
    alpha = builder.nattrans(doc)
    # both functors share the one interval category
    assert alpha.source_functor.source is alpha.target_functor.source
    F = build_functor(parse_document(str(DOC_DIR / 'shift.json')))
    assert F.on_morphism('1') == '2'


@pytest.mark.parametrize('doc, path', [
    ({'objects': []}, 'kind'),
    ({'kind': 'category'}, 'kind'),
    ({'kind': 'preorder', 'elements': 'ab', 'leq': []}, 'elements'),
    ({'kind': 'preorder', 'elements': ['a'], 'leq': [['a']]}, 'leq[0]'),
    ({'kind': 'graph', 'nodes': ['x'], 'edges': [['f', 'x']]}, 'edges[0]'),
    ({'kind': 'graph', 'nodes': ['x'], 'edges': [], 'max_path_len': True}, 'max_path_len'),
    ({'kind': 'universe', 'family': 'grp', 'max_size': 2}, 'family'),
    ({'kind': 'explicit', 'objects': [None], 'morphisms': [], 'identities': {},
      'composition': []}, 'objects[0]'),
    ({'kind': 'functor', 'source': 3, 'target': {}, 'obj_map': {}, 'mor_map': {}}, 'source'),
])
def test_schema_violations(doc, path):
    with pytest.raises(DocumentError) as excinfo:
        parse_document(doc)
    assert excinfo.value.path == path
    assert str(excinfo.value).startswith(f'{path}: ')


def test_missing_field_path():
    with pytest.raises(DocumentError) as excinfo:
        parse_document(str(DOC_DIR / 'missing_cod.json'))
    assert str(excinfo.value) == 'morphisms[2].cod: missing field'


def test_invalid_json():
    with pytest.raises(DocumentError, match='invalid JSON'):
        parse_document(str(DOC_DIR / 'not_json.json'))
    with pytest.raises(DocumentError, match='invalid JSON'):
        parse_document('{"kind": ')


def test_reference_kinds():
    doc = {
        'kind': 'nattrans',
        'source_functor': {'kind': 'preorder', 'elements': [], 'leq': []},
        'target_functor': {},
        'components': {}
    }
    with pytest.raises(DocumentError) as excinfo:
        parse_document(doc)
    assert excinfo.value.path == 'source_functor'


def test_builder_errors():
    builder = DocumentBuilder()
    functor = parse_document(str(DOC_DIR / 'shift.json'))
    with pytest.raises(DocumentError):
        builder.category(functor)
    with pytest.raises(DocumentError):
        builder.monoid(parse_document(str(DOC_DIR / 'interval.json')))
    with pytest.raises(PresentationError):
        builder.category(parse_document({
            'kind': 'monoid',
            'elements': [0, 1],
            'unit': 1,
            'table': [[0, 1], [1, 0]]
        }))

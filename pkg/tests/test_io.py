import json
import warnings

import pytest

from latcut import generators as gen
from latcut.errors import CycleError, DocumentError
from latcut.io import NormalizationWarning, emit_document, emit_dot, parse_document, read_document


def test_parse_chain(chain3):
    assert parse_document('{"n":3,"covers":[[0,1],[1,2]]}') == chain3


def test_parse_cycle():
    with pytest.raises(CycleError, match="document"):
        parse_document('{"n":2,"covers":[[0,1],[1,0]]}')


def test_parse_redundant_warns(chain3):
    with pytest.warns(NormalizationWarning):
        P = parse_document('{"n":3,"covers":[[0,1],[1,2],[0,2]]}')
    assert P == chain3
    with pytest.raises(ValueError):
        parse_document('{"n":3,"covers":[[0,1],[1,2],[0,2]]}', strict=True)


@pytest.mark.parametrize(
    "text, where",
    [
        ('{"n":3,"covers":[[0,1]', "line 1"),
        ("[1,2]", "top level"),
        ('{"n":"3","covers":[]}', "field 'n'"),
        ('{"n":3,"covers":[[0,1,2]]}', "field 'covers'[0]"),
        ('{"n":3,"covers":[[0,1],[1,5]]}', "field 'covers'[1]"),
        ('{"n":2,"covers":[],"labels":[1,2]}', "field 'labels'"),
        ('{"n":2,"covers":[],"meta":{"a":1}}', "field 'meta'"),
        ('{"n":2,"covers":[],"colour":1}', "top level"),
    ],
)
def test_document_errors_carry_position(text, where):
    with pytest.raises(DocumentError) as info:
        parse_document(text)
    assert info.value.position.startswith(where)


def test_emit_canonical():
    text = emit_document(gen.chain(3))
    assert text == '{"n": 3, "covers": [[0, 1], [1, 2]]}\n'
    doc = read_document(emit_document(gen.diamond(), {"b": "2", "a": "1"}))
    assert doc.meta == {"a": "1", "b": "2"}
    assert list(json.loads(emit_document(gen.diamond(), {"b": "2"}))) == ["n", "covers", "labels", "meta"]


def test_round_trip_canonical():
    messy = '{"covers": [[1,2],[0,2],[0,1]], "n": 3}'
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        P = parse_document(messy)
    assert emit_document(parse_document(emit_document(P))) == emit_document(P)


def test_round_trip_corpus():
    import corpus

    for name, P in corpus.full_corpus().items():
        assert parse_document(emit_document(P)) == P, name


def test_dot_b2(b2):
    text = emit_dot(b2)
    lines = text.splitlines()
    node_lines = [ln for ln in lines if ln.strip()[:1].isdigit() and "[" in ln]
    edge_lines = [ln for ln in lines if "->" in ln]
    assert len(node_lines) == 4 and len(edge_lines) == 4
    assert "{ rank=same; 1; 2; }" in text
    assert emit_dot(b2) == text


def test_dot_highlight(n5):
    text = emit_dot(n5, highlight=[{1, 3}])
    first = '#e41a1c'
    for x in (1, 3):
        assert f'{x} [label="{n5.label(x)}" style=filled fillcolor="{first}"];' in text
    assert "fillcolor" not in [ln for ln in text.splitlines() if ln.strip().startswith("0 [")][0]


def test_dot_quotes_labels():
    from latcut.poset import build_poset

    P = build_poset(2, [(0, 1)], ['say "hi"', "b\\c"])
    assert 'label="say \\"hi\\""' in emit_dot(P)

"""Round trip tests for the JSON document layer."""

import json

import pytest

from cyclic_weights.chain import build_chain, verify_seed_identities
from cyclic_weights.cyclic_module import (
    build_cyclic_module,
    successor_weights,
    validate_cyclic_module,
)
from cyclic_weights.diagram import (
    classify_isomorphic,
    field_element,
    make_diagram,
    make_field,
)
from cyclic_weights.errors import DomainError
from cyclic_weights.explorer import find_cycles
from cyclic_weights.serialize import (
    SCHEMA,
    chain_document,
    classify_document,
    cycles_document,
    example_document,
    module_document,
    parse_document,
    seed_report_document,
    successors_document,
)
from cyclic_weights.symbolic import example_lines
from cyclic_weights.weights import make_weight


def round_trip(doc):
    # through real JSON text, so tuple/list conversions are exercised
    return parse_document(json.loads(json.dumps(doc)))


def test_chain_round_trip(p5f2):
    chain = build_chain(p5f2, (1, 1), rotation=1)
    doc = chain_document(chain)
    assert doc["schema"] == SCHEMA
    assert doc["command"] == "chain"
    assert round_trip(doc) == chain


def test_seed_report_round_trip(p5f2):
    report = verify_seed_identities(p5f2)
    doc = seed_report_document(report)
    assert doc["passed"] is True
    assert round_trip(doc) == report


def test_successors_round_trip(p5f2):
    w = make_weight((0, 2), 10, p5f2)
    found = successor_weights(w)
    got_w, got_found = round_trip(successors_document(w, found))
    assert got_w == w
    assert got_found == found


def test_module_round_trip(p5f2):
    module = build_cyclic_module(build_chain(p5f2, (1, 1)))
    validation = validate_cyclic_module(module)
    got_module, got_validation = round_trip(module_document(module, validation))
    assert got_module == module
    assert got_module.pairs == module.pairs
    assert got_validation == validation


def test_classify_round_trip(p5f2):
    module = build_cyclic_module(build_chain(p5f2, (1, 1)))
    spec = make_field(5, 1)
    left = make_diagram(module, [field_element(spec, (c,)) for c in (2, 3, 4, 2)])
    right = make_diagram(module, [field_element(spec, (c,)) for c in (1, 1, 1, 3)])
    result = classify_isomorphic(left, right)
    assert result.isomorphic
    assert round_trip(classify_document(left, right, result)) == result


def test_classify_round_trip_without_witness(p5f2):
    module = build_cyclic_module(build_chain(p5f2, (1, 1)))
    spec = make_field(5, 1)
    left = make_diagram(module, [field_element(spec, (c,)) for c in (2, 3, 4, 2)])
    right = make_diagram(module, [field_element(spec, (c,)) for c in (1, 1, 1, 1)])
    result = classify_isomorphic(left, right)
    assert not result.isomorphic
    assert round_trip(classify_document(left, right, result)) == result


def test_cycles_round_trip(p5f2):
    result = find_cycles(make_weight((1, 1), 0, p5f2), 4)
    assert round_trip(cycles_document(result)) == result


def test_example_round_trip():
    lines = example_lines(3)
    assert round_trip(example_document(3, lines)) == lines


def test_parse_document_rejects_unknown():
    with pytest.raises(DomainError):
        parse_document({"schema": "other/9", "command": "chain"})
    with pytest.raises(DomainError):
        parse_document({"schema": SCHEMA, "command": "nope"})

import json
from pathlib import Path

import pytest

import snack
from restricted_choice import io
from restricted_choice.errors import FormatError, UnknownAlternative
from restricted_choice.relations import relation_from_chain
from restricted_choice.synthesis import synthesize

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def test_structure_round_trip():
    st = snack.structure()
    doc = io.structure_to_json(st)
    assert doc["format_version"] == 1
    assert io.structure_from_json(json.loads(json.dumps(doc))) == st


def test_table_and_order_round_trip():
    st, table = snack.structure(), snack.table()
    assert io.table_from_json(io.table_to_json(table), st) == table
    order, fb = io.order_from_json(io.order_to_json(snack.order(), snack.U, snack.K), snack.U)
    assert order == snack.order() and fb == snack.K
    order, fb = io.order_from_json({"carrier_chain": [["pretzels"]]}, snack.U)
    assert fb is None


def test_relation_serialisation_is_sorted():
    rel = relation_from_chain([1, 2, 4])
    doc = io.relation_to_json(rel, snack.U)
    assert doc["pairs"] == sorted(doc["pairs"])
    assert io.relation_from_json(doc, snack.U) == rel


def test_trace_has_every_stage():
    trace = synthesize(snack.table())
    doc = io.trace_to_json(trace, snack.U)
    assert set(doc) == {"format_version", "image", "encoded", "extended", "linear_carrier", "final"}


def test_version_and_shape_checks():
    doc = io.structure_to_json(snack.structure())
    with pytest.raises(FormatError):
        io.structure_from_json({**doc, "format_version": 2})
    with pytest.raises(FormatError):
        io.structure_from_json({k: v for k, v in doc.items() if k != "domain"})
    with pytest.raises(FormatError):
        io.structure_from_json([])
    with pytest.raises(FormatError):
        io.structure_from_json({**doc, "domain": [["nachos", 3]]})
    with pytest.raises(UnknownAlternative):
        io.structure_from_json({**doc, "domain": [["crisps"]]})


def test_duplicate_table_inputs():
    doc = io.table_to_json(snack.table())
    doc["map"].append(doc["map"][0])
    with pytest.raises(FormatError):
        io.table_from_json(doc, snack.structure())


def test_operator_fills_missing_chains():
    op = io.operator_from_json(json.loads((SAMPLES / "snack_operator.json").read_text()))
    assert op.family[snack.K] == snack.order()
    again = io.operator_from_json(io.operator_to_json(op))
    assert again.tabulate() == op.tabulate()


def test_semantics_documents():
    sem = io.semantics_from_json(json.loads((SAMPLES / "snack_semantics.json").read_text()))
    assert io.semantics_from_json(io.semantics_to_json(sem)) == sem
    assert io.semantics_from_json({"realizable": "stable", "fallback": []}).realizable == "stable"
    with pytest.raises(FormatError):
        io.semantics_from_json({"realizable": "grounded", "fallback": []})
    with pytest.raises(FormatError):
        io.semantics_from_json({"realizable": 3, "fallback": []})


def test_load_json_reports_bad_files(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{")
    with pytest.raises(FormatError):
        io.load_json(p)


def test_samples_match_the_fixture():
    st = io.structure_from_json(json.loads((SAMPLES / "snack_structure.json").read_text()))
    assert st == snack.structure()
    table = io.table_from_json(json.loads((SAMPLES / "snack_table.json").read_text()), st)
    assert table == snack.table()
    assert (SAMPLES / "snack.apx").read_text() == snack.FIGURE_APX

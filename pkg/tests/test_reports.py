import json

import pytest

from principal_reps.reports import SCHEMA_VERSION, SCHEMAS, emit_report, render, schema_text


def test_render_is_canonical():
    a = render("theta", {"b": 1, "a": [1, 2]})
    b = render("theta", {"a": [1, 2], "b": 1})
    assert a == b and a.endswith("\n")
    doc = json.loads(a)
    assert doc["schemaVersion"] == SCHEMA_VERSION and doc["kind"] == "theta"
    assert list(doc) == sorted(doc)


def test_render_keeps_unicode():
    assert "∅" in render("sets", {"set": "∅"})


def test_dot_passthrough():
    assert render("dot", "digraph {}") == "digraph {}\n"
    assert render("dot", "digraph {}\n") == "digraph {}\n"


def test_emit_to_stdout_and_file(capsys, tmp_path):
    text = emit_report("weyl", {"order": 2})
    assert capsys.readouterr().out == text
    path = tmp_path / "r.json"
    assert emit_report("weyl", {"order": 2}, path) == text
    assert path.read_bytes() == text.encode("utf-8")


def test_io_errors_propagate(tmp_path):
    with pytest.raises(OSError):
        emit_report("weyl", {"order": 2}, tmp_path / "missing" / "r.json")


@pytest.mark.parametrize("kind", sorted(SCHEMAS))
def test_schemas(kind):
    schema = json.loads(schema_text(kind))
    assert schema["title"] == kind
    for alt in schema.get("oneOf", [schema]):
        if alt.get("type") != "object":
            continue
        assert set(alt["required"]) <= set(alt["properties"])
        assert {"schemaVersion", "kind"} <= set(alt["required"])
        assert alt["properties"]["schemaVersion"] == {"const": SCHEMA_VERSION}


def test_optional_witness():
    tits = SCHEMAS["quiver"]["oneOf"][1]
    assert "witness" in tits["properties"] and "witness" not in tits["required"]

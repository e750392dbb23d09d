import io
import json
import os

import pytest

from app.cli import run

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "docs", "output-schema.json")


@pytest.fixture(scope="module")
def definitions():
    with open(SCHEMA_PATH) as f:
        return json.load(f)["$defs"]


@pytest.mark.parametrize(
    "name, argv",
    [
        ("CharacterTable", ["char-table", "--s", "3"]),
        ("InvariantSeries", ["a-series", "--s", "2", "--max-degree", "6"]),
        ("BSeries", ["b-series", "--lambda", "1,1", "--max-degree", "6", "--hodge"]),
        ("SpDim", ["sp-dim", "--g", "2", "--lambda", "2,1"]),
        ("SchurWeylReport", ["schur-weyl-check", "--g", "3", "--s", "2"]),
        ("StableSeries", ["stable", "--lambda", "1", "--g", "8", "--max-degree", "6"]),
        ("CSeries", ["c-series", "--max-degree", "4", "--weight-cap", "2"]),
        ("AgreementReport", ["c-agreement", "--s", "2", "--max-degree", "6"]),
        ("AbelJacobiReport", ["abel-jacobi-check", "--max-s", "1", "--max-degree", "4"]),
        ("BettiReport", ["macdonald", "--g", "1", "--s", "2"]),
        ("OracleReport", ["oracle-check", "--s", "2", "--max-degree", "4"]),
    ],
)
def test_payload_fields_follow_the_schema(definitions, name, argv):
    out = io.StringIO()
    assert run(argv, stdout=out) == 0
    payload = json.loads(out.getvalue())
    definition = definitions[name]
    assert set(definition["required"]) <= set(payload)
    assert set(payload) <= set(definition["properties"])
    for key, prop in definition["properties"].items():
        if "enum" in prop and key in payload:
            assert payload[key] in prop["enum"]

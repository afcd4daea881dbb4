from __future__ import annotations

import pytest

from intercat.description import (
    SchemaViolation,
    export_description,
    export_instance,
    load_description,
    presentation,
    read_json,
    same_presentation,
    validate_description,
    validate_report,
    write_json,
)
from intercat.instances import build_duoidal, build_span_cospan, load_table_instance
from intercat.instances.table import build_terminal, build_z2
from intercat.laws import check_all
from intercat.model import BoundaryError
from intercat.morphisms import CellData, Kind, identity_morphism
from tests.fixtures import arrow_description


@pytest.mark.parametrize(
    "build",
    [lambda: build_duoidal(1), lambda: build_duoidal(2), lambda: build_span_cospan(1), build_terminal, build_z2],
    ids=["duoidal:1", "duoidal:2", "span-cospan:1", "terminal", "z2"],
)
def test_export_then_load_keeps_the_presentation(build):
    I = build()
    doc = export_description(I)
    validate_description(doc)
    J = load_table_instance(doc)
    assert same_presentation(I, J)
    assert export_instance(J) == doc["instances"][0]


def test_exported_instance_keeps_its_verdict(duoidal1):
    J = load_table_instance(export_description(duoidal1))
    assert check_all(J, 500).verdict == check_all(duoidal1, 500).verdict == "pass"


def test_hand_written_description_round_trips():
    doc = arrow_description()
    I = load_table_instance(doc)
    again = load_table_instance(export_description(I))
    assert presentation(again) == presentation(I)


def test_file_round_trip(tmp_path, z2):
    path = tmp_path / "z2.json"
    write_json(export_description(z2), path)
    assert load_table_instance(read_json(path)).name == "z2"


def test_wrong_schema_tag_is_rejected(z2):
    doc = export_description(z2)
    doc["schema"] = "something/v9"
    with pytest.raises(SchemaViolation) as e:
        validate_description(doc)
    assert e.value.path == "schema"


def test_morphisms_and_cells_round_trip(z2):
    F = identity_morphism(z2, Kind.LAX_LAX)
    G = identity_morphism(z2, Kind.COLAX_LAX)
    p = CellData("unit", F, F, G, G, lambda x: z2.t_id(x))
    doc = export_description(z2, morphisms=[F, G], cells=[p])
    loaded = load_description(doc)
    assert set(loaded.morphisms) == {F.name, G.name}
    assert loaded.cells["unit"].shape == "LL/CL"
    I = loaded.instances["z2"]
    again = export_description(I, morphisms=loaded.morphisms.values(), cells=loaded.cells.values())
    assert again == doc


def test_duplicate_morphism_names_are_rejected(z2):
    F = identity_morphism(z2)
    doc = export_description(z2, morphisms=[F, F])
    with pytest.raises(BoundaryError) as e:
        load_description(doc)
    assert e.value.path == "morphisms[1].name"


def test_morphism_to_unknown_instance(z2):
    doc = export_description(z2, morphisms=[identity_morphism(z2)])
    doc["morphisms"][0]["target"] = "elsewhere"
    with pytest.raises(BoundaryError) as e:
        load_description(doc)
    assert "elsewhere" in str(e.value)


def test_report_schema_rejects_a_bad_verdict():
    with pytest.raises(SchemaViolation):
        validate_report({"schema": "intercat-report/v1", "verdict": "maybe", "instances": []})

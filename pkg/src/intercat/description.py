"""JSON descriptions of finite intercategories, morphisms and cells.

:func:`export_instance` turns any instance into a table description: the
enumerated cells, closed under faces, and every operation on them whose
result is again one of those cells.  Loading that description gives a
:class:`~intercat.instances.table.TableInstance` whose own export is the
same document, so a presentation survives the round trip unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .model import (
    BoundaryError,
    CompositionError,
    ConfigurationError,
    Intercategory,
    Sort,
    UndefinedOperation,
    face,
    sort_of,
)

SCHEMA_VERSION = "intercat/v1"
REPORT_VERSION = "intercat-report/v1"

SORT_ORDER = (
    Sort.OBJ, Sort.TRANS, Sort.HOR, Sort.VERT, Sort.HCELL, Sort.VCELL, Sort.BASIC, Sort.CUBE,
)


class SchemaViolation(BoundaryError):
    """A document does not match its JSON schema; ``path`` locates the offending value."""


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("intercat.schema").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


def _path(parts) -> str:
    out = ""
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or "$"


def _validate(doc: Any, name: str) -> None:
    validator = jsonschema.Draft202012Validator(load_schema(name))
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise SchemaViolation(e.message, _path(e.absolute_path))


def validate_description(doc: Any) -> None:
    _validate(doc, "description")


def validate_report(doc: Any) -> None:
    _validate(doc, "report")


# -- export -----------------------------------------------------------------------------------


def _collect(I: Intercategory) -> dict[Sort, list]:
    """Enumerated cells of every sort, closed under taking faces."""
    seen: dict[Sort, dict] = {s: {} for s in SORT_ORDER}

    def add(x):
        s = sort_of(x)
        if x in seen[s]:
            return
        for d in s.dirs:
            for end in (0, 1):
                add(face(x, d, end))
        seen[s][x] = None

    for s in SORT_ORDER:
        for x in I.cells(s):
            add(x)
    return {s: list(xs) for s, xs in seen.items()}


def _after(index: dict, s: Sort, d: str, x) -> list:
    return index.get((s, d, face(x, d, 1)), [])


def _argument_tuples(cells: dict[Sort, list]):
    """Yield ``(op, args)`` for every composable argument tuple, in a fixed order."""
    index: dict = {}
    for s, xs in cells.items():
        for d in s.dirs:
            for x in xs:
                index.setdefault((s, d, face(x, d, 0)), []).append(x)
    for op, d in (("t_comp", "t"), ("h_comp", "h"), ("v_comp", "v")):
        for s in SORT_ORDER:
            if d in s.dirs:
                for x in cells[s]:
                    for y in _after(index, s, d, x):
                        yield op, (x, y)
    for op, d in (("t_id", "t"), ("hid", "h"), ("vid", "v")):
        for s in SORT_ORDER[:-1]:
            if d not in s.dirs:
                for x in cells[s]:
                    yield op, (x,)
    for d, arrows in (("h", Sort.HOR), ("v", Sort.VERT)):
        for s in (arrows, Sort.BASIC):
            for inv in ("", "_inv"):
                for x in cells[s]:
                    for y in _after(index, s, d, x):
                        for z in _after(index, s, d, y):
                            yield f"kappa_{d}{inv}", (x, y, z)
            for base in ("lambda", "rho"):
                for inv in ("", "_inv"):
                    for x in cells[s]:
                        yield f"{base}_{d}{inv}", (x,)
    B = Sort.BASIC
    for a in cells[B]:
        for b in _after(index, B, "h", a):
            for c in _after(index, B, "v", a):
                for e in _after(index, B, "h", c):
                    if e.top == b.bottom:
                        yield "chi", (a, b, c, e)
    for v in cells[Sort.VERT]:
        for w in _after(index, Sort.VERT, "v", v):
            yield "mu", (v, w)
    for h in cells[Sort.HOR]:
        for k in _after(index, Sort.HOR, "h", h):
            yield "delta", (h, k)
    for a in cells[Sort.OBJ]:
        yield "tau", (a,)


def _call(I: Intercategory, op: str, args):
    if op in ("t_comp", "h_comp", "v_comp"):
        return I.compose(op[0], *args)
    if op in ("t_id", "hid", "vid"):
        return I.ident({"t_id": "t", "hid": "h", "vid": "v"}[op], *args)
    if op in ("chi", "mu", "delta", "tau"):
        return I.interchanger(op, *args)
    base, d = op.split("_")[0], op.split("_")[1]
    return I.structural(base + ("_inv" if op.endswith("_inv") else ""), d, *args)


def export_instance(I: Intercategory) -> dict:
    """A table description of ``I`` restricted to its enumerated cells."""
    cells = _collect(I)
    ids: dict = {}
    owner: dict[str, Any] = {}
    out_cells: dict[str, list] = {}
    for s in SORT_ORDER:
        rows = []
        for x in cells[s]:
            ident = I.cell_id(x)
            if owner.get(ident, x) != x:
                raise ConfigurationError(f"{I.name}: id {ident!r} names two different cells")
            owner[ident] = x
            ids[x] = ident
            row = {"id": ident}
            for d in s.dirs:
                for fld in s.face_fields(d):
                    row[fld] = ids[getattr(x, fld)]
            label = I.cell_label(x)
            if label != ident:
                row["label"] = label
            rows.append(row)
        if rows:
            out_cells[s.label] = rows
    ops: dict[str, list] = {}
    for op, args in _argument_tuples(cells):
        try:
            result = _call(I, op, args)
        except (UndefinedOperation, CompositionError):
            continue
        if result in ids:
            ops.setdefault(op, []).append([ids[a] for a in args] + [ids[result]])
    return {
        "name": I.name,
        "chirality": I.chirality.value,
        "cells": out_cells,
        "operations": ops,
    }


def export_description(*instances: Intercategory, morphisms=(), cells=()) -> dict:
    doc: dict[str, Any] = {"schema": SCHEMA_VERSION, "instances": [export_instance(I) for I in instances]}
    if morphisms:
        from .morphisms import export_morphism

        doc["morphisms"] = [export_morphism(F) for F in morphisms]
    if cells:
        from .morphisms import export_cell

        doc["cells"] = [export_cell(p) for p in cells]
    return doc


def presentation(I: Intercategory) -> dict:
    """Cells and operation tables of ``I``, without its name."""
    doc = export_instance(I)
    del doc["name"]
    return doc


def same_presentation(I: Intercategory, J: Intercategory) -> bool:
    return presentation(I) == presentation(J)


# -- load -------------------------------------------------------------------------------------


@dataclass
class Loaded:
    instances: dict[str, Any] = field(default_factory=dict)
    morphisms: dict[str, Any] = field(default_factory=dict)
    cells: dict[str, Any] = field(default_factory=dict)


def load_description(doc: dict, builtins: dict[str, Intercategory] | None = None) -> Loaded:
    """Validate and build everything in ``doc``.

    Morphisms may refer to instances of the document or to ``builtins``
    by name.
    """
    from .instances.table import build_table_instance

    validate_description(doc)
    out = Loaded()
    for i, entry in enumerate(doc.get("instances", [])):
        name = entry["name"]
        if name in out.instances:
            raise BoundaryError(f"duplicate instance name {name!r}", f"instances[{i}].name")
        out.instances[name] = build_table_instance(entry, f"instances[{i}]")
    known = dict(builtins or {})
    known.update(out.instances)
    if doc.get("morphisms") or doc.get("cells"):
        from .morphisms import build_cell, build_morphism

        for i, entry in enumerate(doc.get("morphisms", [])):
            if entry["name"] in out.morphisms:
                raise BoundaryError(f"duplicate morphism name {entry['name']!r}", f"morphisms[{i}].name")
            out.morphisms[entry["name"]] = build_morphism(entry, known, f"morphisms[{i}]")
        for i, entry in enumerate(doc.get("cells", [])):
            if entry["name"] in out.cells:
                raise BoundaryError(f"duplicate cell name {entry['name']!r}", f"cells[{i}].name")
            out.cells[entry["name"]] = build_cell(entry, out.morphisms, f"cells[{i}]")
    return out


def read_json(path: str | Path) -> Any:
    with open(path) as fh:
        return json.load(fh)


def write_json(doc: Any, path: str | Path | None = None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


__all__ = [
    "Loaded",
    "SCHEMA_VERSION",
    "REPORT_VERSION",
    "SchemaViolation",
    "export_description",
    "export_instance",
    "load_description",
    "load_schema",
    "presentation",
    "read_json",
    "same_presentation",
    "validate_description",
    "validate_report",
    "write_json",
]

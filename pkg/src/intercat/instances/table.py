"""Table-backed intercategories loaded from JSON descriptions.

A description lists the cells of each sort by id, with faces given by id,
and the operations as lists of rows ``[arg_id, ..., result_id]``.  Tables
may be partial: asking for a missing entry raises
:class:`~intercat.model.UndefinedOperation`, and the law checker skips
tuples that touch one.
"""

from __future__ import annotations

from typing import Any

from ..model import (
    BoundaryError,
    Cell,
    Chirality,
    ConfigurationError,
    Intercategory,
    Sort,
    UndefinedOperation,
    boundary_problems,
    face,
    make_cell,
    sort_of,
)

#: operation name -> arity
OPERATIONS: dict[str, int] = {
    "t_comp": 2, "h_comp": 2, "v_comp": 2,
    "t_id": 1, "hid": 1, "vid": 1,
    "kappa_h": 3, "kappa_h_inv": 3, "lambda_h": 1, "lambda_h_inv": 1, "rho_h": 1, "rho_h_inv": 1,
    "kappa_v": 3, "kappa_v_inv": 3, "lambda_v": 1, "lambda_v_inv": 1, "rho_v": 1, "rho_v_inv": 1,
    "chi": 4, "mu": 2, "delta": 2, "tau": 1,
}

_COMPOSE = {"t": "t_comp", "h": "h_comp", "v": "v_comp"}
_IDENT = {"t": "t_id", "h": "hid", "v": "vid"}

SORT_ORDER = (
    Sort.OBJ, Sort.TRANS, Sort.HOR, Sort.VERT, Sort.HCELL, Sort.VCELL, Sort.BASIC, Sort.CUBE,
)


def _typing(op: str, sorts: tuple[Sort, ...]) -> Sort | None:
    """Result sort of ``op`` on arguments of ``sorts``, or None if ill-typed."""
    if op in ("t_comp", "h_comp", "v_comp"):
        d = op[0]
        if len(set(sorts)) == 1 and d in sorts[0].dirs:
            return sorts[0]
        return None
    if op in ("t_id", "hid", "vid"):
        d = {"t_id": "t", "hid": "h", "vid": "v"}[op]
        return sorts[0].with_(d) if d not in sorts[0].dirs else None
    if op.startswith(("kappa", "lambda", "rho")):
        d = op.removesuffix("_inv")[-1]
        ok = (Sort.HOR, Sort.BASIC) if d == "h" else (Sort.VERT, Sort.BASIC)
        if len(set(sorts)) == 1 and sorts[0] in ok:
            return sorts[0].with_("t")
        return None
    want = {"chi": Sort.BASIC, "mu": Sort.VERT, "delta": Sort.HOR, "tau": Sort.OBJ}[op]
    return Sort.CUBE if all(s is want for s in sorts) else None


def _composable(op: str, args: tuple[Cell, ...]) -> bool:
    if op in ("t_comp", "h_comp", "v_comp"):
        d = op[0]
        return face(args[0], d, 1) == face(args[1], d, 0)
    if op.startswith("kappa"):
        d = op.removesuffix("_inv")[-1]
        return face(args[0], d, 1) == face(args[1], d, 0) and face(args[1], d, 1) == face(args[2], d, 0)
    if op == "chi":
        a, b, c, e = args
        return (
            a.right == b.left and c.right == e.left and a.bottom == c.top and b.bottom == e.top
        )
    if op == "mu":
        return args[0].tgt == args[1].src
    if op == "delta":
        return args[0].tgt == args[1].src
    return True


class TableInstance(Intercategory):
    """An intercategory given by finite lists of cells and operation tables."""

    def __init__(
        self,
        name: str,
        cells: dict[Sort, list[Cell]],
        tables: dict[str, dict[tuple[str, ...], Cell]],
        chirality: Chirality = Chirality.RIGHT,
        labels: dict[str, str] | None = None,
    ):
        self.name = name
        self.chirality = chirality
        self._cells = {s: list(cells.get(s, [])) for s in SORT_ORDER}
        self._by_id = {x.data: x for xs in self._cells.values() for x in xs}
        self._tables = {op: dict(tables.get(op, {})) for op in OPERATIONS}
        self.labels = dict(labels or {})

    # enumeration and identity
    def cells(self, sort: Sort, **fixed):
        return [x for x in self._cells[sort] if all(getattr(x, k) == v for k, v in fixed.items())]

    def contains(self, x) -> bool:
        try:
            return self._by_id.get(x.data) == x
        except TypeError:
            return False

    def cell_id(self, x) -> str:
        return str(x.data)

    def cell_label(self, x) -> str:
        return self.labels.get(x.data, str(x.data))

    def by_id(self, ident: str) -> Cell:
        return self._by_id[ident]

    def table(self, op: str) -> dict:
        return self._tables[op]

    def _lookup(self, op: str, *args: Cell) -> Cell:
        key = tuple(a.data for a in args)
        try:
            return self._tables[op][key]
        except KeyError:
            raise UndefinedOperation(f"{self.name}: no {op} entry for {list(key)}") from None

    # operations
    def _compose(self, d, x, y):
        return self._lookup(_COMPOSE[d], x, y)

    def _ident(self, d, x):
        return self._lookup(_IDENT[d], x)

    def _kappa(self, d, x, y, z):
        return self._lookup(f"kappa_{d}", x, y, z)

    def _kappa_inv(self, d, x, y, z):
        return self._lookup(f"kappa_{d}_inv", x, y, z)

    def _lambda(self, d, x):
        return self._lookup(f"lambda_{d}", x)

    def _lambda_inv(self, d, x):
        return self._lookup(f"lambda_{d}_inv", x)

    def _rho(self, d, x):
        return self._lookup(f"rho_{d}", x)

    def _rho_inv(self, d, x):
        return self._lookup(f"rho_{d}_inv", x)

    def _chi(self, a, b, c, e):
        return self._lookup("chi", a, b, c, e)

    def _mu(self, v, w):
        return self._lookup("mu", v, w)

    def _delta(self, h, k):
        return self._lookup("delta", h, k)

    def _tau(self, a):
        return self._lookup("tau", a)


def build_table_instance(doc: dict[str, Any], path: str = "instance") -> TableInstance:
    """Resolve ids and check every cell's boundary; ``doc`` is one instance entry."""
    name = doc.get("name", "table")
    chirality = Chirality(doc.get("chirality", "right"))
    raw = doc.get("cells", {})
    built: dict[str, Cell] = {}
    cells: dict[Sort, list[Cell]] = {s: [] for s in SORT_ORDER}
    labels: dict[str, str] = {}
    for s in SORT_ORDER:
        for i, entry in enumerate(raw.get(s.label, [])):
            here = f"{path}.cells.{s.label}[{i}]"
            ident = entry["id"]
            if ident in built:
                raise BoundaryError(f"duplicate id {ident!r}", here)
            faces = {}
            for d in s.dirs:
                for end in (0, 1):
                    field = s.face_fields(d)[end]
                    if field not in entry:
                        raise BoundaryError(f"missing face {field!r}", here)
                    ref = entry[field]
                    target = built.get(ref)
                    if target is None:
                        raise BoundaryError(f"dangling id {ref!r}", f"{here}.{field}")
                    if sort_of(target) != s.without(d):
                        raise BoundaryError(
                            f"{field} must be one of {s.without(d).label}, got {ref!r}", f"{here}.{field}"
                        )
                    faces[(d, end)] = target
            x = make_cell(s, faces, ident)
            problems = boundary_problems(x)
            if problems:
                raise BoundaryError("; ".join(problems), here)
            built[ident] = x
            cells[s].append(x)
            if "label" in entry:
                labels[ident] = entry["label"]
    tables: dict[str, dict] = {}
    for op, rows in doc.get("operations", {}).items():
        if op not in OPERATIONS:
            raise ConfigurationError(f"{path}.operations: unknown operation {op!r}")
        arity = OPERATIONS[op]
        tab = tables.setdefault(op, {})
        for j, row in enumerate(rows):
            here = f"{path}.operations.{op}[{j}]"
            if len(row) != arity + 1:
                raise BoundaryError(f"expected {arity} arguments and a result", here)
            resolved = []
            for k, ref in enumerate(row):
                if ref not in built:
                    raise BoundaryError(f"dangling id {ref!r}", f"{here}[{k}]")
                resolved.append(built[ref])
            args, result = tuple(resolved[:-1]), resolved[-1]
            want = _typing(op, tuple(sort_of(a) for a in args))
            if want is None:
                raise BoundaryError(f"{op} is not defined for these argument sorts", here)
            if sort_of(result) != want:
                raise BoundaryError(f"{op} must return one of {want.label}", f"{here}[{arity}]")
            if not _composable(op, args):
                raise BoundaryError(f"{op} arguments are not composable", here)
            key = tuple(row[:-1])
            if key in tab and tab[key] != result:
                raise BoundaryError(f"conflicting entries for {op}{list(key)}", here)
            tab[key] = result
    return TableInstance(name, cells, tables, chirality, labels)


def load_table_instance(description: dict[str, Any], index: int = 0) -> TableInstance:
    """Validate a full description against the schema and build instance ``index``."""
    from ..description import validate_description

    validate_description(description)
    entries = description.get("instances", [])
    if not entries:
        raise ConfigurationError("description contains no instances")
    return build_table_instance(entries[index], f"instances[{index}]")


# -- small hand-made instances ------------------------------------------------------------

_ONE_CELL = {
    Sort.OBJ: ("A", {}),
    Sort.TRANS: ("f", {"src": "A", "tgt": "A"}),
    Sort.HOR: ("h", {"src": "A", "tgt": "A"}),
    Sort.VERT: ("v", {"src": "A", "tgt": "A"}),
    Sort.HCELL: ("phi", {"top": "h", "bottom": "h", "left": "f", "right": "f"}),
    Sort.VCELL: ("psi", {"left": "v", "right": "v", "top": "f", "bottom": "f"}),
    Sort.BASIC: ("alpha", {"top": "h", "bottom": "h", "left": "v", "right": "v"}),
}


def _one_of_each(cubes: list[str]) -> dict:
    cells = {s.label: [{"id": i, **faces}] for s, (i, faces) in _ONE_CELL.items()}
    cube_faces = {"back": "alpha", "front": "alpha", "top": "phi", "bottom": "phi", "left": "psi", "right": "psi"}
    cells["cubes"] = [{"id": c, **cube_faces} for c in cubes]
    return cells


def _constant_ops(cubes: list[str], zero: str, add) -> dict:
    """Operation rows when every lower sort has one cell and cubes form a group under ``add``."""
    ident = {s: i for s, (i, _) in _ONE_CELL.items()}
    ops: dict[str, list] = {op: [] for op in OPERATIONS}
    for s in (Sort.TRANS, Sort.HOR, Sort.VERT, Sort.HCELL, Sort.VCELL, Sort.BASIC):
        for d in s.dirs:
            ops[_COMPOSE[d]].append([ident[s], ident[s], ident[s]])
    for d in "thv":
        for c1 in cubes:
            for c2 in cubes:
                ops[_COMPOSE[d]].append([c1, c2, add(c1, c2)])
    for s in SORT_ORDER[:-1]:
        for d in "thv":
            if d not in s.dirs:
                r = s.with_(d)
                ops[_IDENT[d]].append([ident[s], zero if r is Sort.CUBE else ident[r]])
    for d in "hv":
        arrow, cell = ("h", "phi") if d == "h" else ("v", "psi")
        for op in ("kappa", "lambda", "rho"):
            for inv in ("", "_inv"):
                name = f"{op}_{d}{inv}"
                n = OPERATIONS[name]
                ops[name].append([arrow] * n + [cell])
                ops[name].append(["alpha"] * n + [zero])
    ops["chi"].append(["alpha"] * 4 + [zero])
    ops["mu"].append(["v", "v", zero])
    ops["delta"].append(["h", "h", zero])
    ops["tau"].append(["A", zero])
    return ops


def z2_description(name: str = "z2", overrides: dict[str, str] | None = None) -> dict:
    """One cell of each lower sort and two cubes ``0``, ``1`` added mod 2.

    Every structural cell and interchanger is ``0``.  ``overrides`` maps a
    structural or interchanger operation to the cube it returns instead,
    which gives boundary-correct corruptions aimed at single laws.  A
    structural override also applies to its inverse, since ``1`` is its
    own inverse.
    """
    ops = _constant_ops(["0", "1"], "0", lambda a, b: str((int(a) + int(b)) % 2))
    for op, value in (overrides or {}).items():
        if op not in OPERATIONS or op.endswith("comp") or op in _IDENT.values():
            raise ConfigurationError(f"cannot override {op!r}")
        for name in (op, op + "_inv") if not op.endswith("_inv") and op + "_inv" in OPERATIONS else (op,):
            for row in ops[name]:
                if row[-1] in ("0", "1"):
                    row[-1] = value
    return {
        "schema": "intercat/v1",
        "instances": [{"name": name, "chirality": "right", "cells": _one_of_each(["0", "1"]), "operations": ops}],
    }


def terminal_description() -> dict:
    """The terminal intercategory: exactly one cell of every sort."""
    ops = _constant_ops(["c"], "c", lambda a, b: "c")
    return {
        "schema": "intercat/v1",
        "instances": [{"name": "terminal", "chirality": "right", "cells": _one_of_each(["c"]), "operations": ops}],
    }


def build_terminal() -> TableInstance:
    return load_table_instance(terminal_description())


def build_z2(overrides: dict[str, str] | None = None, name: str = "z2") -> TableInstance:
    return load_table_instance(z2_description(name, overrides))


__all__ = [
    "TableInstance",
    "build_table_instance",
    "load_table_instance",
    "build_terminal",
    "build_z2",
    "terminal_description",
    "z2_description",
]

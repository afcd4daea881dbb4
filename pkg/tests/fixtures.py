"""Hand-built descriptions shared by several test modules."""

from __future__ import annotations

import copy

# the arrow category A -> B, with one cell of every higher sort over each object or arrow
OBJECTS = ("A", "B")
ARROWS = {"1A": ("A", "A"), "1B": ("B", "B"), "f": ("A", "B")}
IDENT = {"A": "1A", "B": "1B"}


def _then(t: str, u: str) -> str | None:
    if ARROWS[t][1] != ARROWS[u][0]:
        return None
    if t.startswith("1"):
        return u
    return t if u.startswith("1") else None


def arrow_description(name: str = "arrow") -> dict:
    cells = {
        "objects": [{"id": X} for X in OBJECTS],
        "trans_arrows": [{"id": t, "src": s, "tgt": d} for t, (s, d) in ARROWS.items()],
        "hor_arrows": [{"id": f"h{X}", "src": X, "tgt": X} for X in OBJECTS],
        "vert_arrows": [{"id": f"v{X}", "src": X, "tgt": X} for X in OBJECTS],
        "hor_cells": [
            {"id": f"phi_{t}", "top": f"h{s}", "bottom": f"h{d}", "left": t, "right": t}
            for t, (s, d) in ARROWS.items()
        ],
        "vert_cells": [
            {"id": f"psi_{t}", "left": f"v{s}", "right": f"v{d}", "top": t, "bottom": t}
            for t, (s, d) in ARROWS.items()
        ],
        "basic_cells": [
            {"id": f"b{X}", "top": f"h{X}", "bottom": f"h{X}", "left": f"v{X}", "right": f"v{X}"} for X in OBJECTS
        ],
        "cubes": [
            {
                "id": f"c_{t}", "back": f"b{s}", "front": f"b{d}",
                "top": f"phi_{t}", "bottom": f"phi_{t}", "left": f"psi_{t}", "right": f"psi_{t}",
            }
            for t, (s, d) in ARROWS.items()
        ],
    }
    ops: dict[str, list] = {}

    def row(op, *xs):
        ops.setdefault(op, []).append(list(xs))

    for t in ARROWS:
        for u in ARROWS:
            tu = _then(t, u)
            if tu is not None:
                for prefix in ("", "phi_", "psi_", "c_"):
                    row("t_comp", prefix + t, prefix + u, prefix + tu)
        for prefix, d in (("phi_", "h_comp"), ("psi_", "v_comp"), ("c_", "h_comp"), ("c_", "v_comp")):
            row(d, prefix + t, prefix + t, prefix + t)
        row("hid", t, f"phi_{t}")
        row("vid", t, f"psi_{t}")
        row("hid", f"psi_{t}", f"c_{t}")
        row("vid", f"phi_{t}", f"c_{t}")
    for X in OBJECTS:
        one = IDENT[X]
        for d, arrow, cell in (("h", f"h{X}", f"phi_{one}"), ("v", f"v{X}", f"psi_{one}")):
            row(f"{d}_comp", arrow, arrow, arrow)
            for op in ("kappa", "lambda", "rho"):
                for inv in ("", "_inv"):
                    n = 3 if op == "kappa" else 1
                    row(f"{op}_{d}{inv}", *[arrow] * n, cell)
                    row(f"{op}_{d}{inv}", *[f"b{X}"] * n, f"c_{one}")
        row("h_comp", f"b{X}", f"b{X}", f"b{X}")
        row("v_comp", f"b{X}", f"b{X}", f"b{X}")
        row("t_id", X, one)
        row("t_id", f"h{X}", f"phi_{one}")
        row("t_id", f"v{X}", f"psi_{one}")
        row("t_id", f"b{X}", f"c_{one}")
        row("hid", X, f"h{X}")
        row("vid", X, f"v{X}")
        row("hid", f"v{X}", f"b{X}")
        row("vid", f"h{X}", f"b{X}")
        row("chi", *[f"b{X}"] * 4, f"c_{one}")
        row("mu", f"v{X}", f"v{X}", f"c_{one}")
        row("delta", f"h{X}", f"h{X}", f"c_{one}")
        row("tau", X, f"c_{one}")
    return {"schema": "intercat/v1", "instances": [{"name": name, "chirality": "right", "cells": cells, "operations": ops}]}


def edited(doc: dict, edit) -> dict:
    """A deep copy of ``doc`` after ``edit(instance_entry)``."""
    out = copy.deepcopy(doc)
    edit(out["instances"][0])
    return out

"""Command-line front end.

    intercat check duoidal:2 --budget 2000
    intercat check broken.json --format json
    intercat demo duoidal
    intercat export span-cospan:1 -o sc1.json

Exit codes: 0 when every checked law holds, 1 when some law fails, 2 for
usage, load and structural errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .description import (
    REPORT_VERSION,
    export_description,
    load_description,
    read_json,
    validate_report,
    write_json,
)
from .dualities import apply_word, parse_word
from .laws import FullReport, LawReport, check_all
from .model import ConfigurationError, IntercatError, Intercategory

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class LoadError(Exception):
    """The target could not be resolved, read or built."""


# -- targets -----------------------------------------------------------------------------------


def builtin(name: str) -> Intercategory:
    """``duoidal:N``, ``span-cospan:N``, ``terminal`` or ``z2``."""
    from .instances import build_duoidal, build_span_cospan
    from .instances.table import build_terminal, build_z2

    base, _, cap = name.partition(":")
    if base in ("terminal", "z2") and not cap:
        return build_terminal() if base == "terminal" else build_z2()
    builders = {"duoidal": build_duoidal, "span-cospan": build_span_cospan}
    if base not in builders:
        raise LoadError(f"unknown instance {name!r}; builtins are duoidal:N, span-cospan:N, terminal, z2")
    try:
        n = int(cap or 2)
    except ValueError:
        raise LoadError(f"bad size in {name!r}") from None
    try:
        return builders[base](n)
    except ConfigurationError as e:
        raise LoadError(str(e)) from None


def _looks_like_file(target: str) -> bool:
    return target.endswith(".json") or "/" in target


def resolve(target: str):
    """A ``Loaded`` bundle for a description file, or a single builtin instance."""
    from .description import Loaded

    if not _looks_like_file(target):
        I = builtin(target)
        return Loaded(instances={I.name: I})
    try:
        doc = read_json(target)
    except OSError as e:
        raise LoadError(f"cannot read {target}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise LoadError(f"{target} is not valid JSON: {e}") from None
    return load_description(doc, builtins=_builtins_for(doc))


def _builtins_for(doc: Any) -> dict:
    """Builtins that morphisms in ``doc`` refer to by name."""
    names = set()
    if isinstance(doc, dict):
        for m in doc.get("morphisms", []) or []:
            if isinstance(m, dict):
                names.update(str(m.get(k, "")) for k in ("source", "target"))
    local = {i.get("name") for i in doc.get("instances", []) if isinstance(i, dict)} if isinstance(doc, dict) else set()
    out = {}
    for n in names - local:
        try:
            I = builtin(n)
        except LoadError:
            continue
        out[n] = I
    return out


# -- reports -----------------------------------------------------------------------------------


def _checked(name: str, kind: str | None, reports: Sequence[LawReport]) -> dict:
    doc = {
        "name": name,
        "verdict": "fail" if any(r.failures for r in reports) else "pass",
        "conditions": [r.to_dict() for r in reports],
    }
    if kind:
        doc["kind"] = kind
    return doc


def build_report(instances: Sequence[FullReport], morphisms=(), cells=()) -> dict:
    parts = [r.verdict for r in instances] + [m["verdict"] for m in morphisms] + [c["verdict"] for c in cells]
    doc: dict[str, Any] = {
        "schema": REPORT_VERSION,
        "verdict": "fail" if "fail" in parts else "pass",
        "instances": [r.to_dict() for r in instances],
    }
    if morphisms:
        doc["morphisms"] = list(morphisms)
    if cells:
        doc["cells"] = list(cells)
    return doc


def _law_line(r: dict) -> str:
    line = f"  {r['law']:<12} {r['status']:<9} checked={r['checked']}"
    if r["skipped"]:
        line += f" skipped={r['skipped']}"
    line += " exhaustive" if r["exhaustive"] else " sampled"
    for f in r["failures"][:3]:
        line += f"\n      witness {', '.join(f['inputs'])}: {f['lhs']} != {f['rhs']}"
    if r["failure_count"] > 3:
        line += f"\n      ... {r['failure_count'] - 3} more"
    return line


def render_text(doc: dict) -> str:
    out = []
    for inst in doc["instances"]:
        cfg = inst["config"]
        extra = f" duality={cfg['duality']}" if cfg.get("duality") else ""
        out.append(f"instance {inst['instance']} (budget={cfg['budget']} seed={cfg['seed']}{extra}): {inst['verdict']}")
        out.extend(_law_line(r) for r in inst["laws"])
    for what in ("morphisms", "cells"):
        for m in doc.get(what, []):
            kind = f" [{m['kind']}]" if m.get("kind") else ""
            out.append(f"{what[:-1]} {m['name']}{kind}: {m['verdict']}")
            out.extend(_law_line(r) for r in m["conditions"])
    out.append(f"verdict: {doc['verdict']}")
    return "\n".join(out)


# -- commands ------------------------------------------------------------------------------


def cmd_check(target: str, budget: int = 1000, seed: int = 0, duality: str = "", fmt: str = "text", out=None) -> int:
    from .morphisms import check_cell, check_morphism

    out = out or sys.stdout
    try:
        if budget < 1:
            raise ConfigurationError("budget must be positive")
        word = parse_word(duality) if duality else []
        loaded = resolve(target)
        if not (loaded.instances or loaded.morphisms or loaded.cells):
            raise LoadError(f"{target} describes nothing to check")
        reports = []
        for I in loaded.instances.values():
            J = apply_word(I, duality) if word else I
            r = check_all(J, budget, seed)
            r.duality = duality
            reports.append(r)
        morphisms = [
            _checked(F.name, F.kind.value, check_morphism(F, budget, seed)) for F in loaded.morphisms.values()
        ]
        cells = [_checked(p.name, p.shape, check_cell(p, budget, seed)) for p in loaded.cells.values()]
    except (LoadError, IntercatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    doc = build_report(reports, morphisms, cells)
    validate_report(doc)
    print(write_json(doc) if fmt == "json" else render_text(doc), file=out)
    return EXIT_PASS if doc["verdict"] == "pass" else EXIT_FAIL


def _table(f) -> str:
    return "[" + ", ".join(f"({i}->{j})" for i, j in enumerate(f.table)) + "]"


def demo_duoidal() -> str:
    from .instances import build_duoidal
    from .instances.duoidal import basic

    D = build_duoidal(1)
    one = basic(1)
    x = D.chi(one, one, one, one)
    f = x.data
    lines = [
        "chi(1,1,1,1) in the duoidal instance of finite sets",
        f"  source (1 x 1) + (1 x 1) has {f.dom.size} elements: inl(0,0)=0, inr(0,0)=1",
        f"  target (1 + 1) x (1 + 1) has {f.cod.size} elements: (inl,inl)=0 (inl,inr)=1 (inr,inl)=2 (inr,inr)=3",
        f"  table {_table(f)}",
        f"  injective={f.is_injective()} surjective={f.is_surjective()}",
    ]
    return "\n".join(lines)


def demo_span_cospan() -> str:
    from itertools import islice

    from .instances import build_span_cospan
    from .instances.spancospan import cospan_comp, span_comp
    from .laws import _Candidates, _tuples, after, below_right, free
    from .model import Sort

    S = build_span_cospan(1)
    B = Sort.BASIC
    steps = (free(B), after(B, "h", 0), after(B, "v", 0), below_right(B, "h", 2, "v", 1))
    candidates = islice(_tuples(_Candidates(S), steps), 2000)
    a, b, c, e = max(candidates, key=lambda q: sum(x.data.apex.size for x in q))
    ab, ce = S.h_comp(a, b), S.h_comp(c, e)
    ac, be = S.v_comp(a, c), S.v_comp(b, e)
    x = S.chi(a, b, c, e)
    lines = ["chi on a 2x2 grid of spans of cospans (sizes of the centers)"]
    lines.append(f"  centers a={a.data.apex.size} b={b.data.apex.size} c={c.data.apex.size} e={e.data.apex.size}")
    for name, (s, t) in (("a|b", (a, b)), ("c|e", (c, e))):
        _, P = span_comp(s.data.span, t.data.span)
        lines.append(f"  pullback {name}: apex {P.apex.size}")
    for name, (s, t) in (("a/c", (a, c)), ("b/e", (b, e))):
        _, Q = cospan_comp(s.data.cospan, t.data.cospan)
        lines.append(f"  pushout {name}: apex {Q.apex.size}")
    lines.append(f"  source (a|b)/(c|e): center {S.v_comp(ab, ce).data.apex.size}")
    lines.append(f"  target (a/c)|(b/e): center {S.h_comp(ac, be).data.apex.size}")
    lines.append(f"  comparison map {_table(x.data)}")
    lines.append(f"  injective={x.data.is_injective()} surjective={x.data.is_surjective()}")
    return "\n".join(lines)


DEMOS = {"duoidal": demo_duoidal, "span-cospan": demo_span_cospan}


def cmd_demo(name: str, out=None) -> int:
    out = out or sys.stdout
    if name not in DEMOS:
        print(f"error: unknown demo {name!r}; choose from {', '.join(DEMOS)}", file=sys.stderr)
        return EXIT_ERROR
    print(DEMOS[name](), file=out)
    return EXIT_PASS


def cmd_export(target: str, path: str | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        I = builtin(target)
        doc = export_description(I)
        if path is None:
            print(write_json(doc), file=out)
        else:
            write_json(doc, path)
    except LoadError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: cannot write {path}: {e.strerror or e}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_PASS


# -- entry point -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intercat", description="Check finite intercategories.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run every law (and any morphism checks) on a target")
    check.add_argument("target", help="builtin (duoidal:N, span-cospan:N, terminal, z2) or a .json description")
    check.add_argument("--budget", type=int, default=1000, help="tuples per law family before sampling")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--duality", default="", help="duality word applied first, e.g. h, hv, tr")
    check.add_argument("--format", choices=("text", "json"), default="text")

    demo = sub.add_parser("demo", help="print a worked interchanger computation")
    demo.add_argument("name", help="duoidal or span-cospan")

    export = sub.add_parser("export", help="write a builtin as a JSON description")
    export.add_argument("target")
    export.add_argument("path", nargs="?", help="output file (stdout if omitted)")
    export.add_argument("-o", "--output", dest="output", help="output file")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return cmd_check(args.target, args.budget, args.seed, args.duality, args.format)
    if args.command == "demo":
        return cmd_demo(args.name)
    return cmd_export(args.target, args.output or args.path)


if __name__ == "__main__":
    sys.exit(main())

"""Morphisms of intercategories, cells between them and commuting cubes.

A morphism ``F : A -> B`` maps cells sort by sort, preserving faces and
transversal composition strictly, and carries comparison cells for the
two weak directions:

* ``phi_v_unit(A)`` / ``phi_v_unit(a)``: the vertical cell or cube between
  ``vid(F A)`` and ``F(vid A)``, for objects and horizontal arrows;
* ``phi_v_comp(x, y)``: between ``F x / F y`` and ``F(x / y)``, for vertical
  arrows and basic cells;
* ``phi_h_unit`` and ``phi_h_comp``: the same for the horizontal direction.

A lax comparison points towards ``F(-)``, a colax one away from it.  The
kind fixes both families: lax-lax (both lax), colax-lax (horizontal
colax) and colax-colax (both colax).  Lax-colax is rejected because its
compatibility conditions have no diagram to commute.

Every condition is a polygon of cubes (or lower cells) in the target whose
edges point one way or the other depending on the kind.
:func:`polygon_sides` finds the unique source and sink corners and
returns the two transversal composites between them, so one description
serves all kinds.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Any, Callable, Sequence

from .finset import FinFun, FinSet, identity
from .laws import (
    Family,
    Law,
    LawReport,
    _Candidates,
    after,
    below_right,
    free,
    run_law,
)
from .model import (
    BoundaryError,
    Cell,
    Chirality,
    ConfigurationError,
    Intercategory,
    Sort,
    UndefinedOperation,
    face,
    sort_of,
)

# -- kinds ------------------------------------------------------------------------------------


class Kind(Enum):
    LAX_LAX = "lax-lax"
    COLAX_LAX = "colax-lax"
    COLAX_COLAX = "colax-colax"

    @property
    def v_lax(self) -> bool:
        return self is not Kind.COLAX_COLAX

    @property
    def h_lax(self) -> bool:
        return self is Kind.LAX_LAX

    def lax(self, d: str) -> bool:
        return self.v_lax if d == "v" else self.h_lax

    @classmethod
    def parse(cls, value: Kind | str) -> Kind:
        if isinstance(value, Kind):
            return value
        text = str(value).lower().replace("_", "-")
        if text == "lax-colax":
            raise ConfigurationError(
                "lax-colax morphisms are not supported: their vertical/horizontal "
                "compatibility conditions cannot be stated"
            )
        try:
            return cls(text)
        except ValueError:
            raise ConfigurationError(f"unknown morphism kind {value!r}") from None


class MorphismCondition(str, Enum):
    M5 = "M5"
    M6 = "M6"
    M7 = "M7"
    M8 = "M8"
    M9 = "M9"
    M10 = "M10"
    M11 = "M11"
    M12 = "M12"
    M13 = "M13"
    M14 = "M14"
    STRICT_T = "M-STRICT-T"
    NAT_V = "M-NAT-V"
    NAT_H = "M-NAT-H"

    def __str__(self):
        return self.value


class CellCondition(str, Enum):
    P5 = "P5"
    P6 = "P6"
    P5_PRIME = "P5'"
    P6_PRIME = "P6'"
    P7 = "P7"
    P8 = "P8"
    P7_COLAX = "P7c"
    P8_COLAX = "P8c"

    def __str__(self):
        return self.value


class CubeCondition(str, Enum):
    HEXAGON = "CUBE-HEXAGON"

    def __str__(self):
        return self.value


MORPHISM_CONDITIONS = tuple(MorphismCondition(f"M{n}") for n in range(5, 15))


# -- data ---------------------------------------------------------------------------------------

Unary = Callable[[Cell], Cell]
Binary = Callable[[Cell, Cell], Cell]


class TableMap:
    """A finite map from cells to cells; missing keys raise UndefinedOperation."""

    def __init__(self, name: str, table: dict):
        self.name = name
        self.table = dict(table)

    def __call__(self, *args):
        key = args[0] if len(args) == 1 else tuple(args)
        try:
            return self.table[key]
        except KeyError:
            raise UndefinedOperation(f"{self.name} is undefined on {key!r}") from None


_ATOMS = itertools.count()


@dataclass(frozen=True, eq=False)
class MorphismData:
    name: str
    source: Intercategory
    target: Intercategory
    kind: Kind
    apply: Unary
    phi_v_unit: Unary
    phi_v_comp: Binary
    phi_h_unit: Unary
    phi_h_comp: Binary
    #: composition word: primitive atoms in application order; identities have none
    key: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        if self.source.chirality is not self.target.chirality:
            raise ConfigurationError("source and target must have the same chirality")
        if self.key is None:
            object.__setattr__(self, "key", (next(_ATOMS),))

    def __call__(self, x: Cell) -> Cell:
        return self.apply(x)

    def unit(self, d: str) -> Unary:
        return self.phi_v_unit if d == "v" else self.phi_h_unit

    def comp(self, d: str) -> Binary:
        return self.phi_v_comp if d == "v" else self.phi_h_comp

    def same_edge(self, other: MorphismData) -> bool:
        """Equal as composites: same atoms in the same order between the same instances."""
        return (
            self.key == other.key
            and self.source is other.source
            and self.target is other.target
            and self.kind is other.kind
        )


@dataclass(frozen=True, eq=False)
class CellData:
    """A double cell ``pi`` in the square ``top ; right`` over ``left ; bottom``.

    ``top: A -> B``, ``left: A -> C``, ``right: B -> D``, ``bottom: C -> D``;
    ``component(x)`` for a cell ``x`` of ``A`` without transversal direction
    goes from ``right(top(x))`` to ``bottom(left(x))``.
    """

    name: str
    top: MorphismData
    bottom: MorphismData
    left: MorphismData
    right: MorphismData
    component: Unary

    def __post_init__(self):
        t, b, l, r = self.top, self.bottom, self.left, self.right
        if not (t.source is l.source and t.target is r.source and l.target is b.source and r.target is b.target):
            raise ConfigurationError(f"cell {self.name}: the four morphisms do not form a square")
        if t.kind is not b.kind or l.kind is not r.kind:
            raise ConfigurationError(f"cell {self.name}: parallel edges must have the same kind")
        shape(t.kind, l.kind)

    def __call__(self, x: Cell) -> Cell:
        return self.component(x)

    @property
    def shape(self) -> str:
        return shape(self.top.kind, self.left.kind)

    @property
    def A(self) -> Intercategory:
        return self.top.source

    @property
    def D(self) -> Intercategory:
        return self.bottom.target


_SHAPES = {
    (Kind.LAX_LAX, Kind.COLAX_LAX): "LL/CL",
    (Kind.COLAX_LAX, Kind.COLAX_COLAX): "CL/CC",
    (Kind.LAX_LAX, Kind.COLAX_COLAX): "LL/CC",
}


def shape(top: Kind, left: Kind) -> str:
    """The three cell shapes: horizontal (LL/CL), vertical (CL/CC) and basic (LL/CC)."""
    try:
        return _SHAPES[(top, left)]
    except KeyError:
        raise ConfigurationError(
            f"no cells with {top.value} top/bottom and {left.value} left/right edges"
        ) from None


@dataclass(frozen=True)
class CubeFaces:
    """Six cells forming a commuting-cube candidate.

    ``back`` and ``front`` are parallel cells ``Phi, Sigma, Theta, Psi`` and
    ``Phi', Sigma', Theta', Psi'``; the transversal morphisms
    ``K : A -> A'``, ``K' : B -> B'``, ``L : C -> C'`` and ``L' : D -> D'``
    join their corners.  ``top`` has edges ``Phi, Phi'`` (top, bottom) and
    ``K, K'`` (left, right); ``bottom`` has ``Psi, Psi'`` and ``L, L'``;
    ``left`` has ``K, L`` and ``Sigma, Sigma'``; ``right`` has ``K', L'`` and
    ``Theta, Theta'``.
    """

    back: CellData
    front: CellData
    top: CellData
    bottom: CellData
    left: CellData
    right: CellData


# -- expected boundaries of components ------------------------------------------------------


def comparison_frame(F: MorphismData, d: str, args: Sequence[Cell]) -> dict:
    """Faces of ``phi_d_unit(x)`` (one argument) or ``phi_d_comp(x, y)`` (two)."""
    T = F.target
    if len(args) == 1:
        (x,) = args
        ends = (T.ident(d, F(x)), F(F.source.ident(d, x)))
        d_faces = (T.t_id(F(x)), T.t_id(F(x)))
        compute = lambda *fs: F.unit(d)(*fs)
    else:
        x, y = args
        ends = (T.compose(d, F(x), F(y)), F(F.source.compose(d, x, y)))
        d_faces = (T.t_id(F(face(x, d, 0))), T.t_id(F(face(y, d, 1))))
        compute = lambda *fs: F.comp(d)(*fs)
    if not F.kind.lax(d):
        ends = ends[::-1]
    out = {("t", 0): ends[0], ("t", 1): ends[1], (d, 0): d_faces[0], (d, 1): d_faces[1]}
    s = sort_of(args[0])
    for e in s.dirs:
        if e != d:
            for end in (0, 1):
                out[(e, end)] = compute(*(face(a, e, end) for a in args))
    return out


def component_frame(p: CellData, x: Cell) -> dict:
    out = {("t", 0): p.right(p.top(x)), ("t", 1): p.bottom(p.left(x))}
    for e in sort_of(x).dirs:
        for end in (0, 1):
            out[(e, end)] = p(face(x, e, end))
    return out


def _frame_errors(result: Cell, expected: dict, where: str) -> list[str]:
    problems = []
    s = sort_of(result)
    want = set(expected)
    have = {(d, e) for d in s.dirs for e in (0, 1)}
    if want != have:
        return [f"{where}: expected a cell with directions {sorted({d for d, _ in want})}, got {s.label}"]
    for (d, e), cell in expected.items():
        if face(result, d, e) != cell:
            problems.append(f"{where}.{s.face_fields(d)[e]}")
    return problems


# -- enumeration helpers ------------------------------------------------------------------------

_UNIT_ARGS = {"v": (Sort.OBJ, Sort.HOR), "h": (Sort.OBJ, Sort.VERT)}
_COMP_ARGS = {"v": (Sort.VERT, Sort.BASIC), "h": (Sort.HOR, Sort.BASIC)}
_LOWER = (Sort.OBJ, Sort.TRANS, Sort.HOR, Sort.VERT, Sort.HCELL, Sort.VCELL, Sort.BASIC, Sort.CUBE)


def _pairs(I: Intercategory, s: Sort, d: str, limit: int | None = None):
    out = []
    f0 = s.face_fields(d)[0]
    for x in I.cells(s):
        for y in I.cells(s, **{f0: face(x, d, 1)}):
            out.append((x, y))
            if limit is not None and len(out) >= limit:
                return out
    return out


def _safe(f, *args):
    try:
        return f(*args)
    except UndefinedOperation:
        return None


def validate_morphism(F: MorphismData, limit: int = 2000) -> None:
    """Raise :class:`BoundaryError` if ``F`` or a comparison cell has a wrong face.

    Checks every enumerated source cell (up to ``limit`` per sort and family).
    """
    S, T = F.source, F.target
    for s in _LOWER:
        for i, x in enumerate(S.cells(s)[:limit]):
            y = _safe(F, x)
            if y is None:
                continue
            where = f"{F.name}({S.cell_id(x)})"
            if sort_of(y) is not s:
                raise BoundaryError(f"expected one of {s.label}, got {sort_of(y).label}", where)
            if not T.contains(y):
                raise BoundaryError("image is not a cell of the target", where)
            for d in s.dirs:
                for end in (0, 1):
                    fx = _safe(F, face(x, d, end))
                    if fx is not None and face(y, d, end) != fx:
                        raise BoundaryError(
                            "sort map does not preserve this face", f"{where}.{s.face_fields(d)[end]}"
                        )
    for d in "vh":
        for s in _UNIT_ARGS[d]:
            for x in S.cells(s)[:limit]:
                _check_component(F, d, (x,))
        for s in _COMP_ARGS[d]:
            for pair in _pairs(S, s, d, limit):
                _check_component(F, d, pair)


def _check_component(F: MorphismData, d: str, args) -> None:
    fn = F.unit(d) if len(args) == 1 else F.comp(d)
    name = f"phi_{d}_{'unit' if len(args) == 1 else 'comp'}"
    where = f"{F.name}.{name}({', '.join(F.source.cell_id(a) for a in args)})"
    try:
        got = fn(*args)
        expected = comparison_frame(F, d, args)
    except UndefinedOperation:
        return
    problems = _frame_errors(got, expected, where)
    if problems:
        raise BoundaryError("component has a wrong face: " + ", ".join(problems), problems[0])


def validate_cell(p: CellData, limit: int = 2000) -> None:
    """Raise :class:`BoundaryError` naming the first component face that is wrong."""
    A = p.A
    for s in (Sort.OBJ, Sort.HOR, Sort.VERT, Sort.BASIC):
        for x in A.cells(s)[:limit]:
            where = f"{p.name}({A.cell_id(x)})"
            try:
                got = p(x)
                expected = component_frame(p, x)
            except UndefinedOperation:
                continue
            problems = _frame_errors(got, expected, where)
            if not p.D.contains(got):
                problems.append(f"{where} is not a cell of the target")
            if problems:
                raise BoundaryError("component has a wrong face: " + ", ".join(problems), problems[0])


# -- polygons -------------------------------------------------------------------------------


def polygon_sides(T: Intercategory, edges: Sequence[tuple[Cell, bool]]) -> tuple[Cell, Cell]:
    """The two transversal composites around a cycle of edges.

    Edge ``i`` joins corner ``i`` to corner ``i + 1``; ``True`` means the
    cell points that way.  The cycle must have exactly one corner with both
    edges leaving it and one with both arriving.
    """
    n = len(edges)
    fwd = [f for _, f in edges]
    sources = [i for i in range(n) if fwd[i] and not fwd[i - 1]]
    sinks = [i for i in range(n) if not fwd[i] and fwd[i - 1]]
    if len(sources) != 1 or len(sinks) != 1:
        raise ConfigurationError("this condition has no well-defined pair of composites")
    s, k = sources[0], sinks[0]
    one = []
    i = s
    while i != k:
        one.append(edges[i][0])
        i = (i + 1) % n
    two = []
    i = s
    while i != k:
        i = (i - 1) % n
        two.append(edges[i][0])
    return reduce(T.t_comp, one), reduce(T.t_comp, two)


# -- morphism conditions ------------------------------------------------------------------------


def _interchanger_forward(T: Intercategory) -> bool:
    return T.chirality is Chirality.RIGHT


def _unit_polygon(F, d, x, side):
    """Conditions (5), (6), (8), (9): a weak unit law against the comparisons."""
    S, T = F.source, F.target
    lax = F.kind.lax(d)
    u = face(x, d, 0 if side == "left" else 1)
    if side == "left":
        e0 = T.compose(d, F.unit(d)(u), T.t_id(F(x)))
        e1 = F.comp(d)(S.ident(d, u), x)
        e2 = F(S.structural("lambda", d, x))
        e3 = T.structural("lambda", d, F(x))
    else:
        e0 = T.compose(d, T.t_id(F(x)), F.unit(d)(u))
        e1 = F.comp(d)(x, S.ident(d, u))
        e2 = F(S.structural("rho", d, x))
        e3 = T.structural("rho", d, F(x))
    return [polygon_sides(T, [(e0, lax), (e1, lax), (e2, True), (e3, False)])]


def _assoc_polygon(F, d, x, y, z):
    """Conditions (7) and (10)."""
    S, T = F.source, F.target
    lax = F.kind.lax(d)
    fx, fy, fz = F(x), F(y), F(z)
    edges = [
        (T.structural("kappa", d, fx, fy, fz), True),
        (T.compose(d, F.comp(d)(x, y), T.t_id(fz)), lax),
        (F.comp(d)(S.compose(d, x, y), z), lax),
        (F(S.structural("kappa", d, x, y, z)), False),
        (F.comp(d)(x, S.compose(d, y, z)), not lax),
        (T.compose(d, T.t_id(fx), F.comp(d)(y, z)), not lax),
    ]
    return [polygon_sides(T, edges)]


def _compat_polygon(F, tag, xs):
    """Conditions (11)-(14): comparisons against the interchangers."""
    S, T = F.source, F.target
    hl, vl = F.kind.h_lax, F.kind.v_lax
    fw = _interchanger_forward(T)
    if tag == "M11":
        (a,) = xs
        e = [
            T.vid(F.phi_h_unit(a)),
            F.phi_v_unit(S.hid(a)),
            F(S.tau(a)),
            F.phi_h_unit(S.vid(a)),
            T.hid(F.phi_v_unit(a)),
            T.tau(F(a)),
        ]
    elif tag == "M12":
        v, w = xs
        e = [
            T.v_comp(F.phi_h_unit(v), F.phi_h_unit(w)),
            F.phi_v_comp(S.hid(v), S.hid(w)),
            F(S.mu(v, w)),
            F.phi_h_unit(S.v_comp(v, w)),
            T.hid(F.phi_v_comp(v, w)),
            T.mu(F(v), F(w)),
        ]
    elif tag == "M13":
        h, k = xs
        e = [
            T.vid(F.phi_h_comp(h, k)),
            F.phi_v_unit(S.h_comp(h, k)),
            F(S.delta(h, k)),
            F.phi_h_comp(S.vid(h), S.vid(k)),
            T.h_comp(F.phi_v_unit(h), F.phi_v_unit(k)),
            T.delta(F(h), F(k)),
        ]
    else:
        a, b, c, g = xs
        e = [
            T.v_comp(F.phi_h_comp(a, b), F.phi_h_comp(c, g)),
            F.phi_v_comp(S.h_comp(a, b), S.h_comp(c, g)),
            F(S.chi(a, b, c, g)),
            F.phi_h_comp(S.v_comp(a, c), S.v_comp(b, g)),
            T.h_comp(F.phi_v_comp(a, c), F.phi_v_comp(b, g)),
            T.chi(F(a), F(b), F(c), F(g)),
        ]
    orient = [hl, vl, fw, not hl, not vl, not fw]
    return [polygon_sides(T, list(zip(e, orient)))]


def _strict_t(F, xs):
    S, T = F.source, F.target
    if len(xs) == 1:
        return [(F(S.t_id(xs[0])), T.t_id(F(xs[0])))]
    x, y = xs
    return [(F(S.t_comp(x, y)), T.t_comp(F(x), F(y)))]


def _naturality(F, d, xs):
    """Comparison cells commute with transversal cells of their arguments."""
    S, T = F.source, F.target
    lax = F.kind.lax(d)
    if len(xs) == 1:
        (y,) = xs
        src, tgt = face(y, "t", 0), face(y, "t", 1)
        u = F.unit(d)
        image, ident = F(S.ident(d, y)), T.ident(d, F(y))
        if lax:
            return [(T.t_comp(u(src), image), T.t_comp(ident, u(tgt)))]
        return [(T.t_comp(image, u(tgt)), T.t_comp(u(src), ident))]
    y1, y2 = xs
    c = F.comp(d)
    s1, s2 = face(y1, "t", 0), face(y2, "t", 0)
    t1, t2 = face(y1, "t", 1), face(y2, "t", 1)
    image, comp = F(S.compose(d, y1, y2)), T.compose(d, F(y1), F(y2))
    if lax:
        return [(T.t_comp(c(s1, s2), image), T.t_comp(comp, c(t1, t2)))]
    return [(T.t_comp(image, c(t1, t2)), T.t_comp(c(s1, s2), comp))]


def morphism_laws(F: MorphismData) -> list[Law]:
    B, H, V = Sort.BASIC, Sort.HOR, Sort.VERT
    laws = []
    for d, (cu, ca, cs) in (("v", ("M5", "M6", "M7")), ("h", ("M8", "M9", "M10"))):
        arrow = V if d == "v" else H
        for tag, side in ((cu, "left"), (ca, "right")):
            ev = lambda I, xs, d=d, side=side: _unit_polygon(F, d, xs[0], side)
            laws.append(Law(MorphismCondition(tag), (
                Family("cubes", (free(B),), ev),
                Family("arrows", (free(arrow),), ev),
            )))
        ev = lambda I, xs, d=d: _assoc_polygon(F, d, *xs)
        laws.append(Law(MorphismCondition(cs), (
            Family("cubes", (free(B), after(B, d), after(B, d)), ev),
            Family("arrows", (free(arrow), after(arrow, d), after(arrow, d)), ev),
        )))
    compat_steps = {
        "M11": (free(Sort.OBJ),),
        "M12": (free(V), after(V, "v")),
        "M13": (free(H), after(H, "h")),
        "M14": (free(B), after(B, "h", 0), after(B, "v", 0), below_right(B, "h", 2, "v", 1)),
    }
    for tag, steps in compat_steps.items():
        ev = lambda I, xs, tag=tag: _compat_polygon(F, tag, xs)
        laws.append(Law(MorphismCondition(tag), (Family("cubes", steps, ev),)))
    laws.sort(key=lambda law: int(law.law.value[1:]))
    strict = []
    for s in (Sort.TRANS, Sort.HCELL, Sort.VCELL, Sort.CUBE):
        strict.append(Family(f"comp-{s.label}", (free(s), after(s, "t")), lambda I, xs: _strict_t(F, xs)))
    for s in (Sort.OBJ, Sort.HOR, Sort.VERT, Sort.BASIC):
        strict.append(Family(f"id-{s.label}", (free(s),), lambda I, xs: _strict_t(F, xs)))
    laws.append(Law(MorphismCondition.STRICT_T, tuple(strict)))
    for d, tag in (("v", MorphismCondition.NAT_V), ("h", MorphismCondition.NAT_H)):
        fams = []
        for s in _UNIT_ARGS[d]:
            st = s.with_("t")
            fams.append(Family(f"unit-{st.label}", (free(st),), lambda I, xs, d=d: _naturality(F, d, xs)))
        for s in _COMP_ARGS[d]:
            st = s.with_("t")
            fams.append(Family(
                f"comp-{st.label}", (free(st), after(st, d)), lambda I, xs, d=d: _naturality(F, d, xs)
            ))
        laws.append(Law(tag, tuple(fams)))
    return laws


def check_morphism(F: MorphismData, budget: int = 1000, seed: int = 0) -> list[LawReport]:
    """Boundaries first (raising), then every condition for ``F``'s kind."""
    if budget < 1:
        raise ConfigurationError("budget must be positive")
    validate_morphism(F)
    cands = _Candidates(F.source)
    reports = []
    for law in morphism_laws(F):
        r = run_law(F.source, law, budget, seed, cands, out=F.target)
        r.instance = F.name
        reports.append(r)
    return reports


# -- cell conditions -----------------------------------------------------------------------------


def cell_condition_tags(p: CellData) -> dict[tuple[str, str], CellCondition]:
    s = p.shape
    vertical = (CellCondition.P5, CellCondition.P6) if s == "LL/CL" else (CellCondition.P5_PRIME, CellCondition.P6_PRIME)
    horizontal = (CellCondition.P7_COLAX, CellCondition.P8_COLAX) if s == "CL/CC" else (CellCondition.P7, CellCondition.P8)
    return {("v", "unit"): vertical[0], ("v", "comp"): vertical[1], ("h", "unit"): horizontal[0], ("h", "comp"): horizontal[1]}


def _cell_polygon(p: CellData, d: str, xs):
    """The hexagon relating ``pi`` to the four comparison families in direction ``d``."""
    Phi, Psi, Sig, The = p.top, p.bottom, p.left, p.right
    A, Dd = p.A, p.D
    if len(xs) == 1:
        (x,) = xs
        e0 = The.unit(d)(Phi(x))
        e1 = The(Phi.unit(d)(x))
        e2 = p(A.ident(d, x))
        e3 = Psi(Sig.unit(d)(x))
        e4 = Psi.unit(d)(Sig(x))
        e5 = Dd.ident(d, p(x))
    else:
        x, y = xs
        e0 = The.comp(d)(Phi(x), Phi(y))
        e1 = The(Phi.comp(d)(x, y))
        e2 = p(A.compose(d, x, y))
        e3 = Psi(Sig.comp(d)(x, y))
        e4 = Psi.comp(d)(Sig(x), Sig(y))
        e5 = Dd.compose(d, p(x), p(y))
    orient = [The.kind.lax(d), Phi.kind.lax(d), True, not Sig.kind.lax(d), not Psi.kind.lax(d), False]
    return [polygon_sides(Dd, list(zip((e0, e1, e2, e3, e4, e5), orient)))]


def cell_laws(p: CellData) -> list[Law]:
    tags = cell_condition_tags(p)
    B = Sort.BASIC
    laws = []
    for d in "vh":
        unit_arg = Sort.HOR if d == "v" else Sort.VERT
        comp_arrow = Sort.VERT if d == "v" else Sort.HOR
        ev = lambda I, xs, d=d: _cell_polygon(p, d, xs)
        laws.append(Law(tags[(d, "unit")], (
            Family("cubes", (free(unit_arg),), ev),
            Family("arrows", (free(Sort.OBJ),), ev),
        )))
        laws.append(Law(tags[(d, "comp")], (
            Family("cubes", (free(B), after(B, d)), ev),
            Family("arrows", (free(comp_arrow), after(comp_arrow, d)), ev),
        )))
    order = {CellCondition.P5: 0, CellCondition.P5_PRIME: 0, CellCondition.P6: 1, CellCondition.P6_PRIME: 1,
             CellCondition.P7: 2, CellCondition.P7_COLAX: 2, CellCondition.P8: 3, CellCondition.P8_COLAX: 3}
    return sorted(laws, key=lambda law: order[law.law])


def check_cell(p: CellData, budget: int = 1000, seed: int = 0) -> list[LawReport]:
    if budget < 1:
        raise ConfigurationError("budget must be positive")
    validate_cell(p)
    cands = _Candidates(p.A)
    reports = []
    for law in cell_laws(p):
        r = run_law(p.A, law, budget, seed, cands, out=p.D)
        r.instance = p.name
        reports.append(r)
    return reports


# -- cubes -------------------------------------------------------------------------------------


def _check_cube_edges(c: CubeFaces) -> None:
    pairs = [
        ("top.top", c.top.top, "back.top", c.back.top),
        ("top.bottom", c.top.bottom, "front.top", c.front.top),
        ("bottom.top", c.bottom.top, "back.bottom", c.back.bottom),
        ("bottom.bottom", c.bottom.bottom, "front.bottom", c.front.bottom),
        ("left.left", c.left.left, "back.left", c.back.left),
        ("left.right", c.left.right, "front.left", c.front.left),
        ("right.left", c.right.left, "back.right", c.back.right),
        ("right.right", c.right.right, "front.right", c.front.right),
        ("left.top", c.left.top, "top.left", c.top.left),
        ("left.bottom", c.left.bottom, "bottom.left", c.bottom.left),
        ("right.top", c.right.top, "top.right", c.top.right),
        ("right.bottom", c.right.bottom, "bottom.right", c.bottom.right),
    ]
    for n1, m1, n2, m2 in pairs:
        if not m1.same_edge(m2):
            raise ConfigurationError(f"cube faces do not share edges: {n1} is not {n2}")


def cube_commutes(c: CubeFaces, budget: int = 1000, seed: int = 0) -> LawReport:
    """Both routes around the cube agree at every sampled cell of the back's source.

    The routes go from ``Theta' K' Phi x`` to ``Psi' L Sigma x``:
    ``Theta'(top x) ; front(K x) ; Psi'(left x)`` and
    ``right(Phi x) ; L'(back x) ; bottom(Sigma x)``.
    """
    _check_cube_edges(c)
    pi, pi2 = c.back, c.front
    Phi, Sig = pi.top, pi.left
    The2, Psi2 = pi2.right, pi2.bottom
    K, L2 = c.top.left, c.bottom.right
    T = pi2.D

    def ev(I, xs):
        (a,) = xs
        lhs = T.t_comp(T.t_comp(The2(c.top(a)), pi2(K(a))), Psi2(c.left(a)))
        rhs = T.t_comp(T.t_comp(c.right(Phi(a)), L2(pi(a))), c.bottom(Sig(a)))
        return [(lhs, rhs)]

    fams = tuple(Family(s.label, (free(s),), ev) for s in (Sort.OBJ, Sort.HOR, Sort.VERT, Sort.BASIC))
    r = run_law(pi.A, Law(CubeCondition.HEXAGON, fams), budget, seed, out=T)
    r.instance = "cube"
    return r


# -- composition and pasting -----------------------------------------------------------------


def compose_morphisms(F: MorphismData, G: MorphismData, name: str | None = None) -> MorphismData:
    """``G`` after ``F`` (diagrammatic order): ``F : A -> B``, ``G : B -> C``."""
    if F.kind is not G.kind:
        raise ConfigurationError(f"kind mismatch: {F.kind.value} then {G.kind.value}")
    if F.target is not G.source:
        raise ConfigurationError(f"{F.name} does not land in the source of {G.name}")
    T = G.target

    def unit(d):
        lax = F.kind.lax(d)

        def fn(x):
            a, b = G.unit(d)(F(x)), G(F.unit(d)(x))
            return T.t_comp(a, b) if lax else T.t_comp(b, a)

        return fn

    def comp(d):
        lax = F.kind.lax(d)

        def fn(x, y):
            a, b = G.comp(d)(F(x), F(y)), G(F.comp(d)(x, y))
            return T.t_comp(a, b) if lax else T.t_comp(b, a)

        return fn

    return MorphismData(
        name or f"{G.name}.{F.name}",
        F.source,
        T,
        F.kind,
        lambda x: G(F(x)),
        unit("v"), comp("v"), unit("h"), comp("h"),
        key=F.key + G.key,
    )


def identity_morphism(I: Intercategory, kind: Kind | str = Kind.LAX_LAX) -> MorphismData:
    kind = Kind.parse(kind)
    return MorphismData(
        f"id[{I.name}]" if kind is Kind.LAX_LAX else f"id[{I.name}]:{kind.value}",
        I,
        I,
        kind,
        lambda x: x,
        lambda x: I.t_id(I.vid(x)),
        lambda x, y: I.t_id(I.v_comp(x, y)),
        lambda x: I.t_id(I.hid(x)),
        lambda x, y: I.t_id(I.h_comp(x, y)),
        key=(),
    )


def collapse_morphism(I: Intercategory, T: Intercategory, kind: Kind | str = Kind.COLAX_COLAX) -> MorphismData:
    """The unique morphism into an instance with one cell of each sort."""
    point = {}
    for s in _LOWER:
        cells = T.cells(s)
        if len(cells) != 1:
            raise ConfigurationError(f"{T.name} must have exactly one of {s.label}")
        point[s] = cells[0]

    def unit(d):
        return lambda x: point[sort_of(x).with_(d).with_("t")]

    def comp(d):
        return lambda x, y: point[sort_of(x).with_("t")]

    return MorphismData(
        f"!{I.name}->{T.name}", I, T, kind,
        lambda x: point[sort_of(x)],
        unit("v"), comp("v"), unit("h"), comp("h"),
    )


def identity_cell_h(Sig: MorphismData, kind: Kind | str = Kind.LAX_LAX) -> CellData:
    """Unit for horizontal pasting on the vertical edge ``Sig``."""
    A, C = Sig.source, Sig.target
    top, bottom = identity_morphism(A, kind), identity_morphism(C, kind)
    return CellData(f"1[{Sig.name}]", top, bottom, Sig, Sig, lambda x: C.t_id(Sig(x)))


def identity_cell_v(Phi: MorphismData, kind: Kind | str = Kind.COLAX_LAX) -> CellData:
    """Unit for vertical pasting on the horizontal edge ``Phi``."""
    A, B = Phi.source, Phi.target
    left, right = identity_morphism(A, kind), identity_morphism(B, kind)
    return CellData(f"1[{Phi.name}]", Phi, Phi, left, right, lambda x: B.t_id(Phi(x)))


def paste_cells_h(p: CellData, q: CellData) -> CellData:
    """``p`` beside ``q``: ``(p | q)(x) = q(top_p x) ; bottom_q(p x)``."""
    if not p.right.same_edge(q.left):
        raise ConfigurationError(f"cannot paste {p.name} | {q.name}: right edge differs from left edge")
    T = q.D
    top = compose_morphisms(p.top, q.top)
    bottom = compose_morphisms(p.bottom, q.bottom)
    return CellData(
        f"({p.name}|{q.name})", top, bottom, p.left, q.right,
        lambda x: T.t_comp(q(p.top(x)), q.bottom(p(x))),
    )


def paste_cells_v(p: CellData, q: CellData) -> CellData:
    """``p`` above ``q``: ``(p / q)(x) = right_q(p x) ; q(left_p x)``."""
    if not p.bottom.same_edge(q.top):
        raise ConfigurationError(f"cannot paste {p.name} / {q.name}: bottom edge differs from top edge")
    T = q.D
    left = compose_morphisms(p.left, q.left)
    right = compose_morphisms(p.right, q.right)
    return CellData(
        f"({p.name}/{q.name})", p.top, q.bottom, left, right,
        lambda x: T.t_comp(q.right(p(x)), q(p.left(x))),
    )


# -- tabulation (data equality) --------------------------------------------------------------


def _id_or_none(I, f, *args):
    try:
        return I.cell_id(f(*args))
    except UndefinedOperation:
        return None


def tabulate_morphism(F: MorphismData, limit: int = 500) -> dict:
    """Every value of ``F`` on enumerated source cells, keyed by ids."""
    S, T = F.source, F.target
    out: dict[str, Any] = {"kind": F.kind.value}
    for s in _LOWER:
        out[s.label] = {S.cell_id(x): _id_or_none(T, F, x) for x in S.cells(s)[:limit]}
    for d in "vh":
        out[f"phi_{d}_unit"] = {
            S.cell_id(x): _id_or_none(T, F.unit(d), x) for s in _UNIT_ARGS[d] for x in S.cells(s)[:limit]
        }
        out[f"phi_{d}_comp"] = {
            (S.cell_id(x), S.cell_id(y)): _id_or_none(T, F.comp(d), x, y)
            for s in _COMP_ARGS[d]
            for x, y in _pairs(S, s, d, limit)
        }
    return out


def tabulate_cell(p: CellData, limit: int = 500) -> dict:
    A, T = p.A, p.D
    comps = {A.cell_id(x): _id_or_none(T, p, x) for s in (Sort.OBJ, Sort.HOR, Sort.VERT, Sort.BASIC) for x in A.cells(s)[:limit]}
    return {
        "top": p.top.key, "bottom": p.bottom.key, "left": p.left.key, "right": p.right.key,
        "components": comps,
    }


def same_cell_data(p: CellData, q: CellData) -> bool:
    return (
        p.top.same_edge(q.top)
        and p.bottom.same_edge(q.bottom)
        and p.left.same_edge(q.left)
        and p.right.same_edge(q.right)
        and tabulate_cell(p) == tabulate_cell(q)
    )


# -- corruption, for failure fixtures ---------------------------------------------------------------


def override_morphism(F: MorphismData, family: str, match: Callable[..., bool], value: Callable[..., Cell]) -> MorphismData:
    """A copy of ``F`` whose ``family`` returns ``value(*args)`` wherever ``match(*args)``.

    ``family`` is ``"apply"`` or one of ``phi_v_unit``, ``phi_v_comp``,
    ``phi_h_unit``, ``phi_h_comp``.
    """
    old = getattr(F, family)

    def fn(*args):
        return value(*args) if match(*args) else old(*args)

    fields = {f: getattr(F, f) for f in ("apply", "phi_v_unit", "phi_v_comp", "phi_h_unit", "phi_h_comp")}
    fields[family] = fn
    return MorphismData(f"{F.name}~", F.source, F.target, F.kind, **fields)


def override_cell(p: CellData, match: Callable[[Cell], bool], value: Unary) -> CellData:
    old = p.component
    return CellData(f"{p.name}~", p.top, p.bottom, p.left, p.right, lambda x: value(x) if match(x) else old(x))


# -- writer morphisms on finite sets -----------------------------------------------------------------


def writer_morphism(I, m: int, kind: Kind | str = Kind.LAX_LAX, name: str | None = None) -> MorphismData:
    """``X -> X x M`` on a duoidal instance, with ``M = Z/m``.

    Vertically the comparisons are the canonical identifications
    ``(a x M) + (c x M) = (a + c) x M``.  Horizontally a lax comparison adds
    the two ``M`` coordinates and a colax one duplicates the coordinate.
    """
    from .instances.duoidal import basic, cube, product_map

    kind = Kind.parse(kind)
    if m < 1:
        raise ConfigurationError("writer monoid needs m >= 1")
    idm = identity(m)

    def apply(x):
        s = sort_of(x)
        if s is Sort.BASIC:
            return basic(x.data * m)
        if s is Sort.CUBE:
            return cube(product_map(x.data, idm))
        return x

    def phi_v_unit(x):
        if sort_of(x) is Sort.OBJ:
            return I.cells(Sort.VCELL)[0]
        return cube(identity(0))

    def phi_v_comp(x, y):
        if sort_of(x) is Sort.VERT:
            return I.cells(Sort.VCELL)[0]
        return cube(identity((x.data + y.data) * m))

    def phi_h_unit(x):
        if sort_of(x) is Sort.OBJ:
            return I.cells(Sort.HCELL)[0]
        if kind.h_lax:
            return cube(FinFun(FinSet(1), FinSet(m), (0,)))
        return cube(FinFun(FinSet(m), FinSet(1), (0,) * m))

    def phi_h_comp(x, y):
        if sort_of(x) is Sort.HOR:
            return I.cells(Sort.HCELL)[0]
        a, b = x.data, y.data
        if kind.h_lax:
            table = [0] * (a * m * b * m)
            for i, p, j, q in itertools.product(range(a), range(m), range(b), range(m)):
                table[(i * m + p) * (b * m) + (j * m + q)] = (i * b + j) * m + (p + q) % m
            return cube(FinFun(FinSet(a * m * b * m), FinSet(a * b * m), tuple(table)))
        table = [0] * (a * b * m)
        for i, j, p in itertools.product(range(a), range(b), range(m)):
            table[(i * b + j) * m + p] = (i * m + p) * (b * m) + (j * m + p)
        return cube(FinFun(FinSet(a * b * m), FinSet(a * m * b * m), tuple(table)))

    return MorphismData(
        name or f"W{m}[{kind.value}]", I, I, kind, apply, phi_v_unit, phi_v_comp, phi_h_unit, phi_h_comp
    )


def writer_cell(top, bottom, left, right, h: Sequence[int], c: Sequence[int], name: str = "pi") -> CellData:
    """A cell between writer morphisms on a duoidal instance.

    With ``top = W(p1)``, ``bottom = W(p2)``, ``left = W(q1)`` and
    ``right = W(q2)`` the component at a set ``a`` sends ``((i, p), q)`` to
    ``((i, h[q]), c[q] * p mod p2)``; ``h`` maps ``Z/q2`` to ``Z/q1`` and
    each ``c[q] * -`` must be a homomorphism ``Z/p1 -> Z/p2``.
    """
    from .instances.duoidal import cube

    I = top.source
    p1, p2 = _writer_size(top), _writer_size(bottom)
    q1, q2 = _writer_size(left), _writer_size(right)
    if len(h) != q2 or any(not 0 <= v < q1 for v in h) or len(c) != q2:
        raise ConfigurationError("h must map Z/q2 into Z/q1 and c needs one entry per q")
    singletons = {s: I.cells(s)[0] for s in (Sort.TRANS, Sort.HCELL, Sort.VCELL)}

    def component(x):
        s = sort_of(x)
        if s is Sort.OBJ:
            return singletons[Sort.TRANS]
        if s is Sort.HOR:
            return singletons[Sort.HCELL]
        if s is Sort.VERT:
            return singletons[Sort.VCELL]
        a = x.data
        table = [0] * (a * p1 * q2)
        for i, p, q in itertools.product(range(a), range(p1), range(q2)):
            table[(i * p1 + p) * q2 + q] = (i * q1 + h[q]) * p2 + (c[q] * p) % p2
        return cube(FinFun(FinSet(a * p1 * q2), FinSet(a * q1 * p2), tuple(table)))

    return CellData(name, top, bottom, left, right, component)


def _writer_size(F: MorphismData) -> int:
    from .instances.duoidal import basic

    return F(basic(1)).data


def valid_writer_cell_params(p1: int, p2: int, q1: int, q2: int, rng: random.Random):
    """Random ``(h, c)`` for :func:`writer_cell`."""
    h = [rng.randrange(q1) for _ in range(q2)]
    homs = [k for k in range(p2) if (k * p1) % p2 == 0]
    c = [rng.choice(homs) for _ in range(q2)]
    return h, c


# -- JSON --------------------------------------------------------------------------------------------


def export_morphism(F: MorphismData, limit: int = 500) -> dict:
    S, T = F.source, F.target
    maps = {}
    for s in _LOWER:
        rows = []
        for x in S.cells(s)[:limit]:
            y = _safe(F, x)
            if y is not None:
                rows.append([S.cell_id(x), T.cell_id(y)])
        if rows:
            maps[s.label] = rows
    doc = {"name": F.name, "kind": F.kind.value, "source": S.name, "target": T.name, "maps": maps}
    for d in "vh":
        doc[f"phi_{d}_unit"] = [
            [S.cell_id(x), T.cell_id(r)]
            for s in _UNIT_ARGS[d]
            for x in S.cells(s)[:limit]
            if (r := _safe(F.unit(d), x)) is not None
        ]
        doc[f"phi_{d}_comp"] = [
            [S.cell_id(x), S.cell_id(y), T.cell_id(r)]
            for s in _COMP_ARGS[d]
            for x, y in _pairs(S, s, d, limit)
            if (r := _safe(F.comp(d), x, y)) is not None
        ]
    return doc


def export_cell(p: CellData, names: dict | None = None) -> dict:
    A, T = p.A, p.D
    rows = []
    for s in (Sort.OBJ, Sort.VERT, Sort.HOR, Sort.BASIC):
        for x in A.cells(s):
            r = _safe(p, x)
            if r is not None:
                rows.append([A.cell_id(x), T.cell_id(r)])
    return {
        "name": p.name,
        "top": p.top.name, "bottom": p.bottom.name, "left": p.left.name, "right": p.right.name,
        "components": rows,
    }


def _id_index(I: Intercategory) -> dict[str, Cell]:
    from .description import _collect

    return {I.cell_id(x): x for xs in _collect(I).values() for x in xs}


def _resolve(index: dict, ref: str, where: str) -> Cell:
    try:
        return index[ref]
    except KeyError:
        raise BoundaryError(f"dangling id {ref!r}", where) from None


def build_morphism(entry: dict, instances: dict[str, Intercategory], path: str = "morphism") -> MorphismData:
    try:
        S = instances[entry["source"]]
        T = instances[entry["target"]]
    except KeyError as e:
        raise BoundaryError(f"unknown instance {e.args[0]!r}", f"{path}.source") from None
    kind = Kind.parse(entry["kind"])
    si, ti = _id_index(S), _id_index(T)
    apply = {}
    for label, rows in entry.get("maps", {}).items():
        for j, (a, b) in enumerate(rows):
            here = f"{path}.maps.{label}[{j}]"
            apply[_resolve(si, a, here + "[0]")] = _resolve(ti, b, here + "[1]")
    tables = {}
    for fam in ("phi_v_unit", "phi_v_comp", "phi_h_unit", "phi_h_comp"):
        tab = {}
        for j, row in enumerate(entry.get(fam, [])):
            here = f"{path}.{fam}[{j}]"
            args = tuple(_resolve(si, r, f"{here}[{k}]") for k, r in enumerate(row[:-1]))
            tab[args[0] if len(args) == 1 else args] = _resolve(ti, row[-1], f"{here}[{len(row) - 1}]")
        tables[fam] = TableMap(f"{entry['name']}.{fam}", tab)
    F = MorphismData(
        entry["name"], S, T, kind, TableMap(entry["name"], apply),
        tables["phi_v_unit"], tables["phi_v_comp"], tables["phi_h_unit"], tables["phi_h_comp"],
    )
    validate_morphism(F)
    return F


def build_cell(entry: dict, morphisms: dict[str, MorphismData], path: str = "cell") -> CellData:
    edges = {}
    for side in ("top", "bottom", "left", "right"):
        try:
            edges[side] = morphisms[entry[side]]
        except KeyError:
            raise BoundaryError(f"unknown morphism {entry[side]!r}", f"{path}.{side}") from None
    A, D = edges["top"].source, edges["bottom"].target
    ai, di = _id_index(A), _id_index(D)
    comps = {}
    for j, (a, b) in enumerate(entry["components"]):
        here = f"{path}.components[{j}]"
        comps[_resolve(ai, a, here + "[0]")] = _resolve(di, b, here + "[1]")
    p = CellData(entry["name"], edges["top"], edges["bottom"], edges["left"], edges["right"], TableMap(entry["name"], comps))
    validate_cell(p)
    return p


__all__ = [
    "CellCondition",
    "CellData",
    "CubeCondition",
    "CubeFaces",
    "Kind",
    "MORPHISM_CONDITIONS",
    "MorphismCondition",
    "MorphismData",
    "TableMap",
    "build_cell",
    "build_morphism",
    "cell_laws",
    "check_cell",
    "check_morphism",
    "collapse_morphism",
    "compose_morphisms",
    "cube_commutes",
    "export_cell",
    "export_morphism",
    "identity_cell_h",
    "identity_cell_v",
    "identity_morphism",
    "morphism_laws",
    "override_cell",
    "override_morphism",
    "paste_cells_h",
    "paste_cells_v",
    "polygon_sides",
    "same_cell_data",
    "shape",
    "tabulate_cell",
    "tabulate_morphism",
    "validate_cell",
    "validate_morphism",
    "valid_writer_cell_params",
    "writer_cell",
    "writer_morphism",
]

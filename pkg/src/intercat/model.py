"""Sorts, boundaries and the abstract intercategory interface.

An intercategory has three directions: transversal (``t``, strict),
horizontal (``h``) and vertical (``v``), the last two weak.  Each of the
eight sorts is determined by the set of directions it extends in:

=========== ========= ===============================
sort        extends   face fields (source, target)
=========== ========= ===============================
Obj         --        --
TransArrow  t         t: src, tgt
HorArrow    h         h: src, tgt
VertArrow   v         v: src, tgt
HorCell     t h       t: top, bottom; h: left, right
VertCell    t v       t: left, right; v: top, bottom
BasicCell   h v       h: left, right; v: top, bottom
Cube        t h v     t: back, front; h: left, right; v: top, bottom
=========== ========= ===============================

The face of a cell in direction ``d`` belongs to the sort with ``d``
removed, which lets boundaries of composites, identities and structural
cells be computed once, generically, from the faces of the arguments.
Backends only have to supply the payload (``data``) of each result.
"""

from __future__ import annotations

import hashlib
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterator, Sequence, Union

DIRECTIONS = ("t", "h", "v")


class IntercatError(Exception):
    """Base class for errors raised by this package."""


class CompositionError(IntercatError, ValueError):
    """Two cells were offered to a composition whose boundaries do not match."""

    def __init__(self, message: str, left: object = None, right: object = None):
        super().__init__(message)
        self.left = left
        self.right = right


class UnknownCellError(IntercatError, KeyError):
    """A cell was passed to an instance that does not contain it."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown cell"


class UndefinedOperation(IntercatError, LookupError):
    """A partial (table) instance has no entry for the requested operation."""


class BoundaryError(IntercatError, ValueError):
    """A cell's faces do not fit together, or differ from what an operation promises."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class ConfigurationError(IntercatError, ValueError):
    """An instance, morphism or run configuration is unusable as given."""


class Chirality(Enum):
    """Direction of the interchanger chi.

    Right: vertical-of-horizontal composites map to horizontal-of-vertical.
    Left: the opposite direction.
    """

    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True, slots=True)
class Obj:
    data: Any


ObjId = Obj


@dataclass(frozen=True, slots=True)
class TransArrow:
    src: Obj
    tgt: Obj
    data: Any


@dataclass(frozen=True, slots=True)
class HorArrow:
    src: Obj
    tgt: Obj
    data: Any


@dataclass(frozen=True, slots=True)
class VertArrow:
    src: Obj
    tgt: Obj
    data: Any


@dataclass(frozen=True, slots=True)
class HorCell:
    top: HorArrow
    bottom: HorArrow
    left: TransArrow
    right: TransArrow
    data: Any


@dataclass(frozen=True, slots=True)
class VertCell:
    left: VertArrow
    right: VertArrow
    top: TransArrow
    bottom: TransArrow
    data: Any


@dataclass(frozen=True, slots=True)
class BasicCell:
    top: HorArrow
    bottom: HorArrow
    left: VertArrow
    right: VertArrow
    data: Any


@dataclass(frozen=True, slots=True)
class Cube:
    back: BasicCell
    front: BasicCell
    top: HorCell
    bottom: HorCell
    left: VertCell
    right: VertCell
    data: Any


Cell = Union[Obj, TransArrow, HorArrow, VertArrow, HorCell, VertCell, BasicCell, Cube]


class Sort(Enum):
    OBJ = ""
    TRANS = "t"
    HOR = "h"
    VERT = "v"
    HCELL = "th"
    VCELL = "tv"
    BASIC = "hv"
    CUBE = "thv"

    @property
    def dirs(self) -> str:
        return self.value

    @property
    def cls(self) -> type:
        return _SORT_CLASS[self]

    @property
    def label(self) -> str:
        return _SORT_LABEL[self]

    def without(self, d: str) -> Sort:
        return Sort("".join(c for c in self.value if c != d))

    def with_(self, d: str) -> Sort:
        return Sort("".join(c for c in DIRECTIONS if c in self.value or c == d))

    def face_fields(self, d: str) -> tuple[str, str]:
        return FACE_FIELDS[self][d]

    def fields(self) -> tuple[str, ...]:
        return tuple(f for d in self.value for f in FACE_FIELDS[self][d])

    @classmethod
    def from_label(cls, label: str) -> Sort:
        for s, name in _SORT_LABEL.items():
            if name == label:
                return s
        raise KeyError(label)


_SORT_CLASS = {
    Sort.OBJ: Obj,
    Sort.TRANS: TransArrow,
    Sort.HOR: HorArrow,
    Sort.VERT: VertArrow,
    Sort.HCELL: HorCell,
    Sort.VCELL: VertCell,
    Sort.BASIC: BasicCell,
    Sort.CUBE: Cube,
}
_CLASS_SORT = {c: s for s, c in _SORT_CLASS.items()}
_SORT_LABEL = {
    Sort.OBJ: "objects",
    Sort.TRANS: "trans_arrows",
    Sort.HOR: "hor_arrows",
    Sort.VERT: "vert_arrows",
    Sort.HCELL: "hor_cells",
    Sort.VCELL: "vert_cells",
    Sort.BASIC: "basic_cells",
    Sort.CUBE: "cubes",
}

FACE_FIELDS: dict[Sort, dict[str, tuple[str, str]]] = {
    Sort.OBJ: {},
    Sort.TRANS: {"t": ("src", "tgt")},
    Sort.HOR: {"h": ("src", "tgt")},
    Sort.VERT: {"v": ("src", "tgt")},
    Sort.HCELL: {"t": ("top", "bottom"), "h": ("left", "right")},
    Sort.VCELL: {"t": ("left", "right"), "v": ("top", "bottom")},
    Sort.BASIC: {"h": ("left", "right"), "v": ("top", "bottom")},
    Sort.CUBE: {"t": ("back", "front"), "h": ("left", "right"), "v": ("top", "bottom")},
}


def sort_of(x: object) -> Sort:
    try:
        return _CLASS_SORT[type(x)]
    except KeyError:
        raise TypeError(f"not a cell: {x!r}") from None


def face(x: Cell, d: str, end: int) -> Cell:
    """The source (``end=0``) or target (``end=1``) face of ``x`` in direction ``d``."""
    return getattr(x, FACE_FIELDS[sort_of(x)][d][end])


def make_cell(sort: Sort, faces: dict[tuple[str, int], Cell], data: Any) -> Cell:
    kwargs = {}
    for d, (f0, f1) in FACE_FIELDS[sort].items():
        kwargs[f0] = faces[(d, 0)]
        kwargs[f1] = faces[(d, 1)]
    return sort.cls(data=data, **kwargs)


def replace_data(x: Cell, data: Any) -> Cell:
    s = sort_of(x)
    return make_cell(s, {(d, e): face(x, d, e) for d in s.dirs for e in (0, 1)}, data)


def boundary_problems(x: Cell, path: str = "") -> list[str]:
    """Every corner mismatch among the faces of ``x``, recursively.

    For two directions ``d != e`` of ``x`` the ``e``-face of the ``d``-face
    at any pair of ends must equal the ``d``-face of the ``e``-face.
    """
    s = sort_of(x)
    problems = []
    for d in s.dirs:
        for end in (0, 1):
            f = face(x, d, end)
            if sort_of(f) != s.without(d):
                problems.append(f"{path}{s.face_fields(d)[end]} has sort {sort_of(f).label}")
                return problems
            problems.extend(boundary_problems(f, f"{path}{s.face_fields(d)[end]}."))
    dirs = s.dirs
    for i, d in enumerate(dirs):
        for e in dirs[i + 1 :]:
            for a in (0, 1):
                for b in (0, 1):
                    lhs = face(face(x, d, a), e, b)
                    rhs = face(face(x, e, b), d, a)
                    if lhs != rhs:
                        fd, fe = s.face_fields(d)[a], s.face_fields(e)[b]
                        problems.append(
                            f"{path}{fd}.{sort_of(face(x, d, a)).face_fields(e)[b]} != "
                            f"{path}{fe}.{sort_of(face(x, e, b)).face_fields(d)[a]}"
                        )
    return problems


def check_boundary(x: Cell, path: str = "") -> None:
    problems = boundary_problems(x, path)
    if problems:
        raise BoundaryError("; ".join(problems), path)


def digest(x: object) -> str:
    return hashlib.sha1(repr(x).encode()).hexdigest()[:12]


# -- the abstract instance ----------------------------------------------------

STRUCTURAL = ("kappa", "kappa_inv", "lambda", "lambda_inv", "rho", "rho_inv")
INTERCHANGERS = ("chi", "mu", "delta", "tau")


class Intercategory(ABC):
    """An intercategory presented by enumerators and operations.

    Subclasses implement :meth:`cells`, :meth:`_compose`, :meth:`_ident`,
    the six structural families ``_kappa`` ... ``_rho_inv`` (parametrised by
    the weak direction ``"h"`` or ``"v"``) and the four interchangers.  The
    public methods check composability and delegate.  Results of the
    private methods are expected to carry the boundaries given by
    :func:`compose_frame`, :func:`ident_frame` and :func:`structural_frame`;
    the law checker verifies this.
    """

    name: str = "intercategory"
    chirality: Chirality = Chirality.RIGHT
    #: Whether enumerators list every cell (True) or only a capped sample.
    exhaustive: bool = True

    # enumeration
    @abstractmethod
    def cells(self, sort: Sort, **fixed: Cell) -> Sequence[Cell]:
        """Cells of ``sort`` whose named faces equal ``fixed`` (deterministic order)."""

    def objects(self) -> Sequence[Obj]:
        return self.cells(Sort.OBJ)

    def contains(self, x: Cell) -> bool:
        """Cheap membership test used by every checked operation.

        The default accepts everything; table backends look the cell up and
        computed backends check the shape of its payload.
        """
        return True

    def cell_id(self, x: Cell) -> str:
        return f"{sort_of(x).name.lower()}:{digest(x)}"

    def cell_label(self, x: Cell) -> str:
        """Human-readable payload, carried along by exports."""
        return repr(x.data)

    def _require(self, x: Cell) -> None:
        if not self.contains(x):
            raise UnknownCellError(f"{self.name} has no {sort_of(x).label[:-1]} {x!r}")

    # backend hooks
    @abstractmethod
    def _compose(self, d: str, x: Cell, y: Cell) -> Cell: ...

    @abstractmethod
    def _ident(self, d: str, x: Cell) -> Cell: ...

    @abstractmethod
    def _kappa(self, d: str, x: Cell, y: Cell, z: Cell) -> Cell: ...

    @abstractmethod
    def _kappa_inv(self, d: str, x: Cell, y: Cell, z: Cell) -> Cell: ...

    @abstractmethod
    def _lambda(self, d: str, x: Cell) -> Cell: ...

    @abstractmethod
    def _lambda_inv(self, d: str, x: Cell) -> Cell: ...

    @abstractmethod
    def _rho(self, d: str, x: Cell) -> Cell: ...

    @abstractmethod
    def _rho_inv(self, d: str, x: Cell) -> Cell: ...

    @abstractmethod
    def _chi(self, a: BasicCell, b: BasicCell, c: BasicCell, e: BasicCell) -> Cube: ...

    @abstractmethod
    def _mu(self, v: VertArrow, w: VertArrow) -> Cube: ...

    @abstractmethod
    def _delta(self, h: HorArrow, k: HorArrow) -> Cube: ...

    @abstractmethod
    def _tau(self, a: Obj) -> Cube: ...

    # generic checked entry points
    def compose(self, d: str, x: Cell, y: Cell) -> Cell:
        sx, sy = sort_of(x), sort_of(y)
        if sx != sy or d not in sx.dirs:
            raise CompositionError(
                f"{d}-composition is undefined for {sx.label} with {sy.label}", x, y
            )
        tx, sy_ = face(x, d, 1), face(y, d, 0)
        if tx != sy_:
            f1, f0 = sx.face_fields(d)
            raise CompositionError(
                f"{d}-composition mismatch: first {f1} {tx!r} differs from second {f0} {sy_!r}",
                tx,
                sy_,
            )
        self._require(x)
        self._require(y)
        return self._compose(d, x, y)

    def ident(self, d: str, x: Cell) -> Cell:
        s = sort_of(x)
        if d in s.dirs:
            raise CompositionError(f"no {d}-identity on {s.label}", x)
        self._require(x)
        return self._ident(d, x)

    def t_comp(self, x: Cell, y: Cell) -> Cell:
        return self.compose("t", x, y)

    def h_comp(self, x: Cell, y: Cell) -> Cell:
        return self.compose("h", x, y)

    def v_comp(self, x: Cell, y: Cell) -> Cell:
        return self.compose("v", x, y)

    def t_id(self, x: Cell) -> Cell:
        return self.ident("t", x)

    def hid(self, x: Cell) -> Cell:
        return self.ident("h", x)

    def vid(self, x: Cell) -> Cell:
        return self.ident("v", x)

    def _check_weak(self, d: str, *xs: Cell) -> None:
        for x in xs:
            s = sort_of(x)
            if s not in ((Sort.HOR, Sort.BASIC) if d == "h" else (Sort.VERT, Sort.BASIC)):
                raise CompositionError(f"structural {d}-cells are defined on arrows and basic cells, not {s.label}", x)
            self._require(x)
        for x, y in zip(xs, xs[1:]):
            if sort_of(x) != sort_of(y) or face(x, d, 1) != face(y, d, 0):
                raise CompositionError(f"arguments are not {d}-composable", x, y)

    def structural(self, op: str, d: str, *args: Cell) -> Cell:
        """Dispatch ``op`` in :data:`STRUCTURAL` for weak direction ``d``."""
        arity = 3 if op.startswith("kappa") else 1
        if len(args) != arity or d not in ("h", "v"):
            raise CompositionError(f"{op}_{d} takes {arity} argument(s)")
        self._check_weak(d, *args)
        return getattr(self, "_" + op)(d, *args)

    def kappa_h(self, x, y, z):
        return self.structural("kappa", "h", x, y, z)

    def kappa_h_inv(self, x, y, z):
        return self.structural("kappa_inv", "h", x, y, z)

    def lambda_h(self, x):
        return self.structural("lambda", "h", x)

    def lambda_h_inv(self, x):
        return self.structural("lambda_inv", "h", x)

    def rho_h(self, x):
        return self.structural("rho", "h", x)

    def rho_h_inv(self, x):
        return self.structural("rho_inv", "h", x)

    def kappa_v(self, x, y, z):
        return self.structural("kappa", "v", x, y, z)

    def kappa_v_inv(self, x, y, z):
        return self.structural("kappa_inv", "v", x, y, z)

    def lambda_v(self, x):
        return self.structural("lambda", "v", x)

    def lambda_v_inv(self, x):
        return self.structural("lambda_inv", "v", x)

    def rho_v(self, x):
        return self.structural("rho", "v", x)

    def rho_v_inv(self, x):
        return self.structural("rho_inv", "v", x)

    def chi(self, a: BasicCell, b: BasicCell, c: BasicCell, e: BasicCell) -> Cube:
        for x in (a, b, c, e):
            if sort_of(x) != Sort.BASIC:
                raise CompositionError(f"chi takes basic cells, not {sort_of(x).label}", x)
            self._require(x)
        pairs = ((a, b, "h"), (c, e, "h"), (a, c, "v"), (b, e, "v"))
        for x, y, d in pairs:
            if face(x, d, 1) != face(y, d, 0):
                raise CompositionError(f"chi arguments are not {d}-composable", x, y)
        return self._chi(a, b, c, e)

    def mu(self, v: VertArrow, w: VertArrow) -> Cube:
        for x in (v, w):
            if sort_of(x) != Sort.VERT:
                raise CompositionError(f"mu takes vertical arrows, not {sort_of(x).label}", x)
            self._require(x)
        if v.tgt != w.src:
            raise CompositionError("mu arguments are not vertically composable", v.tgt, w.src)
        return self._mu(v, w)

    def delta(self, h: HorArrow, k: HorArrow) -> Cube:
        for x in (h, k):
            if sort_of(x) != Sort.HOR:
                raise CompositionError(f"delta takes horizontal arrows, not {sort_of(x).label}", x)
            self._require(x)
        if h.tgt != k.src:
            raise CompositionError("delta arguments are not horizontally composable", h.tgt, k.src)
        return self._delta(h, k)

    def tau(self, a: Obj) -> Cube:
        if sort_of(a) != Sort.OBJ:
            raise CompositionError(f"tau takes an object, not {sort_of(a).label}", a)
        self._require(a)
        return self._tau(a)

    def interchanger(self, op: str, *args: Cell) -> Cube:
        return getattr(self, op)(*args)

    # names used in prose and the CLI
    def hid_obj(self, a: Obj) -> HorArrow:
        return self.hid(a)

    def vid_obj(self, a: Obj) -> VertArrow:
        return self.vid(a)

    def hid_trans(self, f: TransArrow) -> HorCell:
        return self.hid(f)

    def vid_trans(self, f: TransArrow) -> VertCell:
        return self.vid(f)

    def hid_vert(self, v: VertArrow) -> BasicCell:
        return self.hid(v)

    def vid_hor(self, h: HorArrow) -> BasicCell:
        return self.vid(h)

    def hid_vcell(self, psi: VertCell) -> Cube:
        return self.hid(psi)

    def vid_hcell(self, phi: HorCell) -> Cube:
        return self.vid(phi)

    assoc_h = kappa_h
    unit_l_h = lambda_h
    unit_r_h = rho_h
    assoc_v = kappa_v
    unit_l_v = lambda_v
    unit_r_v = rho_v

    def describe(self) -> str:
        return self.name


# -- expected boundaries -------------------------------------------------------


def compose_frame(I: Intercategory, d: str, x: Cell, y: Cell) -> dict:
    """Faces of the ``d``-composite of ``x`` and ``y``."""
    s = sort_of(x)
    out = {(d, 0): face(x, d, 0), (d, 1): face(y, d, 1)}
    for e in s.dirs:
        if e != d:
            for end in (0, 1):
                out[(e, end)] = I.compose(d, face(x, e, end), face(y, e, end))
    return out


def ident_frame(I: Intercategory, d: str, x: Cell) -> dict:
    """Faces of the ``d``-identity on ``x``."""
    out = {(d, 0): x, (d, 1): x}
    for e in sort_of(x).dirs:
        for end in (0, 1):
            out[(e, end)] = I.ident(d, face(x, e, end))
    return out


def structural_frame(I: Intercategory, op: str, d: str, args: Sequence[Cell]) -> dict:
    """Faces of a structural cell ``op`` in weak direction ``d``.

    The result is transversal from source composite to target composite, has
    transversal identities as its ``d``-faces, and is the corresponding
    structural cell of the faces in the remaining direction.
    """
    base = op.removesuffix("_inv")
    x = args[0]
    if base == "kappa":
        a, b, c = args
        src = I.compose(d, a, I.compose(d, b, c))
        tgt = I.compose(d, I.compose(d, a, b), c)
        ends = (face(a, d, 0), face(c, d, 1))
    elif base == "lambda":
        src = I.compose(d, I.ident(d, face(x, d, 0)), x)
        tgt = x
        ends = (face(x, d, 0), face(x, d, 1))
    elif base == "rho":
        src = I.compose(d, x, I.ident(d, face(x, d, 1)))
        tgt = x
        ends = (face(x, d, 0), face(x, d, 1))
    else:
        raise ValueError(op)
    if op.endswith("_inv"):
        src, tgt = tgt, src
    out = {("t", 0): src, ("t", 1): tgt, (d, 0): I.t_id(ends[0]), (d, 1): I.t_id(ends[1])}
    for e in sort_of(x).dirs:
        if e != d:
            for end in (0, 1):
                out[(e, end)] = I.structural(op, d, *(face(a, e, end) for a in args))
    return out


def interchanger_ends(I: Intercategory, op: str, args: Sequence[Cell]) -> tuple[Cell, Cell]:
    """Source and target basic cells of an interchanger, per the right chirality."""
    if op == "chi":
        a, b, c, e = args
        return (
            I.v_comp(I.h_comp(a, b), I.h_comp(c, e)),
            I.h_comp(I.v_comp(a, c), I.v_comp(b, e)),
        )
    if op == "mu":
        v, w = args
        return I.v_comp(I.hid(v), I.hid(w)), I.hid(I.v_comp(v, w))
    if op == "delta":
        h, k = args
        return I.vid(I.h_comp(h, k)), I.h_comp(I.vid(h), I.vid(k))
    if op == "tau":
        (a,) = args
        return I.vid(I.hid(a)), I.hid(I.vid(a))
    raise ValueError(op)


def oriented_ends(I: Intercategory, op: str, args: Sequence[Cell]) -> tuple[Cell, Cell]:
    """Like :func:`interchanger_ends`, reversed for left intercategories."""
    back, front = interchanger_ends(I, op, args)
    if I.chirality is Chirality.LEFT:
        return front, back
    return back, front


def special_frame(I: Intercategory, back: BasicCell, front: BasicCell) -> dict:
    """Faces of a transversally special cube from ``back`` to ``front``."""
    out = {("t", 0): back, ("t", 1): front}
    for e in "hv":
        for end in (0, 1):
            out[(e, end)] = I.t_id(face(back, e, end))
    return out


def interchanger_frame(I: Intercategory, op: str, args: Sequence[Cell]) -> dict:
    back, front = oriented_ends(I, op, args)
    return special_frame(I, back, front)


def cells_iter(I: Intercategory) -> Iterator[tuple[Sort, Cell]]:
    for s in Sort:
        for x in I.cells(s):
            yield s, x

"""Skeletal finite sets and functions.

A finite set is an initial segment ``{0, ..., n-1}`` of the naturals and a
function is its table of values.  Products, coproducts, pullbacks and
pushouts are computed with fixed enumeration orders so that two
constructions of "the same" limit give literally equal encodings:

* products and pullbacks list pairs ``(a, b)`` in lexicographic order;
* coproducts list the left summand first, then the right one;
* pushouts number equivalence classes of the tagged disjoint union by the
  position of their least tagged element.

>>> two, three = FinSet(2), FinSet(3)
>>> product(two, three).apex
FinSet(size=6)
>>> pushout(FinFun.from_table([0], 2), FinFun.from_table([0], 2)).apex
FinSet(size=3)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class FinSetError(ValueError):
    """Raised for ill-typed finite-set data (bad tables, mismatched ends)."""


class MediationError(FinSetError):
    """A cone or cocone does not commute with the diagram it is offered to."""

    def __init__(self, message: str, element: object = None):
        super().__init__(message)
        self.element = element


@dataclass(frozen=True, slots=True)
class FinSet:
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise FinSetError(f"negative finite set size {self.size}")

    def __iter__(self):
        return iter(range(self.size))

    def __len__(self):
        return self.size


@dataclass(frozen=True, slots=True)
class FinFun:
    dom: FinSet
    cod: FinSet
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.size:
            raise FinSetError(
                f"table of length {len(self.table)} for domain of size {self.dom.size}"
            )
        for x, y in enumerate(self.table):
            if not 0 <= y < self.cod.size:
                raise FinSetError(f"value {y} at {x} outside codomain of size {self.cod.size}")

    @classmethod
    def from_table(cls, table: Iterable[int], cod: int | FinSet) -> FinFun:
        table = tuple(table)
        cod = cod if isinstance(cod, FinSet) else FinSet(cod)
        return cls(FinSet(len(table)), cod, table)

    def __call__(self, x: int) -> int:
        return self.table[x]

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> FinFun:
        if not self.is_bijective():
            raise FinSetError("only bijections have inverses")
        inv = [0] * self.cod.size
        for x, y in enumerate(self.table):
            inv[y] = x
        return FinFun(self.cod, self.dom, tuple(inv))


def identity(X: FinSet | int) -> FinFun:
    X = X if isinstance(X, FinSet) else FinSet(X)
    return FinFun(X, X, tuple(range(X.size)))


def compose(f: FinFun, g: FinFun) -> FinFun:
    """``g`` after ``f`` (diagrammatic order: first ``f``, then ``g``)."""
    if f.cod != g.dom:
        raise FinSetError(f"cannot compose {f.dom.size}->{f.cod.size} with {g.dom.size}->{g.cod.size}")
    gt = g.table
    return FinFun(f.dom, g.cod, tuple(gt[y] for y in f.table))


def equal(f: FinFun, g: FinFun) -> bool:
    return f == g


def terminal_map(X: FinSet) -> FinFun:
    return FinFun(X, FinSet(1), (0,) * X.size)


def initial_map(X: FinSet) -> FinFun:
    return FinFun(FinSet(0), X, ())


@dataclass(frozen=True)
class LimitResult:
    """A chosen (co)limit of a two-legged diagram.

    ``kind`` is ``"pullback"`` or ``"pushout"``; ``diagram`` holds the two
    input maps.  For pullbacks ``pairs`` lists the apex elements as pairs of
    elements of the two domains; pushouts leave it empty.
    """

    kind: str
    apex: FinSet
    legs: tuple[FinFun, FinFun]
    diagram: tuple[FinFun, FinFun]
    pairs: tuple[tuple[int, int], ...] = ()
    _index: dict = field(default_factory=dict, repr=False, compare=False)


def pullback(f: FinFun, g: FinFun) -> LimitResult:
    if f.cod != g.cod:
        raise FinSetError(
            f"pullback of maps into different sets ({f.cod.size} vs {g.cod.size})"
        )
    by_value: dict[int, list[int]] = {}
    for b, y in enumerate(g.table):
        by_value.setdefault(y, []).append(b)
    pairs = tuple((a, b) for a, y in enumerate(f.table) for b in by_value.get(y, ()))
    apex = FinSet(len(pairs))
    p1 = FinFun(apex, f.dom, tuple(a for a, _ in pairs))
    p2 = FinFun(apex, g.dom, tuple(b for _, b in pairs))
    index = {pair: i for i, pair in enumerate(pairs)}
    return LimitResult("pullback", apex, (p1, p2), (f, g), pairs, index)


def pushout(f: FinFun, g: FinFun) -> LimitResult:
    if f.dom != g.dom:
        raise FinSetError(
            f"pushout of maps out of different sets ({f.dom.size} vs {g.dom.size})"
        )
    n_left = f.cod.size
    parent = list(range(n_left + g.cod.size))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for x in range(f.dom.size):
        a, b = find(f.table[x]), find(n_left + g.table[x])
        if a != b:
            # keep the smaller tagged element as root
            if a < b:
                parent[b] = a
            else:
                parent[a] = b
    numbering: dict[int, int] = {}
    cls = []
    for t in range(len(parent)):
        root = find(t)
        if root not in numbering:
            numbering[root] = len(numbering)
        cls.append(numbering[root])
    apex = FinSet(len(numbering))
    q1 = FinFun(f.cod, apex, tuple(cls[:n_left]))
    q2 = FinFun(g.cod, apex, tuple(cls[n_left:]))
    return LimitResult("pushout", apex, (q1, q2), (f, g))


def product(X: FinSet, Y: FinSet) -> LimitResult:
    one = FinSet(1)
    return pullback(FinFun(X, one, (0,) * X.size), FinFun(Y, one, (0,) * Y.size))


def coproduct(X: FinSet, Y: FinSet) -> LimitResult:
    return pushout(initial_map(X), initial_map(Y))


def pullback_mediate(L: LimitResult, cone: Sequence[FinFun]) -> FinFun:
    """The unique map ``W -> apex`` whose composites with the legs are ``cone``."""
    if L.kind != "pullback":
        raise FinSetError("pullback_mediate needs a pullback")
    u, v = cone
    f, g = L.diagram
    if u.dom != v.dom or u.cod != f.dom or v.cod != g.dom:
        raise FinSetError("cone legs do not match the pullback diagram")
    index = L._index
    table = []
    for w in range(u.dom.size):
        a, b = u.table[w], v.table[w]
        if f.table[a] != g.table[b]:
            raise MediationError(f"cone does not commute at element {w}", w)
        table.append(index[(a, b)])
    return FinFun(u.dom, L.apex, tuple(table))


def pushout_mediate(L: LimitResult, cocone: Sequence[FinFun]) -> FinFun:
    """The unique map ``apex -> W`` whose composites with the legs are ``cocone``."""
    if L.kind != "pushout":
        raise FinSetError("pushout_mediate needs a pushout")
    u, v = cocone
    q1, q2 = L.legs
    if u.cod != v.cod or u.dom != q1.dom or v.dom != q2.dom:
        raise FinSetError("cocone legs do not match the pushout diagram")
    table: list[int | None] = [None] * L.apex.size
    for leg, m, side in ((q1, u, 0), (q2, v, 1)):
        for x in range(leg.dom.size):
            c = leg.table[x]
            y = m.table[x]
            if table[c] is None:
                table[c] = y
            elif table[c] != y:
                raise MediationError(
                    f"cocone does not commute: class {c} sent to {table[c]} and {y}",
                    (side, x),
                )
    return FinFun(L.apex, u.cod, tuple(table))  # type: ignore[arg-type]


def all_functions(X: FinSet, Y: FinSet):
    """Every function ``X -> Y`` in lexicographic order of tables."""
    for table in itertools.product(range(Y.size), repeat=X.size):
        yield FinFun(X, Y, table)

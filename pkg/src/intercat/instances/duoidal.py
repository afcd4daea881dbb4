"""The one-object intercategory of finite sets under product and coproduct.

Basic cells are finite sets, cubes are functions between them, and every
lower sort is a single identity cell.  Horizontal composition is the
cartesian product (pairs in lexicographic order), vertical composition is
the disjoint union (left summand first), and the interchanger

    chi : (a x b) + (c x d) -> (a + c) x (b + d)

sends ``inl(i, j)`` to ``(inl i, inl j)`` and ``inr(k, l)`` to
``(inr k, inr l)``.
"""

from __future__ import annotations

from ..finset import FinFun, FinSet, all_functions, compose, identity
from ..model import (
    BasicCell,
    ConfigurationError,
    Cube,
    HorArrow,
    HorCell,
    Intercategory,
    Obj,
    Sort,
    TransArrow,
    VertArrow,
    VertCell,
    compose_frame,
    ident_frame,
    interchanger_frame,
    make_cell,
    sort_of,
    structural_frame,
)

POINT = Obj("*")
T1 = TransArrow(POINT, POINT, "*")
H1 = HorArrow(POINT, POINT, "*")
V1 = VertArrow(POINT, POINT, "*")
HC1 = HorCell(H1, H1, T1, T1, "*")
VC1 = VertCell(V1, V1, T1, T1, "*")

_SINGLETONS = {
    Sort.OBJ: POINT,
    Sort.TRANS: T1,
    Sort.HOR: H1,
    Sort.VERT: V1,
    Sort.HCELL: HC1,
    Sort.VCELL: VC1,
}


def basic(n: int) -> BasicCell:
    return BasicCell(H1, H1, V1, V1, n)


def cube(f: FinFun) -> Cube:
    return Cube(basic(f.dom.size), basic(f.cod.size), HC1, HC1, VC1, VC1, f)


def product_map(f: FinFun, g: FinFun) -> FinFun:
    m1, m2 = g.dom.size, g.cod.size
    table = tuple(f.table[i] * m2 + g.table[j] for i in range(f.dom.size) for j in range(m1))
    return FinFun(FinSet(f.dom.size * m1), FinSet(f.cod.size * m2), table)


def sum_map(f: FinFun, g: FinFun) -> FinFun:
    n2 = f.cod.size
    table = f.table + tuple(n2 + y for y in g.table)
    return FinFun(FinSet(f.dom.size + g.dom.size), FinSet(n2 + g.cod.size), table)


def chi_map(a: int, b: int, c: int, d: int) -> FinFun:
    w = b + d
    table = [i * w + j for i in range(a) for j in range(b)]
    table += [(a + k) * w + (b + l) for k in range(c) for l in range(d)]
    return FinFun(FinSet(a * b + c * d), FinSet((a + c) * w), tuple(table))


class DuoidalInstance(Intercategory):
    """Finite sets with ``x`` horizontally and ``+`` vertically.

    ``max_size`` bounds the sets listed by the enumerators; compositions
    are computed for sets of any size.
    """

    def __init__(self, max_size: int = 2):
        if max_size < 1:
            raise ConfigurationError("duoidal instance needs max_size >= 1")
        self.max_size = max_size
        self.name = f"duoidal:{max_size}"
        self._basics = [basic(n) for n in range(max_size + 1)]

    # enumeration
    def cells(self, sort: Sort, **fixed):
        if sort in _SINGLETONS:
            x = _SINGLETONS[sort]
            return [x] if all(getattr(x, k) == v for k, v in fixed.items()) else []
        if sort is Sort.BASIC:
            return [b for b in self._basics if all(getattr(b, k) == v for k, v in fixed.items())]
        back, front = fixed.get("back"), fixed.get("front")
        backs = [back] if back is not None else self._basics
        fronts = [front] if front is not None else self._basics
        out = []
        for b in backs:
            for f in fronts:
                if b.data > self.max_size or f.data > self.max_size:
                    continue
                for fun in all_functions(FinSet(b.data), FinSet(f.data)):
                    c = cube(fun)
                    if all(getattr(c, k) == v for k, v in fixed.items()):
                        out.append(c)
        return out

    def contains(self, x) -> bool:
        s = sort_of(x)
        if s in _SINGLETONS:
            return x == _SINGLETONS[s]
        if s is Sort.BASIC:
            return x.top == H1 and x.left == V1 and x.bottom == H1 and x.right == V1 and (
                isinstance(x.data, int) and x.data >= 0
            )
        return (
            isinstance(x.data, FinFun)
            and x.data.dom.size == x.back.data
            and x.data.cod.size == x.front.data
            and x.top == HC1 and x.bottom == HC1 and x.left == VC1 and x.right == VC1
        )

    def cell_id(self, x) -> str:
        s = sort_of(x)
        if s in _SINGLETONS:
            return f"{s.name.lower()}:*"
        if s is Sort.BASIC:
            return f"set:{x.data}"
        f = x.data
        return f"fun:{f.dom.size}->{f.cod.size}:[{','.join(map(str, f.table))}]"

    # operations
    def _compose(self, d, x, y):
        s = sort_of(x)
        if s in _SINGLETONS:
            return x
        if s is Sort.BASIC:
            return basic(x.data * y.data if d == "h" else x.data + y.data)
        if d == "t":
            data = compose(x.data, y.data)
        elif d == "h":
            data = product_map(x.data, y.data)
        else:
            data = sum_map(x.data, y.data)
        return make_cell(Sort.CUBE, compose_frame(self, d, x, y), data)

    def _ident(self, d, x):
        s = sort_of(x).with_(d)
        if s in _SINGLETONS:
            return _SINGLETONS[s]
        if s is Sort.BASIC:
            return basic(1 if d == "h" else 0)
        # cube: t-identity on a set, or the h/v identity on the point cell
        if d == "t":
            data = identity(x.data)
        else:
            data = identity(1 if d == "h" else 0)
        return make_cell(Sort.CUBE, ident_frame(self, d, x), data)

    def _structural(self, op, d, *args):
        s = sort_of(args[0]).with_("t")
        if s is not Sort.CUBE:
            return _SINGLETONS[s]
        frame = structural_frame(self, op, d, args)
        # every re-association and unit map is the identity under the encodings
        return make_cell(Sort.CUBE, frame, identity(frame[("t", 0)].data))

    def _kappa(self, d, x, y, z):
        return self._structural("kappa", d, x, y, z)

    def _kappa_inv(self, d, x, y, z):
        return self._structural("kappa_inv", d, x, y, z)

    def _lambda(self, d, x):
        return self._structural("lambda", d, x)

    def _lambda_inv(self, d, x):
        return self._structural("lambda_inv", d, x)

    def _rho(self, d, x):
        return self._structural("rho", d, x)

    def _rho_inv(self, d, x):
        return self._structural("rho_inv", d, x)

    def _chi(self, a, b, c, e):
        data = chi_map(a.data, b.data, c.data, e.data)
        return make_cell(Sort.CUBE, interchanger_frame(self, "chi", (a, b, c, e)), data)

    def _mu(self, v, w):
        return make_cell(Sort.CUBE, interchanger_frame(self, "mu", (v, w)), FinFun.from_table((0, 0), 1))

    def _delta(self, h, k):
        return make_cell(Sort.CUBE, interchanger_frame(self, "delta", (h, k)), FinFun.from_table((), 0))

    def _tau(self, a):
        return make_cell(Sort.CUBE, interchanger_frame(self, "tau", (a,)), FinFun.from_table((), 1))


def build_duoidal(max_size: int = 2) -> DuoidalInstance:
    return DuoidalInstance(max_size)


__all__ = [
    "DuoidalInstance",
    "build_duoidal",
    "basic",
    "cube",
    "chi_map",
    "product_map",
    "sum_map",
]

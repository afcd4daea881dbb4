"""Spans of cospans over finite sets.

Layout of a basic cell (spans run horizontally, cospans vertically)::

    A <-- S --> B          top span
    |     |     |
    v     v     v
    X <-- Y --> Z          the center: a span X <- Y -> Z
    ^     ^     ^
    |     |     |
    A'<-- S'--> B'         bottom span

The left and right columns ``A -> X <- A'`` and ``B -> Z <- B'`` are the
vertical cospans, and the middle column ``S -> Y <- S'`` is a cospan too.
Horizontal composition takes pullbacks levelwise (of the top row, the
center row and the bottom row) and vertical composition takes pushouts
levelwise.  Transversal arrows are functions and every higher cell is a
family of functions commuting with all legs; a cube is stored by its map
of centers, the rest being its faces.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterator

from ..finset import (
    FinFun,
    FinSet,
    LimitResult,
    all_functions,
    compose,
    identity,
    pullback,
    pullback_mediate,
    pushout,
    pushout_mediate,
)
from ..model import (
    ConfigurationError,
    Intercategory,
    Obj,
    Sort,
    compose_frame,
    face,
    ident_frame,
    interchanger_frame,
    make_cell,
    sort_of,
    structural_frame,
)


@dataclass(frozen=True, slots=True)
class Span:
    apex: FinSet
    left: FinFun
    right: FinFun


@dataclass(frozen=True, slots=True)
class Cospan:
    apex: FinSet
    left: FinFun
    right: FinFun


@dataclass(frozen=True, slots=True)
class Center:
    """The middle of a basic cell: ``X <- Y -> Z`` and ``S -> Y <- S'``."""

    apex: FinSet
    to_left: FinFun
    to_right: FinFun
    from_top: FinFun
    from_bottom: FinFun

    @property
    def span(self) -> Span:
        return Span(self.apex, self.to_left, self.to_right)

    @property
    def cospan(self) -> Cospan:
        return Cospan(self.apex, self.from_top, self.from_bottom)


# -- span and cospan calculus ----------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def span_comp(s: Span, t: Span) -> tuple[Span, LimitResult]:
    P = pullback(s.right, t.left)
    p1, p2 = P.legs
    return Span(P.apex, compose(p1, s.left), compose(p2, t.right)), P


@lru_cache(maxsize=1 << 16)
def cospan_comp(c: Cospan, d: Cospan) -> tuple[Cospan, LimitResult]:
    Q = pushout(c.right, d.left)
    q1, q2 = Q.legs
    return Cospan(Q.apex, compose(c.left, q1), compose(d.right, q2)), Q


def span_id(A: FinSet) -> Span:
    return Span(A, identity(A), identity(A))


def cospan_id(A: FinSet) -> Cospan:
    return Cospan(A, identity(A), identity(A))


def span_kappa(h: Span, k: Span, l: Span, inverse: bool = False) -> FinFun:
    """Apex map of ``h|(k|l) -> (h|k)|l`` (or back), by mediation."""
    hk, P_hk = span_comp(h, k)
    kl, P_kl = span_comp(k, l)
    _, P_src = span_comp(h, kl)
    _, P_tgt = span_comp(hk, l)
    if not inverse:
        a, e = P_src.legs
        u = pullback_mediate(P_hk, (a, compose(e, P_kl.legs[0])))
        return pullback_mediate(P_tgt, (u, compose(e, P_kl.legs[1])))
    u, c = P_tgt.legs
    w = pullback_mediate(P_kl, (compose(u, P_hk.legs[1]), c))
    return pullback_mediate(P_src, (compose(u, P_hk.legs[0]), w))


def span_lambda(s: Span, inverse: bool = False) -> FinFun:
    """Apex map of ``id|s -> s`` (or back)."""
    _, P = span_comp(span_id(s.left.cod), s)
    if not inverse:
        return P.legs[1]
    return pullback_mediate(P, (s.left, identity(s.apex)))


def span_rho(s: Span, inverse: bool = False) -> FinFun:
    """Apex map of ``s|id -> s`` (or back)."""
    _, P = span_comp(s, span_id(s.right.cod))
    if not inverse:
        return P.legs[0]
    return pullback_mediate(P, (identity(s.apex), s.right))


def cospan_kappa(c1: Cospan, c2: Cospan, c3: Cospan, inverse: bool = False) -> FinFun:
    """Apex map of ``c1/(c2/c3) -> (c1/c2)/c3`` (or back)."""
    c12, Q12 = cospan_comp(c1, c2)
    c23, Q23 = cospan_comp(c2, c3)
    _, Q_src = cospan_comp(c1, c23)
    _, Q_tgt = cospan_comp(c12, c3)
    if not inverse:
        t1, t2 = Q_tgt.legs
        w = pushout_mediate(Q23, (compose(Q12.legs[1], t1), t2))
        return pushout_mediate(Q_src, (compose(Q12.legs[0], t1), w))
    s1, s2 = Q_src.legs
    u = pushout_mediate(Q12, (s1, compose(Q23.legs[0], s2)))
    return pushout_mediate(Q_tgt, (u, compose(Q23.legs[1], s2)))


def cospan_lambda(c: Cospan, inverse: bool = False) -> FinFun:
    """Apex map of ``id/c -> c`` (or back)."""
    _, Q = cospan_comp(cospan_id(c.left.dom), c)
    if not inverse:
        return pushout_mediate(Q, (c.left, identity(c.apex)))
    return Q.legs[1]


def cospan_rho(c: Cospan, inverse: bool = False) -> FinFun:
    """Apex map of ``c/id -> c`` (or back)."""
    _, Q = cospan_comp(c, cospan_id(c.right.dom))
    if not inverse:
        return pushout_mediate(Q, (identity(c.apex), c.right))
    return Q.legs[0]


# -- diagram checks ------------------------------------------------------------------


def _commutes(f: FinFun, g: FinFun, h: FinFun, k: FinFun) -> bool:
    """``f ; g == h ; k``."""
    return compose(f, g) == compose(h, k)


def diagram_problems(x) -> list[str]:
    """Shape and commutativity problems of the payload of ``x`` (not of its faces)."""
    s = sort_of(x)
    d = x.data
    try:
        if s is Sort.OBJ:
            return [] if isinstance(d, FinSet) else ["object payload is not a finite set"]
        if s is Sort.TRANS:
            ok = isinstance(d, FinFun) and d.dom == x.src.data and d.cod == x.tgt.data
            return [] if ok else ["transversal arrow is not a function src -> tgt"]
        if s is Sort.HOR:
            ok = (
                isinstance(d, Span) and d.left.dom == d.apex == d.right.dom
                and d.left.cod == x.src.data and d.right.cod == x.tgt.data
            )
            return [] if ok else ["horizontal arrow is not a span src <- S -> tgt"]
        if s is Sort.VERT:
            ok = (
                isinstance(d, Cospan) and d.left.cod == d.apex == d.right.cod
                and d.left.dom == x.src.data and d.right.dom == x.tgt.data
            )
            return [] if ok else ["vertical arrow is not a cospan src -> C <- tgt"]
        if s is Sort.HCELL:
            t, b = x.top.data, x.bottom.data
            if not (isinstance(d, FinFun) and d.dom == t.apex and d.cod == b.apex):
                return ["horizontal cell payload is not a map of apexes"]
            out = []
            if not _commutes(d, b.left, t.left, x.left.data):
                out.append("horizontal cell does not commute with its left leg")
            if not _commutes(d, b.right, t.right, x.right.data):
                out.append("horizontal cell does not commute with its right leg")
            return out
        if s is Sort.VCELL:
            l, r = x.left.data, x.right.data
            if not (isinstance(d, FinFun) and d.dom == l.apex and d.cod == r.apex):
                return ["vertical cell payload is not a map of apexes"]
            out = []
            if not _commutes(l.left, d, x.top.data, r.left):
                out.append("vertical cell does not commute with its top leg")
            if not _commutes(l.right, d, x.bottom.data, r.right):
                out.append("vertical cell does not commute with its bottom leg")
            return out
        if s is Sort.BASIC:
            if not isinstance(d, Center):
                return ["basic cell payload is not a center"]
            t, b, l, r = x.top.data, x.bottom.data, x.left.data, x.right.data
            shapes = (
                d.to_left.dom == d.apex == d.to_right.dom
                and d.from_top.cod == d.apex == d.from_bottom.cod
                and d.to_left.cod == l.apex and d.to_right.cod == r.apex
                and d.from_top.dom == t.apex and d.from_bottom.dom == b.apex
            )
            if not shapes:
                return ["basic cell center has the wrong shape"]
            out = []
            for name, ok in (
                ("top-left", _commutes(d.from_top, d.to_left, t.left, l.left)),
                ("top-right", _commutes(d.from_top, d.to_right, t.right, r.left)),
                ("bottom-left", _commutes(d.from_bottom, d.to_left, b.left, l.right)),
                ("bottom-right", _commutes(d.from_bottom, d.to_right, b.right, r.right)),
            ):
                if not ok:
                    out.append(f"basic cell {name} square does not commute")
            return out
        if s is Sort.CUBE:
            bk, fr = x.back.data, x.front.data
            if not (isinstance(d, FinFun) and d.dom == bk.apex and d.cod == fr.apex):
                return ["cube payload is not a map of centers"]
            out = []
            for name, ok in (
                ("top", _commutes(bk.from_top, d, x.top.data, fr.from_top)),
                ("bottom", _commutes(bk.from_bottom, d, x.bottom.data, fr.from_bottom)),
                ("left", _commutes(d, fr.to_left, bk.to_left, x.left.data)),
                ("right", _commutes(d, fr.to_right, bk.to_right, x.right.data)),
            ):
                if not ok:
                    out.append(f"cube center does not commute with its {name} face")
            return out
    except Exception as exc:  # malformed payloads of the wrong shape
        return [f"malformed payload: {exc}"]
    return []


# -- map solving for the enumerators ---------------------------------------------------


def _allowed(n: int, m: int, forced: dict[int, int], admissible) -> list[list[int]] | None:
    out = []
    for x in range(n):
        if x in forced:
            y = forced[x]
            cands = [y] if admissible(x, y) else []
        else:
            cands = [y for y in range(m) if admissible(x, y)]
        if not cands:
            return None
        out.append(cands)
    return out


def _force(pairs) -> dict[int, int] | None:
    forced: dict[int, int] = {}
    for x, y in pairs:
        if forced.setdefault(x, y) != y:
            return None
    return forced


def _maps(dom: FinSet, cod: FinSet, forced_pairs=(), admissible=None) -> list[list[int]] | None:
    forced = _force(forced_pairs)
    if forced is None:
        return None
    return _allowed(dom.size, cod.size, forced, admissible or (lambda x, y: True))


class SpanCospanInstance(Intercategory):
    """Spans of cospans of finite sets of size at most ``max_size``.

    Enumerators return at most ``cap`` cells per query, chosen by a seeded
    shuffle of the matching cells, so law checking stays tractable;
    compositions are computed for cells of any size.
    """

    exhaustive = False

    def __init__(self, max_size: int = 2, cap: int = 12, scan: int = 400, seed: int = 0):
        if max_size < 1:
            raise ConfigurationError("span-cospan instance needs max_size >= 1")
        self.max_size = max_size
        self.cap = cap
        self.scan = scan
        self.seed = seed
        self.name = f"span-cospan:{max_size}"
        self._objects = [Obj(FinSet(n)) for n in range(max_size + 1)]
        self._memo: dict = {}
        self._compose_cached = lru_cache(maxsize=1 << 17)(self._compose_impl)
        self._ident_cached = lru_cache(maxsize=1 << 15)(self._ident_impl)

    def contains(self, x) -> bool:
        return not diagram_problems(x)

    # -- compositions --------------------------------------------------------------
    def _compose(self, d, x, y):
        return self._compose_cached(d, x, y)

    def _ident(self, d, x):
        return self._ident_cached(d, x)

    def _compose_impl(self, d, x, y):
        s = sort_of(x)
        frame = compose_frame(self, d, x, y)
        if d == "t":
            return make_cell(s, frame, compose(x.data, y.data))
        if d == "h":
            data = self._h_data(s, x, y)
        else:
            data = self._v_data(s, x, y)
        return make_cell(s, frame, data)

    def _h_data(self, s, x, y):
        if s is Sort.HOR:
            return span_comp(x.data, y.data)[0]
        if s is Sort.HCELL:
            _, Pt = span_comp(x.top.data, y.top.data)
            _, Pb = span_comp(x.bottom.data, y.bottom.data)
            p1, p2 = Pt.legs
            return pullback_mediate(Pb, (compose(p1, x.data), compose(p2, y.data)))
        if s is Sort.BASIC:
            sp, P = span_comp(x.data.span, y.data.span)
            _, Pt = span_comp(x.top.data, y.top.data)
            _, Pb = span_comp(x.bottom.data, y.bottom.data)
            top = pullback_mediate(
                P, (compose(Pt.legs[0], x.data.from_top), compose(Pt.legs[1], y.data.from_top))
            )
            bottom = pullback_mediate(
                P, (compose(Pb.legs[0], x.data.from_bottom), compose(Pb.legs[1], y.data.from_bottom))
            )
            return Center(sp.apex, sp.left, sp.right, top, bottom)
        # cube
        _, Pb = span_comp(x.back.data.span, y.back.data.span)
        _, Pf = span_comp(x.front.data.span, y.front.data.span)
        return pullback_mediate(Pf, (compose(Pb.legs[0], x.data), compose(Pb.legs[1], y.data)))

    def _v_data(self, s, x, y):
        if s is Sort.VERT:
            return cospan_comp(x.data, y.data)[0]
        if s is Sort.VCELL:
            _, Ql = cospan_comp(x.left.data, y.left.data)
            _, Qr = cospan_comp(x.right.data, y.right.data)
            q1, q2 = Qr.legs
            return pushout_mediate(Ql, (compose(x.data, q1), compose(y.data, q2)))
        if s is Sort.BASIC:
            co, Q = cospan_comp(x.data.cospan, y.data.cospan)
            _, Ql = cospan_comp(x.left.data, y.left.data)
            _, Qr = cospan_comp(x.right.data, y.right.data)
            left = pushout_mediate(
                Q, (compose(x.data.to_left, Ql.legs[0]), compose(y.data.to_left, Ql.legs[1]))
            )
            right = pushout_mediate(
                Q, (compose(x.data.to_right, Qr.legs[0]), compose(y.data.to_right, Qr.legs[1]))
            )
            return Center(co.apex, left, right, co.left, co.right)
        _, Qb = cospan_comp(x.back.data.cospan, y.back.data.cospan)
        _, Qf = cospan_comp(x.front.data.cospan, y.front.data.cospan)
        return pushout_mediate(Qb, (compose(x.data, Qf.legs[0]), compose(y.data, Qf.legs[1])))

    def _ident_impl(self, d, x):
        s = sort_of(x)
        frame = ident_frame(self, d, x)
        r = s.with_(d)
        if d == "t":
            carrier = {
                Sort.OBJ: lambda: x.data,
                Sort.HOR: lambda: x.data.apex,
                Sort.VERT: lambda: x.data.apex,
                Sort.BASIC: lambda: x.data.apex,
            }[s]()
            return make_cell(r, frame, identity(carrier))
        if s is Sort.OBJ:
            return make_cell(r, frame, span_id(x.data) if d == "h" else cospan_id(x.data))
        if s is Sort.TRANS:
            return make_cell(r, frame, x.data)
        if s is Sort.VERT:  # horizontal identity on a cospan
            c = x.data
            return make_cell(r, frame, Center(c.apex, identity(c.apex), identity(c.apex), c.left, c.right))
        if s is Sort.HOR:  # vertical identity on a span
            sp = x.data
            return make_cell(r, frame, Center(sp.apex, sp.left, sp.right, identity(sp.apex), identity(sp.apex)))
        # identity cube on a vertical or horizontal cell: the apex map becomes the center map
        return make_cell(r, frame, x.data)

    # -- structural cells ------------------------------------------------------------
    def _structural(self, op, d, args):
        inverse = op.endswith("_inv")
        base = op.removesuffix("_inv")
        s = sort_of(args[0])
        if d == "h":
            pieces = [a.data if s is Sort.HOR else a.data.span for a in args]
            fn = {"kappa": span_kappa, "lambda": span_lambda, "rho": span_rho}[base]
        else:
            pieces = [a.data if s is Sort.VERT else a.data.cospan for a in args]
            fn = {"kappa": cospan_kappa, "lambda": cospan_lambda, "rho": cospan_rho}[base]
        data = fn(*pieces, inverse=inverse)
        return make_cell(s.with_("t"), structural_frame(self, op, d, args), data)

    def _kappa(self, d, x, y, z):
        return self._structural("kappa", d, (x, y, z))

    def _kappa_inv(self, d, x, y, z):
        return self._structural("kappa_inv", d, (x, y, z))

    def _lambda(self, d, x):
        return self._structural("lambda", d, (x,))

    def _lambda_inv(self, d, x):
        return self._structural("lambda_inv", d, (x,))

    def _rho(self, d, x):
        return self._structural("rho", d, (x,))

    def _rho_inv(self, d, x):
        return self._structural("rho_inv", d, (x,))

    # -- interchangers ---------------------------------------------------------------
    def _chi(self, a, b, c, e):
        ab, ce = self.h_comp(a, b), self.h_comp(c, e)
        ac, be = self.v_comp(a, c), self.v_comp(b, e)
        _, P_ab = span_comp(a.data.span, b.data.span)
        _, P_ce = span_comp(c.data.span, e.data.span)
        _, Q_ac = cospan_comp(a.data.cospan, c.data.cospan)
        _, Q_be = cospan_comp(b.data.cospan, e.data.cospan)
        _, Q_src = cospan_comp(ab.data.cospan, ce.data.cospan)
        _, P_tgt = span_comp(ac.data.span, be.data.span)
        upper = pullback_mediate(
            P_tgt, (compose(P_ab.legs[0], Q_ac.legs[0]), compose(P_ab.legs[1], Q_be.legs[0]))
        )
        lower = pullback_mediate(
            P_tgt, (compose(P_ce.legs[0], Q_ac.legs[1]), compose(P_ce.legs[1], Q_be.legs[1]))
        )
        data = pushout_mediate(Q_src, (upper, lower))
        return make_cell(Sort.CUBE, interchanger_frame(self, "chi", (a, b, c, e)), data)

    def _mu(self, v, w):
        _, Q_src = cospan_comp(self.hid(v).data.cospan, self.hid(w).data.cospan)
        _, Q = cospan_comp(v.data, w.data)
        data = pushout_mediate(Q_src, Q.legs)
        return make_cell(Sort.CUBE, interchanger_frame(self, "mu", (v, w)), data)

    def _delta(self, h, k):
        _, P = span_comp(h.data, k.data)
        _, P_tgt = span_comp(self.vid(h).data.span, self.vid(k).data.span)
        data = pullback_mediate(P_tgt, P.legs)
        return make_cell(Sort.CUBE, interchanger_frame(self, "delta", (h, k)), data)

    def _tau(self, a):
        # both centers are the apex of an identity span or cospan on ``a``,
        # and the comparison is the identity of that set
        src = self.vid(self.hid(a)).data
        return make_cell(Sort.CUBE, interchanger_frame(self, "tau", (a,)), identity(src.apex))

    # -- enumeration ----------------------------------------------------------------
    def cells(self, sort: Sort, **fixed):
        key = (sort, tuple(sorted(fixed.items(), key=lambda kv: kv[0])))
        if key not in self._memo:
            self._memo[key] = self._enumerate(sort, fixed)
        return self._memo[key]

    def _rng(self, sort: Sort, fixed: dict) -> random.Random:
        tag = repr((sort.name, sorted(fixed.items(), key=lambda kv: kv[0])))
        return random.Random(zlib.crc32(tag.encode()) ^ self.seed)

    def _enumerate(self, sort: Sort, fixed: dict) -> list:
        if sort is Sort.OBJ:
            return [o for o in self._objects if all(getattr(o, k) == v for k, v in fixed.items())]
        rng = self._rng(sort, fixed)
        found = []
        complete = True
        for x in self._dfs(sort, fixed, rng):
            found.append(x)
            if len(found) >= self.scan:
                complete = False
                break
        if complete:
            if len(found) <= self.cap:
                return found
            keep = sorted(rng.sample(range(len(found)), self.cap))
            return [found[i] for i in keep]
        out, seen = [], set()
        for _ in range(self.cap * 30):
            x = self._random_cell(sort, fixed, rng)
            if x is not None and x not in seen:
                seen.add(x)
                out.append(x)
                if len(out) >= self.cap:
                    break
        return out

    def _face_constraints(self, sort: Sort, d: str, end: int, chosen: dict) -> dict:
        """Faces forced on face ``(d, end)`` by the faces already chosen."""
        fs = sort.without(d)
        out = {}
        for (e, b), y in chosen.items():
            if e != d:
                out[fs.face_fields(e)[b]] = face(y, d, end)
        return out

    def _face_order(self, sort: Sort):
        return [(d, end) for d in sort.dirs for end in (0, 1)]

    def _dfs(self, sort: Sort, fixed: dict, rng: random.Random) -> Iterator:
        order = self._face_order(sort)
        pinned = {}
        for d, end in order:
            name = sort.face_fields(d)[end]
            if name in fixed:
                pinned[(d, end)] = fixed[name]

        def fill(i: int, chosen: dict):
            if i == len(order):
                for data in self._solutions(sort, chosen, rng):
                    yield make_cell(sort, chosen, data)
                return
            key = order[i]
            if key in pinned:
                cons = self._face_constraints(sort, key[0], key[1], chosen)
                y = pinned[key]
                if all(getattr(y, k) == v for k, v in cons.items()):
                    chosen[key] = y
                    yield from fill(i + 1, chosen)
                    del chosen[key]
                return
            cons = self._face_constraints(sort, key[0], key[1], {**pinned, **chosen})
            cands = list(self.cells(sort.without(key[0]), **cons))
            rng.shuffle(cands)
            for y in cands:
                chosen[key] = y
                yield from fill(i + 1, chosen)
                del chosen[key]

        yield from fill(0, {})

    def _random_cell(self, sort: Sort, fixed: dict, rng: random.Random):
        chosen = {}
        pinned = {}
        for d, end in self._face_order(sort):
            name = sort.face_fields(d)[end]
            if name in fixed:
                pinned[(d, end)] = fixed[name]
        for key in self._face_order(sort):
            cons = self._face_constraints(sort, key[0], key[1], {**pinned, **chosen})
            if key in pinned:
                y = pinned[key]
                if not all(getattr(y, k) == v for k, v in cons.items()):
                    return None
            else:
                cands = self.cells(sort.without(key[0]), **cons)
                if not cands:
                    return None
                y = rng.choice(cands)
            chosen[key] = y
        data = self._random_solution(sort, chosen, rng)
        return None if data is None else make_cell(sort, chosen, data)

    # payload solving
    def _spaces(self, sort: Sort, faces: dict):
        """Describe the payloads over ``faces`` as a list of independent choices.

        Returns a list of ``(builder, [choices...])``: pick one option from
        each choice list, then call ``builder``.  ``None`` means no payload.
        """
        n = self.max_size
        f = lambda d, e: faces[(d, e)].data
        if sort is Sort.TRANS:
            A, B = f("t", 0), f("t", 1)
            return [(lambda t: FinFun(A, B, t), [_tables(A, B)])]
        if sort in (Sort.HOR, Sort.VERT):
            d = sort.dirs
            A, B = f(d, 0), f(d, 1)
            out = []
            for k in range(n + 1):
                S = FinSet(k)
                if sort is Sort.HOR:
                    out.append((lambda l, r, S=S: Span(S, FinFun(S, A, l), FinFun(S, B, r)),
                                [_tables(S, A), _tables(S, B)]))
                else:
                    out.append((lambda l, r, S=S: Cospan(S, FinFun(A, S, l), FinFun(B, S, r)),
                                [_tables(A, S), _tables(B, S)]))
            return out
        if sort is Sort.HCELL:
            t, b = f("t", 0), f("t", 1)
            lf, rf = f("h", 0), f("h", 1)
            allowed = _maps(
                t.apex, b.apex,
                admissible=lambda x, y: b.left(y) == lf(t.left(x)) and b.right(y) == rf(t.right(x)),
            )
            return [] if allowed is None else [(lambda *ys: FinFun(t.apex, b.apex, ys), allowed)]
        if sort is Sort.VCELL:
            l, r = f("t", 0), f("t", 1)
            tf, bf = f("v", 0), f("v", 1)
            pairs = [(l.left(a), r.left(tf(a))) for a in range(l.left.dom.size)]
            pairs += [(l.right(a), r.right(bf(a))) for a in range(l.right.dom.size)]
            allowed = _maps(l.apex, r.apex, pairs)
            return [] if allowed is None else [(lambda *ys: FinFun(l.apex, r.apex, ys), allowed)]
        if sort is Sort.BASIC:
            return self._basic_spaces(faces)
        # cube
        bk, fr = f("t", 0), f("t", 1)
        lf, rf = f("h", 0), f("h", 1)
        tf, btf = f("v", 0), f("v", 1)
        pairs = [(bk.from_top(s), fr.from_top(tf(s))) for s in range(bk.from_top.dom.size)]
        pairs += [(bk.from_bottom(s), fr.from_bottom(btf(s))) for s in range(bk.from_bottom.dom.size)]
        allowed = _maps(
            bk.apex, fr.apex, pairs,
            admissible=lambda y, z: fr.to_left(z) == lf(bk.to_left(y)) and fr.to_right(z) == rf(bk.to_right(y)),
        )
        return [] if allowed is None else [(lambda *ys: FinFun(bk.apex, fr.apex, ys), allowed)]

    def _basic_spaces(self, faces: dict):
        top, bottom = faces[("v", 0)].data, faces[("v", 1)].data
        left, right = faces[("h", 0)].data, faces[("h", 1)].data
        X, Z = left.apex, right.apex
        # where the top and bottom apexes must land in X and Z
        top_xz = [(left.left(top.left(s)), right.left(top.right(s))) for s in range(top.apex.size)]
        bot_xz = [(left.right(bottom.left(s)), right.right(bottom.right(s))) for s in range(bottom.apex.size)]
        out = []
        for k in range(self.max_size + 1):
            Y = FinSet(k)
            for yx in _tables(Y, X):
                for yz in _tables(Y, Z):
                    where = {}
                    for y in range(k):
                        where.setdefault((yx[y], yz[y]), []).append(y)
                    tops = [where.get(p, []) for p in top_xz]
                    bots = [where.get(p, []) for p in bot_xz]
                    if any(not c for c in tops) or any(not c for c in bots):
                        continue
                    nt = len(tops)

                    def build(*ys, Y=Y, yx=yx, yz=yz, nt=nt):
                        return Center(
                            Y, FinFun(Y, X, yx), FinFun(Y, Z, yz),
                            FinFun(top.apex, Y, ys[:nt]), FinFun(bottom.apex, Y, ys[nt:]),
                        )

                    out.append((build, tops + bots))
        return out

    def _solutions(self, sort: Sort, faces: dict, rng: random.Random):
        spaces = self._spaces(sort, faces)
        rng.shuffle(spaces)
        for build, choices in spaces:
            for combo in iproduct(*choices):
                yield build(*combo)

    def _random_solution(self, sort: Sort, faces: dict, rng: random.Random):
        spaces = self._spaces(sort, faces)
        if not spaces:
            return None
        build, choices = rng.choice(spaces)
        return build(*(rng.choice(c) for c in choices))


def _tables(A: FinSet, B: FinSet) -> list:
    return [f.table for f in all_functions(A, B)]


def build_span_cospan(max_size: int = 2, **kwargs) -> SpanCospanInstance:
    return SpanCospanInstance(max_size, **kwargs)

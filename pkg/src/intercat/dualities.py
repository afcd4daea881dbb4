"""The eight symmetries of an intercategory, plus transversal reversal.

``dual_h`` reverses the horizontal direction, ``dual_v`` the vertical one
and ``dual_tr`` exchanges horizontal with vertical while reversing the
transversal direction.  All three keep right intercategories right; they
generate a dihedral group of order eight (``h`` and ``v`` commute and
``tr h tr = v``).  :func:`reverse_transversal` reverses only the
transversal direction, which turns a left intercategory into a right one;
the law checker uses it to evaluate left instances.

A dual keeps every payload and only rearranges faces, so applying the
same duality twice gives back literally the same cells.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .model import Cell, Chirality, ConfigurationError, Intercategory, Sort, face, make_cell, sort_of

KINDS = ("h", "v", "tr", "t")

_SWAP_END = {0: 1, 1: 0}


def _source_face(kind: str, d: str, end: int) -> tuple[str, int]:
    """Face of the original cell that becomes face ``(d, end)`` of its dual."""
    if kind == "tr":
        if d == "t":
            return "t", _SWAP_END[end]
        return ("v" if d == "h" else "h"), end
    return d, (_SWAP_END[end] if d == kind else end)


def dual_sort(sort: Sort, kind: str) -> Sort:
    if kind != "tr":
        return sort
    swap = {"h": "v", "v": "h", "t": "t"}
    return Sort("".join(c for c in "thv" if c in {swap[d] for d in sort.dirs}))


@lru_cache(maxsize=200_000)
def transform(x: Cell, kind: str) -> Cell:
    """The dual of a single cell; an involution for every kind."""
    s = dual_sort(sort_of(x), kind)
    faces = {}
    for d in s.dirs:
        for end in (0, 1):
            faces[(d, end)] = transform(face(x, *_source_face(kind, d, end)), kind)
    return make_cell(s, faces, x.data)


def _direction(kind: str, d: str) -> str:
    if kind == "tr" and d != "t":
        return "v" if d == "h" else "h"
    return d


def _reverses(kind: str, d: str) -> bool:
    return d == kind or (kind == "tr" and d == "t")


_INVERSE = {
    "kappa": "kappa_inv", "kappa_inv": "kappa",
    "lambda": "lambda_inv", "lambda_inv": "lambda",
    "rho": "rho_inv", "rho_inv": "rho",
}
_MIRROR = {
    "kappa": "kappa_inv", "kappa_inv": "kappa",
    "lambda": "rho", "rho": "lambda",
    "lambda_inv": "rho_inv", "rho_inv": "lambda_inv",
}


class DualInstance(Intercategory):
    """``base`` seen through one duality; every operation delegates to ``base``."""

    def __init__(self, base: Intercategory, kind: str):
        if kind not in KINDS:
            raise ConfigurationError(f"unknown duality {kind!r}")
        self.base = base
        self.kind = kind
        self.name = f"{kind}({base.name})"
        self.exhaustive = getattr(base, "exhaustive", True)
        if kind == "t":
            self.chirality = Chirality.LEFT if base.chirality is Chirality.RIGHT else Chirality.RIGHT
        else:
            self.chirality = base.chirality

    def f(self, x: Cell) -> Cell:
        return transform(x, self.kind)

    # enumeration
    def cells(self, sort: Sort, **fixed):
        base_sort = dual_sort(sort, self.kind)
        base_fixed = {}
        for d in sort.dirs:
            for end, field in enumerate(sort.face_fields(d)):
                if field in fixed:
                    bd, be = _source_face(self.kind, d, end)
                    base_fixed[base_sort.face_fields(bd)[be]] = self.f(fixed[field])
        return [self.f(x) for x in self.base.cells(base_sort, **base_fixed)]

    def contains(self, x) -> bool:
        return self.base.contains(self.f(x))

    def cell_id(self, x) -> str:
        return self.base.cell_id(self.f(x))

    def cell_label(self, x) -> str:
        return self.base.cell_label(self.f(x))

    # operations
    def _compose(self, d, x, y):
        f, B = self.f, self.base
        if _reverses(self.kind, d):
            x, y = y, x
        return f(B.compose(_direction(self.kind, d), f(x), f(y)))

    def _ident(self, d, x):
        return self.f(self.base.ident(_direction(self.kind, d), self.f(x)))

    def _structural(self, op, d, *args):
        f = self.f
        args = tuple(f(a) for a in args)
        if self.kind in ("tr", "t"):
            op = _INVERSE[op]
        elif d == self.kind:
            op = _MIRROR[op]
            args = args[::-1]
        return f(self.base.structural(op, _direction(self.kind, d), *args))

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
        f, B = self.f, self.base
        a, b, c, e = f(a), f(b), f(c), f(e)
        order = {"h": (b, a, e, c), "v": (c, e, a, b), "tr": (a, c, b, e), "t": (a, b, c, e)}
        return f(B.chi(*order[self.kind]))

    def _mu(self, v, w):
        f, B = self.f, self.base
        if self.kind == "tr":
            return f(B.delta(f(v), f(w)))
        if self.kind == "v":
            return f(B.mu(f(w), f(v)))
        return f(B.mu(f(v), f(w)))

    def _delta(self, h, k):
        f, B = self.f, self.base
        if self.kind == "tr":
            return f(B.mu(f(h), f(k)))
        if self.kind == "h":
            return f(B.delta(f(k), f(h)))
        return f(B.delta(f(h), f(k)))

    def _tau(self, a):
        return self.f(self.base.tau(self.f(a)))


def dual_h(I: Intercategory) -> Intercategory:
    return DualInstance(I, "h")


def dual_v(I: Intercategory) -> Intercategory:
    return DualInstance(I, "v")


def dual_tr(I: Intercategory) -> Intercategory:
    return DualInstance(I, "tr")


def reverse_transversal(I: Intercategory) -> Intercategory:
    return DualInstance(I, "t")


_TOKEN = re.compile(r"tr|h|v|t|id")


def parse_word(word: str) -> list[str]:
    """Split a duality word such as ``"h"``, ``"hv"`` or ``"tr.h"`` into letters."""
    cleaned = word.replace(".", "").replace(" ", "").replace(",", "")
    out, pos = [], 0
    while pos < len(cleaned):
        m = _TOKEN.match(cleaned, pos)
        if not m:
            raise ConfigurationError(f"bad duality word {word!r}; use letters h, v, tr, t")
        if m.group() != "id":
            out.append(m.group())
        pos = m.end()
    return out


def apply_word(I: Intercategory, word: str) -> Intercategory:
    """Apply dualities left to right: ``apply_word(I, "hv") == dual_v(dual_h(I))``."""
    for kind in parse_word(word):
        I = DualInstance(I, kind)
    return I


#: one word for each element of the symmetry group
SYMMETRIES = ("id", "h", "v", "hv", "tr", "htr", "vtr", "hvtr")


__all__ = [
    "DualInstance",
    "KINDS",
    "SYMMETRIES",
    "apply_word",
    "dual_h",
    "dual_sort",
    "dual_tr",
    "dual_v",
    "parse_word",
    "reverse_transversal",
    "transform",
]

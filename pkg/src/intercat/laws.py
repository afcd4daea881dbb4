"""Exhaustive and sampled verification of the intercategory axioms.

Every law is a list of *families*.  A family draws tuples of cells from an
instance (each cell constrained by faces of the ones drawn before it) and
evaluates one or more equations between cells, usually two transversal
composites of cubes.  For each family the checker enumerates the tuple
space if it has at most ``budget`` elements and otherwise draws ``budget``
distinct tuples with a seeded random walk, so reports are reproducible.

Equations are compared as literal equality; backends encode cells
canonically, so no search for connecting isomorphisms is needed.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from enum import Enum
from functools import reduce
from typing import Any, Callable, Iterator, Sequence

from .model import (
    Cell,
    Chirality,
    ConfigurationError,
    Intercategory,
    Sort,
    UndefinedOperation,
    boundary_problems,
    compose_frame,
    face,
    ident_frame,
    interchanger_frame,
    sort_of,
    structural_frame,
)


class LawId(str, Enum):
    WD_H_PENTAGON = "WD-H-PENTAGON"
    WD_H_TRIANGLE = "WD-H-TRIANGLE"
    WD_H_INVERSE = "WD-H-INVERSE"
    WD_V_PENTAGON = "WD-V-PENTAGON"
    WD_V_TRIANGLE = "WD-V-TRIANGLE"
    WD_V_INVERSE = "WD-V-INVERSE"
    NAT_KAPPA_H = "NAT-KAPPA-H"
    NAT_LAMBDA_H = "NAT-LAMBDA-H"
    NAT_RHO_H = "NAT-RHO-H"
    NAT_KAPPA_V = "NAT-KAPPA-V"
    NAT_LAMBDA_V = "NAT-LAMBDA-V"
    NAT_RHO_V = "NAT-RHO-V"
    NAT_CHI = "NAT-CHI"
    NAT_MU = "NAT-MU"
    NAT_DELTA = "NAT-DELTA"
    NAT_TAU = "NAT-TAU"
    C21 = "C21"
    C22 = "C22"
    C23 = "C23"
    C24 = "C24"
    C25 = "C25"
    C26 = "C26"
    C27 = "C27"
    C28 = "C28"
    C29 = "C29"
    C30 = "C30"
    C31 = "C31"
    C32 = "C32"
    BOUNDARY = "BOUNDARY"
    STRICT_T = "STRICT-T"
    MIDDLE_FOUR_H = "MIDDLE-FOUR-H"
    MIDDLE_FOUR_V = "MIDDLE-FOUR-V"

    def __str__(self):
        return self.value


COHERENCE = tuple(LawId(f"C{n}") for n in range(21, 33))


# -- reports -------------------------------------------------------------------------


@dataclass
class LawFailure:
    """A tuple on which an equation fails.

    ``inputs`` are the ids of the drawn cells and ``lhs``/``rhs`` the ids of
    the two sides.  ``cells`` keeps the drawn cells themselves so that the
    failure can be re-evaluated; it is not serialised.
    """

    inputs: tuple[str, ...]
    lhs: str
    rhs: str
    family: str = ""
    equation: int = 0
    cells: tuple = field(default=(), repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "inputs": list(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "family": self.family,
            "equation": self.equation,
        }


@dataclass
class LawReport:
    law: Enum
    instance: str = ""
    instances_checked: int = 0
    skipped: int = 0
    exhaustive: bool = True
    failures: list[LawFailure] = field(default_factory=list)
    families: dict[str, int] = field(default_factory=dict)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def vacuous(self) -> bool:
        """No tuple was ever evaluated; reported as a flag, not as a pass."""
        return self.instances_checked == 0

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        return "unchecked" if self.vacuous else "pass"

    def to_dict(self, max_failures: int = 20) -> dict:
        return {
            "law": self.law.value,
            "status": self.status,
            "checked": self.instances_checked,
            "skipped": self.skipped,
            "exhaustive": self.exhaustive,
            "families": dict(self.families),
            "failures": [f.to_dict() for f in self.failures[:max_failures]],
            "failure_count": len(self.failures),
            "note": self.note,
        }


@dataclass
class FullReport:
    instance: str
    budget: int
    seed: int
    reports: list[LawReport]
    duality: str = ""

    @property
    def failures(self) -> int:
        return sum(len(r.failures) for r in self.reports)

    @property
    def verdict(self) -> str:
        return "pass" if self.failures == 0 else "fail"

    def by_law(self) -> dict[LawId, LawReport]:
        return {r.law: r for r in self.reports}

    def failing(self) -> list[LawId]:
        return [r.law for r in self.reports if r.failures]

    def unchecked(self) -> list[LawId]:
        return [r.law for r in self.reports if r.vacuous]

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "config": {"budget": self.budget, "seed": self.seed, "duality": self.duality},
            "verdict": self.verdict,
            "failure_count": self.failures,
            "laws": [r.to_dict() for r in self.reports],
        }


# -- families and tuple drawing ---------------------------------------------------------

Step = Callable[..., tuple[Sort, dict]]
Evaluator = Callable[[Intercategory, Sequence[Cell]], list[tuple[Any, Any]]]


@dataclass(frozen=True)
class Family:
    name: str
    steps: tuple[Step, ...]
    evaluate: Evaluator


@dataclass(frozen=True)
class Law:
    law: Enum
    families: tuple[Family, ...]


def free(sort: Sort) -> Step:
    return lambda *prev: (sort, {})


def after(sort: Sort, d: str, i: int = -1) -> Step:
    """A cell of ``sort`` that can be ``d``-composed after the ``i``-th drawn cell."""
    f0 = sort.face_fields(d)[0]
    return lambda *prev: (sort, {f0: face(prev[i], d, 1)})


def below_right(sort: Sort, d: str, i: int, e: str, j: int) -> Step:
    """After cell ``i`` in direction ``d`` and after cell ``j`` in direction ``e``."""
    fd, fe = sort.face_fields(d)[0], sort.face_fields(e)[0]
    return lambda *prev: (sort, {fd: face(prev[i], d, 1), fe: face(prev[j], e, 1)})


class _Candidates:
    def __init__(self, I: Intercategory):
        self.I = I
        self.memo: dict = {}

    def __call__(self, sort: Sort, fixed: dict) -> Sequence[Cell]:
        key = (sort, tuple(sorted(fixed.items(), key=lambda kv: kv[0])))
        got = self.memo.get(key)
        if got is None:
            got = self.memo[key] = list(self.I.cells(sort, **fixed))
        return got


def _tuples(cands: _Candidates, steps: Sequence[Step]) -> Iterator[tuple]:
    def go(prev: tuple):
        if len(prev) == len(steps):
            yield prev
            return
        sort, fixed = steps[len(prev)](*prev)
        for x in cands(sort, fixed):
            yield from go(prev + (x,))

    yield from go(())


def _random_tuple(cands: _Candidates, steps: Sequence[Step], rng: random.Random):
    prev: tuple = ()
    for step in steps:
        sort, fixed = step(*prev)
        options = cands(sort, fixed)
        if not options:
            return None
        prev += (rng.choice(options),)
    return prev


def draw(
    I: Intercategory, steps: Sequence[Step], budget: int, rng: random.Random, cands=None
) -> tuple[list[tuple], bool]:
    """Tuples for one family and whether they cover the whole tuple space."""
    cands = cands or _Candidates(I)
    found = []
    for t in _tuples(cands, steps):
        found.append(t)
        if len(found) > budget:
            break
    else:
        return found, True
    seen, out = set(), []
    attempts = 0
    while len(out) < budget and attempts < budget * 20:
        attempts += 1
        t = _random_tuple(cands, steps, rng)
        if t is None or t in seen:
            continue
        seen.add(t)
        out.append(t)
    return out, False


def _rng(seed: int, *tags: object) -> random.Random:
    return random.Random(zlib.crc32(repr(tags).encode()) ^ (seed * 0x9E3779B1 & 0xFFFFFFFF))


def _id(I: Intercategory, x) -> str:
    try:
        sort_of(x)
    except TypeError:
        return str(x)
    return I.cell_id(x)


def run_law(
    I: Intercategory, law: Law, budget: int, seed: int = 0, cands=None, out: Intercategory | None = None
) -> LawReport:
    """Evaluate every family of ``law`` on tuples drawn from ``I``.

    ``out`` names the instance the two sides live in when it differs from
    ``I``, as for morphism conditions evaluated in the target.
    """
    out = out or I
    report = LawReport(law.law, instance=I.name)
    cands = cands or _Candidates(I)
    exhaustive = True
    for fam in law.families:
        tuples, full = draw(I, fam.steps, budget, _rng(seed, law.law.value, fam.name), cands)
        exhaustive = exhaustive and full
        n = 0
        for xs in tuples:
            try:
                pairs = fam.evaluate(I, xs)
            except UndefinedOperation:
                report.skipped += 1
                continue
            n += 1
            for k, (lhs, rhs) in enumerate(pairs):
                if lhs != rhs:
                    report.failures.append(
                        LawFailure(
                            tuple(_id(I, x) for x in xs),
                            _id(out, lhs),
                            _id(out, rhs),
                            fam.name,
                            k,
                            tuple(xs),
                        )
                    )
                    break
        report.families[fam.name] = n
        report.instances_checked += n
    report.exhaustive = exhaustive and getattr(I, "exhaustive", True)
    return report


def recheck(I: Intercategory, law: Law, failure: LawFailure, out: Intercategory | None = None) -> bool:
    """Re-evaluate a reported failure from its inputs; True if it still fails."""
    if out is None and I.chirality is Chirality.LEFT:
        from .dualities import reverse_transversal

        I = reverse_transversal(I)
    out = out or I
    fam = next(f for f in law.families if f.name == failure.family)
    lhs, rhs = fam.evaluate(I, failure.cells)[failure.equation]
    return lhs != rhs and _id(out, lhs) == failure.lhs and _id(out, rhs) == failure.rhs


# -- composite helpers ---------------------------------------------------------------


def seq(I: Intercategory, *xs: Cell) -> Cell:
    """Transversal composite in diagrammatic order."""
    return reduce(I.t_comp, xs)


def _weak_sorts(d: str) -> tuple[Sort, Sort]:
    return (Sort.HOR, Sort.BASIC) if d == "h" else (Sort.VERT, Sort.BASIC)


def _cell_sorts(d: str) -> tuple[Sort, Sort]:
    return (Sort.HCELL, Sort.CUBE) if d == "h" else (Sort.VCELL, Sort.CUBE)


def _upper(d: str) -> str:
    return d.upper()


# -- weak double category laws ------------------------------------------------------------


def _pentagon(d: str) -> Law:
    def ev(I, xs):
        a, b, c, e = xs
        C = lambda x, y: I.compose(d, x, y)
        K = lambda x, y, z: I.structural("kappa", d, x, y, z)
        one = I.t_id
        lhs = seq(I, K(a, b, C(c, e)), K(C(a, b), c, e))
        rhs = seq(I, C(one(a), K(b, c, e)), K(a, C(b, c), e), C(K(a, b, c), one(e)))
        return [(lhs, rhs)]

    fams = tuple(
        Family(s.name.lower(), (free(s), after(s, d), after(s, d), after(s, d)), ev)
        for s in _weak_sorts(d)
    )
    return Law(LawId(f"WD-{_upper(d)}-PENTAGON"), fams)


def _triangle(d: str) -> Law:
    def ev(I, xs):
        a, b = xs
        C = lambda x, y: I.compose(d, x, y)
        mid = I.ident(d, face(a, d, 1))
        lhs = seq(I, I.structural("kappa", d, a, mid, b), C(I.structural("rho", d, a), I.t_id(b)))
        rhs = C(I.t_id(a), I.structural("lambda", d, b))
        return [(lhs, rhs)]

    fams = tuple(Family(s.name.lower(), (free(s), after(s, d)), ev) for s in _weak_sorts(d))
    return Law(LawId(f"WD-{_upper(d)}-TRIANGLE"), fams)


def _inverse(d: str) -> Law:
    def pair(I, op, args):
        x = I.structural(op, d, *args)
        y = I.structural(op + "_inv", d, *args)
        src, tgt = face(x, "t", 0), face(x, "t", 1)
        return [(seq(I, x, y), I.t_id(src)), (seq(I, y, x), I.t_id(tgt))]

    def ev3(I, xs):
        return pair(I, "kappa", xs)

    def ev1(I, xs):
        return pair(I, "lambda", xs) + pair(I, "rho", xs)

    fams = []
    for s in _weak_sorts(d):
        fams.append(Family(f"kappa-{s.name.lower()}", (free(s), after(s, d), after(s, d)), ev3))
        fams.append(Family(f"units-{s.name.lower()}", (free(s),), ev1))
    return Law(LawId(f"WD-{_upper(d)}-INVERSE"), tuple(fams))


def _nat_kappa(d: str) -> Law:
    def ev(I, xs):
        c1, c2, c3 = xs
        C = lambda x, y: I.compose(d, x, y)
        backs = [face(c, "t", 0) for c in xs]
        fronts = [face(c, "t", 1) for c in xs]
        K = lambda op, ys: I.structural(op, d, *ys)
        return [
            (seq(I, K("kappa", backs), C(C(c1, c2), c3)), seq(I, C(c1, C(c2, c3)), K("kappa", fronts))),
            (seq(I, K("kappa_inv", backs), C(c1, C(c2, c3))), seq(I, C(C(c1, c2), c3), K("kappa_inv", fronts))),
        ]

    fams = tuple(
        Family(s.name.lower(), (free(s), after(s, d), after(s, d)), ev) for s in _cell_sorts(d)
    )
    return Law(LawId(f"NAT-KAPPA-{_upper(d)}"), fams)


def _nat_unit(d: str, which: str) -> Law:
    def ev(I, xs):
        (c,) = xs
        C = lambda x, y: I.compose(d, x, y)
        back, front = face(c, "t", 0), face(c, "t", 1)
        if which == "lambda":
            padded = C(I.ident(d, face(c, d, 0)), c)
        else:
            padded = C(c, I.ident(d, face(c, d, 1)))
        S = lambda op, y: I.structural(op, d, y)
        return [
            (seq(I, S(which, back), c), seq(I, padded, S(which, front))),
            (seq(I, S(which + "_inv", back), padded), seq(I, c, S(which + "_inv", front))),
        ]

    fams = tuple(Family(s.name.lower(), (free(s),), ev) for s in _cell_sorts(d))
    return Law(LawId(f"NAT-{which.upper()}-{_upper(d)}"), fams)


def _middle_four(d: str) -> Law:
    def ev_interchange(I, xs):
        a, b, c, e = xs
        C = lambda x, y: I.compose(d, x, y)
        return [(I.t_comp(C(a, b), C(c, e)), C(I.t_comp(a, c), I.t_comp(b, e)))]

    def ev_tid(I, xs):
        a, b = xs
        return [(I.compose(d, I.t_id(a), I.t_id(b)), I.t_id(I.compose(d, a, b)))]

    def ev_ident_comp(I, xs):
        f, g = xs
        return [(I.ident(d, I.t_comp(f, g)), I.t_comp(I.ident(d, f), I.ident(d, g)))]

    def ev_ident_tid(I, xs):
        (x,) = xs
        return [(I.ident(d, I.t_id(x)), I.t_id(I.ident(d, x)))]

    fams = []
    for s in _cell_sorts(d):
        steps = (free(s), after(s, d, 0), after(s, "t", 0), below_right(s, d, 2, "t", 1))
        fams.append(Family(f"interchange-{s.name.lower()}", steps, ev_interchange))
    for s in _weak_sorts(d):
        fams.append(Family(f"tid-{s.name.lower()}", (free(s), after(s, d)), ev_tid))
    other = "v" if d == "h" else "h"
    for s in (Sort.TRANS, Sort("t" + other)):
        fams.append(Family(f"ident-{s.name.lower()}", (free(s), after(s, "t")), ev_ident_comp))
    for s in (Sort.OBJ, Sort(other)):
        fams.append(Family(f"ident-tid-{s.name.lower()}", (free(s),), ev_ident_tid))
    return Law(LawId(f"MIDDLE-FOUR-{_upper(d)}"), tuple(fams))


def strict_t_law() -> Law:
    def ev_assoc(I, xs):
        a, b, c = xs
        return [(I.t_comp(I.t_comp(a, b), c), I.t_comp(a, I.t_comp(b, c)))]

    def ev_unit(I, xs):
        (a,) = xs
        return [
            (I.t_comp(I.t_id(face(a, "t", 0)), a), a),
            (I.t_comp(a, I.t_id(face(a, "t", 1))), a),
        ]

    fams = []
    for s in (Sort.TRANS, Sort.HCELL, Sort.VCELL, Sort.CUBE):
        fams.append(Family(f"assoc-{s.name.lower()}", (free(s), after(s, "t"), after(s, "t")), ev_assoc))
        fams.append(Family(f"unit-{s.name.lower()}", (free(s),), ev_unit))
    return Law(LawId.STRICT_T, tuple(fams))


def _frame_pairs(I, result, expected: dict) -> list:
    pairs = []
    for (d, end), want in sorted(expected.items()):
        pairs.append((face(result, d, end), want))
    problems = boundary_problems(result)
    pairs.append(("; ".join(problems) or "well-formed", "well-formed"))
    pairs.append((I.contains(result), True))
    return pairs


def boundary_law() -> Law:
    def ev_compose(d):
        return lambda I, xs: _frame_pairs(I, I.compose(d, *xs), compose_frame(I, d, *xs))

    def ev_ident(d):
        return lambda I, xs: _frame_pairs(I, I.ident(d, xs[0]), ident_frame(I, d, xs[0]))

    def ev_structural(op, d):
        return lambda I, xs: _frame_pairs(I, I.structural(op, d, *xs), structural_frame(I, op, d, xs))

    def ev_interchanger(op):
        return lambda I, xs: _frame_pairs(I, I.interchanger(op, *xs), interchanger_frame(I, op, xs))

    fams = []
    for d in "thv":
        for s in Sort:
            if d in s.dirs:
                fams.append(Family(f"compose-{d}-{s.name.lower()}", (free(s), after(s, d)), ev_compose(d)))
            else:
                fams.append(Family(f"ident-{d}-{s.name.lower()}", (free(s),), ev_ident(d)))
    for d in "hv":
        for s in _weak_sorts(d):
            for op in ("kappa", "kappa_inv"):
                fams.append(
                    Family(f"{op}-{d}-{s.name.lower()}", (free(s), after(s, d), after(s, d)), ev_structural(op, d))
                )
            for op in ("lambda", "lambda_inv", "rho", "rho_inv"):
                fams.append(Family(f"{op}-{d}-{s.name.lower()}", (free(s),), ev_structural(op, d)))
    B = Sort.BASIC
    fams.append(
        Family("chi", (free(B), after(B, "h"), after(B, "v", 0), below_right(B, "h", 2, "v", 1)), ev_interchanger("chi"))
    )
    fams.append(Family("mu", (free(Sort.VERT), after(Sort.VERT, "v")), ev_interchanger("mu")))
    fams.append(Family("delta", (free(Sort.HOR), after(Sort.HOR, "h")), ev_interchanger("delta")))
    fams.append(Family("tau", (free(Sort.OBJ),), ev_interchanger("tau")))
    return Law(LawId.BOUNDARY, tuple(fams))


# -- interchanger naturality -----------------------------------------------------------------


def _nat_chi() -> Law:
    def ev(I, xs):
        c1, c2, c3, c4 = xs
        backs = [face(c, "t", 0) for c in xs]
        fronts = [face(c, "t", 1) for c in xs]
        lhs = seq(I, I.chi(*backs), I.h_comp(I.v_comp(c1, c3), I.v_comp(c2, c4)))
        rhs = seq(I, I.v_comp(I.h_comp(c1, c2), I.h_comp(c3, c4)), I.chi(*fronts))
        return [(lhs, rhs)]

    Q = Sort.CUBE
    steps = (free(Q), after(Q, "h"), after(Q, "v", 0), below_right(Q, "h", 2, "v", 1))
    return Law(LawId.NAT_CHI, (Family("cubes", steps, ev),))


def _nat_mu() -> Law:
    def ev(I, xs):
        p, q = xs
        lhs = seq(I, I.mu(p.left, q.left), I.hid(I.v_comp(p, q)))
        rhs = seq(I, I.v_comp(I.hid(p), I.hid(q)), I.mu(p.right, q.right))
        return [(lhs, rhs)]

    return Law(LawId.NAT_MU, (Family("vert-cells", (free(Sort.VCELL), after(Sort.VCELL, "v")), ev),))


def _nat_delta() -> Law:
    def ev(I, xs):
        p, q = xs
        lhs = seq(I, I.delta(p.top, q.top), I.h_comp(I.vid(p), I.vid(q)))
        rhs = seq(I, I.vid(I.h_comp(p, q)), I.delta(p.bottom, q.bottom))
        return [(lhs, rhs)]

    return Law(LawId.NAT_DELTA, (Family("hor-cells", (free(Sort.HCELL), after(Sort.HCELL, "h")), ev),))


def _nat_tau() -> Law:
    def ev(I, xs):
        (f,) = xs
        lhs = seq(I, I.tau(f.src), I.hid(I.vid(f)))
        rhs = seq(I, I.vid(I.hid(f)), I.tau(f.tgt))
        return [(lhs, rhs)]

    return Law(LawId.NAT_TAU, (Family("trans-arrows", (free(Sort.TRANS),), ev),))


# -- the coherence conditions relating the two weak structures ---------------------------------


def _c21(I, xs):
    v, w, u = xs
    iv, iw, iu = I.hid(v), I.hid(w), I.hid(u)
    lhs = seq(
        I,
        I.kappa_v(iv, iw, iu),
        I.v_comp(I.mu(v, w), I.t_id(iu)),
        I.mu(I.v_comp(v, w), u),
    )
    rhs = seq(
        I,
        I.v_comp(I.t_id(iv), I.mu(w, u)),
        I.mu(v, I.v_comp(w, u)),
        I.hid(I.kappa_v(v, w, u)),
    )
    return [(lhs, rhs)]


def _c22(I, xs):
    (v,) = xs
    iv = I.hid(v)
    lhs = I.lambda_v(iv)
    rhs = seq(I, I.v_comp(I.tau(v.src), I.t_id(iv)), I.mu(I.vid(v.src), v), I.hid(I.lambda_v(v)))
    return [(lhs, rhs)]


def _c23(I, xs):
    (v,) = xs
    iv = I.hid(v)
    lhs = I.rho_v(iv)
    rhs = seq(I, I.v_comp(I.t_id(iv), I.tau(v.tgt)), I.mu(v, I.vid(v.tgt)), I.hid(I.rho_v(v)))
    return [(lhs, rhs)]


def _c24(I, xs):
    a, b, g, e, p, f = xs  # rows (a|b), (g|e), (p|f)
    H, V = I.h_comp, I.v_comp
    lhs = seq(
        I,
        V(I.t_id(H(a, b)), I.chi(g, e, p, f)),
        I.chi(a, b, V(g, p), V(e, f)),
        H(I.kappa_v(a, g, p), I.kappa_v(b, e, f)),
    )
    rhs = seq(
        I,
        I.kappa_v(H(a, b), H(g, e), H(p, f)),
        V(I.chi(a, b, g, e), I.t_id(H(p, f))),
        I.chi(V(a, g), V(b, e), p, f),
    )
    return [(lhs, rhs)]


def _c25(I, xs):
    a, b = xs
    H, V = I.h_comp, I.v_comp
    lhs = I.lambda_v(H(a, b))
    rhs = seq(
        I,
        V(I.delta(a.top, b.top), I.t_id(H(a, b))),
        I.chi(I.vid(a.top), I.vid(b.top), a, b),
        H(I.lambda_v(a), I.lambda_v(b)),
    )
    return [(lhs, rhs)]


def _c26(I, xs):
    a, b = xs
    H, V = I.h_comp, I.v_comp
    lhs = I.rho_v(H(a, b))
    rhs = seq(
        I,
        V(I.t_id(H(a, b)), I.delta(a.bottom, b.bottom)),
        I.chi(a, b, I.vid(a.bottom), I.vid(b.bottom)),
        H(I.rho_v(a), I.rho_v(b)),
    )
    return [(lhs, rhs)]


def _c27(I, xs):
    a, b, c, e, g, f = xs  # rows (a|b|c), (e|g|f)
    H, V = I.h_comp, I.v_comp
    lhs = seq(
        I,
        V(I.kappa_h(a, b, c), I.kappa_h(e, g, f)),
        I.chi(H(a, b), c, H(e, g), f),
        H(I.chi(a, b, e, g), I.t_id(V(c, f))),
    )
    rhs = seq(
        I,
        I.chi(a, H(b, c), e, H(g, f)),
        H(I.t_id(V(a, e)), I.chi(b, c, g, f)),
        I.kappa_h(V(a, e), V(b, g), V(c, f)),
    )
    return [(lhs, rhs)]


def _c28(I, xs):
    h, k, l = xs
    H = I.h_comp
    lhs = seq(
        I,
        I.delta(h, H(k, l)),
        H(I.t_id(I.vid(h)), I.delta(k, l)),
        I.kappa_h(I.vid(h), I.vid(k), I.vid(l)),
    )
    rhs = seq(
        I,
        I.vid(I.kappa_h(h, k, l)),
        I.delta(H(h, k), l),
        H(I.delta(h, k), I.t_id(I.vid(l))),
    )
    return [(lhs, rhs)]


def _c29(I, xs):
    a, b = xs
    H, V = I.h_comp, I.v_comp
    lhs = V(I.lambda_h(a), I.lambda_h(b))
    rhs = seq(
        I,
        I.chi(I.hid(a.left), a, I.hid(b.left), b),
        H(I.mu(a.left, b.left), I.t_id(V(a, b))),
        I.lambda_h(V(a, b)),
    )
    return [(lhs, rhs)]


def _c30(I, xs):
    (h,) = xs
    H = I.h_comp
    lhs = I.vid(I.lambda_h(h))
    rhs = seq(
        I,
        I.delta(I.hid(h.src), h),
        H(I.tau(h.src), I.t_id(I.vid(h))),
        I.lambda_h(I.vid(h)),
    )
    return [(lhs, rhs)]


def _c31(I, xs):
    a, b = xs
    H, V = I.h_comp, I.v_comp
    lhs = V(I.rho_h(a), I.rho_h(b))
    rhs = seq(
        I,
        I.chi(a, I.hid(a.right), b, I.hid(b.right)),
        H(I.t_id(V(a, b)), I.mu(a.right, b.right)),
        I.rho_h(V(a, b)),
    )
    return [(lhs, rhs)]


def _c32(I, xs):
    (h,) = xs
    H = I.h_comp
    lhs = I.vid(I.rho_h(h))
    rhs = seq(
        I,
        I.delta(h, I.hid(h.tgt)),
        H(I.t_id(I.vid(h)), I.tau(h.tgt)),
        I.rho_h(I.vid(h)),
    )
    return [(lhs, rhs)]


def _coherence() -> list[Law]:
    B, Vt, Hz = Sort.BASIC, Sort.VERT, Sort.HOR
    grid_3x2 = (
        free(B), after(B, "h", 0),
        after(B, "v", 0), below_right(B, "h", 2, "v", 1),
        after(B, "v", 2), below_right(B, "h", 4, "v", 3),
    )
    grid_2x3 = (
        free(B), after(B, "h", 0), after(B, "h", 1),
        after(B, "v", 0), below_right(B, "h", 3, "v", 1), below_right(B, "h", 4, "v", 2),
    )
    equations = {
        LawId.C21: ((free(Vt), after(Vt, "v"), after(Vt, "v")), _c21),
        LawId.C22: ((free(Vt),), _c22),
        LawId.C23: ((free(Vt),), _c23),
        LawId.C24: (grid_3x2, _c24),
        LawId.C25: ((free(B), after(B, "h")), _c25),
        LawId.C26: ((free(B), after(B, "h")), _c26),
        LawId.C27: (grid_2x3, _c27),
        LawId.C28: ((free(Hz), after(Hz, "h"), after(Hz, "h")), _c28),
        LawId.C29: ((free(B), after(B, "v")), _c29),
        LawId.C30: ((free(Hz),), _c30),
        LawId.C31: ((free(B), after(B, "v")), _c31),
        LawId.C32: ((free(Hz),), _c32),
    }
    return [Law(tag, (Family("main", steps, ev),)) for tag, (steps, ev) in equations.items()]


# -- registry and entry points ----------------------------------------------------------------


def weak_double_laws(direction: str) -> list[Law]:
    d = {"horizontal": "h", "vertical": "v"}.get(direction, direction)
    if d not in ("h", "v"):
        raise ConfigurationError(f"direction must be horizontal or vertical, not {direction!r}")
    return [
        _pentagon(d),
        _triangle(d),
        _inverse(d),
        _nat_kappa(d),
        _nat_unit(d, "lambda"),
        _nat_unit(d, "rho"),
        _middle_four(d),
    ]


def interchanger_laws() -> list[Law]:
    return [_nat_chi(), _nat_mu(), _nat_delta(), _nat_tau()]


def coherence_laws() -> list[Law]:
    return _coherence()


def structure_laws() -> list[Law]:
    return [boundary_law(), strict_t_law()]


def all_laws() -> list[Law]:
    return (
        structure_laws()
        + weak_double_laws("h")
        + weak_double_laws("v")
        + interchanger_laws()
        + coherence_laws()
    )


LAWS: dict[LawId, Law] = {law.law: law for law in all_laws()}
assert set(LAWS) == set(LawId), "every tag has exactly one checker"


def _run(I: Intercategory, laws: Sequence[Law], budget: int, seed: int) -> list[LawReport]:
    if budget < 1:
        raise ConfigurationError("budget must be positive")
    if I.chirality is Chirality.LEFT:
        # left instances are checked through their transversal reversal, which is right
        from .dualities import reverse_transversal

        I = reverse_transversal(I)
    cands = _Candidates(I)
    return [run_law(I, law, budget, seed, cands) for law in laws]


def check_weak_double(I: Intercategory, direction: str = "horizontal", budget: int = 1000, seed: int = 0):
    return _run(I, weak_double_laws(direction), budget, seed)


def check_interchanger_naturality(I: Intercategory, budget: int = 1000, seed: int = 0):
    return _run(I, interchanger_laws(), budget, seed)


def check_duoidal_coherence(I: Intercategory, budget: int = 1000, seed: int = 0):
    return _run(I, coherence_laws(), budget, seed)


def check_structure(I: Intercategory, budget: int = 1000, seed: int = 0):
    return _run(I, structure_laws(), budget, seed)


def check_laws(I: Intercategory, tags: Sequence[LawId | str], budget: int = 1000, seed: int = 0):
    return _run(I, [LAWS[LawId(t)] for t in tags], budget, seed)


def check_all(I: Intercategory, budget: int = 1000, seed: int = 0) -> FullReport:
    """Every law in a fixed order; deterministic given ``(I, budget, seed)``."""
    return FullReport(I.name, budget, seed, _run(I, all_laws(), budget, seed))

from __future__ import annotations

import random

import pytest

from intercat.finset import FinFun, FinSet
from intercat.instances.duoidal import cube
from intercat.model import BoundaryError, ConfigurationError, Sort, sort_of
from intercat.morphisms import (
    MORPHISM_CONDITIONS,
    CellData,
    CubeFaces,
    Kind,
    MorphismCondition,
    build_cell,
    build_morphism,
    check_cell,
    check_morphism,
    collapse_morphism,
    compose_morphisms,
    cube_commutes,
    export_cell,
    export_morphism,
    identity_cell_h,
    identity_cell_v,
    identity_morphism,
    override_cell,
    override_morphism,
    paste_cells_h,
    paste_cells_v,
    polygon_sides,
    same_cell_data,
    shape,
    tabulate_morphism,
    valid_writer_cell_params,
    writer_cell,
    writer_morphism,
)

LL, CL, CC = Kind.LAX_LAX, Kind.COLAX_LAX, Kind.COLAX_COLAX


def failing(reports) -> set[str]:
    return {str(r.law) for r in reports if r.failures}


def perm(table) -> object:
    n = len(table)
    return cube(FinFun(FinSet(n), FinSet(n), tuple(table)))


def at(*sizes):
    """Match basic-cell arguments of the given sizes."""
    return lambda *xs: len(xs) == len(sizes) and all(
        sort_of(x) is Sort.BASIC and x.data == n for x, n in zip(xs, sizes)
    )


def point_cell(top, bottom, left, right, name="pt"):
    D = bottom.target
    pts = {s: D.cells(s)[0] for s in Sort}
    return CellData(name, top, bottom, left, right, lambda x: pts[sort_of(x).with_("t")])


@pytest.fixture(scope="module")
def writers(duoidal2):
    return {(k, m): writer_morphism(duoidal2, m, k) for k in Kind for m in (1, 2, 3)}


# -- kinds ---------------------------------------------------------------------------------


def test_kind_parsing():
    assert Kind.parse("colax_lax") is CL
    assert CL.v_lax and not CL.h_lax
    assert not CC.v_lax and LL.h_lax
    with pytest.raises(ConfigurationError, match="lax-colax"):
        Kind.parse("lax-colax")
    with pytest.raises(ConfigurationError):
        Kind.parse("sideways")


def test_lax_colax_is_rejected_at_construction(duoidal2):
    with pytest.raises(ConfigurationError):
        identity_morphism(duoidal2, "lax-colax")


def test_cell_shapes():
    assert shape(LL, CL) == "LL/CL"
    assert shape(CL, CC) == "CL/CC"
    assert shape(LL, CC) == "LL/CC"
    with pytest.raises(ConfigurationError):
        shape(CC, LL)


# -- morphism conditions --------------------------------------------------------------------


@pytest.mark.parametrize("kind", list(Kind))
def test_identity_morphism_passes(duoidal2, kind):
    reports = check_morphism(identity_morphism(duoidal2, kind), 2000)
    assert {r.law for r in reports} >= set(MORPHISM_CONDITIONS)
    assert all(r.passed and not r.vacuous for r in reports)


@pytest.mark.parametrize("kind", list(Kind))
def test_collapse_to_terminal_passes(duoidal2, terminal, kind):
    reports = check_morphism(collapse_morphism(duoidal2, terminal, kind), 2000)
    assert not failing(reports)


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_writer_morphisms_pass(duoidal2, kind, m):
    assert not failing(check_morphism(writer_morphism(duoidal2, m, kind), 500))


# engineered failures on the identity of duoidal:2: (family, argument sizes, value, tag that must fail)
FIXTURES = [
    ("phi_v_comp", (0, 2), perm([1, 0]), "M5"),
    ("phi_v_comp", (2, 0), perm([1, 0]), "M6"),
    ("phi_v_comp", (2, 2), perm([1, 2, 3, 0]), "M7"),
    ("phi_h_comp", (1, 2), perm([1, 0]), "M8"),
    ("phi_h_comp", (2, 1), perm([1, 0]), "M9"),
    ("phi_h_comp", (2, 2), perm([1, 2, 3, 0]), "M10"),
    ("phi_h_comp", (2, 2), perm([3, 2, 1, 0]), "M14"),
]


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("family,sizes,value,tag", FIXTURES, ids=[f[-1] for f in FIXTURES])
def test_corrupted_comparison_is_caught(duoidal2, kind, family, sizes, value, tag):
    F = override_morphism(identity_morphism(duoidal2, kind), family, at(*sizes), lambda *xs: value)
    reports = {str(r.law): r for r in check_morphism(F, 2000)}
    r = reports[tag]
    assert r.failures
    # the witness mentions the corrupted arguments
    w = r.failures[0]
    assert len(w.cells) > 0 and w.lhs != w.rhs


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize(
    "family,sort,tags",
    [
        ("phi_v_unit", Sort.HOR, {"M11", "M13"}),
        ("phi_h_unit", Sort.VERT, {"M11", "M12"}),
    ],
)
def test_corrupted_unit_comparison_on_z2(z2, kind, family, sort, tags):
    F = override_morphism(identity_morphism(z2, kind), family, lambda x: sort_of(x) is sort, lambda x: z2.by_id("1"))
    assert tags <= failing(check_morphism(F, 500))


def test_wrong_face_is_a_boundary_error(duoidal2):
    F = override_morphism(identity_morphism(duoidal2), "phi_v_comp", at(1, 1), lambda *xs: perm([0]))
    with pytest.raises(BoundaryError) as e:
        check_morphism(F)
    assert "phi_v_comp(set:1, set:1)" in e.value.path
    assert e.value.path.endswith(("back", "front"))


def test_sort_map_must_preserve_faces(duoidal2):
    F = override_morphism(identity_morphism(duoidal2), "apply", lambda x: sort_of(x) is Sort.CUBE and x.back.data == 1,
                          lambda x: perm([0, 1]))
    with pytest.raises(BoundaryError) as e:
        check_morphism(F)
    assert e.value.path.endswith(("back", "front"))


def test_polygon_needs_one_source_and_one_sink(duoidal2):
    x = perm([0, 1])
    with pytest.raises(ValueError):
        polygon_sides(duoidal2, [(x, True), (x, False), (x, True), (x, False)])


# -- composition -------------------------------------------------------------------------------


def test_identity_is_a_unit_for_composition(writers, duoidal2):
    F = writers[LL, 2]
    I = identity_morphism(duoidal2)
    for G in (compose_morphisms(F, I), compose_morphisms(I, F)):
        assert G.key == F.key
        assert tabulate_morphism(G, 60) == tabulate_morphism(F, 60)


def test_composition_is_associative(duoidal2, terminal):
    F = collapse_morphism(duoidal2, terminal)
    G = collapse_morphism(terminal, terminal)
    H = collapse_morphism(terminal, terminal)
    a = compose_morphisms(compose_morphisms(F, G), H)
    b = compose_morphisms(F, compose_morphisms(G, H))
    assert a.same_edge(b)
    assert tabulate_morphism(a) == tabulate_morphism(b)


@pytest.mark.parametrize("kind", list(Kind))
def test_composites_stay_in_the_kind(writers, kind):
    G = compose_morphisms(writers[kind, 2], writers[kind, 3])
    assert G.kind is kind
    assert not failing(check_morphism(G, 300))


def test_mixed_kinds_do_not_compose(writers):
    with pytest.raises(ConfigurationError, match="kind mismatch"):
        compose_morphisms(writers[LL, 2], writers[CL, 2])


def test_instance_mismatch(duoidal2, terminal):
    with pytest.raises(ConfigurationError):
        compose_morphisms(collapse_morphism(duoidal2, terminal), identity_morphism(duoidal2, CC))


# -- cells ---------------------------------------------------------------------------------------


@pytest.mark.parametrize("top,left", [(LL, CL), (CL, CC), (LL, CC)])
def test_random_writer_cells_pass(writers, top, left):
    rng = random.Random(1)
    for _ in range(4):
        p1, p2, q1, q2 = (rng.choice((1, 2, 3)) for _ in range(4))
        h, c = valid_writer_cell_params(p1, p2, q1, q2, rng)
        p = writer_cell(writers[top, p1], writers[top, p2], writers[left, q1], writers[left, q2], h, c)
        reports = check_cell(p, 300)
        assert not failing(reports), (p1, p2, q1, q2, h, c)
        assert all(not r.vacuous for r in reports)


def test_cell_condition_sets_follow_the_shape(writers):
    tags = lambda p: [str(r.law) for r in check_cell(p, 20)]
    assert tags(identity_cell_h(writers[CL, 1], LL)) == ["P5", "P6", "P7", "P8"]
    assert tags(identity_cell_h(writers[CC, 1], CL)) == ["P5'", "P6'", "P7c", "P8c"]
    assert tags(identity_cell_h(writers[CC, 1], LL)) == ["P5'", "P6'", "P7", "P8"]


def test_identity_cell_on_identity_morphism(duoidal2):
    p = identity_cell_h(identity_morphism(duoidal2, CL), LL)
    assert not failing(check_cell(p, 500))


def test_cell_between_collapse_morphisms(duoidal2, terminal):
    top = collapse_morphism(duoidal2, terminal, LL)
    left = collapse_morphism(duoidal2, terminal, CC)
    right, bottom = identity_morphism(terminal, CC), identity_morphism(terminal, LL)
    assert not failing(check_cell(point_cell(top, bottom, left, right), 500))


def test_non_homomorphic_writer_cell_fails(writers):
    p = writer_cell(writers[LL, 2], writers[LL, 3], writers[CL, 1], writers[CL, 1], [0], [1])
    assert "P8" in failing(check_cell(p, 500))


def test_swapped_component_fails(writers):
    p = identity_cell_h(writers[CL, 1], LL)
    q = override_cell(p, lambda x: sort_of(x) is Sort.BASIC and x.data == 2, lambda x: perm([1, 0]))
    assert {"P6", "P8"} <= failing(check_cell(q, 500))


@pytest.mark.parametrize("top,left", [(LL, CL), (CL, CC), (LL, CC)])
def test_corrupted_cells_on_z2_fail_every_group(z2, top, left):
    T, L = identity_morphism(z2, top), identity_morphism(z2, left)
    p = CellData("e", T, T, L, L, lambda x: z2.t_id(x))
    assert not failing(check_cell(p))
    q = override_cell(p, lambda x: sort_of(x) is Sort.BASIC, lambda x: z2.by_id("1"))
    assert len(failing(check_cell(q))) == 4


def test_component_with_wrong_boundary_names_the_face(writers):
    p = identity_cell_h(writers[CL, 1], LL)
    q = override_cell(p, lambda x: sort_of(x) is Sort.BASIC and x.data == 1, lambda x: perm([0, 1]))
    with pytest.raises(BoundaryError) as e:
        check_cell(q)
    assert e.value.path.startswith(f"{q.name}(set:1).")
    assert e.value.path.split(".")[-1] in ("back", "front")


def test_cells_need_a_square(writers, duoidal2, terminal):
    with pytest.raises(ConfigurationError):
        point_cell(collapse_morphism(duoidal2, terminal, LL), identity_morphism(duoidal2, LL),
                   writers[CL, 1], identity_morphism(terminal, CL))


# -- pasting -----------------------------------------------------------------------------------


class Grid:
    """Random LL/CL writer cells whose edges line up."""

    def __init__(self, writers, seed=0):
        self.w = writers
        self.rng = random.Random(seed)

    def cell(self, t, b, l, r):
        h, c = valid_writer_cell_params(t, b, l, r, self.rng)
        return writer_cell(self.w[LL, t], self.w[LL, b], self.w[CL, l], self.w[CL, r], h, c)

    def sizes(self, n):
        return [self.rng.choice((1, 2, 3)) for _ in range(n)]


def test_interchange_of_pastings(writers):
    g = Grid(writers, seed=0)
    for _ in range(25):
        a, b, c, d, e, f, x, y, z, u, w, v = g.sizes(12)
        al, be = g.cell(a, b, x, y), g.cell(c, d, y, z)
        ga, de = g.cell(b, e, u, w), g.cell(d, f, w, v)
        one = paste_cells_v(paste_cells_h(al, be), paste_cells_h(ga, de))
        two = paste_cells_h(paste_cells_v(al, ga), paste_cells_v(be, de))
        assert same_cell_data(one, two)


def test_pasting_preserves_the_conditions(writers):
    g = Grid(writers, seed=4)
    al, be = g.cell(2, 1, 3, 1), g.cell(1, 2, 1, 2)
    assert not failing(check_cell(paste_cells_h(al, be), 200))
    ga = g.cell(1, 3, 2, 2)
    assert not failing(check_cell(paste_cells_v(al, ga), 200))


def test_identity_cells_are_units(writers):
    al = Grid(writers, seed=2).cell(2, 3, 2, 1)
    assert same_cell_data(paste_cells_h(identity_cell_h(al.left, LL), al), al)
    assert same_cell_data(paste_cells_h(al, identity_cell_h(al.right, LL)), al)
    assert same_cell_data(paste_cells_v(identity_cell_v(al.top, CL), al), al)
    assert same_cell_data(paste_cells_v(al, identity_cell_v(al.bottom, CL)), al)


def test_pastings_are_associative(writers):
    g = Grid(writers, seed=3)
    al, be, ga = g.cell(2, 3, 2, 1), g.cell(3, 2, 1, 2), g.cell(2, 1, 2, 3)
    assert same_cell_data(paste_cells_h(paste_cells_h(al, be), ga), paste_cells_h(al, paste_cells_h(be, ga)))
    de, ep = g.cell(3, 1, 3, 2), g.cell(1, 2, 1, 1)
    assert same_cell_data(paste_cells_v(paste_cells_v(al, de), ep), paste_cells_v(al, paste_cells_v(de, ep)))


def test_pasting_collapse_cells(duoidal2, terminal):
    top = collapse_morphism(duoidal2, terminal, LL)
    left = collapse_morphism(duoidal2, terminal, CL)
    mid = identity_morphism(terminal, CL)
    p = point_cell(top, identity_morphism(terminal, LL), left, mid)
    q = point_cell(collapse_morphism(terminal, terminal, LL), collapse_morphism(terminal, terminal, LL), mid,
                   identity_morphism(terminal, CL))
    pq = paste_cells_h(p, q)
    assert not failing(check_cell(pq, 300))
    assert pq(duoidal2.cells(Sort.BASIC)[2]) == terminal.cells(Sort.CUBE)[0]


def test_pasting_needs_a_shared_edge(writers):
    g = Grid(writers)
    with pytest.raises(ConfigurationError):
        paste_cells_h(g.cell(1, 1, 1, 2), g.cell(1, 1, 3, 1))
    with pytest.raises(ConfigurationError):
        paste_cells_v(g.cell(1, 2, 1, 1), g.cell(3, 1, 1, 1))


# -- cubes -----------------------------------------------------------------------------------------


def _side_faces(back, front):
    return dict(
        top=identity_cell_v(back.top, CL), bottom=identity_cell_v(back.bottom, CL),
        left=identity_cell_h(back.left, CL), right=identity_cell_h(back.right, CL),
    )


def test_cube_of_identity_cells_commutes(duoidal2):
    back = identity_cell_h(identity_morphism(duoidal2, CC), LL)
    r = cube_commutes(CubeFaces(back, back, **_side_faces(back, back)))
    assert r.passed and r.instances_checked > 0


def test_cube_of_collapse_cells_commutes(duoidal2, terminal):
    cLL, cCC, cCL = (collapse_morphism(terminal, terminal, k) for k in (LL, CC, CL))
    Phi, Sig, K = (collapse_morphism(duoidal2, terminal, k) for k in (LL, CC, CL))
    faces = CubeFaces(
        back=point_cell(Phi, cLL, Sig, cCC),
        front=point_cell(cLL, cLL, cCC, cCC),
        top=point_cell(Phi, cLL, K, cCL),
        bottom=point_cell(cLL, cLL, cCL, cCL),
        left=point_cell(K, cCL, Sig, cCC),
        right=point_cell(cCL, cCL, cCC, cCC),
    )
    r = cube_commutes(faces)
    assert r.passed and r.instances_checked == len(duoidal2.cells(Sort.BASIC)) + 3


def test_perturbed_front_fails_with_witness(writers):
    pi = writer_cell(writers[LL, 2], writers[LL, 2], writers[CC, 1], writers[CC, 3], [0, 0, 0], [1, 1, 1])
    sides = _side_faces(pi, pi)
    assert cube_commutes(CubeFaces(pi, pi, **sides)).passed
    bent = writer_cell(writers[LL, 2], writers[LL, 2], writers[CC, 1], writers[CC, 3], [0, 0, 0], [1, 0, 1])
    r = cube_commutes(CubeFaces(pi, bent, **sides))
    assert not r.passed
    assert r.failures[0].inputs == ("set:1",)


def test_cube_edges_must_agree(writers):
    pi = writer_cell(writers[LL, 2], writers[LL, 2], writers[CC, 1], writers[CC, 3], [0, 0, 0], [1, 1, 1])
    sides = _side_faces(pi, pi)
    sides["top"] = identity_cell_v(writers[LL, 3], CL)
    with pytest.raises(ConfigurationError, match="top.top"):
        cube_commutes(CubeFaces(pi, pi, **sides))


# -- descriptions ------------------------------------------------------------------------------------


def test_morphism_and_cell_round_trip(z2):
    F = identity_morphism(z2, CL)
    G = identity_morphism(z2, CC)
    doc = export_morphism(F)
    F2 = build_morphism(doc, {z2.name: z2})
    assert F2.kind is CL
    assert tabulate_morphism(F2) == tabulate_morphism(F)
    G2 = build_morphism(export_morphism(G), {z2.name: z2})
    p = CellData("e", F2, F2, G2, G2, lambda x: z2.t_id(x))
    entry = export_cell(p)
    q = build_cell(entry, {F2.name: F2, G2.name: G2})
    assert export_cell(q) == entry
    assert not failing(check_cell(q))


def test_built_morphism_with_dangling_id(z2):
    doc = export_morphism(identity_morphism(z2))
    doc["maps"]["cubes"][0][1] = "missing"
    with pytest.raises(BoundaryError) as e:
        build_morphism(doc, {z2.name: z2})
    assert e.value.path == "morphism.maps.cubes[0][1]"


def test_condition_tags_are_stable():
    assert [str(c) for c in MORPHISM_CONDITIONS] == [f"M{n}" for n in range(5, 15)]
    assert MorphismCondition("M-STRICT-T") is MorphismCondition.STRICT_T

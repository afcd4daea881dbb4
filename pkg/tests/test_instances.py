from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from intercat.description import SchemaViolation
from intercat.finset import FinSet, compose
from intercat.instances import build_span_cospan, load_table_instance
from intercat.instances.duoidal import basic, chi_map
from intercat.instances.spancospan import diagram_problems
from intercat.instances.table import terminal_description
from intercat.model import BoundaryError, ConfigurationError, Obj, Sort, UndefinedOperation, boundary_problems, face
from tests.fixtures import arrow_description, edited

# -- duoidal -------------------------------------------------------------------------------


def test_basic_cell_enumerator(duoidal2):
    from intercat.instances import build_duoidal

    assert [b.data for b in build_duoidal(3).cells(Sort.BASIC)] == [0, 1, 2, 3]
    assert len(duoidal2.cells(Sort.OBJ)) == 1


def test_cube_enumerator_lists_every_function(duoidal2):
    # n^m functions m -> n for m, n in 0..2
    assert len(duoidal2.cells(Sort.CUBE)) == sum(n**m for m in range(3) for n in range(3))


def test_duoidal_needs_a_positive_cap():
    from intercat.instances import build_duoidal

    with pytest.raises(ConfigurationError):
        build_duoidal(0)


@pytest.mark.parametrize("a,b,c,d", list(itertools.product(range(3), repeat=4)))
def test_chi_cardinality_and_injectivity(duoidal2, a, b, c, d):
    f = duoidal2.chi(basic(a), basic(b), basic(c), basic(d)).data
    assert f.dom.size == a * b + c * d
    assert f.cod.size == (a + c) * (b + d)
    assert f.is_injective()
    if a * d and c * b:
        assert not f.is_surjective()
    assert f == chi_map(a, b, c, d)


# -- span-cospan ---------------------------------------------------------------------------


def test_enumerated_cells_are_valid_diagrams(span1):
    for s in Sort:
        for x in span1.cells(s):
            assert diagram_problems(x) == [], (s, x)
            assert boundary_problems(x) == []


def test_span_cospan_caps_are_deterministic():
    a = build_span_cospan(2).cells(Sort.BASIC)
    b = build_span_cospan(2).cells(Sort.BASIC)
    assert a == b
    assert len(a) <= 12


def test_chi_on_singleton_centers_commutes_with_all_legs(span1):
    a = span1.hid(span1.vid(Obj(FinSet(1))))
    assert a.data.apex.size == 1 and a.top.data.apex.size == 1 and a.left.data.apex.size == 1
    x = span1.chi(a, a, a, a)
    assert diagram_problems(x) == []
    back, front = x.back.data, x.front.data
    # the center map commutes with every leg of the two composite diagrams
    assert compose(back.to_left, x.left.data) == compose(x.data, front.to_left)
    assert compose(back.to_right, x.right.data) == compose(x.data, front.to_right)
    assert compose(back.from_top, x.data) == compose(x.top.data, front.from_top)
    assert compose(back.from_bottom, x.data) == compose(x.bottom.data, front.from_bottom)


def test_chi_is_a_special_cube(span1):
    B = Sort.BASIC
    cells = span1.cells(B)
    seen = 0
    for a in cells[:4]:
        for b in span1.cells(B, left=a.right)[:3]:
            for c in span1.cells(B, top=a.bottom)[:3]:
                for e in span1.cells(B, left=c.right, top=b.bottom)[:2]:
                    x = span1.chi(a, b, c, e)
                    for d in "hv":
                        for end in (0, 1):
                            assert face(x, d, end) == span1.t_id(face(x.back, d, end))
                    seen += 1
    assert seen > 0


def test_span_cospan_rejects_bad_cap():
    with pytest.raises(ConfigurationError):
        build_span_cospan(0)


# -- table loader ---------------------------------------------------------------------------


def test_terminal_loads():
    T = load_table_instance(terminal_description())
    assert all(len(T.cells(s)) == 1 for s in Sort)


def test_arrow_instance_has_two_objects():
    I = load_table_instance(arrow_description())
    assert len(I.cells(Sort.OBJ)) == 2
    f = I.by_id("f")
    assert f.src != f.tgt
    assert I.t_comp(I.by_id("1A"), f) == f


def test_corner_mismatch_in_description_is_a_boundary_error():
    def bad(inst):
        # top hor arrow ends at B while the right vertical starts at A
        inst["cells"]["basic_cells"].append(
            {"id": "bad", "top": "hB", "bottom": "hA", "left": "vA", "right": "vA"}
        )

    with pytest.raises(BoundaryError) as e:
        load_table_instance(edited(arrow_description(), bad))
    assert e.value.path == "instances[0].cells.basic_cells[2]"


def test_dangling_id_names_the_field():
    def bad(inst):
        inst["cells"]["hor_arrows"][0]["tgt"] = "nowhere"

    with pytest.raises(BoundaryError) as e:
        load_table_instance(edited(arrow_description(), bad))
    assert e.value.path.endswith("hor_arrows[0].tgt")
    assert "nowhere" in str(e.value)


def test_schema_violation_has_a_path():
    def bad(inst):
        inst["cells"]["objects"][0]["id"] = 3

    with pytest.raises(SchemaViolation) as e:
        load_table_instance(edited(arrow_description(), bad))
    assert "objects" in e.value.path


def test_wrong_result_sort_is_rejected():
    def bad(inst):
        inst["operations"]["h_comp"].append(["hA", "hA", "A"])

    with pytest.raises(BoundaryError):
        load_table_instance(edited(arrow_description(), bad))


def test_conflicting_rows_are_rejected():
    def bad(inst):
        inst["operations"]["t_comp"].append(["1A", "1A", "f"])

    with pytest.raises(BoundaryError):
        load_table_instance(edited(arrow_description(), bad))


def test_missing_rows_raise_undefined():
    def drop(inst):
        inst["operations"]["chi"] = []

    I = load_table_instance(edited(arrow_description(), drop))
    b = I.by_id("bA")
    with pytest.raises(UndefinedOperation):
        I.chi(b, b, b, b)


@given(st.sampled_from(["1A", "1B", "f"]), st.sampled_from(["1A", "1B", "f"]))
def test_arrow_instance_composition_matches_the_category(t, u):
    I = load_table_instance(arrow_description())
    x, y = I.by_id(t), I.by_id(u)
    if x.tgt != y.src:
        return
    z = I.t_comp(x, y)
    assert z.src == x.src and z.tgt == y.tgt

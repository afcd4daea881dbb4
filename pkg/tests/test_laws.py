from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intercat.finset import FinFun
from intercat.instances import load_table_instance
from intercat.instances.duoidal import DuoidalInstance
from intercat.instances.table import build_z2
from intercat.laws import (
    COHERENCE,
    LAWS,
    LawId,
    check_all,
    check_duoidal_coherence,
    check_interchanger_naturality,
    check_laws,
    check_weak_double,
    recheck,
)
from intercat.model import Sort, interchanger_frame, make_cell
from tests.fixtures import arrow_description, edited


class WrongChi(DuoidalInstance):
    """Duoidal sets with chi(1,1,1,1) replaced by a different injection 2 -> 4."""

    def _chi(self, a, b, c, e):
        if (a.data, b.data, c.data, e.data) == (1, 1, 1, 1):
            return make_cell(Sort.CUBE, interchanger_frame(self, "chi", (a, b, c, e)), FinFun.from_table((3, 0), 4))
        return super()._chi(a, b, c, e)


def test_every_tag_has_one_checker():
    assert set(LAWS) == set(LawId)
    assert len(COHERENCE) == 12


def test_weak_double_on_duoidal(duoidal2):
    for direction in ("horizontal", "vertical"):
        reports = check_weak_double(duoidal2, direction, budget=5000)
        assert all(r.passed and not r.vacuous for r in reports)
        pent = next(r for r in reports if r.law.value.endswith("PENTAGON"))
        # composable 4-tuples of basic cells plus 4-tuples of arrows, all listed exhaustively
        assert pent.exhaustive
        assert pent.families["basic"] == 3**4


def test_terminal_checks_one_tuple_per_family(terminal):
    r = check_all(terminal, 100)
    assert r.verdict == "pass"
    for law in r.reports:
        if law.law in (LawId.BOUNDARY, LawId.STRICT_T):
            continue
        assert set(law.families.values()) == {1}, law.law


def test_interchanger_naturality_on_duoidal(duoidal2):
    reports = check_interchanger_naturality(duoidal2, budget=2000)
    assert [r.law for r in reports] == [LawId.NAT_CHI, LawId.NAT_MU, LawId.NAT_DELTA, LawId.NAT_TAU]
    assert all(r.passed for r in reports)
    tau = reports[-1]
    assert tau.instances_checked == 1


def test_coherence_on_duoidal(duoidal2):
    reports = check_duoidal_coherence(duoidal2, budget=2000)
    assert [r.law for r in reports] == list(COHERENCE)
    assert all(r.passed and r.instances_checked > 0 for r in reports)


def test_wrong_chi_breaks_the_fourfold_square():
    r = check_laws(WrongChi(2), [LawId.C24], budget=2000)[0]
    assert not r.passed
    w = r.failures[0]
    assert "set:1" in w.inputs and w.lhs != w.rhs


def test_wrong_unit_breaks_the_triangle():
    r = check_all(build_z2({"lambda_h": "1"}), 500)
    assert LawId.WD_H_TRIANGLE in r.failing()


@pytest.mark.parametrize(
    "op,expected",
    [
        ("kappa_v", {LawId.C21, LawId.C24}),
        ("lambda_v", {LawId.C22, LawId.C25}),
        ("rho_v", {LawId.C23, LawId.C26}),
        ("kappa_h", {LawId.C27, LawId.C28}),
        ("lambda_h", {LawId.C29, LawId.C30}),
        ("rho_h", {LawId.C31, LawId.C32}),
        ("mu", {LawId.C22, LawId.C23, LawId.C29, LawId.C31}),
        ("delta", {LawId.C25, LawId.C26, LawId.C30, LawId.C32}),
    ],
)
def test_corrupted_structure_fails_named_coherence(op, expected):
    reports = check_duoidal_coherence(build_z2({op: "1"}), 200)
    assert {r.law for r in reports if r.failures} == expected


def test_witnesses_recheck_as_failures():
    I = build_z2({"chi": "1"})
    for r in check_duoidal_coherence(I, 200):
        for f in r.failures:
            assert recheck(I, LAWS[r.law], f)


def test_reports_are_deterministic(duoidal2):
    a = check_all(duoidal2, 300, seed=3).to_dict()
    b = check_all(duoidal2, 300, seed=3).to_dict()
    assert a == b


def test_sampled_laws_are_marked(duoidal2):
    r = check_laws(duoidal2, [LawId.C24], budget=50)[0]
    assert not r.exhaustive and r.instances_checked == 50


def test_empty_tables_are_flagged_not_passed():
    def drop(inst):
        inst["operations"]["tau"] = []

    I = load_table_instance(edited(arrow_description(), drop))
    r = check_all(I, 200)
    assert LawId.NAT_TAU in r.unchecked()
    tau = r.by_law()[LawId.NAT_TAU]
    assert tau.status == "unchecked" and tau.skipped > 0


@settings(max_examples=10)
@given(st.integers(0, 10_000))
def test_seed_changes_samples_not_verdicts(duoidal2, seed):
    r = check_laws(duoidal2, [LawId.C24, LawId.NAT_CHI], budget=30, seed=seed)
    assert all(x.passed for x in r)

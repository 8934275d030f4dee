import pytest

from semigb.errors import CapExceeded, GenerationFailed, InvalidDegree, PreconditionUnverified
from semigb.polyring import PolyRing, PolySequence
from semigb.series import degree_of_regularity
from semigb.verify import (
    CHECKS, InstanceSpec, golden_sequence, load_golden, random_affine_sequence, standard_suite,
    verify_all, verify_bounds, verify_degD_structure, verify_golden, verify_hf_recursion,
    verify_lm_coincidence, verify_quadratic_dreg_table,
)

from oracles import standard_count


def test_spec_validation():
    with pytest.raises(ValueError):
        InstanceSpec(73, 3, 0, ())
    with pytest.raises(ValueError):
        InstanceSpec(73, 3, 2, (2,))
    with pytest.raises(InvalidDegree):
        InstanceSpec(73, 3, 1, (0,))
    with pytest.raises(CapExceeded):
        InstanceSpec(73, 7, 1, (2,))
    with pytest.raises(CapExceeded):
        InstanceSpec(73, 3, 11, (2,) * 11)


def test_generation_deterministic():
    spec = InstanceSpec(73, 3, 4, (2, 2, 2, 2), seed=5)
    assert random_affine_sequence(spec) == random_affine_sequence(spec)
    other = InstanceSpec(73, 3, 4, (2, 2, 2, 2), seed=6)
    assert random_affine_sequence(spec) != random_affine_sequence(other)


def test_generated_instance_is_dense_and_certified():
    spec = InstanceSpec(73, 3, 4, (2, 2, 2, 2), seed=1)
    F = random_affine_sequence(spec)
    assert F.degrees == (2, 2, 2, 2)
    report = verify_hf_recursion(F)
    assert report.passed and report.details["D"] == 3


def test_generation_fails_when_never_artinian():
    with pytest.raises(GenerationFailed):
        random_affine_sequence(InstanceSpec(73, 3, 2, (2, 2)))
    F = random_affine_sequence(InstanceSpec(73, 3, 2, (2, 2), require_semiregular=False))
    assert len(F) == 2


def test_precondition_unverified():
    R = PolyRing(73, 2)
    F = PolySequence((R.parse("x1^2 + 1"), R.parse("x1^2 + x2")))
    with pytest.raises(PreconditionUnverified):
        verify_hf_recursion(F)


def test_worked_hf_recursion(F):
    frag = verify_hf_recursion(F)
    assert frag.passed
    rows = {r["d"]: r for r in frag.details["rows"]}
    assert (rows[2]["hf_hom"], rows[2]["hf_top"], rows[2]["hf_hom_prev"]) == (6, 2, 4)
    assert (rows[0]["hf_hom"], rows[0]["hf_top"], rows[0]["hf_hom_prev"]) == (1, 1, 0)


def test_worked_lm_coincidence(F):
    frag = verify_lm_coincidence(F)
    assert frag.passed
    rows = {r["d"]: r for r in frag.details["rows"]}
    want = sorted([[2, 0, 0, 0], [1, 1, 0, 0], [0, 2, 0, 0], [1, 0, 1, 0]])
    assert rows[2]["lm_hom"] == rows[2]["lm_top"] == want
    assert rows[0]["lm_hom"] == rows[1]["lm_hom"] == []


def test_worked_degD_structure(F):
    frag = verify_degD_structure(F)
    assert frag.passed and frag.details["monomials_checked"] == 10
    tops = {t["top"] for t in frag.details["degree_D_tops"]}
    assert "x2*x3^2" in tops


def test_worked_bounds(F):
    frag = verify_bounds(F)
    m = frag.details["measured"]
    assert frag.passed
    assert m["max_gb_deg"] == 1 and m["D"] == 3
    assert m["macaulay_bound"] == 5 and m["max_gb_deg_hom"] == 4
    assert m["sd_hsd"] <= 4 and m["sd_mac"] == 4


def test_quadratic_table():
    rows = verify_quadratic_dreg_table(range(2, 11))
    assert all(r["passed"] for r in rows)
    by_n = {r["n"]: r for r in rows}
    assert (by_n[3]["D"], by_n[3]["two_D_minus_2"]) == (3, 4)
    assert (by_n[4]["D"], by_n[4]["two_D_minus_2"]) == (3, 4)
    with pytest.raises(ValueError):
        verify_quadratic_dreg_table([1])
    # Lazard bound n + 2 for the quadratic shape with n = 3
    from semigb.series import macaulay_bound
    assert macaulay_bound(3, (2,) * 4) == 5


def test_golden():
    golden = load_golden()
    assert golden["p"] == 73 and golden["expected"]["D"] == 3
    F = golden_sequence(golden)
    assert degree_of_regularity(F.ring.n, F.degrees) == 3
    report = verify_golden()
    assert report.passed, [f.counterexample for f in report.fragments if not f.passed]
    assert {f.name for f in report.fragments} == set(CHECKS) | {"golden"}


def test_golden_detects_tampering():
    golden = load_golden()
    golden["expected"]["hf_hom"]["3"] = 5
    report = verify_golden(golden)
    bad = [f for f in report.fragments if not f.passed]
    assert [f.name for f in bad] == ["golden"] and bad[0].counterexample


def test_reports_are_order_independent(F):
    a = verify_all(F, CHECKS).to_dict()
    b = verify_all(F, tuple(reversed(CHECKS))).to_dict()
    assert a["checks"] == b["checks"]


def test_report_embeds_spec():
    spec = InstanceSpec(73, 2, 3, (2, 2, 2), seed=3)
    rep = verify_all(random_affine_sequence(spec), ("hf_recursion",), spec).to_dict()
    assert rep["spec"] == spec.to_dict() and rep["passed"]


def test_standard_suite_shape():
    suite = standard_suite()
    assert len(suite) >= 30
    assert len({(s.p, s.seed) for s in suite}) == len(suite)
    assert all(s.n <= 4 and s.m <= 7 and max(s.degrees) <= 3 for s in suite)


@pytest.mark.parametrize("spec", standard_suite()[::4], ids=lambda s: f"n{s.n}-m{s.m}-s{s.seed}")
def test_suite_sample_passes(spec):
    F = random_affine_sequence(spec)
    report = verify_all(F, spec=spec)
    assert report.passed, [f.to_dict() for f in report.fragments if not f.passed]
    # staircase oracle: the reduced GB of F^top leaves HF 0 in degree D
    from semigb.buchberger import buchberger
    D = report.fragments[0].details["D"]
    assert standard_count(buchberger(F.top()).lms(), spec.n, D) == 0

"""Verdict logic, radius formulas, proof steps, and the relaxation search."""

import numpy as np
import pytest

from bohrlab.checks import (
    Branch,
    ProofStep,
    RADIUS_CAP,
    SQRT_HALF,
    Status,
    bombieri_radius,
    build_radius_report,
    check_bb2_norm_bound,
    check_bohr,
    check_cor2,
    check_thm2_bounds,
    chi,
    coefficient_bound_eq14,
    cor2_rhs,
    counterexample_search,
    empirical_bohr_radius,
    majorant,
    proof_step_validate,
    sharpness_scan,
    thm1_admissible_radius,
    xi,
    xi_argmax,
)
from bohrlab.errors import (
    DomainError,
    HypothesisViolated,
    OutsideDomain,
    StepClassMismatch,
)
from bohrlab.functions import (
    HalfPlaneLift,
    MobiusLift,
    Polynomial,
    generate_thm1_instance,
    generate_thm2_instance,
    generate_transfer_instance,
    mobius_witness,
)
from bohrlab.linalg import identity


def scalar_majorant(lam: float, r: float) -> float:
    return lam + (1.0 - lam * lam) * r / (1.0 - lam * r)


# ---------------------------------------------------------------------------
# majorant and verdicts
# ---------------------------------------------------------------------------

def test_majorant_matches_scalar_closed_form():
    w = mobius_witness(0.75)
    series = w.coefficients(512)
    for r in (0.1, 0.3, 0.4, 0.45):
        partial, tail = majorant(series, r)
        val = float(partial[0, 0].real)
        assert abs(val - scalar_majorant(0.75, r)) <= 1e-12 + tail
        assert tail >= 0.0
    with pytest.raises(OutsideDomain):
        majorant(series, 1.0)
    with pytest.raises(ValueError):
        majorant(series, 0.5, N=1000)


def test_check_bohr_statuses_at_the_sharp_radius():
    w = mobius_witness(0.75)
    at = check_bohr(w, 0.4)
    # the majorant equals 1 exactly at r = 1/(1+2*0.75)
    assert at.status in (Status.HOLDS, Status.INCONCLUSIVE)
    assert abs(at.lhs_extreme) <= 1e-9

    past = check_bohr(w, 0.45)
    assert past.status is Status.VIOLATED
    assert past.witness is not None
    target = scalar_majorant(0.75, 0.45) - 1.0
    assert abs(past.lhs_extreme - target) <= 1e-9

    under = check_bohr(w, 0.3)
    assert under.status is Status.HOLDS
    assert under.holds and under.margin > 0.0


def test_check_bohr_domain():
    with pytest.raises(OutsideDomain):
        check_bohr(mobius_witness(0.5), 1.0)
    with pytest.raises(OutsideDomain):
        check_bohr(mobius_witness(0.5), -0.1)


def test_norm_class_bound_holds_for_transfer_functions():
    f = generate_transfer_instance(3, 3, seed=21)
    for r in (0.2, 0.5, 0.8):
        assert check_bb2_norm_bound(f, r).holds


def test_check_cor2_domain_and_gate():
    w = mobius_witness(0.6)
    with pytest.raises(DomainError):
        check_cor2(w, 0.2)
    with pytest.raises(DomainError):
        check_cor2(w, 0.8)
    assert check_cor2(w, 0.5).holds
    nonscalar = MobiusLift(np.eye(2), [0.3, 0.6], [1.0, 1.0], [1, 1])
    with pytest.raises(HypothesisViolated):
        check_cor2(nonscalar, 0.5)


# ---------------------------------------------------------------------------
# radius formulas
# ---------------------------------------------------------------------------

def test_radius_branches():
    inv = thm1_admissible_radius(np.diag([0.75]))
    assert inv.branch is Branch.INVERTIBLE
    assert abs(inv.value - 0.4) <= 1e-12

    sq = thm1_admissible_radius(np.diag([0.3]))
    assert sq.branch is Branch.SQRT
    assert abs(sq.value - np.sqrt(0.35)) <= 1e-12

    tie = thm1_admissible_radius(np.diag([0.5]))
    assert tie.branch is Branch.MAX
    assert abs(tie.value - 0.5) <= 1e-12

    # the inverse formula reads off the largest channel
    mixed = thm1_admissible_radius(np.diag([0.6, 0.9]))
    assert mixed.branch is Branch.INVERTIBLE
    assert abs(mixed.value - 1.0 / 2.8) <= 1e-12


def test_radius_formula_rejects_bad_coefficients():
    with pytest.raises(HypothesisViolated):
        thm1_admissible_radius(np.array([[0.0, 0.9], [0.0, 0.0]]))
    with pytest.raises(HypothesisViolated):
        thm1_admissible_radius(np.diag([1.0]))


def test_bombieri_radius_branches_meet_at_one_half():
    assert abs(bombieri_radius(0.75) - 0.4) <= 1e-15
    assert abs(bombieri_radius(0.3) - np.sqrt(0.35)) <= 1e-15
    assert abs(bombieri_radius(0.5) - 0.5) <= 1e-15
    with pytest.raises(DomainError):
        bombieri_radius(1.0)


def test_guaranteed_radius_is_loewner_monotone_safe(thm1_population):
    # every generated instance must hold strictly below its guarantee
    for f in thm1_population[:20]:
        rep = thm1_admissible_radius(f.coefficient0())
        assert 0.0 < rep.value <= SQRT_HALF + 1e-12
        assert check_bohr(f, max(0.0, rep.value - 1e-4)).holds


# ---------------------------------------------------------------------------
# scalar envelope helpers
# ---------------------------------------------------------------------------

def test_cor2_rhs_endpoints():
    assert abs(cor2_rhs(1.0 / 3.0) - 1.0) <= 1e-12
    assert abs(cor2_rhs(SQRT_HALF) - np.sqrt(2.0)) <= 1e-12
    with pytest.raises(DomainError):
        cor2_rhs(0.2)


def test_chi_peaks_at_twice_r_below_the_crossover():
    for r in (0.35, 0.5, 0.65):
        xs = np.linspace(0.0, r, 400)
        peak = max(chi(float(x), r) for x in xs)
        assert abs(peak - 2.0 * r) <= 1e-6
    with pytest.raises(DomainError):
        chi(1.0, 0.5)


def test_xi_argmax_attains_the_envelope():
    for r in (0.35, 0.45, 0.6, 0.7):
        x0 = xi_argmax(r)
        assert 0.0 < x0 < 1.0
        assert abs(xi(x0, r) - cor2_rhs(r)) <= 1e-12
        for x in np.linspace(0.0, 0.998, 300):
            assert xi(float(x), r) <= cor2_rhs(r) + 1e-9


# ---------------------------------------------------------------------------
# proof steps
# ---------------------------------------------------------------------------

def test_every_contractive_step_passes_on_a_generated_instance():
    f = generate_thm1_instance(4, seed=99)
    for token in ("eq5", "eq9", "eq10", "eq12", "eq14"):
        rep = proof_step_validate(f, token)
        assert rep.verdict.holds, token
        assert rep.step is ProofStep(token)


def test_eq11_needs_radius_below_the_smallest_channel():
    f = mobius_witness(0.75)
    rep = proof_step_validate(f, "eq11", r=0.4)
    assert rep.verdict.holds
    with pytest.raises(HypothesisViolated):
        proof_step_validate(f, "eq11", r=0.9)


def test_real_part_steps_pass_on_generated_instances():
    f = generate_thm2_instance(3, seed=41)
    for token in ("eq1", "eq2", "thm2final"):
        assert proof_step_validate(f, token, r=0.3).verdict.holds, token


def test_step_class_gates():
    m = mobius_witness(0.5)
    h = generate_thm2_instance(2, seed=8)
    with pytest.raises(StepClassMismatch):
        proof_step_validate(h, "eq5")
    with pytest.raises(StepClassMismatch):
        proof_step_validate(h, "bb2remark")
    # contractive instances fail the PSD initial-coefficient requirement
    neg = MobiusLift(np.eye(1), [-0.5], [1.0], [1])
    with pytest.raises(HypothesisViolated):
        proof_step_validate(neg, "eq1")
    assert proof_step_validate(m, "bb2remark", r=0.5).verdict.holds


def test_step_parameter_domains():
    f = mobius_witness(0.5)
    with pytest.raises(ValueError):
        proof_step_validate(f, "eq9", k=0)
    with pytest.raises(DomainError):
        proof_step_validate(f, "eq12", r=1.0)
    with pytest.raises(ValueError):
        proof_step_validate(f, "not-a-step")


def test_eq14_decimation_chain():
    f = generate_thm1_instance(3, seed=17)
    reports = coefficient_bound_eq14(f, max_n=8)
    assert len(reports) == 8
    assert all(rep.verdict.holds for rep in reports)
    assert [rep.k_or_r for rep in reports] == [float(n) for n in range(1, 9)]


# ---------------------------------------------------------------------------
# composite real-part bounds
# ---------------------------------------------------------------------------

def test_thm2_bounds_hold_and_gate():
    f = generate_thm2_instance(4, seed=23)
    bounds = check_thm2_bounds(f, 1.0 / 3.0 - 1e-6)
    assert bounds.bohr.holds
    assert bounds.eq2.verdict.holds
    assert bounds.final.verdict.holds
    neg = MobiusLift(np.eye(1), [-0.5], [1.0], [1])
    with pytest.raises(HypothesisViolated):
        check_thm2_bounds(neg, 0.3)


def test_thm2_extremal_instance_is_sharp_at_one_third():
    f = HalfPlaneLift(np.eye(1), [0.5], 1.0, 1.0 - 1e-6)
    at = check_bohr(f, 1.0 / 3.0)
    assert abs(at.lhs_extreme) <= 1e-4
    past = check_bohr(f, 0.35)
    assert past.status is Status.VIOLATED
    oracle = 0.5 + 0.35 / 0.65 - 1.0
    assert abs(past.lhs_extreme - oracle) <= 1e-4


# ---------------------------------------------------------------------------
# empirical radius and sharpness
# ---------------------------------------------------------------------------

def test_empirical_radius_bisects_the_witness_boundary():
    emp = empirical_bohr_radius(mobius_witness(0.75))
    assert abs(emp - 0.4) <= 1e-5
    with pytest.raises(ValueError):
        empirical_bohr_radius(mobius_witness(0.75), tol=1e-7)


def test_empirical_radius_caps_for_exact_series():
    zI = Polynomial([np.zeros((2, 2)), identity(2)])
    assert empirical_bohr_radius(zI) == RADIUS_CAP
    rep = build_radius_report(zI)
    assert rep.capped
    assert rep.branch is Branch.SQRT
    assert abs(rep.guaranteed_radius - np.sqrt(0.5)) <= 1e-12


def test_radius_report_margin_sign():
    rep = build_radius_report(mobius_witness(0.3))
    assert abs(rep.guaranteed_radius - np.sqrt(0.35)) <= 1e-12
    assert rep.empirical_radius >= rep.guaranteed_radius - 1e-6
    assert abs(rep.margin - (rep.empirical_radius - rep.guaranteed_radius)) <= 1e-15


def test_sharpness_scan_confirms_the_witness_family():
    rows = sharpness_scan([0.5, 0.75, 0.9])
    assert all(row.confirmed for row in rows)
    for row in rows:
        assert abs(row.guaranteed - 1.0 / (1.0 + 2.0 * row.lam)) <= 1e-15
        assert row.excess_at_delta > 0.0
    with pytest.raises(DomainError):
        sharpness_scan([0.4])


# ---------------------------------------------------------------------------
# relaxation search
# ---------------------------------------------------------------------------

def test_drop_commutation_search_finds_a_witness():
    result = counterexample_search("drop-commutation", 2, budget=10, seed=1)
    assert result.witness is not None
    w = result.witness
    assert w.verdict.status is Status.VIOLATED
    assert result.trials == w.trial + 1
    # the witness must re-verify from scratch at the same radius
    again = check_bohr(w.function, w.radius)
    assert again.status is Status.VIOLATED
    assert again.lhs_extreme == w.verdict.lhs_extreme


def test_search_is_deterministic_in_seed():
    a = counterexample_search("drop-commutation", 2, budget=10, seed=1)
    b = counterexample_search("drop-commutation", 2, budget=10, seed=1)
    assert a.trials == b.trials and a.skipped == b.skipped
    assert a.witness.radius == b.witness.radius
    assert a.witness.verdict.lhs_extreme == b.witness.verdict.lhs_extreme


def test_search_skips_dimension_one_for_structure_relaxations():
    result = counterexample_search("drop-commutation", 1, budget=5, seed=0)
    assert result.witness is None
    assert result.skipped == 5 and result.trials == 5


def test_weak_norm_bound_search_reports_none_honestly():
    result = counterexample_search("weak-norm-bound", 2, budget=5, seed=0)
    assert result.witness is None
    assert result.trials == 5
    with pytest.raises(ValueError):
        counterexample_search("weak-norm-bound", 2, budget=0, seed=0)
    with pytest.raises(ValueError):
        counterexample_search("drop-everything", 2, budget=5, seed=0)

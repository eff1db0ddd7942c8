"""Acceptance gate: one test per numbered requirement.

Each test prints a single "[criterion NN] PASS/FAIL" line with the
measured quantities, then asserts. Run with -rA to see every line.
"""

import json

import numpy as np
import pytest

from bohrlab import (
    ProofStep,
    Status,
    check_bb2_norm_bound,
    check_bohr,
    check_cor2,
    check_thm2_bounds,
    coefficient_bound_eq14,
    cor2_rhs,
    empirical_bohr_radius,
    majorant,
    mobius_witness,
    proof_step_validate,
    thm1_admissible_radius,
)
from bohrlab.checks import SQRT_HALF, default_z_samples
from bohrlab.cli import main
from bohrlab.fileio import canonical_dumps
from bohrlab.functions import (
    FunctionSamples,
    HalfPlaneLift,
    Polynomial,
    coefficients_dft,
    reconstruct_from_transform,
    schur_transform,
)
from bohrlab.linalg import (
    abs_operator,
    frobenius,
    hermitian_eigen,
    hermitian_part,
    identity,
    loewner_leq,
    operator_norm,
    psd_sqrt,
    random_hermitian,
    random_unitary,
)

DECADE_RADII = tuple(round(0.1 * k, 1) for k in range(1, 10))


def _line(num: int, ok: bool, detail: str) -> None:
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {num:02d} failed: {detail}"


def _counts(verdicts) -> dict:
    out = {Status.HOLDS: 0, Status.VIOLATED: 0, Status.INCONCLUSIVE: 0}
    for v in verdicts:
        out[v.status] += 1
    return out


def test_criterion_01_guaranteed_radius_suite(thm1_population):
    verdicts = []
    for f in thm1_population:
        guaranteed = thm1_admissible_radius(f.coefficient0()).value
        verdicts.append(check_bohr(f, max(0.0, guaranteed - 1e-6)))
    c = _counts(verdicts)
    ok = c[Status.HOLDS] == 200 and c[Status.VIOLATED] == 0 and c[Status.INCONCLUSIVE] == 0
    _line(1, ok, f"holds={c[Status.HOLDS]}/200 violated={c[Status.VIOLATED]} "
                 f"inconclusive={c[Status.INCONCLUSIVE]} at guaranteed-1e-6")


def test_criterion_02_one_third_suite(thm1_population):
    verdicts = [check_bohr(f, 1.0 / 3.0) for f in thm1_population]
    c = _counts(verdicts)
    ok = c[Status.HOLDS] == 200
    _line(2, ok, f"holds={c[Status.HOLDS]}/200 at r=1/3")


def test_criterion_03_sharp_radius_for_fixed_leading_term():
    worst_radius = 0.0
    worst_majorant = 0.0
    for lam in (0.5, 0.6, 0.75, 0.9, 0.99):
        target = 1.0 / (1.0 + 2.0 * lam)
        w = mobius_witness(lam)
        worst_radius = max(worst_radius, abs(empirical_bohr_radius(w) - target))
        partial, _ = majorant(w.coefficients(2048), target)
        value = float(np.real(partial[0, 0]))
        oracle = lam + (1.0 - lam * lam) * target / (1.0 - lam * target)
        worst_majorant = max(worst_majorant, abs(value - 1.0), abs(oracle - 1.0))
    ok = worst_radius <= 1e-5 and worst_majorant <= 1e-9
    _line(3, ok, f"max|empirical-1/(1+2lam)|={worst_radius:.2e} "
                 f"max|majorant-1|={worst_majorant:.2e}")


def test_criterion_04_envelope_equality_family():
    worst_sup_err = 0.0
    members = 0
    holds = 0
    for r in (0.35, 0.4, 0.5, 0.6, SQRT_HALF):
        target = cor2_rhs(r)
        grid = np.arange(r, 1.0, 1e-3)
        sup = max(lam + (1.0 - lam * lam) * r / (1.0 - lam * r) for lam in grid)
        worst_sup_err = max(worst_sup_err, abs(sup - target))
        for lam in grid:
            # the witness constructor caps anchors at 1 - 1e-3
            w = mobius_witness(min(float(lam), 1.0 - 1e-3))
            members += 1
            if check_cor2(w, r).holds:
                holds += 1
    base_err = abs(cor2_rhs(1.0 / 3.0) - 1.0)
    ok = worst_sup_err <= 1e-3 and holds == members and base_err <= 1e-12
    _line(4, ok, f"sup_err={worst_sup_err:.2e} holds={holds}/{members} "
                 f"|rhs(1/3)-1|={base_err:.2e}")


def test_criterion_05_norm_class_bound(thm1_population, transfer_population):
    checked = 0
    holds = 0
    for f in thm1_population + transfer_population:
        for r in DECADE_RADII:
            checked += 1
            if check_bb2_norm_bound(f, r).holds:
                holds += 1
    grid = np.linspace(1.0 / 3.0, SQRT_HALF, 1000)
    envelope_ok = all(
        1.0 - 1e-12 <= cor2_rhs(float(r)) <= 1.0 / np.sqrt(1.0 - r * r) + 1e-12
        for r in grid
    )
    ok = holds == checked == 2700 and envelope_ok
    _line(5, ok, f"holds={holds}/{checked} envelope_ok={envelope_ok}")


def test_criterion_06_real_part_class_suite(thm2_population):
    all_hold = 0
    for f in thm2_population:
        b = check_thm2_bounds(f, 1.0 / 3.0 - 1e-6)
        if b.bohr.holds and b.eq2.verdict.holds and b.final.verdict.holds:
            all_hold += 1
    extremal = HalfPlaneLift(np.eye(1), [0.5], 1.0, 1.0 - 1e-6)
    at_third = check_bohr(extremal, 1.0 / 3.0)
    at_35 = check_bohr(extremal, 0.35)
    oracle_excess = 0.5 + 0.35 / (1.0 - 0.35) - 1.0
    ok = (
        all_hold == 200
        and abs(at_third.lhs_extreme) <= 1e-4
        and at_35.status is Status.VIOLATED
        and abs(at_35.lhs_extreme - oracle_excess) <= 1e-4
    )
    _line(6, ok, f"all_hold={all_hold}/200 |sum(1/3)-1|={abs(at_third.lhs_extreme):.2e} "
                 f"excess(0.35) err={abs(at_35.lhs_extreme - oracle_excess):.2e}")


def test_criterion_07_derivation_chain(thm1_population, thm2_population):
    zs = default_z_samples(64)
    failures = []
    pair_count = 0
    for i, f in enumerate(thm1_population):
        if not proof_step_validate(f, ProofStep.EQ5, z_samples=zs).verdict.holds:
            failures.append(f"eq5@{i}")
        for k in (1, 2, 5, 20):
            if not proof_step_validate(f, ProofStep.EQ9, k=k).verdict.holds:
                failures.append(f"eq9:k={k}@{i}")
        if not proof_step_validate(f, ProofStep.EQ10).verdict.holds:
            failures.append(f"eq10@{i}")
        if not proof_step_validate(f, ProofStep.EQ12, r=0.5).verdict.holds:
            failures.append(f"eq12@{i}")
        if not all(rep.verdict.holds for rep in coefficient_bound_eq14(f, max_n=32)):
            failures.append(f"eq14@{i}")
        absA0 = abs_operator(f.coefficient0())
        for r in DECADE_RADII:
            if not loewner_leq(r * identity(f.dim), absA0).holds:
                continue
            pair_count += 1
            if not proof_step_validate(f, ProofStep.EQ11, r=r).verdict.holds:
                failures.append(f"eq11:r={r}@{i}")
    for i, f in enumerate(thm2_population):
        if not proof_step_validate(f, ProofStep.EQ1, z_samples=zs).verdict.holds:
            failures.append(f"eq1@{i}")
        if not proof_step_validate(f, ProofStep.EQ2, r=0.5).verdict.holds:
            failures.append(f"eq2@{i}")
    ok = not failures and pair_count > 0
    _line(7, ok, f"failures={failures[:4]} applicable_eq11_pairs={pair_count}")


def test_criterion_08_functional_calculus_suite():
    worst = {"eigen": 0.0, "isometry": 0.0, "root_comm": 0.0, "root_prod": 0.0, "fp": 0.0}
    floor = {"inv_order": np.inf, "root_order": np.inf}
    for i in range(500):
        dim = 1 + i % 8
        H = random_hermitian(dim, seed=8000 + i)
        eig = hermitian_eigen(H)
        recon = eig.basis @ np.diag(eig.eigenvalues) @ eig.basis.conj().T
        worst["eigen"] = max(worst["eigen"], frobenius(recon - H) / (1.0 + frobenius(H)))

        rng = np.random.default_rng(8500 + i)
        A = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        x = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        lhs = float(np.linalg.norm(abs_operator(A) @ x) ** 2)
        rhs = float(np.linalg.norm(A @ x) ** 2)
        worst["isometry"] = max(worst["isometry"], abs(lhs - rhs) / (1.0 + rhs))

        # commuting pairs share an eigenbasis by construction
        Q = random_unitary(dim, rng)
        small = rng.uniform(0.2, 1.2, dim)
        big = small + rng.uniform(0.0, 1.0, dim)
        P_big = hermitian_part(Q @ np.diag(big) @ Q.conj().T)
        P_small = hermitian_part(Q @ np.diag(small) @ Q.conj().T)
        s_big = psd_sqrt(P_big)
        s_small = psd_sqrt(P_small)
        worst["root_comm"] = max(
            worst["root_comm"], operator_norm(s_big @ s_small - s_small @ s_big)
        )
        worst["root_prod"] = max(
            worst["root_prod"],
            operator_norm(psd_sqrt(hermitian_part(P_big @ P_small)) - s_big @ s_small),
        )
        inv_gap = hermitian_eigen(
            hermitian_part(np.linalg.inv(P_small) - np.linalg.inv(P_big))
        ).eigenvalues[0]
        floor["inv_order"] = min(floor["inv_order"], float(inv_gap))
        root_gap = hermitian_eigen(hermitian_part(s_big - s_small)).eigenvalues[0]
        floor["root_order"] = min(floor["root_order"], float(root_gap))

        Q2 = random_unitary(dim, rng)
        N = Q @ np.diag(rng.standard_normal(dim) + 1j * rng.standard_normal(dim)) @ Q.conj().T
        M = Q2 @ np.diag(rng.standard_normal(dim) + 1j * rng.standard_normal(dim)) @ Q2.conj().T
        B = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        a = frobenius(N @ B - B @ M)
        b = frobenius(N.conj().T @ B - B @ M.conj().T)
        worst["fp"] = max(worst["fp"], abs(a - b) / (1.0 + a))
    ok = (
        worst["eigen"] <= 1e-10
        and worst["isometry"] <= 1e-8
        and worst["root_comm"] <= 1e-9
        and worst["root_prod"] <= 1e-8
        and floor["inv_order"] >= -1e-9
        and floor["root_order"] >= -1e-8
        and worst["fp"] <= 1e-8
    )
    _line(8, ok, f"eigen={worst['eigen']:.1e} isometry={worst['isometry']:.1e} "
                 f"root_comm={worst['root_comm']:.1e} root_prod={worst['root_prod']:.1e} "
                 f"inv_order={floor['inv_order']:.1e} root_order={floor['root_order']:.1e} "
                 f"fp={worst['fp']:.1e}")


def _bounded_polynomial(dim: int, degree: int, seed: int) -> Polynomial:
    """Coefficient norms 0.3 * 0.5^k keep the boundary sup below 0.6."""
    rng = np.random.default_rng(seed)
    coeffs = []
    for k in range(degree + 1):
        A = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        coeffs.append(A * (0.3 * 0.5**k / max(operator_norm(A), 1e-12)))
    return Polynomial(coeffs)


def _bounded_halfplane(dim: int, seed: int) -> HalfPlaneLift:
    """Instance with sup norm at most 1 so the aliasing bound applies."""
    rng = np.random.default_rng(seed)
    basis = random_unitary(dim, rng)
    diag = rng.uniform(0.0, 0.5, dim)
    beta = 0.5 * np.exp(2j * np.pi * rng.uniform())
    t = 0.25 * (1.0 - abs(beta)) * (0.5 + 0.5 * rng.uniform())
    return HalfPlaneLift(basis, diag, float(t), complex(beta))


def test_criterion_09_coefficient_oracle(thm1_population, transfer_population):
    instances = (
        thm1_population[:50]
        + transfer_population[:50]
        + [_bounded_polynomial(1 + i % 4, 1 + i % 5, seed=900 + i) for i in range(50)]
        + [_bounded_halfplane(1 + i % 8, seed=950 + i) for i in range(50)]
    )
    worst_excess = -np.inf
    for f in instances:
        exact = f.coefficients(6)
        approx = coefficients_dft(f, 0.5, 6, 32)
        for n in range(7):
            err = operator_norm(exact.coeffs[n] - approx.coeffs[n])
            worst_excess = max(worst_excess, err - float(approx.aliasing_bounds[n]))
    scalar_err = 0.0
    for lam in (0.3, 0.5, 0.75, 0.9, 0.99):
        coeffs = mobius_witness(lam).coefficients(64).coeffs
        scalar_err = max(scalar_err, abs(coeffs[0][0, 0] - lam))
        for n in range(1, 65):
            target = -(1.0 - lam * lam) * lam ** (n - 1)
            scalar_err = max(scalar_err, abs(coeffs[n][0, 0] - target))
    ok = worst_excess <= 0.0 and scalar_err <= 1e-10
    _line(9, ok, f"instances={len(instances)} worst(err-bound)={worst_excess:.2e} "
                 f"scalar_coeff_err={scalar_err:.2e}")


def test_criterion_10_transform_round_trip(thm1_population):
    zs = default_z_samples(16)
    worst_rt = 0.0
    worst_origin = 0.0
    worst_norm = 0.0
    for f in thm1_population[:100]:
        worst_origin = max(worst_origin, operator_norm(schur_transform(f, 0.0)))
        phis = np.stack([schur_transform(f, z) for z in zs])
        worst_norm = max(worst_norm, max(operator_norm(p) for p in phis))
        rebuilt = reconstruct_from_transform(f.coefficient0(), FunctionSamples(zs, phis))
        direct = f.sample(zs)
        worst_rt = max(
            worst_rt,
            max(operator_norm(rebuilt.values[k] - direct.values[k]) for k in range(len(zs))),
        )
    ok = worst_rt <= 1e-8 and worst_origin <= 1e-10 and worst_norm <= 1.0 + 1e-9
    _line(10, ok, f"round_trip={worst_rt:.2e} |phi(0)|={worst_origin:.2e} "
                  f"max|phi|={worst_norm:.12f}")


def test_criterion_11_determinism_and_exit_codes(tmp_path):
    work = tmp_path / "campaign"

    def run_campaign() -> dict:
        assert main(["gen", "--class", "thm1", "--dim", "2", "--dim", "3",
                     "--count", "4", "--seed", "0", "--out", str(work)]) == 0
        files = [str(work / f"thm1_{i:04d}.json") for i in range(4)]
        assert main(["verify", *files, "--theorem", "cor1",
                     "--out", str(work / "verdicts.json")]) == 0
        assert main(["report", str(work / "verdicts.json"),
                     "--out", str(work / "report.md")]) == 0
        return {p.name: p.read_bytes() for p in sorted(work.iterdir())}

    first = run_campaign()
    second = run_campaign()
    deterministic = first == second and len(first) == 6

    cfg75 = tmp_path / "pin75.json"
    cfg75.write_text(canonical_dumps({"class": "thm1", "count": 1, "pin_lambda": 0.75}))
    cfg0 = tmp_path / "pin0.json"
    cfg0.write_text(canonical_dumps({"class": "thm1", "count": 1, "pin_lambda": 0.0}))
    assert main(["gen", "--config", str(cfg75), "--out", str(tmp_path / "p75")]) == 0
    assert main(["gen", "--config", str(cfg0), "--out", str(tmp_path / "p0")]) == 0
    pin75 = str(tmp_path / "p75" / "thm1_0000.json")
    pin0 = str(tmp_path / "p0" / "thm1_0000.json")

    codes = (
        main(["verify", pin75, "--r", "0.4"]),
        main(["verify", pin75, "--r", "0.45"]),
        main(["verify", pin0, "--r", "0.999"]),
        main(["proofcheck", pin75, "--steps", "eq1"]),
        main(["search", "--relax", "drop-commutation", "--dim", "2",
              "--seed", "1", "--budget", "10", "--out", str(tmp_path / "s")]),
    )
    expected = (0, 2, 3, 1, 4)
    ok = deterministic and codes == expected
    _line(11, ok, f"byte_identical={deterministic} exit_codes={codes} expected={expected}")

"""Bohr-type inequality verdicts in the Loewner order.

Every check compares a truncated majorant series against a closed-form
right-hand side, carrying a certified scalar tail bound so that "Holds"
and "Violated" are both sound statements about the full series.
Equality witnesses land on the Boundary verdict, which counts as a pass
(the underlying inequalities are non-strict).

Proof-step identifiers (eq5, eq9, ..., thm2final) are stable interface
tokens; each one's meaning is spelled out in `proof_step_validate`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DomainError,
    HypothesisViolated,
    OutsideDomain,
    StepClassMismatch,
)
from .linalg import (
    LoewnerVerdict,
    Order,
    abs_operator,
    as_matrix,
    commutator_norm,
    hermitian_eigen,
    hermitian_part,
    identity,
    is_normal,
    loewner_leq,
    operator_norm,
    psd_sqrt,
    random_unitary,
)
from .functions import (
    CoefficientSeries,
    HalfPlaneLift,
    MobiusLift,
    OperatorFunction,
    Polynomial,
    certified_sup,
    decimate,
    generate_thm1_instance,
    hypothesis_check,
    mobius_witness,
)

INITIAL_N = 64
MAX_N = 4096
DEFAULT_BOHR_TOL = 1e-9
GRAM_TOL = 1e-8
SERIES_TAIL_TARGET = 1e-12
RADIUS_CAP = 1.0 - 1e-6
SQRT_HALF = 1.0 / np.sqrt(2.0)


class Status(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BohrVerdict:
    """Three-valued outcome of a majorant comparison.

    ``lhs_extreme`` is the largest eigenvalue of (partial sum - RHS);
    ``truncation_gap`` is the certified bound on what the dropped tail
    could add. Holds means lhs_extreme + truncation_gap <= tol; Violated
    means the partial sum alone already sticks out by more than tol, with
    a unit witness vector.
    """

    status: Status
    r: float
    lhs_extreme: float
    truncation_gap: float
    N_used: int
    witness: np.ndarray | None = None

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def margin(self) -> float:
        return -self.lhs_extreme


def majorant(series: CoefficientSeries, r: float, N: int | None = None):
    """Partial sum of |A_n| r^n up to N, plus the certified scalar tail.

    The tail bounds the operator norm of everything beyond N:
    tail_norm_bound * r^(N+1) / (1 - r).
    """
    if not 0.0 <= r < 1.0:
        raise OutsideDomain("majorant needs 0 <= r < 1")
    if N is None:
        N = series.order
    if not 0 <= N <= series.order:
        raise ValueError("N must lie within the stored coefficient range")
    dim = series.dim
    partial = np.zeros((dim, dim), dtype=np.complex128)
    for n in range(N + 1):
        partial += abs_operator(series.coeffs[n]) * r**n
    tail = series.tail_norm_bound * r ** (N + 1) / (1.0 - r)
    return hermitian_part(partial), tail


def _partial_and_tail(
    series: CoefficientSeries, r: float, *, drop_a0: bool, square: bool
):
    dim = series.dim
    partial = np.zeros((dim, dim), dtype=np.complex128)
    start = 1 if drop_a0 else 0
    for n in range(start, series.order + 1):
        A = series.coeffs[n]
        term = A.conj().T @ A if square else abs_operator(A)
        partial += term * r**n
    c = series.tail_norm_bound
    tail = (c * c if square else c) * r ** (series.order + 1) / (1.0 - r)
    return hermitian_part(partial), tail


def _adaptive_bohr(
    f: OperatorFunction,
    r: float,
    rhs: np.ndarray,
    tol: float,
    *,
    drop_a0: bool = False,
    initial_N: int = INITIAL_N,
    max_N: int = MAX_N,
) -> BohrVerdict:
    """Core loop: escalate the truncation order until conclusive.

    Partial majorant sums are Loewner-monotone in N, so a Violated
    verdict at any finite N is already sound for the full series.
    """
    N = initial_N
    while True:
        series = f.coefficients(N)
        partial, tail = _partial_and_tail(series, r, drop_a0=drop_a0, square=False)
        gap = hermitian_part(partial - rhs)
        eig = hermitian_eigen(gap)
        extreme = float(eig.eigenvalues[-1])
        if extreme > tol:
            witness = eig.basis[:, -1].copy()
            return BohrVerdict(Status.VIOLATED, r, extreme, tail, N, witness)
        if extreme + tail <= tol:
            return BohrVerdict(Status.HOLDS, r, extreme, tail, N)
        if N >= max_N:
            return BohrVerdict(Status.INCONCLUSIVE, r, extreme, tail, N)
        N = min(2 * N, max_N)


def check_bohr(f: OperatorFunction, r: float, tol: float = DEFAULT_BOHR_TOL) -> BohrVerdict:
    """Is the full majorant series at radius r below the identity?"""
    if not 0.0 <= r < 1.0:
        raise OutsideDomain("check_bohr needs 0 <= r < 1")
    return _adaptive_bohr(f, r, identity(f.dim), tol)


def check_bb2_norm_bound(
    f: OperatorFunction, r: float, tol: float = DEFAULT_BOHR_TOL
) -> BohrVerdict:
    """Majorant series against the norm-class bound (1/sqrt(1-r^2)) I."""
    if not 0.0 <= r < 1.0:
        raise OutsideDomain("check_bb2_norm_bound needs 0 <= r < 1")
    rhs = identity(f.dim) / np.sqrt(1.0 - r * r)
    return _adaptive_bohr(f, r, rhs, tol)


def check_cor2(f: OperatorFunction, r: float, tol: float = DEFAULT_BOHR_TOL) -> BohrVerdict:
    """Majorant series of a scalar-A0 instance against cor2_rhs(r) I."""
    if not (1.0 / 3.0 - 1e-12 <= r <= SQRT_HALF + 1e-12):
        raise DomainError("check_cor2 needs r in [1/3, 1/sqrt(2)]")
    report = hypothesis_check(f, "cor2")
    if not report.passed:
        raise HypothesisViolated(
            "cor2 hypotheses fail: " + ", ".join(report.failures())
        )
    rhs = cor2_rhs(r) * identity(f.dim)
    return _adaptive_bohr(f, r, rhs, tol)


# ---------------------------------------------------------------------------
# radius formulas
# ---------------------------------------------------------------------------

class Branch(Enum):
    INVERTIBLE = "invertible"
    SQRT = "sqrt"
    MAX = "max"


@dataclass(frozen=True)
class AdmissibleRadius:
    value: float
    branch: Branch


@dataclass(frozen=True)
class RadiusReport:
    guaranteed_radius: float
    empirical_radius: float
    margin: float
    branch: Branch
    capped: bool


def _radius_from_abs(abs_a0: np.ndarray) -> AdmissibleRadius:
    """Guaranteed radius from |A_0| alone (no hypothesis gating).

    The sqrt formula lambda_min(((I-|A0|)/2)^(1/2)) is always admissible;
    the inverse formula lambda_min((I+2|A0|)^(-1)) is added when
    |A0| >= I/2 holds (Boundary counts). Ties within 1e-12 are tagged MAX.
    """
    dim = abs_a0.shape[0]
    eye = identity(dim)
    S = psd_sqrt(hermitian_part((eye - abs_a0) / 2.0))
    r_sqrt = float(hermitian_eigen(S).eigenvalues[0])
    half_ok = loewner_leq(eye / 2.0, abs_a0).holds
    if not half_ok:
        return AdmissibleRadius(r_sqrt, Branch.SQRT)
    inv = hermitian_part(np.linalg.inv(eye + 2.0 * abs_a0))
    r_inv = float(hermitian_eigen(inv).eigenvalues[0])
    if abs(r_inv - r_sqrt) <= 1e-12:
        return AdmissibleRadius(max(r_inv, r_sqrt), Branch.MAX)
    if r_inv > r_sqrt:
        return AdmissibleRadius(r_inv, Branch.INVERTIBLE)
    return AdmissibleRadius(r_sqrt, Branch.SQRT)


def thm1_admissible_radius(A0) -> AdmissibleRadius:
    """Guaranteed Bohr radius for a normal contraction coefficient A_0."""
    A0 = as_matrix(A0)
    if not is_normal(A0, tol=1e-10):
        raise HypothesisViolated("A_0 must be normal")
    if operator_norm(A0) >= 1.0:
        raise HypothesisViolated("||A_0|| < 1 is required")
    return _radius_from_abs(abs_operator(A0))


def bombieri_radius(lam: float) -> float:
    """Scalar guaranteed radius for initial coefficient magnitude lam."""
    if not 0.0 <= lam < 1.0:
        raise DomainError("lam must lie in [0, 1)")
    if lam >= 0.5:
        return 1.0 / (1.0 + 2.0 * lam)
    return float(np.sqrt((1.0 - lam) / 2.0))


# ---------------------------------------------------------------------------
# scalar helpers for the intermediate-range bound
# ---------------------------------------------------------------------------

def cor2_rhs(r: float) -> float:
    """(3 - sqrt(8(1-r^2))) / r on [1/3, 1/sqrt(2)]."""
    if not (1.0 / 3.0 - 1e-12 <= r <= SQRT_HALF + 1e-12):
        raise DomainError("cor2_rhs needs r in [1/3, 1/sqrt(2)]")
    return (3.0 - np.sqrt(8.0 * (1.0 - r * r))) / r


def chi(x: float, r: float) -> float:
    """x + r sqrt(1-x^2)/sqrt(1-r^2); on [0, r] its max is 2r."""
    if not 0.0 <= x < 1.0:
        raise DomainError("chi needs x in [0, 1)")
    if not 0.0 <= r < 1.0:
        raise DomainError("chi needs r in [0, 1)")
    return x + r * np.sqrt(1.0 - x * x) / np.sqrt(1.0 - r * r)


def xi(x: float, r: float) -> float:
    """x + r(1-x^2)/(1-rx): the scalar majorant envelope at radius r."""
    if not 0.0 <= x < 1.0:
        raise DomainError("xi needs x in [0, 1)")
    if not 0.0 <= r < 1.0:
        raise DomainError("xi needs r in [0, 1)")
    return x + r * (1.0 - x * x) / (1.0 - r * x)


def xi_argmax(r: float) -> float:
    """Interior maximizer of xi(., r); xi there equals cor2_rhs(r)."""
    if not (1.0 / 3.0 - 1e-12 <= r <= SQRT_HALF + 1e-12):
        raise DomainError("xi_argmax needs r in [1/3, 1/sqrt(2)]")
    return (1.0 - np.sqrt((1.0 - r * r) / 2.0)) / r


# ---------------------------------------------------------------------------
# proof steps
# ---------------------------------------------------------------------------

class ProofStep(Enum):
    EQ5 = "eq5"
    EQ9 = "eq9"
    EQ10 = "eq10"
    EQ11 = "eq11"
    EQ12 = "eq12"
    EQ14 = "eq14"
    EQ1 = "eq1"
    EQ2 = "eq2"
    BB2_REMARK = "bb2remark"
    THM2_FINAL = "thm2final"


THM1_STEPS = frozenset(
    {ProofStep.EQ5, ProofStep.EQ9, ProofStep.EQ10, ProofStep.EQ11, ProofStep.EQ12, ProofStep.EQ14}
)
THM2_STEPS = frozenset({ProofStep.EQ1, ProofStep.EQ2, ProofStep.THM2_FINAL})
NORM_STEPS = frozenset({ProofStep.BB2_REMARK})


@dataclass(frozen=True)
class ProofStepReport:
    step: ProofStep
    k_or_r: float
    verdict: LoewnerVerdict
    location: complex | float | str


def default_z_samples(count: int = 64) -> np.ndarray:
    """Deterministic disk samples on four rings, innermost to outermost."""
    rings = (0.3, 0.6, 0.9, 0.975)
    per = max(1, count // len(rings))
    pts = [
        rho * np.exp(2j * np.pi * k / per) for rho in rings for k in range(per)
    ]
    return np.asarray(pts[:count], dtype=np.complex128)


def _worst(a: LoewnerVerdict, b: LoewnerVerdict) -> LoewnerVerdict:
    rank = {Order.NOT_LESS_OR_EQUAL: 2, Order.BOUNDARY: 1, Order.LESS_OR_EQUAL: 0}
    lead = a if rank[a.relation] >= rank[b.relation] else b
    return LoewnerVerdict(
        relation=lead.relation,
        min_gap=min(a.min_gap, b.min_gap),
        tolerance=max(a.tolerance, b.tolerance),
        witness=lead.witness,
    )


def _gram_verdict(f, left_of, samples) -> tuple[LoewnerVerdict, complex]:
    """Aggregate PSD check of left*left - right*right over z samples,
    where right = f(z) - A_0 and left = left_of(f(z), A_0)."""
    A0 = f.coefficient0()
    worst_gap = np.inf
    worst_z = complex(samples[0])
    worst_vec = None
    for z in samples:
        fz = f.evaluate(z)
        L = left_of(fz, A0)
        R = fz - A0
        G = hermitian_part(L.conj().T @ L - R.conj().T @ R)
        eig = hermitian_eigen(G)
        gap = float(eig.eigenvalues[0])
        if gap < worst_gap:
            worst_gap = gap
            worst_z = complex(z)
            worst_vec = eig.basis[:, 0].copy()
    if worst_gap >= GRAM_TOL:
        relation = Order.LESS_OR_EQUAL
        worst_vec = None
    elif worst_gap <= -GRAM_TOL:
        relation = Order.NOT_LESS_OR_EQUAL
    else:
        relation = Order.BOUNDARY
        worst_vec = None
    return LoewnerVerdict(relation, worst_gap, GRAM_TOL, worst_vec), worst_z


def _series_loewner(
    f: OperatorFunction, r: float, rhs: np.ndarray, *, drop_a0: bool, square: bool
) -> LoewnerVerdict:
    """Loewner comparison of an infinite majorant-type sum against rhs.

    Escalates the truncation order until the tail is negligible
    (<= 1e-12), then folds the remaining tail into the left side. If the
    cap still leaves a meaningful tail, a would-be LessOrEqual degrades
    to Boundary rather than overclaiming.
    """
    N = INITIAL_N
    while True:
        series = f.coefficients(N)
        partial, tail = _partial_and_tail(series, r, drop_a0=drop_a0, square=square)
        if tail <= SERIES_TAIL_TARGET or N >= MAX_N:
            break
        N = min(2 * N, MAX_N)
    padded = loewner_leq(partial + tail * identity(f.dim), rhs)
    if padded.relation is Order.LESS_OR_EQUAL:
        return padded
    raw = loewner_leq(partial, rhs)
    if raw.relation is Order.NOT_LESS_OR_EQUAL:
        return raw
    return LoewnerVerdict(Order.BOUNDARY, raw.min_gap, raw.tolerance, None)


def _step_class(step: ProofStep) -> str:
    if step in THM1_STEPS:
        return "thm1"
    if step in THM2_STEPS:
        return "thm2"
    return "norm"


def _gate_step(f: OperatorFunction, step: ProofStep) -> None:
    klass = _step_class(step)
    if klass == "norm":
        if isinstance(f, HalfPlaneLift):
            raise StepClassMismatch(f"{step.value} needs a norm-bounded instance")
        return
    if klass == "thm1":
        if isinstance(f, HalfPlaneLift):
            raise StepClassMismatch(f"{step.value} belongs to the contractive commuting class")
        if isinstance(f, MobiusLift):
            return
    if klass == "thm2" and isinstance(f, HalfPlaneLift):
        return
    report = hypothesis_check(f, klass)
    if not report.passed:
        raise HypothesisViolated(
            f"{klass} hypotheses fail: " + ", ".join(report.failures())
        )


def _powers_sum(P: np.ndarray, k: int) -> np.ndarray:
    """I + P + ... + P^(k-1)."""
    dim = P.shape[0]
    acc = np.zeros((dim, dim), dtype=np.complex128)
    term = identity(dim)
    for _ in range(k):
        acc += term
        term = term @ P
    return acc


def proof_step_validate(
    f: OperatorFunction,
    step: ProofStep | str,
    *,
    k: int = 20,
    r: float = 0.5,
    z_samples=None,
) -> ProofStepReport:
    """Numerically validate one inequality from the derivation chain.

    Steps and their meanings:
      eq5       Gram defect making the zero-centering transform contractive.
      eq9       Squared coefficients dominated by the A_0 defect chain (k-sum).
      eq10      Mixed |A_n||A_0|^n sum against the same chain (k-sum).
      eq11      Full majorant tail against r(I-|A0|^2)(I-r|A0|)^(-1),
                valid only when rI <= |A0|.
      eq12      Full majorant tail against (I-|A0|^2)^(1/2) r/sqrt(1-r^2).
      eq14      |A_1| <= I-|A0|^2 <= 2(I-|A0|) chain.
      eq1       Gram defect for the real-part-bounded class.
      eq2       Squared-coefficient sum against 4(I-A0)^2 r/(1-r).
      thm2final Majorant tail against 2(I-A0) r/(1-r).
      bb2remark Full majorant against (1/sqrt(1-r^2)) I.
    """
    step = ProofStep(step)
    _gate_step(f, step)
    dim = f.dim
    eye = identity(dim)

    if step in (ProofStep.EQ5, ProofStep.EQ1):
        samples = default_z_samples() if z_samples is None else np.asarray(z_samples)
        if step is ProofStep.EQ5:
            left = lambda fz, A0: eye - A0.conj().T @ fz
        else:
            left = lambda fz, A0: 2.0 * (eye - A0) - (fz - A0)
        verdict, worst_z = _gram_verdict(f, left, samples)
        return ProofStepReport(step, float(len(samples)), verdict, worst_z)

    if step in (ProofStep.EQ9, ProofStep.EQ10):
        if k < 1:
            raise ValueError("k must be >= 1")
        series = f.coefficients(k)
        A0 = series.coeffs[0]
        P = hermitian_part(A0.conj().T @ A0)
        S = _powers_sum(P, k)
        gap2 = hermitian_part(eye - P)
        if step is ProofStep.EQ9:
            lhs = hermitian_part(sum(A.conj().T @ A for A in series.coeffs[1:]))
            rhs = hermitian_part(gap2 @ gap2 @ S)
        else:
            absA0 = abs_operator(A0)
            lhs = np.zeros((dim, dim), dtype=np.complex128)
            power = absA0.copy()
            for A in series.coeffs[1:]:
                lhs += abs_operator(A) @ power
                power = power @ absA0
            lhs = hermitian_part(lhs)
            rhs = hermitian_part(absA0 @ gap2 @ S)
        return ProofStepReport(step, float(k), loewner_leq(lhs, rhs), f"k={k}")

    if step in (ProofStep.EQ11, ProofStep.EQ12, ProofStep.THM2_FINAL, ProofStep.EQ2, ProofStep.BB2_REMARK):
        if not 0.0 <= r < 1.0:
            raise DomainError("r must lie in [0, 1)")
        A0 = f.coefficient0()
        if step is ProofStep.EQ11:
            absA0 = abs_operator(A0)
            if not loewner_leq(r * eye, absA0).holds:
                raise HypothesisViolated("rI <= |A_0| fails; step not applicable")
            gap2 = hermitian_part(eye - absA0 @ absA0)
            rhs = hermitian_part(r * gap2 @ np.linalg.inv(eye - r * absA0))
            verdict = _series_loewner(f, r, rhs, drop_a0=True, square=False)
        elif step is ProofStep.EQ12:
            absA0 = abs_operator(A0)
            gap2 = hermitian_part(eye - absA0 @ absA0)
            rhs = psd_sqrt(gap2) * (r / np.sqrt(1.0 - r * r))
            verdict = _series_loewner(f, r, rhs, drop_a0=True, square=False)
        elif step is ProofStep.EQ2:
            gap = hermitian_part(eye - A0)
            rhs = 4.0 * hermitian_part(gap @ gap) * (r / (1.0 - r))
            verdict = _series_loewner(f, r, rhs, drop_a0=True, square=True)
        elif step is ProofStep.THM2_FINAL:
            rhs = 2.0 * hermitian_part(eye - A0) * (r / (1.0 - r))
            verdict = _series_loewner(f, r, rhs, drop_a0=True, square=False)
        else:
            rhs = eye / np.sqrt(1.0 - r * r)
            verdict = _series_loewner(f, r, rhs, drop_a0=False, square=False)
        return ProofStepReport(step, float(r), verdict, float(r))

    # EQ14
    return _eq14_report(f.coefficients(1).coeffs, n=1)


def _eq14_report(coeffs, n: int) -> ProofStepReport:
    """|A_n| <= I - |A_0|^2 <= 2(I - |A_0|) as one chained verdict."""
    A0 = coeffs[0]
    An = coeffs[1] if len(coeffs) > 1 else np.zeros_like(A0)
    dim = A0.shape[0]
    eye = identity(dim)
    absA0 = abs_operator(A0)
    mid = hermitian_part(eye - absA0 @ absA0)
    upper = hermitian_part(2.0 * (eye - absA0))
    first = loewner_leq(abs_operator(An), mid)
    second = loewner_leq(mid, upper)
    return ProofStepReport(ProofStep.EQ14, float(n), _worst(first, second), f"n={n}")


def coefficient_bound_eq14(f: OperatorFunction, max_n: int = 32) -> list[ProofStepReport]:
    """Chain bound for every coefficient index up to max_n.

    Index n > 1 is reached by decimating the series so the target
    coefficient becomes the linear one, mirroring root-of-unity averaging.
    """
    _gate_step(f, ProofStep.EQ14)
    series = f.coefficients(max_n)
    reports = [_eq14_report(series.coeffs, n=1)]
    for n in range(2, max_n + 1):
        dec = decimate(series, n)
        reports.append(_eq14_report(dec.coeffs, n=n))
    return reports


# ---------------------------------------------------------------------------
# composite checks for the real-part-bounded class
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Thm2Bounds:
    bohr: BohrVerdict
    eq2: ProofStepReport
    final: ProofStepReport


def check_thm2_bounds(f: OperatorFunction, r: float, tol: float = DEFAULT_BOHR_TOL) -> Thm2Bounds:
    """All three bounds for the real-part-bounded commuting class."""
    if not 0.0 <= r < 1.0:
        raise OutsideDomain("check_thm2_bounds needs 0 <= r < 1")
    report = hypothesis_check(f, "thm2")
    if not report.passed:
        raise HypothesisViolated(
            "thm2 hypotheses fail: " + ", ".join(report.failures())
        )
    bohr = _adaptive_bohr(f, r, identity(f.dim), tol)
    eq2 = proof_step_validate(f, ProofStep.EQ2, r=r)
    final = proof_step_validate(f, ProofStep.THM2_FINAL, r=r)
    return Thm2Bounds(bohr, eq2, final)


# ---------------------------------------------------------------------------
# empirical radius and sharpness
# ---------------------------------------------------------------------------

def empirical_bohr_radius(f: OperatorFunction, tol: float = 1e-6) -> float:
    """Bisect the Holds/Violated boundary of check_bohr.

    Returns RADIUS_CAP when the majorant stays admissible all the way to
    the cap (compare against RADIUS_CAP to detect this). Inconclusive
    midpoints are treated as the violated side, which can only
    under-report the radius.
    """
    if tol < 1e-6:
        raise ValueError("tol must be >= 1e-6")
    if check_bohr(f, RADIUS_CAP).holds:
        return RADIUS_CAP
    lo, hi = 0.0, RADIUS_CAP
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if check_bohr(f, mid).holds:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def build_radius_report(f: OperatorFunction, tol: float = 1e-6) -> RadiusReport:
    guaranteed = thm1_admissible_radius(f.coefficient0())
    empirical = empirical_bohr_radius(f, tol)
    return RadiusReport(
        guaranteed_radius=guaranteed.value,
        empirical_radius=empirical,
        margin=empirical - guaranteed.value,
        branch=guaranteed.branch,
        capped=empirical >= RADIUS_CAP,
    )


@dataclass(frozen=True)
class SharpnessRow:
    lam: float
    guaranteed: float
    empirical: float
    excess_at_delta: float
    confirmed: bool


def sharpness_scan(lam_grid, delta: float = 1e-3) -> list[SharpnessRow]:
    """Confirm the scalar witness family saturates its guaranteed radius.

    For each anchor the witness (lam - z)/(1 - lam z) is bisected to its
    empirical radius and probed just past the guarantee, where its
    majorant must exceed 1.
    """
    rows = []
    for lam in lam_grid:
        lam = float(lam)
        if not 0.5 <= lam <= 1.0 - 1e-3:
            raise DomainError("sharpness grid must lie in [0.5, 1 - 1e-3]")
        witness = mobius_witness(lam)
        guaranteed = bombieri_radius(lam)
        empirical = empirical_bohr_radius(witness, 1e-6)
        probe = check_bohr(witness, guaranteed + delta)
        confirmed = (
            abs(empirical - guaranteed) <= 1e-5 and probe.status is Status.VIOLATED
        )
        rows.append(
            SharpnessRow(lam, guaranteed, empirical, probe.lhs_extreme, confirmed)
        )
    return rows


# ---------------------------------------------------------------------------
# hypothesis-relaxation search
# ---------------------------------------------------------------------------

class Relaxation(Enum):
    DROP_COMMUTATION = "drop-commutation"
    DROP_NORMALITY = "drop-normality"
    WEAK_NORM_BOUND = "weak-norm-bound"


@dataclass(frozen=True)
class SearchWitness:
    trial: int
    function: OperatorFunction
    radius: float
    branch: Branch
    verdict: BohrVerdict


@dataclass(frozen=True)
class SearchResult:
    relaxation: Relaxation
    dim: int
    budget: int
    seed: int
    trials: int
    skipped: int
    witness: SearchWitness | None


SEARCH_NORM_MARGIN = 1e-3


def _scale_to_schur_edge(coeffs) -> Polynomial:
    raw = Polynomial(coeffs)
    bound, _ = certified_sup(raw)
    scale = (1.0 - SEARCH_NORM_MARGIN) / bound
    return Polynomial([scale * A for A in coeffs])


def _ginibre(rng, dim: int, scale: float) -> np.ndarray:
    G = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return scale * G / np.sqrt(2.0 * dim)


def _drop_commutation_instance(dim: int, rng) -> Polynomial | None:
    """A_0 normal (PSD diagonal in a random basis) plus a rank-one A_1
    mapping the top channel of A_0 into a low one.

    |A_1| then loads entirely on the top channel while the sup norm only
    pays a sub-additive cost, the shape that breaks the commuting-class
    radius; parameter windows keep every channel above 1/2 after the
    Schur-edge rescale so the inverse branch stays selected.
    """
    if dim < 2:
        return None
    Q = random_unitary(dim, rng)
    d = np.concatenate(([rng.uniform(0.88, 0.93)], rng.uniform(0.55, 0.68, dim - 1)))
    A0 = (Q * d) @ Q.conj().T
    c = rng.uniform(0.25, 0.35)
    low = 1 + int(rng.integers(dim - 1))
    A1 = c * np.outer(Q[:, low], Q[:, 0].conj())
    f = _scale_to_schur_edge([A0, A1])
    A0s = f.coeffs[0]
    if max(commutator_norm(A0s, A) for A in f.coeffs[1:]) <= 1e-8:
        return None
    return f


def _drop_normality_instance(dim: int, rng) -> Polynomial | None:
    if dim < 2:
        return None
    A0 = _ginibre(rng, dim, rng.uniform(0.5, 0.9))
    A0 += np.triu(_ginibre(rng, dim, 0.8), k=1)
    degree = int(rng.integers(1, 3))
    coeffs = [A0]
    for _ in range(degree):
        c1, c2 = rng.uniform(-0.8, 0.8, 2)
        coeffs.append(c1 * A0 + c2 * A0 @ A0)
    f = _scale_to_schur_edge(coeffs)
    A0s = f.coeffs[0]
    defect = commutator_norm(A0s.conj().T, A0s)
    if defect <= 1e-8 * (1.0 + operator_norm(A0s) ** 2):
        return None
    return f


def counterexample_search(
    relaxation: Relaxation | str, dim: int, budget: int, seed: int
) -> SearchResult:
    """Random hunt for a majorant violation under one relaxed hypothesis.

    Each trial builds an instance violating exactly the named hypothesis
    (non-qualifying draws are skipped but still consume budget), then
    tests check_bohr at the radius the A_0 formula would have guaranteed.
    Deterministic in seed; a None witness is only "none found in budget",
    never a general claim.
    """
    relaxation = Relaxation(relaxation)
    if budget < 1:
        raise ValueError("budget must be >= 1")
    children = np.random.SeedSequence(seed).spawn(budget)
    skipped = 0
    for trial in range(budget):
        if relaxation is Relaxation.WEAK_NORM_BOUND:
            f = generate_thm1_instance(dim, degrees=(1, 3), seed=children[trial], allow_boundary=True)
        else:
            rng = np.random.default_rng(children[trial])
            if relaxation is Relaxation.DROP_COMMUTATION:
                f = _drop_commutation_instance(dim, rng)
            else:
                f = _drop_normality_instance(dim, rng)
        if f is None:
            skipped += 1
            continue
        radius = _radius_from_abs(abs_operator(f.coefficient0()))
        verdict = check_bohr(f, radius.value)
        if verdict.status is Status.VIOLATED:
            witness = SearchWitness(trial, f, radius.value, radius.branch, verdict)
            return SearchResult(relaxation, dim, budget, seed, trial + 1, skipped, witness)
    return SearchResult(relaxation, dim, budget, seed, budget, skipped, None)

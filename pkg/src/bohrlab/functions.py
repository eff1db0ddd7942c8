"""Operator-valued holomorphic functions on the unit disk.

Four representations are supported, each with exact evaluation and exact
or certified Taylor coefficients:

* ``Polynomial``      -- explicit matrix coefficients A_0..A_d.
* ``MobiusLift``      -- simultaneously diagonalizable channels, each a
  scalar Mobius map composed with an inner monomial; normality of every
  value and commutation of all coefficients hold by construction.
* ``TransferRealization`` -- transfer function D + z C (I - zA)^{-1} B of
  a unitary colligation; contractive on the disk by construction.
* ``HalfPlaneLift``   -- A_0 + (I - A_0) s(z) with a scalar half-plane
  symbol s; the real part of every value stays below the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BoundExceeded,
    CommutationViolated,
    DimensionMismatch,
    GridTooCoarse,
    HypothesisViolated,
    NotInvertible,
    OutsideDomain,
)
from .linalg import (
    as_matrix,
    commutator_norm,
    frobenius,
    hermitian_eigen,
    hermitian_part,
    identity,
    is_normal,
    operator_norm,
    random_unitary,
)

EVAL_GUARD = 1e-9          # evaluation allowed for |z| <= 1 - EVAL_GUARD
MOBIUS_PARAM_CAP = 1e-3    # generated |lambda_i| <= 1 - MOBIUS_PARAM_CAP
BETA_CAP = 1e-6            # half-plane symbol pole kept |beta| <= 1 - BETA_CAP
HYPOTHESIS_TOL = 1e-8
HYPOTHESIS_GRID = 32
HYPOTHESIS_RADIUS = 0.999
COMMUTATION_ORDER = 32     # coefficients checked for commutation with A_0


def _check_disk_point(z: complex) -> complex:
    z = complex(z)
    if abs(z) > 1.0 - EVAL_GUARD:
        raise OutsideDomain(f"|z| = {abs(z):.12f} is outside the guarded disk")
    return z


@dataclass(frozen=True)
class CoefficientSeries:
    """Taylor coefficients A_0..A_N with a certified scalar tail bound.

    ``tail_norm_bound`` dominates ||A_n|| for every n > N. ``exact``
    means all coefficients beyond N vanish identically.
    """

    coeffs: tuple
    tail_norm_bound: float
    exact: bool
    aliasing_bounds: np.ndarray | None = None

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least A_0")
        dims = {c.shape[0] for c in self.coeffs}
        if len(dims) != 1:
            raise DimensionMismatch("series coefficients must share one dim")
        if not np.isfinite(self.tail_norm_bound) or self.tail_norm_bound < 0:
            raise ValueError("tail_norm_bound must be finite and nonnegative")
        if self.exact and self.tail_norm_bound != 0.0:
            raise ValueError("an exact series has zero tail bound")

    @property
    def dim(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def partial_value(self, z: complex) -> np.ndarray:
        """sum_{n<=N} A_n z^n."""
        acc = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for A in reversed(self.coeffs):
            acc = acc * z + A
        return acc


@dataclass(frozen=True)
class FunctionSamples:
    """Matched lists of disk points and operator values."""

    points: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.complex128)
        vals = np.asarray(self.values, dtype=np.complex128)
        if pts.ndim != 1 or vals.ndim != 3 or len(pts) != vals.shape[0]:
            raise DimensionMismatch("points and values must match one-to-one")
        if len(pts) and np.max(np.abs(pts)) > 1.0 - EVAL_GUARD:
            raise OutsideDomain("sample points must satisfy |z| <= 1 - 1e-9")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.points)


class OperatorFunction:
    """Common surface of the four representations."""

    kind: str = "abstract"

    def __init__(self, dim: int):
        if dim < 1:
            raise DimensionMismatch("dim must be >= 1")
        self.dim = int(dim)

    def evaluate(self, z: complex) -> np.ndarray:
        raise NotImplementedError

    def coefficients(self, N: int) -> CoefficientSeries:
        raise NotImplementedError

    def coefficient0(self) -> np.ndarray:
        return self.coefficients(0).coeffs[0]

    def sample(self, points) -> FunctionSamples:
        pts = np.asarray(points, dtype=np.complex128)
        vals = np.stack([self.evaluate(z) for z in pts])
        return FunctionSamples(pts, vals)


class Polynomial(OperatorFunction):
    """f(z) = A_0 + A_1 z + ... + A_d z^d with explicit matrix coefficients."""

    kind = "polynomial"

    def __init__(self, coeffs):
        mats = [as_matrix(c) for c in coeffs]
        if not mats:
            raise ValueError("a polynomial needs at least A_0")
        super().__init__(mats[0].shape[0])
        if any(m.shape[0] != self.dim for m in mats):
            raise DimensionMismatch("all coefficients must share one dim")
        self.coeffs = tuple(m.copy() for m in mats)
        for m in self.coeffs:
            m.setflags(write=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, z: complex) -> np.ndarray:
        z = _check_disk_point(z)
        return self.boundary_evaluate(z)

    def boundary_evaluate(self, z: complex) -> np.ndarray:
        """Horner evaluation without the disk guard (polynomials are entire)."""
        acc = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for A in reversed(self.coeffs):
            acc = acc * z + A
        return acc

    def coefficients(self, N: int) -> CoefficientSeries:
        if N < 0:
            raise ValueError("N must be >= 0")
        zero = np.zeros((self.dim, self.dim), dtype=np.complex128)
        if N >= self.degree:
            coeffs = self.coeffs + (zero,) * (N - self.degree)
            return CoefficientSeries(coeffs, 0.0, exact=True)
        tail = max(operator_norm(c) for c in self.coeffs[N + 1:])
        return CoefficientSeries(self.coeffs[: N + 1], tail, exact=False)


class MobiusLift(OperatorFunction):
    """Commuting channels (lambda_i + eps_i z^{m_i}) / (1 + conj(lambda_i) eps_i z^{m_i})
    in a common unitary basis.

    Normal values, commuting coefficients, and ||f(z)|| < 1 hold by
    construction (channel parameters kept off the unit circle unless
    ``allow_boundary`` is set, which admits constant unimodular channels
    for the norm-relaxation searches).
    """

    kind = "mobius"

    def __init__(self, basis, lambdas, phases, degrees, allow_boundary: bool = False):
        Q = as_matrix(basis)
        super().__init__(Q.shape[0])
        if frobenius(Q.conj().T @ Q - identity(self.dim)) > 1e-9 * self.dim:
            raise HypothesisViolated("basis must be unitary")
        lam = np.asarray(lambdas, dtype=np.complex128).reshape(-1)
        eps = np.asarray(phases, dtype=np.complex128).reshape(-1)
        deg = np.asarray(degrees, dtype=np.int64).reshape(-1)
        if not (len(lam) == len(eps) == len(deg) == self.dim):
            raise DimensionMismatch("need one (lambda, phase, degree) per channel")
        cap = 1.0 if allow_boundary else 1.0 - MOBIUS_PARAM_CAP
        if np.max(np.abs(lam)) > cap + 1e-12:
            raise HypothesisViolated(f"|lambda| must stay <= {cap}")
        if np.max(np.abs(np.abs(eps) - 1.0)) > 1e-12:
            raise HypothesisViolated("inner phases must be unimodular")
        if np.min(deg) < 1:
            raise HypothesisViolated("inner degrees must be >= 1")
        self.basis = Q.copy()
        self.lambdas = lam
        # stored verbatim (validated unimodular) so round-trips are exact
        self.phases = eps
        self.degrees = deg
        self.allow_boundary = bool(allow_boundary)
        for arr in (self.basis, self.lambdas, self.phases, self.degrees):
            arr.setflags(write=False)

    def _lift(self, channel_values: np.ndarray) -> np.ndarray:
        return (self.basis * channel_values) @ self.basis.conj().T

    def evaluate(self, z: complex) -> np.ndarray:
        z = _check_disk_point(z)
        b = self.phases * z ** self.degrees
        vals = (self.lambdas + b) / (1.0 + np.conj(self.lambdas) * b)
        return self._lift(vals)

    def channel_coefficient(self, n: int) -> np.ndarray:
        """Per-channel scalar Taylor coefficient of order n."""
        if n == 0:
            return self.lambdas.copy()
        out = np.zeros(self.dim, dtype=np.complex128)
        for i in range(self.dim):
            m = int(self.degrees[i])
            if n % m:
                continue
            j = n // m
            lam, eps = self.lambdas[i], self.phases[i]
            out[i] = (1.0 - abs(lam) ** 2) * eps**j * (-np.conj(lam)) ** (j - 1)
        return out

    def coefficients(self, N: int) -> CoefficientSeries:
        if N < 0:
            raise ValueError("N must be >= 0")
        coeffs = tuple(self._lift(self.channel_coefficient(n)) for n in range(N + 1))
        return CoefficientSeries(coeffs, 1.0, exact=False)


class TransferRealization(OperatorFunction):
    """Transfer function D + z C (I - zA)^{-1} B of a unitary colligation
    [[A, B], [C, D]] with state dimension ``state_dim``."""

    kind = "transfer"

    def __init__(self, colligation, state_dim: int):
        U = as_matrix(colligation)
        s = int(state_dim)
        if not 0 <= s < U.shape[0]:
            raise DimensionMismatch("state_dim must satisfy 0 <= s < total dim")
        super().__init__(U.shape[0] - s)
        if frobenius(U.conj().T @ U - identity(U.shape[0])) > 1e-9 * U.shape[0]:
            raise HypothesisViolated("colligation must be unitary")
        self.colligation = U.copy()
        self.colligation.setflags(write=False)
        self.state_dim = s

    @property
    def blocks(self):
        s = self.state_dim
        U = self.colligation
        return U[:s, :s], U[:s, s:], U[s:, :s], U[s:, s:]

    def evaluate(self, z: complex) -> np.ndarray:
        z = _check_disk_point(z)
        A, B, C, D = self.blocks
        if self.state_dim == 0:
            return D.copy()
        try:
            X = np.linalg.solve(identity(self.state_dim) - z * A, B)
        except np.linalg.LinAlgError as exc:
            raise NotInvertible(str(exc)) from exc
        return D + z * (C @ X)

    def coefficients(self, N: int) -> CoefficientSeries:
        if N < 0:
            raise ValueError("N must be >= 0")
        A, B, C, D = self.blocks
        coeffs = [D.copy()]
        P = B.copy()
        for _ in range(N):
            coeffs.append(C @ P)
            P = A @ P
        if self.state_dim == 0:
            return CoefficientSeries(tuple(coeffs), 0.0, exact=True)
        # B and C are rectangular; spectral norms taken directly
        norms = [np.linalg.norm(M, 2) for M in (C, A, B)]
        tail = float(norms[0] * norms[1] ** N * norms[2])
        return CoefficientSeries(tuple(coeffs), min(tail, 1.0), exact=False)


class HalfPlaneLift(OperatorFunction):
    """f(z) = A_0 + (I - A_0) s(z) with s(z) = -2 t z / (1 - beta z).

    A_0 = Q diag(d) Q* is PSD with ||A_0|| < 1 and every value is normal.
    sup_disk Re s = 2t(1 - Re beta)/(1 - |beta|^2), so Re f(z) <= I holds
    exactly when 2t(1 - Re beta) <= 1 - |beta|^2; the generator samples
    inside that region, and hypothesis_check gates anything hand-built.
    """

    kind = "halfplane"

    def __init__(self, basis, diag, t: float, beta: complex):
        Q = as_matrix(basis)
        super().__init__(Q.shape[0])
        if frobenius(Q.conj().T @ Q - identity(self.dim)) > 1e-9 * self.dim:
            raise HypothesisViolated("basis must be unitary")
        d = np.asarray(diag, dtype=np.float64).reshape(-1)
        if len(d) != self.dim:
            raise DimensionMismatch("need one diagonal entry per dimension")
        if np.min(d) < 0.0 or np.max(d) >= 1.0:
            raise HypothesisViolated("diagonal must satisfy 0 <= d_i < 1")
        if not 0.0 <= t <= 1.0:
            raise HypothesisViolated("t must lie in [0, 1]")
        beta = complex(beta)
        if abs(beta) > 1.0 - BETA_CAP + 1e-15:
            raise HypothesisViolated(f"|beta| must stay <= {1.0 - BETA_CAP}")
        self.basis = Q.copy()
        self.diag = d
        self.t = float(t)
        self.beta = beta
        for arr in (self.basis, self.diag):
            arr.setflags(write=False)

    def a0(self) -> np.ndarray:
        return (self.basis * self.diag) @ self.basis.conj().T

    def symbol(self, z: complex) -> complex:
        return -2.0 * self.t * z / (1.0 - self.beta * z)

    def evaluate(self, z: complex) -> np.ndarray:
        z = _check_disk_point(z)
        vals = self.diag + (1.0 - self.diag) * self.symbol(z)
        return (self.basis * vals) @ self.basis.conj().T

    def coefficients(self, N: int) -> CoefficientSeries:
        if N < 0:
            raise ValueError("N must be >= 0")
        A0 = self.a0()
        gap = identity(self.dim) - A0
        coeffs = [A0]
        for n in range(1, N + 1):
            coeffs.append(gap * (-2.0 * self.t * self.beta ** (n - 1)))
        tail = 2.0 * operator_norm(gap) * abs(self.beta) ** N
        return CoefficientSeries(tuple(coeffs), tail, exact=False)


# ---------------------------------------------------------------------------
# coefficient extraction by circle sampling (black-box cross-check)
# ---------------------------------------------------------------------------

def coefficients_dft(f: OperatorFunction, rho: float, N: int, M: int) -> CoefficientSeries:
    """Approximate A_0..A_N by a DFT of f on the circle of radius rho.

    Attaches the aliasing bound rho^(M-n) / (1 - rho^M) per coefficient
    (valid for functions bounded by 1 in norm) and the Cauchy tail bound
    rho^(-N).
    """
    if not 0.0 < rho <= 1.0 - 1e-3:
        raise OutsideDomain("rho must lie in (0, 1 - 1e-3]")
    if N < 0:
        raise ValueError("N must be >= 0")
    if M < 4 * (N + 1):
        raise GridTooCoarse(f"grid size {M} < 4 * (N + 1) = {4 * (N + 1)}")
    angles = 2.0 * np.pi * np.arange(M) / M
    samples = np.stack([f.evaluate(rho * np.exp(1j * a)) for a in angles])
    hat = np.fft.fft(samples, axis=0)
    ns = np.arange(N + 1)
    coeffs = tuple(hat[n] / (M * rho**n) for n in ns)
    aliasing = rho ** (M - ns) / (1.0 - rho**M)
    return CoefficientSeries(coeffs, rho ** (-N), exact=False, aliasing_bounds=aliasing)


# ---------------------------------------------------------------------------
# the coefficient-zeroing transform and its inverse
# ---------------------------------------------------------------------------

CONDITION_CAP = 1e12


def _right_divide(Y: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Solve X M = Y."""
    if np.linalg.cond(M) > CONDITION_CAP:
        raise NotInvertible("matrix is numerically singular")
    return np.linalg.solve(M.T, Y.T).T


def schur_transform(f: OperatorFunction, z: complex) -> np.ndarray:
    """phi(z) = (f(z) - A_0)(I - A_0* f(z))^{-1}.

    Sends f to a contractive function vanishing at 0. Requires
    ||A_0|| < 1 and ||f(z)|| < 1, which guarantee invertibility.
    """
    A0 = f.coefficient0()
    fz = f.evaluate(z)
    if operator_norm(A0) >= 1.0:
        raise HypothesisViolated("||A_0|| < 1 is required")
    if operator_norm(fz) >= 1.0:
        raise HypothesisViolated("||f(z)|| < 1 is required")
    M = identity(f.dim) - A0.conj().T @ fz
    return _right_divide(fz - A0, M)


def reconstruct_from_transform(A0, phi: FunctionSamples) -> FunctionSamples:
    """Recover f(z) = (A_0 + phi(z))(I + A_0* phi(z))^{-1} from transform samples.

    A_0 must be normal, contractive, and commute with every sample.
    """
    A0 = as_matrix(A0)
    if operator_norm(A0) >= 1.0:
        raise HypothesisViolated("||A_0|| < 1 is required")
    if not is_normal(A0, tol=1e-10):
        raise HypothesisViolated("A_0 must be normal")
    dim = A0.shape[0]
    out = np.empty_like(phi.values)
    for k in range(len(phi)):
        P = phi.values[k]
        if operator_norm(P) > 1.0 + 1e-9:
            raise HypothesisViolated("||phi(z)|| <= 1 is required")
        if commutator_norm(A0, P) > 1e-8 * (1.0 + operator_norm(A0)) * (1.0 + operator_norm(P)):
            raise CommutationViolated("A_0 must commute with phi(z)")
        out[k] = _right_divide(A0 + P, identity(dim) + A0.conj().T @ P)
    return FunctionSamples(phi.points.copy(), out)


def decimate(series: CoefficientSeries, n: int) -> CoefficientSeries:
    """Keep coefficients with index divisible by n: (A_0, A_n, A_2n, ...).

    Mirrors averaging f over rotations by n-th roots of unity followed by
    the substitution z^n -> z.
    """
    if n < 2:
        raise ValueError("decimation step must be >= 2")
    return CoefficientSeries(
        tuple(series.coeffs[::n]), series.tail_norm_bound, exact=series.exact
    )


# ---------------------------------------------------------------------------
# instance generators (deterministic in seed)
# ---------------------------------------------------------------------------

def generate_thm1_instance(
    dim: int, degrees=(1, 4), seed: int = 0, allow_boundary: bool = False
) -> MobiusLift:
    """Random commuting-channel instance with certified hypotheses.

    Channel anchors are uniform in the disk of radius 1 - 1e-3 (or pushed
    to the unit circle on a random subset when ``allow_boundary``), inner
    degrees uniform in ``degrees`` inclusive.
    """
    rng = np.random.default_rng(seed)
    Q = random_unitary(dim, rng)
    radius_cap = 1.0 - MOBIUS_PARAM_CAP
    radii = radius_cap * np.sqrt(rng.uniform(0.0, 1.0, dim))
    if allow_boundary:
        boundary = rng.uniform(size=dim) < 0.5
        boundary[0] = True
        radii = np.where(boundary, 1.0, np.maximum(radii, 0.55))
    lam = radii * np.exp(2j * np.pi * rng.uniform(size=dim))
    deg = rng.integers(degrees[0], degrees[1] + 1, size=dim)
    eps = np.exp(2j * np.pi * rng.uniform(size=dim))
    f = MobiusLift(Q, lam, eps, deg, allow_boundary=allow_boundary)
    report = hypothesis_check(f, "thm1")
    if not report.passed:
        raise HypothesisViolated(f"generator produced a bad instance: {report}")
    return f


def mobius_witness(lam: float, degree: int = 1) -> MobiusLift:
    """The scalar extremal function (lam - z^m)/(1 - lam z^m) as a dim-1 lift."""
    if not 0.0 <= lam <= 1.0 - MOBIUS_PARAM_CAP:
        raise HypothesisViolated("witness anchor must lie in [0, 1 - 1e-3]")
    return MobiusLift(np.eye(1), [lam], [-1.0], [degree])


def generate_thm2_instance(dim: int, seed: int = 0) -> HalfPlaneLift:
    """Random half-plane instance with certified hypotheses."""
    rng = np.random.default_rng(seed)
    Q = random_unitary(dim, rng)
    d = rng.uniform(0.0, 1.0 - MOBIUS_PARAM_CAP, dim)
    beta_radius = (1.0 - BETA_CAP) * np.sqrt(rng.uniform())
    beta = beta_radius * np.exp(2j * np.pi * rng.uniform())
    # sup Re s over the disk is 2t(1 - Re beta)/(1 - |beta|^2); keep it <= 1
    t_cap = min(1.0, (1.0 - abs(beta) ** 2) / (2.0 * (1.0 - beta.real)))
    t = float(rng.uniform(0.0, t_cap))
    f = HalfPlaneLift(Q, d, t, beta)
    report = hypothesis_check(f, "thm2")
    if not report.passed:
        raise HypothesisViolated(f"generator produced a bad instance: {report}")
    return f


def generate_transfer_instance(dim: int, state_dim: int, seed: int = 0) -> TransferRealization:
    """Random unitary-colligation transfer function (Schur by construction)."""
    rng = np.random.default_rng(seed)
    U = random_unitary(dim + state_dim, rng)
    return TransferRealization(U, state_dim)


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SchurCertificate:
    """Certified sup-norm bound for a polynomial on the closed disk."""

    sup_bound: float
    grid_max: float
    grid_size: int
    margin: float
    worst_point: complex


def certified_sup(f: Polynomial) -> tuple[float, complex]:
    """Certified bound on sup_{|z|=1} ||f(z)|| by dense boundary sampling.

    Uses the Bernstein derivative inequality for trigonometric
    polynomials: sup <= grid_max / (1 - pi d / M).
    """
    if not isinstance(f, Polynomial):
        raise HypothesisViolated("sup certification works on polynomials only")
    d = f.degree
    M = 64 * (d + 1)
    angles = 2.0 * np.pi * np.arange(M) / M
    norms = np.array([operator_norm(f.boundary_evaluate(np.exp(1j * a))) for a in angles])
    k = int(np.argmax(norms))
    bound = float(norms[k] / (1.0 - np.pi * d / M))
    return bound, complex(np.exp(1j * angles[k]))


def certify_schur_bound(f: Polynomial, margin: float) -> SchurCertificate:
    """Certify sup ||f|| <= 1 - margin; raise BoundExceeded otherwise."""
    bound, worst = certified_sup(f)
    d = f.degree
    M = 64 * (d + 1)
    grid_max = bound * (1.0 - np.pi * d / M)
    if bound > 1.0 - margin:
        raise BoundExceeded(
            f"certified sup {bound:.6f} exceeds 1 - margin = {1.0 - margin:.6f}",
            point=worst,
            bound=bound,
        )
    return SchurCertificate(bound, grid_max, M, margin, worst)


# ---------------------------------------------------------------------------
# hypothesis reports
# ---------------------------------------------------------------------------

HYPOTHESIS_CLASSES = ("thm1", "thm2", "cor2")


@dataclass(frozen=True)
class HypothesisReport:
    """Numerical certificate that a function sits in a hypothesis class.

    All defects are compared against ``threshold`` (norm bounds against
    1 + threshold). Report-only: construction of the structured kinds
    already guarantees the analytic versions of these facts.
    """

    klass: str
    dim: int
    threshold: float
    a0_normal_defect: float
    max_commutator: float
    grid_norm_max: float | None = None
    grid_re_excess: float | None = None
    grid_normality_defect: float | None = None
    a0_scalar_defect: float | None = None
    a0_min_eigenvalue: float | None = None
    a0_norm: float | None = None

    def failures(self) -> list[str]:
        """Names of the hypothesis fields that fall outside tolerance."""
        th = self.threshold
        out = []
        if self.a0_normal_defect > th:
            out.append("a0_normal_defect")
        if self.max_commutator > th:
            out.append("max_commutator")
        if self.grid_norm_max is not None and self.grid_norm_max > 1.0 + th:
            out.append("grid_norm_max")
        if self.grid_re_excess is not None and self.grid_re_excess > th:
            out.append("grid_re_excess")
        if self.grid_normality_defect is not None and self.grid_normality_defect > th:
            out.append("grid_normality_defect")
        if self.a0_scalar_defect is not None and self.a0_scalar_defect > th:
            out.append("a0_scalar_defect")
        if self.a0_min_eigenvalue is not None and self.a0_min_eigenvalue < -th:
            out.append("a0_min_eigenvalue")
        if self.a0_norm is not None and self.a0_norm >= 1.0:
            out.append("a0_norm")
        return out

    @property
    def passed(self) -> bool:
        return not self.failures()

    def to_dict(self) -> dict:
        return {
            "class": self.klass,
            "dim": self.dim,
            "threshold": self.threshold,
            "a0_normal_defect": self.a0_normal_defect,
            "max_commutator": self.max_commutator,
            "grid_norm_max": self.grid_norm_max,
            "grid_re_excess": self.grid_re_excess,
            "grid_normality_defect": self.grid_normality_defect,
            "a0_scalar_defect": self.a0_scalar_defect,
            "a0_min_eigenvalue": self.a0_min_eigenvalue,
            "a0_norm": self.a0_norm,
            "passed": self.passed,
        }


def _normal_defect(A: np.ndarray) -> float:
    Ah = A.conj().T
    return frobenius(Ah @ A - A @ Ah) / (1.0 + frobenius(A) ** 2)


def hypothesis_grid(radius: float = HYPOTHESIS_RADIUS, count: int = HYPOTHESIS_GRID) -> np.ndarray:
    return radius * np.exp(2j * np.pi * np.arange(count) / count)


def hypothesis_check(f: OperatorFunction, klass: str) -> HypothesisReport:
    """Report-only certification of the hypothesis class of ``f``."""
    if klass not in HYPOTHESIS_CLASSES:
        raise ValueError(f"unknown hypothesis class {klass!r}")
    series = f.coefficients(COMMUTATION_ORDER)
    A0 = series.coeffs[0]
    normal_defect = _normal_defect(A0)
    max_comm = max(commutator_norm(A0, A) for A in series.coeffs[1:])
    grid = hypothesis_grid()
    values = [f.evaluate(z) for z in grid]

    if klass == "thm1":
        return HypothesisReport(
            klass=klass,
            dim=f.dim,
            threshold=HYPOTHESIS_TOL,
            a0_normal_defect=normal_defect,
            max_commutator=max_comm,
            grid_norm_max=max(operator_norm(v) for v in values),
        )
    if klass == "cor2":
        a0_scalar = np.trace(A0) / f.dim
        return HypothesisReport(
            klass=klass,
            dim=f.dim,
            threshold=HYPOTHESIS_TOL,
            a0_normal_defect=normal_defect,
            max_commutator=max_comm,
            grid_norm_max=max(operator_norm(v) for v in values),
            a0_scalar_defect=operator_norm(A0 - a0_scalar * identity(f.dim)),
        )
    # thm2
    eye = identity(f.dim)
    re_excess = max(
        float(hermitian_eigen(hermitian_part(v) - eye).eigenvalues[-1]) for v in values
    )
    value_normality = max(_normal_defect(v) for v in values)
    # A_0 >= 0 needs A_0 Hermitian; the skew part eats into the reported
    # smallest eigenvalue so a non-Hermitian A_0 cannot slip through.
    herm0 = hermitian_part(A0)
    a0_eigs = hermitian_eigen(herm0).eigenvalues
    skew = operator_norm(A0 - herm0)
    return HypothesisReport(
        klass=klass,
        dim=f.dim,
        threshold=HYPOTHESIS_TOL,
        a0_normal_defect=normal_defect,
        max_commutator=max_comm,
        grid_re_excess=re_excess,
        grid_normality_defect=value_normality,
        a0_min_eigenvalue=float(a0_eigs[0]) - skew,
        a0_norm=operator_norm(A0),
    )

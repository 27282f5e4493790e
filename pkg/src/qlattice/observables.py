"""Expectation values and standard deviations of Hermitian operators
against density matrices, plus the moment relations tying the pair
non-additivity operator to its constituent projectors.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NegativeVariance, NonHermitianInput
from .lattice import Subspace, join, meet
from .mobius import mobius
from .numerics import as_matrix, hermitian_eig, require_hermitian
from .rng import Xorshift64Star
from .tolerances import Tolerance, default_tolerance


class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace operator."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        M = require_hermitian(as_matrix(matrix), "density matrix")
        tr = np.trace(M).real
        if abs(tr - 1.0) > 1e-9:
            raise ValueError(f"trace {tr} != 1")
        w, _ = hermitian_eig(M)
        if w[0] < -1e-10:
            raise ValueError(f"negative eigenvalue {w[0]:.3e}")
        M.setflags(write=False)
        self.matrix = M

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def maximally_mixed(cls, d: int) -> "DensityMatrix":
        return cls(np.eye(d) / d)

    @classmethod
    def pure(cls, vector) -> "DensityMatrix":
        v = np.asarray(vector, dtype=complex).reshape(-1)
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()))

    def entropy(self) -> float:
        """Von Neumann entropy -Tr(rho log rho), natural logarithm."""
        w, _ = hermitian_eig(self.matrix)
        w = w[w > 1e-12]
        return float(-np.sum(w * np.log(w)))


def random_density(d: int, rng: Xorshift64Star) -> DensityMatrix:
    """Full-rank random state G G-dagger / Tr, G complex Gaussian."""
    G = rng.complex_gaussian_matrix(d, d)
    M = G @ G.conj().T
    return DensityMatrix(M / np.trace(M).real)


def _check_pair(rho: DensityMatrix, Theta: np.ndarray) -> np.ndarray:
    T = require_hermitian(as_matrix(Theta), "observable")
    if T.shape[0] != rho.dim:
        raise DimensionMismatch(f"observable is {T.shape[0]}x{T.shape[0]}, state is {rho.dim}-dimensional")
    return T


def expectation(rho: DensityMatrix, Theta) -> float:
    """Mean value Tr(rho Theta) of a Hermitian observable."""
    T = _check_pair(rho, Theta)
    val = np.trace(rho.matrix @ T)
    if abs(val.imag) > 1e-10:
        raise NonHermitianInput(f"expectation has imaginary part {val.imag:.3e}")
    return float(val.real)


def stddev(rho: DensityMatrix, Theta) -> float:
    """Standard deviation sqrt(Tr(Theta^2 rho) - Tr(Theta rho)^2)."""
    T = _check_pair(rho, Theta)
    variance = np.trace(T @ T @ rho.matrix).real - expectation(rho, T) ** 2
    if variance < -1e-8:
        raise NegativeVariance(f"variance {variance:.3e}")
    return float(np.sqrt(max(variance, 0.0)))


def moment_relation_residuals(rho: DensityMatrix, H1: Subspace, H2: Subspace,
                              tol: Tolerance | None = None) -> dict[str, float]:
    """Residuals of the mean and variance relations for D(H1, H2).

    mean:     E[D] = E[Pv] - E[P1] - E[P2] + E[Pm]
    variance: Var[D] = Var[Pv] - Var[P1] - Var[P2] + Var[Pm] + a,
    where a collects the cross terms (including the symmetrized product
    E[P1 P2 + P2 P1]) that survive because the four projectors are not
    independent observables.
    """
    tol = tol or default_tolerance()
    if H1.dim_ambient != rho.dim or H2.dim_ambient != rho.dim:
        raise DimensionMismatch("state and subspaces live in different dimensions")
    P1, P2 = H1.projector(), H2.projector()
    Pv = join(H1, H2, tol).projector()
    Pm = meet(H1, H2, tol).projector()
    D = mobius([H1, H2], tol).matrix

    E = lambda T: expectation(rho, T)
    Var = lambda T: np.trace(T @ T @ rho.matrix).real - E(T) ** 2

    e1, e2, ev, em = E(P1), E(P2), E(Pv), E(Pm)
    mean_res = abs(E(D) - (ev - e1 - e2 + em))

    a = (-2.0 * e1 ** 2 - 2.0 * e2 ** 2 - 2.0 * e1 * e2
         + 2.0 * ev * (e1 + e2)
         + E(P1 @ P2 + P2 @ P1)
         + 2.0 * em * (e1 + e2 - ev - 1.0))
    var_res = abs(Var(D) - (Var(Pv) - Var(P1) - Var(P2) + Var(Pm) + a))
    return {"mean": mean_res, "variance": var_res}


def ds_classify(rho: DensityMatrix, H1: Subspace, H2: Subspace,
                tol: Tolerance | None = None) -> str:
    """Classify the pair's probabilities as Dempster-Shafer lower or upper.

    The sign of Tr(rho D(H1,H2)) decides: positive means the projector
    probabilities behave as upper (plausibility-like) values, negative as
    lower (belief-like) values, and zero as ordinarily additive.
    """
    tol = tol or default_tolerance()
    val = expectation(rho, mobius([H1, H2], tol).matrix)
    if val > tol.identity_eps:
        return "upper"
    if val < -tol.identity_eps:
        return "lower"
    return "additive"


def projector_moment_residual(rho: DensityMatrix, P) -> float:
    """Residual of Var[P] = E[P] - E[P]^2, valid for any projector P."""
    e = expectation(rho, P)
    return abs(stddev(rho, P) ** 2 - (e - e * e))

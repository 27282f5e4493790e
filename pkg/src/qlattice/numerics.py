"""Dense complex-matrix kernel: Hermitian eigendecompositions, orthonormal
range and kernel extraction with tolerance-based rank decisions.

Everything downstream (lattice operations, operator identities) reduces to
the three primitives in this module.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NoConvergence, NonHermitianInput
from .tolerances import Tolerance, default_tolerance

HERMITICITY_RTOL = 1e-8


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # unit-norm columns, mutually orthonormal


def as_matrix(A) -> np.ndarray:
    """Coerce to a 2-d complex array and reject non-finite entries."""
    M = np.asarray(A, dtype=complex)
    if M.ndim == 1:
        M = M.reshape(-1, 1)
    if M.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={M.ndim}")
    if not (np.all(np.isfinite(M.real)) and np.all(np.isfinite(M.imag))):
        raise ValueError("matrix contains non-finite entries")
    return M


def frobenius(A) -> float:
    return float(np.linalg.norm(A))


def require_hermitian(A: np.ndarray, context: str = "input") -> np.ndarray:
    """Check Hermiticity and return the exactly symmetrized matrix."""
    if A.shape[0] != A.shape[1]:
        raise NonHermitianInput(f"{context}: matrix is not square {A.shape}")
    defect = frobenius(A - A.conj().T)
    if defect > HERMITICITY_RTOL * max(1.0, frobenius(A)):
        raise NonHermitianInput(f"{context}: Hermiticity defect {defect:.3e}")
    return (A + A.conj().T) / 2.0


def hermitian_eig(A, backend: str = "lapack") -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    backend "lapack" uses numpy.linalg.eigh; backend "jacobi" uses the cyclic
    complex Jacobi solver below.  Both satisfy the same residual contract:
    ||A v_i - w_i v_i|| <= 1e-10 ||A||_F per pair, orthonormal eigenvectors.
    """
    M = require_hermitian(as_matrix(A), "hermitian_eig")
    if backend == "lapack":
        w, V = np.linalg.eigh(M)
        return EigenDecomposition(w, V)
    if backend == "jacobi":
        return jacobi_hermitian_eig(M)
    raise ValueError(f"unknown backend {backend!r}")


def jacobi_hermitian_eig(A, sweep_cap: int = 100) -> EigenDecomposition:
    """Cyclic Jacobi diagonalization with complex Givens rotations.

    Sweeps zero each off-diagonal entry in turn until the off-diagonal
    Frobenius mass falls below 1e-14 ||A||_F.  Slower than LAPACK but fully
    transparent; kept as an independent cross-check backend.
    """
    M = require_hermitian(as_matrix(A), "jacobi_hermitian_eig")
    n = M.shape[0]
    V = np.eye(n, dtype=complex)
    norm_a = frobenius(M)
    if norm_a == 0.0 or n == 1:
        w = np.diag(M).real.copy()
        order = np.argsort(w, kind="stable")
        return EigenDecomposition(w[order], V[:, order])

    def off_norm(X):
        # summed directly (not as a difference of totals) to avoid cancellation
        off = X - np.diag(np.diag(X))
        return float(np.linalg.norm(off))

    converged = False
    for _ in range(sweep_cap):
        if off_norm(M) <= 1e-14 * norm_a:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = M[p, q]
                if abs(b) <= 1e-18 * norm_a:
                    continue
                # zero M[p,q] with the plane rotation R: R[p,p]=R[q,q]=c,
                # R[p,q]=s, R[q,p]=-conj(s), applied as M <- R^H M R; the
                # tangent t solves t^2 - 2*tau*t - 1 = 0 (smaller-angle root)
                a_pp = M[p, p].real
                a_qq = M[q, q].real
                tau = (a_pp - a_qq) / (2.0 * abs(b))
                # smaller-magnitude root of t^2 - 2 tau t - 1, in the
                # cancellation-free form -sign(tau)/(|tau| + sqrt(1+tau^2))
                t = -np.copysign(1.0, tau) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = (t * c) * (b / abs(b))
                # rows p,q of R^H M
                rp = M[p, :].copy()
                rq = M[q, :].copy()
                M[p, :] = c * rp - s * rq
                M[q, :] = np.conj(s) * rp + c * rq
                # columns p,q of (.) R
                cp = M[:, p].copy()
                cq = M[:, q].copy()
                M[:, p] = c * cp - np.conj(s) * cq
                M[:, q] = s * cp + c * cq
                M[p, q] = 0.0
                M[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - np.conj(s) * vq
                V[:, q] = s * vp + c * vq
    else:
        converged = off_norm(M) <= 1e-14 * norm_a
    if not converged:
        raise NoConvergence(f"jacobi sweep cap {sweep_cap} reached, off-diagonal {off_norm(M):.3e}")
    w = np.diag(M).real.copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], V[:, order])


def orthonormal_range(A, tol: Tolerance | None = None) -> np.ndarray:
    """Orthonormal basis of the column space of A.

    Modified Gram-Schmidt with column-norm pivoting and a re-orthogonalization
    pass; columns whose residual norm falls below
    rank_eps * max(1, ||A||_F) are dropped, so the column count is the
    numerical rank.  A zero (or empty) matrix yields a 0-column result.
    """
    tol = tol or default_tolerance()
    work = as_matrix(A).copy()
    d, m = work.shape
    if m == 0:
        return np.zeros((d, 0), dtype=complex)
    threshold = tol.rank_eps * max(1.0, frobenius(work))
    basis = []
    alive = list(range(m))
    while alive:
        norms = [float(np.linalg.norm(work[:, j])) for j in alive]
        best = int(np.argmax(norms))
        if norms[best] <= threshold:
            break
        j = alive.pop(best)
        q = work[:, j] / norms[best]
        # re-orthogonalization pass cleans up accumulated projection error
        for col in basis:
            q = q - col * np.vdot(col, q)
        nq = float(np.linalg.norm(q))
        if nq <= threshold:
            continue
        q = q / nq
        basis.append(q)
        if alive:
            rest = work[:, alive]
            work[:, alive] = rest - np.outer(q, q.conj() @ rest)
    if not basis:
        return np.zeros((d, 0), dtype=complex)
    return np.column_stack(basis)


def kernel(A, tol: Tolerance | None = None, backend: str = "lapack") -> np.ndarray:
    """Orthonormal basis of the near-null eigenspace of a Hermitian matrix.

    Columns span the eigenspace with |w| <= rank_eps * max(1, ||A||_F).
    """
    tol = tol or default_tolerance()
    M = as_matrix(A)
    w, V = hermitian_eig(M, backend=backend)
    cutoff = tol.rank_eps * max(1.0, frobenius(M))
    mask = np.abs(w) <= cutoff
    return V[:, mask]

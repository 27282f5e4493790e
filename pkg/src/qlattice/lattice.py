"""The modular orthocomplemented lattice of subspaces of a d-dimensional
complex Hilbert space.

Subspaces are immutable values carrying an orthonormal basis; all lattice
operations (meet, join, orthocomplement, partial order, commutation) act on
their projectors, so results never depend on the particular basis chosen.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, InternalInconsistency
from .numerics import as_matrix, frobenius, kernel, orthonormal_range
from .rng import Xorshift64Star
from .tolerances import Tolerance, default_tolerance


class Subspace:
    """A subspace of H(d), held as d x r matrix with orthonormal columns.

    r = 0 encodes the zero subspace, r = d the full space.
    """

    __slots__ = ("basis", "dim_ambient", "_projector")

    def __init__(self, basis, dim_ambient: int | None = None):
        B = as_matrix(basis).copy()  # private copy; instances are immutable
        d = B.shape[0] if dim_ambient is None else dim_ambient
        if B.shape[0] != d:
            raise DimensionMismatch(f"basis has {B.shape[0]} rows, ambient dimension is {d}")
        if B.shape[1] > d:
            raise ValueError(f"more columns ({B.shape[1]}) than ambient dimension {d}")
        r = B.shape[1]
        if r:
            gram_defect = frobenius(B.conj().T @ B - np.eye(r))
            if gram_defect > 1e-10:
                raise ValueError(f"basis columns not orthonormal (defect {gram_defect:.3e}); "
                                 "use Subspace.from_vectors to orthonormalize")
        B.setflags(write=False)
        self.basis = B
        self.dim_ambient = d
        self._projector = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_vectors(cls, vectors, dim_ambient: int | None = None,
                     tol: Tolerance | None = None) -> "Subspace":
        """Span of the given (not necessarily independent) column vectors."""
        V = as_matrix(vectors)
        if dim_ambient is not None and V.shape[0] != dim_ambient:
            raise DimensionMismatch(f"vectors have length {V.shape[0]}, expected {dim_ambient}")
        return cls(orthonormal_range(V, tol), V.shape[0])

    @classmethod
    def zero(cls, d: int) -> "Subspace":
        return cls(np.zeros((d, 0), dtype=complex), d)

    @classmethod
    def full(cls, d: int) -> "Subspace":
        return cls(np.eye(d, dtype=complex), d)

    @classmethod
    def line(cls, vector) -> "Subspace":
        """One-dimensional span of a single vector."""
        v = np.asarray(vector, dtype=complex).reshape(-1, 1)
        return cls.from_vectors(v)

    # -- basic queries -----------------------------------------------------

    @property
    def rank(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        """The d x d orthogonal projector onto this subspace (cached)."""
        if self._projector is None:
            d = self.dim_ambient
            if self.rank == 0:
                P = np.zeros((d, d), dtype=complex)
            else:
                P = self.basis @ self.basis.conj().T
            P.setflags(write=False)
            self._projector = P
        return self._projector

    def is_zero(self) -> bool:
        return self.rank == 0

    def is_full(self) -> bool:
        return self.rank == self.dim_ambient

    def __repr__(self):
        return f"<Subspace rank {self.rank} of H({self.dim_ambient})>"

    # -- lattice operations (method forms) ---------------------------------

    def join(self, other: "Subspace", tol: Tolerance | None = None) -> "Subspace":
        return join(self, other, tol)

    def meet(self, other: "Subspace", tol: Tolerance | None = None) -> "Subspace":
        return meet(self, other, tol)

    def perp(self, tol: Tolerance | None = None) -> "Subspace":
        return orthocomplement(self, tol)

    def leq(self, other: "Subspace", tol: Tolerance | None = None) -> bool:
        return leq(self, other, tol)

    def commutes(self, other: "Subspace", tol: Tolerance | None = None) -> bool:
        return commutes(self, other, tol)

    def equiv(self, other: "Subspace", tol: Tolerance | None = None) -> bool:
        """Equality as subspaces: mutual containment of projectors."""
        return leq(self, other, tol) and leq(other, self, tol)


def _require_same_ambient(*subspaces: Subspace) -> int:
    dims = {H.dim_ambient for H in subspaces}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")
    return dims.pop()


def join(H1: Subspace, H2: Subspace, tol: Tolerance | None = None) -> Subspace:
    """Smallest subspace containing both: the span of the union."""
    d = _require_same_ambient(H1, H2)
    return Subspace(orthonormal_range(np.hstack([H1.basis, H2.basis]), tol), d)


def join_all(subspaces, tol: Tolerance | None = None) -> Subspace:
    subspaces = list(subspaces)
    d = _require_same_ambient(*subspaces)
    return Subspace(orthonormal_range(np.hstack([H.basis for H in subspaces]), tol), d)


def meet(H1: Subspace, H2: Subspace, tol: Tolerance | None = None) -> Subspace:
    """Intersection, computed as the eigenvalue-2 eigenspace of P1 + P2.

    Equivalently the kernel of P1 + P2 - 2I; symmetric in the arguments and
    thresholded spectrally.
    """
    d = _require_same_ambient(H1, H2)
    A = H1.projector() + H2.projector() - 2.0 * np.eye(d)
    return Subspace(kernel(A, tol), d)


def meet_all(subspaces, tol: Tolerance | None = None) -> Subspace:
    """Common intersection: kernel of sum(P_i) - n I (eigenvalue-n space)."""
    subspaces = list(subspaces)
    d = _require_same_ambient(*subspaces)
    A = sum(H.projector() for H in subspaces) - len(subspaces) * np.eye(d)
    return Subspace(kernel(A, tol), d)


def orthocomplement(H: Subspace, tol: Tolerance | None = None) -> Subspace:
    """All vectors orthogonal to H; the lattice negation."""
    return Subspace(kernel(H.projector(), tol), H.dim_ambient)


def leq(H1: Subspace, H2: Subspace, tol: Tolerance | None = None) -> bool:
    """Partial order: H1 contained in H2, tested as ||P2 P1 - P1|| small."""
    tol = tol or default_tolerance()
    _require_same_ambient(H1, H2)
    P1, P2 = H1.projector(), H2.projector()
    return frobenius(P2 @ P1 - P1) <= tol.identity_eps


def commutes(H1: Subspace, H2: Subspace, tol: Tolerance | None = None) -> bool:
    """Lattice-theoretic commutation of two subspaces.

    Tests both equivalent criteria: vanishing projector commutator, and
    H1 = (H1 meet H2) join (H1 meet H2-perp).  They must agree.
    """
    tol = tol or default_tolerance()
    _require_same_ambient(H1, H2)
    P1, P2 = H1.projector(), H2.projector()
    by_commutator = frobenius(P1 @ P2 - P2 @ P1) <= tol.identity_eps
    rebuilt = join(meet(H1, H2, tol), meet(H1, orthocomplement(H2, tol), tol), tol)
    by_lattice = frobenius(rebuilt.projector() - P1) <= tol.identity_eps
    if by_commutator != by_lattice:
        raise InternalInconsistency(
            f"commutation criteria disagree: commutator->{by_commutator}, lattice->{by_lattice}")
    return by_commutator


def random_subspace(d: int, r: int, rng: Xorshift64Star,
                    tol: Tolerance | None = None) -> Subspace:
    """Haar-like random r-dimensional subspace of H(d).

    Columns of a standard complex Gaussian matrix are orthonormalized; the
    resulting distribution is invariant under unitaries.
    """
    if not (0 <= r <= d):
        raise ValueError(f"rank {r} out of range for dimension {d}")
    if r == 0:
        return Subspace.zero(d)
    return Subspace(orthonormal_range(rng.complex_gaussian_matrix(d, r), tol), d)


def random_nested_pair(d: int, r_small: int, r_big: int, rng: Xorshift64Star,
                       tol: Tolerance | None = None) -> tuple[Subspace, Subspace]:
    """Random pair H_small <= H_big with the given ranks, nested by construction."""
    if not (0 <= r_small <= r_big <= d):
        raise ValueError(f"bad ranks {r_small}, {r_big} for dimension {d}")
    big = random_subspace(d, r_big, rng, tol)
    small = inside(big, r_small, rng, tol)
    return small, big


def inside(H: Subspace, r: int, rng: Xorshift64Star,
           tol: Tolerance | None = None) -> Subspace:
    """Random r-dimensional subspace of H (r <= rank of H)."""
    if not (0 <= r <= H.rank):
        raise ValueError(f"rank {r} does not fit inside rank {H.rank}")
    if r == 0:
        return Subspace.zero(H.dim_ambient)
    mix = rng.complex_gaussian_matrix(H.rank, r)
    return Subspace(orthonormal_range(H.basis @ mix, tol), H.dim_ambient)


def between(lower: Subspace, upper: Subspace, r: int, rng: Xorshift64Star,
            tol: Tolerance | None = None) -> Subspace:
    """Random subspace h with lower <= h <= upper and rank r.

    Built by extending the lower basis with a random slice of the part of
    upper orthogonal to lower, so both containments hold exactly.
    """
    tol = tol or default_tolerance()
    _require_same_ambient(lower, upper)
    if not (lower.rank <= r <= upper.rank):
        raise ValueError(f"rank {r} outside [{lower.rank}, {upper.rank}]")
    d = lower.dim_ambient
    complement = orthonormal_range(
        (np.eye(d) - lower.projector()) @ upper.basis, tol)
    extra = r - lower.rank
    if extra == 0:
        return Subspace(lower.basis.copy(), d)
    mix = rng.complex_gaussian_matrix(complement.shape[1], extra)
    ext = orthonormal_range(complement @ mix, tol)
    return Subspace(np.hstack([lower.basis, ext]), d)

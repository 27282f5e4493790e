"""Numerical thresholds shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerance:
    """Thresholds for rank decisions and operator-identity residuals.

    rank_eps gates spectral rank decisions (which eigenvalues count as zero,
    which columns survive orthonormalization).  identity_eps gates Frobenius
    residuals of operator identities and the boolean lattice predicates.
    """

    rank_eps: float = 1e-9
    identity_eps: float = 1e-9

    def __post_init__(self):
        if not (0.0 < self.rank_eps < 1.0):
            raise ValueError(f"rank_eps out of range: {self.rank_eps}")
        if not (0.0 < self.identity_eps < 1.0):
            raise ValueError(f"identity_eps out of range: {self.identity_eps}")


DEFAULT = Tolerance()

_ENV_VAR = "QLATTICE_EPS"


def default_tolerance() -> Tolerance:
    """Default thresholds, honoring the QLATTICE_EPS override if set."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT
    try:
        eps = float(raw)
    except ValueError as exc:
        raise ValueError(f"{_ENV_VAR} must be a float, got {raw!r}") from exc
    return Tolerance(rank_eps=DEFAULT.rank_eps, identity_eps=eps)

"""Randomized identity sweeps: every operator identity in the package is
re-checked on freshly drawn subspaces, deterministically per seed.

Each named check draws its own configuration (generic tuples, embedded
chains, sandwiched interval members) from a substream of the pinned
generator and returns named Frobenius residuals; a sweep records the worst
residual seen per name.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .distributivity import pi_decomposition_residual, varpi_link_residuals
from .errors import InvalidConfig, UnknownCheck
from .lattice import (inside, join, meet, orthocomplement,
                      random_nested_pair, random_subspace)
from .mobius import commutator_identity_residual, triple_identity_residuals
from .modular import (p2_residuals, p3_residuals, random_sandwiched_member,
                      spectral_p1, transpose_roundtrip_residual)
from .numerics import frobenius
from .observables import moment_relation_residuals, random_density
from .rng import Xorshift64Star, mix_stream
from .tolerances import Tolerance, default_tolerance


def _rank(rng, d):
    return rng.integer(1, d) if d > 1 else 1


def _generic(rng, d, tol):
    return random_subspace(d, _rank(rng, d), rng, tol)


def check_e3(d, rng, tol):
    H1, H2 = _generic(rng, d, tol), _generic(rng, d, tol)
    return {"commutator_link": commutator_identity_residual(H1, H2, tol)}


def check_triple(d, rng, tol):
    out = dict(triple_identity_residuals(
        _generic(rng, d, tol), _generic(rng, d, tol), _generic(rng, d, tol), tol))
    # chained draw exercises the reductions that need H1 <= H2
    r_big = rng.integer(1, d + 1)
    small, big = random_nested_pair(d, rng.integer(0, r_big + 1), r_big, rng, tol)
    chained = triple_identity_residuals(small, big, _generic(rng, d, tol), tol)
    for key, val in chained.items():
        out[f"nested_{key}"] = val
    return out


def check_varpi_links(d, rng, tol):
    return varpi_link_residuals(
        _generic(rng, d, tol), _generic(rng, d, tol), _generic(rng, d, tol), tol)


def check_pi_decomp(d, rng, tol):
    return {"decomposition": pi_decomposition_residual(
        _generic(rng, d, tol), _generic(rng, d, tol), tol)}


def check_moments(d, rng, tol):
    rho = random_density(d, rng)
    return moment_relation_residuals(rho, _generic(rng, d, tol), _generic(rng, d, tol), tol)


def check_modularity(d, rng, tol):
    r_big = rng.integer(0, d + 1)
    H1, H3 = random_nested_pair(d, rng.integer(0, r_big + 1), r_big, rng, tol)
    H2 = _generic(rng, d, tol)
    lhs = join(H1, meet(H2, H3, tol), tol).projector()
    rhs = meet(join(H1, H2, tol), H3, tol).projector()
    return {"modularity": frobenius(lhs - rhs)}


def check_p1(d, rng, tol):
    report = spectral_p1(_generic(rng, d, tol), _generic(rng, d, tol), tol)
    return {
        "eigenvalue_sum": report.abs_sum,
        "multiplicity_deficit": float(max(0, report.required_zero_count - report.zero_count)),
    }


def check_p2(d, rng, tol):
    H1, H2 = _generic(rng, d, tol), _generic(rng, d, tol)
    h_a = random_sandwiched_member(H1, H2, rng, tol)
    h_b = random_sandwiched_member(H1, H2, rng, tol)
    return p2_residuals(H1, H2, h_a, h_b, tol)


def _projective_inputs(d, rng, tol):
    for _ in range(20):
        H2 = _generic(rng, d, tol)
        H1p = _generic(rng, d, tol)
        H2p = join(H1p, H2, tol)
        k_min = max(1, H2p.rank - H2.rank)
        H3p = inside(H2p, rng.integer(k_min, H2p.rank + 1), rng, tol)
        if join(H3p, H2, tol).equiv(H2p, tol):
            return H1p, H2, H3p
    raise RuntimeError("could not draw a projective configuration")


def check_p3(d, rng, tol):
    H1p, H2, H3p = _projective_inputs(d, rng, tol)
    H1 = meet(H1p, H2, tol)
    h = random_sandwiched_member(H1p, H2, rng, tol) if H1p.rank > H1.rank else H1
    return p3_residuals(H1p, H2, H3p, h, tol)


def check_transpose_roundtrip(d, rng, tol):
    H1, H2 = _generic(rng, d, tol), _generic(rng, d, tol)
    h = random_sandwiched_member(H1, H2, rng, tol)
    out = {"pair_roundtrip": transpose_roundtrip_residual(h, H1, H2, tol)}
    H1p, H2b, H3p = _projective_inputs(d, rng, tol)
    hh = random_sandwiched_member(H1p, H2b, rng, tol)
    res = p3_residuals(H1p, H2b, H3p, hh, tol)
    out["projective_roundtrip"] = res["roundtrip"]
    return out


def check_demorgan(d, rng, tol):
    H1, H2 = _generic(rng, d, tol), _generic(rng, d, tol)
    meet_perp = orthocomplement(meet(H1, H2, tol), tol).projector()
    perp_join = join(orthocomplement(H1, tol), orthocomplement(H2, tol), tol).projector()
    join_perp = orthocomplement(join(H1, H2, tol), tol).projector()
    perp_meet = meet(orthocomplement(H1, tol), orthocomplement(H2, tol), tol).projector()
    return {
        "meet_law": frobenius(meet_perp - perp_join),
        "join_law": frobenius(join_perp - perp_meet),
    }


# name -> (function, {residual-name pattern: tolerance overriding identity_eps})
REGISTRY = {
    "e3": (check_e3, {}),
    "triple": (check_triple, {}),
    "varpi-links": (check_varpi_links, {}),
    "pi-decomp": (check_pi_decomp, {}),
    "moments": (check_moments, {}),
    "modularity": (check_modularity, {}),
    "p1": (check_p1, {"eigenvalue_sum": 1e-8, "multiplicity_deficit": 1e-7}),
    "p2": (check_p2, {}),
    "p3": (check_p3, {}),
    "transpose-roundtrip": (check_transpose_roundtrip, {}),
    "demorgan": (check_demorgan, {}),
}

ALL_CHECKS = tuple(REGISTRY)


@dataclass(frozen=True)
class SweepConfig:
    dimension: int
    trials: int
    seed: int
    checks: tuple[str, ...] = ALL_CHECKS
    tolerances: Tolerance = field(default_factory=default_tolerance)

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidConfig(f"trials must be >= 1, got {self.trials}")
        if self.dimension < 2:
            raise InvalidConfig(f"dimension must be >= 2, got {self.dimension}")
        for name in self.checks:
            if name not in REGISTRY:
                raise UnknownCheck(f"{name!r}; known: {', '.join(REGISTRY)}")


@dataclass(frozen=True)
class SweepLine:
    check: str
    residual_name: str
    max_residual: float
    tolerance: float
    worst_trial: int

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def run_sweep(config: SweepConfig) -> list[SweepLine]:
    """Run every configured check for the configured number of trials.

    Each (check, trial) pair gets its own generator substream derived from
    the seed, so reports are identical for identical configurations and a
    failing trial can be replayed in isolation.
    """
    lines: list[SweepLine] = []
    check_index = {name: i for i, name in enumerate(REGISTRY)}
    for name in config.checks:
        func, overrides = REGISTRY[name]
        worst: dict[str, tuple[float, int]] = {}
        for trial in range(config.trials):
            rng = Xorshift64Star(
                mix_stream(config.seed, check_index[name], config.dimension, trial))
            for res_name, value in func(config.dimension, rng, config.tolerances).items():
                value = float(value)
                if res_name not in worst or value > worst[res_name][0]:
                    worst[res_name] = (value, trial)
        for res_name in sorted(worst):
            value, trial = worst[res_name]
            tolerance = overrides.get(res_name, config.tolerances.identity_eps)
            lines.append(SweepLine(name, res_name, value, tolerance, trial))
    return lines


def format_report(config: SweepConfig, lines: list[SweepLine]) -> str:
    """Fixed-format text report; identical configurations yield identical bytes."""
    out = [f"sweep d={config.dimension} trials={config.trials} seed={config.seed}"]
    for line in lines:
        status = "pass" if line.passed else "FAIL"
        out.append(
            f"  {line.check:>20s} {line.residual_name:<24s} "
            f"max_residual={line.max_residual:.6e} tol={line.tolerance:.1e} "
            f"worst_trial={line.worst_trial} {status}")
    failed = [l for l in lines if not l.passed]
    out.append(f"checks: {len(lines)} lines, {len(failed)} failing")
    return "\n".join(out) + "\n"

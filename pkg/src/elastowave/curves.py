"""Wave-curve geometry through a fixed base state.

For this system the shock branch and the rarefaction branch of one family
lie on a single straight line through the base state: family ONE on
sigma = sigma_b + k (u - u_b), family TWO on sigma = sigma_b - k (u - u_b).
Velocity increase along the line gives the rarefaction branch, decrease
the shock branch.  The two lines through a base state divide the plane
into four sectors, and the sector that contains a second state decides
the wave pattern connecting the two:

    Gamma1  (d1 < 0, d2 > 0): rarefaction of each family
    Gamma2  (d1 < 0, d2 < 0): 1-shock then 2-rarefaction
    Gamma3  (d1 > 0, d2 < 0): shock of each family
    Gamma4  (d1 > 0, d2 > 0): 1-rarefaction then 2-shock

where d1 and d2 are the mismatches of the two Riemann invariants between
query and base.  That correspondence is forced by the intermediate-state
formula: the velocity step of the 1-wave is d2 / (2k) and the step of the
2-wave is -d1 / (2k), so each sign pins one wave type.  The property
tests lock this derivation down.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Params, State, WaveFamily

__all__ = [
    "DEFAULT_TOL",
    "RegionLabel",
    "SignedDistances",
    "classification_scale",
    "signed_distances",
    "wave_curve_sigma",
    "classify",
    "intermediate_state",
]

DEFAULT_TOL = 1e-12


class RegionLabel(Enum):
    COINCIDENT = "coincident"
    ON_R1 = "R1"
    ON_S1 = "S1"
    ON_R2 = "R2"
    ON_S2 = "S2"
    GAMMA1 = "Gamma1"
    GAMMA2 = "Gamma2"
    GAMMA3 = "Gamma3"
    GAMMA4 = "Gamma4"


@dataclass(frozen=True)
class SignedDistances:
    """Invariant mismatches of a query state relative to a base state.

    d1 = (sigma_q - k u_q) - (sigma_b - k u_b) vanishes exactly on the
    family-ONE line, d2 = (sigma_q + k u_q) - (sigma_b + k u_b) on the
    family-TWO line.
    """

    d1: float
    d2: float


def classification_scale(a: State, b: State, p: Params) -> float:
    """Magnitude scale used for all relative comparisons of two states."""
    return max(1.0, abs(a.sigma), abs(b.sigma), p.k * abs(a.u), p.k * abs(b.u))


def signed_distances(base: State, query: State, p: Params) -> SignedDistances:
    du = query.u - base.u
    ds = query.sigma - base.sigma
    return SignedDistances(d1=ds - p.k * du, d2=ds + p.k * du)


def wave_curve_sigma(base: State, family: WaveFamily, u: float, p: Params) -> float:
    """Stress on the family's wave-curve line through ``base`` at velocity u.

    Points with u > base.u are on the rarefaction branch, points with
    u < base.u on the shock branch.
    """
    return base.sigma + family.curve_slope(p) * (u - base.u)


def classify(
    base: State, query: State, p: Params, tol: float = DEFAULT_TOL
) -> tuple[RegionLabel, SignedDistances]:
    """Locate ``query`` relative to the wave curves through ``base``.

    On-curve detection wins over sector labels, and a query matching the
    base itself is COINCIDENT.  ``tol`` is relative to
    :func:`classification_scale`.
    """
    if tol < 0.0:
        raise ValueError(f"tol must be nonnegative, got {tol}")
    dist = signed_distances(base, query, p)
    cut = tol * classification_scale(base, query, p)
    on1 = abs(dist.d1) <= cut
    on2 = abs(dist.d2) <= cut
    du = query.u - base.u
    if on1 and on2 and p.k * abs(du) <= cut:
        return RegionLabel.COINCIDENT, dist
    if on1:
        return (RegionLabel.ON_R1 if du > 0.0 else RegionLabel.ON_S1), dist
    if on2:
        return (RegionLabel.ON_R2 if du > 0.0 else RegionLabel.ON_S2), dist
    if dist.d1 < 0.0:
        label = RegionLabel.GAMMA1 if dist.d2 > 0.0 else RegionLabel.GAMMA2
    else:
        label = RegionLabel.GAMMA4 if dist.d2 > 0.0 else RegionLabel.GAMMA3
    return label, dist


def intermediate_state(base: State, target: State, p: Params) -> State:
    """Intersection of the family-ONE line through ``base`` with the
    family-TWO line through ``target``.

    This is the constant state joining the 1-wave and the 2-wave when
    ``base`` and ``target`` are the outer data of a two-state problem.
    """
    u = (target.sigma - base.sigma) / (2.0 * p.k) + 0.5 * (target.u + base.u)
    sigma = 0.5 * (target.sigma + base.sigma) + 0.5 * p.k * (target.u - base.u)
    return State(u=u, sigma=sigma)

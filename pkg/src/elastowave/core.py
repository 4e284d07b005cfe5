"""Domain types and characteristic algebra of the 2x2 elastic-wave system.

The model couples a velocity u and a stress sigma through

    u_t + u u_x - sigma_x = 0
    sigma_t + u sigma_x - k^2 u_x = 0

with k > 0 the propagation speed of the elastic waves.  The coefficient
matrix [[u, -1], [-k^2, u]] has eigenvalues u - k and u + k for every
state, so the system is strictly hyperbolic, and both characteristic
fields are genuinely nonlinear.  Waves of family ONE travel with speeds
near u - k, waves of family TWO with speeds near u + k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "Params",
    "State",
    "WaveFamily",
    "Shock",
    "Rarefaction",
    "Wave",
    "WaveStructure",
    "characteristic_speeds",
    "riemann_invariants",
    "state_from_invariants",
]


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class Params:
    """Model parameters.  k is the elastic wave speed and must be positive."""

    k: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "k", _finite("k", self.k))
        if self.k <= 0.0:
            raise ValueError(f"k must be positive, got {self.k}")


@dataclass(frozen=True)
class State:
    """A point (u, sigma) in the state plane: velocity and stress."""

    u: float
    sigma: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", _finite("u", self.u))
        object.__setattr__(self, "sigma", _finite("sigma", self.sigma))


class WaveFamily(Enum):
    """The two characteristic families.

    All signed formulas are routed through ``sign = (-1)**j`` so the
    speed offset (family ONE: -k, family TWO: +k) and the wave-curve
    slope (family ONE: +k, family TWO: -k) cannot drift apart.
    """

    ONE = 1
    TWO = 2

    @property
    def sign(self) -> float:
        return -1.0 if self is WaveFamily.ONE else 1.0

    def speed_offset(self, p: Params) -> float:
        """Offset added to u (or to a mean of u) in speed formulas."""
        return self.sign * p.k

    def curve_slope(self, p: Params) -> float:
        """Slope dsigma/du of this family's wave curve."""
        return -self.sign * p.k

    def characteristic_speed(self, s: State, p: Params) -> float:
        return s.u + self.sign * p.k


def characteristic_speeds(s: State, p: Params) -> tuple[float, float]:
    """Both characteristic speeds at a state, strictly increasing."""
    return s.u - p.k, s.u + p.k


def riemann_invariants(s: State, p: Params) -> tuple[float, float]:
    """(sigma - k u, sigma + k u).

    The first is constant across every family-ONE wave, the second
    across every family-TWO wave; their level sets are the straight
    wave-curve lines.
    """
    return s.sigma - p.k * s.u, s.sigma + p.k * s.u


def state_from_invariants(w1: float, w2: float, p: Params) -> State:
    """Inverse of :func:`riemann_invariants`."""
    return State(u=(w2 - w1) / (2.0 * p.k), sigma=0.5 * (w1 + w2))


@dataclass(frozen=True)
class Shock:
    """An admissible discontinuity of one family.

    The flanking states sit on the family's wave curve with the right
    flank at lower velocity; the speed is the arithmetic mean of the
    flank velocities plus the family offset.
    """

    family: WaveFamily
    left: State
    right: State
    speed: float

    def __post_init__(self) -> None:
        _finite("speed", self.speed)
        if self.left == self.right:
            raise ValueError("shock flanks must differ; zero-strength waves are absent")

    @property
    def strength(self) -> float:
        return abs(self.right.u - self.left.u)


@dataclass(frozen=True)
class Rarefaction:
    """A centered fan of one family over xi = x/t in [xi_lo, xi_hi]."""

    family: WaveFamily
    left: State
    right: State
    xi_lo: float
    xi_hi: float

    def __post_init__(self) -> None:
        _finite("xi_lo", self.xi_lo)
        _finite("xi_hi", self.xi_hi)
        if self.xi_lo > self.xi_hi:
            raise ValueError(f"fan interval is empty: [{self.xi_lo}, {self.xi_hi}]")

    @property
    def strength(self) -> float:
        return abs(self.right.u - self.left.u)


Wave = Shock | Rarefaction


@dataclass(frozen=True)
class WaveStructure:
    """Self-similar two-wave solution: left / wave1 / middle / wave2 / right.

    Absent waves are ``None`` and the adjacent constant states collapse to
    equality, so a structure is always a chain left -> middle -> right.
    """

    left: State
    wave1: Wave | None
    middle: State
    wave2: Wave | None
    right: State

    def __post_init__(self) -> None:
        if self.wave1 is not None and self.wave1.family is not WaveFamily.ONE:
            raise ValueError("wave1 must belong to family ONE")
        if self.wave2 is not None and self.wave2.family is not WaveFamily.TWO:
            raise ValueError("wave2 must belong to family TWO")

    @property
    def waves(self) -> tuple[Wave, ...]:
        return tuple(w for w in (self.wave1, self.wave2) if w is not None)

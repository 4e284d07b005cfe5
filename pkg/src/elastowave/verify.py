"""Independent admissibility and consistency checks.

Everything here recomputes properties from the raw states rather than
trusting the solver's bookkeeping: jump conditions with the averaged
nonconservative product, the entropy inequality, fan continuity, wave
ordering, and a discrete weak-form audit of sampled solutions.

The nonconservative product u sigma_x is fixed across jumps by the
arithmetic mean of u, which turns the jump conditions into

    -s [u] + [u^2/2] - [sigma] = 0
    -s [sigma] + (u_l + u_r)/2 [sigma] - k^2 [u] = 0

and those two left-hand sides are the residuals reported here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Params, Rarefaction, Shock, State, WaveFamily, WaveStructure
from .riemann import sample_many, speed_support

__all__ = [
    "RHResidual",
    "rh_residual",
    "rh_scale",
    "lax_check",
    "waves_ordered",
    "fan_continuity_error",
    "max_rh_residual",
    "all_shocks_admissible",
    "perturb_shock_speed",
    "WeakFormGrid",
    "weak_residual",
]


@dataclass(frozen=True)
class RHResidual:
    """Left-hand sides of the two jump conditions; both vanish for a
    valid shock."""

    r_momentum: float
    r_stress: float


def rh_residual(left: State, right: State, speed: float, p: Params) -> RHResidual:
    du = right.u - left.u
    ds = right.sigma - left.sigma
    ubar = 0.5 * (left.u + right.u)
    return RHResidual(
        r_momentum=-speed * du + 0.5 * (right.u**2 - left.u**2) - ds,
        r_stress=-speed * ds + ubar * ds - p.k**2 * du,
    )


def rh_scale(left: State, right: State, speed: float, p: Params) -> float:
    """Largest term magnitude entering the jump conditions; residual
    tolerances are relative to this."""
    du = right.u - left.u
    ds = right.sigma - left.sigma
    ubar = 0.5 * (left.u + right.u)
    return max(
        1.0,
        abs(speed * du),
        0.5 * left.u**2,
        0.5 * right.u**2,
        abs(ds),
        abs(speed * ds),
        abs(ubar * ds),
        p.k**2 * abs(du),
    )


def lax_check(
    left: State,
    right: State,
    speed: float,
    family: WaveFamily,
    p: Params,
    tol: float = 1e-12,
) -> bool:
    """Entropy inequality: the shock speed lies between the family's
    characteristic speeds of the flanks, right below left."""
    lam_l = family.characteristic_speed(left, p)
    lam_r = family.characteristic_speed(right, p)
    return lam_r - tol <= speed <= lam_l + tol


def waves_ordered(ws: WaveStructure, tol: float = 0.0) -> bool:
    """Whether the speed supports of the two waves do not overlap.

    The two-wave construction is only a single-valued solution when this
    holds; it can fail for velocity jumps larger than a few multiples of k.
    """
    if ws.wave1 is None or ws.wave2 is None:
        return True
    return speed_support(ws.wave1)[1] <= speed_support(ws.wave2)[0] + tol


def fan_continuity_error(ws: WaveStructure, p: Params) -> float:
    """Largest mismatch between a fan edge value and its flanking state."""
    err = 0.0
    for w in ws.waves:
        if not isinstance(w, Rarefaction):
            continue
        for xi, flank in ((w.xi_lo, w.left), (w.xi_hi, w.right)):
            u = xi - w.family.speed_offset(p)
            sigma = w.left.sigma + w.family.curve_slope(p) * (
                xi - w.family.characteristic_speed(w.left, p)
            )
            err = max(err, abs(u - flank.u), abs(sigma - flank.sigma))
    return err


def max_rh_residual(ws: WaveStructure, p: Params) -> float:
    """Largest scaled jump-condition residual over the shocks of a structure."""
    worst = 0.0
    for w in ws.waves:
        if not isinstance(w, Shock):
            continue
        r = rh_residual(w.left, w.right, w.speed, p)
        scale = rh_scale(w.left, w.right, w.speed, p)
        worst = max(worst, abs(r.r_momentum) / scale, abs(r.r_stress) / scale)
    return worst


def all_shocks_admissible(ws: WaveStructure, p: Params, tol: float = 1e-12) -> bool:
    return all(
        lax_check(w.left, w.right, w.speed, w.family, p, tol)
        for w in ws.waves
        if isinstance(w, Shock)
    )


def perturb_shock_speed(
    ws: WaveStructure, family: WaveFamily, delta: float
) -> WaveStructure:
    """Copy of a structure with one shock speed shifted by ``delta``.

    The result violates the jump conditions on purpose; it exists so the
    audits can be shown to reject invalid solutions.
    """
    def bump(w):
        if isinstance(w, Shock) and w.family is family:
            return Shock(w.family, w.left, w.right, w.speed + delta)
        return w

    w1 = bump(ws.wave1) if ws.wave1 is not None else None
    w2 = bump(ws.wave2) if ws.wave2 is not None else None
    if w1 is ws.wave1 and w2 is ws.wave2:
        raise ValueError(f"structure has no shock of family {family}")
    return WaveStructure(ws.left, w1, ws.middle, w2, ws.right)


@dataclass(frozen=True)
class WeakFormGrid:
    """Sampling window and resolution for the weak-form audit.

    The window must exclude t = 0; test functions are compactly supported
    bumps on the window and on a dyadic refinement of it
    (``levels`` extra levels of 2x2 tiling).
    """

    x_min: float
    x_max: float
    t_min: float
    t_max: float
    nx: int
    nt: int
    levels: int = 1

    def __post_init__(self) -> None:
        if not (
            math.isfinite(self.x_min)
            and math.isfinite(self.x_max)
            and math.isfinite(self.t_min)
            and math.isfinite(self.t_max)
        ):
            raise ValueError("grid window must be finite")
        if self.t_min <= 0.0:
            raise ValueError(f"t_min must be positive, got {self.t_min}")
        if self.x_min >= self.x_max or self.t_min >= self.t_max:
            raise ValueError("grid window is empty")
        if self.nx < 8 or self.nt < 8:
            raise ValueError("grid is degenerate: need at least 8 points per axis")
        if self.levels < 0:
            raise ValueError("levels must be nonnegative")

    def refined(self, factor: int = 2) -> "WeakFormGrid":
        return WeakFormGrid(
            self.x_min,
            self.x_max,
            self.t_min,
            self.t_max,
            self.nx * factor,
            self.nt * factor,
            self.levels,
        )


def _bump(z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z)
    inside = np.abs(z) < 1.0
    zi = z[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - zi * zi))
    return out


def _bump_deriv(z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z)
    inside = np.abs(z) < 1.0
    zi = z[inside]
    q = 1.0 - zi * zi
    out[inside] = np.exp(1.0 - 1.0 / q) * (-2.0 * zi / (q * q))
    return out


def _windows(grid: WeakFormGrid):
    for level in range(grid.levels + 1):
        n = 2**level
        dx = (grid.x_max - grid.x_min) / n
        dt = (grid.t_max - grid.t_min) / n
        for i in range(n):
            for j in range(n):
                yield (
                    grid.x_min + i * dx,
                    grid.x_min + (i + 1) * dx,
                    grid.t_min + j * dt,
                    grid.t_min + (j + 1) * dt,
                )


def _sigma_xi_slope(ws: WaveStructure, xi: np.ndarray, p: Params) -> np.ndarray:
    """d(sigma)/d(xi) of the sampled solution: nonzero only inside fans."""
    slope = np.zeros_like(xi)
    for w in ws.waves:
        if isinstance(w, Rarefaction):
            inside = (xi >= w.xi_lo) & (xi < w.xi_hi)
            slope[inside] = w.family.curve_slope(p)
    return slope


def weak_residual(
    sol, p: Params, grid: WeakFormGrid
) -> tuple[float, float]:
    """Discrete weak-form residuals of the two equations on a window.

    The first equation is tested in conservative form, u_t plus the x
    derivative of (u^2/2 - sigma); the second with the averaged
    nonconservative product, so the shock lines contribute explicit line
    integrals weighted by the mean of u across the jump.  Both residuals
    tend to zero under grid refinement for a valid solution and stall at
    a positive value when a shock speed is wrong.

    Accepts a QuarterPlaneSolution or a bare WaveStructure; returns the
    worst normalized residual over all test bumps, one per equation.
    """
    ws: WaveStructure = getattr(sol, "structure", sol)
    x = np.linspace(grid.x_min, grid.x_max, grid.nx)
    t = np.linspace(grid.t_min, grid.t_max, grid.nt)

    U = np.empty((grid.nt, grid.nx))
    S = np.empty_like(U)
    SX = np.empty_like(U)  # classical d(sigma)/dx, delta parts excluded
    for i, ti in enumerate(t):
        xi = x / ti
        U[i], S[i] = sample_many(ws, xi, p)
        SX[i] = _sigma_xi_slope(ws, xi, p) / ti
    F = 0.5 * U * U - S

    # trapezoid weights
    wx = np.full(grid.nx, x[1] - x[0])
    wx[0] *= 0.5
    wx[-1] *= 0.5
    wt = np.full(grid.nt, t[1] - t[0])
    wt[0] *= 0.5
    wt[-1] *= 0.5
    W = np.outer(wt, wx)

    shocks = [w for w in ws.waves if isinstance(w, Shock)]

    worst1 = 0.0
    worst2 = 0.0
    for (x0, x1, t0, t1) in _windows(grid):
        zx = (2.0 * x - (x0 + x1)) / (x1 - x0)
        zt = (2.0 * t - (t0 + t1)) / (t1 - t0)
        bx = _bump(zx)
        bt = _bump(zt)
        bxd = _bump_deriv(zx) * (2.0 / (x1 - x0))
        btd = _bump_deriv(zt) * (2.0 / (t1 - t0))
        phi = np.outer(bt, bx)
        phi_x = np.outer(bt, bxd)
        phi_t = np.outer(btd, bx)
        den = float(np.sum(W * phi))
        if den == 0.0:
            continue

        r1 = -float(np.sum(W * (U * phi_t + F * phi_x)))

        r2 = -float(np.sum(W * (S * phi_t - U * SX * phi - p.k**2 * U * phi_x)))
        for sh in shocks:
            ubar = 0.5 * (sh.left.u + sh.right.u)
            dsig = sh.right.sigma - sh.left.sigma
            zxs = (2.0 * sh.speed * t - (x0 + x1)) / (x1 - x0)
            phi_line = _bump(zxs) * bt
            r2 += ubar * dsig * float(np.sum(wt * phi_line))

        worst1 = max(worst1, abs(r1) / den)
        worst2 = max(worst2, abs(r2) / den)
    return worst1, worst2

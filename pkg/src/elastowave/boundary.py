"""Quarter-plane solver: case machine, boundary trace, admissible set.

The solution of the problem with constant boundary data (x = 0) and
constant initial data (t = 0) is the two-state solution with the boundary
state on the left, restricted to x >= 0.  The case label records which
part of the wave structure is visible there; it is decided by the signs
of the wave speeds of the constructed structure:

    region          waves            sub-cases (speed signs)
    -----------------------------------------------------------------
    on R1 curve     1-fan            1a: both edges > 0
                                     1b: both edges < 0
                                     1c: edges straddle 0
    on R2 curve     2-fan            2a / 2b / 2c  (same splits)
    on S1 curve     1-shock          3a: speed > 0,  3b: speed < 0
    on S2 curve     2-shock          4a / 4b
    Gamma1          1-fan + 2-fan    5a: all visible, 5b: none,
                                     5c-i/ii/iii: left edge hidden,
                                     split by the middle fan edges
    Gamma2          1-shock + 2-fan  6a: shock visible, 6b: none,
                                     6c-i/ii: shock hidden, split by
                                     the inner fan edge
    Gamma3          1-shock+2-shock  7a: both visible, 7b: none,
                                     7c: only the 2-shock
    Gamma4          1-fan + 2-shock  8a / 8b / 8c-i/ii (mirror of 6)

A tie (some wave speed equal to zero within tolerance) gets the label
SONIC; the tie is resolved as if the tied speed were negative, which is
exactly what right-continuous sampling at xi = 0 produces, and the
resolved concrete case is reported alongside.  Coincident data is
CONSTANT.

The boundary value is attained only in the weak sense: the trace
(the limit of the solution as x -> 0+) ranges over the set of states
reachable from the boundary state by waves of nonpositive speed.  That
set is characterized here by idempotence: a candidate belongs to it if
and only if solving with the candidate as initial data traces back to the
candidate itself.  A grid scan is provided as an independent audit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .core import Params, Rarefaction, Shock, State, Wave, WaveFamily, WaveStructure
from .curves import (
    DEFAULT_TOL,
    RegionLabel,
    SignedDistances,
    classification_scale,
    classify,
)
from .riemann import fan_state, sample, solve_riemann, speed_support

__all__ = [
    "CaseLabel",
    "QuarterPlaneSolution",
    "solve_ibvp",
    "boundary_trace",
    "in_admissible_set",
    "scan_admissible_set",
    "on_curve_solution",
]


class CaseLabel(Enum):
    CONSTANT = "constant"
    SONIC = "sonic"
    C1A = "1a"
    C1B = "1b"
    C1C = "1c"
    C2A = "2a"
    C2B = "2b"
    C2C = "2c"
    C3A = "3a"
    C3B = "3b"
    C4A = "4a"
    C4B = "4b"
    C5A = "5a"
    C5B = "5b"
    C5C_I = "5c-i"
    C5C_II = "5c-ii"
    C5C_III = "5c-iii"
    C6A = "6a"
    C6B = "6b"
    C6C_I = "6c-i"
    C6C_II = "6c-ii"
    C7A = "7a"
    C7B = "7b"
    C7C = "7c"
    C8A = "8a"
    C8B = "8b"
    C8C_I = "8c-i"
    C8C_II = "8c-ii"


@dataclass(frozen=True)
class QuarterPlaneSolution:
    """Solution of the quarter-plane problem.

    ``structure`` is the underlying two-state solution, ``trace`` its
    right-continuous value at xi = 0 (the attained boundary value), and
    ``visible_waves`` the waves that reach into x > 0: shocks with
    nonnegative speed, fans clipped to nonnegative speeds.  ``case`` is
    SONIC when a wave speed ties zero; ``resolved_case`` always names the
    concrete sub-case the restriction coincides with.
    """

    structure: WaveStructure
    region: RegionLabel
    distances: SignedDistances
    case: CaseLabel
    resolved_case: CaseLabel
    trace: State
    visible_waves: tuple[Wave, ...]
    params: Params


def _resolved_sign(value: float, cut: float) -> int:
    # ties count as negative: right-continuity hands xi = 0 to the state
    # on the right of a zero-speed breakpoint
    return 1 if value > cut else -1


def _case_labels(
    ws: WaveStructure, region: RegionLabel, p: Params, tol: float
) -> tuple[CaseLabel, CaseLabel]:
    if region is RegionLabel.COINCIDENT:
        return CaseLabel.CONSTANT, CaseLabel.CONSTANT

    cut = tol * max(
        1.0, p.k, abs(ws.left.u), abs(ws.middle.u), abs(ws.right.u)
    )
    speeds: list[float] = []
    for w in ws.waves:
        speeds.extend(speed_support(w))
    sonic = any(abs(v) <= cut for v in speeds)

    def pos(value: float) -> bool:
        return _resolved_sign(value, cut) > 0

    w1, w2 = ws.wave1, ws.wave2
    if region is RegionLabel.ON_R1:
        lo, hi = speed_support(w1)
        resolved = CaseLabel.C1A if pos(lo) else (CaseLabel.C1C if pos(hi) else CaseLabel.C1B)
    elif region is RegionLabel.ON_R2:
        lo, hi = speed_support(w2)
        resolved = CaseLabel.C2A if pos(lo) else (CaseLabel.C2C if pos(hi) else CaseLabel.C2B)
    elif region is RegionLabel.ON_S1:
        resolved = CaseLabel.C3A if pos(w1.speed) else CaseLabel.C3B
    elif region is RegionLabel.ON_S2:
        resolved = CaseLabel.C4A if pos(w2.speed) else CaseLabel.C4B
    elif region is RegionLabel.GAMMA1:
        lo1, hi1 = speed_support(w1)
        lo2, hi2 = speed_support(w2)
        if pos(lo1):
            resolved = CaseLabel.C5A
        elif not pos(hi2):
            resolved = CaseLabel.C5B
        elif pos(hi1):
            resolved = CaseLabel.C5C_I
        elif pos(lo2):
            resolved = CaseLabel.C5C_II
        else:
            resolved = CaseLabel.C5C_III
    elif region is RegionLabel.GAMMA2:
        lo2, hi2 = speed_support(w2)
        if pos(w1.speed):
            resolved = CaseLabel.C6A
        elif not pos(hi2):
            resolved = CaseLabel.C6B
        elif pos(lo2):
            resolved = CaseLabel.C6C_I
        else:
            resolved = CaseLabel.C6C_II
    elif region is RegionLabel.GAMMA3:
        if pos(w1.speed):
            resolved = CaseLabel.C7A
        elif not pos(w2.speed):
            resolved = CaseLabel.C7B
        else:
            resolved = CaseLabel.C7C
    else:  # GAMMA4
        lo1, hi1 = speed_support(w1)
        if pos(lo1):
            resolved = CaseLabel.C8A
        elif not pos(w2.speed):
            resolved = CaseLabel.C8B
        elif pos(hi1):
            resolved = CaseLabel.C8C_I
        else:
            resolved = CaseLabel.C8C_II

    return (CaseLabel.SONIC if sonic else resolved), resolved


def _visible_waves(ws: WaveStructure, p: Params) -> tuple[Wave, ...]:
    out: list[Wave] = []
    for w in ws.waves:
        if isinstance(w, Shock):
            if w.speed >= 0.0:
                out.append(w)
        else:
            if w.xi_hi > 0.0:
                if w.xi_lo >= 0.0:
                    out.append(w)
                else:
                    edge = fan_state(w.left, w.family, 0.0, p)
                    out.append(Rarefaction(w.family, edge, w.right, 0.0, w.xi_hi))
    return tuple(out)


def solve_ibvp(
    boundary: State, initial: State, p: Params, tol: float = DEFAULT_TOL
) -> QuarterPlaneSolution:
    """Solve the quarter-plane problem with the given constant data.

    The restriction of the two-state solution to x >= 0, together with
    its case label, boundary trace and visible waves.
    """
    region, dist = classify(boundary, initial, p, tol)
    ws = solve_riemann(boundary, initial, p, tol)
    case, resolved = _case_labels(ws, region, p, tol)
    return QuarterPlaneSolution(
        structure=ws,
        region=region,
        distances=dist,
        case=case,
        resolved_case=resolved,
        trace=sample(ws, 0.0, p),
        visible_waves=_visible_waves(ws, p),
        params=p,
    )


def boundary_trace(sol: QuarterPlaneSolution) -> State:
    """The attained boundary value, lim x -> 0+ of the solution."""
    return sol.trace


def _states_match(a: State, b: State, p: Params, tol: float) -> bool:
    scale = classification_scale(a, b, p)
    return p.k * abs(a.u - b.u) <= tol * scale and abs(a.sigma - b.sigma) <= tol * scale


def in_admissible_set(
    boundary: State, candidate: State, p: Params, tol: float = 1e-9
) -> bool:
    """Whether ``candidate`` is an attainable boundary value for ``boundary``.

    Uses the idempotence test: solve with the candidate as initial data
    and check that the trace reproduces the candidate.
    """
    sol = solve_ibvp(boundary, candidate, p)
    return _states_match(sol.trace, candidate, p, tol)


def scan_admissible_set(
    boundary: State,
    candidate: State,
    initials: Iterable[State],
    p: Params,
    tol: float = 1e-9,
) -> list[State]:
    """Brute-force audit of :func:`in_admissible_set`.

    Returns every initial state from ``initials`` whose boundary trace
    matches ``candidate`` within tolerance.
    """
    hits = []
    for z in initials:
        sol = solve_ibvp(boundary, z, p)
        if _states_match(sol.trace, candidate, p, tol):
            hits.append(z)
    return hits


def on_curve_solution(
    family: WaveFamily,
    boundary: State,
    initial: State,
    p: Params,
    x: float,
    t: float,
    tol: float = DEFAULT_TOL,
) -> State:
    """Closed form of the quarter-plane solution for on-curve data.

    Requires the initial state to lie on the ``family`` wave curve through
    the boundary state (equal Riemann invariant of that family).  The
    solution is then a single wave of that family and can be written down
    directly; this evaluator is independent of the wave-structure solver
    and serves as a regression oracle for it.
    """
    if t <= 0.0 or x <= 0.0:
        raise ValueError(f"point (x={x}, t={t}) outside the open quarter plane")
    slope = family.curve_slope(p)
    mismatch = (initial.sigma - boundary.sigma) - slope * (initial.u - boundary.u)
    scale = classification_scale(boundary, initial, p)
    if abs(mismatch) > tol * scale:
        raise ValueError(
            "initial state does not lie on the wave curve of that family "
            f"through the boundary state (mismatch {mismatch!r})"
        )
    v_b = family.characteristic_speed(boundary, p)
    v_0 = family.characteristic_speed(initial, p)
    xi = x / t
    if p.k * abs(initial.u - boundary.u) <= tol * scale:
        return initial
    if v_b < v_0:
        # single fan between the two characteristic speeds
        if xi < v_b:
            return boundary
        if xi < v_0:
            u = xi - family.speed_offset(p)
            return State(u=u, sigma=boundary.sigma + slope * (u - boundary.u))
        return initial
    # single shock; right-continuous at the shock location
    s = 0.5 * (boundary.u + initial.u) + family.speed_offset(p)
    return boundary if xi < s else initial

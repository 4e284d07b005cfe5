import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elastowave import (
    Params,
    State,
    WaveFamily,
    WeakFormGrid,
    lax_check,
    perturb_shock_speed,
    rh_residual,
    rh_scale,
    solve_ibvp,
    solve_riemann,
    wave_curve_sigma,
    waves_ordered,
    weak_residual,
)
from problems import K1, golden_by_label

finite = st.floats(min_value=-20.0, max_value=20.0, allow_nan=False)
speeds = st.floats(min_value=0.05, max_value=10.0, allow_nan=False)


def test_rh_residual_zero_jump():
    s = State(1.3, -0.2)
    r = rh_residual(s, s, 0.77, K1)
    assert r.r_momentum == 0.0 and r.r_stress == 0.0


def test_rh_residual_valid_shock():
    # family-ONE shock of the two-shock example; brute-force substitution:
    # -0.5(-1) + (1 - 4)/2 - (-1) = 0 and -0.5(-1) + 1.5(-1) - (-1) = 0
    r = rh_residual(State(2.0, 0.0), State(1.0, -1.0), 0.5, K1)
    assert r.r_momentum == 0.0 and r.r_stress == 0.0


def test_rh_residual_perturbed_speed():
    r = rh_residual(State(2.0, 0.0), State(1.0, -1.0), 0.6, K1)
    assert abs(r.r_momentum - 0.1) <= 1e-15
    assert r.r_stress != 0.0


@given(finite, finite, speeds, st.floats(min_value=1e-3, max_value=10.0), st.sampled_from(list(WaveFamily)))
@settings(max_examples=500, deadline=None)
def test_on_curve_shock_rh_identity(u_minus, sigma_minus, k, drop, family):
    # any pair on the shock branch with the mean-speed formula zeroes both
    # residuals; this is pure algebra and must hold to rounding
    p = Params(k)
    left = State(u_minus, sigma_minus)
    u_plus = u_minus - drop * k
    right = State(u_plus, wave_curve_sigma(left, family, u_plus, p))
    speed = 0.5 * (u_minus + u_plus) + family.speed_offset(p)
    r = rh_residual(left, right, speed, p)
    scale = rh_scale(left, right, speed, p)
    assert abs(r.r_momentum) <= 1e-12 * scale
    assert abs(r.r_stress) <= 1e-12 * scale


def test_lax_examples():
    left, right = State(2.0, 0.0), State(1.0, -1.0)
    assert lax_check(left, right, 0.5, WaveFamily.ONE, K1)
    assert not lax_check(right, left, 0.5, WaveFamily.ONE, K1)
    s = State(0.4, 0.4)
    assert lax_check(s, s, WaveFamily.ONE.characteristic_speed(s, K1), WaveFamily.ONE, K1)


def test_lax_rejects_expansion_shocks():
    # reversed flanks (velocity increasing) violate the inequality
    left = State(0.0, 0.0)
    right = State(1.0, 1.0)
    speed = 0.5 * (left.u + right.u) - 1.0
    assert not lax_check(left, right, speed, WaveFamily.ONE, K1)


def test_waves_ordered_trivial_cases():
    assert waves_ordered(solve_riemann(State(0.0, 0.0), State(0.0, 0.0), K1))
    assert waves_ordered(solve_riemann(State(0.0, 0.0), State(1.0, 1.0), K1))


def test_perturb_shock_speed():
    ws = solve_riemann(State(2.0, 0.0), State(0.0, 0.0), K1)
    bad = perturb_shock_speed(ws, WaveFamily.ONE, 0.1)
    assert bad.wave1.speed == 0.6
    assert bad.wave2.speed == ws.wave2.speed
    with pytest.raises(ValueError):
        perturb_shock_speed(solve_riemann(State(0.0, 0.0), State(1.0, 1.0), K1), WaveFamily.ONE, 0.1)


def test_weak_grid_validation():
    with pytest.raises(ValueError):
        WeakFormGrid(0.0, 1.0, 0.0, 1.0, 64, 64)  # t_min = 0
    with pytest.raises(ValueError):
        WeakFormGrid(1.0, 0.0, 0.1, 1.0, 64, 64)  # empty window
    with pytest.raises(ValueError):
        WeakFormGrid(0.0, 1.0, 0.1, 1.0, 4, 64)  # degenerate


GRID = WeakFormGrid(0.03, 2.43, 0.35, 1.15, 200, 200)


def test_weak_residual_constant_solution():
    sol = solve_ibvp(State(0.4, -0.3), State(0.4, -0.3), K1)
    r1, r2 = weak_residual(sol, K1, GRID)
    assert r1 <= 1e-6 and r2 <= 1e-6


def test_weak_residual_decreases_under_refinement():
    g = golden_by_label("7a")
    sol = solve_ibvp(g.boundary, g.initial, K1)
    coarse = weak_residual(sol, K1, GRID)
    fine = weak_residual(sol, K1, GRID.refined())
    assert fine[0] <= coarse[0] / 1.8
    assert fine[1] <= coarse[1] / 1.8


def test_weak_residual_rejects_wrong_speed():
    g = golden_by_label("7a")
    sol = solve_ibvp(g.boundary, g.initial, K1)
    bad = perturb_shock_speed(sol.structure, WaveFamily.ONE, 0.1)
    fine_grid = GRID.refined()
    good = weak_residual(sol, K1, fine_grid)
    wrong = weak_residual(bad, K1, fine_grid)
    assert wrong[0] > 10.0 * good[0]
    assert wrong[1] > 10.0 * good[1]
    # and the defect does not vanish under refinement
    wrong_coarse = weak_residual(bad, K1, GRID)
    assert wrong[0] > 0.3 * wrong_coarse[0]

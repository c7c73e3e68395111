import math

import pytest

from ssbtma import ArrayGeometry, build_excitations, make_plan
from ssbtma import efficiency
from ssbtma.design import (
    DesignError,
    DesignSpec,
    calibrate_amplitude,
    make_design,
    solve_rho_for_L,
    solve_xi,
    validate_placement,
)
from ssbtma.oracle import integrate_pattern_power

from conftest import TABLE_ROWS


@pytest.mark.parametrize("rho, expected, tol", [
    (0.35, 0.2762, 0.002),
    (0.10, 0.1033, 0.002),
    (0.21, 0.179, 0.003),
])
def test_solve_xi(rho, expected, tol):
    assert abs(solve_xi(rho) - expected) <= tol


def test_solve_xi_increasing():
    xs = [solve_xi(r) for r in (0.05, 0.10, 0.21, 0.35)]
    assert xs == sorted(xs)


@pytest.mark.parametrize("L, rho", TABLE_ROWS)
def test_table_rows_placed(L, rho):
    pl = validate_placement(L, rho)
    assert pl
    assert pl.violation is None
    assert pl.omega_bar_1 == pytest.approx((1 - rho) / pl.xi)


def test_placement_violation_named():
    pl = validate_placement(3, 0.9)
    assert not pl
    assert "flat zone" in pl.violation
    assert pl.omega_bar_1 < 2


def test_rolloff_width_shrinks_with_L():
    widths = [rho / solve_xi(rho) for _, rho in TABLE_ROWS]
    assert all(a > b for a, b in zip(widths, widths[1:]))


@pytest.mark.parametrize("L, rho", TABLE_ROWS)
def test_solve_rho_interval_contains_table_value(L, rho):
    sol = solve_rho_for_L(L)
    lo, hi = sol.interval
    assert lo <= rho <= hi
    assert lo < sol.rho < hi
    assert validate_placement(L, sol.rho)


def test_solve_rho_edges_are_sharp():
    lo, hi = solve_rho_for_L(3).interval
    assert validate_placement(3, lo)
    assert not validate_placement(3, hi + 1e-6)
    assert not validate_placement(3, lo - 1e-6)


def test_solve_rho_rejects_bad_L():
    with pytest.raises(DesignError):
        solve_rho_for_L(0)


def test_derived_fields(table_designs):
    for spec in table_designs.values():
        assert spec.omega_bar_1 == (1 - spec.rho) / spec.xi
        assert spec.omega_bar_2 == (1 + spec.rho) / spec.xi
        assert spec.L_max == spec.L + 1
        assert spec.overlap_ok()


def test_make_design_rejects_infeasible():
    with pytest.raises(DesignError, match="flat zone"):
        make_design(3, 0.9)


def test_bandwidth_sanity():
    DesignSpec(3, 0.35, 0.2762, bandwidth=6.0)
    with pytest.raises(DesignError):
        DesignSpec(3, 0.35, 0.2762, bandwidth=7.0)


def test_calibrated_amplitude_is_fixed_point(table_designs):
    for spec in table_designs.values():
        a = calibrate_amplitude(spec, 20)
        assert efficiency.report(spec.with_amplitude(a), 20).eta_mod == pytest.approx(1.0, abs=1e-12)


def test_calibration_independent_of_probe(table_designs):
    spec = table_designs[5]
    ref = calibrate_amplitude(spec, 20)
    for probe in (0.01, 0.7, 3.0, 250.0):
        assert calibrate_amplitude(spec, 20, probe=probe) == pytest.approx(ref, rel=1e-12)


def test_calibration_square_root_law(table_designs, monkeypatch):
    spec = table_designs[3]
    a_star = calibrate_amplitude(spec, 20)
    real = efficiency.report

    def doubled(s, N):
        r = real(s, N)
        return r.__class__(**{**r.__dict__, "eta_mod": 2 * r.eta_mod})

    monkeypatch.setattr(efficiency, "report", doubled)
    assert calibrate_amplitude(spec, 20) == pytest.approx(a_star / math.sqrt(2), rel=1e-12)


def test_calibration_against_sphere_integration(table_designs):
    spec = table_designs[3]
    N = 20
    geo = ArrayGeometry.uniform(N)
    tuned = spec.with_amplitude(calibrate_amplitude(spec, N))
    ex = build_excitations(tuned, make_plan(tuned, geo, {1: 50.0, 2: 100.0}))
    total = sum(integrate_pattern_power(ex, geo, q) for q in range(1, tuned.L + 2))
    assert total == pytest.approx(4 * math.pi * N, rel=1e-6)

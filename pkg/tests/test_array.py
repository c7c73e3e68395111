import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ssbtma import ArrayGeometry, DesignSpec, build_excitations, make_plan
from ssbtma.array import directivity, harmonic_factor, pattern, pattern_db, time_factor
from ssbtma.modulation import coeff_P
from ssbtma.oracle import integrate_pattern_power


def first_sidelobe_db(amp):
    """Brute force: highest first sidelobe beside the main lobe, relative to the peak.

    A side whose main lobe runs into the edge of the visible region has no
    sidelobe there.
    """
    n = len(amp)
    i = int(np.argmax(amp))
    db = 20 * np.log10(np.maximum(amp, 1e-300) / amp[i])
    levels = []
    for step in (-1, 1):
        j = i
        while 0 <= j + step < n and amp[j + step] <= amp[j]:
            j += step
        if not 0 < j < n - 1:
            continue
        k = j
        while 0 <= k + step < n and amp[k + step] >= amp[k]:
            k += step
        if 0 < k < n - 1:
            levels.append(db[k])
    return max(levels)


def test_broadside_peak(spec3, geo20, broadside3):
    _, ex = broadside3
    assert harmonic_factor(ex, geo20, 1, 90.0) == pytest.approx(2 * 20 * coeff_P(spec3, 1), rel=1e-14)


def test_single_element_isotropic(spec3):
    geo = ArrayGeometry.uniform(1)
    ex = build_excitations(spec3, make_plan(spec3, geo, {1: 40.0}))
    vals = np.abs(harmonic_factor(ex, geo, 2, np.linspace(0, 180, 37)))
    np.testing.assert_allclose(vals, 2 * abs(ex.G[0, 1]), rtol=1e-14)


def test_steered_peak_is_global_max(spec3, geo20):
    ex = build_excitations(spec3, make_plan(spec3, geo20, {1: 60.0}))
    grid = np.arange(0, 180.0001, 0.1)
    amp = np.abs(harmonic_factor(ex, geo20, 1, grid))
    assert abs(harmonic_factor(ex, geo20, 1, 60.0)) == pytest.approx(2 * 20 * coeff_P(spec3, 1), rel=1e-12)
    assert grid[np.argmax(amp)] == pytest.approx(60.0)


def test_time_factor_paths_agree(steered3, geo20):
    _, ex = steered3
    rng = np.random.default_rng(7)
    th = rng.uniform(0, 180, 100)
    t = rng.uniform(-2, 2, 100)
    a = np.array([time_factor(ex, geo20, x, y) for x, y in zip(th, t)])
    b = np.array([time_factor(ex, geo20, x, y, method="signals") for x, y in zip(th, t)])
    assert np.max(np.abs(a - b) / np.abs(a)) <= 1e-9
    c = time_factor(ex, geo20, th, t + ex.T0)
    np.testing.assert_allclose(np.diag(c), a, rtol=1e-9)


def test_time_factor_broadside_origin(spec3, geo20, broadside3):
    _, ex = broadside3
    val = time_factor(ex, geo20, 90.0, 0.0)
    assert val.imag == pytest.approx(0.0, abs=1e-12)
    assert val.real == pytest.approx(2 * 20 * coeff_P(spec3, np.arange(1, 5)).sum(), rel=1e-12)


def test_time_factor_single_harmonic(steered3, geo20):
    _, ex = steered3
    G = np.zeros_like(ex.G)
    G[:, 2] = ex.G[:, 2]
    one = ex.with_G(G)
    expected = harmonic_factor(ex, geo20, 3, 47.0) * np.exp(1j * 3 * 2 * np.pi * 0.13)
    assert time_factor(one, geo20, 47.0, 0.13) == pytest.approx(expected, rel=1e-12)


def test_superposition(spec3, geo20, steered3, broadside3):
    a, b = steered3[1], broadside3[1]
    both = a.with_G(a.G + b.G)
    th, t = np.linspace(1, 179, 9), np.linspace(0, 1, 5)
    np.testing.assert_allclose(
        time_factor(both, geo20, th, t), time_factor(a, geo20, th, t) + time_factor(b, geo20, th, t), atol=1e-12
    )


def test_relative_peaks_l3(spec3, geo20):
    ex = build_excitations(spec3, make_plan(spec3, geo20, {1: 45.0, 2: 130.0, 3: 100.0}))
    grid = np.arange(0, 180.0001, 0.05)
    db = pattern_db(ex, geo20, [1, 2, 3, 4], grid)
    peaks = db.max(axis=1)
    assert peaks[0] == pytest.approx(0.0, abs=1e-9)
    assert peaks[1] == pytest.approx(0.0, abs=1e-9)
    assert peaks[2] == pytest.approx(-1.43, abs=0.05)
    assert peaks[3] == pytest.approx(-11.26, abs=0.3)
    assert grid[np.argmax(db[3])] == pytest.approx(90.0)


def test_pattern_samples(steered3, geo20):
    _, ex = steered3
    grid = np.linspace(0, 180, 721)
    samples = pattern(ex, geo20, [1, 2, 3, 4], grid)
    assert len(samples) == 721 * 4
    assert max(s.power_db for s in samples) == pytest.approx(0.0, abs=1e-12)
    s = samples[5]
    assert s.power_db == pytest.approx(20 * np.log10(abs(s.value) / max(abs(x.value) for x in samples)))
    with pytest.raises(ValueError):
        pattern(ex, geo20, [1], [-1.0, 10.0])


def test_first_sidelobe_uniform_n20(steered3, geo20):
    _, ex = steered3
    grid = np.arange(0, 180.0001, 0.01)
    for q in range(1, 5):
        amp = np.abs(harmonic_factor(ex, geo20, q, grid))
        assert first_sidelobe_db(amp) == pytest.approx(-13.2, abs=0.2)


def test_directivity(spec3, geo20, steered3):
    plan, ex = steered3
    d = [directivity(ex, geo20, q, plan.targets[q]) for q in range(1, 5)]
    assert d[0] == pytest.approx(d[1], abs=1e-12)
    # squared peak ratio in dB equals the 20 log amplitude level
    power_ratio_db = 10 * np.log10((coeff_P(spec3, 3) / coeff_P(spec3, 1)) ** 2)
    assert d[2] - d[0] == pytest.approx(power_ratio_db, abs=1e-9)
    assert d[2] - d[0] == pytest.approx(-1.434, abs=1e-3)
    assert directivity(ex.with_G(2 * ex.G), geo20, 1, 120.0) == pytest.approx(d[0], abs=1e-12)


def test_directivity_single_element(spec3):
    geo = ArrayGeometry.uniform(1)
    ex = build_excitations(spec3, make_plan(spec3, geo))
    # isotropic: 4 pi |2 G_1|^2 over 4 pi sum_q |2 G_q|^2
    share = abs(ex.G[0, 0]) ** 2 / np.sum(np.abs(ex.G) ** 2)
    assert directivity(ex, geo, 1, 33.0) == pytest.approx(10 * np.log10(share), abs=1e-12)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.floats(1.0, 179.0), min_size=4, max_size=4), st.integers(1, 32))
def test_power_identity(angles, N):
    spec = DesignSpec(3, 0.35, 0.2762)
    geo = ArrayGeometry.uniform(N)
    ex = build_excitations(spec, make_plan(spec, geo, dict(zip(range(1, 5), angles))))
    for q in range(1, 5):
        closed = 4 * np.pi * np.sum(np.abs(2 * ex.column(q)) ** 2)
        assert integrate_pattern_power(ex, geo, q) == pytest.approx(closed, rel=1e-6)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.floats(5.0, 175.0), min_size=4, max_size=4))
def test_beam_pointing(angles):
    spec = DesignSpec(3, 0.35, 0.2762)
    geo = ArrayGeometry.uniform(20)
    targets = dict(zip(range(1, 5), angles))
    ex = build_excitations(spec, make_plan(spec, geo, targets))
    grid = np.arange(0, 180.0001, 0.05)
    for q, th in targets.items():
        peak = grid[np.argmax(np.abs(harmonic_factor(ex, geo, q, grid)))]
        assert abs(peak - th) <= 0.05 + 1e-9


def test_broadside_symmetric(broadside3, geo20):
    _, ex = broadside3
    th = np.linspace(0, 90, 181)
    for q in range(1, 5):
        np.testing.assert_allclose(
            np.abs(harmonic_factor(ex, geo20, q, th)), np.abs(harmonic_factor(ex, geo20, q, 180 - th)), rtol=1e-12, atol=1e-12
        )


def test_geometry_validation():
    with pytest.raises(ValueError):
        ArrayGeometry((0.0, 0.5, 0.5))
    with pytest.raises(ValueError):
        ArrayGeometry.uniform(0)
    assert ArrayGeometry.uniform(3).positions == (0.0, 0.5, 1.0)

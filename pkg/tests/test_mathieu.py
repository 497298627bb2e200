import math

import numpy as np
import pytest

from compactseq.eigen import kth_eigenvalue
from compactseq.mathieu import ce0, char_value_a0


def test_char_value_classical_points():
    # classical table values for the lowest characteristic value
    assert char_value_a0(0.0) == pytest.approx(0.0, abs=1e-11)
    assert char_value_a0(1.0) == pytest.approx(-0.455138604, abs=1e-8)
    assert char_value_a0(5.0) == pytest.approx(-5.800046020, abs=1e-8)
    assert char_value_a0(10.0) == pytest.approx(-13.936979956658926, abs=1e-7)
    assert char_value_a0(25.0) == pytest.approx(-40.256779546566787, abs=1e-7)


def test_char_value_even_in_q():
    for q in (0.4, 2.0, 25.0):
        assert char_value_a0(-q) == char_value_a0(q)


def test_a0_is_the_bottom_of_the_spectrum():
    # the pencil eigenvalue right above the ground one maps to the next
    # even characteristic value; it must sit strictly higher
    for q in (0.5, 5.0, 40.0):
        lam1 = q / 2.0
        n = 40
        k = np.arange(-n, n + 1, dtype=float)
        ground = kth_eigenvalue(k * k, -lam1 / 2.0, 0)
        second = kth_eigenvalue(k * k, -lam1 / 2.0, 1)
        assert 4 * ground == pytest.approx(char_value_a0(q), abs=1e-9)
        assert second > ground + 1e-6


def test_ce0_constant_at_zero_q():
    ev = ce0(0.0, np.array([0.0, 0.3, 2.0]))
    assert np.allclose(ev.values, 1 / math.sqrt(2), atol=1e-12)
    assert ev.a0 == pytest.approx(0.0, abs=1e-11)


def test_ce0_normalization():
    for q in (-3.0, 0.7, 12.0):
        t = np.linspace(0.0, 2 * np.pi, 4096, endpoint=False)
        y = ce0(q, t).values
        integral = float(np.sum(y * y)) * (2 * np.pi / t.size)
        assert integral == pytest.approx(math.pi, rel=1e-12)


def test_ce0_reflection_identity():
    t = np.linspace(0.0, np.pi, 301)
    for q in (0.4, 3.0, 18.0):
        a = ce0(q, t).values
        b = ce0(-q, np.pi / 2 - t).values
        assert np.allclose(a, b, atol=1e-13)


def test_ce0_is_nodeless_and_coeffs_positive():
    t = np.linspace(0.0, 2 * np.pi, 2048)
    for q in (-10.0, 0.4, 10.0):
        ev = ce0(q, t)
        assert np.all(ev.values > 0)
        assert np.all(ev.fourier_coeffs > 0)
        assert np.allclose(ev.fourier_coeffs, ev.fourier_coeffs[::-1], atol=0)
        assert float(ev.fourier_coeffs @ ev.fourier_coeffs) == pytest.approx(1.0)


def test_ce0_satisfies_ode():
    # central-difference residual of y'' + (a0 - 2 q cos 2t) y = 0
    m = 1 << 15
    t = np.linspace(0.0, 2 * np.pi, m, endpoint=False)
    h = t[1] - t[0]
    for q in (0.4, -6.0, 30.0):
        ev = ce0(q, t)
        y = ev.values
        ypp = (np.roll(y, -1) - 2 * y + np.roll(y, 1)) / (h * h)
        resid = ypp + (ev.a0 - 2 * q * np.cos(2 * t)) * y
        assert float(np.max(np.abs(resid))) < 1e-5


def test_explicit_half_len():
    # a generous fixed grid must agree with the auto-grown one
    assert char_value_a0(2.0, half_len=60) == pytest.approx(
        char_value_a0(2.0), abs=1e-11
    )
    with pytest.raises(ValueError):
        char_value_a0(2.0, half_len=0)


def test_scaled_ce0_is_unit_energy_spectrum():
    # sqrt(2) * ce0 has mean square one over a period, matching a
    # unit-energy spectrum read through w = 2 theta
    t = np.linspace(0.0, 2 * np.pi, 2048, endpoint=False)
    y = math.sqrt(2.0) * ce0(-4.0, t).values
    assert float(np.mean(y * y)) == pytest.approx(1.0, rel=1e-12)

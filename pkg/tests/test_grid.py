import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from oplab.errors import ConfigurationError
from oplab.grid import Grid, SampledFunction, fourier_transform, inverse_fourier_transform, modulate
from oplab.profiles import gaussian, indicator, random_smooth


def quad_transform(f, x: float) -> complex:
    """Oracle: adaptive quadrature of int f(t) e^{itx} dt."""
    re = quad(lambda t: (f(t) * np.exp(1j * t * x)).real, -np.inf, np.inf, limit=400)[0]
    im = quad(lambda t: (f(t) * np.exp(1j * t * x)).imag, -np.inf, np.inf, limit=400)[0]
    return re + 1j * im


def test_grid_invariants():
    g = Grid(32.0, 2**12)
    x = g.nodes()
    assert len(x) == 2**12
    assert np.allclose(np.diff(x), g.spacing)
    assert g.spacing * g.count == pytest.approx(2 * g.half_width)
    # symmetric about 0 up to one sample: 0 is a node, endpoints are -T and T-h
    assert x[g.count // 2] == pytest.approx(0.0)
    assert g.dual().dual() == g


def test_grid_rejects_bad_counts():
    with pytest.raises(ConfigurationError):
        Grid(32.0, 3000)
    with pytest.raises(ConfigurationError):
        Grid(-1.0, 1024)


def test_gaussian_transform_matches_quadrature_oracle():
    g = Grid(16.0, 2**12)
    f = gaussian(g, width=1.0)
    F = fourier_transform(f)
    xi = F.grid.nodes()
    # ten sample frequencies across the dual grid
    for target in np.linspace(-6.0, 6.0, 10):
        m = int(np.argmin(np.abs(xi - target)))
        oracle = quad_transform(lambda t: np.exp(-t * t / 2.0), xi[m])
        assert abs(F.values[m] - oracle) < 1e-6
        # closed form sqrt(2 pi) e^{-x^2/2}
        assert abs(F.values[m] - np.sqrt(2 * np.pi) * np.exp(-xi[m] ** 2 / 2)) < 1e-6


def test_indicator_transform_closed_form():
    g = Grid(16.0, 2**13)
    f = indicator(g, -1.0, 1.0)
    F = fourier_transform(f)
    xi = F.grid.nodes()
    sel = np.abs(xi) < 20.0
    expected = np.where(xi[sel] == 0.0, 2.0, 2.0 * np.sin(xi[sel]) / np.where(xi[sel] == 0, 1, xi[sel]))
    # rectangle-rule transform of a sampled jump is first-order accurate
    assert np.max(np.abs(F.values[sel] - expected)) < 1.5 * g.spacing
    m0 = int(np.argmin(np.abs(xi)))
    assert abs(F.values[m0] - 2.0) < 1e-11
    oracle = quad_transform(lambda t: 1.0 * (np.abs(t) <= 1.0), xi[m0])
    assert abs(F.values[m0] - oracle) < 1e-8


def test_zero_transforms_to_zero():
    g = Grid(8.0, 2**8)
    z = SampledFunction(g, np.zeros(g.count))
    assert np.all(fourier_transform(z).values == 0)
    assert np.all(inverse_fourier_transform(z).values == 0)


def test_round_trip_gaussian():
    g = Grid(32.0, 2**12)
    f = gaussian(g, width=2.0)
    back = inverse_fourier_transform(fourier_transform(f))
    err = (back - f).norm2() / f.norm2()
    assert err < 1e-8


def test_inverse_recovers_indicator_away_from_jumps():
    # Gibbs tails decay like 1/(pi * Xi * dist); the frequency half-width Xi
    # must exceed ~3200 to certify 1e-3 at distance 0.1 from the jumps
    g = Grid(16.0, 2**16)
    xi = g.dual().nodes()
    vals = np.where(xi == 0.0, 2.0, 2.0 * np.sin(xi) / np.where(xi == 0, 1, xi))
    back = inverse_fourier_transform(SampledFunction(g.dual(), vals))
    x = g.nodes()
    sel = (np.abs(np.abs(x) - 1.0) > 0.1) & (np.abs(x) < 8.0)
    target = (np.abs(x) < 1.0).astype(float)
    assert np.max(np.abs(back.values[sel] - target[sel])) < 1e-3


def test_plancherel():
    g = Grid(16.0, 2**12)
    rng = np.random.default_rng(7)
    f = random_smooth(g, rng)
    F = fourier_transform(f)
    assert F.norm2() ** 2 == pytest.approx(2 * np.pi * f.norm2() ** 2, rel=1e-6)


def test_linearity_on_random_pairs():
    g = Grid(16.0, 2**10)
    rng = np.random.default_rng(11)
    for _ in range(5):
        f, h = random_smooth(g, rng), random_smooth(g, rng)
        a, b = rng.normal() + 1j * rng.normal(), rng.normal()
        lhs = fourier_transform(a * f + b * h).values
        rhs = a * fourier_transform(f).values + b * fourier_transform(h).values
        assert np.max(np.abs(lhs - rhs)) < 1e-10 * max(1.0, np.max(np.abs(rhs)))


def test_truncation_warning_recorded():
    g = Grid(4.0, 2**8)
    f = gaussian(g, width=8.0)  # far from negligible at the boundary
    F = fourier_transform(f)
    assert "truncation_warning" in F.meta
    assert fourier_transform(gaussian(g, width=0.5)).meta == {}


def test_modulate_identity_and_modulus():
    g = Grid(8.0, 2**9)
    rng = np.random.default_rng(3)
    f = random_smooth(g, rng)
    assert np.array_equal(modulate(f, 0.0).values, f.values)
    m = modulate(f, 5.0)
    assert np.max(np.abs(np.abs(m.values) - np.abs(f.values))) < 1e-14


def test_modulate_translates_transform():
    g = Grid(16.0, 2**12)
    f = gaussian(g, width=1.5)
    dxi = g.dual().spacing
    shift_cells = 8
    lam = shift_cells * dxi  # grid-aligned modulation
    lhs = fourier_transform(modulate(f, lam)).values
    # (F e^{i lam t} f)(x) = (Ff)(x + lam): shift of the precomputed transform
    rhs = np.roll(fourier_transform(f).values, -shift_cells)
    interior = slice(shift_cells, None)
    err = np.sqrt(dxi * np.sum(np.abs(lhs - rhs)[interior] ** 2)) / np.sqrt(
        dxi * np.sum(np.abs(rhs[interior]) ** 2)
    )
    assert err < 1e-8


@settings(max_examples=25, deadline=None)
@given(lam=st.floats(-50, 50), scale=st.floats(0.1, 3.0))
def test_modulate_preserves_modulus_property(lam, scale):
    g = Grid(8.0, 2**8)
    f = gaussian(g, width=scale)
    m = modulate(f, lam)
    assert np.max(np.abs(np.abs(m.values) - np.abs(f.values))) < 1e-13


def test_sampled_function_immutability_and_checks():
    g = Grid(8.0, 2**8)
    f = gaussian(g)
    with pytest.raises(ValueError):
        f.values[0] = 1.0
    with pytest.raises(ConfigurationError):
        SampledFunction(g, np.zeros(7))
    with pytest.raises(ConfigurationError):
        SampledFunction(g, np.full(g.count, np.nan))

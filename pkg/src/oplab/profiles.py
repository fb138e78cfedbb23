"""Analytic profiles sampled onto grids: bumps, indicators, random smooth fields.

These are the stock test functions for experiments and batteries.  All are
cheap closed-form evaluations; the random ones are seeded and reproducible.
"""

from __future__ import annotations

import numpy as np

from .grid import Grid, SampledFunction

__all__ = [
    "gaussian",
    "modulated_gaussian",
    "indicator",
    "smooth_bump",
    "mollifier_values",
    "plateau",
    "random_smooth",
]


def gaussian(grid: Grid, center: float = 0.0, width: float = 1.0) -> SampledFunction:
    x = grid.nodes()
    return SampledFunction(grid, np.exp(-((x - center) ** 2) / (2.0 * width**2)))


def modulated_gaussian(grid: Grid, center: float = 0.0, width: float = 1.0, freq: float = 0.0) -> SampledFunction:
    x = grid.nodes()
    vals = np.exp(-((x - center) ** 2) / (2.0 * width**2)) * np.exp(1j * freq * x)
    return SampledFunction(grid, vals)


def indicator(grid: Grid, a: float, b: float) -> SampledFunction:
    x = grid.nodes()
    return SampledFunction(grid, ((x >= a) & (x < b)).astype(complex))


def bump_values(x: np.ndarray, center: float = 0.0, radius: float = 1.0) -> np.ndarray:
    """The standard C-infinity bump e^{1 - 1/(1 - t^2)} on |t| < 1, t = (x-c)/r."""
    t = (x - center) / radius
    out = np.zeros_like(t, dtype=float)
    inside = np.abs(t) < 1.0
    ti = t[inside]
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - ti * ti))
    return out


def smooth_bump(grid: Grid, center: float = 0.0, radius: float = 1.0) -> SampledFunction:
    return SampledFunction(grid, bump_values(grid.nodes(), center, radius))


def mollifier_values(x: np.ndarray, radius: float) -> np.ndarray:
    """bump_values normalized to unit integral on the given sample points."""
    v = bump_values(x, 0.0, radius)
    s = v.sum()
    if s == 0.0:
        raise ValueError("mollifier radius below grid resolution")
    dx = x[1] - x[0]
    return v / (s * dx)


def plateau(grid: Grid, flat_radius: float, margin: float) -> SampledFunction:
    """Smooth plateau: exactly 1 on [-R, R], supported in [-(R+margin), R+margin].

    Built as the discrete convolution of an indicator with a normalized bump
    mollifier of radius margin/2, so the flat part equals 1 to machine
    precision.
    """
    x = grid.nodes()
    h = grid.spacing
    half = margin / 2.0
    mol_x = np.arange(-half, half + h, h)
    mol = mollifier_values(mol_x, half) * h  # discrete weights summing to 1
    ind = ((x >= -(flat_radius + half)) & (x <= flat_radius + half)).astype(float)
    vals = np.convolve(ind, mol, mode="same")
    # guard against convolution roundoff drifting the plateau off 1
    vals[np.abs(x) <= flat_radius] = 1.0
    vals[np.abs(x) >= flat_radius + margin] = 0.0
    return SampledFunction(grid, vals)


def random_smooth(
    grid: Grid,
    rng: np.random.Generator,
    modes: int = 12,
    max_freq: float = 2.0,
    envelope_width: float | None = None,
    complex_valued: bool = True,
) -> SampledFunction:
    """Random band-limited field under a Gaussian envelope.

    A sum of `modes` plane waves with Gaussian-distributed amplitudes and
    frequencies uniform in [-max_freq, max_freq], damped by a centered
    Gaussian envelope (default width T/4).
    """
    x = grid.nodes()
    width = envelope_width if envelope_width is not None else grid.half_width / 4.0
    freqs = rng.uniform(-max_freq, max_freq, size=modes)
    if complex_valued:
        amps = rng.normal(size=modes) + 1j * rng.normal(size=modes)
    else:
        amps = rng.normal(size=modes).astype(complex)
    vals = np.zeros(grid.count, dtype=complex)
    for a, w in zip(amps, freqs):
        vals += a * np.exp(1j * w * x)
    if not complex_valued:
        vals = vals.real.astype(complex)
    vals *= np.exp(-(x**2) / (2.0 * width**2))
    return SampledFunction(grid, vals)

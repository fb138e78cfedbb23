"""Uniform symmetric grids on [-T, T) and the continuous-convention Fourier pair.

The transform convention is (Ff)(x) = int f(t) e^{+itx} dt with inverse
(1/2pi) int g(x) e^{-itx} dx.  The discrete transforms carry explicit phase
corrections so that sampled values approximate these integrals (not the raw
cyclic DFT); on the grid the pair is an exact inverse of itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigurationError

__all__ = [
    "Grid",
    "SampledFunction",
    "fourier_transform",
    "inverse_fourier_transform",
    "modulate",
]


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class Grid:
    """Uniform grid x_n = -T + n*h, n = 0..N-1, with h = 2T/N.

    N must be a power of two (>= 4) so the transform pair stays exact and
    phase factors collapse cleanly.
    """

    half_width: float
    count: int

    def __post_init__(self):
        if self.half_width <= 0:
            raise ConfigurationError(f"half_width must be positive, got {self.half_width}")
        if self.count < 4 or not _is_power_of_two(self.count):
            raise ConfigurationError(f"count must be a power of two >= 4, got {self.count}")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.count

    def nodes(self) -> np.ndarray:
        return -self.half_width + self.spacing * np.arange(self.count)

    def dual(self) -> "Grid":
        """Frequency grid: spacing pi/T, half-width pi/h.  Involutive."""
        return Grid(half_width=np.pi / self.spacing, count=self.count)

    def index_of(self, x: float) -> int:
        """Index of the nearest node; raises if x is outside the grid."""
        n = round((x + self.half_width) / self.spacing)
        if not 0 <= n < self.count:
            raise ConfigurationError(f"point {x} outside grid [{-self.half_width}, {self.half_width})")
        return int(n)


@dataclass(frozen=True)
class SampledFunction:
    """Complex samples on a Grid.  Values are frozen after construction and
    safe to share across threads."""

    grid: Grid
    values: np.ndarray
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.grid.count,):
            raise ConfigurationError(
                f"values shape {v.shape} does not match grid count {self.grid.count}"
            )
        if not np.all(np.isfinite(v.view(float))):
            raise ConfigurationError("values contain non-finite entries")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    # -- algebra ------------------------------------------------------------

    def _check_same_grid(self, other: "SampledFunction"):
        if other.grid != self.grid:
            raise ConfigurationError("grids do not match")

    def __add__(self, other: "SampledFunction") -> "SampledFunction":
        self._check_same_grid(other)
        return SampledFunction(self.grid, self.values + other.values)

    def __sub__(self, other: "SampledFunction") -> "SampledFunction":
        self._check_same_grid(other)
        return SampledFunction(self.grid, self.values - other.values)

    def __mul__(self, factor) -> "SampledFunction":
        if isinstance(factor, SampledFunction):
            self._check_same_grid(factor)
            return SampledFunction(self.grid, self.values * factor.values)
        return SampledFunction(self.grid, self.values * factor)

    __rmul__ = __mul__

    def __neg__(self) -> "SampledFunction":
        return SampledFunction(self.grid, -self.values)

    def __abs__(self) -> "SampledFunction":
        return SampledFunction(self.grid, np.abs(self.values))

    def with_values(self, values: np.ndarray) -> "SampledFunction":
        return replace(self, values=values)

    # -- basic integrals ----------------------------------------------------

    def integral(self) -> complex:
        return complex(self.grid.spacing * self.values.sum())

    def norm1(self) -> float:
        return float(self.grid.spacing * np.abs(self.values).sum())

    def norm2(self) -> float:
        return float(np.sqrt(self.grid.spacing * (np.abs(self.values) ** 2).sum()))

    def inner(self, other: "SampledFunction") -> complex:
        """<f, g> = int f conj(g), rectangle rule."""
        self._check_same_grid(other)
        return complex(self.grid.spacing * (self.values * np.conj(other.values)).sum())

    def tail_fraction(self, window: int | None = None) -> float:
        """L1 mass in the outer `window` samples on each side, relative to total."""
        if window is None:
            window = max(1, self.grid.count // 128)
        a = np.abs(self.values)
        total = a.sum()
        if total == 0.0:
            return 0.0
        return float((a[:window].sum() + a[-window:].sum()) / total)


def _tagged_for_truncation(f: SampledFunction, out: SampledFunction, tail_tol: float) -> SampledFunction:
    frac = f.tail_fraction()
    if frac > tail_tol:
        meta = dict(out.meta)
        meta["truncation_warning"] = frac
        out = replace(out, meta=meta)
    return out


def fourier_transform(f: SampledFunction, tail_tol: float = 1e-8) -> SampledFunction:
    """Samples of int f(t) e^{itx} dt on the dual grid.

    A tail-mass fraction above `tail_tol` is recorded in the result metadata
    as a truncation warning (the integral over R is replaced by [-T, T)).
    """
    g = f.grid
    dual = g.dual()
    n = np.arange(g.count)
    xi = dual.nodes()
    # F_m = h * e^{i t0 xi_m} * sum_n [f_n e^{i n h xi_0}] e^{2pi i nm/N}
    phase_in = np.exp(1j * g.spacing * xi[0] * n)
    phase_out = np.exp(1j * g.nodes()[0] * xi)
    vals = g.spacing * phase_out * (g.count * np.fft.ifft(f.values * phase_in))
    out = SampledFunction(dual, vals)
    return _tagged_for_truncation(f, out, tail_tol)


def inverse_fourier_transform(g: SampledFunction, tail_tol: float = 1e-8) -> SampledFunction:
    """Samples of (1/2pi) int g(x) e^{-itx} dx on the grid dual to g's.

    Exact inverse of `fourier_transform` on the grid (up to rounding).
    """
    gr = g.grid
    space = gr.dual()
    m = np.arange(gr.count)
    t = space.nodes()
    phase_in = np.exp(-1j * t[0] * gr.spacing * m)
    phase_out = np.exp(-1j * t * gr.nodes()[0])
    vals = (gr.spacing / (2.0 * np.pi)) * phase_out * np.fft.fft(g.values * phase_in)
    out = SampledFunction(space, vals)
    return _tagged_for_truncation(g, out, tail_tol)


def modulate(f: SampledFunction, lam: float) -> SampledFunction:
    """Pointwise multiplication by e^{i lam x}; preserves |f| exactly."""
    return SampledFunction(f.grid, f.values * np.exp(1j * lam * f.grid.nodes()))

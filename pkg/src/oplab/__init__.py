"""oplab: a desk-scale numerical laboratory for convolution-type operators
on Banach function spaces.

Core carriers live in `grid`; the concrete function spaces and operator-norm
machinery in `spaces`; maximal operators in `maximal`; compactly supported
orthonormal wavelets in `wavelets`; the sign-randomized wavelet operators in
`randomized`; bounded-variation Fourier multipliers and the Cauchy singular
integral in `multipliers`; rank-one factorizations and compactness
diagnostics in `algebra`; the reproducible experiment harness in
`experiments` with the `lab` CLI in `cli`.
"""

from .grid import Grid, SampledFunction, fourier_transform, inverse_fourier_transform, modulate
from .spaces import (
    Lebesgue,
    NormReport,
    SpaceSpec,
    VariableLebesgue,
    WeightedLebesgue,
    associate_space,
    format_space,
    holder_check,
    norm,
    operator_norm_estimate,
    parse_space,
)

__version__ = "0.1.0"

__all__ = [
    "Grid",
    "SampledFunction",
    "fourier_transform",
    "inverse_fourier_transform",
    "modulate",
    "Lebesgue",
    "WeightedLebesgue",
    "VariableLebesgue",
    "SpaceSpec",
    "NormReport",
    "norm",
    "associate_space",
    "holder_check",
    "operator_norm_estimate",
    "parse_space",
    "format_space",
    "__version__",
]

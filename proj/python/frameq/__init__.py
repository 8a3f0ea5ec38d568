"""Coherent-state frame quantization on odd-dimensional Hilbert spaces.

Arrays use storage order: index i of a length-d vector holds the centered
coordinate i - s with d = 2s + 1, and phase-space grids are indexed [n+s, k+s].
"""

import json as _json

from ._frameq import (
    FrameError,
    bipartite_density,
    center_mod,
    cli,
    coherent_state,
    density_from_function,
    dft,
    discrete_gaussian,
    displacement,
    frac_fourier,
    frame_states,
    gaussian_fourier_residual,
    harmonic_operator,
    harper_operator,
    kraus_channel,
    momentum_op,
    ordered_eigenbasis,
    parity_op,
    partial_trace_a,
    partial_trace_b,
    position_op,
    purity,
    quantize,
    resolution_residual,
    vacuum_state,
    wigner,
    wigner_theta_form,
)
from ._frameq import verify as _verify


def verify(d, tol=1e-10):
    """Runs the invariant battery for dimension ``d`` and returns the report dict."""
    return _json.loads(_verify(d, tol))


__all__ = [
    "FrameError",
    "bipartite_density",
    "center_mod",
    "cli",
    "coherent_state",
    "density_from_function",
    "dft",
    "discrete_gaussian",
    "displacement",
    "frac_fourier",
    "frame_states",
    "gaussian_fourier_residual",
    "harmonic_operator",
    "harper_operator",
    "kraus_channel",
    "momentum_op",
    "ordered_eigenbasis",
    "parity_op",
    "partial_trace_a",
    "partial_trace_b",
    "position_op",
    "purity",
    "quantize",
    "resolution_residual",
    "vacuum_state",
    "verify",
    "wigner",
    "wigner_theta_form",
]

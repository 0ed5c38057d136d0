"""Fundamental trigonometric interpolation and least-squares polynomials and splines."""

from ._trigfund import (
    Approximant,
    FourierCoeffs,
    GridKind,
    InterpPoly,
    InterpSpline,
    LSPoly,
    LSSpline,
    SampleSet,
    SplineKernel,
    SplineShape,
    TrigfundError,
    UniformGrid,
    build,
    collinearity_defect,
    continuous_gram,
    discrete_gram,
    fourier_coeffs,
    ls_oracle,
    make_grid,
    partial_sum_eval,
    periodic_quadrature,
    phi_ls_eval,
    residual_sse,
    series_C,
    series_H,
    sigma_factor,
    tm_eval,
    ts_eval,
    ts_ls_eval,
    wrap_angle,
)

__all__ = [name for name in dir() if not name.startswith("_")]

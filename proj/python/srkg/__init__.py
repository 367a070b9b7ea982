"""Bound-state spectra of the (generalized) Klein-Gordon oscillator in the
Som-Raychaudhuri space-time.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface.
"""

from ._core import (  # noqa: F401
    Branch,
    CouplingMode,
    EnergyLevel,
    GridSpec,
    OracleSolution,
    PhysicalConfig,
    QuantumNumbers,
    RadialCoefficients,
    RootSearchSpec,
    SeriesSolution,
    Source,
    SweepOptions,
    SweepRow,
    SweepSpec,
    SweepTable,
    ab_flux_shift_check,
    default_window,
    effective_angular_momentum,
    eigenvector_node_count,
    extrapolated_eigenvalue,
    format_double,
    load_config,
    oracle_energy,
    oracle_roots,
    parse_config_text,
    quantization_residual,
    radial_coefficients,
    radial_operator_eigenvalues,
    radial_wavefunction,
    render_config,
    run_sweep,
    series_coefficients,
    solve_energy,
    suggest_grid,
    termination_residuals,
    wavefunction_table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

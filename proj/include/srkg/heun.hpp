#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "srkg/model.hpp"

namespace srkg {

/// Default series length for wavefunction evaluation.
inline constexpr int kDefaultSeriesLength = 200;

/// Frobenius series of the regular branch of the biconfluent Heun equation
///
///   H'' + ((1 + 2 sqrt(a1))/rho - 2 rho) H'
///       + (a4/a2 - 2 - 2 sqrt(a1) - (2 a3/sqrt(a2))/rho) H = 0,
///
/// in rho = sqrt(a2) r. Only the indicial root regular at the origin is
/// evaluated; the rho^(-2 sqrt(a1)) branch is not representable here.
struct SeriesSolution {
    std::vector<double> coeffs;  ///< C_0..C_N with C_0 = 1
    double a1, a2, a3, a4;       ///< radial coefficients used (a2 = sqrt(a2sq))
    /// Degree at which the series is an exact polynomial, when detected.
    std::optional<int> truncation_index;
    /// max |C_j| for j > truncation_index (when truncation detected).
    double tail_norm = 0.0;
};

/// Forward three-term recurrence with C_0 = 1,
/// C_1 = (2 a3/sqrt(a2)) / (2 sqrt(a1) + 1). Requires a2sq > 0 and N >= 2.
SeriesSolution series_coefficients(const RadialCoefficients& rc, int N);

/// (C_{n+1}, a4/a2 - 2 - 2 sqrt(a1) - 2n). Both vanish exactly when the
/// series truncates to a degree-n polynomial.
std::pair<double, double> termination_residuals(const RadialCoefficients& rc,
                                                int n);

struct SeriesValue {
    double value;
    /// True when the last retained term is negligible at this rho.
    bool tail_ok;
};

/// H(rho) summed by Horner. A detected polynomial truncation gates the
/// sum: later coefficients are roundoff noise that exp(rho^2)-amplifies.
SeriesValue series_value(const SeriesSolution& s, double rho);

/// s(r) = exp(-a2 r^2 / 2) r^sqrt(a1) H(sqrt(a2) r) from precomputed
/// coefficients.
double wavefunction_value(const SeriesSolution& s, double r);

/// Convenience single-point evaluation (builds the series each call).
double radial_wavefunction(const RadialCoefficients& rc, int N, double r);

/// Tabulate s(r) on a uniform grid over [0, r_max]. With normalize, scales
/// to unit L2 norm in the r dr measure over the window (trapezoid rule).
std::vector<std::pair<double, double>> wavefunction_table(
    const RadialCoefficients& rc, int N, double r_max, int points,
    bool normalize = false);

}  // namespace srkg

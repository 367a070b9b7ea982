#pragma once

#include <cmath>

namespace srkg {

/// Oscillator coupling profile: f(r) = r, or the Cornell form
/// f(r) = xi1*r + xi2/r.
enum class CouplingMode { linear, cornell };

/// Continuous model parameters, natural units (c = hbar = 1).
struct PhysicalConfig {
    double M = 1.0;       ///< particle mass
    double e = 1.0;       ///< electric charge
    double omega = 0.0;   ///< oscillator frequency, >= 0
    double Omega = 0.0;   ///< vorticity of the space-time
    double B0 = 0.0;      ///< uniform magnetic field strength
    double alpha = 1.0;   ///< conical deficit parameter, in (0, 1]
    double PhiB = 0.0;    ///< Aharonov-Bohm flux
    double lambda = 0.0;  ///< Coulomb-type scalar potential strength
    double xi1 = 0.0;     ///< Cornell linear strength (cornell mode only)
    double xi2 = 0.0;     ///< Cornell inverse strength (cornell mode only)
    CouplingMode mode = CouplingMode::linear;

    /// Throws std::invalid_argument on out-of-range or non-finite values.
    void validate() const;
};

/// Separation constants of the stationary ansatz exp(-iEt + il*phi + ikz).
struct QuantumNumbers {
    int n = 0;       ///< radial series index, >= 0
    int l = 0;       ///< angular momentum
    double k = 0.0;  ///< axial wavenumber

    void validate() const;
};

/// Coefficients of the reduced radial equation
///
///   s'' + s'/r + (a4 - a1/r^2 - a2^2 r^2 - 2 a3/r) s = 0,
///
/// with the E-dependent entries evaluated at a trial energy.
struct RadialCoefficients {
    double a1;      ///< centrifugal strength, >= 0
    double a2sq;    ///< squared oscillator strength, >= 0
    double a3;      ///< Coulomb strength, M*lambda
    double a4;      ///< spectral parameter
    double energy;  ///< trial energy used for a2sq and a4

    /// Nonnegative root; the ansatz exp(-a2 r^2 / 2) needs a2 > 0.
    double a2() const { return std::sqrt(a2sq); }
};

/// l - e*PhiB/(2*pi): the only combination of l and flux the spectrum
/// depends on.
double effective_angular_momentum(int l, double e, double PhiB);

/// Radial-equation coefficients for the configured coupling mode at trial
/// energy E. Rejects alpha outside (0, 1].
RadialCoefficients radial_coefficients(const PhysicalConfig& cfg,
                                       const QuantumNumbers& qn, double E);

}  // namespace srkg

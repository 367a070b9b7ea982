// Shared helpers for the unit and acceptance suites: deterministic random
// configurations and the literal term-by-term coefficient evaluation used
// as an independent check of the regrouped model formulas.
#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "srkg/model.hpp"

namespace testsupport {

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random configuration across the supported parameter ranges.
inline srkg::PhysicalConfig random_config(std::mt19937& rng,
                                          bool cornell = false) {
    srkg::PhysicalConfig cfg;
    cfg.M = uniform(rng, 0.5, 1.5);
    cfg.e = uniform(rng, 0.5, 1.5);
    cfg.omega = uniform(rng, 0.3, 1.5);
    cfg.Omega = uniform(rng, 0.1, 1.2);
    cfg.B0 = uniform(rng, 0.0, 1.5);
    cfg.alpha = uniform(rng, 0.35, 1.0);
    cfg.PhiB = uniform(rng, -2.0, 2.0);
    cfg.lambda = uniform(rng, 0.0, 1.5);
    if (cornell) {
        cfg.mode = srkg::CouplingMode::cornell;
        cfg.xi1 = uniform(rng, 0.5, 2.0);
        cfg.xi2 = uniform(rng, 0.0, 1.5);
    }
    return cfg;
}

/// Random configuration in the sector where the finite-difference oracle
/// is trustworthy: lambda = 0 and effective angular momentum bounded away
/// from the critical centrifugal coupling a1 < 1/4.
inline srkg::PhysicalConfig random_oracle_config(std::mt19937& rng) {
    srkg::PhysicalConfig cfg = random_config(rng);
    cfg.lambda = 0.0;
    cfg.omega = uniform(rng, 0.5, 1.5);
    cfg.PhiB = uniform(rng, 0.1, 2.0);
    cfg.alpha = uniform(rng, 0.45, 1.0);
    return cfg;  // paired with l >= 1 so that |l_ef| >= 0.68
}

struct LiteralCoefficients {
    double a1, a2sq, a3, a4;
};

/// Term-by-term evaluation, no regrouping; the independent oracle for the
/// model formulas.
inline LiteralCoefficients literal_coefficients(const srkg::PhysicalConfig& c,
                                                const srkg::QuantumNumbers& q,
                                                double E) {
    constexpr double pi = std::numbers::pi;
    const double l = q.l;
    LiteralCoefficients out;
    out.a3 = c.M * c.lambda;
    if (c.mode == srkg::CouplingMode::linear) {
        out.a1 = l * l / (c.alpha * c.alpha) +
                 c.e * c.e * c.PhiB * c.PhiB /
                     (4.0 * c.alpha * c.alpha * pi * pi) +
                 c.lambda * c.lambda - c.e * l * c.PhiB / (c.alpha * c.alpha * pi);
        out.a2sq = E * E * c.Omega * c.Omega + c.e * c.Omega * c.B0 * E +
                   c.e * c.e * c.B0 * c.B0 / 4.0 +
                   c.M * c.M * c.omega * c.omega;
        out.a4 = E * E + c.Omega * c.e * c.PhiB * E / (c.alpha * pi) -
                 2.0 * c.Omega * l * E / c.alpha - c.e * c.B0 * l / c.alpha +
                 c.e * c.e * c.PhiB * c.B0 / (2.0 * pi * c.alpha) -
                 2.0 * c.M * c.omega - q.k * q.k - c.M * c.M;
    } else {
        out.a1 = c.M * c.M * c.omega * c.omega * c.xi2 * c.xi2 +
                 l * l / (c.alpha * c.alpha) +
                 c.e * c.e * c.PhiB * c.PhiB /
                     (4.0 * c.alpha * c.alpha * pi * pi) +
                 c.lambda * c.lambda - c.e * l * c.PhiB / (c.alpha * c.alpha * pi);
        out.a2sq = E * E * c.Omega * c.Omega + c.e * c.Omega * c.B0 * E +
                   c.M * c.M * c.omega * c.omega * c.xi1 * c.xi1 +
                   c.e * c.e * c.B0 * c.B0 / 4.0;
        out.a4 = E * E + c.Omega * c.e * c.PhiB * E / (c.alpha * pi) -
                 2.0 * c.Omega * l * E / c.alpha -
                 2.0 * c.M * c.omega * c.xi1 -
                 2.0 * c.M * c.M * c.omega * c.omega * c.xi1 * c.xi2 -
                 c.e * c.B0 * l / c.alpha +
                 c.e * c.e * c.PhiB * c.B0 / (2.0 * pi * c.alpha) -
                 q.k * q.k - c.M * c.M;
    }
    return out;
}

/// Magnitude scale of the constituent a1 terms, for cancellation-aware
/// comparisons.
inline double a1_term_scale(const srkg::PhysicalConfig& c,
                            const srkg::QuantumNumbers& q) {
    constexpr double pi = std::numbers::pi;
    const double l = q.l;
    double scale = l * l / (c.alpha * c.alpha) +
                   c.e * c.e * c.PhiB * c.PhiB /
                       (4.0 * c.alpha * c.alpha * pi * pi) +
                   c.lambda * c.lambda +
                   std::abs(c.e * l * c.PhiB) / (c.alpha * c.alpha * pi);
    if (c.mode == srkg::CouplingMode::cornell)
        scale += c.M * c.M * c.omega * c.omega * c.xi2 * c.xi2;
    return scale;
}

}  // namespace testsupport

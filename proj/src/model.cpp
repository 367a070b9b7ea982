#include "srkg/model.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace srkg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void PhysicalConfig::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1], got " +
                                    std::to_string(alpha));
    if (!(omega >= 0.0))
        throw std::invalid_argument("omega must be >= 0, got " +
                                    std::to_string(omega));
    const double fields[] = {M, e, Omega, B0, PhiB, lambda, xi1, xi2};
    for (double v : fields)
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite configuration value");
}

void QuantumNumbers::validate() const {
    if (n < 0)
        throw std::invalid_argument("radial index n must be >= 0, got " +
                                    std::to_string(n));
    if (!std::isfinite(k))
        throw std::invalid_argument("axial wavenumber k must be finite");
}

double effective_angular_momentum(int l, double e, double PhiB) {
    return static_cast<double>(l) - e * PhiB / kTwoPi;
}

RadialCoefficients radial_coefficients(const PhysicalConfig& cfg,
                                       const QuantumNumbers& qn, double E) {
    cfg.validate();
    qn.validate();
    if (!std::isfinite(E))
        throw std::invalid_argument("trial energy must be finite");

    const double lef =
        effective_angular_momentum(qn.l, cfg.e, cfg.PhiB) / cfg.alpha;
    const double drift = E * cfg.Omega + 0.5 * cfg.e * cfg.B0;
    const double rest = qn.k * qn.k + cfg.M * cfg.M;

    RadialCoefficients rc;
    rc.energy = E;
    rc.a3 = cfg.M * cfg.lambda;

    // The two modes are kept as separate expressions so that the Cornell
    // branch with xi1 = 1, xi2 = 0 reproduces the linear branch exactly.
    if (cfg.mode == CouplingMode::linear) {
        const double mw = cfg.M * cfg.omega;
        rc.a1 = lef * lef + cfg.lambda * cfg.lambda;
        rc.a2sq = drift * drift + mw * mw;
        rc.a4 = E * E - lef * (2.0 * cfg.Omega * E + cfg.e * cfg.B0) -
                2.0 * cfg.M * cfg.omega - rest;
    } else {
        const double mw1 = cfg.M * cfg.omega * cfg.xi1;
        const double mw2 = cfg.M * cfg.omega * cfg.xi2;
        rc.a1 = lef * lef + cfg.lambda * cfg.lambda + mw2 * mw2;
        rc.a2sq = drift * drift + mw1 * mw1;
        rc.a4 = E * E - lef * (2.0 * cfg.Omega * E + cfg.e * cfg.B0) -
                2.0 * cfg.M * cfg.omega * cfg.xi1 - 2.0 * mw1 * mw2 - rest;
    }
    return rc;
}

}  // namespace srkg

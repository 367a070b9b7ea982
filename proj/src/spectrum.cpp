#include "srkg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "srkg/numeric.hpp"

namespace srkg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double residual_from(const RadialCoefficients& rc, int n) {
    return rc.a4 - (2.0 * n + 2.0 + 2.0 * std::sqrt(rc.a1)) * std::sqrt(rc.a2sq);
}

EnergyLevel make_level(double E, const QuantumNumbers& qn, double residual,
                       Source source) {
    return EnergyLevel{E,
                       qn.n,
                       qn.l,
                       qn.k,
                       std::abs(residual),
                       E >= 0.0 ? Branch::positive : Branch::negative,
                       source};
}

}  // namespace

void RootSearchSpec::validate() const {
    if (!(E_min < E_max))
        throw std::invalid_argument("search window requires E_min < E_max");
    if (grid_points < 2)
        throw std::invalid_argument("search grid needs at least 2 points");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
}

double quantization_residual(const PhysicalConfig& cfg,
                             const QuantumNumbers& qn, double E) {
    const RadialCoefficients rc = radial_coefficients(cfg, qn, E);
    if (!(rc.a2sq > 0.0))
        throw std::domain_error("no confinement at this trial energy (a2^2 = 0)");
    return residual_from(rc, qn.n);
}

RootSearchSpec default_window(const PhysicalConfig& cfg,
                              const QuantumNumbers& qn) {
    const RadialCoefficients rc = radial_coefficients(cfg, qn, 0.0);
    const double x1 = cfg.mode == CouplingMode::linear ? 1.0 : cfg.xi1;
    const double drive = std::abs(cfg.Omega) +
                         cfg.M * cfg.omega * (1.0 + std::abs(x1)) +
                         std::abs(cfg.e * cfg.B0);
    const double cap =
        10.0 * (cfg.M + std::abs(qn.k) +
                (2.0 * qn.n + 4.0) * (1.0 + std::sqrt(rc.a1)) * drive + 1.0);
    RootSearchSpec spec;
    spec.E_min = -cap;
    spec.E_max = cap;
    return spec;
}

std::vector<EnergyLevel> solve_energy(const PhysicalConfig& cfg,
                                      const QuantumNumbers& qn,
                                      const RootSearchSpec& spec) {
    spec.validate();
    cfg.validate();
    qn.validate();

    // Fully degenerate configuration: a2sq vanishes for every E, the
    // oscillator ansatz never applies.
    if (cfg.Omega == 0.0 && cfg.e * cfg.B0 == 0.0) {
        const double x1 = cfg.mode == CouplingMode::linear ? 1.0 : cfg.xi1;
        if (cfg.M * cfg.omega * x1 == 0.0)
            throw std::domain_error(
                "degenerate configuration: a2^2 = 0 for every energy");
    }

    const auto F = [&](double E) -> std::optional<double> {
        const RadialCoefficients rc = radial_coefficients(cfg, qn, E);
        if (!(rc.a2sq > 0.0)) return std::nullopt;
        return residual_from(rc, qn.n);
    };

    std::vector<EnergyLevel> levels;
    // x_rel_tol = 0: bisect down to adjacent doubles; F is cheap
    for (double root :
         bracketed_roots(F, spec.E_min, spec.E_max, spec.grid_points, 0.0)) {
        const std::optional<double> res = F(root);
        levels.push_back(
            make_level(root, qn, res ? *res : 0.0, Source::analytic));
    }
    std::sort(levels.begin(), levels.end(),
              [](const EnergyLevel& a, const EnergyLevel& b) {
                  return a.E < b.E;
              });
    return levels;
}

FluxShiftPair ab_flux_shift_check(const PhysicalConfig& cfg,
                                  const QuantumNumbers& qn, int tau,
                                  const RootSearchSpec& spec,
                                  bool negative_shift) {
    if (tau < 1) throw std::invalid_argument("tau must be a positive integer");
    if (cfg.e == 0.0)
        throw std::invalid_argument("flux shift requires nonzero charge");

    const int step = negative_shift ? -tau : tau;
    PhysicalConfig shifted_cfg = cfg;
    shifted_cfg.PhiB = cfg.PhiB + kTwoPi * step / cfg.e;
    QuantumNumbers shifted_qn = qn;
    shifted_qn.l = qn.l - step;

    const auto first_positive =
        [](const std::vector<EnergyLevel>& roots) -> EnergyLevel {
        for (const EnergyLevel& level : roots)
            if (level.E > 0.0) return level;
        throw std::domain_error("no positive-branch root in window");
    };

    FluxShiftPair pair{first_positive(solve_energy(shifted_cfg, qn, spec)),
                       first_positive(solve_energy(cfg, shifted_qn, spec)),
                       0.0};
    pair.difference = std::abs(pair.shifted_flux.E - pair.shifted_l.E);
    return pair;
}

}  // namespace srkg

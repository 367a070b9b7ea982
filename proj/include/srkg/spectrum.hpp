#pragma once

#include <vector>

#include "srkg/model.hpp"

namespace srkg {

enum class Branch { positive, negative };
enum class Source { analytic, oracle };

/// A solved energy root of the quantization condition.
struct EnergyLevel {
    double E;
    int n, l;
    double k;
    double residual;  ///< |F(E)| at the root
    Branch branch;
    Source source;
};

/// Bracketing window and scan resolution for the energy root search.
struct RootSearchSpec {
    double E_min = 0.0;
    double E_max = 0.0;
    int grid_points = 20000;
    double tol = 1e-10;  ///< accepted |F| at a reported root

    void validate() const;
};

/// F(E) = a4(E) - (2n + 2 + 2 sqrt(a1)) sqrt(a2sq(E)). Roots of F are the
/// energies where the series termination condition holds at degree n.
/// Throws std::domain_error when a2sq(E) vanishes (no confinement there).
double quantization_residual(const PhysicalConfig& cfg,
                             const QuantumNumbers& qn, double E);

/// Symmetric window generously enclosing the |E|^2-dominance crossover,
/// so every real root of F is bracketed.
RootSearchSpec default_window(const PhysicalConfig& cfg,
                              const QuantumNumbers& qn);

/// All bracketed roots of F in the window, bisected to machine resolution
/// and sorted ascending. Empty when no sign change is found.
std::vector<EnergyLevel> solve_energy(const PhysicalConfig& cfg,
                                      const QuantumNumbers& qn,
                                      const RootSearchSpec& spec);

/// Result of the flux-shift degeneracy check.
struct FluxShiftPair {
    EnergyLevel shifted_flux;  ///< positive root at (l, PhiB +- 2 pi tau / e)
    EnergyLevel shifted_l;     ///< positive root at (l -+ tau, PhiB)
    double difference;         ///< |E_1 - E_2|
};

/// Solves the two configurations related by one flux-shift step: adding
/// tau flux quanta to PhiB while lowering l by tau (or the mirrored
/// negative shift) leaves the effective angular momentum, and hence the
/// spectrum, unchanged. Requires e != 0 and tau >= 1.
FluxShiftPair ab_flux_shift_check(const PhysicalConfig& cfg,
                                  const QuantumNumbers& qn, int tau,
                                  const RootSearchSpec& spec,
                                  bool negative_shift = false);

}  // namespace srkg

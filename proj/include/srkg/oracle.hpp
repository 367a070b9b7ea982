#pragma once

#include <vector>

#include "srkg/model.hpp"
#include "srkg/spectrum.hpp"

namespace srkg {

/// Radial discretization window for the finite-difference solver.
struct GridSpec {
    double r_min = 0.0;  ///< inner cutoff, > 0 (regularizes 1/r^2 and 1/r)
    double r_max = 0.0;  ///< outer Dirichlet wall
    int points = 4000;   ///< interior grid nodes

    void validate() const;
};

/// Grid wide enough that the Gaussian tail sits below double-precision
/// noise (a2 r_max^2 / 2 >= 40 at the smallest a2 in the window), with the
/// inner cutoff at 1e-6 of the box.
GridSpec suggest_grid(const PhysicalConfig& cfg, const QuantumNumbers& qn,
                      const RootSearchSpec& window, int points = 4000);

/// The `count` smallest eigenvalues of the symmetrized radial operator
///
///   -u'' + [(a1 - 1/4)/r^2 + a2^2 r^2 + 2 a3/r] u = mu u,
///
/// discretized with the central second-order stencil and Dirichlet ends.
/// The substitution u = sqrt(r) s makes the matrix symmetric tridiagonal.
std::vector<double> radial_operator_eigenvalues(const RadialCoefficients& rc,
                                                const GridSpec& grid,
                                                int count);

/// Richardson-extrapolated m-th eigenvalue from the exact step-halving
/// pair (points, 2*points + 1).
double extrapolated_eigenvalue(const RadialCoefficients& rc,
                               const GridSpec& grid, int m);

/// Interior sign changes of the m-th discrete eigenvector.
int eigenvector_node_count(const RadialCoefficients& rc, const GridSpec& grid,
                           int m);

/// All bracketed roots of G(E) = mu_m(E) - a4(E) in the window, where
/// mu_m(E) is the m-th eigenvalue of the discrete operator built from the
/// coefficients at trial energy E. The index m = qn.n counts radial nodes
/// of the target state: a terminated series solution of even degree d
/// corresponds to m = d/2 nodes.
std::vector<EnergyLevel> oracle_roots(const PhysicalConfig& cfg,
                                      const QuantumNumbers& qn,
                                      const GridSpec& grid,
                                      const RootSearchSpec& spec);

/// Positive-branch oracle energy plus its reliability diagnostics.
struct OracleSolution {
    EnergyLevel level;
    int nodes;            ///< eigenvector node count at the returned root
    double cutoff_shift;  ///< relative |E - E'| under a 10x larger r_min
    bool cutoff_ok;       ///< cutoff_shift <= 1e-5
};

/// First positive root of G with the inner-cutoff sensitivity check.
/// Throws std::domain_error("no oracle state in window") when G has no
/// positive-branch sign change.
OracleSolution oracle_energy(const PhysicalConfig& cfg,
                             const QuantumNumbers& qn, const GridSpec& grid,
                             const RootSearchSpec& spec);

}  // namespace srkg

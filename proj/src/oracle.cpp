#include "srkg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "srkg/numeric.hpp"
#include "srkg/tridiagonal.hpp"

namespace srkg {

void GridSpec::validate() const {
    if (!(r_min > 0.0 && r_min < r_max))
        throw std::invalid_argument("grid requires 0 < r_min < r_max");
    if (points < 100)
        throw std::invalid_argument(
            "grid too coarse: need at least 100 interior points");
}

namespace {

void require_confining(const RadialCoefficients& rc) {
    if (!(rc.a2sq > 0.0))
        throw std::domain_error(
            "degenerate oscillator coefficient (a2^2 = 0): no confinement");
}

SymmetricTridiagonal discretize(const RadialCoefficients& rc,
                                const GridSpec& grid) {
    const double h = (grid.r_max - grid.r_min) / (grid.points + 1);
    const double inv_h2 = 1.0 / (h * h);
    const double centrifugal = rc.a1 - 0.25;

    std::vector<double> diag(grid.points);
    std::vector<double> off(grid.points - 1, -inv_h2);
    for (int i = 0; i < grid.points; ++i) {
        const double r = grid.r_min + (i + 1) * h;
        diag[i] = 2.0 * inv_h2 + centrifugal / (r * r) + rc.a2sq * r * r +
                  2.0 * rc.a3 / r;
    }
    return SymmetricTridiagonal(std::move(diag), std::move(off));
}

}  // namespace

GridSpec suggest_grid(const PhysicalConfig& cfg, const QuantumNumbers& qn,
                      const RootSearchSpec& window, int points) {
    window.validate();
    // widest state over the window: the smallest a2; a2sq is convex in E
    // with its minimum at E* = -e B0 / (2 Omega)
    const auto a2_at = [&](double E) {
        return std::sqrt(radial_coefficients(cfg, qn, E).a2sq);
    };
    double a2_min = std::min(a2_at(window.E_min), a2_at(window.E_max));
    if (cfg.Omega != 0.0) {
        const double e_star = -cfg.e * cfg.B0 / (2.0 * cfg.Omega);
        if (e_star > window.E_min && e_star < window.E_max)
            a2_min = std::min(a2_min, a2_at(e_star));
    }
    if (!(a2_min > 0.0))
        throw std::domain_error(
            "no oscillator confinement anywhere in the window");

    GridSpec grid;
    grid.r_max = std::sqrt(80.0 / a2_min);
    grid.r_min = 1e-6 * grid.r_max;
    grid.points = points;
    return grid;
}

std::vector<double> radial_operator_eigenvalues(const RadialCoefficients& rc,
                                                const GridSpec& grid,
                                                int count) {
    grid.validate();
    require_confining(rc);
    if (count < 1 || count > grid.points)
        throw std::invalid_argument("eigenvalue count out of range");
    return discretize(rc, grid).eigenvalues(count);
}

double extrapolated_eigenvalue(const RadialCoefficients& rc,
                               const GridSpec& grid, int m) {
    grid.validate();
    require_confining(rc);
    const double mu_h = discretize(rc, grid).eigenvalue(m);
    GridSpec fine = grid;
    fine.points = 2 * grid.points + 1;  // exact step halving
    const double mu_h2 = discretize(rc, fine).eigenvalue(m);
    return mu_h2 + (mu_h2 - mu_h) / 3.0;
}

int eigenvector_node_count(const RadialCoefficients& rc, const GridSpec& grid,
                           int m) {
    grid.validate();
    require_confining(rc);
    const SymmetricTridiagonal op = discretize(rc, grid);
    const std::vector<double> v = op.eigenvector(op.eigenvalue(m));
    return count_sign_changes(v, 1e-10);
}

std::vector<EnergyLevel> oracle_roots(const PhysicalConfig& cfg,
                                      const QuantumNumbers& qn,
                                      const GridSpec& grid,
                                      const RootSearchSpec& spec) {
    grid.validate();
    spec.validate();
    cfg.validate();
    qn.validate();

    const auto gap = [&](double E) -> std::optional<double> {
        const RadialCoefficients rc = radial_coefficients(cfg, qn, E);
        if (!(rc.a2sq > 0.0)) return std::nullopt;
        return discretize(rc, grid).eigenvalue(qn.n) - rc.a4;
    };

    std::vector<EnergyLevel> levels;
    for (double root :
         bracketed_roots(gap, spec.E_min, spec.E_max, spec.grid_points, 1e-11)) {
        const std::optional<double> g = gap(root);
        levels.push_back(EnergyLevel{
            root, qn.n, qn.l, qn.k, g ? std::abs(*g) : 0.0,
            root >= 0.0 ? Branch::positive : Branch::negative, Source::oracle});
    }
    std::sort(levels.begin(), levels.end(),
              [](const EnergyLevel& a, const EnergyLevel& b) {
                  return a.E < b.E;
              });
    return levels;
}

OracleSolution oracle_energy(const PhysicalConfig& cfg,
                             const QuantumNumbers& qn, const GridSpec& grid,
                             const RootSearchSpec& spec) {
    const std::vector<EnergyLevel> roots = oracle_roots(cfg, qn, grid, spec);
    const EnergyLevel* positive = nullptr;
    for (const EnergyLevel& level : roots)
        if (level.E > 0.0) {
            positive = &level;
            break;
        }
    if (!positive) throw std::domain_error("no oracle state in window");

    OracleSolution sol{*positive, 0,
                       std::numeric_limits<double>::quiet_NaN(), false};
    sol.nodes = eigenvector_node_count(
        radial_coefficients(cfg, qn, positive->E), grid, qn.n);

    // Inner-cutoff sensitivity: re-solve near the root with the cutoff at
    // 1e-5 of the box instead of 1e-6.
    GridSpec coarse_cutoff = grid;
    coarse_cutoff.r_min = 10.0 * grid.r_min;
    RootSearchSpec nearby;
    const double half_width = 0.05 * (1.0 + std::abs(positive->E));
    nearby.E_min = positive->E - half_width;
    nearby.E_max = positive->E + half_width;
    nearby.grid_points = 64;
    nearby.tol = spec.tol;

    const std::vector<EnergyLevel> check =
        oracle_roots(cfg, qn, coarse_cutoff, nearby);
    const EnergyLevel* closest = nullptr;
    for (const EnergyLevel& level : check)
        if (!closest ||
            std::abs(level.E - positive->E) < std::abs(closest->E - positive->E))
            closest = &level;
    if (closest) {
        sol.cutoff_shift = std::abs(closest->E - positive->E) /
                           std::max(1.0, std::abs(positive->E));
        sol.cutoff_ok = sol.cutoff_shift <= 1e-5;
    }
    return sol;
}

}  // namespace srkg

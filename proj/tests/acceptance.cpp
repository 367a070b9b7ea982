// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failed criteria. Every tolerance is pinned here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "srkg/config_io.hpp"
#include "srkg/heun.hpp"
#include "srkg/model.hpp"
#include "srkg/numeric.hpp"
#include "srkg/oracle.hpp"
#include "srkg/spectrum.hpp"
#include "srkg/sweep.hpp"
#include "support.hpp"

using namespace srkg;
using namespace testsupport;

namespace {

int checks_run = 0;
int checks_failed = 0;
std::string first_failure;

void expect(bool ok, const std::string& what) {
    ++checks_run;
    if (!ok) {
        ++checks_failed;
        if (first_failure.empty()) first_failure = what;
    }
}

bool flush_criterion(int index, const std::string& name) {
    const bool ok = checks_failed == 0;
    std::printf("[%s] criterion %d: %s (%d checks%s%s)\n",
                ok ? "PASS" : "FAIL", index, name.c_str(), checks_run,
                ok ? "" : "; first failure: ",
                ok ? "" : first_failure.c_str());
    std::fflush(stdout);
    checks_run = 0;
    checks_failed = 0;
    first_failure.clear();
    return ok;
}

double first_positive(const PhysicalConfig& cfg, const QuantumNumbers& qn,
                      const RootSearchSpec& window) {
    for (const EnergyLevel& level : solve_energy(cfg, qn, window))
        if (level.E > 0.0) return level.E;
    return std::numeric_limits<double>::quiet_NaN();
}

double first_positive(const PhysicalConfig& cfg, const QuantumNumbers& qn) {
    return first_positive(cfg, qn, default_window(cfg, qn));
}

PhysicalConfig all_ones_linear() {
    PhysicalConfig cfg;
    cfg.omega = cfg.Omega = cfg.B0 = cfg.PhiB = cfg.lambda = 1.0;
    return cfg;
}

// ---------------------------------------------------------------------------
// 1. Flat-limit closed form: with Omega = B0 = PhiB = lambda = 0 the
//    quantization condition reduces to
//    E^2 = M^2 + k^2 + 2 M omega + (2n + 2 + 2|l_ef|/alpha) M omega.
bool criterion_flat_limit() {
    {
        PhysicalConfig cfg;
        cfg.omega = 1.0;
        const QuantumNumbers qn{0, 0, 1.0};
        RootSearchSpec window;
        window.E_min = 0.0;
        window.E_max = 10.0;
        const auto roots = solve_energy(cfg, qn, window);
        expect(roots.size() == 1, "flat case: expected a single root in [0,10]");
        if (!roots.empty())
            expect(std::abs(roots[0].E - std::sqrt(6.0)) <= 1e-10,
                   "flat case: E != sqrt(6) at 1e-10");
    }
    std::mt19937 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        PhysicalConfig cfg;
        cfg.M = uniform(rng, 0.5, 2.0);
        cfg.omega = uniform(rng, 0.3, 2.0);
        cfg.alpha = uniform(rng, 0.3, 1.0);
        const QuantumNumbers qn{uniform_int(rng, 0, 4),
                                uniform_int(rng, -3, 3),
                                uniform(rng, -2.0, 2.0)};
        const double expected = std::sqrt(
            cfg.M * cfg.M + qn.k * qn.k + 2.0 * cfg.M * cfg.omega +
            (2.0 * qn.n + 2.0 + 2.0 * std::abs(qn.l) / cfg.alpha) * cfg.M *
                cfg.omega);
        const double root = first_positive(cfg, qn);
        expect(std::isfinite(root), "closed form: missing positive root");
        expect(std::abs(root - expected) <= 1e-10,
               "closed form: |E - E*| > 1e-10 at trial " +
                   std::to_string(trial));
    }
    return flush_criterion(1, "flat-limit closed form");
}

// ---------------------------------------------------------------------------
// 2. Oracle equivalence in the exactly solvable sector (lambda = 0).
//    A terminated series solution of even degree 2m has m radial nodes,
//    so the analytic root for quantization index n = 2m is compared with
//    the finite-difference level of node count m, for m in {0, 1, 2}.
bool criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        const PhysicalConfig cfg = random_oracle_config(rng);
        const int m = trial % 3;
        const int l = uniform_int(rng, 1, 2);
        const double k = uniform(rng, -1.0, 1.0);

        const QuantumNumbers analytic_qn{2 * m, l, k};
        const double analytic = first_positive(cfg, analytic_qn);
        expect(std::isfinite(analytic), "oracle: analytic root missing");
        if (!std::isfinite(analytic)) continue;

        const QuantumNumbers oracle_qn{m, l, k};
        RootSearchSpec window = default_window(cfg, analytic_qn);
        window.grid_points = 256;
        const GridSpec grid = suggest_grid(cfg, oracle_qn, window, 4000);
        try {
            const OracleSolution sol =
                oracle_energy(cfg, oracle_qn, grid, window);
            expect(std::abs(sol.level.E - analytic) <= 1e-4 * analytic,
                   "oracle: relative gap > 1e-4 at trial " +
                       std::to_string(trial));
            expect(sol.cutoff_ok, "oracle: cutoff sensitivity check failed");
            expect(sol.nodes == m, "oracle: node count mismatch");
        } catch (const std::exception& ex) {
            expect(false, std::string("oracle: ") + ex.what());
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    expect(seconds <= 60.0, "oracle: runtime above 60 s");
    return flush_criterion(
        2, "oracle equivalence, lambda = 0 (degree 2m vs m nodes), " +
               std::to_string(seconds).substr(0, 4) + " s");
}

// ---------------------------------------------------------------------------
// 3. Cornell reduction: xi1 = 1, xi2 = 0 reproduces the linear spectrum.
bool criterion_cornell_reduction() {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const PhysicalConfig cfg = random_config(rng);
        PhysicalConfig cornell = cfg;
        cornell.mode = CouplingMode::cornell;
        cornell.xi1 = 1.0;
        cornell.xi2 = 0.0;
        const QuantumNumbers qn{uniform_int(rng, 0, 4),
                                uniform_int(rng, -2, 3),
                                uniform(rng, -1.5, 1.5)};
        const RootSearchSpec window = default_window(cfg, qn);
        const auto a = solve_energy(cfg, qn, window);
        const auto b = solve_energy(cornell, qn, window);
        expect(a.size() == b.size(), "cornell: root count differs");
        expect(!a.empty(), "cornell: no roots bracketed");
        for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            expect(std::abs(a[i].E - b[i].E) <= 1e-12,
                   "cornell: |dE| > 1e-12");
    }
    return flush_criterion(3, "Cornell reduction to the linear spectrum");
}

// ---------------------------------------------------------------------------
// 4. Flux periodicity: E(PhiB + 2 pi tau / e) at l equals E(PhiB) at l - tau.
bool criterion_flux_periodicity() {
    std::mt19937 rng(404);
    for (int tau : {1, 2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const PhysicalConfig cfg = random_config(rng, trial % 4 == 0);
            const QuantumNumbers qn{uniform_int(rng, 0, 3),
                                    uniform_int(rng, 0, 2),
                                    uniform(rng, -1.0, 1.0)};
            const RootSearchSpec window = default_window(cfg, qn);
            try {
                const FluxShiftPair pair =
                    ab_flux_shift_check(cfg, qn, tau, window, trial % 2 == 1);
                expect(pair.difference <= 2e-10,
                       "flux shift: |dE| > 2e-10 at tau " +
                           std::to_string(tau));
            } catch (const std::exception& ex) {
                expect(false, std::string("flux shift: ") + ex.what());
            }
        }
    }
    return flush_criterion(4, "Aharonov-Bohm flux periodicity");
}

// ---------------------------------------------------------------------------
// 5. Trend regression on the reference parameter sets.
namespace trends {

SweepTable alpha_sweep(const PhysicalConfig& base) {
    SweepSpec spec;
    spec.parameter = "alpha";
    spec.start = 0.3;
    spec.stop = 1.0;
    spec.steps = 15;
    spec.family_param = "n";
    spec.family_values = {1.0, 2.0, 3.0, 4.0, 5.0};
    return run_sweep(base, {0, 1, 1.0}, spec);
}

// columns of one family curve, in sweep order
std::vector<double> curve(const SweepTable& table, double family_value) {
    std::vector<double> out;
    for (const SweepRow& row : table.rows)
        if (row.family_value == family_value && row.E) out.push_back(*row.E);
    return out;
}

bool strictly(const std::vector<double>& v, bool increasing, size_t expected) {
    if (v.size() != expected) return false;
    for (size_t i = 1; i < v.size(); ++i) {
        if (increasing && !(v[i] > v[i - 1])) return false;
        if (!increasing && !(v[i] < v[i - 1])) return false;
    }
    return true;
}

}  // namespace trends

bool criterion_parameter_trends() {
    using namespace trends;

    // decreasing in alpha, five n curves, all other parameters 1
    const SweepTable linear_alpha = alpha_sweep(all_ones_linear());
    for (double n : {1.0, 2.0, 3.0, 4.0, 5.0})
        expect(strictly(curve(linear_alpha, n), false, 15),
               "alpha trend not strictly decreasing at n " +
                   format_double(n));

    // increasing in omega at alpha = 0.5
    {
        PhysicalConfig base = all_ones_linear();
        base.alpha = 0.5;
        SweepSpec spec;
        spec.parameter = "omega";
        spec.start = 0.5;
        spec.stop = 2.0;
        spec.steps = 12;
        spec.family_param = "n";
        spec.family_values = {1.0, 2.0, 3.0, 4.0, 5.0};
        const SweepTable table = run_sweep(base, {0, 1, 1.0}, spec);
        for (double n : {1.0, 2.0, 3.0, 4.0, 5.0})
            expect(strictly(curve(table, n), true, 12),
                   "omega trend not strictly increasing at n " +
                       format_double(n));
    }

    // increasing in Omega and in lambda, alpha-family curves at n = 1
    for (const char* parameter : {"Omega", "lambda"}) {
        PhysicalConfig base = all_ones_linear();
        SweepSpec spec;
        spec.parameter = parameter;
        spec.start = 0.2;
        spec.stop = 2.0;
        spec.steps = 12;
        spec.family_param = "alpha";
        spec.family_values = {0.3, 0.4, 0.5, 0.6, 0.7};
        const SweepTable table = run_sweep(base, {1, 1, 1.0}, spec);
        for (double alpha : spec.family_values)
            expect(strictly(curve(table, alpha), true, 12),
                   std::string(parameter) + " trend not strictly increasing");
    }

    // increasing in xi2 with curves ordered upward in xi1, alpha = 0.5
    {
        PhysicalConfig base = all_ones_linear();
        base.alpha = 0.5;
        base.mode = CouplingMode::cornell;
        base.xi1 = 1.0;
        SweepSpec spec;
        spec.parameter = "xi2";
        spec.start = 0.2;
        spec.stop = 2.0;
        spec.steps = 10;
        spec.family_param = "xi1";
        spec.family_values = {0.5, 1.0, 1.5, 2.0, 2.5};
        const SweepTable table = run_sweep(base, {1, 1, 1.0}, spec);
        std::vector<std::vector<double>> curves;
        for (double xi1 : spec.family_values) {
            curves.push_back(curve(table, xi1));
            expect(strictly(curves.back(), true, 10),
                   "xi2 trend not strictly increasing at xi1 " +
                       format_double(xi1));
        }
        for (size_t c = 1; c < curves.size(); ++c)
            for (size_t i = 0;
                 i < std::min(curves[c].size(), curves[c - 1].size()); ++i)
                expect(curves[c][i] > curves[c - 1][i],
                       "xi2 curves not ordered upward in xi1");
    }

    // Cornell alpha sweep at xi1 = 2, xi2 = 1 sits above the linear one
    {
        PhysicalConfig cornell = all_ones_linear();
        cornell.mode = CouplingMode::cornell;
        cornell.xi1 = 2.0;
        cornell.xi2 = 1.0;
        const SweepTable cornell_alpha = alpha_sweep(cornell);
        for (double n : {1.0, 2.0, 3.0, 4.0, 5.0}) {
            const auto high = curve(cornell_alpha, n);
            const auto low = curve(linear_alpha, n);
            expect(strictly(high, false, 15),
                   "cornell alpha trend not strictly decreasing");
            for (size_t i = 0; i < std::min(high.size(), low.size()); ++i)
                expect(high[i] > low[i],
                       "cornell alpha sweep not above the linear one");
        }
    }
    return flush_criterion(5, "parameter trend regression");
}

// ---------------------------------------------------------------------------
// 6. Series consistency at solved energies (lambda = 0, degree 2m):
//    second termination residual, vanishing tail, and node counts against
//    the oracle eigenvector.
bool criterion_series_consistency() {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 10; ++trial) {
        const PhysicalConfig cfg = random_oracle_config(rng);
        const int m = trial % 3;
        const int n = 2 * m;
        const int l = uniform_int(rng, 1, 2);
        const double k = uniform(rng, -1.0, 1.0);
        const QuantumNumbers qn{n, l, k};

        const double E = first_positive(cfg, qn);
        expect(std::isfinite(E), "series: missing analytic root");
        if (!std::isfinite(E)) continue;

        const RadialCoefficients rc = radial_coefficients(cfg, qn, E);
        const auto [c_next, second] = termination_residuals(rc, n);
        expect(std::abs(second) <= 1e-8,
               "series: second termination residual > 1e-8");
        expect(std::abs(c_next) <= 1e-12,
               "series: C_{n+1} does not vanish at lambda = 0");

        const SeriesSolution series =
            series_coefficients(rc, kDefaultSeriesLength);
        double tail = 0.0;
        for (size_t j = static_cast<size_t>(n) + 1; j < series.coeffs.size();
             ++j)
            tail = std::max(tail, std::abs(series.coeffs[j]));
        expect(tail <= 1e-12, "series: coefficients beyond n above 1e-12");

        const double r_box = std::sqrt(80.0 / std::sqrt(rc.a2sq));
        const auto table =
            wavefunction_table(rc, kDefaultSeriesLength, r_box, 4000);
        std::vector<double> values;
        values.reserve(table.size());
        for (const auto& [r, s] : table) values.push_back(s);
        const int analytic_nodes = count_sign_changes(values);
        expect(analytic_nodes == m,
               "series: wavefunction node count != m at trial " +
                   std::to_string(trial));

        GridSpec grid;
        grid.r_max = r_box;
        grid.r_min = 1e-6 * r_box;
        grid.points = 4000;
        const int oracle_nodes = eigenvector_node_count(rc, grid, m);
        expect(oracle_nodes == analytic_nodes,
               "series: oracle eigenvector node count differs");
    }
    return flush_criterion(
        6, "series termination and node counts at solved energies");
}

// ---------------------------------------------------------------------------
// 7. Algebraic identities of the regrouped coefficients, 1000 random draws.
bool criterion_algebraic_identities() {
    std::mt19937 rng(707);
    for (int trial = 0; trial < 1000; ++trial) {
        const PhysicalConfig cfg = random_config(rng, trial % 2 == 1);
        const QuantumNumbers qn{uniform_int(rng, 0, 5),
                                uniform_int(rng, -3, 3),
                                uniform(rng, -2.0, 2.0)};
        const double E = uniform(rng, -8.0, 8.0);
        const RadialCoefficients rc = radial_coefficients(cfg, qn, E);
        const LiteralCoefficients lit = literal_coefficients(cfg, qn, E);
        expect(std::abs(rc.a1 - lit.a1) <=
                   1e-13 * std::max(1.0, a1_term_scale(cfg, qn)),
               "identity: a1 regrouping off at trial " + std::to_string(trial));
        expect(std::abs(rc.a2sq - lit.a2sq) <=
                   1e-13 * std::max(1.0, std::abs(lit.a2sq)),
               "identity: a2sq regrouping off at trial " +
                   std::to_string(trial));
    }
    return flush_criterion(7, "coefficient regrouping identities");
}

// ---------------------------------------------------------------------------
// 8. Determinism: repeated sweeps produce byte-identical CSV.
bool criterion_determinism() {
    SweepSpec spec;
    spec.parameter = "alpha";
    spec.start = 0.3;
    spec.stop = 1.0;
    spec.steps = 5;
    spec.family_param = "n";
    spec.family_values = {1.0, 2.0};
    const PhysicalConfig base = all_ones_linear();
    const std::string a = run_sweep(base, {0, 1, 1.0}, spec).to_csv();
    const std::string b = run_sweep(base, {0, 1, 1.0}, spec).to_csv();
    expect(!a.empty(), "determinism: empty CSV");
    expect(a == b, "determinism: CSV bytes differ between runs");
    return flush_criterion(8, "byte-identical sweep CSV");
}

}  // namespace

int main() {
    int failed = 0;
    failed += criterion_flat_limit() ? 0 : 1;
    failed += criterion_oracle_equivalence() ? 0 : 1;
    failed += criterion_cornell_reduction() ? 0 : 1;
    failed += criterion_flux_periodicity() ? 0 : 1;
    failed += criterion_parameter_trends() ? 0 : 1;
    failed += criterion_series_consistency() ? 0 : 1;
    failed += criterion_algebraic_identities() ? 0 : 1;
    failed += criterion_determinism() ? 0 : 1;
    if (failed == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failed);
    return failed;
}

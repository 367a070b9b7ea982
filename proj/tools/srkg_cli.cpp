// Command-line front end: single solves, parameter sweeps, oracle
// comparisons, wavefunction tables, flux-shift checks, CSV verification.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srkg/config_io.hpp"
#include "srkg/heun.hpp"
#include "srkg/model.hpp"
#include "srkg/numeric.hpp"
#include "srkg/oracle.hpp"
#include "srkg/spectrum.hpp"
#include "srkg/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct GlobalOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    int n = 0;
    int l = 0;
    double k = 0.0;
    double tol = 1e-10;
    std::string window;  // "EMIN,EMAX"
    int scan = 20000;
    std::string out_path;
    bool include_negative = false;
    bool print_config = false;
};

srkg::PhysicalConfig build_config(const GlobalOptions& opt) {
    srkg::PhysicalConfig cfg;
    if (!opt.config_path.empty()) cfg = srkg::load_config(opt.config_path);
    for (const std::string& assignment : opt.overrides)
        srkg::apply_override(cfg, assignment);
    cfg.validate();
    return cfg;
}

srkg::RootSearchSpec build_window(const GlobalOptions& opt,
                                  const srkg::PhysicalConfig& cfg,
                                  const srkg::QuantumNumbers& qn) {
    srkg::RootSearchSpec spec;
    if (opt.window.empty()) {
        spec = srkg::default_window(cfg, qn);
    } else {
        const auto comma = opt.window.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--window expects EMIN,EMAX");
        spec.E_min = srkg::parse_double(opt.window.substr(0, comma));
        spec.E_max = srkg::parse_double(opt.window.substr(comma + 1));
    }
    spec.grid_points = opt.scan;
    spec.tol = opt.tol;
    spec.validate();
    return spec;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

int run_spectrum(const GlobalOptions& opt) {
    const srkg::PhysicalConfig cfg = build_config(opt);
    const srkg::QuantumNumbers qn{opt.n, opt.l, opt.k};
    const srkg::RootSearchSpec window = build_window(opt, cfg, qn);

    const auto roots = srkg::solve_energy(cfg, qn, window);
    std::vector<srkg::EnergyLevel> selected;
    for (const auto& level : roots)
        if (opt.include_negative || level.E > 0.0) selected.push_back(level);
    if (selected.empty()) {
        std::cerr << "no energy root in window [" << window.E_min << ", "
                  << window.E_max << "]\n";
        return kExitNumerical;
    }

    Output out(opt.out_path);
    out.stream() << "n,l,k,branch,E,residual,c_next\n";
    for (const auto& level : selected) {
        const auto rc = srkg::radial_coefficients(cfg, qn, level.E);
        const auto [c_next, second] = srkg::termination_residuals(rc, qn.n);
        (void)second;
        out.stream() << level.n << ',' << level.l << ','
                     << srkg::format_double(level.k) << ','
                     << (level.branch == srkg::Branch::positive ? "positive"
                                                                : "negative")
                     << ',' << srkg::format_double(level.E) << ','
                     << srkg::format_double(level.residual) << ','
                     << srkg::format_double(c_next) << '\n';
    }
    return kExitOk;
}

struct SweepCliOptions {
    std::string param;
    double from = 0.0, to = 0.0;
    int steps = 2;
    std::string family;
    bool with_oracle = false;
    int oracle_points = 4000;
    int oracle_scan = 256;
};

int run_sweep_cmd(const GlobalOptions& opt, const SweepCliOptions& sw) {
    const srkg::PhysicalConfig cfg = build_config(opt);
    const srkg::QuantumNumbers qn{opt.n, opt.l, opt.k};

    srkg::SweepSpec spec;
    spec.parameter = sw.param;
    spec.start = sw.from;
    spec.stop = sw.to;
    spec.steps = sw.steps;
    const auto eq = sw.family.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("--family expects key=v1,v2,...");
    spec.family_param = sw.family.substr(0, eq);
    for (const std::string& item : split(sw.family.substr(eq + 1), ','))
        spec.family_values.push_back(srkg::parse_double(item));

    srkg::SweepOptions opts;
    opts.with_oracle = sw.with_oracle;
    opts.oracle_points = sw.oracle_points;
    opts.oracle_scan = sw.oracle_scan;
    if (!opt.window.empty())
        opts.window = build_window(opt, cfg, qn);

    const srkg::SweepTable table = srkg::run_sweep(cfg, qn, spec, opts);
    Output out(opt.out_path);
    out.stream() << table.to_csv();
    return kExitOk;
}

struct OracleCliOptions {
    int nodes = -1;  // default: n / 2
    int oracle_points = 4000;
    int oracle_scan = 256;
};

int run_oracle(const GlobalOptions& opt, const OracleCliOptions& oc) {
    const srkg::PhysicalConfig cfg = build_config(opt);
    const srkg::QuantumNumbers qn{opt.n, opt.l, opt.k};
    const srkg::RootSearchSpec window = build_window(opt, cfg, qn);

    const auto roots = srkg::solve_energy(cfg, qn, window);
    const srkg::EnergyLevel* analytic = nullptr;
    for (const auto& level : roots)
        if (level.E > 0.0) {
            analytic = &level;
            break;
        }
    if (!analytic) {
        std::cerr << "no positive analytic root in window\n";
        return kExitNumerical;
    }

    // A terminated series solution of even degree n has n/2 radial nodes,
    // so that is the level the finite-difference operator is asked for.
    srkg::QuantumNumbers oracle_qn = qn;
    oracle_qn.n = oc.nodes >= 0 ? oc.nodes : qn.n / 2;

    srkg::RootSearchSpec oracle_window = window;
    oracle_window.grid_points = oc.oracle_scan;
    const srkg::GridSpec grid =
        srkg::suggest_grid(cfg, oracle_qn, oracle_window, oc.oracle_points);
    const srkg::OracleSolution sol =
        srkg::oracle_energy(cfg, oracle_qn, grid, oracle_window);

    Output out(opt.out_path);
    out.stream() << "n,l,k,nodes,E_analytic,E_oracle,gap,analytic_residual,"
                    "cutoff_shift,cutoff_ok\n";
    out.stream() << qn.n << ',' << qn.l << ',' << srkg::format_double(qn.k)
                 << ',' << sol.nodes << ','
                 << srkg::format_double(analytic->E) << ','
                 << srkg::format_double(sol.level.E) << ','
                 << srkg::format_double(std::abs(sol.level.E - analytic->E))
                 << ',' << srkg::format_double(analytic->residual) << ','
                 << srkg::format_double(sol.cutoff_shift) << ','
                 << (sol.cutoff_ok ? "yes" : "no") << '\n';
    return kExitOk;
}

struct WavefunctionCliOptions {
    double r_max = 0.0;  // 0: from suggest_grid
    int points = 500;
    int series_terms = srkg::kDefaultSeriesLength;
    bool normalize = false;
    double energy = std::numeric_limits<double>::quiet_NaN();
};

int run_wavefunction(const GlobalOptions& opt,
                     const WavefunctionCliOptions& wf) {
    const srkg::PhysicalConfig cfg = build_config(opt);
    const srkg::QuantumNumbers qn{opt.n, opt.l, opt.k};
    const srkg::RootSearchSpec window = build_window(opt, cfg, qn);

    double energy = wf.energy;
    if (std::isnan(energy)) {
        const auto roots = srkg::solve_energy(cfg, qn, window);
        const srkg::EnergyLevel* chosen = nullptr;
        for (const auto& level : roots)
            if (opt.include_negative || level.E > 0.0) {
                chosen = &level;
                break;
            }
        if (!chosen) {
            std::cerr << "no energy root in window; pass --energy to "
                         "tabulate at an explicit energy\n";
            return kExitNumerical;
        }
        energy = chosen->E;
    }

    const auto rc = srkg::radial_coefficients(cfg, qn, energy);
    double r_max = wf.r_max;
    if (!(r_max > 0.0)) r_max = srkg::suggest_grid(cfg, qn, window).r_max;

    const auto table = srkg::wavefunction_table(rc, wf.series_terms, r_max,
                                                wf.points, wf.normalize);

    // warn when the series did not settle at the largest radius
    const auto series = srkg::series_coefficients(rc, wf.series_terms);
    if (!srkg::series_value(series, std::sqrt(series.a2) * r_max).tail_ok)
        std::cerr << "warning: series tail not converged at r_max; "
                     "increase --series-terms or reduce --rmax\n";

    Output out(opt.out_path);
    out.stream() << "r,s\n";
    for (const auto& [r, s] : table)
        out.stream() << srkg::format_double(r) << ','
                     << srkg::format_double(s) << '\n';
    return kExitOk;
}

int run_check_ab(const GlobalOptions& opt, int tau, bool negative) {
    const srkg::PhysicalConfig cfg = build_config(opt);
    const srkg::QuantumNumbers qn{opt.n, opt.l, opt.k};
    const srkg::RootSearchSpec window = build_window(opt, cfg, qn);

    const srkg::FluxShiftPair pair =
        srkg::ab_flux_shift_check(cfg, qn, tau, window, negative);
    Output out(opt.out_path);
    out.stream() << "tau,direction,l,PhiB,E_flux_shifted,E_l_shifted,abs_diff\n";
    out.stream() << tau << ',' << (negative ? "negative" : "positive") << ','
                 << qn.l << ',' << srkg::format_double(cfg.PhiB) << ','
                 << srkg::format_double(pair.shifted_flux.E) << ','
                 << srkg::format_double(pair.shifted_l.E) << ','
                 << srkg::format_double(pair.difference) << '\n';
    return kExitOk;
}

int run_verify(const GlobalOptions& opt, const std::string& csv_path) {
    const srkg::PhysicalConfig base_cfg = build_config(opt);

    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + csv_path);
    std::string line;
    if (!std::getline(in, line) ||
        line != std::string(srkg::SweepTable::kHeader)) {
        std::cerr << "unrecognized CSV header\n";
        return kExitUsage;
    }

    int checked = 0, failed = 0, lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != 11)
            throw std::runtime_error(csv_path + ":" + std::to_string(lineno) +
                                     ": expected 11 cells");
        if (cells[7].empty()) continue;  // row without a root

        srkg::PhysicalConfig cfg = base_cfg;
        srkg::QuantumNumbers qn;
        qn.n = static_cast<int>(srkg::parse_double(cells[4]));
        qn.l = static_cast<int>(srkg::parse_double(cells[5]));
        qn.k = srkg::parse_double(cells[6]);
        srkg::set_parameter(cfg, qn, cells[2], srkg::parse_double(cells[3]));
        srkg::set_parameter(cfg, qn, cells[0], srkg::parse_double(cells[1]));

        const double E = srkg::parse_double(cells[7]);
        const double residual =
            std::abs(srkg::quantization_residual(cfg, qn, E));
        ++checked;
        if (residual > opt.tol) {
            ++failed;
            std::cerr << csv_path << ":" << lineno
                      << ": residual " << residual << " exceeds tolerance\n";
        }
    }
    std::cout << "verified " << checked << " rows, " << failed
              << " failures\n";
    return failed == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Bound-state spectra of the (generalized) Klein-Gordon oscillator in "
        "the Som-Raychaudhuri space-time with magnetic field, Aharonov-Bohm "
        "flux and Coulomb-type potential"};
    app.require_subcommand(0, 1);

    GlobalOptions opt;
    app.add_option("--config", opt.config_path,
                   "configuration file (key = value lines)");
    app.add_option("--set", opt.overrides,
                   "override a configuration key, e.g. --set omega=1.5");
    app.add_option("--n", opt.n, "radial quantum number (default 0)");
    app.add_option("--l", opt.l, "angular quantum number (default 0)");
    app.add_option("--k", opt.k, "axial wavenumber (default 0)");
    app.add_option("--tol", opt.tol, "accepted residual at a root");
    app.add_option("--window", opt.window, "energy search window EMIN,EMAX");
    app.add_option("--scan", opt.scan, "energy scan resolution");
    app.add_option("--out", opt.out_path, "output file (default stdout)");
    app.add_flag("--include-negative", opt.include_negative,
                 "also report negative-branch roots");
    app.add_flag("--print-config", opt.print_config,
                 "echo the effective configuration and exit");

    auto* sc_spectrum = app.add_subcommand(
        "spectrum", "solve the quantization condition at one parameter point");

    SweepCliOptions sw;
    auto* sc_sweep = app.add_subcommand(
        "sweep", "sweep a parameter and emit the positive-branch spectrum");
    sc_sweep->add_option("--param", sw.param, "swept parameter name")
        ->required();
    sc_sweep->add_option("--from", sw.from, "sweep start")->required();
    sc_sweep->add_option("--to", sw.to, "sweep stop")->required();
    sc_sweep->add_option("--steps", sw.steps, "number of grid points (>= 2)")
        ->required();
    sc_sweep
        ->add_option("--family", sw.family,
                     "per-curve parameter with values, e.g. n=1,2,3")
        ->required();
    sc_sweep->add_flag("--with-oracle", sw.with_oracle,
                       "also run the finite-difference oracle per row");
    sc_sweep->add_option("--oracle-points", sw.oracle_points,
                         "oracle radial grid nodes");
    sc_sweep->add_option("--oracle-scan", sw.oracle_scan,
                         "oracle energy-scan resolution");

    OracleCliOptions oc;
    auto* sc_oracle = app.add_subcommand(
        "oracle", "compare the analytic energy with the independent "
                  "finite-difference eigenvalue solver");
    sc_oracle->add_option(
        "--nodes", oc.nodes,
        "radial node count the oracle targets (default n/2)");
    sc_oracle->add_option("--oracle-points", oc.oracle_points,
                          "oracle radial grid nodes");
    sc_oracle->add_option("--oracle-scan", oc.oracle_scan,
                          "oracle energy-scan resolution");

    WavefunctionCliOptions wf;
    auto* sc_wave = app.add_subcommand(
        "wavefunction", "tabulate the radial wavefunction s(r) as CSV");
    sc_wave->add_option("--rmax", wf.r_max, "tabulation radius (default auto)");
    sc_wave->add_option("--points", wf.points, "number of radii");
    sc_wave->add_option("--series-terms", wf.series_terms,
                        "series length for the evaluation");
    sc_wave->add_flag("--normalize", wf.normalize,
                      "unit L2 norm in the r dr measure over the window");
    sc_wave->add_option("--energy", wf.energy,
                        "tabulate at this energy instead of solving");

    int tau = 1;
    bool negative_shift = false;
    auto* sc_ab = app.add_subcommand(
        "check-ab", "verify the flux-shift degeneracy of the spectrum");
    sc_ab->add_option("--tau", tau, "number of flux quanta to shift by");
    sc_ab->add_flag("--negative", negative_shift,
                    "shift the flux down and l up instead");

    std::string verify_csv;
    auto* sc_verify = app.add_subcommand(
        "verify", "re-check the E/residual rows of a sweep CSV");
    sc_verify->add_option("csv", verify_csv, "sweep CSV file")->required();

    // shared options may appear after the subcommand name
    for (CLI::App* sub :
         {sc_spectrum, sc_sweep, sc_oracle, sc_wave, sc_ab, sc_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.print_config) {
            std::cout << srkg::render_config(build_config(opt));
            return kExitOk;
        }
        if (sc_spectrum->parsed()) return run_spectrum(opt);
        if (sc_sweep->parsed()) return run_sweep_cmd(opt, sw);
        if (sc_oracle->parsed()) return run_oracle(opt, oc);
        if (sc_wave->parsed()) return run_wavefunction(opt, wf);
        if (sc_ab->parsed()) return run_check_ab(opt, tau, negative_shift);
        if (sc_verify->parsed()) return run_verify(opt, verify_csv);
        std::cerr << app.help();
        return kExitUsage;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
}

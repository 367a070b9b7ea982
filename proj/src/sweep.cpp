#include "srkg/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "srkg/config_io.hpp"
#include "srkg/oracle.hpp"

namespace srkg {

bool is_sweepable_parameter(std::string_view name) {
    return name == "alpha" || name == "omega" || name == "Omega" ||
           name == "lambda" || name == "xi1" || name == "xi2" ||
           name == "B0" || name == "PhiB";
}

void set_parameter(PhysicalConfig& cfg, QuantumNumbers& qn,
                   std::string_view key, double value) {
    const auto integral = [&](const char* what) {
        if (value != std::floor(value))
            throw std::invalid_argument(std::string(what) +
                                        " must be an integer, got " +
                                        format_double(value));
        return static_cast<int>(value);
    };
    if (key == "n")
        qn.n = integral("quantum number n");
    else if (key == "l")
        qn.l = integral("quantum number l");
    else if (key == "k")
        qn.k = value;
    else
        apply_override(cfg, std::string(key) + "=" + format_double(value));
}

void SweepSpec::validate() const {
    if (!is_sweepable_parameter(parameter))
        throw std::invalid_argument("cannot sweep parameter '" + parameter +
                                    "'");
    if (!(start < stop))
        throw std::invalid_argument("sweep requires start < stop");
    if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
    if (family_param.empty() || family_values.empty())
        throw std::invalid_argument("sweep needs a family parameter with values");
    if (family_param == parameter)
        throw std::invalid_argument(
            "swept and family parameters must be distinct");
}

namespace {

std::string csv_cell(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

}  // namespace

std::string SweepTable::to_csv() const {
    std::string out = kHeader;
    out += '\n';
    for (const SweepRow& row : rows) {
        out += swept_param;
        out += ',';
        out += format_double(row.swept_value);
        out += ',';
        out += family_param;
        out += ',';
        out += format_double(row.family_value);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.l);
        out += ',';
        out += format_double(row.k);
        out += ',';
        out += csv_cell(row.E);
        out += ',';
        out += csv_cell(row.residual);
        out += ',';
        out += csv_cell(row.oracle_E);
        out += ',';
        out += csv_cell(row.oracle_gap);
        out += '\n';
    }
    return out;
}

SweepTable run_sweep(const PhysicalConfig& cfg, const QuantumNumbers& qn,
                     const SweepSpec& sweep, const SweepOptions& opts) {
    sweep.validate();
    cfg.validate();
    qn.validate();

    SweepTable table;
    table.swept_param = sweep.parameter;
    table.family_param = sweep.family_param;
    table.rows.reserve(sweep.family_values.size() *
                       static_cast<size_t>(sweep.steps));

    const double step =
        (sweep.stop - sweep.start) / static_cast<double>(sweep.steps - 1);

    for (double family_value : sweep.family_values) {
        for (int i = 0; i < sweep.steps; ++i) {
            const double value =
                (i + 1 == sweep.steps) ? sweep.stop : sweep.start + i * step;
            SweepRow row{value,         family_value, qn.n,
                         qn.l,          qn.k,         std::nullopt,
                         std::nullopt,  std::nullopt, std::nullopt};
            try {
                PhysicalConfig point_cfg = cfg;
                QuantumNumbers point_qn = qn;
                set_parameter(point_cfg, point_qn, sweep.family_param,
                              family_value);
                set_parameter(point_cfg, point_qn, sweep.parameter, value);
                row.n = point_qn.n;
                row.l = point_qn.l;
                row.k = point_qn.k;

                const RootSearchSpec window =
                    opts.window ? *opts.window
                                : default_window(point_cfg, point_qn);
                for (const EnergyLevel& level :
                     solve_energy(point_cfg, point_qn, window)) {
                    if (level.E > 0.0) {
                        row.E = level.E;
                        row.residual = level.residual;
                        break;
                    }
                }
                if (opts.with_oracle && row.E) {
                    // The finite-difference comparison targets the state
                    // with floor(n/2) radial nodes, the physical
                    // counterpart of the degree-n series solution.
                    QuantumNumbers oracle_qn = point_qn;
                    oracle_qn.n = point_qn.n / 2;
                    RootSearchSpec oracle_window =
                        opts.window ? *opts.window
                                    : default_window(point_cfg, point_qn);
                    oracle_window.grid_points = opts.oracle_scan;
                    const GridSpec grid = suggest_grid(
                        point_cfg, oracle_qn, oracle_window, opts.oracle_points);
                    const OracleSolution oracle = oracle_energy(
                        point_cfg, oracle_qn, grid, oracle_window);
                    row.oracle_E = oracle.level.E;
                    row.oracle_gap = std::abs(oracle.level.E - *row.E);
                }
            } catch (const std::exception&) {
                // fields computed so far stand; sweeps never abort on a
                // single point
            }
            table.rows.push_back(row);
        }
    }
    return table;
}

}  // namespace srkg

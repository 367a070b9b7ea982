#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srkg/model.hpp"
#include "srkg/spectrum.hpp"

namespace srkg {

/// True for the parameter names a sweep may vary:
/// alpha, omega, Omega, lambda, xi1, xi2, B0, PhiB.
bool is_sweepable_parameter(std::string_view name);

/// Assign a model parameter or quantum number (n, l, k) by key. Quantum
/// numbers require integral values where applicable.
void set_parameter(PhysicalConfig& cfg, QuantumNumbers& qn,
                   std::string_view key, double value);

/// One-parameter sweep with a family of curves (one curve per value of a
/// second parameter, e.g. n or xi1).
struct SweepSpec {
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;
    std::string family_param;
    std::vector<double> family_values;

    void validate() const;
};

struct SweepRow {
    double swept_value;
    double family_value;
    int n, l;
    double k;
    std::optional<double> E;         ///< empty when no positive root found
    std::optional<double> residual;
    std::optional<double> oracle_E;
    std::optional<double> oracle_gap;
};

struct SweepOptions {
    bool with_oracle = false;
    int oracle_points = 4000;  ///< oracle radial grid nodes
    int oracle_scan = 256;     ///< oracle energy-scan resolution
    /// Explicit search window; otherwise the per-point default window.
    std::optional<RootSearchSpec> window;
};

struct SweepTable {
    static constexpr const char* kHeader =
        "swept_param,swept_value,family_param,family_value,n,l,k,E,residual,"
        "oracle_E,oracle_gap";

    std::string swept_param;
    std::string family_param;
    std::vector<SweepRow> rows;

    /// Deterministic CSV with shortest round-trip numbers; absent values
    /// are empty cells.
    std::string to_csv() const;
};

/// Solves the positive-branch energy at every grid point of every family
/// curve. Rows where no root exists are emitted with an empty E field;
/// per-point failures never abort the sweep. Row order: family-major,
/// swept value minor.
SweepTable run_sweep(const PhysicalConfig& cfg, const QuantumNumbers& qn,
                     const SweepSpec& sweep, const SweepOptions& opts = {});

}  // namespace srkg

#include "srkg/heun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srkg {

namespace {

void require_confining(const RadialCoefficients& rc) {
    if (!(rc.a2sq > 0.0))
        throw std::domain_error(
            "degenerate oscillator coefficient (a2^2 = 0): no confinement");
}

}  // namespace

SeriesSolution series_coefficients(const RadialCoefficients& rc, int N) {
    require_confining(rc);
    if (N < 2) throw std::invalid_argument("series length N must be >= 2");

    const double nu = std::sqrt(rc.a1);
    const double a2 = std::sqrt(rc.a2sq);
    const double feed = 2.0 * rc.a3 / std::sqrt(a2);
    const double lam = rc.a4 / a2 - 2.0 - 2.0 * nu;

    SeriesSolution s;
    s.a1 = rc.a1;
    s.a2 = a2;
    s.a3 = rc.a3;
    s.a4 = rc.a4;
    s.coeffs.assign(static_cast<size_t>(N) + 1, 0.0);
    s.coeffs[0] = 1.0;
    s.coeffs[1] = feed / (2.0 * nu + 1.0);
    for (int n = 0; n + 2 <= N; ++n) {
        const double denom = (n + 2.0) * (n + 2.0 + 2.0 * nu);
        s.coeffs[n + 2] =
            (feed * s.coeffs[n + 1] + (2.0 * n - lam) * s.coeffs[n]) / denom;
    }

    // Polynomial truncation: lam = 2n for integer n with C_{n+1} vanishing
    // zeroes every later coefficient through the recurrence.
    const double lam_tol = 1e-9 * std::max(1.0, std::abs(lam));
    double scale = 0.0;
    for (int n = 0; n + 1 <= N; ++n) {
        scale = std::max(scale, std::abs(s.coeffs[n]));
        if (std::abs(lam - 2.0 * n) <= lam_tol &&
            std::abs(s.coeffs[n + 1]) <= 1e-12 * scale) {
            s.truncation_index = n;
            double tail = 0.0;
            for (int j = n + 1; j <= N; ++j)
                tail = std::max(tail, std::abs(s.coeffs[j]));
            s.tail_norm = tail;
            break;
        }
    }
    return s;
}

std::pair<double, double> termination_residuals(const RadialCoefficients& rc,
                                                int n) {
    require_confining(rc);
    if (n < 0) throw std::invalid_argument("series degree n must be >= 0");
    const SeriesSolution s = series_coefficients(rc, std::max(n + 1, 2));
    const double lam = rc.a4 / s.a2 - 2.0 - 2.0 * std::sqrt(rc.a1);
    return {s.coeffs[static_cast<size_t>(n) + 1], lam - 2.0 * n};
}

SeriesValue series_value(const SeriesSolution& s, double rho) {
    // Past a detected truncation every coefficient is roundoff debris;
    // summing it would grow like exp(rho^2) and swamp the polynomial.
    const int last = s.truncation_index
                         ? *s.truncation_index
                         : static_cast<int>(s.coeffs.size()) - 1;
    double acc = 0.0;
    for (int j = last; j >= 0; --j) acc = acc * rho + s.coeffs[j];

    bool ok = true;
    if (!s.truncation_index) {
        const double cN = std::abs(s.coeffs[last]);
        double tail = 0.0;
        if (cN > 0.0 && rho > 0.0)
            tail = std::exp(std::log(cN) + last * std::log(rho));
        ok = tail <= 1e-12 * std::max(1.0, std::abs(acc));
    }
    return {acc, ok};
}

double wavefunction_value(const SeriesSolution& s, double r) {
    if (r < 0.0) throw std::invalid_argument("radius must be >= 0");
    const double rho = std::sqrt(s.a2) * r;
    const double H = series_value(s, rho).value;
    // pow(0, 0) = 1 keeps the a1 = 0 scaling s(0) = C_0.
    return std::exp(-0.5 * s.a2 * r * r) * std::pow(r, std::sqrt(s.a1)) * H;
}

double radial_wavefunction(const RadialCoefficients& rc, int N, double r) {
    return wavefunction_value(series_coefficients(rc, N), r);
}

std::vector<std::pair<double, double>> wavefunction_table(
    const RadialCoefficients& rc, int N, double r_max, int points,
    bool normalize) {
    if (!(r_max > 0.0)) throw std::invalid_argument("r_max must be > 0");
    if (points < 2) throw std::invalid_argument("need at least 2 grid points");
    const SeriesSolution s = series_coefficients(rc, N);

    std::vector<std::pair<double, double>> table;
    table.reserve(points);
    const double h = r_max / (points - 1);
    for (int i = 0; i < points; ++i) {
        const double r = i * h;
        table.emplace_back(r, wavefunction_value(s, r));
    }

    if (normalize) {
        double norm_sq = 0.0;
        for (int i = 0; i + 1 < points; ++i) {
            const auto& [ra, sa] = table[i];
            const auto& [rb, sb] = table[i + 1];
            norm_sq += 0.5 * (sa * sa * ra + sb * sb * rb) * (rb - ra);
        }
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (auto& [r, v] : table) v *= inv;
        }
    }
    return table;
}

}  // namespace srkg

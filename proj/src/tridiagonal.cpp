#include "srkg/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace srkg {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diag,
                                           std::vector<double> offdiag)
    : diag_(std::move(diag)), off_(std::move(offdiag)) {
    if (diag_.empty() || off_.size() + 1 != diag_.size())
        throw std::invalid_argument(
            "tridiagonal needs offdiag size = diag size - 1");

    double lo = diag_[0], hi = diag_[0];
    for (size_t i = 0; i < diag_.size(); ++i) {
        const double radius = (i > 0 ? std::abs(off_[i - 1]) : 0.0) +
                              (i + 1 < diag_.size() ? std::abs(off_[i]) : 0.0);
        lo = std::min(lo, diag_[i] - radius);
        hi = std::max(hi, diag_[i] + radius);
    }
    gersh_lo_ = lo;
    gersh_hi_ = hi;
}

int SymmetricTridiagonal::count_below(double x) const {
    // Signs of the LDL^T pivots of (A - x I); a vanishing pivot is nudged
    // to keep the count well defined.
    constexpr double tiny = std::numeric_limits<double>::min() /
                            std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = diag_[0] - x;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < diag_.size(); ++i) {
        const double denom = (q == 0.0) ? tiny : q;
        q = (diag_[i] - x) - off_[i - 1] * (off_[i - 1] / denom);
        if (q < 0.0) ++count;
    }
    return count;
}

double SymmetricTridiagonal::eigenvalue(int k, double rel_tol) const {
    if (k < 0 || k >= size())
        throw std::out_of_range("eigenvalue index out of range");
    double lo = gersh_lo_, hi = gersh_hi_;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(mid) > k)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid))) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> SymmetricTridiagonal::eigenvalues(int count) const {
    if (count < 1 || count > size())
        throw std::invalid_argument("eigenvalue count out of range");
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) out.push_back(eigenvalue(k));
    return out;
}

namespace {

// Solve (T - mu I) x = b in place by Gaussian elimination with partial
// pivoting; a fill-in superdiagonal appears when rows swap. Zero pivots
// (mu equal to an eigenvalue of a leading block) are replaced by a tiny
// value, as usual for inverse iteration.
void solve_shifted(const std::vector<double>& diag,
                   const std::vector<double>& off, double mu,
                   std::vector<double>& x) {
    const size_t n = diag.size();
    std::vector<double> d(n), u(n, 0.0), u2(n, 0.0), l(n, 0.0);
    for (size_t i = 0; i < n; ++i) d[i] = diag[i] - mu;
    for (size_t i = 0; i + 1 < n; ++i) {
        u[i] = off[i];
        l[i] = off[i];
    }

    double scale = std::abs(mu);
    for (size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(d[i]));
    const double pivot_floor =
        std::numeric_limits<double>::epsilon() * std::max(scale, 1.0) * 1e-3;

    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) < std::abs(l[i])) {
            std::swap(d[i], l[i]);
            std::swap(u[i], d[i + 1]);
            if (i + 2 < n) {
                u2[i] = u[i + 1];
                u[i + 1] = 0.0;
            }
            std::swap(x[i], x[i + 1]);
        }
        double pivot = d[i];
        if (pivot == 0.0) pivot = pivot_floor;
        const double factor = l[i] / pivot;
        d[i + 1] -= factor * u[i];
        if (i + 2 < n) u[i + 1] -= factor * u2[i];
        x[i + 1] -= factor * x[i];
        d[i] = pivot;
    }
    if (d[n - 1] == 0.0) d[n - 1] = pivot_floor;

    x[n - 1] /= d[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - u[n - 2] * x[n - 1]) / d[n - 2];
    for (size_t ii = n; ii >= 3; --ii) {
        const size_t i = ii - 3;
        x[i] = (x[i] - u[i] * x[i + 1] - u2[i] * x[i + 2]) / d[i];
    }
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
        for (double& x : v) x /= norm;
}

}  // namespace

std::vector<double> SymmetricTridiagonal::eigenvector(double mu) const {
    const size_t n = diag_.size();
    std::vector<double> v(n);
    // deterministic, mildly irregular start vector
    for (size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * i);
    normalize(v);
    for (int iter = 0; iter < 3; ++iter) {
        solve_shifted(diag_, off_, mu, v);
        normalize(v);
    }

    size_t imax = 0;
    for (size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0.0)
        for (double& x : v) x = -x;
    return v;
}

}  // namespace srkg

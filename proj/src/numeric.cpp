#include "srkg/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srkg {

int count_sign_changes(std::span<const double> v, double rel_eps) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    if (vmax == 0.0) return 0;
    const double thr = rel_eps * vmax;

    int changes = 0;
    int last = 0;
    for (double x : v) {
        if (std::abs(x) <= thr) continue;
        const int sign = x > 0.0 ? 1 : -1;
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    return changes;
}

namespace {

double bisect(const std::function<std::optional<double>(double)>& f, double a,
              double b, double fa, double fb, double x_rel_tol) {
    // fa and fb have opposite signs on entry
    for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;  // bracket at machine resolution
        std::optional<double> fm = f(m);
        if (!fm) {
            // isolated undefined point; probe slightly off-center
            m = a + 0.4999 * (b - a);
            fm = f(m);
            if (!fm) break;
        }
        if (*fm == 0.0) return m;
        if ((fa < 0.0) != (*fm < 0.0)) {
            b = m;
            fb = *fm;
        } else {
            a = m;
            fa = *fm;
        }
        if (b - a <= x_rel_tol * std::max(1.0, std::abs(m))) break;
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

}  // namespace

std::vector<double> bracketed_roots(
    const std::function<std::optional<double>(double)>& f, double lo,
    double hi, int samples, double x_rel_tol) {
    if (!(lo < hi)) throw std::invalid_argument("scan interval must be nonempty");
    if (samples < 2) throw std::invalid_argument("need at least 2 scan points");

    std::vector<double> roots;
    const double dx = (hi - lo) / (samples - 1);
    std::optional<double> prev;
    double prev_x = lo;
    for (int i = 0; i < samples; ++i) {
        const double x = (i + 1 == samples) ? hi : lo + i * dx;
        const std::optional<double> cur = f(x);
        if (cur) {
            if (*cur == 0.0) {
                roots.push_back(x);
            } else if (prev && *prev != 0.0 &&
                       ((*prev < 0.0) != (*cur < 0.0))) {
                roots.push_back(bisect(f, prev_x, x, *prev, *cur, x_rel_tol));
            }
        }
        prev = cur;
        prev_x = x;
    }
    return roots;
}

}  // namespace srkg

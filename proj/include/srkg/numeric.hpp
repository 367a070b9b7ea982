#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace srkg {

/// Strict sign changes of a sampled function, ignoring entries below
/// rel_eps * max|v|.
int count_sign_changes(std::span<const double> v, double rel_eps = 1e-9);

/// All sign-change-bracketed roots of f on [lo, hi], sampled at `samples`
/// uniformly spaced points and refined by bisection until the bracket width
/// falls below x_rel_tol * max(1, |x|). f may return nullopt where it is
/// undefined; such points interrupt bracketing instead of aborting the scan.
std::vector<double> bracketed_roots(
    const std::function<std::optional<double>(double)>& f, double lo,
    double hi, int samples, double x_rel_tol = 1e-13);

}  // namespace srkg

#pragma once

#include <vector>

namespace srkg {

/// Selected eigenvalues and eigenvectors of a real symmetric tridiagonal
/// matrix, via Sturm-count bisection and inverse iteration. Suited to
/// extracting the few lowest states of large matrices.
class SymmetricTridiagonal {
  public:
    /// diag has size n >= 1, offdiag size n - 1.
    SymmetricTridiagonal(std::vector<double> diag, std::vector<double> offdiag);

    int size() const { return static_cast<int>(diag_.size()); }

    /// Number of eigenvalues strictly below x (Sturm count of the LDL^T
    /// pivot signs).
    int count_below(double x) const;

    /// k-th smallest eigenvalue (k = 0, 1, ...), bisected within the
    /// Gershgorin bounds until the bracket reaches rel_tol * max(1, |mu|).
    double eigenvalue(int k, double rel_tol = 1e-13) const;

    /// The `count` smallest eigenvalues, ascending.
    std::vector<double> eigenvalues(int count) const;

    /// Unit eigenvector for an approximate eigenvalue, by inverse iteration
    /// with a partially pivoted tridiagonal solve. Sign fixed so the largest
    /// component is positive.
    std::vector<double> eigenvector(double mu) const;

  private:
    std::vector<double> diag_, off_;
    double gersh_lo_, gersh_hi_;
};

}  // namespace srkg

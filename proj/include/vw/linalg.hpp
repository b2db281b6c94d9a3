#pragma once

#include <functional>
#include <vector>

namespace vw {

/// Dense symmetric matrix, full row-major storage.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    SymMatrix() = default;
    explicit SymMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    double max_asymmetry() const;
};

namespace linalg {

/// All eigenvalues by cyclic Jacobi rotations, iterated until the off-diagonal
/// Frobenius norm falls below `off_tol`. Ascending order.
std::vector<double> jacobi_eigenvalues(SymMatrix m, double off_tol = 1e-12, int max_sweeps = 64);

/// Householder reduction to symmetric tridiagonal form (eigenvalues preserved).
void householder_tridiagonalize(SymMatrix& m, std::vector<double>& diag, std::vector<double>& off);

/// All eigenvalues of a symmetric tridiagonal matrix by the implicit QL
/// algorithm with Wilkinson shifts. Ascending order.
std::vector<double> ql_tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

/// k smallest eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
/// bisection; each eigenvalue is bracketed to `abs_tol` absolute width.
std::vector<double> sturm_tridiagonal_eigenvalues(const std::vector<double>& diag,
                                                  const std::vector<double>& off, int k,
                                                  double abs_tol = 1e-12);

/// Number of eigenvalues of the tridiagonal matrix strictly below sigma.
int sturm_count_below(const std::vector<double>& diag, const std::vector<double>& off, double sigma);

struct LeastSquaresFit {
    std::vector<double> coefficients;
    double residual_norm = 0.0;
    double condition_estimate = 0.0;
};

/// Least-squares solve of design * x ~= rhs by Householder QR with column
/// equilibration; condition_estimate is the scaled-R diagonal ratio.
LeastSquaresFit qr_least_squares(const std::vector<std::vector<double>>& design,
                                 const std::vector<double>& rhs);

}  // namespace linalg
}  // namespace vw

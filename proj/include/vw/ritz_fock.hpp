#pragma once

#include <utility>
#include <vector>

#include "vw/json_writer.hpp"
#include "vw/linalg.hpp"
#include "vw/models.hpp"

namespace vw {

/// Linear variational matrices over the orthonormal monomial basis
/// phi_n(z) = z^n / sqrt(n!). The overlap matrix is the identity in this
/// normalization, so the generalized problem reduces to a standard one.
struct RitzMatrices {
    int size = 0;
    SymMatrix H;
    ModelSpec model;
};

/// Spectrum with truncation and convergence metadata.
struct SpectrumResult {
    ModelSpec model;
    int truncation = 0;
    int k = 0;
    std::vector<double> values;
    std::vector<std::pair<int, std::vector<double>>> history;  // (N, values) per doubling
};

/// Tridiagonal position operator: X[n][n+1] = sqrt((n+1)/2), zero diagonal.
SymMatrix position_matrix(int truncation);

/// H = diag(n + 1/2) plus the anharmonic part as matrix powers of the
/// truncated position operator. Bandwidth equals the highest power present.
RitzMatrices hamiltonian_matrix(const ModelSpec& model, int truncation);

/// k smallest eigenvalues, ascending. Cyclic Jacobi for small matrices,
/// Householder tridiagonalization + implicit QL beyond; both are orthogonal
/// similarity sweeps meeting the same tolerance.
std::vector<double> symmetric_eigen(const SymMatrix& m, int k);

/// k lowest Ritz values at fixed truncation N.
SpectrumResult ritz_spectrum(const ModelSpec& model, int truncation, int k);

/// Doubles N from 32 until the tracked values move by less than tol, cap 4096.
/// Throws with the history attached on non-convergence at the cap.
SpectrumResult converged_spectrum(const ModelSpec& model, int k, double tol);

Json to_json(const SpectrumResult& s);

}  // namespace vw

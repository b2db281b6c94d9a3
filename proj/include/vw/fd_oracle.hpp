#pragma once

#include <vector>

#include "vw/models.hpp"

namespace vw {

/// Uniform grid on [-L, L] with m points, h = 2L/(m-1), symmetric about 0.
struct Grid1D {
    double half_width = 8.0;
    int m = 1024;
    double h = 0.0;
    std::vector<double> nodes;

    static Grid1D make(double half_width, int m);
};

struct TridiagMatrix {
    std::vector<double> diag;
    std::vector<double> off;
};

/// Central second-difference discretization of -1/2 d^2/dx^2 + V(x) with
/// Dirichlet boundaries: diag_i = 1/h^2 + V(x_i), off = -1/(2 h^2).
TridiagMatrix fd_hamiltonian(const ModelSpec& model, const Grid1D& grid);

/// k smallest eigenvalues by Sturm-sequence bisection, each bracketed to
/// 1e-12 absolute.
std::vector<double> tridiag_eigen(const std::vector<double>& diag, const std::vector<double>& off,
                                  int k);

/// Ground-state energy on an auto-validated box. The box must satisfy
/// V(L) >= 10 x the energy estimate and is expanded up to twice before
/// giving up. With refine, one Richardson step: (4 E_{h/2} - E_h) / 3.
double fd_ground_energy(const ModelSpec& model, double half_width, int m, bool refine);

}  // namespace vw

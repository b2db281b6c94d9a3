#include "vw/fd_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "vw/linalg.hpp"

namespace vw {

Grid1D Grid1D::make(double half_width, int m) {
    if (!(half_width > 0.0)) throw std::invalid_argument("Grid1D: half_width must be > 0");
    if (m < 64) throw std::invalid_argument("Grid1D: need at least 64 points");
    Grid1D g;
    g.half_width = half_width;
    g.m = m;
    g.h = 2.0 * half_width / (m - 1);
    g.nodes.resize(m);
    for (int i = 0; i < m; ++i) g.nodes[i] = -half_width + i * g.h;
    return g;
}

TridiagMatrix fd_hamiltonian(const ModelSpec& model, const Grid1D& grid) {
    TridiagMatrix t;
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    t.diag.resize(grid.m);
    t.off.assign(grid.m - 1, -0.5 * inv_h2);
    for (int i = 0; i < grid.m; ++i) t.diag[i] = inv_h2 + potential_value(model, grid.nodes[i]);
    return t;
}

std::vector<double> tridiag_eigen(const std::vector<double>& diag, const std::vector<double>& off,
                                  int k) {
    return linalg::sturm_tridiagonal_eigenvalues(diag, off, k, 1e-12);
}

namespace {

double ground_at(const ModelSpec& model, double half_width, int m) {
    const Grid1D grid = Grid1D::make(half_width, m);
    const TridiagMatrix t = fd_hamiltonian(model, grid);
    return tridiag_eigen(t.diag, t.off, 1)[0];
}

double wall_height(const ModelSpec& model, double half_width) {
    // For the asymmetric family the shallower wall governs confinement.
    return std::min(potential_value(model, half_width), potential_value(model, -half_width));
}

}  // namespace

double fd_ground_energy(const ModelSpec& model, double half_width, int m, bool refine) {
    if (m < 256) throw std::invalid_argument("fd_ground_energy: need m >= 256");

    double L = half_width;
    double e = ground_at(model, L, m);
    int expansions = 0;
    while (wall_height(model, L) < 10.0 * std::abs(e)) {
        if (expansions == 2)
            throw std::runtime_error("fd_ground_energy: box still too small after two expansions");
        L *= 2.0;
        ++expansions;
        e = ground_at(model, L, m);
    }
    if (!refine) return e;
    // m' = 2m - 1 keeps the nodes nested and halves h exactly.
    const double e_half = ground_at(model, L, 2 * m - 1);
    return (4.0 * e_half - e) / 3.0;
}

}  // namespace vw

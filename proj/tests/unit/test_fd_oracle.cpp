#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vw/fd_oracle.hpp"
#include "vw/ritz_fock.hpp"

using namespace vw;

TEST_CASE("grid construction") {
    const Grid1D g = Grid1D::make(8.0, 1025);
    CHECK(g.h == doctest::Approx(16.0 / 1024.0).epsilon(1e-15));
    CHECK(g.nodes.front() == doctest::Approx(-8.0));
    CHECK(g.nodes.back() == doctest::Approx(8.0));
    CHECK(g.nodes[512] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(Grid1D::make(8.0, 32), std::invalid_argument);
    CHECK_THROWS_AS(Grid1D::make(-1.0, 512), std::invalid_argument);
}

TEST_CASE("discretized operator entries") {
    const Grid1D g = Grid1D::make(4.0, 129);
    const TridiagMatrix t = fd_hamiltonian(quartic_model(0.3), g);
    const double inv_h2 = 1.0 / (g.h * g.h);
    CHECK(t.off.size() == 128);
    for (double o : t.off) CHECK(o == doctest::Approx(-0.5 * inv_h2).epsilon(1e-15));
    for (int i = 0; i < g.m; i += 17)
        CHECK(t.diag[i] ==
              doctest::Approx(inv_h2 + potential_value(quartic_model(0.3), g.nodes[i]))
                  .epsilon(1e-14));
}

TEST_CASE("tridiag_eigen closed forms") {
    const auto ev = tridiag_eigen({2.0, 2.0}, {-1.0}, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-11));
    const auto single = tridiag_eigen({-0.7}, {}, 1);
    CHECK(single[0] == doctest::Approx(-0.7).epsilon(1e-12));
    CHECK_THROWS_AS(tridiag_eigen({1.0, 2.0}, {0.1}, 3), std::invalid_argument);
}

TEST_CASE("harmonic levels within O(h^2)") {
    const Grid1D g = Grid1D::make(8.0, 1024);
    const TridiagMatrix t = fd_hamiltonian(harmonic_model(), g);
    const auto ev = tridiag_eigen(t.diag, t.off, 3);
    const double h2 = g.h * g.h;
    for (int i = 0; i < 3; ++i) CHECK(std::abs(ev[i] - (i + 0.5)) < 5.0 * h2);
    // the raw second-order scheme lands near -h^2 <p^4>/24, about 7.6e-6 here
    CHECK(std::abs(ev[0] - 0.5) < 1.2e-5);
    CHECK(std::abs(ev[0] - 0.5) > 1e-7);
}

TEST_CASE("Richardson step reaches the harmonic level") {
    const double e = fd_ground_energy(harmonic_model(), 8.0, 2048, true);
    CHECK(e == doctest::Approx(0.5).epsilon(1e-9));
    // second-order convergence: halving h shrinks the error about fourfold
    auto ground = [](int m) {
        const Grid1D g = Grid1D::make(8.0, m);
        const TridiagMatrix t = fd_hamiltonian(harmonic_model(), g);
        return tridiag_eigen(t.diag, t.off, 1)[0];
    };
    const double e1 = ground(513), e2 = ground(1025), e3 = ground(2049);
    const double ratio = (e1 - e2) / (e2 - e3);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("box insensitivity once the wall precondition holds") {
    const double e8 = fd_ground_energy(harmonic_model(), 8.0, 2048, true);
    const double e16 = fd_ground_energy(harmonic_model(), 16.0, 2048, true);
    CHECK(std::abs(e8 - e16) < 1e-9);
}

TEST_CASE("small boxes are expanded automatically") {
    // L = 1 fails V(L) >= 10 E for the harmonic well; expansion must rescue it
    const double e = fd_ground_energy(harmonic_model(), 1.0, 512, true);
    CHECK(e == doctest::Approx(0.5).epsilon(1e-6));
    CHECK_THROWS_AS(fd_ground_energy(harmonic_model(), 8.0, 128, true), std::invalid_argument);
}

TEST_CASE("cross-oracle agreement on representative models") {
    const ModelSpec models[] = {quartic_model(0.1), quartic_model(1.0),
                                cubic_quartic_model(0.05, 0.1)};
    for (const ModelSpec& m : models) {
        const double fd = fd_ground_energy(m, 8.0, 2048, true);
        const double fock = converged_spectrum(m, 1, 1e-8).values[0];
        CHECK(std::abs(fd - fock) < 1e-6);
    }
}

TEST_CASE("variational bound holds against the displaced-family optima") {
    const ModelSpec m = cubic_quartic_model(0.05, 0.1);
    const double fd = fd_ground_energy(m, 8.0, 2048, true);
    // displaced-coherent optimum frozen from the minimizer probe
    CHECK(fd < 0.567934968);
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vw/moments.hpp"
#include "vw/paper_formulas.hpp"
#include "vw/ritz_fock.hpp"

using namespace vw;

TEST_CASE("position matrix entries") {
    const SymMatrix x2 = position_matrix(2);
    CHECK(x2.at(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    const SymMatrix x3 = position_matrix(3);
    CHECK(x3.at(0, 1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(x3.at(1, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x3.at(0, 2) == 0.0);
    CHECK(x3.max_asymmetry() == 0.0);
    CHECK_THROWS_AS(position_matrix(1), std::invalid_argument);
}

TEST_CASE("harmonic hamiltonian is the exact diagonal") {
    const RitzMatrices rm = hamiltonian_matrix(harmonic_model(), 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(rm.H.at(i, i) == doctest::Approx(i + 0.5).epsilon(1e-15));
        for (int j = 0; j < 5; ++j)
            if (i != j) CHECK(rm.H.at(i, j) == 0.0);
    }
}

TEST_CASE("quartic hamiltonian entries and bandedness") {
    const double lam = 0.1;
    const RitzMatrices rm = hamiltonian_matrix(quartic_model(lam), 24);
    CHECK(rm.H.at(0, 0) == doctest::Approx(0.5 + 0.75 * lam).epsilon(1e-14));
    CHECK(rm.H.at(1, 1) == doctest::Approx(1.5 + 3.75 * lam).epsilon(1e-14));
    CHECK(rm.H.max_asymmetry() == 0.0);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j)
            if (std::abs(i - j) > 4) CHECK(rm.H.at(i, j) == 0.0);
    // x^4 couples only even neighbor distances
    CHECK(rm.H.at(0, 2) != 0.0);
    CHECK(rm.H.at(0, 4) != 0.0);
    CHECK(rm.H.at(0, 1) == 0.0);
    CHECK(rm.H.at(0, 3) == 0.0);
}

TEST_CASE("cubic-quartic hamiltonian has odd couplings and bandwidth 4") {
    const RitzMatrices rm = hamiltonian_matrix(cubic_quartic_model(0.2, 0.3), 20);
    CHECK(rm.H.at(0, 1) != 0.0);
    CHECK(rm.H.at(0, 3) != 0.0);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j)
            if (std::abs(i - j) > 4) CHECK(rm.H.at(i, j) == 0.0);
}

TEST_CASE("power2n bandwidth matches the highest power") {
    const RitzMatrices rm = hamiltonian_matrix(power_model(3, 0.05), 24);
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j)
            if (std::abs(i - j) > 6) CHECK(rm.H.at(i, j) == 0.0);
    CHECK_THROWS_AS(hamiltonian_matrix(power_model(4, 0.05), 6), std::invalid_argument);
}

TEST_CASE("quartic diagonal equals the printed monomial energies") {
    const double lam = 0.35;
    const ModelSpec model = quartic_model(lam);
    const int n_basis = 32;
    const RitzMatrices rm = hamiltonian_matrix(model, n_basis);
    for (int n = 0; n <= n_basis - 4; ++n)
        CHECK(rm.H.at(n, n) ==
              doctest::Approx(paper_energy(FormulaId::MonomialQuartic, Monomial{n}, model))
                  .epsilon(1e-12));
}

TEST_CASE("x^4 diagonal is the independent oracle for the closed-form moment") {
    // lambda = 1 makes H(n,n) - (n + 1/2) the raw <n|x^4|n> matrix element
    const RitzMatrices rm = hamiltonian_matrix(quartic_model(1.0), 16);
    for (int n = 0; n <= 12; ++n)
        CHECK(rm.H.at(n, n) - (n + 0.5) == doctest::Approx(monomial_x4_moment(n)).epsilon(1e-12));
}

TEST_CASE("symmetric_eigen on pinned matrices") {
    SymMatrix d(3);
    d.at(0, 0) = 3.0;
    d.at(1, 1) = 1.0;
    d.at(2, 2) = 2.0;
    const auto two = symmetric_eigen(d, 2);
    CHECK(two.size() == 2);
    CHECK(two[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(two[1] == doctest::Approx(2.0).epsilon(1e-13));

    SymMatrix flip(2);
    flip.at(0, 1) = 1.0;
    flip.at(1, 0) = 1.0;
    const auto pm = symmetric_eigen(flip, 2);
    CHECK(pm[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(pm[1] == doctest::Approx(1.0).epsilon(1e-13));

    SymMatrix bad(2);
    bad.at(0, 1) = 1.0;
    bad.at(1, 0) = 2.0;
    CHECK_THROWS_AS(symmetric_eigen(bad, 1), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigen(flip, 3), std::invalid_argument);
}

TEST_CASE("harmonic spectrum is exact at any truncation, on both solver routes") {
    // N = 50 exercises the Jacobi route, N = 160 the tridiagonalization route
    for (int n_basis : {50, 160}) {
        const SpectrumResult s = ritz_spectrum(harmonic_model(), n_basis, 4);
        for (int i = 0; i < 4; ++i) CHECK(s.values[i] == doctest::Approx(i + 0.5).epsilon(1e-12));
    }
}

TEST_CASE("solver routes agree on an anharmonic matrix") {
    const RitzMatrices rm = hamiltonian_matrix(quartic_model(0.4), 96);
    const auto jac = linalg::jacobi_eigenvalues(rm.H);
    SymMatrix work = rm.H;
    std::vector<double> diag, off;
    linalg::householder_tridiagonalize(work, diag, off);
    const auto ql = linalg::ql_tridiagonal_eigenvalues(diag, off);
    for (int i = 0; i < 8; ++i) CHECK(jac[i] == doctest::Approx(ql[i]).epsilon(1e-11));
}

TEST_CASE("ritz values decrease monotonically with truncation and bound the spectrum") {
    const ModelSpec model = quartic_model(0.1);
    const double converged = converged_spectrum(model, 1, 1e-8).values[0];
    double prev = 1e9;
    for (int n_basis : {8, 16, 32, 64}) {
        const double e0 = ritz_spectrum(model, n_basis, 1).values[0];
        CHECK(e0 <= prev + 1e-12);
        CHECK(e0 >= converged - 1e-10);  // Ritz value never undershoots
        prev = e0;
    }
}

TEST_CASE("converged spectrum") {
    {
        const SpectrumResult s = converged_spectrum(harmonic_model(), 3, 1e-10);
        CHECK(s.truncation == 64);  // first doubling settles it
        CHECK(s.history.size() == 2);
        for (int i = 0; i < 3; ++i) CHECK(s.values[i] == doctest::Approx(i + 0.5).epsilon(1e-12));
    }
    {
        const SpectrumResult s = converged_spectrum(quartic_model(0.1), 1, 1e-8);
        // frozen from the cross-validated oracles
        CHECK(s.values[0] == doctest::Approx(0.559146327184).epsilon(1e-9));
        CHECK(s.history.size() >= 2);
    }
    {
        // asymmetric ground state sits below the best symmetric Gaussian
        const ModelSpec m = cubic_quartic_model(0.05, 0.1);
        const double e0 = converged_spectrum(m, 1, 1e-8).values[0];
        double best_sym = 1e9;
        for (double a = 0.5; a < 2.0; a += 0.01) {
            const double v = 1.0 / (2.0 * a);
            best_sym = std::min(best_sym, a / 4.0 + 0.5 * v + m.mu * 3.0 * v * v);
        }
        CHECK(e0 < best_sym);
    }
    CHECK_THROWS_AS(converged_spectrum(harmonic_model(), 1, 1e-13), std::invalid_argument);
}

TEST_CASE("spectrum JSON carries model, values, and history") {
    const SpectrumResult s = converged_spectrum(harmonic_model(), 2, 1e-10);
    const std::string j = to_json(s).dump();
    CHECK(j.find("\"history\"") != std::string::npos);
    CHECK(j.find("\"values\":[0.5,1.5]") != std::string::npos);
}

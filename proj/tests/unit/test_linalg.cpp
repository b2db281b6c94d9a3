#include <doctest.h>

#include <cmath>
#include <random>

#include "vw/linalg.hpp"

using namespace vw;
using namespace vw::linalg;

namespace {

SymMatrix random_symmetric(int n, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = dist(gen);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

}  // namespace

TEST_CASE("jacobi on small exact cases") {
    SymMatrix d(3);
    d.at(0, 0) = 3.0;
    d.at(1, 1) = 1.0;
    d.at(2, 2) = 2.0;
    const auto ev = jacobi_eigenvalues(d);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(ev[2] == doctest::Approx(3.0).epsilon(1e-14));

    SymMatrix s(2);
    s.at(0, 1) = 1.0;
    s.at(1, 0) = 1.0;
    const auto ev2 = jacobi_eigenvalues(s);
    CHECK(ev2[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ev2[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("three eigenvalue routes agree on random symmetric matrices") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const int n = 24;
        SymMatrix m = random_symmetric(n, seed);
        const auto jac = jacobi_eigenvalues(m);

        SymMatrix work = m;
        std::vector<double> diag, off;
        householder_tridiagonalize(work, diag, off);
        const auto ql = ql_tridiagonal_eigenvalues(diag, off);
        const auto sturm = sturm_tridiagonal_eigenvalues(diag, off, n, 1e-13);

        for (int i = 0; i < n; ++i) {
            CHECK(jac[i] == doctest::Approx(ql[i]).epsilon(1e-10));
            CHECK(jac[i] == doctest::Approx(sturm[i]).epsilon(1e-10));
        }
    }
}

TEST_CASE("sturm bisection on closed-form tridiagonals") {
    // diag=[2,2], off=[-1] -> {1, 3}
    const auto ev = sturm_tridiagonal_eigenvalues({2.0, 2.0}, {-1.0}, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-11));

    const auto one = sturm_tridiagonal_eigenvalues({4.2}, {}, 1);
    CHECK(one[0] == doctest::Approx(4.2).epsilon(1e-12));

    // free Laplacian eigenvalues 2 - 2 cos(j pi / (n+1))
    const int n = 40;
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    const auto lap = sturm_tridiagonal_eigenvalues(d, e, 5);
    for (int j = 1; j <= 5; ++j)
        CHECK(lap[j - 1] == doctest::Approx(2.0 - 2.0 * std::cos(j * M_PI / (n + 1))).epsilon(1e-10));
}

TEST_CASE("sturm count is a staircase consistent with the spectrum") {
    std::vector<double> d = {1.0, 2.0, 3.0, 4.0};
    std::vector<double> e = {0.1, 0.1, 0.1};
    const auto ev = sturm_tridiagonal_eigenvalues(d, e, 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(sturm_count_below(d, e, ev[i] - 1e-9) == i);
        CHECK(sturm_count_below(d, e, ev[i] + 1e-9) == i + 1);
    }
}

TEST_CASE("qr least squares recovers polynomial coefficients") {
    // y = 2 - x + 0.5 x^2, exactly representable
    std::vector<std::vector<double>> design;
    std::vector<double> rhs;
    for (double x = 0.1; x <= 1.05; x += 0.1) {
        design.push_back({1.0, x, x * x});
        rhs.push_back(2.0 - x + 0.5 * x * x);
    }
    const auto fit = qr_least_squares(design, rhs);
    CHECK(fit.coefficients[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.coefficients[1] == doctest::Approx(-1.0).epsilon(1e-11));
    CHECK(fit.coefficients[2] == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(fit.residual_norm < 1e-12);
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "vw/moments.hpp"

using namespace vw;

namespace {

// Independent oracle: composite Simpson integration of x^k against the
// Gaussian density, far-tail truncated.
double simpson_gaussian_moment(double mean, double variance, int k) {
    const double sigma = std::sqrt(variance);
    const double lo = mean - 14.0 * sigma;
    const double hi = mean + 14.0 * sigma;
    const int n = 20000;  // even
    const double h = (hi - lo) / n;
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * M_PI));
    auto f = [&](double x) {
        return std::pow(x, k) * norm * std::exp(-0.5 * (x - mean) * (x - mean) / variance);
    };
    double s = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) s += f(lo + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace

TEST_CASE("double factorial") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(3) == 3);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(7) == 105);  // 7*5*3*1
    CHECK(double_factorial(11) == 10395);
    CHECK_THROWS_AS(double_factorial(4), std::invalid_argument);
    CHECK_THROWS_AS(double_factorial(-3), std::invalid_argument);
}

TEST_CASE("gaussian moments against closed forms") {
    // <x^4> = 3/(4 a^2) at width a = 1
    CHECK(gaussian_moment({0.0, 0.5}, 4) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(gaussian_moment({0.0, 2.25}, 1) == 0.0);
    // coherent state gamma = 1: mean sqrt2, variance 1/2
    CHECK(gaussian_moment({std::sqrt(2.0), 0.5}, 4) == doctest::Approx(10.75).epsilon(1e-14));
}

TEST_CASE("gaussian moments against the Simpson oracle") {
    const double means[] = {0.0, 0.7, -1.3};
    const double vars[] = {0.5, 1.0, 2.1};
    for (double m : means)
        for (double v : vars)
            for (int k = 0; k <= 8; ++k) {
                const double expect = simpson_gaussian_moment(m, v, k);
                CHECK(gaussian_moment({m, v}, k) == doctest::Approx(expect).epsilon(1e-8));
            }
}

TEST_CASE("centered gaussian moments reduce to (2n-1)!! v^n and Wick factorization") {
    for (double v : {0.3, 1.0, 1.7}) {
        for (int n = 1; n <= 5; ++n) {
            const double expect = double_factorial(2 * n - 1) * std::pow(v, n);
            CHECK(gaussian_moment({0.0, v}, 2 * n) == doctest::Approx(expect).epsilon(1e-13));
            CHECK(gaussian_moment({0.0, v}, 2 * n - 1) == 0.0);
        }
        const double m2 = gaussian_moment({0.0, v}, 2);
        CHECK(gaussian_moment({0.0, v}, 4) == doctest::Approx(3.0 * m2 * m2).epsilon(1e-14));
    }
}

TEST_CASE("monomial x^4 moment") {
    CHECK(monomial_x4_moment(0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(monomial_x4_moment(1) == doctest::Approx(3.75).epsilon(1e-15));
    // n = 2 value is cross-checked against the operator-matrix diagonal in the
    // number-basis tests; the closed form gives 39/4
    CHECK(monomial_x4_moment(2) == doctest::Approx(9.75).epsilon(1e-15));
    CHECK_THROWS_AS(monomial_x4_moment(-1), std::invalid_argument);
}

TEST_CASE("trial moments") {
    CHECK(trial_moment(Coherent{Complex(0.0, 0.0)}, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(trial_moment(Monomial{1}, 4) == doctest::Approx(3.75).epsilon(1e-15));
    // Isserlis third moment of the displaced state: 2 sqrt2 g^3 + (3 sqrt2/2) g;
    // the printed coefficient 3 sqrt2 is carried only by the fidelity layer
    const double g = 1.0;
    const double expect = 2.0 * std::sqrt(2.0) + 1.5 * std::sqrt(2.0);
    CHECK(trial_moment(Coherent{Complex(g, 0.0)}, 3) == doctest::Approx(expect).epsilon(1e-14));

    CHECK(trial_moment(PositionGaussian{2.0, 0.0}, 2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(trial_moment(Monomial{3}, 1) == 0.0);
    CHECK_THROWS_AS(trial_moment(Monomial{1}, 6), std::invalid_argument);
    CHECK_THROWS_AS(trial_moment(DisplacedMonomial{2, Complex(0.5, 0.0)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(trial_moment(PositionGaussian{-1.0, 0.0}, 2), std::invalid_argument);
}

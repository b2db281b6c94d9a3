#include "vw/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vw/quadrature.hpp"

namespace vw {

double gaussian_moment(const GaussianState1D& g, int k) {
    if (k < 0) throw std::invalid_argument("gaussian_moment: k must be >= 0");
    if (!(g.variance > 0.0)) throw std::invalid_argument("gaussian_moment: variance must be > 0");
    if (k == 0) return 1.0;
    if (g.mean == 0.0 && k % 2 == 1) return 0.0;  // exact, not a rounding of the recursion
    double prev2 = 1.0;
    double prev1 = g.mean;
    for (int j = 2; j <= k; ++j) {
        const double cur = g.mean * prev1 + (j - 1) * g.variance * prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

long long double_factorial(int m) {
    if (m < -1 || m % 2 == 0) throw std::invalid_argument("double_factorial: m must be odd and >= -1");
    long long p = 1;
    for (int j = m; j >= 1; j -= 2) p *= j;
    return p;
}

double monomial_x4_moment(int n) {
    if (n < 0) throw std::invalid_argument("monomial_x4_moment: n must be >= 0");
    const double nn = static_cast<double>(n);
    return 0.25 * (6.0 * nn * nn + 6.0 * nn + 3.0);
}

namespace {

double monomial_moment(int n, int k) {
    if (k % 2 == 1) return 0.0;  // definite parity
    switch (k) {
    case 0: return 1.0;
    case 2: return n + 0.5;
    case 4: return monomial_x4_moment(n);
    default:
        throw std::invalid_argument("trial_moment: monomial <x^" + std::to_string(k) +
                                    "> has no closed form here (only k <= 4)");
    }
}

}  // namespace

double trial_moment(const TrialParams& t, int k) {
    if (k < 0) throw std::invalid_argument("trial_moment: k must be >= 0");
    const Admissibility adm = check_admissible(t);
    if (!adm.ok) throw std::invalid_argument("trial_moment: inadmissible trial: " + adm.diagnostic);

    if (const auto* g = std::get_if<PositionGaussian>(&t)) {
        return gaussian_moment({g->beta, 1.0 / (2.0 * g->alpha)}, k);
    }
    if (const auto* c = std::get_if<Coherent>(&t)) {
        return gaussian_moment({std::sqrt(2.0) * c->gamma.real(), 0.5}, k);
    }
    if (const auto* m = std::get_if<Monomial>(&t)) {
        return monomial_moment(m->n, k);
    }
    if (std::holds_alternative<BargmannSqueezed>(t)) {
        // No printed closed form is trusted here; the complex-plane quadrature
        // is the authority for this family.
        const QuadratureValue q = bargmann_x_moment(t, k, 64);
        if (!q.stable)
            throw std::runtime_error("trial_moment: quadrature did not stabilize for squeezed state");
        return q.value;
    }
    const auto& d = std::get<DisplacedMonomial>(t);
    if (d.n == 0) return gaussian_moment({std::sqrt(2.0) * d.gamma.real(), 0.5}, k);
    throw std::invalid_argument(
        "trial_moment: displaced monomial with n >= 1 has no supported closed form; "
        "use the quadrature module");
}

}  // namespace vw

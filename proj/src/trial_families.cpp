#include "vw/trial_families.hpp"

#include <cmath>
#include <stdexcept>

namespace vw {

QuadraticFormM quadratic_form(Complex alpha, Complex beta) {
    QuadraticFormM q;
    q.a = alpha.real();
    q.b = alpha.imag();
    q.c = beta.real();
    q.dd = beta.imag();
    return q;
}

double hessian_determinant(Complex alpha) { return 1.0 - 4.0 * std::norm(alpha); }

Admissibility check_admissible(const TrialParams& t) {
    return std::visit(
        [](const auto& p) -> Admissibility {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PositionGaussian>) {
                if (!(p.alpha > 0.0)) return {false, "width must be positive"};
                return {true, {}};
            } else if constexpr (std::is_same_v<T, Coherent>) {
                return {true, {}};  // exp(gamma z) is normalizable for every gamma
            } else if constexpr (std::is_same_v<T, BargmannSqueezed>) {
                if (hessian_determinant(Complex(p.alpha, 0.0)) <= 0.0) return {false, "det(M)=0"};
                return {true, {}};
            } else if constexpr (std::is_same_v<T, Monomial>) {
                if (p.n < 0) return {false, "monomial degree must be >= 0"};
                return {true, {}};
            } else {
                if (p.n < 0) return {false, "monomial degree must be >= 0"};
                return {true, {}};
            }
        },
        t);
}

double bargmann_norm_squared(double alpha, Complex beta) {
    const QuadraticFormM q = quadratic_form(Complex(alpha, 0.0), beta);
    const double det = q.det();
    if (det <= 0.0) throw std::invalid_argument("bargmann_norm_squared: not normalizable");
    // v^T M^{-1} v / 4 with v = (2c, -2d); M is diagonal for real alpha but we
    // keep the general 2x2 inverse so the quadratic form is used as stated.
    const double v1 = 2.0 * q.c;
    const double v2 = -2.0 * q.dd;
    const double inv11 = q.m22() / det;
    const double inv12 = -q.m12() / det;
    const double inv22 = q.m11() / det;
    const double quad = v1 * (inv11 * v1 + inv12 * v2) + v2 * (inv12 * v1 + inv22 * v2);
    return std::exp(0.25 * quad) / std::sqrt(det);
}

double squeeze_parameter(double alpha) {
    if (std::abs(alpha) >= 0.5) throw std::invalid_argument("squeeze_parameter: |alpha| must be < 1/2");
    return std::atanh(2.0 * alpha);
}

std::string family_name(const TrialParams& t) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PositionGaussian>) return "position_gaussian";
            else if constexpr (std::is_same_v<T, Coherent>) return "coherent";
            else if constexpr (std::is_same_v<T, BargmannSqueezed>) return "bargmann_squeezed";
            else if constexpr (std::is_same_v<T, Monomial>) return "monomial";
            else return "displaced_monomial";
        },
        t);
}

Json to_json(Complex z) {
    Json j = Json::object();
    j.set("re", z.real());
    j.set("im", z.imag());
    return j;
}

Json to_json(const TrialParams& t) {
    Json params = Json::object();
    std::visit(
        [&params](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, PositionGaussian>) {
                params.set("alpha", p.alpha);
                params.set("beta", p.beta);
            } else if constexpr (std::is_same_v<T, Coherent>) {
                params.set("gamma", to_json(p.gamma));
            } else if constexpr (std::is_same_v<T, BargmannSqueezed>) {
                params.set("alpha", p.alpha);
            } else if constexpr (std::is_same_v<T, Monomial>) {
                params.set("n", p.n);
            } else {
                params.set("n", p.n);
                params.set("gamma", to_json(p.gamma));
            }
        },
        t);
    Json j = Json::object();
    j.set("family", family_name(t));
    j.set("params", std::move(params));
    return j;
}

}  // namespace vw

#pragma once

#include <complex>
#include <string>
#include <variant>

#include "vw/json_writer.hpp"

namespace vw {

using Complex = std::complex<double>;

/// Position-space Gaussian psi(x) ~ exp(-alpha (x - beta)^2 / 2), alpha > 0.
struct PositionGaussian {
    double alpha = 1.0;
    double beta = 0.0;
};

/// Holomorphic coherent state psi(z) = exp(gamma z) up to normalization.
struct Coherent {
    Complex gamma{0.0, 0.0};
};

/// Holomorphic squeezed state psi(z) = exp(alpha z^2), real alpha, |alpha| < 1/2.
struct BargmannSqueezed {
    double alpha = 0.0;
};

/// Fock state psi(z) = z^n, the n-quantum oscillator eigenstate.
struct Monomial {
    int n = 0;
};

/// Displaced Fock state: n = 0 is the coherent state exp(gamma z); for n >= 1
/// the holomorphic function is (z - conj(gamma))^n exp(gamma z).
struct DisplacedMonomial {
    int n = 0;
    Complex gamma{0.0, 0.0};
};

using TrialParams =
    std::variant<PositionGaussian, Coherent, BargmannSqueezed, Monomial, DisplacedMonomial>;

struct Admissibility {
    bool ok = true;
    std::string diagnostic;  // names the violated condition when !ok
};

/// Square-integrability verdict for the trial state in its own representation.
/// For exp(alpha z^2 + ...) the condition "Re(alpha e^{2 i theta}) < 1/2 for
/// every theta" is the same predicate as |alpha| < 1/2, since the supremum
/// over theta is |alpha|.
Admissibility check_admissible(const TrialParams& t);

/// Real quadratic form governing convergence of the norm integral of
/// exp(alpha z^2 + beta z): exponent = -x^T M x + v^T x with
/// M = [[1-2a, 2b], [2b, 1+2a]], v = (2c, -2d), alpha = a+ib, beta = c+id.
struct QuadraticFormM {
    double a = 0.0, b = 0.0, c = 0.0, dd = 0.0;

    double m11() const { return 1.0 - 2.0 * a; }
    double m12() const { return 2.0 * b; }
    double m22() const { return 1.0 + 2.0 * a; }
    double trace() const { return 2.0; }
    double det() const { return 1.0 - 4.0 * (a * a + b * b); }
    bool positive_definite() const { return det() > 0.0; }
};

QuadraticFormM quadratic_form(Complex alpha, Complex beta);

/// det(M) = 1 - 4 |alpha|^2; beta never enters.
double hessian_determinant(Complex alpha);

/// Closed-form squared norm of exp(alpha z^2 + beta z) in the holomorphic
/// inner product, real alpha: det(M)^{-1/2} exp(v^T M^{-1} v / 4).
/// Throws for |alpha| >= 1/2.
double bargmann_norm_squared(double alpha, Complex beta);

/// Squeeze parameter r with alpha = tanh(r)/2, i.e. r = atanh(2 alpha).
/// Throws for |alpha| >= 1/2.
double squeeze_parameter(double alpha);

std::string family_name(const TrialParams& t);

Json to_json(const TrialParams& t);
Json to_json(Complex z);

}  // namespace vw

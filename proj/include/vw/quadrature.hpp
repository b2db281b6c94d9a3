#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "vw/models.hpp"
#include "vw/paper_formulas.hpp"
#include "vw/trial_families.hpp"

namespace vw {

/// Holomorphic trial function in the factored form P(z) exp(a z^2 + b z).
/// Every supported family lands in this form, and the ladder-operator actions
/// (multiplication by z, analytic d/dz) stay inside it, so expectation values
/// never need numerical differentiation.
struct HoloTrial {
    std::vector<Complex> poly{Complex(1.0, 0.0)};  // poly[k] multiplies z^k
    Complex quad_coeff{0.0, 0.0};                  // a
    Complex lin_coeff{0.0, 0.0};                   // b

    static HoloTrial from_trial(const TrialParams& t);
    static HoloTrial generalized_gaussian(Complex a, Complex b);

    /// P(z) and the exponent a z^2 + b z, kept apart so the integrator can
    /// combine exponents before exponentiating.
    Complex poly_value(Complex z) const;
    Complex exponent(Complex z) const;

    HoloTrial apply_derivative() const;
    HoloTrial multiply_by_z() const;
    int degree() const { return static_cast<int>(poly.size()) - 1; }
};

/// Gauss-Hermite rule for weight exp(-t^2); nodes/weights plus log-weights
/// for overflow-safe accumulation of sub-Gaussian integrands.
struct QuadratureGrid {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> log_weights;

    static const QuadratureGrid& gauss_hermite(int order);  // cached, order <= 256
};

inline constexpr int kMinQuadratureOrder = 8;
inline constexpr int kMaxQuadratureOrder = 256;

/// (1/pi) Int conj(f) g exp(-|z|^2) d^2z on the tensor-product rule of the
/// given per-axis order.
Complex bargmann_inner(const HoloTrial& f, const HoloTrial& g, int order);

/// Value computed at the doubled order together with the order-doubling
/// movement |v(2 order) - v(order)| used as the stability estimate.
struct QuadratureValue {
    double value = 0.0;
    double stability = 0.0;
    bool stable = true;
};

QuadratureValue bargmann_inner_checked(const HoloTrial& f, const HoloTrial& g, int order,
                                       double stability_tol = 1e-9);

enum class Observable { Number, X, X2, X3, X4, P2, ModelHamiltonian };

/// <t|obs|t> / <t|t> with derivative actions applied analytically.
/// ModelHamiltonian uses z d/dz + 1/2 for the harmonic part plus the
/// anharmonic potential in x = (z + d/dz)/sqrt(2).
QuadratureValue bargmann_expectation(Observable obs, const std::optional<ModelSpec>& model,
                                     const TrialParams& t, int order);

/// <x^k> by quadrature for any small k (used for moment cross-checks).
QuadratureValue bargmann_x_moment(const TrialParams& t, int k, int order);

/// <x^2> - <p^2> by quadrature for the squeezed family.
QuadratureValue anisotropy_quadrature(double alpha, int order);

/// Bargmann image of the position-space Gaussian of width alpha and center
/// beta: quad coefficient (1-alpha)/(2(1+alpha)), linear coefficient
/// beta (1 - 2 a)/sqrt(2).
HoloTrial position_gaussian_in_bargmann(double alpha, double beta);

/// Inputs for one validation row; only fields relevant to the formula are read.
struct ValidateParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    int n = 0;
    int d = 1;
    std::string observable = "energy";
};

/// Evaluates the printed formula and its quadrature counterpart, recording
/// both sides plus deviations; never asserts. Non-stabilizing quadrature is
/// flagged via stable = false.
ValidationRecord validate_formula(FormulaId id, const ValidateParams& p, int order);

}  // namespace vw

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vw/json_writer.hpp"
#include "vw/models.hpp"
#include "vw/trial_families.hpp"

namespace vw {

struct MinimizeResult {
    TrialParams params_opt;
    double energy_opt = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int stationary_points = 1;
    std::string provenance;  // which solver or closed form produced the optimum
};

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    double gradient_norm = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int stationary_points = 1;
};

/// Positive real root of a^3 - a - 6 lambda = 0 in closed form; the surd
/// expression for 9 lambda^2 >= 1/27, the trigonometric real-root form in the
/// casus irreducibilis, plus one Newton polish to push the residual below 1e-12.
/// Throws for lambda <= 0.
double cardano_root(double lambda);

/// Global minimizer over a > 0 of E(a) = a/4 + 1/(4a) + lambda (2n-1)!!/(2a)^n
/// by bracketed root finding on the analytic derivative. Multiple bracketed
/// roots are compared by energy. Throws for n < 2 or lambda <= 0.
double stationary_width(int n, double lambda);

/// Golden-section narrowing plus a derivative-bisection polish on a central
/// finite difference. Throws "monotone on bracket" when the three-point test
/// finds no interior minimum.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              double tol = 1e-10);

/// Scalar minimization with an analytic derivative: sign-scan brackets every
/// stationary point, bisects each, and returns the least-energy one.
ScalarMinimum minimize_with_derivative(const std::function<double(double)>& f,
                                       const std::function<double(double)>& df, double lo,
                                       double hi, double tol = 1e-12);

/// Alternating coordinate minimization for the two displaced families.
/// PositionGaussian on Quartic/CubicQuartic minimizes the Gaussian-moment
/// energy over (alpha, beta); DisplacedMonomial n = 0 minimizes the printed
/// displaced-coherent functional over real gamma.
MinimizeResult minimize_displaced(const ModelSpec& model, const TrialParams& init,
                                  double tol = 1e-10);

/// Front-end used by the CLI: picks the functional for (model, family name)
/// and minimizes it. Families: gaussian, coherent, squeezed, monomial.
MinimizeResult minimize_trial(const ModelSpec& model, const std::string& family, int monomial_n,
                              double tol = 1e-10);

struct SeriesFit {
    std::vector<double> coefficients;  // index = order, starting at 0
    std::vector<double> lambda_grid;
    double residual = 0.0;
    double condition = 0.0;
    bool reliable = true;
};

/// Least-squares polynomial fit of f over the grid; the fitted coefficients
/// are the artifact's oracle for every printed expansion. Grids must be
/// strictly positive and sorted; max_order <= 3.
SeriesFit fit_series(const std::function<double(double)>& f, const std::vector<double>& grid,
                     int max_order);

std::vector<double> log_grid(double lo, double hi, int count);

/// Default fit grid: 20 log-spaced couplings in [1e-4, 1e-2].
std::vector<double> default_fit_grid();

namespace series {

/// Self-expansion coefficients of the in-scope functionals, derived from
/// their own stationarity conditions (cross-checked against fit_series):
///   width linear coefficient     a_opt = 1 + n (2n-1)!!/2^{n-1} lambda + ...
///   quartic energy coefficient   E_min = 1/2 + 3 lambda/4 - 9 lambda^2/4 + ...
///   displaced energy coefficient E_min = 1/2 + 3 mu/4 - (9/2) lambda^2/(1+6 mu) + ...
double width_linear_coefficient(int n);
double gauss_quartic_energy_c1();
double gauss_quartic_energy_c2();
double displaced_coherent_energy_c2(double mu);

}  // namespace series

/// Gaussian-moment energy of a displaced width-alpha Gaussian in any model
/// potential (exact for polynomial potentials).
double gaussian_energy(const ModelSpec& model, double alpha, double beta);

Json to_json(const MinimizeResult& r);
Json to_json(const SeriesFit& f);

}  // namespace vw

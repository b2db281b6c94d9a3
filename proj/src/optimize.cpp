#include "vw/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vw/linalg.hpp"
#include "vw/moments.hpp"
#include "vw/paper_formulas.hpp"

namespace vw {

double cardano_root(double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("cardano_root: lambda must be > 0 (use alpha = 1 at lambda = 0)");
    const double disc = 9.0 * lambda * lambda - 1.0 / 27.0;
    double root;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        root = std::cbrt(3.0 * lambda + s) + std::cbrt(3.0 * lambda - s);
    } else {
        // casus irreducibilis: the two surd arguments are complex conjugates,
        // the real combination is the trigonometric form
        const double phi = std::acos(9.0 * std::sqrt(3.0) * lambda);
        root = 2.0 / std::sqrt(3.0) * std::cos(phi / 3.0);
    }
    // a Newton polish pushes the closed form to full double precision
    for (int i = 0; i < 2; ++i) {
        const double f = root * root * root - root - 6.0 * lambda;
        const double df = 3.0 * root * root - 1.0;
        root -= f / df;
    }
    return root;
}

namespace {

double bisect_root(const std::function<double(double)>& g, double a, double b, double ga,
                   double tol, int& iterations) {
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        ++iterations;
        const double gm = g(mid);
        if ((ga <= 0.0) == (gm <= 0.0)) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double stationary_width(int n, double lambda) {
    if (n < 2) throw std::invalid_argument("stationary_width: n must be >= 2");
    if (!(lambda > 0.0)) throw std::invalid_argument("stationary_width: lambda must be > 0");

    const double dfac = static_cast<double>(double_factorial(2 * n - 1));
    const auto dE = [&](double a) {
        return 0.25 - 0.25 / (a * a) - n * lambda * dfac / (std::pow(2.0, n) * std::pow(a, n + 1));
    };
    const auto energy = [&](double a) {
        return a / 4.0 + 1.0 / (4.0 * a) + lambda * dfac / std::pow(2.0 * a, n);
    };

    double lo = 1.0;
    double hi = 1.0 + std::cbrt(6.0 * lambda) +
                std::pow(std::pow(2.0, n) * n * lambda * dfac, 1.0 / (n + 1)) + 1.0;
    int expansions = 0;
    while (dE(hi) <= 0.0) {
        if (++expansions > 8)
            throw std::runtime_error("stationary_width: no sign change after bracket expansion");
        hi *= 2.0;
    }

    // dE is strictly increasing on alpha > 0 so the root is unique, but scan
    // anyway and keep the least-energy root per the tie-breaking contract.
    constexpr int kScan = 64;
    double best_a = 0.0;
    double best_e = std::numeric_limits<double>::infinity();
    double prev_x = lo;
    double prev_g = dE(lo);
    int iterations = 0;
    for (int i = 1; i <= kScan; ++i) {
        const double x = lo + (hi - lo) * i / kScan;
        const double gx = dE(x);
        if ((prev_g <= 0.0) != (gx <= 0.0)) {
            const double r = bisect_root(dE, prev_x, x, prev_g, 1e-13, iterations);
            const double e = energy(r);
            if (e < best_e) {
                best_e = e;
                best_a = r;
            }
        }
        prev_x = x;
        prev_g = gx;
    }
    if (best_a == 0.0) throw std::runtime_error("stationary_width: bracket lost the root");
    return best_a;
}

ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              double tol) {
    if (!(hi > lo)) throw std::invalid_argument("minimize_scalar: empty bracket");
    ScalarMinimum out;
    out.bracket_lo = lo;
    out.bracket_hi = hi;

    // three-point interior test on a coarse sample
    constexpr int kProbe = 8;
    double best_x = lo, best_f = f(lo);
    for (int i = 1; i <= kProbe; ++i) {
        const double x = lo + (hi - lo) * i / kProbe;
        const double fx = f(x);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    if (best_x == lo || best_x == hi)
        throw std::runtime_error("minimize_scalar: monotone on bracket");

    // golden-section narrowing around the best probe
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = std::max(lo, best_x - (hi - lo) / kProbe);
    double b = std::min(hi, best_x + (hi - lo) / kProbe);
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int iter = 0;
    while (b - a > std::max(tol, 1e-11) && iter < 200) {
        ++iter;
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    double x = 0.5 * (a + b);

    // derivative polish on a central difference: golden section alone cannot
    // localize the minimum past sqrt(eps)
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    const auto g = [&](double t) { return (f(t + h) - f(t - h)) / (2.0 * h); };
    double ga = g(std::max(lo, x - 64.0 * h));
    double gb = g(std::min(hi, x + 64.0 * h));
    if (ga < 0.0 && gb > 0.0) {
        x = bisect_root(g, std::max(lo, x - 64.0 * h), std::min(hi, x + 64.0 * h), ga, 1e-12, iter);
    }
    out.x = x;
    out.value = f(x);
    out.gradient_norm = std::abs(g(x));
    out.iterations = iter;
    return out;
}

ScalarMinimum minimize_with_derivative(const std::function<double(double)>& f,
                                       const std::function<double(double)>& df, double lo,
                                       double hi, double tol) {
    if (!(hi > lo)) throw std::invalid_argument("minimize_with_derivative: empty bracket");
    ScalarMinimum out;
    out.bracket_lo = lo;
    out.bracket_hi = hi;

    constexpr int kScan = 128;
    int iterations = 0;
    int found = 0;
    double best_x = 0.0, best_f = std::numeric_limits<double>::infinity();
    double prev_x = lo, prev_g = df(lo);
    for (int i = 1; i <= kScan; ++i) {
        const double x = lo + (hi - lo) * i / kScan;
        const double gx = df(x);
        if ((prev_g <= 0.0) != (gx <= 0.0)) {
            const double r = bisect_root(df, prev_x, x, prev_g, tol, iterations);
            const double fr = f(r);
            ++found;
            if (fr < best_f) {
                best_f = fr;
                best_x = r;
            }
        }
        prev_x = x;
        prev_g = gx;
    }
    if (found == 0) throw std::runtime_error("minimize_with_derivative: no stationary point in bracket");
    out.x = best_x;
    out.value = best_f;
    out.gradient_norm = std::abs(df(best_x));
    out.iterations = iterations;
    out.stationary_points = found;
    return out;
}

double gaussian_energy(const ModelSpec& model, double alpha, double beta) {
    if (!(alpha > 0.0)) throw std::invalid_argument("gaussian_energy: width must be positive");
    const GaussianState1D g{beta, 1.0 / (2.0 * alpha)};
    double e = alpha / 4.0 + 0.5 * gaussian_moment(g, 2);
    switch (model.family) {
    case PotentialFamily::Harmonic: break;
    case PotentialFamily::Quartic: e += model.lambda * gaussian_moment(g, 4); break;
    case PotentialFamily::Power2n: e += model.lambda * gaussian_moment(g, 2 * model.power); break;
    case PotentialFamily::CubicQuartic:
        e += model.lambda * gaussian_moment(g, 3) + model.mu * gaussian_moment(g, 4);
        break;
    }
    return e;
}

namespace {

// Partials of the displaced-Gaussian energy for the quartic / cubic-quartic
// potentials, v = 1/(2 alpha):
//   E = alpha/4 + v/2 + beta^2/2 + lam (beta^3 + 3 beta v)
//     + mu (beta^4 + 6 beta^2 v + 3 v^2)
struct DisplacedGaussianFunctional {
    double lam = 0.0;  // cubic coupling
    double mu = 0.0;   // quartic coupling

    double value(double a, double b) const {
        const double v = 1.0 / (2.0 * a);
        return a / 4.0 + 0.5 * v + 0.5 * b * b + lam * (b * b * b + 3.0 * b * v) +
               mu * (b * b * b * b + 6.0 * b * b * v + 3.0 * v * v);
    }
    double d_alpha(double a, double b) const {
        const double v = 1.0 / (2.0 * a);
        const double dEdv = 0.5 + 3.0 * lam * b + 6.0 * mu * b * b + 6.0 * mu * v;
        return 0.25 - 2.0 * v * v * dEdv;
    }
    double d_beta(double a, double b) const {
        const double v = 1.0 / (2.0 * a);
        return b + lam * (3.0 * b * b + 3.0 * v) + mu * (4.0 * b * b * b + 12.0 * b * v);
    }
};

DisplacedGaussianFunctional displaced_functional(const ModelSpec& model) {
    DisplacedGaussianFunctional fn;
    if (model.family == PotentialFamily::Quartic) {
        fn.mu = model.lambda;
    } else {
        fn.lam = model.lambda;
        fn.mu = model.mu;
    }
    return fn;
}

// d<x^k>/d mean for a Gaussian state, by differentiating the moment recursion.
double gaussian_moment_dmean(double mean, double var, int k) {
    if (k <= 0) return 0.0;
    double m_prev2 = 1.0, m_prev1 = mean;
    double d_prev2 = 0.0, d_prev1 = 1.0;
    for (int j = 2; j <= k; ++j) {
        const double m_cur = mean * m_prev1 + (j - 1) * var * m_prev2;
        const double d_cur = m_prev1 + mean * d_prev1 + (j - 1) * var * d_prev2;
        m_prev2 = m_prev1;
        m_prev1 = m_cur;
        d_prev2 = d_prev1;
        d_prev1 = d_cur;
    }
    return d_prev1;
}

MinimizeResult from_scalar(const ScalarMinimum& s, TrialParams params, double energy,
                           std::string provenance) {
    MinimizeResult r;
    r.params_opt = std::move(params);
    r.energy_opt = energy;
    r.gradient_norm = s.gradient_norm;
    r.iterations = s.iterations;
    r.bracket_lo = s.bracket_lo;
    r.bracket_hi = s.bracket_hi;
    r.stationary_points = s.stationary_points;
    r.provenance = std::move(provenance);
    return r;
}

MinimizeResult minimize_gaussian_centered(const ModelSpec& model) {
    MinimizeResult r;
    double alpha;
    std::string provenance;
    if (model.family == PotentialFamily::Harmonic || model.lambda == 0.0) {
        alpha = 1.0;
        provenance = "harmonic_exact";
    } else if (model.family == PotentialFamily::Quartic) {
        alpha = cardano_root(model.lambda);
        provenance = "cardano_closed_form";
    } else {
        alpha = stationary_width(model.power, model.lambda);
        provenance = "derivative_root_bracketing";
    }
    r.params_opt = PositionGaussian{alpha, 0.0};
    r.energy_opt = gaussian_energy(model, alpha, 0.0);
    // residual of the analytic stationarity condition
    double dE = 0.25 - 0.25 / (alpha * alpha);
    if (model.family == PotentialFamily::Quartic)
        dE -= 3.0 * model.lambda / (2.0 * alpha * alpha * alpha);
    else if (model.family == PotentialFamily::Power2n) {
        const int n = model.power;
        const double dfac = static_cast<double>(double_factorial(2 * n - 1));
        dE -= n * model.lambda * dfac / (std::pow(2.0, n) * std::pow(alpha, n + 1));
    }
    r.gradient_norm = std::abs(dE);
    r.bracket_lo = alpha;
    r.bracket_hi = alpha;
    r.provenance = provenance;
    return r;
}

MinimizeResult minimize_coherent(const ModelSpec& model, double tol) {
    std::function<double(double)> f, df;
    switch (model.family) {
    case PotentialFamily::Harmonic:
        f = [](double g) { return g * g + 0.5; };
        df = [](double g) { return 2.0 * g; };
        break;
    case PotentialFamily::Quartic: {
        const double lam = model.lambda;
        f = [&model](double g) {
            return paper_energy(FormulaId::CoherentQuartic, Coherent{Complex(g, 0.0)}, model);
        };
        df = [lam](double g) { return 2.0 * g + lam * (16.0 * g * g * g + 12.0 * g); };
        break;
    }
    case PotentialFamily::CubicQuartic: {
        const double lam = model.lambda, mu = model.mu;
        f = [&model](double g) {
            return paper_energy(FormulaId::DisplacedCoherentCubicQuartic,
                                DisplacedMonomial{0, Complex(g, 0.0)}, model);
        };
        const double sqrt2 = std::sqrt(2.0);
        df = [lam, mu, sqrt2](double g) {
            return 2.0 * g + lam * sqrt2 * (6.0 * g * g + 3.0) + mu * (16.0 * g * g * g + 12.0 * g);
        };
        break;
    }
    case PotentialFamily::Power2n: {
        const double lam = model.lambda;
        const int k = 2 * model.power;
        f = [lam, k](double g) {
            const GaussianState1D st{std::sqrt(2.0) * g, 0.5};
            return g * g + 0.5 + lam * gaussian_moment(st, k);
        };
        df = [lam, k](double g) {
            return 2.0 * g +
                   lam * std::sqrt(2.0) * gaussian_moment_dmean(std::sqrt(2.0) * g, 0.5, k);
        };
        break;
    }
    }
    // strong cubic couplings push the displaced optimum far out; widen until
    // a stationary point is bracketed
    ScalarMinimum s;
    double width = 8.0;
    for (;; width *= 2.0) {
        try {
            s = minimize_with_derivative(f, df, -width, width, tol);
            break;
        } catch (const std::runtime_error&) {
            if (width >= 64.0) throw;
        }
    }
    TrialParams params = model.family == PotentialFamily::CubicQuartic
                             ? TrialParams(DisplacedMonomial{0, Complex(s.x, 0.0)})
                             : TrialParams(Coherent{Complex(s.x, 0.0)});
    return from_scalar(s, std::move(params), s.value, "derivative_bisection");
}

MinimizeResult minimize_squeezed(const ModelSpec& model, double tol) {
    if (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::Harmonic)
        throw std::invalid_argument("minimize_trial: squeezed functional exists for the quartic only");
    const double lam = model.lambda;
    const auto f = [&model](double a) {
        return paper_energy(FormulaId::SqueezedQuartic, BargmannSqueezed{a}, model);
    };
    const auto df = [lam](double a) {
        const double s = 4.0 * a * a;
        const double u = (1.0 + s) / (1.0 - s);
        const double du = 16.0 * a / ((1.0 - s) * (1.0 - s));
        return (0.5 + 1.5 * lam * u) * du;
    };
    const ScalarMinimum s = minimize_with_derivative(f, df, -0.49, 0.49, tol);
    return from_scalar(s, BargmannSqueezed{s.x}, s.value, "derivative_bisection");
}

}  // namespace

MinimizeResult minimize_displaced(const ModelSpec& model, const TrialParams& init, double tol) {
    if (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::CubicQuartic)
        throw std::invalid_argument("minimize_displaced: model must be quartic or cubic-quartic");
    const Admissibility adm = check_admissible(init);
    if (!adm.ok) throw std::invalid_argument("minimize_displaced: inadmissible start: " + adm.diagnostic);

    if (const auto* dm = std::get_if<DisplacedMonomial>(&init)) {
        if (dm->n != 0)
            throw std::invalid_argument("minimize_displaced: only the n = 0 displaced state");
        if (model.family != PotentialFamily::CubicQuartic)
            throw std::invalid_argument("minimize_displaced: displaced coherent state needs the "
                                        "cubic-quartic model");
        return minimize_coherent(model, tol);
    }

    const auto* pg = std::get_if<PositionGaussian>(&init);
    if (!pg)
        throw std::invalid_argument("minimize_displaced: family must be a position Gaussian or the "
                                    "n = 0 displaced state");

    const DisplacedGaussianFunctional fn = displaced_functional(model);
    double alpha = pg->alpha;
    double beta = pg->beta;
    int sweeps = 0;
    int total_iter = 0;
    constexpr int kMaxSweeps = 100;
    for (; sweeps < kMaxSweeps; ++sweeps) {
        const double alpha_prev = alpha, beta_prev = beta;
        {
            const auto f = [&](double a) { return fn.value(a, beta); };
            const auto df = [&](double a) { return fn.d_alpha(a, beta); };
            const ScalarMinimum s = minimize_with_derivative(f, df, 0.02, 32.0, tol * 0.01);
            alpha = s.x;
            total_iter += s.iterations;
        }
        {
            const auto f = [&](double b) { return fn.value(alpha, b); };
            const auto df = [&](double b) { return fn.d_beta(alpha, b); };
            const ScalarMinimum s = minimize_with_derivative(f, df, -8.0, 8.0, tol * 0.01);
            beta = s.x;
            total_iter += s.iterations;
        }
        if (std::abs(alpha - alpha_prev) < tol && std::abs(beta - beta_prev) < tol) break;
    }
    if (sweeps == kMaxSweeps)
        throw std::runtime_error("minimize_displaced: coordinate sweeps did not converge");

    MinimizeResult r;
    r.params_opt = PositionGaussian{alpha, beta};
    r.energy_opt = fn.value(alpha, beta);
    r.gradient_norm = std::hypot(fn.d_alpha(alpha, beta), fn.d_beta(alpha, beta));
    r.iterations = total_iter;
    r.bracket_lo = 0.02;
    r.bracket_hi = 32.0;
    r.provenance = "alternating_coordinate_minimization";
    return r;
}

MinimizeResult minimize_trial(const ModelSpec& model, const std::string& family, int monomial_n,
                              double tol) {
    if (family == "gaussian") {
        if (model.family == PotentialFamily::CubicQuartic)
            return minimize_displaced(model, PositionGaussian{1.0, -0.1}, tol);
        return minimize_gaussian_centered(model);
    }
    if (family == "coherent") return minimize_coherent(model, tol);
    if (family == "squeezed") return minimize_squeezed(model, tol);
    if (family == "monomial") {
        if (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::Harmonic)
            throw std::invalid_argument("minimize_trial: monomial energies exist for the quartic only");
        if (monomial_n < 0) throw std::invalid_argument("minimize_trial: monomial n must be >= 0");
        MinimizeResult r;
        r.params_opt = Monomial{monomial_n};
        r.energy_opt = paper_energy(FormulaId::MonomialQuartic, Monomial{monomial_n}, model);
        r.provenance = "closed_form_no_free_parameter";
        return r;
    }
    throw std::invalid_argument("minimize_trial: unknown family '" + family +
                                "' (expected gaussian | coherent | squeezed | monomial)");
}

std::vector<double> log_grid(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) throw std::invalid_argument("log_grid: bad range");
    std::vector<double> g(count);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i) g[i] = std::exp(llo + (lhi - llo) * i / (count - 1));
    return g;
}

std::vector<double> default_fit_grid() { return log_grid(1e-4, 1e-2, 20); }

SeriesFit fit_series(const std::function<double(double)>& f, const std::vector<double>& grid,
                     int max_order) {
    if (grid.empty()) throw std::invalid_argument("fit_series: empty grid");
    if (max_order < 1 || max_order > 3) throw std::invalid_argument("fit_series: max_order must be 1..3");
    if (static_cast<int>(grid.size()) < max_order + 2)
        throw std::invalid_argument("fit_series: grid too small for requested order");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw std::invalid_argument("fit_series: grid must be positive");
        if (i > 0 && grid[i] <= grid[i - 1]) throw std::invalid_argument("fit_series: grid must ascend");
    }

    const int rows = static_cast<int>(grid.size());
    const int cols = max_order + 1;
    std::vector<std::vector<double>> design(rows, std::vector<double>(cols));
    std::vector<double> rhs(rows);
    for (int i = 0; i < rows; ++i) {
        double p = 1.0;
        for (int j = 0; j < cols; ++j) {
            design[i][j] = p;
            p *= grid[i];
        }
        rhs[i] = f(grid[i]);
    }

    const linalg::LeastSquaresFit ls = linalg::qr_least_squares(design, rhs);
    SeriesFit fit;
    fit.coefficients = ls.coefficients;
    fit.lambda_grid = grid;
    fit.residual = ls.residual_norm / std::sqrt(static_cast<double>(rows));
    fit.condition = ls.condition_estimate;
    fit.reliable = ls.condition_estimate < 1e8;
    return fit;
}

namespace series {

double width_linear_coefficient(int n) {
    return n * static_cast<double>(double_factorial(2 * n - 1)) / std::pow(2.0, n - 1);
}

double gauss_quartic_energy_c1() { return 0.75; }

double gauss_quartic_energy_c2() { return -2.25; }

double displaced_coherent_energy_c2(double mu) { return -4.5 / (1.0 + 6.0 * mu); }

}  // namespace series

Json to_json(const MinimizeResult& r) {
    Json j = Json::object();
    j.set("params_opt", to_json(r.params_opt));
    j.set("energy_opt", r.energy_opt);
    j.set("gradient_norm", r.gradient_norm);
    j.set("iterations", r.iterations);
    Json bracket = Json::array();
    bracket.push(r.bracket_lo);
    bracket.push(r.bracket_hi);
    j.set("bracket_used", std::move(bracket));
    j.set("stationary_points", r.stationary_points);
    j.set("provenance", r.provenance);
    return j;
}

Json to_json(const SeriesFit& f) {
    Json j = Json::object();
    Json coeffs = Json::array();
    for (std::size_t o = 0; o < f.coefficients.size(); ++o) {
        Json c = Json::object();
        c.set("order", static_cast<long long>(o));
        c.set("value", f.coefficients[o]);
        coeffs.push(std::move(c));
    }
    j.set("coefficients", std::move(coeffs));
    Json grid = Json::array();
    for (double v : f.lambda_grid) grid.push(v);
    j.set("lambda_grid", std::move(grid));
    j.set("residual", f.residual);
    j.set("condition", f.condition);
    j.set("reliable", f.reliable);
    return j;
}

}  // namespace vw

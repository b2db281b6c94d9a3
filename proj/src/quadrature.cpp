#include "vw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "vw/linalg.hpp"
#include "vw/moments.hpp"

namespace vw {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Orthonormal Hermite polynomial value and the scaled derivative used by the
// weight formula w = 2 / (h'_n(x))^2, with h'_n(x) = sqrt(2n) h_{n-1}(x).
void hermite_pair(int n, double x, double& value, double& derivative) {
    constexpr double pim4 = 0.7511255444649425;  // pi^{-1/4}
    double p1 = pim4;
    double p2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = x * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
    }
    value = p1;
    derivative = std::sqrt(2.0 * n) * p2;
}

// Nodes and weights for the weight exp(-t^2). The nodes are the eigenvalues
// of the Hermite Jacobi matrix (certified by Sturm bisection, so high orders
// cannot collapse neighboring roots), polished by Newton on the recurrence.
void gauss_hermite_nodes(int n, std::vector<double>& x, std::vector<double>& w) {
    std::vector<double> jac_diag(n, 0.0);
    std::vector<double> jac_off(n - 1);
    for (int i = 1; i < n; ++i) jac_off[i - 1] = std::sqrt(0.5 * i);
    x = linalg::sturm_tridiagonal_eigenvalues(jac_diag, jac_off, n, 1e-13);
    w.assign(n, 0.0);

    for (int i = 0; i < n; ++i) {
        double z = x[i];
        if (n % 2 == 1 && i == n / 2) z = 0.0;  // middle root is exact
        double value = 0.0, derivative = 0.0;
        for (int step = 0; step < 4; ++step) {
            hermite_pair(n, z, value, derivative);
            const double dz = value / derivative;
            z -= dz;
            if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        hermite_pair(n, z, value, derivative);
        x[i] = z;
        w[i] = 2.0 / (derivative * derivative);
    }
    // enforce exact reflection symmetry of the rule
    for (int i = 0; i < n / 2; ++i) {
        const double node = 0.5 * (x[n - 1 - i] - x[i]);
        x[i] = -node;
        x[n - 1 - i] = node;
        const double weight = 0.5 * (w[i] + w[n - 1 - i]);
        w[i] = weight;
        w[n - 1 - i] = weight;
    }
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double v) {
        const double y = v - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

HoloTrial add(const HoloTrial& a, const HoloTrial& b) {
    if (a.quad_coeff != b.quad_coeff || a.lin_coeff != b.lin_coeff)
        throw std::logic_error("HoloTrial add: mismatched exponents");
    HoloTrial out = a;
    if (b.poly.size() > out.poly.size()) out.poly.resize(b.poly.size(), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < b.poly.size(); ++k) out.poly[k] += b.poly[k];
    return out;
}

HoloTrial scale(HoloTrial t, Complex c) {
    for (auto& p : t.poly) p *= c;
    return t;
}

HoloTrial apply_x(const HoloTrial& t) {
    return scale(add(t.multiply_by_z(), t.apply_derivative()), Complex(1.0 / std::sqrt(2.0), 0.0));
}

HoloTrial apply_x_power(HoloTrial t, int k) {
    for (int i = 0; i < k; ++i) t = apply_x(t);
    return t;
}

// (z - d/dz) applied twice, times -1/2.
HoloTrial apply_p2(const HoloTrial& t) {
    auto minus = [](const HoloTrial& u) {
        return add(u.multiply_by_z(), scale(u.apply_derivative(), Complex(-1.0, 0.0)));
    };
    return scale(minus(minus(t)), Complex(-0.5, 0.0));
}

HoloTrial apply_number(const HoloTrial& t) { return t.apply_derivative().multiply_by_z(); }

HoloTrial apply_hamiltonian(const ModelSpec& model, const HoloTrial& t) {
    // harmonic part z d/dz + 1/2
    HoloTrial h = add(apply_number(t), scale(t, Complex(0.5, 0.0)));
    switch (model.family) {
    case PotentialFamily::Harmonic:
        break;
    case PotentialFamily::Quartic:
        h = add(h, scale(apply_x_power(t, 4), Complex(model.lambda, 0.0)));
        break;
    case PotentialFamily::Power2n:
        h = add(h, scale(apply_x_power(t, 2 * model.power), Complex(model.lambda, 0.0)));
        break;
    case PotentialFamily::CubicQuartic:
        h = add(h, scale(apply_x_power(t, 3), Complex(model.lambda, 0.0)));
        h = add(h, scale(apply_x_power(t, 4), Complex(model.mu, 0.0)));
        break;
    }
    return h;
}

void require_admissible_holo(const TrialParams& t) {
    const Admissibility adm = check_admissible(t);
    if (!adm.ok) throw std::invalid_argument("quadrature: inadmissible trial: " + adm.diagnostic);
}

Complex inner_at_order(const HoloTrial& f, const HoloTrial& g, int order) {
    const QuadratureGrid& grid = QuadratureGrid::gauss_hermite(order);
    KahanSum re, im;
    for (int i = 0; i < order; ++i) {
        const double xi = grid.nodes[i];
        const double lwi = grid.log_weights[i];
        for (int j = 0; j < order; ++j) {
            const Complex z(xi, grid.nodes[j]);
            const Complex pf = std::conj(f.poly_value(z));
            const Complex pg = g.poly_value(z);
            const Complex expo = std::conj(f.exponent(z)) + g.exponent(z);
            // weights folded into the exponent: never overflows for
            // admissible trials, underflow means a negligible contribution
            const double mag = expo.real() + lwi + grid.log_weights[j];
            const Complex val = pf * pg * std::exp(Complex(mag, expo.imag()));
            re.add(val.real());
            im.add(val.imag());
        }
    }
    return Complex(re.sum / kPi, im.sum / kPi);
}

double ratio_at_order(const HoloTrial& t, const HoloTrial& op_t, int order) {
    const Complex num = inner_at_order(t, op_t, order);
    const Complex den = inner_at_order(t, t, order);
    return num.real() / den.real();
}

QuadratureValue checked_ratio(const HoloTrial& t, const HoloTrial& op_t, int order,
                              double stability_tol) {
    if (order < kMinQuadratureOrder)
        throw std::invalid_argument("quadrature: order below minimum of 8");
    if (2 * order > kMaxQuadratureOrder)
        throw std::invalid_argument("quadrature: doubled order exceeds cap of 256");
    const double v1 = ratio_at_order(t, op_t, order);
    const double v2 = ratio_at_order(t, op_t, 2 * order);
    QuadratureValue out;
    out.value = v2;  // the doubled order is the reported value
    out.stability = std::abs(v2 - v1);
    out.stable = out.stability < stability_tol * std::max(1.0, std::abs(v2));
    return out;
}

}  // namespace

const QuadratureGrid& QuadratureGrid::gauss_hermite(int order) {
    if (order < 1 || order > kMaxQuadratureOrder)
        throw std::invalid_argument("gauss_hermite: order out of range");
    static std::map<int, QuadratureGrid> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    QuadratureGrid g;
    g.order = order;
    gauss_hermite_nodes(order, g.nodes, g.weights);
    g.log_weights.resize(order);
    for (int i = 0; i < order; ++i) g.log_weights[i] = std::log(g.weights[i]);
    return cache.emplace(order, std::move(g)).first->second;
}

HoloTrial HoloTrial::generalized_gaussian(Complex a, Complex b) {
    HoloTrial t;
    t.quad_coeff = a;
    t.lin_coeff = b;
    return t;
}

HoloTrial position_gaussian_in_bargmann(double alpha, double beta) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("position_gaussian_in_bargmann: width must be positive");
    const double a = 0.5 * (1.0 - alpha) / (1.0 + alpha);
    const double b = beta * (1.0 - 2.0 * a) / std::sqrt(2.0);
    return HoloTrial::generalized_gaussian(Complex(a, 0.0), Complex(b, 0.0));
}

HoloTrial HoloTrial::from_trial(const TrialParams& t) {
    require_admissible_holo(t);
    if (const auto* g = std::get_if<PositionGaussian>(&t)) {
        return position_gaussian_in_bargmann(g->alpha, g->beta);
    }
    if (const auto* c = std::get_if<Coherent>(&t)) {
        return generalized_gaussian(Complex(0.0, 0.0), c->gamma);
    }
    if (const auto* s = std::get_if<BargmannSqueezed>(&t)) {
        return generalized_gaussian(Complex(s->alpha, 0.0), Complex(0.0, 0.0));
    }
    if (const auto* m = std::get_if<Monomial>(&t)) {
        HoloTrial out;
        out.poly.assign(m->n + 1, Complex(0.0, 0.0));
        out.poly[m->n] = Complex(1.0, 0.0);
        return out;
    }
    const auto& d = std::get<DisplacedMonomial>(t);
    // displaced Fock state: (z - conj(gamma))^n exp(gamma z)
    HoloTrial out;
    out.lin_coeff = d.gamma;
    out.poly.assign(1, Complex(1.0, 0.0));
    for (int i = 0; i < d.n; ++i) {
        std::vector<Complex> next(out.poly.size() + 1, Complex(0.0, 0.0));
        for (std::size_t k = 0; k < out.poly.size(); ++k) {
            next[k + 1] += out.poly[k];
            next[k] -= std::conj(d.gamma) * out.poly[k];
        }
        out.poly = std::move(next);
    }
    return out;
}

Complex HoloTrial::poly_value(Complex z) const {
    Complex acc(0.0, 0.0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex HoloTrial::exponent(Complex z) const { return (quad_coeff * z + lin_coeff) * z; }

HoloTrial HoloTrial::apply_derivative() const {
    HoloTrial out = *this;
    const std::size_t m = poly.size();
    out.poly.assign(m + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k + 1 < m; ++k)
        out.poly[k] += static_cast<double>(k + 1) * poly[k + 1];  // P'
    for (std::size_t k = 0; k < m; ++k) {
        out.poly[k] += lin_coeff * poly[k];                // b P
        out.poly[k + 1] += 2.0 * quad_coeff * poly[k];     // 2 a z P
    }
    while (out.poly.size() > 1 && out.poly.back() == Complex(0.0, 0.0)) out.poly.pop_back();
    return out;
}

HoloTrial HoloTrial::multiply_by_z() const {
    HoloTrial out = *this;
    out.poly.assign(poly.size() + 1, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < poly.size(); ++k) out.poly[k + 1] = poly[k];
    return out;
}

Complex bargmann_inner(const HoloTrial& f, const HoloTrial& g, int order) {
    if (order < kMinQuadratureOrder) throw std::invalid_argument("bargmann_inner: order below minimum of 8");
    if (order > kMaxQuadratureOrder) throw std::invalid_argument("bargmann_inner: order exceeds cap of 256");
    return inner_at_order(f, g, order);
}

QuadratureValue bargmann_inner_checked(const HoloTrial& f, const HoloTrial& g, int order,
                                       double stability_tol) {
    if (order < kMinQuadratureOrder)
        throw std::invalid_argument("bargmann_inner_checked: order below minimum of 8");
    if (2 * order > kMaxQuadratureOrder)
        throw std::invalid_argument("bargmann_inner_checked: doubled order exceeds cap of 256");
    const double v1 = inner_at_order(f, g, order).real();
    const double v2 = inner_at_order(f, g, 2 * order).real();
    QuadratureValue out;
    out.value = v2;
    out.stability = std::abs(v2 - v1);
    out.stable = out.stability < stability_tol * std::max(1.0, std::abs(v2));
    return out;
}

QuadratureValue bargmann_expectation(Observable obs, const std::optional<ModelSpec>& model,
                                     const TrialParams& t, int order) {
    const HoloTrial trial = HoloTrial::from_trial(t);
    HoloTrial op_t;
    switch (obs) {
    case Observable::Number: op_t = apply_number(trial); break;
    case Observable::X: op_t = apply_x_power(trial, 1); break;
    case Observable::X2: op_t = apply_x_power(trial, 2); break;
    case Observable::X3: op_t = apply_x_power(trial, 3); break;
    case Observable::X4: op_t = apply_x_power(trial, 4); break;
    case Observable::P2: op_t = apply_p2(trial); break;
    case Observable::ModelHamiltonian:
        if (!model) throw std::invalid_argument("bargmann_expectation: Hamiltonian needs a model");
        op_t = apply_hamiltonian(*model, trial);
        break;
    }
    return checked_ratio(trial, op_t, order, 1e-9);
}

QuadratureValue bargmann_x_moment(const TrialParams& t, int k, int order) {
    if (k < 0) throw std::invalid_argument("bargmann_x_moment: k must be >= 0");
    const HoloTrial trial = HoloTrial::from_trial(t);
    return checked_ratio(trial, apply_x_power(trial, k), order, 1e-9);
}

QuadratureValue anisotropy_quadrature(double alpha, int order) {
    const TrialParams t = BargmannSqueezed{alpha};
    require_admissible_holo(t);
    const HoloTrial trial = HoloTrial::from_trial(t);
    const HoloTrial x2 = apply_x_power(trial, 2);
    const HoloTrial p2 = apply_p2(trial);
    const QuadratureValue vx = checked_ratio(trial, x2, order, 1e-9);
    const QuadratureValue vp = checked_ratio(trial, p2, order, 1e-9);
    QuadratureValue out;
    out.value = vx.value - vp.value;
    out.stability = vx.stability + vp.stability;
    out.stable = vx.stable && vp.stable;
    return out;
}

ValidationRecord validate_formula(FormulaId id, const ValidateParams& p, int order) {
    Json params = Json::object();
    params.set("observable", p.observable);

    switch (id) {
    case FormulaId::NormSquaredPaper: {
        params.set("observable", "norm_squared");
        params.set("alpha", p.alpha);
        const double paper = paper_norm_squared(p.alpha);
        const HoloTrial t = HoloTrial::generalized_gaussian(Complex(p.alpha, 0.0), Complex(0.0, 0.0));
        const QuadratureValue q = bargmann_inner_checked(t, t, order, 1e-9);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::AnisotropyPaper: {
        params.set("observable", "x2_minus_p2");
        params.set("alpha", p.alpha);
        const double paper = paper_anisotropy(p.alpha);
        const QuadratureValue q = anisotropy_quadrature(p.alpha, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::SqueezedQuartic: {
        params.set("alpha", p.alpha);
        params.set("lambda", p.lambda);
        const TrialParams t = BargmannSqueezed{p.alpha};
        const ModelSpec model = quartic_model(p.lambda);
        if (p.observable == "x2") {
            const double paper = paper_squeezed_x2(p.alpha);
            const QuadratureValue q = bargmann_expectation(Observable::X2, std::nullopt, t, order);
            return make_validation_record(id, std::move(params), paper, q.value, q.stable);
        }
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::CoherentQuartic: {
        params.set("gamma", p.gamma);
        params.set("lambda", p.lambda);
        const TrialParams t = Coherent{Complex(p.gamma, 0.0)};
        const ModelSpec model = quartic_model(p.lambda);
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::MonomialQuartic: {
        params.set("n", p.n);
        params.set("lambda", p.lambda);
        const TrialParams t = Monomial{p.n};
        const ModelSpec model = quartic_model(p.lambda);
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::GaussQuartic: {
        params.set("alpha", p.alpha);
        params.set("lambda", p.lambda);
        const TrialParams t = PositionGaussian{p.alpha, 0.0};
        const ModelSpec model = quartic_model(p.lambda);
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::GaussPower2n: {
        params.set("alpha", p.alpha);
        params.set("lambda", p.lambda);
        params.set("n", p.n);
        const TrialParams t = PositionGaussian{p.alpha, 0.0};
        const ModelSpec model = power_model(p.n, p.lambda);
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::GaussDim: {
        params.set("alpha", p.alpha);
        params.set("lambda", p.lambda);
        params.set("n", p.n);
        params.set("d", p.d);
        const TrialParams t = PositionGaussian{p.alpha, 0.0};
        const ModelSpec model = power_model(p.n, p.lambda, p.d);
        const ModelSpec single = power_model(p.n, p.lambda, 1);
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q =
            bargmann_expectation(Observable::ModelHamiltonian, single, t, order);
        return make_validation_record(id, std::move(params), paper,
                                      dimension_total_energy(p.d, q.value), q.stable);
    }
    case FormulaId::DisplacedGaussianQuartic: {
        params.set("alpha", p.alpha);
        params.set("beta", p.beta);
        params.set("lambda", p.lambda);
        const TrialParams t = PositionGaussian{p.alpha, p.beta};
        const ModelSpec model = quartic_model(p.lambda);
        const double paper = paper_energy(id, t, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    case FormulaId::DisplacedCoherentCubicQuartic: {
        params.set("gamma", p.gamma);
        params.set("lambda", p.lambda);
        params.set("mu", p.mu);
        const TrialParams t = Coherent{Complex(p.gamma, 0.0)};
        if (p.observable == "x3") {
            const double paper = paper_coherent_x3(p.gamma);
            const QuadratureValue q = bargmann_expectation(Observable::X3, std::nullopt, t, order);
            return make_validation_record(id, std::move(params), paper, q.value, q.stable);
        }
        const ModelSpec model = cubic_quartic_model(p.lambda, p.mu);
        const TrialParams td = DisplacedMonomial{0, Complex(p.gamma, 0.0)};
        const double paper = paper_energy(id, td, model);
        const QuadratureValue q = bargmann_expectation(Observable::ModelHamiltonian, model, t, order);
        return make_validation_record(id, std::move(params), paper, q.value, q.stable);
    }
    default:
        throw std::invalid_argument("validate_formula: " + formula_name(id) +
                                    " has no quadrature counterpart");
    }
}

}  // namespace vw

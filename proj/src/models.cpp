#include "vw/models.hpp"

#include <cmath>
#include <stdexcept>

namespace vw {

ModelSpec make_model(PotentialFamily family, const Couplings& c, int dim) {
    if (dim < 1) throw std::invalid_argument("make_model: dim must be >= 1");
    ModelSpec m;
    m.family = family;
    m.dim = dim;
    switch (family) {
    case PotentialFamily::Harmonic:
        break;
    case PotentialFamily::Quartic:
        if (c.lambda < 0.0) throw std::invalid_argument("make_model: quartic lambda must be >= 0");
        m.lambda = c.lambda;
        break;
    case PotentialFamily::Power2n:
        if (c.lambda < 0.0) throw std::invalid_argument("make_model: power2n lambda must be >= 0");
        if (c.power < 2) throw std::invalid_argument("make_model: power index n must be >= 2");
        m.lambda = c.lambda;
        m.power = c.power;
        break;
    case PotentialFamily::CubicQuartic:
        // mu = 0 leaves the x^3 term unbounded below; rejected outright.
        if (c.mu <= 0.0) throw std::invalid_argument("make_model: cubic-quartic mu must be > 0");
        m.lambda = c.lambda;
        m.mu = c.mu;
        break;
    }
    return m;
}

ModelSpec harmonic_model(int dim) { return make_model(PotentialFamily::Harmonic, {}, dim); }

ModelSpec quartic_model(double lambda, int dim) {
    Couplings c;
    c.lambda = lambda;
    return make_model(PotentialFamily::Quartic, c, dim);
}

ModelSpec power_model(int n, double lambda, int dim) {
    Couplings c;
    c.lambda = lambda;
    c.power = n;
    return make_model(PotentialFamily::Power2n, c, dim);
}

ModelSpec cubic_quartic_model(double lambda, double mu, int dim) {
    Couplings c;
    c.lambda = lambda;
    c.mu = mu;
    return make_model(PotentialFamily::CubicQuartic, c, dim);
}

double potential_value(const ModelSpec& model, double x) {
    const double x2 = x * x;
    switch (model.family) {
    case PotentialFamily::Harmonic:
        return 0.5 * x2;
    case PotentialFamily::Quartic:
        return 0.5 * x2 + model.lambda * x2 * x2;
    case PotentialFamily::Power2n:
        return 0.5 * x2 + model.lambda * std::pow(x2, model.power);
    case PotentialFamily::CubicQuartic:
        return 0.5 * x2 + model.lambda * x2 * x + model.mu * x2 * x2;
    }
    return 0.0;
}

double dimension_total_energy(int d, double e1) {
    if (d < 1) throw std::invalid_argument("dimension_total_energy: d must be >= 1");
    return static_cast<double>(d) * e1;
}

bool is_even_potential(const ModelSpec& model) {
    return model.family != PotentialFamily::CubicQuartic || model.lambda == 0.0;
}

std::string family_name(PotentialFamily family) {
    switch (family) {
    case PotentialFamily::Harmonic: return "harmonic";
    case PotentialFamily::Quartic: return "quartic";
    case PotentialFamily::Power2n: return "power2n";
    case PotentialFamily::CubicQuartic: return "cubic_quartic";
    }
    return "unknown";
}

PotentialFamily family_from_name(const std::string& name) {
    if (name == "harmonic") return PotentialFamily::Harmonic;
    if (name == "quartic") return PotentialFamily::Quartic;
    if (name == "power2n") return PotentialFamily::Power2n;
    if (name == "cubic_quartic") return PotentialFamily::CubicQuartic;
    throw std::invalid_argument("unknown model family: " + name);
}

double physical_width(double mass, double omega, double hbar, double alpha_dimensionless) {
    if (mass <= 0 || omega <= 0 || hbar <= 0)
        throw std::invalid_argument("physical_width: mass, omega, hbar must be positive");
    return mass * omega / hbar * alpha_dimensionless;
}

Json to_json(const ModelSpec& model) {
    Json j = Json::object();
    j.set("family", family_name(model.family));
    j.set("lambda", model.lambda);
    j.set("mu", model.mu);
    if (model.family == PotentialFamily::Power2n) {
        j.set("n", model.power);
    } else {
        j.set("n", nullptr);
    }
    j.set("d", model.dim);
    return j;
}

}  // namespace vw

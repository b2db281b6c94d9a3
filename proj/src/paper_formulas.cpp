#include "vw/paper_formulas.hpp"

#include <cmath>
#include <stdexcept>

#include "vw/moments.hpp"

namespace vw {

namespace {

const char* kNames[] = {
    "gauss_quartic",
    "gauss_power2n",
    "gauss_dim",
    "coherent_quartic",
    "squeezed_quartic",
    "monomial_quartic",
    "displaced_gaussian_quartic",
    "displaced_coherent_cubic_quartic",
    "anisotropy_paper",
    "norm_squared_paper",
    "expansion_gauss_quartic",
    "expansion_alpha_power",
    "expansion_e0_power",
    "expansion_displaced",
};

void require_admissible(const TrialParams& t) {
    const Admissibility adm = check_admissible(t);
    if (!adm.ok) throw std::invalid_argument("paper_energy: inadmissible trial: " + adm.diagnostic);
}

[[noreturn]] void mismatch(FormulaId id) {
    throw std::invalid_argument("paper_energy: trial family or model does not match formula " +
                                formula_name(id));
}

double real_gamma(const TrialParams& t, FormulaId id) {
    if (const auto* c = std::get_if<Coherent>(&t)) {
        if (c->gamma.imag() != 0.0)
            throw std::invalid_argument("paper_energy: formula is stated for real gamma");
        return c->gamma.real();
    }
    if (const auto* d = std::get_if<DisplacedMonomial>(&t)) {
        if (d->n != 0 || d->gamma.imag() != 0.0)
            throw std::invalid_argument("paper_energy: only the n=0 displaced state with real gamma");
        return d->gamma.real();
    }
    mismatch(id);
}

}  // namespace

std::string formula_name(FormulaId id) { return kNames[static_cast<int>(id)]; }

FormulaId formula_from_name(const std::string& name) {
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i)
        if (name == kNames[i]) return static_cast<FormulaId>(i);
    throw std::invalid_argument("unknown formula id: " + name);
}

std::vector<FormulaId> all_formula_ids() {
    std::vector<FormulaId> out;
    for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i)
        out.push_back(static_cast<FormulaId>(i));
    return out;
}

double paper_energy(FormulaId id, const TrialParams& t, const ModelSpec& model) {
    require_admissible(t);
    switch (id) {
    case FormulaId::GaussQuartic: {
        const auto* g = std::get_if<PositionGaussian>(&t);
        if (!g ||
            (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::Harmonic))
            mismatch(id);
        const double a = g->alpha;
        return a / 4.0 + 1.0 / (4.0 * a) + 3.0 * model.lambda / (4.0 * a * a);
    }
    case FormulaId::GaussPower2n: {
        const auto* g = std::get_if<PositionGaussian>(&t);
        if (!g || model.family != PotentialFamily::Power2n) mismatch(id);
        const double a = g->alpha;
        const double moment =
            static_cast<double>(double_factorial(2 * model.power - 1)) /
            std::pow(2.0 * a, model.power);
        return a / 4.0 + 1.0 / (4.0 * a) + model.lambda * moment;
    }
    case FormulaId::GaussDim: {
        ModelSpec single = model;
        single.dim = 1;
        if (model.family == PotentialFamily::Quartic)
            return dimension_total_energy(model.dim, paper_energy(FormulaId::GaussQuartic, t, single));
        if (model.family == PotentialFamily::Power2n)
            return dimension_total_energy(model.dim, paper_energy(FormulaId::GaussPower2n, t, single));
        mismatch(id);
    }
    case FormulaId::CoherentQuartic: {
        if (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::Harmonic)
            mismatch(id);
        const double g = real_gamma(t, id);
        const double g2 = g * g;
        return g2 + 0.5 + model.lambda * (4.0 * g2 * g2 + 6.0 * g2 + 0.75);
    }
    case FormulaId::SqueezedQuartic: {
        const auto* s = std::get_if<BargmannSqueezed>(&t);
        if (!s ||
            (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::Harmonic))
            mismatch(id);
        const double a2 = 4.0 * s->alpha * s->alpha;
        const double u = (1.0 + a2) / (1.0 - a2);
        return 0.5 * u + model.lambda * 0.75 * u * u;
    }
    case FormulaId::MonomialQuartic: {
        const auto* m = std::get_if<Monomial>(&t);
        if (!m ||
            (model.family != PotentialFamily::Quartic && model.family != PotentialFamily::Harmonic))
            mismatch(id);
        const double n = m->n;
        return n + 0.5 + 0.75 * model.lambda * (2.0 * n * n + 2.0 * n + 1.0);
    }
    case FormulaId::DisplacedGaussianQuartic: {
        const auto* g = std::get_if<PositionGaussian>(&t);
        if (!g || model.family != PotentialFamily::Quartic) mismatch(id);
        const double a = g->alpha;
        const double b = g->beta;
        return a / 4.0 + 1.0 / (4.0 * a) + 0.5 * b * b +
               model.lambda * (0.75 / (a * a) + 1.5 * b * b / a + b * b * b * b);
    }
    case FormulaId::DisplacedCoherentCubicQuartic: {
        if (model.family != PotentialFamily::CubicQuartic) mismatch(id);
        const double g = real_gamma(t, id);
        const double g2 = g * g;
        const double sqrt2 = std::sqrt(2.0);
        return g2 + 0.5 + model.lambda * (2.0 * sqrt2 * g2 * g + 3.0 * sqrt2 * g) +
               model.mu * (4.0 * g2 * g2 + 6.0 * g2 + 0.75);
    }
    default:
        throw std::invalid_argument("paper_energy: " + formula_name(id) + " is not an energy functional");
    }
}

double paper_anisotropy(double alpha) {
    if (std::abs(alpha) >= 0.5) throw std::invalid_argument("paper_anisotropy: |alpha| must be < 1/2");
    const double a2 = alpha * alpha;
    return 8.0 * a2 / (1.0 - 16.0 * a2 * a2);
}

double paper_squeezed_x2(double alpha) {
    if (std::abs(alpha) >= 0.5) throw std::invalid_argument("paper_squeezed_x2: |alpha| must be < 1/2");
    const double a2 = 4.0 * alpha * alpha;
    return 0.5 * (1.0 + a2) / (1.0 - a2);
}

double paper_squeezed_p2(double alpha) {
    if (std::abs(alpha) >= 0.5) throw std::invalid_argument("paper_squeezed_p2: |alpha| must be < 1/2");
    const double a2 = 4.0 * alpha * alpha;
    return 0.5 * (1.0 - a2) / (1.0 + a2);
}

double paper_coherent_x3(double gamma) {
    const double sqrt2 = std::sqrt(2.0);
    return 2.0 * sqrt2 * gamma * gamma * gamma + 3.0 * sqrt2 * gamma;
}

double paper_norm_squared(double alpha) {
    if (std::abs(alpha) >= 0.5) throw std::invalid_argument("paper_norm_squared: |alpha| must be < 1/2");
    return 1.0 / std::sqrt(1.0 - 4.0 * alpha * alpha);
}

double paper_expansion(FormulaId id, const ExpansionInputs& in) {
    switch (id) {
    case FormulaId::ExpansionGaussQuartic:
        return 0.5 + 0.75 * in.lambda - (21.0 / 8.0) * in.lambda * in.lambda;
    case FormulaId::ExpansionAlphaPower:
        return 1.0 - in.power * (2.0 * in.power - 1.0) * in.lambda;
    case FormulaId::ExpansionE0Power:
        return 0.5 + in.lambda * static_cast<double>(double_factorial(2 * in.power - 1)) /
                         std::pow(2.0, in.power);
    case FormulaId::ExpansionDisplaced:
        return 0.5 + 0.75 * in.mu - 2.25 * in.lambda * in.lambda;
    default:
        throw std::invalid_argument("paper_expansion: " + formula_name(id) + " is not an expansion");
    }
}

ValidationRecord make_validation_record(FormulaId id, Json params, double paper_value,
                                        double oracle_value, bool stable) {
    ValidationRecord r;
    r.formula = id;
    r.params = std::move(params);
    r.paper_value = paper_value;
    r.oracle_value = oracle_value;
    r.abs_dev = std::abs(paper_value - oracle_value);
    const double scale = std::max(std::abs(paper_value), std::abs(oracle_value));
    // when both sides are essentially zero the absolute deviation is the
    // honest measure; a ratio of two roundoff-level numbers is noise
    r.rel_dev = scale >= 1e-8 ? r.abs_dev / scale : r.abs_dev;
    r.stable = stable;
    return r;
}

Json to_json(const ValidationRecord& r) {
    Json j = Json::object();
    j.set("formula", formula_name(r.formula));
    j.set("params", r.params);
    j.set("paper_value", r.paper_value);
    j.set("oracle_value", r.oracle_value);
    j.set("abs_dev", r.abs_dev);
    j.set("rel_dev", r.rel_dev);
    j.set("stable", r.stable);
    return j;
}

}  // namespace vw

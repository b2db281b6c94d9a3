#pragma once

#include <string>
#include <vector>

#include "vw/json_writer.hpp"
#include "vw/models.hpp"
#include "vw/trial_families.hpp"

namespace vw {

/// Closed-form energy functionals, identities, and truncated expansions,
/// reproduced exactly as published. Formulas known to disagree with the
/// independent oracles are implemented verbatim anyway; the validation
/// ledger is where the disagreement is surfaced.
enum class FormulaId {
    GaussQuartic,
    GaussPower2n,
    GaussDim,
    CoherentQuartic,
    SqueezedQuartic,
    MonomialQuartic,
    DisplacedGaussianQuartic,
    DisplacedCoherentCubicQuartic,
    AnisotropyPaper,
    NormSquaredPaper,
    ExpansionGaussQuartic,
    ExpansionAlphaPower,
    ExpansionE0Power,
    ExpansionDisplaced,
};

std::string formula_name(FormulaId id);
FormulaId formula_from_name(const std::string& name);
std::vector<FormulaId> all_formula_ids();

/// Printed energy functional for the given trial family and model.
/// Throws on family/id mismatch or inadmissible parameters.
///
///   GaussQuartic                   E(a) = a/4 + 1/(4a) + 3 lambda/(4 a^2)
///   GaussPower2n                   E(a) = a/4 + 1/(4a) + lambda (2n-1)!!/(2a)^n
///   GaussDim                       d * GaussPower2n (product ansatz)
///   CoherentQuartic                E(g) = g^2 + 1/2 + lambda (4g^4 + 6g^2 + 3/4)
///   SqueezedQuartic                E(a) = u/2 + 3 lambda u^2 / 4, u = (1+4a^2)/(1-4a^2)
///   MonomialQuartic                E_n = n + 1/2 + (3 lambda/4)(2n^2 + 2n + 1)
///   DisplacedGaussianQuartic       E(a,b) = a/4 + 1/(4a) + b^2/2
///                                         + lambda (3/(4a^2) + 3b^2/(2a) + b^4)
///   DisplacedCoherentCubicQuartic  E(g) = g^2 + 1/2 + lambda (2 sqrt2 g^3 + 3 sqrt2 g)
///                                       + mu (4g^4 + 6g^2 + 3/4), real g
double paper_energy(FormulaId id, const TrialParams& t, const ModelSpec& model);

/// Printed anisotropy <x^2> - <p^2> = 8 a^2 / (1 - 16 a^4) for the squeezed
/// family. Throws for |alpha| >= 1/2.
double paper_anisotropy(double alpha);

/// Printed squeezed-state second moments: <x^2> = (1 + 4a^2)/(2(1 - 4a^2)),
/// <p^2> = (1 - 4a^2)/(2(1 + 4a^2)).
double paper_squeezed_x2(double alpha);
double paper_squeezed_p2(double alpha);

/// Printed coherent-state <x^3> = 2 sqrt2 g^3 + 3 sqrt2 g (real g).
double paper_coherent_x3(double gamma);

/// Printed squared norm (1 - 4 a^2)^{-1/2} of exp(a z^2).
double paper_norm_squared(double alpha);

struct ExpansionInputs {
    double lambda = 0.0;
    double mu = 0.0;
    int power = 2;
};

/// Printed truncated series:
///   ExpansionGaussQuartic  E0 ~ 1/2 + 3 lambda/4 - 21 lambda^2/8
///   ExpansionAlphaPower    a_opt ~ 1 - n (2n-1) lambda
///   ExpansionE0Power       E0 ~ 1/2 + lambda (2n-1)!!/2^n
///   ExpansionDisplaced     E0 ~ 1/2 + 3 mu/4 - 9 lambda^2/4
double paper_expansion(FormulaId id, const ExpansionInputs& in);

/// One row of the formula-vs-oracle ledger.
struct ValidationRecord {
    FormulaId formula;
    Json params;  // object: named numeric inputs plus "observable" when relevant
    double paper_value = 0.0;
    double oracle_value = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;  // abs_dev / max(|paper|, |oracle|)
    bool stable = true;
};

ValidationRecord make_validation_record(FormulaId id, Json params, double paper_value,
                                        double oracle_value, bool stable);

Json to_json(const ValidationRecord& r);

}  // namespace vw

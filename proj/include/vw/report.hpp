#pragma once

#include <string>
#include <vector>

#include "vw/json_writer.hpp"
#include "vw/models.hpp"
#include "vw/paper_formulas.hpp"

namespace vw {

struct LedgerOptions {
    double lambda = 0.1;
    double mu = 0.1;
    int order = 64;
};

/// The full formula-vs-oracle ledger in a fixed, reproducible row order.
/// Closed-form rows use the quadrature oracle; expansion rows use the
/// analytic self-expansion of the relevant functional as the oracle side
/// (the series fit cross-checks those coefficients in the fit report).
std::vector<ValidationRecord> build_validation_ledger(const LedgerOptions& opt);

/// Rows for a single formula id (subset of the full ledger).
std::vector<ValidationRecord> build_validation_rows(FormulaId id, const LedgerOptions& opt);

struct FitRow {
    std::string quantity;
    double fitted = 0.0;
    double analytic = 0.0;
    double rel_err = 0.0;  // |fitted - analytic| / |analytic|
    bool reliable = true;
    Json paper_values;  // printed coefficients for the same quantity
};

/// Series-fit cross-checks of every printed expansion: the fit arbitrates
/// each analytic coefficient, and the printed values are carried alongside.
std::vector<FitRow> build_fit_report(double mu);

struct CrossOracleRow {
    ModelSpec model;
    double fd_energy = 0.0;
    double fock_energy = 0.0;
    double abs_dev = 0.0;
};

/// Standard model set for the two ground-state oracles.
std::vector<ModelSpec> standard_model_set();

std::vector<CrossOracleRow> build_cross_oracle_table();

Json to_json(const FitRow& r);
Json to_json(const CrossOracleRow& r);

}  // namespace vw

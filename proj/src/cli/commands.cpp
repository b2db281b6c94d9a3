#include "vw/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "vw/models.hpp"
#include "vw/optimize.hpp"
#include "vw/report.hpp"
#include "vw/ritz_fock.hpp"

namespace vw::cli {

namespace {

struct RunConfig {
    std::string model = "quartic";
    double lambda = 0.0;
    double mu = 0.0;
    double ledger_lambda = 0.1;
    double ledger_mu = 0.1;
    int power = 2;
    int dim = 1;
    std::string family = "gaussian";
    std::string formula;
    bool all_formulas = false;
    int monomial_n = 0;
    int k = 1;
    int truncation = 0;  // 0 = converge automatically
    double tol = 1e-8;
    int order = 64;
    std::string format = "json";
    std::string out_path;
    std::string config_path;
    double grid_min = 1e-3;
    double grid_max = 1.0;
    int grid_count = 10;
    std::string grid_scale = "log";
};

ModelSpec model_from_config(const RunConfig& cfg) {
    Couplings c;
    c.lambda = cfg.lambda;
    c.mu = cfg.mu;
    c.power = cfg.power;
    return make_model(family_from_name(cfg.model), c, cfg.dim);
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write output file: " + path);
    f << text << "\n";
}

std::string csv_field(const Json& params, const std::string& key) {
    const Json* v = params.find(key);
    if (!v) return "";
    if (v->is_number()) return format_number(v->as_number());
    if (v->is_string()) return v->as_string();
    return "";
}

std::string validation_csv(const std::vector<ValidationRecord>& rows) {
    std::string s =
        "formula,observable,alpha,beta,gamma,lambda,mu,n,d,order,paper_source,"
        "paper_value,oracle_value,abs_dev,rel_dev,stable\n";
    for (const auto& r : rows) {
        s += formula_name(r.formula);
        for (const char* key : {"observable", "alpha", "beta", "gamma", "lambda", "mu", "n", "d",
                                "order", "paper_source"})
            s += "," + csv_field(r.params, key);
        s += "," + format_number(r.paper_value);
        s += "," + format_number(r.oracle_value);
        s += "," + format_number(r.abs_dev);
        s += "," + format_number(r.rel_dev);
        s += r.stable ? ",true" : ",false";
        s += "\n";
    }
    s.pop_back();
    return s;
}

std::string minimize_csv_header() {
    return "family,model,lambda,mu,n,d,alpha,beta,gamma_re,gamma_im,monomial_n,"
           "energy,gradient_norm,iterations,stationary_points,provenance,oracle_e0,oracle_gap";
}

std::string minimize_csv_row(const std::string& family, const ModelSpec& model,
                             const MinimizeResult& r, double oracle_e0, double gap) {
    std::string alpha, beta, gamma_re, gamma_im, mono;
    if (const auto* g = std::get_if<PositionGaussian>(&r.params_opt)) {
        alpha = format_number(g->alpha);
        beta = format_number(g->beta);
    } else if (const auto* c = std::get_if<Coherent>(&r.params_opt)) {
        gamma_re = format_number(c->gamma.real());
        gamma_im = format_number(c->gamma.imag());
    } else if (const auto* s = std::get_if<BargmannSqueezed>(&r.params_opt)) {
        alpha = format_number(s->alpha);
    } else if (const auto* m = std::get_if<Monomial>(&r.params_opt)) {
        mono = std::to_string(m->n);
    } else if (const auto* d = std::get_if<DisplacedMonomial>(&r.params_opt)) {
        mono = std::to_string(d->n);
        gamma_re = format_number(d->gamma.real());
        gamma_im = format_number(d->gamma.imag());
    }
    std::string s = family + "," + family_name(model.family) + "," + format_number(model.lambda) +
                    "," + format_number(model.mu) + "," + std::to_string(model.power) + "," +
                    std::to_string(model.dim) + "," + alpha + "," + beta + "," + gamma_re + "," +
                    gamma_im + "," + mono + "," + format_number(r.energy_opt) + "," +
                    format_number(r.gradient_norm) + "," + std::to_string(r.iterations) + "," +
                    std::to_string(r.stationary_points) + "," + r.provenance + "," +
                    format_number(oracle_e0) + "," + format_number(gap);
    return s;
}

Json minimize_report(const std::string& family, const ModelSpec& model, const MinimizeResult& r,
                     double oracle_e0) {
    Json j = Json::object();
    j.set("family", family);
    j.set("model", to_json(model));
    j.set("minimize", to_json(r));
    j.set("oracle_e0", oracle_e0);
    j.set("oracle_gap", r.energy_opt - oracle_e0);
    if (model.dim > 1) j.set("energy_total", dimension_total_energy(model.dim, r.energy_opt));
    return j;
}

void apply_config_file(CLI::App& app, RunConfig& cfg) {
    if (cfg.config_path.empty()) return;
    std::ifstream f(cfg.config_path);
    if (!f) throw CLI::ValidationError("--config", "cannot open config file " + cfg.config_path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--config", std::string("invalid JSON: ") + e.what());
    }
    const auto maybe = [&](const char* flag, auto& field) {
        const char* key = flag + 2;  // strip "--"
        if (j.contains(key) && app.count(flag) == 0) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    maybe("--model", cfg.model);
    if (app.get_name() == "validate" || app.get_name() == "report") {
        maybe("--lambda", cfg.ledger_lambda);
        maybe("--mu", cfg.ledger_mu);
    } else {
        maybe("--lambda", cfg.lambda);
        maybe("--mu", cfg.mu);
    }
    maybe("--power", cfg.power);
    maybe("--dim", cfg.dim);
    maybe("--family", cfg.family);
    maybe("--formula", cfg.formula);
    maybe("--n", cfg.monomial_n);
    maybe("--k", cfg.k);
    maybe("--truncation", cfg.truncation);
    maybe("--tol", cfg.tol);
    maybe("--order", cfg.order);
    maybe("--format", cfg.format);
    maybe("--out", cfg.out_path);
    maybe("--grid-min", cfg.grid_min);
    maybe("--grid-max", cfg.grid_max);
    maybe("--grid-count", cfg.grid_count);
    maybe("--grid-scale", cfg.grid_scale);
}

void add_model_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--model", cfg.model, "harmonic | quartic | power2n | cubic_quartic");
    cmd->add_option("--lambda", cfg.lambda, "coupling lambda");
    cmd->add_option("--mu", cfg.mu, "quartic coupling of the cubic-quartic model");
    cmd->add_option("--power", cfg.power, "power index n of the x^(2n) model");
    cmd->add_option("--dim", cfg.dim, "spatial dimension d");
}

void add_io_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out_path, "output path (stdout when omitted)");
    cmd->add_option("--config", cfg.config_path, "JSON config file; flags override file values");
}

int cmd_minimize(const RunConfig& cfg, std::ostream& out) {
    const ModelSpec model = model_from_config(cfg);
    const MinimizeResult r = minimize_trial(model, cfg.family, cfg.monomial_n, 1e-10);
    const double oracle_e0 = converged_spectrum(model, 1, cfg.tol).values[0];
    if (cfg.format == "csv") {
        const std::string text = minimize_csv_header() + "\n" +
                                 minimize_csv_row(cfg.family, model, r, oracle_e0,
                                                  r.energy_opt - oracle_e0);
        write_output(text, cfg.out_path, out);
    } else {
        write_output(minimize_report(cfg.family, model, r, oracle_e0).pretty(), cfg.out_path, out);
    }
    return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
    const ModelSpec model = model_from_config(cfg);
    const SpectrumResult s = cfg.truncation > 0 ? ritz_spectrum(model, cfg.truncation, cfg.k)
                                                : converged_spectrum(model, cfg.k, cfg.tol);
    if (cfg.format == "csv") {
        std::string text = "model,lambda,mu,n,d,N,index,value";
        for (int i = 0; i < static_cast<int>(s.values.size()); ++i) {
            text += "\n" + family_name(model.family) + "," + format_number(model.lambda) + "," +
                    format_number(model.mu) + "," + std::to_string(model.power) + "," +
                    std::to_string(model.dim) + "," + std::to_string(s.truncation) + "," +
                    std::to_string(i) + "," + format_number(s.values[i]);
        }
        write_output(text, cfg.out_path, out);
    } else {
        write_output(to_json(s).pretty(), cfg.out_path, out);
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    LedgerOptions opt;
    opt.lambda = cfg.ledger_lambda;
    opt.mu = cfg.ledger_mu;
    opt.order = cfg.order;
    std::vector<ValidationRecord> rows;
    if (cfg.all_formulas || cfg.formula.empty()) {
        rows = build_validation_ledger(opt);
    } else {
        rows = build_validation_rows(formula_from_name(cfg.formula), opt);
    }
    if (cfg.format == "csv") {
        write_output(validation_csv(rows), cfg.out_path, out);
    } else {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push(to_json(r));
        write_output(arr.pretty(), cfg.out_path, out);
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.grid_count < 1) throw CLI::ValidationError("--grid-count", "grid must be nonempty");
    std::vector<double> grid;
    if (cfg.grid_count == 1) {
        grid = {cfg.grid_min};
    } else if (cfg.grid_scale == "log") {
        grid = log_grid(cfg.grid_min, cfg.grid_max, cfg.grid_count);
    } else {
        grid.resize(cfg.grid_count);
        for (int i = 0; i < cfg.grid_count; ++i)
            grid[i] = cfg.grid_min + (cfg.grid_max - cfg.grid_min) * i / (cfg.grid_count - 1);
    }

    struct Row {
        ModelSpec model;
        MinimizeResult result;
        double oracle_e0 = 0.0;
    };
    std::vector<Row> rows(grid.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(grid.size());
    const int workers = std::min<int>(worker_count(), static_cast<int>(grid.size()));
    auto work = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                RunConfig point = cfg;
                point.lambda = grid[i];
                Row r;
                r.model = model_from_config(point);
                r.result = minimize_trial(r.model, cfg.family, cfg.monomial_n, 1e-10);
                r.oracle_e0 = converged_spectrum(r.model, 1, cfg.tol).values[0];
                rows[i] = std::move(r);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error("sweep point failed: " + e);

    // assembly in grid order regardless of completion order
    if (cfg.format == "csv") {
        std::string text = minimize_csv_header();
        for (const Row& r : rows)
            text += "\n" + minimize_csv_row(cfg.family, r.model, r.result, r.oracle_e0,
                                            r.result.energy_opt - r.oracle_e0);
        write_output(text, cfg.out_path, out);
    } else {
        Json arr = Json::array();
        for (const Row& r : rows)
            arr.push(minimize_report(cfg.family, r.model, r.result, r.oracle_e0));
        write_output(arr.pretty(), cfg.out_path, out);
    }
    return 0;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
    LedgerOptions opt;
    opt.lambda = cfg.ledger_lambda;
    opt.mu = cfg.ledger_mu;
    opt.order = cfg.order;

    Json j = Json::object();
    Json validation = Json::array();
    for (const auto& r : build_validation_ledger(opt)) validation.push(to_json(r));
    j.set("validation", std::move(validation));
    Json fits = Json::array();
    for (const auto& r : build_fit_report(opt.mu)) fits.push(to_json(r));
    j.set("fits", std::move(fits));
    Json cross = Json::array();
    for (const auto& r : build_cross_oracle_table()) cross.push(to_json(r));
    j.set("cross_oracle", std::move(cross));
    write_output(j.pretty(), cfg.out_path, out);
    return 0;
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("VW_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"variational workbench for 1D quantum oscillators"};
    app.require_subcommand(1);

    CLI::App* minimize = app.add_subcommand("minimize", "minimize a trial-family energy");
    add_model_flags(minimize, cfg);
    minimize->add_option("--family", cfg.family, "gaussian | coherent | squeezed | monomial");
    minimize->add_option("--n", cfg.monomial_n, "monomial index");
    minimize->add_option("--tol", cfg.tol, "oracle convergence tolerance")->check(CLI::PositiveNumber);
    add_io_flags(minimize, cfg);

    CLI::App* spectrum = app.add_subcommand("spectrum", "reference spectrum in the number basis");
    add_model_flags(spectrum, cfg);
    spectrum->add_option("-k,--k", cfg.k, "number of eigenvalues")->check(CLI::PositiveNumber);
    spectrum->add_option("--truncation", cfg.truncation, "fixed basis size (0 = converge)");
    spectrum->add_option("--tol", cfg.tol, "convergence tolerance")->check(CLI::PositiveNumber);
    add_io_flags(spectrum, cfg);

    std::vector<std::string> formula_names;
    for (FormulaId id : all_formula_ids()) formula_names.push_back(formula_name(id));

    CLI::App* validate = app.add_subcommand("validate", "formula-vs-oracle deviation ledger");
    validate->add_flag("--all", cfg.all_formulas, "all formula ids");
    validate->add_option("--formula", cfg.formula, "one formula id")
        ->check(CLI::IsMember(formula_names));
    validate->add_option("--lambda", cfg.ledger_lambda, "coupling for the ledger rows");
    validate->add_option("--mu", cfg.ledger_mu, "quartic coupling for the displaced rows");
    validate->add_option("--order", cfg.order, "quadrature order per axis")
        ->check(CLI::Range(8, 128));
    add_io_flags(validate, cfg);

    CLI::App* sweep = app.add_subcommand("sweep", "minimize across a coupling grid");
    add_model_flags(sweep, cfg);
    sweep->add_option("--family", cfg.family, "trial family");
    sweep->add_option("--n", cfg.monomial_n, "monomial index");
    sweep->add_option("--tol", cfg.tol, "oracle convergence tolerance")->check(CLI::PositiveNumber);
    sweep->add_option("--grid-min", cfg.grid_min, "lowest lambda")->check(CLI::PositiveNumber);
    sweep->add_option("--grid-max", cfg.grid_max, "highest lambda")->check(CLI::PositiveNumber);
    sweep->add_option("--grid-count", cfg.grid_count, "grid points")->check(CLI::PositiveNumber);
    sweep->add_option("--grid-scale", cfg.grid_scale, "log | lin")
        ->check(CLI::IsMember({"log", "lin"}));
    add_io_flags(sweep, cfg);

    CLI::App* report = app.add_subcommand("report", "validation + fits + cross-oracle summary");
    report->add_option("--lambda", cfg.ledger_lambda, "coupling for the ledger rows");
    report->add_option("--mu", cfg.ledger_mu, "quartic coupling for the displaced rows");
    report->add_option("--order", cfg.order, "quadrature order per axis")
        ->check(CLI::Range(8, 128));
    add_io_flags(report, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (CLI::App* sub : {minimize, spectrum, validate, sweep, report})
            if (sub->parsed()) apply_config_file(*sub, cfg);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (minimize->parsed()) return cmd_minimize(cfg, out);
        if (spectrum->parsed()) return cmd_spectrum(cfg, out);
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (sweep->parsed()) return cmd_sweep(cfg, out);
        if (report->parsed()) return cmd_report(cfg, out);
        err << app.help();
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace vw::cli

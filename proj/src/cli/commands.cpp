#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "gstx/cli.hpp"
#include "gstx/expr.hpp"

#ifndef GSTX_DEFAULT_GRID
#define GSTX_DEFAULT_GRID "grids/default.grid"
#endif

namespace gstx::cli {

namespace {

using identities::IdentityReport;
using identities::Inputs;
using identities::Status;
using transforms::QuadConfig;
using transforms::QuadResult;

// Per-parameter flags shared by eval, check and table.
struct ParamFlags {
    std::map<std::string, double> values;
    std::map<std::string, CLI::Option*> options;

    void add(CLI::App& app) {
        for (const std::string& name : transforms::param_names()) {
            values[name] = 0.0;
            options[name] = app.add_option("--" + name, values[name], name + " parameter");
        }
    }

    transforms::TransformParams get() const {
        transforms::TransformParams p;
        for (const auto& [name, opt] : options)
            if (opt->count() > 0) *p.field(name) = values.at(name);
        return p;
    }
};

struct QuadFlags {
    double tol = QuadConfig{}.rel_tol;
    CLI::Option* tol_opt = nullptr;

    void add(CLI::App& app, const char* help) {
        tol_opt = app.add_option("--tol", tol, help);
    }
};

const char* const kTransforms[] = {"L", "S", "Fs", "Fc", "lgamma"};

QuadResult run_transform(const std::string& name, const expr::FunctionExpr& f,
                         const transforms::TransformParams& p, double y, const QuadConfig& cfg) {
    if (name == "L") return transforms::l_transform(f, p, y, cfg);
    if (name == "S") return transforms::stieltjes_transform(f, p, y, cfg);
    if (name == "Fs") return transforms::fourier_sine_transform(f, p, y, cfg);
    if (name == "Fc") return transforms::fourier_cosine_transform(f, p, y, cfg);
    return transforms::lambda_gamma_transform(f, p, cfg);
}

// Result of one transform evaluation without throwing on non-convergence.
QuadResult try_transform(const std::string& name, const expr::FunctionExpr& f,
                         const transforms::TransformParams& p, double y, const QuadConfig& cfg) {
    try {
        return run_transform(name, f, p, y, cfg);
    } catch (const quad::QuadNonConvergence& e) {
        return e.partial();
    }
}

struct EvalCmd {
    std::string transform;
    std::string f;
    double y = 0.0;
    CLI::Option* y_opt = nullptr;
    ParamFlags params;
    QuadFlags quad;
};

struct CheckCmd {
    std::string identity;
    std::string f;
    std::string g;
    double y = 0.0;
    CLI::Option* y_opt = nullptr;
    CLI::Option* f_opt = nullptr;
    CLI::Option* g_opt = nullptr;
    CLI::Option* tol_opt = nullptr;
    double tol = 0.0;
    ParamFlags params;
};

struct SuiteCmd {
    std::string grid = GSTX_DEFAULT_GRID;
    std::string out;
    unsigned threads = 0;
};

struct TableCmd {
    std::string transform;
    std::string f;
    std::string range;
    ParamFlags params;
    QuadFlags quad;
};

QuadConfig config(const QuadFlags& q) {
    QuadConfig cfg;
    cfg.rel_tol = q.tol;
    cfg.validate();
    return cfg;
}

int cmd_eval(const EvalCmd& c, std::ostream& out) {
    const expr::FunctionExpr f = expr::parse(c.f);
    const transforms::TransformParams p = c.params.get();
    const bool has_y = c.transform != "lgamma";
    if (has_y && c.y_opt->count() == 0) throw CLI::RequiredError("--y");
    const QuadResult r = try_transform(c.transform, f, p, c.y, config(c.quad));
    Json j;
    j["transform"] = c.transform;
    j["params"] = params_json(p);
    j["y"] = has_y ? Json(c.y) : Json(nullptr);
    j["value"] = r.value;
    j["err_estimate"] = r.err_estimate;
    j["n_evals"] = r.n_evals;
    j["converged"] = r.converged;
    out << dump_json(j) << '\n';
    return r.converged ? kOk : kNonConvergence;
}

int cmd_check(const CheckCmd& c, std::ostream& out) {
    Inputs in;
    in.params = c.params.get();
    if (c.y_opt->count() > 0) in.y = c.y;
    if (c.f_opt->count() > 0) in.f = identities::FunctionSlot::from_expr(c.f);
    if (c.g_opt->count() > 0) in.g = identities::FunctionSlot::from_expr(c.g);
    std::optional<double> tol;
    if (c.tol_opt->count() > 0) tol = c.tol;
    try {
        const IdentityReport r = identities::check_identity(c.identity, in, QuadConfig{}, tol);
        out << dump_json(report_json(r)) << '\n';
        if (r.audit_only) return kOk;
        return r.passed ? kOk : kIdentityFailure;
    } catch (const identities::IdentityNonConvergence& e) {
        out << dump_json(report_json(e.report())) << '\n';
        return e.report().audit_only ? kOk : kNonConvergence;
    }
}

int cmd_suite(const SuiteCmd& c, std::ostream& out) {
    const identities::GridSpec grid = load_grid(c.grid);
    const identities::SuiteResult s = identities::run_suite(grid, QuadConfig{}, c.threads);
    const Json j = suite_json(s);
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw DomainError("cannot write '" + c.out + "'");
        f << dump_json(j) << '\n';
    }

    bool numerical_only = true;
    for (const IdentityReport& r : s.reports) {
        if (r.audit_only || r.status == Status::Passed || r.status == Status::Skipped) continue;
        out << "FAIL " << r.id << " [" << identities::to_string(r.status) << "] "
            << dump_json(params_json(r.inputs.params), -1);
        if (r.inputs.y) out << " y=" << number(*r.inputs.y);
        if (r.inputs.f) out << " f=\"" << r.inputs.f.text << '"';
        if (r.inputs.g) out << " g=\"" << r.inputs.g.text << '"';
        out << " rel_err=" << number(r.rel_err);
        if (!r.message.empty()) out << " (" << r.message << ')';
        out << '\n';
        if (r.status == Status::Failed) numerical_only = false;
    }
    out << "typo audit: " << s.typo_audit.summary << '\n';
    out << "summary: total=" << s.summary.total << " passed=" << s.summary.passed
        << " failed=" << s.summary.failed << " skipped=" << s.summary.skipped
        << " audited=" << s.summary.audited << '\n';
    if (s.summary.failed == 0) return kOk;
    return numerical_only ? kNonConvergence : kIdentityFailure;
}

std::vector<double> parse_range(const std::string& text) {
    double v[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t colon = i < 2 ? text.find(':', pos) : text.size();
        if (colon == std::string::npos) throw CLI::ValidationError("--y-range", "expected start:stop:step");
        const std::string part = text.substr(pos, colon - pos);
        try {
            std::size_t used = 0;
            v[i] = std::stod(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--y-range", "invalid number '" + part + "'");
        }
        pos = colon + 1;
    }
    if (!(v[2] > 0.0) || !(v[1] >= v[0]))
        throw CLI::ValidationError("--y-range", "need step > 0 and stop >= start");
    const double count = std::floor((v[1] - v[0]) / v[2] + 1e-9) + 1.0;
    if (count > 1e6) throw CLI::ValidationError("--y-range", "too many points");
    std::vector<double> ys;
    for (int i = 0; i < static_cast<int>(count); ++i) ys.push_back(v[0] + i * v[2]);
    return ys;
}

int cmd_table(const TableCmd& c, std::ostream& out) {
    if (c.transform == "lgamma") throw CLI::ValidationError("--transform", "table needs a transform with argument y");
    const expr::FunctionExpr f = expr::parse(c.f);
    const transforms::TransformParams p = c.params.get();
    const std::vector<double> ys = parse_range(c.range);
    const QuadConfig cfg = config(c.quad);
    bool all = true;
    out << "y,value,err_estimate,converged\n";
    for (double y : ys) {
        const QuadResult r = try_transform(c.transform, f, p, y, cfg);
        out << number(y) << ',' << number(r.value) << ',' << number(r.err_estimate) << ','
            << (r.converged ? "true" : "false") << '\n';
        all = all && r.converged;
    }
    return all ? kOk : kNonConvergence;
}

int cmd_list(std::ostream& out) {
    for (const identities::IdentityCatalogEntry& e : identities::list_identities()) {
        out << e.id << "\t" << e.citation << (e.audit_only ? " [audit only]" : "") << "\t"
            << e.description << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Laplace, Stieltjes and Fourier transforms and their identities"};
    app.require_subcommand(1);

    EvalCmd eval;
    CLI::App* eval_app = app.add_subcommand("eval", "evaluate one transform");
    eval_app->add_option("--transform", eval.transform, "L, S, Fs, Fc or lgamma")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kTransforms), std::end(kTransforms))));
    eval_app->add_option("--f", eval.f, "integrand f(t)")->required();
    eval.y_opt = eval_app->add_option("--y", eval.y, "transform argument");
    eval.params.add(*eval_app);
    eval.quad.add(*eval_app, "relative quadrature tolerance");

    CheckCmd check;
    CLI::App* check_app = app.add_subcommand("check", "check one identity at one point");
    check_app->add_option("--identity", check.identity, "catalog id")->required();
    check.f_opt = check_app->add_option("--f", check.f, "function f(t)");
    check.g_opt = check_app->add_option("--g", check.g, "function g(x)");
    check.y_opt = check_app->add_option("--y", check.y, "transform argument");
    check.tol_opt = check_app->add_option("--tol", check.tol, "relative tolerance of the comparison");
    check.params.add(*check_app);

    SuiteCmd suite;
    CLI::App* suite_app = app.add_subcommand("suite", "check the catalog over a parameter grid");
    suite_app->add_option("--grid", suite.grid, "grid file")->capture_default_str();
    suite_app->add_option("--out", suite.out, "JSON report file");
    suite_app->add_option("--threads", suite.threads, "worker threads (0 = GSTX_THREADS or all cores)");

    TableCmd table;
    CLI::App* table_app = app.add_subcommand("table", "tabulate a transform over y as CSV");
    table_app->add_option("--transform", table.transform, "L, S, Fs or Fc")
        ->required()
        ->check(CLI::IsMember(std::vector<std::string>(std::begin(kTransforms), std::end(kTransforms))));
    table_app->add_option("--f", table.f, "integrand f(t)")->required();
    table_app->add_option("--y-range", table.range, "start:stop:step")->required();
    table.params.add(*table_app);
    table.quad.add(*table_app, "relative quadrature tolerance");

    CLI::App* list_app = app.add_subcommand("list", "list the identity catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (eval_app->parsed()) return cmd_eval(eval, out);
        if (check_app->parsed()) return cmd_check(check, out);
        if (suite_app->parsed()) return cmd_suite(suite, out);
        if (table_app->parsed()) return cmd_table(table, out);
        if (list_app->parsed()) return cmd_list(out);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NonConvergence& e) {
        err << "non-convergence: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const NonFinite& e) {
        err << "non-finite integrand: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace gstx::cli

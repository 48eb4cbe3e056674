#include "nabla/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "nabla/cli/config.hpp"
#include "nabla/cli/csv.hpp"
#include "nabla/fraccalc.hpp"
#include "nabla/greens.hpp"
#include "nabla/ivp.hpp"
#include "nabla/monomial.hpp"
#include "nabla/oracle.hpp"

namespace nabla::cli {

namespace {

struct Options {
    std::string config;
    std::string out;
    double nu = 0.0;
    double a = 0.0;
    Offset count = 10;
    bool conjugate = false;
    std::vector<std::string> params;
};

CsvTable solution_table(const GridFunction& x) {
    CsvTable table{{"t", "x"}, {}};
    for (Offset t = x.lo(); t <= x.hi(); ++t) {
        table.rows.push_back({format_number(x.grid().point(t)), format_number(x.at(t))});
    }
    return table;
}

CsvTable greens_table(const GreensFunction& g) {
    CsvTable table{{"t", "s", "G", "branch"}, {}};
    for (Offset t = g.t_lo(); t <= g.t_hi(); ++t) {
        for (Offset s = g.s_lo(); s <= g.s_hi(); ++s) {
            table.rows.push_back({format_number(g.a() + static_cast<double>(t)),
                                  format_number(g.a() + static_cast<double>(s)),
                                  format_number(g(t, s)), branch_name(g.branch(t, s))});
        }
    }
    return table;
}

GridFunction forcing_or_one(const ProblemConfig& cfg) {
    return cfg.h ? *cfg.h : GridFunction::constant(cfg.op().equation_grid(), 1.0);
}

InitialConditions initial_conditions(const ProblemConfig& cfg, const IvpSection& ivp) {
    InitialConditions ic{ivp.initial};
    switch (ivp.ghost) {
        case GhostKind::Zero: break;
        case GhostKind::Explicit: ic.closure = ExplicitClosure{ivp.ghost_values}; break;
        case GhostKind::Natural: ic.closure = NaturalClosure{cfg.basis(BasisKind::Analytic)}; break;
    }
    return ic;
}

/// Ghost convention matching a basis: the numeric basis has zero ghosts.
GhostClosure closure_for(const ProblemConfig& cfg, BasisKind kind) {
    if (kind == BasisKind::Numeric) return ZeroClosure{};
    return NaturalClosure{cfg.basis(kind)};
}

GreensFunction greens_from_config(const ProblemConfig& cfg) {
    if (const auto* greens = std::get_if<GreensSection>(&cfg.problem)) {
        return build_greens(cfg.op(), greens->spec, cfg.basis(greens->basis));
    }
    if (const auto* bvp = std::get_if<BvpSection>(&cfg.problem)) {
        return build_greens(cfg.op(), bvp->spec.homogeneous(), cfg.basis(bvp->basis));
    }
    throw ConfigError("config field 'problem': greens needs a greens or bvp problem");
}

/// `--conjugate a=0 b=4 nu=1.5`
GreensFunction conjugate_from_params(const std::vector<std::string>& params) {
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> nu;
    for (const std::string& token : params) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ConfigError("argument '" + token + "': expected key=value");
        const std::string key = token.substr(0, eq);
        const std::string text = token.substr(eq + 1);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::exception&) {
            throw ConfigError("argument '" + key + "': '" + text + "' is not a number");
        }
        if (key == "a") a = value;
        else if (key == "b") b = value;
        else if (key == "nu") nu = value;
        else throw ConfigError("argument '" + key + "': expected a, b or nu");
    }
    if (!a || !b || !nu) throw ConfigError("--conjugate needs a=..., b=... and nu=...");
    const double span = *b - *a;
    if (span != std::round(span)) throw ConfigError("argument 'b': b - a must be a whole number");
    try {
        return conjugate_greens_closed_form(*a, static_cast<Offset>(span), *nu);
    } catch (const InvalidArgument& e) {
        throw ConfigError(std::string("--conjugate: ") + e.what());
    }
}

struct Check {
    std::string name;
    double value;
    double tolerance;
};

class Verifier {
public:
    explicit Verifier(std::optional<double> override_tol) : override_(override_tol) {}

    void add(std::string name, double value, double tolerance) {
        checks_.push_back({std::move(name), value, override_.value_or(tolerance)});
    }

    int report(std::ostream& out) const {
        int first_failure = 0;
        for (std::size_t i = 0; i < checks_.size(); ++i) {
            const Check& c = checks_[i];
            const bool ok = c.value <= c.tolerance;
            char line[160];
            std::snprintf(line, sizeof line, "check %zu %s: %.3e <= %.3e %s", i + 1, c.name.c_str(),
                          c.value, c.tolerance, ok ? "PASS" : "FAIL");
            out << line << '\n';
            if (!ok && first_failure == 0) first_failure = static_cast<int>(i) + 1;
        }
        if (first_failure == 0) {
            out << "verify: all " << checks_.size() << " checks passed\n";
            return kExitOk;
        }
        out << "verify: check " << first_failure << " failed\n";
        return kExitVerifyBase + first_failure;
    }

private:
    std::optional<double> override_;
    std::vector<Check> checks_;
};

std::optional<double> tolerance_override() {
    const char* raw = std::getenv("NABLA_GREEN_TOL");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string text(raw);
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used == text.size() && value > 0.0 && std::isfinite(value)) return value;
    } catch (const std::exception&) {
    }
    throw ConfigError("NABLA_GREEN_TOL: '" + text + "' is not a positive decimal number");
}

double boundary_residual(const GridFunction& x, const BoundarySpec& spec, Offset b) {
    double worst = 0.0;
    for (int i = 0; i < spec.order(); ++i) {
        worst = std::max(worst, std::abs(left_bc_eval(x, spec.alpha_row(i)) - spec.left_values()[i]));
    }
    return std::max(worst, std::abs(right_bc_eval(x, spec.beta(), b) - spec.right_value()));
}

int verify(const ProblemConfig& cfg, std::ostream& out) {
    Verifier v(tolerance_override());
    const FracOperator op = cfg.op();
    const int n = op.order();
    if (const auto* ivp = std::get_if<IvpSection>(&cfg.problem)) {
        const InitialConditions ic = initial_conditions(cfg, *ivp);
        const GridFunction x = solve_ivp(op, *cfg.h, ic);
        v.add("equation residual", oracle::residual(op, x, *cfg.h), solution_tolerance(op, x));
        double ic_error = 0.0;
        for (int i = 0; i <= n; ++i) ic_error = std::max(ic_error, std::abs(nabla_at(x, i, i) - ic.values[i]));
        if (ivp->ghost == GhostKind::Explicit) {
            for (int g = 0; g < n - 1; ++g) {
                ic_error = std::max(ic_error, std::abs(x.at(-1 - g) - ivp->ghost_values[g]));
            }
        }
        v.add("initial conditions", ic_error, 1e-9);
        const oracle::DenseSolution dense =
            oracle::dense_solve(oracle::assemble(op, oracle::IvpProblem{ic}, *cfg.h));
        v.add("dense oracle", max_abs_diff(dense.x, x), 1e-9);
        const GridFunction free = solve_ivp(op, GridFunction::zeros(op.equation_grid()), ic);
        v.add("variation of constants", max_abs_diff(x - free, variation_of_constants(op, *cfg.h)), 1e-9);
    } else if (const auto* bvp = std::get_if<BvpSection>(&cfg.problem)) {
        const std::vector<GridFunction> basis = cfg.basis(bvp->basis);
        const GridFunction x = solve_bvp(op, *cfg.h, bvp->spec, basis);
        v.add("equation residual", oracle::residual(op, x, *cfg.h), solution_tolerance(op, x));
        v.add("boundary conditions", boundary_residual(x, bvp->spec, op.b()), 1e-9);
        const oracle::BvpProblem problem{bvp->spec, closure_for(cfg, bvp->basis)};
        const oracle::DenseSolution dense = oracle::dense_solve(oracle::assemble(op, problem, *cfg.h));
        v.add("dense oracle", max_abs_diff(dense.x, x), 1e-8);
        const GridFunction data_part =
            solve_bvp(op, GridFunction::zeros(op.equation_grid()), bvp->spec, basis);
        const GridFunction green = greens_solve(build_greens(op, bvp->spec.homogeneous(), basis), *cfg.h);
        v.add("green's function", max_abs_diff(green + data_part, x), 1e-8);
    } else {
        const auto& greens = std::get<GreensSection>(cfg.problem);
        const std::vector<GridFunction> basis = cfg.basis(greens.basis);
        const GridFunction h = forcing_or_one(cfg);
        const GreensFunction g = build_greens(op, greens.spec, basis);
        const GridFunction x = greens_solve(g, h);
        v.add("equation residual", oracle::residual(op, x, h), solution_tolerance(op, x));
        v.add("boundary conditions", boundary_residual(x, greens.spec, op.b()), 1e-9);
        const oracle::BvpProblem problem{greens.spec, closure_for(cfg, greens.basis)};
        const oracle::DenseSolution dense = oracle::dense_solve(oracle::assemble(op, problem, h));
        v.add("dense oracle", max_abs_diff(dense.x, x), 1e-8);
        v.add("boundary value solver", max_abs_diff(solve_bvp(op, h, greens.spec, basis), x), 1e-8);
        if (greens.conjugate) {
            const GreensFunction closed = conjugate_greens_closed_form(op.a(), op.b(), op.nu());
            v.add("closed form", compare_greens(g, closed), 1e-10);
        }
    }
    return v.report(out);
}

int dispatch(const std::string& command, const Options& opt, std::ostream& sink) {
    if (command == "monomial") {
        if (opt.count < 0) throw ConfigError("--count must be non-negative");
        CsvTable table{{"t", "H"}, {}};
        for (Offset m = 0; m <= opt.count; ++m) {
            table.rows.push_back({format_number(opt.a + static_cast<double>(m)),
                                  format_number(taylor_monomial(m, opt.nu))});
        }
        write_csv(sink, table);
        return kExitOk;
    }
    if (command == "greens" && opt.conjugate) {
        if (!opt.config.empty()) throw ConfigError("--conjugate and --config are exclusive");
        write_csv(sink, greens_table(conjugate_from_params(opt.params)));
        return kExitOk;
    }
    if (opt.config.empty()) throw ConfigError(command + ": --config is required");
    if (!opt.params.empty()) throw ConfigError("unexpected argument '" + opt.params.front() + "'");
    const ProblemConfig cfg = load_config(opt.config);
    if (command == "cauchy") {
        const FracOperator op = cfg.op();
        const CauchyFunction x = cauchy_function(op);
        CsvTable table{{"t", "s", "x"}, {}};
        for (Offset s = x.s_lo(); s <= x.s_hi(); ++s) {
            const GridFunction& column = x.column(s);
            for (Offset t = column.lo(); t <= column.hi(); ++t) {
                table.rows.push_back({format_number(column.grid().point(t)),
                                      format_number(column.grid().point(s)), format_number(column.at(t))});
            }
        }
        write_csv(sink, table);
        return kExitOk;
    }
    if (command == "solve-ivp") {
        const auto* ivp = std::get_if<IvpSection>(&cfg.problem);
        if (ivp == nullptr) throw ConfigError("config field 'problem': solve-ivp needs an ivp problem");
        write_csv(sink, solution_table(solve_ivp(cfg.op(), *cfg.h, initial_conditions(cfg, *ivp))));
        return kExitOk;
    }
    if (command == "solve-bvp") {
        const auto* bvp = std::get_if<BvpSection>(&cfg.problem);
        if (bvp == nullptr) throw ConfigError("config field 'problem': solve-bvp needs a bvp problem");
        write_csv(sink, solution_table(solve_bvp(cfg.op(), *cfg.h, bvp->spec, cfg.basis(bvp->basis))));
        return kExitOk;
    }
    if (command == "greens") {
        write_csv(sink, greens_table(greens_from_config(cfg)));
        return kExitOk;
    }
    return verify(cfg, sink);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nabla fractional boundary value problems and Green's functions", "nabla-green"};
    app.require_subcommand(1);
    Options opt;

    const auto add_io = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "JSON problem file");
        sub->add_option("--out", opt.out, "Write results here instead of stdout");
    };
    CLI::App* monomial = app.add_subcommand("monomial", "Tabulate H_nu(a + m, a) for m = 0..count");
    monomial->add_option("--nu", opt.nu, "Order")->required();
    monomial->add_option("--count", opt.count, "Largest offset");
    monomial->add_option("--a", opt.a, "Anchor");
    monomial->add_option("--out", opt.out, "Write results here instead of stdout");
    add_io(app.add_subcommand("cauchy", "CSV of the Cauchy function x(t, s)"));
    add_io(app.add_subcommand("solve-ivp", "Solve the initial value problem"));
    add_io(app.add_subcommand("solve-bvp", "Solve the boundary value problem"));
    CLI::App* greens = app.add_subcommand("greens", "CSV of G(t, s) with branch labels");
    add_io(greens);
    greens->add_flag("--conjugate", opt.conjugate, "Closed-form (2,1) conjugate problem; give a=, b=, nu=");
    greens->add_option("params", opt.params, "key=value pairs for --conjugate");
    CLI::App* verify_cmd = app.add_subcommand("verify", "Cross-check the solvers against the dense oracle");
    add_io(verify_cmd);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (opt.out.empty()) return dispatch(command, opt, out);
        std::ofstream file(opt.out);
        if (!file) throw ConfigError("cannot open output file " + opt.out);
        const int code = dispatch(command, opt, file);
        if (!file) throw ConfigError("failed writing " + opt.out);
        return code;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NearSingular& e) {
        err << "error: " << e.what() << '\n';
        return kExitSingular;
    } catch (const DegenerateDenominator& e) {
        err << "error: " << e.what() << '\n';
        return kExitSingular;
    } catch (const SingularSystem& e) {
        err << "error: " << e.what() << '\n';
        return kExitSingular;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace nabla::cli

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nabla/bvp.hpp"
#include "nabla/fraccalc.hpp"
#include "nabla/greens.hpp"
#include "nabla/ivp.hpp"
#include "nabla/monomial.hpp"
#include "nabla/oracle.hpp"
#include "test_support.hpp"

using namespace nabla;
using testing::monomial_via_gamma;
using testing::random_forcing;
using testing::random_function;
using testing::random_operator;
using testing::tabulate;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[200];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

InitialConditions zero_ic(const FracOperator& op) {
    return InitialConditions{std::vector<double>(static_cast<std::size_t>(op.order()) + 1, 0.0)};
}

/// Instance family shared by the variation-of-constants and residual criteria.
struct Instance {
    FracOperator op;
    GridFunction h;
};

std::vector<Instance> random_instances(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    const double orders[] = {0.5, 1.5, 2.4};
    std::vector<Instance> out;
    for (int i = 0; i < count; ++i) {
        const double nu = orders[i % 3];
        const int n = static_cast<int>(std::ceil(nu));
        const Offset b = std::uniform_int_distribution<Offset>(n + 2, 15)(rng);
        FracOperator op = random_operator(0.0, nu, b, rng);
        GridFunction h = random_forcing(op, rng);
        out.push_back({std::move(op), std::move(h)});
    }
    return out;
}

Outcome monomials() {
    double worst = 0.0;
    bool conventions = true;
    for (double nu : {0.25, 0.5, 1.5, 2.7}) {
        for (Offset m = 1; m <= 50; ++m) {
            const double oracle = monomial_via_gamma(m, nu);
            worst = std::max(worst, std::abs(taylor_monomial(m, nu) - oracle) / std::abs(oracle));
        }
        conventions = conventions && taylor_monomial(0, nu) == 0.0 && taylor_monomial(1, nu) == 1.0;
    }
    return {worst <= 1e-12 && conventions,
            fmt("max rel err %.2e (tol 1e-12); H(a,a)=0 and H(a+1,a)=1 exact: ", worst) +
                (conventions ? "yes" : "no")};
}

GridFunction fractional_power(const GridFunction& f, double alpha) {
    return alpha < 0.0 ? frac_integral(f, 0, -alpha) : rl_difference(f, 0, alpha);
}

Outcome composition() {
    std::mt19937_64 rng(1001);
    double rule1 = 0.0;
    double rule2 = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Offset hi = std::uniform_int_distribution<Offset>(4, 14)(rng);
        const GridFunction f = random_function(Grid(0.0, 0, hi), rng);
        for (double mu : {0.3, 1.5, 2.6}) {
            for (int n = 1; n <= 3; ++n) {
                if (hi < n + 1) continue;
                rule1 = std::max(rule1, max_abs_diff(nabla_n(frac_integral(f, 0, mu), n),
                                                     fractional_power(f, n - mu)));
            }
            const GridFunction back = frac_integral(rl_difference(f, 0, mu), 0, mu);
            rule2 = std::max(rule2, max_abs_diff(back.restrict(1, hi), f.restrict(1, hi)));
        }
    }
    return {rule1 <= 1e-10 && rule2 <= 1e-10,
            fmt("whole-of-integral %.2e, integral-of-difference %.2e (tol 1e-10)", rule1, rule2)};
}

Outcome leibniz() {
    std::mt19937_64 rng(1002);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Offset top = std::uniform_int_distribution<Offset>(3, 12)(rng);
        std::vector<GridFunction> rows;
        for (Offset t = 0; t <= top; ++t) rows.push_back(random_function(Grid(0.0, 1, top), rng));
        const auto k = [&](Offset t, Offset s) { return rows[static_cast<std::size_t>(t)].at(s); };
        const GridFunction F = tabulate(0.0, 0, top, [&](Offset t) {
            return nabla_integral(rows[static_cast<std::size_t>(t)], 0, t);
        });
        for (Offset t = 1; t <= top; ++t) {
            const GridFunction dk = tabulate(0.0, 1, top, [&](Offset s) { return k(t, s) - k(t - 1, s); });
            const double dF = F.at(t) - F.at(t - 1);
            worst = std::max(worst, std::abs(dF - nabla_integral(dk, 0, t) - k(t - 1, t)));
            worst = std::max(worst, std::abs(dF - nabla_integral(dk, 0, t - 1) - k(t, t)));
        }
    }
    return {worst <= 1e-12, fmt("max deviation %.2e over both forms (tol 1e-12)", worst)};
}

Outcome cauchy_examples() {
    double unit = 0.0;
    double general = 0.0;
    std::mt19937_64 rng(1003);
    for (double nu : {0.5, 1.5, 2.4}) {
        const FracOperator op = FracOperator::with_constants(0.0, nu, 12);
        const CauchyFunction x = cauchy_function(op);
        for (Offset s = x.s_lo(); s <= x.s_hi(); ++s) {
            for (Offset t = x.column(s).lo(); t <= 12; ++t) {
                unit = std::max(unit, std::abs(x(t, s) - monomial_via_gamma(t - s + 1, nu)));
            }
        }
        const FracOperator weighted = random_operator(0.0, nu, 12, rng, false);
        const CauchyFunction y = cauchy_function(weighted);
        for (Offset s = y.s_lo(); s <= y.s_hi(); ++s) {
            for (Offset t = y.column(s).lo(); t <= 12; ++t) {
                double expected = 0.0;
                for (Offset k = s; k <= t; ++k) {
                    expected += monomial_via_gamma(t - k + 1, nu - 1.0) / weighted.p().at(k);
                }
                general = std::max(general, std::abs(y(t, s) - expected));
            }
        }
    }
    return {unit <= 1e-10 && general <= 1e-10,
            fmt("unit coefficients %.2e, random p %.2e (tol 1e-10)", unit, general)};
}

Outcome variation_of_constants_check() {
    double worst = 0.0;
    double largest = 0.0;
    for (const Instance& in : random_instances(1004, 50)) {
        const GridFunction direct = solve_ivp(in.op, in.h, zero_ic(in.op));
        worst = std::max(worst, max_abs_diff(direct, variation_of_constants(in.op, in.h)));
        largest = std::max(largest, sup_norm(direct));
    }
    return {worst <= 1e-9, fmt("max |solve_ivp - sum x(t,s)h(s)| %.2e (tol 1e-9), max |x| %.2e", worst, largest)};
}

Outcome residuals() {
    double worst = 0.0;
    std::mt19937_64 rng(1005);
    for (const Instance& in : random_instances(1004, 50)) {
        const FracOperator& op = in.op;
        const int n = op.order();
        InitialConditions ic;
        for (int i = 0; i <= n; ++i) ic.values.push_back(std::uniform_real_distribution<double>(-1, 1)(rng));
        std::vector<std::vector<double>> alpha;
        for (int i = 0; i < n; ++i) {
            std::vector<double> row(static_cast<std::size_t>(n) + 1, 0.0);
            row[static_cast<std::size_t>(i)] = 1.0;
            alpha.push_back(row);
        }
        std::vector<double> beta(static_cast<std::size_t>(n) + 1, 0.0);
        beta[0] = 1.0;
        const BoundarySpec spec(alpha, std::vector<double>(static_cast<std::size_t>(n), 0.0), beta, 0.0);
        const std::vector<GridFunction> basis = homogeneous_basis(op);
        for (const GridFunction& x : {solve_ivp(op, in.h, ic), variation_of_constants(op, in.h),
                                      solve_bvp(op, in.h, spec, basis),
                                      greens_solve(build_greens(op, spec, basis), in.h)}) {
            worst = std::max(worst, oracle::residual(op, x, in.h));
        }
        for (const GridFunction& x : basis) {
            worst = std::max(worst, oracle::residual(op, x, GridFunction::zeros(op.equation_grid())));
        }
    }
    return {worst <= 1e-8, fmt("max residual over ivp/voc/bvp/greens/basis %.2e (tol 1e-8)", worst)};
}

Outcome d_matrix() {
    const double nu = 1.5;
    double worst = 0.0;
    double smallest = INFINITY;
    for (Offset b = 4; b <= 20; ++b) {
        const FracOperator op = FracOperator::with_constants(0.0, nu, b);
        const DMatrix d = assemble_d(homogeneous_basis(op, BasisKind::Analytic), BoundarySpec::conjugate_21(), op);
        // rows (1,0,0), (0,1,1), (1,b,H): expand along the first row
        const double hb = monomial_via_gamma(b, nu);
        const double expected = hb - static_cast<double>(b);
        worst = std::max(worst, std::abs(d.determinant() - expected) / std::abs(expected));
        smallest = std::min(smallest, d.scaled_determinant());
    }
    return {worst <= 1e-12 && smallest >= kNearSingularTolerance,
            fmt("max rel err of det %.2e (tol 1e-12), min scaled det %.2e", worst, smallest)};
}

Outcome closed_form() {
    const struct { double a; Offset span; double nu; } cases[] = {{0.0, 10, 1.5}, {0.0, 20, 1.25}, {3.0, 6, 1.9}};
    double worst = 0.0;
    for (const auto& c : cases) {
        const FracOperator op = FracOperator::with_constants(c.a, c.nu, c.span);
        const GreensFunction built =
            build_greens(op, BoundarySpec::conjugate_21(), homogeneous_basis(op, BasisKind::Analytic));
        worst = std::max(worst, compare_greens(built, conjugate_greens_closed_form(c.a, c.span, c.nu)));
    }
    return {worst <= 1e-10, fmt("max |G_built - G_closed| %.2e (tol 1e-10)", worst)};
}

Outcome greens_theorem() {
    std::mt19937_64 rng(1009);
    double conditions = 0.0;
    double residual = 0.0;
    double agreement = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double nu = std::uniform_real_distribution<double>(1.05, 1.95)(rng);
        const Offset b = std::uniform_int_distribution<Offset>(5, 20)(rng);
        const double a = std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
        const FracOperator op = FracOperator::with_constants(a, nu, b);
        const std::vector<GridFunction> basis = homogeneous_basis(op, BasisKind::Analytic);
        const GridFunction h = random_forcing(op, rng);
        const GridFunction x = greens_solve(build_greens(op, BoundarySpec::conjugate_21(), basis), h);
        conditions = std::max({conditions, std::abs(x.at(0)), std::abs(x.at(1) - x.at(0)), std::abs(x.at(b))});
        residual = std::max(residual, oracle::residual(op, x, h));
        agreement = std::max(agreement, max_abs_diff(x, solve_bvp(op, h, BoundarySpec::conjugate_21(), basis)));
    }
    const bool ok = conditions <= 1e-9 && residual <= 1e-8 && agreement <= 1e-8;
    return {ok, fmt("boundary values %.2e (tol 1e-9), residual %.2e (tol 1e-8), ", conditions, residual) +
                    fmt("vs solve_bvp %.2e (tol 1e-8)", agreement)};
}

Outcome oracle_independence() {
    std::mt19937_64 rng(1010);
    const double orders[] = {0.5, 1.5, 2.4};
    double dense = 0.0;
    double rows = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double nu = orders[trial % 3];
        const int n = static_cast<int>(std::ceil(nu));
        const FracOperator op = random_operator(0.0, nu, std::uniform_int_distribution<Offset>(n + 2, 15)(rng), rng);
        InitialConditions ic;
        for (int i = 0; i <= n; ++i) ic.values.push_back(std::uniform_real_distribution<double>(-1, 1)(rng));
        const GridFunction h = random_forcing(op, rng);
        const oracle::DenseSolution sol = oracle::dense_solve(oracle::assemble(op, oracle::IvpProblem{ic}, h));
        dense = std::max(dense, max_abs_diff(sol.x, solve_ivp(op, h, ic)));
        const Matrix symbolic = oracle::equation_rows(op);
        const Matrix probed = oracle::probe_equation_rows(op);
        for (std::size_t i = 0; i < symbolic.rows(); ++i) {
            for (std::size_t j = 0; j < symbolic.cols(); ++j) {
                rows = std::max(rows, std::abs(symbolic(i, j) - probed(i, j)));
            }
        }
    }
    return {dense <= 1e-9 && rows <= 1e-10,
            fmt("dense vs solve_ivp %.2e (tol 1e-9), symbolic vs probed rows %.2e (tol 1e-10)", dense, rows)};
}

Outcome degenerate_handling() {
    bool rejected = false;
    try {
        (void)BoundarySpec({{1, 2, 0}, {-2, -4, 0}}, {0, 0}, {1, 0, 0}, 0);
    } catch (const InvalidArgument&) {
        rejected = true;
    }
    // constants satisfy every functional below, so D has a zero column
    const FracOperator op = FracOperator::with_constants(0.0, 1.5, 10);
    const BoundarySpec spec({{0, 1, 0}, {0, 0, 1}}, {0, 0}, {0, 1, 0}, 0);
    const std::vector<GridFunction> basis = homogeneous_basis(op, BasisKind::Analytic);
    const GridFunction h = GridFunction::constant(op.equation_grid(), 1.0);
    int refused = 0;
    try {
        (void)solve_bvp(op, h, spec, basis);
    } catch (const NearSingular&) {
        ++refused;
    }
    try {
        (void)build_greens(op, spec, basis);
    } catch (const NearSingular&) {
        ++refused;
    }
    return {rejected && refused == 2,
            std::string("dependent rows rejected: ") + (rejected ? "yes" : "no") +
                "; singular D refused by solve_bvp and build_greens: " + std::to_string(refused) + "/2"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"monomial correctness", monomials},
        {"composition rules", composition},
        {"leibniz rules", leibniz},
        {"cauchy function examples", cauchy_examples},
        {"variation of constants", variation_of_constants_check},
        {"operator residuals", residuals},
        {"d-matrix determinant", d_matrix},
        {"closed form vs construction", closed_form},
        {"green's function solves the bvp", greens_theorem},
        {"oracle independence", oracle_independence},
        {"degenerate handling", degenerate_handling},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!outcome.pass) ++failures;
        std::printf("%-4s criterion %2zu %-32s %s [%.3fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str(), seconds);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
